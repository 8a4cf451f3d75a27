"""Evaluation of Riemann theta functions with rational characteristics.

theta[a;b](z, tau) = sum over u in Z^g of
    exp(pi*i*( (u+a)^t tau (u+a) + 2 (u+a)^t (z+b) ))

The series is truncated to the lattice points with ||u+a||_2 <= R where
R comes from a provable tail bound: every term satisfies

    |term| <= exp(-pi*lambda_min*||u+a||^2 + 2*pi*||u+a||*||Im z||)

with lambda_min the smallest eigenvalue of Im(tau), and the number of
lattice points in the shell k <= ||u+a|| < k+1 is at most (2k+3)^g.
Summation is over concentric shells of the norm induced by Im(tau)
(largest terms first), with a fixed deterministic tie-break, and the
final accumulation is exactly-rounded (math.fsum / mpmath.fsum), so
results are bit-identical for identical inputs in a fixed precision
mode.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Sequence

import mpmath
import numpy as np

from . import numerics as nm
from .characteristics import (
    Characteristic,
    binom_exponent,
    compose,
    even_characteristics,
    expected_even_count,
    norm_product,
    pairing,
    sign_from_i_exponent,
    zero_char,
)
from .errors import NumericalError, ValidationError

DEFAULT_TOL = 1e-12
_MAX_RADIUS = 64.0


def truncation_radius(tau, im_z_norm: float, tol: float) -> float:
    """Smallest integer radius R such that the lattice tail beyond
    ||u+a|| = R is provably below tol."""
    sp = _as_siegel(tau)
    return _radius_from_lambda(float(sp.min_imag_eigen()), im_z_norm, tol, sp.g)


def _radius_from_lambda(min_eig: float, im_z_norm: float, tol: float, g: int) -> float:
    if min_eig <= 0:
        raise ValidationError("Im(tau) must be positive definite")
    if tol <= 0:
        raise ValidationError("tol must be positive")
    lam = float(min_eig)
    zeta = float(im_z_norm)

    def shell_log_bound(k: float) -> float:
        # max of -pi*lam*r^2 + 2*pi*zeta*r over [k, k+1], plus shell count
        r_star = zeta / lam
        r = min(max(r_star, k), k + 1.0)
        return g * math.log(2 * k + 3) - math.pi * lam * r * r + 2 * math.pi * zeta * r

    def tail_below(radius: float) -> bool:
        total = 0.0
        k = radius
        while True:
            lb = shell_log_bound(k)
            term = math.exp(lb) if lb < 700 else float("inf")
            total += term
            if total >= tol:
                return False
            # ratio of consecutive shell bounds; once < 1/2 the rest is
            # dominated by a geometric series
            nxt = shell_log_bound(k + 1)
            if nxt - lb < math.log(0.5):
                rest = math.exp(nxt) / (1.0 - math.exp(nxt - lb))
                return total + rest < tol
            k += 1.0
            if k > radius + 10000:
                return False

    r = 1.0
    while not tail_below(r):
        r += 1.0
        if r > _MAX_RADIUS:
            raise NumericalError(
                f"truncation radius exceeds {_MAX_RADIUS}: Im(tau) too close to "
                f"singular (min eigenvalue {lam:.3e}) or |Im z| too large ({zeta:.3e})"
            )
    return r


def _as_siegel(tau) -> nm.SiegelPoint:
    if isinstance(tau, nm.SiegelPoint):
        return tau
    return nm.SiegelPoint.validate(tau, sym_tol=1e-8)


def _char_fracs(c, g: int):
    if isinstance(c, Characteristic):
        if c.g != g:
            raise ValidationError(f"characteristic genus {c.g} does not match tau genus {g}")
        return c.as_fractions()
    a, b = c
    if len(a) != g or len(b) != g:
        raise ValidationError("characteristic vectors must have length g")
    return tuple(Fraction(x) for x in a), tuple(Fraction(x) for x in b)


def _lattice_points(a: Sequence[Fraction], radius: float):
    """Integer vectors u with ||u + a||_2 <= radius, as a list of tuples."""
    g = len(a)
    ranges = []
    for ai in a:
        lo = math.ceil(-radius - float(ai))
        hi = math.floor(radius - float(ai))
        ranges.append(range(lo, hi + 1))
    r2 = radius * radius + 1e-12
    pts = []
    for u in product(*ranges):
        s = 0.0
        for ui, ai in zip(u, a):
            d = ui + float(ai)
            s += d * d
        if s <= r2:
            pts.append(u)
    return pts


def theta_char(c, z: Sequence, tau, tol: float = DEFAULT_TOL):
    """Theta with rational characteristic c at point z, matrix tau.

    c may be a Characteristic or a pair (a, b) of rational vectors.
    The result is within tol (absolute, up to roundoff in the working
    precision) of the infinite series.
    """
    sp = _as_siegel(tau)
    g = sp.g
    a, b = _char_fracs(c, g)
    if len(z) != g:
        raise ValidationError(f"z must have length {g}")
    lam = sp.min_imag_eigen()
    if nm.is_extended():
        zc = [nm.to_complex(x) for x in z]
        imz = math.sqrt(sum(float(mpmath.im(x)) ** 2 for x in zc))
    else:
        zc = [complex(x) for x in z]
        imz = math.sqrt(sum(x.imag**2 for x in zc))
    radius = _radius_from_lambda(float(lam), imz, tol, g)
    pts = _lattice_points(a, radius)
    if nm.is_extended():
        return _sum_extended(sp, a, b, zc, pts)
    return _sum_double(sp, a, b, zc, pts)


def _sum_double(sp: nm.SiegelPoint, a, b, zc, pts) -> complex:
    g = sp.g
    tau_arr = np.array(sp.entries, dtype=complex)
    y_arr = tau_arr.imag
    U = np.array(pts, dtype=np.int64).reshape(len(pts), g)
    av = np.array([float(x) for x in a])
    V = U.astype(float) + av
    zb = np.array([zc[i] + float(b[i]) for i in range(g)], dtype=complex)
    quad = np.einsum("ni,ij,nj->n", V, tau_arr, V)
    lin = V @ zb
    terms = np.exp(1j * np.pi * (quad + 2.0 * lin))
    # shell order in the Im(tau) norm, deterministic tie-break on the
    # integer coordinates
    norm_key = np.einsum("ni,ij,nj->n", V, y_arr, V)
    lo = U.min(axis=0) if len(pts) else np.zeros(g, dtype=np.int64)
    span = (U.max(axis=0) - lo + 1) if len(pts) else np.ones(g, dtype=np.int64)
    strides = np.cumprod(np.concatenate(([1], span[:-1])))
    lex_key = (U - lo) @ strides
    order = np.lexsort((lex_key, norm_key))
    ordered = terms[order]
    return complex(math.fsum(ordered.real.tolist()), math.fsum(ordered.imag.tolist()))


def _sum_extended(sp: nm.SiegelPoint, a, b, zc, pts):
    g = sp.g
    tau = sp.entries
    y = [[float(mpmath.im(tau[i][j])) for j in range(g)] for i in range(g)]
    zb = [zc[i] + nm.to_real(b[i]) for i in range(g)]

    def norm_key(u):
        v = [u[i] + float(a[i]) for i in range(g)]
        return sum(v[i] * y[i][j] * v[j] for i in range(g) for j in range(g))

    ordered = sorted(pts, key=lambda u: (norm_key(u), u))
    terms = []
    for u in ordered:
        v = [nm.to_real(Fraction(u[i]) + a[i]) for i in range(g)]
        quad = mpmath.fsum(v[i] * tau[i][j] * v[j] for i in range(g) for j in range(g))
        lin = mpmath.fsum(v[i] * zb[i] for i in range(g))
        terms.append(mpmath.expjpi(quad + 2 * lin))
    return mpmath.fsum(terms)


def theta(z: Sequence, tau, tol: float = DEFAULT_TOL):
    """Riemann theta (zero characteristic)."""
    g = len(tau.entries) if isinstance(tau, nm.SiegelPoint) else len(tau)
    return theta_char(zero_char(g), z, tau, tol)


def thetanull(c, tau, tol: float = DEFAULT_TOL):
    """Theta constant: theta[c](0, tau)."""
    sp = _as_siegel(tau)
    zeros = (0,) * sp.g
    return theta_char(c, zeros, sp, tol)


def theta_unreduced(top: Sequence[int], bottom: Sequence[int], level: int,
                    z: Sequence, tau, tol: float = DEFAULT_TOL):
    """Theta whose characteristic numerators may lie outside [0, level).

    Integer shifts of the top row leave the series unchanged; integer
    shifts m of the bottom row contribute the exact phase
    exp(2*pi*i* a^t m).  Needed wherever characteristic sums must be
    taken literally rather than mod 1.
    """
    top = [int(x) for x in top]
    bottom = [int(x) for x in bottom]
    red = Characteristic(
        level=level,
        top=tuple(x % level for x in top),
        bottom=tuple(x % level for x in bottom),
    )
    a_red, _ = red.as_fractions()
    m = [Fraction(x - (x % level), level) for x in bottom]  # integer parts
    q = sum(ai * mi for ai, mi in zip(a_red, m))  # phase exponent, in turns
    q -= math.floor(q)
    if q == 0:
        phase = 1
    elif 4 % q.denominator == 0:
        phase = sign_from_i_exponent(int(q * 4))
    else:
        phase = nm.cexp(2 * nm.pi_val() * nm.imag_unit() * nm.to_real(q))
    return phase * theta_char(red, z, tau, tol)


# ---------------------------------------------------------------------------
# squared/fourth-power theta constant identities


def prop4_candidates(a: Characteristic, h: Characteristic):
    """Even characteristics e with e*h also even, for nonzero h."""
    if h.is_zero():
        raise ValidationError("h must be a nonzero half-integer characteristic")
    if a.g != h.g:
        raise ValidationError("characteristics must share a genus")
    g = a.g
    cands = [e for e in even_characteristics(g) if norm_product(compose(e, h)) % 2 == 0]
    expected = 2 * 2 ** (g - 2) * (2 ** (g - 1) + 1)
    if len(cands) != expected:
        raise NumericalError(
            f"candidate enumeration produced {len(cands)} characteristics, expected {expected}"
        )
    return cands


def prop4_residuals(tau, a: Characteristic, h: Characteristic, tol: float = DEFAULT_TOL):
    """Relative residuals of the two squared/fourth-power theta constant
    identities attached to the pair (a, h).  Returns (res_squares,
    res_fourths)."""
    sp = _as_siegel(tau)
    g = sp.g
    cands = prop4_candidates(a, h)
    ah = compose(a, h)
    nulls = {}

    def nu(c: Characteristic):
        if c not in nulls:
            nulls[c] = thetanull(c, sp, tol)
        return nulls[c]

    scale_terms = []
    rhs1_terms = []
    rhs2_terms = []
    sign_ah = -1 if pairing(a, h) % 2 else 1
    for e in cands:
        eh = compose(e, h)
        ae = compose(a, e)
        s1 = (-1) ** (norm_product(ae) % 2)
        s2 = sign_from_i_exponent(binom_exponent(h, ae))
        t_e, t_eh = nu(e), nu(eh)
        rhs1_terms.append(s1 * s2 * t_e**2 * t_eh**2)
        rhs2_terms.append(s1 * (t_e**4 + sign_ah * t_eh**4))
        scale_terms.append(abs(t_e**2 * t_eh**2))
    # the candidate set is closed under e -> e*h, and both sides of each
    # identity pick up every unordered pair {e, e*h} twice, so the full
    # enumeration carries normalizer 2^g (pair representatives would
    # carry 2^(g-1))
    denom = 2**g
    rhs1 = nm.fsum_complex([t / denom for t in rhs1_terms])
    rhs2 = nm.fsum_complex([t / denom for t in rhs2_terms])
    lhs1 = nu(a) ** 2 * nu(ah) ** 2
    lhs2 = nu(a) ** 4 + sign_ah * nu(ah) ** 4
    scale = max(max(scale_terms), abs(lhs1), abs(lhs2), 1e-300)
    res1 = float(abs(lhs1 - rhs1) / scale)
    res2 = float(abs(lhs2 - rhs2) / scale)
    return res1, res2
