"""Genus-2 thetanull dictionary.

The sixteen-characteristic table, the six fundamental thetanull identities,
branch-point recovery from thetanull ratios, the cross-ratio relation table,
and automorphism-locus classification through invariants of binary sextics.
"""

import cmath
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import ClassVar

from .characteristics import is_even, is_odd, char
from .errors import NumericalError, ValidationError
from .theta_eval import thetanull

_TINY = 1e-300


def _rel(lhs, rhs) -> float:
    lhs, rhs = complex(lhs), complex(rhs)
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# the characteristic table

# numerators over level 2, [top; bottom]; entries 1..10 even, 11..16 odd
_CHAR_NUMERATORS = (
    ((0, 0), (0, 0)),
    ((0, 0), (1, 1)),
    ((0, 0), (1, 0)),
    ((0, 0), (0, 1)),
    ((1, 0), (0, 0)),
    ((1, 0), (0, 1)),
    ((0, 1), (0, 0)),
    ((1, 1), (0, 0)),
    ((0, 1), (1, 0)),
    ((1, 1), (1, 1)),
    ((0, 1), (0, 1)),
    ((0, 1), (1, 1)),
    ((1, 0), (1, 0)),
    ((1, 1), (1, 0)),
    ((1, 0), (1, 1)),
    ((1, 1), (0, 1)),
)


def genus2_char_table():
    """The sixteen genus-2 half characteristics in the fixed working order.

    Entries 1..10 are even, 11..16 odd; theta_i below always refers to the
    thetanull of entry i.  Parity is re-verified on every call.
    """
    table = tuple(char(t, b) for t, b in _CHAR_NUMERATORS)
    for k, c in enumerate(table):
        ok = is_even(c) if k < 10 else is_odd(c)
        if not ok:
            raise NumericalError(f"characteristic table parity broken at entry {k + 1}")
    return table


# ---------------------------------------------------------------------------
# thetanull container


@dataclass(frozen=True)
class Genus2Thetas:
    """The ten even thetanull values, in table order.

    Construction does not enforce nonvanishing, so perturbed or synthetic
    values can be probed; on honest Jacobian points the entries with index
    in {1, 3, 5, 6, 7, 8, 9} are nonzero.
    """

    values: tuple

    def __post_init__(self):
        if len(self.values) != 10:
            raise ValidationError("need exactly 10 even thetanull values")
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))

    def __getitem__(self, i: int) -> complex:
        if not 1 <= int(i) <= 10:
            raise ValidationError("thetanull index must be in 1..10")
        return self.values[int(i) - 1]

    @classmethod
    def from_tau(cls, tau, tol: float = 1e-12) -> "Genus2Thetas":
        table = genus2_char_table()
        return cls(tuple(thetanull(table[i], tau, tol) for i in range(10)))

    @property
    def alpha(self) -> complex:
        """alpha = theta8^2 / theta10^2, the curve-model parameter."""
        scale = max(abs(v) for v in self.values)
        if abs(self[10]) <= 1e-12 * max(scale, _TINY):
            raise ValidationError("theta10 vanishes, alpha undefined")
        return self[8] ** 2 / self[10] ** 2


# ---------------------------------------------------------------------------
# fundamental identities


def fundamental_identity_residuals(t: Genus2Thetas):
    """Relative residuals of the six identities expressing the squares and
    fourth powers of theta5, theta6 / theta7, theta9 / theta8, theta10
    through the fundamental quadruple theta1..theta4."""
    t1, t2, t3, t4 = t[1], t[2], t[3], t[4]
    pairs = (
        (t[5] ** 2 * t[6] ** 2, t1 ** 2 * t4 ** 2 - t2 ** 2 * t3 ** 2),
        (t[5] ** 4 + t[6] ** 4, t1 ** 4 - t2 ** 4 - t3 ** 4 + t4 ** 4),
        (t[7] ** 2 * t[9] ** 2, t1 ** 2 * t3 ** 2 - t2 ** 2 * t4 ** 2),
        (t[7] ** 4 + t[9] ** 4, t1 ** 4 - t2 ** 4 + t3 ** 4 - t4 ** 4),
        (t[8] ** 2 * t[10] ** 2, t1 ** 2 * t2 ** 2 - t3 ** 2 * t4 ** 2),
        (t[8] ** 4 + t[10] ** 4, t1 ** 4 + t2 ** 4 - t3 ** 4 - t4 ** 4),
    )
    return tuple(_rel(a, b) for a, b in pairs)


def picard_branch_points(t: Genus2Thetas):
    """Branch points (lambda, mu, nu) of y^2 = x (x-1) (x-lambda) (x-mu)
    (x-nu) recovered from thetanull ratios.  Any consistent sign choice of
    the square roots gives an isomorphic curve; this one is the convention
    the rest of the module assumes."""
    scale = max(abs(v) for v in t.values)
    for i in (2, 4, 10):
        if abs(t[i]) <= 1e-10 * max(scale, _TINY):
            raise ValidationError(f"theta{i} vanishes, branch recovery undefined")
    lam = (t[1] * t[3] / (t[2] * t[4])) ** 2
    mu = (t[3] * t[8] / (t[4] * t[10])) ** 2
    nu = (t[1] * t[8] / (t[2] * t[10])) ** 2
    return lam, mu, nu


def alpha_quadratic(t1, t2, t3, t4):
    """Monic quadratic a^2 + c a + 1 = 0 satisfied by a = theta8^2/theta10^2,
    with c = -(theta1^4 + theta2^4 - theta3^4 - theta4^4) /
    (theta1^2 theta2^2 - theta3^2 theta4^2).  The two quotient identities
    theta8^2 theta10^2 = theta1^2 theta2^2 - theta3^2 theta4^2 and
    theta8^4 + theta10^4 = theta1^4 + theta2^4 - theta3^4 - theta4^4 give
    c = -(a + 1/a), which pins the sign of the linear term.  Returns
    (c, (root1, root2)); the roots multiply to 1, and a root at +-1
    signals an extra involution."""
    t1, t2, t3, t4 = complex(t1), complex(t2), complex(t3), complex(t4)
    num = t1 ** 4 + t2 ** 4 - t3 ** 4 - t4 ** 4
    den = t1 ** 2 * t2 ** 2 - t3 ** 2 * t4 ** 2
    scale = max(abs(t1), abs(t2), abs(t3), abs(t4)) ** 4
    if abs(den) <= 1e-12 * max(scale, _TINY):
        raise ValidationError("theta1^2 theta2^2 - theta3^2 theta4^2 vanishes")
    c = -num / den
    disc = cmath.sqrt(c * c - 4.0)
    return c, ((-c + disc) / 2.0, (-c - disc) / 2.0)


# ---------------------------------------------------------------------------
# the fifteen cross-ratio relations

# Each row pairs a polynomial factor in the branch triple (a1, a2, a3) with a
# thetanull expression; the two columns vanish together.  A factor is stored
# as signed monomials (coeff, (e1, e2, e3)) with exponents of a1, a2, a3; a
# thetanull expression as (coeff, ((index, exponent), ...)).  Every theta
# expression is the numerator of its factor after substituting the three
# quotient formulas for (a3, a2, a1) = (lam, mu, nu) and dropping common
# nonvanishing theta factors.
_FACTOR_TERMS = (
    ((1, (1, 1, 0)), (1, (1, 0, 0)), (-1, (1, 0, 1)), (-1, (0, 1, 0))),
    ((1, (1, 1, 0)), (-1, (1, 0, 0)), (1, (1, 0, 1)), (-1, (0, 1, 1))),
    ((1, (1, 1, 0)), (-1, (1, 0, 0)), (-1, (1, 0, 1)), (1, (0, 0, 1))),
    ((1, (1, 1, 0)), (-1, (0, 1, 0)), (-1, (0, 1, 1)), (1, (0, 0, 1))),
    ((1, (1, 1, 0)), (-1, (1, 0, 0)), (1, (0, 1, 0)), (-1, (0, 1, 1))),
    ((1, (1, 1, 0)), (-1, (1, 0, 1)), (-1, (0, 1, 0)), (1, (0, 1, 1))),
    ((1, (1, 1, 0)), (-1, (1, 0, 1)), (-1, (0, 1, 1)), (1, (0, 0, 1))),
    ((1, (1, 0, 1)), (-1, (1, 0, 0)), (-1, (0, 1, 1)), (1, (0, 0, 1))),
    ((1, (1, 0, 1)), (1, (0, 1, 0)), (-1, (0, 0, 1)), (-1, (0, 1, 1))),
    ((-1, (1, 0, 0)), (1, (1, 0, 1)), (1, (0, 1, 0)), (-1, (0, 0, 1))),
    ((1, (1, 1, 0)), (-1, (1, 0, 0)), (-1, (0, 1, 0)), (1, (0, 0, 1))),
    ((1, (1, 0, 0)), (-1, (0, 1, 0)), (1, (0, 1, 1)), (-1, (0, 0, 1))),
    ((1, (1, 1, 0)), (-1, (0, 0, 1))),
    ((1, (1, 0, 0)), (-1, (0, 1, 1))),
    ((1, (1, 0, 1)), (-1, (0, 1, 0))),
)

_THETA_TERMS = (
    ((-1, ((1, 2), (3, 2), (8, 2), (2, 2))), (-1, ((1, 2), (2, 2), (4, 2), (10, 2))),
     (1, ((1, 4), (3, 2), (10, 2))), (1, ((3, 2), (2, 4), (10, 2)))),
    ((1, ((3, 2), (8, 2), (2, 2), (4, 2))), (-1, ((2, 2), (4, 4), (10, 2))),
     (1, ((1, 2), (3, 2), (4, 2), (10, 2))), (-1, ((3, 4), (2, 2), (10, 2)))),
    ((-1, ((8, 4), (3, 2), (2, 2))), (1, ((8, 2), (2, 2), (10, 2), (4, 2))),
     (1, ((1, 2), (3, 2), (8, 2), (10, 2))), (-1, ((3, 2), (2, 2), (10, 4)))),
    ((-1, ((1, 2), (8, 4), (4, 2))), (-1, ((1, 2), (10, 4), (4, 2))),
     (1, ((8, 2), (2, 2), (10, 2), (4, 2))), (1, ((1, 2), (3, 2), (8, 2), (10, 2)))),
    ((-1, ((1, 2), (8, 2), (3, 2), (4, 2))), (1, ((1, 2), (10, 2), (4, 4))),
     (1, ((1, 2), (3, 4), (10, 2))), (-1, ((3, 2), (2, 2), (10, 2), (4, 2)))),
    ((-1, ((1, 2), (8, 2), (2, 2), (4, 2))), (1, ((1, 4), (10, 2), (4, 2))),
     (-1, ((1, 2), (3, 2), (2, 2), (10, 2))), (1, ((2, 4), (4, 2), (10, 2)))),
    ((-1, ((8, 4), (2, 2), (4, 2))), (1, ((1, 2), (8, 2), (10, 2), (4, 2))),
     (-1, ((2, 2), (10, 4), (4, 2))), (1, ((3, 2), (8, 2), (2, 2), (10, 2)))),
    ((1, ((1, 2), (3, 2), (4, 2), (8, 2))), (-1, ((2, 2), (4, 4), (8, 2))),
     (-1, ((2, 2), (3, 4), (8, 2))), (1, ((2, 2), (3, 2), (4, 2), (10, 2)))),
    ((1, ((1, 4), (8, 2), (4, 2))), (-1, ((1, 2), (2, 2), (4, 2), (10, 2))),
     (-1, ((1, 2), (3, 2), (8, 2), (2, 2))), (1, ((8, 2), (2, 4), (4, 2)))),
    ((1, ((1, 4), (3, 2), (8, 2))), (-1, ((1, 2), (8, 2), (2, 2), (4, 2))),
     (-1, ((1, 2), (3, 2), (2, 2), (10, 2))), (1, ((3, 2), (8, 2), (2, 4)))),
    ((1, ((1, 2), (8, 4), (3, 2))), (-1, ((1, 2), (8, 2), (10, 2), (4, 2))),
     (1, ((1, 2), (3, 2), (10, 4))), (-1, ((3, 2), (8, 2), (2, 2), (10, 2)))),
    ((1, ((1, 2), (8, 2), (4, 4))), (-1, ((1, 2), (3, 2), (4, 2), (10, 2))),
     (1, ((1, 2), (3, 4), (8, 2))), (-1, ((3, 2), (8, 2), (2, 2), (4, 2)))),
    ((1, ((8, 4),)), (-1, ((10, 4),))),
    ((1, ((3, 4),)), (-1, ((4, 4),))),
    ((1, ((1, 4),)), (-1, ((2, 4),))),
)


def _eval_factor(terms, a1, a2, a3):
    monomials = [c * a1 ** e1 * a2 ** e2 * a3 ** e3 for c, (e1, e2, e3) in terms]
    return sum(monomials), max(abs(m) for m in monomials)


def _eval_theta_terms(terms, t):
    monomials = []
    for c, powers in terms:
        m = complex(c)
        for idx, e in powers:
            m *= t[idx] ** e
        monomials.append(m)
    return sum(monomials), max(abs(m) for m in monomials)


def table1_rows(a1, a2, a3, t: Genus2Thetas):
    """Evaluates all fifteen cross-ratio relations for the curve
    y^2 = x (x-1) (x-a1) (x-a2) (x-a3).  Returns 15 pairs
    (factorValue, thetaExprValue), each normalized by the magnitude of its
    largest monomial so rows are comparable; the two entries of a pair
    vanish together on the matching locus.

    The table's branch labels relate to the ratio-recovery labels by
    (a1, a2, a3) = (nu, mu, lam): the thetanulls of the curve built from
    (lam, mu, nu) pair with table1_rows(nu, mu, lam, t).  The degenerate
    rows make the map visible, e.g. row 13 (a1 a2 = a3) is
    theta8^4 = theta10^4, i.e. alpha^2 = mu nu / lam = 1."""
    rows = []
    for ft, tt in zip(_FACTOR_TERMS, _THETA_TERMS):
        fv, fscale = _eval_factor(ft, a1, a2, a3)
        tv, tscale = _eval_theta_terms(tt, t)
        rows.append((complex(fv) / max(fscale, _TINY), tv / max(tscale, _TINY)))
    return rows


def v4_theta_test(t: Genus2Thetas, tol: float = 1e-8) -> bool:
    """Whether the product of the fifteen thetanull expressions of the
    cross-ratio table vanishes to tol, which characterizes curves with an
    extra involution.  Each factor is normalized by its largest monomial
    and the product is judged through its smallest factor (a product of
    order-one factors vanishes exactly when one of them does; measured
    on-locus minima sit below 1e-13 and generic minima above 1e-2)."""
    rows = [_eval_theta_terms(tt, t) for tt in _THETA_TERMS]
    return min(abs(v) / max(s, _TINY) for v, s in rows) < tol


# The same locus written in the fundamental quadruple alone, after the
# model-parameter factors are cancelled: fourteen factors in theta1..theta4.
_FUND_TERMS = (
    ((1, ((3, 4),)), (-1, ((4, 4),))),
    ((1, ((1, 4),)), (-1, ((3, 4),))),
    ((1, ((2, 4),)), (-1, ((4, 4),))),
    ((1, ((1, 4),)), (-1, ((4, 4),))),
    ((1, ((3, 4),)), (-1, ((2, 4),))),
    ((1, ((1, 4),)), (-1, ((2, 4),))),
    ((-1, ((4, 2),)), (1, ((3, 2),)), (1, ((1, 2),)), (-1, ((2, 2),))),
    ((1, ((4, 2),)), (-1, ((3, 2),)), (1, ((1, 2),)), (-1, ((2, 2),))),
    ((-1, ((4, 2),)), (-1, ((3, 2),)), (1, ((2, 2),)), (1, ((1, 2),))),
    ((1, ((4, 2),)), (1, ((3, 2),)), (1, ((2, 2),)), (1, ((1, 2),))),
    ((1, ((1, 4), (2, 4))), (1, ((3, 4), (2, 4))), (1, ((1, 4), (3, 4))),
     (-2, ((1, 2), (2, 2), (3, 2), (4, 2)))),
    ((-1, ((3, 4), (2, 4))), (-1, ((2, 4), (4, 4))), (-1, ((3, 4), (4, 4))),
     (2, ((1, 2), (2, 2), (3, 2), (4, 2)))),
    ((1, ((2, 4), (4, 4))), (1, ((1, 4), (2, 4))), (1, ((1, 4), (4, 4))),
     (-2, ((1, 2), (2, 2), (3, 2), (4, 2)))),
    ((1, ((1, 4), (4, 4))), (1, ((3, 4), (4, 4))), (1, ((1, 4), (3, 4))),
     (-2, ((1, 2), (2, 2), (3, 2), (4, 2)))),
)


class _FundamentalQuadruple:
    """1-based view over four thetanull values, for the term evaluator."""

    def __init__(self, t1, t2, t3, t4):
        self._v = (complex(t1), complex(t2), complex(t3), complex(t4))

    def __getitem__(self, i):
        return self._v[i - 1]


def v4_fundamental_test(t1, t2, t3, t4, tol: float = 1e-8) -> bool:
    """The extra-involution test written in theta1..theta4 only: whether the
    fourteen-factor product vanishes to tol, judged through its smallest
    max-monomial-normalized factor."""
    quad = _FundamentalQuadruple(t1, t2, t3, t4)
    rows = [_eval_theta_terms(tt, quad) for tt in _FUND_TERMS]
    return min(abs(v) / max(s, _TINY) for v, s in rows) < tol


# ---------------------------------------------------------------------------
# invariants of binary sextics

# Binary forms are coefficient lists [c0..cm], f = sum c_i x^(m-i) z^i,
# entries all Fraction (exact path) or all complex.


def _form_multiply(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def _dx(f):
    m = len(f) - 1
    if m == 0:
        return [0 * f[0]]
    return [f[i] * (m - i) for i in range(m)]


def _dz(f):
    m = len(f) - 1
    if m == 0:
        return [0 * f[0]]
    return [f[i + 1] * (i + 1) for i in range(m)]


def _diff_xz(f, kx, kz):
    for _ in range(kx):
        f = _dx(f)
    for _ in range(kz):
        f = _dz(f)
    return f


def _transvectant(f, g, k):
    m, n = len(f) - 1, len(g) - 1
    if k > m or k > n:
        raise ValidationError("transvectant order exceeds form degree")
    scale = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    total = [0] * (m + n - 2 * k + 1)
    for j in range(k + 1):
        term = _form_multiply(_diff_xz(f, k - j, j), _diff_xz(g, j, k - j))
        sgn = (-1) ** j * comb(k, j)
        total = [acc + sgn * c for acc, c in zip(total, term)]
    return [scale * c for c in total]


def _clebsch_scalars(f):
    i4 = _transvectant(f, f, 4)
    A = _transvectant(f, f, 6)[0]
    B = _transvectant(i4, i4, 4)[0]
    delta = _transvectant(i4, i4, 2)
    C = _transvectant(i4, delta, 4)[0]
    y1 = _transvectant(f, i4, 4)
    y2 = _transvectant(i4, y1, 2)
    y3 = _transvectant(i4, y2, 2)
    D = _transvectant(y3, y1, 2)[0]
    return A, B, C, D


@dataclass(frozen=True)
class IgusaInvariants:
    """Invariants (J2, J4, J6, J10) of a binary sextic, of weights
    (2, 4, 6, 10).  J10 is proportional to the discriminant and is nonzero
    exactly for squarefree sextics.  Entries are exact Fractions when the
    input coefficients were rational, complex otherwise."""

    J2: object
    J4: object
    J6: object
    J10: object

    WEIGHTS: ClassVar[tuple] = (2, 4, 6, 10)

    @property
    def is_exact(self) -> bool:
        return all(_is_rational(v) for v in (self.J2, self.J4, self.J6, self.J10))


def igusa_invariants(coeffs) -> IgusaInvariants:
    """Invariants of the binary sextic with the given coefficients, highest
    degree first.  Six coefficients are read as a degree-5 polynomial, a
    sextic with one root at infinity.  Rational input stays exact; the
    normalization is the root-difference one: for a monic sextic J10 is the
    product of all squared root differences (see _igusa_from_roots)."""
    cs = list(coeffs)
    if len(cs) == 6:
        cs = [0] + cs
    if len(cs) != 7:
        raise ValidationError("need 6 or 7 coefficients, highest degree first")
    exact = all(_is_rational(c) for c in cs)
    f = [Fraction(c) for c in cs] if exact else [complex(c) for c in cs]
    if f[0] == 0 and f[1] == 0:
        raise ValidationError("degree must be 5 or 6")
    A, B, C, D = _clebsch_scalars(f)
    J2 = -120 * A
    J4 = -720 * A ** 2 + 6750 * B
    J6 = 8640 * A ** 3 - 108000 * A * B + 202500 * C
    j10_terms = (-62208 * A ** 5, 972000 * A ** 3 * B, 1620000 * A ** 2 * C,
                 -3037500 * A * B ** 2, -6075000 * B * C, -4556250 * D)
    J10 = sum(j10_terms)
    if exact:
        if J10 == 0:
            raise ValidationError("sextic is not squarefree (J10 = 0)")
    else:
        # J10 is a 6-term alternating sum; when it cancels down to the
        # noise floor of its own largest term the sextic has a repeated
        # root to working precision
        gauge = max(abs(v) for v in j10_terms)
        if abs(J10) <= 1e-10 * max(gauge, _TINY):
            raise ValidationError("sextic is numerically non-squarefree (J10 ~ 0)")
    return IgusaInvariants(J2, J4, J6, J10)


def _matchings(idx):
    # perfect matchings of an even index list
    idx = list(idx)
    if not idx:
        yield []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1:]
        for m in _matchings(rest):
            yield [(a, idx[k])] + m


def _igusa_from_roots(roots, lead=1) -> IgusaInvariants:
    """The same invariants built from symmetrized root-difference products
    over the six projective roots (five finite roots mean one root at
    infinity).  This is an independent route kept for cross-checking the
    transvectant one; the two must agree exactly on rational data."""
    rs = list(roots)
    if len(rs) == 5:
        exact = all(_is_rational(r) for r in rs) and _is_rational(lead)
        pts = ([(Fraction(r), Fraction(1)) for r in rs] + [(Fraction(1), Fraction(0))]
               if exact else [(complex(r), 1.0 + 0j) for r in rs] + [(1.0 + 0j, 0.0j)])
    elif len(rs) == 6:
        exact = all(_is_rational(r) for r in rs) and _is_rational(lead)
        pts = ([(Fraction(r), Fraction(1)) for r in rs] if exact
               else [(complex(r), 1.0 + 0j) for r in rs])
    else:
        raise ValidationError("need 5 or 6 roots")
    lead = Fraction(lead) if exact else complex(lead)
    d = {}
    for i in range(6):
        for j in range(6):
            if i != j:
                d[(i, j)] = pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1]

    I2 = sum((d[m[0]] * d[m[1]] * d[m[2]]) ** 2 for m in _matchings(range(6)))
    I2 = I2 * lead ** 2

    partitions = []
    seen = set()
    for T in combinations(range(6), 3):
        Tc = tuple(sorted(set(range(6)) - set(T)))
        key = tuple(sorted((T, Tc)))
        if key not in seen:
            seen.add(key)
            partitions.append((T, Tc))

    def _tri(T):
        return d[(T[0], T[1])] * d[(T[1], T[2])] * d[(T[2], T[0])]

    I4 = sum((_tri(T) * _tri(Tc)) ** 2 for T, Tc in partitions) * lead ** 4

    I6 = 0
    for T, Tc in partitions:
        for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            cross = (d[(T[0], Tc[perm[0]])] * d[(T[1], Tc[perm[1]])]
                     * d[(T[2], Tc[perm[2]])])
            I6 = I6 + (_tri(T) * _tri(Tc) * cross) ** 2
    I6 = I6 * lead ** 6

    I10 = lead ** 10
    for i in range(6):
        for j in range(i + 1, 6):
            I10 = I10 * d[(i, j)] ** 2
    return IgusaInvariants(I2, I4, I6, I10)


# ---------------------------------------------------------------------------
# automorphism loci in invariant space

# Locus polynomials as {(i, j, k, l): coeff} for J2^i J4^j J6^k J10^l.
# _L2_TERMS cuts out the curves with a degree-2 elliptic subcover (extra
# involution); it is irreducible of weighted degree 30 and splits into the
# fifteen cross-ratio factors when written in branch-point coordinates.
_L2_TERMS = {
    (7, 4, 0, 0): -1, (5, 5, 0, 0): -78, (3, 6, 0, 0): 159, (1, 7, 0, 0): -80,
    (6, 3, 1, 0): 12, (4, 4, 1, 0): 1332, (2, 5, 1, 0): -1728, (0, 6, 1, 0): 384,
    (5, 2, 2, 0): -54, (3, 3, 2, 0): -8910, (1, 4, 2, 0): 6048,
    (4, 1, 3, 0): 108, (2, 2, 3, 0): 29376, (0, 3, 3, 0): -6912,
    (3, 0, 4, 0): -81, (1, 1, 4, 0): -47952, (0, 0, 5, 0): 31104,
    (6, 2, 0, 1): 972, (4, 3, 0, 1): 77436, (2, 4, 0, 1): -592272,
    (0, 5, 0, 1): 41472, (5, 1, 1, 1): -5832, (3, 2, 1, 1): -870912,
    (1, 3, 1, 1): 4743360, (4, 0, 2, 1): 8748, (2, 1, 2, 1): 3090960,
    (0, 2, 2, 1): -9331200, (1, 0, 3, 1): -3499200,
    (5, 0, 0, 2): -236196, (3, 1, 0, 2): -19245600, (1, 2, 0, 2): 507384000,
    (2, 0, 1, 2): 104976000, (0, 1, 1, 2): -2099520000,
    (0, 0, 0, 3): -125971200000,
}

_D8_TERMS = {
    (2, 2, 0, 0): 1706, (0, 3, 0, 0): 2560, (4, 1, 0, 0): 27,
    (3, 0, 1, 0): -81, (1, 1, 1, 0): -14880, (0, 0, 2, 0): 28800,
}

_D12_TERMS_A = {
    (4, 1, 0, 0): -1, (3, 0, 1, 0): 12, (2, 2, 0, 0): -52,
    (0, 3, 0, 0): 80, (1, 1, 1, 0): 960, (0, 0, 2, 0): -3600,
}

_D12_TERMS_B = {
    (5, 0, 0, 1): 864, (1, 2, 0, 1): 3456000, (3, 1, 0, 1): -43200,
    (0, 0, 0, 2): -2332800000, (6, 2, 0, 0): -1, (2, 4, 0, 0): -768,
    (4, 3, 0, 0): 48, (0, 5, 0, 0): 4096,
}


def _eval_locus(terms, J2, J4, J6, J10, normalized: bool):
    vals = [c * J2 ** i * J4 ** j * J6 ** k * J10 ** l
            for (i, j, k, l), c in sorted(terms.items())]
    total = sum(vals)
    if not normalized:
        return total
    scale = max(abs(complex(v)) for v in vals)
    return complex(total) / max(scale, _TINY)


def locus_tests(J: IgusaInvariants) -> dict:
    """Evaluates the three automorphism-locus polynomial systems at the
    given invariants.  Exact rational invariants give exact polynomial
    values (zero means on the locus); complex invariants give residuals
    normalized by the largest monomial of each polynomial."""
    if J.is_exact:
        if J.J10 == 0:
            raise ValidationError("J10 = 0: singular sextic")
        args = (J.J2, J.J4, J.J6, J.J10, False)
    else:
        if abs(complex(J.J10)) == 0.0:
            raise ValidationError("J10 = 0: singular sextic")
        args = (complex(J.J2), complex(J.J4), complex(J.J6), complex(J.J10), True)
    return {
        "L2residual": _eval_locus(_L2_TERMS, *args),
        "D8residual": _eval_locus(_D8_TERMS, *args),
        "D12residuals": (_eval_locus(_D12_TERMS_A, *args),
                         _eval_locus(_D12_TERMS_B, *args)),
    }


class AutLabel(Enum):
    Z2 = "Z2"
    V4 = "V4"
    D8 = "D8"
    D12 = "D12"
    SPECIAL_POINT = "SPECIAL_POINT"


def _poly_from_roots(roots, exact: bool):
    coeffs = [Fraction(1)] if exact else [1.0 + 0j]
    for r in roots:
        r = Fraction(r) if exact else complex(r)
        nxt = [coeffs[0]]
        for i in range(1, len(coeffs)):
            nxt.append(coeffs[i] - r * coeffs[i - 1])
        nxt.append(-r * coeffs[-1])
        coeffs = nxt
    return coeffs


_D8_REPRESENTATIVE = (1, 0, 0, 0, -1, 0)  # x^5 - x
_D8_POINT_CACHE = []


def _d8_point_invariants() -> IgusaInvariants:
    if not _D8_POINT_CACHE:
        _D8_POINT_CACHE.append(igusa_invariants(_D8_REPRESENTATIVE))
    return _D8_POINT_CACHE[0]


def _weighted_match(J: IgusaInvariants, K: IgusaInvariants, exact: bool) -> bool:
    # weighted-projective equality: J_w = c^w K_w for some nonzero scalar c
    checks = (
        (J.J2 ** 5 * K.J10, K.J2 ** 5 * J.J10),
        (J.J4 ** 5 * K.J10 ** 2, K.J4 ** 5 * J.J10 ** 2),
        (J.J6 ** 5 * K.J10 ** 3, K.J6 ** 5 * J.J10 ** 3),
    )
    if exact:
        return all(a == b for a, b in checks)
    return all(abs(complex(a) - complex(b))
               <= 1e-8 * max(abs(complex(a)), abs(complex(b)), _TINY)
               for a, b in checks)


# Float locus thresholds.  With max-monomial normalization, on-locus
# residuals sit at the 1e-16 roundoff floor while measured off-locus curves
# stay above 4e-9 (the locus polynomials cancel heavily at generic points,
# so looser thresholds would misread generic curves as on-locus).
_ON_LOCUS = 1e-12
_OFF_LOCUS = 1e-10


def _locus_state(residual, name: str) -> bool:
    m = abs(complex(residual))
    if m < _ON_LOCUS:
        return True
    if m > _OFF_LOCUS:
        return False
    raise NumericalError(
        f"indeterminate {name} residual {m:.3e}: between the on-locus and "
        "off-locus thresholds; supply exact rational input to decide")


def classify_aut(c) -> AutLabel:
    """Automorphism-group label of a genus-2 curve.

    The input is either the branch triple (a1, a2, a3) of
    y^2 = x (x-1) (x-a1) (x-a2) (x-a3) or a list of 6/7 sextic coefficients,
    highest degree first.  Rational input is decided in exact arithmetic,
    which is the only way to certify locus membership; complex input falls
    back to residual thresholds (on-locus below 1e-12, off-locus above
    1e-10, anything between raises).  The curve with extra automorphisms
    of order 8 acting through both refinement loci (the x^5 - x point) is
    recognized by its invariants and labeled D8; all other points where
    both refinements vanish are zero-dimensional special points.
    """
    try:
        entries = list(c)
    except TypeError as exc:
        raise ValidationError("input must be a branch triple or coefficients") from exc
    exact = all(_is_rational(x) for x in entries)
    if len(entries) == 3:
        a1, a2, a3 = entries
        distinct = {Fraction(x) if exact else complex(x) for x in entries}
        base = {Fraction(0), Fraction(1)} if exact else {0j, 1 + 0j}
        if len(distinct) < 3 or distinct & base:
            raise ValidationError("branch points 0, 1, a1, a2, a3 must be distinct")
        coeffs = _poly_from_roots([0, 1, a1, a2, a3], exact)
    elif len(entries) in (6, 7):
        coeffs = entries
    else:
        raise ValidationError("need a branch triple or 6/7 coefficients")

    J = igusa_invariants(coeffs)
    if _weighted_match(J, _d8_point_invariants(), J.is_exact):
        return AutLabel.D8
    lt = locus_tests(J)
    if J.is_exact:
        on_l2 = lt["L2residual"] == 0
        on_d8 = lt["D8residual"] == 0
        on_d12 = lt["D12residuals"][0] == 0 and lt["D12residuals"][1] == 0
    else:
        on_l2 = _locus_state(lt["L2residual"], "L2")
        if on_l2:
            on_d8 = _locus_state(lt["D8residual"], "D8")
            on_d12 = (_locus_state(lt["D12residuals"][0], "D12[0]")
                      and _locus_state(lt["D12residuals"][1], "D12[1]"))
    if not on_l2:
        return AutLabel.Z2
    if on_d8 and on_d12:
        return AutLabel.SPECIAL_POINT
    if on_d8:
        return AutLabel.D8
    if on_d12:
        return AutLabel.D12
    return AutLabel.V4


# ---------------------------------------------------------------------------
# thetanull J10 cross-check

# Global normalization shared by every curve: with the Thomae scale divided
# out as below, both degree-72 thetanull products equal
# J10^4 ((lambda - 1)(mu - nu))^6 with constant exactly 1.
J10_CALIBRATION = 1.0


def _j10_theta_forms(t: Genus2Thetas):
    q1 = t[1] ** 2 * t[2] ** 2 - t[3] ** 2 * t[4] ** 2
    q2 = t[1] ** 2 * t[4] ** 2 - t[2] ** 2 * t[3] ** 2
    q3 = t[1] ** 2 * t[3] ** 2 - t[2] ** 2 * t[4] ** 2
    form1 = (t[1] ** 12 * t[3] ** 12 / (t[2] ** 28 * t[4] ** 28 * t[10] ** 40)
             * (q1 * q2 * q3) ** 12)
    form2 = ((t[1] * t[3]) ** 12 / ((t[2] * t[4]) ** 28 * t[10] ** 16)
             * (t[5] * t[6] * t[7] * t[8] * t[9]) ** 24)
    return form1, form2


def j10_theta_checks(t: Genus2Thetas, J: IgusaInvariants):
    """Residuals of the two degree-72 thetanull products against the
    branch-point J10 of the same curve.

    The thetanull products carry eighteen powers of the Thomae scale, read
    off theta1 as theta1^4 / (nu lam (nu - lam)(mu - 1)) with (lam, mu, nu)
    the recovered branch points; dividing it out, both products equal
    J10_CALIBRATION * J10^4 * ((lam - 1)(mu - nu))^6 on every curve.  Also
    enforces nonvanishing of theta_i for i in {1, 3, 5, 6, 7, 8, 9}, which
    holds on every Jacobian of a smooth curve: the second product writes a
    power of the nonzero J10 with these thetanulls as numerator factors.
    """
    for i in (1, 3, 5, 6, 7, 8, 9):
        if abs(t[i]) <= 1e-6:
            raise ValidationError(f"theta{i} vanishes: not a Jacobian thetanull set")
    lam, mu, nu = picard_branch_points(t)
    p1 = nu * lam * (nu - lam) * (mu - 1.0)
    if abs(p1) <= _TINY:
        raise ValidationError("degenerate branch triple recovered")
    thomae_scale = t[1] ** 4 / p1
    target = (J10_CALIBRATION * complex(J.J10) ** 4
              * ((lam - 1.0) * (mu - nu)) ** 6 * thomae_scale ** 18)
    form1, form2 = _j10_theta_forms(t)
    return _rel(form1, target), _rel(form2, target)
