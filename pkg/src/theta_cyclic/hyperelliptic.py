"""Hyperelliptic curves y^2 = prod_k (x - b_k) of genus 2 and 3.

Covers four pieces of machinery:

- the branch-point-to-characteristic dictionary (``eps_map``,
  ``char_of_subset``, ``vanishing_pattern``),
- numerical period matrices over a canonical homology basis built from
  chain cycles between consecutive branch points,
- the Frobenius four-fold theta sum and the Thomae eighth-power ratio
  checks, both evaluated at a computed period matrix,
- JSON-friendly dict conversion for curves and period data.

Branch points are indexed 1..2g+1 in the stored order; index 2g+2
denotes the branch point at infinity (the models used here always have
odd degree 2g+1, so infinity is a branch point).  The set U of
odd-indexed finite branch points {1, 3, ..., 2g+1} steers both the
theta-vanishing pattern and the sign function of the Frobenius sum.

A genus-1 curve (three finite branch points) is accepted by the period
machinery as a sanity mode: its 1x1 period matrix has a classical
arithmetic-geometric-mean oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .characteristics import (
    Characteristic,
    char,
    compose,
    is_even,
    zero_char,
)
from .errors import NumericalError, QuadratureError, ValidationError
from .numerics import SiegelPoint, as_tuple_matrix, is_siegel, symmetrized
from .paths import LineArc, pass_above_sweep, route_between
from .quadrature import gauss_chebyshev, gauss_legendre_01, integrate_to_tol
from .symplectic import integer_symplectic_lift, modular_blocks, solve_char_map
from .theta_eval import theta_unreduced, thetanull

INF = "inf"

_ORDERINGS = ("rosenhain", "septic", "given")

# minimal relative branch-point separation; Thomae denominators and the
# quadrature both degrade beyond repair below this
_DISTINCT_RTOL = 1e-10


@dataclass(frozen=True)
class HyperellipticCurve:
    genus: int
    finiteBranchPoints: tuple
    ordering: str = "given"

    def __post_init__(self):
        if self.ordering not in _ORDERINGS:
            raise ValidationError(f"unknown ordering tag {self.ordering!r}")
        if self.genus not in (1, 2, 3):
            raise ValidationError("genus must be 1 (sanity mode), 2, or 3")
        pts = tuple(complex(x) for x in self.finiteBranchPoints)
        object.__setattr__(self, "finiteBranchPoints", pts)
        if len(pts) != 2 * self.genus + 1:
            raise ValidationError(
                f"genus {self.genus} needs {2 * self.genus + 1} finite branch points, "
                f"got {len(pts)}"
            )
        scale = max(1.0, max(abs(p) for p in pts))
        for i, j in combinations(range(len(pts)), 2):
            if abs(pts[i] - pts[j]) < _DISTINCT_RTOL * scale:
                raise ValidationError(
                    f"branch points {i + 1} and {j + 1} coincide to relative 1e-10"
                )

    @property
    def n_branch(self) -> int:
        # finite branch points plus infinity
        return 2 * self.genus + 2

    def min_gap(self) -> float:
        pts = self.finiteBranchPoints
        return min(abs(pts[i] - pts[j]) for i, j in combinations(range(len(pts)), 2))


def curve(points, ordering: str = "given") -> HyperellipticCurve:
    points = tuple(complex(p) for p in points)
    if len(points) not in (3, 5, 7):
        raise ValidationError("need 3, 5 or 7 finite branch points")
    return HyperellipticCurve((len(points) - 1) // 2, points, ordering)


def picard_curve(lam, mu, nu) -> HyperellipticCurve:
    """Genus-2 curve y^2 = x(x-1)(x-lam)(x-mu)(x-nu) in the branch order
    (nu, mu, lam, 1, 0), so that U = {nu, lam, 0}."""
    return HyperellipticCurve(2, (complex(nu), complex(mu), complex(lam), 1.0, 0.0), "rosenhain")


def septic_curve(a1, a2, a3, a4, a5) -> HyperellipticCurve:
    """Genus-3 curve y^2 = x(x-1) prod(x-a_i) in the branch order
    (a1..a5, 1, 0), so that U = {a1, a3, a5, 0}."""
    vals = tuple(complex(a) for a in (a1, a2, a3, a4, a5))
    return HyperellipticCurve(3, vals + (1.0, 0.0), "septic")


# ---------------------------------------------------------------------------
# branch index bookkeeping


def _canon_index(i, g: int) -> int:
    """Normalize a branch index to 1..2g+2, with 2g+2 meaning infinity."""
    n = 2 * g + 2
    if i == INF or (isinstance(i, float) and math.isinf(i)):
        return n
    if isinstance(i, (int, np.integer)) and 1 <= int(i) <= n:
        return int(i)
    raise ValidationError(f"branch index {i!r} out of range for genus {g}")


def odd_branch_indices(g: int) -> tuple:
    """Indices of the odd-position finite branch points (the set U)."""
    return tuple(range(1, 2 * g + 2, 2))


def eps_map(i, g: int) -> Characteristic:
    """Half characteristic attached to branch point i (1-based; 2g+2 or
    "inf" for the point at infinity, which maps to 0).

    For finite i with column c = ceil(i/2): the top row carries 1/2 in
    column c only; the bottom row carries 1/2 in columns 1..c-1, and in
    column c too iff i is even.  For i = 2g+1 the top column index g+1
    falls off the matrix, leaving top 0 and bottom all 1/2; this is the
    unique choice consistent with e_B = 0 mod 1.
    """
    if g not in (1, 2, 3):
        raise ValidationError("genus must be 1, 2, or 3")
    i = _canon_index(i, g)
    if i == 2 * g + 2:
        return zero_char(g)
    col = (i + 1) // 2
    top = [0] * g
    bottom = [0] * g
    if col <= g:
        top[col - 1] = 1
    for j in range(col - 1):
        bottom[j] = 1
    if i % 2 == 0:
        bottom[col - 1] = 1
    return char(top, bottom)


@dataclass(frozen=True)
class BranchSubset:
    curve: HyperellipticCurve
    indices: tuple

    def complement(self) -> "BranchSubset":
        full = set(range(1, self.curve.n_branch + 1))
        return BranchSubset(self.curve, tuple(sorted(full - set(self.indices))))


def branch_subset(c: HyperellipticCurve, T) -> BranchSubset:
    idx = sorted({_canon_index(i, c.genus) for i in T})
    return BranchSubset(c, tuple(idx))


def char_of_subset(T: BranchSubset) -> Characteristic:
    """Mod-1 sum of eps_map over the subset; satisfies e_T = e_{T^c}."""
    g = T.curve.genus
    acc = zero_char(g)
    for i in T.indices:
        acc = compose(acc, eps_map(i, g))
    return acc


def _subset_char(g: int, T) -> Characteristic:
    acc = zero_char(g)
    for i in T:
        acc = compose(acc, eps_map(i, g))
    return acc


def vanishing_pattern(g: int) -> set:
    """Even characteristics whose thetanull vanishes identically on the
    hyperelliptic locus: e_T for even-cardinality T with #(T xor U)
    different from g+1.  Empty for g=2; a single characteristic for g=3.
    """
    if g not in (2, 3):
        raise ValidationError("vanishing_pattern needs genus 2 or 3")
    U = set(odd_branch_indices(g))
    out = set()
    finite = range(1, 2 * g + 2)
    for r in range(0, 2 * g + 2, 2):
        for T in combinations(finite, r):
            if len(set(T) ^ U) != g + 1:
                e = _subset_char(g, T)
                if is_even(e):  # odd ones vanish by parity, not listed here
                    out.add(e)
    expected = 2 ** (g - 1) * (2**g + 1) - math.comb(2 * g + 1, g)
    if len(out) != expected:
        raise NumericalError(
            f"even vanishing count {len(out)} != {expected} for genus {g}"
        )
    return out


# ---------------------------------------------------------------------------
# period matrices
#
# Stage 1 (geometry).  The finite branch points are re-ordered along a
# sweep direction so that the chain b_(1) -> b_(2) -> ... -> b_(2g+1)
# is a simple path: each leg lives in its own slab perpendicular to the
# sweep, so legs can only meet at shared endpoints.  Chain cycle c_k
# loops around consecutive pair (b_(k), b_(k+1)); its period is twice
# the integral of x^m dx / y along the leg, with y continued across the
# whole chain.  Simplicity makes the intersection matrix tridiagonal
# with c_k . c_{k+1} = t_k in {+1, -1}; the t_k depend on how the
# corner at each shared point resolves, so they are measured per curve:
# reorienting c_k -> s_k c_k with s_{k+1} = s_k t_k makes every
# consecutive intersection +1, and the right sign vector is the unique
# one (up to a global sign and the anti-orientation twin, which flips
# Im tau) for which A_i = c_{2i-1}, B_i = sum_{l >= i} c_{2l} satisfies
# the Riemann bilinear relations with positive definite Im tau.
#
# Stage 2 (exact arithmetic).  The theta dictionary is wanted in the
# stored branch order, not the sweep order.  Matching the characteristic
# systems of the two orders determines a linear symplectic map over F_2;
# an integer symplectic lift of it transports (A, B) and tau to the
# stored frame without further integration.

# a wrong sign pattern violates the bilinear relations at order one;
# the right one holds them to quadrature accuracy
_BILINEAR_TOL = 1e-6


@dataclass(frozen=True)
class PeriodData:
    aPeriods: tuple  # g x g, rows = differentials, columns = A-cycles
    bPeriods: tuple  # g x g, rows = differentials, columns = B-cycles
    tau: SiegelPoint
    quadratureError: float


def _walk_chain(points, d_min):
    """Routes between consecutive branch points plus per-arc snapshots of
    the continued argument of every factor (x - b_j).

    Returns a list of route records, one per chain step k:
    (arcs, snapshots) where snapshots[i][j] is the continued arg of
    factor j at the start of arc i.
    """
    n = len(points)
    routes = []
    for k in range(n - 1):
        others = [p for idx, p in enumerate(points) if idx not in (k, k + 1)]
        routes.append(route_between(points[k], points[k + 1], others, d_min))

    first = routes[0][0]
    args = [0.0] * n
    args[0] = cmath.phase(first.z1 - first.z0)
    for j in range(1, n):
        args[j] = cmath.phase(points[0] - points[j])

    records = []
    for k, arcs in enumerate(routes):
        snapshots = []
        last_idx = len(arcs) - 1
        for i, arc in enumerate(arcs):
            snapshots.append(tuple(args))
            for j in range(n):
                if i == 0 and j == k:
                    continue  # constant along the departure segment
                if i == last_idx and j == k + 1:
                    continue  # constant along the arrival segment
                args[j] += float(arc.arg_delta(points[j], 1.0))
        records.append((arcs, snapshots))
        if k + 1 < n - 1:
            nxt = routes[k + 1][0]
            out_dir = cmath.phase(nxt.z1 - nxt.z0)
            args[k + 1] += pass_above_sweep(args[k + 1], out_dir)
    return records


def _partial_y(x, t, arc, snapshot, points, exclude):
    """exp(1/2 sum_j log(x - b_j)) over j outside `exclude`, using the
    continued arguments."""
    acc = np.zeros(np.shape(x), dtype=complex)
    for j, ej in enumerate(points):
        if j in exclude:
            continue
        aj = snapshot[j] + arc.arg_delta(ej, t)
        acc += np.log(np.abs(x - ej)) + 1j * aj
    return np.exp(0.5 * acc)


def _route_integral(points, g, k, arcs, snapshots, tol):
    """Integrals of x^m dx / y, m = 0..g-1, along route k."""
    pts = points

    if len(arcs) == 1:
        arc = arcs[0]
        snap = snapshots[0]
        D = arc.z1 - arc.z0
        coef = D / abs(D) * cmath.exp(-0.5j * (snap[k] + snap[k + 1]))

        def eval_at(n, arc=arc, snap=snap, D=D, coef=coef):
            def fn(tt):
                u = (tt + 1.0) / 2.0
                x = arc.z0 + D * u
                rest = _partial_y(x, u, arc, snap, pts, (k, k + 1))
                base = coef / rest
                return np.stack([x**m * base for m in range(g)])

            return gauss_chebyshev(fn, n)

        return integrate_to_tol(eval_at, tol)

    last = len(arcs) - 1

    def eval_at(n):
        total = np.zeros(g, dtype=complex)
        for i, arc in enumerate(arcs):
            snap = snapshots[i]
            if i == 0:
                D = arc.z1 - arc.z0
                coef = 2.0 * D / math.sqrt(abs(D)) * cmath.exp(-0.5j * snap[k])

                def fn(s, arc=arc, snap=snap, D=D, coef=coef):
                    u = s * s
                    x = arc.z0 + D * u
                    rest = _partial_y(x, u, arc, snap, pts, (k,))
                    base = coef / rest
                    return np.stack([x**m * base for m in range(g)])

            elif i == last:
                D = arc.z0 - arc.z1
                coef = -2.0 * D / math.sqrt(abs(D)) * cmath.exp(-0.5j * snap[k + 1])

                def fn(s, arc=arc, snap=snap, D=D, coef=coef):
                    u = 1.0 - s * s
                    x = arc.z1 + D * (s * s)
                    rest = _partial_y(x, u, arc, snap, pts, (k + 1,))
                    base = coef / rest
                    return np.stack([x**m * base for m in range(g)])

            else:

                def fn(t, arc=arc, snap=snap):
                    x = arc.point(t)
                    v = arc.velocity(t)
                    y = _partial_y(x, t, arc, snap, pts, ())
                    base = v / y
                    return np.stack([x**m * base for m in range(g)])

            total = total + gauss_legendre_01(fn, n)
        return total

    return integrate_to_tol(eval_at, tol)


def chain_integrals(c: HyperellipticCurve, quadTol: float):
    """Integral of each differential along each of the 2g chain routes,
    with y continued consistently across the whole chain.

    Returns (I, errTotal): I has shape (2g, g), rows indexed by route.
    """
    return _integrate_chain(list(c.finiteBranchPoints), c.genus, quadTol)


def _integrate_chain(points, g, quadTol):
    pts = [complex(p) for p in points]
    d_min = min(
        abs(a - b) for i, a in enumerate(pts) for b in pts[i + 1:]
    )
    records = _walk_chain(pts, d_min)
    per_route_tol = quadTol / (4 * g)
    I = np.zeros((2 * g, g), dtype=complex)
    err_total = 0.0
    for k, (arcs, snapshots) in enumerate(records):
        val, err = _route_integral(pts, g, k, arcs, snapshots, per_route_tol)
        I[k] = val
        err_total += err
    return I, err_total


def _assemble_basis(P, g):
    """A_i = c_{2i-1}, B_i = sum_{l >= i} c_{2l} from per-cycle period
    vectors P (rows = cycles, columns = differentials)."""
    A = np.zeros((g, g), dtype=complex)
    B = np.zeros((g, g), dtype=complex)
    for i in range(g):
        A[:, i] = P[2 * i]
        for l in range(i, g):
            B[:, i] += P[2 * l + 1]
    return A, B


def _sweep_order(points):
    """Order along a sweep direction making the chain a simple path.

    Sorting by Re(p e^{-i phi}) confines each leg to its own slab, so
    legs meet only at shared endpoints; phi is nudged until the sort
    keys are cleanly separated (only finitely many directions tie)."""
    pts = np.asarray(points, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(pts))))
    phi = 0.0
    best = None
    best_gap = -1.0
    for _ in range(64):
        keys = (pts * np.exp(-1j * phi)).real
        order = sorted(range(len(pts)), key=lambda j: (keys[j], (pts[j] * np.exp(-1j * phi)).imag))
        gap = float(np.min(np.diff(np.sort(keys)))) if len(pts) > 1 else 1.0
        if gap > best_gap:
            best, best_gap = order, gap
        if gap > 1e-6 * scale:
            return order
        phi += 0.1
    return best


def _oriented_symplectic_basis(P0, g):
    """Resolve chain-cycle orientations: the unique sign vector (up to
    a global factor) making the assembled basis satisfy the Riemann
    bilinear relations with positive definite Im tau."""
    winners = []
    for mask in range(1 << (2 * g - 1)):
        sigma = np.ones(2 * g)
        for bit in range(2 * g - 1):
            if (mask >> bit) & 1:
                sigma[bit + 1] = -1.0
        A, B = _assemble_basis(sigma[:, None] * P0, g)
        num = np.linalg.norm(A @ B.T - B @ A.T)
        den = np.linalg.norm(A) * np.linalg.norm(B)
        bilinear = float(num / max(den, 1e-300))
        if bilinear > _BILINEAR_TOL:
            continue
        try:
            tau_raw = np.linalg.solve(A, B)
        except np.linalg.LinAlgError:
            continue
        eigs = np.linalg.eigvalsh((tau_raw.imag + tau_raw.imag.T) / 2.0)
        if eigs[0] > 0:
            winners.append((A, B, bilinear))
    if not winners:
        raise NumericalError(
            "no cycle orientation satisfies the bilinear relations with "
            "Im(tau) > 0; homology basis construction failed"
        )
    if len(winners) > 1:
        raise NumericalError(
            "cycle orientation is ambiguous; curve too close to degenerate"
        )
    return winners[0]


def _char_vector(e: Characteristic) -> np.ndarray:
    return np.array(list(e.top) + list(e.bottom), dtype=np.int64)


def _frame_score(A, B):
    tau = np.linalg.solve(A, B)
    return float(np.linalg.eigvalsh((tau.imag + tau.imag.T) / 2.0)[0])


def _even_symmetric_moves(g):
    out = []
    for i in range(g):
        E = np.zeros((g, g), dtype=np.int64)
        E[i, i] = 1
        out.append(E)
    for i in range(g):
        for j in range(i + 1, g):
            E = np.zeros((g, g), dtype=np.int64)
            E[i, j] = E[j, i] = 1
            out.append(E)
    return out


def _improve_frame(A, B, rounds=128):
    """Recondition Im(tau) by a basis change in the subgroup acting
    trivially on level-2 characteristics (blocks congruent to the
    identity mod 2), so the theta dictionary is untouched.

    Moves: B -> B - 2 A N (re-centres Re tau, Im unchanged) and
    A -> A + 2 B C for small symmetric integer C (greedy on the
    smallest eigenvalue of Im tau)."""
    g = A.shape[0]
    moves = _even_symmetric_moves(g)
    for _ in range(rounds):
        tau = np.linalg.solve(A, B)
        N = np.round(tau.real / 2.0)
        N = np.round((N + N.T) / 2.0)
        if np.max(np.abs(N)) > 0:
            B = B - 2.0 * A @ N
        score = _frame_score(A, B)
        if score > 0.05:
            break
        best = None
        best_score = score
        for C in moves:
            for sgn in (1.0, -1.0):
                A2 = A + 2.0 * sgn * B @ C
                try:
                    s2 = _frame_score(A2, B)
                except np.linalg.LinAlgError:
                    continue
                if s2 > best_score + 1e-12:
                    best, best_score = A2, s2
        if best is None:
            break
        A = best
    return A, B


def period_matrix(c: HyperellipticCurve, quadTol: float = 1e-10) -> PeriodData:
    """A- and B-periods of x^{j-1} dx / y over the chain homology basis
    of the stored branch order, and tau = symmetrize(A^{-1} B).

    Integration runs over a sweep-sorted chain (always a simple path);
    an exact integer symplectic transformation derived from the two
    orders' characteristic systems then moves the basis to the stored
    order, where the theta dictionary is wanted.
    """
    g = c.genus
    points = list(c.finiteBranchPoints)
    order = _sweep_order(points)
    sorted_points = [points[j] for j in order]

    I, err_total = _integrate_chain(sorted_points, g, quadTol)
    A0, B0, bilinear0 = _oriented_symplectic_basis(2.0 * I, g)

    # characteristic systems: branch with stored index k sits at sweep
    # position order.index(k-1) + 1
    us = []
    vs = []
    for k in range(1, 2 * g + 2):
        pos = order.index(k - 1) + 1
        us.append(_char_vector(eps_map(pos, g)))
        vs.append(_char_vector(eps_map(k, g)))
    S = solve_char_map(us, vs, g)
    S_int = integer_symplectic_lift(S, g)
    ma, mb, mc, md = modular_blocks(S_int, g)

    A = A0 @ md.T.astype(float) + B0 @ mc.T.astype(float)
    B = A0 @ mb.T.astype(float) + B0 @ ma.T.astype(float)
    A, B = _improve_frame(A, B)

    try:
        tau_raw = np.linalg.solve(A, B)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"A-period matrix is singular: {exc}") from exc
    eigs = np.linalg.eigvalsh((tau_raw.imag + tau_raw.imag.T) / 2.0)
    if eigs[0] <= 0:
        raise NumericalError("Im(tau) lost definiteness in the basis transport")

    scale = float(np.max(np.abs(tau_raw)))
    defect = float(np.max(np.abs(tau_raw - tau_raw.T))) / max(scale, 1e-300)
    if defect > max(1e-6, 1e3 * quadTol):
        raise NumericalError(f"period matrix symmetry defect {defect:.3e}")

    tau = symmetrized(as_tuple_matrix(tau_raw.tolist()))
    if not is_siegel(tau):
        raise NumericalError("computed tau is not in the Siegel upper half space")
    return PeriodData(
        aPeriods=as_tuple_matrix(A.tolist()),
        bPeriods=as_tuple_matrix(B.tolist()),
        tau=SiegelPoint.validate(tau),
        quadratureError=max(err_total, defect, bilinear0),
    )


def riemann_bilinear_defect(p: PeriodData) -> float:
    """|A B^t - B A^t| / (|A| |B|); zero for a symplectic homology basis."""
    A = np.asarray(p.aPeriods, dtype=complex)
    B = np.asarray(p.bPeriods, dtype=complex)
    num = np.linalg.norm(A @ B.T - B @ A.T)
    den = np.linalg.norm(A) * np.linalg.norm(B)
    return float(num / max(den, 1e-300))


# ---------------------------------------------------------------------------
# Frobenius and Thomae checks


def frobenius_residual(c: HyperellipticCurve, p: PeriodData, b, z, tol: float = 1e-12) -> float:
    """Relative residual of the four-fold theta sum

        sum_{j in S u {inf}} epsU(j) prod_{i=1..4} Theta[b_i + eps(j)](z_i)

    where epsU(j) = +1 for j in U and -1 otherwise.  The b_i must be
    half characteristics composing to 0 and the z_i must sum to 0; both
    sums are then taken literally (b_4 as -(b_1+b_2+b_3) on the vector
    level), which is what makes the per-branch shifts well defined.
    """
    g = c.genus
    bs = list(b)
    if len(bs) != 4:
        raise ValidationError("need exactly 4 characteristics")
    for bi in bs:
        if not isinstance(bi, Characteristic) or bi.g != g or not bi.is_half():
            raise ValidationError("b entries must be half characteristics of matching genus")
    total = bs[0]
    for bi in bs[1:]:
        total = compose(total, bi)
    if not total.is_zero():
        raise ValidationError("characteristics must compose to zero")

    zs = [tuple(complex(x) for x in zi) for zi in z]
    if len(zs) != 4 or any(len(zi) != g for zi in zs):
        raise ValidationError("need 4 vectors of length g")
    zscale = max(1.0, max(abs(x) for zi in zs for x in zi))
    for co in range(g):
        if abs(sum(zi[co] for zi in zs)) > 1e-9 * zscale:
            raise ValidationError("z vectors must sum to zero")

    # literal vector representatives: v_i = numerators of b_i for i<4,
    # v_4 = -(v_1+v_2+v_3) (congruent to b_4 mod 1)
    tops = [list(bi.top) for bi in bs[:3]]
    bots = [list(bi.bottom) for bi in bs[:3]]
    tops.append([-(tops[0][j] + tops[1][j] + tops[2][j]) for j in range(g)])
    bots.append([-(bots[0][j] + bots[1][j] + bots[2][j]) for j in range(g)])

    U = set(odd_branch_indices(g))
    terms = []
    for j in list(range(1, 2 * g + 2)) + [2 * g + 2]:
        e = eps_map(j, g)
        sign = 1.0 if j in U else -1.0
        prod = complex(sign)
        for i in range(4):
            top = [tops[i][co] + e.top[co] for co in range(g)]
            bot = [bots[i][co] + e.bottom[co] for co in range(g)]
            prod *= theta_unreduced(top, bot, 2, zs[i], p.tau, tol)
        terms.append(prod)
    total = sum(terms)
    scale = max(abs(t) for t in terms)
    return abs(total) / max(scale, 1e-300)


def _partition_blocks(c: HyperellipticCurve, part):
    g = c.genus
    if len(part) != 2:
        raise ValidationError("a partition is a pair of blocks")
    b1 = [_canon_index(i, g) for i in part[0]]
    b2 = [_canon_index(i, g) for i in part[1]]
    if len(b1) != g + 1 or len(b2) != g + 1:
        raise ValidationError(f"blocks must have size {g + 1}")
    if sorted(b1 + b2) != list(range(1, 2 * g + 3)):
        raise ValidationError("blocks must partition the full branch set")
    return tuple(b1), tuple(b2)


def partition_char(c: HyperellipticCurve, part) -> Characteristic:
    """Characteristic attached to a (g+1)+(g+1) partition of the branch
    points: e_{T xor U} with T the first block."""
    b1, _ = _partition_blocks(c, part)
    T = set(b1) ^ set(odd_branch_indices(c.genus))
    return _subset_char(c.genus, T)


def _difference_product_sq(c: HyperellipticCurve, block) -> complex:
    pts = c.finiteBranchPoints
    n_inf = c.n_branch
    fin = [i for i in block if i != n_inf]
    prod = 1.0 + 0.0j
    for a, b in combinations(fin, 2):
        prod *= (pts[a - 1] - pts[b - 1]) ** 2
    return prod


def thomae_ratio_check(c: HyperellipticCurve, p: PeriodData, part1, part2,
                       tol: float = 1e-12) -> float:
    """Relative residual of Theta[e1]^8 / Theta[e2]^8 against the ratio
    of squared branch-point difference products of the two partitions.
    Differences against the infinite branch point drop out (both sides
    omit the same count), so the Thomae constant cancels.
    """
    b11, b12 = _partition_blocks(c, part1)
    b21, b22 = _partition_blocks(c, part2)
    e1 = partition_char(c, part1)
    e2 = partition_char(c, part2)
    if not (is_even(e1) and is_even(e2)):
        raise ValidationError("partition characteristics must be even")

    t1 = thetanull(e1, p.tau, tol)
    t2 = thetanull(e2, p.tau, tol)
    if abs(t2) < 1e-8:
        raise ValidationError("denominator thetanull vanishes for this partition")
    lhs = (t1 / t2) ** 8

    num = _difference_product_sq(c, b11) * _difference_product_sq(c, b12)
    den = _difference_product_sq(c, b21) * _difference_product_sq(c, b22)
    if abs(den) < 1e-300:
        raise ValidationError("degenerate branch difference product")
    rhs = num / den
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


# ---------------------------------------------------------------------------
# JSON-friendly conversion


def _c2pair(x) -> list:
    x = complex(x)
    return [x.real, x.imag]


def curve_to_dict(c: HyperellipticCurve) -> dict:
    return {
        "genus": c.genus,
        "branchPoints": [_c2pair(p) for p in c.finiteBranchPoints],
        "ordering": c.ordering,
    }


# legacy tag spellings accepted in curve documents
_ORDERING_ALIASES = {"paper-g2": "rosenhain", "paper-g3": "septic"}


def curve_from_dict(d: dict) -> HyperellipticCurve:
    try:
        genus = int(d["genus"])
        pts = [complex(p[0], p[1]) for p in d["branchPoints"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"malformed curve document: {exc}") from exc
    ordering = d.get("ordering", "given")
    ordering = _ORDERING_ALIASES.get(ordering, ordering)
    cur = HyperellipticCurve(genus, tuple(pts), ordering)
    return cur


def _mat_to_pairs(m) -> list:
    return [[_c2pair(x) for x in row] for row in m]


def period_data_to_dict(p: PeriodData) -> dict:
    return {
        "tau": _mat_to_pairs(p.tau.entries),
        "aPeriods": _mat_to_pairs(p.aPeriods),
        "bPeriods": _mat_to_pairs(p.bPeriods),
        "quadratureError": p.quadratureError,
    }
