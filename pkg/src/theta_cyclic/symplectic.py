"""Integer symplectic transformations built from mod-2 characteristic data.

A period matrix computed with one branch-point ordering can be moved to
the frame of another ordering without redoing any integration: the half
characteristics attached to the branch points in the two frames
determine a linear map over F_2 that is symplectic for the pairing
<x, y> = x_top . y_bot + x_bot . y_top, and any integer symplectic lift
transports periods while preserving the theta dictionary (lifts of one
mod-2 map differ by the level-2 congruence subgroup, which acts
trivially on level-2 characteristics).  Lifting goes through a
factorization into symplectic transvections, which lift to Z literally.

Vectors are 0/1 integer arrays of length 2g in (top | bottom) order,
matching the numerators of level-2 characteristics.
"""

from __future__ import annotations

import numpy as np

from .errors import NumericalError

__all__ = [
    "pairing_matrix",
    "f2_pairing",
    "solve_char_map",
    "transvection_factors",
    "integer_symplectic_lift",
    "modular_blocks",
]


def pairing_matrix(g: int) -> np.ndarray:
    """Gram matrix of <x, y> = x_top . y_bot - x_bot . y_top on Z^{2g}."""
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    J[:g, g:] = np.eye(g, dtype=np.int64)
    J[g:, :g] = -np.eye(g, dtype=np.int64)
    return J


def f2_pairing(x, y, g: int) -> int:
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    return int((x[:g] @ y[g:] + x[g:] @ y[:g]) % 2)


def _f2_solve(M, rhs):
    """Solve M x = rhs over F_2; returns None when inconsistent.

    M: (m, n) 0/1 array, rhs: (m,) or (m, k).  Free variables are set
    to zero.
    """
    M = np.asarray(M, dtype=np.int64) % 2
    rhs = np.atleast_2d(np.asarray(rhs, dtype=np.int64).T).T % 2
    m, n = M.shape
    aug = np.hstack([M, rhs]).copy()
    pivots = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, m):
            if aug[r, col]:
                sel = r
                break
        if sel is None:
            continue
        aug[[row, sel]] = aug[[sel, row]]
        for r in range(m):
            if r != row and aug[r, col]:
                aug[r] = (aug[r] + aug[row]) % 2
        pivots.append(col)
        row += 1
        if row == m:
            break
    # inconsistency: zero row with nonzero rhs
    for r in range(row, m):
        if not aug[r, :n].any() and aug[r, n:].any():
            return None
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for r, col in enumerate(pivots):
        x[col] = aug[r, n:]
    return x if rhs.shape[1] > 1 else x[:, 0]


def _f2_inverse(M):
    n = M.shape[0]
    inv = _f2_solve(M, np.eye(n, dtype=np.int64))
    if inv is None or ((M @ inv) % 2 != np.eye(n, dtype=np.int64)).any():
        return None
    return inv


def solve_char_map(us, vs, g: int):
    """Linear map S over F_2 with S u_j = v_j for all j.

    us, vs: equal-length sequences of 0/1 vectors of length 2g that
    span F_2^{2g} (true for the branch-pair characteristic systems of
    two orderings of one curve).  The vectors are raw half-period
    coordinates, which change of homology basis moves by a plain
    linear symplectic map: no translation term appears, and the
    self-pairing x_top . x_bot of an individual vector is allowed to
    change between frames.  Checks that S is symplectic mod 2;
    failure means the two input systems do not describe one curve.
    """
    n = 2 * g
    us = [np.asarray(u, dtype=np.int64) % 2 for u in us]
    vs = [np.asarray(v, dtype=np.int64) % 2 for v in vs]
    if len(us) != len(vs) or len(us) < n:
        raise NumericalError("characteristic systems too small to determine the map")
    U = np.array(us).T
    V = np.array(vs).T
    # S . U = V; U has full row rank 2g by the spanning property
    ST = _f2_solve(U.T, V.T)
    if ST is None:
        raise NumericalError("characteristic systems are inconsistent")
    S = ST.T % 2
    if ((S @ U) % 2 != V).any():
        raise NumericalError("characteristic system is rank deficient")
    J = pairing_matrix(g) % 2
    if ((S.T @ J @ S) % 2 != J).any():
        raise NumericalError("characteristic map is not symplectic mod 2")
    return S


def _transvection_f2(w, g: int):
    n = 2 * g
    J = pairing_matrix(g) % 2
    w = np.asarray(w, dtype=np.int64) % 2
    return (np.eye(n, dtype=np.int64) + np.outer(w, (J @ w) % 2)) % 2


def _find_vector(conds_one, conds_zero, g: int):
    """A 0/1 vector w with <w, a> = 1 for a in conds_one and
    <w, b> = 0 for b in conds_zero."""
    n = 2 * g
    J = pairing_matrix(g) % 2
    rows = [(J @ np.asarray(a, dtype=np.int64)) % 2 for a in conds_one]
    rows += [(J @ np.asarray(b, dtype=np.int64)) % 2 for b in conds_zero]
    rhs = np.array([1] * len(conds_one) + [0] * len(conds_zero), dtype=np.int64)
    # <w, a> = w^T J a up to sign, identical mod 2
    sol = _f2_solve(np.array(rows), rhs)
    return sol


def transvection_factors(S, g: int):
    """Vectors w_1..w_k with S = T_{w_1} ... T_{w_k} over F_2, where
    T_w(x) = x + <x, w> w.  Transvections are involutions mod 2."""
    n = 2 * g
    S = np.asarray(S, dtype=np.int64) % 2
    M = S.copy()
    ws = []

    def push(w):
        nonlocal M
        ws.append(np.asarray(w, dtype=np.int64) % 2)
        M = (_transvection_f2(ws[-1], g) @ M) % 2

    def move(a, b, fixed):
        """Apply transvections sending current vector a to b while
        fixing everything in `fixed` (all <w, f> = 0 enforced)."""
        a = a % 2
        b = b % 2
        if (a == b).all():
            return
        if f2_pairing(a, b, g) == 1:
            push((a + b) % 2)
            return
        c = _find_vector([a, b], fixed, g)
        if c is None:
            raise NumericalError("transvection factorization failed to find a connector")
        push((a + c) % 2)
        push((c + b) % 2)

    basis = np.eye(n, dtype=np.int64)
    fixed = []
    for i in range(g):
        e_i, f_i = basis[i], basis[g + i]
        move(M[:, i], e_i, fixed)
        # keep e_i in place while fixing the partner: any transvection
        # vector must now also pair to zero with e_i
        a = M[:, g + i]
        if not (a == f_i).all():
            if f2_pairing(a, f_i, g) == 1:
                w = (a + f_i) % 2
                if f2_pairing(w, e_i, g) != 0:
                    raise NumericalError("transvection factorization broke a fixed vector")
                push(w)
            else:
                # <a, f_i> = 0, so route through e_i + f_i: since
                # <a, e_i> = 1 by symplecticity, both legs pair to zero
                # with e_i and with every previously fixed vector
                mid = (e_i + f_i) % 2
                push((a + mid) % 2)
                push(e_i.copy())
        fixed.extend([e_i, f_i])
    if (M % 2 != np.eye(n, dtype=np.int64)).any():
        raise NumericalError("transvection factorization did not reach the identity")
    # T_{w_k} ... T_{w_1} S = I and transvections are involutions mod 2
    return ws


def integer_symplectic_lift(S, g: int) -> np.ndarray:
    """Integer matrix in Sp(2g, Z) for the (top|bottom) pairing whose
    mod-2 reduction is S."""
    n = 2 * g
    J = pairing_matrix(g)
    total = np.eye(n, dtype=np.int64)
    for w in transvection_factors(S, g):
        w = w.astype(np.int64)
        T = np.eye(n, dtype=np.int64) + np.outer(w, J @ w)
        total = total @ T
    if ((total % 2) != (np.asarray(S, dtype=np.int64) % 2)).any():
        raise NumericalError("integer lift does not reduce to the requested map")
    if (total.T @ J @ total != J).any():
        raise NumericalError("integer lift is not symplectic")
    return total


def modular_blocks(S_int, g: int):
    """Blocks (a, b, c, d) of the modular matrix acting as
    tau' = (a tau + b)(c tau + d)^{-1} whose induced map on level-2
    characteristic numerators is N -> S_int N + translation.

    S_int acts on (top | bottom) vectors; the correspondence is
    conjugation by the pairing matrix: gamma = J^{-1} S J.
    """
    S_int = np.asarray(S_int, dtype=np.int64)
    P, Q = S_int[:g, :g], S_int[:g, g:]
    R, T = S_int[g:, :g], S_int[g:, g:]
    a, b, c, d = T, -R, -Q, P
    J2 = np.zeros((2 * g, 2 * g), dtype=np.int64)
    J2[:g, g:] = np.eye(g, dtype=np.int64)
    J2[g:, :g] = -np.eye(g, dtype=np.int64)
    gamma = np.block([[a, b], [c, d]])
    if (gamma.T @ J2 @ gamma != J2).any():
        raise NumericalError("modular block rearrangement is not symplectic")
    return a, b, c, d
