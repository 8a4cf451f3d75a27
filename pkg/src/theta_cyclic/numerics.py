"""Precision modes, deterministic summation, and Siegel membership.

Every analytic routine in the package runs in one of two process-global
precision modes:

* ``"double"``   - IEEE binary64 via cmath/numpy (the default),
* ``"extended"`` - mpmath real/complex numbers with a 160 bit
  significand (well above the 106 bit floor the extended mode promises).

The mode is switched with :func:`set_precision` or the
:func:`precision` context manager.  Within a fixed mode all summation
orders are fixed and nothing runs concurrently, so identical inputs
give bit-identical outputs.

Matrices cross module boundaries as nested tuples of scalars; the
dispatch to numpy (double) or mpmath (extended) happens inside this
module only.
"""

from __future__ import annotations

import cmath
import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .errors import ValidationError

_MODES = ("double", "extended")
EXTENDED_PREC_BITS = 160

_state = {"mode": "double"}


def set_precision(mode: str) -> None:
    """Set the global precision mode ("double" or "extended")."""
    if mode not in _MODES:
        raise ValidationError(f"unknown precision mode {mode!r}; expected one of {_MODES}")
    _state["mode"] = mode
    if mode == "extended":
        mpmath.mp.prec = EXTENDED_PREC_BITS


def get_precision() -> str:
    return _state["mode"]


@contextmanager
def precision(mode: str):
    """Temporarily switch the precision mode."""
    old = _state["mode"]
    set_precision(mode)
    try:
        yield
    finally:
        set_precision(old)


def is_extended() -> bool:
    return _state["mode"] == "extended"


# ---------------------------------------------------------------------------
# scalar helpers


def to_real(x):
    """Coerce x (int/float/Fraction/mpf) to the working real type."""
    if is_extended():
        return mpmath.mpmathify(x)
    if isinstance(x, Fraction):
        return x.numerator / x.denominator
    return float(x)


def to_complex(x):
    """Coerce x to the working complex type."""
    if is_extended():
        if isinstance(x, complex):
            return mpmath.mpc(x.real, x.imag)
        return mpmath.mpc(mpmath.mpmathify(x))
    if isinstance(x, Fraction):
        return complex(x.numerator / x.denominator)
    return complex(x)


def cexp(x):
    return mpmath.exp(x) if is_extended() else cmath.exp(x)


def csqrt(x):
    return mpmath.sqrt(x) if is_extended() else cmath.sqrt(x)


def pi_val():
    return mpmath.pi if is_extended() else math.pi


def imag_unit():
    return mpmath.mpc(0, 1) if is_extended() else 1j


def machine_eps() -> float:
    return float(mpmath.mp.eps) if is_extended() else 2.220446049250313e-16


def fsum_real(xs: Iterable) -> float:
    """Exactly-rounded sum of real terms (math.fsum / mpmath.fsum)."""
    if is_extended():
        return mpmath.fsum(xs)
    return math.fsum(xs)


def fsum_complex(xs: Sequence):
    """Deterministic compensated sum of complex terms."""
    if is_extended():
        return mpmath.fsum(xs)
    return complex(math.fsum(z.real for z in xs), math.fsum(z.imag for z in xs))


# ---------------------------------------------------------------------------
# matrix helpers on nested tuples


def as_tuple_matrix(m) -> tuple:
    rows = []
    for row in m:
        rows.append(tuple(row))
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValidationError("matrix is not square")
    return tuple(rows)


def mat_dim(m) -> int:
    return len(m)


def sym_defect(m) -> float:
    """max_ij |m_ij - m_ji|"""
    m = as_tuple_matrix(m)
    n = len(m)
    d = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            d = max(d, abs(complex(m[i][j]) - complex(m[j][i])))
    return d


def symmetrized(m) -> tuple:
    m = as_tuple_matrix(m)
    n = len(m)
    half = to_real(Fraction(1, 2))
    return tuple(
        tuple((m[i][j] + m[j][i]) * half for j in range(n)) for i in range(n)
    )


def imag_matrix(m) -> tuple:
    m = as_tuple_matrix(m)
    if is_extended():
        return tuple(tuple(mpmath.im(x) for x in row) for row in m)
    return tuple(tuple(complex(x).imag for x in row) for row in m)


def cholesky_lower(y) -> tuple:
    """Lower Cholesky factor of a real symmetric positive definite matrix.

    Raises ValidationError when y is not positive definite.
    """
    y = as_tuple_matrix(y)
    if is_extended():
        try:
            L = mpmath.cholesky(mpmath.matrix([list(r) for r in y]))
        except ValueError as exc:
            raise ValidationError(f"matrix not positive definite: {exc}") from exc
        n = len(y)
        return tuple(tuple(L[i, j] for j in range(n)) for i in range(n))
    arr = np.array(y, dtype=float)
    try:
        L = np.linalg.cholesky(arr)
    except np.linalg.LinAlgError as exc:
        raise ValidationError(f"matrix not positive definite: {exc}") from exc
    return tuple(tuple(row) for row in L.tolist())


def eigvals_sym(y) -> tuple:
    """Eigenvalues of a real symmetric matrix, ascending."""
    y = as_tuple_matrix(y)
    if is_extended():
        E = mpmath.mp.eigsy(mpmath.matrix([list(r) for r in y]), eigvals_only=True)
        vals = sorted(E[i] for i in range(len(y)))
        return tuple(vals)
    vals = np.linalg.eigvalsh(np.array(y, dtype=float))
    return tuple(float(v) for v in vals)


def mat_solve(a, b) -> tuple:
    """Solve a @ x = b for square a; b given as a matrix (nested rows)."""
    a = as_tuple_matrix(a)
    n = len(a)
    brows = [list(r) for r in b]
    if is_extended():
        A = mpmath.matrix([list(r) for r in a])
        ncols = len(brows[0])
        out = []
        for j in range(ncols):
            col = mpmath.matrix([brows[i][j] for i in range(n)])
            x = mpmath.lu_solve(A, col)
            out.append([x[i] for i in range(n)])
        return tuple(tuple(out[j][i] for j in range(len(out))) for i in range(n))
    A = np.array(a, dtype=complex)
    B = np.array(brows, dtype=complex)
    X = np.linalg.solve(A, B)
    return tuple(tuple(row) for row in X.tolist())


def mat_mul(a, b) -> tuple:
    a = as_tuple_matrix(a)
    b = as_tuple_matrix(b) if len(b) == len(a) else tuple(tuple(r) for r in b)
    n, k = len(a), len(b[0])
    m = len(b)
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(m)) for j in range(k))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# Siegel upper half space


def min_eigen_imag(tau) -> float:
    """Smallest eigenvalue of Im(tau) (symmetrized first)."""
    y = imag_matrix(symmetrized(tau))
    return eigvals_sym(y)[0]


def is_siegel(m, sym_tol: float = 1e-9) -> bool:
    """True when m is square, symmetric to sym_tol, and Im(m) is positive
    definite (its Cholesky factorization succeeds)."""
    try:
        m = as_tuple_matrix(m)
    except ValidationError:
        return False
    if sym_defect(m) > sym_tol:
        return False
    try:
        cholesky_lower(imag_matrix(symmetrized(m)))
    except ValidationError:
        return False
    return True


@dataclass(frozen=True)
class SiegelPoint:
    """A validated point of the genus-g Siegel upper half space.

    entries is a nested tuple, symmetric to the tolerance it was
    validated with, with positive definite imaginary part.
    """

    entries: tuple
    g: int

    @classmethod
    def validate(cls, m, sym_tol: float = 1e-9) -> "SiegelPoint":
        m = as_tuple_matrix(m)
        if sym_defect(m) > sym_tol:
            raise ValidationError(
                f"matrix symmetry defect {sym_defect(m):.3e} exceeds {sym_tol:.3e}"
            )
        sym = symmetrized(m)
        cholesky_lower(imag_matrix(sym))  # raises if not positive definite
        return cls(entries=tuple(tuple(to_complex(x) for x in row) for row in sym), g=len(m))

    def imag_cholesky(self) -> tuple:
        return cholesky_lower(imag_matrix(self.entries))

    def min_imag_eigen(self) -> float:
        return min_eigen_imag(self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]
