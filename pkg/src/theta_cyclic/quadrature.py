"""Quadrature primitives for period integrals.

Two rules cover every integral in this package:

- Gauss-Chebyshev on [-1, 1], which absorbs the inverse-square-root
  weight 1/sqrt(1-t^2) exactly.  Used for a straight segment joining
  two branch points, where the product of the two endpoint factors
  contributes exactly that weight.
- Gauss-Legendre on [0, 1] for smooth integrands (detour arcs, and
  segment halves whose endpoint singularity has been removed by an
  s -> s^2 substitution).

Node counts are doubled until two successive estimates agree to the
requested tolerance; the difference of the last two estimates is the
reported error.  All rules run in binary64: every consumer tolerance
sits far above double roundoff.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import QuadratureError

_MAX_NODES = 1 << 14


@lru_cache(maxsize=None)
def _leg_nodes(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    # map [-1,1] -> [0,1]
    return (x + 1.0) / 2.0, w / 2.0


@lru_cache(maxsize=None)
def _cheb_nodes(n: int):
    k = np.arange(1, n + 1)
    return np.cos((2 * k - 1) * math.pi / (2 * n))


def gauss_chebyshev(fn, n: int):
    """Integral over [-1,1] of fn(t)/sqrt(1-t^2) where fn is smooth and
    vector-valued: fn(t: array) -> array (..., len(t))."""
    t = _cheb_nodes(n)
    vals = fn(t)
    return vals.sum(axis=-1) * (math.pi / n)


def gauss_legendre_01(fn, n: int):
    """Integral over [0,1] of smooth vector-valued fn."""
    x, w = _leg_nodes(n)
    vals = fn(x)
    return vals @ w


def integrate_to_tol(eval_at, tol: float, n0: int = 16):
    """Runs eval_at(n) with doubling n until successive results agree.

    eval_at(n) must return a 1-d complex ndarray.  Returns (value,
    errorEstimate) where errorEstimate is the max-norm difference of
    the last two refinements, relative to the larger of 1 and the
    result magnitude.
    """
    prev = eval_at(n0)
    n = 2 * n0
    while n <= _MAX_NODES:
        cur = eval_at(n)
        scale = max(1.0, float(np.max(np.abs(cur))))
        err = float(np.max(np.abs(cur - prev))) / scale
        if err < tol:
            return cur, err
        prev = cur
        n *= 2
    raise QuadratureError(
        f"quadrature did not reach tolerance {tol:g} within {_MAX_NODES} nodes"
    )
