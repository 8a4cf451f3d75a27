import cmath
import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest

from theta_cyclic import numerics as nm
from theta_cyclic import theta_eval as th
from theta_cyclic.characteristics import (
    all_half_characteristics,
    char,
    odd_characteristics,
    zero_char,
)
from theta_cyclic.errors import NumericalError, ValidationError

TAU1 = ((0.3 + 1.1j,),)
TAU2 = ((1.2j, 0.3 + 0.1j), (0.3 + 0.1j, 1.5j))
TAU3 = (
    (1.3j, 0.2 + 0.05j, -0.1 + 0.02j),
    (0.2 + 0.05j, 1.6j, 0.15 - 0.03j),
    (-0.1 + 0.02j, 0.15 - 0.03j, 1.9j),
)


def brute_theta(a, b, z, tau, box):
    g = len(z)
    total = 0j
    for u in itertools.product(range(-box, box + 1), repeat=g):
        v = [u[i] + float(a[i]) for i in range(g)]
        quad = sum(v[i] * tau[i][j] * v[j] for i in range(g) for j in range(g))
        lin = sum(v[i] * (z[i] + float(b[i])) for i in range(g))
        total += cmath.exp(1j * math.pi * (quad + 2 * lin))
    return total


def test_closed_form_lemniscatic():
    # theta[0;0](0, i) = pi^(1/4) / Gamma(3/4)
    v = th.thetanull(zero_char(1), ((1j,),))
    assert v.imag == 0
    assert v.real == pytest.approx(1.0864348112133080, abs=1e-14)


def test_matches_independent_series_g1():
    rng = random.Random(71_001)
    for _ in range(4):
        a = (Fraction(rng.randint(0, 1), 2),)
        b = (Fraction(rng.randint(0, 1), 2),)
        z = (rng.uniform(-0.4, 0.4) + 1j * rng.uniform(-0.2, 0.2),)
        got = th.theta_char((a, b), z, TAU1, tol=1e-13)
        want = brute_theta(a, b, z, TAU1[0:1], box=16)
        assert abs(got - want) < 1e-12


def test_matches_independent_series_g2():
    rng = random.Random(20_260_816)
    for _ in range(3):
        a = tuple(Fraction(rng.randint(0, 1), 2) for _ in range(2))
        b = tuple(Fraction(rng.randint(0, 1), 2) for _ in range(2))
        z = tuple(rng.uniform(-0.3, 0.3) + 1j * rng.uniform(-0.15, 0.15) for _ in range(2))
        got = th.theta_char((a, b), z, TAU2, tol=1e-13)
        want = brute_theta(a, b, z, TAU2, box=12)
        assert abs(got - want) < 1e-11


def test_matches_independent_series_sixth_characteristic():
    a = (Fraction(1, 6), Fraction(2, 3))
    b = (Fraction(0), Fraction(1, 6))
    got = th.thetanull((a, b), TAU2, tol=1e-13)
    want = brute_theta(a, b, (0, 0), TAU2, box=12)
    assert abs(got - want) < 1e-11


def test_matches_mpmath_jtheta():
    z = 0.23 - 0.11j
    v = th.theta_char(zero_char(1), (z,), TAU1)
    with mpmath.workdps(30):
        q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(0.3, 1.1))
        ref = mpmath.jtheta(3, mpmath.pi * mpmath.mpc(z), q)
        assert abs(v - complex(ref)) < 1e-13


def test_jacobi_quartic_identity():
    t2 = th.thetanull(char((1,), (0,)), TAU1)
    t3 = th.thetanull(char((0,), (0,)), TAU1)
    t4 = th.thetanull(char((0,), (1,)), TAU1)
    assert abs(t3**4 - t2**4 - t4**4) < 1e-14


def test_shifted_argument_identity():
    # theta[a;b](z) = exp(pi*i*(a^t tau a + 2 a^t (z+b))) theta(z + tau a + b)
    import numpy as np

    c = char((1, 0), (0, 1))
    af, bf = c.as_fractions()
    a = np.array([float(x) for x in af])
    b = np.array([float(x) for x in bf])
    z = np.array([0.12 + 0.03j, -0.07 + 0.09j])
    T = np.array(TAU2)
    lhs = th.theta_char(c, tuple(z), TAU2, tol=1e-13)
    phase = cmath.exp(1j * math.pi * (a @ T @ a + 2 * a @ (z + b)))
    rhs = phase * th.theta(tuple(z + T @ a + b), TAU2, tol=1e-13)
    assert abs(lhs - rhs) < 1e-12


def test_diagonal_tau_separates():
    eye2 = ((1j, 0), (0, 1j))
    g2 = th.theta((0, 0), eye2, tol=1e-13)
    g1 = brute_theta((0,), (0,), (0,), ((1j,),), box=30)
    g2_brute = brute_theta((0, 0), (0, 0), (0, 0), eye2, box=30)
    assert abs(g2 - g1 * g1) < 1e-12
    assert abs(g2 - g2_brute) < 1e-12


@pytest.mark.parametrize("g,tau", [(1, TAU1), (2, TAU2), (3, TAU3)])
def test_odd_nulls_vanish(g, tau):
    for c in odd_characteristics(g):
        assert abs(th.thetanull(c, tau)) < 1e-13


def test_parity_under_negation():
    from theta_cyclic.characteristics import e_star

    z = (0.11 + 0.07j, -0.23 + 0.05j)
    zm = tuple(-x for x in z)
    for c in (char((1, 0), (1, 0)), char((1, 1), (1, 1)), char((0, 1), (1, 0))):
        lhs = th.theta_char(c, zm, TAU2)
        rhs = e_star(c) * th.theta_char(c, z, TAU2)
        assert abs(lhs - rhs) < 1e-13


def test_quasi_periodicity():
    import numpy as np

    a = char((1, 0), (1, 1))
    af, bf = a.as_fractions()
    z = (0.1 + 0.05j, -0.2 + 0.1j)
    T = np.array(TAU2)
    for n, m in [((1, 0), (0, 1)), ((1, -1), (2, 0)), ((0, 2), (1, 1))]:
        zs = tuple(z[i] + complex(T[i] @ np.array(n)) + m[i] for i in range(2))
        lhs = th.theta_char(a, zs, TAU2, tol=1e-13)
        phase = sum(float(af[i]) * m[i] - float(bf[i]) * n[i] for i in range(2))
        ntn = complex(np.array(n) @ T @ np.array(n))
        nz = sum(n[i] * z[i] for i in range(2))
        rhs = (
            cmath.exp(2j * math.pi * phase)
            * cmath.exp(-1j * math.pi * (ntn + 2 * nz))
            * th.theta_char(a, z, TAU2, tol=1e-13)
        )
        assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_unreduced_top_shift_is_free():
    base = th.thetanull(char((1, 0), (1, 1)), TAU2)
    shifted = th.theta_unreduced((3, -2), (1, 1), 2, (0, 0), TAU2)
    assert abs(shifted - base) < 1e-15


def test_unreduced_bottom_shift_phase():
    # theta[a; b+m] = exp(2 pi i a^t m) theta[a; b]
    base = th.thetanull(char((1, 0), (1, 1)), TAU2)
    shifted = th.theta_unreduced((1, 0), (3, 1), 2, (0, 0), TAU2)
    phase = cmath.exp(2j * math.pi * 0.5)
    assert abs(shifted - phase * base) < 1e-15
    shifted2 = th.theta_unreduced((1, 0), (1, 3), 2, (0, 0), TAU2)
    assert abs(shifted2 - base) < 1e-15


def test_extended_matches_double():
    v_d = th.thetanull(char((1, 0), (0, 0)), TAU2)
    with nm.precision("extended"):
        v_e = th.thetanull(char((1, 0), (0, 0)), TAU2)
        v_e = complex(float(mpmath.re(v_e)), float(mpmath.im(v_e)))
    assert abs(v_d - v_e) < 1e-14


def test_deterministic():
    a = th.theta_char(char((1, 1), (0, 0)), (0.1j, 0.2), TAU2)
    b = th.theta_char(char((1, 1), (0, 0)), (0.1j, 0.2), TAU2)
    assert a == b


def test_tightening_tol_converges():
    c = char((0, 1), (0, 0))
    ref = brute_theta(*c.as_fractions(), (0, 0), TAU2, box=14)
    prev_err = None
    for tol in (1e-6, 1e-9, 1e-12):
        err = abs(th.thetanull(c, TAU2, tol=tol) - ref)
        assert err < tol
        if prev_err is not None:
            assert err <= prev_err + 1e-15
        prev_err = err


def test_truncation_radius_monotone():
    eye = ((1j, 0), (0, 1j))
    r1 = th.truncation_radius(eye, 0.0, 1e-6)
    r2 = th.truncation_radius(eye, 0.0, 1e-12)
    assert r2 >= r1
    quarter = ((0.25j, 0), (0, 0.25j))
    assert th.truncation_radius(quarter, 0.0, 1e-12) >= r2
    double = ((2j, 0), (0, 2j))
    assert th.truncation_radius(double, 0.0, 1e-12) <= r2


def test_truncation_radius_tail_oracle():
    # brute tail check: sum of |term| beyond R out to 3R stays under tol
    eye = ((1j, 0), (0, 1j))
    tol = 1e-14
    r = th.truncation_radius(eye, 0.0, tol)
    tail = 0.0
    rng = int(3 * r)
    for u1 in range(-rng, rng + 1):
        for u2 in range(-rng, rng + 1):
            n2 = u1 * u1 + u2 * u2
            if n2 > r * r:
                tail += math.exp(-math.pi * n2)
    assert tail < tol


def test_truncation_radius_rejects_bad_input():
    with pytest.raises(ValidationError):
        th._radius_from_lambda(-1.0, 0.0, 1e-12, 2)
    with pytest.raises(NumericalError):
        th._radius_from_lambda(1e-9, 0.0, 1e-12, 2)


def test_validation_errors():
    with pytest.raises(ValidationError):
        th.theta_char(char((1,), (0,)), (0, 0), TAU2)  # genus mismatch
    with pytest.raises(ValidationError):
        th.theta_char(char((1, 0), (0, 0)), (0,), TAU2)  # z length
    with pytest.raises(ValidationError):
        th.thetanull(zero_char(2), ((1j, 0.5), (0.2, 1j)))  # not symmetric


def test_prop4_candidate_counts():
    allc = all_half_characteristics(2)
    assert len(th.prop4_candidates(allc[1], allc[5])) == 6
    allc3 = all_half_characteristics(3)
    assert len(th.prop4_candidates(allc3[1], allc3[9])) == 20


def test_prop4_rejects_zero_h():
    with pytest.raises(ValidationError):
        th.prop4_candidates(zero_char(2), zero_char(2))


def test_prop4_residuals_random_pairs():
    rng = random.Random(41)
    allc = all_half_characteristics(2)
    pairs = [(a, h) for a in allc for h in allc if not h.is_zero()]
    for a, h in rng.sample(pairs, 12):
        r1, r2 = th.prop4_residuals(TAU2, a, h)
        assert r1 < 1e-12
        assert r2 < 1e-12


def test_prop4_residuals_g3():
    rng = random.Random(43)
    allc = all_half_characteristics(3)
    pairs = [(a, h) for a in allc for h in allc if not h.is_zero()]
    for a, h in rng.sample(pairs, 4):
        r1, r2 = th.prop4_residuals(TAU3, a, h)
        assert r1 < 1e-12
        assert r2 < 1e-12


def test_fundamental_identities_direct():
    chars = {
        1: ((0, 0), (0, 0)),
        2: ((0, 0), (1, 1)),
        3: ((0, 0), (1, 0)),
        4: ((0, 0), (0, 1)),
        5: ((1, 0), (0, 0)),
        6: ((1, 0), (0, 1)),
        7: ((0, 1), (0, 0)),
        8: ((1, 1), (0, 0)),
        9: ((0, 1), (1, 0)),
        10: ((1, 1), (1, 1)),
    }
    T = {i: th.thetanull(char(t, b), TAU2) for i, (t, b) in chars.items()}
    checks = [
        T[5] ** 2 * T[6] ** 2 - (T[1] ** 2 * T[4] ** 2 - T[2] ** 2 * T[3] ** 2),
        T[5] ** 4 + T[6] ** 4 - (T[1] ** 4 - T[2] ** 4 - T[3] ** 4 + T[4] ** 4),
        T[7] ** 2 * T[9] ** 2 - (T[1] ** 2 * T[3] ** 2 - T[2] ** 2 * T[4] ** 2),
        T[7] ** 4 + T[9] ** 4 - (T[1] ** 4 - T[2] ** 4 + T[3] ** 4 - T[4] ** 4),
        T[8] ** 2 * T[10] ** 2 - (T[1] ** 2 * T[2] ** 2 - T[3] ** 2 * T[4] ** 2),
        T[8] ** 4 + T[10] ** 4 - (T[1] ** 4 + T[2] ** 4 - T[3] ** 4 - T[4] ** 4),
    ]
    for val in checks:
        assert abs(val) < 1e-13
