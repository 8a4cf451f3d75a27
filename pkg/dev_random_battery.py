# Random-curve robustness battery for the period pipeline.
import numpy as np

from theta_cyclic.characteristics import char
from theta_cyclic.errors import NumericalError
from theta_cyclic.hyperelliptic import (
    curve,
    eps_map,
    period_matrix,
    picard_curve,
    septic_curve,
    vanishing_pattern,
)
from theta_cyclic.theta_eval import thetanull


def rand_points(rng, n, sep, box=4.0):
    while True:
        pts = rng.uniform(-box, box, n) + 1j * rng.uniform(-box, box, n)
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if abs(pts[i] - pts[j]) < sep:
                    ok = False
        if ok:
            return pts


def th_sq(top, bot, tau):
    v = thetanull(char(top, bot), tau)
    return v * v


def g3_recover(tau):
    n = {
        1: (0, 0, 0, 0, 0, 0), 6: (1, 1, 0, 0, 0, 1), 7: (0, 1, 1, 1, 0, 0),
        9: (0, 0, 0, 0, 0, 1), 11: (1, 1, 0, 1, 1, 0), 13: (0, 0, 0, 1, 1, 0),
        15: (0, 1, 1, 0, 1, 1), 21: (0, 0, 0, 0, 1, 0), 24: (1, 0, 1, 1, 0, 1),
        26: (0, 0, 0, 1, 1, 1), 31: (1, 0, 1, 0, 1, 0), 34: (0, 0, 0, 1, 0, 1),
    }
    s = {k: th_sq(v[:3], v[3:], tau) for k, v in n.items()}
    a1 = s[31] * s[21] / (s[34] * s[24])
    a2 = s[31] * s[13] / (s[9] * s[24])
    a3 = s[11] * s[31] / (s[24] * s[6])
    a4 = s[21] * s[7] / (s[15] * s[34])
    a5 = s[13] * s[1] / (s[26] * s[9])
    return np.array([a1, a2, a3, a4, a5])


def g2_recover(tau):
    # nu, mu, lam from squared-theta ratios in the stored frame
    t1 = th_sq((0, 0), (0, 0), tau)
    t2 = th_sq((0, 0), (1, 1), tau)
    t3 = th_sq((0, 0), (1, 0), tau)
    t4 = th_sq((0, 0), (0, 1), tau)
    t8 = th_sq((1, 1), (0, 0), tau)
    t10 = th_sq((1, 1), (1, 1), tau)
    lam = t1 * t3 / (t2 * t4)
    mu = t3 * t8 / (t4 * t10)
    nu = t1 * t8 / (t2 * t10)
    return np.array([lam, mu, nu])


rng = np.random.default_rng(20260816)

fails = 0
print("=== genus 2 random battery ===")
for trial in range(25):
    pts = rand_points(rng, 3, 0.1)
    c = picard_curve(*pts)
    try:
        p = period_matrix(c)
        tau = np.array(p.tau.entries, dtype=complex)
        got = g2_recover(tau)
        err = float(np.max(np.abs(got - pts)))
        eigs = np.linalg.eigvalsh(tau.imag)
        status = "ok " if err < 1e-8 else "BAD"
        if err >= 1e-8:
            fails += 1
        print(f"g2 {trial:2d}: {status} err={err:.2e} mineig={eigs[0]:.3f} "
              f"quad={p.quadratureError:.1e}")
    except NumericalError as exc:
        fails += 1
        print(f"g2 {trial:2d}: FAIL {exc}")

print("=== genus 3 random battery ===")
for trial in range(12):
    pts = rand_points(rng, 5, 0.2)
    c = septic_curve(*pts)
    try:
        p = period_matrix(c)
        tau = np.array(p.tau.entries, dtype=complex)
        got = g3_recover(tau)
        err = float(np.max(np.abs(got - pts)))
        eigs = np.linalg.eigvalsh(tau.imag)
        status = "ok " if err < 1e-7 else "BAD"
        if err >= 1e-7:
            fails += 1
        print(f"g3 {trial:2d}: {status} err={err:.2e} mineig={eigs[0]:.3f} "
              f"quad={p.quadratureError:.1e}")
    except NumericalError as exc:
        fails += 1
        print(f"g3 {trial:2d}: FAIL {exc}")

print(f"total failures: {fails}")
