import numpy as np
import mpmath as mp

from theta_cyclic.hyperelliptic import (
    curve, picard_curve, septic_curve, period_matrix, riemann_bilinear_defect,
    char_of_subset, branch_subset, odd_branch_indices,
)
from theta_cyclic.characteristics import char, is_even
from theta_cyclic.theta_eval import thetanull

def tau_of(c, tol=1e-10):
    p = period_matrix(c, tol)
    return p, np.array(p.tau.entries, dtype=complex)

# --- genus 1 sanity: y^2 = x(x-1)(x-4), k^2 = 1/4 ------------------------
c1 = curve([0.0, 1.0, 4.0])
p1, t1 = tau_of(c1)
K = mp.ellipk(mp.mpf(1)/4); Kp = mp.ellipk(mp.mpf(3)/4)
tau_ref = complex(1j*Kp/K)
print("g1 |tau - ref| =", abs(t1[0,0] - tau_ref))

# --- genus 2 reference: Picard (2,3,5) ------------------------------------
c2 = picard_curve(2.0, 3.0, 5.0)
p2, t2 = tau_of(c2)
print("g2 bilinear =", riemann_bilinear_defect(p2))

def odd_null_max(c, p):
    g = c.genus
    worst = 0.0
    for i in range(1, 2*g+2):
        for j in range(i+1, 2*g+3):
            T = (i, j)
            e = char_of_subset(branch_subset(c, T))
            if not is_even(e):
                v = thetanull(e, p.tau, 1e-14)
                worst = max(worst, abs(v))
    return worst

print("g2 max odd null =", odd_null_max(c2, p2))

# recovery for genus 2: lambda = th1^2 th3^2 / (th2^2 th4^2) style checks
# (use the generic genus-3 style: skip, Picard recovery tested separately)

# --- genus 3 reference: (2,3,5,7,11) --------------------------------------
c3 = septic_curve(2.0, 3.0, 5.0, 7.0, 11.0)
p3, t3 = tau_of(c3)
print("g3 bilinear =", riemann_bilinear_defect(p3))
print("g3 Im eigs =", np.linalg.eigvalsh(t3.imag))
print("g3 max odd null =", odd_null_max(c3, p3))

def th_sq(top, bot, tau):
    e = char(top, bot)
    return thetanull(e, tau, 1e-14) ** 2

# squared thetanulls used by the recovery formulas, indexed by table row
NUM = {
    1: (0,0,0,0,0,0), 6: (1,1,0,0,0,1), 7: (0,1,1,1,0,0), 9: (0,0,0,0,0,1),
    11: (1,1,0,1,1,0), 13: (0,0,0,1,1,0), 15: (0,1,1,0,1,1), 21: (0,0,0,0,1,0),
    24: (1,0,1,1,0,1), 26: (0,0,0,1,1,1), 31: (1,0,1,0,1,0), 34: (0,0,0,1,0,1),
}
sq = {k: th_sq(v[:3], v[3:], p3.tau) for k, v in NUM.items()}
a1 = sq[31]*sq[21]/(sq[34]*sq[24])
a2 = sq[31]*sq[13]/(sq[9]*sq[24])
a3 = sq[11]*sq[31]/(sq[24]*sq[6])
a4 = sq[21]*sq[7]/(sq[15]*sq[34])
a5 = sq[13]*sq[1]/(sq[26]*sq[9])
print("g3 recovery:", a1, a2, a3, a4, a5)

e12 = char((1,1,1), (1,0,1))
print("g3 |th12| =", abs(thetanull(e12, p3.tau, 1e-14)))

# --- perturbed genus 3 configs (both half-planes, complex noise) -----------
rng = np.random.default_rng(7)
for trial in range(6):
    noise = (rng.standard_normal(5) + 1j*rng.standard_normal(5)) * 0.05
    pts = np.array([2.0, 3.0, 5.0, 7.0, 11.0]) + noise
    try:
        cp = septic_curve(*pts)
        pp, tp = tau_of(cp, 1e-9)
        bil = riemann_bilinear_defect(pp)
        onull = odd_null_max(cp, pp)
        sqp = {k: th_sq(v[:3], v[3:], pp.tau) for k, v in NUM.items()}
        r1 = sqp[31]*sqp[21]/(sqp[34]*sqp[24])
        print(f"perturb {trial}: bil={bil:.2e} odd={onull:.2e} "
              f"|a1-true|={abs(r1-pts[0]):.2e}")
    except Exception as exc:
        print(f"perturb {trial}: FAILED {type(exc).__name__}: {exc}")

# specifically the downward perturbation of the turn point
pts = [2.0, 3.0, 5.0, 7.0, 11.0 - 0.01j]
cp = septic_curve(*pts)
pp, tp = tau_of(cp, 1e-9)
sqp = {k: th_sq(v[:3], v[3:], pp.tau) for k, v in NUM.items()}
r1 = sqp[31]*sqp[21]/(sqp[34]*sqp[24])
print("turn-down: bil=%.2e |a1-true|=%.2e" %
      (riemann_bilinear_defect(pp), abs(r1 - pts[0])))

# and upward
pts = [2.0, 3.0, 5.0, 7.0, 11.0 + 0.01j]
cp = septic_curve(*pts)
pp, tp = tau_of(cp, 1e-9)
sqp = {k: th_sq(v[:3], v[3:], pp.tau) for k, v in NUM.items()}
r1 = sqp[31]*sqp[21]/(sqp[34]*sqp[24])
print("turn-up:   bil=%.2e |a1-true|=%.2e" %
      (riemann_bilinear_defect(pp), abs(r1 - pts[0])))

# genus 2 perturbed
for trial in range(4):
    noise = (rng.standard_normal(3) + 1j*rng.standard_normal(3)) * 0.05
    lam, mu, nu = np.array([2.0, 3.0, 5.0]) + noise
    try:
        cp = picard_curve(lam, mu, nu)
        pp, tp = tau_of(cp, 1e-9)
        print(f"g2 perturb {trial}: bil={riemann_bilinear_defect(pp):.2e} "
              f"odd={odd_null_max(cp, pp):.2e}")
    except Exception as exc:
        print(f"g2 perturb {trial}: FAILED {type(exc).__name__}: {exc}")
