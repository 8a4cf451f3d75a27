# Probe: what dictionary does a permuted-chain frame actually satisfy?
# g=1, curve y^2 = x(x-1)(x-4). Enumerations E1=(0,1,4), E2=(1,0,4).
# For each, integrate the chain in that order, sign-search the basis,
# and evaluate the classical lambda = th[0;1]^4 / th[0;0]^4 ratio
# (Jacobi: lambda = theta_2^4/theta_3^4 at tau in the frame where
# y^2 = x(x-1)(x-lam^{-1})-style Legendre normalization holds).
import numpy as np

from theta_cyclic.characteristics import char
from theta_cyclic.hyperelliptic import _integrate_chain, _oriented_symplectic_basis
from theta_cyclic.theta_eval import thetanull


def frame_tau(points):
    I, err = _integrate_chain([complex(p) for p in points], 1, 1e-12)
    A, B, bil = _oriented_symplectic_basis(2.0 * I, 1)
    tau = np.linalg.solve(A, B)
    return complex(tau[0, 0]), bil


def ratios(tau):
    t = np.array([[tau]])
    th00 = thetanull(char((0,), (0,)), t)
    th01 = thetanull(char((0,), (1,)), t)
    th10 = thetanull(char((1,), (0,)), t)
    return {
        "[0;1]^4/[0;0]^4": (th01 / th00) ** 4,
        "[1;0]^4/[0;0]^4": (th10 / th00) ** 4,
        "[1;0]^4/[0;1]^4": (th10 / th01) ** 4,
    }


def cross_ratio_orbit(e1, e2, e3):
    # lambda = (e2-e1)/(e3-e1) and its S3 orbit
    lam = (e2 - e1) / (e3 - e1)
    return sorted(
        {round(v, 10) for v in
         (lam, 1 - lam, 1 / lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam)},
        key=lambda z: (z.real if hasattr(z, "real") else z),
    )


for name, pts in [("E1 (0,1,4)", [0, 1, 4]), ("E2 (1,0,4)", [1, 0, 4])]:
    tau, bil = frame_tau(pts)
    print(f"{name}: tau = {tau:.12f}  bil = {bil:.1e}")
    for k, v in ratios(tau).items():
        print(f"    {k} = {v:.12f}")
print("cross-ratio orbit of (0,1,4):", cross_ratio_orbit(0.0, 1.0, 4.0))
