"""Dev scratch: pin down Igusa invariant normalization and the L2 locus
coefficient empirically, using exact rational arithmetic."""

import itertools
import random
from fractions import Fraction

import numpy as np

# ---------------------------------------------------------------------------
# exact transvectants of binary forms
# form of order m: coeff list c[0..m], f = sum c[i] x^(m-i) z^i


def form_mul(f, g):
    m, n = len(f) - 1, len(g) - 1
    out = [Fraction(0)] * (m + n + 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def dx(f):
    m = len(f) - 1
    if m == 0:
        return [Fraction(0)]
    return [f[i] * (m - i) for i in range(m)]


def dz(f):
    m = len(f) - 1
    if m == 0:
        return [Fraction(0)]
    return [f[i + 1] * (i + 1) for i in range(m)]


def diff_xz(f, kx, kz):
    for _ in range(kx):
        f = dx(f)
    for _ in range(kz):
        f = dz(f)
    return f


def binom(n, k):
    from math import comb
    return comb(n, k)


def fact(n):
    from math import factorial
    return factorial(n)


def transvectant(f, g, k):
    m, n = len(f) - 1, len(g) - 1
    if k > m or k > n:
        raise ValueError("order too small")
    scale = Fraction(fact(m - k) * fact(n - k), fact(m) * fact(n))
    total = None
    for j in range(k + 1):
        term = form_mul(diff_xz(f, k - j, j), diff_xz(g, j, k - j))
        term = [c * ((-1) ** j) * binom(k, j) for c in term]
        total = term if total is None else [a + b for a, b in zip(total, term)]
    return [scale * c for c in total]


def clebsch_ABCD(f):
    f = [Fraction(c) for c in f]
    if len(f) == 6:  # quintic: root at infinity
        f = f + [Fraction(0)]
        f = [Fraction(0)] + f[:-1] if False else f
    assert len(f) == 7
    i4 = transvectant(f, f, 4)
    A = transvectant(f, f, 6)[0]
    B = transvectant(i4, i4, 4)[0]
    Delta = transvectant(i4, i4, 2)
    C = transvectant(i4, Delta, 4)[0]
    y1 = transvectant(f, i4, 4)
    y2 = transvectant(i4, y1, 2)
    y3 = transvectant(i4, y2, 2)
    D = transvectant(y3, y1, 2)[0]
    return A, B, C, D


# ---------------------------------------------------------------------------
# root-difference Igusa-Clebsch sums; roots as (alpha, beta) projective pairs

INF = "inf"


def proj(r):
    if r == INF:
        return (Fraction(1), Fraction(0))
    return (Fraction(r), Fraction(1))


def rdiff(p, q):
    return p[0] * q[1] - q[0] * p[1]


def matchings(idx):
    idx = list(idx)
    if not idx:
        yield []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        b = idx[k]
        rest = idx[1:k] + idx[k + 1:]
        for m in matchings(rest):
            yield [(a, b)] + m


def ic_from_roots(roots, lead=1):
    ps = [proj(r) for r in roots]
    assert len(ps) == 6
    lead = Fraction(lead)
    d = {}
    for i in range(6):
        for j in range(6):
            if i != j:
                d[(i, j)] = rdiff(ps[i], ps[j])
    # I2: 15 pairings
    I2 = sum(
        (d[m[0]] * d[m[1]] * d[m[2]]) ** 2
        for m in matchings(range(6))
    ) * lead ** 2
    # I4: 10 partitions into two triples
    I4 = Fraction(0)
    seen = set()
    for T in itertools.combinations(range(6), 3):
        Tc = tuple(sorted(set(range(6)) - set(T)))
        key = tuple(sorted((T, Tc)))
        if key in seen:
            continue
        seen.add(key)
        t1 = d[(T[0], T[1])] * d[(T[1], T[2])] * d[(T[2], T[0])]
        t2 = d[(Tc[0], Tc[1])] * d[(Tc[1], Tc[2])] * d[(Tc[2], Tc[0])]
        I4 += (t1 * t2) ** 2
    I4 *= lead ** 4
    # I6: 60 = 10 partitions x 6 bijections
    I6 = Fraction(0)
    seen = set()
    for T in itertools.combinations(range(6), 3):
        Tc = tuple(sorted(set(range(6)) - set(T)))
        key = tuple(sorted((T, Tc)))
        if key in seen:
            continue
        seen.add(key)
        t1 = d[(T[0], T[1])] * d[(T[1], T[2])] * d[(T[2], T[0])]
        t2 = d[(Tc[0], Tc[1])] * d[(Tc[1], Tc[2])] * d[(Tc[2], Tc[0])]
        for perm in itertools.permutations(Tc):
            cross = d[(T[0], perm[0])] * d[(T[1], perm[1])] * d[(T[2], perm[2])]
            I6 += (t1 * t2) ** 2 * cross ** 2
    I6 *= lead ** 6
    # I10: discriminant product
    I10 = Fraction(1)
    for i, j in itertools.combinations(range(6), 2):
        I10 *= d[(i, j)] ** 2
    I10 *= lead ** 10
    return I2, I4, I6, I10


# ---------------------------------------------------------------------------
# exact linear solve over Fractions


def exact_solve(M, rhs):
    M = [row[:] for row in M]
    rhs = rhs[:]
    n = len(M[0])
    m = len(M)
    piv = []
    r = 0
    for c in range(n):
        sel = None
        for rr in range(r, m):
            if M[rr][c] != 0:
                sel = rr
                break
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        rhs[r], rhs[sel] = rhs[sel], rhs[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        rhs[r] = rhs[r] / pv
        for rr in range(m):
            if rr != r and M[rr][c] != 0:
                f = M[rr][c]
                M[rr] = [x - f * y for x, y in zip(M[rr], M[r])]
                rhs[rr] = rhs[rr] - f * rhs[r]
        piv.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for k, c in enumerate(piv):
        sol[c] = rhs[k]
    # consistency
    for rr in range(r, m):
        assert rhs[rr] == 0, "inconsistent"
    return sol


def poly_from_roots(roots):
    f = [Fraction(1)]
    for r in roots:
        f = form_mul(f, [Fraction(1), -Fraction(r)])
    return f


def main():
    rng = random.Random(42)
    rows_I2, rhs_I2 = [], []
    rows_I4, rhs_I4 = [], []
    rows_I6, rhs_I6 = [], []
    rows_I10, rhs_I10 = [], []
    for _ in range(14):
        roots = rng.sample(range(-12, 13), 6)
        f = poly_from_roots(roots)
        A, B, C, D = clebsch_ABCD(f)
        I2, I4, I6, I10 = ic_from_roots(roots)
        rows_I2.append([A]); rhs_I2.append(I2)
        rows_I4.append([A * A, B]); rhs_I4.append(I4)
        rows_I6.append([A ** 3, A * B, C]); rhs_I6.append(I6)
        rows_I10.append([A ** 5, A ** 3 * B, A ** 2 * C, A * B * B, B * C, D])
        rhs_I10.append(I10)
    c2 = exact_solve(rows_I2, rhs_I2)
    c4 = exact_solve(rows_I4, rhs_I4)
    c6 = exact_solve(rows_I6, rhs_I6)
    c10 = exact_solve(rows_I10, rhs_I10)
    print("I2  =", c2, "* [A]")
    print("I4  =", c4, "* [A^2, B]")
    print("I6  =", c6, "* [A^3, AB, C]")
    print("I10 =", c10, "* [A^5, A^3B, A^2C, AB^2, BC, D]")

    def ic_from_coeffs(f):
        A, B, C, D = clebsch_ABCD(f)
        I2 = c2[0] * A
        I4 = c4[0] * A * A + c4[1] * B
        I6 = c6[0] * A ** 3 + c6[1] * A * B + c6[2] * C
        I10 = (c10[0] * A ** 5 + c10[1] * A ** 3 * B + c10[2] * A * A * C
               + c10[3] * A * B * B + c10[4] * B * C + c10[5] * D)
        return I2, I4, I6, I10

    def J_ladder(I2, I4, I6, I10):
        J2 = I2 / 8
        J4 = (4 * J2 ** 2 - I4) / 96
        J6 = (8 * J2 ** 3 - 160 * J2 * J4 - I6) / 576
        J10 = I10 / 4096
        return J2, J4, J6, J10

    def D8val(J2, J4, J6, J10):
        return (1706 * J4 ** 2 * J2 ** 2 + 2560 * J4 ** 3 + 27 * J4 * J2 ** 4
                - 81 * J2 ** 3 * J6 - 14880 * J2 * J4 * J6 + 28800 * J6 ** 2)

    def D12val(J2, J4, J6, J10):
        p1 = (-J4 * J2 ** 4 + 12 * J2 ** 3 * J6 - 52 * J4 ** 2 * J2 ** 2
              + 80 * J4 ** 3 + 960 * J2 * J4 * J6 - 3600 * J6 ** 2)
        p2 = (864 * J10 * J2 ** 5 + 3456000 * J10 * J4 ** 2 * J2
              - 43200 * J10 * J4 * J2 ** 3 - 2332800000 * J10 ** 2
              - J4 ** 2 * J2 ** 6 - 768 * J4 ** 4 * J2 ** 2
              + 48 * J4 ** 3 * J2 ** 4 + 4096 * J4 ** 5)
        return p1, p2

    # sanity: dual routes agree on a quintic (root at infinity)
    roots5 = [0, 1, 2, 3, 6]
    f5 = poly_from_roots(roots5)  # len 6 quintic
    ic_a = ic_from_coeffs(f5)
    ic_b = ic_from_roots(roots5 + [INF])
    print("quintic dual route match:", ic_a == ic_b)

    # D8 family y^2 = x(x^4 + a x^2 + 1)
    print("\nD8 family x(x^4+ax^2+1):")
    for a in (Fraction(3), Fraction(7, 2), Fraction(-5)):
        f = [Fraction(1), 0, a, 0, Fraction(1), 0]
        J = J_ladder(*ic_from_coeffs(f))
        print("  a =", a, " D8 =", D8val(*J), " D12 =", D12val(*J))

    # D12 family y^2 = x^6 + a x^3 + 1
    print("\nD12 family x^6+ax^3+1:")
    for a in (Fraction(3), Fraction(7, 2), Fraction(-5)):
        f = [Fraction(1), 0, 0, a, 0, 0, Fraction(1)]
        J = J_ladder(*ic_from_coeffs(f))
        print("  a =", a, " D12 =", D12val(*J), " D8 =", D8val(*J))

    # L2 equation with unknown coefficient t on J4^3 J6^3
    def L2val(J2, J4, J6, J10, tcoef):
        return (
            8748 * J10 * J2 ** 4 * J6 ** 2
            - 507384000 * J10 ** 2 * J4 ** 2 * J2
            - 19245600 * J10 ** 2 * J4 * J2 ** 3
            - 592272 * J10 * J4 ** 4 * J2 ** 2
            + 77436 * J10 * J4 ** 3 * J2 ** 4
            - 81 * J2 ** 3 * J6 ** 4
            - 3499200 * J10 * J2 * J6 ** 3
            + 4743360 * J10 * J4 ** 3 * J2 * J6
            - 870912 * J10 * J4 ** 2 * J2 ** 3 * J6
            + 3090960 * J10 * J4 * J2 ** 2 * J6 ** 2
            - 78 * J2 ** 5 * J4 ** 5
            - 125971200000 * J10 ** 3
            + 384 * J4 ** 6 * J6
            + 41472 * J10 * J4 ** 5
            + 159 * J4 ** 6 * J2 ** 3
            - 236196 * J10 ** 2 * J2 ** 5
            - 80 * J4 ** 7 * J2
            - 47952 * J2 * J4 * J6 ** 4
            + 104976000 * J10 ** 2 * J2 ** 2 * J6
            - 1728 * J4 ** 5 * J2 ** 2 * J6
            + 6048 * J4 ** 4 * J2 * J6 ** 2
            - 9331200 * J10 * J4 ** 2 * J6 ** 2
            + 12 * J2 ** 6 * J4 ** 3 * J6
            + 29376 * J2 ** 2 * J4 ** 2 * J6 ** 3
            - 8910 * J2 ** 3 * J4 ** 3 * J6 ** 2
            - 2099520000 * J10 ** 2 * J4 * J6
            + 31104 * J6 ** 5
            + tcoef * J4 ** 3 * J6 ** 3
            - J2 ** 7 * J4 ** 4
            - 5832 * J10 * J2 ** 5 * J4 * J6
            - 54 * J2 ** 5 * J4 ** 2 * J6 ** 2
            + 108 * J2 ** 4 * J4 * J6 ** 3
            + 972 * J10 * J2 ** 6 * J4 ** 2
            + 1332 * J2 ** 4 * J4 ** 4 * J6
        )

    # solve tcoef from an on-locus curve (a3 = a1 a2)
    print("\nL2 coefficient solve:")
    for trip in ((2, 3, 6), (3, 5, 15), (Fraction(5, 2), 4, 10)):
        a1, a2, a3 = (Fraction(x) for x in trip)
        J = J_ladder(*ic_from_roots([0, 1, a1, a2, a3, INF]))
        base = L2val(*J, Fraction(0))
        mono = J[1] ** 3 * J[2] ** 3
        print("  triple", trip, " tcoef =", -base / mono if mono else "mono=0")

    # the generic curve should be off the locus
    Jg = J_ladder(*ic_from_roots([0, 1, 2, 3, 5, INF]))
    for t in (Fraction(-6912), Fraction(-27648)):
        print("  (2,3,5) L2 with t =", t, ":", L2val(*Jg, t) != 0)

    # special curves
    print("\nspecial curves:")
    for name, f in (
        ("x^5-x", [Fraction(1), 0, 0, 0, Fraction(-1), 0]),
        ("x^6-1", [Fraction(1), 0, 0, 0, 0, 0, Fraction(-1)]),
        ("x^6-x", [Fraction(1), 0, 0, 0, 0, Fraction(-1), 0]),
        ("x^6+x^3+1ish D12 rep a=2", [Fraction(1), 0, 0, Fraction(2), 0, 0, Fraction(1)]),
    ):
        J = J_ladder(*ic_from_coeffs(f))
        l2_6912 = L2val(*J, Fraction(-6912))
        l2_27648 = L2val(*J, Fraction(-27648))
        print(" ", name, "J10 =", J[3])
        print("    L2(-6912) == 0:", l2_6912 == 0, "  L2(-27648) == 0:", l2_27648 == 0)
        print("    D8 == 0:", D8val(*J) == 0, "  D12 ==", D12val(*J))


if __name__ == "__main__":
    main()
