"""Reference values for the regression tests, evaluated directly from the
closed formulas with mpmath at 80 significant digits.

Run: python3 reference_values.py
The printed values are frozen in linforms_regression.rs and measures_regression.rs.
"""
from mpmath import mp, mpf, log, e, cbrt

mp.dps = 80


def arch(a1, a2, b1, b2, u, v, A, B):
    la, lb = log(A), log(B)
    E = 1 + min(la / log(mpf(a1) / a2), lb / log(mpf(b1) / b2))
    up = u / la + v / lb
    lu1 = max(log(up) + log(E), 600 + 150 * log(E))
    lu2 = max(log(up) + log(log(E)) + mpf("0.47"), 10 * log(E))
    b51 = -8550 * la * lb * lu1 * (4 + log(E)) / log(E) ** 3
    b52 = -mpf("35.1") * la * lb * lu2 ** 2 / log(E) ** 3
    return E, b51, b52


def bu(x1, y1, x2, y2, b, p, E, A1=None, A2=None):
    E = mpf(E)
    lp = log(p)
    la1 = log(A1) if A1 else max(log(abs(x1)), log(abs(y1)), E * lp)
    la2 = log(A2) if A2 else max(log(abs(x2)), log(abs(y2)), E * lp)
    bp = b / la2 + 1 / la1
    m = max(log(bp) + log(E * lp) + mpf("0.4"), 4 * E * lp, 5)
    return mpf("53.8") / (E ** 3 * lp ** 4) * m ** 2 * la1 * la2


ARCH = [
    ("arch_close_pair", (101, 100, 103, 102, 5, 7, 101, 103)),
    ("arch_small_b", (1001, 1000, 17, 16, 1, 1000, 1001, 17)),
    ("arch_u1_formula", (101, 100, 103, 102, mpf(10) ** 700, 1, 101, 103)),
    ("arch_u2_formula", (101, 100, 103, 102, mpf(10) ** 30, 7, 101, 103)),
    ("arch_rational_heights", (3, 2, 5, 4, 3, 4, mpf(10) ** 6 / 7, mpf(10) ** 6)),
]

BU = [
    ("bu_six", (6, 1, 11, 2, 3, 5, 1)),
    ("bu_fractional_e", (4, 1, 7, 5, 2, 3, mpf(3) / 4)),
    ("bu_log_branch", (4, 1, 7, 5, 1000, 3, 1)),
    ("bu_five_branch", (4, 1, 5, 1, 1, 3, 1)),
    ("bu_two", (5, 1, 13, 1, 3, 2, 2, 7, 20)),
]

if __name__ == "__main__":
    for name, args in ARCH:
        E, b51, b52 = arch(*args)
        print(f"{name}: E = {mp.nstr(E, 70)}")
        print(f"  bound_51 {mp.nstr(b51, 70)}")
        print(f"  bound_52 {mp.nstr(b52, 70)}")
    for name, args in BU:
        print(f"{name}: {mp.nstr(bu(*args), 70)}")
    # the instance with b1/b2 = 3/2 has E far below 15
    E, _, _ = arch(101, 100, 3, 2, 5, 7, 101, 3)
    print(f"arch_small_e: E = {mp.nstr(E, 70)}")
    # measures
    eta = 2 * log(5) / log(26)
    print("thm31(26,1,5,3):", mp.nstr(mpf("860.8") / eta, 70))
    print("eq61(26,1,5,3):", mp.nstr(861 / eta, 70))
    eta = 1 - log(9) / log(100)
    print("bm(109,100,5):", mp.nstr(2 / eta + 6 * cbrt(mpf(5) ** 5 * log(5) / log(100)), 70))
    eta = mpf(1) / 2
    n = mpf(10) ** 12
    print("thm21(100,90,1e12):", mp.nstr(mpf("35.1") / eta * max(log(2 * n) / (eta * log(100)), 10) ** 2, 70))
    print("eq53(100,90,100):", mp.nstr(21180 / eta * max(log(200 / log(100)) / (eta * log(100)) + 1, 372), 70))
    n = mpf(10) ** 400
    print("eq53(100,90,1e400):", mp.nstr(21180 / eta * max(log(2 * n / log(100)) / (eta * log(100)) + 1, 372), 70))
