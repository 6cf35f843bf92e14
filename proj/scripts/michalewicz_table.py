#!/usr/bin/env python3
"""Regenerates the Michalewicz term-maxima table in src/benchmarks.cpp.

The function (steepness m = 10) is separable, so its global minimum at
dimension d is minus the sum of the per-index maxima of

    g_i(x) = sin(x) * sin(i * x^2 / pi)^20   over [0, pi],  i = 1..64.

Each 1-D maximum is located by a dense scan followed by golden-section
refinement in 40-digit arithmetic, then rounded to double precision.
"""

from mpmath import mp, mpf, sin, sqrt, pi

mp.dps = 40
N_SCAN = 40000
MAX_DIM = 64


def term(i, x):
    return sin(x) * sin(i * x * x / pi) ** 20


def maximize(i):
    best_x, best_v = mpf(0), mpf(-1)
    for k in range(N_SCAN + 1):
        x = pi * k / N_SCAN
        v = term(i, x)
        if v > best_v:
            best_v, best_x = v, x
    a = max(mpf(0), best_x - pi / N_SCAN)
    b = min(pi, best_x + pi / N_SCAN)
    golden = (sqrt(mpf(5)) - 1) / 2
    for _ in range(220):
        c = b - golden * (b - a)
        d = a + golden * (b - a)
        if term(i, c) < term(i, d):
            a = c
        else:
            b = d
    x0 = (a + b) / 2
    return x0, term(i, x0)


def main():
    rows = [maximize(i) for i in range(1, MAX_DIM + 1)]
    print("kMichalewiczTermMax:")
    for j in range(0, MAX_DIM, 4):
        print("    " + ", ".join(mp.nstr(v, 17) for _, v in rows[j:j + 4]) + ",")
    print("kMichalewiczArgmax:")
    for j in range(0, MAX_DIM, 4):
        print("    " + ", ".join(mp.nstr(x, 17) for x, _ in rows[j:j + 4]) + ",")
    checks = {2: "-1.8013", 5: "-4.687658", 10: "-9.66015"}
    total = mpf(0)
    for i, (_, v) in enumerate(rows, start=1):
        total += v
        if i in checks:
            print(f"# f*(d={i}) = {mp.nstr(-total, 12)} (literature: {checks[i]})")


if __name__ == "__main__":
    main()
