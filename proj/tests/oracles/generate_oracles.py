#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath at 50 digits.

Writes tests/unit/oracle_values.hpp, or the path given as the first argument.
Every value here comes from an implementation that shares no code with the
library: series or quadrature in arbitrary precision, or scipy for the
Kolmogorov distribution.
"""

import sys
from pathlib import Path

import mpmath as mp
from scipy.special import kolmogorov

mp.mp.dps = 50
OUT = Path(__file__).resolve().parents[1] / "unit" / "oracle_values.hpp"


def ml_series(a, x):
    """E_a(-x) by direct summation, with working precision grown to cover cancellation."""
    with mp.workdps(60 + int(float(x) ** (1 / float(a)) / 2.3)):
        a, x = mp.mpf(a), mp.mpf(x)
        total, n = mp.mpf(0), 0
        while True:
            term = (-x) ** n / mp.gamma(1 + a * n)
            total += term
            if n > 10 and abs(term) < mp.mpf(10) ** -70:
                return +total
            n += 1


def ml_laplace(a, x):
    """E_a(-x) from its spectral representation, by quadrature in w = log(r t)."""
    a, x = mp.mpf(a), mp.mpf(x)
    t = x ** (1 / a)
    s, c = mp.sin(mp.pi * a), mp.cos(mp.pi * a)

    def f(w):
        r = mp.exp(w) / t
        return mp.exp(-mp.exp(w)) * s / mp.pi * r**a / (r ** (2 * a) + 2 * r**a * c + 1)

    # Tails beyond w = 6 (e^{-e^6} ~ 1e-175) and below lo (integrand ~ e^{a w}) are dropped.
    lt = mp.log(t)
    lo = min(lt, mp.mpf(-5)) - 175 / a
    pts = sorted({lo, lt - 5, lt, lt + 5, mp.mpf(-5), mp.mpf(0), mp.mpf(6)})
    pts = [p for p in pts if lo <= p <= 6]
    return mp.quad(f, pts)


def ml(a, x):
    if x ** (1 / a) <= 100:
        v = ml_series(a, x)
        w = ml_laplace(a, x)
        assert abs(v - w) < mp.mpf(10) ** -30, (a, x, v, w)
        return v
    return ml_laplace(a, x)


def kanter_b(a, u):
    a, u = mp.mpf(a), mp.mpf(u)
    return mp.sin(mp.pi * u) / (mp.sin(mp.pi * a * u) ** a * mp.sin(mp.pi * (1 - a) * u) ** (1 - a))


def branch_cdf(rho, x):
    rho = mp.mpf(rho)
    c = mp.pi * rho / mp.sin(mp.pi * rho)
    f = lambda y: 1 / (y * y + 2 * c * mp.cos(mp.pi * rho) * y + c * c)
    return mp.quad(f, [0, x])


def y_alpha_integrals(a):
    a = mp.mpf(a)
    k = 1 / a
    f = lambda x: -mp.sin(mp.pi * k) * x ** (k - 2) * (1 + x) / (mp.pi * (x ** (2 * k) - 2 * x**k * mp.cos(mp.pi * k) + 1))
    # [1, inf) mapped to (0, 1] by x = 1/y; then t = w^q with q = 1/(k-1) removes the
    # t^{k-2} endpoint singularities, which plain tanh-sinh resolves only to ~1e-6.
    q = 1 / (k - 1)

    def smooth(h):
        return mp.quad(lambda w: h(w**q) * q * w ** (q - 1), [0, 1])

    mass = smooth(f) + smooth(lambda y: f(1 / y) / y**2)
    mean = smooth(lambda x: x * f(x)) + smooth(lambda y: f(1 / y) / y**3)
    return mass, mean


def num(v):
    return mp.nstr(mp.mpf(v), 20, min_fixed=-5, max_fixed=5)


def main():
    lines = [
        "#ifndef STABLEORDERS_TESTS_ORACLE_VALUES_HPP",
        "#define STABLEORDERS_TESTS_ORACLE_VALUES_HPP",
        "",
        "// Generated by tests/oracles/generate_oracles.py; do not edit by hand.",
        "",
        "namespace oracle {",
        "",
        "struct Point2 {",
        "  double a, x, value;",
        "};",
        "",
    ]

    ml_rows = []
    for a in ["0.1", "0.3", "0.5", "0.7", "0.9"]:
        for x in ["0.01", "0.5", "2", "5", "30", "1000"]:
            ml_rows.append((a, x, ml(mp.mpf(a), mp.mpf(x))))
    lines.append("// E_a(-x).")
    lines.append("inline constexpr Point2 kMittagLeffler[] = {")
    lines += [f"    {{{a}, {x}, {num(v)}}}," for a, x, v in ml_rows]
    lines += ["};", ""]

    kb = [(a, u, kanter_b(mp.mpf(a), mp.mpf(u))) for a in ["0.3", "0.5", "0.8"] for u in ["0.001", "0.25", "0.5", "0.9"]]
    lines.append("// Kanter function b_a(u).")
    lines.append("inline constexpr Point2 kKanterB[] = {")
    lines += [f"    {{{a}, {u}, {num(v)}}}," for a, u, v in kb]
    lines += ["};", ""]

    cb = [(r, x, branch_cdf(mp.mpf(r), mp.mpf(x))) for r in ["0.3", "0.5", "0.7"] for x in ["0.1", "1", "3", "50"]]
    lines.append("// CDF of c_rho X+(1, rho), by quadrature of its density.")
    lines.append("inline constexpr Point2 kCauchyBranchCdf[] = {")
    lines += [f"    {{{r}, {x}, {num(v)}}}," for r, x, v in cb]
    lines += ["};", ""]

    ks = [(lam, kolmogorov(lam)) for lam in [0.3, 0.6, 1.0, 1.36, 2.0]]
    lines.append("// Kolmogorov survival Q(lambda) from scipy.")
    lines.append("inline constexpr double kKolmogorov[][2] = {")
    lines += [f"    {{{lam}, {float(v)!r}}}," for lam, v in ks]
    lines += ["};", ""]

    ya = []
    for a in ["0.6", "0.7", "0.9"]:
        mass, mean = y_alpha_integrals(mp.mpf(a))
        ya.append((a, mass, mean))
    lines.append("// {a, mass, mean} of the Y_a density.")
    lines.append("inline constexpr double kYAlpha[][3] = {")
    lines += [f"    {{{a}, {num(m)}, {num(e)}}}," for a, m, e in ya]
    lines += ["};", ""]

    half = mp.mpf(1) / (4 * mp.erfinv(mp.mpf("0.5")) ** 2)
    ceiling = mp.erfinv(mp.mpf("0.5")) ** 2
    lines.append(f"inline constexpr double kMedianHalfStable = {num(half)};")
    lines.append(f"inline constexpr double kMedianSCeiling = {num(ceiling)};")
    lines.append(f"inline constexpr double kE_half_minus_one = {num(mp.e * mp.erfc(1))};")
    lines.append(f"inline constexpr double kModeThreshold = {num(1 / (1 + mp.log(2)))};")

    # Gamma-ratio targets E[Z_{p/n}^{-ps}] = Gamma(1+ns)/Gamma(1+ps).
    gr = [(n, p, s, mp.gamma(1 + n * mp.mpf(s)) / mp.gamma(1 + p * mp.mpf(s)))
          for n, p in [(2, 1), (5, 2), (7, 5)] for s in ["0.25", "1", "2"]]
    lines += ["", "struct PlanMoment {", "  int n, p;", "  double s, value;", "};"]
    lines.append("inline constexpr PlanMoment kPlanMoments[] = {")
    lines += [f"    {{{n}, {p}, {s}, {num(v)}}}," for n, p, s, v in gr]
    lines += ["};", ""]

    # Joe identity moment at (beta, alpha) = (0.3, 0.7).
    b, a = mp.mpf("0.3"), mp.mpf("0.7")
    joe = [(s, mp.gamma(1 + s) / (mp.gamma(1 + (1 - a) * s) * mp.gamma(1 + b * s))) for s in [mp.mpf("0.5"), 1, 2]]
    lines.append("inline constexpr double kJoeMoments[][2] = {")
    lines += [f"    {{{num(s)}, {num(v)}}}," for s, v in joe]
    lines += ["};", ""]

    # cxK limit at 0+ for (beta, alpha) = (0.2, 0.4).
    b, a = mp.mpf("0.2"), mp.mpf("0.4")
    cxk0 = b ** (1 - b) * (1 - b) ** b * mp.sin(mp.pi * a) / (a ** (1 - a) * (1 - a) ** a * mp.sin(mp.pi * b))
    lines.append(f"inline constexpr double kCxKLimitAtZero_02_04 = {num(cxk0)};")

    lines += ["", "}  // namespace oracle", "", "#endif", ""]
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else OUT
    out.write_text("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
