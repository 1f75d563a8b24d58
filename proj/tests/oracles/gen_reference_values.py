#!/usr/bin/env python3
# Generates the frozen reference values used in the C++ test suites.
# Everything here is computed with mpmath at 50 digits, independently of the
# C++ implementations, then pasted into the tests as literals.
#
# Run:  python3 gen_reference_values.py

import mpmath as mp

mp.mp.dps = 50


def p_reg(a, x):
    # regularized lower incomplete gamma P(a,x)
    return mp.gammainc(a, 0, x, regularized=True)


def chi_cdf(d, r):
    return p_reg(mp.mpf(d) / 2, mp.mpf(r) ** 2 / 2)


def ball_radius(d, c):
    # radius with gaussian ball volume c in R^d
    return mp.findroot(lambda r: chi_cdf(d, r) - c, mp.sqrt(d))


def sphere_area_coeff(d):
    # |S^{d-1}|
    return 2 * mp.pi ** (mp.mpf(d) / 2) / mp.gamma(mp.mpf(d) / 2)


def ball_boundary_area(d, r):
    # ambient-normalized gaussian area of the sphere of radius r in R^d
    return sphere_area_coeff(d) * r ** (d - 1) * (2 * mp.pi) ** (-mp.mpf(d) / 2) * mp.e ** (-r ** 2 / 2)


def s17(x):
    return mp.nstr(x, 17)


print("== regularized incomplete gamma P(a,x) ==")
cases = [(0.5, 0.1), (0.5, 3.0), (1.5, 1.0), (1.5, 2.366), (2.5, 1.0),
         (5.0, 4.0), (12.5, 20.0), (50.0, 45.0), (200.5, 190.0),
         (200.5, 210.0), (3.0, 1e-8), (200.5, 400.0), (0.5, 1e-12)]
for a, x in cases:
    print(f"  P({a}, {x}) = {s17(p_reg(mp.mpf(a), mp.mpf(x)))}")

print("== chi CDF / medians ==")
for d in [1, 2, 3, 4, 25, 100, 400]:
    r = ball_radius(d, mp.mpf(1) / 2)
    print(f"  d={d}: median radius = {s17(r)}  r^2 = {s17(r ** 2)}")

print("== normal quantile ==")
t = mp.findroot(lambda u: mp.ncdf(u) - mp.mpf('0.75'), 0.7)
print(f"  Phi^-1(0.75) = {s17(t)}")
print(f"  strip area 2*phi(t) = {s17(2 * mp.npdf(t))}")

print("== measure-1/2 ball boundary areas (ambient normalization) ==")
for d in [1, 2, 3, 4, 25, 100, 400]:
    if d == 1:
        t = mp.findroot(lambda u: mp.ncdf(u) - mp.mpf('0.75'), 0.7)
        a = 2 * mp.npdf(t)
    else:
        r = ball_radius(d, mp.mpf(1) / 2)
        a = ball_boundary_area(d, r)
    print(f"  d={d}: area = {s17(a)}")
print(f"  limit 1/sqrt(pi) = {s17(1 / mp.sqrt(mp.pi))}")

print("== R^2 ball closed form ==")
r2 = mp.sqrt(2 * mp.log(2))
print(f"  r = sqrt(2 ln 2) = {s17(r2)}")
print(f"  area = r*exp(-r^2/2) = {s17(r2 * mp.e ** (-r2 ** 2 / 2))}")

print("== Edgeworth check values ==")
print(f"  P(chi2_100 <= 100) = {s17(p_reg(50, 50))}")
print(f"  P(chi2_25 <= 25)   = {s17(p_reg(mp.mpf(25) / 2, mp.mpf(25) / 2))}")
print(f"  sqrt(2)/3          = {s17(mp.sqrt(2) / 3)}")
print(f"  phi(0)             = {s17(mp.npdf(0))}")

print("== cylinder perimeter spot values ==")
# |S^k| r^k (2pi)^{-(k+1)/2} e^{-r^2/2}
for (r, k) in [(1.0, 1), (1.5, 2), (2.0, 0)]:
    r = mp.mpf(r)
    val = sphere_area_coeff(k + 1) * r ** k * (2 * mp.pi) ** (-mp.mpf(k + 1) / 2) * mp.e ** (-r ** 2 / 2)
    print(f"  k={k} r={r}: {s17(val)}")

print("== erf spot values ==")
for x in [0.1, 0.75, 2.0, 5.0]:
    print(f"  erf({x}) = {s17(mp.erf(mp.mpf(x)))}")
