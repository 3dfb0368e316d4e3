#!/usr/bin/env python3
"""Emit Taylor coefficients (in z = p - 1/2) of the Riemann-Siegel
correction functions C0, C1, C2 as a C++ header.

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
    C0 = Psi
    C1 = -Psi'''/(96 pi^2)
    C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4)

Usage: gen_rs_coefficients.py > include/zetalab/detail/rs_coefficients.hpp
"""
import mpmath as mp

mp.mp.dps = 80
ORDER = 72
TERMS = 40


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


# Taylor coefficients of psi around 1/2: psi(1/2 + z) = sum c[k] z^k
c = mp.taylor(psi, mp.mpf(1) / 2, ORDER)


def deriv_series(coeffs, order):
    """Coefficients of the order-th derivative, as a series in z."""
    out = []
    for k in range(len(coeffs) - order):
        f = mp.mpf(1)
        for j in range(order):
            f *= (k + order - j)
        out.append(coeffs[k + order] * f)
    return out


pi = mp.pi
d2 = deriv_series(c, 2)
d3 = deriv_series(c, 3)
d6 = deriv_series(c, 6)
c0 = c[:TERMS]
c1 = [-v / (96 * pi ** 2) for v in d3[:TERMS]]
c2 = [d2[k] / (64 * pi ** 2) + d6[k] / (18432 * pi ** 4) for k in range(TERMS)]


def emit(name, coeffs):
    print(f"inline constexpr std::array<double, {len(coeffs)}> {name} = {{")
    for v in coeffs:
        # odd coefficients vanish by symmetry; drop differentiation noise
        v = v if abs(v) > mp.mpf(10) ** -40 else mp.mpf(0)
        print(f"    {mp.nstr(v, 20, min_fixed=-1, max_fixed=-1) if v != 0 else '0.0'},")
    print("};")


print("// Generated by tools/gen_rs_coefficients.py. Do not edit.")
print("#pragma once")
print()
print("#include <array>")
print()
print("namespace zetalab::detail {")
print()
print("// Riemann-Siegel correction terms as power series in z = p - 1/2.")
emit("kRsC0", c0)
print()
emit("kRsC1", c1)
print()
emit("kRsC2", c2)
print()
print("}  // namespace zetalab::detail")
