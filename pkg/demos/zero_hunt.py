#!/usr/bin/env python3
"""Hunt the low-lying zeros of Z(t) and check them against the counting formula.

Z(t) is real on the critical line and flips sign exactly at the zeros,
so a uniform grid plus bisection finds every zero below a given height.
The counting formula says how many there should be; the scan refuses to
return a table that disagrees with it by more than one.
"""

import math

from rzs import count_zeros, scan_zeros, z_function

T_MAX = 100.0

print(f"scanning 0 < t <= {T_MAX:g} ...")
table = scan_zeros(0.0, T_MAX, 1.0e-8)
estimate = count_zeros(T_MAX)
print(f"found {len(table.zeros)} zeros; counting formula expects "
      f"{estimate.n_estimate:.3f}")
print()

print("  n   gamma_n        bracket width   Z left      Z right")
for entry in table.zeros[:10]:
    z_lo = z_function(entry.bracket_lo, 1.0).z_value
    z_hi = z_function(entry.bracket_hi, 1.0).z_value
    width = entry.bracket_hi - entry.bracket_lo
    print(f"{entry.n:4d}   {entry.gamma:.9f}   {width:.2e}      "
          f"{z_lo:+.2e}  {z_hi:+.2e}")
print(f"... {len(table.zeros) - 10} more below t = {T_MAX:g}")
print()

# The density of zeros grows like ln(t/2pi)/2pi: compare the mean gap
# around t = 100 with the reciprocal density there.
gaps = [b.gamma - a.gamma for a, b in zip(table.zeros[-6:], table.zeros[-5:])]
mean_gap = sum(gaps) / len(gaps)
print(f"mean gap among the last few zeros: {mean_gap:.3f}")
print(f"1/density at t = {T_MAX:g}:          {1.0 / estimate.density:.3f}")
print()

# Heights sit near the asymptote 2*pi*n/ln(n/2pi) once n is large; at
# these small n the logarithm is still catching up.
from rzs import gamma_asymptotic

print("  n   gamma_n      asymptote    ratio")
for entry in table.zeros[6:10]:
    asym = gamma_asymptotic(entry.n)
    print(f"{entry.n:4d}   {entry.gamma:9.4f}   {asym:9.4f}   "
          f"{entry.gamma / asym:.3f}")
print()
print(f"first zero refined to {table.zeros[0].gamma:.9f} "
      f"(bracket width {table.zeros[0].bracket_hi - table.zeros[0].bracket_lo:.1e})")
