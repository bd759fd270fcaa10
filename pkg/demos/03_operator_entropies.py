"""Relative and Tsallis operator entropies of accretive matrices.

The relative entropy integrates (A !_t B - A)/t over (0, 1); the Tsallis
entropy is its one-parameter deformation (A #_lam B - A)/lam, with an
equivalent Beta-kernel integral.  As lam -> 0 the Tsallis entropy converges
to the relative entropy at first order in lam, which the deviation table at
the end makes visible.
"""

import math

import numpy as np

from sectorlab import (
    relative_entropy,
    relative_entropy_hpd,
    tsallis_entropy,
    tsallis_from_mean,
    tsallis_limit_probe,
)

# Scalars first - there the operator formulas collapse to calculus.
one = np.array([[1.0]])
four = np.array([[4.0]])
print(f"S(1|4)      = {relative_entropy(one, four)[0, 0].real:.12f}   "
      f"(log 4 = {math.log(4):.12f})")
print(f"T_0.5(1|4)  = {tsallis_entropy(one, four, 0.5)[0, 0].real:.12f}   "
      f"((sqrt(4)-1)/0.5 = 2)")

# Closed form vs integral on a positive definite pair.
a = np.array([[2.0, 0.5], [0.5, 1.0]])
b = np.array([[3.0, -0.25], [-0.25, 2.0]])
dev = np.linalg.norm(relative_entropy(a, b) - relative_entropy_hpd(a, b))
print(f"\nHPD pair: ||integral - closed form|| = {dev:.2e}")

# The two Tsallis routes (direct integral vs via the geometric mean).
A = np.array([[2, 1j], [1j, 2]], dtype=complex)
B = np.array([[1, 1], [-1, 1]], dtype=complex)
for lam in (0.1, 0.5, 0.9):
    d = np.linalg.norm(tsallis_entropy(A, B, lam) - tsallis_from_mean(A, B, lam))
    print(f"lam = {lam}: ||direct - via mean|| = {d:.2e}")

# And the lam -> 0 limit: deviations halve when lam halves.
print("\nlam -> 0 limit, deviation ||T_lam(A|B) - S(A|B)||_F:")
probe = tsallis_limit_probe(A, B, [2.0**-k for k in range(3, 11)])
prev = None
for lam, dev in probe:
    note = "" if prev is None else f"   ratio {dev / prev:.3f}"
    print(f"  lam = 2^{int(math.log2(lam)):+d} = {lam:.6f}: {dev:.6e}{note}")
    prev = dev
