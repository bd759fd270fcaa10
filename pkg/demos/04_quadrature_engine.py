"""The Gauss-Jacobi quadrature engine behind the integral means.

The mean's kernel t^(lam-1) (1-t)^(-lam) is singular at both endpoints;
absorbing it into a Gauss-Jacobi weight leaves a smooth matrix integrand, so
accuracy is spectral in the node count.  The weight sums equal the Beta
function B(lam, 1-lam) = pi/sin(lam pi), which is the normalization constant
in the mean's definition.
"""

import math

import numpy as np

from sectorlab import gauss_jacobi, gauss_legendre, integrate_adaptive, integrate_matrix

# Weight-sum identity across the lambda range.
print("weight sums of the mean's kernel rule (32 nodes):")
for lam in (0.1, 0.25, 0.5, 0.75, 0.9):
    rule = gauss_jacobi(32, -lam, lam - 1.0)
    total = float(np.sum(rule.weights))
    print(f"  lam = {lam:4.2f}: sum w = {total:.12f}   pi/sin(lam pi) = "
          f"{math.pi / math.sin(lam * math.pi):.12f}")

# Spectral convergence on the scalar mean integrand (2 #_1/3 8 = 3.1748...).
a, b, lam = 2.0, 8.0, 1.0 / 3.0
exact = a ** (1 - lam) * b**lam
print(f"\nnode doubling for the scalar integrand of 2 #_(1/3) 8 (exact {exact:.10f}):")
for n in (4, 8, 16, 32):
    rule = gauss_jacobi(n, -lam, lam - 1.0)
    got = math.sin(lam * math.pi) / math.pi * integrate_matrix(
        rule, lambda t: np.array([[1.0 / ((1 - t) / a + t / b)]]))[0, 0].real
    print(f"  n = {n:3d}: {got:.15f}   error {abs(got - exact):.2e}")

# The adaptive driver doubles nodes until two consecutive results agree.
res = integrate_adaptive(lambda t: np.array([[1.0 / (1.0 + t)]]),
                         gauss_legendre, tol=1e-13)
print(f"\nadaptive integral of 1/(1+t): {res.value[0, 0].real:.15f} "
      f"(log 2 = {math.log(2):.15f}), {res.nodes_used} nodes")
