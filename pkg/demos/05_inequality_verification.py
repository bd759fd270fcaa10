"""Verifying the operator inequalities over seeded random ensembles.

Every proved inequality (real-part dominance of the three means and both
entropies, the vector-family and norm inequalities, homogeneity, symmetry)
is checked over a reproducible ensemble; a violation would be a numerical
bug.  The arithmetic-geometric-harmonic chain is the deliberate exception:
it provably holds for positive definite matrices and is expected to BREAK
for wide sector angles, so the last section searches for counterexamples.
"""

import math

from sectorlab.verify import EnsembleSpec, run_all, search_agh_counterexample

spec = EnsembleSpec(dim=3, trials=30, seed=2026, sector_angle=0.4 * math.pi / 2)
print(f"ensemble: dim {spec.dim}, {spec.trials} trials, seed {spec.seed}, "
      f"angle 0.40 * pi/2, lambda grid {spec.lambda_grid}")
print(f"\n{'property':30s} {'violations':>10s} {'worst margin':>14s}")
for rep in run_all(spec):
    print(f"{rep.property_id:30s} {rep.violations:>10d} {rep.worst_margin:>+14.3e}")

print("\nAGH chain on a positive definite ensemble (angle 0): provably holds")
hpd = EnsembleSpec(dim=2, trials=200, seed=0, sector_angle=0.0, lambda_grid=(0.5,))
rep = search_agh_counterexample(hpd)
print(f"  violations: {rep.violations}/200")

print("\nAGH chain at angle 0.49 * pi/2: expected to fail for some pairs")
wide = EnsembleSpec(dim=2, trials=200, seed=0,
                    sector_angle=0.49 * math.pi / 2, lambda_grid=(0.5,))
rep = search_agh_counterexample(wide)
print(f"  violations: {rep.violations}/200, worst margin {rep.worst_margin:+.3f}")
print(f"  first witness: {rep.detail}")
