import numpy as np

from sectorlab.ensemble import SectorSpec, random_accretive, random_hpd

# The canonical accretive pair used for frozen regression baselines.
PAIR_A = np.array([[2, 1j], [1j, 2]], dtype=complex)
PAIR_B = np.array([[1, 1], [-1, 1]], dtype=complex)

# geometric_mean(PAIR_A, PAIR_B, 0.3) at 1024 Jacobi nodes, stable to 7e-15
# against both the 512-node rule and the adaptive oracle at tol 1e-12.
PAIR_GEOMETRIC_03 = np.array([
    [1.7754168584486452 + 0.0j, 0.46737919225481006 + 0.6540188330969174j],
    [-0.46737919225481017 + 0.6540188330969174j, 1.7754168584486452 + 0.0j],
])


def hpd_pairs(count, dims, seed, cond_cap=100.0):
    """Deterministic list of (A, B) HPD pairs cycling through `dims`."""
    out = []
    for i in range(count):
        d = dims[i % len(dims)]
        a = random_hpd(d, cond_cap, seed * 1_000_003 + 2 * i)
        b = random_hpd(d, cond_cap, seed * 1_000_003 + 2 * i + 1)
        out.append((a, b))
    return out


def accretive_pairs(count, dims, angle, seed, cond_cap=100.0):
    """Deterministic list of (A, B) accretive pairs cycling through `dims`."""
    out = []
    for i in range(count):
        d = dims[i % len(dims)]
        a = random_accretive(SectorSpec(dim=d, angle=angle, cond_cap=cond_cap,
                                        seed=seed * 1_000_003 + 2 * i))
        b = random_accretive(SectorSpec(dim=d, angle=angle, cond_cap=cond_cap,
                                        seed=seed * 1_000_003 + 2 * i + 1))
        out.append((a.mat, b.mat))
    return out
