import math

import numpy as np
import pytest

from sectorlab.ensemble import (
    GENERATOR_NAME,
    SectorSpec,
    derive_seed,
    random_accretive,
    random_hpd,
    random_unit_vectors,
)
from sectorlab.linalg import imag_part, real_part


def test_generator_name_recorded():
    assert GENERATOR_NAME == "pcg64-seedsequence"


# --------------------------------------------------------------- random_hpd


def test_hpd_determinism():
    a = random_hpd(4, 50.0, 123)
    b = random_hpd(4, 50.0, 123)
    assert np.array_equal(a, b)
    c = random_hpd(4, 50.0, 124)
    assert not np.array_equal(a, c)


def test_hpd_cond_cap_one_is_identity():
    h = random_hpd(5, 1.0, 7)
    np.testing.assert_allclose(h, np.eye(5), atol=1e-13)


def test_hpd_dim_one_in_range():
    for seed in range(20):
        h = random_hpd(1, 100.0, seed)
        val = h[0, 0].real
        assert 0.1 * (1 - 1e-12) <= val <= 10.0 * (1 + 1e-12)


def test_hpd_eigenvalue_containment():
    for seed in range(30):
        cc = 100.0
        h = random_hpd(4, cc, seed)
        w = np.linalg.eigvalsh(h)
        assert w[0] >= (1 - 1e-12) / math.sqrt(cc)
        assert w[-1] <= (1 + 1e-12) * math.sqrt(cc)
        assert np.array_equal(h, h.conj().T)


def test_hpd_validates_arguments():
    with pytest.raises(ValueError):
        random_hpd(0, 10.0, 1)
    with pytest.raises(ValueError):
        random_hpd(2, 0.5, 1)


# --------------------------------------------------------- random_accretive


def test_accretive_determinism():
    spec = SectorSpec(dim=3, angle=0.6, cond_cap=50.0, seed=99)
    a = random_accretive(spec)
    b = random_accretive(spec)
    assert np.array_equal(a.mat, b.mat)
    assert a.re_min_eig == b.re_min_eig


def test_accretive_zero_angle_is_hpd():
    spec = SectorSpec(dim=4, angle=0.0, cond_cap=20.0, seed=5)
    a = random_accretive(spec)
    assert np.array_equal(a.mat, a.mat.conj().T)
    assert np.linalg.eigvalsh(real_part(a.mat))[0] > 0


def test_accretive_scalar_sector():
    spec = SectorSpec(dim=1, angle=math.pi / 4, cond_cap=10.0, seed=3)
    z = random_accretive(spec).mat[0, 0]
    assert 0 < abs(z.imag) <= z.real * (1 + 1e-12)


def test_accretive_sector_containment_by_rayleigh_sampling():
    rng = np.random.default_rng(1234)
    for seed in range(10):
        spec = SectorSpec(dim=3, angle=0.5, cond_cap=80.0, seed=seed)
        a = random_accretive(spec).mat
        re = real_part(a)
        im = imag_part(a)
        bound = math.tan(spec.angle)
        for _ in range(100):
            x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            num = np.vdot(x, im @ x).real
            den = np.vdot(x, re @ x).real
            assert abs(num) <= bound * den + 1e-10


def test_accretive_validation_over_many_draws():
    # every draw passes AccretiveMatrix validation (re_min_eig > 0)
    count = 0
    for i in range(10_000):
        dim = 1 + (i % 4)
        angle = (0.0, 0.3, 0.6, 0.77)[i % 4] * (math.pi / 2) * 0.99
        a = random_accretive(SectorSpec(dim=dim, angle=angle, cond_cap=100.0, seed=i))
        assert a.re_min_eig > 0
        count += 1
    assert count == 10_000


def test_sector_spec_validation():
    with pytest.raises(ValueError):
        SectorSpec(dim=0, angle=0.1, cond_cap=10.0, seed=0)
    with pytest.raises(ValueError):
        SectorSpec(dim=2, angle=math.pi / 2, cond_cap=10.0, seed=0)
    with pytest.raises(ValueError):
        SectorSpec(dim=2, angle=0.1, cond_cap=0.0, seed=0)


# ------------------------------------------------------ random_unit_vectors


def test_unit_vectors_normalized_and_deterministic():
    xs = random_unit_vectors(5, 8, 42)
    assert xs.shape == (8, 5)
    np.testing.assert_allclose(np.linalg.norm(xs, axis=1), np.ones(8), atol=1e-14)
    assert np.array_equal(xs, random_unit_vectors(5, 8, 42))


def test_unit_vector_scalar_case():
    v = random_unit_vectors(1, 1, 9)
    assert abs(abs(v[0, 0]) - 1.0) <= 1e-14


def test_unit_vectors_validation():
    with pytest.raises(ValueError):
        random_unit_vectors(3, 0, 1)


def test_derive_seed_stability():
    # frozen values: the per-trial stream derivation must never change,
    # or recorded witness seeds stop reproducing
    assert derive_seed(0, 10, 0) == derive_seed(0, 10, 0)
    assert derive_seed(0, 10, 0) != derive_seed(0, 10, 1)
    assert derive_seed(0, 10, 0) != derive_seed(0, 11, 0)
