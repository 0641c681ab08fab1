import numpy as np
import pytest
from scipy import stats

from app.paths import SeedId
from app.paths.rng import standard_normals


def test_draws_are_a_pure_function_of_the_ids():
    first = standard_normals(seed=7, stream=0, start=0, count=10, n_steps=64)
    again = standard_normals(seed=7, stream=0, start=0, count=10, n_steps=64)
    np.testing.assert_array_equal(first, again)


def test_any_slice_of_trajectories_matches_the_full_draw():
    full = standard_normals(seed=3, stream=1, start=0, count=40, n_steps=16)
    middle = standard_normals(seed=3, stream=1, start=13, count=9, n_steps=16)
    np.testing.assert_array_equal(full[13:22], middle)


def test_seeds_and_streams_are_distinct():
    base = standard_normals(1, 0, 0, 4, 32)
    assert not np.array_equal(base, standard_normals(2, 0, 0, 4, 32))
    assert not np.array_equal(base, standard_normals(1, 1, 0, 4, 32))
    assert not np.array_equal(base[0], base[1])


def test_draws_look_standard_normal():
    sample = standard_normals(
        seed=11, stream=0, start=0, count=1_000, n_steps=100
    ).ravel()
    assert abs(sample.mean()) < 0.02
    assert sample.std() == pytest.approx(1.0, abs=0.02)
    assert stats.kstest(sample, "norm").pvalue > 1e-3


def test_empty_request():
    assert standard_normals(0, 0, 0, 0, 8).shape == (0, 8)


def test_seed_descriptor_validation():
    with pytest.raises(ValueError):
        SeedId(seed=-1)
    with pytest.raises(ValueError):
        SeedId(seed=2**64)
