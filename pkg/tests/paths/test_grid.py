import numpy as np
import pytest

from app.errors import IndivisibleStepCount, OddStepCount
from app.paths import (
    BrownianGrid,
    GridSpec,
    SeedId,
    coarsen,
    coarsen_increments,
    generate,
    generate_increments,
    restrict_to_ladder,
    tree_sum,
)


def test_grid_spec_geometry():
    spec = GridSpec(T=1.0, n_steps=40)
    assert spec.dt == 0.025
    assert spec.times()[-1] == pytest.approx(1.0)
    assert spec.coarser(3).n_steps == 5
    assert spec.refined(2).n_steps == 160
    with pytest.raises(IndivisibleStepCount):
        spec.coarser(4)


def test_coarsen_sums_consecutive_pairs():
    g = BrownianGrid(spec=GridSpec(T=1.0, n_steps=4), increments=np.array([1.0, 2.0, 3.0, 4.0]))
    coarse = coarsen(g)
    np.testing.assert_array_equal(coarse.increments, [3.0, 7.0])
    assert coarse.dt == 0.5


def test_coarsen_rejects_odd_grids():
    g = BrownianGrid(spec=GridSpec(T=1.0, n_steps=3), increments=np.zeros(3))
    with pytest.raises(OddStepCount):
        coarsen(g)
    with pytest.raises(OddStepCount):
        coarsen_increments(np.zeros((2, 5)))


def test_ladder_preserves_the_terminal_value_bitwise():
    g = generate(GridSpec(T=1.0, n_steps=40 * 2**6), SeedId(seed=5, trajectory=17))
    ladder = restrict_to_ladder(g, 7)
    assert [member.n_steps for member in ladder] == [40 * 2**k for k in range(6, -1, -1)]
    terminals = {member.terminal_value() for member in ladder}
    assert len(terminals) == 1


def test_ladder_partial_sums_agree_at_shared_times():
    g = generate(GridSpec(T=1.0, n_steps=64), SeedId(seed=1))
    fine_path = g.path_values()
    coarse_path = coarsen(g).path_values()
    np.testing.assert_allclose(fine_path[::2], coarse_path, rtol=0, atol=1e-12)


def test_ladder_rejects_indivisible_grids():
    g = generate(GridSpec(T=1.0, n_steps=40), SeedId(seed=1))
    with pytest.raises(IndivisibleStepCount):
        restrict_to_ladder(g, 5)


def test_tree_sum_matches_sum():
    values = np.arange(16, dtype=float)
    assert tree_sum(values) == values.sum()


def test_increments_are_scaled_and_read_only():
    spec = GridSpec(T=1.0, n_steps=1024)
    increments = generate_increments(spec, seed=2, stream=0, start=0, count=64)
    assert increments.shape == (64, 1024)
    assert increments.std() == pytest.approx(np.sqrt(spec.dt), rel=0.05)

    g = generate(spec, SeedId(seed=2, trajectory=3))
    np.testing.assert_array_equal(g.increments, increments[3])
    with pytest.raises(ValueError):
        g.increments[0] = 1.0


def test_grid_shape_is_checked():
    with pytest.raises(ValueError, match="expected 4 increments"):
        BrownianGrid(spec=GridSpec(T=1.0, n_steps=4), increments=np.zeros(3))


def test_coarsened_increments_have_twice_the_fine_variance():
    spec = GridSpec(T=20.48, n_steps=2048)
    fine = generate_increments(spec, seed=8, stream=0, start=0, count=1_000)
    coarse = coarsen_increments(fine)
    assert coarse.size == 1_024_000
    assert coarse.var() == pytest.approx(2 * spec.dt, rel=0.01)
