import math

import numpy as np
import pytest

from app.enums import SchemeId
from app.paths import GridSpec, coarsen_increments, generate_increments
from app.schemes import SchemeFactory, pms_step, sms_step
from tests.conftest import make_model


def test_pms_is_dominated_by_sms_on_random_steps(rng):
    model = make_model(sigma2=64.0)
    dt = 0.02
    x = rng.exponential(0.05, 10_000)
    dW = rng.normal(0.0, math.sqrt(dt), 10_000)
    sms = sms_step(model, dt, x, dW)
    pms = pms_step(model, dt, x, dW)
    assert np.all(pms.next_state >= 0)
    assert np.all(pms.next_state <= sms.next_state)
    np.testing.assert_array_equal(sms.reflected, sms.pre_reflection_z <= 0)
    assert sms.reflected.any()


def test_states_stay_nonnegative_above_one_half(rng):
    model = make_model(sigma2=144.0, alpha=0.6)
    dt = 0.01
    x = rng.exponential(0.1, 10_000)
    dW = rng.normal(0.0, math.sqrt(dt), 10_000)
    assert np.all(sms_step(model, dt, x, dW).next_state >= 0)
    assert np.all(pms_step(model, dt, x, dW).next_state >= 0)


def test_pms_leaves_sms_only_through_a_projection():
    model = make_model(sigma2=64.0)
    spec = GridSpec(T=1.0, n_steps=64)
    increments = generate_increments(spec, seed=9, stream=0, start=0, count=2_000)
    sms = SchemeFactory.build_scheme(SchemeId.SMS, model).simulate_batch(
        increments, spec.dt, record_states=True
    )
    pms = SchemeFactory.build_scheme(SchemeId.PMS, model).simulate_batch(
        increments, spec.dt, record_states=True
    )
    assert np.all(pms.states >= 0)

    differs = sms.states != pms.states
    diverged = differs.any(axis=1)
    assert diverged.any()
    assert np.all(sms.reflect_count[diverged] > 0)
    rows = np.flatnonzero(diverged)
    first = differs[rows].argmax(axis=1)
    # the first split is a projection to 0 where the SMS reflected
    np.testing.assert_array_equal(pms.states[rows, first], 0.0)
    assert np.all(sms.states[rows, first] > 0)


def test_pms_can_overtake_sms_after_a_reflection(cir_model):
    dt = 0.02
    # z = 0.8 x + sqrt(x) dW + dW^2 / 4 + 0.195 for this model and step
    sms_1 = sms_step(cir_model, dt, 1.5625, -2.0)
    pms_1 = pms_step(cir_model, dt, 1.5625, -2.0)
    assert sms_1.next_state == pytest.approx(0.055)
    assert pms_1.next_state == 0.0

    sms_2 = sms_step(cir_model, dt, sms_1.next_state, -0.5)
    pms_2 = pms_step(cir_model, dt, pms_1.next_state, -0.5)
    assert pms_2.next_state == pytest.approx(0.2575)
    assert sms_2.next_state == pytest.approx(0.18424, rel=1e-4)
    assert pms_2.next_state > sms_2.next_state


def test_sup_square_moment_is_stable_under_refinement(cir_model):
    spec = GridSpec(T=1.0, n_steps=160)
    increments = generate_increments(spec, seed=21, stream=0, start=0, count=1_000)
    sms = SchemeFactory.build_scheme(SchemeId.SMS, cir_model)
    fine = sms.simulate_batch(increments, spec.dt, record_states=True).states
    coarse = sms.simulate_batch(
        coarsen_increments(increments, 2), 4 * spec.dt, record_states=True
    ).states
    # both maxima over the coarse grid times
    sup_fine = (fine[:, ::4] ** 2).max(axis=1)
    sup_coarse = (coarse**2).max(axis=1)
    std_error = math.sqrt(
        (sup_fine.var(ddof=1) + sup_coarse.var(ddof=1)) / sup_fine.size
    )
    assert abs(sup_fine.mean() - sup_coarse.mean()) <= 3 * std_error
