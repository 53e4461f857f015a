"""Projective measurements, steered ensembles and the numeric optimizer."""

import numpy as np
import pytest

from qucorr.family import (
    TwoParamState,
    bell_vectors,
    build_state,
    classical_correlation,
    conditional_entropy_closed,
    discord,
    random_family_state,
)
from qucorr.measurement import (
    ConditionalEnsemble,
    MeasurementAxis,
    OptimizerConfig,
    axis_from_direction,
    classical_correlation_numeric,
    conditional_ensemble,
    conditional_entropy,
    discord_numeric,
    ensemble_spectrum_spread,
    measured_mutual_information,
    projectors,
    random_axis,
)
from qucorr.operators import (
    partial_trace_b,
    random_density_matrix,
    tensor,
    validate_density,
    von_neumann_entropy,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def product_state(rng, d=3):
    rho_a = random_density_matrix(1, 2, rng).matrix
    rho_b = random_density_matrix(1, d, rng).matrix
    return validate_density(tensor(rho_a, rho_b), 2, d), rho_a, rho_b


class TestMeasurementAxis:

    def test_unit_norm_enforced(self):
        with pytest.raises(ValueError):
            MeasurementAxis(1.0, 0.5, 0.0, 0.0)

    def test_unitary_is_special_unitary(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            v = random_axis(rng).unitary()
            assert np.allclose(v @ v.conj().T, np.eye(2), atol=1e-12)
            assert np.isclose(np.linalg.det(v), 1.0, atol=1e-12)

    def test_sign_flip_gives_same_projectors(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            axis = random_axis(rng)
            flipped = MeasurementAxis(-axis.t, -axis.y1, -axis.y2, -axis.y3)
            for a, b in zip(projectors(axis), projectors(flipped)):
                assert np.allclose(a, b, atol=1e-14)


class TestProjectors:

    def test_identity_axis_gives_computational_projectors(self):
        a0, a1 = projectors(MeasurementAxis(1.0, 0.0, 0.0, 0.0))
        assert np.allclose(a0, np.diag([1.0, 0.0]), atol=1e-14)
        assert np.allclose(a1, np.diag([0.0, 1.0]), atol=1e-14)

    def test_y_rotation_gives_plus_minus_projectors(self):
        r = 1.0 / np.sqrt(2.0)
        a0, a1 = projectors(MeasurementAxis(r, 0.0, r, 0.0))
        plus = np.array([1.0, 1.0]) / np.sqrt(2.0)
        minus = np.array([1.0, -1.0]) / np.sqrt(2.0)
        pair = {tuple(np.round(p.ravel().real, 12)) for p in (a0, a1)}
        expected = {tuple(np.round(np.outer(v, v).ravel(), 12)) for v in (plus, minus)}
        assert pair == expected

    def test_complete_orthogonal_idempotent(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            a0, a1 = projectors(random_axis(rng))
            assert np.max(np.abs(a0 + a1 - np.eye(2))) < 1e-12
            assert np.max(np.abs(a0 @ a0 - a0)) < 1e-12
            assert np.max(np.abs(a1 @ a1 - a1)) < 1e-12
            assert np.max(np.abs(a0 @ a1)) < 1e-12

    def test_direction_parametrization_points_along_bloch_vector(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            polar = rng.uniform(0.0, np.pi)
            azimuth = rng.uniform(0.0, 2.0 * np.pi)
            n = np.array([np.sin(polar) * np.cos(azimuth),
                          np.sin(polar) * np.sin(azimuth),
                          np.cos(polar)])
            expected = 0.5 * (np.eye(2) + sum(c * s for c, s in zip(n, PAULI)))
            a0, _ = projectors(axis_from_direction(polar, azimuth))
            assert np.allclose(a0, expected, atol=1e-12)


class TestConditionalEnsemble:

    def test_family_outcomes_are_equiprobable(self):
        rng = np.random.default_rng(4)
        rho = build_state(TwoParamState(3, 0.05, 0.4))
        for _ in range(10):
            ens = conditional_ensemble(rho, random_axis(rng))
            assert abs(ens.p0 - 0.5) < 1e-12
            assert abs(ens.p1 - 0.5) < 1e-12

    def test_uniform_triplet_steered_spectrum(self):
        rho = build_state(TwoParamState(3, 0.0, 0.0))
        ens = conditional_ensemble(rho, MeasurementAxis(1.0, 0.0, 0.0, 0.0))
        lam = np.sort(np.linalg.eigvalsh(ens.rho0))[::-1]
        assert np.allclose(lam, [2.0 / 3.0, 1.0 / 3.0, 0.0], atol=1e-12)

    def test_product_state_cannot_be_steered(self):
        rng = np.random.default_rng(5)
        prod, _, rho_b = product_state(rng)
        for _ in range(5):
            ens = conditional_ensemble(prod, random_axis(rng))
            assert np.allclose(ens.rho0, rho_b, atol=1e-10)
            assert np.allclose(ens.rho1, rho_b, atol=1e-10)

    def test_probabilities_sum_to_one_and_branches_positive(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            rho = random_density_matrix(2, int(rng.integers(3, 6)), rng)
            ens = conditional_ensemble(rho, random_axis(rng))
            assert abs(ens.p0 + ens.p1 - 1.0) < 1e-12
            for p, state in ens.outcomes():
                assert p > -1e-12
                if p > 1e-12:
                    assert np.linalg.eigvalsh(state)[0] > -1e-12
                    assert abs(np.trace(state).real - 1.0) < 1e-10

    def test_degenerate_outcome_flagged(self):
        # measuring |0> along z never fires the second outcome
        v = np.zeros(6, dtype=complex)
        v[0] = 1.0
        pure = validate_density(np.outer(v, v.conj()), 2, 3)
        ens = conditional_ensemble(pure, MeasurementAxis(1.0, 0.0, 0.0, 0.0))
        assert isinstance(ens, ConditionalEnsemble)
        assert ens.degenerate
        assert ens.p1 < 1e-12


class TestConditionalEntropy:

    def test_family_value_is_axis_independent(self):
        rng = np.random.default_rng(7)
        rho = build_state(TwoParamState(3, 0.0, 0.0))
        expected = np.log2(3.0) - 2.0 / 3.0
        values = [conditional_entropy(rho, random_axis(rng)) for _ in range(50)]
        assert np.max(np.abs(np.array(values) - expected)) < 1e-10

    def test_both_outcomes_have_equal_entropy(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            s = random_family_state(int(rng.integers(3, 6)), rng)
            ens = conditional_ensemble(build_state(s), random_axis(rng))
            s0 = von_neumann_entropy(ens.rho0)
            s1 = von_neumann_entropy(ens.rho1)
            assert abs(s0 - s1) < 1e-10
            assert abs(s0 - conditional_entropy_closed(s)) < 1e-10

    def test_pure_product_state_gives_zero(self):
        v = np.zeros(6, dtype=complex)
        v[1] = 1.0
        pure = validate_density(np.outer(v, v.conj()), 2, 3)
        rng = np.random.default_rng(9)
        for _ in range(5):
            assert conditional_entropy(pure, random_axis(rng)) < 1e-12

    def test_maximally_mixed_gives_log_d(self):
        rho = validate_density(np.eye(6) / 6.0, 2, 3)
        got = conditional_entropy(rho, MeasurementAxis(1.0, 0.0, 0.0, 0.0))
        assert np.isclose(got, np.log2(3.0), atol=1e-12)


class TestMeasuredMutualInformation:

    def test_singlet_with_computational_axis(self):
        rho = build_state(TwoParamState(3, 0.0, 1.0))
        got = measured_mutual_information(rho, MeasurementAxis(1.0, 0.0, 0.0, 0.0))
        assert np.isclose(got, 1.0, atol=1e-12)

    def test_product_state_carries_nothing(self):
        rng = np.random.default_rng(10)
        prod, _, _ = product_state(rng)
        assert abs(measured_mutual_information(prod, random_axis(rng))) < 1e-10

    def test_uniform_triplet_any_axis(self):
        rng = np.random.default_rng(11)
        rho = build_state(TwoParamState(3, 0.0, 0.0))
        expected = 1.0 - (np.log2(3.0) - 2.0 / 3.0)
        for _ in range(10):
            got = measured_mutual_information(rho, random_axis(rng))
            assert np.isclose(got, expected, atol=1e-10)


class TestOptimizer:

    def test_family_state_matches_closed_form(self):
        rho = build_state(TwoParamState(3, 0.1, 0.3))
        value, _ = classical_correlation_numeric(rho)
        assert abs(value - classical_correlation(TwoParamState(3, 0.1, 0.3))) < 1e-7

    def test_product_state_optimum_is_zero(self):
        rng = np.random.default_rng(12)
        prod, _, _ = product_state(rng)
        value, _ = classical_correlation_numeric(prod)
        assert abs(value) < 1e-7

    def test_singlet_optimum_is_one(self):
        rho = build_state(TwoParamState(3, 0.0, 1.0))
        value, _ = classical_correlation_numeric(rho)
        assert abs(value - 1.0) < 1e-7

    def test_supremum_dominates_random_samples(self):
        rng = np.random.default_rng(13)
        for _ in range(3):
            rho = random_density_matrix(2, 3, rng)
            value, _ = classical_correlation_numeric(rho)
            for _ in range(50):
                sample = measured_mutual_information(rho, random_axis(rng))
                assert value >= sample - 1e-12

    def test_returned_axis_attains_returned_value(self):
        rng = np.random.default_rng(14)
        rho = random_density_matrix(2, 4, rng)
        value, axis = classical_correlation_numeric(rho)
        assert abs(measured_mutual_information(rho, axis) - value) < 1e-9

    def test_random_probes_are_reproducible(self):
        rng = np.random.default_rng(15)
        rho = random_density_matrix(2, 3, rng)
        config = OptimizerConfig(polar_steps=16, azimuth_steps=32,
                                 random_probes=64, seed=7)
        first, _ = classical_correlation_numeric(rho, config)
        second, _ = classical_correlation_numeric(rho, config)
        assert first == second


class TestDiscordNumeric:

    def test_family_agreement(self):
        s = TwoParamState(3, 0.05, 0.55)
        rho = build_state(s)
        assert abs(discord_numeric(rho) - discord(s)) < 1e-7

    def test_classical_diagonal_state_has_no_discord(self):
        rho = validate_density(np.diag([0.4, 0.1, 0.05, 0.05, 0.15, 0.25]), 2, 3)
        assert abs(discord_numeric(rho)) < 1e-7

    def test_singlet_discord_is_one(self):
        rho = build_state(TwoParamState(3, 0.0, 1.0))
        assert abs(discord_numeric(rho) - 1.0) < 1e-7

    def test_never_meaningfully_negative(self):
        rng = np.random.default_rng(16)
        for _ in range(5):
            rho = random_density_matrix(2, 3, rng)
            assert discord_numeric(rho) >= -1e-9

    def test_pure_state_discord_equals_entanglement_entropy(self):
        rng = np.random.default_rng(17)
        for d in (3, 4):
            for _ in range(3):
                v = rng.standard_normal(2 * d) + 1j * rng.standard_normal(2 * d)
                v /= np.linalg.norm(v)
                rho = validate_density(np.outer(v, v.conj()), 2, d)
                expected = von_neumann_entropy(partial_trace_b(rho))
                assert abs(discord_numeric(rho) - expected) < 1e-6


class TestEnsembleSpectrumSpread:

    def test_generic_family_member(self):
        assert ensemble_spectrum_spread(TwoParamState(3, 0.05, 0.4), 50, 0) < 1e-10

    def test_singlet_steers_to_pure_states(self):
        assert ensemble_spectrum_spread(TwoParamState(3, 0.0, 1.0), 20, 1) < 1e-12

    def test_product_member_steers_to_marginal(self):
        assert ensemble_spectrum_spread(TwoParamState(3, 1 / 6, 1 / 6), 20, 2) < 1e-12

    def test_requires_two_samples(self):
        with pytest.raises(ValueError):
            ensemble_spectrum_spread(TwoParamState(3, 0.1, 0.1), 1, 0)
