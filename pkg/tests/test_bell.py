"""Проверки статистики CHSH, поиска максимума и сканирования области нарушения."""
import math

import numpy as np
import pytest

from src.bell import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    ChshSettings,
    chsh_statistic,
    correlation_at,
    family_s,
    is_violation,
    maximize_chsh,
    theta_grid,
    violating_intervals,
    violation_scan,
)
from src.bell.scan import ScanRow
from src.quantum import ValidationError

BOUNDARY = round(math.acos((math.sqrt(3.0) - 1.0) / 2.0), 3)


class TestCorrelationAt:
    @pytest.mark.parametrize(
        "phi_s, phi_a, expected",
        [(0.0, 0.0, 1.0), (0.0, math.pi / 4, math.cos(math.pi / 4)), (math.pi / 3, math.pi / 3, 1.0)],
    )
    def test_examples(self, phi_s: float, phi_a: float, expected: float) -> None:
        assert correlation_at(phi_s, phi_a) == pytest.approx(expected, abs=1e-12)


class TestChshStatistic:
    def test_canonical_settings(self) -> None:
        result = chsh_statistic(ChshSettings.canonical())
        assert result.s_value == pytest.approx(TSIRELSON_BOUND, abs=1e-12)
        assert result.violated
        assert result.std_err is None

    def test_equal_settings_hit_classical_bound(self) -> None:
        result = chsh_statistic(ChshSettings(0.0, 0.0, 0.0, 0.0))
        assert result.s_value == pytest.approx(CLASSICAL_BOUND, abs=1e-12)
        assert not result.violated

    def test_all_equal_nonzero(self) -> None:
        result = chsh_statistic(ChshSettings(1.3, 1.3, 1.3, 1.3))
        assert abs(result.s_value) == pytest.approx(2.0, abs=1e-12)

    def test_boundary_settings(self) -> None:
        result = chsh_statistic(ChshSettings(0.0, math.pi / 2, math.pi / 2, 0.0))
        assert (result.e_ab, result.e_ab_prime, result.e_a_prime_b, result.e_a_prime_b_prime) == pytest.approx(
            (0.0, 1.0, 1.0, 0.0), abs=1e-12
        )
        assert result.s_value == pytest.approx(2.0, abs=1e-12)
        assert not result.violated

    def test_matches_cosine_combination(self) -> None:
        rng = np.random.default_rng(8)
        for a, a_prime, b, b_prime in rng.uniform(-np.pi, np.pi, size=(100, 4)):
            result = chsh_statistic(ChshSettings(a, a_prime, b, b_prime))
            expected = math.cos(a - b) + math.cos(a - b_prime) + math.cos(a_prime - b) - math.cos(a_prime - b_prime)
            assert result.s_value == pytest.approx(expected, abs=1e-12)
            combined = result.e_ab + result.e_ab_prime + result.e_a_prime_b - result.e_a_prime_b_prime
            assert result.s_value == pytest.approx(combined, abs=1e-12)
            assert result.violated == (abs(result.s_value) > 2.0 + 1e-12)

    def test_sampled_mode(self) -> None:
        result = chsh_statistic(ChshSettings.canonical(), sampled=True, trials=100_000, seed=42)
        assert result.std_err is not None and result.std_err > 0
        assert abs(result.s_value - TSIRELSON_BOUND) < 5 * result.std_err
        again = chsh_statistic(ChshSettings.canonical(), sampled=True, trials=100_000, seed=42)
        assert again == result

    def test_non_finite_setting_rejected(self) -> None:
        with pytest.raises(ValidationError):
            ChshSettings(0.0, float("nan"), 0.0, 0.0)

    @pytest.mark.parametrize("value, expected", [(2.0, False), (-2.5, True), (2.0 + 1e-9, True), (1.0, False)])
    def test_is_violation(self, value: float, expected: bool) -> None:
        assert is_violation(value) is expected


class TestMaximize:
    def test_finds_tsirelson_point(self) -> None:
        settings, s_value = maximize_chsh(math.pi / 64)
        assert s_value == pytest.approx(TSIRELSON_BOUND, abs=1e-3)
        assert s_value <= TSIRELSON_BOUND + 1e-9
        assert settings.a == 0.0
        assert abs(chsh_statistic(settings).s_value) == pytest.approx(s_value, abs=1e-12)

    def test_coarse_grid_still_violates(self) -> None:
        _, s_value = maximize_chsh(math.pi / 8)
        assert s_value > CLASSICAL_BOUND
        assert s_value <= TSIRELSON_BOUND + 1e-9

    @pytest.mark.parametrize("step", [0.0, -0.1, math.pi / 4])
    def test_rejects_bad_step(self, step: float) -> None:
        with pytest.raises(ValidationError):
            maximize_chsh(step)


class TestViolationScan:
    @pytest.mark.parametrize(
        "theta, expected, violated",
        [(math.pi / 4, 2 * math.sqrt(2), True), (0.0, 2.0, False), (math.pi / 2, 0.0, False)],
    )
    def test_family_examples(self, theta: float, expected: float, violated: bool) -> None:
        s_value = family_s(theta)
        assert s_value == pytest.approx(expected, abs=1e-12)
        assert is_violation(s_value) is violated

    def test_family_closed_form(self) -> None:
        for theta in np.linspace(-math.pi, math.pi, 37):
            assert family_s(float(theta)) == pytest.approx(3 * math.cos(theta) - math.cos(3 * theta), abs=1e-12)

    def test_default_grid(self) -> None:
        scan = violation_scan(theta_grid(181))
        assert len(scan.rows) == 181
        assert scan.max_abs_s == pytest.approx(TSIRELSON_BOUND, abs=1e-3)
        assert scan.intervals == [(-BOUNDARY, 0.0), (0.0, BOUNDARY)]

    def test_intervals_symmetric(self) -> None:
        scan = violation_scan(theta_grid(121, -math.pi / 2, math.pi / 2))
        mirrored = sorted((-end, -start) for start, end in scan.intervals)
        assert len(mirrored) == len(scan.intervals) == 2
        for left, right in zip(mirrored, scan.intervals):
            assert left == pytest.approx(right, abs=1e-3)

    def test_violated_flags_symmetric(self) -> None:
        rows = violation_scan(theta_grid(101)).rows
        flags = [row.violated for row in rows]
        assert flags == flags[::-1]

    def test_open_interval_at_grid_edge(self) -> None:
        rows = [ScanRow(0.1, 2.5, True), ScanRow(0.2, 2.6, True)]
        assert violating_intervals(rows) == [(0.1, 0.2)]

    def test_empty_grid_rejected(self) -> None:
        with pytest.raises(ValidationError):
            violation_scan([])

    def test_parallel_matches_sequential(self) -> None:
        grid = theta_grid(31)
        assert violation_scan(grid, n_jobs=2).rows == violation_scan(grid, n_jobs=1).rows

    def test_summary(self) -> None:
        summary = violation_scan(theta_grid(181)).summary()
        assert summary["points"] == 181
        assert summary["violating_intervals"] == [[-BOUNDARY, 0.0], [0.0, BOUNDARY]]
