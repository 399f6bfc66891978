import pytest

from scaling_horizon.errors import InvalidArgumentError
from scaling_horizon.figures import figure1_rows, figure2_rows, figure3_rows, figure_rows


class TestFigure1:
    def test_six_labeled_series_all_starting_at_one(self):
        rows = figure1_rows()
        by_series = {}
        for row in rows:
            by_series.setdefault(row["series"], []).append(row)
        assert len(by_series) == 6
        for series_rows in by_series.values():
            assert series_rows[0]["t_years"] == 0.0
            assert series_rows[0]["relative_loss"] == 1.0

    def test_reference_line_constant(self):
        assert {row["reference"] for row in figure1_rows()} == {0.68}

    def test_includes_transistor_scaling_analogue(self):
        labels = {row["series"] for row in figure1_rows()}
        assert "k0.4_g0.5" in labels
        assert "k0.048_g0" in labels


class TestFigure2:
    def test_series_per_gamma(self):
        rows = figure2_rows()
        assert {row["series"] for row in rows} == {"g0.5", "g1", "g2", "g3"}

    def test_curves_flatten_as_gamma_grows(self):
        rows = figure2_rows()
        spans = {}
        for row in rows:
            times = spans.setdefault(row["series"], [])
            times.append(row["time_to_target_years"])
        ordered = [spans[f"g{g:g}"] for g in (0.5, 1.0, 2.0, 3.0)]
        ranges = [max(ts) - min(ts) for ts in ordered]
        assert all(a > b for a, b in zip(ranges, ranges[1:]))

    def test_tau_domain(self):
        taus = [row["tau"] for row in figure2_rows()]
        assert min(taus) > -1.0
        assert max(taus) == 2.0


class TestFigure3:
    def test_series_per_target(self):
        rows = figure3_rows()
        assert {row["series"] for row in rows} == {"y0.5", "y0.6", "y0.7", "y0.8", "y0.9"}

    def test_moores_law_rate_pushes_past_fifteen_years(self):
        rows = [r for r in figure3_rows() if r["gamma"] == 0.5]
        for row in rows:
            if row["series"] in ("y0.5", "y0.6", "y0.7"):
                assert row["time_to_target_years"] > 15.0

    def test_times_decrease_with_gamma_within_series(self):
        rows = [r for r in figure3_rows() if r["series"] == "y0.7"]
        times = [r["time_to_target_years"] for r in sorted(rows, key=lambda r: r["gamma"])]
        assert all(a > b for a, b in zip(times, times[1:]))


def test_figure_rows_dispatch():
    assert figure_rows(2) == figure2_rows()
    with pytest.raises(InvalidArgumentError):
        figure_rows(4)
