"""Command-line interface: schemas, exit codes, determinism, config handling."""

import json
import math

import pytest

from genfisher.cli import AlphaGrid, ConfigError, SweepConfig, main, run_sweep, sweep_to_csv

SWEEP_HEADER = "alpha,q,energy,gamma,closed,quadrature,rel_dev,status"


def read(path):
    return path.read_text(encoding="utf-8")


class TestVerifyCommand:
    def test_default_small_grid_passes(self, tmp_path):
        out = tmp_path / "report.txt"
        rc = main(["verify", "--alphas", "1,2", "--qs", "0.5,2", "--out", str(out)])
        assert rc == 0
        report = read(out)
        assert "eq6_argument: (alpha+q-1)/(alpha*q) CONFIRMED" in report
        assert "eq6_argument_rejected: (alpha+q-1)/alpha" in report
        assert "overall: PASS" in report

    def test_unreachable_tolerance_fails(self, tmp_path):
        out = tmp_path / "report.txt"
        rc = main(["verify", "--alphas", "1,2", "--qs", "0.5", "--tol", "1e-15", "--out", str(out)])
        assert rc == 1
        assert "overall: FAIL" in read(out)

    def test_malformed_config_is_usage_error(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("this line has no equals sign\n", encoding="utf-8")
        assert main(["verify", "--config", str(cfg)]) == 2

    def test_unknown_config_key_is_usage_error(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("no_such_key = 3\n", encoding="utf-8")
        assert main(["verify", "--config", str(cfg)]) == 2


class TestSweepCommand:
    def test_csv_schema_and_row_count(self, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main(
            ["sweep", "--quantity", "eps_min", "--q", "0.25,0.5,2", "--energy", "1",
             "--alpha-min", "0.76", "--alpha-max", "100", "--alpha-count", "8",
             "--out", str(out)]
        )
        assert rc == 0
        lines = read(out).splitlines()
        assert lines[0] == SWEEP_HEADER
        assert len(lines) == 1 + 8 * 3

    def test_half_order_column_is_constant(self, tmp_path):
        out = tmp_path / "sweep.csv"
        main(
            ["sweep", "--quantity", "eps_min", "--q", "0.5", "--energy", "1",
             "--alpha-min", "0.76", "--alpha-max", "100", "--alpha-count", "10",
             "--out", str(out)]
        )
        rows = read(out).splitlines()[1:]
        for row in rows:
            cells = row.split(",")
            assert cells[-1] == "ok"
            assert float(cells[4]) == pytest.approx(0.5, rel=1e-9)

    def test_out_of_domain_rows_are_explicit(self, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main(
            ["sweep", "--quantity", "fisher", "--q", "2", "--energy", "1",
             "--alpha-min", "0.2", "--alpha-max", "0.8", "--alpha-count", "4",
             "--alpha-spacing", "linear", "--out", str(out)]
        )
        assert rc == 0
        rows = [r.split(",") for r in read(out).splitlines()[1:]]
        # linear grid 0.2, 0.4, 0.6, 0.8: the first two cannot be
        # energy-normalized (alpha <= 1/2)
        assert [r[-1] for r in rows] == ["out_of_domain", "out_of_domain", "ok", "ok"]
        assert rows[0][3] == "" and rows[0][4] == ""
        assert len(rows) == 4

    def test_width_at_order_one_is_out_of_domain(self, tmp_path):
        out = tmp_path / "sweep.csv"
        main(
            ["sweep", "--quantity", "posterior_width", "--q", "1", "--energy", "1",
             "--alpha-min", "1", "--alpha-max", "2", "--alpha-count", "2",
             "--out", str(out)]
        )
        rows = [r.split(",") for r in read(out).splitlines()[1:]]
        assert all(r[-1] == "out_of_domain" for r in rows)
        # gamma is still reported: the probe itself exists
        assert all(r[3] != "" for r in rows)

    def test_byte_identical_reruns(self, tmp_path):
        args = ["sweep", "--quantity", "mean_error", "--q", "0.25,2", "--energy", "1",
                "--alpha-min", "0.8", "--alpha-max", "20", "--alpha-count", "6"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_config_file_with_flag_override(self, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "quantity = eps_min\nq = 0.5\nenergy = 1\n"
            "alpha_min = 1\nalpha_max = 4\nalpha_count = 3\n",
            encoding="utf-8",
        )
        out = tmp_path / "sweep.csv"
        rc = main(["sweep", "--config", str(cfg), "--alpha-count", "5", "--out", str(out)])
        assert rc == 0
        assert len(read(out).splitlines()) == 1 + 5  # flag wins over config

    def test_bad_quantity_is_usage_error(self, tmp_path):
        rc = main(["sweep", "--quantity", "nonsense", "--out", str(tmp_path / "x.csv")])
        assert rc == 2

    def test_default_grid_reproduces_sensitivity_shapes(self, tmp_path):
        # defaults: q = (0.25, 0.5, 2), 60 log-spaced alphas on [0.76, 100]
        out = tmp_path / "sweep.csv"
        main(["sweep", "--quantity", "eps_min", "--out", str(out)])
        lines = read(out).splitlines()
        assert len(lines) == 1 + 60 * 3
        rows = [r.split(",") for r in lines[1:]]
        assert float(rows[0][0]) == pytest.approx(0.76, rel=1e-12)
        assert float(rows[-1][0]) == pytest.approx(100.0, rel=1e-12)
        by_q = {}
        for r in rows:
            by_q.setdefault(float(r[1]), []).append(r)
        closed = {q: [float(r[4]) for r in col] for q, col in by_q.items()}
        alphas = [float(r[0]) for r in by_q[0.5]]
        near_one = min(range(60), key=lambda k: abs(math.log(alphas[k])))
        assert all(abs(v - 0.5) < 1e-9 for v in closed[0.5])
        assert min(range(60), key=lambda k: closed[2.0][k]) == near_one
        low = closed[0.25]
        assert max(range(60), key=lambda k: low[k]) == near_one
        assert all(low[k] < low[k + 1] for k in range(near_one))
        assert all(low[k] > low[k + 1] for k in range(near_one, 59))
        # status contract: ok rows carry a relative deviation within tolerance
        for r in rows:
            if r[-1] == "ok":
                assert float(r[6]) <= 1e-6

    def test_infeasible_singularity_flags_no_converge(self, tmp_path):
        # at alpha - 1 + q ~ 1e-3 the score-moment singular mass falls below
        # double range; rows must be flagged, never silently wrong
        out = tmp_path / "sweep.csv"
        rc = main(
            ["sweep", "--quantity", "fisher", "--q", "0.25", "--energy", "1",
             "--alpha-min", "0.751", "--alpha-max", "0.752", "--alpha-count", "2",
             "--out", str(out)]
        )
        assert rc == 1
        rows = [r.split(",") for r in read(out).splitlines()[1:]]
        assert [r[-1] for r in rows] == ["no_converge", "no_converge"]
        assert all(r[4] != "" for r in rows)  # closed value still reported


class TestRunSweepLibrary:
    def test_alpha_major_row_order(self):
        config = SweepConfig(
            quantity="mean_error",
            q_list=(0.5, 2.0),
            energy=1.0,
            alpha_grid=AlphaGrid(1.0, 2.0, 2, "linear"),
            output_path="unused.csv",
        )
        rows = run_sweep(config)
        assert [(r.alpha, r.q) for r in rows] == [
            (1.0, 0.5), (1.0, 2.0), (2.0, 0.5), (2.0, 2.0)
        ]
        csv_text = sweep_to_csv(rows)
        assert csv_text.startswith(SWEEP_HEADER + "\n")
        assert csv_text.endswith("\n")

    def test_rejects_bad_grid(self):
        with pytest.raises(ConfigError):
            AlphaGrid(0.0, 2.0, 5)
        with pytest.raises(ConfigError):
            AlphaGrid(1.0, 2.0, 1)
        with pytest.raises(ConfigError):
            AlphaGrid(1.0, 2.0, 5, "cubic")

    def test_rejects_bad_config(self):
        grid = AlphaGrid(1.0, 2.0, 3)
        with pytest.raises(ConfigError):
            SweepConfig("eps_min", (), 1.0, grid, "x.csv")
        with pytest.raises(ConfigError):
            SweepConfig("eps_min", (0.5,), -1.0, grid, "x.csv")
        with pytest.raises(ConfigError):
            SweepConfig("wrong", (0.5,), 1.0, grid, "x.csv")


class TestSimulateCommand:
    ARGS = ["simulate", "--alpha", "2", "--energy", "1", "--eps", "0.3",
            "--q", "0.5", "--trials", "200000", "--seed", "42"]

    def test_gaussian_run_passes_checks(self, tmp_path):
        out = tmp_path / "report.json"
        rc = main(self.ARGS + ["--out", str(out)])
        assert rc == 0
        payload = json.loads(read(out))
        assert payload["predicted_mean_error"] == pytest.approx(0.5, rel=1e-12)
        assert set(payload) == {
            "trials", "empirical_mean", "mean_std_error",
            "empirical_generalized_error", "generalized_error_ci_low",
            "generalized_error_ci_high", "predicted_mean_error",
            "max_abs_deviation", "seed",
        }
        assert payload["trials"] == 200000 and payload["seed"] == 42

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(self.ARGS + ["--out", str(a)]) == 0
        assert main(self.ARGS + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_zero_trials_is_usage_error(self, tmp_path):
        rc = main(["simulate", "--alpha", "2", "--trials", "0",
                   "--out", str(tmp_path / "x.json")])
        assert rc == 2

    def test_energy_and_gamma_conflict(self, tmp_path):
        # argparse enforces the exclusion for flags
        rc = main(["simulate", "--alpha", "2", "--energy", "1", "--gamma", "1",
                   "--out", str(tmp_path / "x.json")])
        assert rc == 2

    def test_gamma_parameterization(self, tmp_path):
        out = tmp_path / "report.json"
        rc = main(["simulate", "--alpha", "1", "--gamma", "1", "--eps", "0",
                   "--q", "1", "--trials", "100000", "--seed", "11", "--out", str(out)])
        assert rc == 0
        assert json.loads(read(out))["predicted_mean_error"] == pytest.approx(0.5, rel=1e-12)

    def test_missing_alpha_is_usage_error(self, tmp_path):
        assert main(["simulate", "--trials", "10", "--out", str(tmp_path / "x.json")]) == 2


class TestSurfaceCommand:
    def test_density_values_on_known_grid(self, tmp_path):
        out = tmp_path / "surface.csv"
        rc = main(["surface", "--energy", "1", "--alpha-min", "1", "--alpha-max", "2",
                   "--alpha-count", "2", "--alpha-spacing", "linear",
                   "--x-min", "-1", "--x-max", "1", "--x-count", "3", "--out", str(out)])
        assert rc == 0
        lines = read(out).splitlines()
        assert lines[0] == "ln_alpha,x,pdf"
        assert len(lines) == 1 + 2 * 3
        rows = [r.split(",") for r in lines[1:]]
        # alpha = 1 at x = 0: density is exactly 1; alpha = 2 at x = 0: sqrt(2/pi)
        assert float(rows[1][0]) == 0.0
        assert float(rows[1][2]) == pytest.approx(1.0, rel=1e-12)
        assert float(rows[4][0]) == pytest.approx(math.log(2.0), rel=1e-12)
        assert float(rows[4][2]) == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-12)
        assert all(float(r[2]) >= 0.0 for r in rows)

    def test_narrow_shapes_rejected(self, tmp_path):
        rc = main(["surface", "--alpha-min", "0.4", "--out", str(tmp_path / "s.csv")])
        assert rc == 2
