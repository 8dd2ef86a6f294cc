"""
Tests for the command-line application.
"""
import csv
import io

import numpy as np
import pytest

from cli import RheoLabApp, load_scenario, run_scenario_file
from cli.commands import cmd_compare, cmd_moduli
from config import ConfigManager
from exceptions import ConfigError

M3 = "mu2=1,mu3=1,eta1=2,eta2=2"
M4 = "mu2=1,mu4=1,eta1=2,eta3=2"
PARAMS = {
    1: "mu3=1,mu_p=1,eta1=2,eta2=2",
    2: "mu2=1,mu3=1,eta1=2,eta_g=2",
    3: M3,
    4: M4,
}


def run(argv):
    return RheoLabApp().run(argv)


def read_rows(text):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return header, [row for row in reader]


def columns(text):
    header, rows = read_rows(text)
    data = np.array([[float(v) for v in row] for row in rows])
    return {name: data[:, i] for i, name in enumerate(header)}


def report_value(text, key):
    for line in text.splitlines():
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    raise AssertionError(f"{key} missing from {text!r}")


class TestSimulate3d:
    def test_rest_is_constant(self, capsys):
        assert run(["simulate3d", "--model", "4", "--params", M4, "--protocol", "rest",
                    "--t-end", "0.05", "--dt", "0.01"]) == 0
        out = capsys.readouterr().out
        header, rows = read_rows(out)
        assert header == ["t", "S11", "S22", "S33", "S12", "S13", "S23", "N1", "N2",
                          "psi", "xi", "det_a", "det_b"]
        assert len(rows) == 6
        cols = columns(out)
        for name in ("S11", "S22", "S33", "S12", "S13", "S23", "N1", "N2"):
            assert np.all(cols[name] == cols[name][0])

    def test_output_is_deterministic(self, tmp_path):
        argv = ["simulate3d", "--model", "1", "--params", PARAMS[1], "--protocol",
                "osc:gamma0=0.1,omega=2", "--t-end", "0.5", "--dt", "0.01"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(argv + ["--out", str(first)]) == 0
        assert run(argv + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_record_stride(self, capsys):
        assert run(["simulate3d", "--model", "2", "--params", PARAMS[2], "--protocol", "shear:rate=1",
                    "--t-end", "0.1", "--dt", "0.01", "--record-every", "5"]) == 0
        cols = columns(capsys.readouterr().out)
        np.testing.assert_allclose(cols["t"], [0.0, 0.05, 0.1])

    def test_step_failure_exit_code(self, capsys):
        code = run(["simulate3d", "--model", "4", "--params", "mu2=1,mu4=1,eta1=0.01,eta3=0.01",
                    "--protocol", "shear:rate=1", "--t-end", "5", "--dt", "0.1"])
        assert code == 3
        assert "smaller dt" in capsys.readouterr().err

    def test_invalid_scenario(self, capsys):
        assert run(["simulate3d", "--model", "4", "--params", M4, "--dt", "-1"]) == 1
        assert "dt" in capsys.readouterr().err

    def test_missing_parameter(self, capsys):
        assert run(["simulate3d", "--model", "4", "--params", "mu2=1,mu4=1,eta1=2"]) == 1

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            run(["simulate4d"])
        assert info.value.code == 1


class TestSimulate1d:
    def test_constant_rate_steady_stress(self, capsys):
        assert run(["simulate1d", "--model", "3", "--params", M3, "--protocol", "shear:rate=0.2",
                    "--t-end", "60", "--dt", "0.01", "--record-every", "100"]) == 0
        cols = columns(capsys.readouterr().out)
        assert cols["sigma"][-1] == pytest.approx(2.0 * 0.1, rel=1e-3)
        assert cols["eps"][-1] == pytest.approx(0.5 * 0.2 * 60.0)

    def test_network_equals_model_map(self, capsys):
        base = ["simulate1d", "--protocol", "osc:gamma0=0.1,omega=1", "--t-end", "5", "--dt", "0.01"]
        assert run(base + ["--model", "3", "--params", M3]) == 0
        by_model = columns(capsys.readouterr().out)
        network = "series(spring(mu=1), parallel(spring(mu=1), dashpot(eta=2)), dashpot(eta=2))"
        assert run(base + ["--network", network]) == 0
        by_network = columns(capsys.readouterr().out)
        np.testing.assert_allclose(by_network["sigma"], by_model["sigma"], rtol=1e-12, atol=1e-15)

    def test_zero_drive(self, capsys):
        assert run(["simulate1d", "--model", "1", "--params", PARAMS[1], "--protocol", "rest",
                    "--t-end", "1", "--dt", "0.1"]) == 0
        cols = columns(capsys.readouterr().out)
        assert not np.any(cols["sigma"])

    def test_non_burgers_network(self, capsys):
        assert run(["simulate1d", "--network", "spring(mu=1)", "--protocol", "shear:rate=1",
                    "--t-end", "1", "--dt", "0.1"]) == 2
        assert "solid-like" in capsys.readouterr().err


class TestCompile:
    def test_canonical_network_of_model(self, capsys):
        assert run(["compile", "--model", "3", "--params", M3]) == 0
        out = capsys.readouterr().out
        assert report_value(out, "burgers") == "p1=3.0 p2=1.0 q1=2.0 q2=2.0"
        assert report_value(out, "network").startswith("series(spring(mu=1.0)")

    def test_text(self, capsys):
        assert run(["compile", "series(spring(mu=1), dashpot(eta=2))"]) == 0
        out = capsys.readouterr().out
        assert report_value(out, "numerator") == "0.0 2.0"
        assert report_value(out, "denominator") == "1.0 1.0"
        assert report_value(out, "burgers") == "p1=1.0 p2=0.0 q1=2.0 q2=0.0"

    def test_solid_like_rejection(self, capsys):
        assert run(["compile", "spring(mu=1)"]) == 2
        captured = capsys.readouterr()
        assert report_value(captured.out, "numerator") == "2.0"
        assert "solid-like" in captured.err

    def test_syntax_error_caret(self, capsys):
        assert run(["compile", "series(spring(mu=1))"]) == 1
        err = capsys.readouterr().err.splitlines()
        assert err[0] == "series(spring(mu=1))"
        assert err[1] == " " * 19 + "^"

    def test_nothing_to_compile(self, capsys):
        assert run(["compile"]) == 1


class TestCompare:
    def _deviation(self, model, protocol, amplitude, t_end=1.0):
        scenario = load_scenario(None, {"model": model, "params": PARAMS[model], "protocol": protocol,
                                        "amplitude": amplitude, "t_end": t_end, "dt": 1e-3})
        return cmd_compare(scenario).max_relative_deviation

    @pytest.mark.parametrize("model", [1, 2, 3, 4])
    def test_small_shear_matches_burgers_law(self, model):
        assert self._deviation(model, "shear:rate=1", 1e-4) <= 1e-2

    def test_deviation_shrinks_with_amplitude(self):
        large = self._deviation(4, "shear:rate=1", 1e-2)
        small = self._deviation(4, "shear:rate=1", 1e-4)
        assert small < large / 10.0

    @pytest.mark.parametrize("model", [1, 2, 3, 4])
    def test_uniaxial_deviation_is_linear_in_amplitude(self, model):
        """N₁ departs from the Burgers law at first order in the strain."""
        coarse = self._deviation(model, "uniaxial:rate=1", 1e-4)
        fine = self._deviation(model, "uniaxial:rate=1", 1e-5)
        assert fine <= 1e-3
        assert fine < coarse / 5.0

    @pytest.mark.parametrize("model", [1, 2, 3, 4])
    def test_uniaxial_uses_three_halves(self, model):
        assert self._deviation(model, "uniaxial:rate=1", 1e-4) <= 1e-2

    def test_rest_gives_zero(self):
        assert self._deviation(2, "rest", 1.0) == 0.0

    def test_report(self, capsys):
        assert run(["compare", "--model", "4", "--params", M4, "--protocol", "shear:rate=1",
                    "--amplitude", "1e-4", "--t-end", "0.5", "--dt", "1e-3"]) == 0
        out = capsys.readouterr().out
        assert report_value(out, "mode") == "shear"
        assert float(report_value(out, "max_relative_deviation")) <= 1e-2

    def test_mode_mismatch(self, capsys):
        assert run(["compare", "--model", "4", "--params", M4, "--protocol", "shear:rate=1",
                    "--compare-mode", "uniaxial", "--t-end", "0.1", "--dt", "0.01"]) == 1


class TestModuli:
    def test_plateau_and_verbatim_omega(self, capsys):
        assert run(["moduli", "--model", "1", "--params", PARAMS[1], "--omega", "1e-1,1.0,10,1e6"]) == 0
        header, rows = read_rows(capsys.readouterr().out)
        assert header == ["omega", "Gp", "Gpp"]
        assert [row[0] for row in rows] == ["1e-1", "1.0", "10", "1e6"]
        assert float(rows[-1][1]) == pytest.approx(4.0, rel=1e-3)

    def test_network_input(self, capsys):
        assert run(["moduli", "--network", "series(spring(mu=1), dashpot(eta=2))", "--omega", "1"]) == 0
        _, rows = read_rows(capsys.readouterr().out)
        # 2iω/(1+iω) at ω = 1
        assert float(rows[0][1]) == pytest.approx(1.0)
        assert float(rows[0][2]) == pytest.approx(1.0)

    def test_omega_required(self, capsys):
        assert run(["moduli", "--model", "1", "--params", PARAMS[1]]) == 1

    def test_verify_needs_model(self):
        scenario = load_scenario(None, {"network": "series(spring(mu=1), dashpot(eta=2))",
                                        "omega": "1", "verify": True})
        with pytest.raises(ConfigError):
            cmd_moduli(scenario)

    @pytest.mark.parametrize("model", [1, 2, 3, 4])
    def test_verify_against_simulation(self, model):
        scenario = load_scenario(None, {"model": model, "params": PARAMS[model], "omega": "0.1,1,10",
                                        "verify": True})
        header, rows = cmd_moduli(scenario, ConfigManager())
        assert header[-2:] == ["dev_Gp", "dev_Gpp"]
        for row in rows:
            assert row[-2] <= 0.02
            assert row[-1] <= 0.02


class TestScenarioFiles:
    def test_file_with_flag_override(self, tmp_path, capsys):
        scenario = tmp_path / "run.txt"
        scenario.write_text(
            "# start-up of model 4\n"
            "model = 4\n"
            f"params = {M4}\n"
            "protocol = shear:rate=1\n"
            "t_end = 0.1\n"
            "dt = 0.01\n",
            encoding="utf-8")
        assert run(["simulate1d", "--scenario", str(scenario)]) == 0
        assert len(read_rows(capsys.readouterr().out)[1]) == 11
        assert run(["simulate1d", "--scenario", str(scenario), "--dt", "0.05"]) == 0
        assert len(read_rows(capsys.readouterr().out)[1]) == 3

    def test_individual_parameter_keys(self, tmp_path):
        scenario = tmp_path / "run.txt"
        scenario.write_text("model = 2\nmu2 = 1\nmu3 = 1.5\neta1 = 2\neta_g = 3\nt_end = 1\ndt = 0.1\n",
                            encoding="utf-8")
        params = load_scenario(scenario).material_params()
        assert params.mu3 == 1.5
        assert params.eta_g == 3.0

    def test_parameter_file(self, tmp_path):
        params_file = tmp_path / "m4.params"
        params_file.write_text("mu2 = 1\nmu4 = 1\neta1 = 2\neta3 = 2\n", encoding="utf-8")
        scenario = load_scenario(None, {"model": 4, "params": str(params_file)})
        assert scenario.material_params().eta3 == 2.0

    def test_yaml_scenario(self, tmp_path):
        scenario = tmp_path / "run.yaml"
        scenario.write_text(
            "model: 3\n"
            "params: {mu2: 1, mu3: 1, eta1: 2, eta2: 2}\n"
            "protocol: 'osc:gamma0=0.01,omega=2'\n"
            "t_end: 2\n"
            "dt: 0.01\n",
            encoding="utf-8")
        loaded = load_scenario(scenario)
        assert loaded.model == 3
        assert loaded.flow_protocol().to_spec() == "osc:gamma0=0.01,omega=2.0"

    def test_unknown_key(self, tmp_path):
        scenario = tmp_path / "run.txt"
        scenario.write_text("model = 4\ncolour = red\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_scenario(scenario)

    def test_defaults_from_configuration(self):
        scenario = load_scenario(None, {"model": 4, "params": M4})
        assert scenario.dt == 0.001
        assert scenario.t_end == 10.0
        assert scenario.protocol == "rest"

    def test_sweep_entry_defaults_output(self, tmp_path):
        scenario = tmp_path / "case.txt"
        scenario.write_text(f"command = simulate1d\nmodel = 4\nparams = {M4}\n"
                            "protocol = shear:rate=1\nt_end = 0.1\ndt = 0.01\n", encoding="utf-8")
        path, code, _ = run_scenario_file(str(scenario))
        assert (path, code) == (str(scenario), 0)
        header, rows = read_rows((tmp_path / "case.csv").read_text(encoding="utf-8"))
        assert header == ["t", "eps", "sigma"]
        assert len(rows) == 11

    def test_sweep(self, tmp_path, capsys):
        paths = []
        for model in (1, 4):
            scenario = tmp_path / f"m{model}.txt"
            scenario.write_text(f"model = {model}\nparams = {PARAMS[model]}\n"
                                "protocol = shear:rate=1\nt_end = 0.05\ndt = 0.01\n"
                                f"out = {tmp_path / f'm{model}.csv'}\n", encoding="utf-8")
            paths.append(str(scenario))
        bad = tmp_path / "bad.txt"
        bad.write_text("model = 4\nt_end = 1\ndt = 0.1\n", encoding="utf-8")
        assert run(["sweep", "--workers", "2"] + paths + [str(bad)]) == 1
        for model in (1, 4):
            header, rows = read_rows((tmp_path / f"m{model}.csv").read_text(encoding="utf-8"))
            assert header[0] == "t" and len(rows) == 6
        assert "bad.txt" in capsys.readouterr().err
