import json

import pytest

import monodyn.monomial
from monodyn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def assert_no_floats(node):
    assert not isinstance(node, float)
    if isinstance(node, dict):
        for k, v in node.items():
            assert_no_floats(k)
            assert_no_floats(v)
    elif isinstance(node, list):
        for v in node:
            assert_no_floats(v)


class TestAnalyze:
    def test_basic_envelope(self, capsys):
        code, out, err = run(capsys, "analyze", "--q", "7", "--n", "2")
        assert code == 0 and err == ""
        doc = json.loads(out)
        assert doc["schema"] == "monodyn/1"
        assert doc["command"] == "analyze"
        assert doc["seed"] == 0
        assert doc["input_hash"].startswith("sha256:")
        res = doc["result"]
        assert res["q_star"] == 3 and res["r_hat"] == 2
        assert res["periodic_by_period"] == {"1": 2, "2": 2}
        assert res["cycles_by_length"] == {"1": 2, "2": 1}
        assert res["periodic_total"] == 4 and res["cycle_total"] == 3
        assert_no_floats(doc)

    def test_brute_cross_check(self, capsys):
        code, out, _ = run(capsys, "analyze", "--q", "19", "--n", "2", "--brute")
        assert code == 0
        brute = json.loads(out)["result"]["brute"]
        assert brute["match"] is True
        assert brute["periodic_by_period"] == {"1": 2, "2": 2, "6": 6}
        assert brute["component_count"] == 4

    def test_nonunit_coefficient(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--q", "5", "--n", "3", "--a", "3", "--brute"
        )
        assert code == 0
        brute = json.loads(out)["result"]["brute"]
        assert brute["has_nonzero_fixed"] is False
        assert brute["periodic_by_period"] == {"1": 1, "2": 4}
        assert brute["periodic_total"] == 5
        assert brute["match"] is True

    def test_composite_q_rejected(self, capsys):
        code, _, err = run(capsys, "analyze", "--q", "12", "--n", "2")
        assert code == 2
        assert "prime power" in err

    def test_reruns_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "analyze", "--q", "49", "--n", "3", "--brute")
        _, second, _ = run(capsys, "analyze", "--q", "49", "--n", "3", "--brute")
        assert first == second


class TestGraph:
    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "graph", "--q", "2", "--n", "2", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph state_space {")
        assert "// schema: monodyn/1" in out
        assert "0 -> 0;" in out and "1 -> 1;" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "graph", "--q", "7", "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["successor"] == [0, 1, 4, 2, 2, 4, 1]
        assert_no_floats(doc)

    def test_field_cap(self, capsys):
        code, _, err = run(capsys, "graph", "--q", str(2**23), "--n", "2")
        assert code == 3
        assert "error" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "graph.json"
        code, out, _ = run(
            capsys, "graph", "--q", "7", "--n", "2", "--output", str(target)
        )
        assert code == 0 and out == ""
        doc = json.loads(target.read_text())
        assert doc["command"] == "graph"


class TestSweep:
    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--r", "1", "--n", "2", "--t", "1000"
        )
        assert code == 0
        doc = json.loads(out)
        res = doc["result"]
        assert res["analytic"] == {"num": 2, "den": 1}
        assert res["final_abs_error"] == {"num": 0, "den": 1}
        assert [c["t"] for c in res["checkpoints"]] == [10, 100, 1000]
        assert_no_floats(doc)

    def test_csv_output(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep", "--r", "1", "--n", "3", "--t", "100",
            "--checkpoints", "10,100", "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# schema: monodyn/1"
        assert lines[4] == "t,pi_t,empirical_num,empirical_den,analytic_num,analytic_den"
        assert len(lines) == 7

    def test_csv_reruns_identical(self, capsys):
        argv = ("sweep", "--r", "2", "--n", "2", "--t", "5000", "--format", "csv")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_bad_checkpoint_list(self, capsys):
        code, _, err = run(
            capsys,
            "sweep", "--r", "1", "--n", "2", "--t", "100",
            "--checkpoints", "10,abc",
        )
        assert code == 2
        assert "checkpoint" in err

    def test_out_of_range_checkpoint(self, capsys):
        code, _, _ = run(
            capsys,
            "sweep", "--r", "1", "--n", "2", "--t", "100",
            "--checkpoints", "500",
        )
        assert code == 2

    def test_threads_flag_matches_serial(self, capsys):
        base = ("sweep", "--r", "2", "--s", "2", "--n", "3", "--t", "30000")
        _, serial, _ = run(capsys, *base)
        _, parallel, _ = run(capsys, *base, "--threads", "3")
        assert serial == parallel


class TestFfield:
    def test_density_mode(self, capsys):
        code, out, _ = run(capsys, "ffield", "--q", "2", "--r", "3", "--density")
        assert code == 0
        res = json.loads(out)["result"]
        assert res["dirichlet_density"] == {"num": 1, "den": 2}
        assert res["subsequence_limits"] == [
            {"num": 2, "den": 3},
            {"num": 1, "den": 3},
        ]

    def test_dmean_mode(self, capsys):
        code, out, _ = run(
            capsys, "ffield", "--q", "3", "--n", "2", "--r", "1", "--dmean"
        )
        assert code == 0
        res = json.loads(out)["result"]
        assert res["dirichlet_D"] == {"num": 2, "den": 1}

    def test_oscillate_csv(self, capsys):
        code, out, _ = run(
            capsys,
            "ffield", "--q", "2", "--r", "3", "--t", "40",
            "--oscillate", "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[4] == "t,pi_K,C_r,ratio_num,ratio_den,subsequence_tag"
        assert len(lines) == 5 + 40

    def test_oscillate_missing_t(self, capsys):
        code, _, err = run(capsys, "ffield", "--q", "2", "--r", "3", "--oscillate")
        assert code == 2
        assert "--t" in err

    def test_ramified_r(self, capsys):
        code, _, _ = run(capsys, "ffield", "--q", "2", "--r", "4", "--density")
        assert code == 2


class TestVerify:
    def test_quick_scope_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "quick", "--seed", "7")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].startswith("OK:")
        assert "seed=7" in lines[-1]

    def test_detects_broken_formula(self, capsys, monkeypatch):
        real = monodyn.monomial.periodic_count

        def wrong(q, n, r):
            val = real(q, n, r)
            return val + 2 if (q, n, r) == (7, 2, 2) else val

        monkeypatch.setattr(monodyn.monomial, "periodic_count", wrong)
        code, out, _ = run(capsys, "verify", "--scope", "quick")
        assert code == 1
        assert "FAIL" in out


class TestParsing:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main([])
        capsys.readouterr()

    def test_mutually_exclusive_ffield_modes(self, capsys):
        with pytest.raises(SystemExit):
            main(["ffield", "--q", "2", "--density", "--dmean"])
        capsys.readouterr()
