import json
import subprocess
import sys

from matdecomp.cli import main

K4E_SPEC = {
    "kind": "graphic",
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a", "b"], ["b", "c"], ["c", "a"], ["c", "d"], ["d", "a"]],
}


def write_spec(tmp_path, payload, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestInfo:
    def test_uniform_2_4(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 2, "n": 4})
        assert main(["info", path]) == 0
        out = capsys.readouterr().out
        assert "3-connected: true" in out
        assert "rank: 2" in out

    def test_graphic_triangle(self, tmp_path, capsys):
        path = write_spec(tmp_path, {
            "kind": "graphic", "vertices": ["a", "b", "c"],
            "edges": [["a", "b"], ["b", "c"], ["c", "a"]]})
        assert main(["info", path]) == 0
        assert "rank: 2" in capsys.readouterr().out

    def test_bad_json_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("not json", encoding="utf-8")
        assert main(["info", str(path)]) == 2

    def test_json_format(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 2, "n": 4})
        assert main(["info", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["3-connected"] is True

    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr(
            "sys.stdin", io.StringIO(json.dumps({"kind": "uniform", "r": 2, "n": 4})))
        assert main(["info", "-"]) == 0
        assert "ground size: 4" in capsys.readouterr().out


class TestSeparations:
    def test_k4e_two_good(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["separations", path, "--good-only"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out) == 2
        assert all(s["order"] == 2 for s in out)

    def test_u34_good_only_empty(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 3, "n": 4})
        assert main(["separations", path, "--good-only"]) == 0
        assert json.loads(capsys.readouterr().out) == []

    def test_u24_empty(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 2, "n": 4})
        assert main(["separations", path]) == 0
        assert json.loads(capsys.readouterr().out) == []


class TestDecompose:
    def test_k4e_report(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["decompose", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [n["part"] for n in report["nodes"]] == [["0", "1"], ["3", "4"], ["2"]]
        assert [n["torso"]["kind"] for n in report["nodes"]] == [
            "circuit", "circuit", "cocircuit"]
        assert report["adhesion"] == 2 and report["irredundant"] is True
        assert len(report["edges"]) == 2

    def test_dual_wrapper(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"dual": K4E_SPEC})
        assert main(["decompose", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [n["torso"]["kind"] for n in report["nodes"]] == [
            "cocircuit", "cocircuit", "circuit"]

    def test_dot_output_is_a_tree(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["decompose", path, "--format", "dot"]) == 0
        out = capsys.readouterr().out
        node_lines = [l for l in out.splitlines() if "[label=" in l and "--" not in l]
        edge_lines = [l for l in out.splitlines() if "--" in l]
        assert len(node_lines) == len(edge_lines) + 1

    def test_too_small_exits_4(self, tmp_path):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 1, "n": 2})
        assert main(["decompose", path]) == 4

    def test_disconnected_exits_3(self, tmp_path):
        path = write_spec(tmp_path, {
            "kind": "circuits", "ground": ["a", "b", "c", "d", "e", "f"],
            "circuits": [["a", "b", "c"], ["d", "e", "f"]]})
        assert main(["decompose", path]) == 3

    def test_over_cap_exits_5(self, tmp_path):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 2, "n": 6})
        assert main(["decompose", path, "--cap", "5"]) == 5

    def test_figure_written(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        figure = tmp_path / "tree.png"
        assert main(["decompose", path, "--figure", str(figure)]) == 0
        assert figure.exists() and figure.stat().st_size > 0

    def test_figure_for_single_node_tree(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "uniform", "r": 2, "n": 4})
        figure = tmp_path / "single.png"
        assert main(["decompose", path, "--figure", str(figure)]) == 0
        assert figure.exists() and figure.stat().st_size > 0

    def test_json_round_trip(self, tmp_path, capsys):
        from matdecomp.report import report_from_json, report_to_json
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["decompose", path]) == 0
        text = capsys.readouterr().out
        assert report_to_json(report_from_json(text)) == text


class TestVerify:
    def test_k4e_all_suites_pass(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["verify", path, "--suite", "all"]) == 0
        out = capsys.readouterr().out
        assert "result: PASS" in out
        assert "FAIL" not in out

    def test_duality_suite(self, tmp_path, capsys):
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["verify", path, "--suite", "duality"]) == 0
        assert "dual-decomposition" in capsys.readouterr().out

    def test_axiom_violation_exits_2(self, tmp_path):
        path = write_spec(tmp_path, {
            "kind": "circuits", "ground": ["a", "b"],
            "circuits": [["a"], ["a", "b"]]})
        assert main(["verify", path]) == 2

    def test_reserved_labels_rejected(self, tmp_path):
        path = write_spec(tmp_path, {
            "kind": "circuits", "ground": ["@e0", "b", "c"],
            "circuits": [["@e0", "b", "c"]]})
        assert main(["info", path]) == 2


class TestVerifyFailurePath:
    def test_failing_suite_exits_1(self, tmp_path, capsys, monkeypatch):
        from matdecomp.suites import SuiteReport

        def broken(m, seed=0):
            report = SuiteReport("duality")
            report.fail("separation-duality", 1, "injected failure")
            return report

        monkeypatch.setattr("matdecomp.cli.run_duality_suite", broken)
        path = write_spec(tmp_path, K4E_SPEC)
        assert main(["verify", path, "--suite", "duality"]) == 1
        out = capsys.readouterr().out
        assert "result: FAIL" in out and "injected failure" in out


class TestDeterminism:
    def test_decompose_bytes_identical_across_processes(self, tmp_path):
        path = write_spec(tmp_path, K4E_SPEC)
        outputs = set()
        for _ in range(3):
            proc = subprocess.run(
                [sys.executable, "-m", "matdecomp.cli", "decompose", path],
                capture_output=True, check=True)
            outputs.add(proc.stdout)
        assert len(outputs) == 1
