"""Command line interface: verbs, formats, determinism, exit codes."""

import json

import pytest

from orbitope.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestIneqs:
    def test_sp4_text(self, capsys):
        code, out, _ = run(capsys, "ineqs", "--group", "sp:n=2",
                           "--lambda", "3,1", "--format", "text")
        assert code == 0
        assert out.strip() == "xi1 - xi2 >= 0; xi1 >= 3; xi2 >= 1"

    def test_json_round_trips_through_serialization(self, capsys):
        code, out, _ = run(capsys, "ineqs", "--group", "su:p=2,q=2",
                           "--lambda", "3,1,-1,-3", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        from orbitope.exactmath import HPolyhedron
        sys = HPolyhedron.from_json_obj({"dim": 4, "ineqs": obj["ineqs"]})
        assert sys.to_json_obj()["ineqs"] == obj["ineqs"]

    def test_deterministic(self, capsys):
        argv = ("ineqs", "--group", "so_star:n=3", "--lambda", "3,2,1",
                "--format", "json")
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2

    def test_rational_lambda(self, capsys):
        # rows canonicalize to primitive integers: xi1 >= 7/2 prints doubled
        code, out, _ = run(capsys, "ineqs", "--group", "sp:n=2",
                           "--lambda", "7/2,1")
        assert code == 0 and "2*xi1 >= 7" in out


class TestMemberOracle:
    def test_member_false_reports_row(self, capsys):
        code, out, _ = run(capsys, "member", "--group", "sp:n=2",
                           "--lambda", "3,1", "--xi", "2,1")
        assert code == 0
        assert "member: false" in out and "violated:" in out

    def test_member_true(self, capsys):
        code, out, _ = run(capsys, "member", "--group", "sp:n=2",
                           "--lambda", "3,1", "--xi", "5,1")
        assert code == 0 and "member: true" in out

    def test_oracle_witness(self, capsys):
        code, out, _ = run(capsys, "oracle", "--group", "sp:n=2",
                           "--lambda", "3,1", "--mu", "4,2", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["member"] is True and "cone_witness" in obj


class TestCheck:
    def test_zero_disagreements(self, capsys):
        code, out, _ = run(capsys, "check", "--group", "su:n=2,q=1",
                           "--lambda", "2,0", "--radius", "4")
        assert code == 0
        assert "0 disagreements" in out


class TestAdmHornPairs:
    def test_adm_text(self, capsys):
        code, out, _ = run(capsys, "adm", "--group", "so_star:n=3")
        assert code == 0
        assert out.splitlines() == ["1,-1,-1", "1,1,-1"]

    def test_horn_six_triples(self, capsys):
        code, out, _ = run(capsys, "horn", "--n", "3", "--r", "2")
        assert code == 0
        assert len(json.loads(out)) == 6

    def test_pairs_json(self, capsys):
        code, out, _ = run(capsys, "pairs", "--group", "su:p=2,q=1",
                           "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert all({"w", "w_prime", "m", "lambda"} <= set(r) for r in records)
        assert all(r["m"] == 0 for r in records)


class TestPlot:
    def test_svg_emission(self, tmp_path, capsys):
        out_file = tmp_path / "fig.svg"
        code, _, _ = run(capsys, "plot", "--group", "sp:n=2",
                         "--lambda", "3,1", "--out", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        assert svg.startswith("<svg") and "polygon" in svg and "</svg>" in svg

    def test_su21_plot(self, capsys):
        code, out, _ = run(capsys, "plot", "--group", "su:p=2,q=1",
                           "--lambda", "2,0")
        assert code == 0 and "<svg" in out

    def test_rank_cap(self, capsys):
        code, _, err = run(capsys, "plot", "--group", "sp:n=3",
                           "--lambda", "4,2,1")
        assert code == 1 and "rank-2" in err


class TestExitCodes:
    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "ineqs", "--group", "sp:n=2", "--lambda", "1,3")
        assert code == 1 and "error:" in err

    def test_unsupported_family(self, capsys):
        code, _, err = run(capsys, "ineqs", "--group", "so:p=5",
                           "--lambda", "2,1,0")
        assert code == 1

    def test_usage_error(self, capsys):
        assert run(capsys, "ineqs", "--group", "bogus", "--lambda", "1")[0] == 2
        assert run(capsys, "nonsense")[0] == 2

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "out.json"
        code, _, _ = run(capsys, "adm", "--group", "sp:n=2",
                         "--format", "json", "--out", str(path))
        assert code == 0
        assert json.loads(path.read_text()) == [[0, -1], [1, -1], [1, 0]]
