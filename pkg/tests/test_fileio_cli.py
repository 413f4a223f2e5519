import json

import numpy as np
import pytest

from vccompress import BipartiteRelation, InputError, SetSystem
from vccompress.cli import main
from vccompress.fileio import dumps_brel, dumps_ssys, loads_brel, loads_ssys
from vccompress.generators import intervals, thresholds


class TestFormats:
    def test_ssys_round_trip(self):
        C = intervals(4)
        assert loads_ssys(dumps_ssys(C, ["family=intervals"])) == C

    def test_ssys_comments_and_blank_lines(self):
        C = loads_ssys("# a class\n3 2\n\n110  # first\n011\n")
        assert C.to_strings() == ["011", "110"]

    def test_ssys_zero_points(self):
        assert loads_ssys("0 1\n") == SetSystem(0, (0,))

    @pytest.mark.parametrize("text", ["", "3\n", "2 2\n10\n", "2 1\n1x\n", "2 1\n101\n"])
    def test_ssys_rejects(self, text):
        with pytest.raises(InputError):
            loads_ssys(text)

    def test_brel_round_trip(self):
        R = BipartiteRelation(np.array([[1, 0, 1], [0, 0, 1]]))
        R2 = loads_brel(dumps_brel(R))
        assert (R2.matrix == R.matrix).all()

    def test_brel_rejects(self):
        with pytest.raises(InputError):
            loads_brel("2 2\n10\n1\n")


@pytest.fixture
def files(tmp_path):
    thr = tmp_path / "thr3.ssys"
    thr.write_text(dumps_ssys(thresholds(3)))
    tri = tmp_path / "tri.ssys"
    tri.write_text("3 3\n110\n011\n101\n")
    ivl = tmp_path / "ivl.ssys"
    ivl.write_text("5 3\n11100\n01110\n00111\n")
    rel = tmp_path / "ord3.brel"
    rel.write_text("3 3\n111\n011\n001\n")
    return {"thr": str(thr), "tri": str(tri), "ivl": str(ivl), "rel": str(rel), "dir": tmp_path}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv + ["--json"])
    assert code == 0
    return json.loads(out)


class TestCli:
    def test_gen_is_reproducible(self, capsys, files):
        a = files["dir"] / "a.ssys"
        b = files["dir"] / "b.ssys"
        for p in (a, b):
            assert main(["gen", "random_filtered", "6", "--seed", "5", "--n-concepts", "7", "--out", str(p)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert "seed=5" in a.read_text()

    def test_gen_relation(self, capsys):
        code, out, _ = run(capsys, ["gen", "order_relation", "3"])
        assert code == 0 and out.endswith("3 3\n111\n011\n001\n")

    def test_vc(self, capsys, files):
        assert run_json(capsys, ["vc", files["thr"]])["vc"] == 1

    def test_dual(self, capsys, files):
        d = run_json(capsys, ["dual", files["thr"]])
        assert d["ground"] == 4
        code, out, _ = run(capsys, ["dual", files["thr"]])
        assert out.startswith("4 3\n")

    def test_teach(self, capsys, files):
        rec = run_json(capsys, ["teach", files["thr"], "110"])
        assert set(rec) == {"concept", "witness", "size", "bound", "vc"}
        assert rec["size"] == 2 and rec["witness"] == [1, 2]

    def test_rtd(self, capsys, files):
        rec = run_json(capsys, ["rtd", files["thr"]])
        assert rec["max"] <= rec["bound"] == 1
        code, out, _ = run(capsys, ["rtd", files["thr"]])
        assert "bound 1" in out

    def test_compress(self, capsys, files):
        rec = run_json(capsys, ["compress", files["thr"]])
        assert rec["size"] <= rec["bound"] == 1

    def test_extend(self, capsys, files):
        rec = run_json(capsys, ["extend", files["thr"], "*1*"])
        assert rec["concept"][1] == "1" and rec["size"] <= rec["bound"] == 2

    def test_extend_inconsistent(self, capsys, files):
        code, _, err = run(capsys, ["extend", files["thr"], "01*"])
        assert code == 2 and "input error" in err

    def test_decompose(self, capsys, files):
        rec = run_json(capsys, ["decompose", files["thr"], "110", "--k", "2"])
        assert rec["status"] == "ok" and rec["n"] == 1

    def test_decompose_exhausted(self, capsys, files):
        rec = run_json(capsys, ["decompose", files["thr"], "110", "--k", "1"])
        assert rec["status"] == "exhausted"
        code, _, _ = run(capsys, ["decompose", files["thr"], "110", "--k", "1", "--strict"])
        assert code == 4

    def test_pq(self, capsys, files):
        rec = run_json(capsys, ["pq", files["ivl"]])
        assert rec["size"] == 1

    def test_hype(self, capsys, files):
        assert run_json(capsys, ["hype", "check", files["tri"], "111", "--k", "2"])["is_hype"]
        fam = run_json(capsys, ["hype", "family", files["tri"], "--k", "2"])
        assert fam["hypes"] == ["011", "101", "110", "111"]
        dec = run_json(capsys, ["hype", "decompose", files["tri"], "111", "--k", "2"])
        assert dec["n"] == 3
        cov = run_json(capsys, ["hype", "cover", files["tri"], "111", "--k", "2"])
        assert cov["size"] == 2 and cov["valid"]

    def test_hype_needs_gamma(self, capsys, files):
        assert run(capsys, ["hype", "check", files["tri"]])[0] == 2

    def test_udtfs(self, capsys, files):
        rec = run_json(capsys, ["udtfs", files["rel"]])
        assert rec["successes"] == 3
        code, out, _ = run(capsys, ["udtfs", files["rel"], "--A", "0,1"])
        assert code == 0 and "exact" in out

    def test_report(self, capsys):
        code, out, _ = run(capsys, ["report", "kc-table"])
        assert code == 0 and json.loads(out)["results"]["2"] == 6

    def test_bad_input(self, capsys, files):
        assert run(capsys, ["vc", str(files["dir"] / "missing.ssys")])[0] == 2
        assert run(capsys, ["teach", files["thr"], "11"])[0] == 2
        assert run(capsys, ["decompose", files["thr"], "110", "--alpha", "1/3"])[0] == 2

    def test_cap(self, capsys):
        code, _, err = run(capsys, ["gen", "thresholds", "30"])
        assert code == 3 and "cap" in err
