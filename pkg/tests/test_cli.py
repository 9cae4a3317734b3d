import io
import json
import subprocess
import sys

import pytest

from eqpic import __version__
from eqpic.cli import run

TOP_KEYS = {"request", "divisor_class", "relations", "picard", "axioms", "errata", "version"}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_fab_text():
    code, out, _ = call("fab", "--a", "2", "--b", "3", "--n", "3")
    assert code == 0
    assert "[D] = 33*u + 34*v - 42*c1" in out


def test_fab_json():
    rep = call_json("fab", "--a", "2", "--b", "3", "--n", "3")
    assert rep["divisor_class"] == {"u": "33", "v": "34", "c1": "-42"}
    assert set(rep) <= TOP_KEYS
    assert rep["version"] == __version__
    assert rep["request"] == {"command": "fab", "a": "2", "b": "3", "n": "3"}
    assert [e["id"] for e in rep["errata"]] == ["fab-closed-form-F1"]


def test_fab_relations():
    rep = call_json("fab", "--a", "2", "--b", "3", "--n", "3", "--relations")
    rels = rep["relations"]
    assert [r["index"] for r in rels] == ["1", "2", "3", "4"]
    assert [r["t_power"] for r in rels] == ["3", "2", "1", "0"]
    assert rels[0]["class"] == "33*u + 34*v - 42*c1"


def test_gdmn_char2_json():
    rep = call_json("gdmn", "--d", "2", "--m", "1", "--n", "3", "--char", "2")
    assert rep["divisor_class"] == {"s1": "2", "c1": "-1"}
    assert rep["request"]["char"] == "2"


def test_gdmn_relations_are_ascending():
    rep = call_json("gdmn", "--d", "2", "--m", "1", "--n", "2", "--relations")
    assert [r["t_power"] for r in rep["relations"]] == ["0", "1", "2"]
    assert rep["relations"][2]["class"] == "-2*c1 - 3*tau1"


def test_picard_commands():
    rep = call_json("picard", "gdmn", "--d", "4", "--m", "1", "--n", "2", "--torsor")
    assert rep["picard"]["torsion"] == ["9"] and rep["picard"]["rank"] == "0"
    rep = call_json("picard", "fab", "--a", "2", "--b", "3", "--n", "3")
    assert rep["picard"]["rank"] == "2" and rep["picard"]["torsion"] == []
    rep = call_json("picard", "fab", "--a", "2", "--b", "3", "--n", "3", "--torsor")
    assert rep["picard"]["relations"] == [["-42", "33", "34"], ["1", "-1", "-1"]]


def test_genus5_json():
    rep = call_json("genus", "5")
    pic = rep["picard"]
    assert pic["rank"] == "1"
    assert pic["torsion"] == []
    assert pic["divisor_multiples"] == {"T5": "8"}
    assert pic["divisor_multiples_signed"] == {"T5": "-8"}
    assert pic["open"]["torsion"] == ["8"]
    assert {a["id"] for a in rep["axioms"]} == {"lambda1-non-torsion", "c1-is-lambda1"}
    assert set(rep) <= TOP_KEYS


def test_genus_texts():
    for g, line in [(3, "[H3] = 9*lambda1"), (4, "[M4ev] = 34*lambda1"), (5, "[T5] = 8*lambda1")]:
        code, out, _ = call("genus", str(g))
        assert code == 0
        assert line in out


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["fab", "--a", "3", "--b", "2", "--n", "3"], "requires 0<a<b"),
        (["fab", "--a", "1", "--b", "2", "--n", "2"], "requires n>2"),
        (["gdmn", "--d", "2", "--m", "3", "--n", "3"], "requires 0<m<n"),
        (["gdmn", "--d", "2", "--m", "1", "--n", "3", "--char", "4"], "characteristic"),
        (["genus", "3", "--char", "9"], "characteristic"),
        (["fab", "--a", "1", "--b", "2", "--n", "3", "--relations"], "relation-free"),
    ],
)
def test_invalid_parameters_exit_2(argv, needle):
    code, _, err = call(*argv)
    assert code == 2
    assert needle in err


def test_argparse_errors_exit_2():
    assert call("genus", "6")[0] == 2
    assert call("fab", "--a", "x", "--b", "2", "--n", "3")[0] == 2
    assert call()[0] == 2


def test_invariant_failure_exit_1(monkeypatch):
    import eqpic.cli as cli
    from eqpic.moduli import AlphaDivisionError

    def boom(s):
        raise AlphaDivisionError("not divisible")

    monkeypatch.setattr(cli, "g_divisor_class", boom)
    code, _, err = call("gdmn", "--d", "2", "--m", "1", "--n", "3", "--char", "2")
    assert code == 1
    assert "invariant" in err


def test_sweep_json_lines_ordered():
    code, out, _ = call("sweep", "--family", "fab", "--max-b", "3", "--max-n", "4", "--format", "json")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    keys = [tuple(int(l["request"][k]) for k in ("a", "b", "n")) for l in lines]
    assert keys == sorted(keys)
    assert len(keys) == 6
    assert all(l["agree"] for l in lines)


def test_sweep_parallel_matches_serial():
    argv = ["sweep", "--family", "gdmn", "--max-d", "3", "--max-n", "4", "--char", "0", "--char", "2",
            "--format", "json"]
    serial = call(*argv)[1]
    parallel = call(*argv, "--jobs", "3")[1]
    assert serial == parallel
    assert len(serial.splitlines()) == 3 * 6 * 2


def test_text_uses_canonical_polynomials():
    code, out, _ = call("gdmn", "--d", "2", "--m", "3", "--n", "4")
    assert "[D] = 40*s1 - 48*c1" in out


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "eqpic", "genus", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["picard"]["divisor_multiples"] == {"M4ev": "34"}
