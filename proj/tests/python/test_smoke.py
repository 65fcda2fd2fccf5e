import json
import os
import pathlib
import subprocess

import pytest

import rgw

FIXTURES = pathlib.Path(os.environ["RGW_FIXTURES"])
RGW_BIN = os.environ["RGW_BIN"]


def game(name):
    return rgw.RewriteSystem.parse((FIXTURES / f"{name}.game").read_text())


def test_grundy_basics():
    sys = game("a2b")
    assert sys.is_strongly_terminating()
    assert sys.is_taking_and_merging()
    assert sys.grundy("") == 0
    assert sys.grundy("aab") == 0
    assert sys.grundy("aabb") == 1
    assert sys.grundy("b") == 1
    assert sys.outcome("aab") == "P"
    assert sys.outcome("b") == "N"
    assert sys.max_grundy_by_length(6) == [0, 1, 1, 1, 1, 1, 1]
    assert sorted(sys.moves("aab")) == ["aa", "b"]


def test_parse_errors():
    with pytest.raises(rgw.ParseError):
        rgw.RewriteSystem.parse("alphabet: ab\nzz -> eps\n")
    sys = game("a2b")
    with pytest.raises(rgw.ParseError):
        sys.grundy("abc")


def test_fixture_verification():
    for name in ("fig1", "fig2", "fig3", "fig4"):
        g, machine = rgw.load_fixture(name, str(FIXTURES))
        assert rgw.verify(g, machine)["verified"]
    g, machine = rgw.load_fixture("fig1", str(FIXTURES))
    wrong = game("a3b")
    report = rgw.verify(wrong, machine)
    assert not report["verified"]
    assert report["failures"]


def test_machine_roundtrip():
    _, machine = rgw.load_fixture("fig1", str(FIXTURES))
    again = rgw.MooreMachine.parse(machine.render())
    assert rgw.isomorphic(machine, again)
    assert machine.num_states == 4
    assert machine.run_label("aab") == 0
    assert machine.run_label("aabb") == 1
    assert "digraph" in machine.to_dot()


def test_synthesize():
    res = rgw.synthesize(game("a2b"), 4, 10)
    assert res["status"] == "Proven"
    assert res["machine"] is not None
    assert rgw.minimize(res["machine"]).num_states == 4
    assert res["attempts"]


def test_pda_and_witness():
    r = rgw.pda_run(2, 2, "aabb")
    assert r["parity"] == 0
    assert r["reductions"] == 2
    assert r["normal_form"] == "eps"
    assert rgw.witness_word(2, 2, 1, 1) == "babba"
    sys = game("a2b2")
    assert sys.grundy(rgw.witness_word(2, 2, 1, 1)) == 0
    assert sys.grundy(rgw.witness_word(2, 2, 0, 1)) != 0


def test_octal():
    assert rgw.octal_sequence("0.3", 8) == [0, 1, 0, 1, 0, 1, 0, 1, 0]
    assert rgw.octal_period("0.3", 20) == (0, 2)
    check = rgw.octal_crosscheck("0.37", 8)
    assert check["ok"]
    assert check["positions_checked"] == 18
    translated = rgw.octal_to_rewrite("0.37")
    assert translated.grundy("b", assume_terminating=True) == 0


def test_tm_game():
    g = rgw.tm_game((FIXTURES / "tm" / "halt2.tm").read_text())
    assert g.system.is_strongly_terminating()
    start = g.canonical_start(2)
    run = g.run(start)
    assert run["verdict"] == "AWins"
    assert run["halted"]
    assert run["moves"] == 5
    assert len(run["trajectory"]) == 6
    assert g.crosscheck(start)["ok"]
    loop = rgw.tm_game((FIXTURES / "tm" / "loop.tm").read_text())
    out = loop.run(loop.canonical_start(2), 4000)
    assert out["verdict"] == "ALoses"
    assert not out["halted"]


def cli(*args):
    return subprocess.run([RGW_BIN, *args], capture_output=True, text=True)


def test_cli_exit_codes():
    ok = cli("grundy", "--game", str(FIXTURES / "a2b.game"), "--word", "aab")
    assert ok.returncode == 0
    assert ok.stdout.strip() == "0"

    failed = cli("verify", "--game", str(FIXTURES / "a3b.game"),
                 "--machine", str(FIXTURES / "fig1.moore"))
    assert failed.returncode == 1
    assert failed.stdout.startswith("Failed")

    usage = cli("grundy", "--game", str(FIXTURES / "a2b.game"), "--word", "abc")
    assert usage.returncode == 2

    missing = cli("grundy", "--game", str(FIXTURES / "nope.game"), "--word", "a")
    assert missing.returncode == 2

    out_of_fuel = cli("tm", "run", "--tm", str(FIXTURES / "tm" / "halt3.tm"),
                      "--m", "3", "--budget", "2")
    assert out_of_fuel.returncode == 3


def test_cli_json():
    r = cli("--json", "grundy", "--game", str(FIXTURES / "a2b.game"), "--word", "aab")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"word": "aab", "value": 0}

    v = cli("--json", "verify", "--game", str(FIXTURES / "a2b.game"),
            "--machine", str(FIXTURES / "fig1.moore"))
    assert v.returncode == 0
    assert json.loads(v.stdout)["verified"] is True

    t = cli("--json", "tm", "run", "--tm", str(FIXTURES / "tm" / "halt2.tm"), "--m", "2")
    assert t.returncode == 0
    doc = json.loads(t.stdout)
    assert doc["verdict"] == "AWins"
    assert doc["moves"] == 5

    o = cli("--json", "octal", "--code", "0.37", "--n", "10", "--crosscheck")
    assert o.returncode == 0
    assert json.loads(o.stdout)["ok"] is True

    f = cli("fixtures", "verify-all", "--dir", str(FIXTURES))
    assert f.returncode == 0
    assert f.stdout.count("Verified") == 4
