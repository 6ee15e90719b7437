import json

import pytest

from vka.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_ok(capsys, corpus_dir):
    code, out, _ = run(capsys, "parse", str(corpus_dir / "k1.gauss"))
    assert code == 0
    assert out.splitlines()[0] == "O1+ U2+ U1+ O2+"


def test_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.gauss"
    bad.write_text("O1+ qq5\n")
    code, _, err = run(capsys, "parse", str(bad))
    assert code == 1
    assert "malformed token" in err
    assert "line 1" in err


def test_charpoly_quotient_end_minus(capsys, corpus_dir):
    code, out, _ = run(
        capsys, "invariants", str(corpus_dir / "k1.gauss"), "--charpoly", "0",
        "--quotient", "end-minus",
    )
    assert code == 0
    assert out.strip() == "u^2*v - u + 1"


def test_det_k1(capsys, corpus_dir):
    code, out, _ = run(capsys, "invariants", str(corpus_dir / "k1.gauss"), "--det")
    assert code == 0
    assert out.strip() == "3"


def test_det_empty(capsys, corpus_dir):
    code, out, _ = run(capsys, "invariants", str(corpus_dir / "empty.gauss"), "--det")
    assert code == 0
    assert out.strip() == "1"


def test_invariants_nothing_requested_exit_2(capsys, corpus_dir):
    code, _, err = run(capsys, "invariants", str(corpus_dir / "k1.gauss"))
    assert code == 2
    assert "nothing requested" in err


def test_invariants_det_on_closed_exit_2(capsys, tmp_path, corpus_dir):
    closed = tmp_path / "c.gauss"
    closed.write_text("closed\nO1+ U2+ U1+ O2+\n")
    code, _, err = run(capsys, "invariants", str(closed), "--det")
    assert code == 2


def test_budget_exit_3(capsys, corpus_dir):
    code, _, err = run(
        capsys, "--max-minors", "1", "invariants", str(corpus_dir / "k4k5.gauss"),
        "--charpoly", "1",
    )
    assert code == 3
    assert "budget" in err


def test_json_deterministic(capsys, corpus_dir):
    args = ("--json", "invariants", str(corpus_dir / "k1.gauss"),
            "--charpoly", "0", "--quotient", "end-minus", "--det", "--color", "3")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == 1
    assert payload["determinant"] == 3
    assert payload["charpoly"]["value"] == "u^2*v - u + 1"
    assert payload["colorings"] == {"p": 3, "count": 9, "nontrivial": True}


def test_construct_concat(capsys, corpus_dir):
    code, out, _ = run(
        capsys, "construct", "concat", str(corpus_dir / "k4.gauss"), str(corpus_dir / "k5.gauss")
    )
    assert code == 0
    assert out.strip() == "U1- O2+ O1- U2+ O3+ U4- U3+ O4-"


def test_construct_close(capsys, corpus_dir):
    code, out, _ = run(capsys, "construct", "close", str(corpus_dir / "k1.gauss"))
    assert code == 0
    assert out.startswith("closed")


def test_construct_close_closed_exit_2(capsys, tmp_path):
    closed = tmp_path / "c.gauss"
    closed.write_text("closed\nO1+ U1+\n")
    code, _, err = run(capsys, "construct", "close", str(closed))
    assert code == 2


def test_construct_switch(capsys, corpus_dir):
    code, out, _ = run(capsys, "construct", "switch", str(corpus_dir / "k4.gauss"))
    assert code == 0
    assert out.strip() == "O1+ U2- U1+ O2-"


def test_construct_dn(capsys, corpus_dir, tmp_path):
    out_path = tmp_path / "d2.gauss"
    code, _, _ = run(
        capsys, "construct", "dn", str(corpus_dir / "empty.gauss"), "2", "-o", str(out_path)
    )
    assert code == 0
    assert out_path.read_text().strip() == (corpus_dir / "d2.gauss").read_text().strip()


def test_construct_dn_nontrivial_coloring(capsys, corpus_dir):
    code, out, _ = run(capsys, "construct", "dn", str(corpus_dir / "empty.gauss"), "2")
    assert code == 0
    from vka.diagram import parse_gauss
    from vka.invariants import coloring_count

    d = parse_gauss(out.strip())
    assert d.crossings == 4
    assert coloring_count(d, 5).nontrivial


def test_color_command(capsys, corpus_dir):
    code, out, _ = run(capsys, "--json", "color", str(corpus_dir / "trefoil.gauss"), "-p", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["colorings"]["count"] == 9


def test_homcount_command(capsys, corpus_dir):
    code, out, _ = run(
        capsys, "homcount", str(corpus_dir / "k4k5.gauss"), "-p", "5", "-s", "3",
        "--quotient", "end-minus",
    )
    assert code == 0
    assert out.strip() == "25"
    code, out, _ = run(
        capsys, "homcount", str(corpus_dir / "k5k4.gauss"), "-p", "5", "-s", "3",
        "--quotient", "end-minus",
    )
    assert code == 0
    assert out.strip() == "5"


def test_fuzz_ok(capsys, corpus_dir):
    code, out, _ = run(
        capsys, "fuzz", str(corpus_dir / "k1.gauss"), "--seed", "7", "--steps", "50"
    )
    assert code == 0
    assert out.strip() == "OK (invariants stable)"


def test_fuzz_zero_steps(capsys, corpus_dir):
    code, out, _ = run(capsys, "fuzz", str(corpus_dir / "k3.gauss"), "--steps", "0")
    assert code == 0
    assert "OK" in out


def test_fuzz_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.gauss"
    bad.write_text("O1+ U1- extra\n")
    code, _, err = run(capsys, "fuzz", str(bad))
    assert code == 1


def test_fuzz_instability_exit_4(capsys, corpus_dir, monkeypatch):
    # correct moves never destabilize the invariants, so exercise the
    # failure path by making the profile drift on purpose
    from vka import invariants

    real = invariants.invariant_profile
    calls = []

    def drifting(d, ps=(3, 5, 7), max_minors=invariants.DEFAULT_MINOR_BUDGET):
        profile = dict(real(d, ps, max_minors))
        profile["drift"] = len(calls)
        calls.append(None)
        return profile

    monkeypatch.setattr(invariants, "invariant_profile", drifting)
    code, out, _ = run(capsys, "fuzz", str(corpus_dir / "k1.gauss"), "--steps", "1")
    assert code == 4
    assert "INVARIANCE FAILURE" in out


def test_unknown_flag_exits_2(corpus_dir):
    with pytest.raises(SystemExit) as exc:
        main(["invariants", str(corpus_dir / "k1.gauss"), "--frobnicate"])
    assert exc.value.code == 2


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "parse", "no-such-file.gauss")
    assert code == 2
    assert "cannot read" in err
