import json

import pytest

from stylic.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_n_tableau(capsys):
    code, out, _ = run(capsys, "compute", "N", "cabd", "-n", "4")
    assert code == 0
    assert out.splitlines() == ["c", "a b c d"]


def test_compute_p_empty(capsys):
    code, out, _ = run(capsys, "compute", "P", "", "-n", "3")
    assert code == 0
    assert "empty tableau" in out


def test_compute_theta(capsys):
    code, out, _ = run(capsys, "compute", "theta", "acdaadc", "-n", "4")
    assert code == 0
    assert out.strip() == "baddabd"


def test_compute_pi(capsys):
    code, out, _ = run(capsys, "compute", "pi", "cabd", "-n", "4")
    assert code == 0
    assert out.strip() == "abd/c"


def test_compute_delta_partition(capsys):
    code, out, _ = run(capsys, "compute", "delta", "13/28/457/6", "-n", "8")
    assert code == 0
    assert out.strip() == "23/48/57/6"


def test_compute_evac_prints_delta_chain(capsys):
    code, out, _ = run(capsys, "compute", "evac", "13/28/457/6", "-n", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("13/28/457/6")
    assert lines[1].endswith("23/48/57/6")
    assert lines[-1].startswith("evac:")


def test_compute_jdt(capsys):
    skew = {
        "outer": [4, 3, 3, 1],
        "inner": [2, 1],
        "labels": [
            [[3, 1], "b"], [[4, 1], "f"], [[2, 2], "d"], [[3, 2], "e"],
            [[1, 3], "a"], [[2, 3], "c"], [[3, 3], "h"], [[1, 4], "g"],
        ],
    }
    code, out, _ = run(capsys, "compute", "jdt", json.dumps(skew), "-n", "8")
    assert code == 0
    assert out.strip() == "abf/cde/gh"


def test_compute_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "N", "cabd", "-n", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"rows": [["a", "b", "c", "d"], ["c"]]}


def test_enumerate_monoid(capsys):
    code, out, _ = run(capsys, "enumerate", "monoid", "-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("15 elements")
    assert len(lines) == 16


def test_enumerate_monoid_json(capsys):
    code, out, _ = run(capsys, "enumerate", "monoid", "-n", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 5
    assert len(data["table"]) == 5
    # table really is the multiplication table: identity row is the index map
    assert data["table"][data["identity"]] == list(range(5))
    coranks = {e["corank"] for e in data["elements"]}
    assert coranks == {0, 1, 2, 3}


def test_json_renderings_round_trip(capsys):
    from stylic.monoid import (
        n_tableau,
        ntableau_from_json,
        parse_partition,
        partition_from_json,
        pi,
    )
    from stylic.core import parse_word
    from stylic.tableaux import p_tableau, tableau_from_json

    t = p_tableau(parse_word("dbbaac"))
    assert tableau_from_json(json.loads(json.dumps(t.to_json()))) == t
    nt = n_tableau(parse_word("cabd"))
    assert ntableau_from_json(json.loads(json.dumps(nt.to_json()))) == nt
    r = pi(parse_word("cabd"))
    assert partition_from_json(json.loads(json.dumps(r.to_json()))) == r
    assert parse_partition(r.render()) == r
    assert parse_partition(r.render(digits=True)) == r


def test_enumerate_idempotents(capsys):
    code, out, _ = run(capsys, "enumerate", "idempotents", "-n", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("4 idempotents")


def test_enumerate_jorder_dot(capsys):
    code, out, _ = run(capsys, "enumerate", "jorder", "-n", "3", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("label=") == 15


def test_enumerate_jorder_text(capsys):
    code, out, _ = run(capsys, "enumerate", "jorder", "-n", "2")
    assert code == 0
    assert "graded order on 5 elements, height 3" in out


def test_verify_all_smallest(capsys):
    code, out, _ = run(capsys, "verify", "all", "-n", "1")
    assert code == 0
    assert "FAIL" not in out


def test_verify_evacuation(capsys):
    code, out, _ = run(capsys, "verify", "evacuation", "-n", "3", "--maxlen", "6")
    assert code == 0
    assert "[evacuation] pass" in out


def test_verify_confluence(capsys):
    code, out, _ = run(capsys, "verify", "confluence", "-n", "3")
    assert code == 0
    assert "343" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "compute", "P", "a$b", "-n", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "compute", "P", "abcd", "-n", "3")
    assert code == 2  # letter outside the alphabet
    code, _, err = run(capsys, "enumerate", "monoid", "-n", "9")
    assert code == 2 and "ceiling" in err
    code, _, err = run(capsys, "compute", "jdt", "{bad json", "-n", "3")
    assert code == 2


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "Q", "abc", "-n", "3"])
    assert exc.value.code == 2
