"""The command line tool, driven in process through its main entry point."""

from __future__ import annotations

import io
import json

import pytest

from goodsgp import cli

import _data as data


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _run(capsys, args):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def dup_doc(tmp_path):
    return _write(
        tmp_path, "dup.json", {"kind": "duplication", "semigroup": [2, 3], "ideal": [6]}
    )


@pytest.fixture()
def cart_doc(tmp_path):
    return _write(
        tmp_path, "cart.json", {"kind": "cartesian", "left": [3, 5, 7], "right": [4, 5]}
    )


def test_check_valid_document(capsys, dup_doc):
    code, out, _ = _run(capsys, ["check", dup_doc])
    assert code == 0
    payload = json.loads(out)
    assert payload["valid"] is True
    assert payload["conductor"] == data.DUP_CONDUCTOR
    assert payload["small"] == sorted(map(list, data.points(data.DUP_SMALL)))


def test_check_reports_violations(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "bad.json",
        {
            "kind": "small",
            "small": data.FIGURE_REJECTS[0]["closure"],
            "conductor": data.FIGURE_REJECTS[0]["conductor"],
        },
    )
    code, out, _ = _run(capsys, ["check", doc])
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False
    axioms = {v["axiom"] for v in payload["violations"]}
    assert axioms == {"witness"}
    first = payload["violations"][0]
    assert set(first) == {"axiom", "witness", "axis", "detail"}


def test_check_accepts_the_cartesian_product(capsys, cart_doc):
    code, out, _ = _run(capsys, ["check", cart_doc])
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_small_round_trips_through_a_small_document(capsys, tmp_path, dup_doc):
    code, out, _ = _run(capsys, ["small", dup_doc])
    assert code == 0
    payload = json.loads(out)
    doc = _write(
        tmp_path,
        "resmall.json",
        {"kind": "small", "small": payload["small"], "conductor": payload["conductor"]},
    )
    code, out2, _ = _run(capsys, ["small", doc])
    assert code == 0
    assert json.loads(out2) == payload


def test_construct_summarizes_the_document(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "gens.json",
        {
            "kind": "generators",
            "generators": data.CONDUCTOR_GENS,
            "conductor": data.CONDUCTOR_CONDUCTOR,
        },
    )
    code, out, _ = _run(capsys, ["construct", doc])
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "generators"
    assert payload["local"] is True
    assert payload["conductor"] == data.CONDUCTOR_CONDUCTOR


def test_construct_amalgamation(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "am.json",
        {
            "kind": "amalgamation",
            "semigroup": [2, 3],
            "target": [3, 4],
            "ideal": [3],
            "factor": 2,
        },
    )
    code, out, _ = _run(capsys, ["construct", doc])
    assert code == 0
    payload = json.loads(out)
    assert payload["small"] == sorted(map(list, data.points(data.AMALG_SMALL)))
    assert payload["conductor"] == data.AMALG_CONDUCTOR


def test_member(capsys, dup_doc):
    code, out, _ = _run(capsys, ["member", dup_doc, "--point", "6,7"])
    assert code == 0 and json.loads(out)["member"] is True
    code, out, _ = _run(capsys, ["member", dup_doc, "--point", "1,1"])
    assert code == 0 and json.loads(out)["member"] is False
    code, _, err = _run(capsys, ["member", dup_doc, "--point", "x,y"])
    assert code == 2 and "error:" in err


def test_member_text_format(capsys, dup_doc):
    code, out, _ = _run(capsys, ["member", dup_doc, "--point", "6,7", "--format", "text"])
    assert code == 0
    assert out.splitlines() == ["member: yes", "point: (6, 7)"]


def test_mingens(capsys, dup_doc):
    code, out, _ = _run(capsys, ["mingens", dup_doc])
    assert code == 0
    assert json.loads(out)["mingens"] == sorted(map(list, data.points(data.DUP_MINGENS)))


def test_mingens_refuses_non_local_input(capsys, cart_doc):
    code, _, err = _run(capsys, ["mingens", cart_doc])
    assert code == 4
    assert "local" in err


def test_is_mingens(capsys, dup_doc):
    code, out, _ = _run(
        capsys, ["is-mingens", dup_doc, "--gens", json.dumps(data.DUP_MINGENS)]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["generating"] is True and payload["is_minimal"] is True

    code, out, _ = _run(capsys, ["is-mingens", dup_doc, "--gens", "[[2,2]]"])
    assert code == 0
    payload = json.loads(out)
    assert payload["generating"] is False and payload["is_minimal"] is False
    assert "reason" in payload


def test_maximal(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "gens.json",
        {
            "kind": "generators",
            "generators": data.CONDUCTOR_GENS,
            "conductor": data.CONDUCTOR_CONDUCTOR,
        },
    )
    code, out, _ = _run(capsys, ["maximal", doc])
    assert code == 0
    assert json.loads(out)["maximal"] == sorted(map(list, data.points(data.CONDUCTOR_MAXIMALS)))


def test_canonical(capsys, tmp_path):
    doc = _write(
        tmp_path, "dup35.json", {"kind": "duplication", "semigroup": [3, 5], "ideal": [3]}
    )
    code, out, _ = _run(capsys, ["canonical", doc])
    assert code == 0
    payload = json.loads(out)
    assert payload["small"] == sorted(map(list, data.points(data.DUP35_SMALL)))
    assert payload["conductor"] == data.DUP35_CONDUCTOR
    assert payload["generators"] == sorted(map(list, data.points(data.DUP35_CANONICAL_GENS)))


def test_symmetric_and_arf(capsys, dup_doc):
    code, out, _ = _run(capsys, ["symmetric", dup_doc])
    assert code == 0 and json.loads(out)["symmetric"] is True
    code, out, _ = _run(capsys, ["arf", dup_doc])
    assert code == 0 and json.loads(out)["arf"] is False


def test_arf_closure(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "arfex1.json",
        {"kind": "small", "small": data.ARFEX1_SMALL, "conductor": data.ARFEX_CONDUCTOR},
    )
    code, out, _ = _run(capsys, ["arf-closure", doc])
    assert code == 0
    payload = json.loads(out)
    assert payload["small"] == sorted(map(list, data.points(data.ARFEX1_CLOSURE[0])))
    assert payload["conductor"] == list(data.ARFEX1_CLOSURE[1])


def test_saturate(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "sat.json",
        {
            "kind": "small",
            "small": data.SATURATION_SMALL,
            "conductor": data.SATURATION_CONDUCTOR,
        },
    )
    code, out, _ = _run(capsys, ["saturate", doc, "--box", "8,8"])
    assert code == 0
    payload = json.loads(out)
    assert payload["box"] == data.SATURATION_BOX
    gap = sorted(
        set(map(tuple, payload["closure_in_box"])) - set(map(tuple, payload["saturation"]))
    )
    assert gap == [tuple(p) for p in data.SATURATION_GAP]
    assert payload["agrees"] is True  # the infima closure restores the gap


def test_plot_ascii_to_stdout(capsys, dup_doc):
    code, out, _ = _run(capsys, ["plot", dup_doc, "--style", "ascii"])
    assert code == 0
    assert "conductor (8, 8)" in out


def test_plot_svg_to_file(capsys, tmp_path, dup_doc):
    target = tmp_path / "dup.svg"
    code, out, _ = _run(capsys, ["plot", dup_doc, "--output", str(target)])
    assert code == 0
    svg = target.read_text()
    assert svg.startswith("<svg ")
    assert svg.count("<circle") == len(data.DUP_SMALL)


def test_plot_refuses_three_dimensions(capsys, tmp_path):
    doc = _write(
        tmp_path,
        "cube.json",
        {
            "dim": 3,
            "kind": "small",
            "small": [
                [0, 0, 0], [0, 0, 2], [0, 2, 0], [0, 2, 2],
                [2, 0, 0], [2, 0, 2], [2, 2, 0], [2, 2, 2],
            ],
            "conductor": [2, 2, 2],
        },
    )
    code, _, err = _run(capsys, ["check", doc])
    assert code == 0  # validation handles any dimension
    code, _, err = _run(capsys, ["plot", doc])
    assert code == 3
    assert "n = 2" in err


def test_stdin_input(capsys, monkeypatch):
    doc = json.dumps({"kind": "duplication", "semigroup": [2, 3], "ideal": [6]})
    monkeypatch.setattr("sys.stdin", io.StringIO(doc))
    code, out, _ = _run(capsys, ["small", "-"])
    assert code == 0
    assert json.loads(out)["conductor"] == data.DUP_CONDUCTOR


def test_input_errors(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("{nope"))
    code, _, err = _run(capsys, ["check", "-"])
    assert code == 2 and "invalid JSON" in err

    monkeypatch.setattr("sys.stdin", io.StringIO('{"kind": "mystery"}'))
    code, _, err = _run(capsys, ["check", "-"])
    assert code == 2 and "unknown document kind" in err

    code, _, err = _run(capsys, ["check", str(tmp_path / "missing.json")])
    assert code == 2 and "cannot read" in err


def test_construction_errors_exit_one(capsys, tmp_path):
    doc = _write(
        tmp_path, "bad.json", {"kind": "duplication", "semigroup": [2, 3], "ideal": [1]}
    )
    code, out, _ = _run(capsys, ["check", doc])
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False
    assert "error" in payload
