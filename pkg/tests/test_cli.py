import json

import pytest

from weakhopf.cli import main
from weakhopf.serialize import dumps, load_path


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_catalog_list(capsys):
    code, out = run(["catalog", "list"], capsys)
    assert code == 0
    names = json.loads(out)["names"]
    assert "example1" in names and "trivial" in names


def test_validate_ok(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    assert main(["catalog", "emit", "example1", "--out", str(path)]) == 0
    code, out = run(["validate", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_validate_broken_exit_one(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    main(["catalog", "emit", "example1", "--out", str(path)])
    doc = load_path(str(path))
    doc["comult"] = [e for e in doc["comult"] if e[0] != 0]
    bad = tmp_path / "broken.json"
    bad.write_text(dumps(doc))
    code, out = run(["validate", str(bad)], capsys)
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False
    assert report["violations"]
    assert report["violations"][0]["witness"] is not None


def test_malformed_scalar_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "field": "Q",
                "dim": 1,
                "basis": ["1"],
                "mult": [[0, 0, 0, "1/0"]],
                "unit": ["1"],
                "comult": [[0, 0, 0, "1"]],
                "counit": ["1"],
            }
        )
    )
    code, _ = run(["validate", str(bad)], capsys)
    assert code == 2


def test_missing_file_exit_two(capsys):
    code, _ = run(["validate", "/nonexistent/algebra.json"], capsys)
    assert code == 2


def test_report_example1(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    main(["catalog", "emit", "example1", "--out", str(path)])
    code, out = run(["report", str(path)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["axioms"]["comonoidal"] is True
    assert doc["axioms"]["monoidal"] is False
    assert doc["antipode"]["kind"] == "none"
    assert doc["weak_hopf"] is False


def test_report_trivial_all_flags(tmp_path, capsys):
    path = tmp_path / "t.json"
    main(["catalog", "emit", "trivial", "--out", str(path)])
    code, out = run(["report", str(path)], capsys)
    doc = json.loads(out)
    assert code == 0
    ax = doc["axioms"]
    assert all(
        ax[k]
        for k in (
            "left_monoidal",
            "right_monoidal",
            "left_comonoidal",
            "right_comonoidal",
            "minimal",
            "cominimal",
        )
    )
    assert doc["ordinary_hopf"] is True


def test_emit_parse_emit_round_trip(tmp_path):
    from weakhopf.constructions import catalog_names

    for name in catalog_names():
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        assert main(["catalog", "emit", name, "--out", str(first)]) == 0
        doc = load_path(str(first))
        from weakhopf.serialize import algebra_to_document, document_to_algebra

        reparsed = document_to_algebra(doc)
        redoc = algebra_to_document(reparsed, extras=doc.get("extras"))
        second.write_text(dumps(redoc))
        assert first.read_text() == second.read_text(), name


def test_dual_twice_byte_identical(tmp_path):
    src = tmp_path / "ex1.json"
    once = tmp_path / "d1.json"
    twice = tmp_path / "d2.json"
    main(["catalog", "emit", "example1", "--out", str(src)])
    assert main(["dual", str(src), "--out", str(once)]) == 0
    assert main(["dual", str(once), "--out", str(twice)]) == 0
    assert src.read_text() == twice.read_text()


def test_antipode_command(tmp_path, capsys):
    path = tmp_path / "bd.json"
    main(["catalog", "emit", "bsz-dual:2", "--out", str(path)])
    code, out = run(["antipode", str(path)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "antipode"
    assert doc["bijective"] and doc["pode_inverse"]


def test_construct_adcross_then_report(tmp_path, capsys):
    path = tmp_path / "s3a3.json"
    assert (
        main(
            [
                "construct",
                "adcross",
                "--group",
                "S3",
                "--subgroup",
                "A3",
                "--out",
                str(path),
            ]
        )
        == 0
    )
    code, out = run(["report", str(path)], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["weak_hopf"] is True
    assert doc["axioms"]["dimensions"]["algebra"] == 18


def test_construct_minimal_via_file(tmp_path, capsys):
    spec = {
        "a1": {
            "dim": 2,
            "mult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "unit": ["1", "1"],
            "basis": ["e1", "e2"],
        },
        "a2": {
            "dim": 2,
            "mult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "unit": ["1", "1"],
            "basis": ["f1", "f2"],
        },
        "p": [["1", "0"], ["0", "1"]],
    }
    src = tmp_path / "minimal.json"
    src.write_text(json.dumps(spec))
    out_path = tmp_path / "built.json"
    assert main(["construct", "minimal", str(src), "--out", str(out_path)]) == 0
    code, out = run(["report", str(out_path)], capsys)
    assert code == 0
    assert json.loads(out)["axioms"]["comonoidal"] is True


def test_construct_minimal_rejects_degenerate(tmp_path, capsys):
    spec = {
        "a1": {
            "dim": 2,
            "mult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "unit": ["1", "1"],
        },
        "a2": {
            "dim": 2,
            "mult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "unit": ["1", "1"],
        },
        "p": [["1", "1"], ["1", "1"]],
    }
    src = tmp_path / "degenerate.json"
    src.write_text(json.dumps(spec))
    code = main(["construct", "minimal", str(src)])
    assert code == 1


def test_rigidity_verify_and_twist(tmp_path, capsys):
    path = tmp_path / "ex2.json"
    main(["catalog", "emit", "example2-rigidity", "--out", str(path)])
    code, out = run(["rigidity", "verify", str(path)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "rigid"
    # identity twist through the CLI
    source = load_path(str(path))
    s_one_doc = load_path(str(path))
    from weakhopf.serialize import document_to_algebra, parse_matrix, vector_to_list

    algebra = document_to_algebra(source)
    s = parse_matrix(source["extras"]["rigidity"]["s"])
    s_one = s.apply(algebra.unit)
    source["extras"]["twist"] = {
        "u": vector_to_list(s_one),
        "ubar": vector_to_list(s_one),
    }
    twisted_in = tmp_path / "twist-in.json"
    twisted_in.write_text(dumps(source))
    out_path = tmp_path / "twisted.json"
    assert main(["rigidity", "twist", str(twisted_in), "--out", str(out_path)]) == 0
    twisted = load_path(str(out_path))
    assert twisted["extras"]["rigidity"]["s"] == source["extras"]["rigidity"]["s"]


def test_rigidity_intertwine(tmp_path, capsys):
    path = tmp_path / "ex2.json"
    main(["catalog", "emit", "example2-rigidity", "--out", str(path)])
    doc = load_path(str(path))
    doc["extras"]["rigidity2"] = doc["extras"]["rigidity"]
    src = tmp_path / "pair.json"
    src.write_text(dumps(doc))
    code, out = run(["rigidity", "intertwine", str(src)], capsys)
    assert code == 0
    pair = json.loads(out)
    assert "u" in pair and "ubar" in pair


def test_rigidity_example2_command(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    main(["catalog", "emit", "example1", "--out", str(path)])
    doc = load_path(str(path))
    doc["extras"] = {
        "cross_map": [["1", "0", "0"], ["1", "1", "0"], ["0", "0", "1"]]
    }
    src = tmp_path / "with-map.json"
    src.write_text(dumps(doc))
    out_path = tmp_path / "structure.json"
    assert main(["rigidity", "example2", str(src), "--out", str(out_path)]) == 0
    built = load_path(str(out_path))
    assert built["extras"]["rigidity"]["status"] == "rigid"
    # beta of the emitted structure is the counit of the source instance
    assert built["extras"]["rigidity"]["beta"] == doc["counit"]


def test_rep_commands(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    main(["catalog", "emit", "example1", "--out", str(path)])
    code, out = run(["rep", "tensor", str(path)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["plain_dimension"] == 81 and doc["truncated_dimension"] == 45
    code, _ = run(["rep", "coherence", str(path)], capsys)
    assert code == 0
    code, _ = run(["rep", "end", str(path)], capsys)
    assert code == 0
    bd = tmp_path / "bd.json"
    main(["catalog", "emit", "bsz-dual:2", "--out", str(bd)])
    code, _ = run(["rep", "unit", str(bd)], capsys)
    assert code == 0


def test_text_format(tmp_path, capsys):
    path = tmp_path / "t.json"
    main(["catalog", "emit", "trivial", "--out", str(path)])
    code, out = run(["report", str(path), "--format", "text"], capsys)
    assert code == 0
    assert "valid: True" in out


def test_witness_limit_zero_hides_witnesses(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    main(["catalog", "emit", "example1", "--out", str(path)])
    code, out = run(["report", str(path), "--witness-limit", "0"], capsys)
    assert json.loads(out)["axioms"]["witnesses"] == {}
