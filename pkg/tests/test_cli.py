import json
import os

import jsonschema
import pytest

from distideal.cli import main

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "src",
                           "distideal", "schemas", "report-v1.schema.json")
with open(SCHEMA_PATH) as _fh:
    SCHEMA = json.load(_fh)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return payload


def test_matrix_text(capsys):
    code, out, _ = run(capsys, "matrix", "--family", "complete:2")
    assert code == 0
    assert out.splitlines() == ["[x0   1]", "[ 1  x1]"]


def test_matrix_json(capsys):
    payload = run_json(capsys, "matrix", "--family", "cycle:4",
                       "--format", "json")
    assert payload["rows"][0] == ["x0", "1", "2", "1"]


def test_snf_complete4(capsys):
    code, out, _ = run(capsys, "snf", "--family", "complete:4")
    assert code == 0 and out.strip() == "1 1 1 3"


def test_snf_laplacian(capsys):
    payload = run_json(capsys, "snf", "--family", "star:2",
                       "--kind", "distance-laplacian", "--format", "json")
    assert payload["invariant_factors"] == [1, 5, 0]


def test_ideals_text_claw(capsys):
    code, out, _ = run(capsys, "ideals", "--edges-file",
                       _edges_file_claw(), "--ring", "Z")
    assert code == 0
    assert "Distance ideal of size 1 (trivial)" in out
    assert "Distance ideal of size 2 (nontrivial)" in out
    assert out.strip().endswith("phi = 1")


def _edges_file_claw(tmp=None):
    import tempfile
    fh = tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False)
    fh.write("4\n0 1\n0 2\n0 3\n")
    fh.close()
    return fh.name


def test_ideals_json_single_index(capsys):
    payload = run_json(capsys, "ideals", "--family", "cycle:4",
                       "--index", "2", "--ring", "Q", "--format", "json")
    assert len(payload["ideals"]) == 1
    rec = payload["ideals"][0]
    assert rec["i"] == 2 and rec["trivial"]


def test_charpoly(capsys):
    code, out, _ = run(capsys, "charpoly", "--family", "cycle:4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lam^4 - 12*lam^2 - 16*lam"
    assert lines[1] == "integer roots: [-2, 0, 4]"


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--ring", "R", "--nmax", "4")
    assert code == 0
    assert out.strip() == "pass 6/10, disagreements 0, minimal forbidden ok"


def test_classify_json_schema(capsys):
    payload = run_json(capsys, "classify", "--ring", "Z", "--nmax", "4",
                       "--format", "json")
    assert payload["passing"] == 7 and payload["disagreements"] == []


def test_families_verify(capsys):
    code, out, _ = run(capsys, "families", "verify")
    assert code == 0
    assert all(line.endswith("pass") for line in out.splitlines())


def test_corpus_counts(capsys):
    payload = run_json(capsys, "corpus", "--nmax", "5", "--format", "json")
    assert payload["counts"] == {"1": 1, "2": 1, "3": 2, "4": 6, "5": 21}
    assert len(payload["graphs"]) == 31


def test_exit_code_bad_graph6(capsys):
    code, _, err = run(capsys, "matrix", "--graph6", "B")
    assert code == 1 and "error:" in err


def test_exit_code_no_source(capsys):
    code, _, err = run(capsys, "snf")
    assert code == 1 and "exactly one" in err


def test_exit_code_two_sources(capsys):
    code, _, err = run(capsys, "matrix", "--graph6", "Bw",
                       "--family", "cycle:4")
    assert code == 1


def test_family_spec_requires_params(capsys):
    code, _, err = run(capsys, "matrix", "--family", "cycle")
    assert code == 1


def test_repeat_runs_identical(capsys):
    a = run(capsys, "ideals", "--family", "star:3", "--format", "json")
    b = run(capsys, "ideals", "--family", "star:3", "--format", "json")
    assert a == b
