import json
import random
import subprocess
import sys

import pytest

from a4perfect.bgg import ClassifyingTriple
from a4perfect.cli import main
from a4perfect.exactfield import F2, F4
from a4perfect.formats import complex_from_json, complex_to_json, triple_from_json, triple_to_json
from a4perfect.perfcx import concentrated, lambda_module, random_complex, shift, zero_complex
from a4perfect.polys import OLIVER_IDEAL, oliver_ideal
from a4perfect.skewalg import GroupTag

from conftest import ideal, realized

LAM_C = concentrated(lambda_module(F2, GroupTag.C3))


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def kv(out):
    return dict(line.split("\t", 1) for line in out.splitlines() if "\t" in line)


def test_complex_file_roundtrip():
    rng = random.Random(4)
    samples = [zero_complex(), LAM_C, realized(oliver_ideal())]
    samples += [random_complex(f, GroupTag.C3, rng) for f in (F2, F4) for _ in range(3)]
    for C in samples:
        doc = complex_to_json(C)
        back = complex_from_json(json.loads(json.dumps(doc)))
        assert back == C
        assert complex_to_json(back) == doc


def test_f4_scalars_are_pairs():
    doc = complex_to_json(concentrated(lambda_module(F4, GroupTag.C3)))
    assert doc["terms"][0]["act_y1"][0][0] in ([0, 0], [1, 0])


def test_triple_file_roundtrip():
    for T in (ClassifyingTriple(0, "triv", oliver_ideal()), ClassifyingTriple(-2, "alpha2", ideal("x1", "x2", field=F4))):
        doc = triple_to_json(T)
        back, group = triple_from_json(json.loads(json.dumps(doc)))
        assert back == T and group is GroupTag.C3
        assert triple_to_json(back) == doc


def test_classify_lambda(tmp_path, capsys):
    f = write(tmp_path, "lam.json", complex_to_json(LAM_C))
    code, out, _ = run(capsys, "classify", f, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["triple"]["l"] == 0 and doc["triple"]["L"] == "triv" and doc["triple"]["J"] == ["x1", "x2"]
    assert doc["t_equals_m_plus_n"] is True


def test_classify_shifted(tmp_path, capsys):
    f = write(tmp_path, "lam3.json", complex_to_json(shift(LAM_C, 3)))
    code, out, _ = run(capsys, "classify", f)
    assert code == 0 and kv(out)["l"] == "3"


def test_classify_bad_square(tmp_path, capsys):
    t = complex_to_json(LAM_C)["terms"][0]
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    f = write(tmp_path, "bad.json", {"field": "F2", "group": "C3", "lo": 0, "hi": 2, "terms": [t, t, t], "diffs": [eye, eye]})
    code, _, err = run(capsys, "classify", f)
    assert code == 1
    assert "d² ≠ 0 at degree 0" in err


def test_realize_and_check(tmp_path, capsys):
    f = write(tmp_path, "oliver.json", {"l": 0, "L": "triv", "J": list(OLIVER_IDEAL)})
    out_file = tmp_path / "oc.json"
    code, _, err = run(capsys, "realize", f, "-o", out_file, "--check")
    assert code == 0 and "roundtrip\tok" in err
    code, out, _ = run(capsys, "classify", out_file, "--tsv", tmp_path / "h.tsv", "--figure", tmp_path / "h.png")
    assert code == 0
    assert kv(out)["J"] == "(x1^2*x2 + x1*x2^2, x1^4 + x1*x2^3 + x2^4)"
    assert (tmp_path / "h.png").stat().st_size > 0
    rows = (tmp_path / "h.tsv").read_text().splitlines()
    assert rows[0] == "degree\tdim\tclass" and [r.split("\t")[0] for r in rows[1:]] == ["0", "2", "3", "5"]


def test_realize_maximal(tmp_path, capsys):
    f = write(tmp_path, "m.json", {"l": 0, "L": "triv", "J": ["x1", "x2"]})
    code, out, _ = run(capsys, "realize", f)
    assert code == 0
    C = complex_from_json(json.loads(out))
    from a4perfect.perfcx import homology

    assert homology(C).dims() == {0: 4}


def test_realize_rejects_non_invariant(tmp_path, capsys):
    f = write(tmp_path, "x.json", {"l": 0, "L": "triv", "J": ["x1^3", "x2^4"]})
    code, _, err = run(capsys, "realize", f)
    assert code == 1 and "invariant" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", 1, 1)
    assert code == 0 and kv(out)["count"] == "1"
    code, out, _ = run(capsys, "enumerate", 3, 4, "--invariant", "--steenrod")
    assert code == 0
    assert out.splitlines()[0] == "x1^2*x2 + x1*x2^2, x1^4 + x1*x2^3 + x2^4"
    assert kv(out)["count"] == "1"
    code, out, _ = run(capsys, "enumerate", 3, 4, "--count-only", "--oracle", "--jobs", 2)
    assert code == 0 and kv(out)["count"] == kv(out)["oracle_count"] == "48"


def test_enumerate_limit(capsys, monkeypatch):
    monkeypatch.setenv("A4PERFECT_ENUM_LIMIT", "4")
    code, _, err = run(capsys, "enumerate", 2, 3)
    assert code == 1 and "limit" in err


def test_obstruct(tmp_path, capsys):
    f = write(tmp_path, "o.json", {"l": 0, "L": "triv", "J": list(OLIVER_IDEAL)})
    code, out, _ = run(capsys, "obstruct", f, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["vanishes"] is True
    assert doc["criterion_iii"] == doc["criterion_iv"] == doc["f2_corollary"] is True
    f = write(tmp_path, "s.json", complex_to_json(realized(ideal("x1^2", "x2^2"))))
    code, out, _ = run(capsys, "obstruct", f)
    assert code == 0 and kv(out)["vanishes"] == "false" and kv(out)["chi"] == "2 - V"


def test_obstruct_inconsistency_exit_code(tmp_path, capsys, monkeypatch):
    from a4perfect import kzero

    monkeypatch.setattr(kzero, "even_invariant_parameter", lambda J: True)
    f = write(tmp_path, "s.json", {"l": 0, "L": "triv", "J": ["x1^2", "x2^2"]})
    code, _, err = run(capsys, "obstruct", f)
    assert code == 2 and "invariant violation" in err


def test_spectral(tmp_path, capsys):
    f = write(tmp_path, "oc.json", complex_to_json(realized(oliver_ideal())))
    code, out, _ = run(capsys, "spectral", f, "--page", "inf", "--figure", tmp_path / "p.png", "--tsv", tmp_path / "p.tsv")
    assert code == 0
    assert kv(out)["survivors"] == "(0,0) (1,2) (1,3) (2,5)"
    assert kv(out)["collapses at E2"] == "yes"
    assert (tmp_path / "p.png").stat().st_size > 0
    assert (tmp_path / "p.tsv").read_text().startswith("r\tk\tt\tdim\n")


def test_spectral_zero(tmp_path, capsys):
    f = write(tmp_path, "z.json", complex_to_json(zero_complex()))
    code, out, _ = run(capsys, "spectral", f)
    assert code == 0 and "empty" in out


def test_rigidity(tmp_path, capsys):
    code, out, _ = run(capsys, "rigidity", 2, 3, "-o", tmp_path / "c.json")
    d = kv(out)
    assert code == 0 and d["count"] == "1" and d["finite_free"] == "true"
    assert d["J"] == "(x1^2*x2 + x1*x2^2, x1^4 + x1*x2^3 + x2^4)"
    assert complex_from_json(json.loads((tmp_path / "c.json").read_text())) == realized(oliver_ideal())
    code, out, _ = run(capsys, "rigidity", 0, 0)
    d = kv(out)
    assert code == 0 and d["J"] == "(x1, x2)" and d["finite_free"] == "false"
    code, _, err = run(capsys, "rigidity", 40, 40)
    assert code == 1 and "limit" in err
    code, _, _ = run(capsys, "rigidity", -1, 2)
    assert code == 1


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and kv(out)["failed"] == "0"


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent/file.json")
    assert code == 1 and "cannot read" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "a4perfect", "enumerate", "1", "1", "--count-only"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "count\t1"


def test_deterministic_output(capsys):
    _, a, _ = run(capsys, "enumerate", 2, 3)
    _, b, _ = run(capsys, "enumerate", 2, 3, "--jobs", 2)
    assert a == b


@pytest.mark.parametrize("verb", ["classify", "realize", "obstruct", "spectral"])
def test_malformed_json(tmp_path, capsys, verb):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    code, _, err = run(capsys, verb, p)
    assert code == 1
