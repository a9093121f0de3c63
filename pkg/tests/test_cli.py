import io
import json

import pytest

from colorhodge.cli import parse_document, run
from colorhodge.errors import InputError


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="in.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


PAIR = {"n": 4, "graphs": [[[1, 2]], [[3, 4]]]}
K3 = {"n": 3, "graphs": [[[1, 2], [1, 3], [2, 3]]]}


def test_verify_theorem_pair(write):
    code, out, _ = invoke("verify", "theorem", "--input", write(PAIR), "--quiet")
    assert code == 0
    assert "λ^4 - λ^2" in out and "PASS" in out
    assert "2            1               1    1   True" in out
    code, out, _ = invoke("verify", "theorem", "--input", write(PAIR), "--format", "kv")
    assert code == 0 and "j=2 euler_chain=1 euler_homology=1 rhs=1 match=True" in out
    assert "chi=L^4 - L^2" in out


def test_chromatic(write):
    code, out, _ = invoke("chromatic", "--input", write(K3))
    assert code == 0 and out.strip() == "λ^3 - 3λ^2 + 2λ"
    code, out, _ = invoke("chromatic", "--input", write(K3), "--format", "csv", "--check")
    assert code == 0 and out.startswith("power,coefficient\n0,0\n1,2\n2,-3\n3,1\n")
    assert "3,6,6,True" in out


def test_expected_fixture_mismatch(write):
    bad = dict(PAIR, expected={"euler": {"2": 7}})
    code, out, _ = invoke("verify", "theorem", "--input", write(bad), "--quiet")
    assert code == 1 and "MISMATCH" in out
    good = dict(PAIR, expected={"euler": {"2": 1}, "chromatic": [0, 0, -1, 0, 1]})
    assert invoke("verify", "theorem", "--input", write(good), "--quiet")[0] == 0
    bad = dict(K3, expected={"chromatic": [0, 2, -3, 2]})
    assert invoke("chromatic", "--input", write(bad))[0] == 1
    bad = dict(K3, expected={"betti": {"0": 4}})
    assert invoke("homology", "--input", write(bad))[0] == 1


@pytest.mark.parametrize("text, fragment", [
    ("{not json", "1:2"),
    ('{"n": 3}', "graphs"),
    ('{"n": 0, "graphs": [[[1, 2]]]}', "'n'"),
    ('{"n": 3, "graphs": [[[1, 4]]]}', "graphs[0]"),
    ('{"n": 3, "graphs": [[[1, 2]], []]}', "empty"),
    ('{"n": 3, "graphs": [[[1, "2"]]]}', "graphs[0][0]"),
])
def test_malformed_input(write, text, fragment):
    code, _, err = invoke("hodge", "--input", write(text))
    assert code == 2 and fragment in err


def test_missing_file_and_bad_subcommand(tmp_path):
    assert invoke("hodge", "--input", str(tmp_path / "nope.json"))[0] == 2
    assert invoke("frobnicate")[0] == 2


def test_budget_refusal(write):
    big = {"n": 8, "graphs": [[[1, 2]]]}
    code, _, err = invoke("homology", "--input", write(big))
    assert code == 3 and "refused" in err
    assert invoke("homology", "--input", write(K3), "--max-n", "2")[0] == 3
    assert invoke("idempotents", "4", "--max-k", "3")[0] == 3


def test_hodge_csv_schema(write):
    code, out, _ = invoke("hodge", "--input", write(K3), "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "kind,degree,piece,dimension"
    assert "chain,0,2,3" in lines and "homology,0,1,2" in lines and "homology,-1,1,0" in lines
    # explicit zero rows only for j <= i + 2
    assert "chain,-1,2,0" not in lines


def test_other_subcommands(write):
    code, out, _ = invoke("complex", "--input", write(PAIR), "--format", "csv")
    assert code == 0 and out.splitlines()[:3] == ["degree,dimension,boundary_rank", "-1,1,0", "0,2,1"]
    code, out, _ = invoke("homology", "--input", write(K3), "--format", "kv")
    assert "degree=0 betti=5" in out
    for which in ("hanlon", "jonsson", "corollary"):
        assert invoke("verify", which, "--input", write(K3), "--quiet")[0] == 0
    assert invoke("verify", "hanlon", "--input", write(PAIR))[0] == 2
    code, out, _ = invoke("verify", "corollary", "--input", write(PAIR), "--format", "csv")
    assert code == 0 and "matches_at_n_minus_3,False" in out
    code, out, _ = invoke("idempotents", "2", "--format", "csv")
    assert out.splitlines() == ["descents,permutations,e2^(1),e2^(2)", "0,1,1/2,1/2", "1,1,-1/2,1/2"]
    assert invoke("hodge", "--input", write(K3), "--no-both-routes")[0] == 0


def test_scan_output_is_deterministic():
    a = invoke("scan", "--max-n", "3", "--max-m", "2", "--seed", "7", "--format", "csv")
    b = invoke("scan", "--max-n", "3", "--max-m", "2", "--seed", "7", "--format", "csv")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[0] == "index,n,m,graphs,euler_chain,euler_homology,rhs,homology_degrees,match"


def test_parse_document_direct():
    doc = parse_document(json.dumps(dict(PAIR, expected={"euler": {"2": 1}})))
    assert doc.seq.m == 2 and doc.expected == {"euler": {"2": 1}}
    with pytest.raises(InputError):
        parse_document("[1, 2]")
