import json

import pytest

from admissibility.cli import (
    EXIT_CORPUS,
    EXIT_OBSTRUCTION,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNDETERMINED,
    QueryParseError,
    QuerySpec,
    load_corpus,
    main,
    product_spec,
    run_query,
)


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_inspect(capsys):
    code, out, _ = call(capsys, "field", "inspect", "--poly", "1,0,1", "--primes", "2,3,5")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["degree"] == 2 and rep["galois"] is True
    assert rep["primes"]["2"]["pairs"] == [[2, 1]]
    assert rep["primes"]["3"]["pairs"] == [[1, 2]]
    assert rep["primes"]["5"]["pairs"] == [[1, 1], [1, 1]]


def test_field_inspect_rationals_and_galois(capsys):
    assert json.loads(call(capsys, "field", "inspect", "--poly", "1,-1")[1])["degree"] == 1
    code, out, _ = call(capsys, "field", "inspect", "--poly", "1,0,0,-2", "--galois")
    assert json.loads(out)["galois"] is False


def test_field_inspect_index_obstruction(capsys):
    code, out, _ = call(capsys, "field", "inspect", "--poly", "1,-1,-2,-8", "--primes", "2")
    assert code == EXIT_OK
    assert json.loads(out)["primes"]["2"]["method"] == "maximal-order"
    code, _, err = call(capsys, "field", "inspect", "--poly", "1,-1,-2,-8", "--primes", "2",
                        "--dedekind-only")
    assert code == EXIT_OBSTRUCTION


def test_decide_examples(capsys):
    code, out, _ = call(capsys, "decide", "--poly", "1,0,1", "--metacyclic", "4,2,0,3",
                        "--mode", "tame", "--replay")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["status"] == "NotTamelyAdmissible" and rep["theorem"] == "NEFTIN_T13"
    assert rep["replay"] is True
    _, out, _ = call(capsys, "decide", "--poly", "1,-1", "--metacyclic", "4,2,0,3", "--mode", "tame")
    assert json.loads(out)["status"] == "TamelyAdmissible"
    _, out, _ = call(capsys, "decide", "--poly", "1,0,-5", "--product",
                     "perm:(1 2 3);perm:(4 5 6);perm:(7 8 9)", "--mode", "admissible")
    assert json.loads(out)["status"] == "NotAdmissible"


def test_decide_perm_generators(capsys):
    _, out, _ = call(capsys, "decide", "--poly", "1,0,1", "--perm", "(1 2 3 4)", "--perm", "(1 3)",
                     "--mode", "tame", "--json")
    assert "\n" not in out.strip()
    assert json.loads(out)["status"] == "NotTamelyAdmissible"


def test_strict_undetermined(capsys):
    args = ["decide", "--poly", "1,-1", "--perm", "(1 2 3 4 5)", "--perm", "(1 2 3)"]
    code, out, _ = call(capsys, *args)
    assert code == EXIT_OK and json.loads(out)["status"] == "Undetermined"
    assert call(capsys, *args, "--strict")[0] == EXIT_UNDETERMINED


@pytest.mark.parametrize("argv", [
    ["decide", "--poly", "1,x,1", "--metacyclic", "4,2,0,3"],
    ["decide", "--poly", "2,0,1", "--metacyclic", "4,2,0,3"],
    ["decide", "--poly", "1,0,-1", "--metacyclic", "4,2,0,3"],
    ["decide", "--poly", "1,0,1", "--metacyclic", "4,2,1,3"],
    ["decide", "--poly", "1,0,1", "--metacyclic", "4,2,0"],
    ["decide", "--poly", "1,0,1"],
    ["decide", "--poly", "1,0,1", "--perm", "(1 2"],
    ["decide", "--poly", "1,0,1", "--product", "foo:1"],
    ["nonsense"],
])
def test_parse_errors(capsys, argv):
    assert call(capsys, *argv)[0] == EXIT_PARSE


def test_parse_error_position():
    with pytest.raises(QueryParseError) as exc:
        from admissibility.cli import poly_from_cli
        poly_from_cli("1,0,z,1")
    assert "position 4" in str(exc.value)


def test_product_spec():
    spec = product_spec("perm:(1 2 3)|(1 2);meta:4,2,0,3")
    assert spec == {"product": [{"permutations": ["(1 2 3)", "(1 2)"]},
                                {"metacyclic": {"e": 4, "f": 2, "i": 0, "q": 3}}]}


def test_query_spec_round_trip():
    q = QuerySpec([1, 0, 1], {"metacyclic": {"e": 4, "f": 2, "i": 0, "q": 3}}, "tame",
                  {"order": 512})
    q2 = QuerySpec.from_json(json.loads(json.dumps(q.to_json())))
    assert q2 == q
    v, out = run_query(q2, do_replay=True)
    assert out["schema"] == 1 and out["replay"] is True


def test_corpus_filter(capsys):
    code, out, _ = call(capsys, "corpus", "--filter", "acceptance-1", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["failed"] == 0 and rep["passed"] >= 2


def test_corpus_failure_exit(capsys, tmp_path):
    case = dict(load_corpus()[0])
    case["expected"] = "TamelyAdmissible"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([case]))
    code, out, _ = call(capsys, "corpus", "--corpus", str(path))
    assert code == EXIT_CORPUS
    assert "FAIL" in out
