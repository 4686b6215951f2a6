import json
import subprocess
import sys

import pytest

from truncgroup import ScalarDomain, TruncatedSeries, check_periodic, serialize
from truncgroup.cli import main


def run(argv, capsys):
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def quad(tmp_path):
    return write(tmp_path / "quad.json", {
        "n": 1, "order": 6, "domain": "symbolic", "symbols": ["a"],
        "terms": [{"component": 1, "exponents": [1], "coeff": 1},
                  {"component": 1, "exponents": [2], "coeff": "a"}]})


def test_invert_quadratic(quad, capsys):
    status, out, _ = run(["invert", quad, "--format", "text"], capsys)
    assert status == 0
    assert out == "(1)*x + (-a)*x^2 + (2*a^2)*x^3 + (-5*a^3)*x^4 + (14*a^4)*x^5 + (-42*a^5)*x^6 + O(7)\n"
    status, out, _ = run(["invert", quad], capsys)
    doc = json.loads(out)
    assert [t["coeff"] for t in doc["terms"]] == ["1", "-a", "2*a^2", "-5*a^3", "14*a^4", "-42*a^5"]


def test_compose_with_identity_is_canonical(tmp_path, capsys):
    ident = write(tmp_path / "id.json", {"n": 2, "order": 3, "domain": "rational", "terms": [
        {"component": 2, "exponents": [0, 1], "coeff": 1},
        {"component": 1, "exponents": [1, 0], "coeff": 1}]})
    f_doc = {"n": 2, "order": 3, "domain": "rational", "terms": [
        {"component": 2, "exponents": [1, 1], "coeff": "3/6"},
        {"component": 1, "exponents": [1, 0], "coeff": 2},
        {"component": 2, "exponents": [0, 1], "coeff": 1}]}
    f = write(tmp_path / "f.json", f_doc)
    status, out, _ = run(["compose", ident, f], capsys)
    assert status == 0
    assert out == serialize.dumps(serialize.series_from_dict(f_doc))
    assert json.loads(out)["terms"][-1]["coeff"] == "1/2"


def test_power_order_and_period(tmp_path, capsys):
    dom = ScalarDomain.rational()
    phi = TruncatedSeries.univariate({1: -1, 2: 1, 3: -1}, 3, dom)
    path = tmp_path / "phi.json"
    path.write_text(serialize.dumps(phi))
    assert run(["order", str(path)], capsys)[1] == "2\n"
    assert run(["check-period", str(path), "2"], capsys)[1] == "periodic\n"
    assert run(["check-period", str(path), "2", "--format", "json"], capsys)[1] == '{"p": 2, "periodic": true}\n'
    status, out, _ = run(["power", str(path), "2", "--format", "text"], capsys)
    assert out == "(1)*x + O(4)\n"


def test_gen_periodic_and_conjugator(tmp_path, capsys):
    seeds = write(tmp_path / "seeds.json", {"domain": "cyclotomic", "seeds": [
        {"component": 1, "exponents": [1, 1], "coeff": "w"},
        {"component": 2, "exponents": [0, 2], "coeff": 1}]})
    out_path = tmp_path / "phi.json"
    for mode, lam in (("scalar", None), ("diag", "1,2"), ("conjugate", "1,2")):
        argv = ["gen-periodic", "--mode", mode, "--p", "3", "--seeds", seeds, "--order", "5",
                "-o", str(out_path)]
        if lam:
            argv += ["--lambda", lam]
        else:
            argv += ["--n", "2"]
        assert run(argv, capsys)[0] == 0
        phi = serialize.load_series(str(out_path))
        assert check_periodic(phi, 3)
        assert run(["order", str(out_path)], capsys)[1] == "3\n"
        status, out, _ = run(["conjugator", str(out_path), "--p", "3",
                              "--lambda", lam or "1,1"], capsys)
        assert status == 0
        assert serialize.loads(out).linear_part().is_identity()


def test_relations_and_sequences(capsys):
    status, out, _ = run(["relations", "--p", "2", "--max-degree", "5", "--format", "csv"], capsys)
    assert out == "degree,expression\n3,-a2^2\n5,2*a2^4 - 3*a2*a4\n"
    status, out, _ = run(["c-seq", "--count", "6"], capsys)
    assert out.splitlines() == ["c_1 = -1", "c_2 = 2", "c_3 = -13", "c_4 = 145",
                                "c_5 = -2328", "c_6 = 49784"]
    status, out, _ = run(["c-seq", "--count", "3", "--format", "json", "--growth"], capsys)
    assert out.startswith("[-1, 2, -13]\n# diagnostic")
    assert run(["dims", "--k", "2", "--m", "0", "--n", "2"], capsys)[1] == "10\n"
    status, out, _ = run(["relations", "--p", "4", "--max-degree", "5", "--format", "json"], capsys)
    assert json.loads(out)["rows"][0]["degree"] == 5


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 1')
    status, _, err = run(["invert", str(bad)], capsys)
    assert status == 2 and err.startswith("error[parse_error]:")
    status, _, err = run(["invert", str(tmp_path / "missing.json")], capsys)
    assert status == 2
    x2 = write(tmp_path / "x2.json", {"n": 1, "order": 4, "domain": "rational", "terms": [
        {"component": 1, "exponents": [1], "coeff": 1}, {"component": 1, "exponents": [2], "coeff": 1}]})
    status, _, err = run(["order", x2], capsys)
    assert status == 1 and err.startswith("error[not_periodic_within_bound]:")
    sing = write(tmp_path / "s.json", {"n": 1, "order": 2, "domain": "rational", "terms": [
        {"component": 1, "exponents": [2], "coeff": 1}]})
    status, _, err = run(["invert", sing], capsys)
    assert status == 1 and err.startswith("error[singular_matrix]:")
    status, _, err = run(["conjugator", x2, "--p", "2", "--lambda", "1"], capsys)
    assert status == 1 and "precondition_failed" in err
    with pytest.raises(SystemExit) as info:
        main(["compose"])
    assert info.value.code == 2


def test_verify_suite(capsys):
    status, out, _ = run(["verify", "--suite", "c-sequence"], capsys)
    assert status == 0 and out.startswith("[PASS]  2 ")
    status, out, _ = run(["verify", "--suite", "relations-p3", "--format", "json"], capsys)
    assert status == 1 and json.loads(out)[0]["passed"] is False


def test_output_is_byte_identical(quad, tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        subprocess.run([sys.executable, "-m", "truncgroup", "invert", quad, "-o", str(path)], check=True)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
