import json

from primeul.cli import main
from primeul.intpoly import IntPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_b3(capsys):
    code, out, _ = run(capsys, "poly", "--family", "B 3", "--which", "peul")
    assert code == 0
    assert out.strip() == "z^3 + 10z^2 + 4z"


def test_poly_i25(capsys):
    code, out, _ = run(capsys, "poly", "--family", "I2 5", "--which", "peul")
    assert code == 0
    assert out.strip() == "z^2 + 3z"


def test_poly_char_from_file(tmp_path, capsys):
    path = tmp_path / "fourcycle.arr"
    path.write_text("4\n1 -1 0 0\n0 1 -1 0\n0 0 1 -1\n1 0 0 -1\n")
    code, out, _ = run(capsys, "poly", "--file", str(path), "--which", "char")
    assert code == 0
    assert out.strip() == "t^4 - 4t^3 + 6t^2 - 3t"


def test_poly_methods_agree(capsys):
    results = []
    for method in ("mobius", "recursive", "halfspace", "descents"):
        code, out, _ = run(capsys, "poly", "--family", "B 2",
                           "--method", method, "--json")
        assert code == 0
        results.append(json.loads(out)["coeffs_low_to_high"])
    assert all(r == results[0] for r in results)


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "poly", "--family", "D 3", "--json")
    data = json.loads(out)
    assert data["family"] == "D 3"
    assert data["which"] == "peul"
    assert IntPoly(tuple(data["coeffs_low_to_high"])) == IntPoly((0, 1, 4, 1))
    assert isinstance(data["runtime_ms"], int)


def test_json_deterministic_apart_from_runtime(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "poly", "--family", "B 2", "--json")
        data = json.loads(out)
        data.pop("runtime_ms")
        outs.append(data)
    assert outs[0] == outs[1]


def test_parse_failure_exit_2(capsys):
    code, _, err = run(capsys, "poly", "--family", "Q 3")
    assert code == 2
    assert "family" in err


def test_missing_file_exit_2(capsys):
    code, _, _ = run(capsys, "poly", "--file", "/nonexistent.arr")
    assert code == 2


def test_precondition_exit_3_nonsimplicial(capsys):
    code, _, err = run(capsys, "poly", "--family", "Gn 4",
                       "--which", "peul", "--method", "descents")
    assert code == 3
    assert "simplicial" in err


def test_precondition_exit_3_bad_vector(capsys):
    code, _, err = run(capsys, "poly", "--family", "B 2",
                       "--method", "descents", "--v", "1,1")
    assert code == 3
    assert "not very generic" in err


def test_inspect(capsys):
    code, out, _ = run(capsys, "inspect", "--family", "B 3")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["hyperplanes"] == "9"
    assert lines["regions"] == "48"
    assert lines["simplicial"] == "true"
    assert lines["sharp"] == "true"


def test_inspect_nonsimplicial(capsys):
    code, out, _ = run(capsys, "inspect", "--family",
                       "graphic 4 1-2,2-3,3-4,4-1")
    assert code == 0
    assert "simplicial: false" in out


def test_inspect_wall_vector(capsys):
    code, out, _ = run(capsys, "inspect", "--family", "A 4",
                       "--v=-1,-1,-1,3")
    assert code == 0
    assert "v_generic: false" in out
    assert "halfspace_generic: true" in out
    assert "v lies on the hyperplane" in out


def test_table_b(capsys):
    code, out, _ = run(capsys, "table", "B", "0..5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n\tpolynomial"
    assert lines[4] == "3\tz^3 + 10z^2 + 4z"
    assert lines[6] == "5\tz^5 + 116z^4 + 516z^3 + 296z^2 + 16z"


def test_table_d(capsys):
    code, out, _ = run(capsys, "table", "D", "2..7")
    assert code == 0
    assert "7\tz^7 + 862z^6 + 11824z^5 + 28064z^4 + 18404z^3 + 3158z^2 + 57z" \
        in out


def test_table_range_validation(capsys):
    code, _, _ = run(capsys, "table", "B", "0..9")
    assert code == 2


def test_table_exceptional(capsys):
    code, out, _ = run(capsys, "table", "exceptional")
    assert code == 0
    lines = out.strip().splitlines()
    assert any("H4" in l and "golden (irrational realization out of scope)" in l
               for l in lines)
    assert any("F4" in l and "computed" in l for l in lines)
    assert any("E7" in l and "--long" in l for l in lines)
    assert "z^4 + 1316z^3 + 3844z^2 + 900z" in out


def test_verify_success_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "recursions", "--nmax", "4")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS" in out


def test_verify_egf(capsys):
    code, out, _ = run(capsys, "verify", "egf", "--order", "4")
    assert code == 0
    assert "PASS egf/generating-functions/order4" in out


def test_verify_roots_small(capsys):
    code, out, _ = run(capsys, "verify", "roots", "--dn-max", "6")
    assert code == 0
    assert "PASS roots/G4-not-real-rooted" in out
