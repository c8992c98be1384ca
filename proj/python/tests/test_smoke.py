import json

import pytest

import compstat


def test_counts_all_compositions():
    assert compstat.counts("compositions", "N", 8) == [1] + [2 ** (n - 1) for n in range(1, 9)]


def test_palindrome_counts():
    assert compstat.counts("palindromes", "N", 6) == [1, 1, 2, 2, 4, 4, 8]


def test_rise_totals():
    assert compstat.totals("compositions", "N", "rises", 6) == [0, 0, 0, 1, 3, 9, 23]


@pytest.mark.parametrize("cls", compstat.CLASSES)
@pytest.mark.parametrize("spec", ["N", "1,2", "2,3", "odd"])
def test_joint_matches_oracle(cls, spec):
    gf = compstat.joint_gf(cls, spec, 10)
    for n in range(11):
        oracle = compstat.oracle_joint(cls, spec, n)
        engine = gf.coefficient(n)
        if cls == "carlitz-palindromes":
            # levels are fixed to zero; compare on (m, rises, drops)
            oracle = {(m, r, 0, d): c for (m, r, _l, d), c in oracle.items()}
        elif cls == "partitions":
            oracle = {(m, 0, l, d): c for (m, _r, l, d), c in oracle.items()}
        elif cls == "carlitz":
            oracle = {(m, r, 0, d): c for (m, r, _l, d), c in oracle.items()}
        assert engine == oracle, (cls, spec, n)


def test_closed_form_equals_linear_system():
    assert compstat.class_gf("compositions", "1,3,4", 12) == compstat.via_system("1,3,4", 12)


def test_enumerate_small():
    assert compstat.enumerate("compositions", "N", 3) == [[1, 1, 1], [1, 2], [2, 1], [3]]
    assert compstat.enumerate("compositions", "N", 0) == [[]]


def test_series_str_and_eval():
    gf = compstat.class_gf("compositions", "1", 2)
    assert str(gf) == "1 + x*y + x^2*y^2*l"
    assert gf.eval("l", 1).eval("y", 1).scalar_coefficients() == [1, 1, 1]


def test_big_values_are_python_ints():
    top = compstat.counts("compositions", "N", 80)[-1]
    assert top == 2 ** 79


def test_expand_rational():
    # 1/(1-x-x^2) gives Fibonacci numbers
    assert compstat.expand_rational([1], [1, -1, -1], 7) == [1, 1, 2, 3, 5, 8, 13, 21]
    with pytest.raises(ValueError):
        compstat.expand_rational([1], [2, -1], 3)


def test_errors():
    with pytest.raises(compstat.ParseError):
        compstat.parse_set("1,,2")
    with pytest.raises(compstat.DomainError):
        compstat.totals("carlitz", "N", "levels", 5)
    with pytest.raises(ValueError):
        compstat.counts("bogus", "N", 3)


def test_catalog_entry():
    assert "compositions.rises.odd" in compstat.catalog_ids()
    v = compstat.verify_entry("compositions.rises.odd", 20)
    assert v["suspect"] and not v["match"]


def test_check_suite():
    report = compstat.run_check("paths", 8)
    assert report["ok"] and report["items"]


def test_cli_roundtrip():
    code, out, err = compstat.cli(
        ["table", "--class", "compositions", "--set", "1,2", "--stat", "joint", "--n-max", "4", "--format", "json"]
    )
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert sum(row["count"] for row in doc["rows"] if row["n"] == 4) == 5
    code, _, _ = compstat.cli(["table", "--class", "nope"])
    assert code == 2
