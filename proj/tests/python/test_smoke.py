from fractions import Fraction

import pytest

import hecke_lab as hl


def test_kl_polynomials():
    assert hl.kl_polynomial("12345678", "62754381") == {0: 1, 1: 1}
    assert hl.kl_polynomial([1, 2, 3, 4], [3, 4, 1, 2]) == {0: 1, 1: 1}
    assert hl.kl_polynomial("2134", "1243") == {}
    row = hl.kl_row("3412")
    assert len(row) == 14
    assert row[(1, 3, 2, 4)] == {0: 1, 1: 1}
    assert hl.mu("12", "21") == 1
    assert hl.poly_str(hl.kl_polynomial("1234", "4231")) == "1 + q"


def test_permutations():
    assert hl.length("62754381") == 17
    assert hl.length("26754381") == 16
    assert hl.is_smooth("245361") and hl.is_codominant("245361")
    assert not hl.is_smooth("62754381")
    assert hl.bruhat_leq("2134", "2314")
    assert hl.hessenberg_of_smooth("245361") == [2, 4, 5, 5, 6, 6]
    assert hl.codominant("2,6,7,7,7,7,8,8") == (2, 6, 7, 5, 4, 3, 8, 1)
    assert len(hl.hessenberg_functions(5)) == 42


def test_characters():
    assert hl.chi("2,1", "231") == {1: -1}
    assert hl.cprime("21") == {(1, 2): {0: 1}, (2, 1): {0: 1}}
    f = hl.ch("321", basis="h")
    assert f.coefficients() == {(3,): {0: 1, 1: 2, 2: 2, 3: 1}}
    assert str(hl.ch("21", "h")) == "(1 + q)*h[2]"


def test_symmetric_functions():
    f = hl.csf("3,3,3")
    assert f.basis == "m"
    assert f.to("e").coefficients() == {(3,): {0: 1, 1: 2, 2: 2, 3: 1}}
    assert hl.omega(f) == hl.ch("321")
    p = hl.csf("2,2").to("p").coefficients()
    assert p[(1, 1)] == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert f.to_json()["basis"] == "m"


def test_lab():
    assert hl.smooth_reduce("3142") == (2, 3, 4, 1)
    assert hl.moment_graph("3142") == hl.moment_graph("2341")
    r = hl.modular_relation("231", 1)
    assert r["case"] == "smooth" and r["z"] == (2, 1, 3)
    assert ([1, 3, 3], [3, 3, 3], 1) in hl.counterexample_search("2,3,3")
    assert hl.counterexample_search("1,2,3,4") == []
    assert hl.decompose("3412") == {(2, 3, 4, 1): {0: 1, 1: 1}}
    report = hl.run_check("codominant-ch", 4)
    assert report["status"] == "pass" and report["cases"] == 14
    assert "modular-law" in hl.check_names()


def test_cli():
    code, out, _ = hl.run_cli(["--no-cache", "smooth-reduce", "--w", "3142"])
    assert (code, out) == (0, "2341\n")
    code, _, err = hl.run_cli(["--no-cache", "kl", "--w", "12x"])
    assert code == 2 and "malformed" in err


def test_errors():
    with pytest.raises(hl.HeckeLabError):
        hl.smooth_reduce("4231")
    with pytest.raises(ValueError):
        hl.kl_polynomial("12", "213")
