from fractions import Fraction

import pytest

import charslope


def test_lambda1_pretzel_family():
    for n in range(-5, 6):
        assert charslope.lambda1(f"P(-3,3,{2 * n + 1})") == Fraction(2 * n + 1, 16)


def test_lambda1_routes_agree():
    shortcut, residue = charslope.lambda1_routes("-2*t + 5 - 2*t^-1", "t^2 + 3 + t^-2")
    assert shortcut == residue


def test_v3():
    assert charslope.v3("P(-3,3,-1)") == -1
    assert charslope.v3("m(P(-3,3,5))") == -5


def test_invariants():
    inv = charslope.invariants("16n696530")
    assert inv["knot"] == "Wh-(T(2,3),2)"
    assert inv["alexander"] == "2*t - 3 + 2*t^-1"
    assert inv["signature"] == 2
    assert inv["unit_circle_root"] == ("3/4", "7/16")
    assert inv["cover6"] == 21
    assert charslope.invariants("m(16n696530)")["signature"] == -2


def test_seifert_helpers():
    v = charslope.pretzel_seifert(-3, 3, 7)
    assert charslope.alexander(v) == "-2*t + 5 - 2*t^-1"
    assert charslope.signature([[1, 1], [0, 2]]) == 2
    trefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
    assert charslope.fox_alexander(trefoil) == "t - 1 + t^-1"


def test_covers():
    counts = charslope.covers("15n43522", slope=0, index=6)
    assert counts == {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 3}


def test_characterize():
    report = charslope.characterize("Wh+(T(2,3),2)")
    assert report["schema_version"] == 1
    assert report["conclusion"] == "characterized"
    assert all(c["verdict"] in ("eliminated", "target") for c in report["candidates"])


def test_distinguish():
    report = charslope.distinguish("P(-3,3,3)", "P(-3,3,7)", Fraction(1, 2))
    assert report["conclusion"] == "distinguished"
    assert report["candidates"][0]["obstruction"] == "finite-type-v3"


def test_errors():
    with pytest.raises(charslope.UsageError, match="even"):
        charslope.invariants("P(-3,3,4)")
    with pytest.raises(charslope.DomainError):
        charslope.lambda1("15n43522")
    with pytest.raises(charslope.DomainError):
        charslope.invariants("7_4")
    assert issubclass(charslope.UsageError, charslope.Error)
