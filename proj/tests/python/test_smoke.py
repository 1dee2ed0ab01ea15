import pytest

import crystal_lr as clr


def test_lr():
    assert clr.lr([3, 2, 1], [2, 1], [2, 1]) == 2
    assert clr.lr([1], [], [1]) == 1
    assert clr.genlr([1, -1], [1], [-1]) == 1


def test_kostka_foulkes():
    assert clr.kostka_foulkes([2, 1, 0], [1, 1, 1]) == [[1, 1], [2, 1]]


def test_decompose_matches_pieri():
    assert clr.decompose("B(0) * Bcol(2)") == clr.pieri([0], 2)
    terms = clr.decompose("Bmu(1) * Bnu(1)")
    assert terms == [{"class": {"mu": [1], "nu": [1], "hw": None, "dual": False}, "mult": 1}]


def test_errors():
    with pytest.raises(clr.MixedLevelError):
        clr.decompose("B(0) * Bdual(0)")
    with pytest.raises(clr.ParseError):
        clr.decompose("B(0) * Bxyz(1)")
    with pytest.raises(clr.UnknownSuite):
        clr.verify("nosuch")


def test_hl_act():
    out = clr.hl_act([1, 1], 1)
    assert out["complete"]
    assert out["terms"] == [{"lambda": [1, 1], "tpoly": [[0, 1]]}, {"lambda": [2, 0], "tpoly": [[1, 1]]}]


def test_truncate():
    assert clr.truncate("B(0) * Bcol(2)")["match"]


def test_words():
    assert clr.lower([(0, False)], 0) == [(1, False)]
    assert clr.raise_([(0, False)], 0) is None


def test_verify_quick():
    results = clr.verify("bicrystal", quick=True)
    assert all(r["pass"] for r in results)
    assert "all" in clr.suite_names()
