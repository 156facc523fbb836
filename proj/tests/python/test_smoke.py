import math
import os

import pytest

import fuzzyahp as fa

DATA = os.environ.get("FUZZYAHP_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_tfn_and_membership():
    t = fa.scale_lookup("high")
    assert tuple(t) == (4.0, 5.0, 6.0)
    assert fa.membership(t, 5.0) == 1.0
    assert fa.membership(t, 4.5) == pytest.approx(0.5)
    assert fa.membership(t, 7.0) == pytest.approx(-1.0)
    with pytest.raises(fa.LookupError):
        fa.scale_lookup("enormous")


def test_two_item_solve():
    m = fa.ComparisonMatrix(["a", "b"], [("b", "a", fa.scale_lookup("high"))])
    r = fa.solve_fpp(m)
    assert r.weights == pytest.approx([1 / 6, 5 / 6], abs=1e-5)
    assert r.lambda_ == pytest.approx(1.0, abs=1e-6)
    assert r.consistent
    assert fa.lambda_at(m, r.weights) >= r.lambda_ - 1e-6


def test_oracle_agrees_on_grid_optimum():
    m = fa.ComparisonMatrix(["a", "b"], [("b", "a", fa.Tfn(3, 4, 5))])
    r = fa.solve_fpp(m)
    o = fa.oracle_solve(m, 0.005)
    assert o.weights == pytest.approx(r.weights, abs=1e-6)
    assert o.lambda_ == pytest.approx(r.lambda_, abs=1e-6)
    with pytest.raises(fa.ArgumentError):
        fa.oracle_solve(m, 0.5)


def test_invalid_matrix():
    with pytest.raises(fa.ValidationError):
        fa.ComparisonMatrix(["a", "b"], [("a", "c", fa.Tfn(1, 2, 3))])
    with pytest.raises(fa.DomainError):
        fa.membership(fa.Tfn(1, 2, 3), -1.0)


def test_survey():
    assert fa.casp_pass([5, 5, 4, 4, 5, 5, 4, 5, 4, 5])
    assert not fa.casp_pass([4] * 10)
    assert fa.delphi_consensus([[4, 3, 3, 2]]) == [0.75]
    accepted, deferred = fa.delphi_round(["x", "y"], ["e1", "e2"], [[4, 4], [1, 2]])
    assert accepted == {"x"} and deferred == {"y"}
    assert fa.cronbach_alpha([[1, 2], [2, 3], [3, 5]]) == pytest.approx(18 / 19, abs=1e-12)
    with pytest.raises(fa.StatisticError):
        fa.cronbach_alpha([[1, 1], [1, 1]])


def test_composition():
    rows = fa.compose_global({"A": 0.6, "B": 0.4}, {"A": {"a1": 0.5, "a2": 0.5}, "B": {"b1": 1.0}})
    assert [r.leaf for r in rows] == ["b1", "a1", "a2"]
    assert rows[0].global_weight == pytest.approx(0.4)
    assert fa.rank({"x": 0.2, "y": 0.2, "z": 0.6}) == {"z": 1, "x": 2, "y": 3}


def test_study_file():
    blocks, rows = fa.solve_study(os.path.join(DATA, "paper_study.json"))
    assert len(rows) == 10
    assert math.isclose(sum(r.global_weight for r in rows), 1.0, abs_tol=1e-6)
    for r in blocks.values():
        assert math.isclose(sum(r.weights), 1.0, abs_tol=1e-9)
