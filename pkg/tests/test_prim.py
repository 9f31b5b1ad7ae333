"""Six-point primitive-ideal space: closure table, axioms, records."""

from itertools import combinations

import pytest

from qflag.prim import (
    ALL_POINTS,
    PrimPoint,
    closed_sets,
    closure,
    is_closed,
    is_dense,
    open_sets,
    point,
    records,
    specializes,
)

P = PrimPoint


def _subsets():
    pts = sorted(ALL_POINTS, key=lambda p: p.value)
    for r in range(7):
        for combo in combinations(pts, r):
            yield frozenset(combo)


def test_point_closures():
    assert closure({P.P3}) == ALL_POINTS
    assert closure({P.P21}) == {P.P21, P.P0, P.P11, P.P12}
    assert closure({P.P22}) == {P.P22, P.P0, P.P11, P.P12}
    assert closure({P.P11}) == {P.P11, P.P0}
    assert closure({P.P12}) == {P.P12, P.P0}
    assert closure({P.P0}) == {P.P0}
    assert closure(set()) == frozenset()


def test_density_and_closedness():
    assert is_dense({P.P3})
    assert not is_dense({P.P21, P.P22})
    assert is_closed({P.P0})
    assert is_closed({P.P0, P.P11})
    assert not is_closed({P.P3})
    assert not is_closed({P.P11, P.P12})  # misses P0


def test_kuratowski_axioms_over_all_subsets():
    subsets = list(_subsets())
    assert len(subsets) == 64
    assert closure(frozenset()) == frozenset()
    for s in subsets:
        cs = closure(s)
        assert s <= cs
        assert closure(cs) == cs
        for t in subsets:
            assert closure(s | t) == closure(s) | closure(t)


def test_specialization_is_a_partial_order():
    pts = list(ALL_POINTS)
    for x in pts:
        assert specializes(x, x)
    closures = {x: closure({x}) for x in pts}
    for x in pts:
        for y in pts:
            if x is not y:
                assert closures[x] != closures[y]  # T0
            if specializes(x, y):
                assert closures[x] <= closures[y]  # transitivity


def test_open_sets_consistent_with_closed_sets():
    opens = open_sets()
    closeds = closed_sets()
    assert len(opens) == len(closeds)
    assert [ALL_POINTS - o for o in opens] == closeds
    assert frozenset() in opens and ALL_POINTS in opens
    for o in opens:
        assert is_closed(ALL_POINTS - o)


def test_records():
    factors, k0, k1 = records()
    assert factors == ("K", "K+K", "K+K", "C")
    assert k0 == 6
    assert k1 == 0


def test_point_lookup():
    assert point("P3") is P.P3
    with pytest.raises(ValueError):
        point("P99")
