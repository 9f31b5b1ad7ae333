"""The six-point primitive-ideal space of the quantum flag manifold.

The classification is encoded as static data: six points (one per
irreducible-representation kernel), the closure of each point, and the
composition-series / K-group records.  Everything else -- closed sets, open
sets, density, the specialization order -- is derived from the point
closures, and the Kuratowski axioms for the derived operator are verified
brute force over all 64 subsets by the test suite.

Points: P3 is dense; P21 and P22 each close up by adding {P0, P11, P12};
P11 and P12 each close up by adding P0; P0 is closed.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations


class PrimPoint(Enum):
    """Kernel of the correspondingly indexed irreducible representation."""

    P0 = "P0"
    P11 = "P11"
    P12 = "P12"
    P21 = "P21"
    P22 = "P22"
    P3 = "P3"

    def __str__(self) -> str:
        return self.value


ALL_POINTS = frozenset(PrimPoint)

_P = PrimPoint
POINT_CLOSURE = {
    _P.P3: ALL_POINTS,
    _P.P21: frozenset({_P.P21, _P.P0, _P.P11, _P.P12}),
    _P.P22: frozenset({_P.P22, _P.P0, _P.P11, _P.P12}),
    _P.P11: frozenset({_P.P11, _P.P0}),
    _P.P12: frozenset({_P.P12, _P.P0}),
    _P.P0: frozenset({_P.P0}),
}

COMPOSITION_FACTORS = ("K", "K+K", "K+K", "C")
K0_RANK = 6
K1_RANK = 0


def point(name: str) -> PrimPoint:
    try:
        return PrimPoint(name)
    except ValueError:
        raise ValueError(
            f"unknown point {name!r}; choose from "
            f"{', '.join(p.value for p in PrimPoint)}"
        ) from None


def closure(points) -> frozenset:
    """Union of the point closures; the closure of the empty set is empty."""
    out = set()
    for p in points:
        out |= POINT_CLOSURE[p]
    return frozenset(out)


def is_closed(points) -> bool:
    s = frozenset(points)
    return closure(s) == s


def is_dense(points) -> bool:
    return closure(points) == ALL_POINTS


def specializes(x: PrimPoint, y: PrimPoint) -> bool:
    """x lies in the closure of {y}."""
    return x in POINT_CLOSURE[y]


def closed_sets():
    """All closed subsets, sorted by (size, point names)."""
    out = []
    pts = sorted(ALL_POINTS, key=lambda p: p.value)
    for r in range(len(pts) + 1):
        for combo in combinations(pts, r):
            s = frozenset(combo)
            if is_closed(s):
                out.append(s)
    return out


def open_sets():
    """Complements of the closed sets, in the complementary order."""
    return [ALL_POINTS - s for s in closed_sets()]


def records():
    """(composition-series factors, K0 rank, K1 rank)."""
    return COMPOSITION_FACTORS, K0_RANK, K1_RANK


def format_points(points) -> str:
    return " ".join(p.value for p in sorted(points, key=lambda p: p.value))
