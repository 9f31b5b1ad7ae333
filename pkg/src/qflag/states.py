"""Haar functionals, the gauge average and the conditional expectation.

The Haar functionals are given by closed formulas on the normal-form bases

    suq2:  a^k g^m g'^n        ->  delta_{k0} delta_{mn} (q^2-1)/(q^{2n+2}-1)
    u1  :  u^k                 ->  delta_{k0}
    uq2 :  a^k u^l g^m g'^n    ->  delta_{k0} delta_{l0} delta_{mn} (as above)

with negative powers carried by the starred generator (x^k = (x*)^{-k} for
k < 0).  Inputs are always reduced before the formula is applied.  The
composite uq2 functional routes through the suq2-coaction and the circle
functional and must agree with the direct formula; any intermediate term
outside the u-subalgebra signals a rewrite bug and raises EngineError.

The conditional expectation onto the quantum projective plane is computed
from first principles as (id (x) haar_uq2) after the uq2-coaction; the
displayed closed form (w_ijk - w_ikj)/(1+q^2) is kept only as a comparison
target, and expectation_report records the per-triple match.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .algebras import make_mq3, make_suq2, make_u1, make_uq2, ugen
from .coeff import QRat, QR_ONE, QR_ZERO
from .errors import CoinvarianceError, EngineError, UsageError
from .presentation import NCPoly, Presentation, degree_of
from .tensor import coact_rho_su3, coact_rho_uq2


class Functional:
    """Linear functional on a presentation, defined on normal-form words.

    Unital by construction: the empty word evaluates to 1.  Applying the
    functional to a polynomial reduces it first, so callers may pass
    arbitrary representatives.
    """

    def __init__(self, name, domain: Presentation, word_value):
        self.name = name
        self.domain = domain
        self.word_value = word_value

    def __call__(self, p: NCPoly) -> QRat:
        if p.pres is not self.domain:
            raise UsageError(f"{self.name}: element not in {self.domain.name}")
        acc = QR_ZERO
        for w, c in p.reduce().terms.items():
            v = self.word_value(w)
            if not v.is_zero():
                acc = acc + c * v
        return acc


@cache
def _haar_weight(n: int) -> QRat:
    # (q^2 - 1)/(q^{2n+2} - 1), the invariant-integral weight at g-degree n
    num = QRat.q(2) - QR_ONE
    den = QRat.q(2 * n + 2) - QR_ONE
    return num / den


def _gamma_balanced_value(word, skip_names) -> QRat:
    """delta-formula shared by the suq2 and uq2 Haar functionals."""
    m = n = 0
    for g in word:
        if g.name in skip_names:
            return QR_ZERO
        if g.star:
            n += 1
        else:
            m += 1
    if m != n:
        return QR_ZERO
    return _haar_weight(n)


@cache
def haar_suq2_functional() -> Functional:
    return Functional(
        "haar_suq2",
        make_suq2(),
        lambda w: _gamma_balanced_value(w, ("a",)),
    )


@cache
def haar_u1_functional() -> Functional:
    return Functional(
        "haar_u1",
        make_u1(),
        lambda w: QR_ONE if not w else QR_ZERO,
    )


@cache
def haar_uq2_functional() -> Functional:
    return Functional(
        "haar_uq2",
        make_uq2(),
        lambda w: _gamma_balanced_value(w, ("a", "u")),
    )


def haar_suq2(p: NCPoly) -> QRat:
    """Haar state of quantum SU(2), evaluated exactly."""
    return haar_suq2_functional()(p)


def haar_u1(p: NCPoly) -> QRat:
    """Haar state of the circle: the constant coefficient."""
    return haar_u1_functional()(p)


def haar_uq2_direct(p: NCPoly) -> QRat:
    """Haar state of quantum U(2) by the closed basis formula."""
    return haar_uq2_functional()(p)


def haar_uq2_composite(p: NCPoly) -> QRat:
    """Haar state of quantum U(2) through its suq2-coaction.

    Applies (id (x) haar_suq2) to the coaction image, checks that the result
    lies in the u-subalgebra of coinvariants, then takes the circle Haar
    value (the constant coefficient).
    """
    mid = coact_rho_uq2(p).apply_right(haar_suq2_functional())
    return _circle_value(mid)


def _circle_value(mid: NCPoly) -> QRat:
    """Circle Haar value of an element that must be a Laurent series in u."""
    acc = QR_ZERO
    for w, c in mid.terms.items():
        if any(g.name != "u" for g in w):
            raise EngineError(
                "composite Haar: intermediate value leaves the u-subalgebra "
                f"at word {' '.join(g.label for g in w)}"
            )
        if not w:
            acc = acc + c
    return acc


# -- gauge average and flag generators ----------------------------------------

def gauge_average(p: NCPoly) -> NCPoly:
    """Torus average on mq3: keep exactly the terms of Z^2-degree (0,0).

    This is the polynomial form of integrating the gauge action over the
    torus; on monomials it returns the monomial or zero, it is idempotent,
    and its image is the flag-manifold coinvariant subalgebra.
    """
    pres = p.pres
    if pres.grading is None:
        raise UsageError(f"{pres.name} carries no grading")
    p = p.reduce()
    kept = {
        w: c for w, c in p.terms.items() if degree_of(w, pres) == (0, 0)
    }
    return NCPoly(pres, kept)


def flag_gen(i: int, j: int, k: int) -> NCPoly:
    """Flag-manifold generator w_ijk = u_i1 u_j2 u_k3, reduced."""
    pres = make_mq3()
    return pres.monomial((ugen(i, 1), ugen(j, 2), ugen(k, 3))).reduce()


@cache
def closed_form_expectation(i: int, j: int, k: int) -> NCPoly:
    """The displayed comparison target (w_ijk - w_ikj)/(1+q^2), reduced."""
    den = QR_ONE + QRat.q(2)
    return (flag_gen(i, j, k) - flag_gen(i, k, j)).scale(den.inverse()).reduce()


def cond_expectation(p: NCPoly, *, require_coinvariant: bool = True) -> NCPoly:
    """Conditional expectation onto the quantum projective plane.

    Computed from first principles as (id (x) haar_uq2) applied to the
    uq2-coaction image; the simple closed form is never consulted.  With
    require_coinvariant set, the input must be a gauge coinvariant (every
    term of degree (0,0)); a violating term is reported with its degree.
    """
    pres = p.pres
    if pres is not make_mq3():
        raise UsageError("conditional expectation is defined on mq3")
    p = p.reduce()
    if require_coinvariant:
        for w in p.terms:
            d = degree_of(w, pres)
            if d != (0, 0):
                raise CoinvarianceError(
                    f"term {' '.join(g.label for g in w) or '1'} has gauge "
                    f"degree {d}, not (0, 0)"
                )
    return coact_rho_su3(p).apply_right(haar_uq2_functional())


@dataclass(frozen=True)
class ExpectationRow:
    """One line of the 27-triple comparison report."""

    triple: tuple
    computed: NCPoly
    closed_form: NCPoly
    match: bool


def expectation_report():
    """Compare E(w_ijk) with the displayed closed form for all 27 triples.

    The computed value is authoritative; the match flag records whether the
    displayed formula reproduces it.  Mismatches are legitimate output.
    """
    rows = []
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                computed = cond_expectation(flag_gen(i, j, k))
                target = closed_form_expectation(i, j, k)
                rows.append(
                    ExpectationRow(
                        (i, j, k), computed, target, computed == target
                    )
                )
    return rows
