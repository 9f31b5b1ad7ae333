"""Concrete presentations: rule sets, involution, E-tensor, determinant."""

import random
from itertools import product

import pytest

from qflag.algebras import (
    cramer_identity,
    e_tensor,
    involution,
    inversions,
    make_mq3,
    make_suq2,
    make_t2,
    make_u1,
    make_uq2,
    quantum_det,
    ugen,
)
from qflag.coeff import QRat
from qflag.errors import UsageError
from qflag.presentation import critical_pairs, degree_of


def test_mq3_rule_count_and_grading():
    mq3 = make_mq3()
    assert len(mq3.rules) == 36
    assert degree_of((ugen(2, 2),), mq3) == (0, 1)
    for rule in mq3.rules:
        d = degree_of(rule.lhs, mq3)
        for w in rule.rhs.terms:
            assert degree_of(w, mq3) == d


def test_mq3_commuting_case():
    mq3 = make_mq3()
    prod = mq3.gen_poly(ugen(2, 1)) * mq3.gen_poly(ugen(1, 3))
    assert prod.reduce() == mq3.monomial((ugen(1, 3), ugen(2, 1)))


@pytest.mark.parametrize(
    "maker", [make_mq3, make_suq2, make_uq2, make_t2, make_u1]
)
def test_shipped_presentations_confluent(maker):
    assert critical_pairs(maker()) == []


def test_uq2_relation_examples():
    uq2 = make_uq2()
    a, as_, u, g, gs = (uq2.gen_poly(x) for x in ("a", "a'", "u", "g", "g'"))
    assert (as_ * a).reduce() == (
        uq2.one() - uq2.monomial((uq2.gen("g"), uq2.gen("g'")))
    )
    assert (u * a).reduce() == (a * u)
    assert (gs * (as_)).reduce() == uq2.monomial(
        (uq2.gen("a'"), uq2.gen("g'")), QRat.q(1)
    )


def test_t2_examples():
    t2 = make_t2()
    assert (t2.gen_poly("U2") * t2.gen_poly("U1")).reduce() == t2.monomial(
        (t2.gen("U1"), t2.gen("U2"))
    )
    assert (t2.gen_poly("U1") * t2.gen_poly("U1'")).reduce() == t2.one()


def test_star_closure_of_rules():
    # every rule's involuted relation must already hold in the system
    for pres in (make_suq2(), make_uq2(), make_t2(), make_u1()):
        for rule in pres.rules:
            lhs = pres.monomial(rule.lhs).star()
            rhs = rule.rhs.star()
            assert lhs == rhs, f"{pres.name}: {rule.label}"


def test_involution_examples():
    uq2 = make_uq2()
    ag = uq2.gen_poly("a") * uq2.gen_poly("g")
    assert involution(ag) == uq2.monomial(
        (uq2.gen("a'"), uq2.gen("g'")), QRat.q(1)
    )
    assert involution(uq2.one()) == uq2.one()


def test_involution_is_antimultiplicative_involution():
    uq2 = make_uq2()
    rng = random.Random(7)
    gens = list(uq2.generators)
    for _ in range(30):
        w1 = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
        w2 = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
        p = uq2.monomial(w1, QRat.q(rng.randint(-2, 2)))
        r = uq2.monomial(w2)
        assert involution(involution(p)) == p.reduce()
        assert involution(p * r) == (involution(r) * involution(p)).reduce()


def test_involution_rejected_on_mq3():
    with pytest.raises(UsageError):
        involution(make_mq3().gen_poly(ugen(1, 1)))


def test_e_tensor():
    ee = e_tensor()
    assert len(ee.nonzero()) == 6
    assert ee[(1, 2, 3)] == QRat.const(1)
    assert ee[(3, 2, 1)] == (-QRat.q(1)) ** 3
    assert ee[(1, 1, 2)].is_zero()
    assert inversions((3, 2, 1)) == 3


def test_quantum_det():
    det = quantum_det()
    assert len(det.terms) == 6
    assert det.terms[(ugen(1, 1), ugen(2, 2), ugen(3, 3))] == QRat.const(1)
    assert det.terms[(ugen(1, 3), ugen(2, 2), ugen(3, 1))] == (-QRat.q(1)) ** 3


def test_cramer_examples():
    assert cramer_identity((1, 2, 3)).is_zero()
    assert cramer_identity((2, 1, 3)).is_zero()
    assert cramer_identity((1, 1, 2)).is_zero()


def test_det_is_central():
    mq3 = make_mq3()
    det = quantum_det()
    for i, j in product((1, 2, 3), repeat=2):
        g = mq3.gen_poly(ugen(i, j))
        assert (det * g - g * det).reduce().is_zero()
