"""Concrete presentations and their distinguished elements.

mq3   -- star-free quantized 3x3 matrix algebra on u11..u33 with the four
         families of q-commutation rules, Z^2-graded by column.  The normal
         form is the PBW basis of row-major-sorted words; the determinant
         relation det_q = 1 is deliberately not imposed, so equality here is
         a sufficient (one-sided) test for equality in the quotient.
suq2  -- quantum SU(2) on a, g and their adjoints; basis a^k g^m g'^n with
         negative a-powers carried by a'.
uq2   -- quantum U(2): suq2 plus a central unitary u.
t2    -- Laurent polynomials on the 2-torus (commuting unitaries U1, U2).
u1    -- Laurent polynomials on the circle (one unitary u).

Starred companions of the declared uq2/suq2/t2/u1 relations are generated
mechanically by applying the involution and re-orienting, which keeps the
rule sets closed under the adjoint without hand transcription.

All builders are cached: each presentation is constructed once and shared.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations, product

from .coeff import QRat, QR_ONE
from .errors import UsageError
from .presentation import Gen, NCPoly, Presentation, RewriteRule


def _q(k=1):
    return QRat.q(k)


# -- mq3 ---------------------------------------------------------------------

_COLUMN_DEGREE = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}


def ugen(i: int, j: int) -> Gen:
    """Matrix-entry generator u_ij of mq3."""
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise UsageError(f"matrix indices ({i},{j}) out of range")
    return Gen("mq3", f"u{i}{j}")


@cache
def make_mq3() -> Presentation:
    """Quantized 3x3 matrix algebra, graded, with 36 oriented rules."""
    gens = [ugen(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    grading = {ugen(i, j): _COLUMN_DEGREE[j] for i in (1, 2, 3) for j in (1, 2, 3)}
    pres = Presentation("mq3", gens, grading=grading)
    qi = _q(-1)
    lam = _q(1) - _q(-1)  # q - q^-1
    rules = []
    coords = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    for (i, j) in coords:
        for (k, m) in coords:
            if (i, j) <= (k, m):
                continue  # lhs is the row-major-larger letter first
            lhs = (ugen(i, j), ugen(k, m))
            sorted_word = (ugen(k, m), ugen(i, j))
            if i == k or j == m:
                # same row or same column: swap costs q^-1
                rhs = pres.monomial(sorted_word, qi)
            elif j < m:
                # i > k with columns increasing: plain commutation
                rhs = pres.monomial(sorted_word)
            else:
                # i > k, j > m: swap plus the (q - q^-1) correction term
                rhs = pres.monomial(sorted_word) - pres.monomial(
                    (ugen(k, j), ugen(i, m)), lam
                )
            rules.append(RewriteRule(lhs, rhs))
    pres.install_rules(rules)
    return pres


# -- starred presentations ---------------------------------------------------

def _star_word(pres, word):
    return tuple(pres.star_of(g) for g in reversed(word))


def _orient(pres, lhs, rhs):
    """Point the rule at the order-larger side.

    lhs is a two-letter word, rhs an NCPoly with the same value.  If rhs is a
    single two-letter monomial that is larger in the termination order, the
    rule is flipped (and the coefficient inverted) so that it descends.
    """
    if len(rhs.terms) == 1:
        ((w2, c2),) = rhs.terms.items()
        if len(w2) == 2 and pres.order_key(w2) > pres.order_key(lhs):
            return w2, pres.monomial(lhs, c2.inverse())
    return lhs, rhs


def _close_under_star(pres, seeds):
    """Add the involuted companion of every seed rule that is missing."""
    rules = list(seeds)
    seen = {tuple(lhs) for lhs, _ in seeds}
    for lhs, rhs in seeds:
        slhs = _star_word(pres, lhs)
        srhs = NCPoly(
            pres, {_star_word(pres, w): c for w, c in rhs.terms.items()}
        )
        slhs, srhs = _orient(pres, slhs, srhs)
        if slhs not in seen:
            seen.add(slhs)
            rules.append((slhs, srhs))
    return [RewriteRule(lhs, rhs) for lhs, rhs in rules]


def _install_starred(pres, seeds):
    pres.install_rules(_close_under_star(pres, seeds))
    return pres


@cache
def make_suq2() -> Presentation:
    """Quantum SU(2): a g = q g a and its adjoint family, sphere relations."""
    a = Gen("suq2", "a")
    as_ = Gen("suq2", "a", True)
    g = Gen("suq2", "g")
    gs = Gen("suq2", "g", True)
    pres = Presentation(
        "suq2", [a, as_, g, gs], weights={a: 2, as_: 2, g: 1, gs: 1}
    )
    one = pres.one()
    gg = pres.monomial((g, gs))
    seeds = [
        ((g, a), pres.monomial((a, g), _q(-1))),
        ((gs, a), pres.monomial((a, gs), _q(-1))),
        ((gs, g), pres.monomial((g, gs))),
        ((as_, a), one - gg),
        ((a, as_), one - gg.scale(_q(2))),
    ]
    return _install_starred(pres, seeds)


@cache
def make_uq2() -> Presentation:
    """Quantum U(2): the SU_q(2) pair plus a central unitary u."""
    a = Gen("uq2", "a")
    as_ = Gen("uq2", "a", True)
    u = Gen("uq2", "u")
    us = Gen("uq2", "u", True)
    g = Gen("uq2", "g")
    gs = Gen("uq2", "g", True)
    pres = Presentation(
        "uq2",
        [a, as_, u, us, g, gs],
        weights={a: 2, as_: 2, u: 2, us: 2, g: 1, gs: 1},
    )
    one = pres.one()
    gg = pres.monomial((g, gs))
    seeds = [
        ((g, a), pres.monomial((a, g), _q(-1))),
        ((gs, a), pres.monomial((a, gs), _q(-1))),
        ((gs, g), pres.monomial((g, gs))),
        ((as_, a), one - gg),
        ((a, as_), one - gg.scale(_q(2))),
        ((u, a), pres.monomial((a, u))),
        ((u, as_), pres.monomial((as_, u))),
        ((g, u), pres.monomial((u, g))),
        ((gs, u), pres.monomial((u, gs))),
        ((u, us), one),
        ((us, u), one),
    ]
    return _install_starred(pres, seeds)


@cache
def make_t2() -> Presentation:
    """Polynomials on the 2-torus: two commuting unitary generators."""
    u1 = Gen("t2", "U1")
    u1s = Gen("t2", "U1", True)
    u2 = Gen("t2", "U2")
    u2s = Gen("t2", "U2", True)
    pres = Presentation("t2", [u1, u1s, u2, u2s])
    one = pres.one()
    seeds = [
        ((u1, u1s), one),
        ((u1s, u1), one),
        ((u2, u2s), one),
        ((u2s, u2), one),
        ((u2, u1), pres.monomial((u1, u2))),
        ((u2, u1s), pres.monomial((u1s, u2))),
    ]
    return _install_starred(pres, seeds)


@cache
def make_u1() -> Presentation:
    """Polynomials on the circle: one unitary generator."""
    u = Gen("u1", "u")
    us = Gen("u1", "u", True)
    pres = Presentation("u1", [u, us])
    one = pres.one()
    seeds = [((u, us), one), ((us, u), one)]
    return _install_starred(pres, seeds)


PRESENTATIONS = {
    "mq3": make_mq3,
    "suq2": make_suq2,
    "uq2": make_uq2,
    "t2": make_t2,
    "u1": make_u1,
}


def presentation(name: str) -> Presentation:
    """Look up a registered presentation by CLI name."""
    try:
        builder = PRESENTATIONS[name]
    except KeyError:
        raise UsageError(
            f"unknown algebra {name!r}; choose from {sorted(PRESENTATIONS)}"
        ) from None
    return builder()


def involution(p: NCPoly) -> NCPoly:
    """Antilinear antihomomorphism *: words reversed, stars toggled, reduced.

    Not available on mq3: that presentation is deliberately star-free, since
    adjoints of matrix entries would need quantum-minor expressions that are
    outside this package's scope.
    """
    if not p.pres.has_star:
        raise UsageError(
            f"involution is not defined on {p.pres.name} (star-free presentation)"
        )
    return p.star()


# -- E-tensor, quantum determinant, Cramer identity --------------------------

def inversions(tup) -> int:
    """Number of inverted pairs in a sequence."""
    n = len(tup)
    return sum(
        1 for r in range(n) for s in range(r + 1, n) if tup[r] > tup[s]
    )


class ETensor:
    """The alternating tensor: (-q)^(inversions) on distinct triples, else 0.

    Exactly six of the 27 entries are nonzero.
    """

    def __init__(self):
        self._table = {}
        for triple in product((1, 2, 3), repeat=3):
            if len(set(triple)) == 3:
                self._table[triple] = (-_q(1)) ** inversions(triple)
            else:
                self._table[triple] = QRat.const(0)

    def __getitem__(self, triple) -> QRat:
        return self._table[tuple(triple)]

    def nonzero(self):
        return {t: c for t, c in self._table.items() if not c.is_zero()}


@cache
def e_tensor() -> ETensor:
    return ETensor()


@cache
def quantum_det() -> NCPoly:
    """det_q = sum over permutations of (-q)^inv(s) u_{1 s(1)} u_{2 s(2)} u_{3 s(3)}."""
    pres = make_mq3()
    out = pres.zero()
    for sigma in permutations((1, 2, 3)):
        word = tuple(ugen(row, col) for row, col in zip((1, 2, 3), sigma))
        out = out + pres.monomial(word, (-_q(1)) ** inversions(sigma))
    return out.reduce()


def cramer_identity(j) -> NCPoly:
    """Residual of the Cramer-type defining identity at row triple j.

    Returns reduce( sum_i E_i u_{j1 i1} u_{j2 i2} u_{j3 i3} - E_j det_q ),
    which must be exactly zero in mq3 for every j; substituting det_q = 1
    recovers the defining relation of the quantized SU(3) coordinate ring.
    """
    j = tuple(j)
    pres = make_mq3()
    ee = e_tensor()
    acc = pres.zero()
    for i in product((1, 2, 3), repeat=3):
        c = ee[i]
        if c.is_zero():
            continue
        word = (ugen(j[0], i[0]), ugen(j[1], i[1]), ugen(j[2], i[2]))
        acc = acc + pres.monomial(word, c)
    acc = acc - quantum_det().scale(ee[j])
    return acc.reduce()


# -- fundamental matrices ----------------------------------------------------

@cache
def mq3_matrix():
    """The 3x3 matrix of mq3 generators as NCPoly entries."""
    pres = make_mq3()
    return tuple(
        tuple(pres.gen_poly(ugen(i, j)) for j in (1, 2, 3)) for i in (1, 2, 3)
    )


@cache
def uq2_v_matrix():
    """The fundamental 3x3 matrix v of uq2.

    Row/column layout: diag(u, .) with the SU_q(2)-type block
    [[a, -q g'u'], [g, a'u']] in the lower corner.
    """
    pres = make_uq2()
    z = pres.zero()
    a = pres.gen_poly("a")
    as_ = pres.gen_poly("a'")
    u = pres.gen_poly("u")
    us = pres.gen_poly("u'")
    g = pres.gen_poly("g")
    gs = pres.gen_poly("g'")
    return (
        (u, z, z),
        (z, a, (gs * us).scale(-_q(1)).reduce()),
        (z, g, (as_ * us).reduce()),
    )


@cache
def suq2_p_matrix():
    """Image of v under the corner-collapsing projection onto suq2."""
    pres = make_suq2()
    z = pres.zero()
    return (
        (pres.one(), z, z),
        (z, pres.gen_poly("a"), pres.gen_poly("g'").scale(-_q(1))),
        (z, pres.gen_poly("g"), pres.gen_poly("a'")),
    )
