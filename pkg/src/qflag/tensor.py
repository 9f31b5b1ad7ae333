"""Two-leg tensor polynomials, quantum-group morphisms and coactions.

TensorPoly values live in (left presentation) x (right presentation); the
legs are reduced independently and tensor factors commute past each other by
definition, so there is no cross-leg rewriting.

Morphisms are determined by generator images and verified to be well defined
at construction: every source rule must map to zero in the target.  The same
check is applied to the comultiplications.  The shipped maps are

  pi0_hat : mq3 -> t2     diagonal torus quotient, u_ij -> delta_ij U_j
  pi_v    : mq3 -> uq2    u -> v (fundamental matrix of uq2)
  p_corner: uq2 -> suq2   v -> corner matrix with 1 in the (1,1) slot
  suq2_embed : suq2 -> uq2

and the coactions built from them by composing with a comultiplication.
"""

from __future__ import annotations

from functools import cache

from .algebras import (
    make_mq3,
    make_suq2,
    make_t2,
    make_uq2,
    mq3_matrix,
    ugen,
    uq2_v_matrix,
)
from .coeff import QRat, QR_ONE, as_qrat
from .errors import ConstructionError, UsageError
from .presentation import NCPoly, Presentation


class TensorPoly:
    """Finite sum of (left word (x) right word) terms with QRat coefficients."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: Presentation, right: Presentation, terms=None):
        table = {}
        for (lw, rw), c in (terms or {}).items():
            c = as_qrat(c)
            if not c.is_zero():
                table[(tuple(lw), tuple(rw))] = c
        self.left = left
        self.right = right
        self.terms = table

    @staticmethod
    def unit(left: Presentation, right: Presentation) -> "TensorPoly":
        return TensorPoly(left, right, {((), ()): QR_ONE})

    @staticmethod
    def of(lp: NCPoly, rp: NCPoly) -> "TensorPoly":
        """Elementary tensor of two polynomials."""
        terms = {}
        for lw, lc in lp.terms.items():
            for rw, rc in rp.terms.items():
                terms[(lw, rw)] = lc * rc
        return TensorPoly(lp.pres, rp.pres, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPoly)
            and self.left is other.left
            and self.right is other.right
            and self.terms == other.terms
        )

    def _check_same(self, other):
        if self.left is not other.left or self.right is not other.right:
            raise UsageError("mixing tensor polynomials over different legs")

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check_same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right, res.terms = self.left, self.right, out
        return res

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def __neg__(self) -> "TensorPoly":
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right = self.left, self.right
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        self._check_same(other)
        out = {}
        for (lw1, rw1), c1 in self.terms.items():
            for (lw2, rw2), c2 in other.terms.items():
                k = (lw1 + lw2, rw1 + rw2)
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right, res.terms = self.left, self.right, out
        return res

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff) -> "TensorPoly":
        coeff = as_qrat(coeff)
        return TensorPoly(
            self.left,
            self.right,
            {k: c * coeff for k, c in self.terms.items()},
        )

    def reduce(self) -> "TensorPoly":
        """Reduce both legs to normal form, re-accumulating coefficients."""
        out = {}
        for (lw, rw), c in self.terms.items():
            lred = self.left.reduce_word(lw)
            rred = self.right.reduce_word(rw)
            for w1, c1 in lred.terms.items():
                for w2, c2 in rred.terms.items():
                    k = (w1, w2)
                    add = c * c1 * c2
                    s = out.get(k)
                    s = add if s is None else s + add
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right, res.terms = self.left, self.right, out
        return res

    def map_right(self, morphism: "Morphism") -> "TensorPoly":
        """Apply a morphism to the right leg; both legs come back reduced."""
        if morphism.source is not self.right:
            raise UsageError("morphism source does not match the right leg")
        out = {}
        for (lw, rw), c in self.terms.items():
            image = morphism.on_word(rw)
            for w2, c2 in image.terms.items():
                k = (lw, w2)
                add = c * c2
                s = out.get(k)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right, res.terms = self.left, morphism.target, out
        return res.reduce()

    def apply_right(self, functional) -> NCPoly:
        """Contract the right leg with a linear functional; reduce the result."""
        out = {}
        for (lw, rw), c in self.terms.items():
            val = functional(self.right.monomial(rw))
            if val.is_zero():
                continue
            s = out.get(lw)
            add = c * val
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(lw, None)
            else:
                out[lw] = s
        return NCPoly(self.left, out).reduce()

    def left_degrees(self):
        """Set of Z^2-degrees of the left-leg words (left leg must be graded)."""
        from .presentation import degree_of

        return {degree_of(lw, self.left) for (lw, _) in self.terms}

    def sorted_terms(self):
        lkey = self.left.display_key
        rkey = self.right.display_key
        return sorted(
            self.terms.items(), key=lambda kv: (lkey(kv[0][0]), rkey(kv[0][1]))
        )

    def render(self) -> str:
        """Text form: graded-lex-sorted ``coeff * (left) (x) (right)`` terms."""
        if not self.terms:
            return "0"
        chunks = []
        for (lw, rw), coeff in self.sorted_terms():
            neg, body = coeff.render_signed()
            ltext = " ".join(g.label for g in lw) or "1"
            rtext = " ".join(g.label for g in rw) or "1"
            pair = f"({ltext}) (x) ({rtext})"
            if body == "1":
                text = pair
            else:
                if coeff.needs_parens_in_product():
                    body = f"({body})"
                text = f"{body} * {pair}"
            chunks.append((neg, text))
        neg, text = chunks[0]
        outs = [("-" if neg else "") + text]
        for neg, text in chunks[1:]:
            outs.append(" - " if neg else " + ")
            outs.append(text)
        return "".join(outs)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TensorPoly[{self.left.name}(x){self.right.name}]({self.render()})"


class Morphism:
    """Unital algebra homomorphism fixed by generator images.

    Construction verifies well-definedness: for every rewrite rule of the
    source, the image of the lhs minus the image of the rhs must reduce to
    zero in the target.
    """

    def __init__(self, name, source, target, images, *, check=True):
        self.name = name
        self.source = source
        self.target = target
        self.images = dict(images)
        self._word_cache = {}
        missing = [g for g in source.generators if g not in self.images]
        if missing:
            raise ConstructionError(f"{name}: images missing for {missing}")
        if check:
            for rule in source.rules:
                lhs = self.on_word(rule.lhs)
                rhs = self(rule.rhs)
                if not (lhs - rhs).reduce().is_zero():
                    raise ConstructionError(
                        f"{name} is not well defined: rule {rule.label} "
                        f"does not map to zero"
                    )

    def on_word(self, word) -> NCPoly:
        word = tuple(word)
        cached = self._word_cache.get(word)
        if cached is None:
            # peel one letter so prefixes share cache entries
            if not word:
                cached = self.target.one()
            else:
                cached = (
                    self.on_word(word[:-1]) * self.images[word[-1]]
                ).reduce()
            self._word_cache[word] = cached
        return cached

    def __call__(self, p: NCPoly) -> NCPoly:
        if p.pres is not self.source:
            raise UsageError(f"{self.name}: element not in {self.source.name}")
        out = {}
        for w, c in p.terms.items():
            for w2, c2 in self.on_word(w).terms.items():
                add = c * c2
                s = out.get(w2)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(w2, None)
                else:
                    out[w2] = s
        return NCPoly(self.target, out)

    def __repr__(self) -> str:
        return f"Morphism({self.name}: {self.source.name} -> {self.target.name})"


class Comultiplication:
    """Algebra map into the two-leg tensor square, fixed by generator images."""

    def __init__(self, name, source, images, *, check=True):
        self.name = name
        self.source = source
        self.images = dict(images)
        self._word_cache = {}
        missing = [g for g in source.generators if g not in self.images]
        if missing:
            raise ConstructionError(f"{name}: images missing for {missing}")
        if check:
            for rule in source.rules:
                lhs = self.on_word(rule.lhs)
                rhs = self(rule.rhs)
                if not (lhs - rhs).reduce().is_zero():
                    raise ConstructionError(
                        f"{name} is not well defined: rule {rule.label} "
                        f"does not map to zero"
                    )

    def on_word(self, word) -> TensorPoly:
        word = tuple(word)
        cached = self._word_cache.get(word)
        if cached is None:
            if not word:
                cached = TensorPoly.unit(self.source, self.source)
            else:
                cached = (
                    self.on_word(word[:-1]) * self.images[word[-1]]
                ).reduce()
            self._word_cache[word] = cached
        return cached

    def __call__(self, p: NCPoly) -> TensorPoly:
        if p.pres is not self.source:
            raise UsageError(f"{self.name}: element not in {self.source.name}")
        out = {}
        for w, c in p.terms.items():
            for k, c2 in self.on_word(w).terms.items():
                add = c * c2
                s = out.get(k)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        res = TensorPoly.__new__(TensorPoly)
        res.left, res.right, res.terms = self.source, self.source, out
        return res


def _star_legs(tp: TensorPoly) -> TensorPoly:
    """Legwise involution (no reduction); used to derive starred images."""
    out = {}
    for (lw, rw), c in tp.terms.items():
        slw = tuple(tp.left.star_of(g) for g in reversed(lw))
        srw = tuple(tp.right.star_of(g) for g in reversed(rw))
        out[(slw, srw)] = out.get((slw, srw), QRat.const(0)) + c
    return TensorPoly(tp.left, tp.right, out)


def _matrix_comult_images(pres, matrix, labels):
    """Images Delta(v_ij) = sum_k v_ik (x) v_kj for the named matrix entries.

    labels maps a generator label to its (i, j) slot in the matrix; starred
    generators get the legwise involution of the unstarred image.
    """
    n = len(matrix)
    images = {}
    for label, (i, j) in labels.items():
        acc = TensorPoly(pres, pres, {})
        for k in range(n):
            acc = acc + TensorPoly.of(matrix[i][k], matrix[k][j])
        images[pres.gen(label)] = acc.reduce()
    for label in list(labels):
        g = pres.gen(label)
        sg = pres.star_of(g) if pres.has_star else None
        if sg is not None and sg not in images:
            images[sg] = _star_legs(images[g]).reduce()
    return images


@cache
def delta_su3_comult() -> Comultiplication:
    """Matrix comultiplication of mq3: u_ij -> sum_k u_ik (x) u_kj."""
    pres = make_mq3()
    m = mq3_matrix()
    images = {}
    for i in range(3):
        for j in range(3):
            acc = TensorPoly(pres, pres, {})
            for k in range(3):
                acc = acc + TensorPoly.of(m[i][k], m[k][j])
            images[ugen(i + 1, j + 1)] = acc.reduce()
    return Comultiplication("delta_su3", pres, images)


@cache
def delta_uq2_comult() -> Comultiplication:
    """Comultiplication of uq2 from its fundamental matrix v."""
    pres = make_uq2()
    return Comultiplication(
        "delta_uq2",
        pres,
        _matrix_comult_images(
            pres, uq2_v_matrix(), {"u": (0, 0), "a": (1, 1), "g": (2, 1)}
        ),
    )


@cache
def delta_suq2_comult() -> Comultiplication:
    """Comultiplication of suq2 from its fundamental 2x2 matrix."""
    pres = make_suq2()
    a = pres.gen_poly("a")
    as_ = pres.gen_poly("a'")
    g = pres.gen_poly("g")
    gs = pres.gen_poly("g'")
    matrix = ((a, gs.scale(-QRat.q())), (g, as_))
    return Comultiplication(
        "delta_suq2",
        pres,
        _matrix_comult_images(pres, matrix, {"a": (0, 0), "g": (1, 0)}),
    )


def delta_su3(p: NCPoly) -> TensorPoly:
    return delta_su3_comult()(p)


def delta_uq2(p: NCPoly) -> TensorPoly:
    return delta_uq2_comult()(p)


def delta_suq2(p: NCPoly) -> TensorPoly:
    return delta_suq2_comult()(p)


@cache
def pi0_hat() -> Morphism:
    """Torus quotient mq3 -> t2: diagonal entries to U1, U2, (U1 U2)^*."""
    mq3 = make_mq3()
    t2 = make_t2()
    z = t2.zero()
    images = {ugen(i, j): z for i in (1, 2, 3) for j in (1, 2, 3)}
    images[ugen(1, 1)] = t2.gen_poly("U1")
    images[ugen(2, 2)] = t2.gen_poly("U2")
    images[ugen(3, 3)] = t2.monomial((t2.gen("U1'"), t2.gen("U2'")))
    return Morphism("pi0_hat", mq3, t2, images)


@cache
def pi_v() -> Morphism:
    """Quantum-group quotient mq3 -> uq2 sending u to the matrix v."""
    mq3 = make_mq3()
    uq2 = make_uq2()
    v = uq2_v_matrix()
    images = {
        ugen(i + 1, j + 1): v[i][j] for i in range(3) for j in range(3)
    }
    return Morphism("pi_v", mq3, uq2, images)


@cache
def p_corner() -> Morphism:
    """Corner projection uq2 -> suq2: u -> 1, SU_q(2) block fixed."""
    uq2 = make_uq2()
    suq2 = make_suq2()
    one = suq2.one()
    images = {
        uq2.gen("u"): one,
        uq2.gen("u'"): one,
        uq2.gen("a"): suq2.gen_poly("a"),
        uq2.gen("a'"): suq2.gen_poly("a'"),
        uq2.gen("g"): suq2.gen_poly("g"),
        uq2.gen("g'"): suq2.gen_poly("g'"),
    }
    return Morphism("p_corner", uq2, suq2, images)


@cache
def suq2_embed() -> Morphism:
    """Inclusion suq2 -> uq2 on same-named generators."""
    suq2 = make_suq2()
    uq2 = make_uq2()
    images = {g: uq2.gen_poly(g.label) for g in suq2.generators}
    return Morphism("suq2_embed", suq2, uq2, images)


MORPHISMS = {"pi0": pi0_hat, "pi": pi_v, "p": p_corner}


def apply_morphism(m: Morphism, p: NCPoly) -> NCPoly:
    return m(p)


def coact_mu_hat(p: NCPoly) -> TensorPoly:
    """Gauge coaction mq3 -> mq3 (x) t2: (id (x) pi0_hat) after Delta."""
    return delta_su3(p).map_right(pi0_hat())


def coact_rho_su3(p: NCPoly) -> TensorPoly:
    """Right uq2-coaction on mq3: (id (x) pi_v) after Delta."""
    return delta_su3(p).map_right(pi_v())


def coact_rho_uq2(p: NCPoly) -> TensorPoly:
    """Right suq2-coaction on uq2: (id (x) p_corner) after Delta."""
    return delta_uq2(p).map_right(p_corner())
