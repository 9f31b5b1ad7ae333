"""Generic normal-form engine for finitely presented algebras.

A Presentation fixes a generator alphabet, a termination order and a set of
oriented rewrite rules on two-letter subwords.  NCPoly values are finite
linear combinations of generator words with QRat coefficients; reduce()
rewrites every word to the presentation's normal form.

The termination order is weighted graded lex: words are compared first by
total letter weight, then lexicographically by generator position.  With all
weights equal to 1 this is ordinary graded lex; the U_q(2)-type presentations
give the gamma generators weight 1 and the alpha/u generators weight 2, which
is what lets the inhomogeneous rule  alpha alpha* -> 1 - q^2 gamma gamma*
descend.  Every rule is checked at installation time to be strictly
descending in this order, which guarantees that reduction terminates; local
confluence is certified separately by critical_pairs, and together these make
normal forms canonical, so element equality is normal-form equality.

Presentations are immutable once their rules are installed; reduction is a
pure function, so independent reductions may run concurrently.  (The only
internal mutation afterwards is an idempotent normal-form memo table, which
is safe to share: concurrent writers can only store the same value.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import QRat, QR_ONE, QR_ZERO, as_qrat
from .errors import ConstructionError, EngineError, UsageError


@dataclass(frozen=True)
class Gen:
    """One generator: owning algebra id, symbol name, star flag."""

    algebra: str
    name: str
    star: bool = False

    @property
    def label(self) -> str:
        return self.name + ("'" if self.star else "")

    def __repr__(self) -> str:
        return f"<{self.label}@{self.algebra}>"


Word = tuple  # tuple of Gen; the empty tuple is the multiplicative identity


@dataclass(frozen=True)
class RewriteRule:
    """Oriented rule: the two-letter lhs rewrites to the polynomial rhs."""

    lhs: Word
    rhs: "NCPoly"

    @property
    def label(self) -> str:
        return " ".join(g.label for g in self.lhs)


class Presentation:
    """Generator alphabet, termination order, rewrite rules, optional grading."""

    def __init__(self, name, generators, *, grading=None, weights=None):
        self.name = name
        self.generators = tuple(generators)
        self._index = {g: i for i, g in enumerate(self.generators)}
        if len(self._index) != len(self.generators):
            raise ConstructionError(f"duplicate generators in {name}")
        self._by_label = {g.label: g for g in self.generators}
        self._weights = {g: (weights or {}).get(g, 1) for g in self.generators}
        if any(w <= 0 for w in self._weights.values()):
            raise ConstructionError("termination weights must be positive")
        self.grading = dict(grading) if grading else None
        if self.grading is not None:
            missing = [g for g in self.generators if g not in self.grading]
            if missing:
                raise ConstructionError(f"grading misses generators {missing}")
        self.rules = ()
        self._rulemap = {}
        self._rule_label = {}
        self._nf_cache = {}
        self.checked = False

    # -- construction ------------------------------------------------------

    def install_rules(self, rules, *, check=True):
        """Attach the rewrite rules; a presentation is immutable afterwards.

        With check=True (the default) every rule is verified to descend
        strictly in the termination order and, on graded presentations, to be
        degree-homogeneous.
        """
        if self.rules:
            raise ConstructionError(f"rules of {self.name} already installed")
        rulemap = {}
        for rule in rules:
            if len(rule.lhs) != 2:
                raise ConstructionError(f"rule lhs {rule.label} is not two letters")
            for g in rule.lhs:
                if g not in self._index:
                    raise ConstructionError(f"unknown generator {g} in rule lhs")
            if rule.rhs.pres is not self:
                raise ConstructionError("rule rhs belongs to another presentation")
            key = (rule.lhs[0], rule.lhs[1])
            if key in rulemap:
                raise ConstructionError(f"duplicate rule lhs {rule.label}")
            rulemap[key] = rule
            if check:
                lk = self.order_key(rule.lhs)
                for w in rule.rhs.terms:
                    if self.order_key(w) >= lk:
                        raise ConstructionError(
                            f"rule {rule.label} does not descend: rhs word "
                            f"{' '.join(g.label for g in w)} is not smaller"
                        )
                if self.grading is not None:
                    dl = degree_of(rule.lhs, self)
                    for w in rule.rhs.terms:
                        if degree_of(w, self) != dl:
                            raise ConstructionError(
                                f"rule {rule.label} is not degree-homogeneous"
                            )
        self.rules = tuple(rules)
        self._rulemap = {k: r.rhs for k, r in rulemap.items()}
        self._rule_label = {k: r.label for k, r in rulemap.items()}
        self.checked = check

    # -- alphabet ----------------------------------------------------------

    def gen(self, label: str) -> Gen:
        g = self._by_label.get(label)
        if g is None:
            raise UsageError(f"no generator {label!r} in {self.name}")
        return g

    def find_gen(self, label: str):
        return self._by_label.get(label)

    def star_of(self, g: Gen) -> Gen:
        s = Gen(g.algebra, g.name, not g.star)
        if s not in self._index:
            raise UsageError(f"{self.name} has no adjoint for {g.label}")
        return s

    @property
    def has_star(self) -> bool:
        return all(
            Gen(g.algebra, g.name, not g.star) in self._index
            for g in self.generators
        )

    # -- orders ------------------------------------------------------------

    def order_key(self, word: Word):
        """Termination order key: (total weight, generator positions)."""
        idx = self._index
        w = self._weights
        return (sum(w[g] for g in word), tuple(idx[g] for g in word))

    def display_key(self, word: Word):
        """Graded-lex key used for rendering and golden files."""
        idx = self._index
        return (len(word), tuple(idx[g] for g in word))

    # -- value constructors --------------------------------------------------

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): QR_ONE})

    def monomial(self, word, coeff=1) -> "NCPoly":
        return NCPoly(self, {tuple(word): as_qrat(coeff)})

    def gen_poly(self, g) -> "NCPoly":
        if isinstance(g, str):
            g = self.gen(g)
        return self.monomial((g,))

    def scalar(self, coeff) -> "NCPoly":
        return NCPoly(self, {(): as_qrat(coeff)})

    def reduce_word(self, word) -> "NCPoly":
        """Normal form of a single word; results are memoized per word."""
        word = tuple(word)
        cached = self._nf_cache.get(word)
        if cached is None:
            cached = _reduce_terms(self, {word: QR_ONE})
            self._nf_cache[word] = cached
        return cached

    def __repr__(self) -> str:
        return f"Presentation({self.name}, {len(self.generators)} gens, {len(self.rules)} rules)"


class NCPoly:
    """Finite QRat-linear combination of generator words of one presentation.

    Values are immutable; arithmetic is lazy (no reduction) and reduce() is
    explicit.  Structural equality compares stored terms; equality as algebra
    elements is reduce-and-compare (see equiv).
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms=None):
        table = {}
        for w, c in (terms or {}).items():
            c = as_qrat(c)
            if not c.is_zero():
                table[tuple(w)] = c
        self.pres = pres
        self.terms = table

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def scalar_coeff(self) -> QRat:
        return self.terms.get((), QR_ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and self.pres is other.pres
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.pres), frozenset(self.terms.items())))

    def equiv(self, other: "NCPoly") -> bool:
        """Equality as algebra elements: reduce the difference to zero."""
        return (self - other).reduce().is_zero()

    # -- arithmetic ----------------------------------------------------------

    def _check_same(self, other):
        if self.pres is not other.pres:
            raise UsageError(
                f"mixing elements of {self.pres.name} and {other.pres.name}"
            )

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check_same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = NCPoly.__new__(NCPoly)
        res.pres, res.terms = self.pres, out
        return res

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        res = NCPoly.__new__(NCPoly)
        res.pres = self.pres
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        self._check_same(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        res = NCPoly.__new__(NCPoly)
        res.pres, res.terms = self.pres, out
        return res

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff) -> "NCPoly":
        coeff = as_qrat(coeff)
        if coeff.is_zero():
            return NCPoly(self.pres, {})
        res = NCPoly.__new__(NCPoly)
        res.pres = self.pres
        res.terms = {w: c * coeff for w, c in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "NCPoly":
        if n < 0:
            raise UsageError("negative power of a noncommutative element")
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    # -- rewriting -----------------------------------------------------------

    def reduce(self) -> "NCPoly":
        """Rewrite every word to normal form (memoized per word)."""
        pres = self.pres
        out = {}
        for word, coeff in self.terms.items():
            for w, c in pres.reduce_word(word).terms.items():
                s = out.get(w)
                s = coeff * c if s is None else s + coeff * c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        res = NCPoly.__new__(NCPoly)
        res.pres, res.terms = pres, out
        return res

    def star(self) -> "NCPoly":
        """Involution: reverse words, toggle stars, reduce.

        Coefficients are unchanged (rational functions of the real parameter
        q are self-conjugate).  Raises UsageError on star-free presentations.
        """
        pres = self.pres
        if not pres.has_star:
            raise UsageError(f"{pres.name} does not carry an involution")
        out = {}
        for w, c in self.terms.items():
            sw = tuple(pres.star_of(g) for g in reversed(w))
            out[sw] = out.get(sw, QRat.const(0)) + c
        return NCPoly(pres, out).reduce()

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self):
        key = self.pres.display_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]))

    def render(self) -> str:
        """Canonical text form: graded-lex-sorted ``coeff * g1 g2`` terms."""
        if not self.terms:
            return "0"
        chunks = []
        for word, coeff in self.sorted_terms():
            neg, body = coeff.render_signed()
            if word:
                wtext = " ".join(g.label for g in word)
                if body == "1":
                    text = wtext
                else:
                    if coeff.needs_parens_in_product():
                        body = f"({body})"
                    text = f"{body} * {wtext}"
            else:
                text = body
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
        return f"NCPoly[{self.pres.name}]({self.render()})"


def _reduce_terms(pres: Presentation, terms: dict) -> "NCPoly":
    """Worklist normalization: leftmost single-step rewriting with
    re-accumulation of identical words after each step.

    Rules descend strictly in the termination order (enforced at
    installation), so this always halts; for presentations installed with
    check=False the descent is re-checked per application and a violation
    raises EngineError naming the rule.  Normal forms of words met along the
    way are taken from the per-presentation cache when available.
    """
    rulemap = pres._rulemap
    cache = pres._nf_cache
    checked = pres.checked
    out = {}
    work = dict(terms)
    while work:
        word, coeff = work.popitem()
        known = cache.get(word)
        if known is not None:
            for w, c in known.terms.items():
                s = out.get(w)
                s = coeff * c if s is None else s + coeff * c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
            continue
        pos = -1
        rhs = None
        for j in range(len(word) - 1):
            rhs = rulemap.get((word[j], word[j + 1]))
            if rhs is not None:
                pos = j
                break
        if rhs is None:
            s = out.get(word)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(word, None)
            else:
                out[word] = s
            continue
        if not checked:
            lhs = word[pos:pos + 2]
            lk = pres.order_key(lhs)
            for rw in rhs.terms:
                if pres.order_key(rw) >= lk:
                    raise EngineError(
                        f"non-terminating rewrite in {pres.name}: rule "
                        f"{pres._rule_label[(lhs[0], lhs[1])]} ascends to "
                        f"{' '.join(g.label for g in rw) or '1'} "
                        f"while reducing {' '.join(g.label for g in word)}"
                    )
        head, tail = word[:pos], word[pos + 2:]
        for rw, rc in rhs.terms.items():
            nw = head + rw + tail
            c = coeff * rc
            s = work.get(nw)
            s = c if s is None else s + c
            if s.is_zero():
                work.pop(nw, None)
            else:
                work[nw] = s
    res = NCPoly.__new__(NCPoly)
    res.pres, res.terms = pres, out
    return res


def degree_of(word: Word, pres: Presentation):
    """Sum of letter degrees under the presentation's grading."""
    if pres.grading is None:
        raise UsageError(f"{pres.name} carries no grading")
    d1 = d2 = 0
    for g in word:
        a, b = pres.grading[g]
        d1 += a
        d2 += b
    return (d1, d2)


def critical_pairs(pres: Presentation):
    """Nonzero local-confluence residuals of the rule system.

    For every three-letter overlap w = abc with rules ab -> P and bc -> Q,
    reduce the two one-step rewrites Pc and aQ to normal form and keep the
    difference when it is nonzero.  An empty return value means the system
    is locally confluent; with termination this makes normal forms canonical.
    """
    residuals = []
    by_first = {}
    for rule in pres.rules:
        by_first.setdefault(rule.lhs[0], []).append(rule)
    for r1 in pres.rules:
        a, b = r1.lhs
        for r2 in by_first.get(b, ()):
            c = r2.lhs[1]
            left = r1.rhs * pres.monomial((c,))
            right = pres.monomial((a,)) * r2.rhs
            diff = (left - right).reduce()
            if not diff.is_zero():
                residuals.append(((a, b, c), diff))
    return residuals
