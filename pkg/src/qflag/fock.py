"""Truncated weighted-shift model of quantum U(2) as a numerical cross-check.

The standard operators on l^2(N),

    a |n> = sqrt(1 - q0^(2n)) |n-1>,   g |n> = q0^n |n>,   u = z * identity,

are truncated to the span of |0>, ..., |N-1>.  Their images are accepted
solely because the presentation relations evaluate to numerical zero on the
interior (relation_residuals is the oracle); no representation formulas are
imported from elsewhere.

Truncating a shift loses amplitude at the top of the range, and a word of
length L contaminates the top L basis vectors, so word evaluation is done
with headroom: operators are rebuilt on N + L dimensions, the product is
cropped back to the N-frame, and norms are taken on the interior window
0..N-2.  On that window the cropped values coincide with the untruncated
matrix elements (a length-L word only couples |n> to states within L steps),
which is what makes residuals of a correct rewrite genuinely tiny instead of
merely small.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import make_uq2
from .coeff import qrat_eval
from .errors import ConstructionError, UsageError
from .presentation import NCPoly, Presentation

RESIDUAL_TOL = 1e-10


def _shift_images(dim: int, q0: float, z: complex):
    """Generator images on a dim-dimensional truncation."""
    pres = make_uq2()
    n = np.arange(dim)
    a = np.zeros((dim, dim), dtype=complex)
    weights = np.sqrt(1.0 - q0 ** (2.0 * n[1:]))
    a[np.arange(dim - 1), np.arange(1, dim)] = weights
    g = np.diag((q0**n).astype(complex))
    u = z * np.eye(dim, dtype=complex)
    return {
        pres.gen("a"): a,
        pres.gen("a'"): a.conj().T,
        pres.gen("g"): g,
        pres.gen("g'"): g.conj().T,
        pres.gen("u"): u,
        pres.gen("u'"): u.conj().T,
    }


@dataclass(frozen=True)
class TruncRep:
    """Truncated representation of uq2 on span{|0>, ..., |N-1>}."""

    dim: int
    q0: float
    phase: complex
    images: dict = field(compare=False, repr=False)

    @property
    def pres(self) -> Presentation:
        return make_uq2()

    def image(self, gen) -> np.ndarray:
        if isinstance(gen, str):
            gen = self.pres.gen(gen)
        return self.images[gen]

    def _images_with_headroom(self, extra: int):
        if extra <= 0:
            return self.images
        return _shift_images(self.dim + extra, self.q0, self.phase)

    def evaluate_word(self, word, *, headroom: int = 0) -> np.ndarray:
        """Operator image of a word, cropped back to the N-frame."""
        images = self._images_with_headroom(headroom)
        dim = self.dim + max(headroom, 0)
        out = np.eye(dim, dtype=complex)
        for g in word:
            out = out @ images[g]
        return out[: self.dim, : self.dim]

    def evaluate_poly(self, p: NCPoly, *, headroom: int = 0) -> np.ndarray:
        if p.pres is not self.pres:
            raise UsageError("element does not live in uq2")
        images = self._images_with_headroom(headroom)
        dim = self.dim + max(headroom, 0)
        acc = np.zeros((dim, dim), dtype=complex)
        for w, c in p.terms.items():
            m = np.eye(dim, dtype=complex)
            for g in w:
                m = m @ images[g]
            acc += qrat_eval(c, self.q0) * m
        return acc[: self.dim, : self.dim]

    def interior_norm(self, m: np.ndarray) -> float:
        """Operator norm compressed to the interior window 0..N-2."""
        return float(np.linalg.norm(m[: self.dim - 1, : self.dim - 1], 2))


def build_rep_uq2(dim: int, q0: float, phase: complex = 1.0) -> TruncRep:
    """Weighted-shift truncation; see the module docstring for the ansatz."""
    if not isinstance(dim, int) or dim < 4:
        raise ConstructionError("truncation dimension must be an integer >= 4")
    if not 0.0 < q0 < 1.0:
        raise ConstructionError("q0 must lie strictly between 0 and 1")
    mod = abs(phase)
    if mod == 0.0:
        raise ConstructionError("phase must be a nonzero unit-modulus scalar")
    phase = complex(phase) / mod
    return TruncRep(dim, float(q0), phase, _shift_images(dim, float(q0), phase))


def relation_residuals(rep: TruncRep) -> dict:
    """Interior operator norm of lhs - rhs for every uq2 rewrite rule."""
    out = {}
    for rule in rep.pres.rules:
        lhs = rep.evaluate_word(rule.lhs, headroom=2)
        rhs = rep.evaluate_poly(rule.rhs, headroom=2)
        out[rule.label] = rep.interior_norm(lhs - rhs)
    return out


def nf_soundness(word, rep: TruncRep) -> float:
    """Interior norm of (word image) - (image of its normal form).

    A nonzero value beyond roundoff would mean the rewrite engine changed the
    operator an element represents.  Word length is capped at N/4 to keep the
    contract honest about where truncation could interfere.
    """
    word = tuple(word)
    if len(word) > rep.dim // 4:
        raise UsageError(
            f"word of length {len(word)} too long for dimension {rep.dim}"
        )
    headroom = len(word)
    direct = rep.evaluate_word(word, headroom=headroom)
    reduced = rep.evaluate_poly(
        rep.pres.reduce_word(word), headroom=headroom
    )
    return rep.interior_norm(direct - reduced)


def check_rep(rep: TruncRep, tol: float = RESIDUAL_TOL):
    """(residual table, worst value, pass flag) for the CLI."""
    residuals = relation_residuals(rep)
    worst = max(residuals.values())
    return residuals, worst, worst <= tol
