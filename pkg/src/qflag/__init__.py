"""Exact symbolic computation on quantized SU(3), U_q(2) and the q-deformed
flag manifold, with a numerical truncated-operator cross-check.

The package provides:

* exact coefficient arithmetic in the field of rational functions of q
  (:mod:`qflag.coeff`);
* a generic two-letter rewrite engine with termination and confluence
  diagnostics (:mod:`qflag.presentation`);
* the concrete presentations mq3, suq2, uq2, t2, u1 together with the
  E-tensor, quantum determinant and Cramer identity (:mod:`qflag.algebras`);
* comultiplications, quantum-group morphisms and coactions
  (:mod:`qflag.tensor`);
* Haar functionals, the gauge average and the conditional expectation onto
  the quantum projective plane (:mod:`qflag.states`);
* truncated weighted-shift verification (:mod:`qflag.fock`);
* the six-point primitive-ideal space (:mod:`qflag.prim`);
* an expression parser and CLI (:mod:`qflag.exprparse`, :mod:`qflag.cli`).
"""

from .coeff import QPoly, QRat, qrat_eval
from .presentation import (
    Gen,
    NCPoly,
    Presentation,
    RewriteRule,
    critical_pairs,
    degree_of,
)
from .algebras import (
    ETensor,
    cramer_identity,
    e_tensor,
    involution,
    make_mq3,
    make_suq2,
    make_t2,
    make_u1,
    make_uq2,
    presentation,
    quantum_det,
    ugen,
)
from .tensor import (
    Morphism,
    TensorPoly,
    apply_morphism,
    coact_mu_hat,
    coact_rho_su3,
    coact_rho_uq2,
    delta_su3,
    delta_suq2,
    delta_uq2,
    p_corner,
    pi0_hat,
    pi_v,
)
from .states import (
    cond_expectation,
    expectation_report,
    flag_gen,
    gauge_average,
    haar_suq2,
    haar_u1,
    haar_uq2_composite,
    haar_uq2_direct,
)
from .fock import TruncRep, build_rep_uq2, nf_soundness, relation_residuals
from .prim import PrimPoint, closure, is_closed, is_dense, open_sets, records
from .exprparse import parse

__version__ = "0.1.0"

__all__ = [
    "ETensor",
    "Gen",
    "Morphism",
    "NCPoly",
    "Presentation",
    "PrimPoint",
    "QPoly",
    "QRat",
    "RewriteRule",
    "TensorPoly",
    "TruncRep",
    "apply_morphism",
    "build_rep_uq2",
    "closure",
    "coact_mu_hat",
    "coact_rho_su3",
    "coact_rho_uq2",
    "cond_expectation",
    "cramer_identity",
    "critical_pairs",
    "degree_of",
    "delta_su3",
    "delta_suq2",
    "delta_uq2",
    "e_tensor",
    "expectation_report",
    "flag_gen",
    "gauge_average",
    "haar_suq2",
    "haar_u1",
    "haar_uq2_composite",
    "haar_uq2_direct",
    "involution",
    "is_closed",
    "is_dense",
    "make_mq3",
    "make_suq2",
    "make_t2",
    "make_u1",
    "make_uq2",
    "nf_soundness",
    "open_sets",
    "p_corner",
    "parse",
    "pi0_hat",
    "pi_v",
    "presentation",
    "prim",
    "qrat_eval",
    "quantum_det",
    "records",
    "relation_residuals",
    "ugen",
]
