"""Command-line interface: one entry point for every operation.

Exact values are the default; --q-eval q0 renders coefficients numerically
(and adds coeff_value fields to JSON output).  Exit codes: 0 on success, 2 on
domain errors (bad expressions, wrong algebra, invalid parameters), 1 on
internal invariant violations (engine errors, failed numerical checks).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import algebras, fock, prim, states, tensor
from .coeff import QRat, qrat_eval
from .errors import DomainError, InternalError
from .exprparse import parse
from .presentation import NCPoly, critical_pairs, degree_of

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2


# -- rendering helpers --------------------------------------------------------

def _float_text(x: float) -> str:
    return repr(x)


def poly_json(p: NCPoly, q0=None) -> dict:
    terms = []
    for word, coeff in p.sorted_terms():
        entry = {
            "coeff_num": coeff.num.render(),
            "coeff_den": coeff.den.render(),
            "word": [g.label for g in word],
        }
        if q0 is not None:
            entry["coeff_value"] = qrat_eval(coeff, q0)
        terms.append(entry)
    return {"terms": terms}


def tensor_json(tp: tensor.TensorPoly, q0=None) -> dict:
    terms = []
    for (lw, rw), coeff in tp.sorted_terms():
        entry = {
            "coeff_num": coeff.num.render(),
            "coeff_den": coeff.den.render(),
            "word_left": [g.label for g in lw],
            "word_right": [g.label for g in rw],
        }
        if q0 is not None:
            entry["coeff_value"] = qrat_eval(coeff, q0)
        terms.append(entry)
    return {"terms": terms}


def scalar_json(c: QRat, q0=None) -> dict:
    entry = {
        "coeff_num": c.num.render(),
        "coeff_den": c.den.render(),
        "word": [],
    }
    if q0 is not None:
        entry["coeff_value"] = qrat_eval(c, q0)
    return {"terms": [entry]}


def _join_signed(chunks) -> str:
    if not chunks:
        return "0"
    neg, text = chunks[0]
    outs = [("-" if neg else "") + text]
    for neg, text in chunks[1:]:
        outs.append(" - " if neg else " + ")
        outs.append(text)
    return "".join(outs)


def poly_text(p: NCPoly, q0=None) -> str:
    if q0 is None:
        return p.render()
    chunks = []
    for word, coeff in p.sorted_terms():
        v = qrat_eval(coeff, q0)
        body = _float_text(abs(v))
        wtext = " ".join(g.label for g in word)
        chunks.append((v < 0, f"{body} * {wtext}" if wtext else body))
    return _join_signed(chunks)


def tensor_text(tp: tensor.TensorPoly, q0=None) -> str:
    if q0 is None:
        return tp.render()
    chunks = []
    for (lw, rw), coeff in tp.sorted_terms():
        v = qrat_eval(coeff, q0)
        pair = "({}) (x) ({})".format(
            " ".join(g.label for g in lw) or "1",
            " ".join(g.label for g in rw) or "1",
        )
        chunks.append((v < 0, f"{_float_text(abs(v))} * {pair}"))
    return _join_signed(chunks)


def scalar_text(c: QRat, q0=None) -> str:
    if q0 is None:
        return c.render()
    return _float_text(qrat_eval(c, q0))


class _Output:
    def __init__(self, args):
        self.as_json = args.json
        self.q0 = args.q_eval

    def poly(self, p):
        if self.as_json:
            print(json.dumps(poly_json(p, self.q0)))
        else:
            print(poly_text(p, self.q0))

    def tensor(self, tp):
        if self.as_json:
            print(json.dumps(tensor_json(tp, self.q0)))
        else:
            print(tensor_text(tp, self.q0))

    def scalar(self, c):
        if self.as_json:
            print(json.dumps(scalar_json(c, self.q0)))
        else:
            print(scalar_text(c, self.q0))

    def blob(self, obj, text_lines):
        if self.as_json:
            print(json.dumps(obj))
        else:
            for line in text_lines:
                print(line)


# -- command implementations ----------------------------------------------------

def _parse_in(args, algebra: str) -> NCPoly:
    return parse(args.expr, algebras.presentation(algebra))


def cmd_nf(args, out: _Output) -> int:
    out.poly(_parse_in(args, args.algebra).reduce())
    return EXIT_OK


def cmd_delta(args, out: _Output) -> int:
    p = _parse_in(args, args.algebra)
    comult = {
        "mq3": tensor.delta_su3,
        "uq2": tensor.delta_uq2,
        "suq2": tensor.delta_suq2,
    }[args.algebra]
    out.tensor(comult(p))
    return EXIT_OK


def cmd_coact(args, out: _Output) -> int:
    if args.map == "pi0":
        out.tensor(tensor.coact_mu_hat(_parse_in(args, "mq3")))
    elif args.map == "pi":
        out.tensor(tensor.coact_rho_su3(_parse_in(args, "mq3")))
    else:  # p: the suq2-coaction on uq2
        out.tensor(tensor.coact_rho_uq2(_parse_in(args, "uq2")))
    return EXIT_OK


def cmd_haar(args, out: _Output) -> int:
    if args.method == "composite" and args.algebra != "uq2":
        raise DomainError("--method composite is only defined for uq2")
    p = _parse_in(args, args.algebra)
    if args.algebra == "suq2":
        value = states.haar_suq2(p)
    elif args.algebra == "u1":
        value = states.haar_u1(p)
    elif args.method == "composite":
        value = states.haar_uq2_composite(p)
    else:
        value = states.haar_uq2_direct(p)
    out.scalar(value)
    return EXIT_OK


def cmd_phi(args, out: _Output) -> int:
    out.poly(states.gauge_average(_parse_in(args, "mq3")))
    return EXIT_OK


def cmd_w(args, out: _Output) -> int:
    out.poly(states.flag_gen(args.i, args.j, args.k))
    return EXIT_OK


def cmd_expect(args, out: _Output) -> int:
    if args.report:
        rows = states.expectation_report()
        matches = sum(r.match for r in rows)
        obj = {
            "rows": [
                {
                    "triple": list(r.triple),
                    "computed": poly_json(r.computed, out.q0),
                    "closed_form": poly_json(r.closed_form, out.q0),
                    "match": r.match,
                }
                for r in rows
            ],
            "matches": matches,
        }
        lines = ["i j k  match     computed | closed form"]
        for r in rows:
            i, j, k = r.triple
            flag = "match   " if r.match else "MISMATCH"
            lines.append(
                f"{i} {j} {k}  {flag}  {poly_text(r.computed, out.q0)}"
                f" | {poly_text(r.closed_form, out.q0)}"
            )
        lines.append(f"{matches}/27 triples match the displayed closed form")
        out.blob(obj, lines)
        return EXIT_OK
    if not args.expr:
        raise DomainError("expect needs an expression or --report")
    p = _parse_in(args, "mq3")
    out.poly(states.cond_expectation(p))
    return EXIT_OK


def cmd_cramer(args, out: _Output) -> int:
    for x in (args.j1, args.j2, args.j3):
        if x not in (1, 2, 3):
            raise DomainError("cramer indices must be 1, 2 or 3")
    out.poly(algebras.cramer_identity((args.j1, args.j2, args.j3)))
    return EXIT_OK


def cmd_det(args, out: _Output) -> int:
    out.poly(algebras.quantum_det())
    return EXIT_OK


def cmd_star(args, out: _Output) -> int:
    out.poly(algebras.involution(_parse_in(args, args.algebra)))
    return EXIT_OK


def cmd_deg(args, out: _Output) -> int:
    p = _parse_in(args, "mq3").reduce()
    pres = p.pres
    entries = []
    lines = []
    for word, _ in p.sorted_terms():
        d = degree_of(word, pres)
        entries.append(
            {"word": [g.label for g in word], "degree": list(d)}
        )
        lines.append(f"{' '.join(g.label for g in word) or '1'}: ({d[0]}, {d[1]})")
    out.blob({"degrees": entries}, lines or ["0"])
    return EXIT_OK


def cmd_confluence(args, out: _Output) -> int:
    names = sorted(algebras.PRESENTATIONS) if args.algebra == "all" else [args.algebra]
    report = []
    worst = 0
    for name in names:
        res = critical_pairs(algebras.presentation(name))
        report.append({"algebra": name, "residuals": len(res)})
        worst = max(worst, len(res))
    out.blob(
        {"confluence": report},
        [f"{r['algebra']}: {r['residuals']} nonzero residuals" for r in report],
    )
    return EXIT_OK if worst == 0 else EXIT_INTERNAL


def _points(names):
    try:
        return [prim.point(n) for n in names]
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def cmd_prim(args, out: _Output) -> int:
    if args.query == "closure":
        cl = prim.closure(_points(args.points))
        out.blob(
            {"closure": sorted(p.value for p in cl)}, [prim.format_points(cl)]
        )
    elif args.query == "is-closed":
        v = prim.is_closed(_points(args.points))
        out.blob({"closed": v}, ["yes" if v else "no"])
    elif args.query == "is-dense":
        v = prim.is_dense(_points(args.points))
        out.blob({"dense": v}, ["yes" if v else "no"])
    elif args.query == "open-sets":
        sets = prim.open_sets()
        out.blob(
            {"open_sets": [sorted(p.value for p in s) for s in sets]},
            ["{" + ", ".join(p.value for p in sorted(s, key=lambda x: x.value)) + "}" for s in sets],
        )
    else:  # records
        factors, k0, k1 = prim.records()
        out.blob(
            {"factors": list(factors), "k0_rank": k0, "k1_rank": k1},
            [
                "factors: " + ", ".join(factors),
                f"K0 rank: {k0}",
                f"K1 rank: {k1}",
            ],
        )
    return EXIT_OK


def cmd_fock(args, out: _Output) -> int:
    import cmath

    rep = fock.build_rep_uq2(args.trunc, args.q, cmath.exp(1j * args.phase))
    residuals, worst, ok = fock.check_rep(rep)
    nf_max = None
    if args.nf_samples:
        rng = random.Random(args.seed)
        gens = list(rep.pres.generators)
        nf_max = 0.0
        cap = min(args.max_len, rep.dim // 4)
        for _ in range(args.nf_samples):
            length = rng.randint(0, cap)
            word = tuple(rng.choice(gens) for _ in range(length))
            nf_max = max(nf_max, fock.nf_soundness(word, rep))
        ok = ok and nf_max <= fock.RESIDUAL_TOL
    obj = {
        "dim": rep.dim,
        "q0": rep.q0,
        "phase": args.phase,
        "residuals": residuals,
        "max_residual": worst,
        "nf_max": nf_max,
        "ok": ok,
    }
    lines = [f"{label}: {value:.3e}" for label, value in residuals.items()]
    lines.append(f"max relation residual: {worst:.3e}")
    if nf_max is not None:
        lines.append(f"max normal-form residual: {nf_max:.3e}")
    lines.append("ok" if ok else "VIOLATION")
    out.blob(obj, lines)
    return EXIT_OK if ok else EXIT_INTERNAL


# -- argument plumbing ---------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument(
        "--q-eval",
        type=float,
        default=None,
        metavar="Q0",
        help="also evaluate coefficients at q = Q0 in (0,1)",
    )

    ap = argparse.ArgumentParser(
        prog="qflag",
        description="Exact computations on quantized SU(3), U_q(2) and the "
        "q-deformed flag manifold.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("--algebra", default="mq3", choices=sorted(algebras.PRESENTATIONS))
    p.add_argument("expr")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("delta", parents=[common], help="comultiplication")
    p.add_argument("--algebra", default="mq3", choices=["mq3", "uq2", "suq2"])
    p.add_argument("expr")
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("coact", parents=[common], help="coaction")
    p.add_argument("--map", default="pi", choices=["pi0", "pi", "p"])
    p.add_argument("expr")
    p.set_defaults(fn=cmd_coact)

    p = sub.add_parser("haar", parents=[common], help="Haar functional")
    p.add_argument("--algebra", default="uq2", choices=["suq2", "u1", "uq2"])
    p.add_argument("--method", default="direct", choices=["direct", "composite"])
    p.add_argument("expr")
    p.set_defaults(fn=cmd_haar)

    p = sub.add_parser("phi", parents=[common], help="gauge average on mq3")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("w", parents=[common], help="flag generator w_ijk")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_w)

    p = sub.add_parser(
        "expect", parents=[common], help="conditional expectation onto CP^2_q"
    )
    p.add_argument("--report", action="store_true", help="27-triple comparison")
    p.add_argument("expr", nargs="?")
    p.set_defaults(fn=cmd_expect)

    p = sub.add_parser("cramer", parents=[common], help="Cramer identity residual")
    p.add_argument("j1", type=int)
    p.add_argument("j2", type=int)
    p.add_argument("j3", type=int)
    p.set_defaults(fn=cmd_cramer)

    p = sub.add_parser("det", parents=[common], help="quantum determinant")
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("star", parents=[common], help="involution")
    p.add_argument("--algebra", default="uq2", choices=sorted(algebras.PRESENTATIONS))
    p.add_argument("expr")
    p.set_defaults(fn=cmd_star)

    p = sub.add_parser("deg", parents=[common], help="gauge degrees of the terms")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_deg)

    p = sub.add_parser("confluence", parents=[common], help="critical-pair check")
    p.add_argument(
        "--algebra", default="all", choices=["all", *sorted(algebras.PRESENTATIONS)]
    )
    p.set_defaults(fn=cmd_confluence)

    p = sub.add_parser("prim", parents=[common], help="primitive-ideal space")
    p.add_argument(
        "query", choices=["closure", "is-closed", "is-dense", "open-sets", "records"]
    )
    p.add_argument("points", nargs="*")
    p.set_defaults(fn=cmd_prim)

    p = sub.add_parser("fock", parents=[common], help="numerical cross-check")
    p.add_argument("action", choices=["check"])
    p.add_argument("--trunc", type=int, default=32, metavar="N")
    p.add_argument("--q", type=float, default=0.5, metavar="Q0")
    p.add_argument("--phase", type=float, default=0.0, metavar="THETA")
    p.add_argument("--nf-samples", type=int, default=0, metavar="K")
    p.add_argument("--max-len", type=int, default=5, metavar="L")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_fock)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.q_eval is not None and not 0.0 < args.q_eval < 1.0:
        print("error: --q-eval must lie in (0, 1)", file=sys.stderr)
        return EXIT_DOMAIN
    out = _Output(args)
    try:
        return args.fn(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
