"""``lgr-exc`` command line interface.

Weights are written as comma-separated integers (``3,3,1``; ``0`` is the empty
diagram).  A weight starting with a minus sign must be attached to its flag,
as in ``--weight=-1,0``.  Output is JSON with sorted keys unless
``--format table`` is given.  Exit status: 0 on success, 1 when a
certificate fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import bbw, diagrams, kclass, schur, staircase, verify
from .certificate import Certificate
from .diagrams import format_weight, pad, parse_weight, strip
from .parallel import default_jobs


class UsageError(Exception):
    pass


def _weight(text: str) -> tuple[int, ...]:
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cell_json(cell: bbw.CohomCell | None, group: str, n: int) -> dict[str, Any]:
    if cell is None:
        return {"degree": None, "weight": None, "dim": 0}
    return {"degree": cell.degree, "weight": format_weight(cell.weight), "dim": bbw.cell_dim(cell, group, n)}


def _graded_json(graded: dict[int, schur.VirtualModule]) -> dict[str, Any]:
    cells = [
        {"degree": d, "weight": format_weight(wt), "multiplicity": m, "dim": m * schur.dim_sp(wt, mod.rank)}
        for d, mod in graded.items()
        for wt, m in mod
    ]
    return {"cells": cells, "euler": bbw.euler_characteristic(graded)}


def _module_json(mod: schur.VirtualModule) -> dict[str, Any]:
    return {"group": mod.group, "rank": mod.rank, "terms": {format_weight(k): v for k, v in mod}, "dim": mod.dim()}


def _need_length(lam: tuple[int, ...], k: int, what: str) -> tuple[int, ...]:
    if diagrams.is_diagram(lam) and len(strip(lam)) <= k:
        return pad(lam, k)
    if len(lam) != k:
        raise UsageError(f"{what} needs {k} entries, got {format_weight(lam)}")
    return lam


# -- subcommands ---------------------------------------------------------------


def cmd_lr(args: argparse.Namespace) -> Any:
    if args.nu is not None:
        return {"coefficient": schur.lr_coeff(args.lam, args.mu, args.nu)}
    if args.k is not None:
        return _module_json(schur.tensor_gl(args.lam, args.mu, args.k))
    return {"terms": {format_weight(k): v for k, v in sorted(schur.lr_product(args.lam, args.mu).items())}}


def cmd_bbw(args: argparse.Namespace) -> Any:
    n = args.n
    if args.space == "lgr":
        if args.weight is None:
            raise UsageError("--space lgr needs --weight")
        return _cell_json(bbw.coh_lgr(_need_length(args.weight, n, "--weight"), n), "Sp", n)
    if args.space == "igr":
        if args.w is None or args.alpha is None:
            raise UsageError("--space igr needs --w and --alpha")
        alpha = _need_length(args.alpha, args.w, "--alpha")
        beta = _need_length(args.beta or (), n - args.w, "--beta")
        return _cell_json(bbw.coh_igr(alpha, beta, args.w, n), "Sp", n)
    if args.space == "gr":
        if args.k is None or args.lam is None:
            raise UsageError("--space gr needs --k and --lambda")
        lam = _need_length(args.lam, n - args.k, "--lambda")
        mu = _need_length(args.mu or (), args.k, "--mu")
        return _cell_json(bbw.coh_gr_relative(lam, mu, n), "GL", n)
    if args.lam is None or args.mu is None:
        raise UsageError("--space bundle needs --lambda and --mu")
    return _graded_json(bbw.coh_lgr_bundle(args.lam, args.mu, args.t, n))


def cmd_chi(args: argparse.Namespace) -> Any:
    mu, nu = _need_length(args.mu, args.n, "--mu"), _need_length(args.nu, args.n, "--nu")
    if args.equivariant:
        if args.t:
            raise UsageError("--equivariant does not take a twist")
        return {"chi_equivariant": kclass.euler_pairing_equivariant(mu, nu, args.n)}
    return {"chi": kclass.euler_pairing(mu, nu, args.t, args.n)}


def cmd_kclass(args: argparse.Namespace) -> Any:
    lam = strip(args.lam)
    h = args.h if args.h is not None else len(lam)
    w = args.w if args.w is not None else (lam[0] if lam else 0)
    make = kclass.kclass_F if args.dual else kclass.kclass_E
    x = kclass.twist_kclass(make(lam, h, w, args.n), args.twist)
    return {"n": args.n, "terms": x.to_dict(), "rank": kclass.rank(x)}


def cmd_staircase(args: argparse.Namespace) -> Any:
    lam = strip(args.lam)
    if not lam:
        raise UsageError("the staircase needs a nonzero diagram")
    w = lam[0]
    h = args.n + 1 - w
    c = staircase.build_staircase(lam, h, w, args.n, twist=args.twist)
    if args.verify:
        return staircase.verify_exactness_probe(c, jobs=args.jobs)
    return {
        "n": args.n,
        "terms": [
            {"position": t.position, "multiplicity": t.multiplicity, "object": t.description, "kclass": t.kclass.to_dict()}
            for t in c.terms
        ],
        "euler_class": staircase.euler_class(c).to_dict(),
    }


SUITES = (
    "all",
    "example331",
    "lemmas",
    "lemma",
    "prop-main",
    "igr-ec",
    "kp-count",
    "kp-chi",
    "gram",
    "serre",
    "staircases",
    "eq54",
    "lefschetz510",
    "closure",
    "steps510",
)


def run_suite(name: str, args: argparse.Namespace) -> Certificate:
    n = args.n
    if name == "example331":
        return verify.verify_example_331()
    if name == "lemmas":
        return verify.verify_lemmas(n or 5, args.bound)
    if name == "lemma":
        if args.name is None:
            raise UsageError(f"--suite lemma needs --name ({'|'.join(verify.LEMMAS)})")
        return verify.verify_lemma(args.name, n or 5, args.bound)
    if name == "prop-main":
        if args.h is not None or args.w is not None:
            if n is None or args.h is None or args.w is None:
                raise UsageError("--suite prop-main takes --n, --h and --w together")
            return verify.verify_prop_main(n, args.h, args.w)
        return verify.verify_prop_main_all(n or 5)
    if name == "igr-ec":
        if n is None or args.w is None:
            raise UsageError("--suite igr-ec needs --n and --w")
        return verify.verify_igr_ec(n, args.w)
    if name == "kp-count":
        return verify.merge("kp-count", [verify.verify_kp_count(k) for k in range(1, (n or 10) + 1)], {"max_n": n or 10})
    if name == "kp-chi":
        return verify.verify_kp_chi(n or 3, jobs=args.jobs)
    if name == "gram":
        return verify.verify_gram(n or 5)
    if name == "serre":
        return verify.verify_serre(n or 3)
    if name == "staircases":
        return verify.verify_staircases(n or 4, jobs=args.jobs)
    if name == "eq54":
        return staircase.verify_exactness_probe(verify.eq54_complex(), jobs=args.jobs)
    if name == "lefschetz510":
        return verify.verify_lefschetz_510()
    if name == "closure":
        return verify.generation_closure(n or 5)
    if name == "steps510":
        return verify.verify_510_steps(jobs=args.jobs)
    parts = [run_suite(s, args) for s in SUITES if s not in ("all", "lemma", "igr-ec")]
    return verify.merge("all", parts, {})


def cmd_verify(args: argparse.Namespace) -> Any:
    return run_suite(args.suite, args)


def cmd_enumerate(args: argparse.Namespace) -> Any:
    if args.kp:
        if args.n is None:
            raise UsageError("--kp needs --n")
        objs = verify.kp_collection(args.n)
        return {"n": args.n, "count": len(objs), "objects": [{"lambda": format_weight(l), "twist": t} for l, t in objs]}
    if args.h is None or args.w is None:
        raise UsageError("enumerate needs --h and --w, or --kp --n")
    block = diagrams.enumerate_block(args.h, args.w)
    return {"h": args.h, "w": args.w, "count": len(block), "diagrams": [format_weight(strip(l)) for l in block]}


# -- plumbing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $LGR_EXC_JOBS or 1)")
    common.add_argument("--out", metavar="FILE", help="also write the output to FILE")

    parser = argparse.ArgumentParser(prog="lgr-exc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients and GL tensor products")
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.add_argument("--mu", type=_weight, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--nu", type=_weight)
    g.add_argument("--k", type=int, help="decompose over GL(k); weights may be negative")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("bbw", parents=[common], help="Borel-Bott-Weil cohomology")
    p.add_argument("--space", choices=("lgr", "igr", "gr", "bundle"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", type=_weight)
    p.add_argument("--alpha", type=_weight)
    p.add_argument("--beta", type=_weight)
    p.add_argument("--lambda", dest="lam", type=_weight)
    p.add_argument("--mu", type=_weight)
    p.add_argument("--w", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, default=0)
    p.set_defaults(func=cmd_bbw)

    p = sub.add_parser("chi", parents=[common], help="Euler pairing chi(S^mu U*(t), S^nu U*)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_weight, required=True)
    p.add_argument("--nu", type=_weight, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--equivariant", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("kclass", parents=[common], help="K-class of E^lambda (or F^lambda)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--dual", action="store_true", help="F^lambda instead of E^lambda")
    p.set_defaults(func=cmd_kclass)

    p = sub.add_parser("staircase", parents=[common], help="staircase complex of lambda with lambda_1 = w")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--verify", action="store_true", help="run the Euler probe check")
    p.set_defaults(func=cmd_staircase)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--name", choices=verify.LEMMAS)
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list a block Y_{h,w} or the whole collection")
    p.add_argument("--h", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--kp", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def _table(payload: Any) -> str:
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        lines = []
        for key in sorted(payload):
            value = payload[key]
            text = json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else str(value)
            lines.append(f"{str(key).ljust(width)}  {text}")
        return "\n".join(lines)
    return str(payload)


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs is None:
        try:
            args.jobs = default_jobs()
        except ValueError as exc:
            print(f"lgr-exc: {exc}", file=sys.stderr)
            return 2
    try:
        result = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"lgr-exc: {exc}", file=sys.stderr)
        return 2
    failed = isinstance(result, Certificate) and not result.ok
    payload = result.to_dict() if isinstance(result, Certificate) else result
    text = json.dumps(payload, sort_keys=True, indent=2) if args.format == "json" else _table(payload)
    print(text, file=stdout)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
