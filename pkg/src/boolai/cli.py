"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage errors (bad flags, malformed input).

Truth tables are hex strings whose integer value has bit i = f(i), so the
3-variable majority function is ``e8``.  ``majority`` for even n is 1 on
inputs with at least n/2 + 1 ones.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import annihilator as ann
from .boolfun import AnfPoly, TruthTable, anf_from_tt, complement, degree, is_balanced, tt_from_anf, weight
from .constructions import CONSTRUCTIONS
from .gf2n import Basis, FieldSpec, dual_basis, self_dual_basis
from .univariate import (
    UnivariatePoly,
    decompose,
    interpolate,
    to_multivariate,
    to_truth_table,
    wt_degree,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
RANDOM_SWEEP_MAX_N = 6
EXHAUSTIVE_SWEEP_MAX_N = 4


class UsageError(Exception):
    pass


# ---------- argument plumbing


def _add_field_args(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--modulus", help="field modulus as hex bit pattern (default: smallest irreducible)")
    p.add_argument("--json", action="store_true", help="emit JSON")


def _add_input_args(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--tt", help="truth table as hex (bit i of the value is f(i))")
    src.add_argument("--anf", help='ANF string, e.g. "x1*x2 + x3 + 1"')
    src.add_argument("--univariate", metavar="FILE", help="JSON list of hex coefficients (file path or inline JSON)")
    src.add_argument("--construct", choices=sorted(CONSTRUCTIONS), help="named construction")
    _add_field_args(p)


def _add_basis_arg(p: argparse.ArgumentParser):
    p.add_argument(
        "--basis",
        default="polynomial",
        help="polynomial | dual | self-dual | comma-separated hex elements",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolai", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="weight, degrees, AI in both modes, equivalence flag")
    _add_input_args(p)
    p.add_argument("--batch", metavar="FILE", help="file with one hex truth table per line")

    p = sub.add_parser("convert", help="convert between representations")
    _add_input_args(p)
    _add_basis_arg(p)
    p.add_argument(
        "--to",
        required=True,
        choices=["tt", "anf", "univariate", "multivariate-ext", "components"],
    )

    p = sub.add_parser("annihilators", help="basis of the annihilator space up to a degree")
    _add_input_args(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mode", choices=["base", "extension"], default="base")
    p.add_argument("--representation", choices=list(ann.REPRESENTATIONS), default="multivariate")
    p.add_argument("--complement", action="store_true", help="annihilate f + 1 instead of f")

    p = sub.add_parser("equiv-sweep", help="check AI(f) = AI_ext(f) over many functions")
    _add_field_args(p)
    pop = p.add_mutually_exclusive_group(required=True)
    pop.add_argument("--exhaustive", action="store_true")
    pop.add_argument("--random", type=int, metavar="COUNT")
    pop.add_argument("--batch", metavar="FILE")
    p.add_argument("--seed", type=int, help="required with --random")
    p.add_argument("--pai", action="store_true", help="check PAI definitions instead of AI")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("pai-check", help="perfect algebraic immunity in base and extension form")
    _add_input_args(p)

    p = sub.add_parser("construct", help="print a named construction")
    p.add_argument("name", choices=sorted(CONSTRUCTIONS))
    _add_field_args(p)
    return parser


def _field(args, n: int | None = None) -> FieldSpec:
    n = n if n is not None else args.n
    if n is None:
        raise UsageError("--n is required")
    try:
        modulus = int(args.modulus, 16) if args.modulus else None
        return FieldSpec(n, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_univariate(arg: str) -> str:
    if arg.lstrip().startswith("["):
        return arg
    try:
        return Path(arg).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc}") from None


def _load_input(args):
    """Return ``(spec, value)`` where value is a TruthTable or a UnivariatePoly."""
    if args.univariate is not None:
        text = _read_univariate(args.univariate)
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad univariate JSON: {exc}") from None
        n = (len(items) - 1).bit_length() if isinstance(items, list) else None
        if args.n is not None:
            n = args.n
        spec = _field(args, n)
        try:
            return spec, UnivariatePoly.from_json(spec, text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    spec = _field(args)
    try:
        if args.tt is not None:
            return spec, TruthTable.from_hex(spec.n, args.tt)
        if args.anf is not None:
            return spec, tt_from_anf(AnfPoly.parse(spec.n, args.anf))
        if args.construct is not None:
            return spec, CONSTRUCTIONS[args.construct](spec.n, spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("one input source is required: --tt, --anf, --univariate or --construct")


def _as_tt(value) -> TruthTable:
    if isinstance(value, TruthTable):
        return value
    try:
        return to_truth_table(value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _basis(args, spec: FieldSpec) -> Basis:
    name = args.basis
    if name == "polynomial":
        return Basis.polynomial(spec)
    if name == "dual":
        return dual_basis(Basis.polynomial(spec))
    if name == "self-dual":
        return self_dual_basis(spec)
    try:
        return Basis.from_values(spec, [int(h, 16) for h in name.split(",")])
    except ValueError as exc:
        raise UsageError(f"bad basis {name!r}: {exc}") from None


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data))
    else:
        print("\n".join(lines))


# ---------- commands


def analyze_function(f: TruthTable, spec: FieldSpec) -> dict:
    reports: list[ann.AiReport] = []
    equal = ann.verify_equivalence(f, spec, reports)
    base, ext, _ = reports
    return {
        "n": f.n,
        "tt": f.hex(),
        "weight": weight(f),
        "balanced": is_balanced(f),
        "anf_degree": degree(anf_from_tt(f)),
        "univariate_degree": wt_degree(interpolate(f, spec)),
        "ai_base": base.ai,
        "ai_ext": ext.ai,
        "equal": equal,
        "report_base": base.to_dict(),
        "report_ext": ext.to_dict(),
    }


def _fmt_degree(d: int) -> str:
    return "-inf" if d < 0 else str(d)


def cmd_analyze(args) -> int:
    if args.batch:
        spec = _field(args)
        funcs = _read_batch(args.batch, spec.n)
    else:
        spec, value = _load_input(args)
        funcs = [_as_tt(value)]
    status = EXIT_OK
    for f in funcs:
        r = analyze_function(f, spec)
        if not r["equal"]:
            status = EXIT_FAIL
        _emit(
            args,
            r,
            [
                f"tt                {r['tt']}",
                f"n                 {r['n']}",
                f"weight            {r['weight']}",
                f"balanced          {str(r['balanced']).lower()}",
                f"anf_degree        {_fmt_degree(r['anf_degree'])}",
                f"univariate_degree {_fmt_degree(r['univariate_degree'])}",
                f"ai_base           {r['ai_base']}",
                f"ai_ext            {r['ai_ext']}",
                f"equal             {str(r['equal']).lower()}",
                f"witness           {r['report_base']['witness']}  ({r['report_base']['side']})",
            ],
        )
    return status


def cmd_convert(args) -> int:
    spec, value = _load_input(args)
    target = args.to
    if target in ("tt", "anf"):
        f = _as_tt(value)
        if target == "tt":
            _emit(args, {"n": f.n, "tt": f.hex()}, [f.hex()])
        else:
            anf = anf_from_tt(f)
            _emit(args, {"n": f.n, "anf": anf.monomials()}, [str(anf)])
        return EXIT_OK
    G = interpolate(value, spec) if isinstance(value, TruthTable) else value
    if target == "univariate":
        print(G.to_json())
    elif target == "multivariate-ext":
        print(to_multivariate(G, _basis(args, spec)).to_json())
    else:
        parts = decompose(G, _basis(args, spec))
        _emit(args, {"n": spec.n, "components": [p.hex() for p in parts]}, [p.hex() for p in parts])
    return EXIT_OK


def cmd_annihilators(args) -> int:
    spec, value = _load_input(args)
    f = _as_tt(value)
    if args.complement:
        f = complement(f)
    if not 0 <= args.degree <= f.n:
        raise UsageError(f"--degree must lie in [0, {f.n}]")
    mode = ann.Mode.BASE if args.mode == "base" else ann.Mode.EXTENSION
    space = ann.annihilator_space(f, args.degree, mode, spec, args.representation)
    if mode == ann.Mode.BASE:
        items = [str(g) for g in space]
    elif args.representation == "univariate":
        items = [json.loads(g.to_json()) for g in space]
    else:
        items = [g.to_dict() for g in space]
    data = {"n": f.n, "degree": args.degree, "mode": mode.value, "dimension": len(space), "basis": items}
    _emit(args, data, [f"dimension {len(space)}"] + [str(i) for i in items])
    return EXIT_OK


def cmd_pai_check(args) -> int:
    spec, value = _load_input(args)
    f = _as_tt(value)
    base = ann.is_pai(f, ann.Mode.BASE, spec)
    ext = ann.is_pai(f, ann.Mode.EXTENSION, spec)
    uni = ann.is_pai(f, ann.Mode.EXTENSION, spec, "univariate")
    agree = base == ext == uni
    data = {"n": f.n, "tt": f.hex(), "pai_base": base, "pai_ext": ext, "pai_ext_univariate": uni, "equal": agree}
    _emit(args, data, [f"{k:<19}{str(v).lower()}" for k, v in data.items()])
    return EXIT_OK if agree else EXIT_FAIL


def cmd_construct(args) -> int:
    spec = _field(args)
    try:
        f = CONSTRUCTIONS[args.name](spec.n, spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"n": f.n, "name": args.name, "tt": f.hex(), "weight": weight(f)}, [f.hex()])
    return EXIT_OK


def _read_batch(path: str, n: int) -> list[TruthTable]:
    try:
        lines = Path(path).read_text().split()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return [TruthTable.from_hex(n, line) for line in lines]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_equiv_sweep(args) -> int:
    spec = _field(args)
    n = spec.n
    if args.exhaustive:
        if n > EXHAUSTIVE_SWEEP_MAX_N:
            raise UsageError(f"--exhaustive supports n <= {EXHAUSTIVE_SWEEP_MAX_N}")
        funcs = [TruthTable.from_int(n, v) for v in range(1 << (1 << n))]
    elif args.random is not None:
        if args.seed is None:
            raise UsageError("--random requires --seed")
        if n > RANDOM_SWEEP_MAX_N or args.random < 1:
            raise UsageError(f"--random needs COUNT >= 1 and n <= {RANDOM_SWEEP_MAX_N}")
        rng = random.Random(args.seed)
        funcs = [TruthTable.random(n, rng) for _ in range(args.random)]
    else:
        funcs = _read_batch(args.batch, n)
    if args.workers < 1:
        raise UsageError("--workers must be positive")

    results = ann.equivalence_sweep(funcs, spec, pai=args.pai, workers=args.workers)
    bad = [r for r in results if not (r.equal and r.components_ok)]
    total = len(results)
    good = total - len(bad)
    label = "PAI-equivalent" if args.pai else "equal"
    summary = f"{good}/{total} {label}"
    data = {"n": n, "total": total, "ok": good, "label": label, "counterexamples": [r.f.hex() for r in bad]}
    _emit(args, data, [summary] + [f"counterexample: {r.f.hex()}" for r in bad])
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "convert": cmd_convert,
    "annihilators": cmd_annihilators,
    "equiv-sweep": cmd_equiv_sweep,
    "pai-check": cmd_pai_check,
    "construct": cmd_construct,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"boolai {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
