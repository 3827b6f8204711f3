"""Command line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from .algebra import parse_generator
from .checks import (
    contravariance_suite,
    degree_suite,
    grading_suite,
    homomorphism_suite,
    intertwining_suite,
    kernel_suite,
    local_finiteness_suite,
    module_axiom_suite,
    unitarity_suite,
)
from .coherent import CoherentStateMap
from .polynomial import as_scalar
from .realization import Realization
from .report import character_report, dumps, render_table
from .verma import GeneralizedVermaModule, WVector, render_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(Exception):
    pass


def _rational(text: str):
    try:
        return as_scalar(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} ({exc})")


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=_nonneg, default=0, help="highest sl(2) weight")
    common.add_argument("--c", type=_rational, default=as_scalar(1), help="level, e.g. 1 or 5/2")
    common.add_argument("--degree", "-D", type=_nonneg, default=3, help="depth / degree bound")
    common.add_argument("--d0", type=_rational, default=as_scalar(0), help="eigenvalue of d on V0")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=_nonneg, default=1, help="worker processes")
    common.add_argument("--cap", type=_nonneg, default=2000, help="max weight-space dimension")

    parser = argparse.ArgumentParser(prog="affine-vcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    v.add_argument("--modes", type=_nonneg, default=3, help="generator modes in [-m, m]")
    v.add_argument("--samples", type=_nonneg, default=200, help="random intertwining pairs")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--literal-h-neg", action="store_true",
                   help="use xi(h[-k]) with the extra x_k factor (expected to fail)")

    sub.add_parser("character", parents=[common], help="dim W and Gram rank per weight space")
    sub.add_parser("singular", parents=[common], help="Gram kernel vectors per weight space")

    r = sub.add_parser("realize", parents=[common], help="print xi(generator) up to degree D")
    r.add_argument("generator", help='e.g. "e[-2]", "h[0]", kappa, d')

    m = sub.add_parser("map", parents=[common], help="coherent-state images")
    m.add_argument("--word", help='PBW word such as "e[-1] e[-1]"; omit for the rank table')
    m.add_argument("--j", type=_nonneg, default=0, help="V0 basis index for --word")
    return parser


def _check_cap(module: GeneralizedVermaModule, depth: int, cap: int) -> None:
    for key in module.weight_keys(depth):
        n = len(module.weight_basis(key))
        if n > cap:
            raise ConfigError(
                f"weight space (weight {key.weight}, depth {key.depth}) has dimension {n} > cap {cap}")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _integrable(lam: int, c) -> bool:
    k = c - lam
    return k >= 0 and k.denominator == 1


def cmd_verify(args) -> int:
    lam, c, D = args.lam, args.c, args.degree
    module = GeneralizedVermaModule(lam, c)
    _check_cap(module, D, args.cap)
    cmap = CoherentStateMap(lam, c, args.d0, module=module)
    depth = min(D, 3)
    started = time.perf_counter()
    results = [
        homomorphism_suite(lam, c, D, args.modes, args.d0, args.literal_h_neg, max(args.jobs, 1)),
        grading_suite(lam, c, args.d0, D, args.modes),
        degree_suite(lam, c, D, args.modes),
        intertwining_suite(lam, c, args.samples, depth, args.modes, args.seed, cmap=cmap),
        kernel_suite(lam, c, D, cmap=cmap),
        contravariance_suite(lam, c, depth, min(args.modes, 2), module=module),
        module_axiom_suite(lam, c, depth, min(args.modes, 2), module=module),
        local_finiteness_suite(lam, c, depth, args.modes, module=module),
    ]
    if _integrable(lam, c):
        results.append(unitarity_suite(lam, c, D, module=module))
    elapsed = time.perf_counter() - started
    failures = [f for r in results for f in r.failures]
    if args.format == "json":
        report = {"lambda": lam, "c": str(c), "D": D, "d0": str(args.d0),
                  "literal_h_neg": args.literal_h_neg, "seconds": round(elapsed, 2),
                  "checks": [r.as_dict() for r in results], "failures": failures}
        _emit(args, dumps(report))
    else:
        lines = [f"lambda={lam} c={c} D={D} d0={args.d0}"]
        lines += [r.line() for r in results]
        lines += [f"  {f}" for f in failures]
        lines.append(("PASS" if not failures else "FAIL") + f" ({elapsed:.1f}s)")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_character(args) -> int:
    module = GeneralizedVermaModule(args.lam, args.c)
    _check_cap(module, args.degree, args.cap)
    report = character_report(args.lam, args.c, args.degree, module.character_table(args.degree))
    _emit(args, dumps(report) if args.format == "json" else render_table(report))
    return EXIT_OK


def cmd_singular(args) -> int:
    module = GeneralizedVermaModule(args.lam, args.c)
    _check_cap(module, args.degree, args.cap)
    cmap = CoherentStateMap(args.lam, args.c, module=module)
    blocks = []
    ok = True
    for key in module.weight_keys(args.degree):
        vectors = module.singular_vectors(key)
        if not vectors:
            continue
        checks = [cmap.kernel_check(v) for v in vectors]
        ok = ok and all(checks)
        blocks.append({"weight": key.weight, "depth": key.depth,
                       "vectors": [str(v) for v in vectors], "kernel_check": checks})
    if args.format == "json":
        _emit(args, dumps({"lambda": args.lam, "c": str(args.c), "D": args.degree, "singular": blocks}))
    else:
        lines = [f"lambda={args.lam} c={args.c} D={args.degree}"]
        if not blocks:
            lines.append("no singular vectors")
        for b in blocks:
            for v, chk in zip(b["vectors"], b["kernel_check"]):
                lines.append(f"weight {b['weight']:>3} depth {b['depth']}: {v}"
                             f"  [maps to 0: {'yes' if chk else 'NO'}]")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_realize(args) -> int:
    try:
        gen = parse_generator(args.generator)
    except ValueError as exc:
        raise ConfigError(str(exc))
    op = Realization(args.lam, args.c, args.d0).operator(gen, args.degree)
    text = op.render()
    if args.format == "json":
        _emit(args, dumps({"generator": str(gen), "lambda": args.lam, "c": str(args.c),
                           "d0": str(args.d0), "D": args.degree, "operator": text}))
    else:
        _emit(args, f"xi({gen}) = {text}\n")
    return EXIT_OK


def _parse_word(text: str):
    factors = []
    for token in text.replace("*", " ").split():
        power = 1
        if "^" in token:
            token, p = token.split("^")
            power = int(p)
        g = parse_generator(token)
        if g.family not in ("e", "h", "f") or g.mode >= 0:
            raise ValueError(f"{g} is not a negative-mode generator")
        factors.extend([g] * power)
    return factors


def cmd_map(args) -> int:
    module = GeneralizedVermaModule(args.lam, args.c)
    cmap = CoherentStateMap(args.lam, args.c, args.d0, module=module)
    if args.word:
        try:
            factors = _parse_word(args.word)
        except ValueError as exc:
            raise ConfigError(str(exc))
        if args.j > args.lam:
            raise ConfigError(f"--j must be <= lambda ({args.lam})")
        w = module.act_word(factors, WVector.basis((), args.j))
        image = cmap.coherent_state_map(w)
        if args.format == "json":
            _emit(args, dumps({"lambda": args.lam, "c": str(args.c), "w": str(w),
                               "image": [str(p) for p in image.comps]}))
        else:
            label = render_word(tuple(factors)) if factors else "1"
            _emit(args, f"w = {label} ⊗ w_{args.j} = {w}\nxi_w = {image}\n")
        return EXIT_OK
    _check_cap(module, args.degree, args.cap)
    table = module.character_table(args.degree)
    images = {key: len(cmap.image_basis(key)) for key in table}
    report = character_report(args.lam, args.c, args.degree, table, images)
    _emit(args, dumps(report) if args.format == "json" else render_table(report))
    mismatch = any(table[k][1] != images[k] for k in table)
    return EXIT_FAIL if mismatch else EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "character": cmd_character,
    "singular": cmd_singular,
    "realize": cmd_realize,
    "map": cmd_map,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
