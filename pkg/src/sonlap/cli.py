"""Command line frontend: Laplacians, flag matrices, spectra, characters, verify.

Output is byte-deterministic for fixed flags and seed.  Exit codes: 0 on
success or a passing verification, 1 on a verification failure, 2 on usage
errors.  Rationals are printed as exact p/q strings in JSON; decimals appear
only in CSV, next to an exact sidecar column.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import flagmatrix, numeric
from .laplacian import lap, lap_partition
from .partitions import Partition, enumerate_upto
from .tracepoly import GENERAL, SO3, SO4, TracePoly

DEFAULT_SEED = numeric.DEFAULT_SEED
SEED_ENV_VAR = "SONLAP_SEED"

_MODES = {"generaln": GENERAL, "so3": SO3, "so4": SO4}


def _seed_default() -> int:
    env = os.environ.get(SEED_ENV_VAR)
    return int(env) if env else DEFAULT_SEED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sonlap",
        description="Exact Laplace-Beltrami calculus on SO(N) trace polynomials.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    lap_p = sub.add_parser("lap", help="Laplacian of a trace monomial")
    lap_p.add_argument("--mode", choices=sorted(_MODES), required=True)
    lap_p.add_argument("--partition", required=True, help='comma parts, e.g. "2,1"; "0" is empty')

    mat_p = sub.add_parser("matrix", help="flag matrix of the restricted operator")
    mat_p.add_argument("--mode", choices=["so3", "so4"], required=True)
    mat_p.add_argument("--basis", choices=["bprime", "btrace", "so4"])
    mat_p.add_argument("--k", type=int, required=True)
    mat_p.add_argument("--format", choices=["json", "csv", "latex", "pretty"], default="pretty")

    spec_p = sub.add_parser("spectrum", help="closed-form eigenvalue families")
    spec_p.add_argument("--target", choices=["so3", "so4", "sphere"], required=True)
    spec_p.add_argument("--n", type=int, help="ambient dimension (sphere target)")
    spec_p.add_argument("--bound", type=int, required=True)
    spec_p.add_argument("--format", choices=["pretty", "json"], default="pretty")

    char_p = sub.add_parser("characters", help="irreducible characters as trace polynomials")
    char_p.add_argument("--mode", choices=["so3", "so4"], required=True)
    char_p.add_argument("--k", type=int, help="SO(3) weight")
    char_p.add_argument("--j1", help="SO(4) spin, e.g. 3/2")
    char_p.add_argument("--j2", help="SO(4) spin, e.g. 1/2")
    char_p.add_argument("--format", choices=["pretty", "json"], default="pretty")

    ver_p = sub.add_parser("verify", help="seeded numeric cross-validation suites")
    ver_p.add_argument("--suite", choices=["laplacian", "gegenbauer", "identities"], required=True)
    ver_p.add_argument("--n", type=int, default=3)
    ver_p.add_argument("--k", type=int, default=4)
    ver_p.add_argument("--samples", type=int, default=20)
    ver_p.add_argument("--seed", type=int, default=None)
    ver_p.add_argument("--tol", type=float, default=None)
    return parser


def _cmd_lap(args) -> int:
    mode = _MODES[args.mode]
    part = Partition.parse(args.partition)
    if mode is GENERAL:
        result = lap_partition(part)
    else:
        reduced = TracePoly.monomial(part, 1).substitute_n(mode.n).reduce(mode)
        result = lap(reduced)
    print(result.pretty())
    print(json.dumps(result.to_json_obj(), sort_keys=True))
    return 0


def _cmd_matrix(args) -> int:
    basis = args.basis or ("bprime" if args.mode == "so3" else "so4")
    valid = {"so3": ("bprime", "btrace"), "so4": ("so4",)}
    if basis not in valid[args.mode]:
        raise ValueError(f"--basis {basis} is not valid for --mode {args.mode}")
    mode = SO3 if args.mode == "so3" else SO4
    matrix = flagmatrix.build_matrix(mode, basis, args.k)
    renderers = {
        "json": flagmatrix.matrix_to_json,
        "csv": flagmatrix.matrix_to_csv,
        "latex": flagmatrix.matrix_to_latex,
        "pretty": flagmatrix.matrix_to_pretty,
    }
    sys.stdout.write(renderers[args.format](matrix))
    if args.format == "json":
        sys.stdout.write("\n")
    return 0


def _spectrum_entry_obj(entry) -> dict:
    return {
        "eigenvalue": str(entry.eigenvalue),
        "labels": [list(l) if isinstance(l, tuple) else l for l in entry.labels],
    }


def _cmd_spectrum(args) -> int:
    if args.target == "sphere" and args.n is None:
        raise ValueError("--target sphere requires --n")
    entries = flagmatrix.spectrum_closed(args.target, args.bound, n=args.n)
    if args.format == "json":
        print(json.dumps([_spectrum_entry_obj(e) for e in entries], sort_keys=True))
        return 0
    for entry in entries:
        labels = ", ".join(str(l) for l in entry.labels)
        print(f"{entry.eigenvalue}\t[{labels}]")
    return 0


def _character_obj(character) -> dict:
    return {
        "group": character.group,
        "label": [str(x) for x in character.label],
        "eigenvalue": str(character.eigenvalue),
        "poly": character.poly.to_json_obj(),
    }


def _cmd_characters(args) -> int:
    if args.mode == "so3":
        if args.k is None:
            raise ValueError("--mode so3 requires --k")
        character = flagmatrix.character_so3(args.k)
        name = f"chi_{args.k}"
    else:
        if args.j1 is None or args.j2 is None:
            raise ValueError("--mode so4 requires --j1 and --j2")
        j1, j2 = Fraction(args.j1), Fraction(args.j2)
        character = flagmatrix.character_so4(j1, j2)
        name = f"chi_({j1},{j2})"
    if args.format == "json":
        print(json.dumps(_character_obj(character), sort_keys=True))
        return 0
    print(f"{name}: eigenvalue {character.eigenvalue}")
    print(character.poly.pretty())
    if character.alt is not None:
        print(f"trace form: {character.alt.pretty()}")
    return 0


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _seed_default()
    reports = []
    if args.suite == "laplacian":
        tol = args.tol if args.tol is not None else 1e-8
        for part in enumerate_upto(args.k):
            reports.append(
                numeric.verify_partition(args.n, part, samples=args.samples, seed=seed, tol=tol)
            )
    elif args.suite == "gegenbauer":
        tol = args.tol if args.tol is not None else 1e-8
        positions = ((1, 1), (max(1, args.n // 2), args.n))
        for k in range(args.k + 1):
            for i, j in positions:
                reports.append(
                    numeric.verify_gegenbauer(
                        args.n, k, i, j, samples=args.samples, seed=seed, tol=tol
                    )
                )
    else:
        reports.extend(
            numeric.verify_identities(args.n, samples=args.samples, seed=seed, tol=args.tol)
        )
    print(json.dumps([r.to_json_obj() for r in reports], sort_keys=True))
    return 0 if all(r.passed for r in reports) else 1


_DISPATCH = {
    "lap": _cmd_lap,
    "matrix": _cmd_matrix,
    "spectrum": _cmd_spectrum,
    "characters": _cmd_characters,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _DISPATCH[args.verb](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
