"""Command-line surface: ingest a matroid spec as JSON, report on it, list
separations, decompose it, or run the verification suites.

Exit codes: 0 ok, 1 lemma/verification failure, 2 parse or axiom error,
3 disconnected, 4 too small, 5 over the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connectivity import enumerate_separations, is_n_connected
from .decomposition import build_tree
from .errors import (
    AxiomViolation,
    Disconnected,
    DuplicateElement,
    GroundSetMismatch,
    GroundSetTooLarge,
    InvalidMatrix,
    InvalidParams,
    LemmaFailure,
    MatroidError,
    TooSmall,
    UnknownVertex,
)
from .kernel import Matroid, ValidationLevel, from_circuits, graphic, linear_gf2, uniform, validate
from .report import decomposition_report, render_figure, report_to_json, to_dot
from .separations import is_good
from .suites import run_all_suites, run_duality_suite, run_localization_suite, \
    run_decomposition_suite, run_separation_lemma_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_TOO_SMALL = 4
EXIT_OVER_CAP = 5


class SpecError(Exception):
    pass


def parse_spec(data, level: ValidationLevel, cap: int | None) -> Matroid:
    """Build a matroid from a spec dictionary; labels stay as given."""
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    if "dual" in data:
        if len(data) != 1:
            raise SpecError('the "dual" wrapper takes no other fields')
        return parse_spec(data["dual"], level, cap).dual(cap)
    kind = data.get("kind")
    if kind == "uniform":
        m = uniform(int(data["r"]), int(data["n"]))
    elif kind == "graphic":
        edges = [tuple(e) for e in data["edges"]]
        for e in edges:
            if len(e) != 2:
                raise SpecError(f"edge {e!r} must have two endpoints")
        m = graphic(data["vertices"], edges, cap)
    elif kind == "gf2":
        m = linear_gf2(data["columns"], cap)
    elif kind == "circuits":
        ground = data["ground"]
        if any(isinstance(x, str) and x.startswith("@") for x in ground):
            raise SpecError('labels starting with "@" are reserved for virtual elements')
        return from_circuits(ground, data["circuits"], level)
    else:
        raise SpecError(f"unknown spec kind {kind!r}")
    validate(m, level)
    return m


def _load(path: str, level: ValidationLevel, cap: int | None) -> Matroid:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_spec(json.loads(text), level, cap)


def cmd_info(m: Matroid, args) -> int:
    payload = {
        "ground size": m.n,
        "rank": m.rank(),
        "circuits": len(m.circuits),
        "connected": m.is_connected(),
        "3-connected": is_n_connected(m, 3, args.cap),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for key, value in payload.items():
            value = str(value).lower() if isinstance(value, bool) else value
            sys.stdout.write(f"{key}: {value}\n")
    return EXIT_OK


def cmd_separations(m: Matroid, args) -> int:
    seps = enumerate_separations(m, args.k, args.cap)
    if args.good_only:
        seps = [s for s in seps if is_good(m, s, seps)]
    out = [
        {
            "side_a": [str(x) for x in m.sorted_labels(s.side_a)],
            "side_b": [str(x) for x in m.sorted_labels(s.side_b)],
            "order": s.order,
        }
        for s in seps
    ]
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def cmd_decompose(m: Matroid, args) -> int:
    tree = build_tree(m, args.cap)
    if args.format == "dot":
        sys.stdout.write(to_dot(tree))
    else:
        sys.stdout.write(report_to_json(decomposition_report(tree)))
    if args.figure:
        render_figure(tree, args.figure)
        sys.stderr.write(f"figure written to {args.figure}\n")
    return EXIT_OK


def cmd_verify(m: Matroid, args) -> int:
    if args.suite == "lemmas":
        reports = [run_separation_lemma_suite(m), run_localization_suite(m),
                   run_decomposition_suite(m)]
    elif args.suite == "duality":
        reports = [run_duality_suite(m, seed=args.seed)]
    else:
        reports = run_all_suites(m, seed=args.seed)
    ok = True
    for report in reports:
        for line in report.lines():
            sys.stdout.write(line + "\n")
        ok = ok and report.passed
    sys.stdout.write("result: " + ("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matdecomp",
        description="Canonical 2-separation tree-decompositions of finite matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="path to a JSON matroid spec, or - for stdin")
        p.add_argument("--cap", type=int, default=None,
                       help="subset-enumeration cap (default 14)")
        p.add_argument("--validate", choices=["none", "antichain", "full"],
                       default="full", help="validation level for ingested circuits")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = sub.add_parser("info", help="ground size, rank, connectivity")
    common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("separations", help="list separations of a given order")
    common(p)
    p.add_argument("--k", type=int, default=2, help="separation order (default 2)")
    p.add_argument("--good-only", action="store_true",
                   help="keep only separations nested with all others")
    p.set_defaults(func=cmd_separations)

    p = sub.add_parser("decompose", help="canonical tree-decomposition")
    common(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--figure", default=None, metavar="PATH",
                   help="also render the tree to an image file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the verification suites")
    common(p)
    p.add_argument("--suite", choices=["lemmas", "duality", "all"], default="all")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = ValidationLevel(args.validate)
    try:
        m = _load(args.spec, level, args.cap)
    except (SpecError, json.JSONDecodeError, OSError, KeyError, TypeError, ValueError,
            AxiomViolation, DuplicateElement, UnknownVertex, InvalidMatrix, InvalidParams,
            GroundSetMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except GroundSetTooLarge as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_OVER_CAP
    try:
        return args.func(m, args)
    except Disconnected as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DISCONNECTED
    except TooSmall as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_TOO_SMALL
    except GroundSetTooLarge as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_OVER_CAP
    except LemmaFailure as exc:
        sys.stderr.write(f"lemma failure: {exc}\n")
        return EXIT_VERIFY
    except MatroidError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
