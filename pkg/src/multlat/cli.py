"""Command-line front end.

Subcommands: validate, classify, verify, hunt, export-dot.  Exit codes are a
stable scripting contract: 0 success, 1 semantic failure (axiom violations,
theorem violations, empty hunt), 2 usage or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import ClassificationReport, classification_report
from .constructions import (
    LatticeFormatError,
    LatticeValidationError,
    boolean_frame,
    chain_frame,
    default_corpus,
    parse_lattice,
    to_dot,
    zn_ideal_lattice,
)
from .harness import HarnessConfig, hunt, run_all
from .lattice import FiniteMultiplicativeLattice, validate
from .maps import MapValidationError, make_delta, make_phi, parse_map_table


class CliError(Exception):
    """Usage-level failure; reported on stderr with exit code 2."""


def _add_source_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--zn", type=int, metavar="N", help="ideal lattice of Z mod N")
    sub.add_argument("--chain", type=int, metavar="K", help="chain of K+1 elements")
    sub.add_argument("--boolean", type=int, metavar="K", help="powerset of K atoms")
    sub.add_argument("--file", metavar="PATH", help="lattice file")


def _resolve_lattice(args: argparse.Namespace) -> FiniteMultiplicativeLattice:
    picked = [
        spec
        for spec in (
            ("zn", args.zn),
            ("chain", args.chain),
            ("boolean", args.boolean),
            ("file", args.file),
        )
        if spec[1] is not None
    ]
    if len(picked) != 1:
        raise CliError("exactly one of --zn/--chain/--boolean/--file is required")
    which, value = picked[0]
    try:
        if which == "zn":
            return zn_ideal_lattice(value)
        if which == "chain":
            return chain_frame(value)
        if which == "boolean":
            return boolean_frame(value)
        return parse_lattice(Path(value).read_text())
    except LatticeValidationError:
        raise
    except (ValueError, OSError) as exc:
        raise CliError(str(exc)) from exc


def _resolve_delta(L: FiniteMultiplicativeLattice, spec: str):
    try:
        if spec in ("d0", "d1"):
            return make_delta(L, spec)
        if spec.startswith("file:"):
            table = parse_map_table(Path(spec[5:]).read_text(), L)
            return make_delta(L, "table", table=table)
    except (ValueError, MapValidationError, OSError) as exc:
        raise CliError(f"bad delta spec {spec!r}: {exc}") from exc
    raise CliError(f"bad delta spec {spec!r} (want d0 | d1 | file:PATH)")


def _resolve_phi(L: FiniteMultiplicativeLattice, spec: str):
    try:
        if spec == "omega":
            return make_phi(L, "phiomega")
        if spec.startswith("file:"):
            table = parse_map_table(Path(spec[5:]).read_text(), L)
            return make_phi(L, "table", table=table)
        if spec.startswith("n:"):
            k = int(spec[2:])
        else:
            k = int(spec)
        return make_phi(L, f"phi{k}")
    except (ValueError, MapValidationError, OSError) as exc:
        raise CliError(
            f"bad phi spec {spec!r} (want 0 | 1 | 2 | n:<k> | omega | file:PATH): {exc}"
        ) from exc


def _emit(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _build_corpus(args: argparse.Namespace):
    corpus = default_corpus()
    if args.corpus != "default":
        raise CliError(f"unknown corpus {args.corpus!r}")
    try:
        for n in args.add_zn or ():
            corpus = corpus.extended(zn_ideal_lattice(n), "command-line addition")
        for path in args.add_file or ():
            corpus = corpus.extended(
                parse_lattice(Path(path).read_text()), f"file {path}"
            )
    except (ValueError, OSError) as exc:
        raise CliError(str(exc)) from exc
    return corpus


# -- subcommands ---------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        L = _resolve_lattice(args)
    except LatticeValidationError as exc:
        print(f"INVALID: {exc}", file=sys.stderr)
        return 1
    report = validate(L)
    print(f"{L.name}: {'ok' if report.ok else 'INVALID'}")
    if not report.ok:
        for line in report.describe(L):
            print(f"  {line}")
        return 1
    return 0


_FLAG_COLUMNS = [
    ("prime", "prime"),
    ("primary", "primary"),
    ("delta_primary", "d-primary"),
    ("weakly_delta_primary", "w-d-prim"),
    ("phi_prime", "phi-prime"),
    ("phi_primary", "phi-primary"),
    ("phi_delta_primary", "phi-d-prim"),
    ("2_potent_delta_primary", "2-potent"),
    ("3_potent_delta_primary", "3-potent"),
    ("4_potent_delta_primary", "4-potent"),
    ("2_potent_d0_primary", "2-pot-d0"),
    ("idempotent", "idem"),
]


def _classification_table(report: ClassificationReport) -> str:
    width = max(len(r.element) for r in report.records)
    width = max(width, len("element"))
    header = f"{'element':<{width}} " + " ".join(h for _, h in _FLAG_COLUMNS)
    lines = [
        f"lattice {report.lattice}  delta={report.delta}  phi={report.phi}",
        header,
        "-" * len(header),
    ]
    for rec in report.records:
        cells = []
        for key, head in _FLAG_COLUMNS:
            mark = "Y" if rec.flags[key] else "."
            cells.append(f"{mark:^{len(head)}}")
        lines.append(f"{rec.element:<{width}} " + " ".join(cells))
    witness_lines = []
    for rec in report.records:
        for key, _ in _FLAG_COLUMNS:
            pair = rec.witnesses.get(key)
            if pair:
                witness_lines.append(
                    f"  {rec.element} fails {key.replace('_', '-')}: "
                    f"({pair[0]}, {pair[1]})"
                )
    if witness_lines:
        lines.append("witnesses:")
        lines.extend(witness_lines)
    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    L = _resolve_lattice(args)
    delta = _resolve_delta(L, args.delta)
    phi = _resolve_phi(L, args.phi)
    report = classification_report(L, delta, phi)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), args)
    else:
        _emit(_classification_table(report), args)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    corpus = _build_corpus(args)
    expected = () if args.expect_vacuous == ["none"] else tuple(args.expect_vacuous)
    config = HarnessConfig(witness_cap=args.witness_cap, expected_vacuous=expected)
    report = run_all(corpus, config)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), args)
    else:
        lines = [report.text_table()]
        for r in report.results:
            for w in r.witnesses:
                lines.append(f"violation {w.to_dict()}")
        unexpected = report.unexpected_vacuous(expected)
        if unexpected:
            lines.append("unexpectedly vacuous: " + ", ".join(unexpected))
        _emit("\n".join(lines), args)
    return 0 if report.ok(expected) else 1


def cmd_hunt(args: argparse.Namespace) -> int:
    corpus = _build_corpus(args)
    try:
        hits = hunt(args.have, args.lack, corpus)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps([h.to_dict() for h in hits], indent=2, sort_keys=True), args)
    else:
        if not hits:
            _emit("no elements found", args)
        else:
            lines = [
                f"{h.lattice} {h.element} lacks {h.lacking}"
                + (f" (pair {h.pair[0]}, {h.pair[1]})" if h.pair else "")
                for h in hits
            ]
            _emit("\n".join(lines), args)
    return 0 if hits else 1


def cmd_export_dot(args: argparse.Namespace) -> int:
    L = _resolve_lattice(args)
    _emit(to_dot(L), args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multlat",
        description="Finite multiplicative lattices: validation, phi-delta-"
        "primary classification, theorem verification, counterexample hunting.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="check the multiplicative-lattice axioms")
    _add_source_flags(p)
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("classify", help="per-element classification table")
    _add_source_flags(p)
    p.add_argument("--delta", default="d1", help="d0 | d1 | file:PATH")
    p.add_argument("--phi", default="2", help="0 | 1 | 2 | n:<k> | omega | file:PATH")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--output", metavar="PATH", help="write the report to a file")
    p.set_defaults(func=cmd_classify)

    for name, help_text in (
        ("verify", "run the theorem suite over a corpus"),
        ("hunt", "find elements separating two predicate classes"),
    ):
        p = subs.add_parser(name, help=help_text)
        p.add_argument("--corpus", default="default", help="corpus name (default)")
        p.add_argument(
            "--add-zn", type=int, action="append", metavar="N", help="extend the corpus"
        )
        p.add_argument(
            "--add-file", action="append", metavar="PATH", help="extend the corpus"
        )
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--output", metavar="PATH", help="write the report to a file")
        if name == "verify":
            p.add_argument("--witness-cap", type=int, default=10)
            p.add_argument(
                "--expect-vacuous",
                nargs="*",
                default=["T12"],
                metavar="ID",
                help="property ids allowed to be vacuous ('none' to allow none)",
            )
            p.set_defaults(func=cmd_verify)
        else:
            p.add_argument(
                "--have",
                action="append",
                required=True,
                metavar="PRED",
                help="predicate the element must satisfy (repeatable)",
            )
            p.add_argument(
                "--lack", required=True, metavar="PRED", help="predicate it must fail"
            )
            p.set_defaults(func=cmd_hunt)

    p = subs.add_parser("export-dot", help="emit the Hasse diagram as Graphviz DOT")
    _add_source_flags(p)
    p.add_argument("--output", metavar="PATH", help="write the DOT text to a file")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LatticeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
