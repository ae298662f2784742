"""Command-line front end: enumeration, spectra, bounds, and verification."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from .graphs import GraphError, from_graph6, to_graph6
from .spectral import ConvergenceError, SpectralError, perron_enclosure
from .triangulations import (
    TriangulationError,
    enumerate_classes,
    format_native,
    to_graph,
)
from .verifier import VerificationError, emit_reports, verify_range

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXPECTATION_FAILED = 2

# Published reference values the tool checks itself against.
EXPECTED_CLASS_COUNTS = {6: 3, 7: 4, 8: 12, 9: 27, 10: 82, 11: 228, 12: 733, 13: 2282}
EXTENDED_COUNT_CEILINGS = {14: 29666, 15: 415324, 16: 6229860}
EXPECTED_EXCEPTIONS = frozenset({6})
EXPECTED_LAMBDA_N6 = {"extremal": 3.2361, "fan": 3.2227}
LAMBDA_DISPLAY_TOL = 5e-4


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1; code 2 is reserved for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    def __init__(self, message):
        super().__init__(message)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _build_parser() -> _Parser:
    parser = _Parser(prog="mopspectral")
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("MOPSPECTRAL_THREADS", "0")),
        help="worker count, 0 = auto; results are identical for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="class representatives of order n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "native"], default="graph6")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="extremal verification over an order range")
    p.add_argument("-n", dest="range", required=True, help="order or lo..hi")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--report")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("table1", help="class counts vs the published table")
    p.add_argument("--max-n", type=int, default=16)

    p = sub.add_parser("spectral", help="Perron enclosure of a graph6 graph")
    p.add_argument("--graph6", help="graph6 string; stdin when omitted")
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("bounds", help="bound catalog over an order range")
    p.add_argument("-n", dest="range", required=True, help="order or lo..hi")

    return parser


def _write(path: str | None, data: bytes) -> None:
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _cmd_enumerate(args) -> int:
    reps = enumerate_classes(args.n)
    if args.format == "graph6":
        lines = [to_graph6(to_graph(t)) for t in reps]
        payload = b"\n".join(lines) + b"\n"
    else:
        payload = ("\n".join(format_native(t) for t in reps) + "\n").encode()
    _write(args.output, payload)
    return EXIT_OK


def _check_reports(reports) -> list[str]:
    problems = []
    for rep in reports:
        expected_holds = rep.n not in EXPECTED_EXCEPTIONS
        if rep.conjecture_holds != expected_holds:
            problems.append(
                f"n={rep.n}: conjecture_holds={rep.conjecture_holds}, "
                f"expected {expected_holds}"
            )
        want = EXPECTED_CLASS_COUNTS.get(rep.n)
        if want is not None and rep.class_count != want:
            problems.append(
                f"n={rep.n}: class count {rep.class_count}, expected {want}"
            )
        ceiling = EXTENDED_COUNT_CEILINGS.get(rep.n)
        if ceiling is not None and rep.class_count > ceiling:
            problems.append(
                f"n={rep.n}: class count {rep.class_count} above ceiling {ceiling}"
            )
        if rep.n == 6:
            mid_ext = rep.lambda_extremal.midpoint
            mid_fan = rep.lambda_fan.midpoint
            if abs(mid_ext - EXPECTED_LAMBDA_N6["extremal"]) > LAMBDA_DISPLAY_TOL:
                problems.append(f"n=6: extremal radius {mid_ext:.4f} off published value")
            if abs(mid_fan - EXPECTED_LAMBDA_N6["fan"]) > LAMBDA_DISPLAY_TOL:
                problems.append(f"n=6: fan radius {mid_fan:.4f} off published value")
    return problems


def _cmd_verify(args) -> int:
    lo, hi = _parse_range(args.range)
    reports = verify_range(lo, hi, args.tol)
    _write(args.report, emit_reports(reports, args.format))
    counts = " ".join(str(r.class_count) for r in reports)
    print(f"\nS(n) for n={lo}..{hi}: {counts}", file=sys.stderr)
    problems = _check_reports(reports)
    for msg in problems:
        print(f"CHECK FAILED: {msg}", file=sys.stderr)
    return EXIT_EXPECTATION_FAILED if problems else EXIT_OK


def _cmd_table1(args) -> int:
    failures = []
    cells = []
    for n in range(6, min(args.max_n, 13) + 1):
        count = len(enumerate_classes(n))
        cells.append((n, str(count)))
        if count != EXPECTED_CLASS_COUNTS[n]:
            failures.append(
                f"S({n}) = {count}, published value {EXPECTED_CLASS_COUNTS[n]}"
            )
    for n in range(14, args.max_n + 1):
        if n not in EXTENDED_COUNT_CEILINGS:
            break
        count = len(enumerate_classes(n))
        ceiling = EXTENDED_COUNT_CEILINGS[n]
        cells.append((n, f"{count} (<= {ceiling})"))
        if count > ceiling:
            failures.append(f"S({n}) = {count} exceeds published ceiling {ceiling}")
    print("n    : " + " ".join(str(n) for n, _ in cells))
    print("S(n) : " + " ".join(v for _, v in cells))
    if failures:
        for msg in failures:
            print(f"CHECK FAILED: {msg}", file=sys.stderr)
        return EXIT_EXPECTATION_FAILED
    return EXIT_OK


def _cmd_spectral(args) -> int:
    text = args.graph6 if args.graph6 is not None else sys.stdin.read().strip()
    enc = perron_enclosure(from_graph6(text), tol=args.tol)
    payload = {
        "lower": float(f"{enc.lower:.12g}"),
        "upper": float(f"{enc.upper:.12g}"),
        "vector": [float(f"{x:.12g}") for x in enc.vector],
        "iterations": enc.iterations,
    }
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    lo, hi = _parse_range(args.range)
    if lo < 3:
        raise ValueError("bounds table starts at n = 3")
    names = ["hong_1988", "cao_vince_1993", "hong_1995", "ellingham_zha_2000"]
    header = ["n", "shu_hong", "claim1_lower", *names, "ineq4_coeff", "above_2+sqrt7"]
    print("  ".join(f"{h:>18}" for h in header))
    for n in range(lo, hi + 1):
        catalog = bounds_mod.planar_bound_catalog(n)
        row = [
            str(n),
            f"{bounds_mod.shu_hong(n):.4f}",
            f"{bounds_mod.claim1_lower(n):.4f}",
            *(f"{catalog[k]:.4f}" for k in names),
            f"{bounds_mod.inequality4_coefficient(n):.4f}",
            str(bounds_mod.claim5_threshold(n)),
        ]
        print("  ".join(f"{c:>18}" for c in row))
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "table1": _cmd_table1,
    "spectral": _cmd_spectral,
    "bounds": _cmd_bounds,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 0:
            raise ValueError("--threads must be >= 0")
        return _COMMANDS[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (
        GraphError,
        TriangulationError,
        SpectralError,
        ConvergenceError,
        VerificationError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
