"""Per-order extremality verification and structural analysis of the winners."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass

import numpy as np

from .graphs import SmallGraph, fan_graph
from .spectral import (
    BOUND_SLACK,
    Comparison,
    SpectralEnclosure,
    adjacency_matrix,
    enclose_batch,
    exact_compare,
    perron_enclosure,
)
from .triangulations import (
    MAX_ENUM_ORDER,
    TriangulationError,
    canonical_code,
    enumerate_classes,
    fan_triangulation,
    to_graph,
)

COARSE_TOL = 1e-8
SHORTLIST_SLACK = 1e-6
REFINE_TOL = 1e-12

MAXIMALITY_NOTE = (
    "Only edge-maximal outerplanar graphs are scanned: adding an edge to a "
    "connected graph strictly increases the spectral radius, so every "
    "non-maximal outerplanar graph is spectrally dominated by some maximal "
    "one on the same vertex set."
)


class VerificationError(RuntimeError):
    """An unresolvable state, e.g. an exact tie between two top classes."""


@dataclass(frozen=True)
class NReport:
    """Verification record for one order."""

    n: int
    raw_count: int
    class_count: int
    extremal_code: bytes
    lambda_extremal: SpectralEnclosure
    lambda_fan: SpectralEnclosure
    conjecture_holds: bool
    margin: float
    runtime_ms: int
    note: str = MAXIMALITY_NOTE


@dataclass(frozen=True)
class ExtremalStructure:
    """Decomposition around the vertex with the largest Perron entry."""

    u: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    S: tuple[int, ...]
    components_of_B: tuple[tuple[int, ...], ...]
    d_u: int
    neighborhood_is_path_union: bool
    neighborhood_is_single_path: bool
    rest_is_empty: bool


def code_to_native(code: bytes) -> str:
    """Render a canonical code in the ``n:i-j,...`` text form."""
    n = code[0]
    pairs = [f"{code[k]}-{code[k + 1]}" for k in range(1, len(code), 2)]
    return f"{n}:" + ",".join(pairs)


def _fan_code(n: int) -> bytes:
    return canonical_code(fan_triangulation(n))


def verify_n(n: int, tol: float = 1e-10) -> NReport:
    """Find the spectrally extremal class of order n by certified comparison."""
    start = time.perf_counter()
    if not 2 <= n <= MAX_ENUM_ORDER:
        raise TriangulationError(f"n must be in 2..{MAX_ENUM_ORDER}, got {n}")
    refine_tol = min(tol, REFINE_TOL)
    if n == 2:
        enc = perron_enclosure(fan_graph(2), refine_tol)
        ms = int((time.perf_counter() - start) * 1000)
        return NReport(2, 1, 1, bytes([2]), enc, enc, True, 0.0, ms)

    reps = enumerate_classes(n)
    codes = [canonical_code(t) for t in reps]
    graphs = [to_graph(t) for t in reps]
    raw_count = math.comb(2 * (n - 2), n - 2) // (n - 1)

    mats = np.stack([adjacency_matrix(g) for g in graphs])
    lower, upper = enclose_batch(mats, COARSE_TOL)
    cutoff = upper.max() - SHORTLIST_SLACK
    shortlist = [i for i in range(len(reps)) if upper[i] >= cutoff]
    refined = {i: perron_enclosure(graphs[i], refine_tol) for i in shortlist}
    for i, enc in refined.items():
        lower[i] = enc.lower
        upper[i] = enc.upper

    winner = max(shortlist, key=lambda i: (upper[i], codes[i]))
    if len(reps) == 1:
        margin = 0.0
    else:
        runner_upper = max(upper[i] for i in range(len(reps)) if i != winner)
        margin = float(lower[winner] - runner_upper) - 2 * BOUND_SLACK
        if margin <= 0.0:
            runner = max(
                (i for i in shortlist if i != winner), key=lambda i: upper[i]
            )
            outcome = exact_compare(graphs[winner], graphs[runner])
            if outcome is Comparison.EQUAL:
                raise VerificationError(
                    f"exact tie between classes {code_to_native(codes[winner])} "
                    f"and {code_to_native(codes[runner])} at n={n}"
                )
            if outcome is Comparison.LESS:
                winner = runner
            margin = math.nextafter(0.0, 1.0)

    fan_code = _fan_code(n)
    lambda_fan = (
        refined[winner]
        if codes[winner] == fan_code
        else perron_enclosure(fan_graph(n), refine_tol)
    )
    ms = int((time.perf_counter() - start) * 1000)
    return NReport(
        n=n,
        raw_count=raw_count,
        class_count=len(reps),
        extremal_code=codes[winner],
        lambda_extremal=refined[winner],
        lambda_fan=lambda_fan,
        conjecture_holds=codes[winner] == fan_code,
        margin=margin,
        runtime_ms=ms,
    )


def verify_range(lo: int, hi: int, tol: float = 1e-10) -> list[NReport]:
    if not 2 <= lo <= hi <= MAX_ENUM_ORDER:
        raise TriangulationError(f"range {lo}..{hi} outside 2..{MAX_ENUM_ORDER}")
    return [verify_n(n, tol) for n in range(lo, hi + 1)]


def analyze_extremal(g: SmallGraph, tol: float = 1e-10) -> ExtremalStructure:
    """Decompose g around the max Perron entry and test the path/emptiness
    structure that characterizes the winning graphs."""
    n = g.order
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.edge_count != 2 * n - 3:
        raise ValueError("graph is not edge-maximal outerplanar")
    enc = perron_enclosure(g, tol)
    u = max(range(n), key=lambda v: (enc.vector[v], -v))
    a_mask = g.adjacency[u]
    a = [v for v in range(n) if (a_mask >> v) & 1]
    b = [v for v in range(n) if v != u and not (a_mask >> v) & 1]
    inner_deg = {v: (g.adjacency[v] & a_mask).bit_count() for v in a}
    s = tuple(v for v in a if inner_deg[v] == 1)

    def components(vertices: list[int]) -> tuple[tuple[int, ...], ...]:
        pool = set(vertices)
        comps = []
        while pool:
            seed = min(pool)
            comp = {seed}
            frontier = [seed]
            while frontier:
                v = frontier.pop()
                m = g.adjacency[v]
                for w in list(pool):
                    if (m >> w) & 1 and w not in comp:
                        comp.add(w)
                        frontier.append(w)
            pool -= comp
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    a_comps = components(a)
    edges_in_a = sum(inner_deg.values()) // 2
    acyclic = edges_in_a == len(a) - len(a_comps)
    path_union = acyclic and all(d <= 2 for d in inner_deg.values())
    return ExtremalStructure(
        u=u,
        A=tuple(a),
        B=tuple(b),
        S=s,
        components_of_B=components(b),
        d_u=len(a),
        neighborhood_is_path_union=path_union,
        neighborhood_is_single_path=path_union and len(a_comps) == 1,
        rest_is_empty=not b,
    )


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _report_dict(r: NReport) -> dict:
    return {
        "n": r.n,
        "raw_count": r.raw_count,
        "class_count": r.class_count,
        "extremal_code": code_to_native(r.extremal_code),
        "lambda_extremal": {
            "lower": _sig12(r.lambda_extremal.lower),
            "upper": _sig12(r.lambda_extremal.upper),
        },
        "lambda_fan": {
            "lower": _sig12(r.lambda_fan.lower),
            "upper": _sig12(r.lambda_fan.upper),
        },
        "conjecture_holds": r.conjecture_holds,
        "margin": _sig12(r.margin),
        "runtime_ms": r.runtime_ms,
        "note": r.note,
    }


def emit_reports(reports: list[NReport], format: str = "json") -> bytes:
    """Serialize reports as JSON (fixed schema) or CSV (one row per order)."""
    if format == "json":
        return json.dumps(
            [_report_dict(r) for r in reports], indent=2, sort_keys=False
        ).encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "n",
                "raw_count",
                "class_count",
                "extremal_code",
                "lambda_extremal_lower",
                "lambda_extremal_upper",
                "lambda_fan_lower",
                "lambda_fan_upper",
                "conjecture_holds",
                "margin",
                "runtime_ms",
            ]
        )
        for r in reports:
            writer.writerow(
                [
                    r.n,
                    r.raw_count,
                    r.class_count,
                    code_to_native(r.extremal_code),
                    f"{r.lambda_extremal.lower:.12g}",
                    f"{r.lambda_extremal.upper:.12g}",
                    f"{r.lambda_fan.lower:.12g}",
                    f"{r.lambda_fan.upper:.12g}",
                    r.conjecture_holds,
                    f"{r.margin:.12g}",
                    r.runtime_ms,
                ]
            )
        return buf.getvalue().encode()
    raise ValueError(f"unknown report format {format!r}")


def parse_reports_json(data: bytes) -> list[dict]:
    return json.loads(data.decode())
