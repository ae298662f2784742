"""Certified spectral-radius enclosures and exact Perron-root comparison.

The floating path iterates the shifted adjacency matrix A+I and reads off
two-sided quotient bounds (valid for any positive vector when A+I is
irreducible and nonnegative); the shift removes period-2 oscillation on
bipartite graphs.  The exact path works with the integer characteristic
polynomial, isolating the largest real root by Sturm-guided bisection with
rational endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .graphs import SmallGraph

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
MAX_EXACT_ORDER = 20

# Fixed safety inflation applied to quotient bounds before any certified
# comparison; guards double-precision accumulation without interval arithmetic.
BOUND_SLACK = 1e-12


class SpectralError(ValueError):
    """Bad input to a spectral operation."""


class ConvergenceError(RuntimeError):
    """Iteration budget exhausted; carries the best enclosure found."""

    def __init__(self, message: str, best: "SpectralEnclosure"):
        super().__init__(message)
        self.best = best


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class SpectralEnclosure:
    """Certified interval around the Perron root plus the Perron vector.

    The vector is positive with maximum entry exactly 1.
    """

    lower: float
    upper: float
    vector: tuple[float, ...]
    iterations: int

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)


def adjacency_matrix(g: SmallGraph) -> np.ndarray:
    n = g.order
    mat = np.zeros((n, n))
    for v in range(n):
        m = g.adjacency[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            mat[v, w] = 1.0
    return mat


def enclose_matrix(
    adj: np.ndarray, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralEnclosure:
    """Quotient-bound enclosure for the Perron root of a 0/1 adjacency matrix.

    Accepts any symmetric nonnegative matrix whose graph is connected; used
    directly for fans too large for the SmallGraph carrier.
    """
    if tol <= 0:
        raise SpectralError(f"tol must be positive, got {tol}")
    n = adj.shape[0]
    if n == 1:
        return SpectralEnclosure(0.0, 0.0, (1.0,), 0)
    shifted = adj + np.eye(n)
    x = np.ones(n)
    lower = upper = 0.0
    for it in range(1, max_iter + 1):
        y = shifted @ x
        q = y / x
        lower = float(q.min()) - 1.0
        upper = float(q.max()) - 1.0
        x = y / y.max()
        if upper - lower <= tol:
            return SpectralEnclosure(lower, upper, tuple(x), it)
    best = SpectralEnclosure(lower, upper, tuple(x), max_iter)
    raise ConvergenceError(
        f"no enclosure of width {tol} within {max_iter} iterations", best
    )


def perron_enclosure(
    g: SmallGraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralEnclosure:
    """Certified enclosure of the spectral radius of a connected graph."""
    if not g.is_connected():
        raise SpectralError("Perron enclosure requires a connected graph")
    return enclose_matrix(adjacency_matrix(g), tol, max_iter)


def enclose_batch(
    mats: np.ndarray, tol: float, max_iter: int = DEFAULT_MAX_ITER
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized quotient bounds for a stack of adjacency matrices.

    Returns per-matrix (lower, upper) arrays; all underlying graphs must be
    connected.  Converged rows are retired from the active set as iteration
    proceeds, so a few slow spectra do not dominate the whole batch.
    """
    count, n, _ = mats.shape
    lower = np.zeros(count)
    upper = np.full(count, float(n))
    shifted = mats + np.eye(n)
    x = np.ones((count, n))
    active = np.arange(count)
    for _ in range(max_iter):
        y = np.einsum("sij,sj->si", shifted, x)
        lo = y / x
        hi = lo.max(axis=1) - 1.0
        lo = lo.min(axis=1) - 1.0
        lower[active] = lo
        upper[active] = hi
        x = y / y.max(axis=1, keepdims=True)
        live = (hi - lo) > tol
        if not live.any():
            return lower, upper
        if not live.all():
            active = active[live]
            shifted = shifted[live]
            x = x[live]
    raise ConvergenceError(
        f"{active.size} matrices unconverged after {max_iter} iterations",
        SpectralEnclosure(float(lower.min()), float(upper.max()), (1.0,), max_iter),
    )


# ---------------------------------------------------------------------------
# Exact integer path: characteristic polynomial, Sturm chains, root isolation.
# Polynomials are coefficient lists in descending degree order.
# ---------------------------------------------------------------------------


def charpoly(g: SmallGraph) -> list[int]:
    """Integer coefficients of det(xI - A), monic, descending degree.

    Faddeev-LeVerrier recursion; every division is exact for an integer
    matrix, which is asserted.
    """
    n = g.order
    if n > MAX_EXACT_ORDER:
        raise SpectralError(f"exact path limited to order <= {MAX_EXACT_ORDER}")
    a = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        am = [
            [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(am[i][i] for i in range(n))
        ck, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(ck)
        m = [
            [am[i][j] + (ck if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def _poly_sign_at(coeffs: list[int], point: Fraction) -> int:
    num, den = point.numerator, point.denominator
    val = 0
    scale = 1
    for c in coeffs:
        val = val * num + c * scale
        scale *= den
    return (val > 0) - (val < 0)


def _poly_derivative(coeffs: list[int]) -> list[int]:
    n = len(coeffs) - 1
    return [c * (n - k) for k, c in enumerate(coeffs[:-1])]


def _poly_trim(coeffs: list) -> list:
    k = 0
    while k < len(coeffs) - 1 and coeffs[k] == 0:
        k += 1
    return coeffs[k:]


def _poly_primitive(coeffs: list[Fraction]) -> list[int]:
    """Clear denominators and divide by the content; sign is preserved."""
    from math import gcd, lcm

    coeffs = _poly_trim(coeffs)
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints] if g else ints


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = _poly_trim(list(a))
    db, lb = len(b) - 1, b[0]
    while len(r) - 1 >= db:
        if r[0] != 0:
            f = r[0] / lb
            for k in range(1, db + 1):
                r[k] -= f * b[k]
        r.pop(0)
    if not r or all(c == 0 for c in r):
        return [Fraction(0)]
    return _poly_trim(r)


def _sturm_chain(coeffs: list[int]) -> list[list[int]]:
    chain = [list(coeffs)]
    deriv = _poly_derivative(coeffs)
    if deriv:
        chain.append(deriv)
    while len(chain[-1]) > 1:
        a = [Fraction(c) for c in chain[-2]]
        b = [Fraction(c) for c in chain[-1]]
        r = _poly_mod(a, b)
        if len(r) == 1 and r[0] == 0:
            break
        chain.append(_poly_primitive([-c for c in r]))
    return chain


def _sign_variations(chain: list[list[int]], point: Fraction) -> int:
    prev = 0
    var = 0
    for poly in chain:
        s = _poly_sign_at(poly, point)
        if s and prev and s != prev:
            var += 1
        if s:
            prev = s
    return var


def _count_roots(chain: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def _isolate_largest_root(
    chain: list[list[int]],
    order: int,
    hint: SpectralEnclosure | None,
    width: Fraction,
) -> tuple[Fraction, Fraction]:
    """Interval (lo, hi] holding exactly the largest real root of the chain."""
    hi = Fraction(order)  # spectral radius < order for a simple graph
    lo = Fraction(-order)
    if hint is not None:
        cand = Fraction(hint.lower - 1e-6).limit_denominator(10**12)
        if _count_roots(chain, cand, hi) == 1:
            lo = cand
    while hi - lo > width or _count_roots(chain, lo, hi) != 1:
        mid = (lo + hi) / 2
        if _count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _refine_largest(
    chain: list[list[int]], lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    p = [Fraction(c) for c in a]
    q = [Fraction(c) for c in b]
    while not (len(q) == 1 and q[0] == 0):
        p, q = q, _poly_mod(p, q)
    g = _poly_primitive(p)
    if g[0] < 0:
        g = [-c for c in g]
    return g


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b; raises if b does not divide a."""
    r = [Fraction(c) for c in a]
    db, lb = len(b) - 1, Fraction(b[0])
    out = []
    while len(r) - 1 >= db:
        f = r[0] / lb
        out.append(f)
        for k in range(1, db + 1):
            r[k] -= f * b[k]
        r.pop(0)
    if any(c != 0 for c in r):
        raise ArithmeticError("inexact polynomial division")
    return _poly_primitive(out)


def _squarefree(coeffs: list[int]) -> list[int]:
    """Squarefree part: same distinct roots, all simple."""
    g = _poly_gcd(coeffs, _poly_derivative(coeffs))
    if len(g) == 1:
        return list(coeffs)
    sf = _poly_div_exact(coeffs, g)
    if sf[0] < 0:
        sf = [-c for c in sf]
    return sf


def exact_compare(g1: SmallGraph, g2: SmallGraph) -> Comparison:
    """Exact three-way comparison of spectral radii via integer arithmetic."""
    for g in (g1, g2):
        if g.order > MAX_EXACT_ORDER:
            raise SpectralError(f"exact path limited to order <= {MAX_EXACT_ORDER}")
        if not g.is_connected():
            raise SpectralError("exact comparison requires connected graphs")
    p1 = _squarefree(charpoly(g1))
    p2 = _squarefree(charpoly(g2))
    chain1, chain2 = _sturm_chain(p1), _sturm_chain(p2)

    def hint(g: SmallGraph) -> SpectralEnclosure | None:
        try:
            return perron_enclosure(g, 1e-9)
        except ConvergenceError:
            return None

    width = Fraction(1, 2**24)
    i1 = _isolate_largest_root(chain1, g1.order, hint(g1), width)
    i2 = _isolate_largest_root(chain2, g2.order, hint(g2), width)
    shared = _poly_gcd(p1, p2)
    shared_chain = _sturm_chain(shared) if len(shared) > 1 else None
    for _ in range(64):
        if i1[1] <= i2[0]:
            return Comparison.LESS
        if i2[1] <= i1[0]:
            return Comparison.GREATER
        if shared_chain is not None:
            in1 = _count_roots(shared_chain, *i1)
            in2 = _count_roots(shared_chain, *i2)
            if in1 and in2:
                hull = (min(i1[0], i2[0]), max(i1[1], i2[1]))
                if _count_roots(shared_chain, *hull) == 1:
                    return Comparison.EQUAL
        width /= 2**16
        i1 = _refine_largest(chain1, *i1, width)
        i2 = _refine_largest(chain2, *i2, width)
    raise RuntimeError("exact comparison failed to separate the Perron roots")


def compare_radii(
    g1: SmallGraph, g2: SmallGraph, margin: float = 1e-6
) -> Comparison:
    """Compare spectral radii; certified by enclosures, exact on near-ties.

    EQUAL is only ever returned by the exact escalation path.
    """
    if margin <= 0:
        raise SpectralError(f"margin must be positive, got {margin}")
    e1 = perron_enclosure(g1, tol=margin / 4)
    e2 = perron_enclosure(g2, tol=margin / 4)
    if e1.upper + BOUND_SLACK + margin <= e2.lower - BOUND_SLACK:
        return Comparison.LESS
    if e2.upper + BOUND_SLACK + margin <= e1.lower - BOUND_SLACK:
        return Comparison.GREATER
    return exact_compare(g1, g2)
