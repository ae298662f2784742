import math
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_triangulation
from mopspectral.graphs import complete_graph, fan_graph, from_edges, wheel_graph
from mopspectral.spectral import (
    Comparison,
    ConvergenceError,
    SpectralError,
    charpoly,
    compare_radii,
    exact_compare,
    perron_enclosure,
)
from mopspectral.triangulations import Triangulation, enumerate_classes, to_graph

G1 = to_graph(Triangulation(6, ((0, 2), (0, 4), (2, 4))))


def exact_sign(coeffs, x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    val, scale = 0, 1
    for c in coeffs:
        val = val * num + c * scale
        scale *= den
    return (val > 0) - (val < 0)


def largest_root_by_bisection(coeffs, order: int) -> tuple[Fraction, Fraction]:
    """Independent oracle: exact sign bisection above the second eigenvalue."""
    eigs = np.sort(np.linalg.eigvalsh(_matrix_from_charpoly_order(coeffs, order)))
    lo = Fraction(float((eigs[-1] + eigs[-2]) / 2)).limit_denominator(10**9)
    hi = Fraction(order)
    assert exact_sign(coeffs, lo) < 0 and exact_sign(coeffs, hi) > 0
    while hi - lo > Fraction(1, 10**14):
        mid = (lo + hi) / 2
        if exact_sign(coeffs, mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


_matrices = {}


def _matrix_from_charpoly_order(coeffs, order):
    return _matrices[id(coeffs)]


def test_enclosure_k3():
    enc = perron_enclosure(complete_graph(3), 1e-10)
    assert enc.lower <= 2.0 <= enc.upper
    assert enc.width <= 1e-10
    assert max(enc.vector) == 1.0
    assert all(v > 0 for v in enc.vector)


def test_enclosure_wheel9():
    enc = perron_enclosure(wheel_graph(9), 1e-11)
    assert enc.lower <= 4.0 <= enc.upper
    assert enc.width <= 1e-10


def test_enclosure_inner_triangle_hexagon():
    enc = perron_enclosure(G1, 1e-10)
    assert abs(enc.midpoint - 3.2361) <= 5e-4
    assert enc.lower <= 1 + math.sqrt(5) <= enc.upper


def test_wheel_identity_small_range():
    for n in range(4, 15):
        enc = perron_enclosure(wheel_graph(n), 1e-11)
        assert abs(enc.midpoint - (1 + math.sqrt(n))) <= 1e-9


def test_enclosure_bipartite_input_converges():
    # K2 and paths oscillate without the +I shift
    enc = perron_enclosure(fan_graph(2), 1e-12)
    assert enc.lower <= 1.0 <= enc.upper
    path4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    enc = perron_enclosure(path4, 1e-10)
    assert abs(enc.midpoint - (1 + math.sqrt(5)) / 2) <= 1e-9


def test_enclosure_errors():
    disconnected = from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(SpectralError):
        perron_enclosure(disconnected)
    with pytest.raises(SpectralError):
        perron_enclosure(complete_graph(3), tol=0.0)
    with pytest.raises(ConvergenceError) as info:
        perron_enclosure(fan_graph(6), tol=1e-10, max_iter=2)
    best = info.value.best
    assert best.lower <= 3.2228 and best.upper >= 3.2227


def test_residual_at_convergence():
    rng = random.Random(5)
    for _ in range(20):
        g = to_graph(random_triangulation(rng, rng.randrange(4, 12)))
        tol = 1e-10
        enc = perron_enclosure(g, tol)
        a = np.zeros((g.order, g.order))
        for u, v in g.edges():
            a[u, v] = a[v, u] = 1.0
        x = np.array(enc.vector)
        residual = np.abs(a @ x - enc.midpoint * x).max()
        assert residual <= 10 * tol


def test_charpoly_known():
    assert charpoly(fan_graph(2)) == [1, 0, -1]
    assert charpoly(complete_graph(3)) == [1, 0, -3, -2]


def test_charpoly_g1_quotient_factor():
    # the degree-4/degree-2 orbit quotient gives lambda^2 = 2 lambda + 4
    coeffs = charpoly(G1)
    factor = [1, -2, -4]
    rem = list(map(Fraction, coeffs))
    while len(rem) >= len(factor):
        f = rem[0]
        for k in range(len(factor)):
            rem[k] -= f * factor[k]
        assert rem[0] == 0
        rem.pop(0)
    assert all(c == 0 for c in rem)


def test_charpoly_guard():
    from mopspectral.graphs import SmallGraph

    big = SmallGraph(21, tuple(0 for _ in range(21)))
    with pytest.raises(SpectralError):
        charpoly(big)


def test_enclosure_soundness_against_exact_bisection():
    rng = random.Random(17)
    for _ in range(200):
        g = to_graph(random_triangulation(rng, rng.randrange(4, 13)))
        coeffs = charpoly(g)
        a = np.zeros((g.order, g.order))
        for u, v in g.edges():
            a[u, v] = a[v, u] = 1.0
        _matrices[id(coeffs)] = a
        lo, hi = largest_root_by_bisection(coeffs, g.order)
        enc = perron_enclosure(g, 1e-10)
        assert enc.lower - 1e-12 <= float(lo)
        assert float(hi) <= enc.upper + 1e-12


def test_exact_compare_examples():
    assert exact_compare(G1, G1) is Comparison.EQUAL
    assert exact_compare(fan_graph(6), G1) is Comparison.LESS
    assert exact_compare(G1, fan_graph(6)) is Comparison.GREATER
    fan7 = fan_graph(7)
    for t in enumerate_classes(7):
        g = to_graph(t)
        if sorted(g.degree_sequence()) == sorted(fan7.degree_sequence()):
            continue
        assert exact_compare(fan7, g) is Comparison.GREATER


def test_exact_compare_integer_radius():
    # both Perron roots are exactly 4
    assert exact_compare(wheel_graph(9), wheel_graph(9)) is Comparison.EQUAL
    assert exact_compare(complete_graph(3), wheel_graph(9)) is Comparison.LESS


def test_monotone_under_edge_addition():
    rng = random.Random(23)
    for _ in range(15):
        g = to_graph(random_triangulation(rng, rng.randrange(5, 10)))
        non_edges = [
            (i, j)
            for i in range(g.order)
            for j in range(i + 1, g.order)
            if not g.has_edge(i, j)
        ]
        i, j = rng.choice(non_edges)
        denser = from_edges(g.order, g.edges() + [(i, j)])
        assert exact_compare(denser, g) is Comparison.GREATER


def test_compare_radii():
    assert compare_radii(fan_graph(2), complete_graph(3), 1e-6) is Comparison.LESS
    assert compare_radii(fan_graph(6), G1, 1e-6) is Comparison.LESS
    assert compare_radii(G1, G1, 1e-6) is Comparison.EQUAL
    with pytest.raises(SpectralError):
        compare_radii(G1, G1, 0.0)
