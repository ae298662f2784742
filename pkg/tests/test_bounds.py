import math

import pytest

from mopspectral.bounds import (
    TWO_PLUS_SQRT7,
    claim1_lower,
    claim5_threshold,
    inequality4_coefficient,
    planar_bound_catalog,
    shu_hong,
)
from mopspectral.graphs import from_edges, wheel_graph
from mopspectral.spectral import perron_enclosure
from mopspectral.triangulations import enumerate_classes, to_graph


def test_shu_hong_values():
    assert abs(shu_hong(3) - (1.5 + math.sqrt(1.25))) <= 1e-12
    assert abs(shu_hong(3) - 2.6180) <= 5e-5
    assert abs(shu_hong(16) - 5.2749) <= 5e-5
    with pytest.raises(ValueError):
        shu_hong(2)


def test_shu_hong_dominates_small_classes():
    for n in range(3, 11):
        cap = shu_hong(n)
        for t in enumerate_classes(n):
            enc = perron_enclosure(to_graph(t), 1e-10)
            assert enc.upper <= cap + 1e-9


def test_claim1_lower_values():
    assert abs(claim1_lower(16) - 4.9167) <= 5e-5
    assert claim1_lower(16) < shu_hong(16)
    with pytest.raises(ValueError):
        claim1_lower(1)


def test_claim1_lower_is_achieved_by_near_wheel():
    # the bound is a Rayleigh quotient on the wheel minus one rim edge,
    # so that graph's radius must sit at or above it
    for n in range(5, 30):
        w = wheel_graph(n)
        edges = [e for e in w.edges() if e != (1, n - 1)]
        g = from_edges(n, edges)
        enc = perron_enclosure(g, 1e-10)
        assert claim1_lower(n) <= enc.upper + 1e-9


def test_inequality4_sign_flip():
    assert inequality4_coefficient(16) < 0
    assert inequality4_coefficient(17) > 0
    assert abs(inequality4_coefficient(10000) - 0.9505) <= 5e-5
    flips = [
        n
        for n in range(3, 1000)
        if inequality4_coefficient(n) <= 0 < inequality4_coefficient(n + 1)
    ]
    assert flips == [16]


def test_claim5_threshold():
    assert not claim5_threshold(9)
    assert claim5_threshold(16)
    assert claim5_threshold(17)
    # the crossing actually happens at n = 15: the bound is monotone and
    # already clears 2 + sqrt(7) one step before the degree argument needs it
    assert not claim5_threshold(14)
    assert claim5_threshold(15)
    values = [claim1_lower(n) for n in range(3, 1000)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert min(n for n in range(3, 1000) if claim5_threshold(n)) == 15
    assert abs(TWO_PLUS_SQRT7 - 4.6458) <= 5e-5


def test_planar_catalog():
    cat = planar_bound_catalog(11)
    assert abs(cat["ellingham_zha_2000"] - 6.0) <= 1e-12
    assert abs(planar_bound_catalog(4)["hong_1988"] - 3.0) <= 1e-12
    assert set(cat) == {
        "hong_1988",
        "cao_vince_1993",
        "hong_1995",
        "ellingham_zha_2000",
    }
    with pytest.raises(ValueError):
        planar_bound_catalog(2)
