import random

from mopspectral.triangulations import Triangulation, extend_by_ear


def random_triangulation(rng: random.Random, n: int) -> Triangulation:
    """Uniformly random-ish triangulation grown by ear insertion."""
    t = Triangulation(3, ())
    for m in range(3, n):
        t = extend_by_ear(t, rng.randrange(m))
    return t


def catalan_numbers(upto: int) -> list[int]:
    """C_0..C_upto by the convolution recurrence (independent oracle)."""
    cats = [1]
    for k in range(upto):
        cats.append(sum(cats[i] * cats[k - i] for i in range(k + 1)))
    return cats
