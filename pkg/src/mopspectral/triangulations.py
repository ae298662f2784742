"""Convex-polygon triangulations and their dihedral isomorphism classes.

A triangulation of the convex n-gon, read as hull edges plus diagonals, is
exactly an edge-maximal outerplanar graph; two triangulations give isomorphic
graphs iff some rotation or reflection of the polygon maps one onto the other.
Diagonals are stored internally as single integers ``i * 64 + j`` with
``i < j`` so that integer order coincides with lexicographic pair order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import SmallGraph, from_edges

MAX_ENUM_ORDER = 20      # Catalan growth; full enumeration ceiling
MAX_BURNSIDE_ORDER = 18

# Sub-chains of at most this many hull steps are materialized and reused
# during enumeration; longer chains are streamed.
_MEMO_SPAN = 8


class TriangulationError(ValueError):
    """Invalid triangulation data or an out-of-guard request."""


def _pack(i: int, j: int) -> int:
    return i * 64 + j


def _unpack(d: int) -> tuple[int, int]:
    return divmod(d, 64)


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of the convex n-gon: n plus a non-crossing diagonal set."""

    n: int
    diagonals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 3:
            raise TriangulationError(f"polygon size must be >= 3, got {n}")
        diags = self.diagonals
        if len(diags) != n - 3:
            raise TriangulationError(
                f"need exactly {n - 3} diagonals for n={n}, got {len(diags)}"
            )
        for i, j in diags:
            if not (0 <= i < j <= n - 1):
                raise TriangulationError(f"diagonal ({i}, {j}) out of range")
            if j - i < 2 or (i == 0 and j == n - 1):
                raise TriangulationError(f"({i}, {j}) is a hull edge, not a diagonal")
        if len(set(diags)) != len(diags):
            raise TriangulationError("duplicate diagonal")
        for a, b in diags:
            for c, d in diags:
                if a < c < b < d:
                    raise TriangulationError(
                        f"diagonals ({a}, {b}) and ({c}, {d}) cross"
                    )

    @classmethod
    def _unchecked(cls, n: int, diagonals: tuple[tuple[int, int], ...]) -> "Triangulation":
        # Fast path for internally generated data that is valid by construction.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "diagonals", diagonals)
        return obj

    def _codes(self) -> tuple[int, ...]:
        return tuple(_pack(i, j) for i, j in self.diagonals)


def _from_codes(n: int, codes) -> Triangulation:
    return Triangulation._unchecked(n, tuple(_unpack(d) for d in sorted(codes)))


def _raw_triangulations(n: int):
    """Yield every triangulation of the labeled n-gon as a tuple of codes.

    Recursion is on the apex of the root edge (0, n-1), apex ascending.
    """
    memo: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def stream(i: int, j: int, building: bool = False):
        if j - i == 1:
            yield ()
            return
        if not building and j - i <= _MEMO_SPAN:
            got = memo.get((i, j))
            if got is None:
                got = list(stream(i, j, building=True))
                memo[(i, j)] = got
            yield from got
            return
        for k in range(i + 1, j):
            fixed = ()
            if k - i >= 2:
                fixed += (_pack(i, k),)
            if j - k >= 2:
                fixed += (_pack(k, j),)
            for left in stream(i, k):
                pre = left + fixed
                for right in stream(k, j):
                    yield pre + right

    yield from stream(0, n - 1)


def triangulations(n: int):
    """Yield each triangulation of the labeled convex n-gon exactly once."""
    if not 3 <= n <= MAX_ENUM_ORDER:
        raise TriangulationError(f"n must be in 3..{MAX_ENUM_ORDER}, got {n}")
    for codes in _raw_triangulations(n):
        yield _from_codes(n, codes)


def to_graph(t: Triangulation) -> SmallGraph:
    """Hull cycle plus diagonals: the maximal outerplanar graph of ``t``."""
    n = t.n
    edges = [(v, (v + 1) % n) for v in range(n)]
    edges.extend(t.diagonals)
    return from_edges(n, edges)


@lru_cache(maxsize=None)
def _dihedral_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each of the 2n polygon symmetries, a code -> image-code table."""
    tables = []
    for reflect in (False, True):
        for r in range(n):
            tab = [0] * (64 * 64)
            for i in range(n - 1):
                for j in range(i + 2, n):
                    if i == 0 and j == n - 1:
                        continue
                    a = ((r - i) % n) if reflect else ((i + r) % n)
                    b = ((r - j) % n) if reflect else ((j + r) % n)
                    if a > b:
                        a, b = b, a
                    tab[_pack(i, j)] = _pack(a, b)
            tables.append(tuple(tab))
    return tuple(tables)


def _canon_codes(codes, tables) -> tuple[int, ...]:
    best = None
    for tab in tables:
        img = sorted(map(tab.__getitem__, codes))
        if best is None or img < best:
            best = img
    return tuple(best) if best is not None else ()


def _code_bytes(n: int, codes: tuple[int, ...]) -> bytes:
    out = bytearray([n])
    for d in codes:
        i, j = _unpack(d)
        out.append(i)
        out.append(j)
    return bytes(out)


def canonical_code(t: Triangulation) -> bytes:
    """Lexicographic minimum over all 2n dihedral images of the diagonal list."""
    tables = _dihedral_tables(t.n)
    return _code_bytes(t.n, _canon_codes(t._codes(), tables))


@lru_cache(maxsize=None)
def _class_code_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    tables = _dihedral_tables(n)
    seen: set[tuple[int, ...]] = set()
    add = seen.add
    for codes in _raw_triangulations(n):
        best = None
        for tab in tables:
            img = sorted(map(tab.__getitem__, codes))
            if best is None or img < best:
                best = img
        add(tuple(best))
    return tuple(sorted(seen))


def enumerate_classes(n: int) -> list[Triangulation]:
    """One representative per isomorphism class, sorted by canonical code.

    The representative is the lex-minimal dihedral image itself.
    """
    if not 3 <= n <= MAX_ENUM_ORDER:
        raise TriangulationError(f"n must be in 3..{MAX_ENUM_ORDER}, got {n}")
    return [_from_codes(n, codes) for codes in _class_code_tuples(n)]


def extend_by_ear(t: Triangulation, i: int) -> Triangulation:
    """Insert a new hull vertex between positions i and i+1 (mod n).

    The old hull edge {i, i+1} becomes a diagonal; the new vertex has
    degree 2 in the resulting graph.
    """
    n = t.n
    if not 0 <= i <= n - 1:
        raise TriangulationError(f"hull position {i} out of range for n={n}")
    if i < n - 1:
        # New vertex takes position i+1; old positions above i shift up.
        diags = [
            (a + (a > i), b + (b > i)) for a, b in t.diagonals
        ]
        diags.append((i, i + 2))
    else:
        # New vertex takes the last position n; labels are unchanged.
        diags = list(t.diagonals)
        diags.append((0, n - 1))
    return Triangulation(n + 1, tuple(sorted(diags)))


def fan_triangulation(n: int) -> Triangulation:
    """All diagonals from hull position 0; its graph is the fan K1 v P(n-1)."""
    if n < 3:
        raise TriangulationError(f"polygon size must be >= 3, got {n}")
    return Triangulation(n, tuple((0, j) for j in range(2, n - 1)))


def incremental_class_codes(n: int) -> frozenset[bytes]:
    """Class codes of order n built by ear insertion from the triangle.

    Independent of the full Catalan enumeration: closes the class set of
    order m under extend_by_ear at every hull position to reach m+1.
    """
    if not 3 <= n <= MAX_ENUM_ORDER:
        raise TriangulationError(f"n must be in 3..{MAX_ENUM_ORDER}, got {n}")
    reps = [Triangulation(3, ())]
    for m in range(3, n):
        tables = _dihedral_tables(m + 1)
        seen: set[tuple[int, ...]] = set()
        for t in reps:
            for i in range(m):
                ext = extend_by_ear(t, i)
                seen.add(_canon_codes(ext._codes(), tables))
        reps = [_from_codes(m + 1, codes) for codes in sorted(seen)]
    return frozenset(_code_bytes(n, t._codes()) for t in reps)


def count_classes_burnside(n: int) -> int:
    """Class count via the orbit-counting lemma over the dihedral group.

    Fixed-point counts come from scanning the full labeled enumeration and
    testing invariance under each of the 2n symmetries.
    """
    if not 3 <= n <= MAX_BURNSIDE_ORDER:
        raise TriangulationError(f"n must be in 3..{MAX_BURNSIDE_ORDER}, got {n}")
    tables = _dihedral_tables(n)
    total = 0
    for codes in _raw_triangulations(n):
        have = set(codes)
        for tab in tables:
            for d in codes:
                if tab[d] not in have:
                    break
            else:
                total += 1
    count, rem = divmod(total, 2 * n)
    if rem:
        raise AssertionError(f"Burnside sum {total} not divisible by {2 * n}")
    return count


def format_native(t: Triangulation) -> str:
    """Text form ``n:i-j,i-j,...`` with diagonals sorted."""
    body = ",".join(f"{i}-{j}" for i, j in sorted(t.diagonals))
    return f"{t.n}:{body}"


def parse_native(s: str) -> Triangulation:
    head, _, body = s.partition(":")
    try:
        n = int(head)
    except ValueError as exc:
        raise TriangulationError(f"bad native form {s!r}") from exc
    diags = []
    if body:
        for part in body.split(","):
            i, _, j = part.partition("-")
            try:
                diags.append((int(i), int(j)))
            except ValueError as exc:
                raise TriangulationError(f"bad diagonal {part!r}") from exc
    return Triangulation(n, tuple(sorted(diags)))
