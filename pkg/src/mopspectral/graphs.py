"""Small undirected graphs stored as one adjacency bitmask per vertex."""

from __future__ import annotations

from dataclasses import dataclass

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction or malformed interchange data."""


@dataclass(frozen=True)
class SmallGraph:
    """Simple graph on at most 64 vertices.

    ``adjacency[v]`` is the neighbor set of vertex ``v`` as a bitmask.
    Instances are immutable and safe to share across threads.
    """

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.adjacency) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise GraphError(f"vertex {v} has neighbors outside 0..{n - 1}")
            if (mask >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, mask in enumerate(self.adjacency):
            m = mask
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adjacency[w] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.order):
            m = self.adjacency[v] >> (v + 1) << (v + 1)
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((v, w))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adjacency) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adjacency)

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= self.adjacency[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.order) - 1


def from_edges(order: int, edges) -> SmallGraph:
    """Build a SmallGraph from an iterable of (u, v) pairs."""
    masks = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) outside 0..{order - 1}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return SmallGraph(order, tuple(masks))


def fan_graph(n: int) -> SmallGraph:
    """Hub vertex 0 joined to the path 1-2-...-(n-1)."""
    if not 2 <= n <= MAX_ORDER:
        raise GraphError(f"fan order must be in 2..{MAX_ORDER}, got {n}")
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1)]
    return from_edges(n, edges)


def wheel_graph(n: int) -> SmallGraph:
    """Hub vertex 0 joined to the cycle on vertices 1..n-1."""
    if not 4 <= n <= MAX_ORDER:
        raise GraphError(f"wheel order must be in 4..{MAX_ORDER}, got {n}")
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1)]
    edges.append((1, n - 1))
    return from_edges(n, edges)


def complete_graph(n: int) -> SmallGraph:
    full = (1 << n) - 1
    return SmallGraph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> SmallGraph:
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    masks = [right] * a + [left] * b
    return SmallGraph(a + b, tuple(masks))


def to_graph6(g: SmallGraph) -> bytes:
    """Standard graph6 encoding (single-byte header, order <= 62)."""
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 single-byte header supports order <= {GRAPH6_MAX_ORDER}")
    out = [n + 63]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adjacency[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(s: bytes | str) -> SmallGraph:
    """Decode a graph6 byte string; rejects malformed or padded-garbage input."""
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.rstrip(b"\n")
    if not s:
        raise GraphError("empty graph6 string")
    n = s[0] - 63
    if not 1 <= n <= GRAPH6_MAX_ORDER:
        raise GraphError(f"unsupported graph6 header byte {s[0]}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise GraphError(f"graph6 byte {b} outside printable range")
        bits = (bits << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 encoding")
    bits >>= pad
    masks = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return SmallGraph(n, tuple(masks))
