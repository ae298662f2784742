"""Forbidden-minor outerplanarity testing and Hamilton-cycle recovery.

A graph is outerplanar iff it has neither a K4 nor a K2,3 minor.  The minor
test searches exhaustively for a model: disjoint connected branch sets, one
per pattern vertex, with an edge between every pair of sets that is adjacent
in the pattern.
"""

from __future__ import annotations

from .graphs import GraphError, SmallGraph, complete_bipartite, complete_graph

K4 = complete_graph(4)
K23 = complete_bipartite(2, 3)

MINOR_ORDER_GUARD = 16


class NotMaximalOuterplanarError(GraphError):
    """The input is not an edge-maximal outerplanar graph."""


# Pattern configurations: vertices are placed in a fixed order; each entry of
# ``required`` lists the earlier positions the new branch set must touch, and
# ``min_after`` breaks the symmetry between interchangeable pattern vertices
# by forcing ascending minimum vertices.
_K4_REQUIRED = ((), (0,), (0, 1), (0, 1, 2))
_K4_MIN_AFTER = (None, 0, 1, 2)
# K2,3 placed as [left0, right0, left1, right1, right2].
_K23_REQUIRED = ((), (0,), (1,), (0, 2), (0, 2))
_K23_MIN_AFTER = (None, None, 0, 1, 3)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _connected_subsets(adj, seed: int, allowed: int, max_size: int):
    """Yield (set_mask, open_neighborhood) for every connected subset of
    ``allowed`` containing ``seed``, each exactly once."""
    seed_bit = 1 << seed

    def rec(cur: int, nbr: int, banned: int, size: int):
        # nbr is the full open neighborhood; growth stays inside ``allowed``
        # but the yielded neighborhood must not, or later sets lose contacts.
        yield cur, nbr
        if size == max_size:
            return
        cand = nbr & allowed & ~banned
        tried = 0
        while cand:
            vbit = cand & -cand
            cand ^= vbit
            v = vbit.bit_length() - 1
            grown = cur | vbit
            yield from rec(grown, (nbr | adj[v]) & ~grown, banned | tried, size + 1)
            tried |= vbit

    yield from rec(seed_bit, adj[seed] & ~seed_bit, 0, 1)


def _find_model(g: SmallGraph, required, min_after) -> bool:
    adj = g.adjacency
    k = len(required)

    def place(i: int, sets, nbrs, mins, free: int) -> bool:
        if i == k:
            return True
        rest = k - i - 1
        if free.bit_count() <= rest:
            return False
        req = required[i]
        touches = [nbrs[j] & free for j in req]
        if any(t == 0 for t in touches):
            return False
        base = touches[0] if req else free
        max_size = free.bit_count() - rest
        floor_min = mins[min_after[i]] if min_after[i] is not None else -1
        seen_seeds = 0
        while base:
            seed_bit = base & -base
            base ^= seed_bit
            seed = seed_bit.bit_length() - 1
            allowed = free & ~seen_seeds
            seen_seeds |= seed_bit
            for subset, open_nbr in _connected_subsets(adj, seed, allowed, max_size):
                if any(subset & t == 0 for t in touches):
                    continue
                if _lowest(subset) <= floor_min:
                    continue
                if place(
                    i + 1,
                    sets + (subset,),
                    nbrs + (open_nbr,),
                    mins + (_lowest(subset),),
                    free & ~subset,
                ):
                    return True
        return False

    return place(0, (), (), (), (1 << g.order) - 1)


def has_minor(g: SmallGraph, pattern: SmallGraph) -> bool:
    """True iff ``pattern`` (K4 or K2,3) is a minor of ``g``."""
    if g.order > MINOR_ORDER_GUARD:
        raise GraphError(f"minor search limited to order <= {MINOR_ORDER_GUARD}")
    if pattern == K4:
        required, min_after = _K4_REQUIRED, _K4_MIN_AFTER
    elif pattern == K23:
        required, min_after = _K23_REQUIRED, _K23_MIN_AFTER
    else:
        raise GraphError("pattern must be the K4 or K23 constant")
    if g.order < pattern.order or g.edge_count < pattern.edge_count:
        return False
    return _find_model(g, required, min_after)


def is_outerplanar(g: SmallGraph) -> bool:
    return not has_minor(g, K4) and not has_minor(g, K23)


def outer_hamilton_cycle(g: SmallGraph, require_maximal: bool = True) -> tuple[int, ...]:
    """Recover the unique outer Hamilton cycle of a maximal outerplanar graph.

    Peels degree-2 vertices whose neighbors are adjacent down to a triangle,
    then re-splices them in reverse.  Raises NotMaximalOuterplanarError when
    the peeling gets stuck, which happens exactly off the intended domain.
    """
    n = g.order
    if n < 3:
        raise GraphError(f"need order >= 3, got {n}")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if require_maximal and g.edge_count != 2 * n - 3:
        raise NotMaximalOuterplanarError(
            f"{g.edge_count} edges, a maximal outerplanar graph on {n} vertices has {2 * n - 3}"
        )
    masks = list(g.adjacency)
    alive = list(range(n))
    peeled: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        for v in alive:
            if masks[v].bit_count() == 2:
                a = _lowest(masks[v])
                b = _lowest(masks[v] & (masks[v] - 1))
                if (masks[a] >> b) & 1:
                    break
        else:
            raise NotMaximalOuterplanarError(
                "no removable degree-2 vertex; graph is not maximal outerplanar"
            )
        masks[a] &= ~(1 << v)
        masks[b] &= ~(1 << v)
        masks[v] = 0
        alive.remove(v)
        peeled.append((v, a, b))
    x, y, z = alive
    if not ((masks[x] >> y) & 1 and (masks[x] >> z) & 1 and (masks[y] >> z) & 1):
        raise NotMaximalOuterplanarError("peeling residue is not a triangle")
    cycle = [x, y, z]
    for v, a, b in reversed(peeled):
        ia, ib = cycle.index(a), cycle.index(b)
        if (ia + 1) % len(cycle) == ib:
            cycle.insert(ib, v)
        elif (ib + 1) % len(cycle) == ia:
            cycle.insert(ia, v)
        else:
            raise NotMaximalOuterplanarError(
                "ear base is not on the current hull; graph is not maximal outerplanar"
            )
    for p, q in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(p, q):
            raise NotMaximalOuterplanarError("recovered order is not a cycle of the graph")
    return tuple(cycle)
