"""Split graphs: partition into a clique C and an independent set S."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotASplitgraph
from .graph import Graph


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset

    def validate(self, g: Graph):
        C, S = self.clique, self.independent
        if C & S or (C | S) != set(range(g.n)):
            raise ValueError("clique/independent sides do not partition V")
        if not g.is_clique(C):
            raise ValueError("clique side is not a clique")
        if not g.is_independent(S):
            raise ValueError("independent side is not independent")


def _find_obstruction(g: Graph):
    """First induced 2K2, C4 or C5 in lexicographic subset order."""
    for quad in combinations(range(g.n), 4):
        edges = [frozenset(e) for e in combinations(quad, 2) if g.has_edge(*e)]
        if len(edges) == 2 and not (edges[0] & edges[1]):
            return "2K2", quad
        if len(edges) == 4:
            deg = {v: sum(v in e for e in edges) for v in quad}
            if all(d == 2 for d in deg.values()):
                return "C4", quad
    for five in combinations(range(g.n), 5):
        edges = [e for e in combinations(five, 2) if g.has_edge(*e)]
        if len(edges) == 5:
            deg = {v: sum(v in e for e in edges) for v in five}
            if all(d == 2 for d in deg.values()):
                return "C5", five
    return None


def split_partition(g: Graph) -> SplitPartition:
    """A split partition, or NotASplitgraph with a 2K2/C4/C5 witness.

    Determinism: among all valid partitions the clique side is maximized,
    ties broken by lexicographically smallest C.  Any valid clique side
    differs from the degree-sequence partition by at most one vertex in and
    one out (C' meets the base S in <= 1 vertex and misses <= 1 of the base
    C), so scanning those single moves is exhaustive.
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = max((i + 1 for i in range(n) if degs[i] >= i), default=0)
    top = sum(degs[:m])
    rest = sum(degs[m:])
    base_c = set(order[:m])
    base_s = set(order[m:])
    if top != m * (m - 1) + rest or not g.is_clique(base_c) or not g.is_independent(base_s):
        found = _find_obstruction(g)
        if found is None:
            raise RuntimeError("degree test rejected a graph with no 2K2/C4/C5")
        raise NotASplitgraph(*found)

    def valid(c_set):
        s_set = set(range(n)) - c_set
        return g.is_clique(c_set) and g.is_independent(s_set)

    candidates = [base_c]
    for v in base_s:
        candidates.append(base_c | {v})
    for u in base_c:
        candidates.append(base_c - {u})
        for v in base_s:
            candidates.append((base_c - {u}) | {v})
    best = max(
        (c for c in candidates if valid(c)),
        key=lambda c: (len(c), [-x for x in sorted(c)]),
    )
    return SplitPartition(frozenset(best), frozenset(range(n)) - frozenset(best))


def is_splitgraph(g: Graph) -> bool:
    try:
        split_partition(g)
        return True
    except NotASplitgraph:
        return False
