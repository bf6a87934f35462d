"""Max-flow / min-cut, bipartite maximum independent sets, and the
parametric neighborhood-ratio minimizer.

All capacities are integers and every cut decision is exact; the ratio
minimizer compares candidate ratios by cross-multiplication via Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .graph import Graph

INF = "inf"


class FlowNetwork:
    """Directed network with integer capacities; INF marks unbounded arcs.
    No arc may enter the source or leave the sink."""

    def __init__(self, num_nodes, source, sink):
        if not (0 <= source < num_nodes and 0 <= sink < num_nodes) or source == sink:
            raise ValueError("bad source/sink")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.arcs = []  # (u, v, capacity or INF)

    def add_arc(self, u, v, capacity):
        if v == self.source or u == self.sink:
            raise ValueError("arc into source or out of sink")
        if capacity is not INF and capacity < 0:
            raise ValueError("negative capacity")
        self.arcs.append((u, v, capacity))


@dataclass(frozen=True)
class CutResult:
    value: int
    source_side: frozenset  # inclusion-wise MAXIMAL min-cut source side


def max_flow(net: FlowNetwork):
    """Exact max flow via Dinic; returns (value, CutResult).

    The returned source side is the complement of the nodes that reach the
    sink in the residual graph, i.e. the unique inclusion-wise maximal
    minimum cut.  Raises if every cut is infinite.
    """
    finite_total = sum(c for _, _, c in net.arcs if c is not INF)
    big = finite_total + 1

    n = net.num_nodes
    head = []
    nxt = []
    first = [-1] * n
    cap = []

    def add_edge(u, v, c):
        head.append(v)
        cap.append(c)
        nxt.append(first[u])
        first[u] = len(head) - 1

    inf_only = [[] for _ in range(n)]
    for u, v, c in net.arcs:
        add_edge(u, v, big if c is INF else c)
        add_edge(v, u, 0)
        if c is INF:
            inf_only[u].append(v)

    # unbounded iff the sink is reachable through INF arcs alone
    seen = {net.source}
    stack = [net.source]
    while stack:
        u = stack.pop()
        for v in inf_only[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if net.sink in seen:
        raise ValueError("no finite cut: sink reachable through unbounded arcs")

    s, t = net.source, net.sink
    flow = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = [s]
        for u in queue:
            e = first[u]
            while e != -1:
                v = head[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
                e = nxt[e]
        if level[t] < 0:
            break
        it = list(first)

        def dfs(u, pushed):
            if u == t:
                return pushed
            while it[u] != -1:
                e = it[u]
                v = head[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    got = dfs(v, min(pushed, cap[e]))
                    if got:
                        cap[e] -= got
                        cap[e ^ 1] += got
                        return got
                it[u] = nxt[e]
            return 0

        while True:
            pushed = dfs(s, big)
            if not pushed:
                break
            flow += pushed

    # nodes that reach t in the residual graph (residual arc u->v iff the
    # stored arc e with head v, tail head[e^1], has cap[e] > 0)
    reach_t = {t}
    stack = [t]
    radj = [[] for _ in range(n)]
    for e in range(len(head)):
        if cap[e] > 0:
            u = head[e ^ 1]
            radj[head[e]].append(u)
    while stack:
        v = stack.pop()
        for u in radj[v]:
            if u not in reach_t:
                reach_t.add(u)
                stack.append(u)
    source_side = frozenset(v for v in range(n) if v not in reach_t)
    assert s in source_side and t not in source_side

    # cut value check: sum of original capacities crossing the cut
    crossing = 0
    for u, v, c in net.arcs:
        if u in source_side and v not in source_side:
            crossing += big if c is INF else c
    assert crossing == flow, (crossing, flow)
    return flow, CutResult(flow, source_side)


# ---------------------------------------------------------------------------
# bipartite maximum independent set (Koenig)


def bipartite_mis(g: Graph, coloring):
    """Maximum independent set of a bipartite graph: (size, witness).

    alpha = n - max matching (Koenig); the witness is the complement of the
    alternating-reachability vertex cover and is verified independent.
    """
    if len(coloring) != g.n or any(c not in (0, 1) for c in coloring):
        raise ValueError("coloring must assign 0/1 to every vertex")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise ValueError(f"improper coloring: edge ({u},{v}) is monochromatic")
    left = [v for v in range(g.n) if coloring[v] == 0]
    right = [v for v in range(g.n) if coloring[v] == 1]
    rpos = {v: j for j, v in enumerate(right)}
    adj = []
    for u in left:
        mask = 0
        w = g.adj[u]
        while w:
            x = (w & -w).bit_length() - 1
            w &= w - 1
            mask |= 1 << rpos[x]
        adj.append(mask)
    msize, match_right = kernels.bipartite_matching(len(left), len(right), adj)
    match_left = [-1] * len(left)
    for j, i in enumerate(match_right):
        if i >= 0:
            match_left[i] = j
    # alternating reachability from unmatched left vertices
    zl = 0
    zr = 0
    stack = [i for i in range(len(left)) if match_left[i] < 0]
    for i in stack:
        zl |= 1 << i
    while stack:
        i = stack.pop()
        w = adj[i] & ~zr
        zr |= w
        while w:
            j = (w & -w).bit_length() - 1
            w &= w - 1
            i2 = match_right[j]
            if i2 >= 0 and not (zl >> i2) & 1:
                zl |= 1 << i2
                stack.append(i2)
    witness = {left[i] for i in range(len(left)) if (zl >> i) & 1}
    witness |= {right[j] for j in range(len(right)) if not (zr >> j) & 1}
    assert len(witness) == g.n - msize
    assert g.is_independent(witness)
    return len(witness), witness


# ---------------------------------------------------------------------------
# parametric ratio minimization (Dinkelbach iteration)


def _ratio_network(svars, ground, nbr, p, q):
    """s -> v capacity p for v in S, c -> t capacity q, v -> c unbounded."""
    sidx = {v: i + 1 for i, v in enumerate(svars)}
    cidx = {c: len(svars) + 1 + i for i, c in enumerate(ground)}
    t = len(svars) + len(ground) + 1
    net = FlowNetwork(t + 1, 0, t)
    for v in svars:
        net.add_arc(0, sidx[v], p)
        for c in nbr[v]:
            net.add_arc(sidx[v], cidx[c], INF)
    for c in ground:
        net.add_arc(cidx[c], t, q)
    return net, sidx, cidx


def min_ratio_subset(svars, nbr):
    """min over nonempty S' of |N(S')| / |S'| with N(S') = union of nbr.

    Returns (maximal minimizer S*, exact ratio).  Dinkelbach iteration: a
    candidate ratio p/q prices the network s->v at p and c->t at q; a min
    cut below p*|S| certifies a strictly better subset, and at the fixpoint
    the maximal min-cut source side is the maximal minimizer.
    """
    svars = sorted(set(svars))
    if not svars:
        raise ValueError("min_ratio_subset needs a nonempty ground set")
    zero = {v for v in svars if not nbr[v]}
    if zero:
        return zero, Fraction(0)
    ground = sorted(set().union(*(nbr[v] for v in svars)))
    if set(ground) & set(svars):
        raise ValueError("neighborhood ground set must be disjoint from S")

    def nset(sub):
        return set().union(*(nbr[v] for v in sub)) if sub else set()

    best_set = set(svars)
    best = Fraction(len(nset(best_set)), len(best_set))
    while True:
        p, q = best.numerator, best.denominator
        net, sidx, cidx = _ratio_network(svars, ground, nbr, p, q)
        _, cut = max_flow(net)
        chosen = {v for v in svars if sidx[v] in cut.source_side}
        if not chosen:
            break
        ratio = Fraction(len(nset(chosen)), len(chosen))
        if ratio < best:
            best = ratio
            best_set = chosen
        else:
            if ratio == best:
                best_set = chosen  # maximal minimizer from the maximal cut
            break
    return best_set, best


def min_ratio_subset_exhaustive(svars, nbr):
    """Oracle twin of min_ratio_subset: scans all nonempty subsets."""
    svars = sorted(set(svars))
    ratios = {}
    for mask in range(1, 1 << len(svars)):
        sub = frozenset(svars[i] for i in range(len(svars)) if (mask >> i) & 1)
        nbrs = set().union(*(nbr[v] for v in sub)) if sub else set()
        ratios[sub] = Fraction(len(nbrs), len(sub))
    best = min(ratios.values())
    # minimizers are closed under union, so their union is the maximal one
    best_set = set().union(*(s for s, r in ratios.items() if r == best))
    return best_set, best


def min_ratio_subset_by_difference(svars, nbr):
    """The difference-minimizing recursion (argmin |N(S')| - |S'|, then
    recurse on the rest).  Returns (S*, ratio) or None when the recursion
    does not make progress; kept as a cross-check path only."""
    svars = sorted(set(svars))
    if not svars:
        raise ValueError("empty ground set")
    zero = {v for v in svars if not nbr[v]}
    if zero:
        return zero, Fraction(0)
    ground = sorted(set().union(*(nbr[v] for v in svars)))
    best = None
    best_set = None
    remaining = list(svars)
    while remaining:
        net, sidx, _ = _ratio_network(remaining, ground, nbr, 1, 1)
        _, cut = max_flow(net)
        s1 = {v for v in remaining if sidx[v] in cut.source_side}
        if not s1:
            return None  # no progress: the maximal difference minimizer is empty
        nbrs = set().union(*(nbr[v] for v in s1))
        ratio = Fraction(len(nbrs), len(s1))
        if best is None or ratio < best:
            best = ratio
            best_set = s1
        remaining = [v for v in remaining if v not in s1]
    return best_set, best
