"""Maximum independent sets of categorical products for structured factors:
cographs (cotree recursion), splitgraphs (three bipartite cases), complete
multipartite graphs (closed form), and the K4-product extraction that
rebuilds an independent set of the first factor from one of G x K4.
"""

from __future__ import annotations

from .cotree import LEAF, UNION, Cotree
from .graph import Graph, categorical_product, complete_graph
from .kernels import bipartite_matching
from .splitgraph import SplitPartition


def _product_id(hn, a, b):
    return a * hn + b


def alpha_product_cographs(tg: Cotree, th: Cotree):
    """alpha(G x H) for cographs given by cotrees: (value, witness).

    Recursion: a union factor splits the product into disjoint blocks whose
    alphas add; when both factors are joins, any independent set lives in
    one of the four one-sided blocks, so the four sub-alphas are combined
    by MAX (each is the alpha of an induced subgraph, hence a lower bound,
    and the join adjacency gives the upper bound).  A single-vertex factor
    makes the product edgeless.  Memoized on cotree node pairs; the witness
    is a set of (g,h) leaf pairs converted to row-major product ids.
    """
    memo = {}

    def solve(a: Cotree, b: Cotree):
        key = (id(a), id(b))
        if key in memo:
            return memo[key]
        if a.kind == LEAF or b.kind == LEAF:
            value = a.size * b.size
            witness = {(g, h) for g in a.leaves for h in b.leaves}
        elif a.kind == UNION:
            value = 0
            witness = set()
            for child in a.children:
                v, w = solve(child, b)
                value += v
                witness |= w
        elif b.kind == UNION:
            value = 0
            witness = set()
            for child in b.children:
                v, w = solve(a, child)
                value += v
                witness |= w
        else:
            # both joins: best one-sided block
            best = None
            for child in a.children:
                cand = solve(child, b)
                if best is None or cand[0] > best[0]:
                    best = cand
            for child in b.children:
                cand = solve(a, child)
                if cand[0] > best[0]:
                    best = cand
            value, witness = best
        memo[key] = (value, witness)
        return memo[key]

    value, pairs = solve(tg, th)
    hn = th.size
    witness = {_product_id(hn, g, h) for g, h in pairs}
    return value, witness


def verify_product_witness(g: Graph, h: Graph, witness, size):
    product = categorical_product(g, h)
    assert len(witness) == size
    assert product.is_independent(witness)


def alpha_product_multipartite(sizes_g, sizes_h):
    """alpha(G x H) for complete multipartite factors: every maximal
    independent set is a generalized row or column, so the answer is
    max(alpha(G) * |V(H)|, alpha(H) * |V(G)|)."""
    sizes_g = list(sizes_g)
    sizes_h = list(sizes_h)
    if not sizes_g or not sizes_h:
        raise ValueError("size lists must be nonempty")
    return max(max(sizes_g) * sum(sizes_h), max(sizes_h) * sum(sizes_g))


def multipartite_product_witness(sizes_g, sizes_h):
    """A generalized row (or column) achieving the closed form; rows are
    preferred on ties and the least class index wins."""
    ng, nh = sum(sizes_g), sum(sizes_h)
    row_value = max(sizes_g) * nh
    col_value = max(sizes_h) * ng
    if row_value >= col_value:
        cls = sizes_g.index(max(sizes_g))
        start = sum(sizes_g[:cls])
        gs = range(start, start + sizes_g[cls])
        return {_product_id(nh, g, h) for g in gs for h in range(nh)}
    cls = sizes_h.index(max(sizes_h))
    start = sum(sizes_h[:cls])
    hs = range(start, start + sizes_h[cls])
    return {_product_id(nh, g, h) for g in range(ng) for h in hs}


# ---------------------------------------------------------------------------
# splitgraph products


class _SplitProductMIS:
    """Bipartite machinery shared by the three cases of the splitgraph
    product theorem.

    Side A = (C1 x S2) u (S1 x S2); side B = (S1 x C2) u (C1 x C2).  Every
    case restricts both sides with masks, which keeps the per-case work to
    one matching run instead of one graph build.  Restricted this way each
    case graph is bipartite; this is asserted on construction.
    """

    def __init__(self, g: Graph, p1: SplitPartition, h: Graph, p2: SplitPartition):
        self.g, self.h = g, h
        self.hn = h.n
        c1 = sorted(p1.clique)
        s1 = sorted(p1.independent)
        c2 = sorted(p2.clique)
        s2 = sorted(p2.independent)
        self.c1, self.s1, self.c2, self.s2 = c1, s1, c2, s2
        self.a_side = [(u, v) for u in c1 for v in s2] + [(u, v) for u in s1 for v in s2]
        self.b_side = [(u, v) for u in s1 for v in c2] + [(u, v) for u in c1 for v in c2]
        self.a_pos = {p: i for i, p in enumerate(self.a_side)}
        self.b_pos = {p: i for i, p in enumerate(self.b_side)}
        # adjacency masks from A to B in the categorical product
        self.adj = []
        for (ua, va) in self.a_side:
            mask = 0
            for j, (ub, vb) in enumerate(self.b_side):
                if g.has_edge(ua, ub) and h.has_edge(va, vb):
                    mask |= 1 << j
            self.adj.append(mask)
        # bipartiteness of the case graphs = no edges inside either side
        for p in self.a_side:
            for q in self.a_side:
                if p < q:
                    assert not (
                        g.has_edge(p[0], q[0]) and h.has_edge(p[1], q[1])
                    ), "side A is not independent"
        self.case0_b = 0
        for u in s1:
            for v in c2:
                self.case0_b |= 1 << self.b_pos[(u, v)]

    def _mis(self, a_mask, b_mask):
        """Koenig on the restricted bipartite graph: (size, vertex pairs)."""
        na, nb = len(self.a_side), len(self.b_side)
        for j in range(nb):
            if (b_mask >> j) & 1:
                q = self.b_side[j]
                for j2 in range(j + 1, nb):
                    if (b_mask >> j2) & 1:
                        q2 = self.b_side[j2]
                        assert not (
                            self.g.has_edge(q[0], q2[0]) and self.h.has_edge(q[1], q2[1])
                        ), "side B restriction is not independent"
        msize, match_right = bipartite_matching(na, nb, self.adj, a_mask, b_mask)
        match_left = [-1] * na
        for j, i in enumerate(match_right):
            if i >= 0:
                match_left[i] = j
        zl = 0
        zr = 0
        stack = []
        for i in range(na):
            if (a_mask >> i) & 1 and match_left[i] < 0:
                zl |= 1 << i
                stack.append(i)
        while stack:
            i = stack.pop()
            w = self.adj[i] & b_mask & ~zr
            zr |= w
            while w:
                j = (w & -w).bit_length() - 1
                w &= w - 1
                i2 = match_right[j]
                if i2 >= 0 and not (zl >> i2) & 1:
                    zl |= 1 << i2
                    stack.append(i2)
        pairs = [self.a_side[i] for i in range(na) if (a_mask >> i) & 1 and (zl >> i) & 1]
        pairs += [self.b_side[j] for j in range(nb) if (b_mask >> j) & 1 and not (zr >> j) & 1]
        total = (a_mask.bit_count() + b_mask.bit_count()) - msize
        assert len(pairs) == total
        return total, pairs

    def case0(self):
        full_a = (1 << len(self.a_side)) - 1
        return self._mis(full_a, self.case0_b)

    def case1(self, cv1, cv2):
        """Exactly one rook vertex (cv1, cv2): delete its neighbors from the
        case-0 graph and add the vertex itself."""
        a_mask = 0
        for i, (u, v) in enumerate(self.a_side):
            if not (self.g.has_edge(cv1, u) and self.h.has_edge(cv2, v)):
                a_mask |= 1 << i
        b_mask = 0
        for u in self.s1:
            for v in self.c2:
                if not (self.g.has_edge(cv1, u) and self.h.has_edge(cv2, v)):
                    b_mask |= 1 << self.b_pos[(u, v)]
        size, pairs = self._mis(a_mask, b_mask)
        return size + 1, pairs + [(cv1, cv2)]

    def case2_row(self, cv1):
        """Rook vertices confined to row cv1: side B becomes W u ({cv1} x C2)
        with W = {(s1, c2) : s1 not adjacent to cv1}."""
        full_a = (1 << len(self.a_side)) - 1
        b_mask = 0
        for u in self.s1:
            if not self.g.has_edge(cv1, u):
                for v in self.c2:
                    b_mask |= 1 << self.b_pos[(u, v)]
        for v in self.c2:
            b_mask |= 1 << self.b_pos[(cv1, v)]
        return self._mis(full_a, b_mask)

def alpha_product_split(g: Graph, p1: SplitPartition, h: Graph, p2: SplitPartition):
    """alpha(G x H) for splitgraphs: (value, witness).

    Maximum over independent sets with zero, one, or >= 2 vertices in the
    rook block C1 x C2.  Two or more rook vertices must pairwise share a
    coordinate, hence all lie in one row or one column; the column case is
    the row case of the factor-swapped product, so it runs on a second
    solver built for (H, G) and the pairs are flipped back.
    """
    p1.validate(g)
    p2.validate(h)
    solver = _SplitProductMIS(g, p1, h, p2)
    best, pairs = solver.case0()
    for cv1 in solver.c1:
        for cv2 in solver.c2:
            size, cand = solver.case1(cv1, cv2)
            if size > best:
                best, pairs = size, cand
    for cv1 in solver.c1:
        size, cand = solver.case2_row(cv1)
        if size > best:
            best, pairs = size, cand
    swapped = _SplitProductMIS(h, p2, g, p1)
    for cv2 in swapped.c1:
        size, cand = swapped.case2_row(cv2)
        if size > best:
            best, pairs = size, [(u, v) for v, u in cand]
    witness = {_product_id(h.n, u, v) for u, v in pairs}
    product = categorical_product(g, h)
    assert product.is_independent(witness) and len(witness) == best
    return best, witness


# ---------------------------------------------------------------------------
# K4-product extraction


def extract_is_from_k4_product(g: Graph, s_prime):
    """From an independent set of G x K4 (max degree of G at most 3),
    rebuild an independent set of G of size >= |S'|/4.

    Iterative rewrite: a projected vertex s in conflict occurs with exactly
    one K4-coordinate t; its projected neighbors then occur only with that
    same t, so their product vertices move into s's K4-column and the
    neighbors leave the projection.  Conflicts strictly decrease.
    """
    if max((g.degree(v) for v in range(g.n)), default=0) > 3:
        raise ValueError("extraction requires maximum degree <= 3")
    k4 = 4
    product = categorical_product(g, complete_graph(k4))
    s_prime = set(s_prime)
    if not product.is_independent(s_prime):
        raise ValueError("input set is not independent in G x K4")
    pairs = {(pid // k4, pid % k4) for pid in s_prime}
    original_size = len(pairs)

    def projection():
        return {gv for gv, _ in pairs}

    while True:
        proj = projection()
        conflict = None
        for s in sorted(proj):
            if any(u in proj for u in g.neighbors(s)):
                conflict = s
                break
        if conflict is None:
            break
        s = conflict
        ts = {t for gv, t in pairs if gv == s}
        assert len(ts) == 1, "conflicted vertex occurs with several K4 coordinates"
        t0 = next(iter(ts))
        nbrs_in_proj = sorted(u for u in g.neighbors(s) if u in proj)
        removed = []
        for u in nbrs_in_proj:
            for t in range(k4):
                if (u, t) in pairs:
                    assert t == t0, "neighbor occurs with a different coordinate"
                    pairs.discard((u, t))
                    removed.append(u)
        free_ts = sorted(set(range(k4)) - {t0})
        for t in free_ts[: len(removed)]:
            pairs.add((s, t))
        assert len(removed) <= 3

    assert len(pairs) == original_size
    result = projection()
    assert g.is_independent(result)
    assert 4 * len(result) >= original_size
    return result
