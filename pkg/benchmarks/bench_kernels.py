"""Compare the compiled kernels against the pure-Python fallback.

Runs the hot kernels (branch-and-bound maximum independent set, maximal
independent set enumeration, bipartite matching) on identical random
inputs through both implementations and prints a timing table.

Usage: python benchmarks/bench_kernels.py [--seed N] [--trials N]
"""

import argparse
import random
import time

from indeplib.kernels import HAVE_COMPILED, _pykernels


def _random_adj(n, p, rng):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def bench(label, fn, inputs, materialize=False):
    start = time.perf_counter()
    if materialize:
        # the enumeration kernels return generators; consume them
        out = [list(fn(*args)) for args in inputs]
    else:
        out = [fn(*args) for args in inputs]
    elapsed = time.perf_counter() - start
    return elapsed, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=30)
    args = parser.parse_args()

    if not HAVE_COMPILED:
        print("compiled extension not available; nothing to compare")
        return

    from indeplib.kernels import _ckernels

    rng = random.Random(args.seed)
    mis_inputs = [(_random_adj(55, 0.25, rng),) for _ in range(args.trials)]
    enum_inputs = [(_random_adj(27, 0.15, rng),) for _ in range(args.trials)]
    match_inputs = []
    for _ in range(args.trials):
        nl = nr = 60
        adj = [rng.getrandbits(nr) for _ in range(nl)]
        match_inputs.append((nl, nr, adj))

    cases = [
        ("max_independent_set n=55", "max_independent_set", mis_inputs),
        ("maximal_independent_sets n=27", "maximal_independent_sets", enum_inputs),
        ("bipartite_matching 60x60", "bipartite_matching", match_inputs),
    ]
    print(f"{'kernel':35} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for label, name, inputs in cases:
        materialize = name == "maximal_independent_sets"
        ct, cout = bench(label, getattr(_ckernels, name), inputs, materialize)
        pt, pout = bench(label, getattr(_pykernels, name), inputs, materialize)
        if name == "maximal_independent_sets":
            assert [sorted(a) for a in cout] == [sorted(b) for b in pout]
        elif name == "bipartite_matching":
            assert [a[0] for a in cout] == [b[0] for b in pout]
        else:
            assert cout == pout
        print(f"{label:35} {ct:9.3f}s {pt:9.3f}s {pt / ct:7.1f}x")


if __name__ == "__main__":
    main()
