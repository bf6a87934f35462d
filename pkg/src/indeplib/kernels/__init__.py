"""Kernel dispatch: compiled extension when available and the graph fits
in 127 bits, pure Python otherwise.

Set INDEPLIB_FORCE_PURE=1 in the environment to skip the extension (used by
the benchmark and the kernel-equivalence tests).
"""

import os

from . import _pykernels

if os.environ.get("INDEPLIB_FORCE_PURE"):
    _ckernels = None
else:
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None

HAVE_COMPILED = _ckernels is not None
_COMPILED_MAX_N = 127


def _impl(n):
    if HAVE_COMPILED and n <= _COMPILED_MAX_N:
        return _ckernels
    return _pykernels


def max_independent_set(adj, initial_best=0):
    """(size, vertex mask) of a maximum independent set; deterministic."""
    return _impl(len(adj)).max_independent_set(adj, initial_best)


def maximal_independent_sets(adj):
    """Deterministic stream of all maximal independent sets (as masks)."""
    return _impl(len(adj)).maximal_independent_sets(adj)


def count_maximal_independent_sets(adj):
    return _impl(len(adj)).count_maximal_independent_sets(adj)


def bipartite_matching(nleft, nright, adj, left_mask=-1, right_mask=-1):
    """(matching size, match_right list); Kuhn's augmenting paths."""
    return _impl(max(nleft, nright)).bipartite_matching(
        nleft, nright, adj, left_mask, right_mask
    )


def clique_cover_bound(adj, mask):
    return _pykernels.clique_cover_bound(adj, mask)
