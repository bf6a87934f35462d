"""Command line front end.

Subcommands: product, alpha, capacity, domination, check.  Exit codes:
0 ok, 1 property violation, 2 input error, 3 resource limit.  With --json
each result is one JSON object per line with the fixed field set
{command, input, engine, a, a_star, alpha, witness, fpm}; rationals are
serialized as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from fractions import Fraction

from . import capacity as cap
from . import io as gio
from .config import oracle_limit
from .cotree import cograph_recognize
from .errors import (
    IndeplibError,
    InvalidDecomposition,
    InvalidModel,
    LimitExceeded,
    NotACograph,
    NotASplitgraph,
    ParseError,
)
from .graph import Graph, categorical_product, graph_power, neighborhood
from .oracles import a_bruteforce, alpha_exact
from .product_alpha import alpha_product_cographs, alpha_product_split
from .ratio import ratio_decimal, ratio_str
from .splitgraph import split_partition
from .treedecomp import validate_and_nicify

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def _emit(args, human, record):
    if args.json:
        full = {
            "command": None,
            "input": None,
            "engine": None,
            "a": None,
            "a_star": None,
            "alpha": None,
            "witness": None,
            "fpm": None,
        }
        full.update(record)
        print(json.dumps(full, sort_keys=True))
    else:
        print(human)


def _load_graph(path) -> Graph:
    return gio.parse_graph(gio.read_text(path))


def cmd_product(args):
    if args.power is not None:
        if len(args.files) != 1:
            raise ParseError("--power takes exactly one graph file")
        g = _load_graph(args.files[0])
        result = graph_power(g, args.power)
    else:
        if len(args.files) != 2:
            raise ParseError("product takes two graph files (or one with --power)")
        g = _load_graph(args.files[0])
        h = _load_graph(args.files[1])
        result = categorical_product(g, h)
    sys.stdout.write(gio.format_graph(result))
    return EXIT_OK


def cmd_alpha(args):
    g = _load_graph(args.files[0])
    h = _load_graph(args.files[1])
    inputs = f"{args.files[0]} x {args.files[1]}"
    engine = None
    if not args.oracle:
        if args.split:
            p1, p2 = split_partition(g), split_partition(h)
            value, witness = alpha_product_split(g, p1, h, p2)
            engine = "split"
        else:
            try:
                tg, th = cograph_recognize(g), cograph_recognize(h)
                value, witness = alpha_product_cographs(tg, th)
                engine = "cograph"
            except NotACograph:
                if args.cotree:
                    raise
                try:
                    p1, p2 = split_partition(g), split_partition(h)
                    value, witness = alpha_product_split(g, p1, h, p2)
                    engine = "split"
                except NotASplitgraph:
                    engine = None
    if engine is None:
        product = categorical_product(g, h)
        value, mask_or_set = alpha_exact(product, limit=oracle_limit())
        witness = mask_or_set
        engine = "oracle"
    human = f"alpha={value} engine={engine}"
    witness = sorted(witness)
    if args.witness:
        human += " witness=" + ",".join(str(v) for v in witness)
    _emit(
        args,
        human,
        {
            "command": "alpha",
            "input": inputs,
            "engine": engine,
            "alpha": value,
            "witness": witness if args.witness else None,
        },
    )
    return EXIT_OK


def _capacity_result(args):
    if args.cotree:
        t = gio.parse_cotree_file(gio.read_text(args.file))
        return cap.tensor_capacity(cotree=t)
    if args.interval:
        model = gio.parse_interval_model(gio.read_text(args.file))
        return cap.tensor_capacity(interval=model)
    if args.permutation:
        model = gio.parse_permutation_model(gio.read_text(args.file))
        return cap.tensor_capacity(permutation=model)
    g = _load_graph(args.file)
    if args.td:
        bags, tree_edges, n = gio.parse_tree_decomposition(gio.read_text(args.td))
        if n != g.n:
            raise ParseError(f"decomposition declares {n} vertices, graph has {g.n}")
        nice = validate_and_nicify(g, bags, tree_edges)
        return cap.tensor_capacity(g, decomposition=nice)
    if args.split:
        return cap.tensor_capacity(g, split=split_partition(g))
    return cap.tensor_capacity(g, limit=oracle_limit())


def cmd_capacity(args):
    res = _capacity_result(args)
    human = (
        f"a={ratio_str(res.a)} (~{ratio_decimal(res.a)})"
        f" theta={ratio_str(res.a_star)} (~{ratio_decimal(res.a_star)})"
        f" engine={res.engine.value} fpm={'true' if res.has_fpm else 'false'}"
    )
    witness = sorted(res.witness)
    if args.witness:
        human += " witness=" + ",".join(str(v) for v in witness)
    _emit(
        args,
        human,
        {
            "command": "capacity",
            "input": args.file,
            "engine": res.engine.value,
            "a": ratio_str(res.a),
            "a_star": ratio_str(res.a_star),
            "witness": witness if args.witness else None,
            "fpm": res.has_fpm,
        },
    )
    return EXIT_OK


def cmd_domination(args):
    from .domination import (
        ri_complete_bipartite_power,
        ultimate_independent_domination_multipartite,
    )

    if args.bipartite:
        m, n = args.bipartite
        label = f"bipartite {m} {n}"
        rows = [(k, ri_complete_bipartite_power(m, n, k)) for k in range(1, args.kmax + 1)]
        limit = ultimate_independent_domination_multipartite([m, n])
    else:
        sizes = args.multipartite
        label = "multipartite " + " ".join(str(s) for s in sizes)
        rows = []
        limit = ultimate_independent_domination_multipartite(sizes)
    if args.json:
        for k, r in rows:
            _emit(args, "", {"command": "domination", "input": f"{label} k={k}", "a": ratio_str(r)})
        _emit(args, "", {"command": "domination", "input": f"{label} limit", "a": ratio_str(limit)})
    else:
        print("k,r_i")
        for k, r in rows:
            print(f"{k},{ratio_str(r)}")
        print(f"I={ratio_str(limit)}")
    return EXIT_OK


def cmd_check(args):
    g = _load_graph(args.file)
    failures = 0

    def report(name, ok, detail=""):
        nonlocal failures
        status = "ok" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"{name}: {status}{suffix}")
        if not ok:
            failures += 1

    limit = oracle_limit()
    if g.n > limit:
        print(f"all checks skipped: {g.n} vertices exceeds limit {limit}")
        return EXIT_OK
    base = cap.tensor_capacity(g, limit=limit)
    values = {"general": base.a}
    if g.n <= 20:
        values["brute"] = a_bruteforce(g)[0]
    try:
        values["cograph"] = cap.a_cograph(cograph_recognize(g)).a
    except NotACograph:
        pass
    try:
        values["split"] = cap.a_split(g, split_partition(g)).a
    except NotASplitgraph:
        pass
    agree = len(set(values.values())) == 1
    report(
        "engines agree",
        agree,
        " vs ".join(f"{k}={ratio_str(v)}" for k, v in sorted(values.items())),
    )
    fpm = cap.has_fractional_perfect_matching(g)
    report("a*=1 iff no fractional perfect matching", (base.a_star == 1) == (not fpm))
    if g.n <= 5:
        squared = cap.tensor_capacity(graph_power(g, 2), limit=limit)
        report("toth a*(G^2)=a*(G)", squared.a_star == base.a_star)
    else:
        print("toth a*(G^2)=a*(G): skipped (size)")
    wit = base.witness
    ok = (
        bool(wit)
        and g.is_independent(wit)
        and base.a == Fraction(len(wit), len(wit) + len(neighborhood(g, wit)))
    )
    report("witness achieves a", ok)
    return EXIT_VIOLATION if failures else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="indeplib",
        description="Independent sets of tensor products and the tensor capacity.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable JSON-lines output")
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for parallel engines (accepted for compatibility; "
        "all current engines are single-threaded and deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="write the categorical product (or power) as an edge list")
    p.add_argument("files", nargs="+")
    p.add_argument("--power", type=int, default=None, help="compute G^k of a single graph")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("alpha", help="alpha(G x H) via class engines or the explicit oracle")
    p.add_argument("files", nargs=2)
    p.add_argument("--cotree", action="store_true", help="require the cograph engine")
    p.add_argument("--split", action="store_true", help="require the splitgraph engine")
    p.add_argument("--oracle", action="store_true", help="force explicit product + exact search")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("capacity", help="a(G) and theta = a*(G)")
    p.add_argument("file")
    p.add_argument("--cotree", action="store_true", help="input file is a cotree expression")
    p.add_argument("--interval", action="store_true", help="input file is an interval model")
    p.add_argument("--permutation", action="store_true", help="input file is a permutation model")
    p.add_argument("--td", default=None, help="tree decomposition file for the input graph")
    p.add_argument("--split", action="store_true", help="use the splitgraph engine")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("domination", help="independent domination ratios of powers")
    p.add_argument("--bipartite", nargs=2, type=int, metavar=("M", "N"))
    p.add_argument("--multipartite", nargs="+", type=int, metavar="SIZE")
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=cmd_domination)

    p = sub.add_parser("check", help="run the invariant suite on one graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "domination" and bool(args.bipartite) == bool(args.multipartite):
        print("domination needs exactly one of --bipartite or --multipartite", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, InvalidModel, InvalidDecomposition, NotACograph, NotASplitgraph) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (IndeplibError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
