"""Command-line front end.

Verbs: ``graph-check``, ``graph-trees``, ``graph-laplacian``,
``graph-green`` for the graph apparatus; ``weight`` for the
weight-state construction; ``verify`` for the identity and golden-value
suites.  Exit code 0 on success, 1 when a check or verification fails,
2 on bad input.  All output is deterministic: polynomials print in
canonical term order and JSON keys are sorted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chiral
from . import golden as golden_mod
from . import graphs as graphs_mod
from . import jouanolou, laman
from .errors import InputError, LamanChiralError, NotTypeIPrime, VerificationError

GOLDEN_ORDER = ("triangle", "theta", "threeloop", "d1")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _weights_for(g, args) -> dict:
    if args.weights:
        return graphs_mod.parse_weights(g, _load_json(args.weights))
    return graphs_mod.symbolic_weights(g)


def _cmd_graph_check(args) -> int:
    g = laman.SimpleGraph.from_json_dict(_load_json(args.graph))
    check = laman.is_laman(g)
    code = 0
    if check.ok:
        print("LAMAN")
    else:
        print(f"NOT LAMAN: {check.reason}")
        code = 1
    if args.sequence:
        o, v1 = args.sequence
        try:
            seq = laman.find_type1prime_sequence(g, o, (o, v1))
        except NotTypeIPrime as exc:
            print(f"NOT TYPE I': {exc}")
            return 1
        print(f"TYPE I': {json.dumps(seq, sort_keys=True)}")
    return code


def _cmd_graph_trees(args) -> int:
    g = graphs_mod.DirectedGraph.from_json_dict(_load_json(args.graph))
    trees = g.spanning_trees()
    if args.format == "json":
        _emit_json([list(t) for t in trees])
    else:
        print(f"{len(trees)} spanning trees")
        for t in trees:
            print(" ".join(t))
    return 0


def _cmd_graph_laplacian(args) -> int:
    g = graphs_mod.DirectedGraph.from_json_dict(_load_json(args.graph))
    idx, mat = graphs_mod.weighted_laplacian(g, _weights_for(g, args))
    if args.format == "json":
        _emit_json(
            {
                "index": list(idx),
                "entries": {
                    f"{vi},{vj}": mat[i][j].text()
                    for i, vi in enumerate(idx)
                    for j, vj in enumerate(idx)
                },
            }
        )
    else:
        for i, vi in enumerate(idx):
            for j, vj in enumerate(idx):
                print(f"M[{vi},{vj}] = {mat[i][j].text()}")
    return 0


def _cmd_graph_green(args) -> int:
    g = graphs_mod.DirectedGraph.from_json_dict(_load_json(args.graph))
    idx, rows = graphs_mod.green_function(g, _weights_for(g, args))
    if args.format == "json":
        _emit_json(
            {
                "index": list(idx),
                "entries": {
                    f"{e.id},{vi}": rows[r][i].text()
                    for r, e in enumerate(g.edges)
                    for i, vi in enumerate(idx)
                },
            }
        )
    else:
        for r, e in enumerate(g.edges):
            for i, vi in enumerate(idx):
                print(f"G[{e.id},{vi}] = {rows[r][i].text()}")
    return 0


def _cmd_weight(args) -> int:
    seq = _load_json(args.sequence)
    if args.constant:
        result = chiral.mu_constant(seq)
    else:
        result = chiral.mu_truncated(seq, args.order)
    if args.format == "json":
        _emit_json(result.value.to_json_dict())
    else:
        print(result.value.text())
    return 0


def _cmd_verify(args) -> int:
    suite = args.suite
    if args.which and suite != "golden":
        raise InputError("a golden name is only meaningful for 'verify golden'")
    certs = []
    if suite in ("arnold", "all"):
        certs.append(jouanolou.verify_arnold())
    if suite in ("arnold-cor", "all"):
        certs.append(jouanolou.verify_arnold_corollary())
    if suite in ("genseries", "all"):
        certs.append(jouanolou.verify_generating_series(args.order))
    if suite in ("dmodule", "all"):
        certs.append(jouanolou.verify_defining_relations())
        certs.append(jouanolou.verify_derivative_rule())
        certs.append(jouanolou.verify_dbar_commute(args.seed))
    if suite in ("golden", "all"):
        names = (args.which,) if args.which else GOLDEN_ORDER
        for name in names:
            certs.append(golden_mod.GOLDEN_CHECKS[name]())
    if suite in ("matrixtree", "all"):
        certs.append(graphs_mod.verify_matrix_tree(seed=args.seed))
    if suite in ("green", "all"):
        certs.append(graphs_mod.verify_green_bound(seed=args.seed))
    if suite in ("momentum", "all"):
        certs.append(chiral.verify_momentum_conservation(seed=args.seed))
    if suite in ("residue", "all"):
        certs.append(chiral.residue_d1_dmodule_check(seed=args.seed))
    code = 0
    for c in certs:
        status = "OK" if c.ok else "FAIL"
        print(f"{c.name}: {status} ({c.detail})")
        if not c.ok:
            code = 1
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamanchiral",
        description="Exact Laman-graph and chiral weight-state toolkit.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("graph-check", help="Laman count test, optional construction search")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument(
        "--sequence",
        nargs=2,
        metavar=("O", "V1"),
        help="also search for a construction from base edge (O, V1)",
    )
    p.set_defaults(func=_cmd_graph_check)

    p = sub.add_parser("graph-trees", help="list spanning trees")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_graph_trees)

    p = sub.add_parser("graph-laplacian", help="weighted Laplacian entries")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--weights", help="weights JSON file (default: symbolic)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_graph_laplacian)

    p = sub.add_parser("graph-green", help="Green's-function entries, cross-checked")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--weights", help="weights JSON file (default: symbolic)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_graph_green)

    p = sub.add_parser("weight", help="run a construction sequence")
    p.add_argument("sequence", help="sequence JSON file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--constant", action="store_true", help="constant term of the operation"
    )
    group.add_argument(
        "--order", type=int, metavar="N", help="series truncated at momentum degree N"
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        choices=(
            "arnold",
            "arnold-cor",
            "genseries",
            "golden",
            "dmodule",
            "matrixtree",
            "green",
            "momentum",
            "residue",
            "all",
        ),
    )
    p.add_argument(
        "which",
        nargs="?",
        choices=GOLDEN_ORDER,
        help="single golden value (verify golden only)",
    )
    p.add_argument("--order", type=int, default=3, metavar="N", help="genseries order")
    p.add_argument("--seed", type=int, default=0, metavar="U64", help="seed for the random sweeps")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 1
    except LamanChiralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
