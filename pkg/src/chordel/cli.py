"""Command-line entry point: recognize, solve, oracle, reduce, generate, selftest.

Reports are line-delimited: human text by default, JSON records with
--format records, one result object per input file.  Exit codes: 0 success,
1 solver precondition failure (obstruction printed), 2 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import randgen
from .graph import DeletionResult, Graph, GraphInputError, delete_vertices, vset
from .graphio import sniff_and_parse, write_edge_list
from .interval import (
    IntervalModel,
    max_cluster_subgraph,
    max_complete_split_subgraph,
    model_to_graph,
    parse_interval_model,
    write_interval_model,
)
from .matching import Bipartition, max_matching, min_vertex_cover
from .oracle import oracle_min_deletion
from .recognition import (
    BASE_LABELS,
    CHORDAL,
    CLUSTER,
    COMPLETE_SPLIT,
    ClassLabel,
    NotInClassError,
    SPLIT,
    f_free,
    kp_free,
    recognize,
    split_partition,
)
from .reductions import (
    reduce_chain_to_threshold,
    reduce_threshold_to_interval,
    reduce_vc_to_ffree,
)
from .split_solvers import (
    delete_to_2k2p3,
    delete_to_cluster_split,
    delete_to_complete_split,
    delete_to_unit_interval_split,
)
from .structural import (
    delete_to_cluster_block,
    delete_to_cluster_tree,
    delete_to_cochain_chordal,
    max_independent_set_chordal,
)
from .graph import bipartition_classes

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_BAD_INPUT = 2


def _digest(g: Graph) -> str:
    return hashlib.sha256(write_edge_list(g).encode()).hexdigest()[:12]


def _emit(report: dict, fmt: str) -> None:
    if fmt == "records":
        print(json.dumps(report, sort_keys=True))
        return
    bits = []
    for key, val in report.items():
        if key in ("command",):
            continue
        bits.append(f"{key}={val}")
    print(f"[{report['command']}] " + " ".join(bits))


def _load_graph(path: str) -> tuple[Graph, list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        return sniff_and_parse(fh.read())


def _load_model(path: str) -> tuple[IntervalModel, list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_interval_model(fh.read())


def parse_class_label(text: str) -> ClassLabel:
    if text in BASE_LABELS:
        return BASE_LABELS[text]
    if text.startswith("kp:"):
        return kp_free(int(text.split(":", 1)[1]))
    if text.startswith("f-free:"):
        g, _ = _load_graph(text.split(":", 1)[1])
        return f_free(g)
    raise GraphInputError(f"unknown class label {text!r}")


def _labelled(ids, labels: list[str]) -> list[str]:
    return [labels[v] for v in ids]


def _cmd_recognize(args, fmt: str) -> int:
    label = parse_class_label(args.klass)
    code = EXIT_OK
    for path in args.inputs:
        g, labels = _load_graph(path)
        t0 = time.perf_counter()
        verdict = recognize(g, label)
        elapsed = (time.perf_counter() - t0) * 1000
        report = {
            "command": "recognize",
            "input": path,
            "digest": _digest(g),
            "n": g.n,
            "m": g.m,
            "class": label.spelling,
            "member": verdict.member,
            "elapsed_ms": round(elapsed, 3),
        }
        if not verdict.member:
            report["witness"] = _labelled(verdict.witness, labels)
            report["witness_name"] = verdict.witness_name
        elif label.name == "split":
            part = split_partition(g)
            report["clique"] = _labelled(part.clique, labels)
            report["independent"] = _labelled(part.independent, labels)
        _emit(report, fmt)
    return code


_GRAPH_SOLVERS = {
    "split-to-2k2p3": delete_to_2k2p3,
    "split-to-cluster": delete_to_cluster_split,
    "split-to-complete-split": delete_to_complete_split,
    "split-to-unit-interval": delete_to_unit_interval_split,
    "tree-to-cluster": delete_to_cluster_tree,
    "block-to-cluster": delete_to_cluster_block,
    "chordal-to-co-chain": delete_to_cochain_chordal,
}

_MODEL_SOLVERS = {
    "interval-to-cluster": max_cluster_subgraph,
    "interval-to-complete-split": max_complete_split_subgraph,
}


def _solve_one(args, g: Graph) -> DeletionResult:
    problem = args.problem
    if problem in _GRAPH_SOLVERS:
        return _GRAPH_SOLVERS[problem](g)
    if problem == "chordal-to-kp":
        p = args.p
        if p is None:
            raise GraphInputError("chordal-to-kp needs --p")
        chordality = recognize(g, CHORDAL)
        if not chordality.member:
            raise NotInClassError("chordal", chordality.witness, "hole")
        if p == 2:
            keep = max_independent_set_chordal(g)
            deleted = vset(set(g.vertices()) - set(keep))
            return DeletionResult(deleted, kp_free(2), "chordal-to-k2-free")
        print(
            f"warning: no polynomial routine wired for p={p}; "
            "exponential oracle fallback",
            file=sys.stderr,
        )
        result = oracle_min_deletion(g, kp_free(p))
        return result
    if problem == "chordal-to-split":
        print(
            "warning: chordal-to-split has no implemented polynomial routine; "
            "exponential oracle fallback",
            file=sys.stderr,
        )
        chordality = recognize(g, CHORDAL)
        if not chordality.member:
            raise NotInClassError("chordal", chordality.witness, "hole")
        return oracle_min_deletion(g, SPLIT)
    raise GraphInputError(f"unknown problem {args.problem!r}")


def _cmd_solve(args, fmt: str) -> int:
    problem = args.problem
    if problem in _MODEL_SOLVERS:
        if not args.model:
            raise GraphInputError(f"{problem} needs --model")
        model, labels = _load_model(args.model)
        g = model_to_graph(model)
        t0 = time.perf_counter()
        kept = _MODEL_SOLVERS[problem](model)
        elapsed = (time.perf_counter() - t0) * 1000
        deleted = vset(set(range(model.n)) - set(kept))
        target = CLUSTER if problem == "interval-to-cluster" else COMPLETE_SPLIT
        result = DeletionResult(deleted, target, problem)
        report = {
            "command": "solve",
            "problem": problem,
            "input": args.model,
            "digest": _digest(g),
            "n": g.n,
            "m": g.m,
            "k": result.size,
            "deleted": _labelled(result.deleted, labels),
            "target": target.spelling,
            "elapsed_ms": round(elapsed, 3),
        }
        if args.verify:
            report["verified"] = _verify_result(g, result)
        _emit(report, fmt)
        return EXIT_OK

    for path in args.inputs:
        g, labels = _load_graph(path)
        t0 = time.perf_counter()
        result = _solve_one(args, g)
        elapsed = (time.perf_counter() - t0) * 1000
        report = {
            "command": "solve",
            "problem": problem,
            "input": path,
            "digest": _digest(g),
            "n": g.n,
            "m": g.m,
            "k": result.size,
            "deleted": _labelled(result.deleted, labels),
            "target": result.target_class.spelling,
            "method": result.method,
            "elapsed_ms": round(elapsed, 3),
        }
        if args.verify:
            report["verified"] = _verify_result(g, result)
        _emit(report, fmt)
    return EXIT_OK


def _verify_result(g: Graph, result: DeletionResult) -> bool:
    rest, _ = delete_vertices(g, result.deleted)
    if not recognize(rest, result.target_class).member:
        return False
    if g.n <= 12:
        ground = oracle_min_deletion(g, result.target_class)
        if ground is None or ground.size != result.size:
            return False
    return True


def _cmd_oracle(args, fmt: str) -> int:
    label = parse_class_label(args.klass)
    for path in args.inputs:
        g, labels = _load_graph(path)
        t0 = time.perf_counter()
        result = oracle_min_deletion(
            g, label, k_max=args.kmax, allow_large=args.allow_large
        )
        elapsed = (time.perf_counter() - t0) * 1000
        report = {
            "command": "oracle",
            "input": path,
            "digest": _digest(g),
            "n": g.n,
            "m": g.m,
            "class": label.spelling,
            "elapsed_ms": round(elapsed, 3),
        }
        if result is None:
            report["exceeds_kmax"] = True
            report["kmax"] = args.kmax
        else:
            report["k"] = result.size
            report["deleted"] = _labelled(result.deleted, labels)
        _emit(report, fmt)
    return EXIT_OK


def _cmd_reduce(args, fmt: str) -> int:
    pair = (args.source, args.target)
    path = args.inputs[0]
    g, labels = _load_graph(path)
    comments = [f"reduction {args.source} -> {args.target}", f"source {path}"]
    if pair == ("chain", "threshold"):
        sides = bipartition_classes(g)
        if sides is None:
            raise NotInClassError("bipartite")
        out = reduce_chain_to_threshold(g, Bipartition(*sides))
        out_labels = labels
    elif pair == ("threshold", "interval"):
        out = reduce_threshold_to_interval(g)
        out_labels = labels + [f"_g{i}" for i in range(g.n, out.n)]
    elif pair == ("vc", "f-free"):
        if not args.pattern:
            raise GraphInputError("vc -> f-free needs --pattern")
        pat, _ = _load_graph(args.pattern)
        anchor = None
        if args.anchor:
            a, b = args.anchor.split(",")
            anchor = (int(a), int(b))
        out = reduce_vc_to_ffree(g, pat, anchor)
        out_labels = labels + [f"_g{i}" for i in range(g.n, out.n)]
        comments.append(f"pattern {args.pattern} anchor {anchor or pat.edges()[0]}")
    else:
        raise GraphInputError(f"unknown reduction {args.source!r} -> {args.target!r}")

    text = write_edge_list(out, out_labels, comments=tuple(comments))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(
            {
                "command": "reduce",
                "from": args.source,
                "to": args.target,
                "input": path,
                "output": args.output,
                "n": out.n,
                "m": out.m,
                "digest": _digest(out),
            },
            fmt,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_generate(args, fmt: str) -> int:
    name, n, seed = args.klass, args.n, args.seed
    comments = (f"generated class={name} n={n} seed={seed}",)
    if name == "interval-model":
        model = randgen.gen_interval_model(n, seed)
        sys.stdout.write(write_interval_model(model))
        return EXIT_OK
    if name == "split":
        g = randgen.gen_split(n, args.edge_bias, seed)
    elif name == "threshold":
        g, creation = randgen.gen_threshold(n, seed)
        comments += ("creation " + " ".join(creation.roles),)
    elif name == "chordal":
        g = randgen.gen_chordal(n, seed)
    elif name == "block":
        g = randgen.gen_block(n, seed)
    elif name == "tree":
        g = randgen.gen_tree(n, seed)
    elif name == "bipartite":
        g, sides = randgen.gen_bipartite(n, args.p_edge, seed)
        comments += (
            "left " + " ".join(map(str, sides.left)),
            "right " + " ".join(map(str, sides.right)),
        )
    else:
        raise GraphInputError(f"unknown generator class {name!r}")
    text = write_edge_list(g, comments=comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(
            {"command": "generate", "class": name, "n": g.n, "m": g.m,
             "seed": seed, "output": args.output, "digest": _digest(g)},
            fmt,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _selftest_suites(seeds: int):
    from .recognition import (
        BLOCK,
        CO_CHAIN,
        INTERVAL,
        THRESHOLD,
        TWO_K2_P3_FREE,
        UNIT_INTERVAL,
    )
    from .reductions import bowtie, bowtie_model
    from .graph import complement

    def gen_recognize():
        for s in range(seeds):
            yield recognize(randgen.gen_split(8, 0.5, s), SPLIT).member
            yield recognize(randgen.gen_threshold(8, s)[0], THRESHOLD).member
            yield recognize(randgen.gen_chordal(8, s), CHORDAL).member
            yield recognize(randgen.gen_block(8, s), BLOCK).member
            yield recognize(
                model_to_graph(randgen.gen_interval_model(7, s)), INTERVAL
            ).member

    def koenig():
        for s in range(seeds):
            g, sides = randgen.gen_bipartite(9, 0.4, s)
            cover = min_vertex_cover(g, sides)
            matching = max_matching(g, sides)
            yield len(cover) == len(matching)

    def solver_oracle():
        split_cases = [
            (delete_to_2k2p3, TWO_K2_P3_FREE),
            (delete_to_cluster_split, CLUSTER),
            (delete_to_complete_split, COMPLETE_SPLIT),
            (delete_to_unit_interval_split, UNIT_INTERVAL),
        ]
        for s in range(max(6, seeds // 4)):
            g = randgen.gen_split(7, 0.5, s)
            for solver, label in split_cases:
                got = solver(g)
                want = oracle_min_deletion(g, label)
                yield got.size == want.size
            t = randgen.gen_tree(9, s)
            yield delete_to_cluster_tree(t).size == oracle_min_deletion(t, CLUSTER).size
            b = randgen.gen_block(9, s)
            yield delete_to_cluster_block(b).size == oracle_min_deletion(b, CLUSTER).size
            c = randgen.gen_chordal(7, s)
            yield (
                delete_to_cochain_chordal(c).size
                == oracle_min_deletion(c, CO_CHAIN).size
            )
            m = randgen.gen_interval_model(7, s)
            gm = model_to_graph(m)
            yield (
                gm.n - len(max_cluster_subgraph(m))
                == oracle_min_deletion(gm, CLUSTER).size
            )
            yield (
                gm.n - len(max_complete_split_subgraph(m))
                == oracle_min_deletion(gm, COMPLETE_SPLIT).size
            )

    def bowtie_interval():
        for s in range(seeds):
            g1, _ = randgen.gen_threshold(5, 2 * s)
            g2, _ = randgen.gen_threshold(5, 2 * s + 1)
            c1 = split_partition(g1).clique
            c2 = split_partition(g2).clique
            joined = bowtie(g1, c1, g2, c2)
            yield recognize(joined, INTERVAL).member
            yield model_to_graph(bowtie_model(g1, g2, c1, c2)).edges() == joined.edges()

    def duality():
        for s in range(seeds):
            g = randgen.gen_split(8, 0.5, s)
            yield (
                delete_to_cluster_split(g).size
                == delete_to_complete_split(complement(g)).size
            )

    return [
        ("generator-vs-recognizer", gen_recognize),
        ("koenig-equality", koenig),
        ("solver-vs-oracle", solver_oracle),
        ("bowtie-interval", bowtie_interval),
        ("complement-duality", duality),
    ]


def _cmd_selftest(args, fmt: str) -> int:
    failures = 0
    for name, suite in _selftest_suites(args.seeds):
        t0 = time.perf_counter()
        results = list(suite())
        bad = results.count(False)
        failures += bad
        status = "PASS" if bad == 0 else "FAIL"
        print(
            f"{status:4}  {name:26} {len(results) - bad}/{len(results)} checks "
            f"({(time.perf_counter() - t0):.2f}s)"
        )
    print("selftest:", "PASS" if failures == 0 else f"FAIL ({failures} checks)")
    return EXIT_OK if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordel",
        description="Vertex deletion between subclasses of chordal graphs",
    )
    parser.add_argument(
        "--format", choices=("text", "records"), default="text",
        help="report style: human text or JSON lines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p):
        p.add_argument("inputs", nargs="*", help="graph files, edge list or graph6")
        p.add_argument("-i", "--input", action="append", dest="extra_inputs",
                       default=[], help="additional input file")

    p_rec = sub.add_parser("recognize", help="class membership with witnesses")
    p_rec.add_argument("--class", dest="klass", required=True)
    add_inputs(p_rec)

    p_sol = sub.add_parser("solve", help="run a deletion solver")
    p_sol.add_argument("--problem", required=True)
    p_sol.add_argument("--model", help="interval model file (interval-to-* problems)")
    p_sol.add_argument("--p", type=int, help="p for chordal-to-kp")
    p_sol.add_argument("--verify", action="store_true",
                       help="recheck with recognizer and, for n <= 12, the oracle")
    add_inputs(p_sol)

    p_ora = sub.add_parser("oracle", help="exhaustive minimum deletion")
    p_ora.add_argument("--class", dest="klass", required=True)
    p_ora.add_argument("--kmax", type=int, default=None)
    p_ora.add_argument("--allow-large", action="store_true")
    add_inputs(p_ora)

    p_red = sub.add_parser("reduce", help="build a hardness reduction instance")
    p_red.add_argument("--from", dest="source", required=True)
    p_red.add_argument("--to", dest="target", required=True)
    p_red.add_argument("--pattern", help="pattern graph file for f-free targets")
    p_red.add_argument("--anchor", help="anchor edge 'a,b' in the pattern")
    p_red.add_argument("--output", help="write the image graph here")
    add_inputs(p_red)

    p_gen = sub.add_parser("generate", help="seeded random instance")
    p_gen.add_argument("--class", dest="klass", required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--edge-bias", type=float, default=0.5)
    p_gen.add_argument("--p-edge", type=float, default=0.5,
                       help="edge probability for bipartite")
    p_gen.add_argument("--output", help="write the instance here")

    p_self = sub.add_parser("selftest", help="seeded property suites")
    p_self.add_argument("--seeds", type=int, default=25)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "extra_inputs"):
        args.inputs = list(args.inputs) + list(args.extra_inputs)
        if not args.inputs and not getattr(args, "model", None):
            parser.error("no input files given")
    handlers = {
        "recognize": _cmd_recognize,
        "solve": _cmd_solve,
        "oracle": _cmd_oracle,
        "reduce": _cmd_reduce,
        "generate": _cmd_generate,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args, args.format)
    except NotInClassError as exc:
        report = {
            "command": args.command,
            "error": str(exc),
            "witness_name": exc.witness_name,
        }
        if exc.witness is not None:
            report["witness"] = list(exc.witness)
        _emit(report, args.format)
        return EXIT_PRECONDITION
    except (GraphInputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
