"""Command line front end: workload generation, runs, verification, bench.

Subcommands:

  generate   write a random graph file and a shuffled deletion stream with
             interleaved query checkpoints (generator randomness is fixed
             before any algorithm sampling happens)
  run        execute one algorithm over a workload, print a JSON report
             with wall time, operation counters and checkpoint answers
  verify     replay the workload against the exact oracle and report any
             stretch violations; exit status 1 if one is found
  bench      run a size ladder, print a CSV row per size, and hard-assert
             the laziness counter bounds

All non-timing output is a pure function of the flags and seeds.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass

from .additive import AdditiveAPSP
from .apsp_mixed import MixedAPSP
from .apsp_mult import MultiplicativeAPSP
from .graph import (
    ConfigError,
    DELETE,
    QueryCheckpoint,
    UpdateEvent,
    dump_graph,
    dump_updates,
    gnp_graph,
    load_graph,
    parse_updates,
)
from .oracle import BoundSpec, StaticTwoAPSP, sweep
from .reduction import UnweightedAPSP

INF = math.inf
ALGORITHMS = ("mult", "mixed", "unweighted-mult", "additive", "static-2")


@dataclass
class RunConfig:
    algorithm: str
    graph_path: str
    updates_path: str
    p: float = None
    tau: float = None
    eps: float = 0.9
    k: int = None
    d: int = None
    c: float = 2.0
    seed: int = 0
    dense: bool = False
    report_path: str = None


def make_algorithm(cfg, graph):
    """Instantiate the configured algorithm; enforce per-tag required flags."""
    tag = cfg.algorithm
    n, m = graph.n, max(graph.m, 1)
    if tag == "mult":
        p = cfg.p if cfg.p is not None else math.sqrt(n / m)
        return MultiplicativeAPSP(graph, min(p, 1.0), cfg.eps, cfg.seed)
    if tag == "mixed":
        if cfg.tau is None:
            raise ConfigError("algorithm 'mixed' requires --tau")
        p = cfg.p if cfg.p is not None else m ** -0.25
        return MixedAPSP(graph, min(p, 1.0), cfg.eps, cfg.tau, cfg.seed)
    if tag == "unweighted-mult":
        n2, m2 = n + m, 2 * m
        p = cfg.p if cfg.p is not None else math.sqrt(n2 / m2)
        tau = cfg.tau if cfg.tau is not None else max(1, int(math.sqrt(m2)))
        return UnweightedAPSP(graph, min(p, 1.0), cfg.eps, tau, cfg.seed, k=1)
    if tag == "additive":
        if cfg.k is None or cfg.d is None:
            raise ConfigError("algorithm 'additive' requires --k and --d")
        return AdditiveAPSP(graph, cfg.k, cfg.d, cfg.c, cfg.eps, cfg.seed)
    if tag == "static-2":
        p = cfg.p if cfg.p is not None else math.sqrt(n / m)
        return StaticTwoAPSP(graph, min(p, 1.0), cfg.seed)
    raise ConfigError(f"unknown algorithm {tag!r}; choose from {', '.join(ALGORITHMS)}")


def bound_for(cfg):
    if cfg.algorithm == "mult":
        return BoundSpec(alpha=2 + cfg.eps)
    if cfg.algorithm == "mixed":
        return BoundSpec(alpha=2 + cfg.eps, per_pair_bottleneck=True)
    if cfg.algorithm == "unweighted-mult":
        return BoundSpec(alpha=2 + 3 * cfg.eps)
    if cfg.algorithm == "additive":
        return BoundSpec(alpha=1.0, beta=2 * (cfg.k - 1), radius=cfg.d)
    return BoundSpec(alpha=2.0)


def _jsonable(x):
    return "inf" if x == INF else x


def _emit(payload, path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands -------------------------------------------------------------


def cmd_generate(args):
    if not (0 < args.density <= 1):
        raise ConfigError("density must be in (0, 1]")
    if not (0 < args.fraction <= 1):
        raise ConfigError("deletion fraction must be in (0, 1]")
    rng = random.Random(args.seed)
    g = gnp_graph(args.n, args.density, args.W, rng)
    edges = [(u, v) for u, v, _ in g.edges()]
    rng.shuffle(edges)
    take = max(1, math.ceil(args.fraction * len(edges))) if edges else 0
    stream = []
    for i, (u, v) in enumerate(edges[:take], start=1):
        stream.append(UpdateEvent(DELETE, u, v))
        if i % args.checkpoint_every == 0 or i == take:
            for _ in range(args.checkpoint_queries):
                a = rng.randrange(args.n)
                b = rng.randrange(args.n)
                stream.append(QueryCheckpoint(a, b))
    with open(args.graph, "w") as fh:
        fh.write(dump_graph(g))
    with open(args.updates, "w") as fh:
        fh.write(dump_updates(stream))
    print(f"wrote {args.graph} (n={g.n} m={g.m}) and {args.updates} "
          f"({take} deletions, {sum(isinstance(s, QueryCheckpoint) for s in stream)} checkpoints)")
    return 0


def _load(cfg):
    with open(cfg.graph_path) as fh:
        graph = load_graph(fh.read())
    with open(cfg.updates_path) as fh:
        updates = parse_updates(fh.read())
    return graph, updates


def cmd_run(cfg):
    graph, updates = _load(cfg)
    n, m0 = graph.n, graph.m
    algo = make_algorithm(cfg, graph)
    answers = []
    t0 = time.perf_counter()
    applied = 0
    for ev in updates:
        if isinstance(ev, QueryCheckpoint):
            answers.append([ev.u, ev.v, _jsonable(algo.query(ev.u, ev.v))])
        elif ev.kind == DELETE:
            algo.delete(ev.u, ev.v)
            applied += 1
        else:
            algo.increase(ev.u, ev.v, ev.delta)
            applied += 1
    wall_ms = (time.perf_counter() - t0) * 1000.0
    counters = algo.counters() if hasattr(algo, "counters") else {}
    report = {
        "schema": 1,
        "algorithm": cfg.algorithm,
        "n": n,
        "m0": m0,
        "eps": cfg.eps,
        "seed": cfg.seed,
        "updates_applied": applied,
        "checkpoints": len(answers),
        "wall_ms": round(wall_ms, 3),
        "counters": counters,
        "answers": answers,
    }
    _emit(report, cfg.report_path)
    return 0


def cmd_verify(cfg, alpha=None, beta=None):
    graph, updates = _load(cfg)
    algo = make_algorithm(cfg, graph.copy())
    bound = bound_for(cfg)
    if alpha is not None or beta is not None:
        # probe a custom target instead of the guaranteed one
        bound = BoundSpec(
            alpha=bound.alpha if alpha is None else alpha,
            beta=bound.beta if beta is None else beta,
            per_pair_bottleneck=bound.per_pair_bottleneck,
            radius=bound.radius,
        )
    report = sweep(algo, graph, updates, bound, dense=cfg.dense)
    _emit(report.to_dict(), cfg.report_path)
    return 0 if report.ok else 1


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes:
        raise ConfigError("empty size ladder")
    writer = open(args.out, "w") if args.out else sys.stdout
    try:
        print("n,m,updates,wall_ms,rebuilds_total,rebuilds_max,rebuild_bound,"
              "nbr_min_changes_max,nbr_change_bound,searches,level_increases", file=writer)
        for n in sizes:
            rng = random.Random(args.seed)
            g = gnp_graph(n, args.density, args.W, rng)
            edges = [(u, v) for u, v, _ in g.edges()]
            rng.shuffle(edges)
            m0 = g.m
            p = min(1.0, math.sqrt(g.n / max(g.m, 1)))
            algo = MultiplicativeAPSP(g, p, args.eps, args.seed + 1)
            t0 = time.perf_counter()
            for u, v in edges:
                algo.delete(u, v)
            wall_ms = (time.perf_counter() - t0) * 1000.0
            c = algo.counters()
            log_arg = max(n * max(args.W, 1), 2)
            log_bound = math.ceil(math.log(log_arg) / math.log(1 + args.eps / 3))
            rebuild_bound = log_bound + 1
            change_bound = log_bound * log_bound
            if c["bunch_rebuilds_max"] > rebuild_bound:
                raise SystemExit(
                    f"rebuild bound violated at n={n}: "
                    f"{c['bunch_rebuilds_max']} > {rebuild_bound}")
            if c["nbr_min_changes_max"] > change_bound:
                raise SystemExit(
                    f"neighborhood-minimum change bound violated at n={n}: "
                    f"{c['nbr_min_changes_max']} > {change_bound}")
            row = [n, m0, len(edges), round(wall_ms, 3),
                   c["bunch_rebuilds_total"], c["bunch_rebuilds_max"], rebuild_bound,
                   c["nbr_min_changes_max"], change_bound,
                   c["searches"], c["tree_level_increases"]]
            print(",".join(str(x) for x in row), file=writer)
    finally:
        if args.out:
            writer.close()
    return 0


# -- argument parsing ----------------------------------------------------------


def _add_config_flags(sp):
    sp.add_argument("--graph", required=True, dest="graph_path")
    sp.add_argument("--updates", required=True, dest="updates_path")
    sp.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--tau", type=float, default=None)
    sp.add_argument("--eps", type=float, default=0.9)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--c", type=float, default=2.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--report", dest="report_path", default=None)


def _config_from(args):
    return RunConfig(
        algorithm=args.algorithm,
        graph_path=args.graph_path,
        updates_path=args.updates_path,
        p=args.p,
        tau=args.tau,
        eps=args.eps,
        k=args.k,
        d=args.d,
        c=args.c,
        seed=args.seed,
        dense=getattr(args, "dense", False),
        report_path=args.report_path,
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="decapsp",
        description="Decremental approximate all-pairs shortest paths toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a random workload")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--density", type=float, required=True)
    gen.add_argument("--W", type=int, default=1)
    gen.add_argument("--fraction", type=float, default=1.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--checkpoint-every", type=int, default=5)
    gen.add_argument("--checkpoint-queries", type=int, default=3)
    gen.add_argument("--graph", required=True)
    gen.add_argument("--updates", required=True)

    run = sub.add_parser("run", help="execute one algorithm over a workload")
    _add_config_flags(run)

    ver = sub.add_parser("verify", help="check stretch against the exact oracle")
    _add_config_flags(ver)
    ver.add_argument("--dense", action="store_true",
                     help="check every update, not only checkpoints")
    ver.add_argument("--alpha", type=float, default=None,
                     help="probe a custom multiplicative factor")
    ver.add_argument("--beta", type=float, default=None,
                     help="probe a custom additive term")

    ben = sub.add_parser("bench", help="size ladder with counter bound assertions")
    ben.add_argument("--sizes", required=True, help="comma separated node counts")
    ben.add_argument("--density", type=float, default=0.25)
    ben.add_argument("--W", type=int, default=10)
    ben.add_argument("--eps", type=float, default=0.9)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--out", default=None)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "run":
            return cmd_run(_config_from(args))
        if args.command == "verify":
            return cmd_verify(_config_from(args), args.alpha, args.beta)
        return cmd_bench(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
