"""Command-line front end: unique-perfect-matching tools.

Exit codes: 0 success / unique, 1 no unique perfect matching, 2 input
error, 3 undecided (no class-specific algorithm applies and the graph
is too large for the oracle).
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .clawfree import PmincfStats, pmincf
from .forcing import find_forcing_set
from .gclass import decompose, format_trace, parse_trace, random_gclass, replay
from .generators import (clique_chain, cograph_instance, interval_instance,
                         split_instance)
from .graph import (Graph, GraphParseError, connected_components, find_claw,
                    format_matching, parse_graph, serialize_graph)
from .interval import (IntervalParseError, IntervalPMError, intersection_graph,
                       interval_pm, parse_intervals)
from .uniqueness import enumerate_pms, is_unique_pm

EXIT_OK = 0
EXIT_NOT_UNIQUE = 1
EXIT_INPUT = 2
EXIT_UNDECIDED = 3

BENCH_SCHEMA = "unipm-bench-1"


def _emit(key: str, value) -> None:
    print(f"{key}: {value}")


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_file(path))


def _print_matching(m) -> None:
    sys.stdout.write(format_matching(m))


def _print_witness(witness) -> None:
    _emit("witness", " ".join(map(str, witness.cycle)))


def _seed_from(args) -> int:
    env = os.environ.get("UNIPM_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _cmd_check(args) -> int:
    g = _load_graph(args.file)
    _emit("algorithm", "check")
    _emit("instance", args.file)
    _emit("n", g.live_count)
    _emit("m", g.edge_count)
    start = time.perf_counter()
    cert = find_forcing_set(g)
    if cert is not None:
        witness = is_unique_pm(g, cert.matching)
        if witness is not None:  # forcing success always implies uniqueness
            raise RuntimeError("forcing certificate contradicts verifier")
        _emit("method", "forcing")
        _emit("verdict", "unique")
        _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
        _print_matching(cert.matching)
        return EXIT_OK
    claw = find_claw(g)
    if claw is None:
        if g.live_count % 2 or any(len(c) % 2 for c in connected_components(g)):
            _emit("method", "clawfree")
            _emit("verdict", "not-unique")
            _emit("reason", "odd-order component has no perfect matching")
            _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
            return EXIT_NOT_UNIQUE
        m = pmincf(g)
        witness = is_unique_pm(g, m)
        _emit("method", "clawfree")
        if witness is None:
            _emit("verdict", "unique")
            _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
            _print_matching(m)
            return EXIT_OK
        _emit("verdict", "not-unique")
        _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
        _print_witness(witness)
        return EXIT_NOT_UNIQUE
    if g.live_count <= args.oracle_cap:
        pms = enumerate_pms(g, 2)
        _emit("method", "oracle")
        if len(pms) == 1:
            witness = is_unique_pm(g, pms[0])
            if witness is not None:
                raise RuntimeError("oracle count contradicts verifier")
            _emit("verdict", "unique")
            _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
            _print_matching(pms[0])
            return EXIT_OK
        _emit("verdict", "not-unique")
        if not pms:
            _emit("reason", "no perfect matching")
        else:
            _print_witness(is_unique_pm(g, pms[0]))
        _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
        return EXIT_NOT_UNIQUE
    _emit("method", "none")
    _emit("verdict", "undecided-class")
    _emit("reason", f"graph has a claw and more than {args.oracle_cap} vertices")
    return EXIT_UNDECIDED


def _cmd_force(args) -> int:
    g = _load_graph(args.file)
    _emit("algorithm", "force")
    _emit("instance", args.file)
    _emit("n", g.live_count)
    _emit("m", g.edge_count)
    cert = find_forcing_set(g)
    if cert is None:
        print("NO FORCING SET")
        return EXIT_NOT_UNIQUE
    _emit("verdict", "unique")
    _emit("forcing_order", " ".join(f"{u},{v}" for u, v in cert.forced))
    _print_matching(cert.matching)
    return EXIT_OK


def _cmd_interval(args) -> int:
    rep = parse_intervals(_read_file(args.file))
    g = intersection_graph(rep)
    _emit("algorithm", "interval")
    _emit("instance", args.file)
    _emit("n", g.live_count)
    _emit("m", g.edge_count)
    try:
        m = interval_pm(rep)
    except IntervalPMError as exc:
        _emit("verdict", "not-unique")
        _emit("reason", str(exc))
        return EXIT_NOT_UNIQUE
    witness = is_unique_pm(g, m)
    if witness is None:
        _emit("verdict", "unique")
        _print_matching(m)
        return EXIT_OK
    _emit("verdict", "not-unique")
    _print_witness(witness)
    return EXIT_NOT_UNIQUE


def _cmd_clawfree(args) -> int:
    g = _load_graph(args.file)
    _emit("algorithm", "clawfree")
    _emit("instance", args.file)
    _emit("n", g.live_count)
    _emit("m", g.edge_count)
    if args.check_claw:
        claw = find_claw(g)
        if claw is not None:
            center, leaves = claw
            _emit("verdict", "failure")
            _emit("reason", f"claw at {center}: {' '.join(map(str, leaves))}")
            return EXIT_INPUT
    stats = PmincfStats() if args.stats else None
    start = time.perf_counter()
    try:
        m = pmincf(g, stats=stats)
    except ValueError as exc:
        _emit("verdict", "failure")
        _emit("reason", str(exc))
        return EXIT_INPUT
    _emit("elapsed_s", f"{time.perf_counter() - start:.6f}")
    if stats is not None:
        _emit("cursor_advances", stats.cursor_advances)
        _emit("lm_nb_updates", stats.lm_nb_updates)
        _emit("reseeds", stats.reseeds)
    _print_matching(m)
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = _seed_from(args)
    prefix = args.out
    written = []
    if args.family == "gclass":
        g, trace = random_gclass(args.steps, op2_bias=args.op2_bias, seed=seed)
        written.append((f"{prefix}.g", serialize_graph(g)))
        written.append((f"{prefix}.trace", format_trace(trace)))
    elif args.family == "clique-chain":
        g, trace = clique_chain(args.steps)
        written.append((f"{prefix}.g", serialize_graph(g)))
        written.append((f"{prefix}.trace", format_trace(trace)))
    elif args.family == "cograph":
        g = cograph_instance(args.n, seed)
        written.append((f"{prefix}.g", serialize_graph(g)))
    elif args.family == "split":
        if args.unique and args.n % 2:
            _emit("error", "unique split instances need even n")
            return EXIT_INPUT
        g = split_instance(args.n, seed, unique=args.unique)
        written.append((f"{prefix}.g", serialize_graph(g)))
    else:  # interval
        rep = interval_instance(args.n, seed)
        lines = [str(rep.n)]
        lines.extend(f"{v} {l} {r}" for v, (l, r) in enumerate(rep.intervals))
        written.append((f"{prefix}.iv", "\n".join(lines) + "\n"))
    for path, content in written:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)
        _emit("wrote", path)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    g = _load_graph(args.file)
    trace = decompose(g)
    if trace is None:
        print("NOT IN CLASS")
        return EXIT_NOT_UNIQUE
    sys.stdout.write(format_trace(trace))
    return EXIT_OK


def _cmd_replay(args) -> int:
    trace = parse_trace(_read_file(args.file))
    g = replay(trace)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.file)
    _emit("algorithm", "oracle")
    _emit("instance", args.file)
    _emit("n", g.live_count)
    _emit("m", g.edge_count)
    pms = enumerate_pms(g, args.cap)
    _emit("pm_count", len(pms))
    _emit("cap_reached", "true" if len(pms) >= args.cap else "false")
    for i, m in enumerate(pms):
        _emit(f"matching_{i}", " ".join(f"{u},{v}" for u, v in m.pairs))
    return EXIT_OK


def bench_rows(family: str, sizes: list[int], repetitions: int,
               seed: int) -> list[tuple]:
    """Benchmark rows: (schema, family, n, m, rep, wall_s, advances, lm_updates).

    The cursor-advance bound advances <= 2m is asserted on every run.
    Repetitions are interleaved round-robin across the sizes and cyclic
    GC is paused while timing, so a transient slowdown of the host hits
    every size instead of silently inflating one size's whole block;
    per-size medians then stay comparable.
    """
    import gc

    instances = []
    for target_m in sizes:
        if family == "clique-chain":
            g, _ = clique_chain(max(0, (target_m - 1) // 3))
        elif family == "gclass":
            steps = max(0, target_m // 3)
            g, _ = random_gclass(steps, op2_bias=0.5, seed=seed)
        else:
            raise ValueError(f"bench family must be gclass or clique-chain, "
                             f"not {family!r}")
        pmincf(g)  # warmup, excluded from timing
        instances.append(g)
    per_size: list[list[tuple]] = [[] for _ in instances]
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for rep in range(repetitions):
            for i, g in enumerate(instances):
                stats = PmincfStats()
                start = time.perf_counter()
                pmincf(g, stats=stats)
                elapsed = time.perf_counter() - start
                assert stats.cursor_advances <= 2 * g.edge_count, \
                    "cursor advances exceed 2m"
                per_size[i].append(
                    (BENCH_SCHEMA, family, g.live_count, g.edge_count, rep,
                     f"{elapsed:.6f}", stats.cursor_advances,
                     stats.lm_nb_updates))
    finally:
        if gc_was_enabled:
            gc.enable()
    return [row for rows in per_size for row in rows]


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = bench_rows(args.family, sizes, args.repetitions, _seed_from(args))
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        out.write("schema,family,n,m,rep,wall_time_s,cursor_advances,"
                  "lm_nb_updates\n")
        for row in rows:
            out.write(",".join(map(str, row)) + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipm",
        description="Decide and find unique perfect matchings for cographs, "
                    "split graphs, interval graphs, and claw-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="auto-dispatch uniqueness decision")
    p.add_argument("file")
    p.add_argument("--oracle-cap", type=int, default=16,
                   help="max order for the brute-force fallback")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("force", help="forcing-set elimination")
    p.add_argument("file")
    p.set_defaults(func=_cmd_force)

    p = sub.add_parser("interval", help="interval-representation matching")
    p.add_argument("file")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("clawfree", help="greedy matching for claw-free graphs")
    p.add_argument("file")
    p.add_argument("--check-claw", action="store_true",
                   help="pre-validate claw-freeness (test scale)")
    p.add_argument("--stats", action="store_true",
                   help="print operation counters")
    p.set_defaults(func=_cmd_clawfree)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--family", default="gclass",
                   choices=["gclass", "clique-chain", "cograph", "split",
                            "interval"])
    p.add_argument("--steps", type=int, default=10,
                   help="construction steps (gclass, clique-chain)")
    p.add_argument("-n", type=int, default=8,
                   help="order (cograph, split, interval)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--op2-bias", type=float, default=0.5)
    p.add_argument("--unique", action="store_true",
                   help="enforce the unique-PM balance for split instances")
    p.add_argument("--out", default="instance", help="output file prefix")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("decompose", help="recognize class membership")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("replay", help="rebuild a graph from a trace")
    p.add_argument("file")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("oracle", help="brute-force matching enumeration")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=2)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="linearity benchmark (CSV)")
    p.add_argument("--family", default="clique-chain",
                   choices=["gclass", "clique-chain"])
    p.add_argument("--sizes", default="10000,20000,40000",
                   help="comma-separated edge-count targets")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching our input-error code
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (GraphParseError, IntervalParseError) as exc:
        _emit("error", str(exc))
        return EXIT_INPUT
    except ValueError as exc:
        _emit("error", str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
