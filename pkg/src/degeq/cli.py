"""Command-line interface.

Exit codes: 0 success, 1 operational error (I/O, bad input, failed
precondition), 2 verification failure.

The environment variables DEGEQ_ORACLE_MAX_N and DEGEQ_FEASIBLE_MAX_N
override the default enumeration guards of the brute-force commands.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import statistics
import sys
import time
from pathlib import Path

from . import bounds
from .certificate import Certificate, verify_certificate
from .exactf import exact_f
from .families import FAMILIES, generate
from .forest import forest_fk, greedy_fk
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph, random_graph
from .harness import SUITES, run_suite
from .lowdeg import equate_deg2
from .oracle import DEFAULT_FEASIBLE_MAX_N, DEFAULT_FK_MAX_N, brute_feasible, brute_fk


class CLIError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise CLIError(f"{name} must be an integer, got {raw!r}") from None


def read_graph(path: str, fmt: str) -> Graph:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise CLIError(f"cannot read {path}: {e.strerror}") from None
    if fmt == "graph6":
        return parse_graph6(data)
    return parse_edge_list(data.decode("utf-8"))


def write_graph(g: Graph, fmt: str) -> bytes:
    if fmt == "graph6":
        return emit_graph6(g) + b"\n"
    return emit_edge_list(g).encode("utf-8")


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def _certified(g: Graph, cert: Certificate) -> dict:
    if not verify_certificate(g, cert):
        raise CLIError("internal error: produced certificate failed validation")
    d = cert.to_dict()
    d.pop("k")
    return d


def cmd_compute(args: argparse.Namespace) -> int:
    g = read_graph(args.file, args.format)
    if args.what == "f":
        res = exact_f(g)
        report = {
            "input": args.file,
            "operation": "f",
            "params": {"k": 2},
            "value": res.value,
            "exact": True,
            "certificate": _certified(g, res.cert),
        }
        if args.trace:
            report["trace"] = res.trace.to_dict()
        _emit(report)
        return 0

    k, method = args.k, args.method
    if method == "oracle":
        max_n = args.max_n or _env_int("DEGEQ_ORACLE_MAX_N", DEFAULT_FK_MAX_N)
        _, cert = brute_fk(g, k, max_n=max_n)
    elif method == "greedy":
        cert = greedy_fk(g, k)
    elif method == "forest":
        cert = forest_fk(g, k)
    else:
        cert = equate_deg2(g, k)
    _emit({
        "input": args.file,
        "operation": "fk",
        "params": {"k": k, "method": method},
        "value": cert.size,
        "exact": method == "oracle",
        "certificate": _certified(g, cert),
    })
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.file, args.format)
    max_n = args.max_n or _env_int("DEGEQ_FEASIBLE_MAX_N", DEFAULT_FEASIBLE_MAX_N)
    feasible, witness = brute_feasible(g, args.k, max_n=max_n)
    _emit({
        "input": args.file,
        "operation": "feasible",
        "params": {"k": args.k},
        "value": feasible,
        "witness": list(witness) if witness is not None else None,
    })
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    params = {p: getattr(args, p) for p in ("delta", "n", "t", "k", "m")}
    g, spec = generate(args.family, **params)
    sidecar = {**spec.to_dict(), "n": g.n, "m": g.num_edges(), "format": args.format}
    payload = write_graph(g, args.format)
    if args.output:
        out = Path(args.output)
        try:
            out.write_bytes(payload)
            Path(str(out) + ".json").write_text(json.dumps(sidecar, indent=2) + "\n")
        except OSError as e:
            raise CLIError(f"cannot write {out}: {e.strerror}") from None
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        print(json.dumps(sidecar), file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, seed=args.seed, samples=args.samples)
    _emit(report)
    return 0 if not report["failures"] else 2


def fit_exponent(ns: list[int], times: list[float]) -> float:
    """Slope of log(time) against log(n)."""
    slope, _ = statistics.linear_regression([math.log(n) for n in ns], [math.log(t) for t in times])
    return slope


def cmd_bench(args: argparse.Namespace) -> int:
    runs = []
    for i, n in enumerate(args.n):
        p = args.p if args.p is not None else min(1.0, 4.0 / n)
        g = random_graph(n, p, args.seed + i)
        times = []
        value = None
        for _ in range(args.reps):
            t0 = time.perf_counter()
            value = exact_f(g).value
            times.append(time.perf_counter() - t0)
        runs.append({"n": n, "p": p, "m": g.num_edges(), "value": value,
                     "seconds": times, "best": min(times)})
    report = {"benchmark": "exactf", "seed": args.seed, "reps": args.reps, "runs": runs}
    if len(runs) >= 2:
        report["fitted_exponent"] = fit_exponent([r["n"] for r in runs],
                                                 [max(r["best"], 1e-9) for r in runs])
    _emit(report)
    return 0


_BOUNDS = {
    "f-delta": (bounds.bound_f_delta, ("delta",)),
    "f-n": (bounds.bound_f_n, ("n",)),
    "g": (bounds.g_exact, ("delta", "k")),
    "h": (bounds.h_exact, ("delta", "k")),
    "lemma": (bounds.lemma_bound, ("k", "delta")),
    "sparse": (bounds.sparse_bound, ("n", "c", "beta", "k")),
    "g-lower-even": (bounds.g_lower_even, ("delta", "k")),
    "ramsey-cap": (bounds.h_ramsey_cap, ("k",)),
}


def cmd_bound(args: argparse.Namespace) -> int:
    fn, names = _BOUNDS[args.which]
    params = {p: getattr(args, p) for p in names}
    missing = [p for p, v in params.items() if v is None]
    if missing:
        raise CLIError(f"bound {args.which} needs " + ", ".join(f"--{p}" for p in missing))
    report = {"operation": "bound", "which": args.which, "params": params}
    try:
        report.update(status="known", value=fn(*params.values()))
    except bounds.UnknownValueError as e:
        report.update(status="unknown", value=None, reason=str(e))
    _emit(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="degeq", description="Equating maximum degrees by vertex deletion.")
    sub = ap.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    p = sub.add_parser("compute", help="compute f or f_k with a certificate")
    csub = p.add_subparsers(dest="what", required=True)
    pf = csub.add_parser("f", parents=[fmt], help="exact f(G) = f_2(G)")
    pf.add_argument("file")
    pf.add_argument("--trace", action="store_true", help="include the deletion trace")
    pk = csub.add_parser("fk", parents=[fmt], help="f_k(G): exact (oracle) or an upper bound")
    pk.add_argument("file")
    pk.add_argument("-k", type=int, required=True)
    pk.add_argument("--method", choices=("oracle", "greedy", "forest", "deg2"), default="oracle")
    pk.add_argument("--max-n", type=int, default=None)
    for q in (pf, pk):
        q.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="k-feasibility by enumeration")
    chk = p.add_subparsers(dest="what", required=True)
    pq = chk.add_parser("feasible", parents=[fmt])
    pq.add_argument("file")
    pq.add_argument("-k", type=int, required=True)
    pq.add_argument("--max-n", type=int, default=None)
    pq.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[fmt], help="generate an extremal family instance")
    p.add_argument("family", choices=sorted(FAMILIES))
    for name in ("delta", "n", "t", "k", "m"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time exact_f on random graphs")
    p.add_argument("target", choices=("exactf",))
    p.add_argument("--n", type=int, nargs="+", default=[1000, 2000, 4000, 8000])
    p.add_argument("--p", type=float, default=None, help="edge probability (default 4/n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bound", help="evaluate a closed-form bound or known value")
    p.add_argument("which", choices=sorted(_BOUNDS))
    for name in ("delta", "n", "k"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.set_defaults(func=cmd_bound)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, ValueError, LookupError) as e:
        print(f"degeq: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
