"""``pqx`` command line.

Exit codes: 0 success (or the property holds), 1 a semantic negative (a
violation was found or a claim failed), 2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .constructions import (
    complete_plus_edge,
    cycle,
    phi,
    sarkaria_chi,
    split_family_member,
    split_hypergraph,
    theorem_threshold,
    tq_decompose,
)
from .extremal import SearchBudget, extremal_number, extremal_oracle
from .hypergraph import HypergraphFormatError, read_file, serialize
from .kneser import (
    IncompleteSearchError,
    KneserSpec,
    alpha_kneser_result,
    build_kneser,
    chromatic_number_exact,
    fractional_chromatic_lp,
    kneser_labels,
    rational_json,
)
from .pqproperty import PQParams, find_violation
from .verify import ALIASES, SCHEMA_VERSION, SUITES, VerifyOptions, run

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True))
    else:
        print(text)


def _params(p, q) -> PQParams:
    try:
        return PQParams(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args) -> int:
    try:
        H = read_file(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    params = _params(args.p, args.q)
    violation = find_violation(H, params)
    witness = violation.edge_lists() if violation else None
    payload = {
        "command": "check", "n": H.n, "k": H.k, "edges": H.num_edges,
        "p": params.p, "q": params.q, "has_property": violation is None, "witness": witness,
    }
    if violation is None:
        text = f"(p,q) = ({params.p},{params.q}) property holds for {H.num_edges} edges"
    else:
        text = f"(p,q) = ({params.p},{params.q}) property violated by {json.dumps(witness)}"
    _emit(args, payload, text)
    return EXIT_OK if violation is None else EXIT_NEGATIVE


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {', '.join(missing)}")


def cmd_construct(args) -> int:
    try:
        if args.family == "split":
            _need(args, "n", "k", "t")
            if args.r:
                rng = random.Random(args.seed) if args.seed is not None else None
                H = split_family_member(args.n, args.k, args.t, args.r, rng)
            else:
                H = split_hypergraph(args.n, args.k, args.t)
        elif args.family == "complete-plus-edge":
            _need(args, "p")
            H = complete_plus_edge(args.p)
        else:
            _need(args, "n")
            H = cycle(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        text = json.dumps(H.to_dict())
    else:
        text = serialize(H)
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def cmd_phi(args) -> int:
    try:
        value = phi(args.n, args.k, args.p, args.q)
        t, r = tq_decompose(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"command": "phi", "n": args.n, "k": args.k, "p": args.p, "q": args.q, "t": t, "r": r, "phi": value}
    if args.p >= args.q >= 3:
        th = theorem_threshold(args.p, args.q)
        payload["threshold"] = {"simple": th.simple, "refined": th.refined, "refined_exact": th.refined_exact}
    _emit(args, payload, str(value))
    return EXIT_OK


def cmd_sarkaria(args) -> int:
    try:
        val = sarkaria_chi(args.n, args.k, args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"command": "sarkaria", "n": args.n, "k": args.k, "p": args.p, "q": args.q,
               "chi": val.chi, "raw": val.raw}
    text = str(val.chi) if val.chi == val.raw else f"{val.chi} (raw formula {val.raw})"
    _emit(args, payload, text)
    return EXIT_OK


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.budget_nodes, args.budget_seconds, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_extremal(args) -> int:
    try:
        if args.oracle:
            res = extremal_oracle(args.n, args.k, args.p, args.q)
        else:
            res = extremal_number(args.n, args.k, args.p, args.q, _budget(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"command": "extremal", **res.to_dict(timings=args.timings)}
    flag = "" if res.complete else " (incomplete: lower bound)"
    _emit(args, payload, f"{res.value}{flag}")
    return EXIT_OK


def cmd_kneser(args) -> int:
    try:
        spec = KneserSpec(args.n, args.k, args.p, args.q)
        H = build_kneser(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    labels = kneser_labels(spec)
    payload = {
        "command": "kneser",
        "spec": {"n": spec.n, "k": spec.k, "p": spec.p, "q": spec.q},
        "vertices": H.n, "edges": H.num_edges, "labels": labels,
    }
    lines = [f"K^{spec.p}_{spec.q}(C([{spec.n}],{spec.k})): {H.n} vertices, {H.num_edges} edges"]
    budget = _budget(args)

    if args.emit:
        comments = [f"q-wise Kneser hypergraph n={spec.n} k={spec.k} p={spec.p} q={spec.q}"]
        comments += [f"vertex {i + 1} = {' '.join(map(str, lab))}" for i, lab in enumerate(labels)]
        Path(args.emit).write_text(serialize(H, comments))
        lines.append(f"wrote {args.emit}")

    alpha_res = None
    if args.alpha or (args.chi_f and args.method in ("transitive", "both")):
        alpha_res = alpha_kneser_result(spec, budget)
    if args.alpha:
        payload["alpha"] = {"value": alpha_res.value, "complete": alpha_res.complete,
                            "witness": alpha_res.witness.edge_lists()}
        lines.append(f"alpha = {alpha_res.value}" + ("" if alpha_res.complete else " (lower bound)"))
    if args.chi:
        res = chromatic_number_exact(H, args.budget_nodes)
        formula = sarkaria_chi(spec.n, spec.k, spec.p, spec.q)
        payload["chi"] = {"lower": res.lower, "upper": res.upper, "complete": res.complete,
                          "coloring": list(res.coloring), "formula": formula.chi, "formula_raw": formula.raw}
        chi_text = str(res.upper) if res.complete else f"in [{res.lower}, {res.upper}]"
        lines.append(f"chi = {chi_text} (formula {formula.chi})")
    if args.chi_f:
        out = {"method": args.method}
        parts = []
        if args.method in ("lp", "both"):
            try:
                value, coloring = fractional_chromatic_lp(H)
            except IncompleteSearchError as exc:
                raise UsageError(str(exc)) from None
            out["lp"] = rational_json(value)
            out["coloring"] = coloring.to_list()
            parts.append(f"{value} (lp)")
        if args.method in ("transitive", "both"):
            if alpha_res.complete:
                value = Fraction(spec.num_vertices, alpha_res.value)
                out["transitive"] = rational_json(value)
                parts.append(f"{value} (transitive)")
            else:
                out["transitive"] = None
                parts.append("unknown (transitive: alpha search incomplete)")
        if args.method == "both":
            out["agree"] = out.get("lp") == out.get("transitive")
        payload["chi_f"] = out
        lines.append("chi_f = " + ", ".join(parts))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = VerifyOptions(
        max_n=args.max_n, max_p=args.max_p, placements=args.placements,
        random_instances=args.random_instances, seed=args.seed, workers=args.workers,
        budget_nodes=args.budget_nodes, budget_seconds=args.budget_seconds,
    )
    report = run(args.suite, opts)
    data = report.to_dict(timings=args.timings)
    if args.out:
        Path(args.out).write_text(json.dumps(data, sort_keys=True, indent=1) + "\n")
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _add_pq(parser, required=True):
    parser.add_argument("--p", type=int, required=required)
    parser.add_argument("--q", type=int, required=required)


def _add_budget(parser):
    parser.add_argument("--budget-nodes", type=int, default=None, help="node limit for searches")
    parser.add_argument("--budget-seconds", type=float, default=None, help="wall-clock limit for searches")
    parser.add_argument("--workers", type=int, default=1, help="worker processes (results do not depend on it)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqx", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide the (p,q)-property of a .hg or .json hypergraph")
    p.add_argument("input")
    _add_pq(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="write a named hypergraph")
    p.add_argument("--family", choices=["split", "complete-plus-edge", "cycle"], required=True)
    for name in ("n", "k", "t", "p"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--seed", type=int, default=None, help="random placement of the r extra edges")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("phi", help="edge count of the split construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_pq(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("sarkaria", help="ceiling formula for the Kneser chromatic number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_pq(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sarkaria)

    p = sub.add_parser("extremal", help="exact (p,q)-extremal number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_pq(p)
    p.add_argument("--oracle", action="store_true", help="use the power-set oracle")
    _add_budget(p)
    p.add_argument("--timings", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("kneser", help="q-wise Kneser p-uniform hypergraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_pq(p)
    p.add_argument("--emit", metavar="PATH", help="write the hypergraph as .hg with a label table")
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--chi", action="store_true")
    p.add_argument("--chi-f", action="store_true")
    p.add_argument("--method", choices=["lp", "transitive", "both"], default="both")
    _add_budget(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kneser)

    p = sub.add_parser("verify", help="run the claim verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + sorted(ALIASES), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-p", type=int, default=None)
    p.add_argument("--placements", type=int, default=20, help="random r-edge placements per split member")
    p.add_argument("--random-instances", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _add_budget(p)
    p.add_argument("--out", help="also write the JSON report here")
    p.add_argument("--timings", action="store_true", help="include elapsed seconds in the JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, HypergraphFormatError, ValueError) as exc:
        print(f"pqx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
