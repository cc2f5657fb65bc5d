"""Registry of checkable claims and the report produced by ``pqx verify``.

Each suite yields :class:`ClaimRecord` objects. Reports carry no timing data
unless asked for, so the JSON of a run depends only on its options.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product
from math import comb

from . import __version__
from .constructions import (
    complete_plus_edge,
    phi_construction_exists,
    sarkaria_chi,
    split_family_member,
    tq_decompose,
)
from .extremal import SearchBudget, extremal_number, extremal_oracle, verify_lemma_p3
from .kneser import (
    KneserSpec,
    build_kneser,
    chromatic_number_exact,
    corollary_chi_f,
    fractional_chromatic_lp,
    fractional_chromatic_transitive,
    independence_number,
    independence_oracle,
    rational_json,
)
from .matching import BipartiteGraph, lemma3_check
from .pqproperty import has_pq_property

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "skipped")
SCHEMAS = ("check", "extremal", "hypergraph", "kneser", "phi", "sarkaria", "verify_report")


def load_schema(name: str) -> dict:
    """JSON Schema shipped for one of the ``SCHEMAS`` output shapes."""
    if name not in SCHEMAS:
        raise ValueError(f"unknown schema {name!r}; choose from {SCHEMAS}")
    text = resources.files(__package__).joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def _jsonable(x):
    if isinstance(x, Fraction):
        return rational_json(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class ClaimRecord:
    id: str
    suite: str
    statement: str
    parameters: dict
    expected: object
    computed: object
    status: str
    reason: str | None = None
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "suite": self.suite,
            "statement": self.statement,
            "parameters": _jsonable(self.parameters),
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": self.status,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class VerifyOptions:
    max_n: int | None = None
    max_p: int | None = None
    placements: int = 20
    random_instances: int = 100_000
    seed: int = 0
    workers: int = 1
    budget_nodes: int | None = None
    budget_seconds: float | None = None

    def budget(self) -> SearchBudget:
        return SearchBudget(self.budget_nodes, self.budget_seconds, self.workers)

    def public(self) -> dict:
        """Options that may change results; worker count is left out on purpose."""
        return {
            "max_n": self.max_n,
            "max_p": self.max_p,
            "placements": self.placements,
            "random_instances": self.random_instances,
            "seed": self.seed,
            "budget_nodes": self.budget_nodes,
            "budget_seconds": self.budget_seconds,
        }


@dataclass
class VerifyReport:
    suites: list[str]
    options: VerifyOptions
    claims: list[ClaimRecord] = field(default_factory=list)

    @property
    def counts(self) -> dict:
        return {s: sum(1 for c in self.claims if c.status == s) for s in STATUSES}

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": "pqextremal",
            "tool_version": __version__,
            "suites": self.suites,
            "options": self.options.public(),
            "summary": self.counts,
            "claims": [c.to_dict(timings) for c in self.claims],
        }

    def table(self) -> str:
        width = max((len(c.id) for c in self.claims), default=5)
        lines = [f"{'claim'.ljust(width)}  status   expected -> computed"]
        for c in self.claims:
            detail = c.reason if c.status == "skipped" else f"{_short(c.expected)} -> {_short(c.computed)}"
            lines.append(f"{c.id.ljust(width)}  {c.status.ljust(7)}  {detail}")
        cnt = self.counts
        lines.append(f"{cnt['pass']} passed, {cnt['fail']} failed, {cnt['skipped']} skipped")
        return "\n".join(lines)


def _short(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    s = str(_jsonable(x))
    return s if len(s) <= 60 else s[:57] + "..."


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _record(suite, cid, statement, params, expected, computed, ok, elapsed, reason=None):
    return ClaimRecord(cid, suite, statement, params, expected, computed,
                       "pass" if ok else "fail", reason, elapsed)


def suite_oracle(opts: VerifyOptions):
    """Branch and bound equals the power-set oracle on the desk-scale grid."""
    max_n = opts.max_n or 6
    max_p = opts.max_p or 5
    grid = [(2, n) for n in range(4, max_n + 1)] + [(3, n) for n in (4, 5, 6) if comb(n, 3) <= 21 and n <= max_n]
    for (k, n), p in product(grid, range(3, max_p + 1)):
        for q in range(3, p + 1):
            params = {"n": n, "k": k, "p": p, "q": q}
            with _Timer() as tm:
                oracle = extremal_oracle(n, k, p, q)
                bnb = extremal_number(n, k, p, q, opts.budget())
                witness_ok = has_pq_property(bnb.witness, (p, q)) and bnb.witness.num_edges == bnb.value
            yield _record(
                "oracle", f"oracle/k{k}-n{n}-p{p}-q{q}",
                "branch-and-bound extremal number equals the power-set maximum",
                params, oracle.value, bnb.value,
                bnb.complete and witness_ok and oracle.value == bnb.value, tm.elapsed,
            )


def suite_theorem6(opts: VerifyOptions):
    """ex(p, p, 3) for graphs equals C(p-1, 2) + 1, attained by K_{p-1} plus a pendant edge."""
    max_p = opts.max_p or 6
    for p in range(3, max_p + 1):
        with _Timer() as tm:
            expected = comb(p - 1, 2) + 1
            res = extremal_number(p, 2, p, 3, opts.budget())
            construction = complete_plus_edge(p)
            cons_ok = construction.num_edges == expected and has_pq_property(construction, (p, 3))
        yield _record(
            "theorem6", f"theorem6/p{p}",
            "graphs on p vertices with the (p,3)-property have at most C(p-1,2)+1 edges, attained by K_{p-1}+e",
            {"n": p, "k": 2, "p": p, "q": 3}, expected, res.value,
            res.complete and cons_ok and res.value == expected, tm.elapsed,
        )


def suite_lemma2(opts: VerifyOptions):
    """Every split-family member has the (p,q)-property for the matching t and r."""
    max_n = opts.max_n or 12
    max_p = opts.max_p or 7
    rng = random.Random(opts.seed)
    for k, q in product((2, 3), (3, 4)):
        for p in range(q, max_p + 1):
            t, r = tq_decompose(p, q)
            failures = []
            checked = 0
            with _Timer() as tm:
                for n in range(k, max_n + 1):
                    if not phi_construction_exists(n, k, p, q):
                        continue
                    members = [split_family_member(n, k, t, r)]
                    members += [split_family_member(n, k, t, r, rng) for _ in range(opts.placements)]
                    for H in members:
                        checked += 1
                        if not has_pq_property(H, (p, q)):
                            failures.append({"n": n, "edges": H.edge_lists()})
            yield _record(
                "lemma2", f"lemma2/k{k}-p{p}-q{q}",
                "split family members with p-1 = t(q-1)+r have the (p,q)-property",
                {"k": k, "p": p, "q": q, "t": t, "r": r, "max_n": max_n, "members_checked": checked},
                0, len(failures), not failures, tm.elapsed,
            )


def _lemma3_instance(G: BipartiteGraph, t: int, tally: dict):
    rep = lemma3_check(G, t)
    tally["instances"] += 1
    tally[rep.verdict] += 1
    if not rep.certified:
        tally["uncertified"] += 1


def suite_lemma3(opts: VerifyOptions):
    """|A| < |B| and e(G) > (t-1)|B| force a matching of size t."""
    def fresh():
        return {"instances": 0, "vacuous": 0, "confirmed": 0, "COUNTEREXAMPLE": 0, "uncertified": 0}

    tally = fresh()
    with _Timer() as tm:
        for na in range(0, 4):
            for nb in range(0, 5):
                pairs = list(product(range(na), range(nb)))
                for bits in range(1 << len(pairs)):
                    G = BipartiteGraph(na, nb, tuple(e for i, e in enumerate(pairs) if bits >> i & 1))
                    for t in range(1, max(na, 1) + 1):
                        _lemma3_instance(G, t, tally)
    yield _record(
        "lemma3", "lemma3/exhaustive",
        "every bipartite graph with |A| <= 3, |B| <= 4 satisfies the matching lemma",
        {"max_a": 3, "max_b": 4}, {"COUNTEREXAMPLE": 0, "uncertified": 0}, tally,
        tally["COUNTEREXAMPLE"] == 0 and tally["uncertified"] == 0, tm.elapsed,
    )

    rng = random.Random(opts.seed)
    tally = fresh()
    with _Timer() as tm:
        for _ in range(opts.random_instances):
            nb = rng.randint(2, 8)
            na = rng.randint(1, nb - 1)
            density = rng.random()
            edges = tuple((a, b) for a in range(na) for b in range(nb) if rng.random() < density)
            _lemma3_instance(BipartiteGraph(na, nb, edges), rng.randint(1, na), tally)
    yield _record(
        "lemma3", "lemma3/random",
        "seeded random bipartite graphs with |A| < |B| <= 8 satisfy the matching lemma",
        {"instances": opts.random_instances, "seed": opts.seed, "max_b": 8},
        {"COUNTEREXAMPLE": 0, "uncertified": 0}, tally,
        tally["COUNTEREXAMPLE"] == 0 and tally["uncertified"] == 0, tm.elapsed,
    )


def suite_lemma5(opts: VerifyOptions):
    """Graphs with |support| = e >= 3 have a vertex of degree >= 3 or are 2-regular."""
    n = opts.max_n or 6
    with _Timer() as tm:
        rep = verify_lemma_p3(n)
    yield _record(
        "lemma5", f"lemma5/n{n}",
        "graphs with as many edges as non-isolated vertices (>= 3) have a vertex of degree >= 3 or are 2-regular",
        {"max_n": n}, {"counterexamples": 0}, rep.to_dict(), rep.passed, tm.elapsed,
    )
    yield _record(
        "lemma5", f"lemma5/n{n}-strict-reading",
        "the 'degree greater than 3' wording fails (triangle plus pendant edge), so the >= 3 reading is the one checked",
        {"max_n": n}, {"strict_reading_fails": True},
        {"strict_reading_fails": rep.strict_failures > 0, "example": rep.first_strict_failure},
        rep.strict_failures > 0, 0.0,
    )


BRIDGE_PQ = ((2, 2), (3, 2), (3, 3), (4, 3))
TRANSITIVE_SPECS = ((5, 2, 2, 2), (5, 2, 3, 3), (6, 2, 3, 3), (6, 2, 4, 3), (5, 3, 2, 2))


def suite_kneser(opts: VerifyOptions):
    """Kneser hypergraphs: independence bridge, Petersen battery, chromatic formula, corollary arithmetic."""
    budget = opts.budget()
    for n, (p, q) in product((4, 5, 6), BRIDGE_PQ):
        spec = KneserSpec(n, 2, p, q)
        with _Timer() as tm:
            H = build_kneser(spec)
            alpha = independence_number(H)
            ext = extremal_number(n, 2, p, q, budget)
            oracle_alpha = independence_oracle(H)
        yield _record(
            "kneser", f"kneser/bridge-n{n}-p{p}-q{q}",
            "independence number of the q-wise Kneser hypergraph equals the (p,q)-extremal number",
            {"n": n, "k": 2, "p": p, "q": q}, ext.value,
            {"independence_number": alpha.value, "power_set": oracle_alpha},
            alpha.complete and ext.complete and alpha.value == ext.value == oracle_alpha, tm.elapsed,
        )

    spec = KneserSpec(5, 2, 2, 2)
    with _Timer() as tm:
        H = build_kneser(spec)
        alpha = independence_number(H).value
        chi = chromatic_number_exact(H)
        lp_value, coloring = fractional_chromatic_lp(H)
        trans = fractional_chromatic_transitive(spec, budget)
    computed = {
        "vertices": H.n, "edges": H.num_edges, "alpha": alpha,
        "chi": chi.upper if chi.complete else None, "sarkaria": sarkaria_chi(5, 2, 2, 2).chi,
        "chi_f_lp": lp_value, "chi_f_transitive": trans,
    }
    expected = {
        "vertices": 10, "edges": 15, "alpha": 4, "chi": 3, "sarkaria": 3,
        "chi_f_lp": Fraction(5, 2), "chi_f_transitive": Fraction(5, 2),
    }
    yield _record(
        "kneser", "kneser/petersen",
        "the Petersen graph: 10 vertices, 15 edges, alpha 4, chi 3, fractional chi 5/2",
        {"n": 5, "k": 2, "p": 2, "q": 2}, expected, computed,
        computed == expected and coloring.is_feasible(), tm.elapsed,
    )

    for sp in ((6, 2, 2, 2), (7, 2, 2, 2), (6, 2, 3, 2), (5, 2, 3, 2)):
        spec = KneserSpec(*sp)
        with _Timer() as tm:
            H = build_kneser(spec)
            chi = chromatic_number_exact(H)
            formula = sarkaria_chi(*sp)
        computed = {"chi": chi.upper if chi.complete else None, "edges": H.num_edges}
        expected = {"chi": formula.chi, "raw_formula": formula.raw}
        yield _record(
            "kneser", "kneser/sarkaria-" + "-".join(map(str, sp)),
            "exact chromatic number matches the ceiling formula (edgeless case: chi = 1 = raw formula)",
            dict(zip("nkpq", sp)), expected, computed,
            chi.complete and chi.upper == formula.chi and (H.num_edges > 0 or formula.raw == 1 == chi.upper),
            tm.elapsed,
        )

    for sp in TRANSITIVE_SPECS:
        spec = KneserSpec(*sp)
        with _Timer() as tm:
            H = build_kneser(spec)
            lp_value, coloring = fractional_chromatic_lp(H)
            trans = fractional_chromatic_transitive(spec, budget)
            chi = chromatic_number_exact(H)
        yield _record(
            "kneser", "kneser/transitive-" + "-".join(map(str, sp)),
            "vertex count over alpha equals the exact covering LP optimum, and chi_f <= chi",
            dict(zip("nkpq", sp)), lp_value, trans,
            lp_value == trans and coloring.is_feasible() and chi.complete and lp_value <= chi.upper,
            tm.elapsed,
        )

    with _Timer() as tm:
        head = corollary_chi_f(18, 3, 3)
        half = all(
            corollary_chi_f(n, q, q).value == Fraction(n, 2) for n in range(18, 31) for q in (3, 4, 5)
        )
    computed = {"value_18_3_3": head.value, "in_range_18_3_3": head.in_validity_range, "p_eq_q_gives_n_over_2": half}
    expected = {"value_18_3_3": Fraction(9), "in_range_18_3_3": True, "p_eq_q_gives_n_over_2": True}
    yield _record(
        "kneser", "kneser/corollary-arithmetic",
        "closed-form chi_f of the 2-set Kneser hypergraph: 9 at (18,3,3) and n/2 whenever p = q",
        {"n_range": [18, 30], "q": [3, 4, 5]}, expected, computed, computed == expected, tm.elapsed,
    )
    yield ClaimRecord(
        "kneser/corollary-end-to-end", "kneser",
        "closed-form chi_f equals the computed chi_f for n >= 2p^2",
        {"smallest_case": {"n": 18, "p": 3, "q": 3, "kneser_vertices": comb(18, 2)}},
        None, None, "skipped",
        "needs the independence number of a hypergraph on 153 vertices; only the ingredients are checked "
        "(oracle grid and the transitive-vs-LP identity)",
    )


SUITES = {
    "oracle": suite_oracle,
    "theorem6": suite_theorem6,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "lemma5": suite_lemma5,
    "kneser": suite_kneser,
}
ALIASES = {"all": list(SUITES), "paper": list(SUITES)}


def run(suite: str, opts: VerifyOptions | None = None) -> VerifyReport:
    opts = opts or VerifyOptions()
    names = ALIASES.get(suite, [suite])
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + sorted(ALIASES)}")
    report = VerifyReport(names, opts)
    seen = set()
    for name in names:
        for claim in SUITES[name](opts):
            if claim.id in seen:
                raise AssertionError(f"claim id {claim.id} reported twice")
            seen.add(claim.id)
            report.claims.append(claim)
    return report
