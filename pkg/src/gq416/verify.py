"""Named verification suites over a constructed GQ and the report schema.

Each suite returns a SuiteResult; the report maps suite ids to entries
and is pass overall iff every entry passes. Suites quantified over every
non-edge run exhaustively by default; a seeded sample mode exists for
quick runs, and --deep extends the per-(p,q,r) profile suites from the
canonical-plus-sampled non-edges to all 41600 of them.
"""

import random
import time
from dataclasses import dataclass, field
from math import comb

from gq416.counting import (
    DEFAULT_CONSTANTS,
    LEMMA_IDS,
    constraint,
    derived_system,
    enumerate_feasible_profiles,
    profile_system,
    replay_lemma,
    simple_profile_system,
    solve_counting_system,
)
from gq416.designs import (
    derived_design,
    design_from_partition,
    lambda_vector,
    multiplicity_spectrum,
    verify_t_design,
)
from gq416.geometry import GQStructure, check_gq_axioms
from gq416.graph import (
    PointGraph,
    adjacency_profile,
    bit_list,
    bits,
    iter_triads,
    local_partition,
    n_classes,
    pair_law_check,
    perp_of,
    refine_partition,
    refined_counts_check,
    verify_srg,
)
from gq416.verify_constants import (
    DERIVED_LAMBDAS,
    LAMBDA_VECTOR,
    Q54_PROFILE,
    SRG_PARAMS,
)

SCHEMA_VERSION = 1
MAX_WITNESSES = 5


@dataclass
class SuiteResult:
    status: str  # 'pass' or 'fail'
    checked: int
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "checked": self.checked,
            "witnesses": self.witnesses,
            "seconds": round(self.seconds, 3),
        }


class VerificationContext:
    """Shared lazily-built artifacts for the suites."""

    def __init__(self, S: GQStructure, sample=None, seed=0, deep=False):
        self.S = S
        self.sample = sample
        self.seed = seed
        self.deep = deep
        self._graph = None
        self._canonical = None
        self._deep_results = None

    @property
    def graph(self) -> PointGraph:
        if self._graph is None:
            self._graph = PointGraph.from_gq(self.S)
        return self._graph

    @property
    def canonical_partition(self):
        """Partition of the first non-edge in canonical order."""
        if self._canonical is None:
            p, q = next(self.graph.non_edges())
            self._canonical = local_partition(self.graph, p, q)
        return self._canonical

    @property
    def deep_results(self) -> dict:
        """Cached full (non-edge, r) exhaustion for the profile suites."""
        if self._deep_results is None:
            from gq416.deep import deep_profile_results

            self._deep_results = deep_profile_results(self.graph)
        return self._deep_results

    def sampled_non_edges(self, count=50):
        """Canonical non-edge first, then a seeded sample of further ones."""
        non_edges = list(self.graph.non_edges())
        rng = random.Random(self.seed)
        rest = rng.sample(non_edges[1:], min(count, len(non_edges) - 1))
        return [non_edges[0]] + rest


def _finish(ok, checked, witnesses, t0) -> SuiteResult:
    return SuiteResult(
        status="pass" if ok else "fail",
        checked=checked,
        witnesses=witnesses[:MAX_WITNESSES],
        seconds=time.time() - t0,
    )


def suite_axioms(ctx) -> SuiteResult:
    t0 = time.time()
    report = check_gq_axioms(ctx.S)
    witnesses = [] if report.all_pass else [list(report.witness)]
    checked = len(ctx.S.points) * len(ctx.S.lines)
    return _finish(report.all_pass, checked, witnesses, t0)


def suite_srg(ctx) -> SuiteResult:
    t0 = time.time()
    res = verify_srg(ctx.graph)
    n = ctx.graph.n
    if not res.ok:
        return _finish(False, comb(n, 2), [list(res.witness)], t0)
    params = (res.params.v, res.params.k, res.params.lam, res.params.mu)
    witnesses = [] if params == SRG_PARAMS else [["params", list(params)]]
    return _finish(params == SRG_PARAMS, comb(n, 2), witnesses, t0)


def suite_coclique(ctx) -> SuiteResult:
    """|A| = 17 coclique, |B| = 204, |C| = |D| = 51 for every non-edge."""
    t0 = time.time()
    G = ctx.graph
    non_edges = list(G.non_edges())
    if ctx.sample is not None:
        rng = random.Random(ctx.seed)
        non_edges = rng.sample(non_edges, min(ctx.sample, len(non_edges)))
    witnesses = []
    for p, q in non_edges:
        part = local_partition(G, p, q)
        if part.sizes != (17, 204, 51, 51):
            witnesses.append([p, q, "sizes", list(part.sizes)])
            continue
        for a in bits(part.a_mask):
            if G.adj[a] & part.a_mask:
                witnesses.append([p, q, "edge-in-A", a])
                break
    return _finish(not witnesses, len(non_edges), witnesses, t0)


def _triad_scan(ctx, check_regular):
    """Shared triad walk; returns (checked, witnesses)."""
    G = ctx.graph
    witnesses = []
    perp_cache = {}
    checked = 0

    def handle(p, q, r):
        trace = G.adj[p] & G.adj[q] & G.adj[r]
        if trace.bit_count() != 5:
            witnesses.append([p, q, r, "trace-size", trace.bit_count()])
            return
        if check_regular:
            size = perp_cache.get(trace)
            if size is None:
                size = perp_of(G, trace).bit_count()
                perp_cache[trace] = size
            if size > 5:
                witnesses.append([p, q, r, "perp-overflow", size])
            elif size != 5:
                witnesses.append([p, q, r, "not-3-regular", size])

    if ctx.sample is None:
        for p, q, r in iter_triads(G):
            handle(p, q, r)
            checked += 1
    else:
        rng = random.Random(ctx.seed)
        while checked < ctx.sample:
            p = rng.randrange(G.n)
            nn = G.non_neighbours(p)
            if not nn:
                continue
            q = rng.choice(bit_list(nn))
            both = nn & G.non_neighbours(q) & ~(1 << q)
            if not both:
                continue
            r = rng.choice(bit_list(both))
            handle(p, q, r)
            checked += 1
    return checked, witnesses


def suite_triads(ctx) -> SuiteResult:
    t0 = time.time()
    checked, witnesses = _triad_scan(ctx, check_regular=False)
    if ctx.sample is None and checked != 2_828_800:
        witnesses.append(["triad-count", checked])
    return _finish(not witnesses, checked, witnesses, t0)


def suite_three_regularity(ctx) -> SuiteResult:
    t0 = time.time()
    checked, witnesses = _triad_scan(ctx, check_regular=True)
    return _finish(not witnesses, checked, witnesses, t0)


def suite_design(ctx) -> SuiteResult:
    """3-(17,5,3) with tripled blocks and 3-(17,5,1) support, sampled."""
    t0 = time.time()
    G = ctx.graph
    witnesses = []
    pairs = ctx.sampled_non_edges(50)
    for p, q in pairs:
        part = local_partition(G, p, q)
        D = design_from_partition(G, part)
        ok, why = verify_t_design(D, 3, 17, 5, 3)
        if not ok:
            witnesses.append([p, q, "not-3-(17,5,3)", repr(why)])
            continue
        if multiplicity_spectrum(D) != {3: 68}:
            witnesses.append([p, q, "spectrum", multiplicity_spectrum(D)])
            continue
        ok, why = verify_t_design(D.support(), 3, 17, 5, 1)
        if not ok:
            witnesses.append([p, q, "support-not-3-(17,5,1)", repr(why)])
    return _finish(not witnesses, len(pairs), witnesses, t0)


def suite_lambda(ctx) -> SuiteResult:
    """Lambda vector, double counts and derived design on the canonical D."""
    t0 = time.time()
    G = ctx.graph
    part = ctx.canonical_partition
    D = design_from_partition(G, part)
    witnesses = []
    vec, why = lambda_vector(D, 3)
    if vec != LAMBDA_VECTOR:
        witnesses.append(["lambda", list(vec) if vec else repr(why)])
    else:
        for i, lam in enumerate(vec):
            if comb(17, i) * lam != D.block_count * comb(5, i):
                witnesses.append(["double-count", i, lam])
    for x in range(D.v):
        dvec, dwhy = lambda_vector(derived_design(D, x), 2)
        if dvec != DERIVED_LAMBDAS:
            witnesses.append(["derived", x, list(dvec) if dvec else repr(dwhy)])
            break
    return _finish(not witnesses, 1 + D.v, witnesses, t0)


def suite_multiplicity(ctx) -> SuiteResult:
    t0 = time.time()
    G = ctx.graph
    witnesses = []
    pairs = ctx.sampled_non_edges(50)
    for p, q in pairs:
        D = design_from_partition(G, local_partition(G, p, q))
        spectrum = multiplicity_spectrum(D)
        if spectrum != {3: 68}:
            witnesses.append([p, q, spectrum])
    return _finish(not witnesses, len(pairs), witnesses, t0)


def suite_lemma_32(ctx) -> SuiteResult:
    """B' splits as 24 in N0 plus 15 in N1, for every refinement vertex."""
    t0 = time.time()
    if ctx.deep:
        checked, witnesses = ctx.deep_results["lemma-3.2"]
        return _finish(not witnesses, checked, witnesses, t0)
    G = ctx.graph
    witnesses = []
    checked = 0
    for p, q in ctx.sampled_non_edges(50):
        part = local_partition(G, p, q)
        for r in bits(part.b_mask):
            ref = refine_partition(G, part, r)
            counts = refined_counts_check(G, ref)
            checked += 1
            if (counts["b1_n0"], counts["b1_n1"], counts["b1_higher"]) != (24, 15, 0):
                witnesses.append([p, q, r, counts["b1_n0"], counts["b1_n1"], counts["b1_higher"]])
    return _finish(not witnesses, checked, witnesses, t0)


def suite_lemma_38(ctx) -> SuiteResult:
    """Pair law on all non-adjacent pairs of B for the canonical non-edge."""
    t0 = time.time()
    G = ctx.graph
    part = ctx.canonical_partition
    b_list = bit_list(part.b_mask)
    witnesses = []
    checked = 0
    for i, x in enumerate(b_list):
        for y in b_list[i + 1:]:
            if G.are_adjacent(x, y):
                continue
            counts = pair_law_check(G, part, x, y)
            checked += 1
            k = counts["k"]
            if counts["in_b"] != 7 + k or counts["in_c"] != 5 - k or counts["in_d"] != 5 - k:
                witnesses.append([x, y, counts])
    return _finish(not witnesses, checked, witnesses, t0)


def suite_profile_n5(ctx) -> SuiteResult:
    """n5 = 3 and the four counting equations, for every profile."""
    t0 = time.time()
    if ctx.deep:
        checked, witnesses = ctx.deep_results["profile-n5"]
        return _finish(not witnesses, checked, witnesses, t0)
    G = ctx.graph
    system = profile_system()
    witnesses = []
    checked = 0
    for p, q in ctx.sampled_non_edges(50):
        part = local_partition(G, p, q)
        for r in bits(part.b_mask):
            ref = refine_partition(G, part, r)
            prof = adjacency_profile(G, ref)
            checked += 1
            if prof[5] != 3:
                witnesses.append([p, q, r, "n5", prof[5]])
            elif any(res != 0 for res in system.residuals(prof)):
                witnesses.append([p, q, r, "residual", list(prof)])
            elif prof != Q54_PROFILE:
                witnesses.append([p, q, r, "regression", list(prof)])
            elif prof[5] != -186 + 4 * prof[0] + prof[1]:
                witnesses.append([p, q, r, "fourth-identity", list(prof)])
    return _finish(not witnesses, checked, witnesses, t0)


def suite_bprime_n0(ctx) -> SuiteResult:
    """|G(a) & B' & N0| = 10 for every a in A'', plus derived profiles."""
    t0 = time.time()
    if ctx.deep:
        checked, witnesses = ctx.deep_results["bprime-n0-count"]
        return _finish(not witnesses, checked, witnesses, t0)
    G = ctx.graph
    triple = solve_counting_system(derived_system(), free=(3, 4))
    witnesses = []
    checked = 0
    for p, q in ctx.sampled_non_edges(50):
        part = local_partition(G, p, q)
        for r in bits(part.b_mask):
            ref = refine_partition(G, part, r)
            classes = n_classes(G, part, ref.a1_mask)
            target = ref.b1_mask & classes[0]
            for a in bits(ref.a2_mask):
                checked += 1
                value = (G.adj[a] & target).bit_count()
                if value != 10:
                    witnesses.append([p, q, r, a, "b1-n0", value])
                    continue
                m = tuple((G.adj[a] & classes[i]).bit_count() for i in range(5))
                if sum(m) != 60 or m[4] > 1 or m[3] > 2:
                    witnesses.append([p, q, r, a, "m-profile", list(m)])
                elif tuple(triple.evaluate({3: m[3], 4: m[4]})) != m:
                    witnesses.append([p, q, r, a, "family", list(m)])
    return _finish(not witnesses, checked, witnesses, t0)


def suite_system_star(ctx) -> SuiteResult:
    t0 = time.time()
    fam = solve_counting_system(profile_system(), free=(0, 1))
    ok = (
        fam.particular_vector() == (660, -990, 720, -186)
        and fam.basis_vector(0) == (-10, 20, -15, 4)
        and fam.basis_vector(1) == (-4, 6, -4, 1)
    )
    return _finish(ok, 3, [] if ok else [["family", str(fam.exprs)]], t0)


def suite_system_double_star(ctx) -> SuiteResult:
    t0 = time.time()
    fam = solve_counting_system(simple_profile_system(), free=(4,))
    # bound order is (0,1,2,3,5); the displayed matrix covers n0..n3
    ok = (
        fam.particular_vector()[:4] == (28, 75, 80, 20)
        and fam.basis_vector(4)[:4] == (1, -4, 6, -4)
        and fam.particular_vector()[4] == 1
        and fam.basis_vector(4)[4] == 0
    )
    return _finish(ok, 2, [] if ok else [["family", str(fam.exprs)]], t0)


def suite_system_triple_star(ctx) -> SuiteResult:
    t0 = time.time()
    fam = solve_counting_system(derived_system(), free=(3, 4))
    ok = (
        fam.particular_vector() == (15, 15, 30)
        and fam.basis_vector(3) == (-1, 3, -3)
        and fam.basis_vector(4) == (-3, 8, -6)
    )
    return _finish(ok, 3, [] if ok else [["family", str(fam.exprs)]], t0)


def _replay_suite(lemma_id):
    def run(ctx) -> SuiteResult:
        t0 = time.time()
        trace = replay_lemma(lemma_id)
        arith = [s for s in trace.steps if s.kind == "ARITHMETIC"]
        witnesses = [[s.statement] for s in arith if s.verdict != "pass"]
        return _finish(trace.passed, len(arith), witnesses, t0)

    return run


def suite_infeasibility_scan(ctx) -> SuiteResult:
    """Full-box scan: the n5 = 2 constraint set admits no integer profile."""
    t0 = time.time()
    star = solve_counting_system(profile_system(), free=(0, 1))
    c = DEFAULT_CONSTANTS["L3.4"]
    feasible = enumerate_feasible_profiles(
        star,
        constraints=(
            constraint(5, "==", c["n5"]),
            constraint(0, ">=", c["n0_min"]),
            constraint(1, ">=", c["n1_min"]),
        ),
        box=(0, 204),
    )
    ok = feasible == []
    return _finish(ok, 205 * 205, [list(x) for x in feasible], t0)


SUITES = {
    "axioms": suite_axioms,
    "srg": suite_srg,
    "coclique": suite_coclique,
    "triads": suite_triads,
    "three-regularity": suite_three_regularity,
    "design": suite_design,
    "lambda": suite_lambda,
    "multiplicity": suite_multiplicity,
    "lemma-3.2": suite_lemma_32,
    "lemma-3.8": suite_lemma_38,
    "profile-n5": suite_profile_n5,
    "bprime-n0-count": suite_bprime_n0,
    "system-star": suite_system_star,
    "system-double-star": suite_system_double_star,
    "system-triple-star": suite_system_triple_star,
    "infeasibility-scan": suite_infeasibility_scan,
}
for _lid in LEMMA_IDS:
    SUITES[f"replay-{_lid}"] = _replay_suite(_lid)


def run_suites(ctx: VerificationContext, suite_ids=None) -> dict:
    """Run the selected suites (default all) and assemble the report."""
    if suite_ids is None:
        suite_ids = list(SUITES)
    unknown = [s for s in suite_ids if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    entries = {}
    for sid in suite_ids:
        entries[sid] = SUITES[sid](ctx).to_dict()
    status = "pass" if all(e["status"] == "pass" for e in entries.values()) else "fail"
    return {"schema": SCHEMA_VERSION, "status": status, "entries": entries}


def format_report_text(report: dict) -> str:
    lines = [f"schema {report['schema']}  overall: {report['status'].upper()}"]
    for sid, entry in report["entries"].items():
        lines.append(
            f"  {sid:24s} {entry['status']:4s} checked={entry['checked']:>9}"
            f"  {entry['seconds']:8.3f}s"
        )
        for w in entry["witnesses"]:
            lines.append(f"      witness: {w}")
    return "\n".join(lines) + "\n"
