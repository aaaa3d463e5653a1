"""Ground-truth machinery: cut verification, the exact minimum star-cut
search, the star-cover subproblem, and exhaustive small-dimension checkers
for the counting bounds the connectivity results rest on.

Every lower-bound claim produced here reduces to one pattern: enumerate
connected candidate components C containing vertex 0 (sound because XOR
translations are automorphisms, which is asserted explicitly rather than
assumed), then decide whether the neighborhood N(C) can be covered by m
admissible stars that avoid C while leaving at least one vertex outside
C and the cover.  Finds are re-verified from scratch before being
reported; refutations are replayed deterministically.

The candidate-component stream is split into ordered tasks.  With
STARCUT_WORKERS > 1 the tasks run in a process pool and the results are
merged in stream order, so value, witness, and counted work are identical
to a single-worker run (the wall-clock limit is the one nondeterministic
safety valve).
"""

import json
import os
import time
from dataclasses import dataclass
from itertools import combinations
from functools import lru_cache
from multiprocessing import get_context
from pathlib import Path

from .bounds import MODES
from .graphs import (
    FQ,
    Q,
    Graph,
    TooLarge,
    iter_bits,
    labels_from_mask,
    mask_from_labels,
)
from .stars import (
    CutFamily,
    Star,
    Unsupported,
    build_fqn_cut,
    build_qn_cut,
    validate_star,
    witness_dict,
)

EXACT = "exact"
NO_CUT = "no_cut"
INCONCLUSIVE = "inconclusive"


class Infeasible(ValueError):
    pass


@dataclass(frozen=True)
class MoreThan:
    """Cover search outcome: more than ``limit`` members are needed."""

    limit: int


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for the exact search.

    ``max_component_size`` caps candidate-component growth (None means the
    sound half-the-vertices cap); the two counters and the wall limit stop
    runaway searches with an Inconclusive result.
    """

    max_component_size: int | None = None
    max_components: int = 1_000_000
    max_cover_branches: int = 1_000_000
    wall_limit: float = 60.0

    def __post_init__(self) -> None:
        if self.max_component_size is not None and self.max_component_size <= 0:
            raise ValueError("max_component_size must be positive")
        if self.max_components <= 0 or self.max_cover_branches <= 0:
            raise ValueError("budget counters must be positive")
        if self.wall_limit <= 0:
            raise ValueError("wall_limit must be positive")


@dataclass(frozen=True)
class SolveResult:
    kind: str  # exact | no_cut | inconclusive
    value: int | None
    best_upper: int | None
    witness: CutFamily | None
    certificate: dict

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT


def worker_count_from_env() -> int:
    raw = os.environ.get("STARCUT_WORKERS", "").strip()
    if not raw:
        return 1
    try:
        w = int(raw)
    except ValueError:
        raise ValueError(f"STARCUT_WORKERS must be a positive integer, got {raw!r}")
    if w < 1:
        raise ValueError(f"STARCUT_WORKERS must be a positive integer, got {raw!r}")
    return w


@lru_cache(maxsize=None)
def _translation_certified(family: str, n: int) -> bool:
    """Assert that v -> v XOR w preserves adjacency before any anchored
    search leans on it; exhaustive over w up to n = 5, sampled beyond."""
    g = Graph(family, n)
    if n <= 5:
        ws = range(g.size)
    else:
        ws = [1 << i for i in range(n)] + [g.size - 1, 3, g.size - 2]
    for w in ws:
        for v in range(g.size):
            if {x ^ w for x in g.neighbors(v)} != set(g.neighbors(v ^ w)):
                raise AssertionError(
                    f"translation by {w} is not an automorphism of {family}_{n}"
                )
    return True


# ----------------------------------------------------------------------
# cut verification


def structure_cut_violation(
    g: Graph, cut: CutFamily, r: int, mode: str = "structure"
) -> str | None:
    """None when the family is a valid cut of the requested flavor; else a
    one-line reason.  Malformed members yield a reason, never an exception."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if r < 1:
        raise ValueError(f"leaf count r={r} must be at least 1")
    if cut.graph != g:
        raise ValueError("cut family belongs to a different graph")
    if not cut.members:
        return "family has no members"
    for i, star in enumerate(cut.members, start=1):
        bad = validate_star(g, star)
        if bad is not None:
            return f"member {i}: {bad}"
        if mode == "structure" and star.leaf_count != r:
            return f"member {i}: {star.leaf_count} leaves, structure mode needs exactly {r}"
        if mode == "substructure" and star.leaf_count > r:
            return f"member {i}: {star.leaf_count} leaves exceeds r={r}"
    removed = mask_from_labels(cut.vertex_union)
    comps = g.component_masks(removed)
    if not comps:
        return "removal covers every vertex"
    if len(comps) < 2:
        return "removal leaves the graph connected"
    return None


def is_structure_cut(g: Graph, cut: CutFamily, r: int, mode: str = "structure") -> bool:
    return structure_cut_violation(g, cut, r, mode) is None


# ----------------------------------------------------------------------
# cover search over candidate components


class _ResourceCap(Exception):
    pass


class _CoverCore:
    """Shared machinery: given a forbidden component and a target vertex
    set, decide whether m admissible stars can cover the target.

    Candidates for the lowest uncovered target vertex t are stars centered
    at t or at a neighbor of t.  In substructure mode each center
    contributes its maximal useful leaf set (all admissible target
    neighbors, capped at r), which dominates any other choice both for
    coverage and for the leftover-vertex requirement.  In structure mode
    exactly r leaves are required, so missing leaves are padded, preferring
    vertices the cover removes anyway; if a completed cover ever dies only
    on the leftover check, the search is replayed with every padding choice
    before the component is declared uncoverable.
    """

    def __init__(self, g: Graph, r: int, mode: str):
        self.g = g
        self.size = g.size
        self.full = g.full_mask
        self.adj = [g.vertex_adjacency_mask(v) for v in range(g.size)]
        self.r = r
        self.mode = mode
        self.covers = 0
        self.cover_budget = 10**18
        self.deadline = float("inf")
        self.more = False
        self.require_leftover = True
        self.target_full = 0
        self.exhaust_hit = False

    def cover(self, target: int, c_mask: int, m: int) -> list[tuple[int, int]] | None:
        self.target_full = target
        self.exhaust_hit = False
        stars = self._cover_rec(target, m, c_mask, 0, False)
        if stars is None and self.mode == "structure" and self.exhaust_hit:
            stars = self._cover_rec(target, m, c_mask, 0, True)
        return stars

    def _cover_rec(
        self, remaining: int, m_left: int, c_mask: int, union: int, full_padding: bool
    ) -> list[tuple[int, int]] | None:
        if not remaining:
            if not self.require_leftover or self.full & ~(c_mask | union):
                return []
            self.exhaust_hit = True
            return None
        if m_left == 0:
            self.more = True
            return None
        t = (remaining & -remaining).bit_length() - 1
        for center, leaves in self._candidate_stars(t, remaining, c_mask, full_padding):
            self.covers += 1
            if self.covers > self.cover_budget:
                raise _ResourceCap
            if self.covers % 1024 == 0 and time.monotonic() > self.deadline:
                raise _ResourceCap
            verts = (1 << center) | leaves
            tail = self._cover_rec(
                remaining & ~verts, m_left - 1, c_mask, union | verts, full_padding
            )
            if tail is not None:
                return [(center, leaves)] + tail
        return None

    def _candidate_stars(self, t: int, remaining: int, c_mask: int, full_padding: bool):
        r = self.r
        for c in [t] + list(iter_bits(self.adj[t] & ~c_mask)):
            adm = self.adj[c] & ~c_mask
            tc = adm & remaining
            ntc = tc.bit_count()
            if self.mode == "substructure":
                if ntc <= r:
                    yield c, tc
                else:
                    yield from self._leaf_subsets(c, t, tc)
            else:
                if ntc >= r:
                    yield from self._leaf_subsets(c, t, tc)
                else:
                    pad_needed = r - ntc
                    pool = adm & ~tc
                    if pool.bit_count() < pad_needed:
                        continue
                    if full_padding:
                        for combo in combinations(labels_from_mask(pool), pad_needed):
                            yield c, tc | mask_from_labels(combo)
                    else:
                        yield c, tc | self._canonical_pad(pool, pad_needed)

    def _leaf_subsets(self, c: int, t: int, tc: int):
        labels = labels_from_mask(tc)
        if c == t:
            for combo in combinations(labels, self.r):
                yield c, mask_from_labels(combo)
        else:
            rest = [v for v in labels if v != t]
            tbit = 1 << t
            for combo in combinations(rest, self.r - 1):
                yield c, tbit | mask_from_labels(combo)

    def _canonical_pad(self, pool: int, k: int) -> int:
        # already-covered target vertices are removed regardless, so they
        # are the cheapest padding; fall back to ascending labels
        pad = 0
        for part in (pool & self.target_full, pool & ~self.target_full):
            for v in iter_bits(part):
                if not k:
                    return pad
                pad |= 1 << v
                k -= 1
        if k:
            raise AssertionError("padding pool exhausted despite size check")
        return pad


class _RefutationContext(_CoverCore):
    """Anchored component enumeration for one family-count level m."""

    def __init__(
        self,
        g: Graph,
        r: int,
        mode: str,
        m: int,
        max_csize: int,
        comp_budget: int,
        cover_budget: int,
        deadline: float,
    ):
        super().__init__(g, r, mode)
        self.m = m
        self.absolute_cap = m * (r + 1)
        self.max_csize = max_csize
        self.comp_budget = comp_budget
        self.cover_budget = cover_budget
        self.deadline = deadline
        self.components = 0
        self.size_capped = False
        fam, n = g.family, g.n
        # a single star member meets the neighborhood of a k-vertex
        # connected set in at most 2 vertices (k = 1) resp. 2(k-1)
        # vertices; the count argument needs triangle-freeness plus the
        # two-common-neighbors law (and no 5-cycles for k >= 2), which
        # folded cubes only satisfy from dimension 5 up (dimension 4 keeps
        # the k = 1 bound, dimension 3 not even that)
        if fam == Q and n >= 3:
            self._lemma_caps = True, True
        elif fam == FQ and n >= 5:
            self._lemma_caps = True, True
        elif fam == FQ and n == 4:
            self._lemma_caps = True, False
        else:
            self._lemma_caps = False, False

    def percap(self, k: int) -> int:
        single, multi = self._lemma_caps
        if k == 1:
            return min(2, self.r + 1) if single else self.r + 1
        return min(2 * (k - 1), self.r + 1) if multi else self.r + 1

    def state_dead(self, s_mask: int, x_mask: int, nbr: int) -> bool:
        frozen = (x_mask & nbr).bit_count()
        if frozen > self.absolute_cap:
            self.more = True
            return True
        k = s_mask.bit_count()
        if k > (self.size - frozen) // 2 or k > self.size // 2:
            return True
        if k > self.max_csize:
            self.size_capped = True
            return True
        return False

    def test_candidate(self, s_mask: int, nbr: int) -> list[tuple[int, int]] | None:
        self.components += 1
        if self.components > self.comp_budget:
            raise _ResourceCap
        if self.components % 256 == 0 and time.monotonic() > self.deadline:
            raise _ResourceCap
        boundary = nbr & ~s_mask
        k = s_mask.bit_count()
        nb = boundary.bit_count()
        if self.size - k - nb < 1:
            return None
        if nb > self.m * self.percap(k):
            self.more = True
            return None
        return self.cover(boundary, s_mask, self.m)

    def dfs(self, s_mask: int, x_mask: int, nbr: int) -> list[tuple[int, int]] | None:
        if self.state_dead(s_mask, x_mask, nbr):
            return None
        found = self.test_candidate(s_mask, nbr)
        if found is not None:
            return found
        cand = nbr & ~s_mask & ~x_mask
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            found = self.dfs(s_mask | low, x_mask, nbr | self.adj[v])
            if found is not None:
                return found
            x_mask |= low
            if (x_mask & nbr).bit_count() > self.absolute_cap:
                self.more = True
                return None
        return None


def _expand_tasks(ctx: _RefutationContext, want: int) -> list[tuple[int, int, int, bool]]:
    """Split the anchored DFS into ordered subtree tasks.

    Expanding a state replaces it, in place, by a test-only task for the
    state itself followed by its surviving children, so the task order is
    exactly the serial DFS order at any granularity.
    """
    root = (1, 0, ctx.adj[0], True)
    if ctx.state_dead(*root[:3]):
        return []
    tasks: list[tuple[int, int, int, bool]] = [root]
    while len(tasks) < want:
        idx = None
        shallowest = None
        for i, t in enumerate(tasks):
            if t[3]:
                k = t[0].bit_count()
                if shallowest is None or k < shallowest:
                    shallowest, idx = k, i
        if idx is None:
            break
        s_mask, x_mask, nbr, _ = tasks.pop(idx)
        repl: list[tuple[int, int, int, bool]] = [(s_mask, x_mask, nbr, False)]
        cand = nbr & ~s_mask & ~x_mask
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            child = (s_mask | low, x_mask, nbr | ctx.adj[v], True)
            if not ctx.state_dead(*child[:3]):
                repl.append(child)
            x_mask |= low
            if (x_mask & nbr).bit_count() > ctx.absolute_cap:
                ctx.more = True
                break
        tasks[idx:idx] = repl
    return tasks


def _run_task(payload) -> dict:
    (family, n, r, mode, m, max_csize, b_comp, b_cov, deadline, s_mask, x_mask, nbr, descend) = payload
    ctx = _RefutationContext(
        Graph(family, n), r, mode, m, max_csize, b_comp, b_cov, deadline
    )
    status = "done"
    stars = None
    try:
        if descend:
            stars = ctx.dfs(s_mask, x_mask, nbr)
        else:
            stars = ctx.test_candidate(s_mask, nbr)
        if stars is not None:
            status = "found"
    except _ResourceCap:
        status = "capped"
    return {
        "status": status,
        "stars": stars,
        "components": ctx.components,
        "covers": ctx.covers,
        "more": ctx.more,
        "size_capped": ctx.size_capped,
    }


def _run_tasks(payloads, workers: int):
    if workers <= 1 or len(payloads) <= 1:
        for p in payloads:
            yield _run_task(p)
        return
    with get_context("fork").Pool(processes=min(workers, len(payloads))) as pool:
        yield from pool.map(_run_task, payloads)


def _refute_or_find(
    g: Graph,
    r: int,
    mode: str,
    m: int,
    budget: SearchBudget,
    workers: int,
    deadline: float,
    totals: dict,
):
    """One family-count level: ('found', stars) | ('refuted', more) | ('capped',)."""
    max_csize = budget.max_component_size or g.size // 2
    coord = _RefutationContext(
        g, r, mode, m, max_csize, budget.max_components, budget.max_cover_branches, deadline
    )
    tasks = _expand_tasks(coord, max(8, 4 * workers))
    payloads = [
        (g.family, g.n, r, mode, m, max_csize, budget.max_components,
         budget.max_cover_branches, deadline) + t
        for t in tasks
    ]
    b_comp, b_cov = budget.max_components, budget.max_cover_branches
    cum_comp = cum_cov = 0
    more = coord.more
    size_capped = coord.size_capped

    def book(comp: int, cov: int) -> None:
        totals["components"] += min(comp, b_comp)
        totals["covers"] += min(cov, b_cov)

    for res in _run_tasks(payloads, workers):
        if res["status"] == "found":
            if cum_comp + res["components"] <= b_comp and cum_cov + res["covers"] <= b_cov:
                book(cum_comp + res["components"], cum_cov + res["covers"])
                return ("found", res["stars"])
            book(b_comp, b_cov)
            return ("capped",)
        if res["status"] == "capped":
            book(cum_comp + res["components"], cum_cov + res["covers"])
            return ("capped",)
        cum_comp += res["components"]
        cum_cov += res["covers"]
        if cum_comp > b_comp or cum_cov > b_cov:
            book(cum_comp, cum_cov)
            return ("capped",)
        more |= res["more"]
        size_capped |= res["size_capped"]
    book(cum_comp, cum_cov)
    if size_capped:
        return ("capped",)
    return ("refuted", more)


def _stars_from_masks(found: list[tuple[int, int]]) -> tuple[Star, ...]:
    return tuple(Star(c, tuple(labels_from_mask(leaves))) for c, leaves in found)


def _upper_bound_family(g: Graph, r: int, mode: str) -> CutFamily | None:
    try:
        fam = build_qn_cut(g.n, r) if g.family == Q else build_fqn_cut(g.n, r)
    except Unsupported:
        return None
    bad = structure_cut_violation(g, fam, r, mode)
    if bad is not None:
        raise RuntimeError(f"construction failed self-verification: {bad}")
    return fam


def min_star_cut(
    g: Graph,
    r: int,
    mode: str = "structure",
    budget: SearchBudget | None = None,
    workers: int | None = None,
) -> SolveResult:
    """Exact minimum star-cut size with a verified witness.

    Walks m = 1, 2, ... refuting each level exhaustively until either a
    verified m-member cut turns up (Exact(m), the levels below are
    refuted), the level reaches the constructed upper bound (Exact of the
    construction), the whole space dies without any budget pressure
    (NoCutExists), or a budget trips (Inconclusive with the best verified
    upper bound).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if r < 1:
        raise ValueError(f"leaf count r={r} must be at least 1")
    budget = budget or SearchBudget()
    if workers is None:
        workers = worker_count_from_env()
    _translation_certified(g.family, g.n)
    deadline = time.monotonic() + budget.wall_limit
    ub_family = _upper_bound_family(g, r, mode)
    ub = len(ub_family.members) if ub_family is not None else None
    totals = {"components": 0, "covers": 0}

    def finish(kind: str, value=None, witness=None, best_upper=None) -> SolveResult:
        cert = {
            "claim": {"family": g.family, "n": g.n, "r": r, "mode": mode},
            "value": {"kind": kind}
            | ({"m": value} if kind == EXACT else {})
            | ({"best_upper": best_upper} if kind == INCONCLUSIVE else {}),
            "witness": witness_dict(witness, r) if witness is not None else None,
            "search": {
                "components": totals["components"],
                "covers": totals["covers"],
                "workers": workers,
            },
        }
        return SolveResult(kind, value, best_upper, witness, cert)

    m = 1
    while m <= g.size:
        if ub is not None and m >= ub:
            return finish(EXACT, value=ub, witness=ub_family)
        outcome = _refute_or_find(g, r, mode, m, budget, workers, deadline, totals)
        if outcome[0] == "found":
            cut = CutFamily(g, _stars_from_masks(outcome[1]))
            bad = structure_cut_violation(g, cut, r, mode)
            if bad is not None:
                raise RuntimeError(f"search produced an invalid witness: {bad}")
            if len(cut.members) != m:
                raise RuntimeError(
                    f"search found a {len(cut.members)}-member cut at level {m}; "
                    "a lower level was refuted incorrectly"
                )
            return finish(EXACT, value=m, witness=cut)
        if outcome[0] == "capped":
            return finish(INCONCLUSIVE, best_upper=ub, witness=ub_family)
        if not outcome[1]:  # refuted, and extra members can never help
            if ub is not None:
                raise RuntimeError(
                    "search refuted all sizes but a verified construction exists"
                )
            return finish(NO_CUT)
        m += 1
    return finish(NO_CUT)


# ----------------------------------------------------------------------
# standalone star-cover subproblem


def star_cover_number(
    g: Graph,
    target,
    forbidden,
    r: int,
    mode: str = "structure",
    max_members: int = 8,
):
    """Minimum number of admissible stars covering ``target`` while avoiding
    ``forbidden``; MoreThan(max_members) when the cap is exceeded.

    Structure mode pads every member to exactly r leaves (pad leaves may sit
    anywhere admissible, inside the target or out) and raises Infeasible
    when some target vertex admits no covering star at all.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if r < 1:
        raise ValueError(f"leaf count r={r} must be at least 1")
    if max_members < 1:
        raise ValueError("max_members must be positive")
    target_set = frozenset(target)
    forbidden_set = frozenset(forbidden)
    for v in target_set | forbidden_set:
        g.check_vertex(v)
    if target_set & forbidden_set:
        raise ValueError("target and forbidden sets overlap")
    if not target_set:
        return 0
    core = _CoverCore(g, r, mode)
    core.require_leftover = False
    target_mask = mask_from_labels(target_set)
    c_mask = mask_from_labels(forbidden_set)
    if mode == "structure":
        for t in sorted(target_set):
            realizable = any(
                (core.adj[c] & ~c_mask).bit_count() >= r
                for c in [t] + list(iter_bits(core.adj[t] & ~c_mask))
            )
            if not realizable:
                raise Infeasible(
                    f"no admissible {r}-leaf star covers target vertex {t}"
                )
    for m in range(1, max_members + 1):
        if core.cover(target_mask, c_mask, m) is not None:
            return m
    return MoreThan(max_members)


# ----------------------------------------------------------------------
# neighborhood and extra-connectivity oracles


def min_neighborhood(g: Graph, k: int) -> tuple[int, frozenset[int]]:
    """Minimum |N(C)| over connected k-vertex sets, with one minimizer.

    Anchored at vertex 0; ties go to the first set in enumeration order.
    """
    if g.n > 6 or k > 6:
        raise TooLarge(f"exhaustive neighborhood scan capped at n=6, k=6")
    if k < 1:
        raise ValueError("k must be positive")
    _translation_certified(g.family, g.n)
    best = None
    witness = None
    for cset in g.enumerate_connected_subgraphs(k, anchor=0):
        nb = len(g.neighborhood(cset))
        if best is None or nb < best:
            best, witness = nb, cset
    assert best is not None
    return best, witness


def _all_components_bigger_than(g: Graph, removed_mask: int, extra: int) -> bool:
    comps = g.component_masks(removed_mask)
    if len(comps) < 2:
        return False
    return all(c.bit_count() > extra for c in comps)


def brute_kappa_g(g: Graph, extra_g: int) -> int:
    """Exhaustive g-extra connectivity: minimum removal disconnecting the
    graph with every component keeping more than ``extra_g`` vertices.

    Full subset scan by increasing size up to n = 4; dimension 5 walks
    increasing cut sizes and only materializes cuts around anchored
    connected components, which the translation group makes exhaustive.
    """
    if extra_g < 0:
        raise ValueError("extra_g must be nonnegative")
    if g.n > 5:
        raise TooLarge("exhaustive extra-connectivity scan capped at n=5")
    size = g.size
    if g.n <= 4:
        for s in range(size + 1):
            for combo in combinations(range(size), s):
                removed = mask_from_labels(combo)
                if _all_components_bigger_than(g, removed, extra_g):
                    return s
        raise ValueError(f"no cut of {g.family}_{g.n} leaves all components > {extra_g}")
    _translation_certified(g.family, g.n)
    full = g.full_mask
    for s in range(1, size + 1):
        max_k = (size - s) // 2
        for k in range(extra_g + 1, max_k + 1):
            for cset in g.enumerate_connected_subgraphs(k, anchor=0):
                c_mask = mask_from_labels(cset)
                n_mask = g.frontier_neighbors_mask(c_mask) & ~c_mask
                nb = n_mask.bit_count()
                if nb > s:
                    continue
                rest = labels_from_mask(full & ~c_mask & ~n_mask)
                for extra in combinations(rest, s - nb):
                    removed = n_mask | mask_from_labels(extra)
                    if _all_components_bigger_than(g, removed, extra_g):
                        return s
    raise ValueError(f"no cut of {g.family}_{g.n} leaves all components > {extra_g}")


# ----------------------------------------------------------------------
# lemma-style exhaustive checkers


@dataclass
class LemmaReport:
    lemma_id: str
    instances_checked: int
    violations: list
    extremal_witnesses: list

    @property
    def passed(self) -> bool:
        return not self.violations


def check_common_neighbors(g: Graph) -> LemmaReport:
    """Every vertex pair has zero or exactly two common neighbors.

    Holds for all hypercubes (n >= 2) and folded hypercubes of dimension 4
    and up; FQ_3 violates it on every distance-2 pair, which is reported
    rather than hidden.
    """
    if g.n > 8:
        raise TooLarge("common-neighbor scan capped at n=8")
    adj = [g.vertex_adjacency_mask(v) for v in range(g.size)]
    violations = []
    pairs = 0
    for u in range(g.size):
        for v in range(u + 1, g.size):
            pairs += 1
            common = adj[u] & adj[v]
            c = common.bit_count()
            if c not in (0, 2):
                violations.append((u, v, tuple(labels_from_mask(common))))
    return LemmaReport("common-neighbors", pairs, violations, [])


def fq3_exception_pairs() -> list[tuple[int, int]]:
    """The distance-2 pairs of FQ_3, every one a common-neighbor violation."""
    g = Graph(FQ, 3)
    return [
        (u, v)
        for u in range(g.size)
        for v in range(u + 1, g.size)
        if (u ^ v).bit_count() == 2
    ]


def _is_induced_star(g: Graph, labels: list[int]) -> bool:
    if len(labels) <= 2:
        return True
    for c in labels:
        others = [v for v in labels if v != c]
        if all(g.adjacent(c, v) for v in others):
            return not any(
                g.adjacent(a, b) for i, a in enumerate(others) for b in others[i + 1 :]
            )
    return False


@lru_cache(maxsize=None)
def _connected_sets_with_boundary(family: str, n: int, k: int) -> tuple:
    g = Graph(family, n)
    out = []
    for cset in g.enumerate_connected_subgraphs(k):
        c_mask = mask_from_labels(cset)
        n_mask = g.frontier_neighbors_mask(c_mask) & ~c_mask
        out.append((c_mask, n_mask))
    return tuple(out)


def check_star_bounds(g: Graph, r: int, kmax: int) -> LemmaReport:
    """How much of a star's vertex set the neighborhood of a disjoint
    connected k-set can reach: at most 2 vertices for k = 1 (and then only
    two leaves), at most 2(k-1) in general, with every 2(k-1) equality
    witness itself an induced star.

    Stars are taken centered at vertex 0; every star is a translate of one
    of these, and translations are certified automorphisms, so nothing is
    lost.
    """
    if g.n > 5 or kmax > 5:
        raise TooLarge("star-bound scan capped at n=5, k=5")
    if not 2 <= r <= g.degree:
        raise ValueError(f"need 2 <= r <= {g.degree}, got r={r}")
    _translation_certified(g.family, g.n)
    center_nbrs = sorted(g.neighbors(0))
    stars = []
    for leaves in combinations(center_nbrs, r):
        leaf_mask = mask_from_labels(leaves)
        stars.append((leaves, 1 | leaf_mask, leaf_mask))
    violations = []
    extremal = []
    checked = 0
    for k in range(1, kmax + 1):
        bound = 2 if k == 1 else 2 * (k - 1)
        for c_mask, n_mask in _connected_sets_with_boundary(g.family, g.n, k):
            for leaves, star_mask, leaf_mask in stars:
                if c_mask & star_mask:
                    continue
                checked += 1
                inter = n_mask & star_mask
                cnt = inter.bit_count()
                if cnt > bound:
                    violations.append(
                        ("over-bound", k, leaves, tuple(labels_from_mask(c_mask)), cnt)
                    )
                elif cnt == bound:
                    c_labels = tuple(labels_from_mask(c_mask))
                    if k == 1:
                        if inter & ~leaf_mask:
                            violations.append(
                                ("equality-through-center", k, leaves, c_labels, cnt)
                            )
                        else:
                            extremal.append(("two-leaf-contact", k, leaves, c_labels))
                    elif not _is_induced_star(g, list(labels_from_mask(c_mask))):
                        violations.append(
                            ("equality-without-star", k, leaves, c_labels, cnt)
                        )
                    else:
                        extremal.append(("star-equality", k, leaves, c_labels))
    extremal.sort()
    violations.sort()
    return LemmaReport("star-bounds", checked, violations, extremal)


# ----------------------------------------------------------------------
# certificates


def certificate_bytes(result: SolveResult) -> bytes:
    return (json.dumps(result.certificate, indent=2) + "\n").encode()


def write_certificate(path: str | Path, result: SolveResult) -> None:
    Path(path).write_bytes(certificate_bytes(result))
