"""Solver and checker tests.

The exact solver is cross-validated on the 8-vertex graphs against a
completely independent oracle that enumerates every family of stars over
the whole graph (no anchoring, no pruning) and tests disconnection by
plain BFS.
"""

from itertools import combinations

import pytest

from starcut.bounds import kappa_g_formula, known_value, neighborhood_bound_formula
from starcut.graphs import FQ, Q, Graph, TooLarge, parse_vertex
from starcut.oracles import (
    Infeasible,
    MoreThan,
    SearchBudget,
    brute_kappa_g,
    check_common_neighbors,
    check_star_bounds,
    fq3_exception_pairs,
    is_structure_cut,
    min_neighborhood,
    min_star_cut,
    star_cover_number,
    structure_cut_violation,
)
from starcut.stars import CutFamily, Star, build_fqn_cut, build_qn_cut


def lab(bits: str) -> int:
    return parse_vertex(bits)


def brute_components(g: Graph, removed):
    remaining = set(range(g.size)) - set(removed)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
        remaining -= comp
    return comps


def brute_min_star_cut(g: Graph, r: int, mode: str, max_members: int = 3):
    """Independent oracle: every star family over the whole graph."""
    stars = []
    for center in range(g.size):
        nbrs = sorted(g.neighbors(center))
        leaf_counts = [r] if mode == "structure" else range(0, r + 1)
        for k in leaf_counts:
            for combo in combinations(nbrs, k):
                stars.append(frozenset((center,) + combo))
    for m in range(1, max_members + 1):
        for fam in combinations(stars, m):
            union = set().union(*fam)
            if len(brute_components(g, union)) >= 2:
                return m
    return None


# ----------------------------------------------------------------------
# cut verification


def test_is_structure_cut_accepts_the_construction():
    g = Graph(Q, 3)
    assert is_structure_cut(g, build_qn_cut(3, 2), 2, "structure")


def test_single_star_is_not_a_cut_of_q3():
    g = Graph(Q, 3)
    cut = CutFamily(g, (build_qn_cut(3, 2).members[0],))
    why = structure_cut_violation(g, cut, 2, "structure")
    assert why == "removal leaves the graph connected"


def test_covering_everything_is_not_a_cut():
    g = Graph(Q, 2)
    # two overlapping 2-leaf stars covering all four vertices
    cut = CutFamily(g, (Star(1, (0, 3)), Star(2, (0, 3))))
    why = structure_cut_violation(g, cut, 2, "structure")
    assert why == "removal covers every vertex"


def test_structure_mode_rejects_short_members():
    g = Graph(Q, 3)
    cut = CutFamily(g, (Star(3, (1,)), Star(5, (4,))))
    assert "exactly" in structure_cut_violation(g, cut, 2, "structure")
    # the same family is fine as a substructure family but still not a cut
    assert "connected" in structure_cut_violation(g, cut, 2, "substructure")


def test_cut_verification_graph_mismatch():
    with pytest.raises(ValueError):
        structure_cut_violation(Graph(Q, 4), build_qn_cut(3, 2), 2)


# ----------------------------------------------------------------------
# star cover


def test_star_cover_number_examples():
    g = Graph(Q, 3)
    assert star_cover_number(g, {lab("100"), lab("010"), lab("001")}, {0}, 2, "substructure", 5) == 2
    assert star_cover_number(g, set(), {0}, 2, "substructure", 5) == 0
    assert star_cover_number(g, {lab("100")}, {0}, 2, "substructure", 5) == 1


def test_star_cover_structure_padding_and_infeasible():
    g = Graph(Q, 3)
    # covering one neighbor of the origin with a full 3-leaf star works
    assert star_cover_number(g, {1}, {0}, 3, "structure", 3) == 1
    # but nobody adjacent to vertex 1 keeps 3 free leaves once 0, 3, 5 are gone
    with pytest.raises(Infeasible):
        star_cover_number(g, {1}, {0, 3, 5}, 3, "structure", 3)


def test_star_cover_more_than():
    g = Graph(Q, 3)
    got = star_cover_number(g, set(range(1, 8)), {0}, 2, "substructure", 1)
    assert got == MoreThan(1)


def test_star_cover_rejects_overlap():
    with pytest.raises(ValueError):
        star_cover_number(Graph(Q, 3), {1, 2}, {2}, 2, "substructure", 2)


# ----------------------------------------------------------------------
# exact solver


def test_solver_negative_and_positive_on_the_square():
    g = Graph(Q, 2)
    res = min_star_cut(g, 2, "structure")
    assert res.kind == "no_cut"
    res = min_star_cut(g, 2, "substructure")
    assert res.kind == "exact" and res.value == 2
    members = res.witness.members
    assert all(s.leaf_count == 0 for s in members)
    u, v = members[0].center, members[1].center
    assert u ^ v == 3  # antipodal singletons


def test_solver_single_edge_members():
    # one-leaf stars: the settled value is n - 1
    res = min_star_cut(Graph(Q, 3), 1, "structure")
    assert res.kind == "exact" and res.value == 2
    res = min_star_cut(Graph(Q, 3), 1, "substructure")
    assert res.kind == "exact" and res.value == 2


@pytest.mark.parametrize("mode", ["structure", "substructure"])
@pytest.mark.parametrize("r", [2, 3])
def test_solver_matches_independent_oracle_on_q3(r, mode):
    g = Graph(Q, 3)
    res = min_star_cut(g, r, mode)
    assert res.kind == "exact"
    assert res.value == brute_min_star_cut(g, r, mode)
    assert is_structure_cut(g, res.witness, r, mode)


@pytest.mark.parametrize("mode", ["structure", "substructure"])
def test_solver_matches_independent_oracle_on_fq3(mode):
    g = Graph(FQ, 3)
    res = min_star_cut(g, 2, mode)
    assert res.kind == "exact"
    assert res.value == brute_min_star_cut(g, 2, mode) == 2
    assert is_structure_cut(g, res.witness, 2, mode)


def test_solver_no_structure_cut_when_star_is_too_wide():
    # no 5-leaf star embeds in Q_3 at all
    res = min_star_cut(Graph(Q, 3), 5, "structure")
    assert res.kind == "no_cut"
    # while substructure members still exist and cut as usual
    res = min_star_cut(Graph(Q, 3), 5, "substructure")
    assert res.kind == "exact" and res.value == 2


def test_solver_exact_values_carry_verified_witnesses():
    for fam, n, r in [(Q, 4, 2), (Q, 4, 4), (FQ, 4, 2), (FQ, 4, 3)]:
        g = Graph(fam, n)
        res = min_star_cut(g, r, "structure")
        assert res.kind == "exact"
        assert is_structure_cut(g, res.witness, r, "structure")
        kv = known_value(fam, n, r, "structure")
        if kv.is_exact:
            assert res.value == kv.value


def test_substructure_never_exceeds_structure():
    for fam, n, r in [(Q, 3, 2), (Q, 3, 3), (Q, 4, 3), (FQ, 3, 2), (FQ, 4, 2)]:
        g = Graph(fam, n)
        a = min_star_cut(g, r, "substructure")
        b = min_star_cut(g, r, "structure")
        assert a.kind == b.kind == "exact"
        assert a.value <= b.value


def test_solver_budget_exhaustion_is_inconclusive():
    res = min_star_cut(
        Graph(Q, 5), 4, "structure", SearchBudget(max_components=50)
    )
    assert res.kind == "inconclusive"
    assert res.best_upper == 3
    assert res.witness is not None
    assert res.certificate["search"]["components"] <= 50


def test_solver_certificate_schema():
    res = min_star_cut(Graph(Q, 3), 2, "structure")
    cert = res.certificate
    assert cert["claim"] == {"family": "Q", "n": 3, "r": 2, "mode": "structure"}
    assert cert["value"] == {"kind": "exact", "m": 2}
    assert set(cert["search"]) == {"components", "covers", "workers"}
    assert cert["witness"]["stars"]


def test_worker_count_does_not_change_results():
    for fam, n, r, mode in [(Q, 3, 2, "structure"), (Q, 4, 3, "substructure"), (FQ, 3, 3, "structure")]:
        results = [min_star_cut(Graph(fam, n), r, mode, workers=w) for w in (1, 2, 3)]
        baseline = results[0]
        for res in results[1:]:
            assert (res.kind, res.value, res.witness) == (
                baseline.kind,
                baseline.value,
                baseline.witness,
            )
            for key in ("components", "covers"):
                assert res.certificate["search"][key] == baseline.certificate["search"][key]


def test_solver_validates_arguments():
    with pytest.raises(ValueError):
        min_star_cut(Graph(Q, 3), 0)
    with pytest.raises(ValueError):
        min_star_cut(Graph(Q, 3), 2, "weird")


# ----------------------------------------------------------------------
# neighborhood minima


def test_min_neighborhood_examples():
    assert min_neighborhood(Graph(Q, 4), 2)[0] == 6
    assert min_neighborhood(Graph(Q, 4), 1)[0] == 4
    assert min_neighborhood(Graph(Q, 5), 4)[0] == 11
    with pytest.raises(TooLarge):
        min_neighborhood(Graph(Q, 7), 2)
    with pytest.raises(TooLarge):
        min_neighborhood(Graph(Q, 5), 7)


def _is_star_set(g: Graph, vs) -> bool:
    vs = list(vs)
    if len(vs) <= 2:
        return True
    return any(all(g.adjacent(c, v) for v in vs if v != c) for c in vs)


@pytest.mark.parametrize(
    "family,n,gmax", [(Q, 4, 4), (Q, 5, 4), (FQ, 5, 4), (FQ, 6, 4)]
)
def test_min_neighborhood_meets_formula_with_star_witness(family, n, gmax):
    g = Graph(family, n)
    for extra in range(1, gmax + 1):
        value, witness = min_neighborhood(g, extra + 1)
        assert value == neighborhood_bound_formula(family, n, extra)
        assert _is_star_set(g, witness)


# ----------------------------------------------------------------------
# extra connectivity


def test_brute_kappa_g_matches_formula_on_q4():
    g = Graph(Q, 4)
    for extra in range(0, 5):
        assert brute_kappa_g(g, extra) == kappa_g_formula(Q, 4, extra)


def test_brute_kappa_g_fq4_and_consistency():
    assert brute_kappa_g(Graph(FQ, 4), 0) == 5
    assert brute_kappa_g(Graph(Q, 3), 0) == 3
    assert brute_kappa_g(Graph(Q, 3), 1) == 4


def test_brute_kappa_g_dimension_five_path():
    assert brute_kappa_g(Graph(Q, 5), 0) == kappa_g_formula(Q, 5, 0) == 5
    assert brute_kappa_g(Graph(Q, 5), 1) == kappa_g_formula(Q, 5, 1) == 8


def test_brute_kappa_g_guards():
    with pytest.raises(TooLarge):
        brute_kappa_g(Graph(Q, 6), 0)
    with pytest.raises(ValueError):
        brute_kappa_g(Graph(Q, 3), -1)
    with pytest.raises(ValueError):
        brute_kappa_g(Graph(Q, 2), 1)  # 2+2 survivors are impossible on C_4


# ----------------------------------------------------------------------
# lemma-style checkers


def test_common_neighbors_pass_cases():
    for fam, n in [(Q, 3), (Q, 4), (Q, 5), (FQ, 4), (FQ, 5)]:
        rep = check_common_neighbors(Graph(fam, n))
        assert rep.passed, (fam, n)
    rep = check_common_neighbors(Graph(Q, 4))
    assert rep.instances_checked == 120  # all vertex pairs


def test_common_neighbors_fq3_exception():
    rep = check_common_neighbors(Graph(FQ, 3))
    assert not rep.passed
    got = {(u, v) for u, v, _ in rep.violations}
    assert got == set(fq3_exception_pairs())
    assert len(got) == 12
    ref = next(v for v in rep.violations if {v[0], v[1]} == {lab("011"), lab("110")})
    assert set(ref[2]) == {lab("010"), lab("001"), lab("100"), lab("111")}
    # every violation is a distance-2 pair with the full 4-vertex overlap
    for u, v, common in rep.violations:
        assert (u ^ v).bit_count() == 2
        assert len(common) == 4


def test_star_bounds_examples():
    rep = check_star_bounds(Graph(Q, 4), 3, 1)
    assert rep.passed
    assert all(kind == "two-leaf-contact" for kind, *_ in rep.extremal_witnesses)
    rep = check_star_bounds(Graph(Q, 5), 4, 4)
    assert rep.passed
    assert any(kind == "star-equality" for kind, *_ in rep.extremal_witnesses)
    rep = check_star_bounds(Graph(FQ, 5), 4, 3)
    assert rep.passed


def test_star_bounds_guards():
    with pytest.raises(TooLarge):
        check_star_bounds(Graph(Q, 6), 3, 2)
    with pytest.raises(ValueError):
        check_star_bounds(Graph(Q, 4), 1, 2)
    with pytest.raises(ValueError):
        check_star_bounds(Graph(Q, 4), 5, 2)
