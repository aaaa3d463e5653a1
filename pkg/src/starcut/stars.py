"""Star embeddings, cut-family constructions, and intersection analysis.

A cut family is an ordered list of claimed star subgraphs whose vertex
union is a candidate separator.  The builders below produce, for each
admissible (n, r), a family of ceil(n/2) stars in Q_n (ceil((n+1)/2) in
FQ_n) that isolates the all-zeros vertex.  Members may overlap; the
removal set is the union of their vertex sets.

All values are immutable after construction and the builders are pure
functions of (n, r), so everything here is safe to share across threads.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from .graphs import FQ, Q, Graph, flip, parse_vertex, vertex_bits


class Unsupported(ValueError):
    def __init__(self, n: int, r: int, why: str = ""):
        self.n, self.r = n, r
        super().__init__(f"no construction for (n={n}, r={r})" + (f": {why}" if why else ""))


class NoCutKnown(Unsupported):
    """The 4-cycle has no structure cut by two-leaf stars."""


@dataclass(frozen=True)
class Star:
    """A center plus an ordered leaf tuple, claimed to be a star subgraph.

    Zero leaves is a single vertex; one leaf is an edge.
    """

    center: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.center,) + self.leaves)

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True)
class CutFamily:
    graph: Graph
    members: tuple[Star, ...]

    @property
    def vertex_union(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.members:
            out |= s.vertices
        return frozenset(out)


@dataclass(frozen=True)
class IntersectionReport:
    """Nonempty pairwise vertex intersections, 1-based member indices i < j."""

    pairs: tuple[tuple[int, int, frozenset[int]], ...]

    @property
    def disjoint(self) -> bool:
        return not self.pairs


def validate_star(g: Graph, star: Star) -> str | None:
    """None when the embedding is a valid star in g, else the first defect."""
    try:
        g.check_vertex(star.center)
    except ValueError:
        return f"center {star.center} is not a vertex"
    seen = {star.center}
    for leaf in star.leaves:
        try:
            g.check_vertex(leaf)
        except ValueError:
            return f"leaf {leaf} is not a vertex"
        if leaf in seen:
            return f"duplicate vertex {vertex_bits(leaf, g.n)}"
        if not g.adjacent(star.center, leaf):
            return (
                f"leaf {vertex_bits(leaf, g.n)} not adjacent to "
                f"center {vertex_bits(star.center, g.n)}"
            )
        seen.add(leaf)
    return None


def _wrap(x: int, n: int) -> int:
    # 1-based index arithmetic: results land in 1..n, never 0
    return (x - 1) % n + 1


def _paired_star(n: int, i: int, r: int, extra_leaf: int | None = None) -> Star:
    """Star around the coordinate pair (2i-1, 2i) of the all-zeros vertex.

    Center is the double flip; leaves are the two single flips followed by
    triple flips at wrapped offsets.  ``extra_leaf`` appends one more leaf
    (the folded complement of the center) for the r = n+1 families.
    """
    a, b = 2 * i - 1, 2 * i
    center = flip(0, (a, b), n)
    leaves = [flip(0, (a,), n), flip(0, (b,), n)]
    want = r - 2 if extra_leaf is None else r - 3
    for j in range(1, want + 1):
        w = _wrap(2 * i + j, n)
        if w in (a, b):  # r <= n rules this out; fail loudly, never silently
            raise AssertionError(f"wrapped offset collision at (n={n}, i={i}, j={j})")
        leaves.append(flip(0, (a, b, w), n))
    if extra_leaf is not None:
        leaves.append(extra_leaf)
    return Star(center, tuple(leaves))


def build_qn_cut(n: int, r: int) -> CutFamily:
    """The explicit K_{1,r} cut of Q_n isolating the all-zeros vertex.

    ceil(n/2) stars built around consecutive coordinate pairs; for odd n a
    final star wraps dimension n back through dimension 1.  When n = r the
    final star reuses the first flip, so exactly one overlapping pair
    appears; all other families are pairwise disjoint.
    """
    if (n, r) == (2, 2):
        raise NoCutKnown(n, r, "no structure cut exists")
    if n < 3 or not 2 <= r <= n:
        raise Unsupported(n, r)
    g = Graph(Q, n)
    stars = [_paired_star(n, i, r) for i in range(1, n // 2 + 1)]
    if n % 2:
        center = flip(0, (n, 1), n)
        if n > r:
            leaves = [flip(0, (n,), n)]
            leaves += [flip(0, (n, 1, j), n) for j in range(2, r + 1)]
        else:  # n == r
            leaves = [flip(0, (n,), n), flip(0, (1,), n)]
            leaves += [flip(0, (n, 1, j), n) for j in range(2, r)]
        stars.append(Star(center, tuple(leaves)))
    family = CutFamily(g, tuple(stars))
    _self_check(family, r)
    return family


def build_fqn_cut(n: int, r: int) -> CutFamily:
    """The explicit K_{1,r} cut of FQ_n isolating the all-zeros vertex.

    ceil((n+1)/2) stars: the Q_n pair stars (augmented with the center's
    complement as one extra leaf when r = n+1) plus a final star absorbing
    the complement edge at the all-ones side.
    """
    if n < 3 or not 2 <= r <= n + 1:
        raise Unsupported(n, r)
    g = Graph(FQ, n)
    cbar = g.complement_label  # the complement of the all-zeros vertex
    stars = []
    for i in range(1, n // 2 + 1):
        if r <= n:
            stars.append(_paired_star(n, i, r))
        else:
            center = flip(0, (2 * i - 1, 2 * i), n)
            stars.append(_paired_star(n, i, r, extra_leaf=center ^ cbar))
    if n % 2:
        # center is the complement of the single flip at dimension n
        center = cbar ^ (1 << (n - 1))
        leaves = [flip(0, (n,), n), cbar]
        leaves += [center ^ (1 << (j - 1)) for j in range(1, r - 1)]
        stars.append(Star(center, tuple(leaves)))
    elif r <= n:
        leaves = [cbar ^ (1 << (j - 1)) for j in range(1, r + 1)]
        stars.append(Star(cbar, tuple(leaves)))
    else:
        center = cbar ^ 1
        leaves = [cbar, 1]
        leaves += [center ^ (1 << (j - 1)) for j in range(2, n + 1)]
        stars.append(Star(center, tuple(leaves)))
    family = CutFamily(g, tuple(stars))
    _self_check(family, r)
    return family


def _self_check(family: CutFamily, r: int) -> None:
    for idx, star in enumerate(family.members, start=1):
        bad = validate_star(family.graph, star)
        if bad is not None:
            raise AssertionError(f"constructed member {idx} invalid: {bad}")
        if star.leaf_count != r:
            raise AssertionError(
                f"constructed member {idx} has {star.leaf_count} leaves, wanted {r}"
            )


def family_intersections(family: CutFamily) -> IntersectionReport:
    """All nonempty pairwise vertex intersections, sorted by (i, j), 1-based."""
    verts = [s.vertices for s in family.members]
    pairs = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            shared = verts[i] & verts[j]
            if shared:
                pairs.append((i + 1, j + 1, frozenset(shared)))
    return IntersectionReport(tuple(pairs))


# ----------------------------------------------------------------------
# witness files


def witness_dict(family: CutFamily, r: int) -> dict:
    n = family.graph.n
    return {
        "family": family.graph.family,
        "n": n,
        "r": r,
        "stars": [
            {
                "center": vertex_bits(s.center, n),
                "leaves": [vertex_bits(leaf, n) for leaf in s.leaves],
            }
            for s in family.members
        ],
    }


def witness_bytes(family: CutFamily, r: int) -> bytes:
    """Canonical serialization; writers and round-trip checks share it."""
    return (json.dumps(witness_dict(family, r), indent=2) + "\n").encode()


def write_witness(path: str | Path, family: CutFamily, r: int) -> None:
    Path(path).write_bytes(witness_bytes(family, r))


def family_from_witness_dict(d: dict) -> tuple[CutFamily, int]:
    g = Graph(str(d["family"]), int(d["n"]))
    stars = tuple(
        Star(parse_vertex(s["center"]), tuple(parse_vertex(x) for x in s["leaves"]))
        for s in d["stars"]
    )
    return CutFamily(g, stars), int(d["r"])


def read_witness(path: str | Path) -> tuple[CutFamily, int]:
    with open(path, "rb") as fh:
        return family_from_witness_dict(json.loads(fh.read().decode()))
