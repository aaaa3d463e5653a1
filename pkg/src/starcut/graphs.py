"""Bit-level models of hypercubes and folded hypercubes.

Vertices are integer labels in [0, 2^n); coordinate position i (1-based,
printed leftmost-first) lives in bit i-1 of the label.  Adjacency is never
stored: two labels are adjacent in Q_n iff they differ in exactly one bit,
and in FQ_n additionally iff they differ in all n bits (complement pairs).

Connected-component sweeps run on whole vertex sets encoded as single big
integers, expanding BFS frontiers one dimension at a time with shift masks,
which keeps the n = 16 regime at millisecond cost.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Q = "Q"
FQ = "FQ"

MIN_DIM = 2
MAX_DIM = 24  # 2^24 vertices is the enumeration ceiling


class InvalidVertex(ValueError):
    pass


class PositionOutOfRange(ValueError):
    pass


class SizeOutOfRange(ValueError):
    pass


class TooLarge(ValueError):
    pass


# bit positions set in each byte value, for fast mask -> labels conversion
_BYTE_BITS = tuple(tuple(b for b in range(8) if i >> b & 1) for i in range(256))


def labels_from_mask(mask: int) -> list[int]:
    """Decode a vertex-set bitmask into an ascending list of labels."""
    nbytes = (mask.bit_length() + 7) // 8
    out: list[int] = []
    for i, byte in enumerate(mask.to_bytes(nbytes, "little")):
        if byte:
            base = 8 * i
            out.extend(base + b for b in _BYTE_BITS[byte])
    return out


def mask_from_labels(labels: Iterable[int]) -> int:
    mask = 0
    for v in labels:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reflect(mask: int, size: int) -> int:
    # the complement map v -> v XOR (2^n - 1) reverses the 2^n bit positions
    return int(f"{mask:0{size}b}"[::-1], 2) if mask else 0


@lru_cache(maxsize=None)
def _dim_masks(n: int) -> tuple[int, ...]:
    """Per-dimension masks of the label positions whose bit i is set."""
    size = 1 << n
    full = (1 << size) - 1
    masks = []
    for i in range(n):
        half = 1 << i
        block = ((1 << half) - 1) << half
        rep = full // ((1 << (2 * half)) - 1)
        masks.append(block * rep)
    return tuple(masks)


@lru_cache(maxsize=None)
def _adjacency_table(family: str, n: int) -> tuple[int, ...]:
    """Neighbor bitmask per vertex; only built for small dimensions."""
    size = 1 << n
    full_label = size - 1
    table = []
    for v in range(size):
        m = 0
        for i in range(n):
            m |= 1 << (v ^ (1 << i))
        if family == FQ:
            m |= 1 << (v ^ full_label)
        table.append(m)
    return tuple(table)


def vertex_bits(v: int, n: int) -> str:
    """Render a label as its coordinate string, position 1 leftmost."""
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def parse_vertex(bits: str) -> int:
    if not bits or any(ch not in "01" for ch in bits):
        raise InvalidVertex(f"not a coordinate string: {bits!r}")
    return sum(1 << i for i, ch in enumerate(bits) if ch == "1")


def flip(v: int, positions: Iterable[int], n: int) -> int:
    """Flip the given 1-based coordinate positions of ``v``.

    flip(v, range(1, n + 1), n) is the complement vertex; flipping the same
    set twice is the identity.
    """
    if not MIN_DIM <= n <= MAX_DIM:
        raise ValueError(f"dimension {n} outside [{MIN_DIM}, {MAX_DIM}]")
    if not 0 <= v < (1 << n):
        raise InvalidVertex(f"label {v} outside [0, 2^{n})")
    mask = 0
    for p in positions:
        if not 1 <= p <= n:
            raise PositionOutOfRange(f"position {p} outside 1..{n}")
        mask |= 1 << (p - 1)
    return v ^ mask


@dataclass(frozen=True)
class Graph:
    """A (family, dimension) pair with implicit adjacency.

    Immutable; safe for concurrent reads.  Enumeration generators are
    single-consumer: give each parallel caller its own stream.
    """

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in (Q, FQ):
            raise ValueError(f"unknown family {self.family!r}")
        if not MIN_DIM <= self.n <= MAX_DIM:
            raise ValueError(f"dimension {self.n} outside [{MIN_DIM}, {MAX_DIM}]")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def degree(self) -> int:
        return self.n + 1 if self.family == FQ else self.n

    @property
    def complement_label(self) -> int:
        return self.size - 1

    def to_json_dict(self) -> dict:
        return {"family": self.family, "n": self.n}

    @staticmethod
    def from_json_dict(d: dict) -> "Graph":
        return Graph(str(d["family"]), int(d["n"]))

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.size:
            raise InvalidVertex(f"label {v} outside [0, 2^{self.n})")

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        x = u ^ v
        if x.bit_count() == 1:
            return True
        return self.family == FQ and x == self.complement_label

    def neighbors(self, v: int) -> frozenset[int]:
        """Exactly the adjacent labels; n of them for Q, n+1 for FQ."""
        self.check_vertex(v)
        out = {v ^ (1 << i) for i in range(self.n)}
        if self.family == FQ:
            out.add(v ^ self.complement_label)
        return frozenset(out)

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """N(A): vertices outside A adjacent to some member of A."""
        vs = set(vertices)
        out: set[int] = set()
        for v in vs:
            out |= self.neighbors(v)
        return frozenset(out - vs)

    def vertex_adjacency_mask(self, v: int) -> int:
        if self.n <= 13:
            return _adjacency_table(self.family, self.n)[v]
        m = 0
        for i in range(self.n):
            m |= 1 << (v ^ (1 << i))
        if self.family == FQ:
            m |= 1 << (v ^ self.complement_label)
        return m

    def frontier_neighbors_mask(self, mask: int) -> int:
        """All vertices adjacent to some vertex of ``mask`` (mask may recur)."""
        out = 0
        for i, m in enumerate(_dim_masks(self.n)):
            half = 1 << i
            out |= (mask & m) >> half | ((mask & ~m) << half)
        if self.family == FQ:
            out |= _reflect(mask, self.size)
        return out

    # ------------------------------------------------------------------
    # components

    def components_after_removal(self, removed: Iterable[int]) -> list[frozenset[int]]:
        """Connected components of the graph minus ``removed``.

        Sorted by size, then by minimum label.  Empty list when the removal
        covers every vertex.
        """
        removed_mask = 0
        for v in removed:
            self.check_vertex(v)
            removed_mask |= 1 << v
        comps = self.component_masks(removed_mask)
        return [frozenset(labels_from_mask(c)) for c in comps]

    def component_masks(self, removed_mask: int) -> list[int]:
        alive = self.full_mask & ~removed_mask
        comps: list[int] = []
        while alive:
            seed = alive & -alive
            comp = seed
            frontier = seed
            while frontier:
                nxt = self.frontier_neighbors_mask(frontier) & alive & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            alive &= ~comp
        comps.sort(key=lambda c: (c.bit_count(), (c & -c).bit_length()))
        return comps

    # ------------------------------------------------------------------
    # connected subgraph enumeration

    def enumerate_connected_subgraphs(
        self, size: int, anchor: int | None = None
    ) -> Iterator[frozenset[int]]:
        """Every connected vertex set of the given size, each exactly once.

        With an anchor, only sets containing it.  Sets grow by adding the
        smallest eligible neighbor; once a branch has declined a candidate,
        the candidate stays forbidden below it, so no set is emitted twice.
        """
        if not 1 <= size <= self.size:
            raise SizeOutOfRange(f"size {size} outside 1..{self.size}")
        if anchor is not None:
            self.check_vertex(anchor)
            yield from self._grow(
                1 << anchor, 1, self.vertex_adjacency_mask(anchor), 0, size
            )
            return
        for root in range(self.size):
            yield from self._grow(
                1 << root,
                1,
                self.vertex_adjacency_mask(root),
                (1 << root) - 1,
                size,
            )

    def _grow(
        self, s_mask: int, count: int, nbr: int, forbidden: int, size: int
    ) -> Iterator[frozenset[int]]:
        if count == size:
            yield frozenset(labels_from_mask(s_mask))
            return
        cand = nbr & ~s_mask & ~forbidden
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from self._grow(
                s_mask | low,
                count + 1,
                nbr | self.vertex_adjacency_mask(v),
                forbidden,
                size,
            )
            forbidden |= low

    # ------------------------------------------------------------------
    # odd girth

    def odd_girth(self) -> int | None:
        """Length of a shortest odd cycle, or None for bipartite graphs.

        BFS layering from vertex 0 suffices: translations v -> v XOR w are
        automorphisms, so the shortest odd cycle can be rooted anywhere.
        """
        masks = _dim_masks(self.n)
        visited = level = 1
        depth = 0
        while True:
            nxt = self.frontier_neighbors_mask(level) & ~visited
            if not nxt:
                return None
            depth += 1
            for i, m in enumerate(masks):
                half = 1 << i
                if (nxt & m) >> half & nxt:
                    return 2 * depth + 1
            if self.family == FQ and nxt & _reflect(nxt, self.size):
                return 2 * depth + 1
            visited |= nxt
            level = nxt


def hypercube(n: int) -> Graph:
    return Graph(Q, n)


def folded_hypercube(n: int) -> Graph:
    return Graph(FQ, n)


def min_vertex_cut(g: Graph) -> int:
    """Classical vertex connectivity, exact for dimension <= 6.

    Uses the identity: the connectivity equals the minimum of |N(C)| over
    connected C containing vertex 0 with at least one vertex outside
    C union N(C).  Anchoring at 0 is sound because XOR translations are
    automorphisms and some minimum cut has C as its smallest side, which
    also caps |C| at (2^n - best)/2.
    """
    if g.n > 6:
        raise TooLarge(f"exhaustive connectivity capped at n=6, got n={g.n}")
    size = g.size
    adj = [g.vertex_adjacency_mask(v) for v in range(size)]
    best = size - 1  # complete-graph fallback (FQ_2 is K_4)

    def walk(s_mask: int, x_mask: int, nbr: int) -> None:
        nonlocal best
        boundary = nbr & ~s_mask
        k = s_mask.bit_count()
        if size - k - boundary.bit_count() >= 1:
            best = min(best, boundary.bit_count())
        cand = boundary & ~x_mask
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            child_frozen = (x_mask & (nbr | adj[v])).bit_count()
            if child_frozen < best and k + 1 <= (size - child_frozen) // 2:
                walk(s_mask | low, x_mask, nbr | adj[v])
            x_mask |= low
            if (x_mask & nbr).bit_count() >= best:
                return

    walk(1, 0, adj[0])
    return best
