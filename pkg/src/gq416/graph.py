"""Collinearity graph of a GQ and the local counting machinery around it.

Adjacency is stored as one Python int bitmask per vertex, so set
intersections are single bitwise ANDs and cardinalities are popcounts.
All exhaustive scans (strong regularity, triads, 3-regularity) run on
these masks.
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from gq416.geometry import GQStructure


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list:
    return list(bits(mask))


class PointGraph:
    """Simple undirected graph on 0..n-1 with bitmask adjacency rows."""

    def __init__(self, n: int, adjacency: list):
        if len(adjacency) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adjacency):
            if row & (1 << v):
                raise ValueError(f"vertex {v} is adjacent to itself")
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
        for v in range(n):
            for u in bits(adjacency[v]):
                if not adjacency[u] & (1 << v):
                    raise ValueError(f"asymmetric edge {v},{u}")
        self.n = n
        self.adj = list(adjacency)
        self.full_mask = full

    @classmethod
    def from_gq(cls, S: GQStructure) -> "PointGraph":
        return cls(len(S.points), S.adjacency_bitsets())

    def are_adjacent(self, p: int, q: int) -> bool:
        return bool(self.adj[p] & (1 << q))

    def degree(self, p: int) -> int:
        return self.adj[p].bit_count()

    def non_neighbours(self, p: int) -> int:
        """Bitmask of vertices distinct from and non-adjacent to p."""
        return self.full_mask & ~self.adj[p] & ~(1 << p)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def without_edge(self, p: int, q: int) -> "PointGraph":
        """Copy with one edge deleted (mutation testing helper)."""
        if not self.are_adjacent(p, q):
            raise ValueError(f"{p},{q} is not an edge")
        adj = list(self.adj)
        adj[p] &= ~(1 << q)
        adj[q] &= ~(1 << p)
        return PointGraph(self.n, adj)

    def non_edges(self) -> Iterator[tuple]:
        """All unordered non-adjacent distinct pairs, in canonical order."""
        for p in range(self.n):
            for q in bits(self.non_neighbours(p) >> (p + 1) << (p + 1)):
                yield (p, q)


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int


@dataclass
class SrgResult:
    params: Optional[SrgParams]
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.params is not None


def verify_srg(G: PointGraph) -> SrgResult:
    """Check strong regularity over every vertex pair.

    Returns the parameter tuple on success, otherwise the first offending
    vertex or pair as a witness.
    """
    n = G.n
    if n == 0:
        return SrgResult(None, witness=("null-graph",))
    k = G.degree(0)
    for v in range(n):
        if G.degree(v) != k:
            return SrgResult(None, witness=("degree", v, G.degree(v)))
    if k == 0 or k == n - 1:
        return SrgResult(None, witness=("complete-or-null",))
    lam = mu = None
    for p in range(n):
        ap = G.adj[p]
        for q in range(p + 1, n):
            common = (ap & G.adj[q]).bit_count()
            if ap & (1 << q):
                if lam is None:
                    lam = common
                elif common != lam:
                    return SrgResult(None, witness=("lambda", p, q, common))
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return SrgResult(None, witness=("mu", p, q, common))
    return SrgResult(SrgParams(n, k, lam, mu))


@dataclass
class LocalPartition:
    """The split of V \\ {p,q} induced by a non-edge {p,q}.

    a_mask = common neighbours, b_mask = common non-neighbours,
    c_mask/d_mask = exclusive neighbours of p resp. q.
    """

    p: int
    q: int
    a_mask: int
    b_mask: int
    c_mask: int
    d_mask: int

    @property
    def sizes(self) -> tuple:
        return (
            self.a_mask.bit_count(),
            self.b_mask.bit_count(),
            self.c_mask.bit_count(),
            self.d_mask.bit_count(),
        )


def local_partition(G: PointGraph, p: int, q: int) -> LocalPartition:
    if p == q:
        raise ValueError("p and q must be distinct")
    if G.are_adjacent(p, q):
        raise ValueError(f"{p},{q} is an edge; a non-edge is required")
    ap, aq = G.adj[p], G.adj[q]
    rest = G.full_mask & ~(1 << p) & ~(1 << q)
    return LocalPartition(
        p=p,
        q=q,
        a_mask=ap & aq,
        b_mask=rest & ~ap & ~aq,
        c_mask=ap & ~aq,
        d_mask=aq & ~ap,
    )


@dataclass
class RefinedPartition:
    """Refinement of a LocalPartition by a vertex r of B."""

    base: LocalPartition
    r: int
    a1_mask: int  # neighbours of r in A
    a2_mask: int  # non-neighbours of r in A
    b1_mask: int
    b2_mask: int
    c1_mask: int
    c2_mask: int
    d1_mask: int
    d2_mask: int


def refine_partition(G: PointGraph, part: LocalPartition, r: int) -> RefinedPartition:
    if not part.b_mask & (1 << r):
        raise ValueError(f"vertex {r} is not in B")
    ar = G.adj[r]
    b_rest = part.b_mask & ~(1 << r)
    return RefinedPartition(
        base=part,
        r=r,
        a1_mask=part.a_mask & ar,
        a2_mask=part.a_mask & ~ar,
        b1_mask=part.b_mask & ar,
        b2_mask=b_rest & ~ar,
        c1_mask=part.c_mask & ar,
        c2_mask=part.c_mask & ~ar,
        d1_mask=part.d_mask & ar,
        d2_mask=part.d_mask & ~ar,
    )


def n_classes(G: PointGraph, part: LocalPartition, a1_mask: int) -> list:
    """Masks N_0..N_5: vertices of B by their adjacency count into A'.

    B includes r itself, which lands in N_5.
    """
    classes = [0] * 6
    for y in bits(part.b_mask):
        i = (G.adj[y] & a1_mask).bit_count()
        classes[i] |= 1 << y
    return classes


def adjacency_profile(G: PointGraph, refined: RefinedPartition) -> tuple:
    """(n_0, .., n_5) for the refinement's A'."""
    classes = n_classes(G, refined.base, refined.a1_mask)
    return tuple(m.bit_count() for m in classes)


def triad_trace(G: PointGraph, p: int, q: int, r: int) -> int:
    """Common-neighbour mask of a 3-coclique; rejects non-triads."""
    trio = (p, q, r)
    if len(set(trio)) != 3:
        raise ValueError("triad vertices must be distinct")
    for i in range(3):
        for j in range(i + 1, 3):
            if G.are_adjacent(trio[i], trio[j]):
                raise ValueError(f"not a triad: {trio[i]},{trio[j]} are adjacent")
    return G.adj[p] & G.adj[q] & G.adj[r]


def perp_of(G: PointGraph, trace_mask: int) -> int:
    """Vertices adjacent to every vertex of the trace."""
    u = G.full_mask
    for t in bits(trace_mask):
        u &= G.adj[t]
    return u


def check_3_regularity(G: PointGraph, p: int, q: int, r: int, s: int = 4) -> bool:
    """True iff the triad's trace has the full s+1 common perp points.

    The perp can never exceed s+1; that bound is asserted, not reported.
    """
    trace = triad_trace(G, p, q, r)
    u = perp_of(G, trace)
    size = u.bit_count()
    if size > s + 1:
        raise AssertionError(f"perp of triad ({p},{q},{r}) has size {size} > {s + 1}")
    return size == s + 1


def iter_triads(G: PointGraph) -> Iterator[tuple]:
    """All 3-cocliques p < q < r, in canonical order."""
    for p, q in G.non_edges():
        above = G.non_neighbours(p) & G.non_neighbours(q) >> (q + 1) << (q + 1)
        for r in bits(above):
            yield (p, q, r)


def pair_law_check(G: PointGraph, part: LocalPartition, x: int, y: int) -> dict:
    """Common-neighbour split of a non-adjacent pair in B.

    Returns k = |common in A| plus the B/C/D counts; the invariant under
    test is B-count = 7 + k and C-count = D-count = 5 - k.
    """
    for v in (x, y):
        if not part.b_mask & (1 << v):
            raise ValueError(f"vertex {v} is not in B")
    if x == y:
        raise ValueError("x and y must be distinct")
    if G.are_adjacent(x, y):
        raise ValueError(f"{x},{y} are adjacent; the pair law needs a non-edge")
    common = G.adj[x] & G.adj[y]
    k = (common & part.a_mask).bit_count()
    return {
        "k": k,
        "in_b": (common & part.b_mask).bit_count(),
        "in_c": (common & part.c_mask).bit_count(),
        "in_d": (common & part.d_mask).bit_count(),
    }


def refined_counts_check(G: PointGraph, refined: RefinedPartition) -> dict:
    """Counts behind the B'-splitting lemma and the 10-count for A''.

    Reports |B' in N_0|, |B' in N_1|, whether B' meets any N_i with
    i >= 2, and the per-a counts |G(a) & B' & N_0| over a in A''.
    """
    classes = n_classes(G, refined.base, refined.a1_mask)
    b1 = refined.b1_mask
    higher = 0
    for i in range(2, 6):
        higher |= classes[i]
    per_a = {}
    target = b1 & classes[0]
    for a in bits(refined.a2_mask):
        per_a[a] = (G.adj[a] & target).bit_count()
    return {
        "b1_n0": (b1 & classes[0]).bit_count(),
        "b1_n1": (b1 & classes[1]).bit_count(),
        "b1_higher": (b1 & higher).bit_count(),
        "per_a_b1_n0": per_a,
    }


def derived_profile(G: PointGraph, refined: RefinedPartition, a: int) -> tuple:
    """(m_0, .., m_4) for a vertex a of A'': sizes of G(a) & N_i."""
    if not refined.a2_mask & (1 << a):
        raise ValueError(f"vertex {a} is not in A''")
    classes = n_classes(G, refined.base, refined.a1_mask)
    ga = G.adj[a]
    return tuple((ga & classes[i]).bit_count() for i in range(5))
