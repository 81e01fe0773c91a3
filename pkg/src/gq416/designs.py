"""Block designs with repeated blocks, and the lambda-vector machinery.

The design of interest has point set A (a 17-coclique) and one block
G(r) & A for every vertex r of B, counted with multiplicity. Uniformity
of the lambda values is checked by exhaustive subset enumeration; at
these sizes (C(17,3) = 680 triples) that is the honest check.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from gq416.graph import LocalPartition, PointGraph, bit_list, bits


class DesignFormatError(ValueError):
    """Malformed design file."""


@dataclass(frozen=True)
class Design:
    """v points 0..v-1 and a canonically sorted block multiset."""

    v: int
    blocks: tuple  # tuple of (block_tuple, multiplicity), sorted by block

    @staticmethod
    def from_blocks(v: int, block_iter) -> "Design":
        counter = Counter()
        for block in block_iter:
            b = tuple(sorted(block))
            if any(p < 0 or p >= v for p in b):
                raise ValueError(f"block {b} has a point outside 0..{v - 1}")
            if len(set(b)) != len(b):
                raise ValueError(f"block {b} has a repeated point")
            counter[b] += 1
        return Design(v=v, blocks=tuple(sorted(counter.items())))

    @property
    def block_count(self) -> int:
        """Number of blocks counted with multiplicity."""
        return sum(m for _, m in self.blocks)

    @property
    def block_size(self) -> Optional[int]:
        sizes = {len(b) for b, _ in self.blocks}
        if len(sizes) != 1:
            return None
        return sizes.pop()

    def support(self) -> "Design":
        """The simple design with every multiplicity collapsed to 1."""
        return Design(v=self.v, blocks=tuple((b, 1) for b, _ in self.blocks))


def design_from_partition(G: PointGraph, part: LocalPartition) -> Design:
    """Blocks G(r) & A for r in B, relabelled to 0..|A|-1."""
    a_points = bit_list(part.a_mask)
    local = {p: i for i, p in enumerate(a_points)}
    blocks = []
    for r in bits(part.b_mask):
        blocks.append(tuple(local[p] for p in bits(G.adj[r] & part.a_mask)))
    return Design.from_blocks(len(a_points), blocks)


def lambda_vector(D: Design, t: int):
    """(lambda_0, .., lambda_t), or a witness of the first non-uniform level.

    Returns (vector, None) on success and (None, (i, subset_a, count_a,
    subset_b, count_b)) when some level i is not constant.
    """
    k = D.block_size
    if D.blocks and (k is None or t > k):
        raise ValueError("t exceeds the block size or block sizes are mixed")
    vector = []
    for i in range(t + 1):
        counts = Counter()
        for block, mult in D.blocks:
            for sub in combinations(block, i):
                counts[sub] += mult
        first = None
        first_sub = None
        for sub in combinations(range(D.v), i):
            c = counts.get(sub, 0)
            if first is None:
                first, first_sub = c, sub
            elif c != first:
                return None, (i, first_sub, first, sub, c)
        vector.append(first if first is not None else 0)
    return tuple(vector), None


def multiplicity_spectrum(D: Design) -> dict:
    """Histogram: multiplicity -> number of distinct blocks carrying it."""
    hist = Counter(m for _, m in D.blocks)
    return dict(sorted(hist.items()))


def derived_design(D: Design, x: int) -> Design:
    """Blocks through x with x removed; multiplicities preserved.

    The surviving points are relabelled onto 0..v-2 (labels above x slide
    down by one).
    """
    if not 0 <= x < D.v:
        raise ValueError(f"{x} is not a point of the design")
    blocks = []
    for block, mult in D.blocks:
        if x in block:
            trimmed = tuple(p if p < x else p - 1 for p in block if p != x)
            blocks.extend([trimmed] * mult)
    return Design.from_blocks(D.v - 1, blocks)


def verify_t_design(D: Design, t: int, v: int, k: int, lam: int):
    """(True, None) iff D is a t-(v,k,lam) design, else a witness."""
    if D.v != v:
        return False, ("points", D.v)
    if D.block_size != k:
        return False, ("block-size", D.block_size)
    vector, witness = lambda_vector(D, t)
    if vector is None:
        return False, ("non-uniform", witness)
    if vector[t] != lam:
        return False, ("lambda", vector[t])
    return True, None


# --- serialization -----------------------------------------------------------

def serialize_design(D: Design) -> str:
    k = D.block_size if D.blocks else 0
    out = [f"DESIGN v={D.v} k={k} b={D.block_count}"]
    for block, mult in D.blocks:
        out.append(str(mult) + " " + " ".join(str(p) for p in block))
    return "\n".join(out) + "\n"


def parse_design(text: str) -> Design:
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows = rows[:-1]
    if not rows:
        raise DesignFormatError("empty file")
    head = rows[0].split(" ")
    if len(head) != 4 or head[0] != "DESIGN":
        raise DesignFormatError("expected header 'DESIGN v=.. k=.. b=..'")
    try:
        v = int(head[1].removeprefix("v="))
        k = int(head[2].removeprefix("k="))
        b = int(head[3].removeprefix("b="))
    except ValueError:
        raise DesignFormatError("non-integer header field") from None
    blocks = []
    for lineno, row in enumerate(rows[1:], start=2):
        tok = row.split(" ")
        if len(tok) != k + 1:
            raise DesignFormatError(f"line {lineno}: expected multiplicity plus {k} points")
        try:
            mult = int(tok[0])
            block = tuple(int(p) for p in tok[1:])
        except ValueError:
            raise DesignFormatError(f"line {lineno}: non-integer field") from None
        if mult < 1:
            raise DesignFormatError(f"line {lineno}: multiplicity must be positive")
        blocks.extend([block] * mult)
    D = Design.from_blocks(v, blocks)
    if D.block_count != b:
        raise DesignFormatError(f"header claims b={b}, file has {D.block_count}")
    return D
