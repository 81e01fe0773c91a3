"""PG(5,4), the elliptic quadric, and the incidence structure Q(5,4).

Points of the ambient projective space are 6-tuples of GF(4) codes,
normalized so the first nonzero coordinate is 1. The quadrangle is built
by taking the 325 singular points of a fixed elliptic quadratic form and
joining every polar pair of them into a totally singular 5-point line.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from gq416.gf4 import ELEMENTS, OMEGA, OMEGA_SQ, ONE, ZERO, ff_add, ff_inv, ff_mul

Coords = tuple  # 6-tuple of GF(4) codes

DIMENSION = 6
PG54_SIZE = 1365  # (4^6 - 1) / 3


class ConstructionError(RuntimeError):
    """The chosen quadratic form does not produce a Q(5,4)."""


class GeometryFormatError(ValueError):
    """Malformed geometry file; carries the offending 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def normalize_point(coords) -> Coords:
    """Scale a nonzero 6-tuple so its first nonzero coordinate is 1."""
    coords = tuple(coords)
    if len(coords) != DIMENSION:
        raise ValueError(f"expected {DIMENSION} coordinates, got {len(coords)}")
    for c in coords:
        if c != ZERO:
            if c == ONE:
                return coords
            inv = ff_inv(c)
            return tuple(ff_mul(inv, x) for x in coords)
    raise ValueError("the zero tuple is not a projective point")


def enumerate_projective_points() -> list:
    """All 1365 normalized points of PG(5,4).

    Canonical order: points whose leading 1 sits at an earlier coordinate
    come first; within a leading position, the free tail coordinates run
    in lexicographic order. The first point is (1,0,0,0,0,0).
    """
    points = []
    for lead in range(DIMENSION):
        prefix = (ZERO,) * lead + (ONE,)
        for tail in product(ELEMENTS, repeat=DIMENSION - lead - 1):
            points.append(prefix + tail)
    return points


class QuadraticForm:
    """A quadratic form on GF(4)^6 given by upper-triangular coefficients."""

    def __init__(self, coeffs: dict):
        for (i, j), c in coeffs.items():
            if not (0 <= i <= j < DIMENSION):
                raise ValueError(f"bad monomial index pair {(i, j)}")
            if c not in ELEMENTS:
                raise ValueError(f"bad coefficient {c}")
        self.coeffs = dict(coeffs)

    def evaluate(self, x) -> int:
        """Q(x) on a coordinate tuple; 0 means x is singular."""
        acc = ZERO
        for (i, j), c in self.coeffs.items():
            acc = ff_add(acc, ff_mul(c, ff_mul(x[i], x[j])))
        return acc

    def polarize(self, x, y) -> int:
        """Polar form B(x,y) = Q(x+y) + Q(x) + Q(y)."""
        s = tuple(ff_add(a, b) for a, b in zip(x, y))
        q_sum = self.evaluate(s) if any(c != ZERO for c in s) else ZERO
        return ff_add(ff_add(q_sum, self.evaluate(x)), self.evaluate(y))


def elliptic_form() -> QuadraticForm:
    """Q(x) = x0*x1 + x2*x3 + x4^2 + x4*x5 + w*x5^2.

    The binary part t^2 + t + w is irreducible over GF(4) (its trace
    obstruction is nonzero), so the form is of minus type; the 325-point
    count of its quadric confirms this independently.
    """
    return QuadraticForm({(0, 1): ONE, (2, 3): ONE, (4, 4): ONE, (4, 5): ONE, (5, 5): OMEGA})


def evaluate_form(form: QuadraticForm, x) -> int:
    return form.evaluate(x)


def polarize(form: QuadraticForm, x, y) -> int:
    return form.polarize(x, y)


@dataclass(frozen=True)
class GQParams:
    s: int = 4
    t: int = 16
    alpha: int = 1


@dataclass
class GQStructure:
    """Point/line incidence structure with per-point line indices.

    points are normalized coordinate tuples in canonical order; lines are
    ascending 5-tuples of point indices.
    """

    points: list
    lines: list
    lines_through: list = field(default_factory=list)

    def __post_init__(self):
        if not self.lines_through:
            n = len(self.points)
            through = [[] for _ in self.points]
            for li, line in enumerate(self.lines):
                for p in line:
                    if not 0 <= p < n:
                        raise ValueError(f"line {li} has a point index out of range")
                    through[p].append(li)
            self.lines_through = [tuple(ls) for ls in through]

    def validate(self) -> None:
        """Reject structurally malformed data before any counting runs."""
        n = len(self.points)
        seen = set()
        for li, line in enumerate(self.lines):
            if len(line) != 5:
                raise ValueError(f"line {li} has {len(line)} points, expected 5")
            if list(line) != sorted(set(line)):
                raise ValueError(f"line {li} is not a strictly ascending 5-tuple")
            if line[0] < 0 or line[-1] >= n:
                raise ValueError(f"line {li} has a point index out of range")
            seen.add(tuple(line))

    def adjacency_bitsets(self) -> list:
        """Per-point bitmask of collinear points (irreflexive)."""
        adj = [0] * len(self.points)
        for line in self.lines:
            for p in line:
                for q in line:
                    if p != q:
                        adj[p] |= 1 << q
        return adj


def line_through(S: GQStructure, p: int, q: int) -> Optional[int]:
    """Index of the unique line containing both points, or None."""
    if p == q:
        raise ValueError("line_through requires two distinct points")
    common = set(S.lines_through[p]) & set(S.lines_through[q])
    if not common:
        return None
    if len(common) > 1:
        raise ValueError(f"points {p},{q} lie on {len(common)} common lines")
    return common.pop()


def build_quadric_quadrangle(form: Optional[QuadraticForm] = None) -> GQStructure:
    """Assemble Q(5,4): singular points plus totally singular lines.

    Deterministic for a fixed form: point indices follow the canonical
    PG(5,4) order and lines are sorted ascending index tuples.
    """
    form = form or elliptic_form()
    singular = [x for x in enumerate_projective_points() if form.evaluate(x) == ZERO]
    if len(singular) != 325:
        raise ConstructionError(
            f"form yields {len(singular)} singular points, expected 325 "
            "(not an elliptic quadric in PG(5,4))"
        )
    index_of = {x: i for i, x in enumerate(singular)}

    nonzero = (ONE, OMEGA, OMEGA_SQ)
    lines = set()
    n = len(singular)
    for i in range(n):
        x = singular[i]
        for j in range(i + 1, n):
            y = singular[j]
            if form.polarize(x, y) != ZERO:
                continue
            members = [i, j]
            for lam in nonzero:
                z = normalize_point(tuple(ff_add(a, ff_mul(lam, b)) for a, b in zip(x, y)))
                members.append(index_of[z])
            lines.add(tuple(sorted(members)))
    S = GQStructure(points=singular, lines=sorted(lines))
    S.validate()
    return S


@dataclass
class AxiomReport:
    """Per-axiom verdicts for the partial-geometry axioms with alpha = 1.

    Axioms are judged independently: a mutation may break several at once
    and each failing axiom carries its own witness.
    """

    axiom_i_ok: bool
    axiom_ii_ok: bool
    axiom_iii_ok: bool
    axiom_i_witness: Optional[tuple] = None
    axiom_ii_witness: Optional[tuple] = None
    axiom_iii_witness: Optional[tuple] = None

    @property
    def all_pass(self) -> bool:
        return self.axiom_i_ok and self.axiom_ii_ok and self.axiom_iii_ok

    @property
    def witness(self) -> Optional[tuple]:
        """First failing witness, for compact reporting."""
        for w in (self.axiom_i_witness, self.axiom_ii_witness, self.axiom_iii_witness):
            if w is not None:
                return w
        return None


def check_gq_axioms(S: GQStructure, params: GQParams = GQParams()) -> AxiomReport:
    """Exhaustively test the three GQ axioms; failures carry witnesses."""
    s, t, alpha = params.s, params.t, params.alpha

    i_ok, i_witness = True, None
    for li, line in enumerate(S.lines):
        if len(line) != s + 1:
            i_ok, i_witness = False, ("line-size", li, len(line))
            break
    if i_ok:
        for p, through in enumerate(S.lines_through):
            if len(through) != t + 1:
                i_ok, i_witness = False, ("point-degree", p, len(through))
                break

    ii_ok, ii_witness = True, None
    pair_line = {}
    for li, line in enumerate(S.lines):
        for a in range(len(line)):
            for b in range(a + 1, len(line)):
                key = (line[a], line[b])
                if key in pair_line and ii_ok:
                    ii_ok, ii_witness = False, ("pair", key, pair_line[key], li)
                pair_line[key] = li

    iii_ok, iii_witness = True, None
    adj = S.adjacency_bitsets()
    line_masks = []
    for line in S.lines:
        m = 0
        for p in line:
            m |= 1 << p
        line_masks.append(m)
    for p in range(len(S.points)):
        bit = 1 << p
        ap = adj[p]
        for li, mask in enumerate(line_masks):
            if mask & bit:
                continue
            if (ap & mask).bit_count() != alpha:
                iii_ok, iii_witness = False, ("alpha", p, li)
                break
        if not iii_ok:
            break

    return AxiomReport(i_ok, ii_ok, iii_ok, i_witness, ii_witness, iii_witness)


# --- serialization -----------------------------------------------------------

def serialize_geometry(S: GQStructure, params: GQParams = GQParams()) -> str:
    """Bit-exact text format: header, P-records, L-records."""
    out = [f"GQ {params.s} {params.t} {len(S.points)} {len(S.lines)}"]
    for i, pt in enumerate(S.points):
        out.append("P " + str(i) + " " + " ".join(str(c) for c in pt))
    for i, line in enumerate(S.lines):
        out.append("L " + str(i) + " " + " ".join(str(p) for p in line))
    return "\n".join(out) + "\n"


def parse_geometry(text: str) -> GQStructure:
    """Strict parser for serialize_geometry output; rejects any deviation."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if not lines:
        raise GeometryFormatError(1, "empty file")
    header = lines[0].split(" ")
    if len(header) != 5 or header[0] != "GQ":
        raise GeometryFormatError(1, "expected header 'GQ <s> <t> <points> <lines>'")
    try:
        s, t, n_points, n_lines = (int(x) for x in header[1:])
    except ValueError:
        raise GeometryFormatError(1, "non-integer header field") from None
    if len(lines) != 1 + n_points + n_lines:
        raise GeometryFormatError(len(lines), f"expected {1 + n_points + n_lines} lines, got {len(lines)}")

    points = []
    for i in range(n_points):
        lineno = 2 + i
        tok = lines[1 + i].split(" ")
        if len(tok) != 8 or tok[0] != "P":
            raise GeometryFormatError(lineno, "expected 'P <index> <c0> .. <c5>'")
        try:
            idx = int(tok[1])
            coords = tuple(int(c) for c in tok[2:])
        except ValueError:
            raise GeometryFormatError(lineno, "non-integer field") from None
        if idx != i:
            raise GeometryFormatError(lineno, f"point index {idx}, expected {i}")
        if any(c not in ELEMENTS for c in coords):
            raise GeometryFormatError(lineno, "coordinate code outside 0..3")
        if normalize_point(coords) != coords:
            raise GeometryFormatError(lineno, "point is not in normal form")
        points.append(coords)

    gq_lines = []
    for i in range(n_lines):
        lineno = 2 + n_points + i
        tok = lines[1 + n_points + i].split(" ")
        if len(tok) != 7 or tok[0] != "L":
            raise GeometryFormatError(lineno, "expected 'L <index> <p1> .. <p5>'")
        try:
            idx = int(tok[1])
            members = tuple(int(p) for p in tok[2:])
        except ValueError:
            raise GeometryFormatError(lineno, "non-integer field") from None
        if idx != i:
            raise GeometryFormatError(lineno, f"line index {idx}, expected {i}")
        if list(members) != sorted(set(members)):
            raise GeometryFormatError(lineno, "line points must be strictly ascending")
        if members[0] < 0 or members[-1] >= n_points:
            raise GeometryFormatError(lineno, "point index out of range")
        gq_lines.append(members)

    S = GQStructure(points=points, lines=gq_lines)
    S.validate()
    return S
