"""Independent recomputations of the section characters.

Three routes that share no code with the closed forms in :mod:`.geometry`:

* a two-chart Cech complex per line summand, row-reduced exactly over the
  rationals, one weight block at a time;
* the same machinery on the two cut pieces glued at the node, with the
  matching condition at the node fiber imposed as an extra linear map; and
* the fixed-point localization formula, evaluated by exact division in the
  Laurent ring via :class:`RationalCharacter`.

Conventions for the line (r_P, r_Q): chart 0 is centered at the fixed point
Q with coordinate z, and the monomial z^j there carries weight r_Q + j;
chart 1 is centered at P with coordinate w = 1/z, and w^i carries weight
r_P - i.  On the overlap the chart-1 monomial w^i reads z^(r_P - r_Q - i) in
chart-0 terms.  All cohomology in a fixed weight m sits inside the block

    C^0_m = span of the chart monomials of weight m   -->   C^1_m = Q z^(m - r_Q)

with differential (s0, s1) |-> s0 - s1 on the overlap, so each block matrix
has a single row with entries +1 (chart 0) and -1 (chart 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import Character
from .geometry import CohomologyTable, CutDecomposition, LineWeights, MalformedCut

__all__ = [
    "GradedCechComplex",
    "cech_cohomology_p1",
    "cech_cohomology_nodal",
    "RationalCharacter",
    "NonPolynomialResult",
    "localization_index",
]


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[int, list[int]]:
    """Reduce in place to row echelon form; return (rank, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return r, pivots


def _kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the kernel of the matrix, one vector per free column."""
    work = [list(row) for row in rows]
    _, pivots = _rref(work, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -work[r][free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True, slots=True)
class _WeightBlock:
    weight: int
    c0_basis: tuple[tuple[int, int], ...]  # (chart, exponent) per column
    row: tuple[int, ...]  # single differential row, entries +-1


class GradedCechComplex:
    """Two-chart Cech complex of one line summand, split by weight.

    Blocks are materialized for every weight in [min(r_P, r_Q) - 1,
    max(r_P, r_Q) + 1]; outside that window each chart contributes exactly
    one monomial and the differential is an isomorphism, so all cohomology
    lives inside it.
    """

    __slots__ = ("line", "lo", "hi", "_blocks")

    def __init__(self, line: LineWeights):
        self.line = line
        self.lo = min(line.r_p, line.r_q) - 1
        self.hi = max(line.r_p, line.r_q) + 1
        blocks: dict[int, _WeightBlock] = {}
        for m in range(self.lo, self.hi + 1):
            cols: list[tuple[int, int]] = []
            row: list[int] = []
            if m >= line.r_q:
                cols.append((0, m - line.r_q))
                row.append(1)
            if m <= line.r_p:
                cols.append((1, line.r_p - m))
                row.append(-1)
            for chart, exp in cols:
                img_exp = exp if chart == 0 else line.r_p - line.r_q - exp
                assert img_exp + line.r_q == m, "column lands in the wrong weight"
            blocks[m] = _WeightBlock(m, tuple(cols), tuple(row))
        self._blocks = blocks

    def c0_basis(self, m: int) -> tuple[tuple[int, int], ...]:
        block = self._blocks.get(m)
        return block.c0_basis if block else ()

    def sections(self, m: int) -> list[tuple[Fraction, ...]]:
        """Kernel basis in weight m, coordinates along ``c0_basis(m)``."""
        block = self._blocks.get(m)
        if block is None:
            return []
        rows = [[Fraction(x) for x in block.row]] if block.row else []
        return _kernel_basis(rows, len(block.c0_basis))

    def h1_at(self, m: int) -> int:
        block = self._blocks.get(m)
        if block is None:
            return 0
        rank = 1 if any(block.row) else 0
        return 1 - rank

    def cohomology(self) -> CohomologyTable:
        h0 = Character()
        h1 = Character()
        for m in range(self.lo, self.hi + 1):
            h0 += Character.monomial(m, len(self.sections(m)))
            h1 += Character.monomial(m, self.h1_at(m))
        return CohomologyTable(h0, h1)


def cech_cohomology_p1(summand: LineWeights) -> CohomologyTable:
    """Cohomology of one line summand by explicit row reduction.

    >>> t = cech_cohomology_p1(LineWeights(2, 0))
    >>> (t.h0, t.h1)
    (Character({0: 1, 1: 1, 2: 1}), Character({}))
    >>> cech_cohomology_p1(LineWeights(-3, 0)).h1
    Character({-2: 1, -1: 1})
    """
    return GradedCechComplex(summand).cohomology()


def _node_column(side: GradedCechComplex, node_chart: int, m: int) -> int | None:
    """Index of the (node_chart, exponent 0) column in weight m, if present."""
    for idx, col in enumerate(side.c0_basis(m)):
        if col == (node_chart, 0):
            return idx
    return None


def cech_cohomology_nodal(cutd: CutDecomposition) -> CohomologyTable:
    """Cohomology of the two cut pieces glued at the node, from first principles.

    Sections of the glued curve are pairs of sections agreeing at the node;
    the node sits at chart 0 of each plus summand (its minimum) and chart 1
    of each minus summand (its maximum), and its fiber has weight 0.  Per
    weight the defect of the joint evaluation map feeds the gluing sequence

        0 -> H^0(glued) -> H^0(+) + H^0(-) -> fiber -> H^1(glued) -> H^1(+) + H^1(-) -> 0.

    >>> from .geometry import cut, EquivBundleCP1
    >>> t = cech_cohomology_nodal(cut(EquivBundleCP1.parse("2:2")))
    >>> (t.h0, t.h1)
    (Character({1: 1, 2: 1}), Character({1: 1}))
    """
    if cutd.plus.rank != cutd.minus.rank:
        raise MalformedCut(
            f"sides have different ranks: {cutd.plus.rank} vs {cutd.minus.rank}"
        )
    for s in cutd.plus.summands:
        if s.r_q != 0:
            raise MalformedCut(f"plus-side node weight must be 0, got {s.r_q}")
    for s in cutd.minus.summands:
        if s.r_p != 0:
            raise MalformedCut(f"minus-side node weight must be 0, got {s.r_p}")
    if cutd.red_dims != (cutd.plus.rank, 0):
        raise MalformedCut(
            f"red_dims {cutd.red_dims} does not match a point reduced space"
        )
    h0 = Character()
    h1 = Character()
    for ps, ms in zip(cutd.plus.summands, cutd.minus.summands):
        plus = GradedCechComplex(ps)
        minus = GradedCechComplex(ms)
        for m in range(min(plus.lo, minus.lo), max(plus.hi, minus.hi) + 1):
            sec_p = plus.sections(m)
            sec_m = minus.sections(m)
            col_p = _node_column(plus, 0, m)
            col_m = _node_column(minus, 1, m)
            evals = [v[col_p] if col_p is not None else Fraction(0) for v in sec_p]
            evals += [-v[col_m] if col_m is not None else Fraction(0) for v in sec_m]
            fiber_dim = 1 if m == 0 else 0
            beta = [evals] if fiber_dim else []
            rank, _ = _rref([list(r) for r in beta], len(evals))
            h0 += Character.monomial(m, len(evals) - rank)
            h1 += Character.monomial(m, plus.h1_at(m) + minus.h1_at(m) + fiber_dim - rank)
    return CohomologyTable(h0, h1)


class NonPolynomialResult(ValueError):
    """Exact division left a remainder or non-integer coefficients."""


@dataclass(frozen=True, slots=True)
class RationalCharacter:
    """Formal ratio of two characters, for fixed-point index formulas.

    Only addition and exact reduction to a genuine character are needed:

    >>> u = Character.monomial(1)
    >>> rc = RationalCharacter(u * u * u - 1, u - 1)
    >>> rc.as_character()
    Character({0: 1, 1: 1, 2: 1})
    """

    numerator: Character
    denominator: Character

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("character denominator is zero")

    def __add__(self, other: "RationalCharacter") -> "RationalCharacter":
        return RationalCharacter(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def as_character(self) -> Character:
        """Divide exactly; raise :class:`NonPolynomialResult` if impossible."""
        return _laurent_div(self.numerator, self.denominator)


def _dense(ch: Character) -> tuple[int, list[Fraction]]:
    """(valuation, dense coefficient list from the valuation upward)."""
    lo = min(ch.support())
    hi = max(ch.support())
    return lo, [Fraction(ch.multiplicity(k)) for k in range(lo, hi + 1)]


def _laurent_div(num: Character, den: Character) -> Character:
    if not den:
        raise ZeroDivisionError("character denominator is zero")
    if not num:
        return Character()
    vn, n = _dense(num)
    vd, d = _dense(den)
    if len(n) < len(d):
        raise NonPolynomialResult(f"({num}) / ({den}) has a remainder")
    # Classic long division over Q, from the top degree down.
    q = [Fraction(0)] * (len(n) - len(d) + 1)
    rem = list(n)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + len(d) - 1] / d[-1]
        q[i] = c
        if c:
            for j, dj in enumerate(d):
                rem[i + j] -= c * dj
    if any(rem):
        raise NonPolynomialResult(f"({num}) / ({den}) has a remainder")
    if any(c.denominator != 1 for c in q):
        raise NonPolynomialResult(f"({num}) / ({den}) has non-integer coefficients")
    return Character({vn - vd + i: int(c) for i, c in enumerate(q)})


def localization_index(summand: LineWeights) -> Character:
    """Index of one line summand from the two fixed-point contributions.

    The point P (moment +1, tangent weight -1) contributes
    u^(r_P) / (1 - u^(-1)); the point Q (moment -1, tangent weight +1)
    contributes u^(r_Q) / (1 - u).  Their sum is always a genuine character
    and equals h0 - h1.

    >>> localization_index(LineWeights(2, 0))
    Character({0: 1, 1: 1, 2: 1})
    >>> localization_index(LineWeights(-1, 0))
    Character({})
    """
    u = Character.monomial(1)
    u_inv = Character.monomial(-1)
    at_p = RationalCharacter(Character.monomial(summand.r_p), 1 - u_inv)
    at_q = RationalCharacter(Character.monomial(summand.r_q), 1 - u)
    return (at_p + at_q).as_character()
