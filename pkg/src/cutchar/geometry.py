"""Equivariant line bundles on the projective line and the level-zero cut.

The circle acts on CP^1 with two fixed points: P (moment value +1) and Q
(moment value -1).  An equivariant line bundle is pinned down by the fiber
weights r_P and r_Q at the fixed points; its underlying degree is r_P - r_Q.
Higher rank enters only through formal direct sums of such line summands.

Section characters come in closed form.  With r := (r_P, r_Q):

* r_Q <= r_P: H^0 has one section of each weight m in [r_Q, r_P], H^1 = 0.
* r_Q >  r_P: H^0 = 0, H^1 has one class per weight m in [r_P + 1, r_Q - 1].

Cutting at the zero level of the moment map splits CP^1 into a plus side
(containing P) and a minus side (containing Q), each again a projective
line, glued along the reduced space at level zero, a point.  The fiber over
that point carries weight 0, so each summand (r_P, r_Q) cuts to (r_P, 0) on
the plus side and (0, r_Q) on the minus side.  The cut-space cohomology is
computed from the Mayer-Vietoris sequence of the two sides meeting at the
node; the only subtle term is the rank of the evaluation-difference map into
the weight-zero node fiber, which is 1 exactly when either side has an
invariant section through the node (r_P >= 0 or r_Q <= 0) and 0 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, CharPoly

__all__ = [
    "MalformedCut",
    "LineWeights",
    "EquivBundleCP1",
    "CohomologyTable",
    "CutDecomposition",
    "cohomology",
    "cut",
    "mcut_cohomology",
]


class MalformedCut(ValueError):
    """The pieces handed to the cut-space computation are inconsistent."""


@dataclass(frozen=True, slots=True)
class LineWeights:
    """Fixed-point weights (r_P, r_Q) of one equivariant line summand."""

    r_p: int
    r_q: int

    @property
    def degree(self) -> int:
        return self.r_p - self.r_q


@dataclass(frozen=True, slots=True)
class EquivBundleCP1:
    """Formal direct sum of equivariant line bundles on CP^1.

    The literal form is comma-separated ``rP:rQ`` pairs, e.g. ``"1:-1,2:2"``.

    >>> EquivBundleCP1.parse("1:-1,2:2").rank
    2
    >>> EquivBundleCP1.parse("3:0").literal()
    '3:0'
    """

    summands: tuple[LineWeights, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a bundle needs at least one summand")
        for s in self.summands:
            if not isinstance(s, LineWeights):
                raise ValueError(f"summand {s!r} is not a LineWeights")

    @property
    def rank(self) -> int:
        return len(self.summands)

    @classmethod
    def parse(cls, literal: str) -> "EquivBundleCP1":
        """Parse ``"rP:rQ,rP:rQ,..."``; raises ValueError on bad syntax."""
        summands = []
        for piece in literal.split(","):
            head, sep, tail = piece.partition(":")
            if not sep:
                raise ValueError(f"bad summand {piece!r}: expected rP:rQ")
            try:
                summands.append(LineWeights(int(head), int(tail)))
            except ValueError:
                raise ValueError(f"bad summand {piece!r}: weights must be integers") from None
        return cls(tuple(summands))

    def literal(self) -> str:
        return ",".join(f"{s.r_p}:{s.r_q}" for s in self.summands)


@dataclass(frozen=True, slots=True)
class CohomologyTable:
    """Characters of H^0 and H^1 (all higher groups vanish on a curve)."""

    h0: Character
    h1: Character
    n: int = 1

    def euler_poly(self) -> CharPoly:
        """Poincare-style polynomial h0 + t*h1."""
        return CharPoly([self.h0, self.h1])

    def index(self) -> Character:
        """Equivariant Euler characteristic h0 - h1."""
        return self.h0 - self.h1

    def to_json_obj(self) -> dict:
        return {"h0": self.h0.to_json_obj(), "h1": self.h1.to_json_obj(), "n": self.n}

    @classmethod
    def from_json_obj(cls, obj: object) -> "CohomologyTable":
        if not isinstance(obj, dict) or set(obj) != {"h0", "h1", "n"}:
            raise ValueError(f"cohomology table must have keys h0, h1, n: got {obj!r}")
        n = obj["n"]
        if type(n) is not int or n < 1:
            raise ValueError(f"top degree n must be a positive integer, got {n!r}")
        return cls(Character.from_json_obj(obj["h0"]), Character.from_json_obj(obj["h1"]), n)


@dataclass(frozen=True, slots=True)
class CutDecomposition:
    """The two sides of the level-zero cut and the reduced-space dimensions.

    ``red_dims[p]`` is dim H^p of the reduced space at level zero with values
    in the cut bundle; for a point that is (rank, 0).
    """

    plus: EquivBundleCP1
    minus: EquivBundleCP1
    red_dims: tuple[int, int]


def _line_cohomology(s: LineWeights) -> CohomologyTable:
    if s.r_q <= s.r_p:
        return CohomologyTable(Character.span(s.r_q, s.r_p), Character())
    return CohomologyTable(Character(), Character.span(s.r_p + 1, s.r_q - 1))


def cohomology(bundle: EquivBundleCP1) -> CohomologyTable:
    """Characters of H^0 and H^1 of the bundle, by the closed form.

    >>> t = cohomology(EquivBundleCP1.parse("2:0"))
    >>> (t.h0, t.h1)
    (Character({0: 1, 1: 1, 2: 1}), Character({}))
    >>> cohomology(EquivBundleCP1.parse("-3:0")).h1
    Character({-2: 1, -1: 1})
    """
    h0 = Character()
    h1 = Character()
    for s in bundle.summands:
        table = _line_cohomology(s)
        h0 += table.h0
        h1 += table.h1
    return CohomologyTable(h0, h1)


def cut(bundle: EquivBundleCP1) -> CutDecomposition:
    """Cut at moment level zero: (r_P, r_Q) -> plus (r_P, 0), minus (0, r_Q).

    >>> d = cut(EquivBundleCP1.parse("1:-1,2:2"))
    >>> d.plus.literal(), d.minus.literal(), d.red_dims
    ('1:0,2:0', '0:-1,0:2', (2, 0))
    """
    plus = EquivBundleCP1(tuple(LineWeights(s.r_p, 0) for s in bundle.summands))
    minus = EquivBundleCP1(tuple(LineWeights(0, s.r_q) for s in bundle.summands))
    return CutDecomposition(plus, minus, (bundle.rank, 0))


def _node_rank(plus: LineWeights, minus: LineWeights) -> int:
    # Weight-zero sections through the node: the plus side has one iff its
    # section range [0, r_p] contains 0, the minus side iff [r_q, 0] does.
    return 1 if plus.r_p >= 0 or minus.r_q <= 0 else 0


def mcut_cohomology(cutd: CutDecomposition) -> CohomologyTable:
    """Cohomology of the cut space from its two sides via Mayer-Vietoris.

    For each matched pair of summands, with delta the rank of the joint
    evaluation map at the node (weight zero):

        h0(cut) = h0(plus) + h0(minus) - delta * u^0
        h1(cut) = h1(plus) + h1(minus) + (1 - delta) * u^0

    Raises :class:`MalformedCut` unless the two sides pair up, every node
    fiber weight is zero, and red_dims matches a point reduced space.

    >>> d = cut(EquivBundleCP1.parse("2:2"))
    >>> t = mcut_cohomology(d)
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
        tp = _line_cohomology(ps)
        tm = _line_cohomology(ms)
        delta = _node_rank(ps, ms)
        h0 += tp.h0 + tm.h0 - Character.monomial(0, delta)
        h1 += tp.h1 + tm.h1 + Character.monomial(0, 1 - delta)
    return CohomologyTable(h0, h1)
