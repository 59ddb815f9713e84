"""Exact arithmetic for formal characters of the circle group.

A finite-dimensional circle representation splits into integer weights; its
formal character is the finite sum of ``multiplicity * u^k`` over weights k,
where ``u`` stands for the weight-one character (the circle element acts on a
weight-k line by the phase e^{-ik*theta}, and u^k bookkeeps that phase).
Characters therefore live in the Laurent polynomial ring Z[u, u^-1], stored
sparsely as ``{weight: multiplicity}`` with zero multiplicities never kept, so
structural equality is ring equality.

:class:`CharPoly` is a polynomial in a formal variable ``t`` with Character
coefficients; the t^p coefficient records cohomological degree p.  The one
non-obvious operation is :func:`morse_quotient`, the exact synthetic division
recovering Q from P = R + (1+t)*Q; every inequality check in this package is
a nonnegativity statement about such a Q.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

__all__ = ["Character", "CharPoly", "NotDivisible", "morse_quotient"]


class NotDivisible(ValueError):
    """No exact (1+t) factor exists.

    Carries the value of the difference at t = -1; the factorization exists
    exactly when that value vanishes.
    """

    def __init__(self, residual: "Character"):
        super().__init__(f"no (1+t) factor: value at t = -1 is {residual}")
        self.residual = residual


def _check_int(value: object, what: str) -> int:
    # bool is an int subclass; reject it along with floats and strings.
    if type(value) is not int:
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


class Character:
    """Sparse Laurent polynomial in u with integer coefficients.

    Supports +, -, * (with other characters or plain integers, an integer
    meaning that multiple of u^0) and the coefficientwise partial order via
    ``>=`` / ``<=``.  Instances are immutable; all operations return new
    values.

    >>> Character.from_weights([0, 1, 2])
    Character({0: 1, 1: 1, 2: 1})
    >>> u = Character.monomial(1)
    >>> (1 + u) * (1 + u)
    Character({0: 1, 1: 2, 2: 1})
    >>> Character.monomial(-1) * u
    Character({0: 1})
    >>> u + (-u)
    Character({})
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for weight, mult in items:
            _check_int(weight, "weight")
            _check_int(mult, "multiplicity")
            acc[weight] = acc.get(weight, 0) + mult
        # Canonical form: ascending weights, no zero entries.
        self._coeffs: dict[int, int] = {k: acc[k] for k in sorted(acc) if acc[k] != 0}

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> "Character":
        """Character of the representation with the given weight multiset."""
        return cls((w, 1) for w in weights)

    @classmethod
    def monomial(cls, weight: int, mult: int = 1) -> "Character":
        """The single term ``mult * u^weight``."""
        return cls({weight: mult})

    @classmethod
    def span(cls, lo: int, hi: int) -> "Character":
        """Sum of u^m over lo <= m <= hi; zero when the range is empty.

        >>> Character.span(0, 2)
        Character({0: 1, 1: 1, 2: 1})
        >>> Character.span(3, 2)
        Character({})
        """
        return cls((m, 1) for m in range(lo, hi + 1))

    @property
    def coeffs(self) -> Mapping[int, int]:
        return MappingProxyType(self._coeffs)

    def multiplicity(self, weight: int) -> int:
        return self._coeffs.get(weight, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(self._coeffs)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def dim(self) -> int:
        """Sum of multiplicities (the virtual dimension)."""
        return sum(self._coeffs.values())

    def is_nonneg(self) -> bool:
        return all(q >= 0 for q in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Character.monomial(0, other)
        if not isinstance(other, Character):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: "Character | int") -> "Character":
        other = _as_character(other)
        merged = dict(self._coeffs)
        for k, q in other._coeffs.items():
            merged[k] = merged.get(k, 0) + q
        return Character(merged)

    __radd__ = __add__

    def __neg__(self) -> "Character":
        return Character({k: -q for k, q in self._coeffs.items()})

    def __sub__(self, other: "Character | int") -> "Character":
        return self + (-_as_character(other))

    def __rsub__(self, other: int) -> "Character":
        return _as_character(other) - self

    def __mul__(self, other: "Character | int") -> "Character":
        other = _as_character(other)
        prod: dict[int, int] = {}
        for k1, q1 in self._coeffs.items():
            for k2, q2 in other._coeffs.items():
                k = k1 + k2
                prod[k] = prod.get(k, 0) + q1 * q2
        return Character(prod)

    __rmul__ = __mul__

    def __ge__(self, other: "Character | int") -> bool:
        """Coefficientwise partial order: true iff self - other is nonnegative.

        The order is partial, not total: ``a >= b`` and ``b >= a`` may both
        be false.
        """
        return (self - other).is_nonneg()

    def __le__(self, other: "Character | int") -> bool:
        return (_as_character(other) - self).is_nonneg()

    def to_json_obj(self) -> dict[str, int]:
        """JSON form: decimal weight strings to integer multiplicities."""
        return {str(k): q for k, q in self._coeffs.items()}

    @classmethod
    def from_json_obj(cls, obj: object) -> "Character":
        """Parse the JSON form, rejecting non-integer multiplicities.

        Zero multiplicities are accepted and normalized away.
        """
        if not isinstance(obj, dict):
            raise ValueError(f"character must be a JSON object, got {obj!r}")
        pairs = []
        for key, value in obj.items():
            try:
                weight = int(key)
            except (TypeError, ValueError):
                raise ValueError(f"character weight key {key!r} is not a decimal integer") from None
            pairs.append((weight, _check_int(value, f"multiplicity of weight {key}")))
        return cls(pairs)

    def __repr__(self) -> str:
        return f"Character({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, q in self._coeffs.items():
            mag = abs(q)
            if k == 0:
                term = str(mag)
            else:
                var = "u" if k == 1 else f"u^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if q > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if q > 0 else f"- {term}")
        return " ".join(parts)


def _as_character(value: "Character | int") -> Character:
    if isinstance(value, Character):
        return value
    if type(value) is int:
        return Character.monomial(0, value)
    raise TypeError(f"expected Character or int, got {type(value).__name__}")


class CharPoly:
    """Polynomial in t with :class:`Character` coefficients.

    Trailing zero coefficients are trimmed, so the zero polynomial has
    degree -1 and equality is canonical.  Integer entries are shorthand for
    that multiple of u^0.

    >>> p = CharPoly([Character.span(0, 2), Character.span(0, 1)])
    >>> p.degree
    1
    >>> p.at_minus_one()
    Character({2: 1})
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable["Character | int"] = ()):
        cs = [_as_character(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs: tuple[Character, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Character, ...]:
        return self._coeffs

    def coeff(self, power: int) -> Character:
        """Coefficient of t^power (zero beyond the degree)."""
        if power < 0:
            raise ValueError("t-powers are nonnegative")
        if power >= len(self._coeffs):
            return Character()
        return self._coeffs[power]

    def is_nonneg(self) -> bool:
        return all(c.is_nonneg() for c in self._coeffs)

    def at_minus_one(self) -> Character:
        """Alternating sum of the coefficients (evaluation at t = -1)."""
        total = Character()
        for p, c in enumerate(self._coeffs):
            total = total - c if p % 2 else total + c
        return total

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "CharPoly | Character | int") -> "CharPoly":
        other = _as_charpoly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return CharPoly([self.coeff(p) + other.coeff(p) for p in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "CharPoly":
        return CharPoly([-c for c in self._coeffs])

    def __sub__(self, other: "CharPoly | Character | int") -> "CharPoly":
        return self + (-_as_charpoly(other))

    def __mul__(self, other: "CharPoly | Character | int") -> "CharPoly":
        other = _as_charpoly(other)
        if not self._coeffs or not other._coeffs:
            return CharPoly()
        prod = [Character() for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                prod[i + j] = prod[i + j] + a * b
        return CharPoly(prod)

    __rmul__ = __mul__

    def __ge__(self, other: "CharPoly | Character | int") -> bool:
        return (self - other).is_nonneg()

    def __le__(self, other: "CharPoly | Character | int") -> bool:
        return (_as_charpoly(other) - self).is_nonneg()

    def to_json_obj(self) -> list[dict[str, int]]:
        """JSON form: array of characters indexed by power of t."""
        return [c.to_json_obj() for c in self._coeffs]

    @classmethod
    def from_json_obj(cls, obj: object) -> "CharPoly":
        if not isinstance(obj, list):
            raise ValueError(f"character polynomial must be a JSON array, got {obj!r}")
        return cls(Character.from_json_obj(entry) for entry in obj)

    def __repr__(self) -> str:
        return f"CharPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        parts = []
        for p, c in enumerate(self._coeffs):
            if not c:
                continue
            if p == 0:
                parts.append(f"({c})")
            elif p == 1:
                parts.append(f"t*({c})")
            else:
                parts.append(f"t^{p}*({c})")
        return " + ".join(parts) if parts else "0"


def _as_charpoly(value: "CharPoly | Character | int") -> CharPoly:
    if isinstance(value, CharPoly):
        return value
    return CharPoly([_as_character(value)])


#: The divisor 1 + t used by every Morse-type identity.
ONE_PLUS_T = CharPoly([1, 1])


def morse_quotient(p: CharPoly, r: CharPoly) -> CharPoly:
    """Solve ``p = r + (1+t) * q`` for q by synthetic division.

    The solution exists iff p - r vanishes at t = -1; otherwise
    :class:`NotDivisible` is raised carrying that value.  When it exists the
    quotient is unique (1 + t has unit leading coefficient), and it is
    returned even if some of its coefficients are negative: nonnegativity is
    the caller's question, to be asked via :meth:`CharPoly.is_nonneg`.

    >>> u = Character.monomial(1)
    >>> p = CharPoly([Character.span(0, 2), 1 + u])
    >>> morse_quotient(p, CharPoly([u * u]))
    CharPoly([Character({0: 1, 1: 1})])
    """
    diff = p - r
    residual = diff.at_minus_one()
    if residual:
        raise NotDivisible(residual)
    # q_m = d_m - q_{m-1}; the step at m = degree yields zero exactly because
    # diff(-1) == 0, and the constructor trims it.
    qs: list[Character] = []
    prev = Character()
    for m in range(diff.degree + 1):
        prev = diff.coeff(m) - prev
        qs.append(prev)
    q = CharPoly(qs)
    assert ONE_PLUS_T * q + r == p
    return q
