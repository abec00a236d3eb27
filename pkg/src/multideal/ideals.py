"""Monomial ideal algebra: minimal generators, membership, term ideals.

A monomial ideal is stored by its unique antichain of minimal generators
(exponent vectors pairwise incomparable under componentwise <=).  Two fixed
encodings: the zero ideal has no generators at all; the unit ideal is
generated by the zero vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidInputError
from .polynomial import Exponent, Polynomial


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal monomial generators."""

    n: int
    gens: frozenset[Exponent]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"dimension must be positive, got {self.n}")
        for g in self.gens:
            if len(g) != self.n or any(x < 0 or not isinstance(x, int) for x in g):
                raise InvalidInputError(f"bad generator {g} for dimension {self.n}")
        for g in self.gens:
            for h in self.gens:
                if g != h and _divides(g, h):
                    raise InvalidInputError(
                        f"generators are not an antichain: {g} divides {h}"
                    )

    # ---- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, frozenset())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, frozenset({(0,) * n}))

    # ---- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return (0,) * self.n in self.gens

    def contains_monomial(self, m: Exponent) -> bool:
        if len(m) != self.n:
            raise InvalidInputError(f"monomial {m} has wrong dimension for n={self.n}")
        return any(_divides(g, m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff ``other`` is a subideal of ``self``."""
        if other.n != self.n:
            raise InvalidInputError("dimension mismatch between ideals")
        return all(self.contains_monomial(g) for g in other.gens)

    def shifted(self, m: Exponent) -> "MonomialIdeal":
        """The ideal multiplied by the monomial with exponent ``m``."""
        m = tuple(int(x) for x in m)
        if len(m) != self.n or any(x < 0 for x in m):
            raise InvalidInputError(f"bad shift monomial {m}")
        return MonomialIdeal(
            self.n, frozenset(tuple(a + b for a, b in zip(g, m)) for g in self.gens)
        )

    def sorted_gens(self) -> list[Exponent]:
        """Generators in descending lexicographic order (the canonical order)."""
        return sorted(self.gens, reverse=True)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.sorted_gens()]}

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={self.sorted_gens()})"


def minimalize(n: int, vectors: Iterable[Exponent]) -> MonomialIdeal:
    """The antichain of componentwise-minimal elements of ``vectors``.

    An empty input yields the zero ideal.
    """
    vecs = sorted({tuple(int(x) for x in v) for v in vectors})
    for v in vecs:
        if len(v) != n or any(x < 0 for x in v):
            raise InvalidInputError(f"bad exponent vector {v} for dimension {n}")
    minimal: list[Exponent] = []
    for v in vecs:  # sorted order guarantees no later vector divides an earlier one
        if not any(_divides(m, v) for m in minimal):
            minimal.append(v)
    return MonomialIdeal(n, frozenset(minimal))


def contains(ideal: MonomialIdeal, m: Exponent) -> bool:
    """Membership of a monomial: some generator divides it."""
    return ideal.contains_monomial(tuple(m))


def term_ideal(f: Polynomial) -> MonomialIdeal:
    """The monomial ideal generated by the terms of ``f``."""
    if f.is_zero():
        raise InvalidInputError("the zero polynomial has no term ideal")
    return minimalize(f.n, f.exponents())


@dataclass(frozen=True)
class FactoredIdeal:
    """An ideal of the shape (base^exponent) * monomial_part.

    ``exponent == 0`` means the ideal is purely monomial; ``base`` is still
    carried so the object renders uniformly.
    """

    base: Polynomial
    exponent: int
    monomial_part: MonomialIdeal

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidInputError(f"principal exponent must be >= 0, got {self.exponent}")
        if self.base.n != self.monomial_part.n:
            raise InvalidInputError("principal and monomial parts have mismatched dimensions")

    def is_purely_monomial(self) -> bool:
        return self.exponent == 0

    def equals_as_ideal(self, other: "FactoredIdeal") -> bool:
        """Ideal-theoretic equality for two factorizations over the same base.

        When the base is a single term, the principal power folds into the
        monomial part, so different exponents can still give equal ideals;
        otherwise the factorization (exponent, monomial part) is unique.
        """
        if self.base != other.base:
            raise InvalidInputError("equals_as_ideal requires a common base polynomial")
        if self.base.is_single_term():
            (e,) = self.base.terms
            a = self.monomial_part.shifted(tuple(k * self.exponent for k in e))
            b = other.monomial_part.shifted(tuple(k * other.exponent for k in e))
            return a == b
        return self.exponent == other.exponent and self.monomial_part == other.monomial_part

    def to_json_dict(self) -> dict:
        return {
            "principal": {"base": self.base.render(), "exponent": self.exponent},
            "monomial_generators": [list(g) for g in self.monomial_part.sorted_gens()],
        }
