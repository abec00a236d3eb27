"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is a finite map from exponent vectors (tuples of
nonnegative integers, one entry per declared variable) to nonzero rational
coefficients.  All arithmetic is exact; no floating point is used anywhere.
Two expanded polynomials are equal iff their term maps are equal, which makes
the representation canonical.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInputError

Exponent = tuple[int, ...]


def _validate_exponent(exps: Sequence[int], n: int) -> Exponent:
    e = tuple(int(x) for x in exps)
    if len(e) != n:
        raise InvalidInputError(f"exponent vector {e} has length {len(e)}, expected {n}")
    if any(x < 0 for x in e):
        raise InvalidInputError(f"exponent vector {e} has a negative entry")
    return e


class Polynomial:
    """A polynomial in a fixed, ordered tuple of variables.

    Parameters
    ----------
    variables : sequence of str
        Variable names, in order.  Exponent vectors are dense over this set.
    terms : mapping or iterable of (exponent vector, coefficient)
        Coefficients are coerced to :class:`fractions.Fraction`; zero
        coefficients are dropped, duplicate exponents are accumulated.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | Iterable = ()):
        object.__setattr__(self, "variables", tuple(variables))
        n = len(self.variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exps, coeff in items:
            e = _validate_exponent(exps, n)
            c = acc.get(e, Fraction(0)) + Fraction(coeff)
            if c:
                acc[e] = c
            else:
                acc.pop(e, None)
        object.__setattr__(self, "terms", acc)

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "Polynomial":
        n = len(tuple(variables))
        return cls(variables, {(0,) * n: Fraction(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], index: int) -> "Polynomial":
        names = tuple(variables)
        e = [0] * len(names)
        e[index] = 1
        return cls(names, {tuple(e): Fraction(1)})

    # ---- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def constant_coefficient(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def exponents(self) -> set[Exponent]:
        return set(self.terms)

    # ---- arithmetic ----------------------------------------------------

    def _check_same_ring(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise InvalidInputError(
                f"mixed variable sets: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e, Fraction(0)) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return self._raw(self.variables, acc)

    def __neg__(self):
        return self._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.variables)
            return self._raw(self.variables, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, Fraction(0)) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return self._raw(self.variables, acc)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidInputError(f"polynomial power must be a nonnegative integer, got {k!r}")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def derivative(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to the index-th variable."""
        acc: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            d = list(e)
            d[index] = k - 1
            acc[tuple(d)] = c * k
        return self._raw(self.variables, acc)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at a point with rational coordinates."""
        if len(values) != self.n:
            raise InvalidInputError(f"expected {self.n} values, got {len(values)}")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    @classmethod
    def _raw(cls, variables, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        object.__setattr__(p, "variables", tuple(variables))
        object.__setattr__(p, "terms", terms)
        return p

    # ---- canonical text ------------------------------------------------

    def render(self) -> str:
        """Canonical text form, parseable by :func:`multideal.expr.parse_expr`.

        Terms are ordered by descending total degree, ties broken by
        descending lexicographic exponent order.
        """
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        pieces: list[str] = []
        for e in order:
            c = self.terms[e]
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.variables, e)
                if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    # ---- dunder plumbing -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self.render()!r}, vars={','.join(self.variables)})"

    def __str__(self):
        return self.render()

    def __setattr__(self, *_):
        raise AttributeError("Polynomial instances are immutable")
