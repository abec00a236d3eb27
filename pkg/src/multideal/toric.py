"""Independent two-dimensional verification path through a toric resolution.

For a monomial ideal in two variables, the normal fan of its Newton
polyhedron is refined to a smooth fan (every adjacent ray pair spanning a
determinant-1 cone).  Each ray is an exceptional or coordinate divisor of
the associated toric modification; carrying the ideal's order and the
relative canonical order along every ray, the multiplier ideal is computed
straight from its definition as a pushforward, with no reference to the
interior-of-polyhedron characterization.  Agreement of the two paths is the
keystone correctness check of this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidInputError
from .ideals import MonomialIdeal
from .multiplier import as_coefficient
from .polytope import newton_polyhedron


def _det2(u, w) -> int:
    return u[0] * w[1] - u[1] * w[0]


@dataclass(frozen=True)
class Fan2D:
    """An ordered fan in the nonnegative quadrant, from (1,0) to (0,1)."""

    rays: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.rays or self.rays[0] != (1, 0) or self.rays[-1] != (0, 1):
            raise InvalidInputError("fan must start at (1,0) and end at (0,1)")
        for u in self.rays:
            if u[0] < 0 or u[1] < 0 or gcd(u[0], u[1]) != 1:
                raise InvalidInputError(f"ray {u} is not primitive nonnegative")
        for u, w in zip(self.rays, self.rays[1:]):
            if _det2(u, w) <= 0:
                raise InvalidInputError("rays must be strictly ordered by angle")

    def adjacent_determinants(self) -> list[int]:
        return [_det2(u, w) for u, w in zip(self.rays, self.rays[1:])]

    def is_smooth(self) -> bool:
        return all(d == 1 for d in self.adjacent_determinants())


@dataclass(frozen=True)
class DivisorData:
    """Orders along one ray of the resolved fan.

    ``ideal_order`` is the minimum weight of the ideal's generators under
    the ray; ``k_rel`` is the coefficient of the relative canonical divisor,
    ``ray . (1,1) - 1``, zero exactly for the two coordinate rays.
    """

    ray: tuple[int, int]
    ideal_order: int
    k_rel: int

    def to_json_dict(self) -> dict:
        return {"ray": list(self.ray), "ord": self.ideal_order, "k_rel": self.k_rel}


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def _ray_between(u, w) -> tuple[int, int]:
    """The unique primitive ray m strictly inside cone(u, w) with det(u, m) = 1.

    Splitting at m leaves a smooth cone on the u side and strictly lowers
    the determinant on the w side, so repeated insertion terminates.  (The
    naive choice m = u + w does not: its determinants do not descend.)
    """
    d = _det2(u, w)
    assert d > 1
    g, s, t = _egcd(u[0], u[1])
    assert g == 1
    base = (-t, s)  # det(u, base) = u0*s + u1*t = 1
    shift = -((_det2(base, w) - 1) // d)  # smallest k with det(base + k*u, w) >= 1
    m = (base[0] + shift * u[0], base[1] + shift * u[1])
    assert _det2(u, m) == 1 and 1 <= _det2(m, w) < d
    assert m[0] >= 0 and m[1] >= 0
    return m


def smooth_subdivision(a: MonomialIdeal) -> Fan2D:
    """Smooth fan refining the normal fan of the Newton polyhedron of ``a``.

    The rays comprise the two coordinate rays, every facet normal of the
    polyhedron, and the insertions needed to bring all adjacent
    determinants to 1.
    """
    if a.n != 2:
        raise InvalidInputError("the toric oracle is restricted to dimension 2")
    if a.is_zero():
        raise InvalidInputError("the zero ideal has no resolution data")
    P = newton_polyhedron(a)
    rays = {(1, 0), (0, 1)} | {v for v, _ in P.facets}
    ordered = _sort_by_angle(rays)
    i = 0
    while i < len(ordered) - 1:
        if _det2(ordered[i], ordered[i + 1]) == 1:
            i += 1
        else:
            ordered.insert(i + 1, _ray_between(ordered[i], ordered[i + 1]))
    return Fan2D(tuple(ordered))


def _sort_by_angle(rays) -> list[tuple[int, int]]:
    def angle_key(v):
        # (0,1) sorts last; others by slope
        return (1, 0) if v[0] == 0 else (0, Fraction(v[1], v[0]))

    return sorted(rays, key=angle_key)


def divisor_data(a: MonomialIdeal, fan: Fan2D | None = None) -> tuple[DivisorData, ...]:
    """Ideal order and relative canonical order along every fan ray."""
    if a.n != 2 or a.is_zero():
        raise InvalidInputError("divisor data needs a nonzero ideal in dimension 2")
    if fan is None:
        fan = smooth_subdivision(a)
    gens = sorted(a.gens)
    return tuple(
        DivisorData(
            ray=v,
            ideal_order=min(v[0] * g[0] + v[1] * g[1] for g in gens),
            k_rel=v[0] + v[1] - 1,
        )
        for v in fan.rays
    )


def multiplier_via_resolution(a: MonomialIdeal, r) -> MonomialIdeal:
    """Multiplier ideal computed from the resolution, bypassing the interior test.

    A monomial belongs iff along every ray v of the smooth fan its order is
    at least floor(r * ideal_order(v)) - k_rel(v); this is the pushforward of
    the relative canonical divisor minus the rounded-down scaled pullback.
    Minimal generators come from a plain nested scan over an adaptive box
    with the same touch-the-boundary retry discipline as the primary path,
    but an otherwise independent implementation.
    """
    r = as_coefficient(r)
    data = divisor_data(a)
    p, q = r.numerator, r.denominator
    thresholds = [
        (d.ray, (p * d.ideal_order) // q - d.k_rel) for d in data
    ]
    max_gen = max(max(g) for g in a.gens)
    scaled = r * (1 + max_gen)
    box = int(-((-scaled.numerator) // scaled.denominator)) + 1
    for _ in range(20):
        member = [
            [
                all(v[0] * x + v[1] * y >= c for v, c in thresholds)
                for y in range(box + 1)
            ]
            for x in range(box + 1)
        ]
        gens = [
            (x, y)
            for x in range(box + 1)
            for y in range(box + 1)
            if member[x][y]
            and (x == 0 or not member[x - 1][y])
            and (y == 0 or not member[x][y - 1])
        ]
        assert gens
        if all(x < box and y < box for x, y in gens):
            return MonomialIdeal(2, frozenset(gens))
        box *= 2
    raise RuntimeError("resolution-side lattice scan failed to stabilize")
