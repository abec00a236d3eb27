"""Newton polyhedra: facets, faces, interior tests, face loci.

The Newton polyhedron of a monomial ideal is the convex hull of its
generators' exponent vectors plus the nonnegative orthant.  It is described
here by an exact inequality system ``v . x >= b`` with primitive nonnegative
integer normals; supporting coordinate hyperplanes are always kept in the
inequality list, so the facet set alone decides membership and (scaled)
interior membership.

Everything is exact integer / rational arithmetic; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import FacetLimitError, InvalidInputError
from .ideals import MonomialIdeal, term_ideal
from .polynomial import Exponent, Polynomial

DEFAULT_DIMENSION_LIMIT = 6
DEFAULT_FACET_LIMIT = 20


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _determinant(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for j in range(i + 1, k):
                if m[j][i] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, k):
            for col in range(i + 1, k):
                m[j][col] = (m[j][col] * m[i][i] - m[j][i] * m[i][col]) // prev
            m[j][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def _rank(rows: Iterable[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                factor = m[i][col] / pv
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Integer kernel vector of an n x (n+1) system via signed maximal minors.

    Returns None when the rows do not have full rank n.
    """
    width = len(rows[0])
    w = []
    for j in range(width):
        minor = [[row[k] for k in range(width) if k != j] for row in rows]
        w.append((-1) ** j * _determinant(minor))
    if not any(w):
        return None
    return tuple(w)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _content(vec: Sequence[int]) -> int:
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    return g


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generators) + nonnegative orthant, by vertices and facets.

    ``facets`` lists pairs ``(v, b)`` meaning the half-space ``v . x >= b``;
    the normals are primitive nonnegative integer vectors and the list
    contains every facet-defining inequality, including supporting
    coordinate hyperplanes (``b = 0``) and parallel-to-axis facets with
    ``b > 0`` that arise when every generator is divisible by a variable.
    """

    n: int
    vertices: tuple[Exponent, ...]
    facets: tuple[tuple[Exponent, int], ...]

    def max_vertex_coordinate(self) -> int:
        return max((max(u) for u in self.vertices), default=0)

    def contains_point(self, x: Sequence) -> bool:
        """Membership of a rational point (x >= 0 is implied by the facets
        only when the coordinate hyperplanes support the polyhedron, so it
        is checked explicitly)."""
        if len(x) != self.n:
            raise InvalidInputError(f"point {x} has wrong dimension for n={self.n}")
        xs = [Fraction(v) for v in x]
        if any(v < 0 for v in xs):
            return False
        return all(sum(vi * xi for vi, xi in zip(v, xs)) >= b for v, b in self.facets)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [list(u) for u in self.vertices],
            "facets": [[list(v), b] for v, b in self.facets],
        }


@dataclass(frozen=True)
class Face:
    """A face of a Newton polyhedron, of arbitrary codimension.

    ``active`` is the canonical (maximal) set of facet indices whose
    inequalities are tight on the face; the codimension-0 face has an empty
    active set.  ``sample_functional`` is a nonnegative integer vector lying
    in the relative interior of the face's normal cone (the zero vector for
    the codimension-0 face), obtained as the sum of the active facet
    normals.
    """

    polyhedron: NewtonPolyhedron
    active: frozenset[int]
    dim: int
    compact: bool
    sample_functional: Exponent
    vertices: tuple[Exponent, ...]

    def contains_exponent(self, m: Exponent) -> bool:
        """True iff the lattice point lies on this face."""
        P = self.polyhedron
        if len(m) != P.n:
            raise InvalidInputError(f"exponent {m} has wrong dimension for n={P.n}")
        if not P.contains_point(m):
            return False
        return all(_dot(P.facets[i][0], m) == P.facets[i][1] for i in self.active)

    def free_axes(self) -> frozenset[int]:
        """Indices spanning the recession cone (empty iff the face is compact)."""
        return frozenset(i for i, w in enumerate(self.sample_functional) if w == 0)

    def to_json_dict(self) -> dict:
        return {
            "active": sorted(self.active),
            "dim": self.dim,
            "compact": self.compact,
        }


# ---------------------------------------------------------------------------
# construction


def newton_polyhedron(
    a: MonomialIdeal, *, max_dimension: int = DEFAULT_DIMENSION_LIMIT
) -> NewtonPolyhedron:
    """Facet and vertex description of conv(gens(a)) + nonnegative orthant.

    The polyhedron is built through the cone over it in dimension n+1
    (rays ``(g, 1)`` for each generator and ``(e_i, 0)`` for each axis):
    candidate facet normals are kernel vectors of n-element ray subsets,
    kept when valid for every ray and tight on a rank-n subset.  Exact and
    simple; adequate for small dimensions, hence the configurable cap.
    """
    if a.is_zero():
        raise InvalidInputError("the zero ideal has no Newton polyhedron")
    n = a.n
    if n > max_dimension:
        raise InvalidInputError(
            f"dimension {n} exceeds the enumeration cap {max_dimension}; "
            "raise max_dimension explicitly if this size is intended"
        )
    gens = sorted(a.gens)
    rays: list[tuple[int, ...]] = [g + (1,) for g in gens]
    for i in range(n):
        rays.append(tuple(1 if j == i else 0 for j in range(n)) + (0,))

    found: dict[tuple[Exponent, int], None] = {}
    for subset in combinations(range(len(rays)), n):
        w = _kernel_vector([rays[i] for i in subset])
        if w is None:
            continue
        dots = [_dot(w, ray) for ray in rays]
        if all(d >= 0 for d in dots):
            pass
        elif all(d <= 0 for d in dots):
            w = tuple(-x for x in w)
            dots = [-d for d in dots]
        else:
            continue  # not a supporting hyperplane of the cone
        v = w[:n]
        if not any(v):
            continue  # the homogenizing hyperplane, not a facet of P
        tight = [rays[i] for i, d in enumerate(dots) if d == 0]
        if _rank(tight) < n:
            continue  # supporting but lower-dimensional contact
        c = _content(w)
        v = tuple(x // c for x in v)
        b = -w[n] // c
        assert all(x >= 0 for x in v) and b >= 0
        found[(v, b)] = None

    facets = tuple(sorted(found))
    vertices = []
    for g in gens:
        active_normals = [v for v, b in facets if _dot(v, g) == b]
        if len(active_normals) >= n and _rank(active_normals) == n:
            vertices.append(g)
    return NewtonPolyhedron(n, tuple(sorted(vertices)), facets)


def faces(
    P: NewtonPolyhedron, *, max_facets: int = DEFAULT_FACET_LIMIT
) -> list[Face]:
    """All faces of ``P`` of every dimension, including the codimension-0 face.

    Faces are generated as closures of facet subsets: starting from the
    whole polyhedron, each known face is intersected with one further facet
    and the resulting active set saturated.  Every face of a pointed
    polyhedron contains a vertex, so emptiness and saturation are decided
    from vertex incidences alone.  Output is sorted by (dim, active set).
    """
    if len(P.facets) > max_facets:
        raise FacetLimitError(
            f"{len(P.facets)} facets exceeds the face-enumeration cap {max_facets}"
        )
    n = P.n
    facets = P.facets
    vertex_active = {
        u: frozenset(i for i, (v, b) in enumerate(facets) if _dot(v, u) == b)
        for u in P.vertices
    }

    def closure(active: frozenset[int]):
        on_face = [u for u, act in vertex_active.items() if active <= act]
        if not on_face:
            return None
        covered: set[int] = set()
        for i in active:
            covered.update(j for j, x in enumerate(facets[i][0]) if x)
        saturated = frozenset(
            i
            for i, (v, b) in enumerate(facets)
            if all(_dot(v, u) == b for u in on_face)
            and all(j in covered for j, x in enumerate(v) if x)
        )
        return saturated, tuple(sorted(on_face)), frozenset(covered)

    def build(saturated, on_face, covered) -> Face:
        free = [i for i in range(n) if i not in covered]
        base = on_face[0]
        span = [tuple(x - y for x, y in zip(u, base)) for u in on_face[1:]]
        span += [tuple(1 if j == i else 0 for j in range(n)) for i in free]
        dim = _rank(span)
        functional = tuple(
            sum(facets[i][0][j] for i in saturated) for j in range(n)
        )
        return Face(
            polyhedron=P,
            active=saturated,
            dim=dim,
            compact=not free,
            sample_functional=functional,
            vertices=on_face,
        )

    first = closure(frozenset())
    assert first is not None, "a Newton polyhedron always has a vertex"
    done: dict[frozenset[int], Face] = {first[0]: build(*first)}
    queue = [first[0]]
    while queue:
        active = queue.pop()
        for j in range(len(facets)):
            if j in active:
                continue
            cl = closure(active | {j})
            if cl is None or cl[0] in done:
                continue
            done[cl[0]] = build(*cl)
            queue.append(cl[0])
    return sorted(done.values(), key=lambda f: (f.dim, sorted(f.active)))


# ---------------------------------------------------------------------------
# membership and face extraction


def in_scaled_interior(P: NewtonPolyhedron, r, x: Sequence) -> bool:
    """Is ``x`` in the topological interior of ``r * P`` (as a subset of R^n)?

    Scaling multiplies every facet constant by ``r``, so interior membership
    is strict satisfaction of every facet inequality; the facet list keeps
    supporting coordinate hyperplanes, whose scaled form still requires the
    corresponding coordinates to be strictly positive.
    """
    r = Fraction(r)
    if r <= 0:
        raise InvalidInputError(f"scale factor must be positive, got {r}")
    if len(x) != P.n:
        raise InvalidInputError(f"point {x} has wrong dimension for n={P.n}")
    xs = [Fraction(v) for v in x]
    if any(v < 0 for v in xs):
        return False
    return all(sum(vi * xi for vi, xi in zip(v, xs)) > r * b for v, b in P.facets)


def face_terms(f: Polynomial, face: Face) -> Polynomial:
    """The polynomial composed of the terms of ``f`` lying on ``face``.

    The face must belong to the Newton polyhedron of the term ideal of
    ``f``; for the codimension-0 face this returns ``f`` itself.
    """
    expected = newton_polyhedron(term_ideal(f), max_dimension=f.n)
    if expected != face.polyhedron:
        raise InvalidInputError(
            "face does not belong to the Newton polyhedron of this polynomial"
        )
    return _terms_on_face(f, face)


def _terms_on_face(f: Polynomial, face: Face) -> Polynomial:
    # All exponents of f lie in P(term_ideal(f)), so tightness alone decides.
    P = face.polyhedron
    picked = {
        e: c
        for e, c in f.terms.items()
        if all(_dot(P.facets[i][0], e) == P.facets[i][1] for i in face.active)
    }
    return Polynomial(f.variables, picked)


def face_locus(face: Face) -> frozenset[int]:
    """Variable indices spanning the coordinate subspace attached to the face.

    These are the coordinates on which the sample functional vanishes; the
    locus is the corresponding coordinate subspace (the origin when the set
    is empty, all of affine space for the codimension-0 face).  The sample
    functional is chosen in the relative interior of the normal cone, which
    makes the answer independent of the choice.
    """
    return frozenset(i for i, w in enumerate(face.sample_functional) if w == 0)
