"""Per-face nondegeneracy of a polynomial with respect to its Newton polyhedron.

A polynomial is nondegenerate for a face when the differential of its
face-restricted part has no zero on the torus (all coordinates nonzero).
Single-term face polynomials are nondegenerate by convention: a nonzero
constant (the origin vertex) by fiat, and a genuine monomial because its
differential never vanishes where all coordinates are nonzero.  The overall
verdict quantifies over every face; the principal-part verdict over compact
faces only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidInputError
from .groebner import DEFAULT_PAIR_LIMIT, TorusVerdict, partials, vanishes_on_torus
from .ideals import term_ideal
from .polynomial import Polynomial
from .polytope import (
    DEFAULT_FACET_LIMIT,
    Face,
    _terms_on_face,
    face_terms,
    faces,
    newton_polyhedron,
)


class Verdict(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FaceVerdict:
    face: Face
    verdict: Verdict
    face_polynomial: Polynomial

    def to_json_dict(self) -> dict:
        d = self.face.to_json_dict()
        d["face_terms"] = self.face_polynomial.render()
        d["verdict"] = self.verdict.value
        return d


@dataclass(frozen=True)
class NondegReport:
    """Classification of a polynomial: one verdict per face plus aggregates."""

    polynomial: Polynomial
    entries: tuple[FaceVerdict, ...]
    overall: Verdict
    principal_part: Verdict

    @property
    def witnesses(self) -> tuple[FaceVerdict, ...]:
        """The degenerate faces (with their face polynomials)."""
        return tuple(e for e in self.entries if e.verdict is Verdict.DEGENERATE)

    def to_json_dict(self) -> dict:
        return {
            "overall": self.overall.value,
            "principal_part": self.principal_part.value,
            "degenerate_faces": [w.to_json_dict() for w in self.witnesses],
        }


def _verdict_for(face_poly: Polynomial, pair_limit: int) -> Verdict:
    if face_poly.is_single_term():
        return Verdict.NONDEGENERATE
    assert not face_poly.is_zero(), "every face carries at least one term"
    answer = vanishes_on_torus(partials(face_poly), pair_limit=pair_limit)
    if answer is TorusVerdict.NOWHERE:
        return Verdict.NONDEGENERATE
    if answer is TorusVerdict.SOMEWHERE:
        return Verdict.DEGENERATE
    return Verdict.INCONCLUSIVE


def face_nondegenerate(
    f: Polynomial, face: Face, *, pair_limit: int = DEFAULT_PAIR_LIMIT
) -> Verdict:
    """Verdict for a single face of the Newton polyhedron of ``f``."""
    return _verdict_for(face_terms(f, face), pair_limit)


def _aggregate(verdicts) -> Verdict:
    verdicts = list(verdicts)
    if any(v is Verdict.DEGENERATE for v in verdicts):
        return Verdict.DEGENERATE
    if any(v is Verdict.INCONCLUSIVE for v in verdicts):
        # an unresolved face must not be guessed nondegenerate
        return Verdict.INCONCLUSIVE
    return Verdict.NONDEGENERATE


def classify(
    f: Polynomial,
    *,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
    max_facets: int = DEFAULT_FACET_LIMIT,
) -> NondegReport:
    """Full per-face nondegeneracy report for a nonzero polynomial."""
    if f.is_zero():
        raise InvalidInputError("cannot classify the zero polynomial")
    P = newton_polyhedron(term_ideal(f), max_dimension=f.n)
    entries = []
    for face in faces(P, max_facets=max_facets):
        face_poly = _terms_on_face(f, face)
        entries.append(FaceVerdict(face, _verdict_for(face_poly, pair_limit), face_poly))
    return NondegReport(
        polynomial=f,
        entries=tuple(entries),
        overall=_aggregate(e.verdict for e in entries),
        principal_part=_aggregate(
            e.verdict for e in entries if e.face.compact
        ),
    )
