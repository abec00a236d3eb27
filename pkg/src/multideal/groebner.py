"""Buchberger Groebner engine over the rationals.

The engine exists for exactly one question: does a polynomial system have a
common zero with all coordinates nonzero?  Emptiness on the torus is decided
by adjoining ``t * x_1 * ... * x_n - 1`` and testing whether the Groebner
basis is ``{1}`` (classical saturation; valid over an algebraically closed
field).  Monomial order is degree-reverse-lexicographic with the auxiliary
variable last.

The computation is capped: exceeding the configured number of pair
reductions raises :class:`InconclusiveError` rather than ever returning a
wrong answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InconclusiveError, InvalidInputError
from .polynomial import Exponent, Polynomial

DEFAULT_PAIR_LIMIT = 50_000

TermDict = dict[Exponent, Fraction]


@dataclass(frozen=True)
class PolyRing:
    """Variable list plus the (fixed) monomial order of the engine."""

    variables: tuple[str, ...]
    order: str = "grevlex"


PolySystem = list[Polynomial]


# ---------------------------------------------------------------------------
# monomial order and term-dict primitives


def _grevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lm(p: TermDict) -> Exponent:
    return max(p, key=_grevlex_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_mult(p: TermDict, coeff: Fraction, shift: Exponent, q: TermDict) -> None:
    """In place p -= coeff * x^shift * q."""
    for e, c in q.items():
        key = tuple(x + y for x, y in zip(e, shift))
        s = p.get(key, Fraction(0)) - coeff * c
        if s:
            p[key] = s
        else:
            p.pop(key, None)


def _normalize(p: TermDict, cofactors: list[TermDict] | None) -> None:
    """Rescale in place to integer coefficients with content 1 and positive
    leading coefficient (controls coefficient blowup during the run)."""
    if not p:
        return
    denom = lcm(*(c.denominator for c in p.values())) if p else 1
    numer = 0
    for c in p.values():
        numer = gcd(numer, abs(c.numerator * (denom // c.denominator)))
    scale = Fraction(denom, numer)
    if p[_lm(p)] < 0:
        scale = -scale
    for e in list(p):
        p[e] *= scale
    if cofactors is not None:
        for cof in cofactors:
            for e in list(cof):
                cof[e] *= scale


def _normal_form(
    p: TermDict,
    p_cof: list[TermDict] | None,
    basis: list[TermDict],
    basis_lms: list[Exponent],
    basis_cofs: list[list[TermDict]] | None,
) -> tuple[TermDict, list[TermDict] | None]:
    """Full normal form of p against the basis (every term reduced)."""
    work = dict(p)
    cof = [dict(c) for c in p_cof] if p_cof is not None else None
    remainder: TermDict = {}
    while work:
        mono = _lm(work)
        coeff = work[mono]
        for g, g_lm, j in zip(basis, basis_lms, range(len(basis))):
            if _divides(g_lm, mono):
                factor = coeff / g[g_lm]
                shift = tuple(x - y for x, y in zip(mono, g_lm))
                _sub_mult(work, factor, shift, g)
                if cof is not None and basis_cofs is not None:
                    for target, source in zip(cof, basis_cofs[j]):
                        _sub_mult(target, factor, shift, source)
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return remainder, cof


# ---------------------------------------------------------------------------
# Buchberger

def _buchberger_dicts(
    inputs: list[TermDict],
    *,
    pair_limit: int,
    track: bool,
) -> tuple[list[TermDict], list[list[TermDict]] | None]:
    nvars = next((len(next(iter(p))) for p in inputs if p), 0)

    def unit_cof(i):
        return [
            {(0,) * nvars: Fraction(1)} if j == i else {} for j in range(len(inputs))
        ]

    basis: list[TermDict] = []
    cofs: list[list[TermDict]] | None = [] if track else None
    for i, p in enumerate(inputs):
        q = dict(p)
        qc = unit_cof(i) if track else None
        _normalize(q, qc)
        if q:
            basis.append(q)
            if track:
                cofs.append(qc)
    lms = [_lm(g) for g in basis]

    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    reductions = 0
    while pending:
        pair = min(
            pending,
            key=lambda ij: (_grevlex_key(_mono_lcm(lms[ij[0]], lms[ij[1]])), ij),
        )
        pending.discard(pair)
        i, j = pair
        lcm_ij = _mono_lcm(lms[i], lms[j])
        # product criterion: coprime leading monomials need no reduction
        if lcm_ij == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion: a third element dividing the lcm whose pairs with
        # both members were already treated makes this pair redundant
        if any(
            k != i
            and k != j
            and _divides(lms[k], lcm_ij)
            and tuple(sorted((i, k))) not in pending
            and tuple(sorted((j, k))) not in pending
            for k in range(len(basis))
        ):
            continue
        reductions += 1
        if reductions > pair_limit:
            raise InconclusiveError(
                f"Groebner computation exceeded the cap of {pair_limit} pair reductions"
            )
        # S-polynomial
        s: TermDict = {}
        s_cof = [{} for _ in inputs] if track else None
        shift_i = tuple(a - b for a, b in zip(lcm_ij, lms[i]))
        shift_j = tuple(a - b for a, b in zip(lcm_ij, lms[j]))
        _sub_mult(s, Fraction(-1) / basis[i][lms[i]], shift_i, basis[i])
        _sub_mult(s, Fraction(1) / basis[j][lms[j]], shift_j, basis[j])
        if track:
            for target, source in zip(s_cof, cofs[i]):
                _sub_mult(target, Fraction(-1) / basis[i][lms[i]], shift_i, source)
            for target, source in zip(s_cof, cofs[j]):
                _sub_mult(target, Fraction(1) / basis[j][lms[j]], shift_j, source)
        h, h_cof = _normal_form(s, s_cof, basis, lms, cofs)
        if not h:
            continue
        _normalize(h, h_cof)
        basis.append(h)
        lms.append(_lm(h))
        if track:
            cofs.append(h_cof)
        new = len(basis) - 1
        pending.update((k, new) for k in range(new))

    return _reduce_basis(basis, cofs, inputs)


def _reduce_basis(basis, cofs, inputs):
    track = cofs is not None
    order = sorted(range(len(basis)), key=lambda i: _grevlex_key(_lm(basis[i])))
    keep: list[int] = []
    for i in order:
        if not any(_divides(_lm(basis[j]), _lm(basis[i])) for j in keep):
            keep.append(i)
    reduced: list[TermDict] = []
    reduced_cofs: list[list[TermDict]] | None = [] if track else None
    for i in keep:
        others = [basis[j] for j in keep if j != i]
        other_lms = [_lm(g) for g in others]
        other_cofs = [cofs[j] for j in keep if j != i] if track else None
        h, h_cof = _normal_form(
            basis[i], cofs[i] if track else None, others, other_lms, other_cofs
        )
        assert h, "a minimal basis element cannot reduce to zero"
        lc = h[_lm(h)]
        h = {e: c / lc for e, c in h.items()}
        reduced.append(h)
        if track:
            reduced_cofs.append(
                [{e: c / lc for e, c in cof.items()} for cof in h_cof]
            )
    idx = sorted(range(len(reduced)), key=lambda i: _grevlex_key(_lm(reduced[i])))
    final = [reduced[i] for i in idx]
    final_cofs = [reduced_cofs[i] for i in idx] if track else None
    return final, final_cofs


def buchberger(
    system: Sequence[Polynomial],
    *,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
    return_certificates: bool = False,
):
    """Reduced Groebner basis of the system (grevlex, monic, sorted).

    With ``return_certificates=True`` also returns, for each basis element,
    the cofactor polynomials expressing it as an explicit combination of the
    inputs (a debug mode for auditing the engine on small instances).

    Raises
    ------
    InconclusiveError
        when the pair-reduction cap is exceeded.
    """
    system = list(system)
    if not system:
        return ([], []) if return_certificates else []
    variables = system[0].variables
    if not variables:
        raise InvalidInputError("the polynomial ring needs at least one variable")
    for p in system:
        if p.variables != variables:
            raise InvalidInputError("all system members must share one variable set")
    dicts = [dict(p.terms) for p in system]
    basis, cofs = _buchberger_dicts(
        dicts, pair_limit=pair_limit, track=return_certificates
    )
    polys = [Polynomial(variables, g) for g in basis]
    if return_certificates:
        certificates = [[Polynomial(variables, c) for c in cof] for cof in cofs]
        return polys, certificates
    return polys


# ---------------------------------------------------------------------------
# the two consumers


def partials(f: Polynomial) -> PolySystem:
    """The n formal partial derivatives of ``f``, exact coefficients."""
    return [f.derivative(i) for i in range(f.n)]


class TorusVerdict(enum.Enum):
    NOWHERE = "nowhere"
    SOMEWHERE = "yes_somewhere"
    INCONCLUSIVE = "inconclusive"


def vanishes_on_torus(
    system: Sequence[Polynomial], *, pair_limit: int = DEFAULT_PAIR_LIMIT
) -> TorusVerdict:
    """Does the system have a common zero with all coordinates nonzero?

    ``NOWHERE`` means the common zero set misses the torus entirely, decided
    by saturation: adjoin an auxiliary variable t and ``t*x_1*...*x_n - 1``
    and test whether the Groebner basis is {1}.  ``SOMEWHERE`` means a torus
    zero exists (over the complex numbers).  A capped computation returns
    ``INCONCLUSIVE``.
    """
    polys = [p for p in system if not p.is_zero()]
    if not polys:
        # the zero system vanishes identically, in particular on the torus
        return TorusVerdict.SOMEWHERE
    variables = polys[0].variables
    if any(p.is_constant() for p in polys):
        return TorusVerdict.NOWHERE
    aux = "t"
    while aux in variables:
        aux += "_"
    extended = variables + (aux,)
    lifted = [
        Polynomial(extended, {e + (0,): c for e, c in p.terms.items()})
        for p in polys
    ]
    saturator = Polynomial(
        extended,
        {(1,) * len(extended): Fraction(1), (0,) * len(extended): Fraction(-1)},
    )
    try:
        basis = buchberger(lifted + [saturator], pair_limit=pair_limit)
    except InconclusiveError:
        return TorusVerdict.INCONCLUSIVE
    if any(p.is_constant() for p in basis):
        return TorusVerdict.NOWHERE
    return TorusVerdict.SOMEWHERE
