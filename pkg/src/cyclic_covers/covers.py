"""Strongly cyclic covers: enumeration, genera, quotients, isomorphism, counting.

A cover of the curve ``y^d = prod (x - b_i)^(alpha_i)`` is given by a second
exponent vector ``beta`` on the degree-zero hyperplane, not a multiple of
``alpha``; its total space is the normalised fibre product with
``z^d = prod (x - b_i)^(beta_i)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .curves import (
    CyclicCurve,
    base_genus,
    genus_from_profile,
    ramification_profile,
    support_genus,
)
from .errors import InternalInconsistency, InvalidCover
from .ff_linear import (
    ExponentVector,
    check_prime,
    coset_canonical,
    degree_sum_residue,
    enumerate_degree_zero,
    linear_combine,
    scale,
    span_membership,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverSpec:
    base: CyclicCurve
    beta: ExponentVector

    def __post_init__(self):
        alpha = self.base.alpha
        if self.beta.d != alpha.d or len(self.beta) != len(alpha):
            raise InvalidCover(f"beta {self.beta} does not match the curve")
        if degree_sum_residue(self.beta):
            raise InvalidCover(f"beta {self.beta} is ramified over infinity")
        if span_membership(self.beta, alpha) is not None:
            raise InvalidCover(f"beta {self.beta} is a multiple of alpha (trivial cover)")


@dataclass(frozen=True)
class IsoClass:
    members: frozenset
    canonical: ExponentVector
    quotient_genera: tuple[int, ...]


def support(beta: ExponentVector) -> frozenset:
    return frozenset(k for k, e in enumerate(beta) if e)


def is_cover_vector(curve: CyclicCurve, v: ExponentVector) -> bool:
    return degree_sum_residue(v) == 0 and span_membership(v, curve.alpha) is None


def cover_vectors(curve: CyclicCurve):
    """All ``d^(r-1) - d`` valid cover vectors, lexicographic."""
    for v in enumerate_degree_zero(curve.d, curve.r):
        if span_membership(v, curve.alpha) is None:
            yield v


def all_covers(curve: CyclicCurve) -> list[CoverSpec]:
    """One cover per nonzero torsion coset, keyed by its lex-min representative."""
    seen = set()
    out = []
    for v in enumerate_degree_zero(curve.d, curve.r):
        c = coset_canonical(v, curve.alpha)
        if c in seen or c.is_zero():
            continue
        seen.add(c)
        out.append(CoverSpec(curve, c))
    return sorted(out, key=lambda cov: cov.beta)


def cover_genus(cover: CoverSpec) -> int:
    d, r = cover.base.d, cover.base.r
    closed = (d - 1) * (r * d - 2 * d - 2) // 2
    unramified = d * (base_genus(cover.base) - 1) + 1
    if closed != unramified:
        raise InternalInconsistency(f"cover genus {closed} != d(g-1)+1 = {unramified}")
    return closed


def _quotient_genus(d: int, v: ExponentVector) -> int:
    by_support = support_genus(d, len(support(v)))
    by_profile = genus_from_profile(ramification_profile(d, v))
    if by_support != by_profile:
        raise InternalInconsistency(
            f"quotient {v}: support genus {by_support} != profile genus {by_profile}"
        )
    return by_support


def intermediate_quotients(cover: CoverSpec) -> list[tuple[ExponentVector, int]]:
    """The d cyclic quotients C_beta, C_(alpha-beta), ..., C_((d-1)alpha-beta)."""
    d, alpha, beta = cover.base.d, cover.base.alpha, cover.beta
    vectors = [beta] + [linear_combine(m, alpha, -1, beta) for m in range(1, d)]
    return [(v, _quotient_genus(d, v)) for v in vectors]


def paper_iso_related(beta1: ExponentVector, beta2: ExponentVector, alpha: ExponentVector) -> bool:
    """Literal criterion: beta1 == beta2, or beta1 + beta2 is a nonzero multiple of alpha."""
    if beta1 == beta2:
        return True
    m = span_membership(linear_combine(1, beta1, 1, beta2), alpha)
    return m is not None and m != 0


def isomorphic_as_covers(beta1: ExponentVector, beta2: ExponentVector, alpha: ExponentVector) -> bool:
    """Equivalence closure of the literal criterion: beta2 in +-beta1 + <alpha>."""
    return (
        span_membership(linear_combine(1, beta2, -1, beta1), alpha) is not None
        or span_membership(linear_combine(1, beta2, 1, beta1), alpha) is not None
    )


def iso_class_members(beta: ExponentVector, alpha: ExponentVector) -> frozenset:
    d = alpha.d
    plus = (linear_combine(m, alpha, 1, beta) for m in range(d))
    minus = (linear_combine(m, alpha, -1, beta) for m in range(d))
    return frozenset((*plus, *minus))


def iso_classes(curve: CyclicCurve) -> list[IsoClass]:
    classes = []
    seen = set()
    for v in cover_vectors(curve):
        if v in seen:
            continue
        members = iso_class_members(v, curve.alpha)
        seen |= members
        genera = sorted(g for _, g in intermediate_quotients(CoverSpec(curve, v)))
        classes.append(IsoClass(members, min(members), tuple(genera)))
    return classes


# -- counting by support size ---------------------------------------------


def count_by_support_oracle(curve: CyclicCurve, k: int, include_trivial: bool = False) -> int:
    """Exhaustive count of hyperplane vectors with exactly k nonzero entries."""
    count = 0
    for v in enumerate_degree_zero(curve.d, curve.r):
        if len(support(v)) != k:
            continue
        if not include_trivial and span_membership(v, curve.alpha) is not None:
            continue
        count += 1
    return count


def count_formula_corrected(d: int, r: int, k: int) -> int:
    """C(r,k) * ((d-1)^k + (-1)^k (d-1)) / d."""
    check_prime(d)
    per_support, rem = divmod((d - 1) ** k + (-1) ** k * (d - 1), d)
    assert rem == 0
    return comb(r, k) * per_support


def count_formula_paper(d: int, r: int, k: int) -> Fraction:
    """The published closed form, evaluated exactly. Kept for audit only."""
    check_prime(d)
    d = Fraction(d)
    return comb(r, k) * ((1 - 1 / d) ** k * d ** (k - 1) - Fraction((-1) ** k) / d)


def covers_by_quotient_genus(curve: CyclicCurve, g0: int) -> list[ExponentVector]:
    """Valid cover vectors whose C_beta quotient has genus g0."""
    d, r = curve.d, curve.r
    if g0 < 0 or (2 * g0) % (d - 1):
        log.warning("genus %d is not (k-2)(d-1)/2 for any integer k with d=%d", g0, d)
        return []
    k = 2 * g0 // (d - 1) + 2
    if k > r:
        log.warning("genus %d needs %d branch points but the curve has only %d", g0, k, r)
        return []
    return [v for v in cover_vectors(curve) if len(support(v)) == k]


def trivial_multiples(curve: CyclicCurve) -> list[ExponentVector]:
    return [scale(m, curve.alpha) for m in range(curve.d)]
