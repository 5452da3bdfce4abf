"""Cyclic curves y^d = prod (x - b_i)^(alpha_i), ramification profiles and genus."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CurveFormatError,
    DuplicateBranchPoints,
    InternalInconsistency,
    InvalidProfile,
    LengthMismatch,
    RamifiedAtInfinity,
    TooFewBranchPoints,
    ZeroExponent,
)
from .ff_linear import ExponentVector, check_prime, degree_sum_residue, reduce
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class CyclicCurve:
    """A prime-degree cyclic cover of the line, unramified over infinity.

    ``alpha`` has full support and zero residue sum; ``branch_points`` are
    distinct exact rationals indexed in the same order as ``alpha``.
    """

    d: int
    branch_points: tuple[Fraction, ...]
    alpha: ExponentVector

    def __post_init__(self):
        check_prime(self.d)
        object.__setattr__(self, "branch_points", tuple(Fraction(b) for b in self.branch_points))
        r = len(self.branch_points)
        if r < 3:
            raise TooFewBranchPoints(f"need at least 3 branch points, got {r}")
        if len(self.alpha) != r or self.alpha.d != self.d:
            raise LengthMismatch(
                f"{r} branch points but exponent vector {self.alpha} (mod {self.alpha.d})"
            )
        if len(set(self.branch_points)) != r:
            raise DuplicateBranchPoints("branch points must be pairwise distinct")
        if 0 in self.alpha.entries:
            k = self.alpha.entries.index(0)
            raise ZeroExponent(f"exponent at position {k} is 0 mod {self.d}")
        if degree_sum_residue(self.alpha):
            raise RamifiedAtInfinity(
                f"exponent sum {sum(self.alpha.entries)} is not 0 mod {self.d}"
            )

    @property
    def r(self) -> int:
        return len(self.branch_points)


def validate_curve(d, branch_points: Sequence, alpha_raw: Sequence[int]) -> CyclicCurve:
    """Build a CyclicCurve from raw data, raising exactly one declared error."""
    check_prime(d)
    points = tuple(Fraction(b) for b in branch_points)
    if len(points) < 3:
        raise TooFewBranchPoints(f"need at least 3 branch points, got {len(points)}")
    if len(alpha_raw) != len(points):
        raise LengthMismatch(f"{len(points)} branch points but {len(alpha_raw)} exponents")
    return CyclicCurve(d, points, reduce(alpha_raw, d))


def standard_curve(d: int, r: int) -> CyclicCurve:
    """Curve on the points 0..r-1 with exponents all 1 except a balancing tail."""
    check_prime(d)
    alpha = [1] * r
    last = (-(r - 1)) % d
    if last:
        alpha[-1] = last
    elif d == 2:
        raise RamifiedAtInfinity(f"no full-support exponent vector mod 2 with r={r} odd")
    else:
        alpha[-2], alpha[-1] = 2, d - 1
    return validate_curve(d, range(r), alpha)


# -- curve JSON ------------------------------------------------------------

_CURVE_KEYS = ("d", "branch_points", "exponents")


def curve_from_dict(data) -> CyclicCurve:
    if not isinstance(data, dict):
        raise CurveFormatError("curve document must be a JSON object")
    unknown = sorted(set(data) - set(_CURVE_KEYS))
    if unknown:
        raise CurveFormatError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in _CURVE_KEYS if k not in data]
    if missing:
        raise CurveFormatError(f"missing keys: {', '.join(missing)}")
    d = data["d"]
    if isinstance(d, bool) or not isinstance(d, int):
        raise CurveFormatError("d must be an integer")
    check_prime(d)
    points = data["branch_points"]
    exps = data["exponents"]
    if not isinstance(points, list) or not isinstance(exps, list):
        raise CurveFormatError("branch_points and exponents must be lists")
    for e in exps:
        if isinstance(e, bool) or not isinstance(e, int):
            raise CurveFormatError(f"exponent {e!r} is not an integer")
        if e == 0 or e % d == 0:
            raise ZeroExponent(f"exponent {e} is 0 mod {d}")
        if not 1 <= e < d:
            raise CurveFormatError(f"exponent {e} outside [1, {d})")
    return validate_curve(d, [parse_rational(p) for p in points], exps)


def curve_from_json(text: str) -> CyclicCurve:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFormatError(f"invalid JSON: {exc.msg}") from None
    return curve_from_dict(data)


def curve_to_dict(curve: CyclicCurve) -> dict:
    return {
        "d": curve.d,
        "branch_points": [format_rational(b) for b in curve.branch_points],
        "exponents": list(curve.alpha.entries),
    }


# -- ramification and genus ------------------------------------------------


@dataclass(frozen=True)
class RamificationProfile:
    """Fibres of a degree-``degree`` map to the line.

    Each fibre is a tuple of ``(count, index)`` pairs: ``count`` preimages,
    each with ramification index ``index``. ``finite`` is aligned with the
    branch-point list; ``infinity`` is the fibre over the point at infinity.
    """

    degree: int
    finite: tuple[tuple[tuple[int, int], ...], ...]
    infinity: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for fibre in self.fibres():
            if any(c < 1 or e < 1 for c, e in fibre):
                raise InvalidProfile(f"non-positive count or index in {fibre}")
            if sum(c * e for c, e in fibre) != self.degree:
                raise InvalidProfile(f"fibre {fibre} does not sum to degree {self.degree}")

    def fibres(self):
        return (*self.finite, self.infinity)


def ramification_profile(d: int, exponents: ExponentVector) -> RamificationProfile:
    """Profile of the normalised curve w^d = prod (x - b_k)^(e_k).

    For prime d a nonzero exponent is a unit mod d, so the fibre is a single
    totally ramified point; a zero exponent gives d unramified points.
    """
    check_prime(d)
    if exponents.d != d:
        raise InvalidProfile(f"exponent vector is mod {exponents.d}, expected {d}")
    if degree_sum_residue(exponents):
        raise RamifiedAtInfinity("exponent sum must be 0 mod d")
    finite = tuple(((1, d),) if e else ((d, 1),) for e in exponents)
    return RamificationProfile(d, finite, ((d, 1),))


def genus_from_profile(profile: RamificationProfile) -> int:
    """Riemann-Hurwitz for a connected cover of P^1."""
    ramification = sum(c * (e - 1) for fibre in profile.fibres() for c, e in fibre)
    twice_g = 2 - 2 * profile.degree + ramification
    if twice_g < 0 or twice_g % 2:
        raise InvalidProfile(f"Riemann-Hurwitz gives 2g = {twice_g}")
    return twice_g // 2


def support_genus(d: int, support_size: int) -> int:
    """(d-1)(k-2)/2, the genus of a prime-degree cyclic curve with k branch points."""
    return (d - 1) * (support_size - 2) // 2


def base_genus(curve: CyclicCurve) -> int:
    closed = (curve.r - 2) * (curve.d - 1) // 2
    via_profile = genus_from_profile(ramification_profile(curve.d, curve.alpha))
    if closed != via_profile:
        raise InternalInconsistency(f"closed-form genus {closed} != profile genus {via_profile}")
    return closed


def expected_branch_count(g: int, d: int) -> int:
    check_prime(d)
    if g < 0 or (2 * g) % (d - 1):
        raise ValueError(f"no cyclic curve of degree {d} and genus {g} in this family")
    return 2 * g // (d - 1) + 2
