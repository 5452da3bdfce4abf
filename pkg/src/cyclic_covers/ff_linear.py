"""Exponent vectors over the prime field F_d.

An exponent vector assigns a residue mod ``d`` to each branch point of a
cyclic curve. The vectors whose residues sum to zero form the degree-zero
hyperplane ``V``; the curve's own exponent vector ``alpha`` spans a line in
``V`` and the quotient ``V / <alpha>`` is the group of strongly cyclic
torsion points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import CyclicCoverError, NonPrimeDegree


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def check_prime(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or not is_prime(d):
        raise NonPrimeDegree(f"degree must be a prime integer, got {d!r}")
    return d


@dataclass(frozen=True, order=True)
class ExponentVector:
    """A tuple of residues in ``[0, d)``. Ordering is lexicographic on entries."""

    entries: tuple[int, ...]
    d: int

    def __post_init__(self):
        check_prime(self.d)
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if not 0 <= e < self.d:
                raise ValueError(f"entry {e} outside [0, {self.d})")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def reduce(raw: Sequence[int], d: int) -> ExponentVector:
    """Entrywise residue of an integer list, in ``[0, d)``."""
    return ExponentVector(tuple(int(e) % d for e in raw), d)


def _check_compatible(v1: ExponentVector, v2: ExponentVector) -> None:
    if v1.d != v2.d:
        raise CyclicCoverError(f"modulus mismatch: {v1.d} != {v2.d}")
    if len(v1) != len(v2):
        raise CyclicCoverError(f"length mismatch: {len(v1)} != {len(v2)}")


def linear_combine(c1: int, v1: ExponentVector, c2: int, v2: ExponentVector) -> ExponentVector:
    _check_compatible(v1, v2)
    return reduce([c1 * a + c2 * b for a, b in zip(v1, v2)], v1.d)


def scale(m: int, v: ExponentVector) -> ExponentVector:
    return reduce([m * e for e in v], v.d)


def zero_vector(d: int, r: int) -> ExponentVector:
    return ExponentVector((0,) * r, d)


def degree_sum_residue(v: ExponentVector) -> int:
    """Sum of entries mod d. Zero means v lies on the degree-zero hyperplane."""
    return sum(v.entries) % v.d


def span_membership(v: ExponentVector, alpha: ExponentVector) -> Optional[int]:
    """Return the unique ``m`` with ``v == m * alpha``, or ``None``."""
    _check_compatible(v, alpha)
    if alpha.is_zero():
        raise CyclicCoverError("alpha must be nonzero")
    d = alpha.d
    p = next(k for k, a in enumerate(alpha) if a)
    m = v[p] * pow(alpha[p], -1, d) % d
    if scale(m, alpha) == v:
        return m
    return None


def enumerate_degree_zero(d: int, r: int) -> Iterator[ExponentVector]:
    """All ``d**(r-1)`` hyperplane vectors of length r, in lexicographic order.

    The first r-1 entries run over F_d^(r-1) lexicographically and the last
    entry is forced, so the emitted stream is itself lexicographic.
    """
    check_prime(d)
    if r < 1:
        raise ValueError("r must be at least 1")
    for head in itertools.product(range(d), repeat=r - 1):
        yield ExponentVector(head + ((-sum(head)) % d,), d)


def coset(v: ExponentVector, alpha: ExponentVector) -> list[ExponentVector]:
    _check_compatible(v, alpha)
    return [linear_combine(1, v, m, alpha) for m in range(alpha.d)]


def coset_canonical(v: ExponentVector, alpha: ExponentVector) -> ExponentVector:
    """Lexicographically smallest element of ``v + <alpha>``."""
    if alpha.is_zero():
        raise CyclicCoverError("alpha must be nonzero")
    if degree_sum_residue(v) or degree_sum_residue(alpha):
        raise CyclicCoverError("coset_canonical needs degree-zero vectors")
    return min(coset(v, alpha))
