"""Multiplicative order of nonzero residues, defined through power traces."""

from __future__ import annotations

from dataclasses import dataclass

from .fieldcore import FieldElement, require_prime


@dataclass(frozen=True)
class PowerTrace:
    """The powers ``a, a**2, ..., a**k`` of ``base``, stopping at the first 1."""

    base: FieldElement
    entries: tuple[FieldElement, ...]

    def __len__(self):
        return len(self.entries)

    def residues(self) -> list[int]:
        return [e.residue for e in self.entries]


def _require_unit(a: FieldElement) -> int:
    p = require_prime(a.modulus)
    if a.residue == 0:
        raise ValueError("0 is not in the multiplicative group")
    return p


def all_powers(a: FieldElement) -> PowerTrace:
    """Successive powers of ``a`` up to and including the first 1.

    Never longer than ``p - 1`` entries: Fermat's little theorem guarantees
    ``a**(p-1) == 1``, so the loop below always terminates inside that cap.
    """
    p = _require_unit(a)
    entries = []
    x = a.residue
    for _ in range(p - 1):
        entries.append(FieldElement(x, p))
        if x == 1:
            break
        x = x * a.residue % p
    return PowerTrace(a, tuple(entries))


def order(a: FieldElement) -> int:
    return len(all_powers(a))


def exists_smaller_power_eq_1(a: FieldElement, n: int) -> bool:
    """True iff ``a**m == 1`` for some ``1 <= m < n``."""
    p = _require_unit(a)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x = 1
    for _ in range(1, n):
        x = x * a.residue % p
        if x == 1:
            return True
    return False


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def order_fast(a: FieldElement) -> int:
    """Order of ``a`` as the least divisor ``d`` of ``p - 1`` with ``a**d == 1``.

    Agrees with :func:`order` for every unit; it only avoids building the trace.
    """
    p = _require_unit(a)
    for d in _divisors(p - 1):
        if pow(a.residue, d, p) == 1:
            return d
    raise ArithmeticError(f"no divisor of {p - 1} annihilates {a}")
