"""Exact arithmetic in the prime field Z/pZ.

Residues are plain Python ints, so products of two residues are always
exact.  Moduli are nevertheless bounded by ``MODULUS_BOUND`` so results stay
reproducible on fixed-width backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

MODULUS_BOUND = 2**31


def least_divisor(start: int, k: int) -> int:
    """Smallest ``d`` with ``start <= d <= k`` and ``d | k``.

    With ``start == 2`` the result is the least prime factor of ``k``.
    """
    if k < 2:
        raise ValueError(f"least_divisor needs k >= 2, got {k}")
    if start < 2 or start > k:
        raise ValueError(f"start must satisfy 2 <= start <= k, got start={start}, k={k}")
    root = isqrt(k)
    for d in range(start, root + 1):
        if k % d == 0:
            return d
    # Divisors above sqrt(k) are cofactors k // e of small e; the largest
    # admissible e gives the smallest cofactor.
    for e in range(min(root, k // start), 0, -1):
        if k % e == 0:
            return k // e
    return k


@lru_cache(maxsize=4096)
def primep(n: int) -> bool:
    if n < 2:
        return False
    return least_divisor(2, n) == n


def require_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise ValueError naming its smallest factor."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"modulus must be an int, got {type(p).__name__}")
    if p >= MODULUS_BOUND:
        raise ValueError(f"modulus {p} exceeds the bound 2**31")
    if p < 2:
        raise ValueError(f"{p} is not prime")
    if not primep(p):
        raise ValueError(f"{p} is not prime (smallest factor {least_divisor(2, p)})")
    return p


def gcd(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("gcd is defined here for naturals only")
    if m == 0 and n == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while n:
        m, n = n, m % n
    return m


def relatively_primep(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError("relatively_primep needs positive arguments")
    return gcd(m, n) == 1


def divides(d: int, n: int) -> bool:
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    return n % d == 0


@dataclass(frozen=True, eq=False)
class FieldElement:
    """A residue of Z/pZ that remembers its modulus.

    Compares equal to another element with the same residue and modulus, and
    to a plain int equal to the residue.  Primality of the modulus is checked
    by the operations that need it, not here.
    """

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2 or self.modulus >= MODULUS_BOUND:
            raise ValueError(f"modulus {self.modulus} outside [2, 2**31)")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside [0, {self.modulus})")

    @classmethod
    def of(cls, value: int, modulus: int) -> FieldElement:
        """Reduce an arbitrary integer into the field."""
        return cls(value % modulus, modulus)

    def __int__(self):
        return self.residue

    def __index__(self):
        return self.residue

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.residue == other.residue and self.modulus == other.modulus
        if isinstance(other, int):
            return self.residue == other
        return NotImplemented

    def __hash__(self):
        return hash(self.residue)

    def __repr__(self):
        return f"FieldElement({self.residue} mod {self.modulus})"

    def __add__(self, other):
        return field_add(self, other)

    def __neg__(self):
        return field_neg(self)

    def __sub__(self, other):
        return field_add(self, field_neg(other))

    def __mul__(self, other):
        return field_mul(self, other)

    def __truediv__(self, other):
        return field_div(self, other)

    def __pow__(self, e):
        return field_pow(self, e)


def _same_modulus(a: FieldElement, b: FieldElement) -> int:
    if a.modulus != b.modulus:
        raise ValueError(f"mismatched moduli {a.modulus} and {b.modulus}")
    return a.modulus


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    p = _same_modulus(a, b)
    return FieldElement((a.residue + b.residue) % p, p)


def field_neg(a: FieldElement) -> FieldElement:
    return FieldElement((a.modulus - a.residue) % a.modulus, a.modulus)


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    p = _same_modulus(a, b)
    return FieldElement((a.residue * b.residue) % p, p)


def field_pow(a: FieldElement, e: int) -> FieldElement:
    """``a**e`` by square-and-multiply; ``field_pow(0, 0)`` is 1."""
    if e < 0:
        raise ValueError("negative exponents are not supported; use field_inv")
    p = a.modulus
    result, base = 1 % p, a.residue
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return FieldElement(result, p)


def field_inv(a: FieldElement) -> FieldElement:
    # Fermat: a^(p-2) is the inverse when p is prime.
    if a.residue == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return field_pow(a, a.modulus - 2)


def field_div(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_modulus(a, b)
    if b.residue == 0:
        raise ZeroDivisionError("division by zero in Z/pZ")
    return field_mul(a, field_inv(b))
