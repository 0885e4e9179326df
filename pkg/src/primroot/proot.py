"""Constructive primitive roots, plus brute-force oracles to check them."""

from __future__ import annotations

from dataclasses import dataclass

from .fieldcore import FieldElement, divides, field_mul, gcd, least_divisor, require_prime
from .orderconstruct import PrimePowerFactor, number_of_powers, witness_with_order_q_n


@dataclass(frozen=True)
class PeelStep:
    """One level of :func:`primitive_root_aux`: ``k = q**n * rest``."""

    k: int
    q: int
    n: int
    rest: int
    witness: FieldElement


@dataclass(frozen=True)
class PrimitiveRootResult:
    p: int
    root: FieldElement
    factors: tuple[PrimePowerFactor, ...]
    witnesses: tuple[FieldElement, ...]


def primitive_root_aux(k: int, p: int, trace: list[PeelStep] | None = None) -> FieldElement:
    """An element of order exactly ``k``, for ``k`` dividing ``p - 1``.

    Peels the least prime power ``q**n`` off ``k``, takes the least element of
    order ``q**n``, and multiplies it by an element of order ``k / q**n``
    obtained recursively.  The two orders are coprime, so the product has
    order ``k``.  If ``trace`` is given, each peel is appended to it.
    """
    require_prime(p)
    if k < 1 or not divides(k, p - 1):
        raise ValueError(f"k = {k} does not divide p - 1 = {p - 1}")
    if k == 1:
        return FieldElement(1 % p, p)
    q = least_divisor(2, k)
    n = number_of_powers(k, q)
    rest = k // q**n
    witness = witness_with_order_q_n(q, n, p)
    if trace is not None:
        trace.append(PeelStep(k, q, n, rest, witness))
    return field_mul(witness, primitive_root_aux(rest, p, trace))


def primitive_root(p: int) -> FieldElement:
    """A generator of (Z/pZ)*; not in general the least one."""
    return primitive_root_aux(require_prime(p) - 1, p)


def decompose_with_witnesses(p: int) -> PrimitiveRootResult:
    """Run the construction for ``p`` and keep the prime powers and witnesses."""
    require_prime(p)
    steps: list[PeelStep] = []
    root = primitive_root_aux(p - 1, p, steps)
    return PrimitiveRootResult(
        p=p,
        root=root,
        factors=tuple(PrimePowerFactor(s.q, s.n) for s in steps),
        witnesses=tuple(s.witness for s in steps),
    )


def is_primitive_root(g: FieldElement | int, p: int) -> bool:
    """Whether the powers ``g, ..., g**(p-1)`` cover all of ``1..p-1``.

    Deliberately independent of :mod:`primroot.order`.
    """
    require_prime(p)
    if isinstance(g, FieldElement):
        if g.modulus != p:
            raise ValueError(f"element lives mod {g.modulus}, not mod {p}")
        g = g.residue
    g %= p
    seen = set()
    x = 1
    for _ in range(p - 1):
        x = x * g % p
        seen.add(x)
    return seen == set(range(1, p))


def count_primitive_roots(p: int) -> int:
    require_prime(p)
    return sum(is_primitive_root(g, p) for g in range(1, p))


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
