"""Building units of a prescribed order in (Z/pZ)*."""

from __future__ import annotations

from typing import NamedTuple

from .fieldcore import FieldElement, divides, field_mul, relatively_primep, require_prime
from .order import order


class PrimePowerFactor(NamedTuple):
    q: int
    n: int

    @property
    def value(self) -> int:
        return self.q**self.n


def number_of_powers(x: int, q: int) -> int:
    """Largest ``k`` with ``q**k`` dividing ``x``."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    k = 0
    while x % q == 0:
        x //= q
        k += 1
    return k


def witness_with_order_q_n(q: int, n: int, p: int) -> FieldElement:
    """Least ``x`` in ``[1, p)`` whose order is exactly ``q**n``.

    Found by scanning for ``x**(q**n) == 1`` and ``x**(q**(n-1)) != 1``.
    Such an ``x`` exists whenever ``q**n`` divides ``p - 1``: ``x**(q**n) - 1``
    has ``q**n`` roots mod p and ``x**(q**(n-1)) - 1`` only ``q**(n-1)``.
    """
    require_prime(p)
    require_prime(q)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    qn = q**n
    if not divides(qn, p - 1):
        raise ValueError(f"{q}^{n} does not divide p - 1 = {p - 1}")
    if n == 0:
        return FieldElement(1 % p, p)
    q_prev = qn // q
    for x in range(1, p):
        if pow(x, qn, p) == 1 and pow(x, q_prev, p) != 1:
            return FieldElement(x, p)
    # Unreachable for prime p: the root-count argument guarantees a hit.
    raise ArithmeticError(f"no element of order {q}^{n} found mod {p}")


def product_order_compose(a: FieldElement, b: FieldElement) -> FieldElement:
    """Return ``a * b``, whose order is ``order(a) * order(b)``.

    Raises ValueError unless the two orders are coprime, since otherwise the
    order of the product is not determined by the orders of the factors.
    """
    oa, ob = order(a), order(b)
    if not relatively_primep(oa, ob):
        raise ValueError(f"orders {oa} and {ob} are not coprime")
    return field_mul(a, b)
