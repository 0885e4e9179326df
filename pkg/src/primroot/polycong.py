"""Polynomial congruences modulo a prime.

A polynomial is a sequence of integers in ascending order: ``poly[i]`` is the
coefficient of ``x**i`` and the empty sequence is the zero polynomial.
Coefficients stay unreduced integers; reduction mod p happens only when a
polynomial is evaluated.  Nothing here trims trailing zeros implicitly, call
:func:`normalize` for that.
"""

from __future__ import annotations

from collections.abc import Sequence

from .fieldcore import FieldElement, field_div, field_neg, require_prime

IntPolynomial = Sequence[int]


def normalize(poly: IntPolynomial) -> list[int]:
    """Drop trailing zero coefficients (integer zeros, not zeros mod p)."""
    out = list(poly)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(poly: IntPolynomial) -> int:
    """Degree of a nonempty coefficient list, taken literally as ``len - 1``."""
    if not poly:
        raise ValueError("the empty polynomial has no degree")
    return len(poly) - 1


def eval_pfield_polynomial(poly: IntPolynomial, x: FieldElement) -> FieldElement:
    p = x.modulus
    acc = 0
    for c in reversed(poly):
        acc = (acc * x.residue + c) % p
    return FieldElement(acc, p)


def pfield_polynomial_root_p(poly: IntPolynomial, a: FieldElement) -> bool:
    return eval_pfield_polynomial(poly, a).residue == 0


def non_trivial_pfield_polynomial_p(poly: IntPolynomial, p: int) -> bool:
    """Nonempty with a leading coefficient that does not vanish mod ``p``."""
    return len(poly) > 0 and poly[-1] % p != 0


def pfield_polynomial_roots(poly: IntPolynomial, p: int) -> list[int]:
    """All residues in ``[0, p)`` where ``poly`` vanishes, by exhaustive scan."""
    require_prime(p)
    return [x for x in range(p) if pfield_polynomial_root_p(poly, FieldElement(x, p))]


def pfield_polynomial_num_roots(poly: IntPolynomial, p: int) -> int:
    if not non_trivial_pfield_polynomial_p(poly, p):
        raise ValueError("root counting needs a non-trivial polynomial")
    return len(pfield_polynomial_roots(poly, p))


def root_of_linear(poly: IntPolynomial, p: int) -> FieldElement:
    """The unique root ``-a0/a1`` of ``a0 + a1*x`` modulo ``p``."""
    require_prime(p)
    if len(poly) != 2:
        raise ValueError(f"expected a linear polynomial of length 2, got length {len(poly)}")
    if not non_trivial_pfield_polynomial_p(poly, p):
        raise ValueError("leading coefficient vanishes mod p")
    a0, a1 = FieldElement.of(poly[0], p), FieldElement.of(poly[1], p)
    return field_neg(field_div(a0, a1))


def divide_by_x_plus_a(poly: IntPolynomial, a: int) -> tuple[list[int], int]:
    """Synthetic division of ``poly`` by ``x + a`` over the integers.

    Returns ``(quotient, remainder)`` with
    ``poly(x) == (x + a) * quotient(x) + remainder`` exactly.
    """
    if not poly:
        raise ValueError("cannot divide the empty polynomial")
    r = -a
    acc = 0
    descending = []
    for c in reversed(poly):
        acc = acc * r + c
        descending.append(acc)
    remainder = descending.pop()
    return descending[::-1], remainder


def poly_add(p1: IntPolynomial, p2: IntPolynomial) -> list[int]:
    n = max(len(p1), len(p2))
    return [(p1[i] if i < len(p1) else 0) + (p2[i] if i < len(p2) else 0) for i in range(n)]


def poly_mul(p1: IntPolynomial, p2: IntPolynomial) -> list[int]:
    if not p1 or not p2:
        return []
    out = [0] * (len(p1) + len(p2) - 1)
    for i, a in enumerate(p1):
        if a:
            for j, b in enumerate(p2):
                out[i + j] += a * b
    return out


def fermat_poly(n: int) -> list[int]:
    """Coefficients of ``x**n - 1``."""
    if n < 1:
        raise ValueError(f"fermat_poly needs n >= 1, got {n}")
    return [-1] + [0] * (n - 1) + [1]


def geometric_block_poly(c: int, d: int) -> list[int]:
    """Coefficients of ``1 + x**d + x**(2d) + ... + x**((c-1)d)``."""
    if c < 1 or d < 1:
        raise ValueError(f"geometric_block_poly needs c, d >= 1, got c={c}, d={d}")
    out = [0] * ((c - 1) * d + 1)
    out[::d] = [1] * c
    return out
