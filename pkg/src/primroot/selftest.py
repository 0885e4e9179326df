"""Exhaustive and randomized sweeps of the library's invariants.

Each check takes a prime bound and returns True when the property held for
every case it examined.  ``run_all`` is what ``primroot selftest`` prints.
"""

from __future__ import annotations

import random
from collections.abc import Callable

from .fieldcore import (
    FieldElement,
    divides,
    field_inv,
    field_mul,
    field_pow,
    gcd,
    least_divisor,
    primep,
)
from .order import exists_smaller_power_eq_1, order, order_fast
from .orderconstruct import number_of_powers, witness_with_order_q_n
from .polycong import (
    divide_by_x_plus_a,
    eval_pfield_polynomial,
    fermat_poly,
    geometric_block_poly,
    non_trivial_pfield_polynomial_p,
    pfield_polynomial_num_roots,
    pfield_polynomial_root_p,
    poly_add,
    poly_mul,
)
from .proot import (
    count_primitive_roots,
    is_primitive_root,
    primitive_root,
    primitive_root_aux,
    totient,
)

SEED = 20261018


def primes_upto(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if primep(p)]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_powers_dividing(n: int) -> list[tuple[int, int]]:
    """Every ``(q, e)`` with ``q`` prime, ``e >= 1`` and ``q**e | n``."""
    out = []
    for q in range(2, n + 1):
        if primep(q):
            for e in range(1, number_of_powers(n, q) + 1):
                out.append((q, e))
    return out


def unit_orders(p: int) -> list[int]:
    """``orders[a]`` for ``1 <= a < p``, via the trace definition; index 0 unused."""
    return [0] + [order(FieldElement(a, p)) for a in range(1, p)]


def check_fermat_little(bound: int) -> bool:
    return all(
        field_pow(FieldElement(a, p), p - 1) == 1 for p in primes_upto(bound) for a in range(1, p)
    )


def check_inverse(bound: int) -> bool:
    return all(
        field_mul(FieldElement(a, p), field_inv(FieldElement(a, p))) == 1
        for p in primes_upto(bound)
        for a in range(1, p)
    )


def check_integral_domain(bound: int) -> bool:
    return all(
        (a * b) % p != 0 for p in primes_upto(bound) for a in range(1, p) for b in range(1, p)
    )


def check_least_divisor(bound: int) -> bool:
    limit = max(bound, 2) * 10
    for k in range(2, limit + 1):
        d = least_divisor(2, k)
        if k % d or not primep(d):
            return False
    return True


def check_gcd(bound: int) -> bool:
    rng = random.Random(SEED)
    for _ in range(bound * 5):
        m, n = rng.randrange(1, 10**6), rng.randrange(1, 10**6)
        g = gcd(m, n)
        if m % g or n % g:
            return False
        c = rng.randrange(1, 1000)
        if m % c == 0 and n % c == 0 and g % c:
            return False
    return True


def check_order_divides_group(bound: int) -> bool:
    return all(divides(o, p - 1) for p in primes_upto(bound) for o in unit_orders(p)[1:])


def check_order_inverse(bound: int) -> bool:
    for p in primes_upto(bound):
        for a in range(1, p):
            x = FieldElement(a, p)
            if order(field_inv(x)) != order(x):
                return False
    return True


def check_smallest_power_is_order(bound: int) -> bool:
    for p in primes_upto(bound):
        for a in range(1, p):
            x = FieldElement(a, p)
            for n in range(1, p):
                if field_pow(x, n) == 1 and not exists_smaller_power_eq_1(x, n):
                    if order(x) != n:
                        return False
    return True


def check_trace_periodicity(bound: int) -> bool:
    for p in primes_upto(min(bound, 61)):
        for a in range(1, p):
            x = FieldElement(a, p)
            o = order(x)
            for t in range(4):
                for r in range(o):
                    if field_pow(x, o * t + r) != field_pow(x, r):
                        return False
    return True


def check_order_fast(bound: int) -> bool:
    return all(
        order_fast(FieldElement(a, p)) == order(FieldElement(a, p))
        for p in primes_upto(bound)
        for a in range(1, p)
    )


def check_fermat_poly_roots(bound: int) -> bool:
    return all(
        pfield_polynomial_num_roots(fermat_poly(d), p) == d
        for p in primes_upto(bound)
        for d in divisors(p - 1)
    )


def check_eq1_identity(bound: int) -> bool:
    return all(
        poly_mul(fermat_poly(d), geometric_block_poly(c, d)) == fermat_poly(c * d)
        for c in range(1, 13)
        for d in range(1, 13)
    )


def check_degree_bound(bound: int) -> bool:
    rng = random.Random(SEED)
    primes = primes_upto(min(bound, 97))
    for _ in range(1000):
        p = rng.choice(primes)
        deg = rng.randint(1, 8)
        poly = [rng.randrange(-p, p) for _ in range(deg)] + [rng.randrange(1, p)]
        if not non_trivial_pfield_polynomial_p(poly, p):
            return False
        if pfield_polynomial_num_roots(poly, p) > deg:
            return False
    return True


def check_root_of_product(bound: int) -> bool:
    rng = random.Random(SEED)
    primes = primes_upto(min(bound, 31))
    for _ in range(200):
        p = rng.choice(primes)
        p1 = [rng.randrange(-p, p) for _ in range(rng.randint(1, 4))] + [rng.randrange(1, p)]
        p2 = [rng.randrange(-p, p) for _ in range(rng.randint(1, 4))] + [rng.randrange(1, p)]
        prod = poly_mul(p1, p2)
        for x in range(p):
            fx = FieldElement(x, p)
            if pfield_polynomial_root_p(prod, fx) and not (
                pfield_polynomial_root_p(p1, fx) or pfield_polynomial_root_p(p2, fx)
            ):
                return False
        if pfield_polynomial_num_roots(prod, p) > (
            pfield_polynomial_num_roots(p1, p) + pfield_polynomial_num_roots(p2, p)
        ):
            return False
    return True


def check_synthetic_division(bound: int) -> bool:
    rng = random.Random(SEED)
    primes = primes_upto(min(bound, 31))
    for _ in range(1000):
        poly = [rng.randint(-50, 50) for _ in range(rng.randint(1, 9))]
        a = rng.randint(-20, 20)
        quotient, remainder = divide_by_x_plus_a(poly, a)
        rebuilt = poly_add(poly_mul([a, 1], quotient), [remainder])
        if rebuilt[: len(poly)] != list(poly) or any(rebuilt[len(poly):]):
            return False
        # Factor through a root that is forced into place mod p.
        p = rng.choice(primes)
        r = rng.randrange(p)
        shifted = list(poly)
        shifted[0] -= eval_pfield_polynomial(poly, FieldElement(r, p)).residue
        quotient, _ = divide_by_x_plus_a(shifted, -r)
        for x in range(p):
            fx = FieldElement(x, p)
            lhs = eval_pfield_polynomial(shifted, fx)
            rhs = field_mul(eval_pfield_polynomial([-r, 1], fx), eval_pfield_polynomial(quotient, fx))
            if lhs != rhs:
                return False
    return True


def check_witness(bound: int) -> bool:
    for p in primes_upto(bound):
        orders = unit_orders(p)
        for q, e in prime_powers_dividing(p - 1):
            w = witness_with_order_q_n(q, e, p)
            if orders[w.residue] != q**e:
                return False
            if any(orders[x] == q**e for x in range(1, w.residue)):
                return False
    return True


def check_prime_power_lemma(bound: int) -> bool:
    for p in primes_upto(bound):
        for q, e in prime_powers_dividing(p - 1):
            for a in range(1, p):
                if pow(a, q**e, p) == 1 and pow(a, q ** (e - 1), p) != 1:
                    if order(FieldElement(a, p)) != q**e:
                        return False
    return True


def check_product_order(bound: int) -> bool:
    for p in primes_upto(bound):
        orders = unit_orders(p)
        for a in range(1, p):
            for b in range(1, p):
                if gcd(orders[a], orders[b]) == 1 and orders[a * b % p] != orders[a] * orders[b]:
                    return False
    return True


def check_aux_theorem(bound: int) -> bool:
    return all(
        order(primitive_root_aux(k, p)) == k for p in primes_upto(bound) for k in divisors(p - 1)
    )


def check_main_theorem(bound: int) -> bool:
    for p in primes_upto(bound):
        g = primitive_root(p)
        if order(g) != p - 1 or not is_primitive_root(g, p):
            return False
    return True


def check_oracle_agreement(bound: int) -> bool:
    for p in primes_upto(bound):
        orders = unit_orders(p)
        for g in range(p):
            if is_primitive_root(g, p) != (g != 0 and orders[g] == p - 1):
                return False
    return True


def check_totient_count(bound: int) -> bool:
    return all(count_primitive_roots(p) == totient(p - 1) for p in primes_upto(bound))


PROPERTIES: dict[str, Callable[[int], bool]] = {
    "fermat-little-theorem": check_fermat_little,
    "inverse": check_inverse,
    "integral-domain": check_integral_domain,
    "least-divisor-prime": check_least_divisor,
    "gcd": check_gcd,
    "order-divides-p-1": check_order_divides_group,
    "order-inv": check_order_inverse,
    "smallest-pow-eq-1-is-order": check_smallest_power_is_order,
    "trace-periodicity": check_trace_periodicity,
    "order-fast-agrees": check_order_fast,
    "fermat-poly-divisor-roots": check_fermat_poly_roots,
    "fermat-poly-factorization": check_eq1_identity,
    "num-roots-degree-bound": check_degree_bound,
    "root-of-product": check_root_of_product,
    "synthetic-division": check_synthetic_division,
    "witness-order": check_witness,
    "order-is-prime-power-lemma": check_prime_power_lemma,
    "construct-product-order": check_product_order,
    "primitive-root-aux": check_aux_theorem,
    "primitive-root": check_main_theorem,
    "oracle-agreement": check_oracle_agreement,
    "totient-count": check_totient_count,
}


def run_all(bound: int) -> dict[str, bool]:
    return {name: check(bound) for name, check in PROPERTIES.items()}
