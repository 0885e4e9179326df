"""Naive reference implementations used only by the tests.

These share no code with the package: orders come from repeated
multiplication, primality from dividing by every smaller number, and so on.
"""


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, n))


def primes_below(n):
    return [p for p in range(2, n) if is_prime(p)]


def common_divisor_max(m, n):
    return max(d for d in range(1, max(m, n) + 1) if m % d == 0 and n % d == 0)


def mult_order(a, p):
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def power_exponent(x, q):
    k = 0
    while x % q ** (k + 1) == 0:
        k += 1
    return k


def poly_value(poly, x, p):
    return sum(c * x**i for i, c in enumerate(poly)) % p


def roots(poly, p):
    return [x for x in range(p) if poly_value(poly, x, p) == 0]


def poly_product(p1, p2):
    """Multiply by expanding the product of sums into a dict of exponents."""
    if not p1 or not p2:
        return []
    terms = {}
    for i, a in enumerate(p1):
        for j, b in enumerate(p2):
            terms[i + j] = terms.get(i + j, 0) + a * b
    return [terms.get(k, 0) for k in range(len(p1) + len(p2) - 1)]


def generates_group(g, p):
    return sorted({pow(g, i, p) for i in range(1, p)}) == list(range(1, p))


def coprime_count(n):
    return sum(1 for k in range(1, n + 1) if common_divisor_max(k, n) == 1)
