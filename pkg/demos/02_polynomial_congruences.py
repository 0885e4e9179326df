"""Roots of polynomial congruences and the factorization of x^n - 1.

Run: python demos/02_polynomial_congruences.py
"""
from primroot import (
    FieldElement,
    divide_by_x_plus_a,
    eval_pfield_polynomial,
    fermat_poly,
    geometric_block_poly,
    pfield_polynomial_num_roots,
    pfield_polynomial_roots,
    poly_mul,
    root_of_linear,
)

# x^2 + 2 has no real roots, but it does mod 11.
poly = [2, 0, 1]
print("roots of x^2+2 mod 11:", pfield_polynomial_roots(poly, 11))

# Dividing by (x - 3) leaves remainder 11, which vanishes mod 11.
quotient, remainder = divide_by_x_plus_a(poly, -3)
print("x^2+2 = (x-3)*", quotient, "+", remainder)
for x in range(11):
    fx = FieldElement(x, 11)
    lhs = eval_pfield_polynomial(poly, fx)
    rhs = eval_pfield_polynomial([-3, 1], fx) * eval_pfield_polynomial(quotient, fx)
    assert lhs == rhs

# Linear congruences have exactly one root.
print("root of 2x+1 mod 5:", root_of_linear([1, 2], 5).residue)

# x^(cd) - 1 = (x^d - 1)(1 + x^d + ... + x^((c-1)d)) exactly over the integers.
c, d = 4, 3
print(poly_mul(fermat_poly(d), geometric_block_poly(c, d)) == fermat_poly(c * d))

# So x^d - 1 has d roots mod p for each divisor d of p - 1.
p = 31
for d in (1, 2, 3, 5, 6, 10, 15, 30):
    print(f"x^{d} - 1 mod {p}: {pfield_polynomial_num_roots(fermat_poly(d), p)} roots")
