"""Elements of prime-power order, and combining coprime orders.

Run: python demos/03_elements_of_given_order.py
"""
from primroot import FieldElement, number_of_powers, order, product_order_compose, witness_with_order_q_n

p = 97  # p - 1 = 2^5 * 3
print("number_of_powers(96, 2) =", number_of_powers(96, 2))

for q, n in [(2, 1), (2, 3), (2, 5), (3, 1)]:
    w = witness_with_order_q_n(q, n, p)
    print(f"least element of order {q}^{n} mod {p}: {w.residue} (order {order(w)})")

a = witness_with_order_q_n(2, 5, p)
b = witness_with_order_q_n(3, 1, p)
g = product_order_compose(a, b)
print(f"{a.residue} * {b.residue} = {g.residue}, order {order(g)}")

# Orders that share a factor say nothing about the product.
try:
    product_order_compose(FieldElement(2, 7), FieldElement(4, 7))
except ValueError as exc:
    print("rejected:", exc)
