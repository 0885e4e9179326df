"""Orders of units mod a prime, read off their power traces.

Run: python demos/01_orders_and_power_traces.py
"""
from primroot import FieldElement, all_powers, field_inv, order, order_fast

# Powers of 2 mod 5 reach every unit before returning to 1 ...
print("2 mod 5:", all_powers(FieldElement(2, 5)).residues())

# ... but mod 7 they only cycle through 2, 4, 1.
print("2 mod 7:", all_powers(FieldElement(2, 7)).residues())
print("3 mod 7:", all_powers(FieldElement(3, 7)).residues())

# Every order divides p - 1.  Tabulate how many units have each order mod 13.
p = 13
table = {}
for a in range(1, p):
    table.setdefault(order(FieldElement(a, p)), []).append(a)
for k in sorted(table):
    print(f"order {k:2d} mod {p}: {table[k]}")

# An element and its inverse share an order.
x = FieldElement(5, 13)
print(f"order({x.residue}) = {order(x)}, order({field_inv(x).residue}) = {order(field_inv(x))}")

# order_fast only tries divisors of p - 1; it agrees with the trace definition.
big = FieldElement(3, 7919)
print("order of 3 mod 7919:", order(big), order_fast(big))
