"""Constructing primitive roots and checking them against brute force.

Run: python demos/04_primitive_roots.py
"""
from primroot import (
    count_primitive_roots,
    decompose_with_witnesses,
    is_primitive_root,
    order,
    primitive_root,
    totient,
)

for p in (2, 3, 5, 7, 13, 97, 7919):
    r = decompose_with_witnesses(p)
    parts = " * ".join(f"{f.q}^{f.n}" for f in r.factors) or "1"
    print(f"p={p:5d}  p-1 = {parts:16s} witnesses={[w.residue for w in r.witnesses]}  root={r.root.residue}")

# The construction need not give the least primitive root.
p = 7
print("constructed:", primitive_root(p).residue, " all:", [g for g in range(1, p) if is_primitive_root(g, p)])

# There are phi(p - 1) primitive roots.
for p in (11, 13, 101, 211):
    print(f"p={p}: {count_primitive_roots(p)} primitive roots, phi(p-1) = {totient(p - 1)}")

bad = [p for p in range(2, 3000) if all(p % d for d in range(2, p)) and order(primitive_root(p)) != p - 1]
print("primes below 3000 where the construction fails:", bad)
