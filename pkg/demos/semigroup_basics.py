#!/usr/bin/env python3
"""Tour of the numerical-semigroup engine.

Builds a few semigroups, prints their Apéry sets, and reads every classical
invariant off the Apéry table: Frobenius number, genus, pseudo-Frobenius
numbers, type, and the minimal generating set.
"""

from tupletfrob import make_semigroup

print("=== membership and the Apéry table ===")
s = make_semigroup([11, 13, 17])
print("S = <11,13,17>, multiplicity", s.multiplicity)
ap = s.apery_set()
print("Ap(S,11) =", list(ap.elements))
print("each entry is the least member of its residue class mod 11:")
for i, w in enumerate(ap.table):
    print(f"  class {i:2d}: {w}")

print()
print("membership reads off the table: x is a member iff x >= w(x mod 11)")
for x in (52, 53, 54, 200):
    print(f"  {x} in S? {s.contains(x)}")

print()
print("=== the classical invariants ===")
for gens in ([11, 13, 17], [7, 11, 13], [5, 7, 11, 13], [6, 10, 15]):
    s = make_semigroup(gens)
    inv = s.invariants()
    print(f"S = <{','.join(map(str, gens))}>: F = {inv.frobenius}, g = {inv.genus}, "
          f"PF = {list(inv.pseudo_frobenius)}, t = {inv.type_}, "
          f"msg = {list(inv.minimal_generators)}")

print()
print("=== redundant generators collapse ===")
for gens in ([1, 3, 7, 9], [3, 5, 9, 11]):
    s = make_semigroup(gens)
    print(f"<{','.join(map(str, gens))}> is minimally generated by "
          f"{list(s.minimal_generators())}")
print("(9 = 3+3+3 and 11 = 3+3+5, so only 3 and 5 survive in the second case)")

print()
print("=== two-generator sanity: F(a,b) = ab - a - b ===")
for a, b in ((3, 5), (5, 7), (11, 13)):
    print(f"  F(<{a},{b}>) = {make_semigroup([a, b]).frobenius_number()} "
          f"= {a}*{b} - {a} - {b}")
