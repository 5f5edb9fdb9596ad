"""Generalized twists: endomorphism families on a shelf that induce
quasi left non-degenerate solutions, and the extraction going back.
"""

from yaxl.shelves import derived_map, quasi_rack_structure
from yaxl.twists import (
    is_g_twist,
    make_twist_family,
    phi_idempotents_central,
    solution_from_twist,
    twist_from_solution,
)

dihedral3 = tuple(tuple((2 * x - y) % 3 for y in range(3)) for x in range(3))
q = quasi_rack_structure(dihedral3)

# the translation family phi_a = L_a is a g-twist on this rack
t = make_twist_family(q.table, q.table)
print("phi_a = L_a is a g-twist:", is_g_twist(t))
s = solution_from_twist(t)
print("its solution r(a, b) pairs:")
for a in range(3):
    print("  ", [s.apply(a, b) for b in range(3)])

# the idempotent family phi_a = L_a^0 reproduces the derived map exactly
t0 = make_twist_family(q.table, q.L_zero)
print()
print("phi_a = L_a^0 is a g-twist with central idempotents:",
      is_g_twist(t0) and phi_idempotents_central(t0))
print("it reproduces the derived map:", solution_from_twist(t0) == derived_map(q))

# and the extraction recovers the family over the structure magma
back = twist_from_solution(derived_map(q))
print("extraction recovers (shelf, phi):",
      back.table == q.table and back.phi == q.L_zero)
