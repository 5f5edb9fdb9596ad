"""Quasi racks and their derived Yang-Baxter maps.

A shelf is a set with a left self-distributive operation; a quasi rack
additionally has completely regular left translations whose idempotents
commute with every translation.  Each quasi rack carries a derived map
r(x, y) = (L_x^0(y), L_y(x)) which becomes a Yang-Baxter solution under
any of three translation conditions.
"""

from yaxl.shelves import (
    check_star,
    check_starstar,
    check_starstarstar,
    derived_map,
    derived_relative_inverse,
    quasi_rack_structure,
)
from yaxl.solutions import classify, is_solution, quasi_bijective


def dihedral(n):
    return tuple(tuple((2 * x - y) % n for y in range(n)) for x in range(n))


def show(name, table):
    q = quasi_rack_structure(table)
    print(f"{name}: n = {len(table)}")
    if q is None:
        print("  not a quasi rack")
        return
    print(f"  (*): {check_star(q)}  (**): {check_starstar(q)}  (***): {check_starstarstar(q)}")
    s = derived_map(q)
    ok = is_solution(s)
    print(f"  derived map is a solution: {ok}")
    if ok:
        flags = classify(s)
        print(f"  bijective: {flags.bijective}  nondegenerate: {flags.nondegenerate}")
        inv = quasi_bijective(s)
        print(f"  quasi bijective: {inv is not None}")
        if inv is not None and check_starstarstar(q):
            print(f"  closed-form inverse matches: {inv == derived_relative_inverse(q)}")
    print()


show("dihedral quandle Z5", dihedral(5))
# rows L_0 = L_1 = const 0 and L_2 = id: satisfies (*) only
show("a 3-element quasi rack with (*) only", ((0, 0, 0), (0, 0, 0), (0, 1, 2)))
# satisfies (***) (hence (**)) but not (*)
show("a 3-element quasi rack with (***) only", ((0, 0, 2), (0, 1, 2), (0, 1, 2)))
