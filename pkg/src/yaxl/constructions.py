"""Example factories: Clifford semigroups as strong semilattices of
groups, the quasi quandles they carry, weak braces and their solutions,
constant shelves, and rack-cocycle extensions.

Also hosts the small fixture generators used throughout the test suite:
all strong semilattice systems over semilattices with at most three
points and groups of order at most four, and all skew braces of order
at most four (built as pairs of labeled group tables validated by brute
force).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .fnmap import FnMap, compose, is_completely_regular, relative_inverse
from .shelves import Magma, QuasiRack, is_quasi_quandle, quasi_rack_structure, validate_table
from .solutions import Solution


# ---------------------------------------------------------------------------
# semilattices


def is_semilattice(meet) -> bool:
    """Idempotent + commutative + associative, exhaustively."""
    m = len(meet)
    for a in range(m):
        if meet[a][a] != a:
            return False
        for b in range(m):
            if meet[a][b] != meet[b][a]:
                return False
            for c in range(m):
                if meet[meet[a][b]][c] != meet[a][meet[b][c]]:
                    return False
    return True


def semilattice_geq(meet, a: int, b: int) -> bool:
    return meet[a][b] == b


def semilattices_upto(max_points: int = 3):
    """Meet tables of all semilattices with <= max_points elements, up to
    isomorphism (hand-listed; there are few of them)."""
    tables = [((0,),)]
    if max_points >= 2:
        tables.append(tuple(tuple(min(i, j) for j in range(2)) for i in range(2)))
    if max_points >= 3:
        tables.append(tuple(tuple(min(i, j) for j in range(3)) for i in range(3)))
        # one bottom below two incomparable points
        tables.append(((0, 0, 0), (0, 1, 0), (0, 0, 2)))
    if max_points >= 4:
        raise ValueError("only semilattices with <= 3 points are generated")
    return tables


# ---------------------------------------------------------------------------
# groups


def cyclic_group(n: int) -> Magma:
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def klein_group() -> Magma:
    return tuple(tuple(i ^ j for j in range(4)) for i in range(4))


def groups_of_order(n: int):
    if n == 4:
        return [cyclic_group(4), klein_group()]
    return [cyclic_group(n)]


def is_group(table: Magma) -> bool:
    n = len(table)
    for a in range(n):
        if len(set(table[a])) != n or len({table[x][a] for x in range(n)}) != n:
            return False
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    return any(all(table[e][x] == x and table[x][e] == x for x in range(n)) for e in range(n))


def group_identity(table: Magma) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x for x in range(n)):
            return e
    raise ValueError("no identity element")


def group_homs(g: Magma, h: Magma) -> list:
    """All group homomorphisms g -> h, by brute force over maps."""
    n, m = len(g), len(h)
    out = []
    for f in itertools.product(range(m), repeat=n):
        if all(f[g[a][b]] == h[f[a]][f[b]] for a in range(n) for b in range(n)):
            out.append(f)
    return out


def labeled_groups(n: int):
    """All group Cayley tables on the carrier {0, ..., n-1}."""
    seen = set()
    for template in groups_of_order(n):
        for perm in itertools.permutations(range(n)):
            table = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    table[perm[x]][perm[y]] = perm[template[x][y]]
            seen.add(tuple(tuple(row) for row in table))
    return sorted(seen)


# ---------------------------------------------------------------------------
# Clifford semigroups


@dataclass(frozen=True)
class CliffordTable:
    mul: Magma
    inv: tuple  # elementwise inverse
    idems: frozenset

    @property
    def n(self) -> int:
        return len(self.mul)


def semigroup_inverses(mul: Magma) -> Optional[tuple]:
    """Per-element unique semigroup inverse, or None if any element has
    none or several."""
    n = len(mul)
    out = []
    for a in range(n):
        cands = [
            x
            for x in range(n)
            if mul[mul[a][x]][a] == a and mul[mul[x][a]][x] == x
        ]
        if len(cands) != 1:
            return None
        out.append(cands[0])
    return tuple(out)


def is_associative(mul: Magma) -> bool:
    n = len(mul)
    return all(
        mul[mul[a][b]][c] == mul[a][mul[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def is_inverse_semigroup(mul: Magma) -> bool:
    return is_associative(mul) and semigroup_inverses(mul) is not None


def is_clifford(mul: Magma) -> bool:
    """Inverse semigroup with all idempotents central."""
    if not is_inverse_semigroup(mul):
        return False
    n = len(mul)
    idems = [e for e in range(n) if mul[e][e] == e]
    return all(mul[e][x] == mul[x][e] for e in idems for x in range(n))


def clifford_table(mul: Magma) -> CliffordTable:
    mul = validate_table(mul)
    if not is_clifford(mul):
        raise ValueError("table is not a Clifford semigroup")
    inv = semigroup_inverses(mul)
    idems = frozenset(e for e in range(len(mul)) if mul[e][e] == e)
    return CliffordTable(mul, inv, idems)


@dataclass(frozen=True)
class StrongSemilatticeSystem:
    """A semilattice, one group per point, and gluing homomorphisms
    phi[(a, b)] for every a >= b (with phi[(a, a)] the identity)."""

    meet: Magma
    groups: tuple
    homs: dict

    @property
    def points(self) -> int:
        return len(self.meet)

    def offsets(self) -> list:
        out, acc = [], 0
        for g in self.groups:
            out.append(acc)
            acc += len(g)
        return out

    @property
    def size(self) -> int:
        return sum(len(g) for g in self.groups)


def validate_system(sys: StrongSemilatticeSystem) -> None:
    if not is_semilattice(sys.meet):
        raise ValueError("meet table is not a semilattice")
    m = sys.points
    for a in range(m):
        if sys.homs[(a, a)] != tuple(range(len(sys.groups[a]))):
            raise ValueError("phi[(a, a)] must be the identity")
        for b in range(m):
            if not semilattice_geq(sys.meet, a, b):
                continue
            f = sys.homs[(a, b)]
            g, h = sys.groups[a], sys.groups[b]
            if any(f[g[x][y]] != h[f[x]][f[y]] for x in range(len(g)) for y in range(len(g))):
                raise ValueError(f"phi[{(a, b)}] is not a group homomorphism")
            for c in range(m):
                if semilattice_geq(sys.meet, b, c):
                    # fibers differ in size, so compose by hand
                    if tuple(sys.homs[(b, c)][v] for v in f) != sys.homs[(a, c)]:
                        raise ValueError("gluing homomorphisms do not compose")


def clifford_from_system(sys: StrongSemilatticeSystem) -> CliffordTable:
    """Disjoint union of the fibers; the product of a in G_a and b in G_b
    lands in the meet fiber via the gluing homomorphisms."""
    validate_system(sys)
    off = sys.offsets()
    n = sys.size
    fiber_of = []
    for alpha, g in enumerate(sys.groups):
        fiber_of.extend([alpha] * len(g))
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        a = fiber_of[x]
        for y in range(n):
            b = fiber_of[y]
            c = sys.meet[a][b]
            xa = sys.homs[(a, c)][x - off[a]]
            yb = sys.homs[(b, c)][y - off[b]]
            mul[x][y] = off[c] + sys.groups[c][xa][yb]
    return clifford_table(tuple(tuple(row) for row in mul))


def all_systems(max_size: int = 5, max_points: int = 3) -> Iterator[StrongSemilatticeSystem]:
    """Every strong semilattice system with the given size bounds.

    Semilattices up to isomorphism, group fibers of total order at most
    max_size, and every compatible family of gluing homomorphisms.
    """
    for meet in semilattices_upto(max_points):
        m = len(meet)
        down_pairs = [
            (a, b)
            for a in range(m)
            for b in range(m)
            if a != b and semilattice_geq(meet, a, b)
        ]
        for orders in itertools.product(range(1, max_size + 1), repeat=m):
            if sum(orders) > max_size:
                continue
            for groups in itertools.product(*(groups_of_order(k) for k in orders)):
                choices = [group_homs(groups[a], groups[b]) for a, b in down_pairs]
                for combo in itertools.product(*choices):
                    homs = {(a, a): tuple(range(len(groups[a]))) for a in range(m)}
                    homs.update(dict(zip(down_pairs, combo)))
                    ok = True
                    for a, b in down_pairs:
                        for c in range(m):
                            if (
                                c != b
                                and semilattice_geq(meet, b, c)
                                and tuple(homs[(b, c)][v] for v in homs[(a, b)])
                                != homs[(a, c)]
                            ):
                                ok = False
                    if ok:
                        yield StrongSemilatticeSystem(meet, groups, homs)


# ---------------------------------------------------------------------------
# shelves and quasi quandles from Clifford semigroups


def conjugation_quasi_quandle(c: CliffordTable) -> Magma:
    """x |> y := x^- y x; a quasi quandle for every Clifford semigroup."""
    mul, inv = c.mul, c.inv
    table = tuple(
        tuple(mul[mul[inv[x]][y]][x] for y in range(c.n)) for x in range(c.n)
    )
    q = quasi_rack_structure(table)
    assert q is not None and is_quasi_quandle(q)
    return table


def core_quasi_quandle(c: CliffordTable) -> Magma:
    """x |> y := x y^- x; a quasi quandle for every Clifford semigroup."""
    mul, inv = c.mul, c.inv
    table = tuple(
        tuple(mul[mul[x][inv[y]]][x] for y in range(c.n)) for x in range(c.n)
    )
    q = quasi_rack_structure(table)
    assert q is not None and is_quasi_quandle(q)
    return table


def deformed_quasi_rack(c: CliffordTable, e: int) -> Magma:
    """x |> y := x^- y x e for an idempotent e; a quasi rack whose
    translation inverses are the translations of the inverses."""
    if e not in c.idems:
        raise ValueError(f"{e} is not an idempotent")
    mul, inv = c.mul, c.inv
    table = tuple(
        tuple(mul[mul[mul[inv[x]][y]][x]][e] for y in range(c.n)) for x in range(c.n)
    )
    q = quasi_rack_structure(table)
    assert q is not None
    assert all(q.L_inv[x] == table[inv[x]] for x in range(c.n))
    return table


def constant_shelf(n: int, f: FnMap) -> Magma:
    """x |> y := f(y) with f idempotent; always a quasi rack."""
    if compose(f, f) != f:
        raise ValueError("map must be idempotent")
    if len(f) != n:
        raise ValueError("size mismatch")
    table = tuple(tuple(f) for _ in range(n))
    assert quasi_rack_structure(table) is not None
    return table


def cocycle_extension(rack: Magma, s_size: int, alpha) -> Magma:
    """Quasi rack on X x S with L_{(i,s)}(j,t) = (i |> j, alpha[i][j][s](t)).

    ``alpha[i][j][s]`` is a transformation of the fiber carrier.  The
    three admissibility conditions are validated individually; the
    element (i, s) is encoded as i * s_size + s.
    """
    rack = validate_table(rack)
    n = len(rack)
    rng_x, rng_s = range(n), range(s_size)
    for i in rng_x:
        for j in rng_x:
            for s in rng_s:
                if not is_completely_regular(alpha[i][j][s]):
                    raise ValueError(
                        f"condition 1 fails: alpha[{i}][{j}]({s}) has no relative inverse"
                    )
    for i in rng_x:
        for j in rng_x:
            for k in rng_x:
                for s in rng_s:
                    for t in rng_s:
                        lhs = compose(alpha[i][rack[j][k]][s], alpha[j][k][t])
                        rhs = compose(
                            alpha[rack[i][j]][rack[i][k]][alpha[i][j][s][t]],
                            alpha[i][k][s],
                        )
                        if lhs != rhs:
                            raise ValueError(
                                f"condition 2 fails at i={i} j={j} k={k} s={s} t={t}"
                            )
    zeros = {
        (i, j, s): relative_inverse(alpha[i][j][s]).zero
        for i in rng_x
        for j in rng_x
        for s in rng_s
    }
    for i in rng_x:
        for j in rng_x:
            for k in rng_x:
                for s in rng_s:
                    for t in rng_s:
                        for u in rng_s:
                            lhs = alpha[j][k][t][zeros[(i, k, s)][u]]
                            rhs = zeros[(i, rack[j][k], s)][alpha[j][k][t][u]]
                            if lhs != rhs:
                                raise ValueError(
                                    f"condition 3 fails at i={i} j={j} k={k} s={s} t={t} u={u}"
                                )
    size = n * s_size
    table = [[0] * size for _ in range(size)]
    for i in rng_x:
        for s in rng_s:
            row = table[i * s_size + s]
            for j in rng_x:
                a = alpha[i][j][s]
                for t in rng_s:
                    row[j * s_size + t] = rack[i][j] * s_size + a[t]
    table = tuple(tuple(row) for row in table)
    q = quasi_rack_structure(table)
    assert q is not None
    for i in rng_x:
        for s in rng_s:
            z = q.L_zero[i * s_size + s]
            for j in rng_x:
                for t in rng_s:
                    assert z[j * s_size + t] == j * s_size + zeros[(i, j, s)][t]
    return table


# ---------------------------------------------------------------------------
# weak braces


@dataclass(frozen=True)
class WeakBrace:
    add: Magma
    mul: Magma
    add_inv: tuple
    mul_inv: tuple

    @property
    def n(self) -> int:
        return len(self.add)


def weak_brace_validate(add: Magma, mul: Magma) -> dict:
    """Full exhaustive law check; the report itemizes every failure."""
    add, mul = validate_table(add), validate_table(mul)
    n = len(add)
    report = {
        "add_clifford": is_clifford(add),
        "mul_inverse_semigroup": is_inverse_semigroup(mul),
        "distributivity_failures": [],
        "inverse_compat_failures": [],
    }
    add_inv = semigroup_inverses(add)
    mul_inv = semigroup_inverses(mul)
    if add_inv is None or mul_inv is None:
        report["valid"] = False
        return report
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = mul[x][add[y][z]]
                rhs = add[add[mul[x][y]][add_inv[x]]][mul[x][z]]
                if lhs != rhs:
                    report["distributivity_failures"].append((x, y, z))
        if mul[x][mul_inv[x]] != add[add_inv[x]][x]:
            report["inverse_compat_failures"].append(x)
    report["valid"] = (
        report["add_clifford"]
        and report["mul_inverse_semigroup"]
        and not report["distributivity_failures"]
        and not report["inverse_compat_failures"]
    )
    return report


def make_weak_brace(add: Magma, mul: Magma) -> WeakBrace:
    report = weak_brace_validate(add, mul)
    if not report["valid"]:
        raise ValueError(f"not a weak brace: {report}")
    return WeakBrace(
        validate_table(add),
        validate_table(mul),
        semigroup_inverses(add),
        semigroup_inverses(mul),
    )


def is_dual(b: WeakBrace) -> bool:
    return is_clifford(b.mul)


def trivial_brace(c: CliffordTable) -> WeakBrace:
    """x + y := x o y."""
    return make_weak_brace(c.mul, c.mul)


def opposite_trivial_brace(c: CliffordTable) -> WeakBrace:
    """x + y := y o x."""
    add = tuple(tuple(c.mul[y][x] for y in range(c.n)) for x in range(c.n))
    return make_weak_brace(add, c.mul)


def opposite_brace(b: WeakBrace) -> WeakBrace:
    add = tuple(tuple(b.add[y][x] for y in range(b.n)) for x in range(b.n))
    return WeakBrace(add, b.mul, b.add_inv, b.mul_inv)


def brace_lambda(b: WeakBrace) -> tuple:
    """lambda_x(y) = -x + x o y."""
    return tuple(
        tuple(b.add[b.add_inv[x]][b.mul[x][y]] for y in range(b.n)) for x in range(b.n)
    )


def brace_rho(b: WeakBrace) -> tuple:
    """rho_y(x) = (lambda_x(y))^- o x o y, rows indexed by the actor y."""
    lam = brace_lambda(b)
    return tuple(
        tuple(b.mul[b.mul[b.mul_inv[lam[x][y]]][x]][y] for x in range(b.n))
        for y in range(b.n)
    )


def brace_solution(b: WeakBrace) -> Solution:
    return Solution(lam=brace_lambda(b), rho=brace_rho(b))


def lambda_rho_clifford_check(b: WeakBrace) -> bool:
    """{lambda_x} and {rho_x} are Clifford subsemigroups of the map monoid:
    closed under composition, members completely regular, idempotent
    members central within the set."""
    lam = brace_lambda(b)
    rho = brace_rho(b)
    for family in (set(lam), set(rho)):
        products = {compose(f, g) for f in family for g in family}
        if not products <= family:
            return False
        if not all(is_completely_regular(f) for f in family):
            return False
        idems = [f for f in family if compose(f, f) == f]
        if not all(compose(e, f) == compose(f, e) for e in idems for f in family):
            return False
    return True


def brace_structure_shelf_check(b: WeakBrace) -> bool:
    """The structure magma of the brace solution must be x |> y = -x+y+x,
    the conjugation quasi quandle of the additive semigroup."""
    from .solutions import quasi_left_nondeg, structure_magma

    s = brace_solution(b)
    d = quasi_left_nondeg(s)
    if d is None:
        return False
    expected = tuple(
        tuple(b.add[b.add[b.add_inv[x]][y]][x] for y in range(b.n)) for x in range(b.n)
    )
    return structure_magma(s, d) == expected


def all_skew_braces(n: int) -> list:
    """Every pair of labeled group tables on {0..n-1} forming a weak brace
    (necessarily a skew brace: a single idempotent)."""
    braces = []
    tables = labeled_groups(n)
    for add in tables:
        for mul in tables:
            if weak_brace_validate(add, mul)["valid"]:
                braces.append(WeakBrace(add, mul, semigroup_inverses(add), semigroup_inverses(mul)))
    return braces


def dual_weak_brace_fixtures(max_size: int = 5, max_skew_order: int = 4) -> Iterator[WeakBrace]:
    """Trivial and opposite-trivial braces over every generated Clifford
    semigroup, plus all skew braces of small order."""
    seen = set()
    for sys in all_systems(max_size=max_size):
        c = clifford_from_system(sys)
        for b in (trivial_brace(c), opposite_trivial_brace(c)):
            key = (b.add, b.mul)
            if key not in seen:
                seen.add(key)
                yield b
    for n in range(1, max_skew_order + 1):
        for b in all_skew_braces(n):
            key = (b.add, b.mul)
            if key not in seen:
                seen.add(key)
                yield b
