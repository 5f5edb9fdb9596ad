"""Shelves, racks, quandles and quasi racks on a finite carrier.

A binary operation is stored as a tuple of row tuples: ``table[x][y]``
is ``x |> y``, so row ``x`` *is* the left translation ``L_x`` in the
fnmap sense.  A quasi rack is a left shelf whose translations are all
completely regular and whose idempotents ``L_x^0 = L_x L_x^-`` commute
with every translation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .fnmap import FnMap, compose, is_permutation, relative_inverse

Magma = tuple


def validate_table(table) -> Magma:
    """Normalize to a tuple-of-tuples table and check entry ranges."""
    n = len(table)
    rows = tuple(tuple(row) for row in table)
    for row in rows:
        if len(row) != n:
            raise ValueError("operation table must be square")
        if any(not (0 <= v < n) for v in row):
            raise ValueError("table entry out of carrier range")
    return rows


def is_left_shelf(table: Magma) -> bool:
    """x |> (y |> z) == (x |> y) |> (x |> z) for all triples.

    Checked in row form: L_x L_y == L_{x |> y} L_x for all pairs.
    """
    for x, row_x in enumerate(table):
        for y, t in enumerate(row_x):
            if compose(row_x, table[y]) != compose(table[t], row_x):
                return False
    return True


def is_rack(table: Magma) -> bool:
    return all(is_permutation(row) for row in table) and is_left_shelf(table)


def is_quandle(table: Magma) -> bool:
    return is_rack(table) and all(table[x][x] == x for x in range(len(table)))


@dataclass(frozen=True)
class QuasiRack:
    """A left shelf with cached relative inverses of its translations."""

    table: Magma
    L_inv: tuple
    L_zero: tuple

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def L(self) -> Magma:
        return self.table


def quasi_rack_structure(table: Magma) -> Optional[QuasiRack]:
    """Full quasi-rack data for the table, or None if it is not one.

    Requires: left shelf, every L_x completely regular, and every
    idempotent L_x^0 commuting with every translation L_y.
    """
    table = validate_table(table)
    if not is_left_shelf(table):
        return None
    triples = []
    for row in table:
        t = relative_inverse(row)
        if t is None:
            return None
        triples.append(t)
    zeros = tuple(t.zero for t in triples)
    for z in zeros:
        for row in table:
            if compose(z, row) != compose(row, z):
                return None
    return QuasiRack(table, tuple(t.inv for t in triples), zeros)


def is_quasi_quandle(q: QuasiRack) -> bool:
    return all(q.table[x][x] == x for x in range(q.n))


def check_star(q: QuasiRack) -> bool:
    """L^0_{x |> y} == L^0_x L^0_y for all pairs."""
    for x in range(q.n):
        zx = q.L_zero[x]
        for y in range(q.n):
            if q.L_zero[q.table[x][y]] != compose(zx, q.L_zero[y]):
                return False
    return True


def check_starstar(q: QuasiRack) -> bool:
    """L_y(x) == L_{L^0_x(y)}(x) for all pairs."""
    for x in range(q.n):
        zx = q.L_zero[x]
        for y in range(q.n):
            if q.table[y][x] != q.table[zx[y]][x]:
                return False
    return True


def check_starstarstar(q: QuasiRack) -> bool:
    """L^0_x(x) == x for all x."""
    return all(q.L_zero[x][x] == x for x in range(q.n))


def verify_translation_lemma(q: QuasiRack) -> bool:
    """The four unconditional translation identities of a quasi rack:

    1. L^0_x L_y == L^0_x L_{L^0_x(y)}
    2. L_x L_y == L_{L^0_y(x)} L_y
    3. L^0_x L_y == L^0_{L_y(x)} L_y
    4. L^0_x L^0_{L^-_x(y)} == L^0_x L^0_y
    """
    L, Li, Lz = q.table, q.L_inv, q.L_zero
    for x in range(q.n):
        for y in range(q.n):
            if compose(Lz[x], L[y]) != compose(Lz[x], L[Lz[x][y]]):
                return False
            if compose(L[x], L[y]) != compose(L[Lz[y][x]], L[y]):
                return False
            if compose(Lz[x], L[y]) != compose(Lz[L[y][x]], L[y]):
                return False
            if compose(Lz[x], Lz[Li[x][y]]) != compose(Lz[x], Lz[y]):
                return False
    return True


def derived_map(q: QuasiRack):
    """The pair map r(x, y) = (L^0_x(y), L_y(x)) as a Solution.

    No Yang-Baxter claim is made here; classify the result via the
    solutions module (there are quasi racks whose derived map is a
    solution without any of the three sufficient conditions).
    """
    from .solutions import Solution

    lam = q.L_zero
    rho = q.table  # rho_y(x) = L_y(x): row y acts
    return Solution(lam=tuple(lam), rho=tuple(tuple(row) for row in rho))


def derived_relative_inverse(q: QuasiRack):
    """r^-(x, y) = (L^-_x(y), L^0_y(x)); requires L^0_x(x) = x for all x.

    Together with derived_map this satisfies r r^- r = r,
    r^- r r^- = r^- and r r^- = r^- r (asserted by the caller's tests).
    """
    from .solutions import Solution

    if not check_starstarstar(q):
        raise ValueError("relative inverse formula requires L^0_x(x) = x")
    return Solution(lam=tuple(q.L_inv), rho=tuple(q.L_zero))


def opposite_right_quasi_rack(q: QuasiRack) -> Magma:
    """The right quasi rack y <| x := L^-_x(y); requires L^0_x(x) = x."""
    if not check_starstarstar(q):
        raise ValueError("opposite structure requires L^0_x(x) = x")
    n = q.n
    table = tuple(tuple(q.L_inv[x][y] for x in range(n)) for y in range(n))
    # right self-distributivity is guaranteed; keep it checked
    assert all(
        table[table[z][y]][x] == table[table[z][x]][table[y][x]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )
    return table


def relabel(table: Magma, perm: FnMap) -> Magma:
    """Transport the operation along the carrier permutation ``perm``."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[perm[x]][perm[y]] = perm[table[x][y]]
    return tuple(tuple(row) for row in out)


def canonical_form(table: Magma) -> Magma:
    """Lexicographically least relabeling over all carrier permutations.

    Full n!-orbit minimization; guarded to small carriers since the
    target sizes are tiny.
    """
    n = len(table)
    if n > 8:
        raise ValueError("canonical_form is limited to carriers of size <= 8")
    return min(relabel(table, p) for p in itertools.permutations(range(n)))


def are_isomorphic(a: Magma, b: Magma) -> bool:
    if len(a) != len(b):
        return False
    return canonical_form(a) == canonical_form(b)


def endomorphisms(table: Magma) -> Iterable[FnMap]:
    """All magma endomorphisms f: f(x |> y) == f(x) |> f(y)."""
    n = len(table)
    for f in itertools.product(range(n), repeat=n):
        if all(f[table[x][y]] == table[f[x]][f[y]] for x in range(n) for y in range(n)):
            yield f
