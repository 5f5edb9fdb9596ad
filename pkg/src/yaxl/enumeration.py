"""Isomorphism-free enumeration of shelves, racks, quandles and quasi
racks by row-backtracking, plus the open-question counterexample
searches.

The backtracker places left-translation rows one at a time.  Candidate
rows are permutations (rack/quandle), completely regular maps (quasi
classes) or arbitrary maps (shelf).  After placing row k every
self-distributivity pair whose three participating rows are now all
placed is checked, as is idempotent-centrality against all placed rows,
so a completed assignment satisfies the class axioms by construction.
Isomorphism rejection keeps only tables equal to their canonical form.

Maps are interned to integer ids with a memoized composition table; on
four points there are only 256 maps, so everything stays in small-int
land during the hot search.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .fnmap import compose, is_completely_regular, relative_inverse
from .shelves import (
    canonical_form,
    check_star,
    check_starstar,
    check_starstarstar,
    derived_map,
    is_rack,
    quasi_rack_structure,
)
from .solutions import (
    Solution,
    _braid_holds,
    check_A,
    check_B,
    check_C,
    is_solution,
    quasi_bijective,
    quasi_left_nondeg,
    structure_magma,
)

CLASSES = ("shelf", "rack", "quandle", "quasi_rack", "quasi_quandle")
FILTERS = ("star", "starstar", "starstarstar", "derived_is_solution")

_QUASI = {"quasi_rack", "quasi_quandle"}


def size_guard() -> int:
    """Largest n enumerable without an explicit override."""
    return max(5, int(os.environ.get("YAXL_MAX_N", "5")))


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    klass: str
    filters: frozenset = field(default_factory=frozenset)
    mode: str = "count"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("carrier size must be positive")
        if self.klass not in CLASSES:
            raise ValueError(f"unknown class {self.klass!r}")
        if not set(self.filters) <= set(FILTERS):
            raise ValueError(f"unknown filters {set(self.filters) - set(FILTERS)}")
        if self.filters and self.klass not in _QUASI:
            raise ValueError("filters only apply to quasi classes")
        if self.mode not in ("count", "stream"):
            raise ValueError(f"unknown mode {self.mode!r}")


class _Universe:
    """Interned transformations of a fixed carrier with memoized composition."""

    def __init__(self, n: int):
        self.n = n
        self.maps: list = []
        self.id_of: dict = {}
        self._comp: dict = {}

    def intern(self, f) -> int:
        i = self.id_of.get(f)
        if i is None:
            i = len(self.maps)
            self.id_of[f] = i
            self.maps.append(f)
        return i

    def comp(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._comp.get(key)
        if r is None:
            g = self.maps[j]
            f = self.maps[i]
            r = self.intern(tuple(f[x] for x in g))
            self._comp[key] = r
        return r


def completely_regular_maps(n: int) -> list:
    return [
        f
        for f in itertools.product(range(n), repeat=n)
        if is_completely_regular(f)
    ]


def _row_candidates(n: int, klass: str) -> list:
    """Per-row candidate lists of (map, zero-or-None); quandle classes pin
    the diagonal."""
    if klass in ("rack", "quandle"):
        base = [(tuple(p), None) for p in itertools.permutations(range(n))]
    elif klass in _QUASI:
        base = [
            (f, relative_inverse(f).zero) for f in completely_regular_maps(n)
        ]
    else:
        base = [(f, None) for f in itertools.product(range(n), repeat=n)]
    if klass in ("quandle", "quasi_quandle"):
        return [[(f, z) for f, z in base if f[x] == x] for x in range(n)]
    return [list(base) for _ in range(n)]


def _search_labeled(n: int, klass: str, first_rows=None):
    """Yield every labeled table of the class, depth-first.

    ``first_rows`` restricts row 0 to the given candidate indices (used
    to split the tree across workers).
    """
    u = _Universe(n)
    quasi = klass in _QUASI
    cands = []
    for per_row in _row_candidates(n, klass):
        cands.append(
            [(u.intern(f), u.intern(z) if z is not None else -1) for f, z in per_row]
        )
    if first_rows is not None:
        cands[0] = [cands[0][i] for i in first_rows]
    maps = u.maps
    comp = u.comp
    rows = [0] * n
    zeros = [0] * n

    def place_ok(k: int) -> bool:
        for x in range(k + 1):
            mx = maps[rows[x]]
            for y in range(k + 1):
                t = mx[y]
                if t > k:
                    continue
                if x != k and y != k and t != k:
                    continue  # already checked when its last row appeared
                if comp(rows[x], rows[y]) != comp(rows[t], rows[x]):
                    return False
        if quasi:
            rk, zk = rows[k], zeros[k]
            if comp(zk, rk) != comp(rk, zk):
                return False
            for x in range(k):
                if comp(zeros[x], rk) != comp(rk, zeros[x]):
                    return False
                if comp(zk, rows[x]) != comp(rows[x], zk):
                    return False
        return True

    def rec(k: int):
        if k == n:
            yield tuple(maps[r] for r in rows)
            return
        for rid, zid in cands[k]:
            rows[k] = rid
            zeros[k] = zid
            if place_ok(k):
                yield from rec(k + 1)

    yield from rec(0)


def _passes_filters(table, filters) -> bool:
    if not filters:
        return True
    q = quasi_rack_structure(table)
    assert q is not None
    if "star" in filters and not check_star(q):
        return False
    if "starstar" in filters and not check_starstar(q):
        return False
    if "starstarstar" in filters and not check_starstarstar(q):
        return False
    if "derived_is_solution" in filters and not is_solution(derived_map(q)):
        return False
    return True


def _worker(args):
    n, klass, chunk = args
    return [
        t
        for t in _search_labeled(n, klass, first_rows=chunk)
        if t == canonical_form(t)
    ]


def enumerate_canonical(
    n: int, klass: str, filters=(), workers: int = 1, override: bool = False
) -> list:
    """Sorted canonical representatives of every isomorphism class."""
    if n > size_guard() and not override:
        raise ValueError(
            f"n={n} exceeds the size guard ({size_guard()}); "
            "raise YAXL_MAX_N or pass the override"
        )
    filters = frozenset(filters)
    if filters and klass not in _QUASI:
        raise ValueError("filters only apply to quasi classes")
    if workers <= 1:
        survivors = [
            t
            for t in _search_labeled(n, klass)
            if t == canonical_form(t)
        ]
    else:
        total = len(_row_candidates(n, klass)[0])
        chunks = [list(range(i, total, workers)) for i in range(workers)]
        chunks = [c for c in chunks if c]
        survivors = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_worker, [(n, klass, c) for c in chunks]):
                survivors.extend(part)
    survivors = [t for t in survivors if _passes_filters(t, filters)]
    survivors.sort()
    return survivors


def enumerate_spec(spec: EnumerationSpec, workers: int = 1, override: bool = False):
    """Count, or the sorted canonical stream, per the spec's mode."""
    out = enumerate_canonical(
        spec.n, spec.klass, spec.filters, workers=workers, override=override
    )
    if spec.mode == "count":
        return len(out)
    return out


def cross_tabulate(n: int, workers: int = 1) -> dict:
    """One enumeration pass over quasi racks, tabulated every way needed.

    Returns the rack / quasi-rack / derived-solution / (*) / (**) / (***)
    counts plus the intersection cells |(*) and (***)|, |(***) minus (**)|
    and |ds minus ((*) or (**))|.
    """
    if n > 4:
        raise ValueError("cross tabulation is defined for n <= 4")
    counts = {
        "n": n,
        "r": 0,
        "qr": 0,
        "ds": 0,
        "qr_star": 0,
        "qr_starstar": 0,
        "qr_starstarstar": 0,
        "star_and_starstarstar": 0,
        "starstarstar_minus_starstar": 0,
        "ds_minus_star_or_starstar": 0,
    }
    for table in enumerate_canonical(n, "quasi_rack", workers=workers):
        q = quasi_rack_structure(table)
        counts["qr"] += 1
        if is_rack(table):
            counts["r"] += 1
        ds = is_solution(derived_map(q))
        st, ss, sss = check_star(q), check_starstar(q), check_starstarstar(q)
        counts["ds"] += ds
        counts["qr_star"] += st
        counts["qr_starstar"] += ss
        counts["qr_starstarstar"] += sss
        counts["star_and_starstarstar"] += st and sss
        counts["starstarstar_minus_starstar"] += sss and not ss
        counts["ds_minus_star_or_starstar"] += ds and not (st or ss)
    return counts


TABLE1_EXPECTED = {
    2: (2, 5, 4, 4, 4, 3),
    3: (6, 31, 20, 17, 19, 13),
    4: (19, 325, 169, 90, 151, 91),
}

TABLE1_COLUMNS = ("r", "qr", "ds", "qr_star", "qr_starstar", "qr_starstarstar")


def table1_row(n: int, workers: int = 1) -> tuple:
    c = cross_tabulate(n, workers=workers)
    return tuple(c[k] for k in TABLE1_COLUMNS)


# ---------------------------------------------------------------------------
# open-question searches


def _quasi_families(n: int, cands):
    """Families (f_0, ..., f_{n-1}) of completely regular maps whose
    idempotents commute with every member, by pruned backtracking.

    ``cands`` is a list of (map, zero) pairs.
    """
    chosen = []

    def rec(k: int):
        if k == n:
            yield tuple(f for f, _ in chosen)
            return
        for f, z in cands:
            ok = True
            for g, w in chosen:
                if compose(z, g) != compose(g, z) or compose(w, f) != compose(f, w):
                    ok = False
                    break
            if ok and compose(z, f) == compose(f, z):
                chosen.append((f, z))
                yield from rec(k + 1)
                chosen.pop()

    yield from rec(0)


def search_question1(n: int, seed=None, samples: int = 10000) -> dict:
    """Hunt for a quasi non-degenerate solution that is not quasi bijective.

    Exhaustive over all lambda/rho table pairs for n <= 3; seeded random
    sampling at n = 4.  The report never asserts an answer: an empty
    candidate list means only that no counterexample was found at this
    size.
    """
    cands = [(f, relative_inverse(f).zero) for f in completely_regular_maps(n)]
    candidates = []
    checked = 0
    if n <= 3:
        exhaustive = True
        lam_families = list(_quasi_families(n, cands))
        for lam in lam_families:
            for rho in lam_families:
                checked += 1
                s = Solution(lam=lam, rho=rho)
                if not _braid_holds(s):
                    continue
                # quasi non-degenerate by construction of the families
                if quasi_bijective(s) is None:
                    candidates.append(s)
    else:
        exhaustive = False
        if seed is None:
            raise ValueError("sampling requires an explicit seed")
        rng = random.Random(seed)
        for _ in range(samples):
            lam = tuple(rng.choice(cands) for _ in range(n))
            rho = tuple(rng.choice(cands) for _ in range(n))
            if any(
                compose(z, g) != compose(g, z)
                for _, z in lam + rho
                for g, _ in lam + rho
            ):
                continue
            checked += 1
            s = Solution(lam=tuple(f for f, _ in lam), rho=tuple(f for f, _ in rho))
            if not _braid_holds(s):
                continue
            if quasi_bijective(s) is None:
                candidates.append(s)
    return {
        "question": "is every quasi non-degenerate solution quasi bijective?",
        "status": (
            "open question: this report records search evidence only and "
            "asserts no answer either way"
        ),
        "n": n,
        "exhaustive": exhaustive,
        "seed": seed,
        "pairs_checked": checked,
        "candidates": [(s.lam, s.rho) for s in candidates],
        "note": (
            "counterexample candidates listed above"
            if candidates
            else f"no counterexample found at size {n}; the question remains open"
        ),
    }


def search_question2(n: int, seed=None, samples: int = 10000) -> dict:
    """Hunt for a quasi bijective, quasi left non-degenerate solution with
    (A), (B), (C) whose structure magma is not a quasi rack.

    Exhaustive for n <= 3 (lambda families pruned to the quasi ones, rho
    tables unrestricted); seeded sampling at n = 4.
    """
    cr = [(f, relative_inverse(f).zero) for f in completely_regular_maps(n)]
    all_maps = list(itertools.product(range(n), repeat=n))
    candidates = []
    checked = 0

    def consider(s: Solution):
        nonlocal checked
        if not _braid_holds(s):
            return
        d = quasi_left_nondeg(s)
        if d is None:
            return
        if not (check_A(s, d) and check_B(s, d) and check_C(s, d)):
            return
        if quasi_bijective(s) is None:
            return
        checked += 1
        if quasi_rack_structure(structure_magma(s, d)) is None:
            candidates.append(s)

    if n <= 3:
        exhaustive = True
        for lam in _quasi_families(n, cr):
            for rho in itertools.product(all_maps, repeat=n):
                consider(Solution(lam=lam, rho=tuple(rho)))
    else:
        exhaustive = False
        if seed is None:
            raise ValueError("sampling requires an explicit seed")
        rng = random.Random(seed)
        for _ in range(samples):
            lam = tuple(f for f, _ in (rng.choice(cr) for _ in range(n)))
            rho = tuple(rng.choice(all_maps) for _ in range(n))
            consider(Solution(lam=lam, rho=rho))
    return {
        "question": (
            "is the structure magma of every quasi bijective, quasi left "
            "non-degenerate solution with (A), (B), (C) a quasi rack?"
        ),
        "status": (
            "open question: this report records search evidence only and "
            "asserts no answer either way"
        ),
        "n": n,
        "exhaustive": exhaustive,
        "seed": seed,
        "solutions_meeting_hypotheses": checked,
        "candidates": [(s.lam, s.rho) for s in candidates],
        "note": (
            "counterexample candidates listed above"
            if candidates
            else f"no counterexample found at size {n}; the question remains open"
        ),
    }
