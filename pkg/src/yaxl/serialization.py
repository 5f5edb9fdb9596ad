"""File formats.

Text formats: a magma is "n" on the first line followed by n rows of n
space-separated 0-based entries (row x is the translation L_x); a
solution is two such blocks (lambda then rho) separated by a blank
line, sharing one leading "n".  JSON formats mirror the in-memory
layout:

  magma      {"n": ..., "table": [[...]]}
  solution   {"n": ..., "lambda": [[...]], "rho": [[...]]}
  twist      {"shelf": <magma>, "phi": [[...], ...]}
  system     {"semilattice": {"m": ..., "meet": [[...]]},
              "groups": [<Cayley>, ...],
              "homs": [{"from": a, "to": b, "map": [...]}, ...]}
  weak brace {"n": ..., "add": [[...]], "mul": [[...]]}
  plonka     like system, with "fibers" of magma payloads

Parsers raise ValueError with a line reference on malformed text.
"""

from __future__ import annotations

import json

from .constructions import StrongSemilatticeSystem, WeakBrace, make_weak_brace
from .plonka import PlonkaSystem
from .shelves import Magma, validate_table
from .solutions import Solution
from .twists import TwistFamily, make_twist_family


def _parse_rows(lines, n, start):
    rows = []
    for k in range(n):
        idx = start + k
        try:
            row = tuple(int(v) for v in lines[idx].split())
        except (IndexError, ValueError):
            raise ValueError(f"line {idx + 1}: expected {n} integers")
        if len(row) != n:
            raise ValueError(f"line {idx + 1}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return tuple(rows)


def magma_to_text(table: Magma) -> str:
    n = len(table)
    return "\n".join([str(n)] + [" ".join(map(str, row)) for row in table]) + "\n"


def magma_from_text(text: str) -> Magma:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    if not lines:
        raise ValueError("line 1: empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError("line 1: expected the carrier size")
    return validate_table(_parse_rows(lines, n, 1))


def magma_to_json(table: Magma) -> str:
    return json.dumps({"n": len(table), "table": [list(r) for r in table]})


def magma_from_json(text: str) -> Magma:
    data = json.loads(text)
    table = validate_table(data["table"])
    if len(table) != data["n"]:
        raise ValueError("declared size does not match the table")
    return table


def solution_to_text(s: Solution) -> str:
    rows = [str(s.n)]
    rows += [" ".join(map(str, r)) for r in s.lam]
    rows.append("")
    rows += [" ".join(map(str, r)) for r in s.rho]
    return "\n".join(rows) + "\n"


def solution_from_text(text: str) -> Solution:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    try:
        n = int(lines[0])
    except (IndexError, ValueError):
        raise ValueError("line 1: expected the carrier size")
    lam = _parse_rows(lines, n, 1)
    if n > 0 and lines[1 + n].strip():
        raise ValueError(f"line {n + 2}: expected a blank separator line")
    rho = _parse_rows(lines, n, 2 + n)
    validate_table(lam), validate_table(rho)
    return Solution(lam=lam, rho=rho)


def solution_to_json(s: Solution) -> str:
    return json.dumps(
        {"n": s.n, "lambda": [list(r) for r in s.lam], "rho": [list(r) for r in s.rho]}
    )


def solution_from_json(text: str) -> Solution:
    data = json.loads(text)
    lam = validate_table(data["lambda"])
    rho = validate_table(data["rho"])
    if len(lam) != data["n"]:
        raise ValueError("declared size does not match the tables")
    return Solution(lam=lam, rho=rho)


def twist_to_json(t: TwistFamily) -> str:
    return json.dumps(
        {"shelf": [list(r) for r in t.table], "phi": [list(p) for p in t.phi]}
    )


def twist_from_json(text: str) -> TwistFamily:
    data = json.loads(text)
    return make_twist_family(data["shelf"], data["phi"])


def system_to_json(sys: StrongSemilatticeSystem) -> str:
    return json.dumps(
        {
            "semilattice": {"m": sys.points, "meet": [list(r) for r in sys.meet]},
            "groups": [[list(r) for r in g] for g in sys.groups],
            "homs": [
                {"from": a, "to": b, "map": list(f)}
                for (a, b), f in sorted(sys.homs.items())
            ],
        }
    )


def system_from_json(text: str) -> StrongSemilatticeSystem:
    data = json.loads(text)
    meet = validate_table(data["semilattice"]["meet"])
    groups = tuple(validate_table(g) for g in data["groups"])
    homs = {(h["from"], h["to"]): tuple(h["map"]) for h in data["homs"]}
    return StrongSemilatticeSystem(meet, groups, homs)


def weak_brace_to_json(b: WeakBrace) -> str:
    return json.dumps(
        {"n": b.n, "add": [list(r) for r in b.add], "mul": [list(r) for r in b.mul]}
    )


def weak_brace_from_json(text: str) -> WeakBrace:
    data = json.loads(text)
    return make_weak_brace(data["add"], data["mul"])


def plonka_to_json(p: PlonkaSystem) -> str:
    return json.dumps(
        {
            "semilattice": {"m": p.points, "meet": [list(r) for r in p.meet]},
            "fibers": [[list(r) for r in f] for f in p.fibers],
            "homs": [
                {"from": a, "to": b, "map": list(f)}
                for (a, b), f in sorted(p.homs.items())
            ],
        }
    )


def plonka_from_json(text: str) -> PlonkaSystem:
    data = json.loads(text)
    meet = validate_table(data["semilattice"]["meet"])
    fibers = tuple(validate_table(f) for f in data["fibers"])
    homs = {(h["from"], h["to"]): tuple(h["map"]) for h in data["homs"]}
    return PlonkaSystem(meet, fibers, homs)
