"""Command-line front end.

Exit codes: 0 success, 1 a checked property is false, 2 bad input,
3 internal assertion failure (a theorem guarantee was violated — should
never happen).

Artifacts written by a command carry a provenance record: the SHA-256 of
the input file, the tool version, and the seed for randomized commands.
For text formats it is a leading '#' comment (parsers skip those); for
JSON it is a "_provenance" key (parsers ignore extra keys).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from . import constructions, enumeration, plonka, serialization, shelves, solutions, twists


def _provenance(data: bytes, seed=None) -> dict:
    p = {"input_sha256": hashlib.sha256(data).hexdigest(), "tool": f"yaxl {__version__}"}
    if seed is not None:
        p["seed"] = seed
    return p


def _read(path: str) -> str:
    with open(path) as f:
        return f.read()


def _emit(args, payload: str, provenance: dict, text: bool) -> None:
    """Write an artifact to args.output (or stdout) with its provenance."""
    if text:
        header = "# " + json.dumps(provenance) + "\n"
        out = header + payload
    else:
        obj = json.loads(payload)
        obj["_provenance"] = provenance
        out = json.dumps(obj) + "\n"
    if args.output:
        with open(args.output, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)


def _print_report(args, report: dict) -> None:
    if getattr(args, "human", False):
        for k, v in report.items():
            print(f"{k}: {v}")
    else:
        print(json.dumps(report, default=str))


def _load_magma(text: str):
    if text.lstrip().startswith("{"):
        return serialization.magma_from_json(text)
    return serialization.magma_from_text(text)


def _load_solution(text: str):
    if text.lstrip().startswith("{"):
        return serialization.solution_from_json(text)
    return serialization.solution_from_text(text)


# ---------------------------------------------------------------------------
# check


def _check_shelf(table) -> dict:
    report = {"left_shelf": shelves.is_left_shelf(table)}
    if not report["left_shelf"]:
        return report
    report["rack"] = shelves.is_rack(table)
    report["quandle"] = shelves.is_quandle(table)
    q = shelves.quasi_rack_structure(table)
    report["quasi_rack"] = q is not None
    if q is None:
        return report
    report["quasi_quandle"] = shelves.is_quasi_quandle(q)
    report["star"] = shelves.check_star(q)
    report["starstar"] = shelves.check_starstar(q)
    report["starstarstar"] = shelves.check_starstarstar(q)
    d = shelves.derived_map(q)
    report["derived_is_solution"] = solutions.is_solution(d)
    if report["derived_is_solution"]:
        report["derived_quasi_bijective"] = solutions.quasi_bijective(d) is not None
    return report


def _check_solution(s) -> dict:
    report = {"solution": solutions.is_solution(s)}
    if not report["solution"]:
        return report
    flags = solutions.classify(s)
    report.update(
        {
            "bijective": flags.bijective,
            "involutive": flags.involutive,
            "idempotent": flags.idempotent,
            "cubic": flags.cubic,
            "left_nondegenerate": flags.left_nd,
            "right_nondegenerate": flags.right_nd,
        }
    )
    report["quasi_bijective"] = solutions.quasi_bijective(s) is not None
    d = solutions.quasi_left_nondeg(s)
    report["quasi_left_nondegenerate"] = d is not None
    report["quasi_right_nondegenerate"] = solutions.quasi_right_nondeg(s) is not None
    if d is not None:
        report["A"] = solutions.check_A(s, d)
        report["B"] = solutions.check_B(s, d)
        report["C"] = solutions.check_C(s, d)
    return report


def cmd_check(args) -> int:
    text = _read(args.path)
    if args.kind == "shelf":
        report = _check_shelf(_load_magma(text))
        ok = report["left_shelf"]
    elif args.kind == "solution":
        report = _check_solution(_load_solution(text))
        ok = report["solution"]
    elif args.kind == "clifford":
        table = _load_magma(text)
        report = {
            "inverse_semigroup": constructions.is_inverse_semigroup(table),
            "clifford": constructions.is_clifford(table),
        }
        ok = report["clifford"]
    elif args.kind == "weak-brace":
        data = json.loads(text)
        report = constructions.weak_brace_validate(data["add"], data["mul"])
        if report["valid"]:
            b = constructions.make_weak_brace(data["add"], data["mul"])
            report["dual"] = constructions.is_dual(b)
        ok = report["valid"]
    elif args.kind == "twist":
        t = serialization.twist_from_json(text)
        report = {
            "twist_family": True,
            "g_twist": twists.is_g_twist(t),
            "endomorphic_inverses": twists.phi_triple_is_endomorphic(t),
        }
        ok = report["g_twist"]
    elif args.kind == "plonka":
        p = serialization.plonka_from_json(text)
        plonka.validate_plonka(p)
        report = plonka.sum_structure_check(p)
        ok = True
    else:
        raise ValueError(f"unknown kind {args.kind!r}")
    _print_report(args, report)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# enumerate / table1


def cmd_enumerate(args) -> int:
    spec = enumeration.EnumerationSpec(
        n=args.n,
        klass=args.klass,
        filters=frozenset(args.filter or ()),
        mode="stream" if args.stream else "count",
    )
    result = enumeration.enumerate_spec(spec, workers=args.workers, override=args.override)
    if args.stream:
        blocks = [serialization.magma_to_text(t) for t in result]
        sys.stdout.write("\n".join(blocks))
        print(f"# count: {len(result)}")
    else:
        _print_report(args, {"n": args.n, "class": args.klass,
                             "filters": sorted(spec.filters), "count": result})
    return 0


def cmd_table1(args) -> int:
    ok = True
    header = ("n",) + enumeration.TABLE1_COLUMNS
    rows = []
    for n in (2, 3, 4):
        row = enumeration.table1_row(n, workers=args.workers)
        rows.append((n,) + row)
        if row != enumeration.TABLE1_EXPECTED[n]:
            ok = False
    if args.human:
        print("  ".join(f"{h:>6}" for h in header))
        for row in rows:
            print("  ".join(f"{v:>6}" for v in row))
    else:
        print(json.dumps({"columns": header, "rows": rows, "match": ok}))
    if not ok:
        print("MISMATCH against expected enumeration counts", file=sys.stderr)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# derive / construct / decompose / twist / search


def cmd_derive(args) -> int:
    text = _read(args.path)
    table = _load_magma(text)
    q = shelves.quasi_rack_structure(table)
    if q is None:
        print("input is not a quasi rack", file=sys.stderr)
        return 1
    s = shelves.derived_map(q)
    prov = _provenance(text.encode())
    if args.format == "json":
        _emit(args, serialization.solution_to_json(s), prov, text=False)
    else:
        _emit(args, serialization.solution_to_text(s), prov, text=True)
    return 0


def cmd_construct(args) -> int:
    text = _read(args.path)
    prov = _provenance(text.encode())
    if args.what == "plonka-sum":
        p = serialization.plonka_from_json(text)
        table = plonka.plonka_sum(p)
        plonka.sum_structure_check(p)
    elif args.what == "clifford":
        sys_ = serialization.system_from_json(text)
        table = constructions.clifford_from_system(sys_).mul
    elif args.what in ("conjugation", "core", "deformed"):
        c = constructions.clifford_table(_load_magma(text))
        if args.what == "conjugation":
            table = constructions.conjugation_quasi_quandle(c)
        elif args.what == "core":
            table = constructions.core_quasi_quandle(c)
        else:
            if args.idempotent is None:
                raise ValueError("deformed construction requires --idempotent")
            table = constructions.deformed_quasi_rack(c, args.idempotent)
    elif args.what == "brace-solution":
        b = serialization.weak_brace_from_json(text)
        s = constructions.brace_solution(b)
        if args.format == "json":
            _emit(args, serialization.solution_to_json(s), prov, text=False)
        else:
            _emit(args, serialization.solution_to_text(s), prov, text=True)
        return 0
    else:
        raise ValueError(f"unknown construction {args.what!r}")
    if args.format == "json":
        _emit(args, serialization.magma_to_json(table), prov, text=False)
    else:
        _emit(args, serialization.magma_to_text(table), prov, text=True)
    return 0


def cmd_decompose(args) -> int:
    text = _read(args.path)
    table = _load_magma(text)
    q = shelves.quasi_rack_structure(table)
    if q is None or not (shelves.check_star(q) and shelves.check_starstarstar(q)):
        print("decomposition requires a quasi rack with (*) and (***)", file=sys.stderr)
        return 1
    p = plonka.decompose(q)
    assert plonka.roundtrip(q)
    _emit(args, serialization.plonka_to_json(p), _provenance(text.encode()), text=False)
    return 0


def cmd_twist(args) -> int:
    text = _read(args.path)
    prov = _provenance(text.encode())
    if args.extract:
        s = _load_solution(text)
        t = twists.twist_from_solution(s)
        _emit(args, serialization.twist_to_json(t), prov, text=False)
        return 0
    t = serialization.twist_from_json(text)
    if not twists.is_g_twist(t):
        print("twist family is not a g-twist", file=sys.stderr)
        return 1
    s = twists.solution_from_twist(t)
    if args.format == "json":
        _emit(args, serialization.solution_to_json(s), prov, text=False)
    else:
        _emit(args, serialization.solution_to_text(s), prov, text=True)
    return 0


def cmd_search(args) -> int:
    if args.n >= 4 and args.seed is None:
        raise ValueError("sampled searches require an explicit --seed")
    fn = enumeration.search_question1 if args.question == 1 else enumeration.search_question2
    report = fn(args.n, seed=args.seed, samples=args.samples)
    out = json.dumps(report, default=list)
    if args.output:
        obj = json.loads(out)
        obj["_provenance"] = _provenance(b"", seed=args.seed)
        with open(args.output, "w") as f:
            json.dump(obj, f)
    else:
        print(out)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yaxl")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate and classify a structure file")
    p.add_argument("kind", choices=["shelf", "solution", "clifford", "weak-brace", "twist", "plonka"])
    p.add_argument("path")
    p.add_argument("--human", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="count or stream isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=enumeration.CLASSES, required=True)
    p.add_argument("--filter", action="append", choices=enumeration.FILTERS)
    p.add_argument("--stream", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--override", action="store_true", help="bypass the size guard")
    p.add_argument("--human", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("table1", help="reproduce the enumeration table for n = 2, 3, 4")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--human", action="store_true")
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("derive", help="derived solution of a quasi rack")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("construct", help="build a structure from a description file")
    p.add_argument(
        "what",
        choices=["plonka-sum", "clifford", "conjugation", "core", "deformed", "brace-solution"],
    )
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--idempotent", type=int, default=None)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("decompose", help="Plonka decomposition of a quasi rack")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("twist", help="solution of a g-twist (or extract one with --extract)")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--extract", action="store_true")
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("search", help="counterexample search for the open questions")
    p.add_argument("--question", type=int, choices=[1, 2], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"internal error (theorem guarantee violated): {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
