"""Command-line frontend.

Thin dispatcher over the library: classification and strata reports,
isogeny decompositions, boundary and counterexample witnesses, the
dimension-preserving extension table, and the self-test harness.  JSON
output is the machine contract (sorted keys, fixed indentation, no
timestamps); tables are aligned fixed-width text.  Exit codes: 0 success,
1 usage error, 2 computation budget exceeded, 3 invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import is_prime
from .classify import (
    BOUNDARY_WORDS,
    StrataRow,
    boundary_vectors,
    classify_genus,
    counterexample_dihedral2,
    counterexample_q8,
    groups_of_order_4q,
    restrict_action,
)
from .errors import BudgetExceededError, InvariantError
from .fuchsian import EXTENSION_TABLE, parse_signature, possible_extensions, teich_dim
from .genvec import vector_to_json
from .groups import are_isomorphic, standard_name
from .jacobian import decomposition_report
from .selftest import run_selftest

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INVARIANT = 3

_BOUNDARY_NOTE = (
    "larger automorphism groups at this genus are assumed nonexistent "
    "(imported classification result; not recomputed here)"
)


class _UsageError(Exception):
    """Raised for bad invocations; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - route argparse failures to exit code 1
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# rendering helpers


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _render_table(header: list[str], rows: list[list[str]]) -> str:
    cells = [header] + rows
    widths = [max(len(str(row[i])) for row in cells) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _labels(group, elements) -> list[str]:
    return [group.label(v) for v in elements]


def _strata_entry(row: StrataRow) -> dict:
    return {
        "group": row.group_tag,
        "standard_name": row.group_name,
        "signature": str(row.signature),
        "vector_count": row.vector_count,
        "class_count": row.class_count,
        "representatives": [
            _labels(rep.group, rep.elliptic) for rep in row.representatives
        ],
    }


def _strata_table_rows(rows) -> list[list[str]]:
    out = []
    for row in rows:
        rep = ", ".join(_labels(row.representatives[0].group, row.representatives[0].elliptic)) if row.representatives else "-"
        classes = "-" if row.class_count is None else str(row.class_count)
        out.append(
            [row.group_tag, row.group_name, str(row.signature), str(row.vector_count), classes, rep]
        )
    return out


# ---------------------------------------------------------------------------
# subcommands


def _require_genus(genus: int) -> None:
    if not 8 <= genus <= 128:
        raise _UsageError(f"--genus must be between 8 and 128, got {genus}")
    if not is_prime(genus - 1):
        raise _UsageError(
            f"--genus {genus} is out of scope: genus - 1 = {genus - 1} is not prime "
            "(the counterexample command covers what changes without primality)"
        )


def cmd_classify(args) -> int:
    _require_genus(args.genus)
    report = classify_genus(args.genus, workers=args.workers)
    payload = {
        "genus": report.genus,
        "q": report.q,
        "q_prime": report.q_prime,
        "strata": [_strata_entry(row) for row in report.strata],
        "theorem1_consistent": report.theorem_consistent,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        verdict = "yes" if report.theorem_consistent else "NO"
        print(f"genus {report.genus}  q = {report.q} (prime)  expected pattern: {verdict}")
        print(
            _render_table(
                ["group", "name", "signature", "vectors", "classes", "representative"],
                _strata_table_rows(report.strata),
            )
        )
    return EXIT_OK if report.theorem_consistent else EXIT_INVARIANT


def cmd_strata(args) -> int:
    _require_genus(args.genus)
    report = classify_genus(args.genus, workers=args.workers)
    rows = list(report.rows)
    if args.group is not None:
        rows = [r for r in rows if args.group in (r.group_tag, r.group_name)]
    if args.signature is not None:
        wanted = str(parse_signature(args.signature))
        rows = [r for r in rows if str(r.signature) == wanted]
    payload = {
        "genus": report.genus,
        "q": report.q,
        "q_prime": report.q_prime,
        "rows": [_strata_entry(row) for row in rows],
        "theorem1_consistent": report.theorem_consistent,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        verdict = "yes" if report.theorem_consistent else "NO"
        print(f"genus {report.genus}  q = {report.q} (prime)  expected pattern: {verdict}")
        print(
            _render_table(
                ["group", "name", "signature", "vectors", "classes", "representative"],
                _strata_table_rows(rows),
            )
        )
    return EXIT_OK if report.theorem_consistent else EXIT_INVARIANT


def cmd_jacobian(args) -> int:
    report = decomposition_report(args.family, args.q)
    payload = {
        "family": report.family,
        "q": report.q,
        "genus": report.genus,
        "factors": [
            {
                "subgroup": row.subgroup_name,
                "genus": row.genus,
                "multiplicity": row.multiplicity,
            }
            for row in report.factors
        ],
        "residual": report.residual,
        "admissible": report.admissible,
        "genus_sum_ok": report.genus_sum_ok,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"family {report.family}  q = {report.q}  genus {report.genus}")
        print(
            _render_table(
                ["subgroup", "quotient genus", "multiplicity"],
                [
                    [row.subgroup_name, str(row.genus), str(row.multiplicity)]
                    for row in report.factors
                ],
            )
        )
        print(
            f"residual {report.residual}  admissible {report.admissible}  "
            f"genus sum ok {report.genus_sum_ok}"
        )
    ok = report.residual == 0 and report.admissible
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_boundary(args) -> int:
    pair = boundary_vectors(args.q, args.case)
    words = BOUNDARY_WORDS[args.case]
    candidates = groups_of_order_4q(args.q)
    actions = []
    for vec in pair:
        witness = restrict_action(vec, words)
        restricted_to = next(
            (standard_name(H) for H in candidates if are_isomorphic(witness.induced_group, H)),
            f"group of order {witness.subgroup.order}",
        )
        actions.append(
            {
                "vector": _labels(vec.group, vec.elliptic),
                "signature": str(vec.signature),
                "restriction": {
                    "images": _labels(vec.group, witness.images),
                    "index": witness.index,
                    "subgroup_order": witness.subgroup.order,
                    "restricted_to": restricted_to,
                    "induced_signature": str(witness.induced.signature),
                    "induced_vector": _labels(
                        witness.induced_group, witness.induced.elliptic
                    ),
                },
            }
        )
    G = pair[0].group
    payload = {
        "case": args.case,
        "q": args.q,
        "genus": pair[0].genus(),
        "group": G.family_tag,
        "standard_name": standard_name(G),
        "order": G.order,
        "actions": actions,
        "note": _BOUNDARY_NOTE,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(
            f"case {args.case}  q = {args.q}  genus {payload['genus']}  "
            f"group {payload['standard_name']} (order {G.order})"
        )
        for k, action in enumerate(actions, start=1):
            r = action["restriction"]
            print(f"action {k}: ({', '.join(action['vector'])})  signature {action['signature']}")
            print(
                f"  restricts to {r['restricted_to']} (order {r['subgroup_order']}, "
                f"index {r['index']}) with signature {r['induced_signature']}"
            )
            print(f"  word images: {', '.join(r['images'])}")
        print(f"note: {_BOUNDARY_NOTE}")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    if args.kind == "q8":
        vec = counterexample_q8(args.n)
        G = vec.group
        payload = {
            "kind": "q8",
            "n": args.n,
            "genus": vec.genus(),
            "group": G.family_tag,
            "standard_name": standard_name(G),
            "order": G.order,
            "vector": vector_to_json(vec),
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            print(
                f"kind q8  n = {args.n}  group {payload['standard_name']} "
                f"(order {G.order})  genus {payload['genus']}"
            )
            hyp = ", ".join("(" + ", ".join(p) + ")" for p in payload["vector"]["hyperbolic"])
            print(f"signature {payload['vector']['signature']}  handles {hyp}  "
                  f"elliptic {', '.join(payload['vector']['elliptic'])}")
            print("genus - 1 is even here, yet the action order is 4(genus - 1)")
        return EXIT_OK
    example = counterexample_dihedral2(args.n)
    payload = {
        "kind": "dihedral2",
        "n": args.n,
        "genus": example.genus,
        "members": [
            {
                "twist": m,
                "group": G.family_tag,
                "standard_name": standard_name(G),
                "order": G.order,
                "vector": _labels(G, vec.elliptic),
            }
            for m, G, vec in example.members
        ],
        "isomorphic_pairs": [list(p) for p in example.isomorphic_pairs],
        "pairwise_non_isomorphic": example.pairwise_non_isomorphic,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"kind dihedral2  n = {args.n}  genus {example.genus}")
        print(
            _render_table(
                ["twist", "group", "name", "order", "vector"],
                [
                    [str(m["twist"]), m["group"], m["standard_name"], str(m["order"]), ", ".join(m["vector"])]
                    for m in payload["members"]
                ],
            )
        )
        pairs = ", ".join(f"{a}~{b}" for a, b in example.isomorphic_pairs) or "none"
        print(f"isomorphic twist pairs: {pairs}")
        print(f"pairwise non-isomorphic: {example.pairwise_non_isomorphic}")
    return EXIT_OK


def cmd_extensions(args) -> int:
    sig = parse_signature(args.signature)
    possible_extensions(sig)  # validates hyperbolicity with the library error
    described = []
    for description, fn in EXTENSION_TABLE:
        rule = fn(sig)
        if rule is not None:
            described.append((description, rule))
    payload = {
        "signature": str(sig),
        "teichmueller_dim": teich_dim(sig),
        "rules": [
            {"outer": str(rule.outer), "index": rule.index, "rule": description}
            for description, rule in described
        ],
        "maximal_in_dimension": not described,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"signature {sig}  dimension {payload['teichmueller_dim']}")
        if described:
            print(
                _render_table(
                    ["outer", "index", "rule"],
                    [[str(r.outer), str(r.index), d] for d, r in described],
                )
            )
        else:
            print("no dimension-preserving extension: maximal among same-dimension overgroups")
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(
        golden_dir=args.golden_dir, bless=args.bless, workers=args.workers
    )
    payload = {
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:34s}  {r.detail}")
        print(f"all passed: {payload['all_passed']}")
    return EXIT_OK if payload["all_passed"] else EXIT_INVARIANT


# ---------------------------------------------------------------------------
# parser


def _add_format(sub) -> None:
    sub.add_argument(
        "--format", choices=("json", "table"), default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="equisym",
        description=(
            "Classification of surfaces of genus g with 4g-4 automorphisms "
            "(g-1 prime), with boundary witnesses, counterexample series, and "
            "exact isogeny decompositions of the corresponding Jacobians."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="nonzero strata for one genus, with the pattern verdict")
    p.add_argument("--genus", type=int, required=True, help="genus g with g-1 prime, 8 <= g <= 128")
    p.add_argument("--workers", type=int, default=1, help="worker threads (default 1)")
    _add_format(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("strata", help="full elimination table for one genus, zero rows included")
    p.add_argument("--genus", type=int, required=True, help="genus g with g-1 prime, 8 <= g <= 128")
    p.add_argument("--group", help="only rows for this group spec or structure name")
    p.add_argument("--signature", help='only rows with this signature, e.g. "0;2,2,4,4"')
    p.add_argument("--workers", type=int, default=1, help="worker threads (default 1)")
    _add_format(p)
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser("jacobian", help="isogeny decomposition for one family member")
    p.add_argument("--family", choices=("F1", "F2"), required=True)
    p.add_argument("--q", type=int, required=True, help="family parameter")
    _add_format(p)
    p.set_defaults(handler=cmd_jacobian)

    p = sub.add_parser("boundary", help="boundary actions of larger order and their restrictions")
    p.add_argument("--q", type=int, required=True, help="prime parameter (congruence depends on case)")
    p.add_argument("--case", choices=("ord8", "ord6"), required=True)
    _add_format(p)
    p.set_defaults(handler=cmd_boundary)

    p = sub.add_parser("counterexample", help="series showing the primality hypothesis is needed")
    p.add_argument("--kind", choices=("q8", "dihedral2"), required=True)
    p.add_argument("--n", type=int, required=True, help="series parameter")
    _add_format(p)
    p.set_defaults(handler=cmd_counterexample)

    p = sub.add_parser("extensions", help="dimension-preserving extensions of a signature")
    p.add_argument("--signature", required=True, help='signature string, e.g. "0;2,2,4,4"')
    _add_format(p)
    p.set_defaults(handler=cmd_extensions)

    p = sub.add_parser("selftest", help="independent oracles, invariants, and golden comparisons")
    p.add_argument("--golden-dir", help="directory of golden files (default: packaged)")
    p.add_argument("--bless", action="store_true", help="write golden files instead of comparing")
    p.add_argument("--workers", type=int, default=1, help="worker threads (default 1)")
    _add_format(p)
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
