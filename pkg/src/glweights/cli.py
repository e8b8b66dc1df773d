"""Command-line front end: evaluate weight polynomials on diagram files and
emit the partition / rank / generating-function reports as CSV.

Exit codes: 0 success, 2 invalid input, 3 resource refusal (state cap),
4 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .casimir import poly_to_json
from .diagram import InvalidDiagramError, diagram_from_json, diagram_to_json
from .families import PontNeufParams, enumerate_params, pont_neuf, wheel
from .genfunc import (
    k1_gf_coefficients,
    k2_gf_coefficients,
    k3_conjecture_coefficients,
    k3_lower_bound_coefficients,
)
from .linalg import independence_check
from .partitions import (
    admissible_count,
    dimension_bound_report,
    estimate_partition_count,
    lower_bound_count,
    partition_count,
    partition_count_min2,
)
from .weights import DEFAULT_STATE_CAP, StateCapError, ZeroWeightError, gl_weight, gl_weight_top

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_REFUSED = 3
EXIT_INTERNAL = 4


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list[object]]) -> str:
    return "".join(",".join(str(x) for x in row) + "\n" for row in rows)


def _cmd_eval(args: argparse.Namespace) -> int:
    text = Path(args.diagram).read_text()
    diagram = diagram_from_json(text)
    if args.cd:
        poly = gl_weight_top(diagram, state_cap=args.max_states, jobs=args.jobs)
    else:
        poly = gl_weight(diagram, state_cap=args.max_states, jobs=args.jobs)
    _write(args, poly_to_json(poly))
    return EXIT_OK


def _parse_a(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--a must be a comma-separated integer list: {exc}") from exc


def _cmd_family(args: argparse.Namespace) -> int:
    if args.type == "wheel":
        if args.u is None:
            raise ValueError("--u is required for wheels")
        diagram = wheel(args.u)
    else:
        if args.a is None or args.b is None:
            raise ValueError("--a and --b are required for pontneuf")
        diagram = pont_neuf(PontNeufParams(_parse_a(args.a), args.b))
    _write(args, diagram_to_json(diagram))
    return EXIT_OK


def _cmd_rank(args: argparse.Namespace) -> int:
    report = independence_check(args.k, args.u)
    status = "ok" if report.triangular_ok else "FAIL"
    _write(args, f"size={report.size} rank={report.rank} triangular={status}\n")
    return EXIT_OK


def _family_slots(n: int) -> int:
    # one slot per bridge parameter tuple in degree n, plus the single
    # wheel slot at u = n when n is even (the k = 0 case of the count)
    total = 1 if n % 2 == 0 else 0
    for u in range(0, n, 2):
        total += len(enumerate_params(n - u, u))
    return total


def _cmd_lb(args: argparse.Namespace) -> int:
    rows: list[list[object]] = [["n", "lb", "adm2_n_plus_2", "family_slots"]]
    for n in range(1, args.max_n + 1):
        rows.append([n, lower_bound_count(n), admissible_count(n + 2), _family_slots(n)])
    _write(args, _csv(rows))
    return EXIT_OK


def _cmd_partitions(args: argparse.Namespace) -> int:
    rows: list[list[object]] = [["n", "p", "p2", "adm2", "lb", "hr_p", "ratio"]]
    for n in range(1, args.max_n + 1):
        p = partition_count(n)
        hr = estimate_partition_count(n)
        rows.append([
            n, p, partition_count_min2(n), admissible_count(n),
            lower_bound_count(n), f"{hr:.6e}", f"{hr / p:.6f}",
        ])
    _write(args, _csv(rows))
    return EXIT_OK


def _cmd_genfunc(args: argparse.Namespace) -> int:
    count = args.max_u + 1
    k1 = k1_gf_coefficients(count)
    k2 = k2_gf_coefficients(count)
    k3 = k3_lower_bound_coefficients(count)
    conj = k3_conjecture_coefficients(count)
    rows: list[list[object]] = [["u", "k1", "k2", "k3_lower", "k3_conjecture"]]
    for u in range(0, args.max_u + 1, 2):
        rows.append([u, k1[u], k2[u], k3[u], conj[u]])
    _write(args, _csv(rows))
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    rows: list[list[object]] = [["n", "monomials", "n2p", "ok_square", "cumulative", "n3p", "ok_cube"]]
    for n in range(1, args.max_n + 1):
        r = dimension_bound_report(n)
        rows.append([r.n, r.monomials, r.square_bound, r.square_ok, r.cumulative, r.cube_bound, r.cube_ok])
    _write(args, _csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glweights", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the weight polynomial of a diagram file")
    p_eval.add_argument("--diagram", required=True, help="diagram JSON file")
    p_eval.add_argument("--cd", action="store_true", help="emit only the top homogeneous part")
    p_eval.add_argument("--max-states", type=int, default=DEFAULT_STATE_CAP,
                        help="largest allowed trivalent-vertex count (the sum has 2^t terms)")
    p_eval.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes for the state sum (result is independent of this)")
    p_eval.add_argument("--out", help="output file (default: stdout)")
    p_eval.set_defaults(func=_cmd_eval)

    p_family = sub.add_parser("family", help="emit a wheel or pontneuf diagram file")
    p_family.add_argument("--type", choices=("wheel", "pontneuf"), required=True)
    p_family.add_argument("--u", type=int, help="leg count (wheel)")
    p_family.add_argument("--a", help="comma-separated arch leg counts (pontneuf)")
    p_family.add_argument("--b", type=int, help="half the road leg count (pontneuf)")
    p_family.add_argument("--out", help="output file (default: stdout)")
    p_family.set_defaults(func=_cmd_family)

    p_rank = sub.add_parser("rank", help="independence report for the degree-(u+k) family")
    p_rank.add_argument("--k", type=int, required=True)
    p_rank.add_argument("--u", type=int, required=True)
    p_rank.add_argument("--out", help="output file (default: stdout)")
    p_rank.set_defaults(func=_cmd_rank)

    p_lb = sub.add_parser("lb", help="dimension lower-bound counts per degree")
    p_lb.add_argument("--max-n", type=int, required=True)
    p_lb.add_argument("--out", help="output file (default: stdout)")
    p_lb.set_defaults(func=_cmd_lb)

    p_part = sub.add_parser("partitions", help="partition-count table with asymptotics")
    p_part.add_argument("--max-n", type=int, required=True)
    p_part.add_argument("--out", help="output file (default: stdout)")
    p_part.set_defaults(func=_cmd_partitions)

    p_gf = sub.add_parser("genfunc", help="dimension generating-function coefficients")
    p_gf.add_argument("--max-u", type=int, required=True)
    p_gf.add_argument("--out", help="output file (default: stdout)")
    p_gf.set_defaults(func=_cmd_genfunc)

    p_bounds = sub.add_parser("bounds", help="upper-bound checks for the weight-system image")
    p_bounds.add_argument("--max-n", type=int, required=True)
    p_bounds.add_argument("--out", help="output file (default: stdout)")
    p_bounds.set_defaults(func=_cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StateCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (InvalidDiagramError, ZeroWeightError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
