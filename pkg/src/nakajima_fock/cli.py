"""Command-line front end: run a check suite and write its report.

Exit status: 0 when every case passes, 1 when some case fails, 2 for usage
errors, 3 when a request exceeds a resource cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from .fock import constants_report
from .genfun import genfun_report
from .numerology import numerology_report
from .report import Report, merge
from .schubert import schubert_report
from .suites import commutator_grid, pairing_report, pieri_report
from .symcore import DEFAULT_DEGREE_CAP, DegreeCapError, degree_cap

DEFAULT_HARD_CAP = 20
CAP_ENV = "NAKAJIMA_FOCK_CAP"
SCHUBERT_MAX_RANK = 6
PIERI_MAX_INDEX = 6

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class ResourceError(Exception):
    pass


class UsageError(Exception):
    pass


def hard_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_HARD_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive")
    return cap


def parse_range(text: str) -> list[int]:
    """"3" -> [3]; "1..3" -> [1, 2, 3]; "1,4" -> [1, 4]."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {chunk!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(chunk))
    return sorted(set(out))


def _range_arg(text: str) -> list[int]:
    try:
        return parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer or range: {text!r}") from None


# ---------------------------------------------------------------------------
# suite runners: (args, notices) -> Report


def _check_order(n: int, name: str = "--order") -> int:
    if n < 1:
        raise UsageError(f"{name} must be at least 1")
    cap = hard_cap()
    if n > cap:
        raise ResourceError(f"{name} {n} exceeds the hard cap {cap} (set {CAP_ENV} to raise it)")
    return n


def _ranks(args, default: list[int]) -> list[int]:
    ranks = args.rank or default
    if min(ranks) < 1:
        raise UsageError("--rank values must be positive")
    return ranks


def _symfunc_cap(args) -> int:
    cap = args.degree_cap if args.degree_cap is not None else DEFAULT_DEGREE_CAP
    if cap < 0:
        raise UsageError("--degree-cap must be non-negative")
    if cap > hard_cap():
        raise ResourceError(f"--degree-cap {cap} exceeds the hard cap {hard_cap()}")
    return cap


def run_genfun(args, notices) -> Report:
    order = _check_order(args.order if args.order is not None else 10)
    with degree_cap(_symfunc_cap(args)):
        return genfun_report(order)


def run_pieri(args, notices) -> Report:
    weight = args.order if args.order is not None else 8
    if weight < 0:
        raise UsageError("--order must be non-negative")
    with degree_cap(_symfunc_cap(args)):
        return pieri_report(weight, PIERI_MAX_INDEX)


def run_commutators(args, notices) -> Report:
    cap = args.degree_cap if args.degree_cap is not None else 8
    if cap < 0:
        raise UsageError("--degree-cap must be non-negative")
    if cap > hard_cap():
        raise ResourceError(f"--degree-cap {cap} exceeds the hard cap {hard_cap()}")
    pairing = args.pairing[0] if args.pairing else 1
    if args.pairing and len(args.pairing) > 1:
        raise UsageError("verify-commutators takes a single --pairing value")
    max_index = args.order if args.order is not None else 5
    _check_order(max_index)
    report, more = commutator_grid(_ranks(args, [1, 2, 3]), pairing, cap, max_index)
    notices.extend(more)
    return report


def run_constants(args, notices) -> Report:
    n_max = _check_order(args.order if args.order is not None else 10)
    pairings = sorted({1, *(args.pairing or [3])})
    if 0 in pairings:
        raise UsageError("solve-constants needs a nonzero --pairing")
    out = Report("solve-constants")
    for r in _ranks(args, [1, 2, 3, 4]):
        sub = constants_report(r, n_max, pairings)
        out.extend(sub)
        out.notes.update(sub.notes)
    return out


def run_schubert(args, notices) -> Report:
    r_max = max(args.rank) if args.rank else 4
    if r_max < 0:
        raise UsageError("--rank must be non-negative")
    if r_max > SCHUBERT_MAX_RANK:
        raise ResourceError(f"--rank {r_max} exceeds the Schubert limit {SCHUBERT_MAX_RANK}")
    return schubert_report(r_max)


def run_pairing(args, notices) -> Report:
    n_max = _check_order(args.order if args.order is not None else 10)
    pairings = args.pairing or [1, 2]
    if min(pairings) < 1:
        raise UsageError("--pairing values must be at least 1")
    return pairing_report(_ranks(args, [1, 2, 3]), pairings, n_max)


def run_numerology(args, notices) -> Report:
    return numerology_report(max(args.rank) if args.rank else 4)


def run_all(args, notices) -> Report:
    reports = []
    for name in SUITES:
        if name != "all":
            reports.append(SUITES[name](args, notices))
    return merge("all", reports)


SUITES: dict[str, Callable] = {
    "verify-genfun": run_genfun,
    "verify-pieri": run_pieri,
    "verify-commutators": run_commutators,
    "solve-constants": run_constants,
    "verify-schubert": run_schubert,
    "verify-pairing": run_pairing,
    "verify-numerology": run_numerology,
    "all": run_all,
}

HELP = {
    "verify-genfun": "E(z)H(-z)=1 and the exp/log forms of H, E, P (--order N, --degree-cap for N > 12)",
    "verify-pieri": "p_i m_mu, i <= 6, against polynomial multiplication (--order max |mu|)",
    "verify-commutators": "Heisenberg relations on the Fock model (--rank, --pairing, --degree-cap, --order max index)",
    "solve-constants": "derive c_{r,n} from the pairing generating function (--rank, --order N)",
    "verify-schubert": "Grassmannian intersection numbers and excess formula for 0<=n<=r<=--rank",
    "verify-pairing": "subdivision sums, Vandermonde oracle, Fock pairing (--rank, --pairing, --order N)",
    "verify-numerology": "dimension and degree-shift bookkeeping (--rank r_max)",
    "all": "every suite with its defaults",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=_range_arg, help="rank r, a range such as 1..3, or a list 1,3")
    common.add_argument("--pairing", type=_range_arg, help="intersection pairing q (or range)")
    common.add_argument("--order", type=int, help="truncation order N")
    common.add_argument("--degree-cap", type=int, help="degree cap for Fock/symmetric-function checks")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="nakajima-fock",
        description="Exact verification of Fock-space, symmetric-function and Grassmannian identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in SUITES:
        sub.add_parser(name, parents=[common], help=HELP[name], description=HELP[name])
    return parser


def render(report: Report, fmt: str) -> str:
    if fmt == "csv":
        return report.to_csv()
    if fmt == "text":
        return report.to_text()
    return report.to_json()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    notices: list[str] = []
    try:
        report = SUITES[args.command](args, notices)
    except UsageError as exc:
        parser.error(str(exc))
    except (ResourceError, DegreeCapError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    for line in notices:
        print(f"notice: {line}", file=sys.stderr)
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary()
    print(f"{args.command}: {s['passed']}/{s['total']} passed", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
