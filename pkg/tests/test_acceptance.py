"""Acceptance suite: one check per headline criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines bypass output capture)
or directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from math import comb

import pytest

from nakajima_fock.fock import (
    HeisenbergModel,
    closed_form_constant,
    constants_report,
    pairing_generating_function,
    phi_identity_check,
    solve_constants,
)
from nakajima_fock.genfun import genfun_report
from nakajima_fock.numerology import numerology_report
from nakajima_fock.schubert import (
    GrassRing,
    binomial_target,
    chern_tensor,
    excess_check,
    expected_intersection_number,
    integrate,
    intersection_number,
    pairing_gf_check,
    vandermonde_check,
)
from nakajima_fock.suites import commutator_grid, pieri_report
from nakajima_fock.symcore import enumerate_partitions


def _counts(report):
    s = report.summary()
    return f"{s['passed']}/{s['total']} cases"


# Each check returns (ok, detail).


def check_pieri():
    report = pieri_report(8, 6)
    expected_total = 6 * sum(len(enumerate_partitions(d)) for d in range(9))
    return report.passed and report.summary()["total"] == expected_total, _counts(report)


def check_genfun():
    report = genfun_report(10)
    return report.passed, _counts(report)


def check_commutators():
    total, failed, notices = 0, 0, []
    n_independent = True
    for q in (1, 2):
        report, more = commutator_grid([1, 2, 3], q, 8, 5)
        notices += more
        s = report.summary()
        total += s["total"]
        failed += s["failed"]
        n_independent &= all(c.passed for c in report.cases if c.id.endswith("/n-independence"))
    # 75 ordered index pairs per rank; 9 graded pieces plus one n-independence case each
    ok = failed == 0 and not notices and n_independent and total == 2 * 3 * 75 * 10
    return ok, f"{total - failed}/{total} cases"


def check_constants():
    ok = True
    for r in range(1, 5):
        closed = [(-1) ** (r * n - 1) * r * n for n in range(1, 11)]
        ok &= all(solve_constants(r, q, 10) == closed for q in (1, 3))
        ok &= closed == [closed_form_constant(r, n) for n in range(1, 11)]
        ok &= constants_report(r, 10, (1, 3)).passed
    return ok, "4 ranks x 2 pairings x 10 constants"


def check_vertex():
    reports = [phi_identity_check(HeisenbergModel.derive(r, q), 8) for r in (1, 2, 3) for q in (1, 2)]
    passed = sum(rep.summary()["passed"] for rep in reports)
    total = sum(rep.summary()["total"] for rep in reports)
    return all(rep.passed for rep in reports), f"{passed}/{total} vectors over 6 models"


def check_schubert():
    ok = True
    cases = 0
    for r in range(0, 7):
        for n in range(0, r + 1):
            cases += 1
            ok &= intersection_number(r, n) == (-1) ** ((r - 1) * n) * comb(r, n)
            ok &= intersection_number(r, n) == expected_intersection_number(r, n)
            ring = GrassRing(r, n)
            ok &= integrate(chern_tensor(ring, "Sdual_tensor_Q")[ring.dimension]) == comb(r, n)
            if r <= 5:
                ok &= excess_check(ring).passed
    return ok, f"{cases} (r, n) pairs"


def check_pairing():
    ok = True
    for r in range(1, 5):
        for q in range(1, 5):
            ok &= pairing_gf_check(r, q, 10).passed
            ok &= all(vandermonde_check(r, q, n) for n in range(11))
    return ok, "16 (r, q) pairs x 11 coefficients"


def check_cross_module():
    ok = True
    for r in range(1, 4):
        for q in range(1, 3):
            fock = pairing_generating_function(HeisenbergModel.derive(r, q), 4)
            ok &= fock.order == 8 and fock == binomial_target(r, q, 8)
    return ok, "6 (r, q) pairs"


def check_numerology():
    report = numerology_report()
    return report.passed, _counts(report)


# (name, runtime budget in seconds or None, check)
CRITERIA = [
    ("Pieri rule vs polynomial multiplication, |mu| <= 8, i <= 6", 10, check_pieri),
    ("E(z)H(-z)=1, exp forms of H and E, P = d/dz log H, order 10", 5, check_genfun),
    ("[B_i, B_-j] on degree <= 8, r in 1..3, i, j <= 5, q in {1, 2}", 30, check_commutators),
    ("solve_constants(r, q, 10) = (-1)^(rn-1) r n, r <= 4, q in {1, 3}", 1, check_constants),
    ("[C_-(z), exp C'_+(z)] = -Phi(z) exp C'_+(z), order 8, degree <= 4", 30, check_vertex),
    ("Grassmannian intersection numbers r <= 6, excess formula r <= 5", 60, check_schubert),
    ("subdivision sums = (1+(-1)^(r-1) z^2)^(rq) and Vandermonde, r, q <= 4, n <= 10", 5, check_pairing),
    ("Fock pairing of exp-vectors = Grassmannian pairing series, r <= 3, q <= 2, order 8", None,
     check_cross_module),
    ("dimension formulas and middle-degree preservation", 1, check_numerology),
]


def run_criterion(name, budget, check):
    """Run one check, time it, and return (passed, printable line)."""
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    within = budget is None or elapsed < budget
    limit = f", budget {budget}s" if budget is not None else ""
    passed = bool(ok) and within
    line = f"{'PASS' if passed else 'FAIL'}  {name}: {detail} ({elapsed:.2f}s{limit})"
    return passed, line


@pytest.mark.parametrize("name,budget,check", CRITERIA, ids=[c[2].__name__[6:] for c in CRITERIA])
def test_criterion(name, budget, check, capsys):
    passed, line = run_criterion(name, budget, check)
    with capsys.disabled():
        print(f"\n{line}")
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
