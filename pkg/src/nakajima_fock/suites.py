"""Check suites that combine several modules; each returns a Report."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .fock import HeisenbergModel, commutator_check, pairing_generating_function
from .report import Report
from .schubert import binomial_target, pairing_coefficient, vandermonde_check
from .symcore import SymFunc, enumerate_partitions, multiply_p
from .symcore.oracle import product_dominant_coefficients


def pieri_report(max_weight: int = 8, max_index: int = 6) -> Report:
    """p_i m_mu by the Pieri-type rule against the polynomial product in |mu|+i variables."""
    report = Report("verify-pieri", notes={"max_weight": max_weight, "max_index": max_index})
    for d in range(max_weight + 1):
        for mu in enumerate_partitions(d):
            f = SymFunc.monomial(mu)
            for i in range(1, max_index + 1):
                nvars = d + i
                rule = dict(multiply_p(f, i).terms)
                oracle = product_dominant_coefficients(SymFunc.power(i), f, nvars)
                report.add(f"m{mu}*p{i}", "p_i m_mu = sum_nu a_mu,nu m_nu",
                           SymFunc("m", oracle), SymFunc("m", rule), rule == oracle)
    return report


def commutator_grid(ranks: Iterable[int], pairing: int, degree_cap: int,
                    max_index: int = 5) -> tuple[Report, list[str]]:
    """[B_i, B_-j], [B_i, B_j], [B_-i, B_-j] for 1 <= i, j <= max_index.

    Pairs with an index larger than the degree cap are skipped; the returned
    notices say which.
    """
    report = Report("verify-commutators", notes={"pairing": pairing, "degree_cap": degree_cap})
    notices = []
    if pairing == 0:
        notices.append("pairing q = 0: every commutator vanishes; passes are degenerate")
        report.notes["degenerate"] = True
    for r in ranks:
        model = HeisenbergModel.derive(r, pairing)
        for i in range(1, max_index + 1):
            for j in range(1, max_index + 1):
                for a, b in ((i, -j), (i, j), (-i, -j)):
                    if max(abs(a), abs(b)) > degree_cap:
                        notices.append(f"skipped r={r} [B{a:+d},B{b:+d}]: degree cap {degree_cap}"
                                       f" < {max(abs(a), abs(b))}")
                        continue
                    report.extend(commutator_check(a, b, model, degree_cap))
    if notices:
        report.notes["skipped"] = sum(1 for n in notices if n.startswith("skipped"))
    return report, notices


def pairing_report(ranks: Iterable[int], pairings: Iterable[int], n_max: int,
                   fock_cross: bool = True) -> Report:
    """Subdivision sums against the binomial target, the Vandermonde oracle, and the Fock pairing."""
    report = Report("verify-pairing", notes={"n_max": n_max})
    for r in ranks:
        for q in pairings:
            target = binomial_target(r, q, 2 * n_max)
            fock_gf = pairing_generating_function(HeisenbergModel.derive(r, q), n_max) if fock_cross else None
            for n in range(n_max + 1):
                tag = f"r{r}-q{q}/n{n:02d}"
                observed = {"subdivision_sum": pairing_coefficient(r, q, n),
                            "vandermonde": vandermonde_check(r, q, n)}
                expected = {"subdivision_sum": target[2 * n], "vandermonde": True}
                if fock_gf is not None:
                    observed["fock_pairing"] = fock_gf[2 * n]
                    expected["fock_pairing"] = target[2 * n]
                ok = (Fraction(observed["subdivision_sum"]) == expected["subdivision_sum"]
                      and observed["vandermonde"]
                      and observed.get("fock_pairing") == expected.get("fock_pairing"))
                report.add(tag, "sum over subdivisions = [z^2n](1+(-1)^(r-1)z^2)^(rq)",
                           expected, observed, ok)
    return report
