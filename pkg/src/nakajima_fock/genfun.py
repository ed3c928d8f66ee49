"""The generating functions E(z), H(z), P(z) and the identities tying them together."""

from __future__ import annotations

from fractions import Fraction

from .report import Report
from .series import TruncatedSeries
from .symcore import SymFunc


def elementary_series(order: int) -> TruncatedSeries:
    """E(z) = sum e_n z^n."""
    return TruncatedSeries([SymFunc.elementary(n) for n in range(order + 1)], order)


def complete_series(order: int) -> TruncatedSeries:
    """H(z) = sum h_n z^n."""
    return TruncatedSeries([SymFunc.complete(n) for n in range(order + 1)], order)


def newton_series(order: int) -> TruncatedSeries:
    """P(z) = sum_{n>=1} p_n z^(n-1), to the given order."""
    return TruncatedSeries([SymFunc.power(n + 1) for n in range(order + 1)], order)


def power_sum_exponent(order: int, alternating: bool = False) -> TruncatedSeries:
    """sum_{n>=1} p_n z^n / n, or with the signs (-1)^(n-1) when alternating.

    The sum starts at n = 1: there is no p_0, and starting there gives the
    exponentials constant term 1.
    """
    coeffs = [SymFunc.zero("p")]
    for n in range(1, order + 1):
        c = Fraction(1, n) if not alternating or n % 2 else Fraction(-1, n)
        coeffs.append(SymFunc.power(n) * c)
    return TruncatedSeries(coeffs, order)


def _coefficientwise(report: Report, name: str, ref: str, lhs: TruncatedSeries,
                     rhs: TruncatedSeries) -> None:
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        ok = a == b
        report.add(f"{name}/z^{n:02d}", ref, rhs[n], a if not ok else rhs[n], ok)


def genfun_report(order: int) -> Report:
    """Verify E(z)H(-z)=1, H=exp(sum p_n z^n/n), E=exp(sum (-1)^(n-1) p_n z^n/n), P=(log H)'."""
    if order < 1:
        raise ValueError("order must be at least 1")
    report = Report("verify-genfun", notes={"order": order})
    E = elementary_series(order)
    H = complete_series(order)

    one = TruncatedSeries([SymFunc.one("e")], order)
    _coefficientwise(report, "E(z)H(-z)=1", "E(z)H(-z) = 1", E * H.scale(-1), one)

    H_exp = power_sum_exponent(order).exp()
    _coefficientwise(report, "H=exp", "H(z) = exp(sum p_n z^n / n)", H_exp, H)

    E_exp = power_sum_exponent(order, alternating=True).exp()
    _coefficientwise(report, "E=exp", "E(z) = exp(sum p_n z^n / ((-1)^(n-1) n))", E_exp, E)

    # log needs constant term exactly 1; H(0) = h_0 = 1
    P = H.log().derivative()
    _coefficientwise(report, "P=dlogH", "P(z) = d/dz log H(z)", P, newton_series(order - 1))
    return report
