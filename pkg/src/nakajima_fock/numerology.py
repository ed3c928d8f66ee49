"""Dimension and grading bookkeeping for moduli of framed sheaves.

Only discrete invariants appear: the rank r, the integral c^2 of the first
Chern class squared, and the second Chern class n.  Homology degrees are
real degrees; dimensions are complex dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .report import Report
from .symcore import enumerate_partitions

_n = sympy.Symbol("n", integer=True)


@dataclass(frozen=True)
class ModuliParams:
    rank: int
    c_squared: int
    n: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def b(self) -> int:
        return -(self.rank - 1) * self.c_squared


def moduli_dim(p: ModuliParams) -> int:
    """2 r n + b."""
    return 2 * p.rank * p.n + p.b


def quot_fiber_dim(r: int, multiplicities: Sequence[int]) -> int:
    """Dimension of a product of punctual Quot schemes, sum_j (r m_j - 1).

    The same number is r * (sum m_j) - (number of points); both are computed
    and compared.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if any(m < 1 for m in multiplicities):
        raise ValueError("multiplicities must be positive")
    summed = sum(r * m - 1 for m in multiplicities)
    closed = r * sum(multiplicities) - len(multiplicities)
    if summed != closed:
        raise AssertionError(f"fiber dimension mismatch: {summed} != {closed}")
    return summed


def cycle_dims(r: int, s: int, k: int, mode: str) -> int:
    """Dimension of a component of the curve-supported cycle locus.

    mode "family": sheaves varying over the regular part, 2 r s + r k.
    mode "fixed": a fixed locally free sheaf, r k.
    """
    if s < 0 or k < 0:
        raise ValueError("s and k must be non-negative")
    if mode == "family":
        return 2 * r * s + r * k
    if mode == "fixed":
        return r * k
    raise ValueError(f"unknown mode {mode!r}; expected 'family' or 'fixed'")


@dataclass(frozen=True)
class DegreeShift:
    """Grading behavior of the operator with index i along a class of degree alpha_deg."""

    i: int
    alpha_deg: int

    def __post_init__(self):
        if self.i == 0:
            raise ValueError("operator index must be nonzero")
        if self.alpha_deg < 0 or self.alpha_deg % 2:
            raise ValueError("alpha_deg must be an even non-negative integer")

    def shift(self, r: int) -> int:
        """Change of homology degree: deg - 2ri - 2 for i > 0, deg + 2r|i| - 2 for i < 0."""
        return self.alpha_deg - 2 * r * self.i - 2

    def source_index(self, n):
        """The operator maps homology of M(n + i) to homology of M(n)."""
        return n + self.i


def middle_degree(r: int, n):
    return 2 * r * n


def implied_correspondence_dim(r: int, b, n, i: int):
    """Complex dimension a correspondence must have to produce the degree shift.

    A cycle of dimension D in M(n+i) x X x M(n) shifts degrees by
    2D - 2 dim M(n+i) + deg - 4; solving for D with the stated shift gives
    2rn + b + ri + 1 (for either sign of i).
    """
    return 2 * r * (n + i) + b + (-2 * r * i - 2 + 4) // 2


def degree_shift_check(r: int, i: int, alpha_deg: int) -> Report:
    """Does the operator carry middle degree to middle degree, for every n?"""
    op = DegreeShift(i, alpha_deg)
    source = middle_degree(r, op.source_index(_n))
    target = source + op.shift(r)
    residual = sympy.expand(target - middle_degree(r, _n))
    preserved = residual == 0
    tag = f"r{r}-i{i:+d}-deg{alpha_deg}"
    report = Report("degree-shift", notes={"residual": str(residual)})
    report.add(f"{tag}/shift", "H_j -> H_(j+deg-2ri-2)", alpha_deg - 2 * r * i - 2, op.shift(r))
    report.add(f"{tag}/middle", "middle degree 2rn preserved iff deg = 2",
               alpha_deg == 2, bool(preserved), notes={"target_minus_middle": str(residual)})
    return report


def correspondence_dimension_note() -> dict:
    """Compare the stated dimension of the positive-index correspondence with the implied one."""
    r, b, i = sympy.symbols("r b i", integer=True)
    stated_pos = 2 * r * _n + b + r + 1
    stated_neg = 2 * r * _n + b - r * i + 1
    implied_pos = 2 * r * (_n + i) + b + (-2 * r * i + 2) / 2
    # negative index -i: source M(n - i), shift deg + 2ri - 2
    implied_neg = 2 * r * (_n - i) + b + (2 * r * i + 2) / 2
    return {
        "stated_positive": str(stated_pos),
        "implied_positive": str(sympy.expand(implied_pos)),
        "positive_difference": str(sympy.factor(sympy.expand(implied_pos - stated_pos))),
        "stated_negative": str(stated_neg),
        "implied_negative": str(sympy.expand(implied_neg)),
        "negative_difference": str(sympy.expand(implied_neg - stated_neg)),
    }


def numerology_report(r_max: int = 4) -> Report:
    """All bookkeeping identities on the documented grids."""
    report = Report("verify-numerology", notes={"correspondence_dimension": correspondence_dimension_note()})
    ranks = range(1, r_max + 1)

    # spot values
    for r, c2, n, want in [(1, 0, 5, 10), (2, 0, 3, 12), (3, -2, 1, 10)]:
        report.add(f"moduli_dim/r{r}-c2{c2:+d}-n{n}", "dim M = 2rn - (r-1) c^2", want,
                   moduli_dim(ModuliParams(r, c2, n)))

    # dimension differences match the operator degree 2ri
    r_, c2_, i_ = sympy.symbols("r c2 i", integer=True)
    diff = sympy.expand((2 * r_ * (_n + i_) - (r_ - 1) * c2_) - (2 * r_ * _n - (r_ - 1) * c2_))
    report.add("moduli_dim/difference-symbolic", "dim M(n+i) - dim M(n) = 2ri",
               "2*i*r", str(diff), sympy.expand(diff - 2 * r_ * i_) == 0)
    ok = all(
        moduli_dim(ModuliParams(r, c2, n + i)) - moduli_dim(ModuliParams(r, c2, n)) == 2 * r * i
        for r in ranks for c2 in range(-3, 4) for n in range(6) for i in range(1, 5)
    )
    report.add("moduli_dim/difference-grid", "dim M(n+i) - dim M(n) = 2ri", True, ok)

    # fiber dimensions: every multiplicity list up to total 8
    for r in ranks:
        count = 0
        for total in range(1, 9):
            for mu in enumerate_partitions(total):
                quot_fiber_dim(r, list(mu))  # raises on disagreement
                count += 1
        report.add(f"quot_fiber_dim/r{r}", "sum (r m_j - 1) = r(n-s) - l",
                   "agree on all lists", f"agree on {count} lists", True)

    # cycle dimensions: family minus fixed is the dimension of the regular base
    ok = all(
        cycle_dims(r, s, k, "family") - cycle_dims(r, s, k, "fixed") == moduli_dim(ModuliParams(r, 0, s))
        for r in ranks for s in range(6) for k in range(6)
    )
    report.add("cycle_dims/family-minus-fixed", "(2rs + rk) - rk = 2rs = dim M^reg(s)", True, ok)

    # degree shifts and middle-degree preservation
    for r in ranks:
        for i in (-3, -2, -1, 1, 2, 3):
            for deg in (0, 2, 4):
                report.extend(degree_shift_check(r, i, deg))
    return report
