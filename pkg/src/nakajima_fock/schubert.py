"""Intersection theory on the Grassmannian Gr(n quotients of C^r).

H*(Gr) is presented with the Schur basis s_lam, lam inside the n x m
rectangle (m = r - n): at most n rows, parts at most m.  A product is the
Littlewood-Richardson product of Schur functions with every partition that
does not fit the rectangle discarded.  In this presentation s_lam is the
Schur polynomial in the Chern roots x_1..x_n of the quotient bundle Q, so
c_i(Q) = e_i(x) = s_(1^i), and the relation c(S) c(Q) = 1 gives
c_k(S) = (-1)^k h_k(x).

The tensor-bundle Chern classes are computed from Chern roots: y_1..y_m for
S and x_1..x_n for Q.  Elementary symmetric functions of y are eliminated
through the trivial total bundle, e_k(y) = c_k(S).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .report import Report
from .series import TruncatedSeries
from .symcore import Partition, SymFunc, compositions, partitions_in_box

BUNDLES = ("Q", "Q_dual", "S", "S_dual")
TENSOR_VARIANTS = ("S_tensor_Qdual", "Sdual_tensor_Q", "Qdual_tensor_Q")


@dataclass(frozen=True)
class GrassRing:
    """H*(Gr(n, r)): n = rank of the quotient Q, m = r - n = rank of S."""

    r: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= self.r:
            raise ValueError(f"need 0 <= n <= r, got r={self.r}, n={self.n}")

    @property
    def m(self) -> int:
        return self.r - self.n

    @property
    def dimension(self) -> int:
        """Complex dimension n*m, the top cohomological degree (in units of 2)."""
        return self.n * self.m

    @property
    def point(self) -> Partition:
        """The full rectangle (m^n); its class is dual to a point."""
        return Partition([self.m] * self.n) if self.m else Partition()

    def fits(self, lam: Partition) -> bool:
        return lam.fits(self.n, self.m)

    def basis(self, degree: int | None = None) -> list[Partition]:
        return partitions_in_box(self.n, self.m, degree)

    def one(self) -> "CohomClass":
        return CohomClass(self, {Partition(): 1})

    def zero(self) -> "CohomClass":
        return CohomClass(self)

    def schur(self, parts: Iterable[int]) -> "CohomClass":
        lam = Partition(parts)
        return CohomClass(self, {lam: 1} if self.fits(lam) else {})


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """s_lam * s_mu in the Schur basis of the full ring of symmetric functions."""
    prod = SymFunc.schur(lam) * SymFunc.schur(mu)
    out = []
    for nu, c in prod.terms.items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral Littlewood-Richardson coefficient {c}")
        out.append((nu, int(c)))
    return tuple(out)


class CohomClass:
    """An integer combination of rectangle Schur classes in a fixed GrassRing."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: GrassRing, terms: Mapping | None = None):
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = Fraction(c)
            if c.denominator != 1:
                raise ArithmeticError(f"cohomology classes have integer coefficients, got {c}")
            if not ring.fits(lam):
                raise ValueError(f"{lam} does not fit the {ring.n}x{ring.m} rectangle")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
                if not clean[lam]:
                    del clean[lam]
        self.ring = ring
        self._terms = clean

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def coefficient(self, parts: Iterable[int]) -> int:
        return self._terms.get(Partition(parts), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def graded_piece(self, d: int) -> "CohomClass":
        return CohomClass(self.ring, {k: v for k, v in self._terms.items() if k.weight == d})

    def graded(self) -> list["CohomClass"]:
        """[degree 0 part, ..., degree n*m part]."""
        return [self.graded_piece(d) for d in range(self.ring.dimension + 1)]

    def _same_ring(self, other: "CohomClass") -> None:
        if other.ring != self.ring:
            raise ValueError("classes live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.one() * other
        if not isinstance(other, CohomClass):
            return NotImplemented
        self._same_ring(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return CohomClass(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "CohomClass":
        return CohomClass(self.ring, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CohomClass(self.ring, {k: v * other for k, v in self._terms.items()})
        if not isinstance(other, CohomClass):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "CohomClass":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.ring.one(), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self) -> "CohomClass":
        """Inverse of a class with constant term +-1, degree by degree."""
        c0 = self.coefficient(())
        if c0 not in (1, -1):
            raise ValueError("only classes with constant term +-1 are invertible")
        pieces = self.graded()
        inv = [self.ring.one() * c0]
        for k in range(1, self.ring.dimension + 1):
            acc = self.ring.zero()
            for j in range(1, k + 1):
                if not pieces[j].is_zero() and not inv[k - j].is_zero():
                    acc = acc + pieces[j] * inv[k - j]
            inv.append(-acc * c0)
        return sum(inv[1:], inv[0])

    def __truediv__(self, other: "CohomClass") -> "CohomClass":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.one() * other
        if not isinstance(other, CohomClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "r": self.ring.r,
            "n": self.ring.n,
            "terms": [
                {"partition": str(lam), "coeff": c}
                for lam, c in sorted(self._terms.items(), key=lambda t: (t[0].weight, [-p for p in t[0]]))
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "CohomClass":
        ring = GrassRing(int(data["r"]), int(data["n"]))
        return cls(ring, {Partition.parse(t["partition"]): int(t["coeff"]) for t in data["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for t in self.to_dict()["terms"]:
            label = "1" if t["partition"] == "[]" else "s" + t["partition"]
            c = t["coeff"]
            if c == 1:
                pieces.append(label)
            elif c == -1:
                pieces.append("-" + label)
            else:
                pieces.append(f"{c}*{label}")
        return " + ".join(pieces).replace("+ -", "- ")


def multiply(a: CohomClass, b: CohomClass) -> CohomClass:
    """Littlewood-Richardson product, dropping partitions outside the rectangle."""
    a._same_ring(b)
    ring = a.ring
    top = ring.dimension
    acc: dict[Partition, int] = {}
    for lam, c in a._terms.items():
        for mu, d in b._terms.items():
            if lam.weight + mu.weight > top:
                continue
            key = (lam, mu) if lam >= mu else (mu, lam)
            for nu, k in _lr_product(*key):
                if ring.fits(nu):
                    acc[nu] = acc.get(nu, 0) + c * d * k
    return CohomClass(ring, acc)


def integrate(a: CohomClass) -> int:
    """Coefficient of the point class s_(m^n)."""
    return a.coefficient(a.ring.point)


def total(classes: list[CohomClass]) -> CohomClass:
    return sum(classes[1:], classes[0])


def chern(bundle: str, ring: GrassRing) -> list[CohomClass]:
    """[c_0, ..., c_{n m}] of Q, Q_dual, S or S_dual."""
    if bundle not in BUNDLES:
        raise ValueError(f"unknown bundle {bundle!r}; expected one of {BUNDLES}")
    if bundle in ("S", "S_dual"):
        # c(S) is the inverse of c(Q) in the ring
        out = total(chern("Q", ring)).inverse().graded()
    else:
        out = [ring.schur([1] * i) if i <= ring.n else ring.zero()
               for i in range(ring.dimension + 1)]
    if bundle.endswith("_dual"):
        out = [c * (-1) ** i for i, c in enumerate(out)]
    return out


# ---------------------------------------------------------------------------
# Tensor products through Chern roots


def _expand_roots(nvars: int, roots: list[dict[int, int]], max_degree: int) -> dict[tuple, int]:
    """prod (1 + root) over the given linear forms, truncated above max_degree."""
    poly = {(0,) * nvars: 1}
    for root in roots:
        new = dict(poly)
        for expo, c in poly.items():
            if sum(expo) >= max_degree:
                continue
            for var, a in root.items():
                e = list(expo)
                e[var] += 1
                e = tuple(e)
                new[e] = new.get(e, 0) + a * c
        poly = {k: v for k, v in new.items() if v}
    return poly


def _is_dominant(block: tuple) -> bool:
    return all(block[k] >= block[k + 1] for k in range(len(block) - 1))


@lru_cache(maxsize=None)
def _sub_monomial_as_complete(mu: Partition, m: int) -> Mapping[Partition, Fraction]:
    """m_mu(y) in terms of h(x), via e_k(y) -> c_k(S) = (-1)^k h_k(x), e_k(y) = 0 for k > m."""
    in_e = SymFunc.monomial(mu).to("e", max(12, mu.weight))
    out = {}
    for nu, c in in_e.terms.items():
        if nu and nu[0] > m:
            continue
        out[nu] = c * (-1) ** nu.weight
    return out


def _roots(variant: str, m: int, n: int) -> list[dict[int, int]]:
    """Linear forms in (y_0..y_{m-1}, x_0..x_{n-1}); x_j is variable m + j."""
    roots = []
    if variant == "S_tensor_Qdual":
        roots = [{i: 1, m + j: -1} for i in range(m) for j in range(n)]
    elif variant == "Sdual_tensor_Q":
        roots = [{i: -1, m + j: 1} for i in range(m) for j in range(n)]
    elif variant == "Qdual_tensor_Q":
        roots = [{m + j: -1, m + k: 1} for j in range(n) for k in range(n) if j != k]
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {TENSOR_VARIANTS}")
    return roots


def chern_tensor(ring: GrassRing, variant: str) -> list[CohomClass]:
    """[c_0, ..., c_{n m}] of S (x) Q^v, S^v (x) Q, or Q^v (x) Q."""
    m, n, top = ring.m, ring.n, ring.dimension
    poly = _expand_roots(m + n, _roots(variant, m, n), top)
    acc = SymFunc.zero("p")
    for expo, c in sorted(poly.items()):
        y, x = expo[:m], expo[m:]
        if not (_is_dominant(y) and _is_dominant(x)):
            continue
        mu, lam = Partition(e for e in y if e), Partition(e for e in x if e)
        y_part = SymFunc("h", _sub_monomial_as_complete(mu, m)).to("p")
        acc = acc + y_part * SymFunc.monomial(lam).to("p") * c
    in_schur = acc.to("s", max(12, top))
    kept = {lam: c for lam, c in in_schur.terms.items() if ring.fits(lam)}
    return CohomClass(ring, kept).graded()


def excess_check(ring: GrassRing) -> Report:
    """c(V) from the tangent-bundle sequence against c(S (x) Q^v), class by class.

    c(V) = (c(Q) c(Q^v))^r c(S^v (x) Q) / (c(Q)^r c(Q)^r).  Also checks the two
    cancellation identities c(Q)^r = c(S^v (x) Q) c(Q^v (x) Q) and
    c(Q^v)^r = c(S (x) Q^v) c(Q (x) Q^v).
    """
    r = ring.r
    tag = f"r{r}-n{ring.n}"
    cQ = total(chern("Q", ring))
    cQd = total(chern("Q_dual", ring))
    tangent = total(chern_tensor(ring, "Sdual_tensor_Q"))
    cotangent = total(chern_tensor(ring, "S_tensor_Qdual"))
    endo = total(chern_tensor(ring, "Qdual_tensor_Q"))
    cQ_r = cQ ** r
    cV = (cQ * cQd) ** r * tangent / (cQ_r * cQ_r)

    report = Report("excess", notes={"r": r, "n": ring.n})
    for k, (got, want) in enumerate(zip(cV.graded(), cotangent.graded())):
        report.add(f"{tag}/c{k}(V)", "c(V) = (c(Q)c(Q^v))^r c(T) / c(Q)^(2r) = c(S(x)Q^v)",
                   want, got)
    report.add(f"{tag}/c(Q)^r", "c(Q)^r = c(S^v(x)Q) c(Q^v(x)Q)", cQ_r, tangent * endo)
    report.add(f"{tag}/c(Q^v)^r", "c(Q^v)^r = c(S(x)Q^v) c(Q(x)Q^v)", cQd ** r, cotangent * endo)
    return report


def euler_characteristic(ring: GrassRing) -> int:
    """Integral of the top Chern class of the tangent bundle S^v (x) Q."""
    return integrate(chern_tensor(ring, "Sdual_tensor_Q")[ring.dimension])


@lru_cache(maxsize=None)
def intersection_number(r: int, n: int) -> int:
    """Integral of c_top(S (x) Q^v) over Gr(n, r); 0 when n > r (empty intersection)."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be non-negative")
    if n > r:
        return 0
    ring = GrassRing(r, n)
    return integrate(chern_tensor(ring, "S_tensor_Qdual")[ring.dimension])


def expected_intersection_number(r: int, n: int) -> int:
    return (-1) ** (((r - 1) * n) % 2) * comb(r, n)


def schubert_report(r_max: int) -> Report:
    """One case per (r, n) with 0 <= n <= r <= r_max."""
    report = Report("verify-schubert", notes={"r_max": r_max})
    for r in range(r_max + 1):
        for n in range(r + 1):
            ring = GrassRing(r, n)
            excess = excess_check(ring)
            observed = {
                "intersection_number": intersection_number(r, n),
                "euler_characteristic": euler_characteristic(ring),
                "excess_check": excess.passed,
                "c(S)c(Q)=1": total(chern("S", ring)) * total(chern("Q", ring)) == 1,
                "parity": (-1) ** ((n * (r - n)) % 2) == (-1) ** (((r - 1) * n) % 2),
            }
            expected = {
                "intersection_number": expected_intersection_number(r, n),
                "euler_characteristic": comb(r, n),
                "excess_check": True,
                "c(S)c(Q)=1": True,
                "parity": True,
            }
            report.add(f"r{r}-n{n}", "int c_top(S(x)Q^v) = (-1)^((r-1)n) C(r,n)", expected, observed)
    return report


# ---------------------------------------------------------------------------
# The general case: sums over subdivisions


def pairing_coefficient(r: int, q: int, n: int) -> int:
    """sum over compositions nu of n into q parts of prod a_{nu_i}, a_i = intersection_number(r, i)."""
    if q < 1:
        raise ValueError("q must be at least 1")
    total_ = 0
    for nu in compositions(n, q):
        prod = 1
        for part in nu:
            prod *= intersection_number(r, part)
            if not prod:
                break
        total_ += prod
    return total_


def binomial_target(r: int, q: int, order: int) -> TruncatedSeries:
    """(1 + (-1)^(r-1) z^2)^(r q) to the given order in z."""
    return TruncatedSeries([1, 0, (-1) ** ((r - 1) % 2)], order).int_pow(r * q)


def pairing_gf_check(r: int, q: int, n_max: int) -> Report:
    target = binomial_target(r, q, 2 * n_max)
    report = Report("pairing", notes={"r": r, "q": q})
    for n in range(n_max + 1):
        report.add(f"r{r}-q{q}/n{n:02d}", "sum_nu a_nu1...a_nuq = [z^2n](1+(-1)^(r-1)z^2)^(rq)",
                   target[2 * n], Fraction(pairing_coefficient(r, q, n)))
    return report


def vandermonde_check(r: int, q: int, n: int) -> bool:
    """sum over compositions of prod C(r, nu_i) equals C(r q, n)."""
    lhs = 0
    for nu in compositions(n, q):
        prod = 1
        for part in nu:
            prod *= comb(r, part)
        lhs += prod
    return lhs == comb(r * q, n)
