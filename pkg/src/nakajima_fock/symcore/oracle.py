"""Brute-force expansion of symmetric functions in finitely many variables.

Every basis element is built straight from its combinatorial definition
(monomials, subsets, multisets, power sums, semistandard tableaux), with no
use of the transition matrices in ``symfunc``.  This is the ground truth the
rest of the symmetric-function code is tested against.

Exponent vectors are packed into a single int, EXP_BITS bits per variable,
so monomial multiplication is integer addition.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Mapping

from .partitions import Partition, enumerate_partitions
from .symfunc import SymFunc

EXP_BITS = 6
_MASK = (1 << EXP_BITS) - 1


def _pack(exps) -> int:
    key = 0
    for k, e in enumerate(exps):
        if e > _MASK:
            raise OverflowError("exponent too large for packed monomial")
        key |= e << (EXP_BITS * k)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (EXP_BITS * k)) & _MASK for k in range(nvars))


class Poly:
    """Sparse polynomial in x_1..x_N with int or Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[int, object] | None = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_exponents(cls, nvars: int, terms: Mapping[tuple, object]) -> "Poly":
        return cls(nvars, {_pack(e): c for e, c in terms.items()})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Poly":
        return cls(nvars, {0: c})

    def to_dict(self) -> dict[tuple[int, ...], object]:
        return {_unpack(k, self.nvars): v for k, v in self.terms.items()}

    def coefficient(self, exps) -> object:
        return self.terms.get(_pack(exps), 0)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c) -> "Poly":
        return Poly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict[int, object] = {}
        get = out.get
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = ka + kb
                out[k] = get(k, 0) + va * vb
        return Poly(self.nvars, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_dict()})"


def _rearrangement_keys(mu: Partition, nvars: int) -> list[int]:
    """Packed exponent keys of every distinct rearrangement of mu padded to nvars."""
    groups = sorted(Counter(mu).items(), reverse=True)
    keys = [0]
    frees = [tuple(range(nvars))]
    for value, count in groups:
        new_keys, new_frees = [], []
        for key, free in zip(keys, frees):
            for chosen in combinations(free, count):
                k = key
                for pos in chosen:
                    k |= value << (EXP_BITS * pos)
                new_keys.append(k)
                chosen_set = set(chosen)
                new_frees.append(tuple(f for f in free if f not in chosen_set))
        keys, frees = new_keys, new_frees
    return keys


@lru_cache(maxsize=4096)
def monomial_poly(mu: Partition, nvars: int) -> Poly:
    """m_mu(x_1..x_N): the sum of all distinct rearrangements of x^mu."""
    if len(mu) > nvars:
        return Poly(nvars)
    if mu and mu[0] > _MASK:
        raise OverflowError("exponent too large for packed monomial")
    return Poly(nvars, dict.fromkeys(_rearrangement_keys(mu, nvars), 1))


@lru_cache(maxsize=None)
def _elementary_poly(k: int, nvars: int) -> Poly:
    terms = {}
    for subset in combinations(range(nvars), k):
        exps = [0] * nvars
        for v in subset:
            exps[v] = 1
        terms[_pack(exps)] = 1
    return Poly(nvars, terms)


@lru_cache(maxsize=None)
def _complete_poly(k: int, nvars: int) -> Poly:
    terms = {}
    for multiset in combinations_with_replacement(range(nvars), k):
        exps = [0] * nvars
        for v in multiset:
            exps[v] += 1
        terms[_pack(exps)] = 1
    return Poly(nvars, terms)


@lru_cache(maxsize=None)
def _power_poly(k: int, nvars: int) -> Poly:
    terms = {}
    for v in range(nvars):
        exps = [0] * nvars
        exps[v] = k
        terms[_pack(exps)] = 1
    return Poly(nvars, terms)


@lru_cache(maxsize=1024)
def schur_poly(lam: Partition, nvars: int) -> Poly:
    """s_lam as the generating function of semistandard tableaux with entries <= N."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    filling: dict[tuple[int, int], int] = {}
    terms: dict[int, int] = {}

    def rec(idx: int):
        if idx == len(cells):
            exps = [0] * nvars
            for v in filling.values():
                exps[v] += 1
            key = _pack(exps)
            terms[key] = terms.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])  # rows weakly increase
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)  # columns strictly increase
        for v in range(lo, nvars):
            filling[(r, c)] = v
            rec(idx + 1)
        filling.pop((r, c), None)

    rec(0)
    return Poly(nvars, terms)


def basis_poly(basis: str, mu: Partition, nvars: int) -> Poly:
    if basis == "m":
        return monomial_poly(mu, nvars)
    if basis == "s":
        return schur_poly(mu, nvars)
    gen = {"e": _elementary_poly, "h": _complete_poly, "p": _power_poly}[basis]
    out = Poly.constant(nvars)
    for k in mu:
        out = out * gen(k, nvars)
    return out


def oracle_expand(f: SymFunc, nvars: int) -> Poly:
    """The image of f in the symmetric polynomials of `nvars` variables.

    The projection is injective on degree-d pieces only when nvars >= d.
    """
    acc: dict[int, object] = {}
    for mu, c in f.terms.items():
        coeff = int(c) if c.denominator == 1 else c
        for k, v in basis_poly(f.basis, mu, nvars).terms.items():
            acc[k] = acc.get(k, 0) + coeff * v
    return Poly(nvars, acc)


def monomial_coefficients(poly: Poly, degree: int) -> dict[Partition, object]:
    """Read a symmetric polynomial back in the monomial basis (dominant exponents)."""
    out = {}
    for k, v in poly.terms.items():
        exps = _unpack(k, poly.nvars)
        if sum(exps) == degree and all(a >= b for a, b in zip(exps, exps[1:])):
            out[Partition(e for e in exps if e)] = Fraction(v)
    return out


def _dominant_exponents(degree: int, nvars: int):
    for nu in enumerate_partitions(degree):
        if len(nu) <= nvars:
            yield nu, tuple(nu) + (0,) * (nvars - len(nu))


def product_dominant_coefficients(f: SymFunc, g: SymFunc, nvars: int) -> dict[Partition, Fraction]:
    """Coefficients of oracle(f) * oracle(g) at every weakly decreasing exponent.

    A symmetric polynomial is determined by these coefficients, so this decides
    equality of products without listing every monomial.  f is expanded in
    full; the coefficient of x^b in g is read off from g's monomial expansion
    (x^b has coefficient [m_sort(b)] g by the definition of m).  Both f and g
    must be homogeneous.
    """
    if not (f.is_homogeneous() and g.is_homogeneous()):
        raise ValueError("factors must be homogeneous")
    g_m = g.to("m", max(12, g.degree))
    fx = oracle_expand(f, nvars)
    out: dict[Partition, Fraction] = {}
    for nu, padded in _dominant_exponents(f.degree + g.degree, nvars):
        acc = Fraction(0)
        for key, c in fx.terms.items():
            a = _unpack(key, nvars)
            rest = [x - y for x, y in zip(padded, a)]
            if min(rest) < 0:
                continue
            acc += c * g_m.coefficient(sorted((e for e in rest if e), reverse=True))
        if acc:
            out[nu] = acc
    return out
