"""The ring of symmetric functions over the rationals, in five classical bases.

Elements are sparse maps ``Partition -> Fraction`` tagged with a basis:

    m  monomial          e  elementary        h  complete homogeneous
    p  power sum         s  Schur

All conversions go through the monomial basis.  Transition matrices are
computed once per (basis, degree) and cached; their inverses come from
sparse back substitution along dominance order.  Products are taken in the
power-sum basis, where the ring is free and multiplication is concatenation
of partitions.
"""

from __future__ import annotations

import json
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from collections import Counter
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .partitions import Partition, enumerate_partitions

BASES = ("m", "e", "h", "p", "s")
_ALIASES = {
    "monomial": "m",
    "elementary": "e",
    "complete": "h",
    "power": "p",
    "schur": "s",
}
DEFAULT_DEGREE_CAP = 12

Scalar = Union[int, Fraction]
Terms = dict[Partition, Scalar]


class DegreeCapError(ValueError):
    """Raised when an operation would exceed the configured degree cap."""


def normalize_basis(basis: str) -> str:
    b = _ALIASES.get(basis, basis)
    if b not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    return b


def _add_into(acc: Terms, terms: Mapping[Partition, Fraction], scale: Scalar = 1) -> None:
    for k, v in terms.items():
        c = acc.get(k, 0) + scale * v
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)


# ---------------------------------------------------------------------------
# Pieri-type rule for p_i * m_mu


def pieri_targets(mu: Partition, i: int) -> list[tuple[Partition, int]]:
    """Expansion of p_i * m_mu in the monomial basis.

    Each target nu is mu with i added to one part (a zero part allowed, which
    appends a new part i).  Its coefficient is the number of parts of nu equal
    to the value just created.

    >>> pieri_targets(Partition([1]), 1)
    [(Partition([2]), 1), (Partition([1, 1]), 2)]
    """
    if i < 1:
        raise ValueError("i must be a positive integer")
    mu = Partition(mu)
    out: dict[Partition, int] = {}
    for part in sorted(set(mu), reverse=True) + [0]:
        if part == 0:
            nu = mu.add_part(i)
        else:
            nu = mu.remove_part(part).add_part(part + i)
        new_value = part + i
        coeff = sum(1 for v in nu if v == new_value)
        if out.setdefault(nu, coeff) != coeff:
            raise AssertionError(f"two sources produce {nu} from {mu}")
    return sorted(out.items(), key=lambda kv: kv[0], reverse=True)


def _multiply_p_terms(terms: Mapping[Partition, Fraction], i: int) -> Terms:
    acc: Terms = {}
    for mu, c in terms.items():
        for nu, a in pieri_targets(mu, i):
            _add_into(acc, {nu: a}, c)
    return acc


# ---------------------------------------------------------------------------
# Transition matrices


@lru_cache(maxsize=None)
def _p_in_m(lam: Partition) -> Mapping[Partition, int]:
    if not lam:
        return MappingProxyType({Partition(): 1})
    rest = _p_in_m(Partition(lam[1:]))
    return MappingProxyType(_multiply_p_terms(rest, lam[0]))


def _bounded_multisets(total: int, slots: int, cap: int, largest: int | None = None):
    """Weakly decreasing tuples of length `slots` with entries in [0, cap] summing to total."""
    if largest is None:
        largest = cap
    if slots == 0:
        if total == 0:
            yield ()
        return
    if total > slots * largest:
        return
    for first in range(min(total, largest), -1, -1):
        for rest in _bounded_multisets(total - first, slots - 1, cap, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _placements(total: int, slots: int, cap: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for takes in _bounded_multisets(total, slots, cap):
        mult = factorial(slots)
        for k in Counter(takes).values():
            mult //= factorial(k)
        out.append((takes, mult))
    return tuple(out)


@lru_cache(maxsize=None)
def _matrix_count(rows: tuple[int, ...], cols: tuple[int, ...], binary: bool) -> int:
    """Number of matrices over {0,1} (binary) or N with the given row and column sums.

    `cols` is kept sorted, since the count is symmetric in the column order.
    Columns of equal sum are handled together: a row places a multiset of
    values into such a group, counted with its multinomial multiplicity.
    """
    if not rows:
        return int(not cols)
    first, rest = rows[0], rows[1:]
    groups = sorted(Counter(cols).items(), reverse=True)
    capacity = [0] * (len(groups) + 1)
    for g in range(len(groups) - 1, -1, -1):
        value, size = groups[g]
        capacity[g] = capacity[g + 1] + size * (1 if binary else value)
    total = 0

    def place(g: int, left: int, ways: int, new_cols: list[int]):
        nonlocal total
        if g == len(groups):
            if left == 0:
                key = tuple(sorted((c for c in new_cols if c), reverse=True))
                total += ways * _matrix_count(rest, key, binary)
            return
        if capacity[g] < left:
            return
        value, size = groups[g]
        cap = 1 if binary else value
        for t in range(min(left, size * cap), -1, -1):
            for takes, mult in _placements(t, size, cap):
                place(g + 1, left - t, ways * mult, new_cols + [value - x for x in takes])

    place(0, first, 1, [])
    return total


def _p_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> Terms:
    acc: Terms = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = Partition(la + lb)
            c = acc.get(key, 0) + ca * cb
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
    return acc


@lru_cache(maxsize=None)
def _jacobi_trudi(lam: Partition) -> Mapping[Partition, Fraction]:
    """s_lam = det(h_{lam_i - i + j}) expanded in the h basis."""
    n = len(lam)
    memo: dict[tuple[int, int], Terms] = {}

    def minor(row: int, cols: int) -> Terms:
        # determinant of rows row..n-1 against the column set encoded in `cols`
        if row == n:
            return {Partition(): 1}
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc: Terms = {}
        position = 0
        for col in range(n):
            if not cols >> col & 1:
                continue
            idx = lam[row] - row + col
            sign = -1 if position % 2 else 1
            position += 1
            if idx < 0:
                continue
            sub = minor(row + 1, cols & ~(1 << col))
            for mu, c in sub.items():
                key2 = mu.add_part(idx) if idx > 0 else mu
                v = acc.get(key2, 0) + sign * c
                if v:
                    acc[key2] = v
                else:
                    acc.pop(key2, None)
        memo[key] = acc
        return acc

    return MappingProxyType(minor(0, (1 << n) - 1))


@lru_cache(maxsize=None)
def _basis_in_m(basis: str, lam: Partition) -> Mapping[Partition, Fraction]:
    if basis == "m":
        return MappingProxyType({lam: 1})
    if basis == "p":
        return _p_in_m(lam)
    if basis in ("e", "h"):
        # coefficient of x^mu in prod_k e_{lam_k} (resp. h) counts 0-1 (resp.
        # non-negative integer) matrices with row sums lam and column sums mu
        out = {}
        for mu in enumerate_partitions(lam.weight):
            c = _matrix_count(tuple(lam), tuple(mu), basis == "e")
            if c:
                out[mu] = c
        return MappingProxyType(out)
    if basis == "s":
        acc = {}
        for mu, c in _jacobi_trudi(lam).items():
            _add_into(acc, _basis_in_m("h", mu), c)
        return MappingProxyType(acc)
    raise ValueError(basis)


def _back_substitute(basis: str, degree: int) -> dict[Partition, Terms]:
    """Invert a triangular transition matrix by sparse back substitution.

    p_lam and s_lam have leading monomial m_lam, with every other monomial
    strictly above (p) or below (s) lam in dominance order; e_lam has leading
    monomial m_{lam'} with the rest below.  Dominance refines reverse
    lexicographic order, so processing in list order (p) or reversed order
    (e, s) always finds the non-leading terms already solved.
    """
    parts = enumerate_partitions(degree)
    if basis == "p":
        order, source = parts, {lam: lam for lam in parts}
    elif basis == "s":
        order, source = parts[::-1], {lam: lam for lam in parts}
    elif basis == "e":
        order, source = parts[::-1], {lam.conjugate(): lam for lam in parts}
    else:
        raise ValueError(basis)
    solved: dict[Partition, Terms] = {}
    for nu in order:
        lam = source[nu]
        expansion = _basis_in_m(basis, lam)
        acc: Terms = {lam: 1}
        for mu, c in expansion.items():
            if mu == nu:
                continue
            if mu not in solved:
                raise ArithmeticError(f"{basis} transition matrix is not triangular at {nu}")
            _add_into(acc, solved[mu], -c)
        lead = expansion[nu]
        solved[nu] = acc if lead == 1 else {k: Fraction(v, lead) for k, v in acc.items()}
    return solved


@lru_cache(maxsize=None)
def _m_in_basis(basis: str, degree: int) -> Mapping[Partition, Mapping[Partition, Fraction]]:
    """For each mu of the given degree, m_mu written in `basis`."""
    parts = enumerate_partitions(degree)
    if basis == "m":
        table = {mu: {mu: 1} for mu in parts}
    elif basis == "h":
        # m -> s by back substitution, then s -> h by Jacobi-Trudi
        table = {}
        for mu, in_s in _m_in_basis("s", degree).items():
            acc: Terms = {}
            for lam, c in in_s.items():
                _add_into(acc, _jacobi_trudi(lam), c)
            table[mu] = acc
    else:
        table = _back_substitute(basis, degree)
    return MappingProxyType({mu: MappingProxyType(t) for mu, t in table.items()})


_degree_cap: ContextVar[int] = ContextVar("degree_cap", default=DEFAULT_DEGREE_CAP)


def current_degree_cap() -> int:
    return _degree_cap.get()


@contextmanager
def degree_cap(cap: int):
    """Set the degree cap for conversions and products inside the block.

    The setting is context-local, so concurrent threads do not see each
    other's caps.
    """
    if cap < 0:
        raise ValueError("degree cap must be non-negative")
    token = _degree_cap.set(cap)
    try:
        yield cap
    finally:
        _degree_cap.reset(token)


def _check_cap(degree: int, max_degree: int | None) -> None:
    if max_degree is None:
        max_degree = _degree_cap.get()
    if degree > max_degree:
        raise DegreeCapError(f"degree {degree} exceeds the configured cap {max_degree}")


def _convert_terms(terms: Mapping[Partition, Fraction], source: str, target: str) -> Terms:
    if source == target:
        return dict(terms)
    in_m: Terms = {}
    for lam, c in terms.items():
        _add_into(in_m, _basis_in_m(source, lam), c)
    if target == "m":
        return in_m
    out: Terms = {}
    for mu, c in in_m.items():
        _add_into(out, _m_in_basis(target, mu.weight)[mu], c)
    return out


# ---------------------------------------------------------------------------
# The element type


class SymFunc:
    """A symmetric function with exact rational coefficients in a fixed basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | Iterable | None = None):
        self.basis = normalize_basis(basis)
        clean: Terms = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for key, value in items:
            key = key if isinstance(key, Partition) else Partition(key)
            c = clean.get(key, 0) + Fraction(value)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._terms = clean

    # constructors
    @classmethod
    def zero(cls, basis: str = "m") -> "SymFunc":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "m") -> "SymFunc":
        return cls(basis, {Partition(): 1})

    @classmethod
    def basis_element(cls, basis: str, parts: Iterable[int]) -> "SymFunc":
        return cls(basis, {Partition(parts): 1})

    @classmethod
    def monomial(cls, parts: Iterable[int]) -> "SymFunc":
        return cls.basis_element("m", parts)

    @classmethod
    def schur(cls, parts: Iterable[int]) -> "SymFunc":
        return cls.basis_element("s", parts)

    @classmethod
    def elementary(cls, n: int) -> "SymFunc":
        return cls.basis_element("e", [n] if n else [])

    @classmethod
    def complete(cls, n: int) -> "SymFunc":
        return cls.basis_element("h", [n] if n else [])

    @classmethod
    def power(cls, n: int) -> "SymFunc":
        if n < 1:
            raise ValueError("p_0 is not defined")
        return cls.basis_element("p", [n])

    # inspection
    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        return max((mu.weight for mu in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({mu.weight for mu in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not mu for mu in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(Partition(), Fraction(0))

    def graded_piece(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {k: v for k, v in self._terms.items() if k.weight == d})

    def coefficient(self, parts: Iterable[int]) -> Fraction:
        return self._terms.get(Partition(parts), Fraction(0))

    # conversions
    def to(self, basis: str, max_degree: int | None = None) -> "SymFunc":
        return convert(self, basis, max_degree)

    # arithmetic
    def _coerce(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return other.to(self.basis) if other.basis != self.basis else other
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {Partition(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return SymFunc(self.basis, acc)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SymFunc(self.basis, {k: c * v for k, v in self._terms.items()})
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, SymFunc) and other.is_constant() and not other.is_zero():
            return self * (1 / other.constant_term())
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not self.is_constant() or self.is_zero():
            raise ZeroDivisionError("only nonzero constants are invertible in the ring")
        return SymFunc(self.basis, {Partition(): Fraction(other) / self.constant_term()})

    def __pow__(self, k: int) -> "SymFunc":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = SymFunc.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFunc(self.basis, {Partition(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to(self.basis, max(current_degree_cap(), other.degree))
        return self._terms == other._terms

    __hash__ = None  # equality is basis-independent, so no stable hash

    # serialization
    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": str(mu), "num": c.numerator, "den": c.denominator}
                for mu, c in sorted(self._terms.items(), key=_term_order)
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SymFunc":
        terms = {}
        for t in data["terms"]:
            terms[Partition.parse(t["partition"])] = Fraction(int(t["num"]), int(t["den"]))
        return cls(data["basis"], terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        if not self._terms:
            return f"SymFunc({self.basis!r}, 0)"
        pieces = []
        for mu, c in sorted(self._terms.items(), key=_term_order):
            label = f"{self.basis}{mu}"
            if c == 1:
                pieces.append(label)
            elif c == -1:
                pieces.append("-" + label)
            else:
                pieces.append(f"{c}*{label}")
        return " + ".join(pieces).replace("+ -", "- ")


def _term_order(item):
    mu = item[0]
    # lowest degree first, reverse lexicographic within a degree
    return (mu.weight, tuple(-p for p in mu))


# ---------------------------------------------------------------------------
# Public operations


def convert(f: SymFunc, target: str, max_degree: int | None = None) -> SymFunc:
    """Exact change of basis; raises DegreeCapError past `max_degree` (default: the current cap)."""
    target = normalize_basis(target)
    _check_cap(f.degree, max_degree)
    if f.basis == target:
        return f
    return SymFunc(target, _convert_terms(f.terms, f.basis, target))


def multiply_p(f: SymFunc, i: int, max_degree: int | None = None) -> SymFunc:
    """p_i * f, returned in the monomial basis (f is converted there first)."""
    if i < 1:
        raise ValueError("i must be a positive integer")
    f = convert(f, "m", max_degree)
    return SymFunc("m", _multiply_p_terms(f.terms, i))


def multiply(f: SymFunc, g: SymFunc, max_degree: int | None = None) -> SymFunc:
    """Product f*g, computed in the power-sum basis and returned in f's basis."""
    if f.is_zero() or g.is_zero():
        return SymFunc(f.basis)
    _check_cap(f.degree + g.degree, max_degree)
    fp = convert(f, "p", max_degree)
    gp = convert(g, "p", max_degree)
    prod = SymFunc("p", _p_product(fp.terms, gp.terms))
    return convert(prod, f.basis, max_degree)
