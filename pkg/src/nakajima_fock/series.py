"""Truncated formal power series over an exact commutative coefficient ring.

Coefficients only need ``+``, ``-``, ``*`` with each other and with ``int`` /
``Fraction`` scalars.  ``Fraction`` and :class:`~nakajima_fock.symcore.SymFunc`
both qualify, so the same code handles numeric series and the generating
functions E(z), H(z), P(z) with coefficients in the ring of symmetric
functions.  Series whose coefficients form a module (e.g. Fock vectors) also
work for addition and scalar-series multiplication.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable, Sequence


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    """c_0 + c_1 z + ... + c_N z^N, arithmetic exact modulo z^(N+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            coeffs = [Fraction(0)]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        zero = coeffs[0] * 0
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs[: order + 1]]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_function(cls, f: Callable[[int], Any], order: int) -> "TruncatedSeries":
        return cls([f(n) for n in range(order + 1)], order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff=Fraction(1)) -> "TruncatedSeries":
        zero = coeff * 0
        return cls([coeff if k == n else zero for k in range(order + 1)], order)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _zero(self):
        return self.coeffs[0] * 0

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def map(self, f: Callable[[Any], Any]) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], self.order)

    def scale(self, c) -> "TruncatedSeries":
        """The series a(c*z)."""
        return TruncatedSeries([a * Fraction(c) ** n for n, a in enumerate(self.coeffs)], self.order)

    # ring operations
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] + other
            return TruncatedSeries(coeffs, self.order)
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(self.order + 1):
            acc = None
            for k in range(n + 1):
                if _is_zero(a[k]) or _is_zero(b[n - k]):
                    continue
                term = a[k] * b[n - k]
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else a[0] * b[0] * 0)
        return TruncatedSeries(out, self.order)

    def __rmul__(self, other):
        if isinstance(other, TruncatedSeries):
            return other.__mul__(self)
        return TruncatedSeries([other * a for a in self.coeffs], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        try:
            inv0 = 1 / self.coeffs[0]
        except ZeroDivisionError:
            raise ValueError("constant term is not invertible") from None
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                if not _is_zero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return TruncatedSeries([a / other for a in self.coeffs], self.order)

    def int_pow(self, k: int) -> "TruncatedSeries":
        """Integer power by repeated squaring; negative k needs an invertible c_0."""
        base = self.inverse() if k < 0 else self
        k = abs(k)
        result = TruncatedSeries([self.coeffs[0] * 0 + 1], self.order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    __pow__ = int_pow

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries([self._zero()], 0)
        return TruncatedSeries(
            [n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1
        )

    def integral(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term, at the same order (top term dropped)."""
        out = [self._zero()]
        out += [self.coeffs[n - 1] * Fraction(1, n) for n in range(1, self.order + 1)]
        return TruncatedSeries(out, self.order)

    def exp(self) -> "TruncatedSeries":
        """exp(a) for c_0 = 0, from n f_n = sum_{k=1}^n k a_k f_{n-k}."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp requires a zero constant term")
        a = self.coeffs
        f = [self._zero() + 1]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    acc = acc + (a[k] * f[n - k]) * k
            f.append(acc * Fraction(1, n))
        return TruncatedSeries(f, self.order)

    def log(self) -> "TruncatedSeries":
        """log(a) for c_0 = 1, from n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}."""
        if not self.coeffs[0] == 1:
            raise ValueError("log requires constant term 1")
        a = self.coeffs
        g = [self._zero()]
        for n in range(1, self.order + 1):
            acc = a[n] * n
            for k in range(1, n):
                if not _is_zero(g[k]) and not _is_zero(a[n - k]):
                    acc = acc - (g[k] * a[n - k]) * k
            g.append(acc * Fraction(1, n))
        return TruncatedSeries(g, self.order)

    # serialization
    def to_dict(self, encode: Callable[[Any], Any] | None = None) -> dict:
        encode = encode or _encode_coefficient
        return {"order": self.order, "coeffs": [encode(c) for c in self.coeffs]}

    def to_json(self, encode: Callable[[Any], Any] | None = None) -> str:
        return json.dumps(self.to_dict(encode), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict, decode: Callable[[Any], Any] | None = None) -> "TruncatedSeries":
        decode = decode or _decode_coefficient
        return cls([decode(c) for c in data["coeffs"]], int(data["order"]))

    def __repr__(self) -> str:
        body = ", ".join(repr(c) if not isinstance(c, Fraction) else str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"


def _encode_coefficient(c):
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        return {"num": c.numerator, "den": c.denominator}
    if hasattr(c, "to_dict"):
        return c.to_dict()
    raise TypeError(f"no JSON encoding for coefficient of type {type(c).__name__}")


def _decode_coefficient(d):
    if "basis" in d:
        from .symcore import SymFunc

        return SymFunc.from_dict(d)
    return Fraction(int(d["num"]), int(d["den"]))


def series_z(order: int) -> TruncatedSeries:
    """The series z itself."""
    return TruncatedSeries.monomial(1, order)
