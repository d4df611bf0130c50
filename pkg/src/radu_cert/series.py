"""Exact truncated q-series over Python integers.

A :class:`TruncatedSeries` holds the coefficients of q^0 .. q^(precision-1).
Every binary operation truncates to the smaller precision of its operands;
nothing is ever zero-padded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from sympy import divisors


class SeriesError(ArithmeticError):
    pass


class NonUnitConstantTerm(SeriesError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class PrecisionExceeded(SeriesError, IndexError):
    """Raised when a coefficient beyond the known prefix is requested."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        values = tuple(coeffs)
        for c in values:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"series coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", values)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, e: int) -> TruncatedSeries:
        return power(self, e)

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def one(cls, precision: int) -> TruncatedSeries:
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        return cls([1] + [0] * (precision - 1)) if precision else cls([])


@dataclass(frozen=True)
class ExponentVector:
    """Exponents r_delta of an eta quotient, one per positive divisor of ``level``.

    ``entries`` is kept as a tuple of ``(delta, r_delta)`` pairs sorted by
    delta, so instances are hashable and compare by value.
    """

    level: int
    entries: tuple[tuple[int, int], ...]

    def __init__(self, level: int, entries: Mapping[int, int]):
        if not isinstance(level, int) or level < 1:
            raise ValueError(f"level must be a positive integer, got {level!r}")
        divs = divisors(level)
        if set(entries) != set(divs):
            raise ValueError(
                f"exponent keys {sorted(entries)} are not the divisors {divs} of {level}"
            )
        items = tuple((int(d), int(entries[d])) for d in divs)
        if all(r == 0 for _, r in items):
            raise ValueError("all exponents are zero; the quotient would be trivial")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "entries", items)

    @classmethod
    def from_list(cls, level: int, values: Iterable[int]) -> ExponentVector:
        """Build from exponents listed in increasing-divisor order."""
        values = list(values)
        divs = divisors(level) if isinstance(level, int) and level >= 1 else []
        if len(values) != len(divs):
            raise ValueError(
                f"level {level} has {len(divs)} divisors but {len(values)} exponents were given"
            )
        return cls(level, dict(zip(divs, values)))

    @property
    def divisors(self) -> list[int]:
        return [d for d, _ in self.entries]

    def values(self) -> list[int]:
        return [r for _, r in self.entries]

    def items(self):
        return iter(self.entries)

    def __getitem__(self, delta: int) -> int:
        for d, r in self.entries:
            if d == delta:
                return r
        raise KeyError(delta)

    def weight_sum(self) -> int:
        """Sum of r_delta."""
        return sum(r for _, r in self.entries)

    def order_sum(self) -> int:
        """Sum of delta * r_delta (24 times the order at infinity)."""
        return sum(d * r for d, r in self.entries)

    def __str__(self) -> str:
        return f"({','.join(str(r) for r in self.values())})@{self.level}"


def euler_factor(delta: int, precision: int) -> TruncatedSeries:
    """(q^delta; q^delta)_inf to ``precision`` terms via the pentagonal number theorem."""
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    out = [0] * precision
    if precision:
        out[0] = 1
    k = 1
    while True:
        # generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2 for k >= 1
        lo = delta * (k * (3 * k - 1) // 2)
        if lo >= precision:
            break
        sign = -1 if k % 2 else 1
        out[lo] = sign
        hi = delta * (k * (3 * k + 1) // 2)
        if hi < precision:
            out[hi] = sign
        k += 1
    return TruncatedSeries(out)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.precision, b.precision)
    x, y = a.coeffs[:n], b.coeffs[:n]
    # loop over the sparser operand; Euler factors are mostly zeros
    if sum(1 for c in x if c) > sum(1 for c in y if c):
        x, y = y, x
    out = [0] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(n - i):
            yj = y[j]
            if yj:
                out[i + j] += xi * yj
    return TruncatedSeries(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    n = a.precision
    if n == 0:
        return a
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit in Z")
    nonzero = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    b = [0] * n
    b[0] = a0
    for i in range(1, n):
        acc = 0
        for j, c in nonzero:
            if j > i:
                break
            acc += c * b[i - j]
        # a0 is its own inverse
        b[i] = -a0 * acc
    return TruncatedSeries(b)


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """a**e by binary exponentiation; negative e inverts first."""
    if e < 0:
        return power(invert(a), -e)
    result = TruncatedSeries.one(a.precision)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


@lru_cache(maxsize=64)
def eta_quotient(r: ExponentVector, precision: int) -> TruncatedSeries:
    """Coefficients c_r(n), n < precision, of prod_{delta | M} (q^delta; q^delta)^r_delta."""
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    result = TruncatedSeries.one(precision)
    for delta, r_delta in r.items():
        if r_delta:
            result = mul(result, power(euler_factor(delta, precision), r_delta))
    return result


def coefficient(a: TruncatedSeries, n: int) -> int:
    if n < 0:
        raise IndexError(f"negative exponent {n}")
    if n >= a.precision:
        raise PrecisionExceeded(f"coefficient of q^{n} requested, precision is {a.precision}")
    return a.coeffs[n]
