"""Arithmetic of admissible tuples (m, M, N, r, t).

Everything here is exact: integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any

from sympy import divisors, primefactors
from sympy.ntheory.factor_ import core

from .series import ExponentVector

ExactRational = Fraction


def rational(num: int, den: int = 1) -> Fraction:
    """Exact rational from integers only; floats are refused."""
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("ExactRational requires integer numerator and denominator")
    return Fraction(num, den)


class NotSquareFree(ValueError):
    """Neither N nor N/2 is square-free, so no coset representatives are known."""


@dataclass(frozen=True)
class ParameterTuple:
    m: int
    M: int
    N: int
    r: ExponentVector
    t: int

    def __post_init__(self):
        for name in ("m", "M", "N"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.r.level != self.M:
            raise ValueError(f"r has level {self.r.level} but M = {self.M}")
        if not 0 <= self.t < self.m:
            raise ValueError(f"t = {self.t} is not in [0, {self.m - 1}]")

    def as_tuple(self):
        return (self.m, self.M, self.N, tuple(self.r.values()), self.t)


@dataclass(frozen=True)
class CosetRep:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"[[{self.a},{self.b}],[{self.c},{self.d}]] has determinant != 1")

    @classmethod
    def lower(cls, delta: int) -> CosetRep:
        return cls(1, 0, delta, 1)

    def translate(self, n: int) -> CosetRep:
        """Right multiplication by [[1, n], [0, 1]]."""
        return CosetRep(self.a, self.a * n + self.b, self.c, self.c * n + self.d)


@dataclass(frozen=True)
class ConditionResult:
    id: int
    passed: bool
    vacuous: bool = False
    witness: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DeltaStarReport:
    member: bool
    k: int
    s2adic: int
    jodd: int
    condition_results: tuple[ConditionResult, ...]

    @property
    def failed(self) -> list[int]:
        return [c.id for c in self.condition_results if not c.passed]


def compute_k(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    return gcd(m * m - 1, 24)


def group_index(N: int) -> int:
    """[SL2(Z) : Gamma0(N)] = N * prod_{p | N} (1 + 1/p)."""
    if N < 1:
        raise ValueError("N must be positive")
    idx = N
    for p in primefactors(N):
        idx = idx // p * (p + 1)
    return idx


def squares_mod(n: int) -> set[int]:
    """Squares of the units of Z/nZ."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return {0}
    return {x * x % n for x in range(1, n) if gcd(x, n) == 1}


def _square_lifts(m: int) -> list[int]:
    # Each class of S_24m lifted into [1, 24m]; unit squares mod 24m are
    # already 1 mod 24 since units are prime to 6.
    mod = 24 * m
    lifts = sorted(s if s else mod for s in squares_mod(mod))
    assert all(s % 24 == 1 for s in lifts)
    return lifts


def orbit_step(tp: int, s: int, m: int, order_sum: int) -> int:
    return (tp * s + (s - 1) // 24 * order_sum) % m


def compute_P(tup: ParameterTuple) -> list[int]:
    """Sorted orbit P_{m,r}(t) of t under the square-class action."""
    osum = tup.r.order_sum()
    return sorted({orbit_step(tup.t, s, tup.m, osum) for s in _square_lifts(tup.m)})


def two_adic_split(r: ExponentVector) -> tuple[int, int]:
    """(s, j) with prod delta^|r_delta| = 2^s * j and j odd."""
    prod = 1
    for d, rd in r.items():
        prod *= d ** abs(rd)
    s = (prod & -prod).bit_length() - 1
    return s, prod >> s


def check_delta_star(tup: ParameterTuple) -> DeltaStarReport:
    """Evaluate all six admissibility conditions, without short-circuiting."""
    m, N, r, t = tup.m, tup.N, tup.r, tup.t
    k = compute_k(m)
    s, j = two_adic_split(r)
    wsum, osum = r.weight_sum(), r.order_sum()
    results = []

    primes_m = primefactors(m)
    missing = [p for p in primes_m if N % p]
    results.append(ConditionResult(1, not missing, witness={"primes_of_m": primes_m, "not_dividing_N": missing}))

    bad = [d for d, rd in r.items() if rd and (m * N) % d]
    results.append(ConditionResult(2, not bad, witness={"mN": m * N, "bad_deltas": bad}))

    val3 = k * N * sum(Fraction(rd * m * N, d) for d, rd in r.items())
    ok3 = val3.denominator == 1 and val3.numerator % 24 == 0
    results.append(ConditionResult(3, ok3, witness={"value": val3}))

    val4 = k * N * wsum
    results.append(ConditionResult(4, val4 % 8 == 0, witness={"value": val4}))

    g = gcd(-24 * k * t - k * osum, 24 * m)
    q5 = 24 * m // g
    results.append(ConditionResult(5, N % q5 == 0, witness={"gcd": g, "quotient": q5}))

    if m % 2:
        results.append(ConditionResult(6, True, vacuous=True, witness={"s": s, "j": j}))
    else:
        ok6 = (k * N % 4 == 0 and s * N % 8 == 0) or (s % 2 == 0 and (1 - j) * N % 8 == 0)
        results.append(ConditionResult(6, ok6, witness={"s": s, "j": j}))

    return DeltaStarReport(
        member=all(c.passed for c in results),
        k=k,
        s2adic=s,
        jodd=j,
        condition_results=tuple(results),
    )


def is_square_free(n: int) -> bool:
    return core(n) == n


def coset_reps(N: int) -> list[CosetRep]:
    """Double-coset representatives of Gamma0(N) \\ Gamma / Gamma_inf.

    Only available when N or N/2 is square-free; the representatives are
    then [[1, 0], [delta, 1]] for delta | N, in increasing delta.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if not (is_square_free(N) or (N % 2 == 0 and is_square_free(N // 2))):
        raise NotSquareFree(f"neither {N} nor {N}/2 is square-free")
    return [CosetRep.lower(d) for d in divisors(N)]


def p_lower_detail(gamma: CosetRep, m: int, r: ExponentVector) -> tuple[Fraction, int]:
    """Minimum over lambda of the cusp expression, with the smallest minimizing lambda."""
    k = compute_k(m)
    a, c = gamma.a, gamma.c
    best, arg = None, None
    for lam in range(m):
        total = Fraction(0)
        for d, rd in r.items():
            g = gcd(d * a + d * k * lam * c, m * c)
            total += Fraction(rd * g * g, d * m)
        total /= 24
        if best is None or total < best:
            best, arg = total, lam
    return best, arg


def p_lower(gamma: CosetRep, m: int, r: ExponentVector) -> Fraction:
    return p_lower_detail(gamma, m, r)[0]


def p_star(gamma: CosetRep, rprime: ExponentVector) -> Fraction:
    c = gamma.c
    return sum((Fraction(rd * gcd(d, c) ** 2, d) for d, rd in rprime.items()), Fraction(0)) / 24


def nu_bound(tup: ParameterTuple, rprime: ExponentVector, tmin: int) -> Fraction:
    """Number of coefficients (minus one, before flooring) that must be checked."""
    if rprime.level != tup.N:
        raise ValueError(f"r' has level {rprime.level} but N = {tup.N}")
    head = (tup.r.weight_sum() + rprime.weight_sum()) * group_index(tup.N) - rprime.order_sum()
    return Fraction(head, 24) - Fraction(tup.r.order_sum(), 24 * tup.m) - Fraction(tmin, tup.m)
