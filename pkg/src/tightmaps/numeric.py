"""Exact scalar helpers: half-integers, generalized binomials, multinomials.

Rationals are plain ``fractions.Fraction``; integers are Python ints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction, "HalfInt"]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A non-negative element of (1/2)Z, stored as its double.

    Boundary lengths are the doubles, so ``HalfInt(d)`` is the half-length
    of a boundary of length ``d``.
    """

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int) or self.twice < 0:
            raise ValueError(f"HalfInt needs a non-negative integer double, got {self.twice!r}")

    @classmethod
    def from_length(cls, d: int) -> "HalfInt":
        return cls(d)

    @classmethod
    def from_value(cls, x: Scalar) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        v = Fraction(x) * 2
        if v.denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(v))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __lt__(self, other: object) -> bool:
        return self.value < as_fraction(other)  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        try:
            return self.value == as_fraction(other)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)


def as_fraction(x: Scalar) -> Fraction:
    """Coerce an int, Fraction or HalfInt to a Fraction."""
    if isinstance(x, HalfInt):
        return x.value
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"expected int, Fraction or HalfInt, got {type(x).__name__}")


def is_integral(x: Scalar) -> bool:
    return as_fraction(x).denominator == 1


def half_lengths(lengths: Iterable[int]) -> list[Fraction]:
    """Boundary lengths d_i to half-lengths m_i = d_i / 2."""
    out = []
    for d in lengths:
        if isinstance(d, bool) or not isinstance(d, int) or d < 0:
            raise ValueError(f"boundary lengths must be non-negative integers, got {d!r}")
        out.append(Fraction(d, 2))
    return out


def falling(x: Scalar, k: int) -> Fraction:
    """Falling factorial x (x-1) ... (x-k+1); equals 1 for k = 0."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    x = as_fraction(x)
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def binom(x: Scalar, k: Scalar) -> Fraction:
    """Generalized binomial x(x-1)...(x-k+1)/k!, zero for negative k.

    Any rational top argument is accepted, so ``binom(-1, k) == (-1)**k``.
    The bottom argument must be integral.
    """
    kf = as_fraction(k)
    if kf.denominator != 1:
        raise ValueError(f"binomial bottom argument {k} is not an integer")
    k = int(kf)
    if k < 0:
        return Fraction(0)
    return falling(x, k) / math.factorial(k)


def ibinom(x: Scalar, k: int) -> int:
    """``binom`` when the result is known to be an integer."""
    v = binom(x, k)
    if v.denominator != 1:
        raise ValueError(f"binom({x}, {k}) = {v} is not an integer")
    return int(v)


def multinomial(n: Scalar, parts: Iterable[Scalar]) -> int:
    """Multinomial coefficient n! / prod(parts!).

    Zero when a part is negative or non-integral. The parts must add up to n,
    which may then be -1 only if some part is negative (and the value is zero).
    """
    parts = [as_fraction(p) for p in parts]
    n = as_fraction(n)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not add up to {n}")
    if any(p.denominator != 1 or p < 0 for p in parts):
        return 0
    out = math.factorial(int(n))
    for p in parts:
        out //= math.factorial(int(p))
    return out


def factorial(n: int) -> int:
    return math.factorial(n)


def format_rational(x: Scalar) -> str:
    """Decimal integer or ``num/den``."""
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
