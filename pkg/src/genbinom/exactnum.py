"""Exact integer and rational arithmetic primitives.

Arbitrary-precision integers are plain ``int``; exact rationals are
``fractions.Fraction`` (always in lowest terms, denominator positive).
No floating point is used anywhere in this package.

All functions here are pure and safe to call from concurrent contexts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rat = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for n >= 0.

    Returns 0 whenever k < 0 or k > n, so summation loops need no
    explicit range guards.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial: n must be nonnegative, got {n}")
    return math.factorial(n)


def rising(x: Rat, n: int) -> Rat:
    """Rising factorial x(x+1)...(x+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"rising: n must be nonnegative, got {n}")
    out: Rat = 1
    for i in range(n):
        out *= x + i
    return out


def falling(x: Rat, n: int) -> Rat:
    """Falling factorial x(x-1)...(x-n+1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"falling: n must be nonnegative, got {n}")
    out: Rat = 1
    for i in range(n):
        out *= x - i
    return out


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (a_1! ... a_j!) for nonnegative parts a_i with sum n."""
    parts = tuple(parts)
    if any(a < 0 for a in parts):
        raise ValueError(f"multinomial: parts must be nonnegative, got {parts}")
    if sum(parts) != n:
        raise ValueError(f"multinomial: parts {parts} do not sum to {n}")
    out = factorial(n)
    for a in parts:
        out //= factorial(a)
    return out


def int_str(n: int) -> str:
    """Decimal-string serialization of an integer."""
    return str(n)


def rat_str(q: Rat) -> str:
    """Serialize a rational as "num/den" (always with the slash)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"
