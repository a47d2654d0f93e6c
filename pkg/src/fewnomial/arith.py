"""Exact arithmetic base layer: reduced rationals, p-adic valuations, primality.

Rationals are stdlib :class:`fractions.Fraction` throughout (always stored
reduced, positive denominator, structural equality).  The only extension is
the ``+infinity`` element needed so that ``ord_p(0)`` has a value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class PlusInfinity:
    """The valuation of zero.  Greater than every rational, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+inf"

    def __eq__(self, other):
        return isinstance(other, PlusInfinity)

    def __hash__(self):
        return hash("fewnomial.+inf")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, PlusInfinity)

    def __gt__(self, other):
        return not isinstance(other, PlusInfinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("-inf is not an extended valuation")


#: Singleton returned by ord_p at zero.
INFINITY = PlusInfinity()

#: A valuation: an exact rational, or INFINITY (only at zero).
ExtendedValuation = "Fraction | int | PlusInfinity"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witness set).

    Exact for all inputs below 3.3e24, far beyond 64-bit range.
    """
    if p < 0:
        raise ValueError("primality is defined for nonnegative integers")
    if p < 2:
        return False
    for q in _MR_BASES:
        if p == q:
            return True
        if p % q == 0:
            return False
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime integer, got {p!r}")


def multiplicity(n: int, p: int) -> int:
    """Exponent of the prime p in the nonzero integer n."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(q, p: int):
    """p-adic valuation of a rational: exponent of p in q, INFINITY at 0.

    Negative values occur when p divides the denominator, e.g.
    ord_2(3/4) = -2.
    """
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return multiplicity(q.numerator, p) - multiplicity(q.denominator, p)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the I/O rational literal: optional sign, integer, optional /positive-integer."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(s)


def format_rational(q) -> str:
    """Render a rational as num or num/den, the literal syntax parse_rational accepts."""
    return str(Fraction(q))
