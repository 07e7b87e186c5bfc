"""Exact scalar arithmetic: prime fields F_p and the rationals.

Scalars are plain Python values: ints in [0, p) for F_p, Fraction for Q.
All arithmetic is exact and bit-for-bit reproducible; nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotPrime, ParseError

# Mod-p row operations are done in int64; keep p small enough that
# a pivot*entry product plus accumulation never overflows.
MAX_PRIME = 1 << 25


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """F_p with elements represented as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p > MAX_PRIME:
            raise NotPrime(f"prime {p} exceeds supported bound {MAX_PRIME}")
        self.p = p

    kind = "fp"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, -1, self.p)

    def format_scalar(self, a) -> str:
        return str(a % self.p)

    def parse_scalar(self, s: str):
        try:
            return int(s, 10) % self.p
        except ValueError:
            raise ParseError(f"bad F_{self.p} scalar {s!r}") from None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Rationals:
    """Q with Fraction scalars."""

    __slots__ = ()

    kind = "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def format_scalar(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse_scalar(self, s: str):
        try:
            if "/" in s:
                num, den = s.split("/", 1)
                return Fraction(int(num, 10), int(den, 10))
            return Fraction(int(s, 10))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational scalar {s!r}") from None

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


QQ = Rationals()


def field_from_spec(spec: str):
    """Parse a field spec like "q" or "fp:101" (CLI --field syntax)."""
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:], 10)
        except ValueError:
            raise ParseError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise ParseError(f"bad field spec {spec!r}")
