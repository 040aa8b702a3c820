"""Coefficient fields: the rationals and prime fields F_p.

Elements of F_p are plain ints in ``range(p)``.  Rational elements are ints
whenever possible and :class:`fractions.Fraction` otherwise, which keeps the
common +-1 boundary arithmetic on the fast int path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """``Field(0)`` is Q, ``Field(p)`` is F_p for a prime p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``q``, ``f2``, ``f3``, ... and ``fp:P``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "0"):
            return cls(0)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field {text!r} (expected q, f2, fp:P)")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def name(self) -> str:
        return "q" if self.p == 0 else f"f{self.p}"

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction or string such as ``-3/4`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x if isinstance(x, (int, Fraction)) else Fraction(x)

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def inv(self, a):
        if self.p:
            if a % self.p == 0:
                raise ZeroDivisionError("zero has no inverse")
            return pow(a, -1, self.p)
        if a == 1 or a == -1:
            return a
        return 1 / Fraction(a)

    def div(self, a, b):
        if self.p:
            return a * self.inv(b) % self.p
        if isinstance(a, int) and isinstance(b, int) and a % b == 0:
            return a // b
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def format(self, a) -> str:
        return str(a)


Q = Field(0)
F2 = Field(2)
F3 = Field(3)
