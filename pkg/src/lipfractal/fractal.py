"""Fractal squares K = (K + D)/n with exact rational geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .symbolic import Code

Digit = tuple[int, int]


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Cell:
    """The closed square ``origin + [0, side]^2``."""

    origin: RationalPoint
    side: Fraction

    def contains(self, p: RationalPoint) -> bool:
        ox, oy = self.origin
        return ox <= p.x <= ox + self.side and oy <= p.y <= oy + self.side


@dataclass(frozen=True)
class FractalSquare:
    """Expansion factor ``n`` and ordered digit list; label j is ``digits[j-1]``."""

    n: int
    digits: tuple[Digit, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(tuple(d) for d in self.digits))
        if self.n < 2:
            raise ValueError(f"expansion factor must be >= 2, got {self.n}")
        if len(self.digits) < 2:
            raise ValueError("need at least two digits")
        if len(self.digits) > 9:
            raise ValueError("at most 9 digits are supported (single-digit labels)")
        if len(set(self.digits)) != len(self.digits):
            raise ValueError("duplicate digit")
        for a, b in self.digits:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"digit {(a, b)} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.digits)

    @property
    def labels(self) -> str:
        return "".join(str(j) for j in range(1, self.m + 1))

    @property
    def dimension(self) -> float:
        """Similarity dimension log m / log n."""
        return math.log(self.m) / math.log(self.n)

    def digit(self, letter: str | int) -> Digit:
        j = int(letter)
        if not 1 <= j <= self.m:
            raise ValueError(f"letter {j} is not a label of a system with {self.m} digits")
        return self.digits[j - 1]


def make_system(n: int, digits, name: str = "") -> FractalSquare:
    return FractalSquare(n, tuple(tuple(d) for d in digits), name)


E = make_system(3, [(0, 0), (1, 0), (2, 0), (2, 1), (1, 2)], "E")
F = make_system(3, [(1, 2), (1, 1), (1, 0), (0, 0), (2, 1)], "F")
FULL3 = make_system(3, [(a, b) for b in range(3) for a in range(3)], "full")

PRESETS = {"E": E, "F": F}


def parse_digits(text: str) -> list[Digit]:
    """Parse ``"a,b;a,b;..."``."""
    out = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        a, b = item.split(",")
        out.append((int(a), int(b)))
    return out


def word_offset(sys: FractalSquare, w: str) -> tuple[int, int]:
    """Integer numerators of the cell origin of ``w``, over ``n**len(w)``."""
    a = b = 0
    n = sys.n
    for ch in w:
        da, db = sys.digit(ch)
        a = a * n + da
        b = b * n + db
    return a, b


def cell_of(sys: FractalSquare, w: str) -> Cell:
    a, b = word_offset(sys, w)
    side = Fraction(1, sys.n ** len(w))
    return Cell(RationalPoint(a * side, b * side), side)


def project(sys: FractalSquare, x: Code) -> RationalPoint:
    """The point coded by ``x``.

    The tail contributes ``d_tail * n^-p / (n - 1)`` where ``p`` is the
    prefix length.
    """
    a, b = word_offset(sys, x.prefix)
    ta, tb = sys.digit(x.tail)
    n1 = sys.n - 1
    den = sys.n ** len(x.prefix) * n1
    return RationalPoint(Fraction(a * n1 + ta, den), Fraction(b * n1 + tb, den))


def sq_dist(p: RationalPoint, q: RationalPoint) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy
