"""Letters, finite words and eventually-constant codes.

A code is an infinite sequence ``prefix + tail^inf``.  Words are stored as
strings of decimal digits, so ``"355"`` is the word 3 5 5.  The default
alphabet is {1,...,5}; generic fractal squares with more branches use the
same representation with digits up to 9.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

LETTERS = "12345"
OMEGA_TAIL = "4"
INF = math.inf

_CODE_RE = re.compile(r"^([1-9]*)(?:@([1-9]))?$")


def _check_word(word: str, max_letter: int) -> None:
    for ch in word:
        if not ("1" <= ch <= "9") or int(ch) > max_letter:
            raise ValueError(f"invalid letter {ch!r} (alphabet is 1..{max_letter})")


@dataclass(frozen=True)
class Code:
    """An eventually-constant sequence ``prefix tail tail tail ...``.

    Instances are always canonical: the prefix never ends in the tail
    letter, so structural equality is equality of infinite sequences.
    """

    prefix: str = ""
    tail: str = OMEGA_TAIL

    def __post_init__(self):
        if len(self.tail) != 1:
            raise ValueError(f"tail must be a single letter, got {self.tail!r}")
        _check_word(self.prefix + self.tail, 9)
        stripped = self.prefix.rstrip(self.tail)
        if stripped != self.prefix:
            object.__setattr__(self, "prefix", stripped)

    @property
    def in_omega(self) -> bool:
        return self.tail == OMEGA_TAIL

    def __len__(self):
        return len(self.prefix)

    def __str__(self):
        return format_code(self)

    def letters(self, k: int) -> str:
        """The first ``k`` letters as a word."""
        p = self.prefix
        if k <= len(p):
            return p[:k]
        return p + self.tail * (k - len(p))

    def max_letter(self) -> int:
        return int(max(self.prefix + self.tail))


def parse_code(text: str, max_letter: int = 5) -> Code:
    """Parse ``<digits>[@t]``; a missing ``@t`` means tail 4."""
    text = text.strip()
    m = _CODE_RE.match(text)
    if m is None:
        raise ValueError(f"malformed code {text!r}")
    prefix, tail = m.group(1), m.group(2) or OMEGA_TAIL
    _check_word(prefix + tail, max_letter)
    return Code(prefix, tail)


def format_code(code: Code) -> str:
    if code.tail == OMEGA_TAIL:
        return code.prefix
    return f"{code.prefix}@{code.tail}"


def letter_at(code: Code, i: int) -> int:
    """The ``i``-th letter (1-based)."""
    if i < 1:
        raise IndexError("letter positions start at 1")
    if i <= len(code.prefix):
        return int(code.prefix[i - 1])
    return int(code.tail)


def common_prefix_len(x: Code, y: Code) -> int | float:
    """Length of the longest common prefix, ``INF`` when ``x == y``."""
    if x == y:
        return INF
    n = max(len(x.prefix), len(y.prefix))
    # past both prefixes the tails differ (canonical codes, x != y)
    a, b = x.letters(n + 1), y.letters(n + 1)
    k = 0
    while a[k] == b[k]:
        k += 1
    return k


def omega_codes(max_len: int, alphabet: str = LETTERS):
    """Every canonical code of Omega with prefix length <= ``max_len``."""
    yield Code("")
    words = [""]
    for _ in range(max_len):
        words = [w + a for w in words for a in alphabet]
        for w in words:
            if w[-1] != OMEGA_TAIL:
                yield Code(w)
