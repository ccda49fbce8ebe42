"""E- and F-segment decompositions and the segment bijection g0.

Special E-segments are ``35^k`` (k >= 1, maximal run of fives) and
``42^k5`` (k >= 0).  Special F-segments are ``35``, ``42^k5`` not followed
by a 5, and ``42^k55``.  Everything else is a one-letter plain segment.

``g0`` sends::

    35^k  -> 42^(k-1)5      (k >= 1)
    42^k5 -> 42^(k-1)55     (k >= 1)
    45    -> 35
    a     -> a

and ``g`` applies it segment by segment.  It is a length-preserving
bijection of Omega, the codes ending in ``4^inf``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .symbolic import OMEGA_TAIL, Code

PLAIN = "plain"
E35 = "E35"
E425 = "E425"
F425 = "F425"
F4255 = "F4255"
F35 = "F35"

E_KINDS = frozenset({PLAIN, E35, E425})
F_KINDS = frozenset({PLAIN, F425, F4255, F35})

# Alternation order matters: special segments are tried first, and the
# greedy quantifiers implement maximal munch.
_E_RE = re.compile(r"35+|42*5|[1-9]")
_F_RE = re.compile(r"35|42*55?|[1-9]")


@dataclass(frozen=True)
class Segment:
    kind: str
    expansion: str

    @property
    def k(self) -> int:
        """The run parameter: fives in E35, twos in the 42^k5 kinds."""
        if self.kind == E35:
            return len(self.expansion) - 1
        if self.kind in (E425, F425, F4255):
            return self.expansion.count("2")
        return 0

    def __len__(self):
        return len(self.expansion)

    def __str__(self):
        return f"({self.expansion})"


def plain(letter) -> Segment:
    return Segment(PLAIN, str(letter))


def e35(k: int) -> Segment:
    if k < 1:
        raise ValueError("35^k needs k >= 1")
    return Segment(E35, "3" + "5" * k)


def e425(k: int) -> Segment:
    return Segment(E425, "4" + "2" * k + "5")


def f425(k: int) -> Segment:
    return Segment(F425, "4" + "2" * k + "5")


def f4255(k: int) -> Segment:
    return Segment(F4255, "4" + "2" * k + "55")


def f35() -> Segment:
    return Segment(F35, "35")


@dataclass(frozen=True)
class Decomposition:
    """Finitely many segments followed by plain tail letters forever."""

    segments: tuple[Segment, ...]
    tail: str = OMEGA_TAIL

    def word(self) -> str:
        return "".join(s.expansion for s in self.segments)

    def code(self) -> Code:
        return Code(self.word(), self.tail)

    def spans(self) -> list[tuple[int, int]]:
        """Half-open index ranges of the segments within the prefix."""
        out, i = [], 0
        for s in self.segments:
            out.append((i, i + len(s)))
            i += len(s)
        return out

    def __str__(self):
        return "".join(map(str, self.segments)) + f"({self.tail})^inf"


def _e_kind(tok: str) -> str:
    if len(tok) == 1:
        return PLAIN
    return E35 if tok[0] == "3" else E425


def _f_kind(tok: str) -> str:
    if len(tok) == 1:
        return PLAIN
    if tok == "35":
        return F35
    return F4255 if tok.endswith("55") else F425


def _require_omega(x: Code) -> None:
    if x.tail != OMEGA_TAIL:
        raise ValueError(f"code {x} is not in Omega (tail must be 4)")


def decompose_E(x: Code) -> Decomposition:
    _require_omega(x)
    # tail 4s are always plain: a special segment never contains a 4 past
    # its first letter, and 4 followed by 4 is plain
    return Decomposition(tuple(Segment(_e_kind(t), t) for t in _E_RE.findall(x.prefix)))


def decompose_F(u: Code) -> Decomposition:
    _require_omega(u)
    return Decomposition(tuple(Segment(_f_kind(t), t) for t in _F_RE.findall(u.prefix)))


def g0(seg: Segment) -> Segment:
    kind, k = seg.kind, seg.k
    if kind == PLAIN:
        return seg
    if kind == E35:
        return f425(k - 1)
    if kind == E425:
        return f4255(k - 1) if k >= 1 else f35()
    raise ValueError(f"{seg} is not an E-segment")


def g0_inv(seg: Segment) -> Segment:
    kind, k = seg.kind, seg.k
    if kind == PLAIN:
        return seg
    if kind == F425:
        return e35(k + 1)
    if kind == F4255:
        return e425(k + 1)
    if kind == F35:
        return e425(0)
    raise ValueError(f"{seg} is not an F-segment")


def _g0_word(tok: str) -> str:
    if len(tok) == 1:
        return tok
    if tok[0] == "3":
        return "4" + "2" * (len(tok) - 2) + "5"
    if tok == "45":
        return "35"
    return tok[:-2] + "55"


def _g0_inv_word(tok: str) -> str:
    if len(tok) == 1:
        return tok
    if tok == "35":
        return "45"
    if tok.endswith("55"):
        return tok[:-2] + "25"
    return "3" + "5" * (len(tok) - 1)


def g_prefix(word: str) -> str:
    """g on the word ``word`` followed by 4s, truncated to ``len(word)``."""
    return _E_RE.sub(lambda m: _g0_word(m.group()), word)


def g_inv_prefix(word: str) -> str:
    return _F_RE.sub(lambda m: _g0_inv_word(m.group()), word)


def g_map(x: Code) -> Code:
    _require_omega(x)
    return Code(g_prefix(x.prefix))


def g_inv(u: Code) -> Code:
    _require_omega(u)
    return Code(g_inv_prefix(u.prefix))


def g_word(J: str) -> str:
    """The image of a word ending in 1; it has the same length."""
    if not J or J[-1] != "1":
        raise ValueError(f"word {J!r} must be nonempty and end in 1")
    # a 1 closes every special segment, so the batch map on J alone is exact
    return g_prefix(J)


def format_decomposition(d: Decomposition) -> str:
    """Parenthesized form, e.g. ``(2)(3555)(42225)(5)(4)(3)(4)^inf``."""
    return str(d)
