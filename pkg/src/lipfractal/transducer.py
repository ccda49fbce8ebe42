"""A five-state letter-to-word transducer realizing g with one letter of lookahead.

States: ``A`` (nothing pending), ``III`` (a pending 3), ``IIIP`` (inside a
run 35...5), ``IV`` (a pending 4), ``IVP`` (inside a run 42...2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .symbolic import OMEGA_TAIL, Code

A, III, IIIP, IV, IVP = "A", "III", "IIIP", "IV", "IVP"
STATES = (A, III, IIIP, IV, IVP)
INITIAL = A

# (state, input letter) -> (next state, output word)
TABLE: dict[tuple[str, str], tuple[str, str]] = {
    (A, "1"): (A, "1"),
    (A, "2"): (A, "2"),
    (A, "3"): (III, ""),
    (A, "4"): (IV, ""),
    (A, "5"): (A, "5"),
    (III, "1"): (A, "31"),
    (III, "2"): (A, "32"),
    (III, "3"): (III, "3"),
    (III, "4"): (IV, "3"),
    (III, "5"): (IIIP, "4"),
    (IIIP, "1"): (A, "51"),
    (IIIP, "2"): (A, "52"),
    (IIIP, "3"): (III, "5"),
    (IIIP, "4"): (IV, "5"),
    (IIIP, "5"): (IIIP, "2"),
    (IV, "1"): (A, "41"),
    (IV, "2"): (IVP, "4"),
    (IV, "3"): (III, "4"),
    (IV, "4"): (IV, "4"),
    (IV, "5"): (A, "35"),
    (IVP, "1"): (A, "21"),
    (IVP, "2"): (IVP, "2"),
    (IVP, "3"): (III, "2"),
    (IVP, "4"): (IV, "2"),
    (IVP, "5"): (A, "55"),
}


@dataclass(frozen=True)
class StepResult:
    next: str
    output: str


def step(state: str, letter) -> StepResult:
    nxt, out = TABLE[state, str(letter)]
    return StepResult(nxt, out)


def lag(state: str) -> int:
    """Letters consumed but not yet emitted."""
    return 0 if state == A else 1


def feed(word: str, state: str = INITIAL, table=TABLE) -> tuple[str, str]:
    """Run ``word`` from ``state``; return (final state, emitted output)."""
    out = []
    for ch in word:
        state, w = table[state, ch]
        out.append(w)
    return state, "".join(out)


def run(x: Code, table=TABLE) -> Code:
    """Stream ``x`` through the transducer and return the output code.

    After the prefix, tail letters are fed until the state repeats; the
    output emitted around that cycle must be a constant letter, which
    becomes the output tail.
    """
    if x.tail != OMEGA_TAIL:
        raise ValueError(f"code {x} is not in Omega (tail must be 4)")
    state, out = feed(x.prefix, table=table)
    visited = [state]
    words = []
    while True:
        state, w = table[state, x.tail]
        words.append(w)
        if state in visited:
            break
        visited.append(state)
    start = visited.index(state)
    pre, cyc = "".join(words[:start]), "".join(words[start:])
    if not cyc or len(set(cyc)) != 1:
        raise RuntimeError(f"non-constant output cycle {cyc!r}")
    return Code(out + pre, cyc[0])


def to_dot(table=TABLE) -> str:
    """DOT text with ``a/w`` edge labels, grouped per (source, target)."""
    edges: dict[tuple[str, str], list[str]] = {}
    for (s, a), (t, w) in sorted(table.items()):
        edges.setdefault((s, t), []).append(f"{a}/{w or 'ε'}")
    lines = ["digraph transducer {", "  rankdir=LR;", '  __start [shape=point];', f"  __start -> {INITIAL};"]
    for s in STATES:
        shape = "doublecircle" if s == INITIAL else "circle"
        lines.append(f'  {s} [shape={shape}, label="{s.replace("P", chr(39))}"];')
    for s in STATES:
        for t in STATES:
            if (s, t) in edges:
                lines.append(f'  {s} -> {t} [label="{", ".join(edges[s, t])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
