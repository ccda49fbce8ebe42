"""Neighbor-map automata and separation numbers of fractal squares.

A state is a translation ``h`` (an integer pair), with the zero translation
standing for the identity.  Feeding the letter pair ``(i, j)`` moves ``h``
to ``n*h + d_j - d_i``; if that translation is not a neighbor map (and not
the identity) the automaton goes to ``EXIT`` and stays there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .fractal import FractalSquare
from .symbolic import INF, Code

Vec = tuple[int, int]

ID: Vec = (0, 0)
EXIT = "Exit"

_STATE_NAMES = {
    "E": {(1, 0): "e1", (-1, 0): "-e1", (0, 1): "e2", (0, -1): "-e2"},
    "F": {(0, -1): "f1", (0, 1): "-f1"},
}


def _candidates() -> list[Vec]:
    return [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != ID]


def _move(sys: FractalSquare, h: Vec, i: int, j: int) -> Vec:
    (ai, bi), (aj, bj) = sys.digits[i - 1], sys.digits[j - 1]
    return (sys.n * h[0] + aj - ai, sys.n * h[1] + bj - bi)


def _sort_key(v: Vec):
    return (v[1], v[0])


@dataclass(frozen=True)
class NeighborAutomaton:
    system: FractalSquare
    neighbors: frozenset
    # state -> {(i, j): next state}, letters as characters
    transitions: dict = field(repr=False, compare=False, hash=False)

    @property
    def states(self) -> list:
        return [ID] + sorted(self.neighbors, key=_sort_key) + [EXIT]

    def name(self, state) -> str:
        if state == EXIT:
            return "Exit"
        if state == ID:
            return "id"
        named = _STATE_NAMES.get(self.system.name, {})
        return named.get(state, f"({state[0]},{state[1]})")

    def delta(self, state, i, j):
        if state == EXIT:
            return EXIT
        return self.transitions[state][str(i), str(j)]


def build(sys: FractalSquare) -> NeighborAutomaton:
    labels = range(1, sys.m + 1)
    pairs = list(product(labels, labels))
    cand = set(_candidates())

    # greatest fixed point: drop states with no edge back into the set
    alive = set(cand)
    changed = True
    while changed:
        changed = False
        for h in list(alive):
            if not any(_move(sys, h, i, j) in alive for i, j in pairs):
                alive.discard(h)
                changed = True

    frontier = [_move(sys, ID, i, j) for i, j in pairs if i != j]
    reach = set()
    frontier = [h for h in frontier if h in alive]
    while frontier:
        h = frontier.pop()
        if h in reach:
            continue
        reach.add(h)
        frontier.extend(h2 for i, j in pairs if (h2 := _move(sys, h, i, j)) in alive)

    transitions = {}
    for h in [ID, *reach]:
        row = {}
        for i, j in pairs:
            h2 = _move(sys, h, i, j)
            row[str(i), str(j)] = h2 if (h2 == ID or h2 in reach) else EXIT
        transitions[h] = row
    return NeighborAutomaton(sys, frozenset(reach), transitions)


@dataclass(frozen=True)
class Itinerary:
    """States visited from ``id``; ends with ``EXIT`` unless non-terminating.

    For a non-terminating itinerary ``states`` holds the path up to the
    first repeated state of the eventually periodic tail.
    """

    states: tuple
    terminates: bool

    @property
    def separation(self):
        return len(self.states) - 2 if self.terminates else INF


def itinerary(aut: NeighborAutomaton, x: Code, y: Code) -> Itinerary:
    m = aut.system.m
    if x.max_letter() > m or y.max_letter() > m:
        raise ValueError(f"codes use letters beyond 1..{m}")
    trans = aut.transitions
    L = max(len(x.prefix), len(y.prefix))
    a, b = x.letters(L), y.letters(L)
    state = ID
    states = [ID]
    for t in range(L):
        state = trans[state][a[t], b[t]]
        states.append(state)
        if state == EXIT:
            return Itinerary(tuple(states), True)
    # constant input from here on: the state sequence is eventually periodic
    key = (x.tail, y.tail)
    seen = {state}
    while True:
        state = trans[state][key]
        states.append(state)
        if state == EXIT:
            return Itinerary(tuple(states), True)
        if state in seen:
            return Itinerary(tuple(states), False)
        seen.add(state)


def separation(aut: NeighborAutomaton, x: Code, y: Code):
    """Number of steps before the pair first reaches ``EXIT``; ``INF`` if never.

    ``INF`` occurs exactly when both codes name the same point.
    """
    trans = aut.transitions
    px, py = x.prefix, y.prefix
    lx, ly = len(px), len(py)
    state = ID
    n = 0
    if lx == ly:
        for ca, cb in zip(px, py):
            state = trans[state][ca, cb]
            if state == EXIT:
                return n
            n += 1
    else:
        L = max(lx, ly)
        for ca, cb in zip(x.letters(L), y.letters(L)):
            state = trans[state][ca, cb]
            if state == EXIT:
                return n
            n += 1
    key = (x.tail, y.tail)
    seen = set()
    while state not in seen:
        seen.add(state)
        state = trans[state][key]
        if state == EXIT:
            return n
        n += 1
    return INF


def export_dot(aut: NeighborAutomaton) -> str:
    states = aut.states
    idx = {s: k for k, s in enumerate(states)}
    lines = [f"digraph {aut.system.name or 'K'}_automaton {{", "  rankdir=LR;"]
    for s in states:
        shape = "doublecircle" if s in (ID, EXIT) else "circle"
        lines.append(f'  s{idx[s]} [label="{aut.name(s)}", shape={shape}];')
    for s in states[:-1]:
        groups: dict = {}
        for (i, j), t in sorted(aut.transitions[s].items()):
            groups.setdefault(t, []).append(f"{i}{j}")
        for t in states:
            if t in groups:
                style = ", style=dotted" if t == EXIT else ""
                lines.append(f'  s{idx[s]} -> s{idx[t]} [label="{" ".join(groups[t])}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(aut: NeighborAutomaton) -> str:
    def enc(s):
        return s if s == EXIT else list(s)

    doc = {
        "n": aut.system.n,
        "digits": [list(d) for d in aut.system.digits],
        "neighbors": [list(v) for v in sorted(aut.neighbors, key=_sort_key)],
        "transitions": [
            {"from": enc(s), "pair": [int(i), int(j)], "to": enc(t)}
            for s in aut.states[:-1]
            for (i, j), t in sorted(aut.transitions[s].items())
        ],
    }
    return json.dumps(doc, indent=1)
