"""SVG pictures of level-k approximations with highlighted cylinders."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .fractal import FractalSquare, word_offset

MAX_LEVEL = 8
_COLOR_RE = re.compile(r"^(#[0-9a-fA-F]{3,8}|[a-zA-Z]+)$")


@dataclass(frozen=True)
class RenderSpec:
    system: FractalSquare
    level: int
    highlights: tuple[tuple[str, str], ...] = field(default_factory=tuple)
    size: int = 512


def _validate(spec: RenderSpec) -> None:
    if not 0 <= spec.level <= MAX_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {spec.level}")
    if spec.size <= 0:
        raise ValueError("size must be positive")
    for word, color in spec.highlights:
        for ch in word:
            spec.system.digit(ch)
        if not _COLOR_RE.match(color):
            raise ValueError(f"bad color {color!r}")


def _rects(sys: FractalSquare, words, unit: int, grid: int) -> list[str]:
    out = []
    for w in words:
        a, b = word_offset(sys, w)
        side = unit // sys.n ** len(w)
        # SVG y grows downward; flip so the picture matches the usual axes
        x, y = a * side, grid - (b + 1) * side
        out.append(f'<rect x="{x}" y="{y}" width="{side}" height="{side}"/>')
    return out


def render_svg(spec: RenderSpec) -> str:
    """Deterministic SVG 1.1 document in integer user units."""
    _validate(spec)
    sys = spec.system
    deepest = max([spec.level] + [len(w) for w, _ in spec.highlights])
    grid = sys.n**deepest
    base = ["".join(w) for w in product(sys.labels, repeat=spec.level)]

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" '
        f'height="{spec.size}" viewBox="0 0 {grid} {grid}" shape-rendering="crispEdges">',
        f'<rect x="0" y="0" width="{grid}" height="{grid}" fill="white"/>',
        '<g id="cells" fill="black">',
        *_rects(sys, base, grid, grid),
        "</g>",
    ]
    for k, (word, color) in enumerate(spec.highlights):
        if len(word) <= spec.level:
            words = [w for w in base if w.startswith(word)]
        else:
            words = [word]
        lines.append(f'<g id="cylinder-{k}" fill="{color}" data-word="{word}">')
        lines.extend(_rects(sys, words, grid, grid))
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
