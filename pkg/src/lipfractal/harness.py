"""Property suites for the map g between the codings of E and F.

Every check runs in exact arithmetic: distances are compared squared, so
the constant ``c = 6*sqrt(2)`` enters as ``c**2 = 72`` and the Lipschitz
constant ``27*c**2`` as ``1944``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from . import segments, transducer
from .fractal import E, F, FractalSquare, cell_of, make_system, project, sq_dist, word_offset
from .neighbor import EXIT, ID, NeighborAutomaton, build, separation
from .symbolic import LETTERS, Code, omega_codes

C_SQ = 72
LIP = 27 * C_SQ  # 1944
BRANCHES = ("exit", "id", "e1", "e2", "random")


@dataclass(frozen=True)
class PairSample:
    x: Code
    y: Code
    branch: str = "random"


@lru_cache(maxsize=2)
def automata():
    return build(E), build(F)


# -- sample generators -------------------------------------------------------


def _word(rng: random.Random, length: int) -> str:
    return "".join(rng.choice(LETTERS) for _ in range(length))


def _tail(rng: random.Random, max_len: int) -> str:
    return _word(rng, rng.randint(0, max(0, max_len)))


def _swap(rng: random.Random, x: str, y: str) -> tuple[str, str]:
    return (y, x) if rng.random() < 0.5 else (x, y)


def _first_segment(x: Code) -> str:
    d = segments.decompose_E(x)
    return d.segments[0].expansion if d.segments else "4"


def gen_branch(rng: random.Random, branch: str, n: int, max_prefix: int) -> PairSample:
    """One pair whose E-itinerary starts as the named branch prescribes.

    ``n`` is the intended length of the run through the first state (the
    separation number for the e1/e2 branches).
    """
    n = max(1, n)
    extra = max(0, max_prefix - n - 1)
    while True:
        if branch == "e1":
            a, b = rng.choice([("13", "21"), ("23", "31")])
            x = a[0] + a[1] * (n - 1) + _tail(rng, extra)
            y = b[0] + b[1] * (n - 1) + _tail(rng, extra)
        elif branch == "e2":
            x = "3" + "5" * (n - 1) + _tail(rng, extra)
            y = "4" + "2" * (n - 1) + _tail(rng, extra)
        elif branch == "id":
            lead = rng.choice("34")
            run = "5" if lead == "3" else "2"
            x = lead + run * rng.randint(0, n) + rng.choice("5" * 3 + "1234") + _tail(rng, extra)
            y = lead + run * rng.randint(0, n) + rng.choice("5" * 3 + "1234") + _tail(rng, extra)
        elif branch == "exit":
            a, b = rng.choice(_exit_pairs())
            x = a + _tail(rng, max_prefix - 1)
            y = b + _tail(rng, max_prefix - 1)
        elif branch == "random":
            x, y = _tail(rng, max_prefix), _tail(rng, max_prefix)
        else:
            raise ValueError(f"unknown branch {branch!r}")
        x, y = _swap(rng, x, y)
        cx, cy = Code(x), Code(y)
        if cx == cy:
            continue
        if branch == "id" and _first_segment(cx) == _first_segment(cy):
            continue
        return PairSample(cx, cy, branch)


@lru_cache(maxsize=1)
def _exit_pairs() -> list[tuple[str, str]]:
    aut, _ = automata()
    return [(i, j) for (i, j), t in sorted(aut.transitions[ID].items()) if t == EXIT]


def gen_pairs(seed: int, count: int, max_prefix: int, branch: str = "random") -> list[PairSample]:
    if count < 1 or max_prefix < 2:
        raise ValueError("need count >= 1 and max_prefix >= 2")
    rng = random.Random(f"{seed}:{branch}")
    return [gen_branch(rng, branch, rng.randint(1, max_prefix - 1), max_prefix) for _ in range(count)]


def exhaustive_pairs(max_len: int):
    codes = list(omega_codes(max_len))
    for x in codes:
        for y in codes:
            if x != y:
                yield PairSample(x, y, "exhaustive")


# -- single-pair checks ------------------------------------------------------


def _distinct(p: PairSample) -> None:
    if p.x == p.y:
        raise ValueError("the pair must consist of distinct codes")


def lambda_pair(p: PairSample, g=segments.g_map) -> tuple[int, int]:
    _distinct(p)
    aut_e, aut_f = automata()
    return (separation(aut_e, p.x, p.y), separation(aut_f, g(p.x), g(p.y)))


def check_theorem41(p: PairSample, g=segments.g_map) -> int:
    """``|Lambda_E(x, y) - Lambda_F(g x, g y)|``; at most 3."""
    le, lf = lambda_pair(p, g)
    return abs(le - lf)


@dataclass(frozen=True)
class RatioCheck:
    passed: bool
    ratio: Fraction  # observed squared ratio, compared against [1/bound, bound]
    bound: int


def envelope_ratio(sys: FractalSquare, lam: int, x: Code, y: Code) -> Fraction:
    """``|pi x - pi y|^2`` divided by ``n^(-2*lam)``."""
    return sq_dist(project(sys, x), project(sys, y)) * sys.n ** (2 * lam)


def check_envelope(sys: FractalSquare, aut: NeighborAutomaton, p: PairSample) -> RatioCheck:
    _distinct(p)
    lam = separation(aut, p.x, p.y)
    r = envelope_ratio(sys, lam, p.x, p.y)
    return RatioCheck(Fraction(1, C_SQ) <= r <= C_SQ, r, C_SQ)


def check_bilipschitz(p: PairSample, g=segments.g_map) -> RatioCheck:
    _distinct(p)
    de = sq_dist(project(E, p.x), project(E, p.y))
    df = sq_dist(project(F, g(p.x)), project(F, g(p.y)))
    r = df / de
    return RatioCheck(Fraction(1, LIP**2) <= r <= LIP**2, r, LIP**2)


# -- the family J and cylinder bookkeeping -----------------------------------


def enumerate_J(max_len: int) -> list[str]:
    """Words ``J'41`` with no ``41`` inside ``J'``, of length <= ``max_len``."""
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    out = []
    level = [""]
    for length in range(0, max_len - 1):
        out.extend(w + "41" for w in level)
        level = [w + a for w in level for a in LETTERS if not (a == "1" and w.endswith("4"))]
    return sorted(out)


def measure_sum(words) -> Fraction:
    """Natural measure of the union of the cylinders ``[w]``, w prefix-free."""
    return sum((Fraction(1, 5 ** len(w)) for w in words), Fraction(0))


def _prefix_free(words: set[str]) -> bool:
    return not any(w[:k] in words for w in words for k in range(1, len(w)))


@dataclass
class MeasureReport:
    family_size: int
    length_violations: int
    injective: bool
    prefix_free: bool
    containment_violations: int
    containment_checks: int
    measure: Fraction

    @property
    def passed(self) -> bool:
        return (
            self.length_violations == 0
            and self.injective
            and self.prefix_free
            and self.containment_violations == 0
        )


def check_measure(max_len: int, seed: int = 0, per_class: int = 100, g_word=segments.g_word, g=segments.g_map) -> MeasureReport:
    family = enumerate_J(max_len)
    images = {J: g_word(J) for J in family}
    bad_len = sum(len(J) != len(w) for J, w in images.items())
    image_set = set(images.values())
    rng = random.Random(seed)
    by_len: dict[int, list[str]] = {}
    for J in family:
        by_len.setdefault(len(J), []).append(J)
    checks = bad = 0
    for length in sorted(by_len):
        for _ in range(per_class):
            J = rng.choice(by_len[length])
            w = _tail(rng, 8)
            cell = cell_of(F, images[J])
            checks += 1
            if not cell.contains(project(F, g(Code(J + w)))):
                bad += 1
    return MeasureReport(
        family_size=len(family),
        length_violations=bad_len,
        injective=len(image_set) == len(family),
        prefix_free=_prefix_free(image_set),
        containment_violations=bad,
        containment_checks=checks,
        measure=measure_sum(family),
    )


# -- geometric oracle for the automaton --------------------------------------


@lru_cache(maxsize=16)
def _cells(sys: FractalSquare, depth: int) -> tuple[np.ndarray, frozenset]:
    """Integer corners (a, b) of the level-``depth`` cells, unit ``n^-depth``."""
    cells = np.zeros((1, 2), dtype=np.int64)
    digits = np.array(sys.digits, dtype=np.int64)
    for _ in range(depth):
        cells = (sys.n * cells[:, None, :] + digits[None, :, :]).reshape(-1, 2)
    return cells, frozenset(map(tuple, cells.tolist()))


def _default_depth(sys: FractalSquare) -> int:
    depth = 4
    while sys.m ** (depth + 1) <= 400_000:
        depth += 1
    return depth


@lru_cache(maxsize=4096)
def intersects(sys: FractalSquare, h: tuple[int, int], depth: int | None = None) -> bool:
    """Whether ``K`` and ``K + h`` meet, judged on closed level-``depth`` cell unions.

    Cells meet when they touch.  The answer is exact once the cell
    diagonal is below half the gap between disjoint sets.
    """
    if max(abs(h[0]), abs(h[1])) > 1:
        return False
    depth = depth or _default_depth(sys)
    s = sys.n**depth
    cells, own = _cells(sys, depth)
    shifted = cells + np.array(h, dtype=np.int64) * s
    near = shifted[np.all((shifted >= -1) & (shifted <= s), axis=1)]
    return any(
        (a + da, b + db) in own for a, b in near.tolist() for da in (-1, 0, 1) for db in (-1, 0, 1)
    )


def geometry_disagreements(sys: FractalSquare, max_k: int = 4, aut=None, depth=None) -> int:
    """Count equal-length word pairs (I, J), ``|I| <= max_k``, where the
    automaton reaches Exit but the cells of I and J meet, or vice versa."""
    aut = aut or build(sys)
    m = sys.m
    states = aut.states
    index = {st: k for k, st in enumerate(states)}
    exit_ix = index[EXIT]
    # delta[state, i, j] over state indices, Exit absorbing
    delta = np.full((len(states), m, m), exit_ix, dtype=np.int64)
    for st, row in aut.transitions.items():
        for (i, j), t in row.items():
            delta[index[st], int(i) - 1, int(j) - 1] = index[t]

    memo: dict = {}
    digits = np.array(sys.digits, dtype=np.int64)
    offsets = np.zeros((1, 2), dtype=np.int64)
    st = np.array([[index[ID]]], dtype=np.int64)
    bad = 0
    for _ in range(max_k):
        offsets = (sys.n * offsets[:, None, :] + digits[None, :, :]).reshape(-1, 2)
        w = st.shape[0]
        st = delta[st[:, None, :, None], np.arange(m)[None, :, None, None], np.arange(m)[None, None, None, :]]
        st = st.reshape(w * m, w * m)
        # translation carrying the cell of I onto the cell of J
        h = offsets[None, :, :] - offsets[:, None, :]
        uniq, inv = np.unique(h.reshape(-1, 2), axis=0, return_inverse=True)
        for v in uniq.tolist():
            if tuple(v) not in memo:
                memo[tuple(v)] = intersects(sys, tuple(v), depth)
        meet = np.array([memo[tuple(v)] for v in uniq.tolist()])
        geo = meet[inv.reshape(-1)].reshape(st.shape)
        bad += int(np.count_nonzero((st == exit_ix) == geo))
    return bad


# -- suites and reports ------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    seed: int
    samples: int = 0
    violations: int = 0
    max_lambda_gap: int | None = None
    min_ratio: float | None = None
    max_ratio: float | None = None
    elapsed_ms: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("elapsed_ms")
        return d


def to_json(reports, timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=True)


@dataclass
class SuiteConfig:
    seed: int = 0
    samples: int = 10_000
    max_prefix: int = 40
    exhaustive_len: int = 3
    branch_n: int = 30
    suites: tuple[str, ...] = ("all",)


SUITES = ("theorem41", "envelope", "bilipschitz", "measure", "branches", "transducer", "geometry")


def sample_set(cfg: SuiteConfig) -> list[PairSample]:
    """The shared pair population: exhaustive short codes, random pairs,
    and every branch generator for each run length up to ``branch_n``."""
    out = list(exhaustive_pairs(cfg.exhaustive_len))
    out += gen_pairs(cfg.seed, cfg.samples, cfg.max_prefix)
    rng = random.Random(f"{cfg.seed}:branches")
    for branch in ("exit", "id", "e1", "e2"):
        for n in range(1, cfg.branch_n + 1):
            for _ in range(4):
                out.append(gen_branch(rng, branch, n, n + 10))
    return out


def _ratio_stats(rep: VerificationReport, ratios: list[Fraction]) -> None:
    if ratios:
        rep.min_ratio = float(min(ratios))
        rep.max_ratio = float(max(ratios))


class _Images:
    """Per-code cache of g(x) and the projections of x and g(x)."""

    def __init__(self, g=segments.g_map):
        self.g = g
        self._g: dict = {}
        self._pe: dict = {}
        self._pf: dict = {}

    def u(self, x: Code) -> Code:
        if x not in self._g:
            self._g[x] = self.g(x)
        return self._g[x]

    def pe(self, x: Code):
        if x not in self._pe:
            self._pe[x] = project(E, x)
        return self._pe[x]

    def pf(self, x: Code):
        if x not in self._pf:
            self._pf[x] = project(F, self.u(x))
        return self._pf[x]


def suite_theorem41(pairs, cfg, g=segments.g_map) -> VerificationReport:
    rep = VerificationReport("theorem41", cfg.seed, samples=len(pairs), max_lambda_gap=0)
    img = _Images(g)
    aut_e, aut_f = automata()
    for p in pairs:
        gap = abs(separation(aut_e, p.x, p.y) - separation(aut_f, img.u(p.x), img.u(p.y)))
        rep.max_lambda_gap = max(rep.max_lambda_gap, gap)
        rep.violations += gap > 3
    return rep


def suite_envelope(pairs, cfg, g=segments.g_map, automata_pair=None, sides="EF") -> VerificationReport:
    rep = VerificationReport("envelope", cfg.seed)
    aut_e, aut_f = automata_pair or automata()
    img = _Images(g)
    lo, hi = Fraction(1, C_SQ), Fraction(C_SQ)
    rmin = rmax = None
    per_side = {side: 0 for side in sides}
    for p in pairs:
        for side in sides:
            if side == "E":
                lam = separation(aut_e, p.x, p.y)
                d = sq_dist(img.pe(p.x), img.pe(p.y))
            else:
                lam = separation(aut_f, img.u(p.x), img.u(p.y))
                d = sq_dist(img.pf(p.x), img.pf(p.y))
            r = d * 9**lam
            rep.samples += 1
            if not lo <= r <= hi:
                per_side[side] += 1
            if rmin is None or r < rmin:
                rmin = r
            if rmax is None or r > rmax:
                rmax = r
    rep.violations = sum(per_side.values())
    rep.details = {f"{side}_violations": v for side, v in per_side.items()}
    _ratio_stats(rep, [r for r in (rmin, rmax) if r is not None])
    return rep


def suite_bilipschitz(pairs, cfg, g=segments.g_map) -> VerificationReport:
    rep = VerificationReport("bilipschitz", cfg.seed, samples=len(pairs))
    img = _Images(g)
    lo, hi = Fraction(1, LIP**2), Fraction(LIP**2)
    rmin = rmax = None
    for p in pairs:
        r = sq_dist(img.pf(p.x), img.pf(p.y)) / sq_dist(img.pe(p.x), img.pe(p.y))
        rep.violations += not lo <= r <= hi
        if rmin is None or r < rmin:
            rmin = r
        if rmax is None or r > rmax:
            rmax = r
    _ratio_stats(rep, [rmin, rmax])
    return rep


def suite_branches(cfg, g=segments.g_map) -> VerificationReport:
    """Per-branch gap bounds plus the id-branch refinement of the separation
    number to ``|x^y|`` or ``|x^y| + 1``."""
    from .symbolic import common_prefix_len

    rep = VerificationReport("branches", cfg.seed, max_lambda_gap=0)
    rng = random.Random(f"{cfg.seed}:branches-refine")
    aut_e, aut_f = automata()
    refinement_bad = 0
    for branch in ("exit", "id", "e1", "e2"):
        worst = 0
        for n in range(1, cfg.branch_n + 1):
            for _ in range(8):
                p = gen_branch(rng, branch, n, n + 10)
                u, v = g(p.x), g(p.y)
                le, lf = separation(aut_e, p.x, p.y), separation(aut_f, u, v)
                worst = max(worst, abs(le - lf))
                rep.samples += 1
                rep.violations += abs(le - lf) > 3
                if branch == "id":
                    k = common_prefix_len(p.x, p.y)
                    refinement_bad += le not in (k, k + 1)
                    du = segments.decompose_F(u).segments
                    dv = segments.decompose_F(v).segments
                    if u.letters(1) == v.letters(1) and du[:1] != dv[:1]:
                        k = common_prefix_len(u, v)
                        refinement_bad += lf not in (k, k + 1)
        rep.details[branch] = worst
        rep.max_lambda_gap = max(rep.max_lambda_gap, worst)
    rep.details["refinement_violations"] = refinement_bad
    rep.violations += refinement_bad
    return rep


def suite_measure(cfg, max_len: int = 10, g_word=segments.g_word) -> VerificationReport:
    rep = VerificationReport("measure", cfg.seed)
    m = check_measure(max_len, cfg.seed, g_word=g_word)
    rep.samples = m.family_size
    rep.violations = m.length_violations + (not m.injective) + (not m.prefix_free) + m.containment_violations
    rep.min_ratio = rep.max_ratio = 1.0 if m.length_violations == 0 else None
    rep.details = {
        "family_size": m.family_size,
        "containment_checks": m.containment_checks,
        "injective": m.injective,
        "prefix_free": m.prefix_free,
        "natural_measure": str(m.measure),
    }
    return rep


def suite_transducer(cfg, table=transducer.TABLE, exhaustive_len: int = 7) -> VerificationReport:
    rep = VerificationReport("transducer", cfg.seed)
    rng = random.Random(f"{cfg.seed}:transducer")
    words = ("".join(w) for w in product(LETTERS, repeat=exhaustive_len))
    rand = (_word(rng, rng.randint(0, 200)) for _ in range(cfg.samples))
    for group in (words, rand):
        for w in group:
            rep.samples += 1
            rep.violations += transducer.run(Code(w), table) != segments.g_map(Code(w))
    return rep


def suite_geometry(cfg, systems=None) -> VerificationReport:
    rep = VerificationReport("geometry", cfg.seed)
    for sys in systems or (E, F, *random_systems(cfg.seed, 5)):
        bad = geometry_disagreements(sys, max_k=3)
        rep.samples += 1
        rep.violations += bad
        rep.details[sys.name] = bad
    return rep


def random_systems(seed: int, count: int, n: int = 3, m: int = 5) -> list[FractalSquare]:
    rng = random.Random(f"{seed}:systems")
    grid = [(a, b) for b in range(n) for a in range(n)]
    return [make_system(n, rng.sample(grid, m), f"R{k}") for k in range(count)]


def run_suite(cfg: SuiteConfig) -> list[VerificationReport]:
    names = SUITES if "all" in cfg.suites else cfg.suites
    unknown = set(names) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}")
    pairs = None
    out = []
    for name in names:
        t0 = time.perf_counter()
        if name in ("theorem41", "envelope", "bilipschitz") and pairs is None:
            pairs = sample_set(cfg)
        if name == "theorem41":
            rep = suite_theorem41(pairs, cfg)
        elif name == "envelope":
            rep = suite_envelope(pairs, cfg)
        elif name == "bilipschitz":
            rep = suite_bilipschitz(pairs, cfg)
        elif name == "branches":
            rep = suite_branches(cfg)
        elif name == "measure":
            rep = suite_measure(cfg)
        elif name == "transducer":
            rep = suite_transducer(cfg)
        else:
            rep = suite_geometry(cfg)
        rep.elapsed_ms = round(1000 * (time.perf_counter() - t0))
        out.append(rep)
    return out
