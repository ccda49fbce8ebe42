"""Command-line entry point: ``python -m lipfractal <command> ...``."""

from __future__ import annotations

import argparse
import sys

from . import harness, neighbor, segments, transducer
from .fractal import PRESETS, make_system, parse_digits, project
from .render import RenderSpec, render_svg
from .symbolic import INF, format_code, parse_code

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _add_system(p, default="E"):
    p.add_argument("--system", default=default, help="E, F, or 'custom' together with --digits")
    p.add_argument("--n", type=int, default=3, help="expansion factor of a custom system")
    p.add_argument("--digits", help='custom digit list "a,b;a,b;..." (labels 1..m in order)')


def _system(args):
    if args.digits:
        return make_system(args.n, parse_digits(args.digits), "custom")
    if args.system not in PRESETS:
        raise ValueError(f"unknown system {args.system!r}; use E, F or --digits")
    return PRESETS[args.system]


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lipfractal", description="Bi-Lipschitz map between the fractal squares E and F.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser, metavar="command")
    sub.required = True

    p = sub.add_parser("decompose", help="segment decomposition of an Omega code")
    p.add_argument("--system", choices=["E", "F"], default="E")
    p.add_argument("--code", required=True, help="code such as 2355542225543 (tail 4 implied)")

    p = sub.add_parser("map", help="apply g (or its inverse) to an Omega code")
    p.add_argument("--code", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--streaming", action="store_true", help="use the transducer instead of the batch map")

    p = sub.add_parser("point", help="exact coordinates of the point coded by a code")
    _add_system(p)
    p.add_argument("--code", required=True, help="code, optionally with @t for a tail t")

    p = sub.add_parser("separation", help="separation number and itinerary of two codes")
    _add_system(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("automaton", help="export the neighbor automaton")
    _add_system(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("transducer", help="export the transducer realizing g")
    p.add_argument("--format", choices=["dot"], default="dot")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", default="all", choices=["all", *harness.SUITES])
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--max-prefix", type=int, default=40)
    p.add_argument("--exhaustive-len", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable reports")

    p = sub.add_parser("render", help="SVG of a level-k approximation")
    _add_system(p)
    p.add_argument("--level", type=int, default=3)
    p.add_argument("--size", type=int, default=512)
    p.add_argument("--highlight", action="append", default=[], metavar="WORD[:COLOR]")
    p.add_argument("--out", required=True)
    return ap


def _cmd_decompose(args):
    code = parse_code(args.code)
    dec = segments.decompose_E(code) if args.system == "E" else segments.decompose_F(code)
    print(segments.format_decomposition(dec))


def _cmd_map(args):
    code = parse_code(args.code)
    if args.inverse:
        out = segments.g_inv(code)
    elif args.streaming:
        out = transducer.run(code)
    else:
        out = segments.g_map(code)
    print(format_code(out))


def _cmd_point(args):
    sysm = _system(args)
    pt = project(sysm, parse_code(args.code, sysm.m))
    print(f"{pt.x} {pt.y}")


def _cmd_separation(args):
    sysm = _system(args)
    aut = neighbor.build(sysm)
    x, y = parse_code(args.x, sysm.m), parse_code(args.y, sysm.m)
    it = neighbor.itinerary(aut, x, y)
    lam = it.separation
    print("inf" if lam == INF else lam)
    names = [aut.name(s) for s in it.states]
    print(",".join(names) + ("" if it.terminates else ",..."))


def _cmd_automaton(args):
    aut = neighbor.build(_system(args))
    sys.stdout.write(neighbor.export_dot(aut) if args.format == "dot" else neighbor.export_json(aut) + "\n")


def _cmd_transducer(args):
    sys.stdout.write(transducer.to_dot())


def _cmd_verify(args):
    cfg = harness.SuiteConfig(
        seed=args.seed,
        samples=args.samples,
        max_prefix=args.max_prefix,
        exhaustive_len=args.exhaustive_len,
        suites=(args.suite,),
    )
    reports = harness.run_suite(cfg)
    text = harness.to_json(reports, timing=not args.no_timing)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}: samples={r.samples} violations={r.violations}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _cmd_render(args):
    highlights = []
    for item in args.highlight:
        word, _, color = item.partition(":")
        highlights.append((word, color or "red"))
    spec = RenderSpec(_system(args), args.level, tuple(highlights), args.size)
    with open(args.out, "w") as fh:
        fh.write(render_svg(spec))


COMMANDS = {
    "decompose": _cmd_decompose,
    "map": _cmd_map,
    "point": _cmd_point,
    "separation": _cmd_separation,
    "automaton": _cmd_automaton,
    "transducer": _cmd_transducer,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args) or EXIT_OK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
