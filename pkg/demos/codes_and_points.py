"""Codes, canonical forms and exact projection onto E and F."""
from lipfractal import E, F, parse_code, project
from lipfractal.fractal import cell_of


## [canonical_codes]
def canonical_codes():
    for text in ["134", "13@3", "2444", "35@5"]:
        code = parse_code(text)
        print(f"{text:>6} -> prefix={code.prefix!r} tail={code.tail} in_omega={code.in_omega}")
## [canonical_codes]


## [double_codings]
def double_codings():
    # two different codes, one point
    for sys, a, b in [(E, "13@3", "21@1"), (E, "35@5", "42@2"), (F, "23@3", "31@1")]:
        pa, pb = project(sys, parse_code(a)), project(sys, parse_code(b))
        print(f"{sys.name}: {a} -> ({pa.x}, {pa.y})   {b} -> ({pb.x}, {pb.y})   equal={pa == pb}")
## [double_codings]


## [cells]
def cells():
    c = cell_of(E, "3551")
    print("cell of 3551 in E:", c.origin, "side", c.side)
    print("contains pi_E(3551 4^inf):", c.contains(project(E, parse_code("3551"))))
## [cells]


def main():
    canonical_codes()
    double_codings()
    cells()


if __name__ == "__main__":
    main()
