"""Neighbor automata, itineraries and separation numbers."""
import numpy as np

from lipfractal import E, F, build, itinerary, parse_code, project, separation, sq_dist
from lipfractal.harness import random_systems
from lipfractal.neighbor import export_dot


## [neighbors]
def neighbors():
    for sys in (E, F, *random_systems(0, 3)):
        aut = build(sys)
        print(f"{sys.name:>2}: {len(aut.neighbors)} neighbors {sorted(aut.neighbors)}")
    print(export_dot(build(F)))
## [neighbors]


## [itineraries]
def itineraries():
    aut = build(E)
    for a, b in [("13", "21"), ("355", "422"), ("13@3", "21@1")]:
        x, y = parse_code(a), parse_code(b)
        it = itinerary(aut, x, y)
        names = ",".join(aut.name(s) for s in it.states) + ("" if it.terminates else ",...")
        print(f"{a:>5} {b:>5}: separation {it.separation}  {names}")
## [itineraries]


## [distance_vs_separation]
def distance_vs_separation(count=2000, seed=1):
    """9^L * |x-y|^2 stays in a bounded band."""
    rng = np.random.default_rng(seed)
    aut = build(E)
    ratios = []
    for _ in range(count):
        a, b = ("".join(map(str, rng.integers(1, 6, 12))) for _ in range(2))
        x, y = parse_code(a), parse_code(b)
        if x == y:
            continue
        lam = separation(aut, x, y)
        ratios.append(float(sq_dist(project(E, x), project(E, y)) * 9**lam))
    r = np.array(ratios)
    print(f"squared ratio: min {r.min():.4f}  median {np.median(r):.4f}  max {r.max():.4f}")
## [distance_vs_separation]


def main():
    neighbors()
    itineraries()
    distance_vs_separation()


if __name__ == "__main__":
    main()
