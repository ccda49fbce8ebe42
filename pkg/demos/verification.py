"""Running the verification suites from code, including the F-side envelope."""
from fractions import Fraction

from lipfractal import F, build, parse_code
from lipfractal import harness as hn


## [quick_suites]
def quick_suites():
    cfg = hn.SuiteConfig(seed=3, samples=2000, exhaustive_len=2, branch_n=10,
                         suites=("theorem41", "envelope", "bilipschitz", "branches"))
    for rep in hn.run_suite(cfg):
        print(f"{'PASS' if rep.passed else 'FAIL'} {rep.suite:<12} samples={rep.samples:<6} "
              f"violations={rep.violations} gap={rep.max_lambda_gap} details={rep.details}")
## [quick_suites]


## [F_envelope_witness]
def F_envelope_witness():
    # the F pieces for digits (0,0) and (1,0) are disjoint yet only sqrt(2)/18 apart
    x, y = parse_code("2555"), parse_code("5411")
    lam = hn.separation(build(F), x, y)
    r = hn.envelope_ratio(F, lam, x, y)
    print(f"separation {lam}, squared ratio {r} = {float(r):.5f}; 1/72 = {1/72:.5f}, 1/162 = {1/162:.5f}")
    print("below 1/72:", r < Fraction(1, 72))
## [F_envelope_witness]


def main():
    quick_suites()
    F_envelope_witness()


if __name__ == "__main__":
    main()
