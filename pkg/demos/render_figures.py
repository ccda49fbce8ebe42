"""Level-k pictures of E and F with highlighted cylinders, written as SVG."""
import sys
from pathlib import Path

from lipfractal import E, F
from lipfractal.render import RenderSpec, render_svg


## [figures]
def figures(out: Path):
    out.mkdir(parents=True, exist_ok=True)
    cycle = (("3551", "#d62728"), ("4251", "#1f77b4"), ("4551", "#2ca02c"))
    for sys in (E, F):
        path = out / f"{sys.name}_level4.svg"
        path.write_text(render_svg(RenderSpec(sys, 4, cycle, 400)))
        print("wrote", path)
## [figures]


def main():
    figures(Path(sys.argv[1] if len(sys.argv) > 1 else "figures"))


if __name__ == "__main__":
    main()
