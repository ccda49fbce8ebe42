"""Segment decompositions and the substitution g on Omega."""
from lipfractal import decompose_E, decompose_F, g_inv, g_map, g_word, parse_code
from lipfractal.segments import format_decomposition


## [decompose]
def decompose():
    x = parse_code("2355542225543")
    print("E-segments of x:   ", format_decomposition(decompose_E(x)))
    u = g_map(x)
    print("g(x):              ", u.prefix)
    print("F-segments of g(x):", format_decomposition(decompose_F(u)))
## [decompose]


## [round_trip]
def round_trip():
    for text in ["3551", "42225", "355554", "1234512345"]:
        x = parse_code(text)
        print(f"{text:>12} -> {g_map(x).prefix:>12} -> {g_inv(g_map(x)).prefix:>12}")
## [round_trip]


## [cylinder_cycle]
def cylinder_cycle():
    J = "3551"
    orbit = [J]
    while (J := g_word(J)) != orbit[0]:
        orbit.append(J)
    print(" -> ".join(orbit + orbit[:1]))
## [cylinder_cycle]


def main():
    decompose()
    round_trip()
    cylinder_cycle()


if __name__ == "__main__":
    main()
