"""Streaming g one letter at a time with the five-state transducer."""
from lipfractal import transducer as td
from lipfractal import g_map, parse_code


## [trace]
def trace(word="2355542225543"):
    state, emitted = td.A, ""
    for letter in word:
        res = td.step(state, letter)
        emitted += res.output
        print(f"{state:>4} --{letter}/{res.output or 'eps':<3}--> {res.next:<4} emitted {emitted}")
        state = res.next
    print("lag at end:", td.lag(state))
    print("run:", td.run(parse_code(word)).prefix, " batch:", g_map(parse_code(word)).prefix)
## [trace]


## [dot]
def dot():
    print(td.to_dot())
## [dot]


def main():
    trace()
    dot()


if __name__ == "__main__":
    main()
