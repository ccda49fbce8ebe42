import pytest
from hypothesis import given
from hypothesis import strategies as st

from lipfractal.symbolic import INF, Code, common_prefix_len, format_code, letter_at, omega_codes, parse_code

words = st.text(alphabet="12345", max_size=12)
tails = st.sampled_from("12345")
codes = st.builds(Code, words, tails)


def test_parse_long_example():
    c = parse_code("2355542225543")
    assert c.prefix == "2355542225543"
    assert c.tail == "4"


def test_parse_empty_is_four_forever():
    c = parse_code("")
    assert c == Code("", "4")
    assert c.in_omega


def test_parse_absorbs_tail_letters():
    c = parse_code("13@3")
    assert (c.prefix, c.tail) == ("1", "3")
    assert format_code(c) == "1@3"


def test_trailing_fours_absorbed():
    assert parse_code("1344") == parse_code("13")


@pytest.mark.parametrize("bad", ["6", "120", "1@7", "abc", "1@", "@@1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_code(bad)


def test_parse_custom_alphabet():
    assert parse_code("789@9", max_letter=9).tail == "9"
    with pytest.raises(ValueError):
        parse_code("9")


@pytest.mark.parametrize(
    "x, y, expected",
    [("355", "422", 0), ("13", "1", 1), ("41@2", "412@2", INF), ("", "", INF), ("1@3", "1@1", 1)],
)
def test_common_prefix_len(x, y, expected):
    assert common_prefix_len(parse_code(x), parse_code(y)) == expected


@pytest.mark.parametrize("code, i, expected", [("13", 2, 3), ("13", 9, 4), ("", 1, 4), ("2@5", 3, 5)])
def test_letter_at(code, i, expected):
    assert letter_at(parse_code(code), i) == expected


def test_letter_at_rejects_zero():
    with pytest.raises(IndexError):
        letter_at(parse_code("1"), 0)


def test_omega_code_count():
    # 1 + 4 * (1 + 5 + 25 + 125): prefixes may not end in 4
    assert len(list(omega_codes(4))) == 625


@given(codes)
def test_format_parse_roundtrip(c):
    assert parse_code(format_code(c)) == c


@given(words, tails)
def test_canonical_idempotent(w, t):
    c = Code(w, t)
    assert Code(c.prefix, c.tail) == c
    assert not c.prefix.endswith(t)


@given(codes, codes)
def test_common_prefix_symmetric_and_consistent(x, y):
    k = common_prefix_len(x, y)
    assert k == common_prefix_len(y, x)
    if k == INF:
        assert x == y
    else:
        assert all(letter_at(x, i) == letter_at(y, i) for i in range(1, k + 1))
        assert letter_at(x, k + 1) != letter_at(y, k + 1)
