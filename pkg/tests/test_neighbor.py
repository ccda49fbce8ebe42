from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lipfractal.fractal import E, F, FULL3, make_system, word_offset
from lipfractal.harness import intersects, random_systems
from lipfractal.neighbor import EXIT, ID, build, export_dot, export_json, itinerary, separation
from lipfractal.symbolic import INF, Code, parse_code

GOLDEN = Path(__file__).parent / "golden"
omega = st.builds(Code, st.text(alphabet="12345", max_size=20))


def geometric_separation(sys, x: Code, y: Code, limit: int = 60):
    """Largest k such that the level-k cells of x and y, as pieces of K, meet."""
    k = 0
    while k < limit:
        a, b = x.letters(k + 1), y.letters(k + 1)
        (ia, ib), (ja, jb) = word_offset(sys, a), word_offset(sys, b)
        if not intersects(sys, (ja - ia, jb - ib)):
            return k
        k += 1
    return INF


def test_neighbor_sets():
    assert build(E).neighbors == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert build(F).neighbors == {(0, 1), (0, -1)}
    assert build(FULL3).neighbors == {(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)} - {(0, 0)}


def test_transition_rule():
    aut = build(E)
    for h in [ID, *aut.neighbors]:
        for (i, j), t in aut.transitions[h].items():
            (ai, bi), (aj, bj) = E.digit(i), E.digit(j)
            h2 = (3 * h[0] + aj - ai, 3 * h[1] + bj - bi)
            assert t == (h2 if h2 == ID or h2 in aut.neighbors else EXIT)
        assert len(aut.transitions[h]) == 25


def test_itinerary_E():
    aut = build(E)
    it = itinerary(aut, parse_code("13"), parse_code("21"))
    assert it.states == (ID, (1, 0), (1, 0), EXIT)
    assert [aut.name(s) for s in it.states] == ["id", "e1", "e1", "Exit"]
    assert it.terminates and it.separation == 2


def test_itinerary_identical_codes():
    it = itinerary(build(E), parse_code(""), parse_code(""))
    assert not it.terminates
    assert set(it.states) == {ID}
    assert it.separation == INF


def test_itinerary_F_exits_at_once():
    aut = build(F)
    # d_4 - d_3 = (-1, 0) is not a neighbor of F
    assert itinerary(aut, parse_code("355"), parse_code("422")).states == (ID, EXIT)


def test_itinerary_rejects_foreign_letters():
    with pytest.raises(ValueError):
        itinerary(build(make_system(3, [(0, 0), (1, 1), (2, 2)])), parse_code("4"), parse_code("1"))


@pytest.mark.parametrize("sys", [E, F])
def test_separation_examples(sys):
    x, y = parse_code("13"), parse_code("21")
    assert separation(build(sys), x, y) == 2 == geometric_separation(sys, x, y)
    assert separation(build(sys), x, x) == INF


def test_double_coding_never_separates():
    aut = build(E)
    assert separation(aut, parse_code("13@3"), parse_code("21@1")) == INF
    assert separation(aut, parse_code("35@5"), parse_code("42@2")) == INF


@pytest.mark.parametrize("sys", [E, F])
@given(x=omega, y=omega)
def test_separation_matches_geometry(sys, x, y):
    aut = build(sys)
    assert separation(aut, x, y) == geometric_separation(sys, x, y)
    assert separation(aut, x, y) == separation(aut, y, x)
    assert separation(aut, x, y) == itinerary(aut, x, y).separation


@pytest.mark.parametrize("sys", [E, F, FULL3, *random_systems(11, 5)])
def test_neighbors_symmetric_and_alive(sys):
    aut = build(sys)
    assert aut.neighbors == {(-a, -b) for a, b in aut.neighbors}
    for h in aut.neighbors:
        assert max(map(abs, h)) <= 1
        assert any(t != EXIT for t in aut.transitions[h].values())
        assert intersects(sys, h)


@pytest.mark.parametrize("sys, nodes", [(E, 6), (F, 4), (FULL3, 10)])
def test_dot_node_count(sys, nodes):
    dot = export_dot(build(sys))
    assert sum(1 for line in dot.splitlines() if "[label=" in line and "->" not in line) == nodes


def test_dot_golden():
    assert export_dot(build(E)) == (GOLDEN / "E_automaton.dot").read_text()
    assert export_dot(build(F)) == (GOLDEN / "F_automaton.dot").read_text()


def test_json_export():
    import json

    doc = json.loads(export_json(build(F)))
    assert doc["neighbors"] == [[0, -1], [0, 1]]
    assert {"from": [0, -1], "pair": [3, 1], "to": [0, -1]} in doc["transitions"]
    assert len(doc["transitions"]) == 3 * 25
