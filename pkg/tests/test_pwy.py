import json

import pytest

from braidnum.braid import ino_set, lambda_word
from braidnum.perms import all_permutations
from braidnum.pwy import (InadmissibleY, LabeledPoset, admissible_Y, build_pwy, check_admissible,
                          fiber, lin_equals_fiber, poset_stats, vertex_word)

W = (2, 1, 5, 4, 6, 3)


@pytest.fixture(scope="module")
def p_example():
    return build_pwy(W, {3, 5, 6})


def test_admissible_examples():
    got = set(admissible_Y(W))
    assert len(got) == 8
    assert all({3} <= Y <= {3, 4, 5, 6} for Y in got)
    assert list(admissible_Y((1, 2, 3))) == [frozenset({2, 3})]
    assert list(admissible_Y((3, 2, 1))) == [frozenset()]


def test_admissible_sets_are_exactly_the_occurring_ones():
    for n in range(1, 5):
        for w in all_permutations(n + 1):
            occurring = {ino_set(w, s) for s in all_permutations(n)}
            assert occurring == set(admissible_Y(w))


def test_inadmissible_rejected_with_reason():
    with pytest.raises(InadmissibleY, match="left-to-right minimum 2"):
        build_pwy(W, {2, 5, 6})
    with pytest.raises(InadmissibleY, match="right-to-left minimum 3"):
        check_admissible(W, {5, 6})
    with pytest.raises(InadmissibleY, match="outside"):
        check_admissible(W, {3, 9})


def test_example_poset(p_example):
    P = p_example
    assert P.Lambda == (-2, 5, 3, 6, -4)
    assert sorted(P.covers()) == [(2, 3), (4, 5), (5, 3)]
    lin = set(P.linear_extensions())
    assert len(lin) == 15
    assert (1, 4, 2, 5, 3) in lin
    assert P.vertex_word((1, 4, 2, 5, 3)) == (-2, 6, 5, -4, 3)
    assert P.reverses_covers()


def test_small_examples():
    P = build_pwy((3, 2, 1), set())
    assert P.n == 2
    assert set(P.linear_extensions()) == {(1, 2), (2, 1)}
    assert vertex_word(P, (1, 2)) == (-3, -2)
    assert vertex_word(P, (2, 1)) == (-2, -3)
    P = build_pwy((1, 2, 3), {2, 3})
    assert set(P.linear_extensions()) == {(1, 2), (2, 1)}
    assert vertex_word(P, (2, 1)) == (3, 2)


def test_vertex_word_rejects_non_extension(p_example):
    with pytest.raises(ValueError):
        vertex_word(p_example, (3, 1, 2, 4, 5))


def test_lin_equals_fiber_examples():
    assert lin_equals_fiber(W, {3, 5, 6})
    assert lin_equals_fiber((1, 2, 3), {2, 3})
    assert len(fiber(W, {3, 5, 6})) == 15


@pytest.mark.parametrize("n", range(1, 5))
def test_lin_equals_fiber_exhaustive(n):
    for w in all_permutations(n + 1):
        for Y in admissible_Y(w):
            assert lin_equals_fiber(w, Y)


@pytest.mark.parametrize("n", range(1, 5))
def test_vertex_word_reproduces_signed_word(n):
    for w in all_permutations(n + 1):
        for s in all_permutations(n):
            P = build_pwy(w, ino_set(w, s))
            assert vertex_word(P, s) == lambda_word(w, s)


@pytest.mark.parametrize("n", range(1, 5))
def test_label_invariants(n):
    for w in all_permutations(n + 1):
        for Y in admissible_Y(w):
            P = build_pwy(w, Y)
            assert sorted(abs(x) for x in P.Lambda) == list(range(2, n + 2))
            assert {x for x in P.Lambda if x > 0} == Y
            assert P.reverses_covers()
            # Hasse diagram is a forest: covers = n - components
            assert len(P.poset.covers) == n - poset_stats(P)["components"]


def test_json_round_trip(p_example):
    doc = json.loads(p_example.to_json())
    assert doc["Lambda"]["4"] == 6
    back = LabeledPoset.from_dict(doc)
    assert back.Lambda == p_example.Lambda
    assert back.covers() == p_example.covers()


def test_dot_export(p_example):
    dot = p_example.to_dot()
    assert dot.startswith("digraph")
    assert '"1:-2"' in dot or "1:-2" in dot
    assert dot.count("->") == 3
