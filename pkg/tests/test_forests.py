import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bigraft.forests import (LEAF, ParseError, Tree, ValidityError, admissible_cuts,
                             b_minus, b_plus, dagger, degree, enumerate_forests,
                             enumerate_trees, from_json, is_antichain, is_dual_basis,
                             parent_map, parse, parse_tree, render, to_json, vertex_order)
from bigraft.lincomb import BoundError

P = parse


def test_b_plus_examples():
    assert b_plus((), ()) == LEAF
    assert render(b_plus(P("o"), P("o"))) == "o[l:o,r:o]"
    assert render(b_plus(P("o o"), P("o"))) == "o[l:o,l:o,r:o]"


def test_b_minus_examples():
    assert b_minus(parse_tree("o")) == ((), ())
    assert b_minus(parse_tree("o[l:o,r:o]")) == (P("o"), P("o"))
    assert b_minus(parse_tree("o[l:o[r:o]]")) == (P("o[r:o]"), ())


def test_dagger_examples():
    assert dagger(P("o[l:o] o o")) == P("o o o[r:o]")
    assert dagger(P("o")) == P("o")
    assert dagger(P("o[l:o,l:o,r:o]")) == P("o[l:o,r:o,r:o]")


def test_parse_render():
    assert P("o[l:o,r:o]") == (Tree(P("o"), P("o")),)
    assert P("1") == ()
    assert render(()) == "1"
    with pytest.raises(ValidityError):
        P("o[r:o,l:o]")
    for bad in ("", "o[", "o[x:o]", "o]", "o[l:]"):
        with pytest.raises(ParseError):
            P(bad)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as e:
        P("o o[l:o,q:o]")
    assert "8" in str(e.value) or e.value.pos == 8


def test_enumeration_examples():
    assert len(enumerate_forests(3)) == 12
    assert len(enumerate_forests(4, dual_only=True)) == 10
    assert list(enumerate_forests(0)) == [()]
    with pytest.raises(BoundError):
        enumerate_forests(11)


def test_is_dual_basis_examples():
    assert is_dual_basis(P("o[l:o] o o[r:o]"))
    assert not is_dual_basis(P("o[l:o[l:o]]"))
    assert not is_dual_basis(P("o o[l:o]"))


def test_vertex_order_root_between_blocks():
    # l-subtree vertices, then the root, then r-subtree vertices
    order = vertex_order(P("o[l:o,r:o]"))
    pm = parent_map(P("o[l:o,r:o]"))
    roots = [v for v in range(3) if pm[v] is None]
    assert len(order) == 3 and roots == [1]


def test_cuts_small():
    assert [(c, l, r) for c, l, r in admissible_cuts(())] == [(frozenset(), (), ())]
    pairs = sorted((render(l), render(r)) for _, l, r in admissible_cuts(P("o")))
    assert pairs == [("1", "o"), ("o", "1")]


def test_cuts_seven_term_example():
    cuts = admissible_cuts(P("o[l:o[l:o],r:o]"))
    assert len(cuts) == 7
    nontrivial = sorted((render(l), render(r)) for _, l, r in cuts if l and r)
    assert nontrivial == sorted([("o", "o[l:o,r:o]"), ("o[l:o]", "o[r:o]"),
                                 ("o", "o[l:o[l:o]]"), ("o o", "o[l:o]"),
                                 ("o[l:o] o", "o")])


def _brute_cut_count(f):
    # antichains of the forest poset, including the empty one
    pm = parent_map(f)
    n = len(pm)

    def below(a, b):  # a strictly below b (b an ancestor of a)
        p = pm[a]
        while p is not None:
            if p == b:
                return True
            p = pm[p]
        return False

    total = 0
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if all(not below(a, b) and not below(b, a) for a, b in itertools.combinations(s, 2)):
                total += 1
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cut_count_matches_antichains(n):
    for f in enumerate_forests(n):
        cuts = admissible_cuts(f)
        assert len(cuts) == _brute_cut_count(f)
        assert all(is_antichain(f, c) for c, _, _ in cuts)
        assert all(degree(l) + degree(r) == n for _, l, r in cuts)


def test_tree_enumeration_is_trees():
    assert all(len(f) == 1 for f in (P(render((t,))) for t in enumerate_trees(4)))
    assert len(set(enumerate_forests(4))) == 55


forest_strategy = st.sampled_from([f for n in range(5) for f in enumerate_forests(n)])


@given(forest_strategy)
@settings(max_examples=150, deadline=None)
def test_roundtrips(f):
    assert parse(render(f)) == f
    assert from_json(to_json(f)) == f
    assert dagger(dagger(f)) == f
    assert degree(dagger(f)) == degree(f)
