import pytest
from hypothesis import given, settings, strategies as st

from bigraft.forests import enumerate_forests, parse
from bigraft.grafts import graft_right
from bigraft.hopf import elt
from bigraft.lincomb import DomainError, LinComb
from bigraft.operad import (UNIT_OP, ArityError, check_operad_axioms, check_operations,
                            compose, compose_basis, dual_compose, dual_project, operad_dims)

P = parse


def E(text):
    return elt(P(text))


def test_compose_examples():
    h = P("o[l:o] o")
    assert compose_basis(UNIT_OP, (h,)) == h
    f1, f2 = P("o o[l:o]"), P("o[r:o]")
    assert compose(P("o[r:o]"), [f1, f2]) == graft_right(f1, f2)
    assert compose(P("o[l:o,r:o]"), [P("o")] * 3) == E("o[l:o,r:o]")
    assert compose(P("o[r:o]"), [P("o o"), P("o o")]) == E("o o[r:o,r:o]")


def test_compose_multilinear():
    x = 2 * E("o o") - E("o[l:o]")
    assert compose(P("o"), [x]) == x
    assert compose(P("o o"), [x, E("o")]) == 2 * E("o o o") - E("o[l:o] o")


def test_compose_arity_errors():
    with pytest.raises(ArityError):
        compose(P("o o"), [P("o")])
    with pytest.raises(DomainError):
        compose(E("o") + E("o o"), [P("o")])


def test_generators_act_as_products():
    for f in enumerate_forests(2):
        for g in enumerate_forests(1):
            assert all(check_operations(f, g))


def test_axioms_exhaustive():
    rep = check_operad_axioms(4)
    assert rep["violations"] == [] and rep["checked"] > 1000


def test_dual_project_examples():
    assert dual_project(P("o[l:o[l:o]]")) == LinComb()
    assert dual_project(P("o[l:o] o")) == E("o[l:o] o")
    assert dual_project(P("o o[l:o]")) == LinComb()


def test_dual_compose_examples():
    assert dual_compose(P("o[l:o]"), [P("o[l:o]"), P("o")]) == LinComb()
    assert dual_compose(P("o[r:o]"), [P("o[r:o]"), P("o")]) == E("o[r:o,r:o]")
    assert dual_compose(P("o o"), [P("o"), P("o[l:o]")]) == LinComb()
    with pytest.raises(DomainError):
        dual_compose(P("o o[l:o]"), [P("o")] * 3)


def test_dims():
    assert operad_dims(3) == {"bg": (12, 72), "bgdual": (6, 36)}


dual = st.sampled_from([f for n in (1, 2) for f in enumerate_forests(n, dual_only=True)])


@given(st.sampled_from(enumerate_forests(2, dual_only=True)), dual, dual, dual)
@settings(max_examples=60, deadline=None)
def test_dual_composition_associative(f, g, h, k):
    # (f o (g, h)) o (units..., k in the last slot) = f o (g, h o (..., k))
    from bigraft.forests import degree
    left = dual_compose(f, [g, h])
    args = [P("o")] * (degree(g) + degree(h) - 1) + [k]
    lhs = LinComb()
    for x, c in left:
        lhs = lhs + c * dual_compose(x, args)
    hk = dual_compose(h, [P("o")] * (degree(h) - 1) + [k])
    rhs = dual_compose(f, [g, hk]) if hk else LinComb()
    assert lhs == rhs
