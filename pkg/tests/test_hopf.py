import pytest
from hypothesis import given, settings, strategies as st

from bigraft.forests import enumerate_forests, parse
from bigraft.hopf import (Gamma, antipode, coproduct, coproduct_ass, concat, counit,
                          dagger_elt, elt, gamma, gram_matrix, pairing, primitive_rank_check,
                          reduced_coproduct, reduced_coproduct_ass, tensor, tensor_map)
from bigraft.lincomb import BoundError, DomainError, LinComb


def E(text):
    return elt(parse(text))


def T(a, b, c=1):
    return c * tensor(parse(a), parse(b))


def test_concat_examples():
    assert concat(E("o"), E("o[l:o]")) == E("o o[l:o]")
    assert concat(E("1"), E("o[r:o]")) == E("o[r:o]")
    assert concat(E("o[l:o]") + E("o"), E("o")) == E("o[l:o] o") + E("o o")


def test_coproduct_examples():
    assert coproduct(E("o")) == T("o", "1") + T("1", "o")
    assert coproduct(E("o o")) == T("o o", "1") + T("1", "o o") + T("o", "o", 2)
    d = coproduct(E("o[l:o[l:o],r:o]"))
    assert len(d) == 7 and all(c == 1 for _, c in d)


def test_counit_examples():
    assert counit(E("1")) == 1
    assert counit(E("o")) == 0
    assert counit(3 * E("1") + 5 * E("o o")) == 3


def test_reduced_coproduct_examples():
    assert reduced_coproduct(E("o")) == LinComb()
    assert reduced_coproduct(E("o o")) == T("o", "o", 2)
    assert reduced_coproduct(E("o[l:o]")) == T("o", "o")
    with pytest.raises(DomainError):
        reduced_coproduct(E("1"))


def test_antipode_examples():
    assert antipode(E("1")) == E("1")
    assert antipode(E("o")) == -E("o")
    assert antipode(E("o o")) == E("o o")


def _convolution(x):
    # m (S x id) Delta
    out = LinComb()
    for (a, b), c in coproduct(x):
        out = out + c * concat(antipode(elt(a)), elt(b))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_antipode_convolution_identity(n):
    for f in enumerate_forests(n):
        assert _convolution(elt(f)) == LinComb()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coassociativity(n):
    for f in enumerate_forests(n):
        d = coproduct(elt(f))
        left = LinComb()
        right = LinComb()
        for (a, b), c in d:
            for (a1, a2), c1 in coproduct(elt(a)):
                left = left + LinComb.basis((a1, a2, b), c * c1)
            for (b1, b2), c2 in coproduct(elt(b)):
                right = right + LinComb.basis((a, b1, b2), c * c2)
        assert left == right


def test_gamma_examples():
    assert gamma(parse("o")) == T("1", "1")
    assert gamma(parse("o[r:o]")) == -T("1", "o")
    assert gamma(parse("o[l:o]")) == T("o", "1")
    with pytest.raises(DomainError):
        gamma(parse("o o"))


def test_Gamma_examples():
    assert Gamma(E("o")) == T("1", "1")
    assert Gamma(E("o o")) == T("o", "1") + T("1", "o")
    assert Gamma(E("1")) == LinComb()


def test_Gamma_derivation_rule():
    # Gamma(xy) = Delta(x) Gamma(y) + counit(y) Gamma(x)
    from bigraft.hopf import tensor_mul
    forests = [f for n in range(3) for f in enumerate_forests(n)]
    for x in forests:
        for y in forests:
            lhs = Gamma(concat(elt(x), elt(y)))
            rhs = tensor_mul(coproduct(elt(x)), Gamma(elt(y))) + counit(elt(y)) * Gamma(elt(x))
            assert lhs == rhs


def test_pairing_examples():
    assert pairing(E("o o"), E("o o")) == 2
    assert pairing(E("o[r:o]"), E("o[r:o]")) == -1
    assert pairing(E("o[r:o,r:o]"), E("o[r:o,r:o]")) == 2
    assert pairing(E("o"), E("o o")) == 0


def test_gram_small():
    assert gram_matrix(1) == [[1]]
    assert gram_matrix(2) == [[2, 1, 1], [1, 1, 0], [1, 0, -1]]
    with pytest.raises(BoundError):
        gram_matrix(6)


def test_coproduct_ass_examples():
    assert reduced_coproduct_ass(E("o o")) == T("o", "o")
    assert reduced_coproduct_ass(E("o[l:o,r:o]")) == LinComb()
    assert reduced_coproduct_ass(E("o o[l:o] o")) == T("o", "o[l:o] o") + T("o o[l:o]", "o")
    assert len(coproduct_ass(E("o o"))) == 3


@pytest.mark.parametrize("n,expected", [(1, (1, 1)), (2, (2, 2)), (3, (7, 7)), (4, (30, 30))])
def test_primitive_rank(n, expected):
    assert primitive_rank_check(n) == expected


def test_dagger_elt_is_linear():
    x = 2 * E("o[l:o] o o") - E("o")
    assert dagger_elt(x) == 2 * E("o o o[r:o]") - E("o")


def test_tensor_map_identity():
    d = coproduct(E("o[l:o] o"))
    assert tensor_map(d) == d


small = st.sampled_from([f for n in range(4) for f in enumerate_forests(n)])


@given(small, small)
@settings(max_examples=120, deadline=None)
def test_coproduct_is_multiplicative(f, g):
    from bigraft.hopf import tensor_mul
    assert coproduct(concat(elt(f), elt(g))) == tensor_mul(coproduct(elt(f)), coproduct(elt(g)))


@given(small, small)
@settings(max_examples=120, deadline=None)
def test_pairing_symmetric_and_antipode_selfadjoint(f, g):
    assert pairing(elt(f), elt(g)) == pairing(elt(g), elt(f))
    assert pairing(antipode(elt(f)), elt(g)) == pairing(elt(f), antipode(elt(g)))
