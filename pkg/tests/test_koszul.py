import pytest

from bigraft import koszul as K
from bigraft.enumeration import dual_counts, forest_counts
from bigraft.lincomb import BoundError, DomainError, LinComb

M = K.parse_monomials


def comb(a, b, c):
    # a o (b o (c, I), I), labels read outer to inner
    return (a, (b, (c, K.X, K.X), K.X), K.X)


def nf(text, system="bgdual"):
    return K.normal_form(M(text), system)


def test_parser_and_printer():
    assert M("m∘(m,I)") == LinComb.basis(("m", ("m", "x", "x"), "x"))
    assert M("> ∘ (I, <)") == M("≻∘(I,≺)")
    assert M("2 m∘(I,m) - ≻∘(m,I)") == 2 * M("m∘(I,m)") - M("≻∘(m,I)")
    assert K.fmt(("m", "x", ("m", "x", "x"))) == "m∘(I,m)"
    for m in K.enumerate_monomials(3):
        assert M(K.fmt(m)) == LinComb.basis(m)
    with pytest.raises(K.MonoParseError):
        M("m∘(m")


def test_enumerate_monomials_catalan():
    assert [len(K.enumerate_monomials(n)) for n in range(1, 5)] == [1, 3, 18, 135]


def test_rule_examples():
    assert nf("m∘(m,I)") == M("m∘(I,m)")
    assert nf("≺∘(I,≺)") == LinComb()


def test_comb_examples():
    sys = "bgdual"
    assert K.normal_form(LinComb.basis(comb("m", "m", ">")), sys) == M("≻∘(I,m∘(I,m))")
    assert K.normal_form(LinComb.basis(comb(">", "m", ">")), sys) == LinComb()
    # r3 reversed makes (x < y) < z the normal shape
    assert K.get_system(sys).is_normal(comb("<", "<", "<"))


def test_unknown_system():
    with pytest.raises(DomainError):
        K.get_system("nope")
    assert K.get_system("bg!") is K.get_system("bgdual")


def test_certified_dual_system():
    rep = K.confluence_report("bgdual")
    assert rep["all_joinable"]
    assert rep["termination"] is not None
    assert sum(rep["listed_present"]) == 8


def test_certified_bg_system():
    rep = K.confluence_report("bg")
    assert rep["all_joinable"]
    assert K.certify_termination(K.get_system("bg")) is None
    assert K.rewrite_graph_acyclic(5, K.get_system("bg"))


def test_printed_dual_system_is_not_confluent():
    rep = K.confluence_report("bgdual-printed")
    assert len(rep["nontrivial"]) == 11
    assert sorted(rep["nontrivial"]) == sorted(K.LISTED_CRITICAL)
    assert not rep["all_joinable"]
    assert K.count_normal_forms(4, "bgdual-printed") == 11


@pytest.mark.parametrize("n", range(1, 8))
def test_dual_counts(n):
    assert K.count_normal_forms(n, "bgdual") == n * (n + 1) // 2 == dual_counts(n)[1][-1]


@pytest.mark.parametrize("n", range(1, 7))
def test_bg_counts(n):
    assert K.count_normal_forms(n, "bg") == forest_counts(n)[-1]


def test_count_examples_and_bound():
    assert K.count_normal_forms(3, "bgdual") == 6
    assert K.count_normal_forms(5, "bgdual") == 15
    assert K.count_normal_forms(3, "bg") == 12
    with pytest.raises(BoundError):
        K.count_normal_forms(8)


def test_count_matches_brute_force():
    for system in ("bgdual", "bg", "bgdual-printed"):
        s = K.get_system(system)
        for n in range(1, 5):
            brute = sum(1 for m in K.enumerate_monomials(n) if s.is_normal(m))
            assert brute == K.count_normal_forms(n, system)


@pytest.mark.parametrize("system", ["bgdual", "bg"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_pbw_bijection(system, n):
    assert K.check_pbw_bijection(n, system)


def test_lpo_orients_dual_rules():
    prec = {">": 0, "m": 1, "<": 2}
    status = {">": "lr", "m": "lr", "<": "rl"}
    x, y, z = "x1", "x2", "x3"
    assert K.lpo_greater(("m", ("m", x, y), z), ("m", x, ("m", y, z)), prec, status)
    assert not K.lpo_greater(("m", x, ("m", y, z)), ("m", ("m", x, y), z), prec, status)


def test_weight3_pairing():
    assert K.weight3_pairing(M("≻∘(m,I)"), M("≻∘(m,I)")) == 1
    assert K.weight3_pairing(M("≻∘(I,≻)"), M("≻∘(I,≻)")) == -1
    r = M("≻∘(m,I) - ≻∘(I,≻)")
    assert K.weight3_pairing(r, r) == 0
    assert K.weight3_pairing(M("≻∘(m,I)"), M("≻∘(I,m)")) == 0


def test_annihilator():
    rep = K.annihilator_check()
    assert rep["ok"] and rep["failures"] == []
    assert (rep["dim_bg"], rep["dim_bgdual"], rep["dim_space"]) == (6, 12, 18)


def test_annihilator_detects_sign_flip(monkeypatch):
    # negative control: without the second-slot sign some pairings survive
    def plain(x, y):
        return sum(c * y.coeff(p) for p, c in x)
    rels, dual = K.bg_relations(), K.bgdual_relations()
    assert any(plain(r, s) for r in dual for s in rels)
