"""
The Hopf algebra BT of decorated planar forests.

Elements are LinComb over forests; tensors are LinComb over pairs of
forests.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from .forests import (
    UNIT, Tree, admissible_cuts, as_forest, dagger, degree,
    enumerate_forests, enumerate_trees,
)
from .lincomb import BoundError, DomainError, LinComb
from .linalg import rank

GRAM_BOUND = 5


def elt(x) -> LinComb:
    """Coerce text, a tree, a forest or a LinComb to an element of BT."""
    if isinstance(x, LinComb):
        return x
    return LinComb.basis(as_forest(x))


def concat(x, y) -> LinComb:
    x, y = elt(x), elt(y)
    return x.bilinear(y, lambda f, g: LinComb.basis(f + g))


def tensor(x, y) -> LinComb:
    x, y = elt(x), elt(y)
    return x.bilinear(y, lambda f, g: LinComb.basis((f, g)))


def tensor_mul(s: LinComb, t: LinComb) -> LinComb:
    """Product in BT x BT: (a x b)(c x d) = ac x bd."""
    out = LinComb()
    for (a, b), c1 in s:
        for (c, d), c2 in t:
            out.add_term((a + c, b + d), c1 * c2)
    return out


def tensor_map(t: LinComb, f=None, g=None) -> LinComb:
    """(f x g)(t) for linear maps given on basis forests."""
    out = LinComb()
    for (a, b), c in t:
        fa = f(a) if f else LinComb.basis(a)
        gb = g(b) if g else LinComb.basis(b)
        for x, c1 in fa:
            for y, c2 in gb:
                out.add_term((x, y), c * c1 * c2)
    return out


def flip(t: LinComb) -> LinComb:
    return LinComb({(b, a): c for (a, b), c in t})


# -- coproduct -------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_coproduct(t: Tree) -> LinComb:
    out = LinComb()
    for _, lea, roo in admissible_cuts((t,)):
        out.add_term((lea, roo), 1)
    return out


@lru_cache(maxsize=None)
def _forest_coproduct(f) -> LinComb:
    if not f:
        return LinComb.basis((UNIT, UNIT))
    out = _tree_coproduct(f[0])
    for t in f[1:]:
        out = tensor_mul(out, _tree_coproduct(t))
    return out


def coproduct(x) -> LinComb:
    """Admissible-cut coproduct, extended multiplicatively."""
    return elt(x).map(_forest_coproduct)


def counit(x) -> int:
    return elt(x).coeff(UNIT)


def _require_augmented(x):
    if counit(x):
        raise DomainError("element has nonzero counit")


def reduced_coproduct(x) -> LinComb:
    x = elt(x)
    _require_augmented(x)
    return coproduct(x) - tensor(x, UNIT) - tensor(UNIT, x)


@lru_cache(maxsize=None)
def _antipode_forest(f) -> LinComb:
    if not f:
        return LinComb.basis(UNIT)
    # S(F) = -F - sum S(F')F'' over the reduced coproduct
    out = LinComb.basis(f, -1)
    for (a, b), c in _forest_coproduct(f):
        if not a or not b:
            continue
        for s, c2 in _antipode_forest(a):
            out.add_term(s + b, -c * c2)
    return out


def antipode(x) -> LinComb:
    return elt(x).map(_antipode_forest)


# -- deconcatenation -------------------------------------------------------

def _deconcat(f) -> LinComb:
    return LinComb({(f[:i], f[i:]): 1 for i in range(len(f) + 1)})


def coproduct_ass(x) -> LinComb:
    return elt(x).map(_deconcat)


def reduced_coproduct_ass(x) -> LinComb:
    x = elt(x)
    _require_augmented(x)
    return x.map(lambda f: LinComb(
        {(f[:i], f[i:]): 1 for i in range(1, len(f))}))


# -- gamma and the pairing ---------------------------------------------------

def gamma(t) -> LinComb:
    """gamma(B(F x G)) = (-1)^|G| F x G, defined on trees only."""
    if not isinstance(t, Tree):
        f = as_forest(t)
        if len(f) != 1:
            raise DomainError("gamma is defined on single trees")
        t = f[0]
    sign = -1 if degree(t.right) % 2 else 1
    return LinComb.basis((t.left, t.right), sign)


@lru_cache(maxsize=None)
def _Gamma_forest(f) -> LinComb:
    if not f:
        return LinComb()
    out = gamma(f[-1])
    for t in reversed(f[:-1]):
        out = tensor_mul(_tree_coproduct(t), out)
    return out


def Gamma(x) -> LinComb:
    return elt(x).map(_Gamma_forest)


@lru_cache(maxsize=None)
def _pair(f, g) -> int:
    if degree(f) != degree(g):
        return 0
    if not f:
        return 1 if not g else 0
    if len(f) >= 2:
        head, tail = f[:1], f[1:]
        dh = degree(head)
        total = 0
        for (a, b), c in _forest_coproduct(g):
            if degree(a) == dh:
                total += c * _pair(head, a) * _pair(tail, b)
        return total
    x, y = f[0].left, f[0].right
    dx = degree(x)
    total = 0
    for (a, b), c in _Gamma_forest(g):
        if degree(a) == dx:
            total += c * _pair(x, a) * _pair(y, b)
    return total


def pairing(x, y) -> int:
    """The bilinear pairing on BT, by the unit/product/B recursion."""
    x, y = elt(x), elt(y)
    return sum(c1 * c2 * _pair(f, g) for f, c1 in x for g, c2 in y)


def gram_matrix(n: int, bound=GRAM_BOUND, basis=None):
    if n < 1:
        raise DomainError("degree must be positive")
    if n > bound:
        raise BoundError("degree %d exceeds gram bound %d" % (n, bound))
    if basis is None:
        basis = enumerate_forests(n)
    return [[_pair(f, g) for g in basis] for f in basis]


def primitive_rank_check(n: int, bound=GRAM_BOUND):
    """
    (dim ker of the reduced deconcatenation in degree n, number of trees).
    """
    if n < 1:
        raise DomainError("degree must be positive")
    if n > bound:
        raise BoundError("degree %d exceeds bound %d" % (n, bound))
    basis = enumerate_forests(n)
    cols = {}
    rows = []
    for f in basis:
        row = {}
        for (a, b), c in reduced_coproduct_ass(f):
            j = cols.setdefault((a, b), len(cols))
            row[j] = row.get(j, 0) + c
        rows.append(row)
    kernel = len(basis) - rank(rows)
    return kernel, len(enumerate_trees(n))


def element_degree(x) -> int:
    """Common degree of a homogeneous element (raises otherwise)."""
    degs = {degree(f) for f, _ in elt(x)}
    if len(degs) != 1:
        raise DomainError("element is not homogeneous")
    return degs.pop()


def dagger_elt(x) -> LinComb:
    return elt(x).map(lambda f: LinComb.basis(dagger(f)))
