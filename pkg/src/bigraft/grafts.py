"""
Graft products on the augmentation ideal M of BT, the bigraft axioms,
the extended tensor product, primitives and enveloping products.
"""

from __future__ import annotations

from functools import lru_cache

from .forests import LEAF, UNIT, Tree, as_forest, render
from .hopf import concat, elt
from .lincomb import DomainError, LinComb

SUCC, PREC, STAR = ">", "<", "*"


def _nonempty(*fs):
    for f in fs:
        if not f:
            raise DomainError("graft products are defined on nonempty forests")


@lru_cache(maxsize=None)
def succ_basis(g, f):
    """G > F: graft G on the root of the first tree of F, through l-edges."""
    _nonempty(g, f)
    first = f[0]
    return (Tree(g + first.left, first.right),) + f[1:]


@lru_cache(maxsize=None)
def prec_basis(g, f):
    """G < F: graft F on the root of the last tree of G, through r-edges."""
    _nonempty(g, f)
    last = g[-1]
    return g[:-1] + (Tree(last.left, last.right + f),)


def graft_left(g, f) -> LinComb:
    g, f = elt(g), elt(f)
    return g.bilinear(f, lambda a, b: LinComb.basis(succ_basis(a, b)))


def graft_right(g, f) -> LinComb:
    g, f = elt(g), elt(f)
    return g.bilinear(f, lambda a, b: LinComb.basis(prec_basis(a, b)))


succ = graft_left
prec = graft_right


def product(which, x, y) -> LinComb:
    if which == STAR:
        return concat(x, y)
    if which == SUCC:
        return graft_left(x, y)
    if which == PREC:
        return graft_right(x, y)
    raise DomainError("unknown product %r" % (which,))


BG_AXIOMS = (
    "(x*y)*z = x*(y*z)",
    "(x*y)>z = x>(y>z)",
    "(x>y)*z = x>(y*z)",
    "(x<y)<z = x<(y*z)",
    "(x*y)<z = x*(y<z)",
    "(x>y)<z = x>(y<z)",
)


def bg_residuals(x, y, z, mul=concat, left=graft_left, right=graft_right):
    """Left minus right side of the six bigraft axioms, in BG_AXIOMS order."""
    return (
        mul(mul(x, y), z) - mul(x, mul(y, z)),
        left(mul(x, y), z) - left(x, left(y, z)),
        mul(left(x, y), z) - left(x, mul(y, z)),
        right(right(x, y), z) - right(x, mul(y, z)),
        right(mul(x, y), z) - mul(x, right(y, z)),
        right(left(x, y), z) - left(x, right(y, z)),
    )


# -- the extended tensor product ------------------------------------------
#
# A BarTensor is a LinComb over pairs (a, b) of forests where the empty
# forest stands for the scalar 1; the pair (1, 1) is never allowed.

def _check_bar(a, b):
    if not a and not b:
        raise DomainError("the component 1 x 1 is not part of the bar tensor")


def _unit_succ(a, b):
    # a > b with a > 1 = 0, 1 > a = a
    if not b:
        return LinComb()
    if not a:
        return LinComb.basis(b)
    return LinComb.basis(succ_basis(a, b))


def _unit_prec(a, b):
    # a < b with a < 1 = a, 1 < a = 0
    if not a:
        return LinComb()
    if not b:
        return LinComb.basis(a)
    return LinComb.basis(prec_basis(a, b))


def _pairs(x, y):
    out = LinComb()
    for a, c1 in x:
        for b, c2 in y:
            out.add_term((a, b), c1 * c2)
    return out


def bar_basis(s, t, which, variant="second"):
    """
    One product of two bar-tensor basis terms s = (a, b), t = (a2, b2).

    variant "second" grafts in the second factor for both > and < and
    uses the first factor only when both second factors are 1.  Variant
    "first" grafts > in the first factor (falling back to the second
    factor when both first factors are 1); < is the same in both.
    """
    (a, b), (a2, b2) = s, t
    _check_bar(a, b)
    _check_bar(a2, b2)
    if which == STAR:
        return LinComb.basis((a + a2, b + b2))
    if which == SUCC and variant == "first":
        if a or a2:
            return _pairs(_unit_succ(a, a2), LinComb.basis(b + b2))
        return _pairs(LinComb.basis(UNIT), _unit_succ(b, b2))
    if which not in (SUCC, PREC):
        raise DomainError("unknown product %r" % (which,))
    op = _unit_succ if which == SUCC else _unit_prec
    if b or b2:
        return _pairs(LinComb.basis(a + a2), op(b, b2))
    return _pairs(op(a, a2), LinComb.basis(UNIT))


def bar_ops(x: LinComb, y: LinComb, which, variant="second") -> LinComb:
    """Bilinear extension of bar_basis to bar tensors."""
    out = LinComb()
    for s, c1 in x:
        for t, c2 in y:
            for k, c in bar_basis(s, t, which, variant):
                out.add_term(k, c1 * c2 * c)
    return out


# -- primitives and enveloping products ------------------------------------

def primitive_graft(t, u, which) -> Tree:
    """Graft of two trees; stays a tree (primitives form an L-algebra)."""
    t, u = as_forest(t), as_forest(u)
    if len(t) != 1 or len(u) != 1:
        raise DomainError("primitive_graft takes single trees")
    if which == SUCC:
        return succ_basis(t, u)[0]
    if which == PREC:
        return prec_basis(t, u)[0]
    raise DomainError("unknown product %r" % (which,))


def _lie_elt(x) -> LinComb:
    x = elt(x)
    for f, _ in x:
        if len(f) != 1:
            raise DomainError("word letters must be combinations of trees, got %s"
                              % render(f))
    return x


def enveloping_products(aword, bword, which) -> LinComb:
    """
    Products on words over the primitive L-algebra:
      (a1..ap) > (b1..bq) = (a1 > (... (ap > b1))) b2..bq
      (a1..ap) < (b1..bq) = a1..a(p-1) ((... (ap < b1) ...) < bq)
    Letters are trees or combinations of trees; the result is expanded
    into forests.
    """
    aword = [_lie_elt(a) for a in aword]
    bword = [_lie_elt(b) for b in bword]
    if not aword or not bword:
        raise DomainError("enveloping products need nonempty words")

    def cat(ws):
        out = LinComb.basis(UNIT)
        for w in ws:
            out = concat(out, w)
        return out

    if which == SUCC:
        acc = bword[0]
        for a in reversed(aword):
            acc = graft_left(a, acc)
        return concat(acc, cat(bword[1:]))
    if which == PREC:
        acc = aword[-1]
        for b in bword:
            acc = graft_right(acc, b)
        return concat(cat(aword[:-1]), acc)
    raise DomainError("unknown product %r" % (which,))


def decompose(f) -> str:
    """
    Expression building f from o with *, > and <, using
    B(F1 x F2) = (F1 > o) < F2.
    """
    f = as_forest(f)
    if not f:
        raise DomainError("the unit is not generated")

    def tree(t):
        s = "o"
        if t.left:
            s = "(%s |> %s)" % (forest(t.left), s)
        if t.right:
            s = "(%s <| %s)" % (s, forest(t.right))
        return s

    def forest(g):
        parts = [tree(t) for t in g]
        return parts[0] if len(parts) == 1 else "(" + " * ".join(parts) + ")"

    return forest(f)


def rebuild(f) -> LinComb:
    """Evaluate the decomposition of f with the products (freeness check)."""
    f = as_forest(f)

    def tree(t):
        x = LinComb.basis((LEAF,))
        if t.left:
            x = graft_left(forest(t.left), x)
        if t.right:
            x = graft_right(x, forest(t.right))
        return x

    def forest(g):
        out = tree(g[0])
        for t in g[1:]:
            out = concat(out, tree(t))
        return out

    return forest(f)
