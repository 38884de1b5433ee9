"""
The chain complex of the free BG!-algebra over a BG-algebra A.

A generator is (p, t, q, decorations): the dual-basis skeleton with p
l-leaves, t trees and q r-leaves, and one element of A per vertex in
vertex order (l-leaves, roots, r-leaves).  Here A is the free BG-algebra
on one generator, so decorations are nonempty forests and the complex
splits by weight (total decoration degree).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .forests import degree, dual_forest, enumerate_forests, render
from .grafts import prec_basis, succ_basis
from .lincomb import BoundError, DomainError, LinComb
from .linalg import IntMatrix, rank

WEIGHT_BOUND = 5


class ForestAlgebra:
    """Products of the free one-generator BG-algebra on basis forests."""

    name = "free"

    def mul(self, a, b):
        return LinComb.basis(a + b)

    def succ(self, a, b):
        return LinComb.basis(succ_basis(a, b))

    def prec(self, a, b):
        return LinComb.basis(prec_basis(a, b))


class BrokenAlgebra(ForestAlgebra):
    """Swaps the operands of >; breaks the axioms, so d^2 should fail."""

    name = "broken"

    def succ(self, a, b):
        return LinComb.basis(succ_basis(b, a))


FREE = ForestAlgebra()


def skeleton(p, t, q):
    return dual_forest(p, t, q)


def arity_of(g) -> int:
    return g[0] + g[1] + g[2]


def weight_of(g) -> int:
    return sum(degree(f) for f in g[3])


def fmt_generator(g) -> str:
    p, t, q, decs = g
    return "(%s; %s)" % (render(skeleton(p, t, q)), ", ".join(render(f) for f in decs))


def shapes(k):
    """Dual-basis skeleton shapes (p, t, q) of arity k."""
    return [(p, t, k - p - t) for t in range(1, k + 1) for p in range(k - t + 1)]


def _compositions(w, k):
    if k == 0:
        if w == 0:
            yield ()
        return
    for first in range(1, w - k + 2):
        for rest in _compositions(w - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def generators(k, w):
    """Basis of the arity-k, weight-w component, in a fixed order."""
    out = []
    for p, t, q in shapes(k):
        for comp in _compositions(w, k):
            for decs in itertools.product(*(enumerate_forests(d) for d in comp)):
                out.append((p, t, q, decs))
    return tuple(out)


def component_dim(k, w) -> int:
    return len(generators(k, w))


def differential(g, algebra=FREE) -> LinComb:
    """
    d on one generator.  The merge of positions i, i+1 (0-based) carries
    the sign (-1)^i and uses * inside the l-block, > across the l-block
    boundary, * along the spine of roots, < across the r-block boundary
    and * inside the r-block.
    """
    p, t, q, decs = g
    n = p + t + q
    if len(decs) != n:
        raise DomainError("generator needs %d decorations, got %d" % (n, len(decs)))
    out = LinComb()
    if n == 1:
        return out
    for i in range(n - 1):
        a, b = decs[i], decs[i + 1]
        if i < p - 1:
            shape, prod = (p - 1, t, q), algebra.mul(a, b)
        elif i == p - 1:
            shape, prod = (p - 1, t, q), algebra.succ(a, b)
        elif i < p + t - 1:
            shape, prod = (p, t - 1, q), algebra.mul(a, b)
        elif i == p + t - 1:
            shape, prod = (p, t, q - 1), algebra.prec(a, b)
        else:
            shape, prod = (p, t, q - 1), algebra.mul(a, b)
        sign = -1 if i % 2 else 1
        for f, c in prod:
            out.add_term(shape + (decs[:i] + (f,) + decs[i + 2:],), sign * c)
    return out


def d(x, algebra=FREE) -> LinComb:
    if not isinstance(x, LinComb):
        x = LinComb.basis(x)
    return x.map(lambda g: differential(g, algebra))


def d_matrix(k, w, algebra=FREE, bound=WEIGHT_BOUND) -> IntMatrix:
    """Matrix of d from arity k to arity k-1 at weight w (columns = sources)."""
    if w > bound:
        raise BoundError("weight %d exceeds bound %d" % (w, bound))
    src = generators(k, w) if k >= 1 else ()
    tgt = generators(k - 1, w) if k >= 2 else ()
    index = {g: i for i, g in enumerate(tgt)}
    cols = []
    for g in src:
        col = {}
        if k >= 2:
            for h, c in differential(g, algebra):
                col[index[h]] = c
        cols.append(col)
    return IntMatrix.from_columns(len(tgt), cols)


def check_d_squared(max_weight=5, algebra=FREE):
    """Returns the list of (k, w) where d o d is nonzero."""
    bad = []
    for w in range(1, max_weight + 1):
        for k in range(3, w + 1):
            b = max(max_weight, WEIGHT_BOUND)
            if not (d_matrix(k - 1, w, algebra, b) @ d_matrix(k, w, algebra, b)).is_zero():
                bad.append((k, w))
    return bad


def homology_dims(w, bound=WEIGHT_BOUND, algebra=FREE):
    """
    H_n = Ker(d on arity n+1) / Im(d on arity n+2) at weight w, for
    n = 0 .. w-1.  Returns a report with component dims and ranks.
    """
    if w < 1:
        raise DomainError("weight must be positive")
    if w > bound:
        raise BoundError("weight %d exceeds bound %d" % (w, bound))
    dims = {k: component_dim(k, w) for k in range(1, w + 1)}
    ranks = {k: (rank(d_matrix(k, w, algebra, bound)) if k >= 2 else 0)
             for k in range(1, w + 2)}
    ranks[w + 1] = 0
    rows = []
    for n in range(w):
        k = n + 1
        h = dims[k] - ranks[k] - ranks[k + 1]
        rows.append({"n": n, "arity": k, "dim_chain": dims[k],
                     "rank_d_out": ranks[k], "rank_d_in": ranks[k + 1],
                     "dim_homology": h})
    euler = sum((-1) ** r["n"] * r["dim_chain"] for r in rows)
    return {"weight": w, "components": rows,
            "homology": [r["dim_homology"] for r in rows],
            "euler_characteristic": euler,
            "euler_from_homology": sum((-1) ** r["n"] * r["dim_homology"] for r in rows)}


# -- the three coproducts and the coderivation law -----------------------------
#
# Tensors are LinCombs over pairs (left, right); None stands for the
# unit 1 of the coalgebra.

def coproduct(g):
    """Split the skeleton between two consecutive trees (with both ends)."""
    p, t, q, decs = g
    out = LinComb({(None, g): 1, (g, None): 1})
    for i in range(1, t):
        cut = p + i
        out.add_term(((p, i, 0, decs[:cut]), (0, t - i, q, decs[cut:])), 1)
    return out


def coproduct_succ(g):
    """Split off the first i l-leaves as i single vertices."""
    p, t, q, decs = g
    out = LinComb({(None, g): 1})
    for i in range(1, p + 1):
        out.add_term(((0, i, 0, decs[:i]), (p - i, t, q, decs[i:])), 1)
    return out


def coproduct_prec(g):
    """Split off the last i r-leaves as i single vertices."""
    p, t, q, decs = g
    n = p + t + q
    out = LinComb({(g, None): 1})
    for i in range(1, q + 1):
        out.add_term(((p, t, q - i, decs[:n - i]), (0, i, 0, decs[n - i:])), 1)
    return out


def _apply_tensor(x, f):
    out = LinComb()
    for k, c in x:
        for k2, c2 in f(k):
            out.add_term(k2, c * c2)
    return out


def _d_or_zero(g, algebra):
    return LinComb() if g is None else differential(g, algebra)


def coderivation_rhs(split, g, algebra=FREE):
    """(d (x) id + theta (x) d) applied to split(g)."""
    def f(pair):
        a, b = pair
        out = LinComb()
        for a2, c in _d_or_zero(a, algebra):
            out.add_term((a2, b), c)
        sign = 1 if a is None or arity_of(a) % 2 == 0 else -1
        for b2, c in _d_or_zero(b, algebra):
            out.add_term((a, b2), sign * c)
        return out
    return _apply_tensor(split(g), f)


def coderivation_lhs(split, g, algebra=FREE):
    return _apply_tensor(differential(g, algebra), split)


SPLITS = {"delta": coproduct, "delta_succ": coproduct_succ, "delta_prec": coproduct_prec}


def check_coderivation(max_weight=4, algebra=FREE):
    """Check the three laws on every generator of weight <= max_weight."""
    failures = []
    checked = 0
    for w in range(1, max_weight + 1):
        for k in range(1, w + 1):
            for g in generators(k, w):
                for name, split in SPLITS.items():
                    checked += 1
                    lhs = coderivation_lhs(split, g, algebra)
                    rhs = coderivation_rhs(split, g, algebra)
                    if lhs != rhs:
                        failures.append((name, g))
    return {"checked": checked, "failures": failures}
