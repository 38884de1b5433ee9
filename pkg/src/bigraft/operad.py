"""
The nonsymmetric bigraft operad on the forest basis: arity-n operations
are degree-n forests, and composition plugs one element into each vertex
(vertices taken in vertex_order).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .forests import LEAF, degree, enumerate_forests, is_dual_basis
from .grafts import concat, graft_left, graft_right, prec_basis, succ_basis
from .hopf import elt
from .lincomb import DomainError, LinComb

UNIT_OP = (LEAF,)


class ArityError(DomainError):
    pass


def arity(x) -> int:
    x = elt(x)
    degs = {degree(f) for f, _ in x}
    if len(degs) != 1 or 0 in degs:
        raise DomainError("operad elements must be nonzero and homogeneous of positive degree")
    return degs.pop()


@lru_cache(maxsize=None)
def compose_basis(f, args):
    """Composition of a basis forest with a tuple of basis forests."""
    if len(args) != degree(f):
        raise ArityError("forest of arity %d given %d arguments"
                         % (degree(f), len(args)))
    if len(f) > 1:
        k = degree(f[:1])
        return compose_basis(f[:1], args[:k]) + compose_basis(f[1:], args[k:])
    t = f[0]
    k = degree(t.left)
    out = args[k]
    if t.left:
        out = succ_basis(compose_basis(t.left, args[:k]), out)
    if t.right:
        out = prec_basis(out, compose_basis(t.right, args[k + 1:]))
    return out


def compose(f, args) -> LinComb:
    """Multilinear composition f o (args[0], ..., args[n-1])."""
    f = elt(f)
    args = [elt(a) for a in args]
    n = arity(f)
    if len(args) != n:
        raise ArityError("arity %d element given %d arguments" % (n, len(args)))
    for a in args:
        arity(a)
    out = LinComb()
    for g, c in f:
        for choice in itertools.product(*(a.items() for a in args)):
            coeff = c
            for _, ci in choice:
                coeff *= ci
            out.add_term(compose_basis(g, tuple(x for x, _ in choice)), coeff)
    return out


def dual_project(x) -> LinComb:
    """Kill every forest outside the dual basis."""
    return LinComb({f: c for f, c in elt(x) if is_dual_basis(f)})


def dual_compose(f, args) -> LinComb:
    f = elt(f)
    args = [elt(a) for a in args]
    for y in [f] + args:
        for g, _ in y:
            if not is_dual_basis(g):
                raise DomainError("dual composition needs dual-basis arguments")
    return dual_project(compose(f, args))


def check_operad_axioms(max_total_degree=4):
    """
    Exhaustively test the unit laws and sequential associativity
    F o (G1..Gn) o (H...) = F o (G1 o H.., ..., Gn o H..) for all basis
    choices whose final arity is at most the bound.  Returns a report
    dict; 'violations' is empty when everything holds.
    """
    violations = []
    checked = 0
    bases = {n: enumerate_forests(n) for n in range(1, max_total_degree + 1)}

    for n in range(1, max_total_degree + 1):
        for f in bases[n]:
            checked += 2
            if compose_basis(UNIT_OP, (f,)) != f:
                violations.append(("left unit", f))
            if compose_basis(f, (UNIT_OP,) * n) != f:
                violations.append(("right unit", f))

    def compositions(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for k in range(1, total - parts + 2):
            for rest in compositions(total - k, parts - 1):
                yield (k,) + rest

    # n = arity of F, m = sum of the G arities, total = final arity
    for n in range(1, max_total_degree + 1):
        for m in range(n, max_total_degree + 1):
            for g_ar in compositions(m, n):
                for total in range(m, max_total_degree + 1):
                    for h_ar in compositions(total, m):
                        for f in bases[n]:
                            for gs in itertools.product(*(bases[a] for a in g_ar)):
                                mid = compose_basis(f, gs)
                                for hs in itertools.product(*(bases[a] for a in h_ar)):
                                    checked += 1
                                    lhs = compose_basis(mid, hs)
                                    parts, i = [], 0
                                    for g, a in zip(gs, g_ar):
                                        parts.append(compose_basis(g, hs[i:i + a]))
                                        i += a
                                    rhs = compose_basis(f, tuple(parts))
                                    if lhs != rhs:
                                        violations.append(("associativity", f, gs, hs))
    return {"bound": max_total_degree, "checked": checked,
            "violations": violations}


def operad_dims(n):
    """(nonsymmetric dim, symmetric dim) of BG and BG! in arity n."""
    from math import factorial
    bg = len(enumerate_forests(n))
    bgd = len(enumerate_forests(n, dual_only=True))
    return {"bg": (bg, factorial(n) * bg), "bgdual": (bgd, factorial(n) * bgd)}


def check_operations(f, g):
    """The three binary generators act as *, > and <."""
    return (compose(((LEAF, LEAF)), [f, g]) == concat(f, g),
            compose((succ_basis((LEAF,), (LEAF,))), [f, g]) == graft_left(f, g),
            compose((prec_basis((LEAF,), (LEAF,))), [f, g]) == graft_right(f, g))
