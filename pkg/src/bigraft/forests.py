"""
Planar rooted forests whose edges carry a decoration l or r.

A tree is stored as the pair (left, right) of forests hanging from its
root: the subtrees attached through l-edges, then those attached through
r-edges.  Because every l-edge of a vertex sits to the left of every
r-edge, this pair is a faithful encoding and b_minus is free.  A forest
is a plain tuple of trees; the empty tuple is the unit 1.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import NamedTuple

from .lincomb import BoundError, DomainError

L, R = "l", "r"
DECORATIONS = (L, R)

ENUM_BOUND = 10


class Tree(NamedTuple):
    left: tuple
    right: tuple


Forest = tuple
UNIT: Forest = ()
LEAF = Tree((), ())


class ParseError(ValueError):
    def __init__(self, msg, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            msg = "%s at position %d" % (msg, pos)
        super().__init__(msg)


class ValidityError(ParseError):
    pass


def b_plus(f: Forest, g: Forest) -> Tree:
    return Tree(tuple(f), tuple(g))


def b_minus(t: Tree):
    if not isinstance(t, Tree):
        raise DomainError("b_minus expects a single tree")
    return t.left, t.right


def as_forest(x) -> Forest:
    if isinstance(x, Tree):
        return (x,)
    if isinstance(x, str):
        return parse(x)
    return tuple(x)


@lru_cache(maxsize=None)
def tree_degree(t: Tree) -> int:
    return 1 + sum(map(tree_degree, t.left)) + sum(map(tree_degree, t.right))


def degree(f) -> int:
    if isinstance(f, Tree):
        return tree_degree(f)
    return sum(map(tree_degree, f))


def length(f: Forest) -> int:
    return len(f)


def height(t: Tree) -> int:
    kids = t.left + t.right
    if not kids:
        return 0
    return 1 + max(height(c) for c in kids)


@lru_cache(maxsize=None)
def _dagger_tree(t: Tree) -> Tree:
    return Tree(dagger(t.right), dagger(t.left))


def dagger(f):
    """The involution reversing planar order and swapping l and r."""
    if isinstance(f, Tree):
        return _dagger_tree(f)
    return tuple(_dagger_tree(t) for t in reversed(f))


# -- text format ---------------------------------------------------------

@lru_cache(maxsize=None)
def render_tree(t: Tree) -> str:
    if not t.left and not t.right:
        return "o"
    kids = ["l:" + render_tree(c) for c in t.left]
    kids += ["r:" + render_tree(c) for c in t.right]
    return "o[" + ",".join(kids) + "]"


def render(f) -> str:
    if isinstance(f, Tree):
        return render_tree(f)
    if not f:
        return "1"
    return " ".join(render_tree(t) for t in f)


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError("expected %r, found %s" % (ch, found),
                             self.pos, self.text)
        self.pos += 1

    def tree(self, path):
        start = self.pos
        self.expect("o")
        self.skip()
        if self.peek() != "[":
            return LEAF
        self.pos += 1
        left, right = [], []
        idx = 0
        while True:
            self.skip()
            dpos = self.pos
            d = self.peek()
            if d not in DECORATIONS:
                raise ParseError("expected decoration 'l' or 'r'",
                                 self.pos, self.text)
            self.pos += 1
            self.skip()
            self.expect(":")
            self.skip()
            child = self.tree(path + (idx,))
            if d == L:
                if right:
                    raise ValidityError(
                        "l-edge after r-edge under vertex %s (starting at %d)"
                        % (_path_name(path), start), dpos, self.text)
                left.append(child)
            else:
                right.append(child)
            idx += 1
            self.skip()
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return Tree(tuple(left), tuple(right))


def _path_name(path):
    return "root" if len(path) == 1 else "/".join(map(str, path))


def parse(text: str) -> Forest:
    """Parse the textual form; raises ParseError or ValidityError."""
    rd = _Reader(text)
    rd.skip()
    if rd.peek() == "1":
        rd.pos += 1
        rd.skip()
        if rd.pos != len(text):
            raise ParseError("trailing input after unit", rd.pos, text)
        return UNIT
    trees = []
    while True:
        rd.skip()
        if rd.pos >= len(text):
            break
        trees.append(rd.tree((len(trees),)))
    if not trees:
        raise ParseError("empty forest text (use '1' for the unit)", 0, text)
    return tuple(trees)


def parse_tree(text: str) -> Tree:
    f = parse(text)
    if len(f) != 1:
        raise DomainError("expected a single tree, got %r" % text)
    return f[0]


def tree_to_json(t: Tree):
    return {"c": [[L, tree_to_json(c)] for c in t.left]
            + [[R, tree_to_json(c)] for c in t.right]}


def to_json(f):
    if isinstance(f, Tree):
        return tree_to_json(f)
    return [tree_to_json(t) for t in f]


def tree_from_json(obj) -> Tree:
    left, right = [], []
    for d, c in obj.get("c", []):
        if d == L:
            if right:
                raise ValidityError("l-edge after r-edge in JSON tree")
            left.append(tree_from_json(c))
        elif d == R:
            right.append(tree_from_json(c))
        else:
            raise ParseError("bad decoration %r" % (d,))
    return Tree(tuple(left), tuple(right))


def from_json(obj) -> Forest:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if isinstance(obj, dict):
        return (tree_from_json(obj),)
    return tuple(tree_from_json(t) for t in obj)


# -- vertices and cuts ---------------------------------------------------

def vertex_order(f):
    """
    List the vertices of f as paths (tree index, then child indices),
    in the recursive order: earlier trees first, and inside B(G x H) the
    vertices of G, then the root, then those of H.  Position i in this
    list is the identity of the vertex.
    """
    out = []

    def walk(t, path):
        for i, c in enumerate(t.left):
            walk(c, path + (i,))
        out.append(path)
        k = len(t.left)
        for j, c in enumerate(t.right):
            walk(c, path + (k + j,))

    for i, t in enumerate(as_forest(f)):
        walk(t, (i,))
    return out


def parent_map(f):
    """Map vertex position -> parent position (None for roots)."""
    order = vertex_order(f)
    index = {p: i for i, p in enumerate(order)}
    return [index.get(p[:-1]) if len(p) > 1 else None for p in order]


def _tree_cuts(t: Tree, offset: int):
    # yields (cut, lea, roo) where roo is () or a 1-tuple; the last
    # combination of the children loop is the empty cut
    n = tree_degree(t)
    root = offset + degree(t.left)
    yield frozenset([root]), (t,), ()
    opts = []
    pos = offset
    for c in t.left:
        opts.append(list(_tree_cuts(c, pos)))
        pos += tree_degree(c)
    pos += 1
    for c in t.right:
        opts.append(list(_tree_cuts(c, pos)))
        pos += tree_degree(c)
    assert pos == offset + n
    nl = len(t.left)
    for combo in itertools.product(*opts):
        cut = frozenset().union(*(x[0] for x in combo))
        lea = tuple(itertools.chain.from_iterable(x[1] for x in combo))
        left = tuple(itertools.chain.from_iterable(x[2] for x in combo[:nl]))
        right = tuple(itertools.chain.from_iterable(x[2] for x in combo[nl:]))
        yield cut, lea, (Tree(left, right),)


def admissible_cuts(f):
    """
    All admissible cuts of f with their (Lea, Roo) parts.

    Cuts are sets of vertex positions (see vertex_order).  The empty cut
    gives (1, f) and the cut made of all roots gives (f, 1).
    """
    f = as_forest(f)
    per_tree = []
    pos = 0
    for t in f:
        per_tree.append(list(_tree_cuts(t, pos)))
        pos += tree_degree(t)
    out = []
    for combo in itertools.product(*per_tree):
        cut = frozenset().union(*(x[0] for x in combo))
        lea = tuple(itertools.chain.from_iterable(x[1] for x in combo))
        roo = tuple(itertools.chain.from_iterable(x[2] for x in combo))
        out.append((cut, lea, roo))
    return out


def is_antichain(f, cut) -> bool:
    parent = parent_map(f)
    for v in cut:
        u = parent[v]
        while u is not None:
            if u in cut:
                return False
            u = parent[u]
    return True


# -- the dual basis ------------------------------------------------------

def is_corolla(t: Tree) -> bool:
    return all(c == LEAF for c in t.left + t.right)


def is_dual_basis(f) -> bool:
    """Corollas only, l-edges only in the first tree, r-edges only in the last."""
    f = as_forest(f)
    n = len(f)
    for i, t in enumerate(f):
        if not is_corolla(t):
            return False
        if t.left and i != 0:
            return False
        if t.right and i != n - 1:
            return False
    return True


def dual_shape(f):
    """(p, k, q) for a forest of the dual basis: l-leaves, trees, r-leaves."""
    f = as_forest(f)
    if not f or not is_dual_basis(f):
        raise DomainError("not a nonempty dual-basis forest: %s" % render(f))
    return len(f[0].left), len(f), len(f[-1].right)


def dual_forest(p: int, k: int, q: int) -> Forest:
    if k < 1 or p < 0 or q < 0:
        raise DomainError("bad dual shape %r" % ((p, k, q),))
    leaves_l = (LEAF,) * p
    leaves_r = (LEAF,) * q
    if k == 1:
        return (Tree(leaves_l, leaves_r),)
    return (Tree(leaves_l, ()),) + (LEAF,) * (k - 2) + (Tree((), leaves_r),)


# -- enumeration ---------------------------------------------------------

@lru_cache(maxsize=None)
def _forests_unsorted(n: int):
    if n == 0:
        return (UNIT,)
    out = []
    for k in range(1, n + 1):
        for t in _trees_unsorted(k):
            for rest in _forests_unsorted(n - k):
                out.append((t,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _trees_unsorted(n: int):
    out = []
    for i in range(n):
        for f in _forests_unsorted(i):
            for g in _forests_unsorted(n - 1 - i):
                out.append(Tree(f, g))
    return tuple(out)


def _check_bound(n, bound):
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if bound is not None and n > bound:
        raise BoundError("degree %d exceeds bound %d" % (n, bound))


@lru_cache(maxsize=None)
def _sorted_forests(n):
    return tuple(sorted(_forests_unsorted(n), key=render))


@lru_cache(maxsize=None)
def _sorted_trees(n):
    return tuple(sorted(_trees_unsorted(n), key=render_tree))


def enumerate_trees(n: int, bound=ENUM_BOUND):
    _check_bound(n, bound)
    if n == 0:
        return ()
    return _sorted_trees(n)


def enumerate_forests(n: int, dual_only: bool = False, bound=ENUM_BOUND):
    """
    Every forest of degree n exactly once, ordered by rendered text.
    With dual_only, only the dual-basis forests (built directly).
    """
    _check_bound(n, bound)
    if dual_only:
        if n == 0:
            return (UNIT,)
        out = []
        for k in range(1, n + 1):
            for p in range(n - k + 1):
                out.append(dual_forest(p, k, n - k - p))
        return tuple(sorted(out, key=render))
    return _sorted_forests(n)
