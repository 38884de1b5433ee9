"""
Rewriting in the free nonsymmetric operad on three binary generators
>, m, < (written ≻, m, ≺ in output).

A monomial is either the leaf X or a triple (label, left, right).  A
weight-2 pattern is ("L", a, b) for a∘(b, I) or ("R", a, b) for a∘(I, b).
A rewriting system maps each leading pattern to a LinComb of patterns
(possibly zero).  Four systems are built in:

  bgdual         the quadratic dual with r3 oriented ≺∘(I,m) -> ≺∘(≺,I)
  bgdual-printed the quadratic dual with all twelve leading terms as printed
  bg             the bigraft relations, leading terms complementary to bgdual
  bg-printed     the bigraft relations with the printed PBW monomials allowed
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .forests import LEAF, enumerate_forests, render
from .lincomb import BoundError, DomainError, LinComb
from .operad import compose_basis, dual_project

SUCC, MUL, PREC = ">", "m", "<"
LABELS = (SUCC, MUL, PREC)
X = "x"

PRETTY = {SUCC: "≻", MUL: "m", PREC: "≺"}
ASCII = {"≻": SUCC, ">": SUCC, "m": MUL, "≺": PREC, "<": PREC}

NF_BOUND = 7

# the six bigraft relations (first-slot term, second-slot term)
BG_RELATIONS = (
    (("L", SUCC, MUL), ("R", SUCC, SUCC)),
    (("L", MUL, SUCC), ("R", SUCC, MUL)),
    (("L", PREC, PREC), ("R", PREC, MUL)),
    (("L", PREC, MUL), ("R", MUL, PREC)),
    (("L", PREC, SUCC), ("R", SUCC, PREC)),
    (("L", MUL, MUL), ("R", MUL, MUL)),
)
# the six monomial relations of the dual
DUAL_MONOMIALS = (
    ("L", SUCC, SUCC), ("L", SUCC, PREC), ("L", MUL, PREC),
    ("R", PREC, PREC), ("R", PREC, SUCC), ("R", MUL, SUCC),
)

# the eleven left-left combs a∘(b∘(c,I),I) listed as critical monomials
LISTED_CRITICAL = tuple(
    (a, (b, (c, X, X), X), X) for a, b, c in (
        (PREC, PREC, PREC), (PREC, PREC, MUL), (PREC, PREC, SUCC),
        (PREC, MUL, MUL), (PREC, MUL, SUCC), (PREC, SUCC, MUL),
        (MUL, MUL, MUL), (MUL, SUCC, MUL), (SUCC, MUL, MUL),
        (MUL, MUL, SUCC), (SUCC, MUL, SUCC),
    ))


# -- monomials ---------------------------------------------------------------

def arity(m) -> int:
    if m == X:
        return 1
    return arity(m[1]) + arity(m[2])


def weight(m) -> int:
    return arity(m) - 1


def pattern_term(p, a=X, b=X, c=X):
    """Instantiate pattern p on three subterms."""
    side, top, inner = p
    if side == "L":
        return (top, (inner, a, b), c)
    return (top, a, (inner, b, c))


def fmt(m, pretty=True) -> str:
    if m == X:
        return "I"
    lab = PRETTY[m[0]] if pretty else m[0]
    if m[1] == X and m[2] == X:
        return lab
    sep = "∘" if pretty else ""
    return "%s%s(%s,%s)" % (lab, sep, fmt(m[1], pretty), fmt(m[2], pretty))


def fmt_pattern(p, pretty=True) -> str:
    return fmt(pattern_term(p), pretty)


def fmt_comb(x: LinComb, pretty=True) -> str:
    if not x:
        return "0"
    parts = []
    for m, c in sorted(x.items(), key=lambda kv: fmt(kv[0], False)):
        s = fmt(m, pretty)
        if c == 1:
            parts.append(("+", s))
        elif c == -1:
            parts.append(("-", s))
        else:
            parts.append(("-" if c < 0 else "+", "%d %s" % (abs(c), s)))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, s in parts[1:]:
        out += " %s %s" % (sign, s)
    return out


@lru_cache(maxsize=None)
def enumerate_monomials(n: int):
    if n < 1:
        return ()
    if n == 1:
        return (X,)
    out = []
    for i in range(1, n):
        for a in enumerate_monomials(i):
            for b in enumerate_monomials(n - i):
                for lab in LABELS:
                    out.append((lab, a, b))
    return tuple(out)


class MonoParseError(ValueError):
    pass


def parse_monomials(text: str) -> LinComb:
    """
    Parse an integer combination of monomials, e.g.
      "m∘(m,I) - 2 ≻∘(I,≻)"  or  ">(m(I,I),I)".
    A bare label stands for the generator itself (both inputs I).
    """
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "(),+-*∘":
            toks.append((ch, ch, i))
            i += 1
        elif ch in ASCII:
            toks.append(("lab", ASCII[ch], i))
            i += 1
        elif ch in "Ix":
            toks.append(("leaf", X, i))
            i += 1
        else:
            raise MonoParseError("unexpected %r at position %d" % (ch, i))
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None, len(text))

    def take(kind):
        t = peek()
        if t[0] != kind:
            raise MonoParseError("expected %s at position %d" % (kind, t[2]))
        pos[0] += 1
        return t

    def mono():
        t = peek()
        if t[0] == "leaf":
            pos[0] += 1
            return X
        lab = take("lab")[1]
        if peek()[0] == "∘":
            pos[0] += 1
        if peek()[0] != "(":
            return (lab, X, X)
        take("(")
        a = mono()
        take(",")
        b = mono()
        take(")")
        return (lab, a, b)

    def term(sign):
        c = 1
        if peek()[0] == "int":
            c = take("int")[1]
            if peek()[0] == "*":
                pos[0] += 1
        return LinComb.basis(mono(), sign * c)

    out = LinComb()
    sign = 1
    if peek()[0] == "-":
        pos[0] += 1
        sign = -1
    out += term(sign)
    while pos[0] < len(toks):
        op = peek()[0]
        if op not in "+-":
            raise MonoParseError("expected + or - at position %d" % peek()[2])
        pos[0] += 1
        out += term(1 if op == "+" else -1)
    arities = {arity(m) for m, _ in out}
    if len(arities) > 1:
        raise MonoParseError("terms of different arities")
    return out


# -- rewriting systems -------------------------------------------------------

class RewriteSystem:
    def __init__(self, name, rules, description=""):
        self.name = name
        self.rules = dict(rules)
        self.description = description
        self._left = {(p[1], p[2]): p for p in self.rules if p[0] == "L"}
        self._right = {(p[1], p[2]): p for p in self.rules if p[0] == "R"}
        self._nf = {}

    def __repr__(self):
        return "RewriteSystem(%r, %d rules)" % (self.name, len(self.rules))

    def matches_at(self, m):
        """Patterns whose left side matches at the root of m."""
        out = []
        if m == X:
            return out
        lab, a, b = m
        if a != X and (lab, a[0]) in self._left:
            out.append(self._left[(lab, a[0])])
        if b != X and (lab, b[0]) in self._right:
            out.append(self._right[(lab, b[0])])
        return out

    def redexes(self, m, path=()):
        """All (path, pattern) pairs; paths are strings of 1/2 child moves."""
        if m == X:
            return []
        out = [(path, p) for p in self.matches_at(m)]
        out += self.redexes(m[1], path + (1,))
        out += self.redexes(m[2], path + (2,))
        return out

    def is_normal(self, m) -> bool:
        if m == X:
            return True
        return not self.matches_at(m) and self.is_normal(m[1]) and self.is_normal(m[2])

    def apply_at_root(self, m, p) -> LinComb:
        lab, a, b = m
        if p[0] == "L":
            args = (a[1], a[2], b)
        else:
            args = (a, b[1], b[2])
        return LinComb({pattern_term(q, *args): c for q, c in self.rules[p]})

    def apply(self, m, path, p) -> LinComb:
        if not path:
            return self.apply_at_root(m, p)
        lab, a, b = m
        if path[0] == 1:
            return LinComb({(lab, s, b): c for s, c in self.apply(a, path[1:], p)})
        return LinComb({(lab, a, s): c for s, c in self.apply(b, path[1:], p)})

    def step(self, m):
        """Rewrite the first redex in preorder (None if m is normal)."""
        rs = self.redexes(m)
        if not rs:
            return None
        path, p = rs[0]
        return self.apply(m, path, p)

    def nf_monomial(self, m) -> LinComb:
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        nxt = self.step(m)
        if nxt is None:
            out = LinComb.basis(m)
        else:
            out = nxt.map(self.nf_monomial)
        self._nf[m] = out
        return out

    def normal_form(self, x) -> LinComb:
        if not isinstance(x, LinComb):
            x = LinComb.basis(x)
        return x.map(self.nf_monomial)

    def chain(self, x):
        """Sequence of intermediate combinations down to normal form."""
        if not isinstance(x, LinComb):
            x = LinComb.basis(x)
        seq = [x]
        while True:
            cur = seq[-1]
            for m, c in sorted(cur.items(), key=lambda kv: fmt(kv[0], False)):
                nxt = self.step(m)
                if nxt is not None:
                    seq.append(cur - LinComb.basis(m, c) + c * nxt)
                    break
            else:
                return seq

    def count_normal_forms(self, n: int) -> int:
        return count_normal_forms(n, self)


def _oriented(choice):
    """Rules from BG_RELATIONS; choice[i] = 0 keeps the first-slot term leading."""
    rules = {}
    for (left, right), k in zip(BG_RELATIONS, choice):
        lead, other = (left, right) if k == 0 else (right, left)
        rules[lead] = LinComb.basis(other)
    return rules


def _dual_system(name, choice, description):
    rules = _oriented(choice)
    for p in DUAL_MONOMIALS:
        rules[p] = LinComb()
    return RewriteSystem(name, rules, description)


SYSTEMS = {
    "bgdual": _dual_system(
        "bgdual", (0, 0, 1, 0, 0, 0),
        "dual relations, r3 led by ≺∘(I,m); terminates by a path order"),
    "bgdual-printed": _dual_system(
        "bgdual-printed", (0, 0, 0, 0, 0, 0),
        "dual relations with every binomial led by its first-slot term"),
    "bg": RewriteSystem("bg", _oriented((1, 1, 0, 1, 1, 1)),
                        "bigraft relations, leading terms complementary to bgdual"),
    "bg-printed": RewriteSystem("bg-printed", _oriented((1, 1, 1, 1, 1, 1)),
                                "bigraft relations with every binomial led by "
                                "its second-slot term"),
}
SYSTEM_ALIASES = {"bg!": "bgdual", "dual": "bgdual"}


def get_system(name) -> RewriteSystem:
    if isinstance(name, RewriteSystem):
        return name
    name = SYSTEM_ALIASES.get(name, name)
    try:
        return SYSTEMS[name]
    except KeyError:
        raise DomainError("unknown rewriting system %r (choose from %s)"
                          % (name, ", ".join(sorted(SYSTEMS)))) from None


def normal_form(x, system="bgdual") -> LinComb:
    return get_system(system).normal_form(x)


def allowed_pairs(system):
    """Weight-2 patterns that are not leading terms."""
    sysm = get_system(system)
    return [p for p in all_patterns() if p not in sysm.rules]


def all_patterns():
    return [(s, a, b) for s in "LR" for a in LABELS for b in LABELS]


def count_normal_forms(n: int, system="bgdual", bound=NF_BOUND) -> int:
    """Number of arity-n monomials containing no leading pattern."""
    if n > bound:
        raise BoundError("arity %d exceeds bound %d" % (n, bound))
    if n < 1:
        raise DomainError("arity must be positive")
    if n == 1:
        return 1
    sysm = get_system(system)
    left = set(sysm._left)
    right = set(sysm._right)

    @lru_cache(maxsize=None)
    def c(k, root):
        total = 0
        for i in range(1, k):
            lo = [None] if i == 1 else [a for a in LABELS if (root, a) not in left]
            ro = [None] if k - i == 1 else [b for b in LABELS if (root, b) not in right]
            for a in lo:
                for b in ro:
                    total += (1 if a is None else c(i, a)) * (1 if b is None else c(k - i, b))
        return total

    return sum(c(n, r) for r in LABELS)


def normal_monomials(n: int, system="bgdual"):
    sysm = get_system(system)
    return [m for m in enumerate_monomials(n) if sysm.is_normal(m)]


# -- critical pairs ----------------------------------------------------------

def critical_pairs(system="bgdual"):
    """
    Every weight-3 monomial carrying two overlapping redexes, each reduced
    along both first steps to normal form.  In weight 3 any two distinct
    redexes share a vertex, so this is the full list of overlaps.
    """
    sysm = get_system(system)
    out = []
    for m in enumerate_monomials(4):
        rs = sysm.redexes(m)
        if len(rs) < 2:
            continue
        for (p1, r1), (p2, r2) in itertools.combinations(rs, 2):
            a = sysm.apply(m, p1, r1)
            b = sysm.apply(m, p2, r2)
            na, nb = sysm.normal_form(a), sysm.normal_form(b)
            out.append({
                "monomial": m,
                "rules": (r1, r2),
                "paths": (p1, p2),
                "steps": (a, b),
                "normal_forms": (na, nb),
                "joinable": na == nb,
                "nontrivial": bool(sysm.rules[r1]) and bool(sysm.rules[r2]),
                "chains": (sysm.chain(a), sysm.chain(b)),
            })
    return out


def confluence_report(system="bgdual"):
    sysm = get_system(system)
    pairs = critical_pairs(sysm)
    found = {cp["monomial"] for cp in pairs}
    nontrivial = sorted({cp["monomial"] for cp in pairs if cp["nontrivial"]},
                        key=lambda m: fmt(m, False))
    return {
        "system": sysm.name,
        "description": sysm.description,
        "pairs": pairs,
        "critical_monomials": sorted(found, key=lambda m: fmt(m, False)),
        "nontrivial": nontrivial,
        "all_joinable": all(cp["joinable"] for cp in pairs),
        "listed_present": [m in found for m in LISTED_CRITICAL],
        "termination": certify_termination(sysm),
        "acyclic_up_to": acyclic_bound(sysm),
    }


# -- termination by a lexicographic path order --------------------------------

def _vars(t, out=None):
    out = set() if out is None else out
    if isinstance(t, str):
        out.add(t)
    else:
        _vars(t[1], out)
        _vars(t[2], out)
    return out


def lpo_greater(s, t, prec, status) -> bool:
    """
    s > t in the lexicographic path order with precedence rank prec[label]
    and argument status status[label] in {"lr", "rl"}.  Variables are
    plain strings.
    """
    if isinstance(s, str):
        return False
    if isinstance(t, str):
        return t in _vars(s)
    f, s1, s2 = s
    g, t1, t2 = t
    for si in (s1, s2):
        if si == t or lpo_greater(si, t, prec, status):
            return True
    if prec[f] > prec[g]:
        return lpo_greater(s, t1, prec, status) and lpo_greater(s, t2, prec, status)
    if f == g:
        if not (lpo_greater(s, t1, prec, status) and lpo_greater(s, t2, prec, status)):
            return False
        a, b = ((s1, s2), (t1, t2)) if status[f] == "lr" else ((s2, s1), (t2, t1))
        for x, y in zip(a, b):
            if x == y:
                continue
            return lpo_greater(x, y, prec, status)
    return False


def _rule_terms(p, q=None):
    vs = ("x", "y", "z")
    lhs = pattern_term(p, *vs)
    return lhs if q is None else (lhs, pattern_term(q, *vs))


def certify_termination(system, prefer=(SUCC, MUL, PREC)):
    """
    Look for a path order (precedence and per-label argument status)
    that decreases along every rule.  Returns the order found or None.
    """
    sysm = get_system(system)
    precs = [prefer] + [p for p in itertools.permutations(LABELS) if p != prefer]
    for order in precs:
        prec = {lab: i for i, lab in enumerate(order)}
        for st in itertools.product(("lr", "rl"), repeat=3):
            status = dict(zip(LABELS, st))
            ok = True
            for p, rhs in sysm.rules.items():
                lhs = _rule_terms(p)
                for q, _ in rhs:
                    if not lpo_greater(lhs, pattern_term(q, "x", "y", "z"), prec, status):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return {"precedence": [PRETTY[x] for x in order],
                        "status": {PRETTY[k]: v for k, v in status.items()}}
    return None


def rewrite_graph_acyclic(n, system) -> bool:
    """
    Every one-step rewrite (at any redex) between arity-n monomials, checked
    for cycles.  Rewriting preserves arity, so acyclicity for every arity is
    equivalent to termination.
    """
    sysm = get_system(system)
    succ = {}
    for m in enumerate_monomials(n):
        nxt = set()
        for path, p in sysm.redexes(m):
            nxt.update(k for k, _ in sysm.apply(m, path, p))
        succ[m] = nxt
    state = {}
    for start in succ:
        if start in state:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            for k in it:
                st = state.get(k)
                if st == 1:
                    return False
                if st is None:
                    state[k] = 1
                    stack.append((k, iter(succ[k])))
                    break
            else:
                state[node] = 2
                stack.pop()
    return True


def acyclic_bound(system, upto=5):
    """Largest arity up to which every arity has an acyclic rewrite graph."""
    best = 1
    for n in range(2, upto + 1):
        if not rewrite_graph_acyclic(n, system):
            break
        best = n
    return best


# -- weight-3 duality pairing -------------------------------------------------

def relation_comb(rel) -> LinComb:
    """A relation given as a tuple of patterns (binomials are a - b)."""
    if len(rel) == 2 and isinstance(rel[0], tuple):
        return LinComb({rel[0]: 1, rel[1]: -1})
    return LinComb.basis(rel)


def bg_relations():
    return [relation_comb(r) for r in BG_RELATIONS]


def bgdual_relations():
    return bg_relations() + [LinComb.basis(p) for p in DUAL_MONOMIALS]


def as_pattern(m):
    """A weight-2 monomial or pattern as ("L"|"R", outer, inner)."""
    if m[0] in ("L", "R"):
        return m
    lab, a, b = m
    if a != X and b == X and a[1] == a[2] == X:
        return ("L", lab, a[0])
    if a == X and b != X and b[1] == b[2] == X:
        return ("R", lab, b[0])
    raise DomainError("not a weight-2 composite: %s" % fmt(m))


def weight3_pairing(x, y) -> int:
    """Diagonal pairing: +1 on first-slot composites, -1 on second-slot ones."""
    if not isinstance(x, LinComb):
        x = LinComb.basis(x)
    if not isinstance(y, LinComb):
        y = LinComb.basis(y)
    x = LinComb([(as_pattern(k), c) for k, c in x])
    y = LinComb([(as_pattern(k), c) for k, c in y])
    total = 0
    for p, c in x:
        d = y.coeff(p)
        if d:
            total += c * d * (1 if p[0] == "L" else -1)
    return total


def annihilator_check():
    from .linalg import rank
    pats = all_patterns()
    dual = bgdual_relations()
    rels = bg_relations()
    failures = []
    for i, r in enumerate(dual):
        for j, s in enumerate(rels):
            v = weight3_pairing(r, s)
            if v:
                failures.append((i + 1, j + 1, v))
    as_rows = lambda rs: [[r.coeff(p) for p in pats] for r in rs]
    dim_r, dim_dual = rank(as_rows(rels)), rank(as_rows(dual))
    # dimension of the annihilator of the bigraft relations
    sign = [1 if p[0] == "L" else -1 for p in pats]
    twisted = [[v * s for v, s in zip(row, sign)] for row in as_rows(rels)]
    dim_perp = len(pats) - rank(twisted)
    return {"failures": failures, "dim_space": len(pats), "dim_bg": dim_r,
            "dim_bgdual": dim_dual, "dim_annihilator": dim_perp,
            "ok": not failures and dim_r + dim_dual == len(pats) == 18
                  and dim_perp == dim_dual}


# -- evaluation in the forest operads ------------------------------------------

GENERATOR_FORESTS = {
    MUL: (LEAF, LEAF),
    SUCC: ((LEAF._replace(left=(LEAF,))),),
    PREC: ((LEAF._replace(right=(LEAF,))),),
}


@lru_cache(maxsize=None)
def evaluate(m):
    """Image of a monomial in the forest operad (a single forest)."""
    if m == X:
        return (LEAF,)
    lab, a, b = m
    return compose_basis(GENERATOR_FORESTS[lab], (evaluate(a), evaluate(b)))


def check_pbw_bijection(n, system="bgdual"):
    """
    Compare the images of the normal monomials with the forest basis:
    for dual systems against the dual basis (after projection), otherwise
    against all forests.  Returns (ok, number of normal monomials, basis size).
    """
    sysm = get_system(system)
    dual = sysm.name.startswith("bgdual")
    basis = set(enumerate_forests(n, dual_only=dual))
    images = []
    for m in normal_monomials(n, sysm):
        f = evaluate(m)
        if dual and not dual_project(f):
            return False, None, len(basis)
        images.append(f)
    ok = len(set(images)) == len(images) and set(images) == basis
    return ok, len(images), len(basis)


def render_forest_of(m):
    return render(evaluate(m))
