"""Counting sequences and exact power-series identities."""

from __future__ import annotations

from .lincomb import BoundError, DomainError

SERIES_BOUND = 30
DUAL_BOUND = 1000


class IntSeries:
    """Exact power series truncated after x^N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        c = list(coeffs)[:order + 1]
        self.coeffs = c + [0] * (order + 1 - len(c))
        self.order = order

    @classmethod
    def x(cls, order):
        return cls([0, 1], order)

    @classmethod
    def const(cls, c, order):
        return cls([c], order)

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def _coerce(self, other):
        if isinstance(other, IntSeries):
            return other
        return IntSeries.const(other, self.order)

    def _order(self, other):
        return min(self.order, other.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = self._order(other)
        return IntSeries([self[i] + other[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return IntSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n = self._order(other)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other[j]
        return IntSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntSeries.const(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        n = self._order(other)
        return all(self[i] == other[i] for i in range(n + 1))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def reciprocal(self):
        """1/self; needs an invertible constant term (+1 or -1)."""
        if self[0] not in (1, -1):
            raise DomainError("constant term must be a unit")
        inv = [0] * (self.order + 1)
        inv[0] = self[0]
        for n in range(1, self.order + 1):
            s = sum(self[k] * inv[n - k] for k in range(1, n + 1))
            inv[n] = -s * self[0]
        return IntSeries(inv, self.order)

    def compose(self, inner):
        """self(inner(x)); inner must have no constant term."""
        if inner[0] != 0:
            raise DomainError("inner series must have zero constant term")
        n = self._order(inner)
        out = IntSeries.const(0, n)
        power = IntSeries.const(1, n)
        for k in range(n + 1):
            if self[k]:
                out = out + self[k] * power
            power = power * inner
        return out

    def subs_neg(self):
        """self(-x)."""
        return IntSeries([c * (-1) ** i for i, c in enumerate(self.coeffs)], self.order)

    def __repr__(self):
        return "IntSeries(%r)" % (self.coeffs,)


def _check(n, bound):
    if n < 0:
        raise DomainError("order must be nonnegative")
    if n > bound:
        raise BoundError("order %d exceeds bound %d" % (n, bound))


def tree_counts(n: int):
    """t_1..t_n from t_n = [n=1] + 2 sum t_i t_j - sum t_i t_j t_k."""
    _check(n, SERIES_BOUND)
    t = [0] * (n + 1)
    for m in range(1, n + 1):
        two = sum(t[i] * t[m - i] for i in range(1, m))
        three = sum(t[i] * t[j] * t[m - i - j]
                    for i in range(1, m) for j in range(1, m - i))
        t[m] = (1 if m == 1 else 0) + 2 * two - three
    return t[1:]


def tree_series(n: int) -> IntSeries:
    return IntSeries([0] + tree_counts(n), n)


def forest_series(n: int) -> IntSeries:
    """F = 1/(1 - T), constant term included."""
    return (1 - tree_series(n)).reciprocal()


def forest_counts(n: int):
    return forest_series(n).coeffs[1:]


def dual_counts(n: int):
    """(t^!_k, f^!_k) for k = 1..n."""
    _check(n, DUAL_BOUND)
    trees = list(range(1, n + 1))
    forests = [k * (k + 1) // 2 for k in range(1, n + 1)]
    return trees, forests


def dual_forest_series(n: int) -> IntSeries:
    """x / (1 - x)^3 without its constant term."""
    _check(n, SERIES_BOUND)
    return IntSeries([0] + dual_counts(n)[1], n)


def inverse_identity_check(n: int):
    """
    With F_BG = F - 1 and F_BG! the dual forest series:
    F_BG(-F_BG!(-x)) = x, and T^3 - 2T^2 + T = x, both mod x^(n+1).
    """
    _check(n, SERIES_BOUND)
    x = IntSeries.x(n)
    fbg = forest_series(n) - 1
    fdual = dual_forest_series(n)
    inner = -(fdual.subs_neg())
    composed = fbg.compose(inner)
    t = tree_series(n)
    cubic = t ** 3 - 2 * t ** 2 + t
    return {"order": n,
            "inverse": composed == x,
            "cubic": cubic == x,
            "composed": composed.coeffs,
            "cubic_coeffs": cubic.coeffs}


def enumeration_crosscheck(upto=8, dual_upto=10):
    """Compare the recursions with brute-force enumeration."""
    from .forests import enumerate_forests, enumerate_trees
    rows = []
    t, f = tree_counts(upto), forest_counts(upto)
    for k in range(1, upto + 1):
        rows.append(("bt", k, t[k - 1], len(enumerate_trees(k)),
                     f[k - 1], len(enumerate_forests(k))))
    dt, df = dual_counts(dual_upto)
    for k in range(1, dual_upto + 1):
        fs = enumerate_forests(k, dual_only=True)
        rows.append(("dual", k, dt[k - 1], sum(1 for g in fs if len(g) == 1),
                     df[k - 1], len(fs)))
    ok = all(r[2] == r[3] and r[4] == r[5] for r in rows)
    return ok, rows
