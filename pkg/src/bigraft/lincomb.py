"""Sparse integer linear combinations over hashable basis keys."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


class BoundError(ValueError):
    """Raised when a request exceeds a configured size bound."""


class LinComb:
    """
    Finite mapping basis -> int with no zero coefficients.

    Keys are arbitrary hashable values: forests for elements of BT,
    pairs of forests for tensors, monomials for the rewriting engine.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = d.get(k, 0) + c
                if c:
                    d[k] = c
                else:
                    d.pop(k, None)
        self.terms = d

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def zero(cls):
        return cls()

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __contains__(self, key):
        return key in self.terms

    def coeff(self, key):
        return self.terms.get(key, 0)

    def keys(self):
        return self.terms.keys()

    def items(self):
        return self.terms.items()

    def is_zero(self):
        return not self.terms

    def copy(self):
        out = type(self)()
        out.terms = dict(self.terms)
        return out

    def add_term(self, key, c):
        # in-place accumulate; only used while building a fresh result
        if not c:
            return
        c = self.terms.get(key, 0) + c
        if c:
            self.terms[key] = c
        else:
            del self.terms[key]

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self.copy()
        out = self.copy()
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = type(self)()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        out = self.copy()
        for k, c in other.terms.items():
            out.add_term(k, -c)
        return out

    def __rmul__(self, r):
        if not isinstance(r, int):
            return NotImplemented
        if r == 0:
            return type(self)()
        out = type(self)()
        out.terms = {k: r * c for k, c in self.terms.items()}
        return out

    def __mul__(self, r):
        if isinstance(r, int):
            return self.__rmul__(r)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map(self, f):
        """Linear extension of f: key -> LinComb."""
        out = LinComb()
        for k, c in self.terms.items():
            for k2, c2 in f(k).terms.items():
                out.add_term(k2, c * c2)
        return out

    def bilinear(self, other, f):
        """Bilinear extension of f: (key, key) -> LinComb."""
        out = LinComb()
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for k, c in f(k1, k2).terms.items():
                    out.add_term(k, c1 * c2 * c)
        return out

    def __repr__(self):
        return "LinComb(%r)" % (self.terms,)

