"""Exact integer matrices and rank by fraction-free elimination."""

from __future__ import annotations

from math import gcd


class IntMatrix:
    """Sparse integer matrix stored row-wise as {col: value} dicts."""

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def from_dense(cls, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows, columns):
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    m.rows[i][j] = v
        return m

    def dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d @ %dx%d" % (
                self.nrows, self.ncols, other.nrows, other.ncols))
        out = IntMatrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc = out.rows[i]
            for k, v in r.items():
                for j, w in other.rows[k].items():
                    s = acc.get(j, 0) + v * w
                    if s:
                        acc[j] = s
                    else:
                        acc.pop(j, None)
        return out

    def is_zero(self):
        return not any(self.rows)

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def rank(self):
        return rank(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def rank(rows) -> int:
    """
    Rank over Q of an integer matrix given as dense lists, sparse dicts
    or an IntMatrix.

    Rows are reduced one at a time against pivot rows keyed by their
    leading column.  Each step is row <- p*row - c*pivot followed by
    division by the row content, so every intermediate stays integral.
    """
    if isinstance(rows, IntMatrix):
        rows = rows.rows
    pivots = {}
    for r in rows:
        if isinstance(r, dict):
            row = {j: v for j, v in r.items() if v}
        else:
            row = {j: v for j, v in enumerate(r) if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            p = piv[lead]
            c = row[lead]
            g = gcd(p, c)
            p, c = p // g, c // g
            new = {j: p * v for j, v in row.items()}
            for j, v in piv.items():
                s = new.get(j, 0) - c * v
                if s:
                    new[j] = s
                else:
                    new.pop(j, None)
            row = _primitive(new)
    return len(pivots)
