"""Exact linear algebra over Q on sparse rows.

Rows are dicts ``column -> Fraction`` holding nonzero entries only.  The
commutator systems built in :mod:`skewpbw.commutant` are very sparse, so
elimination works row by row on dicts instead of dense arrays.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Echelon", "rational_kernel", "sparse_kernel", "rank", "rref_rows", "same_span"]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has a pivot entry equal to 1 and no other stored row has
    a nonzero entry in that pivot column.
    """

    def __init__(self):
        self.rows = {}

    def reduce(self, row):
        """Reduce ``row`` against the stored pivots; returns a new dict."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        for col in [c for c in row if c in self.rows]:
            factor = row.get(col)
            if not factor:
                continue
            for c, v in self.rows[col].items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row):
        """Insert ``row``; returns True if it increased the rank."""
        row = self.reduce(row)
        # a reduced row may still touch pivots introduced later; loop to fixpoint
        while any(c in self.rows for c in row):
            row = self.reduce(row)
        if not row:
            return False
        pivot = min(row)
        inv = 1 / row[pivot]
        row = {c: v * inv for c, v in row.items()}
        for col, other in self.rows.items():
            factor = other.get(pivot)
            if factor:
                for c, v in row.items():
                    nv = other.get(c, 0) - factor * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.rows[pivot] = row
        return True

    @property
    def rank(self):
        return len(self.rows)

    def contains(self, row):
        return not self.reduce(row)

    def sorted_rows(self):
        return [self.rows[c] for c in sorted(self.rows)]


def sparse_kernel(rows, ncols):
    """Basis of ``{v : row . v = 0 for every row}`` as sparse vectors.

    One basis vector per free column, with a 1 in that column; the basis is
    returned in increasing order of the free column.
    """
    ech = Echelon()
    for row in rows:
        ech.add(row)
    pivots = ech.rows
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: Fraction(1)}
        for pc, prow in pivots.items():
            v = prow.get(free)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def rational_kernel(matrix):
    """Null space basis of a dense rectangular matrix of rationals.

    Returns a list of dense vectors (lists of Fractions).
    """
    matrix = [list(r) for r in matrix]
    if not matrix:
        return []
    ncols = len(matrix[0])
    if any(len(r) != ncols for r in matrix):
        raise ValueError("matrix rows have different lengths")
    rows = [{c: Fraction(v) for c, v in enumerate(r) if v} for r in matrix]
    return [[vec.get(c, Fraction(0)) for c in range(ncols)] for vec in sparse_kernel(rows, ncols)]


def rank(rows):
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def rref_rows(rows):
    """Reduced row echelon basis of the span of ``rows``, ordered by pivot column."""
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.sorted_rows()


def same_span(a, b):
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))
