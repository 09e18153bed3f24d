"""Exponent vectors and the degree-lexicographic monomial order."""

from __future__ import annotations

import re
from itertools import combinations_with_replacement

from .errors import DimensionError, ParseError

__all__ = ["MultiIndex", "add", "degree", "deglex_compare", "deglex_key", "monomials_up_to"]


class MultiIndex(tuple):
    """Exponent vector ``(a1, ..., an)`` of the monomial ``x1^a1 ... xn^an``.

    A tuple subclass, so it hashes and compares like the underlying tuple.
    ``+`` is componentwise (not concatenation).
    """

    __slots__ = ()

    def __new__(cls, entries=()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError(f"negative exponent in {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def unit(cls, n, i):
        """Exponent of the single generator ``x_{i+1}`` (0-based ``i``)."""
        e = [0] * n
        e[i] = 1
        return cls(e)

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)?\s*,?\s*\)\s*", text)
        if m is None:
            raise ParseError(f"bad multi-index literal {text!r}")
        body = m.group(1)
        if body is None:
            return cls(())
        return cls(int(s) for s in body.split(","))

    @property
    def degree(self):
        return sum(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        if len(self) != len(other):
            raise DimensionError(f"length mismatch: {len(self)} vs {len(other)}")
        return MultiIndex(a - b for a, b in zip(self, other))

    def __str__(self):
        return "(" + ",".join(str(e) for e in self) + ")"

    def __repr__(self):
        return f"MultiIndex({str(self)})"

    def is_zero(self):
        return not any(self)


def add(a, b):
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return MultiIndex(x + y for x, y in zip(a, b))


def degree(a):
    return sum(a)


def deglex_key(a):
    """Sort key realising the deglex order (degree first, then lex with x1 > x2 > ...)."""
    return (sum(a), tuple(a))


def deglex_compare(a, b):
    """Return -1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    ka, kb = deglex_key(a), deglex_key(b)
    return (ka > kb) - (ka < kb)


def monomials_up_to(n, max_degree):
    """All exponent vectors of length ``n`` with degree <= ``max_degree``, deglex ascending."""
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(MultiIndex(e))
    out.sort(key=deglex_key)
    return out
