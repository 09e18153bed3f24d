"""Piecewise constant functions on the real line with finitely many fixed jumps.

Jump points ``t_1 < ... < t_N`` cut the line into ``2N + 1`` pieces, indexed

* ``0 .. N``: the open intervals ``(-inf, t_1), (t_1, t_2), ..., (t_N, inf)``;
* ``N + k`` for ``k = 1 .. N``: the singleton ``{t_k}``.

A function constant on each piece is the same data as a function on the
piece indices, which is what :func:`mu` and :func:`mu_inverse` translate.
Real points are exact rationals.
"""

from __future__ import annotations

import bisect
import warnings
from dataclasses import dataclass

from .errors import DimensionError
from .funalg import AlgebraElement, Permutation, compose_alpha, format_rational, residue_sep_rules, to_rational
from .multiindex import MultiIndex, deglex_key

__all__ = [
    "Partition",
    "PiecewiseFunction",
    "IntervalPermutation",
    "mu",
    "mu_inverse",
    "gamma",
    "sep_intervals",
    "in_sep_real",
    "sample_points",
    "translate_centralizer",
    "CentralizerConstraint",
]


class Partition:
    def __init__(self, jump_points):
        jumps = tuple(to_rational(t) for t in jump_points)
        if not jumps:
            raise ValueError("need at least one jump point")
        if any(a >= b for a, b in zip(jumps, jumps[1:])):
            raise ValueError(f"jump points must be strictly increasing: {jumps}")
        self.jumps = jumps

    @classmethod
    def from_json(cls, data):
        return cls(data["jumps"])

    def to_json(self):
        return {"jumps": [format_rational(t) for t in self.jumps]}

    @property
    def N(self):
        return len(self.jumps)

    @property
    def size(self):
        return 2 * self.N + 1

    def is_singleton(self, piece):
        return piece > self.N

    def is_bounded(self, piece):
        return piece > self.N or 0 < piece < self.N

    def bounds(self, piece):
        """``(lo, hi)`` with ``None`` for an infinite end; a singleton gives ``(t, t)``."""
        N = self.N
        if not 0 <= piece <= 2 * N:
            raise IndexError(f"piece {piece} outside 0..{2 * N}")
        if piece > N:
            t = self.jumps[piece - N - 1]
            return t, t
        lo = self.jumps[piece - 1] if piece > 0 else None
        hi = self.jumps[piece] if piece < N else None
        return lo, hi

    def render(self, piece):
        lo, hi = self.bounds(piece)
        if piece > self.N:
            return "{" + format_rational(lo) + "}"
        left = "-inf" if lo is None else format_rational(lo)
        right = "inf" if hi is None else format_rational(hi)
        return f"({left},{right})"

    def render_set(self, pieces):
        pieces = sorted(pieces)
        if not pieces:
            return "∅"
        return " ∪ ".join(self.render(k) for k in pieces)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.jumps == other.jumps

    def __hash__(self):
        return hash(self.jumps)

    def __repr__(self):
        return f"Partition({[format_rational(t) for t in self.jumps]})"


def gamma(part, x):
    """Index of the piece containing the rational point ``x``."""
    x = to_rational(x)
    k = bisect.bisect_left(part.jumps, x)
    if k < part.N and part.jumps[k] == x:
        return part.N + 1 + k
    return k


@dataclass(frozen=True)
class PiecewiseFunction:
    partition: Partition
    values: tuple

    def __post_init__(self):
        vals = tuple(to_rational(v) for v in self.values)
        if len(vals) != self.partition.size:
            raise DimensionError(f"{len(vals)} values for {self.partition.size} pieces")
        object.__setattr__(self, "values", vals)

    def __call__(self, x):
        return self.values[gamma(self.partition, x)]

    def _check(self, other):
        if other.partition != self.partition:
            raise DimensionError("functions live on different partitions")

    def __add__(self, other):
        self._check(other)
        return PiecewiseFunction(self.partition, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, PiecewiseFunction):
            self._check(other)
            return PiecewiseFunction(self.partition, tuple(a * b for a, b in zip(self.values, other.values)))
        c = to_rational(other)
        return PiecewiseFunction(self.partition, tuple(c * a for a in self.values))

    __rmul__ = __mul__

    def compose_inverse(self, perm):
        """``h o sigma^{-1}`` for the point map ``sigma`` acting on pieces by ``perm``."""
        out = [None] * len(self.values)
        for w, t in enumerate(perm.image):
            out[t] = self.values[w]
        return PiecewiseFunction(self.partition, tuple(out))


class IntervalPermutation(Permutation):
    """A permutation of piece indices that maps singletons to singletons.

    Sending a bounded open interval to an unbounded one (or back) is allowed
    but reported with a warning.
    """

    __slots__ = ("partition",)

    def __init__(self, image, partition):
        super().__init__(image)
        if len(self.image) != partition.size:
            raise DimensionError(f"permutation on {len(self.image)} points, partition has {partition.size} pieces")
        N = partition.N
        for w, t in enumerate(self.image):
            if (w > N) != (t > N):
                raise ValueError(f"piece {w} and its image {t} are not both singletons or both intervals")
        self.partition = partition
        if self.mixes_bounded():
            warnings.warn("interval permutation exchanges bounded and unbounded intervals", stacklevel=2)

    def mixes_bounded(self):
        part = self.partition
        return any(
            part.is_bounded(w) != part.is_bounded(t) for w, t in enumerate(self.image) if w <= part.N
        )

    def act(self, h):
        """The induced automorphism ``h -> h o sigma^{-1}``."""
        return h.compose_inverse(self)


def mu(f, part):
    if len(f) != part.size:
        raise DimensionError(f"element on {len(f)} points, partition has {part.size} pieces")
    return PiecewiseFunction(part, f.values)


def mu_inverse(h):
    return AlgebraElement(h.values)


def sep_intervals(taus, alpha):
    """Pieces moved by the composed interval permutation ``sigma^alpha``."""
    return compose_alpha(list(taus), alpha).moved_points()


def in_sep_real(taus, alpha, x, part):
    """Pointwise definition: does some ``h`` in the algebra have ``sigma~^alpha(h)(x) != h(x)``?

    Indicator functions of the pieces span the algebra, so they are enough.
    """
    composed = compose_alpha(list(taus), alpha)
    for theta in range(part.size):
        h = mu(AlgebraElement.indicator(part.size, theta), part)
        if h.compose_inverse(composed)(x) != h(x):
            return True
    return False


def sample_points(part, piece, rng=None, count=3):
    """Rational points inside a piece: endpoints offsets, midpoints, and random fractions."""
    lo, hi = part.bounds(piece)
    if piece > part.N:
        return [lo]
    pts = []
    if lo is None and hi is None:
        pts = [to_rational(0)]
    elif lo is None:
        pts = [hi - 1, hi - to_rational("1/1000"), hi - 100]
    elif hi is None:
        pts = [lo + 1, lo + to_rational("1/1000"), lo + 100]
    else:
        pts = [(lo + hi) / 2, lo + (hi - lo) / 1000, hi - (hi - lo) / 7]
    if rng is not None:
        for _ in range(count):
            u = to_rational(f"{rng.randint(1, 999)}/1000")
            if lo is None and hi is None:
                pts.append(u * 2000 - 1000)
            elif lo is None:
                pts.append(hi - 1000 * u)
            elif hi is None:
                pts.append(lo + 1000 * u)
            else:
                pts.append(lo + (hi - lo) * u)
    return pts


@dataclass
class CentralizerConstraint:
    alpha: MultiIndex
    pieces: frozenset
    intervals: str


def translate_centralizer(gb, part):
    """Rewrite a graded Sep basis as vanishing constraints on intervals of the line.

    Returns ``(constraints, rules)``: ``constraints`` has one entry per
    exponent with a nonempty vanishing set; ``rules`` are symbolic strings
    like ``"h_{j,2k+1} = 0 on I_0 ∪ I_1"``, one per residue class of the
    exponents (the vanishing set only depends on ``alpha_i mod ord(tau_i)``).
    """
    p = gb.presentation
    if p.m != part.size:
        raise DimensionError(f"|Omega| = {p.m} but the partition has {part.size} pieces")
    constraints = []
    for alpha in sorted(gb.spaces, key=deglex_key):
        pieces = gb.vanishing_set(alpha)
        if pieces:
            constraints.append(CentralizerConstraint(alpha, pieces, part.render_set(pieces)))
    rules = []
    for labels, pieces in residue_sep_rules(list(gb.taus)):
        names = " ∪ ".join(f"I_{k}" for k in sorted(pieces))
        rules.append(f"h_{{{','.join(labels)}}} = 0 on {names}")
    return constraints, rules
