"""The coefficient algebra of rational-valued functions on a finite set.

Points of the set are ``0 .. m-1``.  A function is stored as the tuple of its
values, multiplication is pointwise.  A permutation ``tau`` of the points
induces the automorphism ``f -> f o tau^{-1}``; a sigma-derivation is kept in
the canonical form ``delta(f) = d * (tau~(f) - f)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .errors import DimensionError, ParseError

__all__ = [
    "to_rational",
    "format_rational",
    "AlgebraElement",
    "Permutation",
    "SigmaDerivation",
    "induced_automorphism",
    "apply_sigma_alpha",
    "compose_alpha",
    "derivation_apply",
    "sep_set",
    "per_set",
    "generated_group",
    "is_cyclic_group",
    "residue_sep_rules",
]


def to_rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: everything here is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


_ZERO = Fraction(0)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class AlgebraElement:
    """An element of Q^Omega: one exact rational per point."""

    __slots__ = ("values", "_hash")

    def __init__(self, values):
        vals = tuple(to_rational(v) for v in values)
        if not vals:
            raise DimensionError("an element needs at least one point")
        self.values = vals
        self._hash = None

    @classmethod
    def _raw(cls, values):
        """Wrap a tuple already made of Fractions without re-coercing it."""
        obj = cls.__new__(cls)
        obj.values = values
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, m, c=1):
        return cls((c,) * m)

    @classmethod
    def one(cls, m):
        return cls.constant(m, 1)

    @classmethod
    def zero(cls, m):
        return cls.constant(m, 0)

    @classmethod
    def indicator(cls, m, w):
        if not 0 <= w < m:
            raise DimensionError(f"point {w} outside 0..{m - 1}")
        return cls(1 if k == w else 0 for k in range(m))

    @classmethod
    def parse(cls, text):
        """Parse a bracketed literal such as ``"[1, 1/2]"``.

        Entries may be integers or ``p/q`` (quoted or bare).
        """
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"element literal must be bracketed: {text!r}")
        body = s[1:-1].strip()
        if not body:
            raise ParseError("empty element literal")
        return cls(tok.strip().strip('"').strip("'") for tok in body.split(","))

    @property
    def size(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, w):
        return self.values[w]

    def __iter__(self):
        return iter(self.values)

    def _check(self, other):
        if len(other.values) != len(self.values):
            raise DimensionError(f"size mismatch: {len(self.values)} vs {len(other.values)}")

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return AlgebraElement.constant(len(self.values), other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement._raw(tuple(a + b for a, b in zip(self.values, other.values)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement._raw(tuple(a - b for a, b in zip(self.values, other.values)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return AlgebraElement._raw(tuple(-a for a in self.values))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement._raw(tuple(a * b if a and b else _ZERO for a, b in zip(self.values, other.values)))

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_nowhere_zero():
            raise ZeroDivisionError(f"{self} has a zero entry and is not invertible")
        return AlgebraElement(1 / a for a in self.values)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return AlgebraElement(a**k for a in self.values)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.values)
        return self._hash

    def is_zero(self):
        return not any(self.values)

    def __bool__(self):
        return not self.is_zero()

    def is_nowhere_zero(self):
        return all(self.values)

    def support(self):
        return frozenset(w for w, a in enumerate(self.values) if a)

    def to_strings(self):
        return [format_rational(a) for a in self.values]

    def __str__(self):
        return "[" + ", ".join(self.to_strings()) + "]"

    def __repr__(self):
        return f"AlgebraElement({str(self)})"


class Permutation:
    """A bijection of ``0 .. m-1`` given by its image list: ``w -> image[w]``."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{list(image)} is not a permutation of 0..{len(image) - 1}")
        self.image = image

    @classmethod
    def identity(cls, m):
        return cls(range(m))

    @classmethod
    def cycle(cls, m, points):
        """The cycle ``points[0] -> points[1] -> ... -> points[0]`` on ``0..m-1``."""
        image = list(range(m))
        for a, b in zip(points, points[1:] + points[:1]):
            image[a] = b
        return cls(image)

    @classmethod
    def parse(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad permutation literal: {exc.msg}", exc.lineno, exc.colno) from exc
        try:
            return cls(data)
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc

    @property
    def size(self):
        return len(self.image)

    def __call__(self, w):
        return self.image[w]

    def __len__(self):
        return len(self.image)

    def __mul__(self, other):
        """Composition ``self o other`` (apply ``other`` first)."""
        if len(other) != len(self):
            raise DimensionError(f"size mismatch: {len(self)} vs {len(other)}")
        return Permutation(self.image[w] for w in other.image)

    def inverse(self):
        inv = [0] * len(self.image)
        for w, t in enumerate(self.image):
            inv[t] = w
        return Permutation(inv)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(len(self.image))
        for _ in range(abs(k) % self.order()):
            result = base * result
        return result

    def order(self):
        o = 1
        for c in self.cycles():
            o = lcm(o, len(c))
        return o

    def cycles(self):
        seen = set()
        out = []
        for start in range(len(self.image)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            w = self.image[start]
            while w != start:
                cyc.append(w)
                seen.add(w)
                w = self.image[w]
            out.append(tuple(cyc))
        return out

    def fixed_points(self):
        return frozenset(w for w, t in enumerate(self.image) if w == t)

    def moved_points(self):
        return frozenset(w for w, t in enumerate(self.image) if w != t)

    def is_identity(self):
        return all(w == t for w, t in enumerate(self.image))

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.image == other.image
        return NotImplemented

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"


def induced_automorphism(tau, f):
    """``tau~(f) = f o tau^{-1}``, i.e. the value at ``w`` moves to ``tau(w)``."""
    if len(tau) != len(f):
        raise DimensionError(f"permutation on {len(tau)} points, element on {len(f)}")
    out = [None] * len(f)
    for w, t in enumerate(tau.image):
        out[t] = f.values[w]
    return AlgebraElement._raw(tuple(out))


def compose_alpha(taus, alpha):
    """The point permutation ``tau_1^a1 o ... o tau_n^an``."""
    if len(taus) != len(alpha):
        raise DimensionError(f"{len(taus)} permutations but exponent of length {len(alpha)}")
    m = len(taus[0]) if taus else 0
    result = Permutation.identity(m)
    for tau, a in zip(taus, alpha):
        result = result * tau**a
    return result


def apply_sigma_alpha(taus, alpha, f):
    """Apply ``tau~_1^a1 o ... o tau~_n^an`` to ``f`` (innermost factor first)."""
    if len(taus) != len(alpha):
        raise DimensionError(f"{len(taus)} permutations but exponent of length {len(alpha)}")
    for tau, a in reversed(list(zip(taus, alpha))):
        for _ in range(a % tau.order()):
            f = induced_automorphism(tau, f)
    return f


class SigmaDerivation:
    """``delta(f) = d * (tau~(f) - f)``, a derivation twisted by ``tau~``.

    ``d`` only matters on the points moved by ``tau``; on fixed points the
    bracket vanishes identically.
    """

    __slots__ = ("d", "tau")

    def __init__(self, d, tau):
        if len(d) != len(tau):
            raise DimensionError(f"derivation vector of size {len(d)} with permutation on {len(tau)}")
        self.d = d
        self.tau = tau

    @classmethod
    def zero(cls, tau):
        return cls(AlgebraElement.zero(len(tau)), tau)

    def is_zero(self):
        return all(self.d[w] == 0 for w in self.tau.moved_points())

    def __call__(self, f):
        return derivation_apply(self, f)

    def __repr__(self):
        return f"SigmaDerivation(d={self.d}, tau={list(self.tau.image)})"


def derivation_apply(delta, f):
    if len(f) != len(delta.d):
        raise DimensionError(f"derivation on {len(delta.d)} points, element on {len(f)}")
    return delta.d * (induced_automorphism(delta.tau, f) - f)


def sep_set(taus, alpha):
    """Points moved by the composed permutation ``tau^alpha``."""
    return compose_alpha(taus, alpha).moved_points()


def per_set(taus, alpha):
    """Points fixed by ``tau^alpha``."""
    return compose_alpha(taus, alpha).fixed_points()


def generated_group(taus):
    """All elements of the permutation group generated by ``taus`` (closure by BFS)."""
    m = len(taus[0])
    ident = Permutation.identity(m)
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for t in taus:
                h = t * g
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def is_cyclic_group(taus):
    group = generated_group(taus)
    return any(g.order() == len(group) for g in group)


_LETTERS = "jklmpqrsuvw"


def _residue_label(letter, modulus, residue):
    if modulus == 1:
        return letter
    stem = f"{modulus}{letter}"
    return stem if residue == 0 else f"{stem}+{residue}"


def residue_sep_rules(taus):
    """Describe ``alpha -> Sep^alpha`` symbolically through residues of the exponents.

    ``tau^alpha`` only depends on ``alpha_i mod ord(tau_i)``, so the moved set is a
    function of the residue vector.  Returns a list of ``(labels, points)`` pairs,
    one per residue class whose moved set is nonempty; ``labels`` are index
    strings such as ``("j", "2k+1")``.
    """
    orders = [t.order() for t in taus]
    n = len(taus)
    letters = [_LETTERS[i] if i < len(_LETTERS) else f"a{i + 1}" for i in range(n)]
    rules = []

    def walk(i, res):
        if i == n:
            moved = sep_set(taus, res)
            if moved:
                labels = tuple(_residue_label(letters[k], orders[k], res[k]) for k in range(n))
                rules.append((labels, moved))
            return
        for r in range(orders[i]):
            walk(i + 1, res + [r])

    walk(0, [])
    return rules
