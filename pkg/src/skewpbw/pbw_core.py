"""Skew PBW extensions of Q^Omega and normal-form multiplication.

A presentation fixes, for generators ``x_1 .. x_n`` (0-based internally):

* permutations ``tau_i`` of the points, inducing ``sigma_i = tau~_i``;
* sigma-derivations ``delta_i(f) = d_i * (sigma_i(f) - f)``;
* for ``i < j`` an invertible ``c_ij`` and a remainder ``r_ij`` of degree <= 1,
  so that ``x_j x_i = c_ij x_i x_j + r0_ij + sum_l rl_ij x_l``.

Elements are finite sums ``sum f_a x^a`` with the monomials ordered
``x_1^a1 ... x_n^an``.  Products are brought to that normal form by rewriting:
scalars move left through ``x_i r = sigma_i(r) x_i + delta_i(r)`` and
inversions ``x_j x_i`` (``j > i``) are resolved with the relation above.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, PresentationError, PresentationMismatch, UndefinedError
from .funalg import (
    AlgebraElement,
    Permutation,
    SigmaDerivation,
    apply_sigma_alpha,
    induced_automorphism,
)
from .multiindex import MultiIndex, deglex_key, monomials_up_to

__all__ = [
    "Remainder",
    "Presentation",
    "PBWElement",
    "add",
    "scalar_times",
    "monomial_commute_scalar",
    "monomial_commute",
    "mul",
    "associativity_check",
    "leading_term",
    "random_element",
]


@dataclass(frozen=True)
class Remainder:
    """Degree <= 1 tail ``const + sum_l lin[l] x_l`` of a commutation relation."""

    const: AlgebraElement
    lin: tuple

    @classmethod
    def zero(cls, m, n):
        z = AlgebraElement.zero(m)
        return cls(z, (z,) * n)

    def is_zero(self):
        return self.const.is_zero() and all(v.is_zero() for v in self.lin)


def _acc(acc, alpha, coeff):
    prev = acc.get(alpha)
    acc[alpha] = coeff if prev is None else prev + coeff


def _prune(acc):
    return {a: v for a, v in acc.items() if not v.is_zero()}


def _scaled(r, terms):
    return {a: r * v for a, v in terms.items()}


class Presentation:
    """Data defining ``sigma(Q^Omega)<x_1, ..., x_n>``.

    ``c`` and ``r`` are dicts keyed by 0-based pairs ``(i, j)`` with ``i < j``;
    missing ``c`` entries default to 1, missing remainders to zero.  With
    ``strict=True`` the constructor also runs :func:`associativity_check`
    at depth 3 and raises :class:`PresentationError` on a counterexample.
    """

    def __init__(self, taus, ds=None, c=None, r=None, *, strict=False):
        taus = [t if isinstance(t, Permutation) else Permutation(t) for t in taus]
        if not taus:
            raise PresentationError("need at least one generator")
        m = len(taus[0])
        if any(len(t) != m for t in taus):
            raise PresentationError("all permutations must act on the same point set")
        n = len(taus)
        self.n = n
        self.m = m
        self.taus = tuple(taus)

        if ds is None:
            ds = [None] * n
        if len(ds) != n:
            raise PresentationError(f"expected {n} derivation vectors, got {len(ds)}")
        deltas = []
        for tau, d in zip(taus, ds):
            if d is None:
                deltas.append(SigmaDerivation.zero(tau))
            else:
                d = d if isinstance(d, AlgebraElement) else AlgebraElement(d)
                if len(d) != m:
                    raise PresentationError(f"derivation vector has size {len(d)}, expected {m}")
                deltas.append(SigmaDerivation(d, tau))
        self.deltas = tuple(deltas)

        one = AlgebraElement.one(m)
        self.c = {}
        for i, j in itertools.combinations(range(n), 2):
            self.c[i, j] = one
        for key, val in (c or {}).items():
            i, j = self._pair(key)
            val = val if isinstance(val, AlgebraElement) else AlgebraElement(val)
            if len(val) != m:
                raise PresentationError(f"c_{i + 1}{j + 1} has size {len(val)}, expected {m}")
            if not val.is_nowhere_zero():
                raise PresentationError(f"c not invertible: c_{i + 1},{j + 1} = {val} has a zero entry")
            self.c[i, j] = val

        self.r = {}
        for key, val in (r or {}).items():
            i, j = self._pair(key)
            if not isinstance(val, Remainder):
                raise PresentationError("remainders must be Remainder instances")
            if len(val.const) != m or len(val.lin) != n or any(len(v) != m for v in val.lin):
                raise PresentationError(f"remainder r_{i + 1},{j + 1} has the wrong shape")
            if not val.is_zero():
                self.r[i, j] = val

        self._no_derivations = all(d.is_zero() for d in self.deltas)
        self._sc_cache = {}
        self._mono_cache = {}
        self._rgen_cache = {}

        if strict:
            bad = associativity_check(self, depth=3)
            if bad is not None:
                raise PresentationError(f"associativity fails on triple {bad}")

    def _pair(self, key):
        i, j = key
        if not (0 <= i < j < self.n):
            raise PresentationError(f"pair {(i + 1, j + 1)} is not 1 <= i < j <= {self.n}")
        return i, j

    @property
    def is_quasi_commutative(self):
        return self._no_derivations and not self.r

    def clear_cache(self):
        self._sc_cache.clear()
        self._mono_cache.clear()
        self._rgen_cache.clear()

    # constructors for elements

    def zero(self):
        return PBWElement(self, {})

    def one(self):
        return self.scalar(AlgebraElement.one(self.m))

    def scalar(self, r):
        r = r if isinstance(r, AlgebraElement) else AlgebraElement(r)
        return PBWElement(self, {MultiIndex.zero(self.n): r})

    def indicator(self, w):
        return self.scalar(AlgebraElement.indicator(self.m, w))

    def gen(self, i):
        """The generator ``x_{i+1}`` (0-based ``i``)."""
        return PBWElement(self, {MultiIndex.unit(self.n, i): AlgebraElement.one(self.m)})

    def monomial(self, alpha, coeff=None):
        coeff = AlgebraElement.one(self.m) if coeff is None else coeff
        coeff = coeff if isinstance(coeff, AlgebraElement) else AlgebraElement(coeff)
        return PBWElement(self, {MultiIndex(alpha): coeff})

    def element(self, terms):
        return PBWElement(
            self,
            {MultiIndex(a): v if isinstance(v, AlgebraElement) else AlgebraElement(v) for a, v in terms.items()},
        )

    def sigma(self, i, f):
        return induced_automorphism(self.taus[i], f)

    def sigma_alpha(self, alpha, f):
        return apply_sigma_alpha(self.taus, alpha, f)

    # rewriting engine; every routine returns a dict MultiIndex -> AlgebraElement

    def scalar_commute(self, alpha, r):
        """Normal form of ``x^alpha r``."""
        alpha = MultiIndex(alpha)
        if self._no_derivations:
            v = self.sigma_alpha(alpha, r)
            return {} if v.is_zero() else {alpha: v}
        acc = {}
        for w, rw in enumerate(r.values):
            if rw == 0:
                continue
            for a, v in self._scalar_commute_indicator(alpha, w).items():
                _acc(acc, a, v * rw)
        return _prune(acc)

    def _scalar_commute_indicator(self, alpha, w):
        key = (alpha, w)
        hit = self._sc_cache.get(key)
        if hit is not None:
            return hit
        if alpha.is_zero():
            out = {alpha: AlgebraElement.indicator(self.m, w)}
        else:
            i = next(k for k, a in enumerate(alpha) if a)
            rest = alpha - MultiIndex.unit(self.n, i)
            inner = self._scalar_commute_indicator(rest, w)
            ei = MultiIndex.unit(self.n, i)
            acc = {}
            for eta, h in inner.items():
                for a, v in _scaled(self.sigma(i, h), self.mono_mul(ei, eta)).items():
                    _acc(acc, a, v)
                dh = self.deltas[i](h)
                if not dh.is_zero():
                    _acc(acc, eta, dh)
            out = _prune(acc)
        self._sc_cache[key] = out
        return out

    def mono_mul(self, gamma, beta):
        """Normal form of ``x^gamma x^beta``."""
        key = (gamma, beta)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        if beta.is_zero():
            out = {gamma: AlgebraElement.one(self.m)}
        else:
            k = next(i for i, b in enumerate(beta) if b)
            rest = beta - MultiIndex.unit(self.n, k)
            acc = {}
            for zeta, h in self._right_mul_gen(gamma, k).items():
                for a, v in self.mono_mul(zeta, rest).items():
                    _acc(acc, a, h * v)
            out = _prune(acc)
        self._mono_cache[key] = out
        return out

    def _right_mul_gen(self, gamma, k):
        """Normal form of ``x^gamma x_k``: resolve the rightmost inversion first."""
        key = (gamma, k)
        hit = self._rgen_cache.get(key)
        if hit is not None:
            return hit
        j = max((i for i, a in enumerate(gamma) if a), default=-1)
        ek = MultiIndex.unit(self.n, k)
        if j <= k:
            out = {gamma + ek: AlgebraElement.one(self.m)}
        else:
            ej = MultiIndex.unit(self.n, j)
            head = gamma - ej
            # x^head x_j x_k = x^head (c_kj x_k x_j + r0 + sum_l rl x_l)
            acc = {}
            self._accumulate_right(acc, self.scalar_commute(head, self.c[k, j]), ek + ej)
            rem = self.r.get((k, j))
            if rem is not None:
                for a, v in self.scalar_commute(head, rem.const).items():
                    _acc(acc, a, v)
                for l, coeff in enumerate(rem.lin):
                    if not coeff.is_zero():
                        self._accumulate_right(acc, self.scalar_commute(head, coeff), MultiIndex.unit(self.n, l))
            out = _prune(acc)
        self._rgen_cache[key] = out
        return out

    def _accumulate_right(self, acc, terms, beta):
        for eta, h in terms.items():
            for a, v in self.mono_mul(eta, beta).items():
                _acc(acc, a, h * v)

    def mul_terms(self, f, g):
        acc = {}
        for alpha, fa in f.items():
            for beta, gb in g.items():
                for eta, h in self.scalar_commute(alpha, gb).items():
                    coeff = fa * h
                    if coeff.is_zero():
                        continue
                    for a, v in self.mono_mul(eta, beta).items():
                        _acc(acc, a, coeff * v)
        return _prune(acc)

    def __repr__(self):
        kind = "quasi-commutative" if self.is_quasi_commutative else "general"
        return f"<Presentation n={self.n} |Omega|={self.m} {kind}>"


class PBWElement:
    """A finite sum ``sum_a f_a x^a`` in normal form; zero coefficients are never stored."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation, terms):
        n, m = presentation.n, presentation.m
        clean = {}
        for a, v in terms.items():
            if len(a) != n:
                raise DimensionError(f"exponent {a} has length {len(a)}, expected {n}")
            if len(v) != m:
                raise DimensionError(f"coefficient {v} has size {len(v)}, expected {m}")
            if not v.is_zero():
                clean[MultiIndex(a)] = v
        self.presentation = presentation
        self.terms = clean

    def _same(self, other):
        if other.presentation is not self.presentation:
            raise PresentationMismatch("elements belong to different presentations")

    def _lift(self, other):
        if isinstance(other, PBWElement):
            self._same(other)
            return other
        if isinstance(other, AlgebraElement):
            return self.presentation.scalar(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.presentation.scalar(AlgebraElement.constant(self.presentation.m, other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.presentation, {a: -v for a, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return scalar_times(other, self)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __pow__(self, k):
        out = self.presentation.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PBWElement):
            return self.presentation is other.presentation and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, alpha):
        return self.terms.get(MultiIndex(alpha), AlgebraElement.zero(self.presentation.m))

    @property
    def degree(self):
        return leading_term(self)[0].degree

    def sorted_terms(self):
        """Terms in deglex ascending order."""
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, v in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(a) if e
            )
            parts.append(f"{v}*{mono}" if mono else str(v))
        return " + ".join(parts)

    def __repr__(self):
        return f"PBWElement({self})"


def add(a, b):
    a._same(b)
    acc = dict(a.terms)
    for alpha, v in b.terms.items():
        _acc(acc, alpha, v)
    return PBWElement(a.presentation, acc)


def scalar_times(r, f):
    """Left multiplication by a coefficient: ``r * sum f_a x^a = sum (r f_a) x^a``."""
    if len(r) != f.presentation.m:
        raise DimensionError(f"coefficient of size {len(r)} for |Omega| = {f.presentation.m}")
    return PBWElement(f.presentation, _scaled(r, f.terms))


def monomial_commute_scalar(p, alpha, r):
    """Normal form of ``x^alpha r``; its deglex-leading term is ``sigma^alpha(r) x^alpha``."""
    alpha = MultiIndex(alpha)
    if len(alpha) != p.n:
        raise DimensionError(f"exponent of length {len(alpha)} for n = {p.n}")
    if len(r) != p.m:
        raise DimensionError(f"coefficient of size {len(r)} for |Omega| = {p.m}")
    return PBWElement(p, p.scalar_commute(alpha, r))


def monomial_commute(p, j, m, i):
    """Normal form of ``x_j x_i^m`` for 0-based ``i < j``."""
    if not (0 <= i < j < p.n):
        raise IndexError(f"need 0 <= i < j < {p.n}, got i={i}, j={j}")
    if m < 1:
        raise ValueError("m must be positive")
    ej = MultiIndex.unit(p.n, j)
    ei_m = MultiIndex(m if k == i else 0 for k in range(p.n))
    return PBWElement(p, p.mono_mul(ej, ei_m))


def mul(a, b):
    a._same(b)
    return PBWElement(a.presentation, a.presentation.mul_terms(a.terms, b.terms))


def leading_term(f):
    """The deglex-maximal ``(alpha, f_alpha)`` of a nonzero element."""
    if not f.terms:
        raise UndefinedError("the zero element has no leading term")
    alpha = max(f.terms, key=deglex_key)
    return alpha, f.terms[alpha]


def _small_rational(rng, nonzero=False):
    while True:
        q = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2, 3)))
        if q or not nonzero:
            return q


def random_element(p, max_degree, rng, n_terms=3):
    """A random sparse element of degree <= ``max_degree`` with small rational coefficients."""
    monos = monomials_up_to(p.n, max_degree)
    terms = {}
    for _ in range(n_terms):
        alpha = rng.choice(monos)
        terms[alpha] = AlgebraElement(_small_rational(rng) for _ in range(p.m))
    return PBWElement(p, terms)


def associativity_check(p, depth=3, *, seed=0, random_triples=4):
    """Search for a triple with ``(uv)w != u(vw)``.

    Tries every triple drawn from the generators and the indicator scalars,
    then ``random_triples`` triples of random elements of degree <= ``depth``.
    Returns the first failing ``(u, v, w)`` or ``None``.
    """
    basic = [p.gen(i) for i in range(p.n)] + [p.indicator(w) for w in range(p.m)]
    for u, v, w in itertools.product(basic, repeat=3):
        if (u * v) * w != u * (v * w):
            return (u, v, w)
    rng = random.Random(seed)
    for _ in range(random_triples):
        u, v, w = (random_element(p, depth, rng, n_terms=2) for _ in range(3))
        if (u * v) * w != u * (v * w):
            return (u, v, w)
    return None
