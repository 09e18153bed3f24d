"""Centralizer of the coefficient algebra and center, up to a degree bound.

Elements of degree <= D form a finite-dimensional Q-space with coordinates
indexed by ``(alpha, w)``: the value of the coefficient ``f_alpha`` at point
``w``.  Commuting with all of Q^Omega (or additionally with every ``x_i``)
is a linear condition, so both sets are computed as exact kernels.  In the
quasi-commutative case the centralizer is also available in closed form:
``f_alpha`` must vanish on the points moved by ``tau^alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError, UndefinedError, UnsupportedMethod
from .funalg import AlgebraElement, per_set, sep_set
from .linalg import rational_kernel, rref_rows, same_span, sparse_kernel
from .multiindex import MultiIndex, deglex_key, monomials_up_to
from .pbw_core import PBWElement

__all__ = [
    "rational_kernel",
    "GradedBasis",
    "SubspaceBasis",
    "Coordinates",
    "centralizer_sep_basis",
    "centralizer_kernel",
    "center_direct",
    "leading_coefficient_filter",
    "center_condition_quasicomm",
    "commutes_with_coefficients",
    "is_central",
]


class Coordinates:
    """Column numbering of elements of degree <= D: deglex on alpha, then point order."""

    def __init__(self, n, m, max_degree):
        self.n, self.m, self.max_degree = n, m, max_degree
        self.monomials = monomials_up_to(n, max_degree)
        self._pos = {a: k for k, a in enumerate(self.monomials)}

    @property
    def dim(self):
        return len(self.monomials) * self.m

    def column(self, alpha, w):
        return self._pos[alpha] * self.m + w

    def key(self, col):
        return self.monomials[col // self.m], col % self.m

    def to_vector(self, f):
        vec = {}
        for alpha, v in f.terms.items():
            if alpha not in self._pos:
                raise ValueError(f"term {alpha} exceeds degree bound {self.max_degree}")
            for w, a in enumerate(v.values):
                if a:
                    vec[self.column(alpha, w)] = a
        return vec

    def to_element(self, p, vec):
        grouped = {}
        for col, a in vec.items():
            alpha, w = self.key(col)
            grouped.setdefault(alpha, [Fraction(0)] * self.m)[w] = a
        return PBWElement(p, {a: AlgebraElement(v) for a, v in grouped.items()})


@dataclass
class SubspaceBasis:
    """Linearly independent elements of degree <= ``max_degree``, in reduced echelon form."""

    presentation: object
    max_degree: int
    elements: list
    method: str = "kernel"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def vectors(self, coords=None):
        coords = coords or Coordinates(self.presentation.n, self.presentation.m, self.max_degree)
        return [coords.to_vector(f) for f in self.elements]

    def same_span(self, other):
        d = max(self.max_degree, other.max_degree)
        coords = Coordinates(self.presentation.n, self.presentation.m, d)
        return same_span(self.vectors(coords), other.vectors(coords))

    def contains(self, f):
        d = max(self.max_degree, f.degree if f else 0)
        coords = Coordinates(self.presentation.n, self.presentation.m, d)
        vecs = self.vectors(coords)
        return same_span(vecs, vecs + [coords.to_vector(f)])


@dataclass
class GradedBasis:
    """Per exponent ``alpha`` with ``|alpha| <= max_degree``, a basis of allowed coefficients."""

    presentation: object
    max_degree: int
    spaces: dict = field(default_factory=dict)

    @property
    def taus(self):
        return self.presentation.taus

    def flatten(self):
        p = self.presentation
        out = [
            PBWElement(p, {alpha: v})
            for alpha in sorted(self.spaces, key=deglex_key)
            for v in self.spaces[alpha]
        ]
        return SubspaceBasis(p, self.max_degree, out, method="sep")

    def vanishing_set(self, alpha):
        """Points where every allowed coefficient at ``alpha`` is zero."""
        support = set()
        for v in self.spaces.get(MultiIndex(alpha), []):
            support |= v.support()
        return frozenset(range(self.presentation.m)) - support


def centralizer_sep_basis(p, max_degree):
    """Closed form: ``V_alpha`` is spanned by the indicators of the fixed points of ``tau^alpha``."""
    if not p.is_quasi_commutative:
        raise UnsupportedMethod("the Sep description needs a quasi-commutative presentation; use the kernel method")
    gb = GradedBasis(p, max_degree)
    for alpha in monomials_up_to(p.n, max_degree):
        gb.spaces[alpha] = [AlgebraElement.indicator(p.m, w) for w in sorted(per_set(p.taus, alpha))]
    return gb


def _kernel_solve(p, max_degree, probes, method):
    """Elements of degree <= D annihilated by ``f -> u f - f u`` for every probe ``u``."""
    coords = Coordinates(p.n, p.m, max_degree)
    rows = {}
    for alpha in coords.monomials:
        for theta in range(p.m):
            col = coords.column(alpha, theta)
            basis_el = p.monomial(alpha, AlgebraElement.indicator(p.m, theta))
            for k, u in enumerate(probes):
                comm = u * basis_el - basis_el * u
                for beta, v in comm.terms.items():
                    for w, a in enumerate(v.values):
                        if a:
                            rows.setdefault((k, beta, w), {})[col] = a
    kernel = sparse_kernel(rows.values(), coords.dim)
    elements = [coords.to_element(p, vec) for vec in rref_rows(kernel)]
    return SubspaceBasis(p, max_degree, elements, method=method)


def centralizer_kernel(p, max_degree):
    """Exact basis of ``{f : deg f <= D, e_w f = f e_w for all w}``.

    Indicators span Q^Omega and the commutator is linear in the probe, so
    testing against them is enough.
    """
    probes = [p.indicator(w) for w in range(p.m)]
    return _kernel_solve(p, max_degree, probes, "kernel")


def center_direct(p, max_degree):
    """Exact basis of elements of degree <= D commuting with every ``e_w`` and every ``x_i``."""
    probes = [p.indicator(w) for w in range(p.m)] + [p.gen(i) for i in range(p.n)]
    return _kernel_solve(p, max_degree, probes, "direct")


def leading_coefficient_filter(p, f, scope="top"):
    """Check that coefficients vanish on ``Sep^alpha`` for the selected terms of ``f``.

    ``scope`` picks the terms examined:

    * ``"top"`` -- every term of maximal total degree (the necessary condition
      that holds for any centralizer element, derivations or not);
    * ``"per_degree"`` -- the deglex-largest term of each total degree present;
    * ``"all"`` -- every term.

    Returns the sorted list of violating ``(alpha, w)``; empty means pass.
    """
    if f.is_zero():
        raise UndefinedError("the filter is undefined on the zero element")
    if f.presentation is not p:
        raise ValueError("element does not belong to this presentation")
    if scope == "all":
        selected = list(f.terms)
    elif scope == "top":
        top = max(a.degree for a in f.terms)
        selected = [a for a in f.terms if a.degree == top]
    elif scope == "per_degree":
        best = {}
        for a in f.terms:
            d = a.degree
            if d not in best or deglex_key(a) > deglex_key(best[d]):
                best[d] = a
        selected = list(best.values())
    else:
        raise ValueError(f"unknown scope {scope!r}")
    violations = []
    for alpha in selected:
        coeff = f.terms[alpha]
        for w in sorted(sep_set(p.taus, alpha)):
            if coeff[w] != 0:
                violations.append((alpha, w))
    violations.sort(key=lambda t: (deglex_key(t[0]), t[1]))
    return violations


def center_condition_quasicomm(p, alpha, v):
    """Whether ``v x^alpha`` commutes with every generator.

    Both products ``x_i (v x^alpha)`` and ``(v x^alpha) x_i`` are normalised
    and compared; ``v`` must already vanish off the fixed points of ``tau^alpha``.
    """
    if not p.is_quasi_commutative:
        raise UnsupportedMethod("condition is stated for quasi-commutative presentations")
    alpha = MultiIndex(alpha)
    moved = sep_set(p.taus, alpha)
    if any(v[w] != 0 for w in moved):
        raise PreconditionError(f"coefficient {v} is nonzero on Sep^{alpha} = {sorted(moved)}")
    f = p.monomial(alpha, v)
    return all(p.gen(i) * f == f * p.gen(i) for i in range(p.n))


def commutes_with_coefficients(f):
    p = f.presentation
    return all(p.indicator(w) * f == f * p.indicator(w) for w in range(p.m))


def is_central(f):
    p = f.presentation
    return commutes_with_coefficients(f) and all(p.gen(i) * f == f * p.gen(i) for i in range(p.n))
