"""Randomised and golden self-checks, shared by the ``verify`` command.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
property.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .commutant import (
    SubspaceBasis,
    center_direct,
    centralizer_kernel,
    centralizer_sep_basis,
    commutes_with_coefficients,
    is_central,
    leading_coefficient_filter,
)
from .funalg import AlgebraElement, Permutation, induced_automorphism, sep_set
from .pbw_core import Presentation, random_element
from .piecewise import (
    IntervalPermutation,
    Partition,
    gamma,
    in_sep_real,
    mu,
    mu_inverse,
    sample_points,
    sep_intervals,
)
from .randomgen import random_general, random_quasi_commutative

__all__ = ["CheckResult", "example1", "example2", "run_all"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    notes: list = field(default_factory=list)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def example1():
    """Two points, ``tau_1 = id``, ``tau_2`` = swap, ``x_2 x_1 = (1,2) x_1 x_2``."""
    return Presentation([[0, 1], [1, 0]], c={(0, 1): [1, 2]})


def example2(c1=Fraction(2), c2=Fraction(1, 2)):
    return Presentation([[0, 1], [1, 0]], c={(0, 1): [c1, c2]})


def check_relation_golden():
    p = example1()
    x1, x2 = p.gen(0), p.gen(1)
    ok = x2 * x1 == p.monomial((1, 1), [1, 2])
    for m in range(1, 6):
        ok &= x2 * x1**m == p.monomial((m, 1), [1, 2**m])
    return CheckResult("relation golden", ok, "x2 x1^m = (1, 2^m) x1^m x2 for m <= 5")


def check_quasi_centralizer(presentations, max_degree):
    bad = [k for k, p in enumerate(presentations)
           if not centralizer_sep_basis(p, max_degree).flatten().same_span(centralizer_kernel(p, max_degree))]
    return CheckResult(
        "sep/kernel oracle equivalence",
        not bad,
        f"{len(presentations)} presentations, D={max_degree}" + (f", mismatches at {bad}" if bad else ""),
    )


def check_necessary_condition(presentations, max_degree):
    failures = 0
    notes = []
    for k, p in enumerate(presentations):
        for f in centralizer_kernel(p, max_degree):
            if not commutes_with_coefficients(f) or leading_coefficient_filter(p, f):
                failures += 1
            full = leading_coefficient_filter(p, f, scope="all")
            if full:
                notes.append(f"presentation {k}: {f} violates the every-alpha condition at {full[:3]}")
    detail = f"{len(presentations)} presentations, D={max_degree}, {len(notes)} every-alpha violations noted"
    return CheckResult("top-degree necessary condition", failures == 0, detail, notes)


def check_ring_axioms(presentations, triples, max_degree, seed):
    rng = random.Random(seed)
    bad = 0
    for k in range(triples):
        p = presentations[k % len(presentations)]
        u, v, w = (random_element(p, max_degree, rng, n_terms=2) for _ in range(3))
        if (u * v) * w != u * (v * w) or u * (v + w) != u * v + u * w or (u + v) * w != u * w + v * w:
            bad += 1
    return CheckResult("ring axioms", bad == 0, f"{triples} triples, degree <= {max_degree}, {bad} failures")


def check_piecewise(seed, pairs=100):
    rng = random.Random(seed)
    part = Partition(["-1", "0", "5/2"])
    m = part.size
    ok = True
    for _ in range(pairs):
        f = AlgebraElement(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m))
        g = AlgebraElement(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m))
        a, b = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5), 3)
        ok &= mu(f * g, part) == mu(f, part) * mu(g, part)
        ok &= mu(a * f + b * g, part) == a * mu(f, part) + b * mu(g, part)
        ok &= mu_inverse(mu(f, part)) == f
        ok &= (mu(f, part) == mu(g, part)) == (f == g)
    N = part.N
    image = list(range(N + 1))
    rng.shuffle(image)
    singles = list(range(N + 1, m))
    rng.shuffle(singles)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        sigma = IntervalPermutation(image + singles, part)
    f = AlgebraElement(range(1, m + 1))
    for k in range(-4, 5):
        s_k = sigma**k
        ok &= mu(f, part).compose_inverse(s_k) == mu(induced_automorphism(s_k, f), part)
    taus = [sigma, Permutation.identity(m)]
    for alpha in [(0, 0), (1, 0), (2, 1), (3, 2)]:
        moved = sep_set(taus, alpha)
        for piece in range(m):
            for x in sample_points(part, piece, rng):
                ok &= gamma(part, x) == piece
                ok &= in_sep_real(taus, alpha, x, part) == (piece in moved)
        ok &= sep_intervals(taus, alpha) == moved
    return CheckResult("piecewise bridge", ok, f"{pairs} random pairs, powers -4..4, sampled points per piece")


def check_corollary():
    p = Presentation([Permutation.cycle(5, [0, 1, 2, 3, 4])])
    basis = centralizer_kernel(p, 3)
    ok = len(basis) == 5 and all(f.degree == 0 for f in basis)
    return CheckResult("fixed-point-free corollary", ok, "5-cycle, D=3: centralizer is the constants")


def check_center_goldens():
    a = center_direct(example1(), 6)
    ok_a = len(a) == 1 and a.elements[0] == a.presentation.one()
    p2 = example2()
    b = center_direct(p2, 7)
    expected = [
        p2.monomial((j, 2 * k), [1, Fraction(1, 2**j)])
        for k in range(4)
        for j in range(8 - 2 * k)
    ]
    ok_b = b.same_span(SubspaceBasis(p2, 7, expected)) and all(is_central(f) for f in b)
    return CheckResult("center goldens", ok_a and ok_b, f"Example 1 dim {len(a)}, Example 2 dim {len(b)}")


def run_all(seed=0, count=50, max_degree=4, triples=100):
    rng = random.Random(seed)
    quasi = [random_quasi_commutative(rng) for _ in range(count)]
    general = [random_general(rng) for _ in range(count)]
    results = [
        check_relation_golden(),
        check_center_goldens(),
        check_quasi_centralizer(quasi, max_degree),
        check_necessary_condition(general, max_degree),
        check_ring_axioms(quasi, triples, 3, seed),
        check_ring_axioms(general, triples, 3, seed + 1),
        check_piecewise(seed),
        check_corollary(),
    ]
    return results
