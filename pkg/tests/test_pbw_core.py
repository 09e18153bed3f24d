import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpbw.errors import DimensionError, PresentationError, PresentationMismatch, UndefinedError
from skewpbw.funalg import AlgebraElement, Permutation, apply_sigma_alpha, induced_automorphism
from skewpbw.multiindex import MultiIndex, deglex_key
from skewpbw.pbw_core import (
    PBWElement,
    Presentation,
    Remainder,
    add,
    associativity_check,
    leading_term,
    monomial_commute,
    monomial_commute_scalar,
    mul,
    random_element,
    scalar_times,
)
from skewpbw.randomgen import random_general, random_quasi_commutative

from conftest import elem


def test_add_examples(ex1):
    f = ex1.element({(1, 0): elem(3, Fraction(1, 2)), (0, 2): elem(0, 1)})
    assert f + ex1.zero() == f
    e0x = ex1.monomial((1, 0), AlgebraElement.indicator(2, 0))
    e1x = ex1.monomial((1, 0), AlgebraElement.indicator(2, 1))
    assert add(e0x, e1x) == ex1.monomial((1, 0), elem(1, 1))
    assert add(f, scalar_times(elem(-1, -1), f)).is_zero()
    assert (f - f).terms == {}


def test_scalar_times_examples(ex1):
    f = ex1.element({(1, 0): elem(3, 2), (0, 1): elem(1, 1)})
    assert scalar_times(AlgebraElement.one(2), f) == f
    e0 = AlgebraElement.indicator(2, 0)
    assert scalar_times(e0, ex1.gen(1)) == ex1.monomial((0, 1), e0)
    assert scalar_times(AlgebraElement.zero(2), f).is_zero()
    with pytest.raises(DimensionError):
        scalar_times(elem(1, 2, 3), f)


def test_monomial_commute_scalar_examples(ex1, ore_swap):
    a, b = Fraction(4), Fraction(-1, 3)
    r = elem(a, b)
    assert monomial_commute_scalar(ex1, (0, 1), r) == ex1.monomial((0, 1), elem(b, a))
    assert monomial_commute_scalar(ex1, (0, 0), r) == ex1.scalar(r)
    # single rewrite x r = sigma(r) x + delta(r) with delta(r) = (1,1) * (sigma(r) - r)
    expected = ore_swap.element({(1,): elem(b, a), (0,): elem(b - a, a - b)})
    assert monomial_commute_scalar(ore_swap, (1,), r) == expected


def test_monomial_commute_examples(ex1):
    assert monomial_commute(ex1, 1, 1, 0) == ex1.monomial((1, 1), elem(1, 2))
    assert monomial_commute(ex1, 1, 2, 0) == ex1.monomial((2, 1), elem(1, 4))
    assert monomial_commute(ex1, 1, 3, 0) == ex1.monomial((3, 1), elem(1, 8))
    with pytest.raises(IndexError):
        monomial_commute(ex1, 0, 1, 1)


def test_monomial_commute_with_remainder():
    # Weyl-type relation x2 x1 = x1 x2 + 1 over a commutative base
    p = Presentation([[0, 1], [0, 1]], r={(0, 1): Remainder(elem(1, 1), (elem(0, 0), elem(0, 0)))})
    assert monomial_commute(p, 1, 1, 0) == p.element({(1, 1): elem(1, 1), (0, 0): elem(1, 1)})
    # x2 x1^2 = x1^2 x2 + 2 x1
    assert monomial_commute(p, 1, 2, 0) == p.element({(2, 1): elem(1, 1), (1, 0): elem(2, 2)})


def test_mul_examples(ex1):
    x1, x2 = ex1.gen(0), ex1.gen(1)
    f = ex1.element({(2, 1): elem(1, 3), (0, 0): elem(5, 0)})
    assert ex1.one() * f == f and f * ex1.one() == f
    assert mul(x2, x1) == ex1.monomial((1, 1), elem(1, 2))
    g = ex1.monomial((1, 0), elem(1, 1))
    assert g * x2 == ex1.monomial((1, 1), elem(1, 1))
    assert x2 * g == ex1.monomial((1, 1), elem(1, 2))
    assert g * x2 != x2 * g


def test_mixed_presentations_rejected(ex1, ex2):
    with pytest.raises(PresentationMismatch):
        ex1.gen(0) + ex2.gen(0)
    with pytest.raises(PresentationMismatch):
        ex1.gen(0) * ex2.gen(0)


def test_leading_term_examples(ex1):
    e0 = AlgebraElement.indicator(2, 0)
    f = ex1.element({(2, 0): elem(1, 1), (0, 1): e0})
    assert leading_term(f) == (MultiIndex((2, 0)), elem(1, 1))
    c = ex1.scalar(elem(3, 4))
    assert leading_term(c) == (MultiIndex((0, 0)), elem(3, 4))
    g = ex1.element({(1, 1): e0, (0, 2): AlgebraElement.indicator(2, 1)})
    assert leading_term(g) == (MultiIndex((1, 1)), e0)
    with pytest.raises(UndefinedError):
        leading_term(ex1.zero())


def test_c_must_be_invertible():
    with pytest.raises(PresentationError, match="not invertible"):
        Presentation([[0, 1], [1, 0]], c={(0, 1): [0, 2]})


def test_quasi_commutative_flag(ex1, ore_swap):
    assert ex1.is_quasi_commutative
    assert not ore_swap.is_quasi_commutative
    # a derivation vector supported on fixed points is the zero derivation
    p = Presentation([[0, 2, 1]], ds=[[5, 0, 0]])
    assert p.is_quasi_commutative


def _adversarial():
    return Presentation(
        [[0, 1], [1, 0]], c={(0, 1): [1, 2]}, r={(0, 1): Remainder(elem(1, 0), (elem(0, 0), elem(0, 0)))}
    )


def test_adversarial_triple_found_by_hand():
    p = _adversarial()
    x1, x2, e0 = p.gen(0), p.gen(1), p.indicator(0)
    # (x2 x1) e0 = (c x1 x2 + e0) e0 = c e1 x1 x2 + e0
    # x2 (x1 e0) = x2 e0 x1 = e1 x2 x1 = e1 c x1 x2
    left = (x2 * x1) * e0
    right = x2 * (x1 * e0)
    assert left == p.element({(1, 1): elem(0, 2), (0, 0): elem(1, 0)})
    assert right == p.element({(1, 1): elem(0, 2)})
    assert associativity_check(p) is not None
    with pytest.raises(PresentationError, match="associativity"):
        Presentation(p.taus, c={(0, 1): [1, 2]}, r=p.r, strict=True)


def test_associativity_check_passes_on_valid(ex1, ex2, ore_swap):
    for p in (ex1, ex2, ore_swap):
        assert associativity_check(p, depth=3) is None
        assert associativity_check(p, depth=0, random_triples=0) is None


def test_noncommuting_permutations_are_caught():
    # relations force tau_1 tau_2 = tau_2 tau_1
    p = Presentation([[1, 0, 2], [0, 2, 1]])
    assert associativity_check(p, depth=1) is not None


@pytest.mark.parametrize("seed", range(6))
def test_lemma_closed_forms(seed):
    rng = random.Random(seed)
    p = random_quasi_commutative(rng, max_m=4, max_n=3)
    while p.n < 2:
        p = random_quasi_commutative(rng, max_m=4, max_n=3)
    for i in range(p.n):
        for j in range(i + 1, p.n):
            c = p.c[i, j]
            xi, xj = p.gen(i), p.gen(j)
            for m in range(1, 6):
                # (a): x_j x_i^m = prod_{k<m} tau_i^k(c) x_i^m x_j
                prod_a = AlgebraElement.one(p.m)
                prod_b = AlgebraElement.one(p.m)
                ci, cj = c, c
                for _ in range(m):
                    prod_a = prod_a * ci
                    ci = induced_automorphism(p.taus[i], ci)
                    prod_b = prod_b * cj
                    cj = induced_automorphism(p.taus[j], cj)
                alpha = [0] * p.n
                alpha[i], alpha[j] = m, 1
                assert xj * xi**m == p.monomial(alpha, prod_a)
                alpha[i], alpha[j] = 1, m
                assert xj**m * xi == p.monomial(alpha, prod_b)


@pytest.mark.parametrize("seed", range(6))
def test_leading_term_law_general(seed):
    rng = random.Random(100 + seed)
    p = random_general(rng, max_m=4)
    for alpha in [(1,) * p.n, (2,) + (0,) * (p.n - 1), (0,) * (p.n - 1) + (3,), (2,) * p.n]:
        r = AlgebraElement(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(p.m))
        f = monomial_commute_scalar(p, alpha, r)
        top = MultiIndex(alpha)
        assert f.coeff(top) == apply_sigma_alpha(p.taus, top, r)
        assert all(a.degree < top.degree for a in f.terms if a != top)


@pytest.mark.parametrize("seed", range(5))
def test_degree_bounds(seed):
    rng = random.Random(seed)
    p = random_quasi_commutative(rng)
    q = random_general(rng)
    for pres in (p, q):
        for _ in range(5):
            f = random_element(pres, 3, rng)
            g = random_element(pres, 3, rng)
            if f and g:
                prod = f * g
                assert prod.is_zero() or prod.degree <= f.degree + g.degree
    # equality in the quasi-commutative case with nowhere-zero leading coefficients
    for _ in range(5):
        f = random_element(p, 3, rng) + p.monomial((1,) * p.n, AlgebraElement.constant(p.m, 2))
        g = random_element(p, 2, rng) + p.monomial((2,) + (0,) * (p.n - 1), AlgebraElement.constant(p.m, 3))
        fa, fv = leading_term(f)
        gb, gv = leading_term(g)
        if fv.is_nowhere_zero() and gv.is_nowhere_zero():
            assert (f * g).degree == f.degree + g.degree


def test_cache_does_not_change_results():
    rng = random.Random(7)
    p = random_general(rng)
    elems = [random_element(p, 3, rng) for _ in range(6)]
    cached = [a * b for a in elems for b in elems]
    uncached = []
    for a in elems:
        for b in elems:
            p.clear_cache()
            uncached.append(a * b)
    assert cached == uncached


def test_concurrent_multiplication_agrees():
    rng = random.Random(11)
    p = random_general(rng)
    elems = [random_element(p, 3, rng) for _ in range(5)]
    reference = [a * b for a in elems for b in elems]
    p.clear_cache()
    results = {}

    def worker(k):
        results[k] = [a * b for a in elems for b in elems]

    threads = [threading.Thread(target=worker, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(results[k] == reference for k in range(4))


def test_zero_coefficients_pruned(ex1):
    f = PBWElement(ex1, {MultiIndex((1, 0)): elem(0, 0), MultiIndex((0, 1)): elem(1, 0)})
    assert list(f.terms) == [MultiIndex((0, 1))]


coeffs = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=2)
exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
terms = st.dictionaries(exponents, coeffs, max_size=3)


@settings(max_examples=40, deadline=None)
@given(terms, terms, terms)
def test_ring_axioms_example2(ta, tb, tc):
    p = Presentation([[0, 1], [1, 0]], c={(0, 1): [2, Fraction(1, 2)]})
    u, v, w = (p.element({k: AlgebraElement(c) for k, c in t.items()}) for t in (ta, tb, tc))
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), coeffs), max_size=3),
       st.lists(st.tuples(st.integers(0, 3), coeffs), max_size=3),
       st.lists(st.tuples(st.integers(0, 3), coeffs), max_size=3))
def test_ring_axioms_ore(ta, tb, tc):
    p = Presentation([[1, 0]], ds=[[1, Fraction(-2, 3)]])
    u, v, w = (p.element({(k,): AlgebraElement(c) for k, c in t}) for t in (ta, tb, tc))
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


def test_str_is_deglex_ordered(ex1):
    f = ex1.element({(0, 2): elem(1, 0), (1, 0): elem(2, 2), (0, 0): elem(3, 3)})
    assert str(f) == "[3, 3] + [2, 2]*x1 + [1, 0]*x2^2"
    keys = [deglex_key(a) for a, _ in f.sorted_terms()]
    assert keys == sorted(keys)
