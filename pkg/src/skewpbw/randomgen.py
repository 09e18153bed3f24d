"""Random presentations that actually define PBW extensions.

Arbitrary data does not: the permutations must commute (compare the
``x_i x_j`` coefficients of ``(x_j x_i) r``), for three generators the
``c_ij`` must satisfy a cocycle identity, and derivations must be compatible
with the twisting.  The families below satisfy those identities by
construction; every generated presentation is still run through the
associativity check before it is returned.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .funalg import AlgebraElement, Permutation, induced_automorphism
from .pbw_core import Presentation, Remainder, associativity_check

__all__ = [
    "random_commuting_permutations",
    "random_quasi_commutative",
    "random_general",
    "random_nonzero",
]


def random_nonzero(rng):
    num = rng.choice([-3, -2, -1, 1, 2, 3, 4, 5])
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def _random_vector(rng, m, nonzero=True):
    if nonzero:
        return AlgebraElement(random_nonzero(rng) for _ in range(m))
    return AlgebraElement(rng.choice([0, 0, random_nonzero(rng)]) for _ in range(m))


def random_commuting_permutations(rng, m, n):
    """``n`` pairwise commuting permutations of ``0..m-1``.

    The points are split into random blocks, each carrying a cycle; every
    permutation is a product of powers of those cycles.
    """
    points = list(range(m))
    rng.shuffle(points)
    blocks = []
    while points:
        size = rng.randint(1, len(points))
        blocks.append(points[:size])
        points = points[size:]
    cycles = [Permutation.cycle(m, b) for b in blocks]
    taus = []
    for _ in range(n):
        t = Permutation.identity(m)
        for cyc, b in zip(cycles, blocks):
            t = t * cyc ** rng.randrange(len(b))
        taus.append(t)
    return taus


def _invariant_vector(rng, m, perm):
    """Nowhere-zero vector constant on the cycles of ``perm``."""
    vals = [None] * m
    for cyc in perm.cycles():
        v = random_nonzero(rng)
        for w in cyc:
            vals[w] = v
    return AlgebraElement(vals)


def random_quasi_commutative(rng, max_m=5, max_n=3):
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    taus = random_commuting_permutations(rng, m, n)
    c = {}
    for i in range(n):
        for j in range(i + 1, n):
            if n == 3:
                (k,) = {0, 1, 2} - {i, j}
                c[i, j] = _invariant_vector(rng, m, taus[k])
            else:
                c[i, j] = _random_vector(rng, m)
    return Presentation(taus, c=c, strict=True)


def _nontrivial_perm(rng, m):
    while True:
        image = list(range(m))
        rng.shuffle(image)
        t = Permutation(image)
        if not t.is_identity():
            return t


def _fixed_point_remainder(rng, m, n, perm):
    fixed = perm.fixed_points()
    const = AlgebraElement(random_nonzero(rng) if w in fixed and rng.random() < 0.5 else 0 for w in range(m))
    return Remainder(const, tuple(AlgebraElement.zero(m) for _ in range(n)))


def random_general(rng, max_m=5):
    """A presentation with at least one nonzero derivation.

    Families:

    0. one generator: any nontrivial ``tau`` with any ``d`` (an Ore extension);
    1. two generators, ``delta_2 = 0``, ``c = sigma_2(d_1) / d_1``;
    2. two generators, ``delta_1 = 0``, ``c = d_2 / sigma_1(d_2)``;
    3. two generators sharing ``tau``, ``c = 1``, both ``d_i`` constant on cycles.

    The two-generator families also get a constant remainder supported on
    the fixed points of ``tau_1 tau_2``.
    """
    while True:
        m = rng.randint(2, max_m)
        family = rng.randrange(4)
        if family == 0:
            tau = _nontrivial_perm(rng, m)
            p = Presentation([tau], ds=[_random_vector(rng, m)], strict=True)
        elif family in (1, 2):
            t = _nontrivial_perm(rng, m)
            k = rng.randrange(t.order())
            other = t**k
            d = _random_vector(rng, m)
            if family == 1:
                taus = [t, other]
                c = induced_automorphism(other, d) / d
                ds = [d, None]
            else:
                taus = [other, t]
                c = d / induced_automorphism(other, d)
                ds = [None, d]
            rem = _fixed_point_remainder(rng, m, 2, taus[0] * taus[1])
            p = Presentation(taus, ds=ds, c={(0, 1): c}, r={(0, 1): rem}, strict=True)
        else:
            t = _nontrivial_perm(rng, m)
            ds = [_invariant_vector(rng, m, t), _invariant_vector(rng, m, t)]
            rem = _fixed_point_remainder(rng, m, 2, t * t)
            p = Presentation([t, t], ds=ds, r={(0, 1): rem}, strict=True)
        if not all(d.is_zero() for d in p.deltas):
            return p


def presentation_stream(seed, count, maker, **kwargs):
    rng = random.Random(seed)
    return [maker(rng, **kwargs) for _ in range(count)]


def passes_associativity(p, depth=3):
    return associativity_check(p, depth) is None
