"""Seeded random instances for property checks and the verification suites."""

from math import gcd

from .monomials import monomials_of_degree
from .series import HomogeneousPart, SquareMatrix, TruncatedSeries


def random_scalar(rng, domain, lo=-3, hi=3):
    if domain.kind == "rational":
        return domain.coerce(rng.randint(lo, hi))
    field = domain.field
    return domain.coerce(field.element([rng.randint(lo, hi) for _ in range(field.degree)]))


def random_matrix(rng, n, domain, lo=-3, hi=3):
    """A random invertible n x n matrix with entries in [lo, hi]."""
    while True:
        a = SquareMatrix([[random_scalar(rng, domain, lo, hi) for _ in range(n)]
                          for _ in range(n)], domain)
        if a.det():
            return a


def random_part(rng, n, d, domain, lo=-3, hi=3, density=1.0):
    terms = []
    for i in range(n):
        for exps in monomials_of_degree(n, d):
            if rng.random() < density:
                terms.append((i, exps, random_scalar(rng, domain, lo, hi)))
    return HomogeneousPart.from_terms(n, d, terms)


def random_series(rng, n, k, domain, lo=-3, hi=3, degrees=None, density=1.0, linear=None):
    """Random parts in ``degrees`` (default 2..k) on top of ``linear`` (default random)."""
    if linear is None:
        linear = random_matrix(rng, n, domain, lo, hi)
    parts = {1: linear.to_part()}
    for d in (range(2, k + 1) if degrees is None else degrees):
        if 2 <= d <= k:
            parts[d] = random_part(rng, n, d, domain, lo, hi, density)
    return TruncatedSeries(n, k, domain, parts)


def random_unipotent(rng, n, k, domain, degrees=None, lo=-3, hi=3, density=1.0):
    """Identity linear part plus random parts in ``degrees``."""
    return random_series(rng, n, k, domain, lo, hi, degrees, density,
                         linear=SquareMatrix.identity(n, domain))


def random_lambda(rng, n, p):
    while True:
        lam = tuple(rng.randrange(p) for _ in range(n))
        g = p
        for x in lam:
            g = gcd(g, x)
        if g == 1:
            return lam
