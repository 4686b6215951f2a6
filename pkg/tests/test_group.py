import pytest

from truncgroup import (GroupElement, NotPeriodicWithinBound, PreconditionFailed, ScalarDomain,
                        SingularMatrix, SquareMatrix, TheoremViolation, TruncatedSeries, compose,
                        dim_G, invert, one_sided_inverse_symmetry_check, order_of, power,
                        t_invariant)
from truncgroup import oracles, samples
from truncgroup.periodic import DiagonalSpec
from truncgroup.reference import QUADRATIC_INVERSE

from conftest import series_1d


def test_group_element_requires_invertible_linear_part(QQ):
    with pytest.raises(SingularMatrix):
        GroupElement(series_1d({2: 1}, 3, QQ))
    GroupElement(series_1d({1: 3, 2: 1}, 3, QQ))


def test_invert_identity(QQ):
    ident = GroupElement.identity(2, 5, QQ)
    assert invert(ident).is_identity()


def test_invert_quadratic_symbolic():
    dom = ScalarDomain.symbolic(["a"])
    got = invert(series_1d({1: 1, 2: "a"}, 6, dom)).series
    assert got == series_1d(QUADRATIC_INVERSE, 6, dom)


def test_invert_quadratic_catalan(QQ):
    # with a = -1 the inverse of x - x^2 has Catalan coefficients
    got = invert(series_1d({1: 1, 2: -1}, 9, QQ)).series
    assert [got.coefficient(0, (d,)) for d in range(1, 10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@pytest.mark.parametrize("p", [None, 4])
def test_invert_round_trip_and_oracle(rng, p):
    dom = ScalarDomain.rational() if p is None else ScalarDomain.cyclotomic(p)
    for _ in range(12):
        n, k = rng.randint(1, 3), rng.randint(1, 6)
        phi = GroupElement(samples.random_series(rng, n, k, dom, density=0.7))
        psi = invert(phi)
        assert (phi * psi).is_identity()
        assert (psi * phi).is_identity()
        assert psi.series.linear_part() == phi.series.linear_part().inverse()
        assert oracles.undetermined_inverse(phi.series) == psi.series


def test_invert_n2_k6_against_linear_system(rng, QQ):
    phi = samples.random_series(rng, 2, 6, QQ)
    assert oracles.undetermined_inverse(phi) == invert(phi).series


def test_power_basics(rng, QQ):
    phi = GroupElement(samples.random_series(rng, 2, 5, QQ))
    assert power(phi, 0).is_identity()
    assert power(phi, 1) == phi
    assert power(phi, 3).series == oracles.naive_power(phi.series, 3)
    assert (power(phi, -2) * power(phi, 2)).is_identity()
    assert power(phi, -1) == invert(phi)


def test_power_of_top_degree_element(rng, QQ):
    for _ in range(10):
        n, k = rng.randint(1, 3), rng.randint(2, 7)
        phi = samples.random_unipotent(rng, n, k, QQ, (k,))
        top = TruncatedSeries(n, k, QQ, {k: phi.part(k)})
        for m in range(0, 5):
            assert power(phi, m).series == TruncatedSeries.identity(n, k, QQ) + top.scale(m)


def test_dims():
    for n in (1, 2, 3):
        assert dim_G(1, 0, n) == n * n
    for k in range(1, 8):
        for m in range(k + 1):
            assert dim_G(k, m, 1) == k - m
    assert dim_G(2, 0, 2) == 10
    # independent count: number of (component, monomial) slots in degrees m+1..k
    from truncgroup.monomials import monomials_of_degree
    assert dim_G(5, 2, 3) == 3 * sum(len(monomials_of_degree(3, d)) for d in range(3, 6))


def test_order_examples(rng):
    q = ScalarDomain.rational()
    assert order_of(series_1d({1: -1}, 4, q)) == 2
    assert order_of(TruncatedSeries.identity(2, 3, q)) == 1
    with pytest.raises(NotPeriodicWithinBound) as info:
        order_of(series_1d({1: 1, 2: 1}, 4, q))
    assert info.value.reason == "series"
    with pytest.raises(NotPeriodicWithinBound) as info:
        order_of(series_1d({1: 2}, 4, q), bound=50)
    assert info.value.reason == "matrix"
    c3 = ScalarDomain.cyclotomic(3)
    d = GroupElement(DiagonalSpec(3, (1, 2)).matrix(c3).to_series(5))
    psi = GroupElement(samples.random_series(rng, 2, 5, c3, -2, 2))
    phi = invert(psi) * d * psi
    assert order_of(phi) == 3
    assert power(phi, 3).is_identity()


def test_order_bound_is_respected():
    c5 = ScalarDomain.cyclotomic(5)
    phi = series_1d({1: c5.field.omega}, 3, c5)
    assert order_of(phi, bound=5) == 5
    with pytest.raises(NotPeriodicWithinBound):
        order_of(phi, bound=4)


def test_theorem_violation_is_an_assertion():
    assert issubclass(TheoremViolation, AssertionError)


def test_commutativity_of_high_subgroups(rng, QQ):
    for _ in range(25):
        k = rng.randint(2, 8)
        m = rng.randint((k + 1) // 2, k - 1)
        n = rng.randint(1, 3)
        phi = samples.random_unipotent(rng, n, k, QQ, range(m + 1, k + 1))
        psi = samples.random_unipotent(rng, n, k, QQ, range(m + 1, k + 1))
        assert compose(phi, psi) == compose(psi, phi)


def test_low_subgroup_is_not_commutative(QQ):
    # for n = 1, G_(3,1) is still abelian: both products are x + (a+c)x^2 + (b+d+2ac)x^3
    phi = series_1d({1: 1, 2: 1, 3: 4}, 3, QQ)
    psi = series_1d({1: 1, 2: 2, 3: 1}, 3, QQ)
    assert compose(phi, psi) == compose(psi, phi)
    # for n = 2 it is not
    a = TruncatedSeries.from_terms(2, 3, QQ, [(0, (1, 0), 1), (1, (0, 1), 1), (0, (0, 2), 1)])
    b = TruncatedSeries.from_terms(2, 3, QQ, [(0, (1, 0), 1), (1, (0, 1), 1), (1, (2, 0), 1)])
    assert compose(a, b) != compose(b, a)


def test_one_sided_inverse_symmetry(rng, QQ):
    ident = TruncatedSeries.identity(2, 4, QQ)
    assert one_sided_inverse_symmetry_check(ident, ident, 3)
    for _ in range(15):
        n, k = rng.randint(1, 3), rng.randint(1, 5)
        phi = samples.random_unipotent(rng, n, k + 1, QQ)
        psi = invert(phi).series.truncate(k).with_order(k + 1)
        psi = psi.with_part(k + 1, samples.random_part(rng, n, k + 1, QQ))
        assert one_sided_inverse_symmetry_check(phi, psi, k)
    phi = samples.random_unipotent(rng, 2, 4, QQ)
    with pytest.raises(PreconditionFailed):
        one_sided_inverse_symmetry_check(phi, phi, 3)


def test_t_invariant_under_inversion(rng, QQ):
    for _ in range(15):
        n, s = rng.randint(1, 3), rng.randint(1, 3)
        k = rng.randint(s + 1, 8)
        phi = samples.random_series(rng, n, k, QQ, degrees=range(1 + s, k + 1, s))
        assert t_invariant(phi) == t_invariant(invert(phi).series)
