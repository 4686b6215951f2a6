import json
import random

import pytest
import sympy

from truncgroup import (DiagonalSpec, NonIntegerCoefficient, ScalarDomain, check_periodic,
                        c_sequence, growth_diagnostic, relation_table)
from truncgroup.reference import C_SEQUENCE, RELATIONS
from truncgroup.scalars import rational
from truncgroup.series import TruncatedSeries
from truncgroup.symbolic import format_growth, omega_name


def _sympy_power_residual(p, rows, degree):
    """Coefficients of phi^p - x through x^degree for the n = 1 series whose forced
    coefficients are ``rows`` (sympy expressions in w and a_j), reduced mod Phi_p(w).
    Computed with sympy only, independently of the package."""
    x, w = sympy.symbols("x w")
    phi = w * x
    for d in range(2, degree + 1):
        phi += (rows[d] if d in rows else sympy.Symbol(f"a{d}")) * x ** d

    def trunc(e):
        e = sympy.expand(e)
        return sum(e.coeff(x, k) * x ** k for k in range(1, degree + 1))

    def comp(f, g):
        out, gk = 0, 1
        for k in range(1, degree + 1):
            gk = trunc(gk * g)
            out += f.coeff(x, k) * gk
        return trunc(out)

    f = trunc(phi)
    cur = f
    for _ in range(p - 1):
        cur = comp(f, cur)
    mod = sympy.Poly(sympy.cyclotomic_poly(p, w), w)
    res = []
    for k in range(1, degree + 1):
        c = sympy.expand(cur.coeff(x, k) - (1 if k == 1 else 0))
        res.append(sympy.expand(sympy.rem(sympy.Poly(c, w), mod).as_expr()) if c != 0 else 0)
    return res


def _to_sympy(text, p):
    name = omega_name(p)
    expr = text.replace("^", "**")
    return sympy.sympify(expr, locals={name: sympy.Symbol("w")})


def test_row_layout():
    for p, top in ((2, 13), (3, 10), (4, 9)):
        table = relation_table(p)
        assert table.max_degree == top
        assert set(table.rows) == {d for d in range(p + 1, top + 1) if d % p == 1}
        assert all(not (int(s[1:]) - 1) % p == 0 for s in table.symbols)


def test_p2_rows_match_reference():
    table = relation_table(2, 11)
    dom = ScalarDomain.symbolic(table.symbols, 2)
    for d, text in RELATIONS[2].items():
        assert table.rows[d] == dom.parse(text)


def test_p4_rows_match_reference():
    table = relation_table(4, 9)
    dom = ScalarDomain.symbolic(table.symbols, 4)
    for d, text in RELATIONS[4].items():
        assert table.rows[d] == dom.parse(text, omega_name="i")


def test_p3_first_row_matches_reference():
    table = relation_table(3, 4)
    dom = ScalarDomain.symbolic(table.symbols, 3)
    assert table.rows[4] == dom.parse(RELATIONS[3][4])


@pytest.mark.parametrize("p, degree", [(2, 7), (3, 7), (4, 5)])
def test_rows_make_series_periodic_independently(p, degree):
    table = relation_table(p, degree)
    name = omega_name(p)
    dom = ScalarDomain.symbolic(table.symbols, p)
    rows = {d: _to_sympy(dom.format(table.rows[d], name), p) for d in table.rows}
    assert all(r == 0 for r in _sympy_power_residual(p, rows, degree))


@pytest.mark.slow
def test_p3_degree10_row_is_periodic_independently():
    table = relation_table(3, 10)
    dom = ScalarDomain.symbolic(table.symbols, 3)
    rows = {d: _to_sympy(dom.format(table.rows[d]), 3) for d in table.rows}
    assert all(r == 0 for r in _sympy_power_residual(3, rows, 10))


def test_printed_p3_degree7_row_is_not_periodic():
    # substituting the published a7 row leaves a nonzero x^7 coefficient in phi^3
    rows = {d: _to_sympy(RELATIONS[3][d], 3) for d in (4, 7)}
    residual = _sympy_power_residual(3, rows, 7)
    assert all(r == 0 for r in residual[:6])
    assert residual[6] != 0
    # same with its one wrong-weight monomial a2^3*a3^2 read as a2^2*a3^2
    a2, a3 = sympy.symbols("a2 a3")
    rows[7] = rows[7].subs(a2 ** 3 * a3 ** 2, a2 ** 2 * a3 ** 2)
    residual = _sympy_power_residual(3, rows, 7)
    assert sympy.factor(residual[6]) == sympy.factor(a3 ** 2 * (21 * a3 - 11 * a2 ** 2))


def test_specialized_tables_are_periodic():
    rng = random.Random(7)
    for p, top in ((2, 9), (3, 8), (4, 9), (5, 7)):
        table = relation_table(p, top)
        dom = ScalarDomain.cyclotomic(p)
        vals = {s: dom.coerce(rational(rng.randint(-5, 5), rng.randint(1, 4))) for s in table.symbols}
        forced = table.specialize(vals)
        coeffs = {1: dom.field.omega}
        for d in range(2, top + 1):
            coeffs[d] = forced[d] if d in forced else vals[f"a{d}"]
        phi = TruncatedSeries.univariate(coeffs, top, dom)
        assert check_periodic(phi, p)


def test_p2_rows_have_integer_coefficients():
    table = relation_table(2)
    for poly in table.rows.values():
        for _, c in poly.items():
            assert c.is_rational() and c.to_rational().denominator == 1


def test_tables_are_deterministic():
    assert relation_table(3).to_text() == relation_table(3).to_text()
    assert relation_table(4).to_json() == relation_table(4).to_json()


def test_table_formats():
    table = relation_table(2, 7)
    text = table.to_text()
    assert "a3 = -a2^2" in text
    assert "a7 = -13*a2^6 + 18*a2^3*a4 - 4*a2*a6 - 2*a4^2" in text
    csv = table.to_csv().splitlines()
    assert csv[0] == "degree,expression"
    assert csv[1] == "3,-a2^2"
    doc = json.loads(table.to_json())
    assert doc["p"] == 2 and [r["degree"] for r in doc["rows"]] == [3, 5, 7]
    t4 = relation_table(4, 5).to_text()
    assert "i" in t4 and "w" not in t4.split("\n", 1)[1]


def test_c_sequence():
    assert c_sequence(6) == C_SEQUENCE
    assert c_sequence(1) == [-1]
    with pytest.raises(ValueError):
        c_sequence(0)


def test_c_sequence_matches_table_specialization():
    table = relation_table(2, 13)
    dom = ScalarDomain.rational()
    vals = {s: dom.zero for s in table.symbols}
    vals["a2"] = dom.one
    forced = table.specialize(vals)
    assert [forced[2 * k + 1].to_rational() for k in range(1, 7)] == c_sequence(6)


def test_non_integer_error_is_an_assertion():
    assert issubclass(NonIntegerCoefficient, AssertionError)


def test_growth_diagnostic():
    assert growth_diagnostic([-1]) == [(1, 1.0)]
    (_, r1), (_, r2) = growth_diagnostic([-1, 2])
    assert r1 == 1.0 and r2 == pytest.approx(2 ** 0.5)
    roots = [r for _, r in growth_diagnostic(C_SEQUENCE)]
    assert all(a < b for a, b in zip(roots, roots[1:]))
    assert format_growth(growth_diagnostic([-1])).startswith("# diagnostic")
    with pytest.raises(ValueError):
        growth_diagnostic([])
