"""Independent reference computations.

Nothing here uses the packed-key kernels or the substitution cache: series
are expanded as plain ``{exponent tuple: coeff}`` dicts, powers are computed
by repeated multiplication, and linear systems are solved by a separate
elimination routine.  These are the second route against which the fast
paths are checked.
"""

from .errors import SingularMatrix
from .monomials import monomials_of_degree
from .series import HomogeneousPart, TruncatedSeries


def _to_polys(series):
    polys = [{} for _ in range(series.n)]
    for i, exps, c in series.terms():
        polys[i][exps] = c
    return polys


def _mul(a, b, n, max_deg):
    out = {}
    bs = [(eb, sum(eb), cb) for eb, cb in b.items()]
    for ea, ca in a.items():
        room = max_deg - sum(ea)
        for eb, db, cb in bs:
            if db > room:
                continue
            e = tuple(map(int.__add__, ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def naive_compose(phi, psi):
    """phi o psi mod S_k by direct expansion, without memoization."""
    n, k = phi.n, min(phi.order, psi.order)
    outer = _to_polys(phi)
    inner = _to_polys(psi)
    result = [{} for _ in range(n)]
    for i in range(n):
        for exps, c in outer[i].items():
            if sum(exps) > k:
                continue
            term = {(0,) * n: c}
            for j, e in enumerate(exps):
                for _ in range(e):
                    term = _mul(term, inner[j], n, k)
            for e, v in term.items():
                result[i][e] = result[i].get(e, 0) + v
    terms = [(i, e, v) for i in range(n) for e, v in result[i].items() if v]
    return TruncatedSeries.from_terms(n, k, phi.domain, terms)


def naive_power(phi, m):
    out = phi
    for _ in range(m - 1):
        out = naive_compose(out, phi)
    return out


def solve_linear(matrix, rhs, domain):
    """Solve ``matrix @ x = rhs`` exactly (square, nonsingular) by row reduction."""
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrix("oracle system is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def _linear_substitution_matrix(linear_rows, n, d, domain):
    """Matrix of u -> u o A on degree-d polynomials, in the monomial basis."""
    basis = monomials_of_degree(n, d)
    index = {e: r for r, e in enumerate(basis)}
    lin = [{tuple(1 if t == l else 0 for t in range(n)): linear_rows[j][l]
            for l in range(n) if linear_rows[j][l]} for j in range(n)]
    cols = []
    for beta in basis:
        poly = {(0,) * n: domain.one}
        for j, e in enumerate(beta):
            for _ in range(e):
                poly = _mul(poly, lin[j], n, d)
        col = [domain.zero] * len(basis)
        for e, v in poly.items():
            col[index[e]] = v
        cols.append(col)
    return [list(r) for r in zip(*cols)], basis


def undetermined_inverse(phi):
    """Left inverse psi (psi o phi = id mod S_k) solved degree by degree.

    At degree d the unknown part u of psi enters (psi o phi)_d only through
    u o phi_1, so each component of u solves one square linear system whose
    right-hand side comes from :func:`naive_compose`.
    """
    n, k, dom = phi.n, phi.order, phi.domain
    linear_rows = phi.linear_part().rows
    psi = TruncatedSeries(n, k, dom)
    for d in range(1, k + 1):
        mat, basis = _linear_substitution_matrix(linear_rows, n, d, dom)
        current = naive_compose(psi.with_order(d), phi.with_order(d)) if d > 1 else None
        terms = []
        for i in range(n):
            rhs = []
            for e in basis:
                target = dom.one if (d == 1 and e[i] == 1) else dom.zero
                have = current.coefficient(i, e) if current is not None else dom.zero
                rhs.append(target - have)
            sol = solve_linear(mat, rhs, dom)
            terms.extend((i, e, v) for e, v in zip(basis, sol) if v)
        psi = psi.with_part(d, HomogeneousPart.from_terms(n, d, terms))
    return psi


def literal_resonance_sum(linear, u, p, domain):
    """sum_{i=0}^{p-1} A^i o u o A^(p-1-i) by explicit composition."""
    d = u.degree
    useries = TruncatedSeries(u.n, d, domain, {d: u})
    total = TruncatedSeries(u.n, d, domain)
    for i in range(p):
        left = (linear ** i).to_series(d)
        right = (linear ** (p - 1 - i)).to_series(d)
        total = total + naive_compose(naive_compose(left, useries), right)
    return total.part(d)


def literal_commutator_slice(linear, u, domain):
    """t(u) = A o u - u o A for a homogeneous u."""
    d = u.degree
    useries = TruncatedSeries(u.n, d, domain, {d: u})
    a = linear.to_series(d)
    return (naive_compose(a, useries) - naive_compose(useries, a)).part(d)
