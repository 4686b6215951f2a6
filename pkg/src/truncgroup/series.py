"""Truncated series in K[[X]]^n modulo S_k, with composition and the linear part.

Homogeneous parts store one sparse ``dict`` per component, keyed by packed
monomials (see :mod:`truncgroup.monomials`).  Zero coefficients and zero parts
are never stored.
"""

import math

from . import kernels
from .errors import (DegreeOutOfRange, DimensionMismatch, DivisionByNonUnit,
                     DomainMismatch, SingularMatrix)
from .monomials import graded_lex_key, pack, unit, unpack


class HomogeneousPart:
    """A vector of n homogeneous polynomials of one degree."""

    __slots__ = ("n", "degree", "components")

    def __init__(self, n, degree, components):
        if len(components) != n:
            raise DimensionMismatch(f"expected {n} components, got {len(components)}")
        self.n = n
        self.degree = degree
        self.components = tuple(kernels.pruned(c) for c in components)

    @classmethod
    def zero(cls, n, degree):
        return cls(n, degree, [{} for _ in range(n)])

    @classmethod
    def from_terms(cls, n, degree, terms, domain=None):
        """Build from ``(component, exponents, coeff)`` triples, component 0-based."""
        comps = [{} for _ in range(n)]
        for i, exps, c in terms:
            if len(exps) != n:
                raise DimensionMismatch(f"monomial {exps} has wrong length for n={n}")
            if sum(exps) != degree:
                raise DegreeOutOfRange(f"monomial {exps} is not of degree {degree}")
            if domain is not None:
                c = domain.parse(c) if isinstance(c, str) else domain.coerce(c)
            k = pack(exps)
            comps[i][k] = comps[i][k] + c if k in comps[i] else c
        return cls(n, degree, comps)

    def is_zero(self):
        return not any(self.components)

    def __bool__(self):
        return not self.is_zero()

    def terms(self):
        """``(component, exponents, coeff)`` in canonical order."""
        out = []
        for i, comp in enumerate(self.components):
            items = [(unpack(k, self.n), v) for k, v in comp.items()]
            items.sort(key=lambda kv: graded_lex_key(kv[0]))
            out.extend((i, e, v) for e, v in items)
        return out

    def coefficient(self, i, exps, default=0):
        return self.components[i].get(pack(exps), default)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPart):
            return NotImplemented
        return (self.n == other.n and self.degree == other.degree
                and self.components == other.components)

    def __add__(self, other):
        self._check(other)
        return HomogeneousPart(self.n, self.degree, [
            kernels.add_into(dict(a), b) for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return HomogeneousPart(self.n, self.degree,
                               [{k: -v for k, v in c.items()} for c in self.components])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HomogeneousPart(self.n, self.degree,
                               [{k: c * v for k, v in comp.items()} for comp in self.components])

    def _check(self, other):
        if self.n != other.n or self.degree != other.degree:
            raise DimensionMismatch("homogeneous parts of different shape")

    def __repr__(self):
        return f"HomogeneousPart(n={self.n}, degree={self.degree}, terms={len(self.terms())})"


class Substituter:
    """Evaluates monomials ``x^alpha`` at a series ``chi`` one degree slice at a time.

    Slices of ``chi`` are appended with :meth:`push`.  Slice ``d`` of
    ``chi^alpha`` with ``|alpha| >= 2`` only reads slices of ``chi`` below
    ``d``, so it may be requested before slice ``d`` itself is known; cached
    values never go stale.
    """

    def __init__(self, n):
        self.n = n
        self.chi = [None]
        self._memo = {}
        self._split = {}

    @property
    def known(self):
        return len(self.chi) - 1

    def push(self, comps):
        self.chi.append(tuple(comps))

    def _decompose(self, key):
        info = self._split.get(key)
        if info is None:
            exps = unpack(key, self.n)
            j = next(i for i, e in enumerate(exps) if e)
            info = (sum(exps), key - unit(j), j)
            self._split[key] = info
        return info

    def value(self, key, d):
        """Slice ``d`` of ``chi^alpha`` (a sparse dict; do not mutate)."""
        s, prev, j = self._decompose(key)
        if s == 1:
            if d > self.known:
                raise DegreeOutOfRange(f"slice {d} of the inner series is not known yet")
            return self.chi[d][j]
        if d < s:
            return {}
        memo_key = (key, d)
        out = self._memo.get(memo_key)
        if out is None:
            out = {}
            for a in range(s - 1, d):
                left = self.value(prev, a)
                if left:
                    right = self.chi[d - a][j]
                    if right:
                        kernels.mul_into(out, left, right)
            out = kernels.pruned(out)
            self._memo[memo_key] = out
        return out

    def apply(self, parts, d, smin=1, smax=None):
        """Slice ``d`` of ``sum_s parts[s](chi)`` over degrees ``smin <= s <= smax``."""
        smax = d if smax is None else smax
        acc = [{} for _ in range(self.n)]
        for s in range(smin, smax + 1):
            part = parts.get(s)
            if part is None:
                continue
            for i, comp in enumerate(part.components):
                target = acc[i]
                for key, c in comp.items():
                    v = self.value(key, d)
                    if v:
                        kernels.axpy_into(target, v, c)
        return [kernels.pruned(a) for a in acc]


class TruncatedSeries:
    """An element of K[[X]]^n mod S_k with no constant term.

    ``parts`` maps degree (1..order) to a nonzero :class:`HomogeneousPart`.
    Binary operations truncate to the smaller order.
    """

    __slots__ = ("n", "order", "domain", "_parts")

    def __init__(self, n, order, domain, parts=None):
        if order < 1:
            raise DegreeOutOfRange("truncation order must be >= 1")
        self.n = n
        self.order = order
        self.domain = domain
        self._parts = {}
        for d, part in (parts or {}).items():
            if d < 1 or d > order:
                continue
            if part.n != n or part.degree != d:
                raise DimensionMismatch(f"part of degree {part.degree} stored at {d}")
            if not part.is_zero():
                self._parts[d] = part

    # construction ------------------------------------------------------------

    @classmethod
    def zero(cls, n, order, domain):
        return cls(n, order, domain)

    @classmethod
    def identity(cls, n, order, domain):
        return SquareMatrix.identity(n, domain).to_series(order)

    @classmethod
    def from_terms(cls, n, order, domain, terms):
        """Build from ``(component, exponents, coeff)`` triples (component 0-based).

        Coefficients may be scalars or text.  Terms above ``order`` are dropped;
        constant terms are rejected.
        """
        by_degree = {}
        for i, exps, c in terms:
            d = sum(exps)
            if d == 0:
                raise DegreeOutOfRange("series must have no constant term")
            if not 0 <= i < n:
                raise DimensionMismatch(f"component {i} out of range for n={n}")
            by_degree.setdefault(d, []).append((i, tuple(exps), c))
        parts = {d: HomogeneousPart.from_terms(n, d, ts, domain)
                 for d, ts in by_degree.items() if d <= order}
        return cls(n, order, domain, parts)

    @classmethod
    def univariate(cls, coeffs, order, domain):
        """n = 1 series from ``{degree: coeff}``."""
        return cls.from_terms(1, order, domain, [(0, (d,), c) for d, c in coeffs.items()])

    # access ------------------------------------------------------------------

    def part(self, k):
        """The degree-k homogeneous part (a zero part when absent)."""
        if not 1 <= k <= self.order:
            raise DegreeOutOfRange(f"degree {k} outside 1..{self.order}")
        return self._parts.get(k) or HomogeneousPart.zero(self.n, k)

    def parts(self):
        return dict(self._parts)

    def degrees(self):
        return sorted(self._parts)

    def terms(self):
        out = []
        for d in sorted(self._parts):
            out.extend(self._parts[d].terms())
        return out

    def coefficient(self, i, exps):
        d = sum(exps)
        if d > self.order or d < 1:
            raise DegreeOutOfRange(f"degree {d} outside 1..{self.order}")
        part = self._parts.get(d)
        return part.coefficient(i, exps, self.domain.zero) if part else self.domain.zero

    def linear_part(self):
        return SquareMatrix.from_part(self.part(1), self.domain)

    def truncate(self, m):
        """phi_{<=m}, an element of order m."""
        if not 1 <= m <= self.order:
            raise DegreeOutOfRange(f"cannot truncate order {self.order} to {m}")
        return TruncatedSeries(self.n, m, self.domain, self._parts)

    def with_order(self, m):
        """Same parts, reinterpreted at order m (parts above m are dropped)."""
        return TruncatedSeries(self.n, m, self.domain, self._parts)

    def with_part(self, k, part):
        parts = dict(self._parts)
        parts[k] = part
        return TruncatedSeries(self.n, self.order, self.domain, parts)

    def is_identity(self):
        return self._parts.keys() <= {1} and self.linear_part().is_identity()

    # arithmetic --------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n == other.n and self.order == other.order
                and self.domain == other.domain and self._parts == other._parts)

    def __add__(self, other):
        self._check(other)
        m = min(self.order, other.order)
        parts = {}
        for d in range(1, m + 1):
            a, b = self._parts.get(d), other._parts.get(d)
            if a is not None and b is not None:
                parts[d] = a + b
            elif a is not None or b is not None:
                parts[d] = a if a is not None else b
        return TruncatedSeries(self.n, m, self.domain, parts)

    def __neg__(self):
        return TruncatedSeries(self.n, self.order, self.domain,
                               {d: -p for d, p in self._parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.domain.coerce(c)
        return TruncatedSeries(self.n, self.order, self.domain,
                               {d: p.scale(c) for d, p in self._parts.items()})

    def compose(self, other):
        """``self o other`` truncated to the smaller order."""
        return compose(self, other)

    __call__ = compose

    def __repr__(self):
        return f"TruncatedSeries(n={self.n}, order={self.order}, domain={self.domain}, degrees={self.degrees()})"

    def __str__(self):
        return format_series(self)


def compose(phi, psi):
    """Truncated composition ``phi o psi``.

    Output degree ``d`` collects ``phi_s(psi)`` for ``s <= d``; a degree-s
    monomial never reads parts of ``psi`` above ``d + 1 - s``.  Monomial
    values ``psi^alpha`` are memoized across components and degrees.
    """
    phi._check(psi)
    m = min(phi.order, psi.order)
    n = phi.n
    sub = Substituter(n)
    for d in range(1, m + 1):
        p = psi._parts.get(d)
        sub.push(p.components if p is not None else [{}] * n)
    parts = {}
    for d in range(1, m + 1):
        parts[d] = HomogeneousPart(n, d, sub.apply(phi._parts, d))
    return TruncatedSeries(n, m, phi.domain, parts)


def add(phi, psi):
    return phi + psi


def scale(c, phi):
    return phi.scale(c)


def part_of(phi, k):
    return phi.part(k)


def truncate(phi, m):
    return phi.truncate(m)


def t_invariant(phi):
    """gcd of ``k - 1`` over the nonzero parts of degree k >= 2; 0 when phi is linear."""
    g = 0
    for d in phi.degrees():
        if d >= 2:
            g = math.gcd(g, d - 1)
    return g


def format_series(phi, omega_name="w"):
    names = ["x"] if phi.n == 1 else [f"x{j + 1}" for j in range(phi.n)]
    comps = [[] for _ in range(phi.n)]
    for i, exps, c in phi.terms():
        mono = "*".join(nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, exps) if e)
        comps[i].append(f"({phi.domain.format(c, omega_name)})*{mono}")
    body = [" + ".join(c) if c else "0" for c in comps]
    text = body[0] if phi.n == 1 else "(" + ", ".join(body) + ")"
    return f"{text} + O({phi.order + 1})"


class SquareMatrix:
    """An n x n matrix over a scalar domain; the jacobian of a degree-1 part.

    Row i holds the coefficients of x_1..x_n in component i.
    """

    __slots__ = ("n", "rows", "domain")

    def __init__(self, rows, domain):
        rows = tuple(tuple(domain.coerce(x) if not isinstance(x, str) else domain.parse(x)
                           for x in row) for row in rows)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix is not square")
        self.n = len(rows)
        self.rows = rows
        self.domain = domain

    @classmethod
    def identity(cls, n, domain):
        one, zero = domain.one, domain.zero
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], domain)

    @classmethod
    def diagonal(cls, entries, domain):
        n = len(entries)
        zero = domain.zero
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], domain)

    @classmethod
    def from_part(cls, part, domain):
        """Jacobian map: degree-1 part -> matrix."""
        if part.degree != 1:
            raise DegreeOutOfRange("only a degree-1 part is a matrix")
        n = part.n
        zero = domain.zero
        return cls([[part.components[i].get(unit(j), zero) for j in range(n)]
                    for i in range(n)], domain)

    def to_part(self):
        comps = [{unit(j): self.rows[i][j] for j in range(self.n) if self.rows[i][j]}
                 for i in range(self.n)]
        return HomogeneousPart(self.n, 1, comps)

    def to_series(self, order):
        return TruncatedSeries(self.n, order, self.domain, {1: self.to_part()})

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other):
        if self.n != other.n:
            raise DimensionMismatch("matrix sizes differ")
        n, zero = self.n, self.domain.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return SquareMatrix._raw(out, self.domain, n)

    @classmethod
    def _raw(cls, rows, domain, n):
        self = object.__new__(cls)
        self.n, self.rows, self.domain = n, tuple(tuple(r) for r in rows), domain
        return self

    def is_identity(self):
        return all((x == 1) if i == j else (not x)
                   for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def __pow__(self, m):
        if m < 0:
            return self.inverse() ** (-m)
        result = SquareMatrix.identity(self.n, self.domain)
        for _ in range(m):
            result = result @ self
        return result

    def _eliminate(self):
        """Gauss-Jordan on [A | I] with first-invertible pivoting; returns (inverse, det)."""
        n, dom = self.n, self.domain
        a = [list(r) + [dom.one if i == j else dom.zero for j in range(n)]
             for i, r in enumerate(self.rows)]
        det = dom.one
        for col in range(n):
            piv = None
            for r in range(col, n):
                x = a[r][col]
                if x and dom.is_constant(x):
                    piv = r
                    break
            if piv is None:
                if any(a[r][col] for r in range(col, n)):
                    raise DivisionByNonUnit("no invertible pivot in column")
                raise SingularMatrix("matrix is singular")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv_p = dom.one / p
            a[col] = [x * inv_p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return SquareMatrix._raw([row[n:] for row in a], dom, n), det

    def inverse(self):
        return self._eliminate()[0]

    def det(self):
        try:
            return self._eliminate()[1]
        except SingularMatrix:
            return self.domain.zero

    def apply(self, comps):
        """Left action on a slice: component i becomes sum_j a_ij comps[j]."""
        out = []
        for row in self.rows:
            acc = {}
            for a, c in zip(row, comps):
                if a and c:
                    kernels.axpy_into(acc, c, a)
            out.append(kernels.pruned(acc))
        return out

    def __repr__(self):
        body = "; ".join(", ".join(self.domain.format(x) for x in r) for r in self.rows)
        return f"SquareMatrix([{body}])"


def matrix_invert(a):
    return a.inverse()
