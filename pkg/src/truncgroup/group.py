"""G_k(n, K): truncated series with invertible linear part under composition."""

from math import comb

from .errors import NotPeriodicWithinBound, PreconditionFailed, TheoremViolation
from .series import HomogeneousPart, SquareMatrix, Substituter, TruncatedSeries, compose


class GroupElement:
    """A truncated series whose linear part is invertible.

    The inverse of the linear part is computed on construction; a singular
    linear part raises :class:`~truncgroup.errors.SingularMatrix`.
    """

    __slots__ = ("series", "linear", "_linear_inverse")

    def __init__(self, series):
        if isinstance(series, GroupElement):
            series = series.series
        self.series = series
        self.linear = series.linear_part()
        self._linear_inverse = self.linear.inverse()

    @classmethod
    def identity(cls, n, order, domain):
        return cls(TruncatedSeries.identity(n, order, domain))

    @property
    def n(self):
        return self.series.n

    @property
    def order(self):
        return self.series.order

    @property
    def domain(self):
        return self.series.domain

    def part(self, k):
        return self.series.part(k)

    def is_identity(self):
        return self.series.is_identity()

    def truncate(self, m):
        return GroupElement(self.series.truncate(m))

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(compose(self.series, other.series))

    def __pow__(self, m):
        return power(self, m)

    def inverse(self):
        return invert(self)

    def __eq__(self, other):
        if isinstance(other, GroupElement):
            return self.series == other.series
        if isinstance(other, TruncatedSeries):
            return self.series == other
        return NotImplemented

    def __repr__(self):
        return f"GroupElement({self.series!r})"

    def __str__(self):
        return str(self.series)


def _as_element(phi):
    return phi if isinstance(phi, GroupElement) else GroupElement(phi)


def invert(phi):
    """Inverse by the degree-by-degree recurrence.

    psi_1 = A^-1 with A = phi_1, and psi_{d} = -A^-1 (phi(psi_{<d}))_{d}.
    Only the degree-d slice of phi(psi_{<d}) is evaluated at each step; the
    substitution cache is shared across steps.
    """
    phi = _as_element(phi)
    s = phi.series
    n, k = s.n, s.order
    a_inv = phi._linear_inverse
    sub = Substituter(n)
    parts = {1: a_inv.to_part()}
    sub.push(parts[1].components)
    phi_parts = s.parts()
    for d in range(2, k + 1):
        rest = sub.apply(phi_parts, d, 2, d)
        comps = [{kk: -v for kk, v in c.items()} for c in a_inv.apply(rest)]
        parts[d] = HomogeneousPart(n, d, comps)
        sub.push(parts[d].components)
    return GroupElement(TruncatedSeries(n, k, s.domain, parts))


def power(phi, m):
    """phi^m by left-to-right iterated composition; negative m inverts first."""
    phi = _as_element(phi)
    if m < 0:
        return power(invert(phi), -m)
    if m == 0:
        return GroupElement.identity(phi.n, phi.order, phi.domain)
    result = phi.series
    for _ in range(m - 1):
        result = compose(result, phi.series)
    return GroupElement(result)


def matrix_order(a, bound=1000):
    """Smallest t <= bound with a^t = I, or None."""
    cur = a
    for t in range(1, bound + 1):
        if cur.is_identity():
            return t
        cur = cur @ a
    return None


def order_of(phi, bound=1000):
    """Order of phi in G_k(n, K) over a characteristic-0 domain.

    The order t of the linear part is found first; phi is then periodic iff
    phi^t = id mod S_k, in which case its order is t.  Otherwise
    :class:`NotPeriodicWithinBound` is raised with ``reason`` "matrix" (no
    t <= bound) or "series" (phi^t != id, so phi has infinite order).
    """
    phi = _as_element(phi)
    t = matrix_order(phi.linear, bound)
    if t is None:
        raise NotPeriodicWithinBound(f"linear part has no order <= {bound}", reason="matrix")
    chi = power(phi, t)
    if chi.is_identity():
        return t
    # chi is unipotent; its lowest nonlinear part r must satisfy (chi^2)_r = 2 chi_r,
    # which is what rules out any finite order in characteristic 0.
    nonlinear = [d for d in chi.series.degrees() if d >= 2]
    if not chi.linear.is_identity() or not nonlinear:
        raise TheoremViolation("phi^t has identity linear part but is not unipotent")
    r = nonlinear[0]
    twice = power(chi, 2).part(r)
    if twice != chi.part(r).scale(chi.domain.coerce(2)):
        raise TheoremViolation(f"(chi^2)_{r} != 2 chi_{r} for unipotent chi")
    raise NotPeriodicWithinBound(
        f"linear part has order {t} but phi^{t} != id; phi is not periodic", reason="series")


def one_sided_inverse_symmetry_check(phi, psi, k):
    """Check (phi psi)_{k+1} == (psi phi)_{k+1} for mutually inverse phi, psi mod S_k."""
    phi, psi = _as_element(phi), _as_element(psi)
    if not (phi.linear.is_identity() and psi.linear.is_identity()):
        raise PreconditionFailed("both linear parts must be the identity")
    if min(phi.order, psi.order) < k + 1:
        raise PreconditionFailed(f"need truncation order >= {k + 1}")
    left = compose(phi.series, psi.series)
    right = compose(psi.series, phi.series)
    if not (left.truncate(k).is_identity() and right.truncate(k).is_identity()):
        raise PreconditionFailed(f"phi and psi are not mutually inverse mod S_{k}")
    return left.part(k + 1) == right.part(k + 1)


def dim_G(k, m, n):
    """Dimension over K of G_{k,m}(n, K); m = 0 gives G_k(n, K) itself."""
    if not 0 <= m <= k or n < 1:
        raise ValueError("need 0 <= m <= k and n >= 1")
    return n * sum(comb(n + i - 1, i) for i in range(m + 1, k + 1))


def linear_element(matrix, order):
    return GroupElement(matrix.to_series(order))


__all__ = ["GroupElement", "invert", "power", "order_of", "matrix_order",
           "one_sided_inverse_symmetry_check", "dim_G", "linear_element", "SquareMatrix"]
