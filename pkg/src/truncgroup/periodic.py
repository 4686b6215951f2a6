"""Periodic elements: checking, generation, and conjugation to the linear part.

Generators build phi one degree at a time.  A :class:`PowerTower` keeps the
degree slices of phi, phi^2, ..., phi^p up to date, so the p-th power at a new
degree costs one slice per level instead of p - 1 full compositions.
"""

from dataclasses import dataclass, field
from math import gcd

from .errors import (BadSeedDegree, NotPeriodicInput, ObstructionError,
                     PreconditionFailed, TheoremViolation)
from . import kernels
from .group import GroupElement, invert, power
from .monomials import monomials_of_degree, pack, unpack
from .scalars import ScalarDomain
from .series import (HomogeneousPart, SquareMatrix, Substituter, TruncatedSeries,
                     compose)


@dataclass(frozen=True)
class DiagonalSpec:
    """The linear part diag(w^lambda_1, ..., w^lambda_n) of exact order p."""

    p: int
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) % self.p for x in self.lam))
        if self.p < 2:
            raise ValueError("period must be >= 2")
        g = self.p
        for x in self.lam:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"lambda {self.lam} is not coprime to p={self.p}")

    @property
    def n(self):
        return len(self.lam)

    def weight(self, exps):
        """(lambda, alpha)."""
        return sum(l * e for l, e in zip(self.lam, exps))

    def is_resonant(self, i, exps):
        return (self.lam[i] - self.weight(exps)) % self.p == 0

    def omega(self, domain):
        return domain.root_of_unity(self.p)

    def matrix(self, domain):
        w = self.omega(domain)
        return SquareMatrix.diagonal([w ** l for l in self.lam], domain)


@dataclass
class ResonanceReport:
    """Slot classification at one degree.  ``obstruction`` is empty iff solvable."""

    degree: int
    resonant: frozenset
    forced: dict = field(default_factory=dict)
    obstruction: dict = field(default_factory=dict)


class PowerTower:
    """Degree slices of phi^m, m = 1..p, for a series phi fixed degree by degree.

    Call :meth:`pending` for the next degree d to get ((phi_{<d})^p)_d, then
    :meth:`fix` with the chosen phi_d; ``fix`` returns the true (phi^p)_d.
    """

    def __init__(self, linear, p):
        self.n = linear.n
        self.p = p
        self.linear = linear
        self.parts = {1: linear.to_part()}
        self.degree = 1
        # subs[m] evaluates monomials at phi^(m-1), for m = 2..p
        self.subs = {}
        power_m = linear
        for m in range(2, p + 1):
            sub = Substituter(self.n)
            sub.push(power_m.to_part().components)
            self.subs[m] = sub
            power_m = power_m @ linear
        self._base = None

    def pending(self):
        d = self.degree + 1
        base = {}
        prov = [{} for _ in range(self.n)]
        for m in range(2, self.p + 1):
            base[m] = self.subs[m].apply(self.parts, d, 2, d - 1)
            prov = _add_slices(base[m], self.linear.apply(prov))
        self._base = (d, base)
        return prov

    def fix(self, part):
        d = self.degree + 1
        if self._base is None or self._base[0] != d:
            self.pending()
        base = self._base[1]
        chi = part.components
        single = {d: part}
        for m in range(2, self.p + 1):
            sub = self.subs[m]
            top = sub.apply(single, d, d, d)
            nxt = _add_slices(_add_slices(base[m], self.linear.apply(chi)), top)
            sub.push(chi)
            chi = nxt
        self.parts[d] = part
        self.degree = d
        self._base = None
        return chi


def _add_slices(a, b):
    return [kernels.pruned(kernels.add_into(dict(x), y)) for x, y in zip(a, b)]


def check_periodic(phi, p):
    """True iff phi^p = id mod S_k and phi^d != id for every proper divisor d of p."""
    if p < 1:
        raise ValueError("p must be >= 1")
    s = phi.series if isinstance(phi, GroupElement) else phi
    cur = s
    for m in range(1, p + 1):
        if m == p:
            return cur.is_identity()
        if p % m == 0 and cur.is_identity():
            return False
        cur = compose(cur, s)
    return False


def resonance_operator_R(spec, u, domain):
    """Closed form of R(u) = sum_i phi_1^i u phi_1^(p-1-i) for phi_1 = diag(w^lambda).

    Slot (i, alpha) is multiplied by p w^-(lambda, alpha) when it is resonant
    and sent to 0 otherwise.
    """
    if u.degree < 2:
        raise ValueError("R is defined on degrees >= 2")
    w = spec.omega(domain)
    comps = []
    for i, comp in enumerate(u.components):
        out = {}
        for key, c in comp.items():
            exps = unpack(key, u.n)
            if spec.is_resonant(i, exps):
                out[key] = c * (w ** (-spec.weight(exps))) * spec.p
        comps.append(out)
    return HomogeneousPart(u.n, u.degree, comps)


def _seed_parts(seeds, n, domain):
    if seeds is None:
        return {}
    if isinstance(seeds, TruncatedSeries):
        seeds = seeds.parts()
    out = {}
    for d, part in seeds.items():
        if part.n != n:
            raise PreconditionFailed(f"seed part has n={part.n}, expected {n}")
        out[d] = HomogeneousPart(n, d, [{k: domain.coerce(v) for k, v in c.items()}
                                        for c in part.components])
    return out


def gen_periodic_scalar(p, n, seeds, order, domain=None):
    """A p-periodic series with linear part w id extending the given seeds.

    ``seeds`` maps degrees (never congruent to 1 mod p) to homogeneous parts;
    unseeded free degrees are zero.  Degree pk + 1 is forced to
    -(w/p) ((phi_{<=pk})^p)_{pk+1}.  (phi^p)_d = 0 is asserted at every degree,
    forced or not.
    """
    if p < 2:
        raise ValueError("period must be >= 2")
    domain = domain or ScalarDomain.cyclotomic(p)
    seeds = _seed_parts(seeds, n, domain)
    for d in seeds:
        if d < 2 or d > order:
            raise BadSeedDegree(f"seed degree {d} outside 2..{order}")
        if (d - 1) % p == 0:
            raise BadSeedDegree(f"degree {d} is forced (congruent to 1 mod {p})")
    w = domain.root_of_unity(p)
    tower = PowerTower(SquareMatrix.diagonal([w] * n, domain), p)
    factor = -w / domain.coerce(p)
    for d in range(2, order + 1):
        rhs = tower.pending()
        if (d - 1) % p == 0:
            part = HomogeneousPart(n, d, rhs).scale(factor)
        else:
            part = seeds.get(d) or HomogeneousPart.zero(n, d)
        residual = tower.fix(part)
        if any(residual):
            raise TheoremViolation(f"(phi^{p})_{d} != 0 after fixing degree {d}")
    return GroupElement(TruncatedSeries(n, order, domain, tower.parts))


def resonance_report(spec, rhs, d, domain):
    """Classify degree-d slots and compute forced values from the rhs slice."""
    w = spec.omega(domain)
    resonant = set()
    forced, obstruction = {}, {}
    scale = domain.coerce(spec.p)
    for i in range(spec.n):
        for exps in monomials_of_degree(spec.n, d):
            c = rhs[i].get(pack(exps))
            if spec.is_resonant(i, exps):
                resonant.add((i, exps))
                if c:
                    forced[(i, exps)] = -(w ** spec.weight(exps)) * c / scale
            elif c:
                obstruction[(i, exps)] = c
    return ResonanceReport(d, frozenset(resonant), forced, obstruction)


def gen_periodic_diagonal(spec, seeds, order, domain=None):
    """A p-periodic series with linear part diag(w^lambda) extending the seeds.

    At each degree the resonant slots are forced from ((phi_{<=k})^p)_{k+1};
    non-resonant slots come from the seeds (default 0).  A nonzero
    non-resonant residual raises :class:`ObstructionError` carrying the
    :class:`ResonanceReport`.
    """
    domain = domain or ScalarDomain.cyclotomic(spec.p)
    n = spec.n
    seeds = _seed_parts(seeds, n, domain)
    for d, part in seeds.items():
        if d < 2 or d > order:
            raise BadSeedDegree(f"seed degree {d} outside 2..{order}")
        for i, exps, _ in part.terms():
            if spec.is_resonant(i, exps):
                raise BadSeedDegree(f"slot {i + 1}, {exps} at degree {d} is resonant (forced)")
    tower = PowerTower(spec.matrix(domain), spec.p)
    for d in range(2, order + 1):
        rhs = tower.pending()
        report = resonance_report(spec, rhs, d, domain)
        if report.obstruction:
            raise ObstructionError(report)
        comps = [dict(c) for c in (seeds[d].components if d in seeds else [{}] * n)]
        for (i, exps), v in report.forced.items():
            comps[i][pack(exps)] = v
        residual = tower.fix(HomogeneousPart(n, d, comps))
        if any(residual):
            raise TheoremViolation(f"(phi^{spec.p})_{d} != 0 after fixing degree {d}")
    return GroupElement(TruncatedSeries(n, order, domain, tower.parts))


def gen_periodic_conjugate(spec, psi, domain=None):
    """psi^-1 o diag(w^lambda) o psi, p-periodic by construction (psi_1 = id)."""
    psi = psi if isinstance(psi, GroupElement) else GroupElement(psi)
    if not psi.linear.is_identity():
        raise PreconditionFailed("conjugating series must have identity linear part")
    domain = domain or psi.domain
    d = spec.matrix(domain).to_series(psi.order)
    return GroupElement(compose(compose(invert(psi).series, d), psi.series))


def build_conjugator(phi, spec):
    """psi with psi_1 = id and psi phi = phi_1 psi mod S_k.

    At degree d, a = (psi_{<d} phi)_d; non-resonant slots get
    a / (w^lambda_i - w^(lambda, alpha)), resonant slots must have a = 0.
    """
    phi = phi if isinstance(phi, GroupElement) else GroupElement(phi)
    domain = phi.domain
    if phi.linear != spec.matrix(domain):
        raise PreconditionFailed("linear part is not diag(w^lambda)")
    n, k = phi.n, phi.order
    w = spec.omega(domain)
    sub = Substituter(n)
    phi_parts = phi.series.parts()
    for d in range(1, k + 1):
        part = phi_parts.get(d)
        sub.push(part.components if part is not None else [{}] * n)
    parts = {1: SquareMatrix.identity(n, domain).to_part()}
    for d in range(2, k + 1):
        a = sub.apply(parts, d, 1, d - 1)
        comps = []
        for i, comp in enumerate(a):
            out = {}
            for key, c in comp.items():
                exps = unpack(key, n)
                if spec.is_resonant(i, exps):
                    raise NotPeriodicInput(
                        f"resonant coefficient at degree {d}, slot {i + 1} {exps} is nonzero")
                out[key] = c / (w ** spec.lam[i] - w ** spec.weight(exps))
            comps.append(out)
        parts[d] = HomogeneousPart(n, d, comps)
    return GroupElement(TruncatedSeries(n, k, domain, parts))


def matrix_conjugate(phi, a):
    """A^-1 o phi o A for an invertible matrix A."""
    phi = phi if isinstance(phi, GroupElement) else GroupElement(phi)
    inv = a.inverse()
    k = phi.order
    return GroupElement(compose(compose(inv.to_series(k), phi.series), a.to_series(k)))


def intertwines(psi, phi):
    """psi o phi == phi_1 o psi mod S_k."""
    psi = psi.series if isinstance(psi, GroupElement) else psi
    phi = phi.series if isinstance(phi, GroupElement) else phi
    lin = phi.linear_part().to_series(phi.order)
    return compose(psi, phi) == compose(lin, psi)


__all__ = ["DiagonalSpec", "ResonanceReport", "PowerTower", "check_periodic",
           "resonance_operator_R", "resonance_report", "gen_periodic_scalar",
           "gen_periodic_diagonal", "gen_periodic_conjugate", "build_conjugator",
           "matrix_conjugate", "intertwines", "power"]
