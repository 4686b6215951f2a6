"""Acceptance suites, shared by the test-suite and ``truncgroup verify``.

Each suite returns one :class:`CriterionResult`; randomized suites draw every
instance from ``random.Random(seed)``.
"""

import random
import time
from dataclasses import dataclass, field

from . import oracles, reference, samples
from .errors import ObstructionError
from .group import GroupElement, invert, one_sided_inverse_symmetry_check, order_of, power
from .periodic import (DiagonalSpec, build_conjugator, check_periodic, gen_periodic_conjugate,
                       gen_periodic_diagonal, gen_periodic_scalar, intertwines,
                       resonance_operator_R)
from .scalars import ScalarDomain
from .series import HomogeneousPart, SquareMatrix, TruncatedSeries, compose, t_invariant
from .symbolic import c_sequence, omega_name, relation_table


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    limit: float = None
    rows: dict = field(default_factory=dict)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        limit = f" / limit {self.limit:g}s" if self.limit else ""
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s{limit})"


def _timed(number, name, limit, body):
    start = time.perf_counter()
    passed, detail, rows = body()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        passed = False
        detail += f"; exceeded {limit}s"
    return CriterionResult(number, name, passed, detail, elapsed, limit, rows)


# --- deterministic reproductions ------------------------------------------------

def quadratic_inverse_series():
    dom = ScalarDomain.symbolic(["a"])
    phi = TruncatedSeries.from_terms(1, 6, dom, [(0, (1,), 1), (0, (2,), "a")])
    return invert(phi).series


def criterion_quadratic_inverse(seed=0):
    def body():
        got = quadratic_inverse_series()
        want = TruncatedSeries.univariate(reference.QUADRATIC_INVERSE, 6, got.domain)
        return got == want, f"inverse = {got}", {}
    return _timed(1, "quadratic inverse through degree 6", 1.0, body)


def criterion_c_sequence(seed=0):
    def body():
        got = c_sequence(6)
        return got == reference.C_SEQUENCE, f"c = {got}", {}
    return _timed(2, "c-sequence c_1..c_6", 5.0, body)


def compare_relation_rows(p, max_degree):
    """Per-row comparison of a computed table with the published rows.

    Returns ``{degree: (matches, computed, published)}``; both sides are
    parsed into canonical form over Q(w_p) before comparison.
    """
    table = relation_table(p, max_degree)
    dom = ScalarDomain.symbolic(table.symbols, p)
    name = omega_name(p)
    out = {}
    for d, text in reference.RELATIONS[p].items():
        published = dom.parse(text, omega_name=name)
        out[d] = (table.rows[d] == published, table.rows[d], published)
    return out


def _relations_criterion(number, p, max_degree, limit):
    def body():
        rows = compare_relation_rows(p, max_degree)
        bad = [f"a{d}" for d, (ok, _, _) in rows.items() if not ok]
        detail = "all rows match" if not bad else f"mismatched rows: {', '.join(bad)}"
        return not bad, detail, {d: ok for d, (ok, _, _) in rows.items()}
    return _timed(number, f"p={p} relation rows", limit, body)


def criterion_relations_p2(seed=0):
    return _relations_criterion(3, 2, 13, 30.0)


def criterion_relations_p3(seed=0):
    return _relations_criterion(4, 3, 10, None)


def criterion_relations_p4(seed=0):
    return _relations_criterion(5, 4, 9, None)


# --- randomized suites -----------------------------------------------------------

def criterion_inversion(seed=0, count=100):
    def body():
        rng = random.Random(seed)
        dom = ScalarDomain.rational()
        for t in range(count):
            n, k = rng.randint(1, 3), rng.randint(1, 8)
            phi = GroupElement(samples.random_series(rng, n, k, dom))
            psi = invert(phi)
            if not (phi * psi).is_identity() or not (psi * phi).is_identity():
                return False, f"instance {t}: not a two-sided inverse", {}
            if oracles.undetermined_inverse(phi.series) != psi.series:
                return False, f"instance {t}: disagrees with linear-system oracle", {}
        return True, f"{count} instances, n<=3, k<=8", {}
    return _timed(6, "inversion round-trip and oracle", 60.0, body)


def criterion_commutativity(seed=0, count=50):
    def body():
        rng = random.Random(seed)
        dom = ScalarDomain.rational()
        for t in range(count):
            k = rng.randint(2, 8)
            m = rng.randint((k + 1) // 2, k - 1)
            n = rng.randint(1, 3)
            degs = range(m + 1, k + 1)
            phi = samples.random_unipotent(rng, n, k, dom, degs)
            psi = samples.random_unipotent(rng, n, k, dom, degs)
            if compose(phi, psi) != compose(psi, phi):
                return False, f"pair {t} in G_({k},{m}) does not commute", {}
        # G_(3,1) is abelian for n = 1, so search in two variables
        for tries in range(1, 201):
            phi = samples.random_unipotent(rng, 2, 3, dom, (2, 3))
            psi = samples.random_unipotent(rng, 2, 3, dom, (2, 3))
            if compose(phi, psi) != compose(psi, phi):
                return True, f"{count} commuting pairs; non-commuting pair at (3,1) found on attempt {tries}", {}
        return False, "no non-commuting pair found in G_(3,1)", {}
    return _timed(7, "commutativity of G_(k,m), m >= k/2", None, body)


def criterion_order(seed=0, count=20):
    def body():
        rng = random.Random(seed)
        periods = (2, 3, 4, 6)
        for t in range(count):
            p = periods[t % len(periods)]
            n, k = rng.randint(1, 3), rng.randint(2, 5)
            dom = ScalarDomain.cyclotomic(p)
            spec = DiagonalSpec(p, samples.random_lambda(rng, n, p))
            psi = GroupElement(samples.random_series(rng, n, k, dom, -2, 2, density=0.6))
            d = GroupElement(spec.matrix(dom).to_series(k))
            phi = invert(psi) * d * psi
            got = order_of(phi)
            if got != p:
                return False, f"instance {t}: order {got}, expected {p}", {}
        return True, f"{count} conjugates, p in {{2,3,4,6}}", {}
    return _timed(8, "order of conjugates of diag(w^lambda)", None, body)


def random_periodic(rng, t):
    """A generated p-periodic element and its DiagonalSpec, cycling through generators."""
    p = rng.choice((2, 3, 4, 5, 6))
    n, k = rng.randint(1, 3), rng.randint(2, 6)
    dom = ScalarDomain.cyclotomic(p)
    mode = t % 3
    if mode == 0:
        spec = DiagonalSpec(p, (1,) * n)
        seeds = {d: samples.random_part(rng, n, d, dom, -2, 2, 0.5)
                 for d in range(2, k + 1) if (d - 1) % p}
        return gen_periodic_scalar(p, n, seeds, k, dom), spec
    spec = DiagonalSpec(p, samples.random_lambda(rng, n, p))
    if mode == 1:
        seeds = {}
        for d in range(2, k + 1):
            part = samples.random_part(rng, n, d, dom, -2, 2, 0.5)
            terms = [(i, e, c) for i, e, c in part.terms() if not spec.is_resonant(i, e)]
            seeds[d] = HomogeneousPart.from_terms(n, d, terms)
        return gen_periodic_diagonal(spec, seeds, k, dom), spec
    psi = samples.random_unipotent(rng, n, k, dom, lo=-2, hi=2, density=0.5)
    return gen_periodic_conjugate(spec, psi), spec


def criterion_conjugator(seed=0, count=20):
    def body():
        rng = random.Random(seed)
        for t in range(count):
            phi, spec = random_periodic(rng, t)
            if not check_periodic(phi, spec.p):
                return False, f"instance {t}: generator output is not {spec.p}-periodic", {}
            psi = build_conjugator(phi, spec)
            if not psi.linear.is_identity():
                return False, f"instance {t}: conjugator linear part is not id", {}
            for d in range(1, phi.order + 1):
                if not intertwines(psi.series.truncate(d), phi.series.truncate(d)):
                    return False, f"instance {t}: intertwining fails at degree {d}", {}
        return True, f"{count} generated periodic series", {}
    return _timed(9, "conjugator round-trip", None, body)


def criterion_resonance(seed=0, count=40):
    def body():
        rng = random.Random(seed)
        for t in range(count):
            p, n, d = rng.randint(2, 6), rng.randint(1, 3), rng.randint(2, 5)
            dom = ScalarDomain.cyclotomic(p)
            spec = DiagonalSpec(p, samples.random_lambda(rng, n, p))
            a = spec.matrix(dom)
            u = samples.random_part(rng, n, d, dom, -3, 3, 0.7)
            closed = resonance_operator_R(spec, u, dom)
            if closed != oracles.literal_resonance_sum(a, u, p, dom):
                return False, f"instance {t}: closed form != literal sum", {}
            tu = oracles.literal_commutator_slice(a, u, dom)
            if not resonance_operator_R(spec, tu, dom).is_zero():
                return False, f"instance {t}: R(t(u)) != 0", {}
        return True, f"{count} instances, p<=6, n<=3, degree<=5", {}
    return _timed(10, "resonance operator closed form", None, body)


def _check_power_formula(rng, dom):
    n, k = rng.randint(1, 3), rng.randint(2, 7)
    phi = samples.random_unipotent(rng, n, k, dom, (k,))
    m = rng.randint(0, 6)
    want = TruncatedSeries.identity(n, k, dom) + TruncatedSeries(n, k, dom, {k: phi.part(k)}).scale(m)
    return power(phi, m).series == want


def _check_one_sided_inverse(rng, dom):
    n, k = rng.randint(1, 3), rng.randint(1, 5)
    phi = samples.random_unipotent(rng, n, k + 1, dom)
    psi = invert(phi).series.truncate(k).with_order(k + 1)
    psi = psi.with_part(k + 1, samples.random_part(rng, n, k + 1, dom))
    return one_sided_inverse_symmetry_check(phi, psi, k)


def _single(part, order, dom):
    return TruncatedSeries(part.n, order, dom, {part.degree: part})


def _check_expansion(rng, dom):
    n, k = rng.randint(1, 3), rng.randint(1, 5)
    phi = samples.random_series(rng, n, k + 1, dom)
    psi = samples.random_series(rng, n, k + 1, dom)
    lhs = compose(phi, psi)
    low = compose(phi.truncate(k).with_order(k + 1), psi.truncate(k).with_order(k + 1))
    rhs = (low + compose(_single(phi.part(1), k + 1, dom), _single(psi.part(k + 1), k + 1, dom))
           + compose(_single(phi.part(k + 1), k + 1, dom), _single(psi.part(1), k + 1, dom)))
    return lhs == rhs


def _check_perturbed_power(rng, dom):
    n, k = rng.randint(1, 3), rng.randint(1, 5)
    phi = samples.random_series(rng, n, k, dom).with_order(k + 1)
    u = samples.random_part(rng, n, k + 1, dom)
    m = rng.randint(1, 5)
    lhs = power(phi + _single(u, k + 1, dom), m).part(k + 1)
    rhs = power(phi, m).part(k + 1)
    a = phi.linear_part()
    for i in range(m):
        term = compose(compose((a ** i).to_series(k + 1), _single(u, k + 1, dom)),
                       (a ** (m - 1 - i)).to_series(k + 1))
        rhs = rhs + term.part(k + 1)
    return lhs == rhs


def _check_t_invariant(rng, dom):
    n, s = rng.randint(1, 3), rng.randint(1, 3)
    k = rng.randint(s + 1, 8)
    degs = range(1 + s, k + 1, s)
    phi = GroupElement(samples.random_series(rng, n, k, dom, degrees=degs))
    t = t_invariant(phi.series)
    # random parts may vanish, so T is only known to be a multiple of s
    return t == t_invariant(invert(phi).series) and t % s == 0


IDENTITY_CHECKS = {
    "power of G_(k,k-1) element": _check_power_formula,
    "one-sided inverse symmetry": _check_one_sided_inverse,
    "degree k+1 expansion of a product": _check_expansion,
    "perturbed power at degree k+1": _check_perturbed_power,
    "T invariant under inversion": _check_t_invariant,
}


def criterion_identities(seed=0, count=30):
    def body():
        rng = random.Random(seed)
        dom = ScalarDomain.rational()
        for name, check in IDENTITY_CHECKS.items():
            for t in range(count):
                if not check(rng, dom):
                    return False, f"{name}: instance {t} fails", {}
        return True, f"{len(IDENTITY_CHECKS)} identities x {count} instances", {}
    return _timed(11, "structural identities", None, body)


def criterion_integrality(seed=0, count=20):
    def body():
        rng = random.Random(seed)
        dom = ScalarDomain.rational()
        for t in range(count):
            # univariate only: for n >= 2 cross terms can force half-integers
            k = rng.randint(3, 11)
            seeds = {d: samples.random_part(rng, 1, d, dom, -3, 3, 1.0) for d in range(2, k + 1, 2)}
            phi = gen_periodic_scalar(2, 1, seeds, k, dom)
            if not all(dom.is_integral(c) for _, _, c in phi.series.terms()):
                return False, f"instance {t}: non-integer forced coefficient", {}
            if not check_periodic(phi, 2):
                return False, f"instance {t}: not 2-periodic", {}
        return True, f"{count} integer-seeded univariate p=2 generations", {}
    return _timed(12, "integrality for p=2", None, body)


SUITES = {
    "quadratic-inverse": criterion_quadratic_inverse,
    "c-sequence": criterion_c_sequence,
    "relations-p2": criterion_relations_p2,
    "relations-p3": criterion_relations_p3,
    "relations-p4": criterion_relations_p4,
    "inversion": criterion_inversion,
    "commutativity": criterion_commutativity,
    "order": criterion_order,
    "conjugator": criterion_conjugator,
    "resonance": criterion_resonance,
    "identities": criterion_identities,
    "integrality": criterion_integrality,
}


def run_suite(name, seed=0):
    """Run one suite, or all of them for ``name == "all"``."""
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    return [SUITES[name](seed)]
