"""n = 1 relation tables with symbolic free coefficients, and the c_k sequence."""

import csv
import io
import json
from dataclasses import dataclass

from .errors import NonIntegerCoefficient
from .periodic import gen_periodic_scalar
from .scalars import ScalarDomain, format_symbolic
from .series import HomogeneousPart

DEFAULT_MAX_DEGREE = {2: 13, 3: 10, 4: 9}


def omega_name(p):
    return "i" if p == 4 else "w"


def free_symbols(p, max_degree):
    return tuple(f"a{j}" for j in range(2, max_degree + 1) if (j - 1) % p)


@dataclass
class RelationTable:
    """Forced coefficients a_d (d = 1 mod p) as polynomials in the free a_j."""

    p: int
    omega: object
    max_degree: int
    symbols: tuple
    rows: dict

    def row(self, d):
        return self.rows[d]

    def specialize(self, values):
        """Numeric forced coefficients for a choice of the free symbols."""
        return {d: poly.evaluate(values) for d, poly in self.rows.items()}

    def to_text(self):
        name = omega_name(self.p)
        lines = [f"# p = {self.p}, {name} = primitive {self.p}-th root of unity, "
                 f"through degree {self.max_degree}"]
        for d in sorted(self.rows):
            lines.append(f"a{d} = {format_symbolic(self.rows[d], name)}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        rows = []
        for d in sorted(self.rows):
            terms = [{"exponents": list(exps), "coeff": [str(c) for c in coeff.coeffs]}
                     for exps, coeff in self.rows[d].items()]
            rows.append({"degree": d, "terms": terms})
        return {"p": self.p, "omega": [str(c) for c in self.omega.coeffs],
                "max_degree": self.max_degree, "symbols": list(self.symbols), "rows": rows}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "expression"])
        name = omega_name(self.p)
        for d in sorted(self.rows):
            writer.writerow([d, format_symbolic(self.rows[d], name)])
        return buf.getvalue()


def relation_table(p, max_degree=None):
    """Run the scalar generator with symbolic seeds a_j x^j and read off forced rows."""
    max_degree = DEFAULT_MAX_DEGREE.get(p, 2 * p + 1) if max_degree is None else max_degree
    if p < 2 or max_degree < p + 1:
        raise ValueError("need p >= 2 and max_degree >= p + 1")
    symbols = free_symbols(p, max_degree)
    domain = ScalarDomain.symbolic(symbols, p)
    seeds = {int(s[1:]): HomogeneousPart.from_terms(1, int(s[1:]), [(0, (int(s[1:]),), domain.symbol(s))])
             for s in symbols}
    phi = gen_periodic_scalar(p, 1, seeds, max_degree, domain)
    rows = {d: phi.series.coefficient(0, (d,)) for d in range(p + 1, max_degree + 1, p)}
    return RelationTable(p, domain.field.omega, max_degree, symbols, rows)


def c_sequence(m):
    """c_1..c_m: odd coefficients of the 2-periodic series -x + x^2 + ... (other seeds 0)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    domain = ScalarDomain.rational()
    seeds = {2: HomogeneousPart.from_terms(1, 2, [(0, (2,), domain.one)])}
    phi = gen_periodic_scalar(2, 1, seeds, 2 * m + 1, domain)
    out = []
    for k in range(1, m + 1):
        c = phi.series.coefficient(0, (2 * k + 1,))
        if c.denominator != 1:
            raise NonIntegerCoefficient(f"c_{k} = {c} is not an integer")
        out.append(int(c))
    return out


def growth_diagnostic(cs):
    """(k, |c_k|^(1/k)) in floating point; a diagnostic only."""
    if not cs:
        raise ValueError("empty sequence")
    return [(k, abs(c) ** (1.0 / k)) for k, c in enumerate(cs, start=1)]


def format_growth(table):
    lines = ["# diagnostic (floating point): k, |c_k|^(1/k)"]
    lines += [f"{k}\t{r:.6f}" for k, r in table]
    return "\n".join(lines) + "\n"
