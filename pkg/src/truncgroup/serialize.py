"""JSON documents for series and seed sets.

Series document::

    {"n": 2, "p": 3, "order": 4, "domain": "cyclotomic",
     "terms": [{"component": 1, "exponents": [1, 0], "coeff": "w"}, ...]}

``component`` is 1-based.  Terms are written in canonical order (component,
then degree, then graded-lex) and accepted in any order.  Symbolic documents
add ``"symbols"``.
"""

import json

import jsonschema

from .errors import ParseError
from .periodic import DiagonalSpec
from .scalars import ScalarDomain
from .series import HomogeneousPart, TruncatedSeries

TERM_SCHEMA = {
    "type": "object",
    "required": ["component", "exponents", "coeff"],
    "properties": {
        "component": {"type": "integer", "minimum": 1},
        "exponents": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "coeff": {"type": ["string", "integer"]},
    },
}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["n", "order", "domain", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "p": {"type": ["integer", "null"], "minimum": 1},
        "order": {"type": "integer", "minimum": 1},
        "domain": {"enum": ["rational", "cyclotomic", "symbolic"]},
        "symbols": {"type": "array", "items": {"type": "string"}},
        "terms": {"type": "array", "items": TERM_SCHEMA},
    },
}

SEEDS_SCHEMA = {
    "type": "object",
    "required": ["seeds"],
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 1},
        "lambda": {"type": "array", "items": {"type": "integer"}},
        "domain": {"enum": ["rational", "cyclotomic", "symbolic"]},
        "symbols": {"type": "array", "items": {"type": "string"}},
        "seeds": {"type": "array", "items": TERM_SCHEMA},
    },
}


def _validate(doc, schema):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise ParseError(f"invalid document: {exc.message}") from exc


def domain_from_doc(doc, default_p=None):
    kind = doc.get("domain", "cyclotomic" if default_p else "rational")
    p = doc.get("p") or default_p
    if kind == "rational":
        return ScalarDomain.rational()
    if kind == "cyclotomic":
        if not p:
            raise ParseError("cyclotomic domain needs p")
        return ScalarDomain.cyclotomic(p)
    if "symbols" not in doc:
        raise ParseError("symbolic domain needs symbols")
    try:
        return ScalarDomain.symbolic(doc["symbols"], p or 1)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_terms(terms, n, domain):
    out = []
    for t in terms:
        if len(t["exponents"]) != n:
            raise ParseError(f"term {t} does not have {n} exponents")
        if t["component"] > n:
            raise ParseError(f"component {t['component']} exceeds n={n}")
        out.append((t["component"] - 1, tuple(t["exponents"]), domain.parse(str(t["coeff"]))))
    return out


def series_from_dict(doc):
    _validate(doc, SERIES_SCHEMA)
    domain = domain_from_doc(doc)
    n = doc["n"]
    try:
        return TruncatedSeries.from_terms(n, doc["order"], domain,
                                          _parse_terms(doc["terms"], n, domain))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def series_to_dict(phi):
    dom = phi.domain
    doc = {"n": phi.n, "p": dom.p, "order": phi.order, "domain": dom.kind}
    if dom.kind == "symbolic":
        doc["symbols"] = list(dom.symbols)
    doc["terms"] = [{"component": i + 1, "exponents": list(exps), "coeff": dom.format(c)}
                    for i, exps, c in sorted(phi.terms(), key=lambda t: t[0])]
    return doc


def dumps(phi):
    return json.dumps(series_to_dict(phi), indent=2) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return series_from_dict(doc)


def load_series(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def seeds_from_dict(doc, p=None, lam=None, n=None):
    """Parse a seed document into ``(spec_or_None, n, domain, seeds)``.

    ``p``, ``lam`` and ``n`` given by the caller override the document.
    ``seeds`` maps degree to :class:`HomogeneousPart`.
    """
    _validate(doc, SEEDS_SCHEMA)
    p = p or doc.get("p")
    if not p:
        raise ParseError("seed document needs p")
    lam = lam if lam is not None else doc.get("lambda")
    spec = None
    if lam is not None:
        try:
            spec = DiagonalSpec(p, tuple(lam))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    n = n or doc.get("n") or (spec.n if spec else None)
    if n is None:
        raise ParseError("seed document needs n or lambda")
    domain = domain_from_doc(dict(doc, p=doc.get("p") or p), default_p=p)
    by_degree = {}
    for i, exps, c in _parse_terms(doc["seeds"], n, domain):
        by_degree.setdefault(sum(exps), []).append((i, exps, c))
    try:
        seeds = {d: HomogeneousPart.from_terms(n, d, ts) for d, ts in by_degree.items()}
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return spec, n, domain, seeds
