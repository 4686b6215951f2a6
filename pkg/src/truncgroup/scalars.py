"""Exact coefficient domains.

Three kinds of scalar appear in a computation, never mixed:

* rationals (``gmpy2.mpq`` when available, else ``fractions.Fraction``),
* elements of the cyclotomic field Q(w) = Q[x]/Phi_p(x),
* polynomials in named symbols with coefficients in Q(w).

A :class:`ScalarDomain` bundles the constructors, parser and formatter for one
of these kinds.
"""

import ast
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DivisionByNonUnit, DomainMismatch, ParseError
from .monomials import graded_lex_key, pack, unit, unpack

try:
    from gmpy2 import mpq as _mpq

    def rational(x, den=1):
        if isinstance(x, Fraction):
            x = _mpq(x.numerator, x.denominator)
        return _mpq(x, den) if den != 1 else _mpq(x)

    RATIONAL_TYPES = (int, Fraction, type(_mpq(0)))
except ImportError:  # pragma: no cover - gmpy2 is pre-installed
    def rational(x, den=1):
        return Fraction(x, den)

    RATIONAL_TYPES = (int, Fraction)


def is_rational(x):
    return isinstance(x, RATIONAL_TYPES)


def _num_den(q):
    q = rational(q)
    return int(q.numerator), int(q.denominator)


# --- integer polynomial helpers (coefficient lists, low degree first) -------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    """Exact quotient of integer polynomials with monic ``den``."""
    num = list(num)
    dq = len(num) - len(den)
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1]
        quot[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@functools.lru_cache(maxsize=None)
def _cyclotomic_int(p):
    if p < 1:
        raise ValueError("p must be >= 1")
    num = [-1] + [0] * (p - 1) + [1]
    den = [1]
    for d in range(1, p):
        if p % d == 0:
            den = _poly_mul(den, _cyclotomic_int(d))
    return tuple(_poly_divexact(num, den))


def cyclotomic_polynomial(p):
    """Coefficients of the p-th cyclotomic polynomial, constant term first.

    Computed as ``(x^p - 1) / prod(Phi_d for proper divisors d of p)``.
    """
    return tuple(rational(c) for c in _cyclotomic_int(p))


def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_qpoly_trim(a)) >= len(b):
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = c
        for j, y in enumerate(b):
            a[s + j] -= c * y
        a.pop()
    return q, a


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _qpoly_trim([x - y for x, y in zip(a, b)])


def _qpoly_inverse_mod(a, m):
    """Inverse of ``a`` modulo ``m`` over Q by the extended Euclidean algorithm."""
    r0, r1 = [Fraction(c) for c in m], _qpoly_trim([Fraction(c) for c in a])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise DivisionByNonUnit("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


# --- cyclotomic field ----------------------------------------------------------

class CyclotomicField:
    """The field Q(w) with w a primitive p-th root of unity.

    Use :func:`cyclotomic_field` to obtain the shared instance for a given p.
    """

    def __init__(self, p):
        self.p = p
        self._modulus = _cyclotomic_int(p)
        self.modulus = cyclotomic_polynomial(p)
        self.degree = len(self._modulus) - 1
        # reductions of x^deg .. x^(2deg-2) modulo Phi_p
        d = self.degree
        table = []
        cur = [-c for c in self._modulus[:d]]  # x^d
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(d):
                    cur[t] -= top * self._modulus[t]
        self._table = tuple(table)
        self._zero = CyclotomicElement._make(self, (0,) * d, 1)
        self._one = CyclotomicElement._make(self, (1,) + (0,) * (d - 1), 1)

    def __repr__(self):
        return f"CyclotomicField({self.p})"

    def __reduce__(self):
        return cyclotomic_field, (self.p,)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def omega(self):
        return self.omega_power(1)

    def element(self, coeffs):
        """Element from coefficients of 1, w, w^2, ... (any length; reduced)."""
        coeffs = [rational(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
        nums = [int(c.numerator) * (den // int(c.denominator)) for c in coeffs]
        return CyclotomicElement._make(self, self._reduce(nums), den)

    def embed(self, q):
        n, d = _num_den(q)
        return CyclotomicElement._make(self, (n,) + (0,) * (self.degree - 1), d)

    def _reduce(self, nums):
        d = self.degree
        nums = list(nums) + [0] * max(0, d - len(nums))
        # reduce x^j for j >= d using x^p = 1 first, then Phi_p
        if len(nums) > self.p:
            folded = [0] * self.p
            for j, c in enumerate(nums):
                folded[j % self.p] += c
            nums = folded
        for j in range(len(nums) - 1, d - 1, -1):
            c = nums[j]
            if c:
                for t, m in enumerate(self._modulus):
                    nums[j - d + t] -= c * m
        return tuple(nums[:d])

    @functools.lru_cache(maxsize=None)
    def omega_power(self, j):
        j %= self.p
        nums = [0] * (j + 1)
        nums[j] = 1
        return CyclotomicElement._make(self, self._reduce(nums), 1)


@functools.lru_cache(maxsize=None)
def cyclotomic_field(p):
    return CyclotomicField(p)


def omega_power(ctx, j):
    """w^(j mod p) in ``ctx``."""
    return ctx.omega_power(j)


def root_of_unity_sum(ctx, k):
    """Sum of w^(-k i) for i = 0..p-1, by direct summation.

    The result is checked against the closed form: p when p | k, else 0.
    """
    total = ctx.zero
    for i in range(ctx.p):
        total = total + ctx.omega_power(-k * i)
    expected = ctx.embed(ctx.p if k % ctx.p == 0 else 0)
    if total != expected:
        raise ArithmeticError(f"root-of-unity sum mismatch for p={ctx.p}, k={k}")
    return total


class CyclotomicElement:
    """Immutable element of Q(w), stored as integer numerators over one denominator."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field, coeffs):
        other = field.element(coeffs)
        self.field, self.nums, self.den = field, other.nums, other.den
        self._hash = None

    @classmethod
    def _make(cls, field, nums, den):
        g = math.gcd(den, *nums)
        if den < 0:
            g = -g
        self = object.__new__(cls)
        self.field = field
        if g != 1:
            self.nums = tuple(x // g for x in nums)
            self.den = den // g
        else:
            self.nums = tuple(nums)
            self.den = den
        if not any(self.nums):
            self.den = 1
        self._hash = None
        return self

    @property
    def coeffs(self):
        return tuple(rational(x, self.den) for x in self.nums)

    @property
    def context(self):
        return self.field

    def is_rational(self):
        return not any(self.nums[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return rational(self.nums[0], self.den)

    def is_integral(self):
        return self.den == 1

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.field is not self.field:
                raise DomainMismatch(f"{self.field} vs {other.field}")
            return other
        if is_rational(other):
            return self.field.embed(other)
        return None

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.nums == o.nums

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(rational(self.nums[0], self.den))
            else:
                self._hash = hash((self.field.p, self.nums, self.den))
        return self._hash

    def __neg__(self):
        return CyclotomicElement._make(self.field, tuple(-x for x in self.nums), self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CyclotomicElement._make(
                self.field, tuple(x + y for x, y in zip(self.nums, o.nums)), self.den)
        da, db = self.den, o.den
        return CyclotomicElement._make(
            self.field, tuple(x * db + y * da for x, y in zip(self.nums, o.nums)), da * db)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, CyclotomicElement):
            if other.field is not self.field:
                raise DomainMismatch(f"{self.field} vs {other.field}")
            if self.field.degree == 1:
                nums = (self.nums[0] * other.nums[0],)
            else:
                nums = kernels.cyclo_mul(self.nums, other.nums, self.field._table)
            return CyclotomicElement._make(self.field, nums, self.den * other.den)
        if is_rational(other):
            n, d = _num_den(other)
            return CyclotomicElement._make(
                self.field, tuple(x * n for x in self.nums), self.den * d)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByNonUnit("division by zero in Q(w)")
        if self.field.degree == 1:
            n = self.nums[0]
            return CyclotomicElement._make(self.field, (self.den if n > 0 else -self.den,), abs(n))
        inv = _qpoly_inverse_mod([Fraction(x, self.den) for x in self.nums], self.field._modulus)
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"CyclotomicElement(p={self.field.p}, {format_cyclotomic(self)!r})"

    def __str__(self):
        return format_cyclotomic(self)


def format_rational(q):
    return str(rational(q))


def _power_str(name, e):
    return name if e == 1 else f"{name}^{e}"


def format_cyclotomic(x, omega_name="w"):
    """``c0 + c1*w + c2*w^2`` with zero terms omitted."""
    parts = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        if j == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = _power_str(omega_name, j)
        else:
            body = f"{abs(c)}*{_power_str(omega_name, j)}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --- symbolic polynomials ------------------------------------------------------

class SymbolicPoly:
    """Polynomial in named symbols with coefficients in Q(w).

    ``terms`` maps packed exponent keys to nonzero :class:`CyclotomicElement`
    values.  Only constants are invertible.
    """

    __slots__ = ("field", "symbols", "terms", "_hash")

    def __init__(self, field, symbols, terms=None):
        self.field = field
        self.symbols = tuple(symbols)
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, field, symbols, terms):
        self = object.__new__(cls)
        self.field, self.symbols, self.terms, self._hash = field, symbols, terms, None
        return self

    @classmethod
    def constant(cls, field, symbols, c):
        c = c if isinstance(c, CyclotomicElement) else field.embed(c)
        return cls._raw(field, tuple(symbols), {0: c} if c else {})

    @classmethod
    def symbol(cls, field, symbols, name):
        symbols = tuple(symbols)
        return cls._raw(field, symbols, {unit(symbols.index(name)): field.one})

    @classmethod
    def from_terms(cls, field, symbols, items):
        """Build from ``(exponent tuple, coefficient)`` pairs."""
        terms = {}
        for exps, c in items:
            c = c if isinstance(c, CyclotomicElement) else field.embed(c)
            k = pack(exps)
            terms[k] = terms[k] + c if k in terms else c
        return cls(field, symbols, terms)

    def _coerce(self, other):
        if isinstance(other, SymbolicPoly):
            if other.symbols != self.symbols or other.field is not self.field:
                raise DomainMismatch("symbolic operands over different domains")
            return other
        if isinstance(other, CyclotomicElement) or is_rational(other):
            return SymbolicPoly.constant(self.field, self.symbols, other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(0, self.field.zero)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return SymbolicPoly._raw(self.field, self.symbols, {k: -v for k, v in self.terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = kernels.add_into(dict(self.terms), o.terms)
        return SymbolicPoly._raw(self.field, self.symbols, kernels.pruned(terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, SymbolicPoly):
            o = self._coerce(other)
            return SymbolicPoly._raw(self.field, self.symbols, kernels.sparse_mul(self.terms, o.terms))
        if isinstance(other, CyclotomicElement) or is_rational(other):
            if not other:
                return SymbolicPoly._raw(self.field, self.symbols, {})
            if isinstance(other, CyclotomicElement) and other.field is not self.field:
                raise DomainMismatch("symbolic operands over different domains")
            return SymbolicPoly._raw(self.field, self.symbols,
                                     {k: v * other for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o or not o.is_constant():
            raise DivisionByNonUnit("symbolic division is only by nonzero constants")
        return self * o.constant_value().inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = SymbolicPoly.constant(self.field, self.symbols, 1)
        for _ in range(e):
            result = result * self
        return result

    def items(self):
        """``(exponent tuple, coefficient)`` pairs in graded-lex order."""
        n = len(self.symbols)
        pairs = [(unpack(k, n), v) for k, v in self.terms.items()]
        pairs.sort(key=lambda kv: graded_lex_key(kv[0]))
        return pairs

    def coefficient(self, exps):
        return self.terms.get(pack(exps), self.field.zero)

    def evaluate(self, values):
        """Substitute ``values[name]`` (scalars in Q(w) or Q) for every symbol."""
        total = self.field.zero
        for exps, c in self.items():
            term = c
            for name, e in zip(self.symbols, exps):
                if e:
                    term = term * (values[name] ** e)
            total = total + term
        return total

    def __repr__(self):
        return f"SymbolicPoly({format_symbolic(self)!r})"

    def __str__(self):
        return format_symbolic(self)


def _coeff_text(c, omega_name):
    """Sign and magnitude text of a coefficient for use in a sum."""
    if c.is_rational():
        q = c.to_rational()
        return ("-" if q < 0 else "+"), str(abs(q))
    nonzero = [(j, q) for j, q in enumerate(c.coeffs) if q]
    if len(nonzero) == 1:
        j, q = nonzero[0]
        mag = _power_str(omega_name, j) if abs(q) == 1 else f"{abs(q)}*{_power_str(omega_name, j)}"
        return ("-" if q < 0 else "+"), mag
    text = format_cyclotomic(c, omega_name)
    neg = format_cyclotomic(-c, omega_name)
    # prefer the form with fewer leading minus signs
    if text.startswith("-") and not neg.startswith("-"):
        return "-", f"({neg})"
    return "+", f"({text})"


def format_symbolic(poly, omega_name="w"):
    if not poly.terms:
        return "0"
    pieces = []
    for exps, c in poly.items():
        mono = "*".join(_power_str(s, e) for s, e in zip(poly.symbols, exps) if e)
        sign, mag = _coeff_text(c, omega_name)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# --- domains -------------------------------------------------------------------

RATIONAL, CYCLOTOMIC, SYMBOLIC = "rational", "cyclotomic", "symbolic"


@dataclass(frozen=True)
class ScalarDomain:
    """The coefficient domain shared by every scalar of one computation."""

    kind: str
    p: int = None
    symbols: tuple = ()

    @classmethod
    def rational(cls):
        return cls(RATIONAL)

    @classmethod
    def cyclotomic(cls, p):
        return cls(CYCLOTOMIC, p)

    @classmethod
    def symbolic(cls, symbols, p=1):
        symbols = tuple(symbols)
        if "w" in symbols:
            raise ValueError("'w' is reserved for the root of unity")
        return cls(SYMBOLIC, p, symbols)

    @property
    def field(self):
        return None if self.kind == RATIONAL else cyclotomic_field(self.p)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        if self.kind == RATIONAL:
            if isinstance(x, CyclotomicElement):
                return x.to_rational()
            if is_rational(x):
                return rational(x)
        elif self.kind == CYCLOTOMIC:
            if isinstance(x, CyclotomicElement):
                if x.field is not self.field:
                    raise DomainMismatch(f"{x.field} is not {self.field}")
                return x
            if is_rational(x):
                return self.field.embed(x)
        else:
            if isinstance(x, SymbolicPoly):
                if x.symbols != self.symbols or x.field is not self.field:
                    raise DomainMismatch("symbolic value from another domain")
                return x
            if isinstance(x, CyclotomicElement) or is_rational(x):
                if isinstance(x, CyclotomicElement) and x.field is not self.field:
                    raise DomainMismatch(f"{x.field} is not {self.field}")
                return SymbolicPoly.constant(self.field, self.symbols, x)
        raise DomainMismatch(f"cannot coerce {x!r} into {self}")

    def symbol(self, name):
        if self.kind != SYMBOLIC:
            raise DomainMismatch("symbols exist only in a symbolic domain")
        return SymbolicPoly.symbol(self.field, self.symbols, name)

    def root_of_unity(self, order):
        """A primitive ``order``-th root of unity in this domain.

        Over Q only orders 1 and 2 exist.  Over Q(w_p), ``order`` must divide p
        and the root returned is ``w_p^(p/order)``.
        """
        if self.kind == RATIONAL:
            if order in (1, 2):
                return rational(1 if order == 1 else -1)
            raise DomainMismatch(f"Q has no primitive {order}-th root of unity")
        if self.p % order:
            raise DomainMismatch(f"Q(w_{self.p}) has no primitive {order}-th root of unity")
        return self.coerce(self.field.omega_power(self.p // order))

    def is_constant(self, x):
        return self.kind != SYMBOLIC or x.is_constant()

    def is_integral(self, x):
        """True when every rational coefficient of ``x`` is an integer."""
        if self.kind == RATIONAL:
            return rational(x).denominator == 1
        if self.kind == CYCLOTOMIC:
            return x.den == 1
        return all(c.den == 1 for c in x.terms.values())

    def parse(self, text, omega_name="w"):
        return parse_scalar(text, self, omega_name)

    def format(self, x, omega_name="w"):
        if self.kind == RATIONAL:
            return format_rational(x)
        if self.kind == CYCLOTOMIC:
            return format_cyclotomic(x, omega_name)
        return format_symbolic(x, omega_name)

    def __str__(self):
        if self.kind == RATIONAL:
            return "Q"
        base = f"Q(w_{self.p})"
        return base if self.kind == CYCLOTOMIC else f"{base}[{', '.join(self.symbols)}]"


def embed_rational(q, field):
    """Image of a rational in Q(w); ``field`` may be Q(w_1) or Q(w_2)."""
    return field.embed(q)


def scalar_arith(a, b, op):
    """Exact ``a op b`` for op in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, SymbolicPoly):
            return a / b
        if not b:
            raise DivisionByNonUnit("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


# --- parsing -------------------------------------------------------------------

def parse_scalar(text, domain, omega_name="w"):
    """Parse conventional arithmetic text (``+ - * / ^ **``, parentheses)."""
    src = str(text).strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse scalar {text!r}") from exc
    try:
        return domain.coerce(_eval_node(tree.body, domain, omega_name, text))
    except DivisionByNonUnit:
        raise
    except DomainMismatch as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


def _eval_node(node, domain, omega_name, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return rational(node.value)
    if isinstance(node, ast.Name):
        if node.id == omega_name and domain.kind != RATIONAL:
            return domain.coerce(domain.field.omega)
        if domain.kind == SYMBOLIC and node.id in domain.symbols:
            return domain.symbol(node.id)
        raise ParseError(f"unknown name {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, domain, omega_name, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, domain, omega_name, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ParseError(f"exponent must be an integer literal in {text!r}")
            return left ** node.right.value
        right = _eval_node(node.right, domain, omega_name, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if is_rational(left) and is_rational(right):
                if not right:
                    raise DivisionByNonUnit("division by zero")
                return rational(left) / rational(right)
            return scalar_arith(left, right, "div")
    raise ParseError(f"unsupported syntax in {text!r}")
