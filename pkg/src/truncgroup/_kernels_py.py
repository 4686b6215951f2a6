"""Pure-Python sparse kernels; reference twin of the compiled ``_kernels``.

Sparse polynomials are ``dict`` objects mapping packed integer monomial keys
to coefficients.  Packed keys multiply by integer addition.  Coefficients are
any objects supporting ``+``, ``*`` and truthiness (zero is falsy).
"""


def mul_into(out, a, b):
    """Accumulate ``a * b`` into ``out`` in place.  Zeros are not pruned."""
    get = out.get
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            prev = get(k)
            if prev is None:
                out[k] = va * vb
            else:
                out[k] = prev + va * vb
    return out


def axpy_into(out, a, c):
    """Accumulate ``c * a`` into ``out`` in place."""
    get = out.get
    for k, v in a.items():
        prev = get(k)
        if prev is None:
            out[k] = c * v
        else:
            out[k] = prev + c * v
    return out


def add_into(out, a):
    get = out.get
    for k, v in a.items():
        prev = get(k)
        out[k] = v if prev is None else prev + v
    return out


def pruned(d):
    return {k: v for k, v in d.items() if v}


def sparse_mul(a, b):
    return pruned(mul_into({}, a, b))


def cyclo_mul(a, b, table):
    """Product of two integer coefficient vectors modulo a monic integer polynomial.

    ``table[j]`` holds the reduction of ``x**(deg + j)`` as a length-``deg``
    integer vector.
    """
    deg = len(a)
    conv = [0] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    for j in range(2 * deg - 2, deg - 1, -1):
        c = conv[j]
        if c:
            row = table[j - deg]
            for t in range(deg):
                if row[t]:
                    conv[t] += c * row[t]
    return conv[:deg]
