"""Packed exponent vectors.

A monomial ``x1^a1 ... xn^an`` is packed into one integer with ``SHIFT`` bits
per variable, so monomial products become integer additions.
"""

SHIFT = 20
MASK = (1 << SHIFT) - 1
MAX_EXPONENT = MASK


def pack(exps):
    key = 0
    for j, e in enumerate(exps):
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (SHIFT * j)
    return key


def unpack(key, n):
    return tuple((key >> (SHIFT * j)) & MASK for j in range(n))


def unit(j):
    """Packed key of the j-th variable (0-based)."""
    return 1 << (SHIFT * j)


def degree(key, n):
    return sum(unpack(key, n))


def graded_lex_key(exps):
    """Sort key placing higher total degree first, then lexicographically larger."""
    return (-sum(exps), tuple(-e for e in exps))


def monomials_of_degree(n, d):
    """All exponent tuples of length n with total degree d, in graded-lex order."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out
