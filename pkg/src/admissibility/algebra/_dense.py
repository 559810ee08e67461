"""Dense univariate polynomial kernels on plain lists.

Coefficients are stored in ascending degree order and the zero polynomial is
the empty list.  These helpers are shared by the rational, integer and
prime-field layers; they do no type checking.
"""

from math import gcd


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return trim([c * x for x in a])


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_shift(a, t):
    """Coefficients of a(x + t)."""
    out = list(a)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += t * out[j + 1]
    return trim(out)


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient (integer input)."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def divmod_exact_lc(a, b):
    """Division over a field-like domain where ``b[-1]`` divides exactly.

    Works for rationals (Fraction) and for integer division by monic ``b``.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            if lb == 1:
                t = c
            elif isinstance(c, int) and isinstance(lb, int):
                if c % lb:
                    raise ArithmeticError("inexact integer division")
                t = c // lb
            else:
                t = c / lb
            q[k - db] = t
            for i in range(db + 1):
                a[k - db + i] -= t * b[i]
    return trim(q), trim(a[:db])


def exact_quotient(a, b):
    """Integer polynomial quotient a/b, or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return None if a else []
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            t, r = divmod(c, lb)
            if r:
                return None
            q[k - db] = t
            for i in range(db + 1):
                a[k - db + i] -= t * b[i]
    if any(a[:db]):
        return None
    return trim(q)


def pseudo_rem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i in range(db + 1):
            a[shift + i] -= c * b[i]
        trim(a)
    return a


def zz_gcd(a, b):
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    cg = gcd(content(a) or 1, content(b) or 1)
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return [cg * c for c in primitive(a)]


def sym_mod(a, m):
    """Reduce coefficients into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in a:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return trim(out)


def norm_inf(a):
    return max((abs(c) for c in a), default=0)
