"""Dense integer polynomials as plain lists, constant term first.

These helpers are the fast path underneath RatPoly and the factoring code.
Every list is kept trimmed (no trailing zeros); the zero polynomial is [].
"""

from gmpy2 import mpz, gcd as _gcd

KRONECKER_MIN = 24


def trim(a):
    while a and not a[-1]:
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
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def _school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(a, bits):
    acc = mpz(0)
    for c in reversed(a):
        acc = (acc << bits) + c
    return acc


def _unpack_signed(v, bits, n):
    out = []
    mask = (mpz(1) << bits) - 1
    half = mpz(1) << (bits - 1)
    full = mpz(1) << bits
    for _ in range(n):
        r = v & mask
        if r >= half:
            r -= full
        out.append(r)
        v = (v - r) >> bits
    return out


def _unpack_nonneg(v, bits, n):
    nbytes = (bits + 7) // 8
    raw = int(v).to_bytes(n * nbytes, "little")
    fb = int.from_bytes
    return [mpz(fb(raw[i * nbytes:(i + 1) * nbytes], "little")) for i in range(n)]


def mul(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) < KRONECKER_MIN:
        return trim(_school(a, b))
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bits = int(ma).bit_length() + int(mb).bit_length() + min(len(a), len(b)).bit_length() + 2
    v = _pack(a, bits) * _pack(b, bits)
    return trim(_unpack_signed(v, bits, len(a) + len(b) - 1))


def mul_nonneg(a, b, bound_bits):
    """Product of two polynomials with coefficients in [0, 2^bound_bits)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < KRONECKER_MIN:
        return trim(_school(a, b))
    bits = 2 * bound_bits + min(len(a), len(b)).bit_length() + 1
    bits = (bits + 7) // 8 * 8
    v = _pack(a, bits) * _pack(b, bits)
    return trim(_unpack_nonneg(v, bits, len(a) + len(b) - 1))


def content(a):
    g = mpz(0)
    for c in a:
        g = _gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def deriv(a):
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def divexact(a, b):
    """Quotient a / b in Z[x]; returns None if b does not divide a over Z."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    r = list(a)
    lc = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            qk, rem = divmod(c, lc)
            if rem:
                return None
            q[k] = qk
            for j in range(db + 1):
                r[k + j] -= qk * b[j]
    if any(r[:db]):
        return None
    return trim(q)


def pseudo_rem(a, b):
    """Pseudo-remainder of a by b (lc(b)^(da-db+1) * a mod b)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lc * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        trim(r)
    return r


def gcd(a, b):
    """Primitive gcd over Z (positive leading coefficient)."""
    a = primitive(a)
    b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return a


def to_mod(a, m):
    return trim([c % m for c in a])


def symmetric(a, m):
    half = m // 2
    return trim([c - m if c > half else c for c in (x % m for x in a)])


def height(a):
    return max((abs(c) for c in a), default=mpz(0))


def norm2_ceil(a):
    """Ceiling of the Euclidean norm of the coefficient vector."""
    from gmpy2 import isqrt
    s = sum(mpz(c) * c for c in a)
    r = isqrt(s)
    return r if r * r == s else r + 1
