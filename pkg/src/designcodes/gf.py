"""
Finite fields GF(p^m) backed by log/antilog tables.

Elements are integer codes: the base-p digits of a code are the coefficients
of the polynomial representative, lowest degree first.  Bulk operations
accept numpy arrays of codes.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7)
MAX_FIELD_SIZE = 1 << 24


class FieldError(ValueError):
    pass


# Monic primitive moduli, most significant coefficient first.  GF(2^6) uses
# u^6+u^4+u^3+u+1; every other entry is the first primitive polynomial in
# the enumeration order of ``_monic_polys``.
DEFAULT_MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 1, 1, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 1, 0, 1),
    (2, 9): (1, 0, 0, 0, 0, 1, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (2, 11): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1),
    (2, 12): (1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1),
    (2, 13): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1),
    (2, 14): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1),
    (2, 15): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (2, 16): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1),
    (2, 17): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (2, 18): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1),
    (2, 19): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1),
    (2, 20): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (1, 1, 2),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 0, 0, 1, 2),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (3, 6): (1, 0, 0, 0, 0, 1, 2),
    (3, 7): (1, 0, 0, 0, 0, 1, 2, 1),
    (3, 8): (1, 0, 0, 0, 0, 1, 0, 0, 2),
    (3, 9): (1, 0, 0, 0, 0, 0, 2, 1, 0, 1),
    (3, 10): (1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2),
    (3, 11): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1),
    (3, 12): (1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 2, 2),
    (3, 13): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1),
    (3, 14): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2),
    (3, 15): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1),
    (5, 1): (1, 2),
    (5, 2): (1, 1, 2),
    (5, 3): (1, 0, 3, 2),
    (5, 4): (1, 0, 1, 2, 2),
    (5, 5): (1, 0, 0, 0, 4, 2),
    (5, 6): (1, 0, 0, 0, 0, 1, 2),
    (5, 7): (1, 0, 0, 0, 0, 0, 3, 2),
    (5, 8): (1, 0, 0, 0, 0, 0, 1, 2, 3),
    (5, 9): (1, 0, 0, 0, 0, 0, 0, 1, 2, 3),
    (5, 10): (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3),
    (7, 1): (1, 2),
    (7, 2): (1, 1, 3),
    (7, 3): (1, 0, 3, 2),
    (7, 4): (1, 0, 1, 3, 5),
    (7, 5): (1, 0, 0, 0, 1, 4),
    (7, 6): (1, 0, 0, 0, 3, 1, 5),
    (7, 7): (1, 0, 0, 0, 0, 0, 6, 2),
    (7, 8): (1, 0, 0, 0, 0, 0, 0, 1, 3),
}


# -- polynomials over GF(p), coefficient lists lowest degree first ---------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _trim(a)
    return a


def poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] = (out[i + j] + ac * bc) % p
    return poly_mod(out, mod, p)


def poly_powmod(a, e, mod, p):
    result = [1]
    base = poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _monic_polys(p, degree):
    """All monic polynomials of the given degree, lowest coefficient first."""
    for code in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(p, low_first):
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(low_first) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for div in _monic_polys(p, deg):
            if not poly_mod(low_first, div, p):
                return False
    return True


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive_poly(p, high_first):
    """Order test of u modulo the polynomial; independent of the log tables."""
    low = list(reversed(high_first))
    m = len(low) - 1
    if not is_irreducible(p, low):
        return False
    order = p ** m - 1
    u = [0, 1]
    if poly_powmod(u, order, low, p) != [1]:
        return False
    return all(poly_powmod(u, order // r, low, p) != [1] for r in _prime_factors(order))


# -- the field --------------------------------------------------------------

class FieldTable:
    """GF(p^m) with antilog/log tables over a fixed generator."""

    def __init__(self, p, m, modulus=None, generator=None):
        if p not in SUPPORTED_PRIMES:
            raise FieldError(f"unsupported characteristic {p}")
        if not 1 <= m <= 20:
            raise FieldError(f"extension degree {m} outside 1..20")
        if p ** m > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{m} exceeds 2^24")
        if modulus is None:
            if (p, m) not in DEFAULT_MODULI:
                modulus = _first_primitive(p, m)
            else:
                modulus = DEFAULT_MODULI[(p, m)]
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[0] != 1:
            raise FieldError("modulus must be monic of degree m")
        low = list(reversed(modulus))
        if not is_irreducible(p, low):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = p ** m
        self.order = self.q - 1
        self.modulus = modulus
        self._low = low
        self._weights = np.array([p ** j for j in range(m)], dtype=np.int64)

        if generator is None:
            generator = self._code_of(poly_mod([0, 1], low, p))
        generator = int(generator)
        if not 0 < generator < self.q:
            raise FieldError("generator must be a nonzero element code")
        self.generator = generator
        self._build_tables()

    # codes <-> coefficient lists
    def _coeffs_of(self, code):
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return out

    def _code_of(self, coeffs):
        code = 0
        for c in reversed(list(coeffs)[: self.m]):
            code = code * self.p + c
        return code

    def _slow_mul(self, a, b):
        prod = poly_mulmod(self._coeffs_of(a), self._coeffs_of(b), self._low, self.p)
        return self._code_of(prod + [0] * (self.m - len(prod)))

    def _build_tables(self):
        p, m, n = self.p, self.m, self.order
        # Row j: digits of g * u^j.  Powers of g are then rows of V @ M^k.
        mat = np.array(
            [self._coeffs_of(self._slow_mul(self.generator, p ** j)) for j in range(m)],
            dtype=np.int64,
        )
        digits = np.zeros((1, m), dtype=np.int64)
        digits[0, 0] = 1
        step = mat
        while len(digits) < n:
            nxt = np.empty_like(digits)
            for lo in range(0, len(digits), 1 << 20):
                nxt[lo:lo + (1 << 20)] = digits[lo:lo + (1 << 20)] @ step % p
            digits = np.vstack([digits, nxt])
            step = step @ step % p
        digits = digits[:n]
        antilog = digits @ self._weights
        log = np.full(self.q, -1, dtype=np.int64)
        log[antilog] = np.arange(n, dtype=np.int64)
        if np.count_nonzero(log[1:] >= 0) != n:
            raise FieldError(
                f"generator {self.generator} is not primitive for modulus {self.modulus}"
            )
        self.antilog = antilog
        self.antilog.setflags(write=False)
        self.log = log
        self.log.setflags(write=False)
        self._trace_cache = {}

    # -- scalar operations on codes
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return int(self.add_arrays(np.int64(a), np.int64(b)))

    def neg(self, a):
        if self.p == 2:
            return a
        return int(self.neg_arrays(np.int64(a)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % self.order])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.antilog[(-self.log[a]) % self.order])

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.antilog[(int(self.log[a]) * e) % self.order])

    def exp(self, k):
        """generator ** k"""
        return int(self.antilog[k % self.order])

    # -- vectorized operations on code arrays
    def digits(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self._weights) % self.p

    def from_digits(self, digits):
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self._weights

    def add_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.from_digits(self.digits(a) + self.digits(b))

    def neg_arrays(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.from_digits(-self.digits(a))

    def mul_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out[nz] = self.antilog[(self.log[a[nz]] + self.log[b[nz]]) % self.order]
        return out

    def pow_arrays(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones(a.shape, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = a != 0
        out[nz] = self.antilog[(self.log[a[nz]] * (e % self.order)) % self.order]
        return out

    def trace_table(self, degree=1):
        """Trace to GF(p^degree) of every element code, as codes of this field."""
        if degree < 1 or self.m % degree:
            raise FieldError(f"{degree} does not divide {self.m}")
        if degree not in self._trace_cache:
            codes = np.arange(self.q, dtype=np.int64)
            acc = codes.copy()
            for i in range(1, self.m // degree):
                acc = self.add_arrays(acc, self.pow_arrays(codes, self.p ** (degree * i)))
            fixed = self.pow_arrays(acc, self.p ** degree)
            if not np.array_equal(fixed, acc):
                raise AssertionError("trace values escaped the subfield")
            acc.setflags(write=False)
            self._trace_cache[degree] = acc
        return self._trace_cache[degree]

    def trace(self, a, degree=1):
        return int(self.trace_table(degree)[a])

    def subfield_elements(self, degree):
        """Sorted codes of GF(p^degree) inside this field."""
        if self.m % degree:
            raise FieldError(f"{degree} does not divide {self.m}")
        step = self.order // (self.p ** degree - 1)
        elems = self.antilog[::step][: self.p ** degree - 1]
        return np.sort(np.concatenate([[0], elems]))

    def element(self, code):
        return FieldElement(int(code), self)

    @property
    def alpha(self):
        return self.element(self.generator)

    def spec(self):
        """Field spec text: ``p m c_m ... c_0``."""
        return " ".join(str(x) for x in (self.p, self.m) + self.modulus)

    def __eq__(self, other):
        return (
            isinstance(other, FieldTable)
            and (self.p, self.m, self.modulus, self.generator)
            == (other.p, other.m, other.modulus, other.generator)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.generator))

    def __repr__(self):
        return f"FieldTable(GF({self.p}^{self.m}), modulus={self.modulus})"


def _first_primitive(p, m):
    for low in _monic_polys(p, m):
        high = tuple(reversed(low))
        if is_primitive_poly(p, high):
            return high
    raise FieldError(f"no primitive polynomial of degree {m} over GF({p})")


@lru_cache(maxsize=None)
def field_new(p, m, modulus=None, generator=None):
    if modulus is not None:
        modulus = tuple(modulus)
    return FieldTable(p, m, modulus, generator)


def parse_field_spec(text):
    """Parse ``p m c_m c_{m-1} ... c_0``; a bare ``p m`` selects the default modulus."""
    parts = [int(x) for x in text.replace(",", " ").split()]
    if len(parts) < 2:
        raise FieldError(f"bad field spec {text!r}")
    p, m = parts[0], parts[1]
    modulus = tuple(parts[2:]) or None
    return field_new(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    code: int
    field: FieldTable

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise FieldError(f"code {self.code} outside GF({self.field.q})")

    def _check(self, other):
        if isinstance(other, int):
            return other % self.field.p
        if other.field != self.field:
            raise FieldError("elements belong to different fields")
        return other.code

    def __add__(self, other):
        return FieldElement(self.field.add(self.code, self._check(other)), self.field)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field.neg(self.code), self.field)

    def __sub__(self, other):
        return FieldElement(self.field.sub(self.code, self._check(other)), self.field)

    def __mul__(self, other):
        return FieldElement(self.field.mul(self.code, self._check(other)), self.field)

    __rmul__ = __mul__

    def __pow__(self, e):
        return FieldElement(self.field.pow(self.code, e), self.field)

    def inverse(self):
        return FieldElement(self.field.inv(self.code), self.field)

    def __truediv__(self, other):
        return self * FieldElement(self._check(other), self.field).inverse()

    def trace(self, degree=1):
        return FieldElement(self.field.trace(self.code, degree), self.field)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"<{self.code} in GF({self.field.p}^{self.field.m})>"
