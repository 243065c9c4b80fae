"""
Vectorial Boolean functions F: GF(2^n) -> GF(2^l).

A function is a lookup table of output element codes.  Boolean functions are
the l = 1 case.  The Walsh transform uses the component functions
Tr_{2^l/2}(lam * F(x)) for lam in GF(2^l)*.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .gf import field_new

MAX_DIFF_N = 11


class FunctionError(ValueError):
    pass


class SpectrumBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class VectorialFunction:
    n: int
    l: int
    table: np.ndarray
    field: object
    out_field: object

    def __post_init__(self):
        if self.l > self.n or self.l < 1:
            raise FunctionError("need 1 <= l <= n")
        if len(self.table) != 1 << self.n:
            raise FunctionError(f"table must have 2^{self.n} entries")
        if len(self.table) and (self.table.min() < 0 or self.table.max() >= 1 << self.l):
            raise FunctionError(f"table entries must lie in 0..2^{self.l}-1")
        self.table.setflags(write=False)

    def __call__(self, x):
        return int(self.table[x])

    def __eq__(self, other):
        return (
            isinstance(other, VectorialFunction)
            and (self.n, self.l) == (other.n, other.l)
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.n, self.l, self.table.tobytes()))

    def __add__(self, other):
        if (self.n, self.l) != (other.n, other.l):
            raise FunctionError("shape mismatch")
        return VectorialFunction(self.n, self.l, self.table ^ other.table, self.field, self.out_field)

    def to_text(self):
        width = max(1, -(-self.l // 4))
        body = [f"{int(v):0{width}x}" for v in self.table]
        lines = [f"{self.n} {self.l}"]
        lines += [" ".join(body[i:i + 16]) for i in range(0, len(body), 16)]
        return "\n".join(lines) + "\n"


def _binary_field(n, field):
    if field is None:
        return field_new(2, n)
    if field.p != 2 or field.m != n:
        raise FunctionError(f"need a field GF(2^{n})")
    return field


def from_table(n, l, table, field=None, out_field=None):
    field = _binary_field(n, field)
    if out_field is None:
        out_field = field if l == n else field_new(2, l)
    table = np.array(table, dtype=np.int64)
    return VectorialFunction(n, l, table, field, out_field)


def from_polynomial(n, terms, field=None):
    """x -> sum of coef * x^e over (coef code, e) pairs, in GF(2^n)."""
    field = _binary_field(n, field)
    xs = np.arange(1 << n, dtype=np.int64)
    acc = np.zeros(1 << n, dtype=np.int64)
    for coef, e in terms:
        if e < 0:
            raise FunctionError("exponents must be nonnegative")
        acc ^= field.mul_arrays(coef, field.pow_arrays(xs, e) if e else np.ones_like(xs))
    if all(e > 0 for _, e in terms):
        acc[0] = 0
    return VectorialFunction(n, n, acc, field, field)


def from_exponent(n, e, field=None, coef=1):
    """Power map x -> coef * x^e (0 -> 0 for e > 0)."""
    return from_polynomial(n, [(coef, e)], field)


def identity(n, field=None):
    return from_exponent(n, 1, field)


def subfield_embedding(field, l):
    """GF(2^l) as its own field plus the map from subfield codes of ``field``.

    The subfield generator beta = alpha^((2^n-1)/(2^l-1)) is sent to the
    generator u of a copy of GF(2^l) built on beta's minimal polynomial.
    Returns (small field, int array mapping big-field codes -> small codes,
    -1 off the subfield).
    """
    n = field.m
    if n % l:
        raise FunctionError(f"{l} does not divide {n}")
    if l == n:
        return field, np.arange(field.q, dtype=np.int64)
    step = field.order // ((1 << l) - 1)
    beta = field.exp(step)
    # minimal polynomial of beta: product of (X + beta^(2^i)), lowest degree first
    poly = [1]
    for i in range(l):
        root = field.pow(beta, 1 << i)
        shifted = [0] + poly
        scaled = [field.mul(root, c) for c in poly] + [0]
        poly = [a ^ b for a, b in zip(shifted, scaled)]
    if any(c not in (0, 1) for c in poly):
        raise AssertionError("minimal polynomial left GF(2)")
    small = field_new(2, l, tuple(reversed(poly)))
    mapping = np.full(field.q, -1, dtype=np.int64)
    mapping[0] = 0
    for j in range((1 << l) - 1):
        mapping[field.exp(j * step)] = small.exp(j)
    return small, mapping


def with_trace_to(F, l):
    """Tr_{2^n/2^l} composed with F (F must map into GF(2^n))."""
    if F.l != F.n:
        raise FunctionError("trace reduction needs an l = n function")
    if F.n % l:
        raise FunctionError(f"{l} does not divide {F.n}")
    small, mapping = subfield_embedding(F.field, l)
    traced = F.field.trace_table(l)[F.table]
    codes = mapping[traced]
    if (codes < 0).any():
        raise AssertionError("trace left the subfield")
    return VectorialFunction(F.n, l, codes, F.field, small)


def scaled(F, c):
    """x -> c * F(x) in the output field."""
    return VectorialFunction(F.n, F.l, F.out_field.mul_arrays(c, F.table), F.field, F.out_field)


# -- Walsh spectra ----------------------------------------------------------

def fwht(values):
    """In-place-style fast Walsh-Hadamard transform along the last axis."""
    a = np.array(values, dtype=np.int64)
    n = a.shape[-1]
    h = 1
    while h < n:
        a = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        x = a[..., 0, :].copy()
        y = a[..., 1, :]
        a[..., 0, :] = x + y
        a[..., 1, :] = x - y
        a = a.reshape(a.shape[:-3] + (n,))
        h *= 2
    return a


def component_bits(F):
    """(2^l x 2^n) array of Tr_{2^l/2}(lam * F(x)); row 0 is all zero."""
    out = F.out_field
    lams = np.arange(1 << F.l, dtype=np.int64)
    prods = out.mul_arrays(lams[:, None], F.table[None, :])
    return out.trace_table(1)[prods]


def _dual_index(field):
    """u(mu): bit j is Tr(mu * u^j), so Tr(mu x) = popcount(u(mu) & x) mod 2."""
    mus = np.arange(field.q, dtype=np.int64)
    tr = field.trace_table(1)
    idx = np.zeros(field.q, dtype=np.int64)
    for j in range(field.m):
        idx |= tr[field.mul_arrays(mus, 1 << j)] << j
    return idx


def walsh_spectrum(F):
    """W[lam, mu] for all lam in GF(2^l), mu in GF(2^n), in n*2^n steps per row."""
    signs = 1 - 2 * component_bits(F)
    transformed = fwht(signs)
    return transformed[:, _dual_index(F.field)]


def walsh(F, lam, mu):
    """Single Walsh coefficient by direct summation."""
    xs = np.arange(1 << F.n, dtype=np.int64)
    comp = F.out_field.trace_table(1)[F.out_field.mul_arrays(lam, F.table)]
    lin = F.field.trace_table(1)[F.field.mul_arrays(mu, xs)]
    return int(np.sum(1 - 2 * (comp ^ lin)))


def walsh_value_set(F, spectrum=None):
    spectrum = walsh_spectrum(F) if spectrum is None else spectrum
    return set(np.unique(spectrum[1:]).tolist())


def is_bent(f):
    """Boolean (l = 1) function with every Walsh value equal to +-2^(n/2)."""
    if f.l != 1:
        raise FunctionError("is_bent takes a Boolean function; use bent_vectorial")
    return bent_vectorial(f)


def bent_vectorial(F):
    if F.n % 2:
        return False
    return bool(np.all(np.abs(walsh_spectrum(F)[1:]) == 1 << (F.n // 2)))


def fourth_moment(F, spectrum=None):
    """Sum of W^4 over lam != 0 and all mu, as an exact integer."""
    spectrum = walsh_spectrum(F) if spectrum is None else spectrum
    sq = spectrum[1:].astype(np.int64) ** 2
    return sum(int(row) for row in (sq * sq).sum(axis=1))


def fourth_moment_target(n, delta):
    """Fourth moment of a differentially two-valued {0, delta} function on GF(2^n)."""
    return 2 ** (3 * n) * (2 ** n - 1) * delta


def fourth_moment_design_check(F, spectrum=None, diff=None):
    if F.l != F.n:
        raise FunctionError("the fourth-moment criterion needs l = n")
    diff = diff_spectrum(F) if diff is None else diff
    return fourth_moment(F, spectrum) == fourth_moment_target(F.n, diff.delta)


# -- differential spectra ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class DifferentialSpectrum:
    n: int
    l: int
    table: np.ndarray  # table[a-1, b] = delta(a, b) for a = 1..2^n-1

    @property
    def histogram(self):
        vals, counts = np.unique(self.table, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    @property
    def delta(self):
        return int(self.table.max())

    def __call__(self, a, b):
        if a == 0:
            raise FunctionError("delta(a, b) needs a != 0")
        return int(self.table[a - 1, b])

    def value_set(self):
        return set(self.histogram)


def diff_spectrum(F, max_n=MAX_DIFF_N):
    if F.n > max_n:
        raise SpectrumBudgetExceeded(f"n = {F.n} exceeds the differential budget n <= {max_n}")
    size = 1 << F.n
    outs = 1 << F.l
    xs = np.arange(size, dtype=np.int64)
    table = np.empty((size - 1, outs), dtype=np.int64)
    tab = F.table
    for lo in range(1, size, 256):
        a = np.arange(lo, min(size, lo + 256), dtype=np.int64)
        ders = tab[None, :] ^ tab[xs[None, :] ^ a[:, None]]
        flat = ders + (np.arange(len(a), dtype=np.int64) * outs)[:, None]
        table[lo - 1: lo - 1 + len(a)] = np.bincount(
            flat.ravel(), minlength=len(a) * outs
        ).reshape(len(a), outs)
    table.setflags(write=False)
    return DifferentialSpectrum(F.n, F.l, table)


def two_valued_s(F, spectrum=None):
    """s when the delta values are exactly {0, 2^s}, else None."""
    spectrum = diff_spectrum(F) if spectrum is None else spectrum
    values = spectrum.value_set()
    if len(values) != 2 or 0 not in values:
        return None
    top = max(values)
    if top & (top - 1):
        return None
    return top.bit_length() - 1


# -- families ---------------------------------------------------------------

def kasami(n, i, field=None):
    """x^(2^{2i} - 2^i + 1); returns (function, predicted s)."""
    if not 0 < i < n:
        raise FunctionError("need 0 < i < n")
    if n == 3 * i:
        raise FunctionError(f"inadmissible: n = 3i ({n} = 3*{i})")
    s = gcd(n, i)
    if (n // s) % 2 == 0:
        raise FunctionError(f"inadmissible: n/s = {n // s} is even")
    return from_exponent(n, 2 ** (2 * i) - 2 ** i + 1, field), s


def gold(n, i, field=None):
    """x^(2^i + 1); differentially two-valued with s = gcd(n, i)."""
    if not 0 < i < n:
        raise FunctionError("need 0 < i < n")
    return from_exponent(n, 2 ** i + 1, field), gcd(n, i)


def bracken_tan_tan(m, i, field=None):
    """alpha x^(2^i+1) + alpha^(2^m) x^(2^{2m} + 2^{m+i}) over GF(2^{3m})."""
    if m < 1 or i < 1:
        raise FunctionError("need positive m and i")
    if m % 3 == 0:
        raise FunctionError(f"inadmissible: 3 divides m = {m}")
    if (m + i) % 3:
        raise FunctionError(f"inadmissible: 3 does not divide m + i = {m + i}")
    s = gcd(m, i)
    if (m // s) % 2 == 0:
        raise FunctionError(f"inadmissible: m/s = {m // s} is even")
    n = 3 * m
    field = _binary_field(n, field)
    alpha = field.generator
    terms = [(alpha, 2 ** i + 1), (field.pow(alpha, 2 ** m), 2 ** (2 * m) + 2 ** (m + i))]
    return from_polynomial(n, terms, field), s


def read_table_text(text):
    """Function table file: header ``n l`` then 2^n hex output codes."""
    tokens = text.split()
    if len(tokens) < 2:
        raise FunctionError("missing 'n l' header")
    n, l = int(tokens[0]), int(tokens[1])
    values = [int(t, 16) for t in tokens[2:]]
    return from_table(n, l, values)
