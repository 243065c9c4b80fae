"""
Closed-form weight distributions.

Shortened and punctured predictions apply to codes whose support designs are
t-designs on the relevant weights.  The functions here are arithmetic only;
checking that hypothesis belongs to ``designs`` and ``am``.

Parameterized tables cover three families:

* ``bent_*``   -- codes C(D_f) from the support of a bent f on GF(2^n)
* ``vbent_*``  -- codes C(F) from a bent vectorial F: GF(2^{2m}) -> GF(2^l)
* ``two_valued_code`` -- C(F) for F with Walsh values in {0, +-2^{(n+s)/2}}

The punctured vectorial tables put the all-one word at weight 2^{2m}-1 and
2^{2m}-2 (length minus one and minus two).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import WeightDistribution
from .designs import intersection_number
from .moments import binom


class PredictionError(ValueError):
    pass


@dataclass(frozen=True)
class PredictedDistribution:
    length: int
    counts: tuple
    provenance: str
    params: tuple = None  # (length, dimension, minimum distance)

    def __getitem__(self, i):
        return self.counts[i] if 0 <= i <= self.length else 0

    @property
    def size(self):
        return sum(self.counts)

    def as_distribution(self, q=2):
        return WeightDistribution(self.length, self.counts, q)

    def as_dict(self):
        return {i: a for i, a in enumerate(self.counts) if a}

    def matches(self, dist):
        return dist.length == self.length and tuple(dist.counts) == tuple(self.counts)

    def to_json(self):
        return {
            "nu": self.length,
            "counts": list(self.counts),
            "provenance": self.provenance,
            "params": list(self.params) if self.params else None,
        }


def _integral(value, what):
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise PredictionError(f"{what} = {value} is not a nonnegative integer")
    return int(value)


def _finish(raw, length, provenance, q=2):
    counts = tuple(_integral(raw.get(i, 0), f"A_{i}") for i in range(length + 1))
    size = sum(counts)
    dim, s = 0, 1
    while s < size:
        s *= q
        dim += 1
    if s != size:
        raise PredictionError(f"predicted size {size} is not a power of {q}")
    d = next((i for i in range(1, length + 1) if counts[i]), None)
    return PredictedDistribution(length, counts, provenance, (length, dim, d))


# -- generic shortened / punctured -------------------------------------------

def shortened_factor(nu, k, t):
    """Fraction of weight-k codewords vanishing on a fixed t-set."""
    num = comb(k, t) * binom(nu - t, k)
    den = comb(nu, t) * binom(nu - t, k - t)
    if den == 0:
        # k < t: every weight-k word misses some t-set entirely
        return Fraction(binom(nu - k, t), comb(nu, t))
    return Fraction(num, den)


def shortened_predict(dist, nu=None, t=1):
    nu = dist.length if nu is None else nu
    if nu != dist.length:
        raise PredictionError("nu disagrees with the distribution length")
    if not 0 <= t <= nu:
        raise PredictionError("need 0 <= t <= nu")
    raw = {}
    for k in range(nu - t + 1):
        if dist[k]:
            raw[k] = shortened_factor(nu, k, t) * dist[k]
    return _finish(raw, nu - t, f"shortened t={t}", dist.q)


def punctured_term(nu, t, k, i):
    den = binom(nu - t, k - t + i) * comb(nu, t)
    if den == 0:
        return Fraction(0)
    return Fraction(binom(nu - t, k) * binom(k + i, t) * comb(t, i), den)


def punctured_predict(dist, nu=None, t=1):
    nu = dist.length if nu is None else nu
    if nu != dist.length:
        raise PredictionError("nu disagrees with the distribution length")
    if not 0 <= t <= nu:
        raise PredictionError("need 0 <= t <= nu")
    if t == 0:
        return _finish(dist.as_dict(), nu, "punctured t=0", dist.q)
    raw = {}
    for k in range(nu - t + 1):
        total = sum(punctured_term(nu, t, k, i) * dist[k + i] for i in range(t + 1) if dist[k + i])
        if total:
            raw[k] = total
    # the zero word is the only weight-0 word when t < d
    raw[0] = raw.get(0, 0) + dist[0]
    return _finish(raw, nu - t, f"punctured t={t}", dist.q)


def design_count_from_lambda(nu, k, lam, t, q=2):
    """Weight-k words of the shortened code from the lambda of B_k."""
    if not 0 <= t <= k <= nu:
        raise PredictionError("need 0 <= t <= k <= nu")
    value = Fraction(binom(nu - t, k), comb(nu - t, k - t)) * (q - 1) * lam
    return _integral(value, f"A_{k}")


def dual_punctured_count(dual_lambdas, nu, t, k, q=2):
    """Weight-k words of the dual punctured on a t-set.

    ``dual_lambdas`` maps a weight w to the lambda of B_w(C^perp) as a t-design.
    """
    total = Fraction(0)
    for i in range(t + 1):
        w = k + i
        lam = dual_lambdas.get(w, 0)
        if not lam:
            continue
        if w < t or w > nu:
            raise PredictionError(f"weight {w} cannot carry a nonzero {t}-design lambda")
        total += comb(t, i) * intersection_number(nu, w, lam, t, t - i, i)
    return _integral((q - 1) * total, f"A_{k}")


def two_valued_design_lambdas(n, s):
    """(k, lambda) of the three 2-designs held by C(F)."""
    if not 1 <= s <= n - 1:
        raise PredictionError("need 1 <= s <= n-1")
    if (n + s) % 2:
        raise PredictionError("need n + s even")
    half = 2 ** (n - 1)
    off = 2 ** ((n + s - 2) // 2)
    base = 2 ** (n - s - 1)
    loff = 2 ** ((n - s - 2) // 2)
    return [
        (half - off, (base - loff) * (half - off - 1)),
        (half, (half - 1) * (2 ** n - 2 ** (n - s) + 1)),
        (half + off, (base + loff) * (half + off - 1)),
    ]


# -- parameterized tables ----------------------------------------------------

def _bent_table(n, nu_f, kind):
    if n < 6 or n % 2:
        raise PredictionError("bent tables need n >= 6 even")
    h = 2 ** ((n - 2) // 2)
    if nu_f not in (2 ** (n - 1) - h, 2 ** (n - 1) + h):
        raise PredictionError(f"nu_f must be 2^(n-1) +- 2^((n-2)/2), got {nu_f}")
    mult = 2 ** n - 1
    lo, hi = Fraction(nu_f, 2) - h // 2, Fraction(nu_f, 2) + h // 2
    lo, hi = int(lo), int(hi)
    v = nu_f
    if kind == "code":
        return v, {0: 1, lo: mult, hi: mult, v: 1}
    if kind == "short1":
        return v - 1, {
            0: 1,
            lo: Fraction(v + h, 2 * v) * mult,
            hi: Fraction(v - h, 2 * v) * mult,
        }
    two_lo = Fraction((v + h) * (v + h - 2), 4 * v * (v - 1)) * mult
    two_hi = Fraction((v - h) * (v - h - 2), 4 * v * (v - 1)) * mult
    if kind == "short2":
        return v - 2, {0: 1, lo: two_lo, hi: two_hi}
    if kind == "punct1":
        return v - 1, {
            0: 1,
            lo - 1: Fraction(v - h, 2 * v) * mult,
            lo: Fraction(v + h, 2 * v) * mult,
            hi - 1: Fraction(v + h, 2 * v) * mult,
            hi: Fraction(v - h, 2 * v) * mult,
            v - 1: 1,
        }
    if kind == "punct2":
        mid = Fraction(v * v - h * h, 2 * v * (v - 1)) * mult
        return v - 2, {
            0: 1,
            lo - 2: two_hi,
            lo - 1: mid,
            lo: two_lo,
            hi - 2: two_lo,
            hi - 1: mid,
            hi: two_hi,
            v - 2: 1,
        }
    raise PredictionError(f"unknown table kind {kind!r}")


def _vbent_table(m, l, kind):
    if m < 3:
        raise PredictionError("vectorial bent tables need m >= 3")
    if not 1 <= l <= m:
        raise PredictionError("need 1 <= l <= m")
    v = 2 ** (2 * m)
    c = 2 ** l - 1
    half = 2 ** (2 * m - 1)
    off = 2 ** (m - 1)
    lo, hi = half - off, half + off
    if kind == "code":
        return v, {0: 1, lo: c * v, half: 2 * (v - 1), hi: c * v, v: 1}
    if kind == "short1":
        return v - 1, {0: 1, lo: c * (half + off), half: v - 1, hi: c * (half - off)}
    q4 = 2 ** (m - 2)
    if kind == "short2":
        return v - 2, {
            0: 1,
            lo: c * q4 * (2 ** m + 2),
            half: half - 1,
            hi: c * q4 * (2 ** m - 2),
        }
    if kind == "punct1":
        return v - 1, {
            0: 1,
            lo - 1: c * (half - off),
            lo: c * (half + off),
            half - 1: v - 1,
            half: v - 1,
            hi - 1: c * (half + off),
            hi: c * (half - off),
            v - 1: 1,
        }
    if kind == "punct2":
        return v - 2, {
            0: 1,
            lo - 2: q4 * c * (2 ** m - 2),
            lo - 1: half * c,
            lo: c * q4 * (2 ** m + 2),
            half - 2: half - 1,
            half - 1: v,
            half: half - 1,
            hi - 2: q4 * c * (2 ** m + 2),
            hi - 1: half * c,
            hi: c * q4 * (2 ** m - 2),
            v - 2: 1,
        }
    raise PredictionError(f"unknown table kind {kind!r}")


def _two_valued_table(n, s):
    if not 1 <= s <= n - 1:
        raise PredictionError("need 1 <= s <= n-1")
    if (n + s) % 2:
        raise PredictionError("need n + s even")
    half = 2 ** (n - 1)
    off = 2 ** ((n + s - 2) // 2)
    side = 2 ** (n - s) * (2 ** n - 1)
    return 2 ** n, {
        0: 1,
        half - off: side,
        half: (2 ** n - 1) * (2 ** (n + 1) - 2 ** (n - s + 1) + 2),
        half + off: side,
        2 ** n: 1,
    }


FAMILIES = (
    "bent_code", "bent_short1", "bent_short2", "bent_punct1", "bent_punct2",
    "vbent_code", "vbent_short1", "vbent_short2", "vbent_punct1", "vbent_punct2",
    "two_valued_code",
)

_EXPECTED_DIM = {
    "bent": {"code": 1, "short1": 0, "short2": -1, "punct1": 1, "punct2": 1},
    "vbent": {"code": 1, "short1": 0, "short2": -1, "punct1": 1, "punct2": 1},
}


def table_predict(family, **params):
    """Evaluate one of the closed-form tables.

    bent_*: n, nu_f.  vbent_*: m, l.  two_valued_code: n, s.
    """
    if family not in FAMILIES:
        raise PredictionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    try:
        if family.startswith("bent_"):
            kind = family[5:]
            length, raw = _bent_table(int(params["n"]), int(params["nu_f"]), kind)
            dim = int(params["n"]) + _EXPECTED_DIM["bent"][kind]
        elif family.startswith("vbent_"):
            kind = family[6:]
            m, l = int(params["m"]), int(params["l"])
            length, raw = _vbent_table(m, l, kind)
            dim = 2 * m + l + _EXPECTED_DIM["vbent"][kind]
        else:
            n = int(params["n"])
            length, raw = _two_valued_table(n, int(params["s"]))
            dim = 2 * n + 1
    except KeyError as exc:
        raise PredictionError(f"missing parameter {exc.args[0]!r} for {family}") from None
    pred = _finish(raw, length, f"table {family}")
    if pred.size != 2 ** dim:
        raise PredictionError(f"{family}: counts sum to {pred.size}, expected 2^{dim}")
    return pred
