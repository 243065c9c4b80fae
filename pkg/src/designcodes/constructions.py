"""
Codes built from Boolean and vectorial functions, and Steiner systems from
differentially two-valued functions.

Coordinates are labelled by field element codes (or by an index range for
the ternary code), always in increasing order.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import boolfn
from .code import LinearCode
from .designs import Design
from .gf import field_new
from .predictor import PredictionError, table_predict


class ConstructionError(ValueError):
    pass


@dataclass
class ConstructionReport:
    code: LinearCode
    labels: tuple
    predicted: object = None  # PredictedDistribution or a (length, dim, d) triple
    distribution: object = None
    facts: dict = dc_field(default_factory=dict)

    @property
    def match(self):
        if self.predicted is None or self.distribution is None:
            return None
        if hasattr(self.predicted, "matches"):
            return self.predicted.matches(self.distribution)
        d = self.distribution
        return tuple(self.predicted) == (d.length, self.code.dimension, d.min_weight())

    @property
    def params(self):
        d = self.distribution.min_weight() if self.distribution is not None else None
        return (self.code.length, self.code.dimension, d)

    def to_json(self):
        pred = self.predicted
        if hasattr(pred, "to_json"):
            pred = pred.to_json()
        elif pred is not None:
            pred = {"params": list(pred)}
        return {
            "params": list(self.params),
            "predicted": pred,
            "counts": list(self.distribution.counts) if self.distribution is not None else None,
            "match": self.match,
            "facts": self.facts,
        }


def _trace_rows(field, coeffs, points):
    """Rows Tr(c * p) over GF(2) for each coefficient c, evaluated at points."""
    tr = field.trace_table(1)
    return [tr[field.mul_arrays(c, points)] for c in coeffs]


def _basis(field):
    return [field.p ** j for j in range(field.m)]


def _enumerate(report, budget):
    if budget is not False:
        report.distribution = report.code.weight_distribution(budget)
    return report


def code_from_bent_support(f, budget=None):
    """C(D_f): Tr(x d) + y over the support D_f of a Boolean function f."""
    if f.l != 1:
        raise ConstructionError("need a Boolean (l = 1) function")
    field = f.field
    support = np.flatnonzero(f.table).astype(np.int64)
    if len(support) == 0:
        raise ConstructionError("f has empty support")
    rows = _trace_rows(field, _basis(field), support)
    rows.append(np.ones(len(support), dtype=np.int64))
    code = LinearCode.from_rows(2, rows)
    bent = boolfn.is_bent(f)
    report = ConstructionReport(code, tuple(support.tolist()), facts={"bent": bent, "nu_f": len(support)})
    if bent and f.n >= 6:
        report.predicted = table_predict("bent_code", n=f.n, nu_f=len(support))
    return _enumerate(report, budget)


def _vectorial_prediction(F, facts):
    spectrum = boolfn.walsh_spectrum(F)
    n = F.n
    bent = n % 2 == 0 and bool(np.all(np.abs(spectrum[1:]) == 1 << (n // 2)))
    facts["bent_vectorial"] = bent
    if bent and n >= 6:
        return table_predict("vbent_code", m=n // 2, l=F.l)
    if F.l != F.n or n > boolfn.MAX_DIFF_N:
        return None
    s = boolfn.two_valued_s(F)
    facts["two_valued_s"] = s
    if s is None or not 1 <= s <= n - 1 or (n + s) % 2:
        return None
    allowed = {0, 1 << ((n + s) // 2), -(1 << ((n + s) // 2))}
    walsh_ok = set(np.unique(spectrum[1:]).tolist()) <= allowed
    facts["walsh_three_valued"] = walsh_ok
    if not walsh_ok:
        return None
    try:
        return table_predict("two_valued_code", n=n, s=s)
    except PredictionError:
        return None


def vectorial_rows(F):
    """Generator rows Tr_l(a F(x)), Tr_n(b x), 1 over all x in GF(2^n)."""
    xs = np.arange(1 << F.n, dtype=np.int64)
    rows = _trace_rows(F.out_field, _basis(F.out_field), F.table)
    rows += _trace_rows(F.field, _basis(F.field), xs)
    rows.append(np.ones(len(xs), dtype=np.int64))
    return rows


def code_from_vectorial(F, budget=None, predict=True):
    """C(F) of length 2^n."""
    code = LinearCode.from_rows(2, vectorial_rows(F))
    report = ConstructionReport(code, tuple(range(1 << F.n)))
    if predict:
        report.predicted = _vectorial_prediction(F, report.facts)
    return _enumerate(report, budget)


def rm1(n):
    """First-order Reed-Muller code {Tr(bx) + c} in element-code order."""
    if n < 2:
        raise ConstructionError("need n >= 2")
    field = field_new(2, n)
    xs = np.arange(1 << n, dtype=np.int64)
    rows = _trace_rows(field, _basis(field), xs)
    rows.append(np.ones(len(xs), dtype=np.int64))
    return LinearCode.from_rows(2, rows)


def ternary_code(m, budget=None):
    """Tr(a alpha^{4i} + b alpha^{2i}) for i < (3^m - 1)/2 over GF(3^m)."""
    if m < 1 or m % 2 == 0:
        raise ConstructionError("need odd m >= 1")
    field = field_new(3, m)
    length = (3 ** m - 1) // 2
    idx = np.arange(length, dtype=np.int64)
    tr = field.trace_table(1)
    rows = []
    for step in (4, 2):
        points = field.antilog[(step * idx) % field.order]
        rows += [tr[field.mul_arrays(a, points)] for a in _basis(field)]
    code = LinearCode.from_rows(3, rows)
    d = 3 ** (m - 1) - 3 ** ((m - 1) // 2)
    weights = sorted({3 ** (m - 1) - 3 ** ((m - 1) // 2), 3 ** (m - 1), 3 ** (m - 1) + 3 ** ((m - 1) // 2)})
    report = ConstructionReport(code, tuple(range(length)), predicted=(length, 2 * m, d))
    report.facts["allowed_weights"] = weights
    _enumerate(report, budget)
    if report.distribution is not None:
        report.facts["weights_confined"] = set(report.distribution.weights()) <= set(weights)
    return report


# -- Steiner systems --------------------------------------------------------

def weight4_dual_blocks(F):
    """Sorted array of 4-blocks {x, x+a, y, y+a} with F(x)+F(x+a) = F(y)+F(y+a).

    These are the supports of the weight-4 words of C(F)^perp.  Blocks are
    rows of four increasing points; each arises from three differences a and
    is kept once.
    """
    size = 1 << F.n
    xs = np.arange(size, dtype=np.int64)
    tab = F.table
    shift = F.n
    found = []
    for a in range(1, size):
        partner = xs ^ a
        reps = xs[xs < partner]
        keys = tab[reps] ^ tab[reps ^ a]
        order = np.argsort(keys, kind="stable")
        reps, keys = reps[order], keys[order]
        starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
        sizes = np.diff(np.r_[starts, len(keys)])
        for g in np.unique(sizes):
            if g < 2:
                continue
            firsts = starts[sizes == g]
            for i in range(g):
                for j in range(i + 1, g):
                    x, y = reps[firsts + i], reps[firsts + j]
                    pts = np.sort(np.stack([x, x ^ a, y, y ^ a], axis=1), axis=1)
                    found.append(pts)
    if not found:
        return np.zeros((0, 4), dtype=np.int64)
    allpts = np.vstack(found)
    codes = (allpts[:, 0] << (3 * shift)) | (allpts[:, 1] << (2 * shift)) | (allpts[:, 2] << shift) | allpts[:, 3]
    # packed codes sort lexicographically by block
    _, first = np.unique(codes, return_index=True)
    return allpts[first]


def dual_weight4_design(F):
    blocks = weight4_dual_blocks(F)
    return Design(1 << F.n, tuple(tuple(int(v) for v in b) for b in blocks), (1,) * len(blocks))


def steiner_from_function(F):
    """Design of weight-4 dual supports of C(F), found by derivative buckets."""
    if F.l != F.n:
        raise ConstructionError("Steiner extraction needs l = n")
    blocks = weight4_dual_blocks(F)
    return Design(1 << F.n, tuple(tuple(int(v) for v in b) for b in blocks), (1,) * len(blocks))


def pair_lambda(F, x1, x2, spectrum=None):
    """Blocks through {x1, x2}: (delta(x1+x2, F(x1)+F(x2)) - 2) / 2."""
    if x1 == x2:
        raise ConstructionError("need two distinct points")
    spectrum = boolfn.diff_spectrum(F) if spectrum is None else spectrum
    a = x1 ^ x2
    b = int(F.table[x1] ^ F.table[x2])
    return Fraction(spectrum(a, b) - 2, 2)


def all_pair_lambdas(F, spectrum=None):
    """Set of pair_lambda values over every pair of points."""
    spectrum = boolfn.diff_spectrum(F) if spectrum is None else spectrum
    size = 1 << F.n
    xs = np.arange(size, dtype=np.int64)
    values = set()
    for a in range(1, size):
        b = F.table ^ F.table[xs ^ a]
        values.update(np.unique(spectrum.table[a - 1, b]).tolist())
    return {Fraction(v - 2, 2) for v in values}
