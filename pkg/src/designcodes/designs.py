"""
Support designs of codes and exhaustive t-design verification.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .code import BudgetExceeded, unpack_words

DEFAULT_DESIGN_BUDGET = 10 ** 9


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    """Points 0..nu-1 and a multiset of blocks, kept sorted and deduplicated."""

    nu: int
    blocks: tuple = ()
    mult: tuple = ()
    params: dict = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.blocks) != len(self.mult):
            raise DesignError("blocks and multiplicities differ in length")
        if any(m < 1 for m in self.mult):
            raise DesignError("multiplicities must be positive")
        for b in self.blocks:
            if b and (b[0] < 0 or b[-1] >= self.nu):
                raise DesignError(f"block {b} has points outside 0..{self.nu - 1}")

    @classmethod
    def from_blocks(cls, nu, blocks, mult=None, params=None):
        counter = Counter()
        mult = [1] * len(blocks) if mult is None else list(mult)
        for b, m in zip(blocks, mult):
            counter[tuple(sorted(int(x) for x in b))] += int(m)
        keys = sorted(counter)
        return cls(nu, tuple(keys), tuple(counter[k] for k in keys), params)

    @classmethod
    def from_incidence(cls, nu, incidence, params=None):
        rows = [tuple(np.flatnonzero(r).tolist()) for r in np.asarray(incidence)]
        return cls.from_blocks(nu, rows, params=params)

    @property
    def num_blocks(self):
        return sum(self.mult)

    @property
    def block_sizes(self):
        return sorted({len(b) for b in self.blocks})

    @property
    def k(self):
        sizes = self.block_sizes
        if len(sizes) > 1:
            raise DesignError("blocks of mixed sizes")
        return sizes[0] if sizes else None

    def is_simple(self):
        return all(m == 1 for m in self.mult)

    def incidence(self):
        inc = np.zeros((len(self.blocks), self.nu), dtype=np.uint8)
        for r, b in enumerate(self.blocks):
            inc[r, list(b)] = 1
        return inc

    def to_json(self):
        return {
            "nu": self.nu,
            "k": self.k,
            "blocks": [list(b) for b in self.blocks],
            "mult": list(self.mult),
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_blocks(obj["nu"], obj["blocks"], obj.get("mult"))


def support_design(code, w, budget=None):
    """B_w(C): supports of weight-w codewords, multiplicities divided by q-1."""
    q = code.q
    supports = []
    for block, weights in code.iter_codewords(budget):
        sel = weights == w
        if not sel.any():
            continue
        chosen = block[sel]
        if q == 2:
            chosen = unpack_words(chosen, code.length)
        supports.extend(tuple(np.flatnonzero(r).tolist()) for r in chosen)
    counter = Counter(supports)
    mult = {}
    for b, c in counter.items():
        m, rem = divmod(c, q - 1)
        if rem:
            raise AssertionError("support multiplicity not divisible by q-1")
        mult[b] = m
    keys = sorted(mult)
    return Design(code.length, tuple(keys), tuple(mult[k] for k in keys))


def support_designs(code, weights=None, budget=None):
    """{w: B_w(C)} for the requested weights (default: every occurring weight) in one pass."""
    q = code.q
    wanted = None if weights is None else set(weights)
    counters = {}
    for block, ws in code.iter_codewords(budget):
        sel = ws > 0 if wanted is None else np.isin(ws, list(wanted))
        if not sel.any():
            continue
        chosen = block[sel]
        if q == 2:
            chosen = unpack_words(chosen, code.length)
        for row, w in zip(chosen, ws[sel]):
            counters.setdefault(int(w), Counter())[tuple(np.flatnonzero(row).tolist())] += 1
    out = {}
    for w in sorted(wanted if wanted is not None else counters):
        counter = counters.get(w, Counter())
        keys = sorted(counter)
        mult = []
        for k in keys:
            m, rem = divmod(counter[k], q - 1)
            if rem:
                raise AssertionError("support multiplicity not divisible by q-1")
            mult.append(m)
        out[w] = Design(code.length, tuple(keys), tuple(mult))
    return out


def _block_side_counts(design, t):
    counter = Counter()
    for b, m in zip(design.blocks, design.mult):
        for sub in combinations(b, t):
            counter[sub] += m
    total = comb(design.nu, t)
    values = set(counter.values())
    if len(counter) < total:
        values.add(0)
    return values


def _point_side_counts(design, t):
    inc = design.incidence().astype(np.int64)
    mult = np.array(design.mult, dtype=np.int64)
    nu = design.nu
    values = set()
    for prefix in combinations(range(nu), t - 1):
        mask = np.ones(len(inc), dtype=bool)
        for x in prefix:
            mask &= inc[:, x] == 1
        start = prefix[-1] + 1 if prefix else 0
        if start >= nu:
            continue
        counts = mult[mask] @ inc[mask][:, start:] if mask.any() else np.zeros(nu - start, dtype=np.int64)
        values.update(np.unique(counts).tolist())
        if len(values) > 1:
            break
    return values


def design_cost(design, t):
    """Predicted work for (block-side, point-side) counting."""
    b = max(1, len(design.blocks))
    k = max(design.block_sizes or [0])
    return b * comb(k, t), b * comb(design.nu, t)


def t_subset_counts(design, t, budget=DEFAULT_DESIGN_BUDGET, strategy="auto"):
    """Set of distinct 'blocks through a t-subset' counts over all t-subsets."""
    if t < 0 or t > design.nu:
        raise DesignError("need 0 <= t <= nu")
    if t == 0:
        return {design.num_blocks}
    if not design.blocks:
        return {0}
    block_cost, point_cost = design_cost(design, t)
    if strategy == "auto":
        strategy = "block" if block_cost <= point_cost else "point"
    cost = block_cost if strategy == "block" else point_cost
    if cost > budget:
        raise BudgetExceeded(f"t-design check needs ~{cost} steps; budget is {budget}")
    if strategy == "block":
        return _block_side_counts(design, t)
    if strategy == "point":
        return _point_side_counts(design, t)
    raise DesignError(f"unknown strategy {strategy!r}")


def is_t_design(design, t, budget=DEFAULT_DESIGN_BUDGET, strategy="auto"):
    """lambda if every t-subset lies in the same number of blocks, else None."""
    values = t_subset_counts(design, t, budget, strategy)
    if len(values) == 1:
        return values.pop()
    return None


def intersection_number(nu, k, lam, t, t0, t1):
    """Blocks containing a t1-set and missing a disjoint t0-set."""
    if not (0 <= t0 and 0 <= t1 and t0 + t1 <= t <= k <= nu):
        raise DesignError("need t0 + t1 <= t <= k <= nu")
    return Fraction(comb(nu - t0 - t1, k - t1), comb(nu - t, k - t)) * lam


def count_intersection(design, t0_set, t1_set):
    """Exhaustive lambda_{T1}^{T0}."""
    t0_set, t1_set = set(t0_set), set(t1_set)
    if t0_set & t1_set:
        raise DesignError("T0 and T1 must be disjoint")
    total = 0
    for b, m in zip(design.blocks, design.mult):
        bs = set(b)
        if t1_set <= bs and not (t0_set & bs):
            total += m
    return total


def complement_lambda(nu, k, lam, t):
    if not t <= k <= nu - t:
        raise DesignError("need t <= k <= nu - t")
    return Fraction(comb(nu - t, k), comb(nu - t, k - t)) * lam


def complement_design(design, t=None, lam=None):
    """Replace every block by its complement; declares the new lambda when known."""
    params = design.params or {}
    t = params.get("t") if t is None else t
    lam = params.get("lambda") if lam is None else lam
    points = set(range(design.nu))
    blocks = [tuple(sorted(points - set(b))) for b in design.blocks]
    new_params = None
    if design.blocks and t is not None and lam is not None:
        k = design.k
        new_params = {"t": t, "k": design.nu - k, "lambda": complement_lambda(design.nu, k, lam, t)}
    return Design.from_blocks(design.nu, blocks, design.mult, new_params)


def promoted_lambda(nu, k, lam, t):
    """lambda of a (nu-k)-(nu,k,lam) design viewed as a t-design.

    Each t-set T lies in the blocks avoiding some (nu-k)-set outside T, and
    a (nu-k)-set is avoided by lam / C(k, 2k-nu) blocks.
    """
    if not 1 <= nu - k <= t <= k:
        raise DesignError("need 1 <= nu-k <= t <= k")
    return Fraction(comb(nu - t, nu - k), comb(k, 2 * k - nu)) * lam


def simplicity_w(q, d, nu):
    """Largest w <= nu with w - floor((w+q-2)/(q-1)) < d (0 if none)."""
    if d < 1:
        raise DesignError("need d >= 1")
    best = 0
    for w in range(1, nu + 1):
        if w - (w + q - 2) // (q - 1) < d:
            best = w
    return best
