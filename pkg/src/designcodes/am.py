"""
Deciding whether a code supports t-designs.

Three procedures: the classic Assmus-Mattson weight count, a generalized
check that verifies its design hypotheses exhaustively, and the
shortened/punctured invariance characterization.  Nothing is assumed; when a
budget blocks verification the verdict is "undecided".
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .code import BudgetExceeded, LinearCode
from .designs import DEFAULT_DESIGN_BUDGET, is_t_design, simplicity_w, support_designs
from .moments import macwilliams

YES, NO, UNDECIDED = "yes", "no", "undecided"


class AmError(ValueError):
    pass


@dataclass
class AmReport:
    mode: str
    t: int
    conclusion: str
    facts: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fact(self, name, value, ok=None):
        self.facts.append({"name": name, "value": value, "ok": ok})

    def to_json(self):
        return {
            "mode": self.mode,
            "t": self.t,
            "conclusion": self.conclusion,
            "facts": self.facts,
            "info": self.info,
        }


def _distributions(code, budget):
    dist = code.weight_distribution(budget)
    return dist, macwilliams(dist)


def _check_t(t, d, d_dual):
    if t < 0:
        raise AmError("need t >= 0")
    bound = min(x for x in (d, d_dual) if x is not None) if (d or d_dual) else None
    if bound is not None and t >= bound:
        raise AmError(f"need t < min(d, d_perp) = {bound}; got t = {t}")


def _simplicity(report, code, d, d_dual):
    q, nu = code.q, code.length
    windows = {}
    if d:
        windows["code"] = [d, simplicity_w(q, d, nu)]
    if d_dual:
        windows["dual"] = [d_dual, simplicity_w(q, d_dual, nu)]
    report.info["simple_windows"] = windows


def classic_am(code, t, budget=None):
    dist, dual = _distributions(code, budget)
    d, d_dual = dist.min_weight(), dual.min_weight()
    _check_t(t, d, d_dual)
    nu = code.length
    in_range = [w for w in dist.weights() if w <= nu - t]
    allowed = (d_dual - t) if d_dual else None
    ok = allowed is None or len(in_range) <= allowed
    report = AmReport("classic", t, YES if ok else NO)
    report.fact("d", d)
    report.fact("d_perp", d_dual)
    report.fact("weights_in_1..nu-t", in_range)
    report.fact("weight_count_bound", allowed, ok)
    _simplicity(report, code, d, d_dual)
    return report


def s_sets(S, nu, t):
    """S_{t'} = S plus {nu-t+1 .. nu-t'} for 1 <= t' <= t."""
    return {tp: sorted(set(S) | set(range(nu - t + 1, nu - tp + 1))) for tp in range(1, t + 1)}


def _design_fact(report, label, designs, w, t, design_budget):
    try:
        lam = is_t_design(designs[w], t, design_budget)
    except BudgetExceeded as exc:
        report.fact(label, str(exc), None)
        return None
    report.fact(label, lam, lam is not None)
    return lam is not None


CROSS_CHECK_BUDGET = 1 << 16


def generalized_am(code, t, S, budget=None, design_budget=DEFAULT_DESIGN_BUDGET,
                   cross_check_budget=CROSS_CHECK_BUDGET):
    """Verify the hypotheses for S and conclude; cross-check codes of at most
    ``cross_check_budget`` words (0 disables)."""
    dist, dual = _distributions(code, budget)
    nu = code.length
    d, d_dual = dist.min_weight(), dual.min_weight()
    _check_t(t, d, d_dual)
    S = sorted(set(S))
    if not S:
        raise AmError("S must be non-empty")
    bad = [w for w in S if not d <= w <= nu]
    if bad:
        raise AmError(f"S must lie in {{{d}..{nu}}}; offending weights {bad}")
    # weights above nu-t play no role on the primal side; keeping them in s
    # only widens the dual range that gets verified
    above = [w for w in S if w > nu - t]
    s = len(S)
    report = AmReport("generalized", t, UNDECIDED)
    report.fact("d", d)
    report.fact("d_perp", d_dual)
    if above:
        report.fact("S_above_nu-t", above)
    report.info["S"] = S
    report.info["S_tprime"] = {str(k): v for k, v in s_sets(S, nu, t).items()}
    _simplicity(report, code, d, d_dual)

    verdicts = []
    primal = [w for w in range(d, nu - t + 1) if w not in S and dist[w]]
    for w in range(d, nu - t + 1):
        if w not in S and not dist[w]:
            report.fact(f"B_{w}(C)", "empty", True)
    designs = support_designs(code, primal, budget) if primal else {}
    for w in primal:
        verdicts.append(_design_fact(report, f"B_{w}(C)", designs, w, t, design_budget))

    dual_weights = []
    for w in range(0, min(nu, s + t - 1) + 1):
        if not dual[w]:
            report.fact(f"B_{w}(C_perp)", "empty", True)
        elif w < t:
            # blocks smaller than t contain no t-subset
            report.fact(f"B_{w}(C_perp)", 0, True)
        else:
            dual_weights.append(w)
    dual_code = None
    if dual_weights:
        try:
            dual_code = code.dual()
            dual_designs = support_designs(dual_code, dual_weights, budget)
        except BudgetExceeded as exc:
            report.fact("dual_enumeration", str(exc), None)
            verdicts.append(None)
            dual_designs = {}
        for w in dual_designs:
            verdicts.append(_design_fact(report, f"B_{w}(C_perp)", dual_designs, w, t, design_budget))

    if any(v is False for v in verdicts):
        report.conclusion = NO
    elif any(v is None for v in verdicts):
        report.conclusion = UNDECIDED
    else:
        report.conclusion = YES
    if report.conclusion == YES and cross_check_budget:
        report.info["cross_check"] = _cross_check(code, dual_code, dist, t, cross_check_budget, design_budget)
    return report


def _cross_check(code, dual_code, dist, t, budget, design_budget):
    """Exhaustive t-design checks of every weight (dual too when enumerable)."""
    out = {}
    if code.size > budget:
        out["code"] = "budget"
        return out
    designs = support_designs(code, [w for w in dist.weights() if w >= t], budget)
    for w, des in designs.items():
        try:
            out[f"B_{w}(C)"] = is_t_design(des, t, design_budget)
        except BudgetExceeded:
            out[f"B_{w}(C)"] = "budget"
    dual_code = code.dual() if dual_code is None else dual_code
    try:
        dual_designs = support_designs(dual_code, None, budget)
    except BudgetExceeded:
        out["dual"] = "budget"
        return out
    for w, des in dual_designs.items():
        if w < t:
            continue
        try:
            out[f"B_{w}(C_perp)"] = is_t_design(des, t, design_budget)
        except BudgetExceeded:
            out[f"B_{w}(C_perp)"] = "budget"
    return out


# -- characterization --------------------------------------------------------

def coordinate_set_distributions(words, nonzero_cols, coord_sets, nu):
    """Shortened and punctured distributions for each coordinate set."""
    weights = nonzero_cols.sum(axis=1)
    tp = len(coord_sets[0]) if coord_sets else 0
    short, punct = [], []
    for T in coord_sets:
        on_t = nonzero_cols[:, list(T)].sum(axis=1)
        zero_on_t = on_t == 0
        short.append(tuple(np.bincount(weights[zero_on_t], minlength=nu + 1)[: nu - tp + 1].tolist()))
        rest = weights - on_t
        kernel = int(np.count_nonzero(rest == 0))
        hist = np.bincount(rest, minlength=nu - tp + 1)
        if (hist % kernel).any():
            raise AssertionError("punctured multiplicities not divisible by the kernel size")
        punct.append(tuple((hist // kernel).tolist()))
    return short, punct


def characterization(code, t, budget=None, design_budget=DEFAULT_DESIGN_BUDGET, direct_max_nu=64):
    """Evaluate the four equivalent statements; (1)/(2) only for nu <= direct_max_nu."""
    dist, dual = _distributions(code, budget)
    nu = code.length
    d, d_dual = dist.min_weight(), dual.min_weight()
    report = AmReport("characterization", t, UNDECIDED)
    report.fact("d", d)
    report.fact("d_perp", d_dual)
    statements = {}
    if t == 0:
        statements = {"1": True, "2": True, "3": True, "4": True}
        report.info["statements"] = statements
        report.info["agree"] = True
        report.conclusion = YES
        return report
    _check_t(t, d, d_dual)

    work = sum(comb(nu, tp) for tp in range(1, t + 1)) * code.size
    if work > design_budget:
        raise BudgetExceeded(f"characterization needs ~{work} steps; budget is {design_budget}")
    words = code.codeword_matrix(budget)
    nonzero = (words != 0).astype(np.int64)
    s3 = s4 = True
    for tp in range(1, t + 1):
        sets = list(combinations(range(nu), tp))
        short, punct = coordinate_set_distributions(words, nonzero, sets, nu)
        same_s, same_p = len(set(short)) == 1, len(set(punct)) == 1
        report.fact(f"shortened_invariant_t'={tp}", len(set(short)), same_s)
        report.fact(f"punctured_invariant_t'={tp}", len(set(punct)), same_p)
        if not same_s and "witness_T" not in report.info:
            report.info["witness_T"] = [list(sets[0]), list(sets[short.index(next(x for x in short if x != short[0]))])]
        s3 &= same_s
        s4 &= same_p
    statements["3"], statements["4"] = s3, s4

    if nu <= direct_max_nu:
        failing = []
        ok1 = True
        for w, des in support_designs(code, None, budget).items():
            lam = is_t_design(des, t, design_budget)
            if lam is None:
                ok1 = False
                failing.append(w)
        statements["1"] = ok1
        report.info["non_design_weights"] = failing
        try:
            ok2 = True
            for w, des in support_designs(code.dual(), None, budget).items():
                if is_t_design(des, t, design_budget) is None:
                    ok2 = False
            statements["2"] = ok2
        except BudgetExceeded:
            pass
    report.info["statements"] = statements
    report.info["agree"] = len(set(statements.values())) == 1
    report.conclusion = YES if all(statements.values()) else NO
    if not report.info["agree"]:
        report.conclusion = UNDECIDED
    return report


def random_witness_code(length=16, dim=5, t=2, seed=0, max_tries=1000):
    """Seeded search for a binary [length, dim] code whose shortened distributions vary.

    Columns are distinct nonzero vectors of GF(2)^dim, so d_perp >= 3.
    Returns (code, characterization report).
    """
    rng = np.random.default_rng(seed)
    pool = np.arange(1, 1 << dim)
    if length > len(pool):
        raise AmError("not enough distinct nonzero columns")
    for _ in range(max_tries):
        cols = rng.choice(pool, size=length, replace=False)
        gen = ((cols[None, :] >> np.arange(dim)[:, None]) & 1).astype(np.int64)
        code = LinearCode.from_matrix(2, gen)
        if code.dimension != dim:
            continue
        dist = code.weight_distribution()
        if dist.min_weight() is None or dist.min_weight() <= t:
            continue
        report = characterization(code, t)
        if report.info["statements"].get("3") is False and report.info.get("non_design_weights"):
            return code, report
    raise AmError("no witness found")

