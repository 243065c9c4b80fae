"""
Reproduction suite: the worked examples and headline checks, each run from
scratch by enumeration and compared with exact expected values.
"""

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from . import am, boolfn, constructions, moments, predictor
from .code import LinearCode, WeightDistribution
from .designs import is_t_design, support_design, support_designs
from .gf import field_new

WORKED_MODULUS = (1, 0, 1, 1, 0, 1, 1)  # u^6 + u^4 + u^3 + u + 1


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float = None
    details: dict = field(default_factory=dict)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"criterion {self.number:2d} {status}  {self.name}  {self.seconds:.2f}s{limit}"

    def to_json(self):
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "limit": self.limit,
            "details": self.details,
        }


def _dist(nu, terms):
    return WeightDistribution.from_dict(nu, terms)


# -- shared objects (built once per process) --------------------------------

@lru_cache(maxsize=None)
def worked_field():
    return field_new(2, 6, WORKED_MODULUS)


@lru_cache(maxsize=None)
def bent_n6():
    K = worked_field()
    f = boolfn.with_trace_to(boolfn.from_exponent(6, 3, K, coef=K.generator), 1)
    return f, constructions.code_from_bent_support(f)


@lru_cache(maxsize=None)
def vbent_n6():
    K = worked_field()
    F = boolfn.with_trace_to(boolfn.from_exponent(6, 3, K, coef=K.generator), 3)
    return F, constructions.code_from_vectorial(F)


@lru_cache(maxsize=None)
def kasami_n5():
    F, s = boolfn.kasami(5, 2)
    return F, s, constructions.code_from_vectorial(F)


@lru_cache(maxsize=None)
def ternary_m3():
    return constructions.ternary_code(3)


def hamming_8_4():
    rows = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
    ]
    return LinearCode.from_rows(2, rows)


def all_coordinate_distributions(code, sizes=(1, 2)):
    """{t: (shortened dists, punctured dists, sets)} over every T of size t."""
    words = code.codeword_matrix()
    nonzero = (words != 0).astype(np.int64)
    out = {}
    for t in sizes:
        sets = list(combinations(range(code.length), t))
        short, punct = am.coordinate_set_distributions(words, nonzero, sets, code.length)
        out[t] = (short, punct, sets)
    return out


# -- expected enumerators -----------------------------------------------------

BENT_EXPECTED = {
    "code": (36, {0: 1, 16: 63, 20: 63, 36: 1}),
    "short1": (35, {0: 1, 16: 35, 20: 28}),
    "punct1": (35, {0: 1, 15: 28, 16: 35, 19: 35, 20: 28, 35: 1}),
    "short2": (34, {0: 1, 16: 19, 20: 12}),
    "punct2": (34, {0: 1, 14: 12, 15: 32, 16: 19, 18: 19, 19: 32, 20: 12, 34: 1}),
}
BENT_PARAMS = {"code": (36, 7, 16), "short1": (35, 6, 16), "punct1": (35, 7, 15),
               "short2": (34, 5, 16), "punct2": (34, 7, 14)}

VBENT_EXPECTED = {
    "code": (64, {0: 1, 28: 448, 32: 126, 36: 448, 64: 1}),
    "short1": (63, {0: 1, 28: 252, 32: 63, 36: 196}),
    "punct1": (63, {0: 1, 27: 196, 28: 252, 31: 63, 32: 63, 35: 252, 36: 196, 63: 1}),
    "short2": (62, {0: 1, 28: 140, 32: 31, 36: 84}),
    "punct2": (62, {0: 1, 26: 84, 27: 224, 28: 140, 30: 31, 31: 64, 32: 31, 34: 140,
                    35: 224, 36: 84, 62: 1}),
}
VBENT_PARAMS = {"code": (64, 10, 28), "short1": (63, 9, 28), "punct1": (63, 10, 27),
                "short2": (62, 8, 28), "punct2": (62, 10, 26)}


def _params_of(counts):
    size = sum(counts)
    dim = size.bit_length() - 1
    d = next(i for i in range(1, len(counts)) if counts[i])
    return (len(counts) - 1, dim, d)


def _check_worked_example(report, expected, params):
    details = {}
    ok = True
    want = _dist(*expected["code"]).counts
    got = report.distribution.counts
    details["code"] = {"ok": got == want, "params": list(report.params)}
    ok &= got == want and report.params == params["code"]
    per_t = all_coordinate_distributions(report.code)
    for t, (short, punct, sets) in per_t.items():
        for kind, dists in (("short", short), ("punct", punct)):
            key = f"{kind}{t}"
            want = _dist(*expected[key]).counts
            mismatched = [list(T) for T, dist in zip(sets, dists) if dist != want]
            good = not mismatched and _params_of(want) == params[key]
            details[key] = {"sets": len(sets), "mismatched": mismatched[:3], "ok": good}
            ok &= good
    # the explicit code operations agree on the first and last T
    for t in (1, 2):
        for T in (tuple(range(t)), tuple(range(report.code.length - t, report.code.length))):
            for kind, op in (("short", report.code.shorten), ("punct", report.code.puncture)):
                sub = op(T)
                dist = sub.weight_distribution()
                want = _dist(*expected[f"{kind}{t}"])
                good = dist.counts == want.counts and (sub.length, sub.dimension, dist.min_weight()) == params[f"{kind}{t}"]
                ok &= good
    return ok, details


def criterion_1():
    _, report = bent_n6()
    return _check_worked_example(report, BENT_EXPECTED, BENT_PARAMS)


def criterion_2():
    _, report = vbent_n6()
    return _check_worked_example(report, VBENT_EXPECTED, VBENT_PARAMS)


def criterion_3():
    ok = True
    details = {}
    for label, (_, report) in (("bent", bent_n6()), ("vbent", vbent_n6())):
        dist = report.distribution
        per_t = all_coordinate_distributions(report.code)
        for t, (short, punct, _) in per_t.items():
            sp = predictor.shortened_predict(dist, t=t).counts
            pp = predictor.punctured_predict(dist, t=t).counts
            good = all(s == sp for s in short) and all(p == pp for p in punct)
            details[f"{label}_t{t}"] = good
            ok &= good
    for prefix, params in (("bent", {"n": 6, "nu_f": 36}), ("vbent", {"m": 3, "l": 3})):
        parent = predictor.table_predict(f"{prefix}_code", **params).as_distribution()
        for kind, t, fn in (("short1", 1, predictor.shortened_predict), ("short2", 2, predictor.shortened_predict),
                            ("punct1", 1, predictor.punctured_predict), ("punct2", 2, predictor.punctured_predict)):
            table = predictor.table_predict(f"{prefix}_{kind}", **params)
            good = table.counts == fn(parent, t=t).counts
            details[f"table_{prefix}_{kind}"] = good
            ok &= good
    return ok, details


def criterion_4():
    ok = True
    details = {}
    _, bent = bent_n6()
    designs = support_designs(bent.code, [16, 20])
    for k, des in designs.items():
        lam = is_t_design(des, 2)
        formula = bent.distribution[k] * comb(k, 2)
        expect, rem = divmod(formula, comb(36, 2))
        good = rem == 0 and lam == expect
        details[f"C(D_f) B_{k}"] = {"lambda": lam, "expected": expect, "ok": good}
        ok &= good
    F, vb = vbent_n6()
    for k, des in support_designs(vb.code, [28, 32, 36]).items():
        lam = is_t_design(des, 2)
        details[f"C(F) B_{k}"] = {"lambda": lam, "ok": lam is not None}
        ok &= lam is not None
    dual4 = constructions.dual_weight4_design(F)
    lam = is_t_design(dual4, 2)
    count_ok = dual4.num_blocks == moments.macwilliams(vb.distribution)[4]
    details["C(F)^perp B_4"] = {"blocks": dual4.num_blocks, "lambda": lam, "ok": lam is not None and count_ok}
    ok &= lam is not None and count_ok
    return ok, details


def criterion_5():
    ok = True
    details = {}
    pairs = []
    for label, (_, report) in (("bent", bent_n6()), ("vbent", vbent_n6())):
        pairs.append((label, report.code))
        for t in (1, 2):
            T = tuple(range(t))
            pairs.append((f"{label}_short{t}", report.code.shorten(T)))
            pairs.append((f"{label}_punct{t}", report.code.puncture(T)))
    for label, code in pairs:
        dist = code.weight_distribution()
        dual_code = code.dual()
        if dual_code.size <= 1 << 22:
            dual = dual_code.weight_distribution()
            source = "enumerated"
        else:
            dual = moments.macwilliams(dist)
            source = "macwilliams"
        failing = moments.first_failing_moment(dist, dual, 5)
        details[label] = {"dual": source, "first_failure": failing}
        ok &= failing is None
    # the dual weight-4 count from MacWilliams against an independent block count
    F, vb = vbent_n6()
    a4 = moments.macwilliams(vb.distribution)[4]
    blocks = constructions.dual_weight4_design(F).num_blocks
    details["vbent_dual_A4"] = {"macwilliams": a4, "blocks": blocks}
    ok &= a4 == blocks
    solved, _ = moments.solve_distribution(36, 7, 2, [16, 20], {36: 1}, (0,))
    good = solved[16] == 63 and solved[20] == 63
    details["solve"] = {"A16": solved[16], "A20": solved[20]}
    return ok and good, details


def criterion_6():
    report = ternary_m3()
    dist = report.distribution
    details = {"params": list(report.params), "weights": dist.weights()}
    ok = report.params == (13, 6, 6) and set(dist.weights()) <= {6, 9, 12}
    dual_code = report.code.dual()
    dual = dual_code.weight_distribution()
    details["d_perp"] = dual.min_weight()
    ok &= dual.min_weight() == 4
    b4 = support_design(dual_code, 4)
    lam = is_t_design(b4, 2)
    pairs = {}
    for blk in b4.blocks:
        for pr in combinations(blk, 2):
            pairs[pr] = pairs.get(pr, 0) + 1
    covered_once = len(pairs) == comb(13, 2) and set(pairs.values()) == {1}
    details["B4"] = {"blocks": len(b4.blocks), "simple": b4.is_simple(), "lambda": lam, "pairs_once": covered_once}
    ok &= len(b4.blocks) == 13 and b4.is_simple() and lam == 1 and covered_once
    return ok, details


def criterion_7():
    F, s, report = kasami_n5()
    ok = True
    diff = boolfn.diff_spectrum(F).value_set()
    walsh = boolfn.walsh_value_set(F)
    details = {"diff_values": sorted(diff), "walsh_values": sorted(walsh), "s": s}
    ok &= diff == {0, 2} and walsh == {0, 8, -8}
    want = _dist(32, {0: 1, 12: 496, 16: 1054, 20: 496, 32: 1}).counts
    table = predictor.table_predict("two_valued_code", n=5, s=1).counts
    details["params"] = list(report.params)
    ok &= report.distribution.counts == want == table and report.params == (32, 11, 12)
    dual = report.code.dual().weight_distribution()
    details["d_perp"] = dual.min_weight()
    ok &= dual.min_weight() == 6
    expected = dict(predictor.two_valued_design_lambdas(5, 1))
    designs = support_designs(report.code, sorted(expected))
    for k, des in designs.items():
        lam = is_t_design(des, 2)
        details[f"B_{k}"] = {"lambda": lam, "expected": expected[k]}
        ok &= lam == expected[k]
    return ok, details


def criterion_8():
    F, s = boolfn.kasami(10, 2)
    spectrum = boolfn.diff_spectrum(F)
    values = spectrum.value_set()
    design = constructions.steiner_from_function(F)
    a4 = moments.a4_dual_from_two_valued(10, 2)
    pair_values = constructions.all_pair_lambdas(F, spectrum)
    lam = is_t_design(design, 2)
    details = {
        "diff_values": sorted(values),
        "blocks": design.num_blocks,
        "a4_dual": a4,
        "pair_lambdas": sorted(str(v) for v in pair_values),
        "lambda": lam,
    }
    ok = values == {0, 4} and design.num_blocks == a4 == 87296 and pair_values == {1} and lam == 1
    return ok and design.is_simple(), details


def criterion_9():
    _, vb = vbent_n6()
    details = {}
    classic = am.classic_am(vb.code, 2).conclusion
    general = am.generalized_am(vb.code, 2, [28, 36]).conclusion
    ternary = am.generalized_am(ternary_m3().code, 2, [6, 9, 12]).conclusion
    _, _, kas = kasami_n5()
    kasami = am.generalized_am(kas.code, 2, [12, 20]).conclusion
    ham = hamming_8_4()
    ham_classic = am.classic_am(ham, 3).conclusion
    ham_designs = {w: is_t_design(des, 3) for w, des in support_designs(ham).items()}
    details.update({
        "classic_vbent": classic,
        "generalized_vbent": general,
        "generalized_ternary": ternary,
        "generalized_kasami": kasami,
        "classic_hamming": ham_classic,
        "hamming_3_designs": ham_designs,
    })
    ok = (classic == am.NO and general == am.YES and ternary == am.YES and kasami == am.YES
          and ham_classic == am.YES and all(v is not None for v in ham_designs.values()))
    return ok, details


def criterion_10(seed=0):
    _, bent = bent_n6()
    rep = am.characterization(bent.code, 2)
    st = rep.info["statements"]
    ok = st.get("1") is True and st.get("3") is True and st.get("4") is True and rep.info["agree"]
    details = {"bent_statements": st}
    code, witness = am.random_witness_code(16, 5, 2, seed=seed)
    failing = witness.info["non_design_weights"]
    confirmed = [w for w in failing if is_t_design(support_design(code, w), 2) is None]
    details["witness"] = {
        "seed": seed,
        "statements": witness.info["statements"],
        "non_design_weights": failing,
        "generator": [list(map(int, r)) for r in code.generator],
    }
    ok &= witness.info["statements"]["3"] is False and bool(confirmed)
    return ok, details


CRITERIA = {
    1: ("bent n=6 worked example", criterion_1, 5),
    2: ("vectorial bent n=6 worked example", criterion_2, 10),
    3: ("predictor equivalence", criterion_3, None),
    4: ("design verification", criterion_4, 30),
    5: ("Pless moments", criterion_5, None),
    6: ("ternary m=3 code", criterion_6, 5),
    7: ("Kasami n=5", criterion_7, 10),
    8: ("Kasami n=10 Steiner system", criterion_8, 180),
    9: ("Assmus-Mattson comparison", criterion_9, None),
    10: ("characterization", criterion_10, 60),
}

SUBSETS = {
    "bent-n6": [1],
    "vbent-n6": [2],
    "predictor": [3],
    "designs": [4],
    "moments": [5],
    "ternary": [6],
    "kasami-n5": [7],
    "kasami-n10": [8],
    "am": [9],
    "characterization": [10],
    "all": list(CRITERIA),
}


def run_criterion(number):
    name, fn, limit = CRITERIA[number]
    start = time.perf_counter()
    ok, details = fn()
    seconds = time.perf_counter() - start
    if limit is not None and seconds >= limit:
        details["runtime_exceeded"] = True
        ok = False
    return CriterionResult(number, name, bool(ok), seconds, limit, details)


def run(subset="all"):
    if subset not in SUBSETS:
        raise KeyError(f"unknown subset {subset!r}; choose from {', '.join(SUBSETS)}")
    return [run_criterion(n) for n in SUBSETS[subset]]
