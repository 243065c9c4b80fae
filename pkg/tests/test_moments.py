from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from designcodes.code import LinearCode, WeightDistribution
from designcodes.moments import (
    MomentError,
    a4_dual_from_two_valued,
    binom,
    first_failing_moment,
    krawtchouk,
    macwilliams,
    moment_check,
    solve_distribution,
    solve_rational,
    stirling2,
)
from oracles import naive_dual_words, naive_weight_distribution, stirling2_recurrence

from test_code import small_codes


def dual_counts_naive(rows, q):
    length = len(rows[0])
    counts = [0] * (length + 1)
    for w in naive_dual_words(rows, q):
        counts[sum(1 for x in w if x)] += 1
    return counts


@pytest.mark.parametrize("t", range(9))
def test_stirling_matches_recurrence(t):
    for j in range(t + 1):
        assert stirling2(t, j) == stirling2_recurrence(t, j)


def test_stirling_domain():
    with pytest.raises(MomentError):
        stirling2(2, 3)


def test_binom_outside_range():
    assert binom(3, 5) == 0 and binom(3, -1) == 0 and binom(5, 2) == 10


def test_hamming_moments(hamming84):
    dist = hamming84.weight_distribution()
    checks = moment_check(dist, dist, 8)
    assert all(ok for *_, ok in checks)
    assert checks[0][1] == 16


def test_detects_wrong_dual(hamming84):
    dist = hamming84.weight_distribution()
    bogus = WeightDistribution(8, (1, 0, 0, 1, 13, 0, 0, 0, 1))
    assert first_failing_moment(dist, bogus, 8) == 3


def test_mismatched_inputs(hamming84):
    dist = hamming84.weight_distribution()
    with pytest.raises(MomentError):
        moment_check(dist, WeightDistribution(4, (1, 0, 0, 0, 0)), 2)
    with pytest.raises(MomentError):
        moment_check(dist, dist, 9)
    with pytest.raises(MomentError):
        moment_check(WeightDistribution(3, (1, 1, 1, 0)), WeightDistribution(3, (1, 0, 0, 0)), 1)


def test_solve_bent_support_code():
    # [PUBLISHED] C(D_f) for n = 6: 1 + 63 z^16 + 63 z^20 + z^36
    dist, used = solve_distribution(36, 7, 2, [16, 20], {36: 1}, (0,))
    assert dist.counts[16] == 63 and dist.counts[20] == 63
    assert used == (1, 0)


def test_solve_needs_dual_prefix():
    with pytest.raises(MomentError):
        solve_distribution(36, 7, 2, [16, 20, 24], {36: 1}, (0,))
    with pytest.raises(MomentError):
        solve_distribution(8, 4, 2, [4], {4: 1})


def test_solve_rejects_non_integral():
    with pytest.raises(MomentError):
        solve_distribution(8, 4, 2, [3, 6], {8: 1}, (0,))


def test_solve_rational_singular():
    assert solve_rational([[2, 0], [0, 4]], [1, 2]) == [Fraction(1, 2), Fraction(1, 2)]
    with pytest.raises(MomentError):
        solve_rational([[1, 1], [1, 1]], [1, 2])


def test_krawtchouk_orthogonality():
    # sum_x C(nu,x)(q-1)^x K_k(x) K_l(x) = q^nu C(nu,k)(q-1)^k delta_kl
    nu, q = 6, 3
    for k in range(nu + 1):
        for l in range(nu + 1):
            s = sum(binom(nu, x) * (q - 1) ** x * krawtchouk(k, x, nu, q) * krawtchouk(l, x, nu, q)
                    for x in range(nu + 1))
            assert s == (q ** nu * binom(nu, k) * (q - 1) ** k if k == l else 0)


def test_a4_closed_form():
    # [DERIVED] zero for APN; Kasami n=10, i=2 has 87296
    assert a4_dual_from_two_valued(5, 1) == 0
    assert a4_dual_from_two_valued(10, 2) == 87296
    with pytest.raises(MomentError):
        a4_dual_from_two_valued(5, 5)


@given(small_codes(max_len=8))
def test_moments_hold_for_random_codes(qr):
    q, rows = qr
    code = LinearCode.from_rows(q, rows)
    dist = code.weight_distribution()
    dual = WeightDistribution(code.length, tuple(dual_counts_naive(rows, q)), q)
    assert all(ok for *_, ok in moment_check(dist, dual, code.length))


@given(small_codes(max_len=8))
def test_macwilliams_matches_brute_force(qr):
    q, rows = qr
    dist = WeightDistribution(len(rows[0]), tuple(naive_weight_distribution(rows, q)), q)
    assert list(macwilliams(dist).counts) == dual_counts_naive(rows, q)


@given(small_codes(max_len=9))
def test_solve_inverts_enumeration(qr):
    q, rows = qr
    code = LinearCode.from_rows(q, rows)
    dist = code.weight_distribution()
    dual = macwilliams(dist)
    weights = dist.weights()
    # hide up to d_perp of the occurring weights; those moments involve only known dual terms
    d_perp = dual.min_weight() or code.length + 1
    s = min(len(weights), d_perp)
    unknown = weights[:s]
    known = {i: a for i, a in dist.as_dict().items() if i not in unknown and i}
    solved, _ = solve_distribution(code.length, code.dimension, q, unknown, known, dual.counts[1:s])
    assert solved == dist
