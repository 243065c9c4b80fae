import numpy as np
import pytest
from hypothesis import given, strategies as st

from designcodes import boolfn
from designcodes.boolfn import (
    FunctionError,
    SpectrumBudgetExceeded,
    diff_spectrum,
    fourth_moment,
    fourth_moment_design_check,
    fourth_moment_target,
    walsh,
    walsh_spectrum,
)
from designcodes.gf import field_new
from oracles import SlowField, naive_delta_table, naive_walsh


@st.composite
def random_functions(draw, max_n=5):
    n = draw(st.integers(2, max_n))
    l = draw(st.integers(1, n))
    table = draw(st.lists(st.integers(0, (1 << l) - 1), min_size=1 << n, max_size=1 << n))
    return boolfn.from_table(n, l, table)


def slow_fields(F):
    return SlowField(2, F.n, F.field.modulus), SlowField(2, F.l, F.out_field.modulus)


@given(random_functions(), st.data())
def test_walsh_matches_naive(F, data):
    spec = walsh_spectrum(F)
    big, small = slow_fields(F)
    for _ in range(4):
        lam = data.draw(st.integers(1, (1 << F.l) - 1))
        mu = data.draw(st.integers(0, (1 << F.n) - 1))
        want = naive_walsh(F.n, F.table.tolist(), lam, mu, big, small)
        assert spec[lam, mu] == want == walsh(F, lam, mu)


@given(random_functions())
def test_parseval(F):
    spec = walsh_spectrum(F)
    assert np.all((spec[1:] ** 2).sum(axis=1) == 1 << (2 * F.n))
    assert np.all(spec[0, 1:] == 0) and spec[0, 0] == 1 << F.n


@given(random_functions())
def test_diff_spectrum_matches_naive(F):
    spec = diff_spectrum(F)
    naive = naive_delta_table(F.n, F.table.tolist())
    for (a, b), c in naive.items():
        assert spec(a, b) == c
    assert np.all(spec.table.sum(axis=1) == 1 << F.n)
    assert sum(spec.histogram.values()) == ((1 << F.n) - 1) << F.l


def test_worked_bent_function(gf64, bent_n6):
    f, _ = bent_n6
    assert boolfn.is_bent(f)
    assert boolfn.walsh_value_set(f) == {8, -8}
    # [PUBLISHED] nu_f = 36
    assert int(f.table.sum()) == 36
    plain = boolfn.with_trace_to(boolfn.identity(6, gf64), 1)
    assert not boolfn.is_bent(plain)
    with pytest.raises(FunctionError):
        boolfn.is_bent(boolfn.identity(6, gf64))


def test_vectorial_bent(vbent_n6):
    F, _ = vbent_n6
    assert F.l == 3 and boolfn.bent_vectorial(F)
    assert not boolfn.bent_vectorial(boolfn.identity(5))


def test_trace_to_one_is_absolute_trace(gf64):
    F = boolfn.from_exponent(6, 3, gf64, coef=gf64.generator)
    f = boolfn.with_trace_to(F, 1)
    assert f.table.tolist() == [gf64.trace(int(v)) for v in F.table]


def test_subfield_embedding_is_field_map(gf64):
    for l in (2, 3):
        small, mapping = boolfn.subfield_embedding(gf64, l)
        sub = gf64.subfield_elements(l).tolist()
        assert sorted(mapping[sub].tolist()) == list(range(1 << l))
        for a in sub:
            for b in sub:
                assert mapping[gf64.mul(a, b)] == small.mul(int(mapping[a]), int(mapping[b]))
                assert mapping[a ^ b] == mapping[a] ^ mapping[b]
    with pytest.raises(FunctionError):
        boolfn.subfield_embedding(gf64, 4)


def test_scaled_and_add(gf64):
    F = boolfn.identity(6, gf64)
    G = boolfn.scaled(F, 1)
    assert G == F
    assert not (F + F).table.any()
    with pytest.raises(FunctionError):
        F + boolfn.identity(5)


def test_table_text_roundtrip(vbent_n6):
    F, _ = vbent_n6
    again = boolfn.read_table_text(F.to_text())
    assert again.table.tolist() == F.table.tolist() and again.l == 3
    with pytest.raises(FunctionError):
        boolfn.read_table_text("3")
    with pytest.raises(FunctionError):
        boolfn.from_table(2, 1, [0, 1, 2, 0])
    with pytest.raises(FunctionError):
        boolfn.from_table(2, 1, [0, 1, 1])


def test_kasami_n5_fourth_moment():
    # [DERIVED] APN, delta = 2: 2^15 * 31 * 2
    F, s = boolfn.kasami(5, 2)
    assert s == 1
    assert diff_spectrum(F).value_set() == {0, 2}
    assert fourth_moment(F) == 2031616 == fourth_moment_target(5, 2)
    assert fourth_moment_design_check(F)


def test_inverse_n6_fails_fourth_moment():
    # [DERIVED] x^{-1} = x^{62} on GF(2^6): differential values {0, 2, 4}
    F = boolfn.from_exponent(6, 62)
    spec = diff_spectrum(F)
    assert spec.value_set() == {0, 2, 4}
    assert fourth_moment(F) == 35094528
    assert fourth_moment_target(6, spec.delta) == 66060288
    assert not fourth_moment_design_check(F)
    assert boolfn.two_valued_s(F) is None


@pytest.mark.parametrize("n,i", [(5, 1), (5, 2), (6, 2), (7, 3), (9, 3)])
def test_gold_two_valued(n, i):
    F, s = boolfn.gold(n, i)
    assert boolfn.two_valued_s(F) == s
    assert fourth_moment_design_check(F)


def test_family_guards():
    with pytest.raises(FunctionError):
        boolfn.kasami(6, 2)
    with pytest.raises(FunctionError):
        boolfn.kasami(6, 1)
    with pytest.raises(FunctionError):
        boolfn.bracken_tan_tan(3, 3)
    with pytest.raises(FunctionError):
        boolfn.bracken_tan_tan(2, 2)
    with pytest.raises(FunctionError):
        boolfn.gold(5, 5)


@pytest.mark.parametrize("m,i,s", [(1, 2, 1), (2, 4, 2)])
def test_bracken_tan_tan(m, i, s):
    F, pred = boolfn.bracken_tan_tan(m, i)
    assert pred == s == boolfn.two_valued_s(F)
    n = 3 * m
    if (n + s) % 2 == 0:
        assert boolfn.walsh_value_set(F) <= {0, 1 << ((n + s) // 2), -(1 << ((n + s) // 2))}


def test_diff_budget():
    with pytest.raises(SpectrumBudgetExceeded):
        diff_spectrum(boolfn.from_exponent(12, 3))
    assert diff_spectrum(boolfn.from_exponent(6, 5), max_n=6).delta == 4


def test_polynomial_constant_term():
    F = boolfn.from_polynomial(3, [(1, 0), (1, 1)])
    assert F(0) == 1 and F(1) == 0
    with pytest.raises(FunctionError):
        boolfn.from_polynomial(3, [(1, -1)])
    with pytest.raises(FunctionError):
        boolfn.from_exponent(3, 1, field=field_new(2, 4))
