import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycloseq.errors import BadShifts, BudgetExceeded, CapExceeded, NoPeriod, ParameterError
from cycloseq.measures import (
    berlekamp_massey_profile,
    correlation_for_shifts,
    correlation_measure_exact,
    correlation_measure_sampled,
    max_order_complexity_naive,
    max_order_complexity_profile,
    periodic_autocorrelation,
    two_adic_complexity,
)
from cycloseq.ntheory import SexticParams
from cycloseq.seqgen import BitSequence, dhl_sequence, hall_sequence, legendre_sequence

P13 = SexticParams.create(13, g=2)
P31 = SexticParams.create(31, g=3)
HALL13 = hall_sequence(P13, 13)
HALL31 = hall_sequence(P31, 31)

words = st.lists(st.integers(0, 1), min_size=2, max_size=24).map(BitSequence.create)


# --- independent oracles -----------------------------------------------------


def brute_force_ck(seq, k):
    """Direct (D, M) enumeration straight off the definition."""
    N = seq.length
    x = [1 - 2 * int(b) for b in seq.bits]
    best, bestw = 0, None
    for D in combinations(range(N), k):
        for M in range(1, N - D[-1] + 1):
            s = 0
            for n in range(M):
                t = 1
                for d in D:
                    t *= x[n + d]
                s += t
            a = abs(s)
            if a > best:
                best, bestw = a, (D, M)
            elif a == best and (D, M) < bestw:
                bestw = (D, M)
    return best, bestw


def naive_linear_complexity(bits):
    """Exhaustive search over all recurrences of each length (N <= 16)."""
    N = len(bits)
    for L in range(N + 1):
        if L == 0:
            if all(b == 0 for b in bits):
                return 0
            continue
        for mask in range(2**L):
            ok = True
            for n in range(N - L):
                pred = 0
                for i in range(L):
                    if (mask >> i) & 1:
                        pred ^= bits[n + i]
                if pred != bits[n + L]:
                    ok = False
                    break
            if ok:
                return L
    return N


# --- correlation -------------------------------------------------------------


def test_for_shifts_examples():
    assert correlation_for_shifts(BitSequence.create([0] * 10), (0,)) == (10, 10)
    assert correlation_for_shifts(BitSequence.create([0, 1] * 5), (0, 1)) == (9, 9)
    # Hall p=13, D=(0): prefix-sum walk 0,1,0,-1,0,1,0,1,2,1,2,3,2,1 peaks at |P_11|=3
    assert correlation_for_shifts(HALL13, (0,)) == (3, 11)


def test_for_shifts_validation():
    seq = BitSequence.create([0, 1, 1, 0])
    with pytest.raises(BadShifts):
        correlation_for_shifts(seq, (1, 1))
    with pytest.raises(BadShifts):
        correlation_for_shifts(seq, (0, 4))
    with pytest.raises(BadShifts):
        correlation_for_shifts(seq, ())


def test_c1_hall13_is_4():
    rep = correlation_measure_exact(HALL13, 1)
    assert rep.value == 4
    assert rep.exhaustive
    assert (rep.witness_D, rep.witness_M) == ((3,), 8)


def test_c2_hall31_regression():
    # pinned on first run; frozen regression constant
    rep = correlation_measure_exact(HALL31, 2)
    assert rep.value == 6
    assert (rep.witness_D, rep.witness_M) == ((0, 3), 18)


def test_all_zero_word_ck():
    for n, k in ((10, 1), (10, 2), (8, 3)):
        rep = correlation_measure_exact(BitSequence.create([0] * n), k)
        assert rep.value == n - k + 1
        assert rep.witness_D == tuple(range(k))
        assert rep.witness_M == n - k + 1


def test_witness_satisfies_reported_value():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(4, 40))
        k = int(rng.integers(1, 4))
        seq = BitSequence.create(rng.integers(0, 2, size=n, dtype=np.uint8))
        rep = correlation_measure_exact(seq, k)
        x = seq.signs()
        s = sum(int(np.prod([x[i + d] for d in rep.witness_D])) for i in range(rep.witness_M))
        assert abs(s) == rep.value
        assert rep.witness_M - 1 + rep.witness_D[-1] <= n - 1


@given(words, st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_exact_matches_brute_force(seq, k):
    if k > seq.length:
        k = seq.length
    value, witness = brute_force_ck(seq, k)
    rep = correlation_measure_exact(seq, k)
    assert rep.value == value
    assert (rep.witness_D, rep.witness_M) == witness


@given(words, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_complement_invariance(seq, k):
    if k > seq.length:
        k = seq.length
    comp = BitSequence.create(1 - seq.bits)
    assert (
        correlation_measure_exact(seq, k).value
        == correlation_measure_exact(comp, k).value
    )


def test_budget_guard():
    seq = BitSequence.create([0, 1] * 50)
    with pytest.raises(BudgetExceeded) as err:
        correlation_measure_exact(seq, 3, budget=1000)
    assert err.value.estimate == math.comb(100, 3) * 100


def test_sampled_determinism_and_bound():
    a = correlation_measure_sampled(HALL31, 2, samples=40, rng_seed=7)
    b = correlation_measure_sampled(HALL31, 2, samples=40, rng_seed=7)
    assert a == b
    assert not a.exhaustive
    assert a.value <= correlation_measure_exact(HALL31, 2).value


def test_sampled_saturation_matches_exact():
    rep = correlation_measure_sampled(HALL13, 1, samples=13, rng_seed=0)
    assert rep.value == 4


@given(words, st.integers(1, 2), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_sampled_below_exact(seq, k, seed):
    if k > seq.length:
        k = seq.length
    sampled = correlation_measure_sampled(seq, k, samples=5, rng_seed=seed)
    assert sampled.value <= correlation_measure_exact(seq, k).value


# --- periodic autocorrelation ------------------------------------------------


def test_autocorrelation_examples():
    assert periodic_autocorrelation(legendre_sequence(7, 7), 1) == -1
    for t in range(1, 31):
        assert periodic_autocorrelation(HALL31, t) == -1
    assert periodic_autocorrelation(dhl_sequence(5, 2, 5), 2) == -3


def test_autocorrelation_needs_period():
    with pytest.raises(NoPeriod):
        periodic_autocorrelation(BitSequence.create([0, 1, 1]), 1)
    with pytest.raises(ParameterError):
        periodic_autocorrelation(HALL13, 13)


@given(st.lists(st.integers(0, 1), min_size=2, max_size=40))
@settings(max_examples=60, deadline=None)
def test_autocorrelation_symmetry_and_parseval(bits):
    T = len(bits)
    seq = BitSequence.create(bits, period=T)
    ac = [periodic_autocorrelation(seq, t) for t in range(1, T)]
    for t in range(1, T):
        assert ac[t - 1] == ac[T - t - 1]
    imbalance = int(seq.signs().sum())
    assert sum(ac) == imbalance**2 - T


# --- linear complexity -------------------------------------------------------


def test_bm_conventions():
    assert berlekamp_massey_profile(BitSequence.create([0, 0, 0, 0])).values == (0, 0, 0, 0)
    assert berlekamp_massey_profile(BitSequence.create([0, 0, 0, 1])).values == (0, 0, 0, 4)
    assert berlekamp_massey_profile(BitSequence.create([0, 0, 1])).at(3) == 3


@given(st.lists(st.integers(0, 1), min_size=1, max_size=14))
@settings(max_examples=80, deadline=None)
def test_bm_matches_naive_recurrence_search(bits):
    profile = berlekamp_massey_profile(BitSequence.create(bits))
    for n in range(1, len(bits) + 1):
        assert profile.at(n) == naive_linear_complexity(bits[:n])


@given(st.lists(st.integers(0, 1), min_size=2, max_size=64))
@settings(max_examples=60, deadline=None)
def test_bm_profile_monotone_and_jump_rule(bits):
    v = berlekamp_massey_profile(BitSequence.create(bits)).values
    for i in range(len(v) - 1):
        assert v[i] <= v[i + 1] <= len(bits)
        if v[i] > (i + 1) / 2:
            assert v[i + 1] == v[i]
    assert all(v[i] <= i + 1 for i in range(len(v)))


# --- maximum order complexity ------------------------------------------------


def test_moc_examples():
    assert max_order_complexity_naive(BitSequence.create([0, 0, 0, 0])).at(4) == 1
    assert max_order_complexity_naive(BitSequence.create([0, 0, 0, 1])).at(4) == 3
    assert max_order_complexity_naive(BitSequence.create([0, 1, 1, 0])).at(4) == 2
    alt = BitSequence.create([0, 1] * 10)
    assert max_order_complexity_profile(alt).final == 1
    tail = BitSequence.create([0] * 9 + [1])
    assert max_order_complexity_profile(tail).final == 9  # N-1 forced conflict


def test_moc_profile_starts_at_zero():
    prof = max_order_complexity_profile(BitSequence.create([1, 0, 1]))
    assert prof.at(1) == 0


def test_moc_naive_cap():
    with pytest.raises(CapExceeded):
        max_order_complexity_naive(BitSequence.create([0, 1] * 40), cap=64)


@given(st.lists(st.integers(0, 1), min_size=2, max_size=64))
@settings(max_examples=100, deadline=None)
def test_moc_automaton_equals_naive(bits):
    seq = BitSequence.create(bits)
    assert max_order_complexity_profile(seq).values == max_order_complexity_naive(seq).values


@given(st.lists(st.integers(0, 1), min_size=2, max_size=64))
@settings(max_examples=60, deadline=None)
def test_moc_profile_monotone_and_bounded(bits):
    v = max_order_complexity_profile(BitSequence.create(bits)).values
    for i in range(len(v) - 1):
        assert v[i] <= v[i + 1]
    for i in range(1, len(v)):
        assert v[i] <= i  # v[N'] <= N'-1 for N' >= 2


@given(st.lists(st.integers(0, 1), min_size=2, max_size=48))
@settings(max_examples=60, deadline=None)
def test_moc_below_linear_complexity(bits):
    # all-zero prefixes are the one exception: L = 0 by convention while M is
    # the smallest *positive* window length, so M = 1 there
    seq = BitSequence.create(bits)
    moc = max_order_complexity_profile(seq).values
    lc = berlekamp_massey_profile(seq).values
    for i, (m, l) in enumerate(zip(moc, lc)):
        if any(bits[: i + 1]):
            assert m <= l
        else:
            assert (m, l) == ((1, 0) if i >= 1 else (0, 0))


# --- 2-adic complexity -------------------------------------------------------


def test_two_adic_hall13():
    rep = two_adic_complexity(HALL13)
    assert rep.numerator == 6438
    assert rep.modulus == 8191
    assert rep.gcd_value == 1
    assert rep.is_maximal
    assert rep.complexity == pytest.approx(math.log2(8191))


def test_two_adic_all_ones():
    rep = two_adic_complexity(BitSequence.create([1] * 12, period=12))
    assert rep.numerator == 2**12 - 1
    assert rep.gcd_value == 2**12 - 1
    assert rep.complexity == 0.0


def test_two_adic_hall31():
    rep = two_adic_complexity(HALL31)
    assert rep.gcd_value == 1


def test_two_adic_needs_period():
    with pytest.raises(NoPeriod):
        two_adic_complexity(BitSequence.create([0, 1, 1]))


def test_two_adic_cap():
    seq = BitSequence.create([0, 1] * 6000, period=12000)
    with pytest.raises(CapExceeded):
        two_adic_complexity(seq)
