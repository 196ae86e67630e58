import random

import pytest

from fixtures import (BASE14_A, BASE14_B, COMBINED_S_T4x12, COMBINED_T_T4x12,
                      DIRECT_S_T4x14, DIRECT_T_T4x14, GCP4_C, GCP4_D, ZCP12_A,
                      ZCP12_B)
from oracle import arr_to_complex, zcap_zero_float
from zcpair import (Theorem2Params, ZqVector, corollary1_combine, gdj_pair,
                    lemma4_extend, lemma5_construct, lemma6_base, lift, lift2d,
                    max_zcz, max_zcz_rect, theorem1_combine, theorem2_direct,
                    zcap_check)
from zcpair.constructions import lemma5_default_permutation
from zcpair.gbf import bits_msb
from zcpair.sequences import RootVector, VerificationError


def random_gdj(rng, qs=(2, 4, 8), ms=(1, 2, 3)):
    q = rng.choice(qs)
    m = rng.choice(ms)
    pi = list(range(1, m + 1))
    rng.shuffle(pi)
    v = tuple(rng.randrange(q) for _ in range(m + 1))
    return gdj_pair(q, m, pi=pi, v=v)


def random_binary_zcp(rng):
    """A verified binary ZCP drawn from the construction family."""
    kind = rng.randrange(4)
    if kind == 0:
        return ZCP12_A, ZCP12_B
    if kind == 1:
        return lemma6_base()
    if kind == 2:
        a, b = gdj_pair(2, rng.randrange(1, 4))
        return a, b
    a, b = gdj_pair(2, rng.randrange(1, 3))
    S, T = lemma4_extend(lift(a), lift(b))
    to_zq = lambda r: ZqVector(2, r.exponents)
    return to_zq(S), to_zq(T)


# ---------------------------------------------------------------------------
# root-form combiner

def test_combiner_reproduces_golden_12x4():
    S, T = theorem1_combine(lift(ZCP12_A), lift(ZCP12_B),
                            lift(GCP4_C), lift(GCP4_D))
    assert S.transpose().to_nested() == COMBINED_S_T4x12
    assert T.transpose().to_nested() == COMBINED_T_T4x12
    assert zcap_check(S, T, 8, 4).ok


def test_combiner_1x1():
    one = RootVector(2, (0,))
    S, T = theorem1_combine(one, one, one, one)
    assert S.exponents == T.exponents == (0,)
    assert zcap_check(S, T, 1, 1).is_gcap


def test_combiner_of_gcps_is_gcap():
    rng = random.Random(10)
    for _ in range(10):
        a, b = gdj_pair(2, rng.randrange(1, 4))
        c, d = random_gdj(rng)
        A, B = lift(a), lift(b)
        C, D = lift(c), lift(d)
        S, T = theorem1_combine(A, B, C, D)
        assert zcap_check(S, T, S.rows, S.cols).is_gcap


def test_combiner_self_verifies_100_random_instances():
    # every combination of a harvested binary ZCP with a chain GCP passes
    # its own exact zone check at the measured input widths
    rng = random.Random(17)
    for _ in range(100):
        a, b = random_binary_zcp(rng)
        if len(a) > 28:
            a, b = gdj_pair(2, 2)
        c, d = random_gdj(rng, ms=(1, 2))
        theorem1_combine(lift(a), lift(b), lift(c), lift(d))  # raises if bad


def test_combiner_rejects_nonbinary_first_pair():
    C, D = lift(GCP4_C), lift(GCP4_D)
    with pytest.raises(VerificationError):
        theorem1_combine(C, D, C, D)


def test_combiner_rejects_false_claims_unless_forced():
    A, B = lift(ZCP12_A), lift(ZCP12_B)
    C, D = lift(GCP4_C), lift(GCP4_D)
    with pytest.raises(VerificationError):
        theorem1_combine(A, B, C, D, z1=9)
    S, T = theorem1_combine(A, B, C, D, z1=9, force=True, verify=False)
    assert not zcap_check(S, T, 9, 4).ok


# ---------------------------------------------------------------------------
# Z_q combiner

def test_zq_combiner_reproduces_golden_12x4():
    s, t = corollary1_combine(ZCP12_A, ZCP12_B, GCP4_C, GCP4_D)
    assert s.transpose().to_nested() == COMBINED_S_T4x12
    assert t.transpose().to_nested() == COMBINED_T_T4x12


def test_zq_combiner_equal_rows_collapse():
    a = ZqVector(2, (0, 1, 0))
    c, d = gdj_pair(4, 2)
    s, t = corollary1_combine(a, a, c, d, verify=False)
    for i in range(3):
        shift = 2 * a.values[i]
        assert list(s.row(i)) == [(x + shift) % 4 for x in c.values]
        assert list(t.row(i)) == [(x + shift) % 4 for x in d.values]


def test_zq_combiner_requires_binary_first_pair():
    with pytest.raises(VerificationError):
        corollary1_combine(GCP4_C, GCP4_D, GCP4_C, GCP4_D)


def test_zq_combiner_lift_equality_random():
    rng = random.Random(11)
    for _ in range(30):
        a, b = random_binary_zcp(rng)
        c, d = random_gdj(rng)
        s, t = corollary1_combine(a, b, c, d, verify=False)
        A, B = lift(a), lift(b)
        S, T = theorem1_combine(A, B, lift(c), lift(d), verify=False)
        assert lift2d(s) == S
        assert lift2d(t) == T


def test_zq_combiner_verifies_as_zcap_at_input_widths():
    rng = random.Random(12)
    for _ in range(8):
        a, b = random_binary_zcp(rng)
        c, d = random_gdj(rng)
        z1 = max_zcz(lift(a), lift(b)).width
        s, t = corollary1_combine(a, b, c, d)   # self-verifies
        cert = zcap_check(lift2d(s), lift2d(t), z1, len(c))
        assert cert.ok


# ---------------------------------------------------------------------------
# parameterized family

def test_family_small_instance_2x5():
    s, t = lemma5_construct(2, 1, 3, 2, 0)
    assert (s.rows, s.cols) == (2, 5)
    fr = max_zcz_rect(lift2d(s), lift2d(t))
    assert fr.covers(2, 3)


def test_family_matches_combiner_of_its_base_pairs():
    # the construction is definitionally the transposed combination of its
    # two base pairs; keep that as a regression guard
    from zcpair.gbf import Gbf, gbf_to_sequence
    q, n, m, tp, v = 4, 2, 4, 2, 1
    pi1 = lemma5_default_permutation(m, tp, v)
    s, t = lemma5_construct(q, n, m, tp, v, d=(1,))
    terms = {frozenset({pi1[0], pi1[1]}): 1}
    a_fun = Gbf(2, m, terms)
    b_fun = a_fun + Gbf(2, m, {frozenset({pi1[0]}): 1})
    length = 2 ** (m - 1) + 2 ** tp + 2 ** v
    a = gbf_to_sequence(a_fun, length)
    b = gbf_to_sequence(b_fun, length)
    c, d = gdj_pair(q, n)
    s2, t2 = corollary1_combine(a, b, c, d, verify=False)
    assert s == s2.transpose()
    assert t == t2.transpose()


def test_family_default_permutations_verify_broadly():
    rng = random.Random(13)
    for _ in range(10):
        m = rng.randrange(3, 6)
        tp = rng.randrange(2, m)
        v = rng.randrange(0, tp)
        q = rng.choice((2, 4))
        n = rng.randrange(1, 3)
        d = tuple(rng.randrange(2) for _ in range(m - 1 - tp))
        p = tuple(rng.randrange(2) for _ in range(m + 1))
        vc = tuple(rng.randrange(q) for _ in range(n + 1))
        s, t = lemma5_construct(q, n, m, tp, v, p=p, vcoef=vc, d=d)
        width = 2 ** (tp - 1) + 2 ** v
        length = 2 ** (m - 1) + 2 ** v + sum(
            bit * 2 ** (tp + k) for k, bit in enumerate(d))
        assert (s.rows, s.cols) == (2 ** n, length)
        assert zcap_check(lift2d(s), lift2d(t), 2 ** n, width).ok


def test_zq_combiner_length10_binary_with_octonary_gdj():
    # a (10, 6)-ZCP column pair combined with a length-4 GCP verifies at
    # the claimed (5, 4) rectangle as well
    from zcpair.gbf import Gbf, gbf_to_sequence
    pi1 = lemma5_default_permutation(4, 3, 1)
    a_fun = Gbf(2, 4, {frozenset({pi1[0], pi1[1]}): 1,
                       frozenset({pi1[1], pi1[2]}): 1})
    b_fun = a_fun + Gbf(2, 4, {frozenset({pi1[0]}): 1})
    a = gbf_to_sequence(a_fun, 10)
    b = gbf_to_sequence(b_fun, 10)
    assert max_zcz(lift(a), lift(b)).covers(5)
    c, d = gdj_pair(8, 2, pi=(2, 1), v=(1, 5, 2))
    s, t = corollary1_combine(a, b, c, d, z1=5, z2=4)
    assert zcap_check(lift2d(s), lift2d(t), 5, 4).ok


def test_family_normalized_coefficient_instance():
    # coefficients satisfying (q/2)n - 2 v0 - sum(v_l) = 0 mod q still come
    # out as the plain transposed combination of the base pairs
    from zcpair.gbf import Gbf, gbf_to_sequence
    q, n, m, tp, v = 4, 2, 3, 2, 0
    vcoef = (0, 2, 2)
    assert ((q // 2) * n - 2 * vcoef[0] - sum(vcoef[1:])) % q == 0
    s, t = lemma5_construct(q, n, m, tp, v, vcoef=vcoef)
    pi1 = lemma5_default_permutation(m, tp, v)
    a_fun = Gbf(2, m, {frozenset({pi1[0], pi1[1]}): 1})
    b_fun = a_fun + Gbf(2, m, {frozenset({pi1[0]}): 1})
    length = 2 ** (m - 1) + 2 ** v
    a = gbf_to_sequence(a_fun, length)
    b = gbf_to_sequence(b_fun, length)
    c, d = gdj_pair(q, n, v=vcoef)
    s2, t2 = corollary1_combine(a, b, c, d, verify=False)
    assert s == s2.transpose() and t == t2.transpose()


def test_family_degenerate_top_chain():
    # tprime = m-1 leaves no free d bits; the truncated pair is a pure
    # chain pair of length 2^(m-1) + 2^v
    s, t = lemma5_construct(2, 1, 4, 3, 1)
    assert (s.rows, s.cols) == (2, 10)
    assert zcap_check(lift2d(s), lift2d(t), 2, 6).ok


def test_family_identity_permutation_fails_claim():
    with pytest.raises(VerificationError):
        lemma5_construct(2, 1, 3, 2, 0, pi1=(1, 2, 3))


def test_family_rejects_bad_parameters():
    with pytest.raises(ValueError):
        lemma5_construct(2, 1, 3, 3, 0)      # tprime = m
    with pytest.raises(ValueError):
        lemma5_construct(2, 1, 3, 2, 2)      # v >= tprime
    with pytest.raises(ValueError):
        lemma5_construct(2, 0, 3, 2, 0)      # no row variables
    with pytest.raises(ValueError):
        lemma5_construct(2, 1, 4, 2, 0, d=(1, 1))   # wrong d length


# ---------------------------------------------------------------------------
# fixed base pair

def test_base14_values_and_zone():
    a, b = lemma6_base()
    assert a.values == BASE14_A
    assert b.values == BASE14_B
    assert len(a) == 14
    cert = max_zcz(lift(a), lift(b))
    assert cert.width == 12 and cert.peak == 28


def test_base14_first_entry_zero():
    a, _ = lemma6_base()
    assert a.values[0] == 0


# ---------------------------------------------------------------------------
# direct construction

def test_direct_reproduces_golden_14x4():
    s, t = theorem2_direct(Theorem2Params(q=2, m=2, n=0, pi=(1, 2), v=(0, 0, 0)))
    assert s.transpose().to_nested() == DIRECT_S_T4x14
    assert t.transpose().to_nested() == DIRECT_T_T4x14


def test_direct_28x2_parameters():
    s, t = theorem2_direct(Theorem2Params(q=2, m=2, n=1))
    assert (s.rows, s.cols) == (28, 2)
    fr = max_zcz_rect(lift2d(s), lift2d(t))
    assert fr.covers(24, 2)


def test_direct_outputs_differ_by_half_q_on_pi1_bit():
    rng = random.Random(14)
    for _ in range(10):
        q = rng.choice((2, 4, 8))
        m = rng.randrange(1, 4)
        n = rng.randrange(0, m + 1)
        pi = list(range(1, m + 1))
        rng.shuffle(pi)
        v = tuple(rng.randrange(q) for _ in range(m + 1))
        params = Theorem2Params(q=q, m=m, n=n, pi=pi, v=v)
        s, t = theorem2_direct(params)
        head = 2 ** n
        k = params.pi[0]
        for r in range(s.rows):
            ybits_head = bits_msb(r % head, n)
            for g in range(s.cols):
                ybits = ybits_head + bits_msb(g, m - n)
                want = (s.entry(r, g) + (q // 2) * ybits[k - 1]) % q
                assert t.entry(r, g) == want


def test_direct_flattened_is_zcp_at_n_equals_m():
    params = Theorem2Params(q=4, m=2, n=2, pi=(2, 1), v=(1, 2, 3))
    s, t = theorem2_direct(params)
    assert (s.rows, s.cols) == (56, 1)
    cert = max_zcz(lift(s.flatten()), lift(t.flatten()))
    assert cert.covers(48)


def test_direct_zone_ratio_is_six_sevenths():
    from fractions import Fraction
    for params in (Theorem2Params(q=2, m=2, n=0),
                   Theorem2Params(q=4, m=2, n=1, v=(1, 0, 3))):
        s, t = theorem2_direct(params)
        fr = max_zcz_rect(lift2d(s), lift2d(t))
        assert fr.best_ratio >= Fraction(6, 7)


def test_direct_agrees_with_float_oracle_on_zone():
    s, t = theorem2_direct(Theorem2Params(q=4, m=1, n=0, v=(0, 3)))
    Sf, Tf = arr_to_complex(lift2d(s)), arr_to_complex(lift2d(t))
    assert zcap_zero_float(Sf, Tf, 12, 2)


def test_direct_params_validation():
    with pytest.raises(ValueError):
        Theorem2Params(q=3, m=1)
    with pytest.raises(ValueError):
        Theorem2Params(q=2, m=2, n=3)
    with pytest.raises(ValueError):
        Theorem2Params(q=2, m=2, pi=(1, 1))
    with pytest.raises(ValueError):
        Theorem2Params(q=2, m=2, v=(0,))
