from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from conftest import set_systems
from vccompress import (
    InconsistentCondition,
    InputError,
    Labeling,
    PartialLabeling,
    SetSystem,
    extend_compressible,
    find_kc_compressible,
    implies_within,
    is_k_compressible,
    is_k_isolated,
    kc,
    kc_parameters,
    relativize,
    restrict,
    rtd_sequence,
    shattering_hard_instance,
    teaching_dimension,
    vc_dimension,
)
from vccompress.generators import full_cube, intervals, thresholds

L = Labeling.from_string


def literal_k_compressible(C, c, k):
    """Direct reading of the definition: every A0 has an A1 (|A1| <= k)
    with c|A1 implying c|A0."""
    m = C.ground_size
    for r0 in range(m + 1):
        for A0 in combinations(range(m), r0):
            if not any(
                implies_within(C, c, A1, A0)
                for r1 in range(min(k, m) + 1)
                for A1 in combinations(range(m), r1)
            ):
                return False
    return True


class TestImplies:
    def test_whole_ground_set(self, thr3):
        for c in thr3:
            assert implies_within(thr3, c, range(3), [0, 2])

    def test_cube(self):
        assert not implies_within(full_cube(3), L("101"), [0, 1], range(3))

    def test_thresholds(self, thr3):
        assert implies_within(thr3, L("110"), [1, 2], [0])

    def test_not_member(self, thr3):
        with pytest.raises(InputError):
            implies_within(thr3, L("010"), [0], [1])

    @settings(max_examples=40, deadline=None)
    @given(set_systems(max_ground=5), st.data())
    def test_monotone_in_premise(self, C, data):
        m = C.ground_size
        c = Labeling(m, data.draw(st.sampled_from(C.concepts)))
        B = data.draw(st.sets(st.integers(0, m - 1)))
        B2 = B | data.draw(st.sets(st.integers(0, m - 1)))
        A0 = data.draw(st.sets(st.integers(0, m - 1)))
        if implies_within(C, c, B, A0):
            assert implies_within(C, c, B2, A0)


class TestTeachingDimension:
    def test_single_concept(self):
        C = SetSystem.from_strings(["0110"])
        d, cert = teaching_dimension(C, L("0110"))
        assert d == 0 and cert.witness == ()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_cube(self, n):
        C = full_cube(n)
        for c in C:
            d, cert = teaching_dimension(C, c)
            assert d == n and cert.witness == tuple(range(n))

    def test_intervals(self):
        C = intervals(5)
        d, cert = teaching_dimension(C, L("10000"))
        assert (d, cert.witness) == (2, (0, 1))
        assert cert.signs == {0: 1, 1: 0}
        assert teaching_dimension(C, L("01000"))[0] == 3

    def test_lexicographic_tie_break(self):
        # both {0} and {1} separate 11 from 00; the least one is chosen
        C = SetSystem.from_strings(["00", "11"])
        assert teaching_dimension(C, L("11"))[1].witness == (0,)

    @settings(max_examples=80, deadline=None)
    @given(set_systems())
    def test_matches_bruteforce(self, C):
        sets = bf.as_sets(C.to_strings())
        for c in C:
            d, cert = teaching_dimension(C, c)
            assert cert.verify()
            assert d == bf.td(sets, frozenset(c.positives()), C.ground_size)

    @settings(max_examples=40, deadline=None)
    @given(set_systems(min_concepts=2), st.data())
    def test_subclass_monotone(self, C, data):
        keep = data.draw(st.lists(st.sampled_from(C.concepts), min_size=1, unique=True))
        sub = SetSystem(C.ground_size, tuple(keep))
        for x in keep:
            c = Labeling(C.ground_size, x)
            assert teaching_dimension(sub, c)[0] <= teaching_dimension(C, c)[0]


class TestCompressible:
    def test_k_ground_size(self, thr3):
        assert all(is_k_compressible(thr3, c, 3) for c in thr3)

    def test_cube(self):
        assert not is_k_compressible(full_cube(3), L("010"), 2)

    @settings(max_examples=40, deadline=None)
    @given(set_systems(max_ground=4, max_concepts=8))
    def test_three_way_equality(self, C):
        for c in C:
            for k in range(C.ground_size + 1):
                a = is_k_compressible(C, c, k)
                assert a == is_k_isolated(C, c, k) == literal_k_compressible(C, c, k)


class TestKc:
    def test_values(self):
        assert [kc(d) for d in range(4)] == [0, 1, 6, 23]

    @pytest.mark.parametrize("d", range(7))
    def test_recursion(self, d):
        assert kc(d + 1) == kc(d) + 2 ** (d + 1) * d + 1
        assert kc_parameters(d + 1).k0_value == 2 ** (d + 1) * d + 1

    def test_monotone(self):
        vals = [kc(d) for d in range(11)]
        assert vals == sorted(vals)

    def test_parameters(self):
        p = kc_parameters(2)
        assert (p.kc_value, p.k0_value) == (6, 5)
        assert kc_parameters(0).k0_value is None


class TestFindKc:
    def test_thresholds(self):
        C = thresholds(10)
        c, cert = find_kc_compressible(C)
        assert cert.verify() and cert.size <= kc(1) == 1
        _, full = teaching_dimension(C, L("1" * 10))
        assert full.signs == {9: 1}

    def test_small_ground_base_case(self):
        C = full_cube(2)
        c, cert = find_kc_compressible(C)
        assert cert.size == 2 <= kc(2)
        assert cert.verify()

    def test_intervals(self):
        C = intervals(8)
        c, cert = find_kc_compressible(C)
        assert cert.verify() and cert.size <= 6
        assert min(teaching_dimension(C, x)[0] for x in C) == 2

    def test_empty(self):
        with pytest.raises(InputError):
            find_kc_compressible(SetSystem(3))

    @settings(max_examples=100, deadline=None)
    @given(set_systems(max_ground=8, max_concepts=20))
    def test_guarantee_and_oracle(self, C):
        c, cert = find_kc_compressible(C)
        bound = kc(vc_dimension(C))
        assert cert.concept == c and cert.verify(C)
        assert cert.size <= bound
        sets = bf.as_sets(C.to_strings())
        assert min(bf.td(sets, s, C.ground_size) for s in sets) <= cert.size


class TestExtend:
    def test_total_condition(self, thr3):
        c, cert = extend_compressible(thr3, PartialLabeling.from_string("110"), 2)
        assert c == L("110") and cert.verify() and cert.size <= 2

    def test_thresholds(self):
        C = thresholds(10)
        c, cert = extend_compressible(C, PartialLabeling.from_dict(10, {3: 1}), 1)
        assert c[3] == 1 and c in C
        assert cert.verify() and cert.size <= 1 + kc(1)

    def test_inconsistent(self, thr3):
        with pytest.raises(InconsistentCondition):
            extend_compressible(thr3, PartialLabeling.from_string("01*"), 2)

    def test_budget_too_small(self):
        with pytest.raises(InputError):
            extend_compressible(full_cube(3), PartialLabeling.from_string("11*"), 1)

    @settings(max_examples=30, deadline=None)
    @given(set_systems(max_ground=5, max_concepts=10))
    def test_density(self, C):
        m = C.ground_size
        bound = kc(vc_dimension(C))
        for dom in range(1 << m):
            for vals in {x & dom for x in C.concepts}:
                cond = PartialLabeling(m, dom, vals)
                c, cert = extend_compressible(C, cond, len(cond.domain))
                assert cond.extended_by(c.bits) and cert.verify(C)
                assert cert.size <= len(cond.domain) + bound


class TestRtd:
    def test_single(self):
        C = SetSystem.from_strings(["01"])
        assert rtd_sequence(C) == [(L("01"), 0)]

    def test_thresholds(self):
        seq = rtd_sequence(thresholds(4))
        assert len(seq) == 5 and all(v <= kc(1) for _, v in seq)

    def test_cube(self):
        seq = rtd_sequence(full_cube(2))
        assert max(v for _, v in seq) == 2 <= kc(2)

    @settings(max_examples=40, deadline=None)
    @given(set_systems(max_ground=6, max_concepts=14))
    def test_stage_minimum(self, C):
        remaining = set(C.concepts)
        for c, v in rtd_sequence(C):
            S = SetSystem(C.ground_size, tuple(remaining))
            assert v == min(teaching_dimension(S, x)[0] for x in S)
            assert v <= kc(vc_dimension(S))
            remaining.remove(c.bits)
        assert not remaining


class TestHardInstance:
    def test_one(self):
        assert shattering_hard_instance(1).to_strings() == ["0", "1"]

    def test_all_concepts_need_everything(self):
        C = shattering_hard_instance(3)
        sets = bf.as_sets(C.to_strings())
        assert all(bf.td(sets, s, 3) == 3 for s in sets)
        assert vc_dimension(C) == 3

    def test_cap(self):
        with pytest.raises(InputError):
            shattering_hard_instance(21)


def test_maximal_condition_reaches_lower_dimension():
    # the greedy step must cut the class down before recursing
    C = intervals(7)
    from vccompress.compression import _maximal_condition

    cond, teach = _maximal_condition(C, 2, kc_parameters(2).k0_value)
    assert vc_dimension(relativize(C, cond)) <= 1
    R = restrict(C, cond.domain)
    assert bin(teach).count("1") <= 5 and R.ground_size == len(cond.domain)
