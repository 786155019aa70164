"""simplicial: membership, psi, closed-form character sums, the
inclusion-exclusion size count and the nonzero-vector pattern counts,
each against direct enumeration."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplicode.gf2core import BitVector
from simplicode.simplicial import (
    NotAntichain,
    SetSpec,
    char_sum,
    complex_size_inclusion_exclusion,
    count_psi_pattern,
    members,
    psi,
)


def strs(vs):
    return [str(v) for v in vs]


def charsum_direct(spec: SetSpec, x: int) -> int:
    return sum(-1 if (x & t).bit_count() & 1 else 1 for t in spec.member_masks())


def complex_size_by_enumeration(faces, m: int) -> int:
    masks = [sum(1 << (c - 1) for c in f) for f in faces]
    return sum(1 for v in range(1 << m) if any(v & ~fm == 0 for fm in masks))


# -- members ----------------------------------------------------------------


def test_members_empty_face():
    assert strs(members(SetSpec.simplex((), 3))) == ["000"]


def test_members_two_element_face():
    s = SetSpec.simplex((1, 2), 3)
    assert strs(members(s)) == ["000", "100", "010", "110"]
    assert s.size() == 4 == len(members(s))


def test_members_complement():
    s = SetSpec.complement((1,), 2)
    assert strs(members(s)) == ["01", "11"]
    assert s.size() == 2 ** 2 - 2 ** 1


def test_full_and_zero_normalize():
    assert SetSpec.full(3) == SetSpec.simplex((1, 2, 3), 3)
    assert SetSpec.zero(3) == SetSpec.simplex((), 3)


def test_explicit_keeps_duplicates_sorted():
    s = SetSpec.explicit([3, 0, 3], 2)
    assert s.vectors == (0, 3, 3)
    assert s.size() == 3
    assert [v.bits for v in members(s)] == [0, 3, 3]


@settings(max_examples=60)
@given(st.data())
def test_simplex_members_downward_closed(data):
    m = data.draw(st.integers(1, 8))
    face = data.draw(st.sets(st.integers(1, m)))
    got = set(SetSpec.simplex(face, m).member_masks())
    assert len(got) == 1 << len(face)
    for v in got:
        sub = v
        while True:  # every submask of a member is a member
            assert sub in got
            if sub == 0:
                break
            sub = (sub - 1) & v


# -- psi ---------------------------------------------------------------------


def test_psi_zero_vector_and_empty_face():
    for Y in ((), (1,), (1, 2, 3)):
        assert psi(BitVector(0, 3), Y) == 1
    for x in range(8):
        assert psi(BitVector(x, 3), ()) == 1


def test_psi_support_intersection():
    x = BitVector.from_string("110")
    assert psi(x, (3,)) == 1
    assert psi(x, (1, 3)) == 0


# -- char_sum ----------------------------------------------------------------


def test_char_sum_at_zero():
    for m in (2, 3, 4):
        for fsize in range(m + 1):
            face = tuple(range(1, fsize + 1))
            assert char_sum(SetSpec.simplex(face, m), 0) == 1 << fsize
            assert char_sum(SetSpec.complement(face, m), 0) == (1 << m) - (1 << fsize)


def test_char_sum_worked_example():
    s = SetSpec.simplex((1, 2), 3)
    assert char_sum(s, BitVector.from_string("100")) == 0
    assert char_sum(s, BitVector.from_string("001")) == 4


def test_char_sum_exhaustive_small_m():
    for m in range(1, 7):
        for fmask in range(1 << m):
            face = tuple(i + 1 for i in range(m) if fmask >> i & 1)
            for spec in (SetSpec.simplex(face, m), SetSpec.complement(face, m)):
                for x in range(1 << m):
                    assert char_sum(spec, x) == charsum_direct(spec, x), (spec, x)


def test_char_sum_sampled_large_m():
    rng = random.Random(20240817)
    for m in (8, 10):
        faces = [(), tuple(range(1, m + 1))] + [
            tuple(sorted(rng.sample(range(1, m + 1), rng.randint(1, m))))
            for _ in range(6)
        ]
        for face in faces:
            for spec in (SetSpec.simplex(face, m), SetSpec.complement(face, m)):
                for _ in range(40):
                    x = rng.randrange(1 << m)
                    assert char_sum(spec, x) == charsum_direct(spec, x)


def test_char_sum_explicit_uses_transform():
    rng = random.Random(7)
    m = 5
    vectors = [rng.randrange(1 << m) for _ in range(11)]
    spec = SetSpec.explicit(vectors, m)
    for x in range(1 << m):
        assert char_sum(spec, x) == charsum_direct(spec, x)


# -- inclusion-exclusion size ------------------------------------------------


def test_size_single_face():
    for fsize in range(5):
        face = tuple(range(1, fsize + 1))
        assert complex_size_inclusion_exclusion([face]) == 1 << fsize


def test_size_two_faces_worked():
    assert complex_size_inclusion_exclusion([(1, 2), (2, 3)]) == 6
    assert complex_size_inclusion_exclusion([(1,), (2,)]) == 3
    assert complex_size_by_enumeration([(1, 2), (2, 3)], 3) == 6


def test_size_rejects_nested_faces():
    with pytest.raises(NotAntichain):
        complex_size_inclusion_exclusion([(1, 2), (1,)])
    with pytest.raises(ValueError):
        complex_size_inclusion_exclusion([])


@settings(max_examples=80)
@given(st.data())
def test_size_matches_enumeration_on_antichains(data):
    m = data.draw(st.integers(1, 10))
    raw = data.draw(
        st.lists(st.sets(st.integers(1, m)), min_size=1, max_size=5)
    )
    # keep only the maximal faces so the input is an antichain
    faces = [f for f in raw if not any(f < g for g in raw)]
    seen = []
    for f in faces:
        if f not in seen:
            seen.append(f)
    assert complex_size_inclusion_exclusion(seen) == complex_size_by_enumeration(
        seen, m
    )


# -- pattern counts ----------------------------------------------------------


def count_pattern_brute(m, X, W, pattern):
    xm = sum(1 << (c - 1) for c in X)
    wm = sum(1 << (c - 1) for c in W)
    want_x, want_w = pattern
    return sum(
        1
        for v in range(1, 1 << m)
        if (v & xm == 0) == bool(want_x) and (v & wm == 0) == bool(want_w)
    )


def test_count_pattern_examples():
    assert count_psi_pattern(3, (1,), (2,), (1, 1)) == 2 ** (3 - 2) - 1
    # single-set marginal: W empty forces psi(.|W) = 1
    for m in (2, 3, 4):
        for sx in range(m + 1):
            X = tuple(range(1, sx + 1))
            assert count_psi_pattern(m, X, (), (1, 1)) == 2 ** (m - sx) - 1
            assert count_psi_pattern(m, X, (), (0, 1)) == 2 ** m - 2 ** (m - sx)
    assert count_psi_pattern(2, (1,), (1,), (0, 0)) == 2


def test_count_pattern_exhaustive():
    for m in range(1, 7):
        subsets = [
            tuple(i + 1 for i in range(m) if mask >> i & 1) for mask in range(1 << m)
        ]
        for X in subsets:
            for W in subsets:
                for pattern in ((0, 0), (0, 1), (1, 0), (1, 1)):
                    assert count_psi_pattern(m, X, W, pattern) == count_pattern_brute(
                        m, X, W, pattern
                    ), (m, X, W, pattern)


# -- JSON ---------------------------------------------------------------------


def test_json_roundtrip_and_aliases():
    s = SetSpec.complement((1, 3), 4)
    assert SetSpec.from_json(s.to_json(), 4) == s
    assert SetSpec.from_json({"kind": "full"}, 3) == SetSpec.full(3)
    assert SetSpec.from_json({"kind": "zero"}, 3) == SetSpec.zero(3)
    e = SetSpec.explicit([5, 2], 3)
    assert SetSpec.from_json(e.to_json(), 3) == e
    with pytest.raises(ValueError):
        SetSpec.from_json({"kind": "nope"}, 3)
