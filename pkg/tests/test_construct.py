"""construct: column materialization (order included), codeword map,
generator matrices, and the ring-matrix expansion route, cross-checked
against independent enumerations."""

import random

import numpy as np
import pytest

from simplicode.construct import (
    BinaryDefiningSet,
    DefiningSetSpec,
    DimensionMismatch,
    build_defining_set,
    codeword,
    columns_as_masks,
    columns_hex,
    generator_matrix,
    subfield_generator_from_ring_matrix,
)
from simplicode.gf2core import BinaryMatrix, BitVector, rank
from simplicode.ring import BASIS, UV, ZERO, ONE, RingElement, ring_add
from simplicode.simplicial import SetSpec
from simplicode.sweeps import spec_from_faces


def columns_by_hand(spec: DefiningSetSpec) -> list[tuple[int, int, int, int]]:
    """Independent column enumeration in the canonical order."""
    m = spec.m
    if spec.complemented_whole:
        product = set()
        for d1 in spec.components[0].member_masks():
            for d2 in spec.components[1].member_masks():
                for d3 in spec.components[2].member_masks():
                    for d4 in spec.components[3].member_masks():
                        product.add((d1, d2, d3, d4))
        tuples = [
            (t >> 3 * m & (1 << m) - 1, t >> 2 * m & (1 << m) - 1,
             t >> m & (1 << m) - 1, t & (1 << m) - 1)
            for t in range(1 << 4 * m)
        ]
        chosen = [t for t in tuples if t not in product]
    else:
        chosen = [
            (d1, d2, d3, d4)
            for d1 in spec.components[0].member_masks()
            for d2 in spec.components[1].member_masks()
            for d3 in spec.components[2].member_masks()
            for d4 in spec.components[3].member_masks()
        ]
    return [(d1 ^ d4, d3, d2, d1) for d1, d2, d3, d4 in chosen]


def ds_tuples(ds: BinaryDefiningSet) -> list[tuple[int, int, int, int]]:
    return [tuple(int(s[j]) for s in (ds.e1, ds.e2, ds.e3, ds.e4)) for j in range(ds.n)]


# -- spec / build ------------------------------------------------------------


def test_spec_rejects_mixed_m():
    with pytest.raises(DimensionMismatch):
        DefiningSetSpec(2, (SetSpec.zero(2), SetSpec.zero(2), SetSpec.zero(2), SetSpec.zero(3)))


def test_spec_json_roundtrip():
    spec = spec_from_faces(3, ((1,), (), (2, 3), ()), (0, 2), whole=False)
    assert DefiningSetSpec.from_json(spec.to_json()) == spec
    whole = spec_from_faces(2, ((1,), (), (), ()), whole=True)
    assert DefiningSetSpec.from_json(whole.to_json()) == whole


def test_build_m1_single_face():
    spec = DefiningSetSpec(
        1, (SetSpec.zero(1), SetSpec.zero(1), SetSpec.zero(1), SetSpec.simplex((1,), 1))
    )
    ds = build_defining_set(spec)
    assert ds.n == 2
    assert ds_tuples(ds) == [(0, 0, 0, 0), (1, 0, 0, 0)]


def test_build_all_zero_components():
    spec = spec_from_faces(2, ((), (), (), ()))
    ds = build_defining_set(spec)
    assert ds.n == 1
    assert ds_tuples(ds) == [(0, 0, 0, 0)]


def test_build_one_complement_lengths():
    for m in (2, 3, 4):
        for sx in range(m):
            spec = spec_from_faces(
                m,
                (tuple(range(1, sx + 1)), (1,), (), tuple(range(1, m + 1))),
                (0,),
            )
            n = build_defining_set(spec).n
            assert n == (2 ** m - 2 ** sx) * 2 ** (1 + 0 + m) == spec.size()


def test_build_canonical_order():
    spec = spec_from_faces(2, ((1,), (2,), (), (1,)), (0,))
    ds = build_defining_set(spec)
    assert ds_tuples(ds) == columns_by_hand(spec)


def test_build_whole_complement_order_and_size():
    spec = spec_from_faces(1, ((), (), (), ()), whole=True)
    ds = build_defining_set(spec)
    assert ds.n == 15
    assert ds_tuples(ds) == columns_by_hand(spec)
    spec2 = spec_from_faces(2, ((1,), (), (2,), ()), whole=True)
    assert ds_tuples(build_defining_set(spec2)) == columns_by_hand(spec2)


def test_build_explicit_duplicates_kept():
    comps = (
        SetSpec.explicit([0, 0], 1),
        SetSpec.zero(1),
        SetSpec.zero(1),
        SetSpec.simplex((1,), 1),
    )
    ds = build_defining_set(DefiningSetSpec(1, comps))
    assert ds.n == 4
    assert ds_tuples(ds) == [(0, 0, 0, 0), (1, 0, 0, 0)] * 2


def test_build_guards():
    big = spec_from_faces(9, ((), (), (), ()))
    with pytest.raises(ValueError):
        build_defining_set(big)
    with pytest.raises(ValueError):
        build_defining_set(spec_from_faces(6, ((), (), (), ()), whole=True))


# -- codeword ----------------------------------------------------------------


def test_codeword_zero_message():
    spec = spec_from_faces(2, ((1,), (2,), (), (1,)), (0,))
    ds = build_defining_set(spec)
    assert codeword(ds, 0, 0, 0, 0).weight() == 0


def test_codeword_single_zero_column():
    ds = build_defining_set(spec_from_faces(2, ((), (), (), ())))
    for x in range(4):
        assert codeword(ds, x, x, 0, x).bits == 0


def test_codeword_published_first_example_row_weight():
    # frozen by hand: 60 of the 15*8 columns have (d1+d4) odd in bit 1
    spec = spec_from_faces(4, ((), (), (), (1, 2, 3)), (0,))
    ds = build_defining_set(spec)
    w = codeword(ds, 1, 0, 0, 0).weight()
    assert w == 60 and w in (60, 64)


def test_codeword_linearity():
    rng = random.Random(3)
    spec = spec_from_faces(3, ((1, 2), (3,), (), (1,)), (1,))
    ds = build_defining_set(spec)
    for _ in range(25):
        xa = [rng.randrange(8) for _ in range(4)]
        xb = [rng.randrange(8) for _ in range(4)]
        xs = [a ^ b for a, b in zip(xa, xb)]
        assert (
            codeword(ds, *xs).bits
            == codeword(ds, *xa).bits ^ codeword(ds, *xb).bits
        )


# -- generator_matrix ----------------------------------------------------------


def test_generator_zero_defining_set():
    code = generator_matrix(build_defining_set(spec_from_faces(2, ((), (), (), ()))))
    assert code.generator.rows == (0,) * 8
    assert code.n == 1 and code.k == 0


def test_generator_published_parameters():
    ex1 = spec_from_faces(4, ((), (), (), (1, 2, 3)), (0,))
    code = generator_matrix(build_defining_set(ex1), ex1)
    assert (code.n, code.k) == (120, 7)
    ex3 = spec_from_faces(4, ((1,), (), (1,), (1, 2, 3, 4)), (0,))
    code = generator_matrix(build_defining_set(ex3), ex3)
    assert (code.n, code.k) == (448, 9)


def test_row_space_equals_codeword_image_exhaustive():
    for spec in (
        spec_from_faces(1, ((), (), (), (1,)), (0,)),
        spec_from_faces(2, ((1,), (2,), (), (1, 2)), (0, 1)),
        spec_from_faces(2, ((1,), (), (2,), ()), whole=True),
    ):
        ds = build_defining_set(spec)
        code = generator_matrix(ds, spec)
        image = set()
        m = spec.m
        for x in range(1 << (4 * m)):
            parts = [(x >> (i * m)) & ((1 << m) - 1) for i in range(4)]
            image.add(codeword(ds, *parts).bits)
        span = {0}
        for row in code.generator.rows:
            span |= {v ^ row for v in span}
        assert image == span
        assert len(image) == 1 << code.k


def test_row_space_membership_sampled_m4():
    rng = random.Random(11)
    spec = spec_from_faces(4, ((1, 2), (3,), (), (1, 4)), (0,))
    ds = build_defining_set(spec)
    code = generator_matrix(ds, spec)
    base = rank(code.generator)
    for _ in range(20):
        parts = [rng.randrange(16) for _ in range(4)]
        cw = codeword(ds, *parts).bits
        stacked = BinaryMatrix(code.generator.rows + (cw,), code.n)
        assert rank(stacked) == base


# -- ring-matrix expansion -----------------------------------------------------


def test_expand_single_entries():
    out = subfield_generator_from_ring_matrix([[UV]])
    assert out.rows == (1, 0, 0, 0) and out.n == 1
    out = subfield_generator_from_ring_matrix([[ONE]])
    assert out.rows == (1, 0, 1, 1)
    out = subfield_generator_from_ring_matrix([[ZERO, ZERO]])
    assert out.rows == (0, 0, 0, 0) and out.n == 2


def test_expand_matches_generator_small_m():
    rng = random.Random(5)
    for trial in range(6):
        m = rng.choice((1, 2))
        positions = tuple(sorted(rng.sample(range(4), rng.randint(0, 2))))
        faces = []
        for i in range(4):
            cap = m - 1 if i in positions else m  # complement of a full face is empty
            faces.append(tuple(sorted(rng.sample(range(1, m + 1), rng.randint(0, cap)))))
        spec = spec_from_faces(m, faces, positions)
        ds = build_defining_set(spec)
        code = generator_matrix(ds, spec)
        ring_rows = []
        for i in range(m):
            row = []
            for j in range(ds.n):
                d = (int(ds.e4[j]), int(ds.e3[j]), int(ds.e2[j]),
                     int(ds.e1[j]) ^ int(ds.e4[j]))
                g = ZERO
                for comp, basis_el in zip(d, BASIS):
                    if comp >> i & 1:
                        g = ring_add(g, basis_el)
                row.append(g)
            ring_rows.append(row)
        expanded = subfield_generator_from_ring_matrix(ring_rows)
        assert expanded.rows == code.generator.rows


def test_expand_rejects_bad_input():
    with pytest.raises(TypeError):
        subfield_generator_from_ring_matrix([[1]])
    with pytest.raises(ValueError):
        subfield_generator_from_ring_matrix([[ZERO], [ZERO, ZERO]])


# -- column helpers -------------------------------------------------------------


def test_columns_as_masks_and_hex():
    mat = BinaryMatrix((0b110, 0b011), 3)
    np.testing.assert_array_equal(columns_as_masks(mat), [2, 3, 1])
    assert columns_hex(mat) == ["2", "3", "1"]
