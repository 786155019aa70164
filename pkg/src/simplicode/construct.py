"""Build binary codes from four-component defining sets.

A defining set over the ring is given by four symbolic subsets
A1..A4 of GF(2)^m (one per basis element).  Projecting to the field
turns each ring column into the 4-tuple (d1+d4, d3, d2, d1); the code's
coordinates are plain GF(2) inner products of a 4m-bit message with
those tuples.  Column order is canonical (lexicographic in the
component indices, each component ascending by mask) so generator
matrices are reproducible byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2core import BinaryMatrix, BitVector, _mask_of, rank
from .ring import RingElement, trace_pairings
from .simplicial import SetSpec


class DimensionMismatch(ValueError):
    """Defining-set components disagree on the ambient dimension m."""


PRODUCT_MAX_M = 8     # 4m-row matrices with product columns
ENUM_MAX_M = 5        # anything that walks 2^(4m) tuples or explicit sets


@dataclass(frozen=True)
class DefiningSetSpec:
    """Four component subsets plus the optional whole-set complement.

    With complemented_whole the defining set is the complement, inside
    the full ring module, of the combined set b1 A1 + ... + b4 A4.
    """

    m: int
    components: tuple[SetSpec, SetSpec, SetSpec, SetSpec]
    complemented_whole: bool = False

    def __post_init__(self) -> None:
        if len(self.components) != 4:
            raise DimensionMismatch("need exactly four components")
        for comp in self.components:
            if comp.m != self.m:
                raise DimensionMismatch(
                    f"component has m={comp.m}, defining set has m={self.m}"
                )

    def size(self) -> int:
        prod = 1
        for comp in self.components:
            prod *= comp.size()
        if self.complemented_whole:
            return (1 << (4 * self.m)) - prod
        return prod

    def to_json(self) -> dict:
        out = {"m": self.m}
        for i, comp in enumerate(self.components, start=1):
            out[f"A{i}"] = comp.to_json()
        out["complement_whole"] = self.complemented_whole
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DefiningSetSpec":
        m = int(obj["m"])
        comps = tuple(SetSpec.from_json(obj[f"A{i}"], m) for i in range(1, 5))
        return cls(m, comps, bool(obj.get("complement_whole", False)))


@dataclass(frozen=True)
class BinaryDefiningSet:
    """Materialized columns: four parallel mask streams e1..e4.

    Column j of the code is the 4-tuple (e1[j], e2[j], e3[j], e4[j]) =
    (d1+d4, d3, d2, d1) for the j-th defining-set element.
    """

    m: int
    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    e4: np.ndarray

    @property
    def n(self) -> int:
        return len(self.e1)

    def column(self, j: int) -> tuple[BitVector, BitVector, BitVector, BitVector]:
        return tuple(
            BitVector(int(stream[j]), self.m)
            for stream in (self.e1, self.e2, self.e3, self.e4)
        )

    def columns(self):
        for j in range(self.n):
            yield self.column(j)


def _member_array(comp: SetSpec) -> np.ndarray:
    return np.asarray(comp.member_masks(), dtype=np.int64)


def build_defining_set(spec: DefiningSetSpec) -> BinaryDefiningSet:
    """Materialize the projected defining set in canonical column order.

    Duplicate columns (possible with explicit multiset components) are
    kept.  Memory guards: m <= 5 with explicit components or a whole-set
    complement, m <= 8 otherwise.
    """
    m = spec.m
    heavy = spec.complemented_whole or any(
        c.kind == "explicit" for c in spec.components
    )
    limit = ENUM_MAX_M if heavy else PRODUCT_MAX_M
    if m > limit:
        raise ValueError(f"m={m} exceeds the materialization guard ({limit})")

    if spec.complemented_whole:
        for comp in spec.components:
            if comp.kind == "explicit" and len(set(comp.vectors)) != len(comp.vectors):
                raise ValueError(
                    "whole-set complement needs set components (explicit duplicates)"
                )
        size = 1 << m
        keep = np.ones((size,) * 4, dtype=bool)
        idx = np.ix_(*[
            np.asarray(sorted(set(comp.member_masks())), dtype=np.intp)
            for comp in spec.components
        ])
        keep[idx] = False
        t = np.flatnonzero(keep.reshape(-1)).astype(np.int64)
        if len(t) == 0:
            raise ValueError("empty defining set (complement of the whole module)")
        mask = size - 1
        d1 = t >> (3 * m) & mask
        d2 = t >> (2 * m) & mask
        d3 = t >> m & mask
        d4 = t & mask
    else:
        a1, a2, a3, a4 = (_member_array(c) for c in spec.components)
        l1, l2, l3, l4 = (len(a) for a in (a1, a2, a3, a4))
        if min(l1, l2, l3, l4) == 0:
            raise ValueError("empty defining set (an empty component)")
        d1 = np.repeat(a1, l2 * l3 * l4)
        d2 = np.tile(np.repeat(a2, l3 * l4), l1)
        d3 = np.tile(np.repeat(a3, l4), l1 * l2)
        d4 = np.tile(a4, l1 * l2 * l3)

    return BinaryDefiningSet(m, d1 ^ d4, d3, d2, d1)


def _pack_bits(bits: np.ndarray) -> int:
    """Little-endian bit packing: bits[j] becomes bit j of the result."""
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def codeword(ds: BinaryDefiningSet, x1, x2, x3, x4) -> BitVector:
    """Image of the message (x1, x2, x3, x4); linear in each argument."""
    masks = [_mask_of(x) for x in (x1, x2, x3, x4)]
    for x in masks:
        if x >> ds.m:
            raise ValueError("message block does not fit in m bits")
    par = np.zeros(ds.n, dtype=np.int64)
    for x, stream in zip(masks, (ds.e1, ds.e2, ds.e3, ds.e4)):
        par += np.bitwise_count(x & stream)
    return BitVector(_pack_bits(par & 1), ds.n)


@dataclass(frozen=True)
class BinaryCode:
    """Generator matrix (4m rows x n) with cached rank.

    Row blocks [0, m), [m, 2m), [2m, 3m), [3m, 4m) are the images of
    unit vectors in the four message blocks, in that order.
    """

    generator: BinaryMatrix
    n: int
    k: int
    m: int
    provenance: DefiningSetSpec | None = None


def generator_matrix(ds: BinaryDefiningSet, provenance: DefiningSetSpec | None = None) -> BinaryCode:
    """Stack the unit-message codewords into the canonical generator."""
    rows = []
    for stream in (ds.e1, ds.e2, ds.e3, ds.e4):
        for i in range(ds.m):
            rows.append(_pack_bits(stream >> i & 1))
    mat = BinaryMatrix(tuple(rows), ds.n)
    return BinaryCode(mat, ds.n, rank(mat), ds.m, provenance)


def subfield_generator_from_ring_matrix(G) -> BinaryMatrix:
    """Expand a k x n matrix over the ring into the 4k x n field generator.

    Entry g with basis coordinates (g1, g2, g3, g4) contributes
    (g1+g4, g3, g2, g1) down its column; blocks are stacked whole
    (all first components, then all second, ...).
    """
    grid = [list(row) for row in G]
    k = len(grid)
    n = len(grid[0]) if k else 0
    for row in grid:
        if len(row) != n:
            raise ValueError("ragged ring matrix")
        for g in row:
            if not isinstance(g, RingElement):
                raise TypeError("entries must be RingElement")
    pair = [[trace_pairings(g) for g in row] for row in grid]
    rows = []
    for component in range(4):
        for row in pair:
            bits = 0
            for j, t in enumerate(row):
                if t[component]:
                    bits |= 1 << j
            rows.append(bits)
    return BinaryMatrix(tuple(rows), n)


def columns_as_masks(mat: BinaryMatrix) -> np.ndarray:
    """Columns of a row-mask matrix as r-bit integers (row 0 = bit 0)."""
    r = len(mat.rows)
    if r > 62:
        raise ValueError("column masks only supported up to 62 rows")
    if mat.n == 0:
        return np.zeros(0, dtype=np.int64)
    nbytes = (mat.n + 7) // 8
    cols = np.zeros(mat.n, dtype=np.int64)
    for i, row in enumerate(mat.rows):
        raw = np.frombuffer(row.to_bytes(nbytes, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[: mat.n].astype(np.int64)
        cols |= bits << i
    return cols


def columns_hex(mat: BinaryMatrix) -> list[str]:
    """One hex token per column (column value as in columns_as_masks)."""
    return [format(int(c), "x") for c in columns_as_masks(mat)]
