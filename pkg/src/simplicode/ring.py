"""The 16-element algebra F2[u,v] with u^2 = v^2 = 0 and uv = vu.

An element a + bu + cv + duv is packed as a 4-bit nibble (bit 0 = a,
bit 1 = b, bit 2 = c, bit 3 = d), so addition is XOR and vector dot
products over the ring stay branch-free.  Multiplication goes through a
256-entry table generated from the polynomial reduction at import time
and checked there against the closed form.

The map tr(a + bu + cv + duv) = a + b + c + d is a field-valued trace
(its kernel contains no nonzero ideal; the tests check this
exhaustively), and B = {b1 = 1+u+v, b2 = u+v, b3 = u, b4 = uv} is the
working basis for subfield expansion.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RingElement:
    nib: int

    def __post_init__(self) -> None:
        if not 0 <= self.nib <= 15:
            raise ValueError("nibble out of range")

    @property
    def a(self) -> int:
        return self.nib & 1

    @property
    def b(self) -> int:
        return self.nib >> 1 & 1

    @property
    def c(self) -> int:
        return self.nib >> 2 & 1

    @property
    def d(self) -> int:
        return self.nib >> 3 & 1

    @classmethod
    def from_coeffs(cls, a: int, b: int, c: int, d: int) -> "RingElement":
        return cls((a & 1) | (b & 1) << 1 | (c & 1) << 2 | (d & 1) << 3)

    def __str__(self) -> str:
        return format_element(self)


ZERO = RingElement(0)
ONE = RingElement(1)
U = RingElement(2)
V = RingElement(4)
UV = RingElement(8)

# Basis used for the subfield expansion.
B1 = RingElement.from_coeffs(1, 1, 1, 0)  # 1 + u + v
B2 = RingElement.from_coeffs(0, 1, 1, 0)  # u + v
B3 = U
B4 = UV
BASIS = (B1, B2, B3, B4)


def _mul_by_reduction(x: int, y: int) -> int:
    # Multiply as polynomials in u, v and reduce by u^2 = v^2 = 0.
    # Monomial index: 0 -> 1, 1 -> u, 2 -> v, 3 -> uv (bit 0: u, bit 1: v).
    out = 0
    for i in range(4):
        if not x >> i & 1:
            continue
        for j in range(4):
            if not y >> j & 1:
                continue
            du = (i & 1) + (j & 1)
            dv = (i >> 1) + (j >> 1)
            if du >= 2 or dv >= 2:
                continue
            out ^= 1 << (du | dv << 1)
    return out


_MUL_TABLE = tuple(_mul_by_reduction(x, y) for x in range(16) for y in range(16))

# Closed form of the same product; disagreement here would mean the
# reduction above is wrong, so fail hard at import.
for _x in range(16):
    for _y in range(16):
        _a1, _b1x, _c1, _d1 = _x & 1, _x >> 1 & 1, _x >> 2 & 1, _x >> 3 & 1
        _a2, _b2x, _c2, _d2 = _y & 1, _y >> 1 & 1, _y >> 2 & 1, _y >> 3 & 1
        _closed = RingElement.from_coeffs(
            _a1 & _a2,
            (_a1 & _b2x) ^ (_b1x & _a2),
            (_a1 & _c2) ^ (_c1 & _a2),
            (_a1 & _d2) ^ (_d1 & _a2) ^ (_b1x & _c2) ^ (_c1 & _b2x),
        ).nib
        if _MUL_TABLE[_x << 4 | _y] != _closed:
            raise AssertionError("multiplication table disagrees with closed form")
del _x, _y, _a1, _b1x, _c1, _d1, _a2, _b2x, _c2, _d2, _closed


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(x.nib ^ y.nib)


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(_MUL_TABLE[x.nib << 4 | y.nib])


def trace(x: RingElement) -> int:
    """a + b + c + d over GF(2)."""
    return x.nib.bit_count() & 1


@dataclass(frozen=True)
class BasisCoeffs:
    """Coordinates g1..g4 of an element in the basis B."""

    g1: int
    g2: int
    g3: int
    g4: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.g1, self.g2, self.g3, self.g4)


def basis_decompose(x: RingElement) -> BasisCoeffs:
    """Unique coefficients with x = g1 b1 + g2 b2 + g3 b3 + g4 b4."""
    return BasisCoeffs(x.a, x.a ^ x.c, x.b ^ x.c, x.d)


def reconstruct(g: BasisCoeffs) -> RingElement:
    out = ZERO
    for gi, bi in zip(g.as_tuple(), BASIS):
        if gi & 1:
            out = ring_add(out, bi)
    return out


def trace_pairings(x: RingElement) -> tuple[int, int, int, int]:
    """(tr(x b1), tr(x b2), tr(x b3), tr(x b4)).

    Equals (g1+g4, g3, g2, g1) in the basis coordinates of x; this is
    the column an element contributes to the subfield generator.
    """
    g = basis_decompose(x)
    return (g.g1 ^ g.g4, g.g3, g.g2, g.g1)


_TERMS = (("1", 1), ("u", 2), ("v", 4), ("uv", 8))


def format_element(x: RingElement) -> str:
    """Render as "1+u+v+uv" style text; zero renders as "0"."""
    parts = [name for name, bit in _TERMS if x.nib & bit]
    return "+".join(parts) if parts else "0"


def parse_element(s: str) -> RingElement:
    """Inverse of format_element; accepts the same grammar plus "0"."""
    text = s.replace(" ", "")
    if text == "0":
        return ZERO
    nib = 0
    for part in text.split("+"):
        for name, bit in _TERMS:
            if part == name:
                if nib & bit:
                    raise ValueError(f"repeated term {part!r} in {s!r}")
                nib |= bit
                break
        else:
            raise ValueError(f"bad term {part!r} in {s!r}")
    return RingElement(nib)
