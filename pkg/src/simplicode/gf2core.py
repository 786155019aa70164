"""Bit-parallel linear algebra over GF(2) plus exact integer transforms.

Vectors live in GF(2)^m and are stored as Python integers: bit i of the
mask is coordinate i+1 of {1, ..., m}, so the string form reads
coordinate 1 first ("110" = coordinates {1, 2}).  Matrices are tuples of
row masks sharing one width.  All counts (weight distributions, dual
coefficients, Krawtchouk sums) are arbitrary-precision integers;
Krawtchouk values already overflow 64 bits around length 100, and
exactness is the whole point of this library.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

# 2^m tables (character sums, member lists, message enumeration) must fit
# in memory; operations that build them refuse anything larger.
MAX_ENUM_M = 24


class NonIntegerDualCoefficient(ValueError):
    """A MacWilliams division came out inexact: the input weight
    distribution is not that of an [n, k] binary linear code."""


@dataclass(frozen=True)
class BitVector:
    """Vector in GF(2)^m as an m-bit mask (bit i <-> coordinate i+1).

    Message-space vectors are short (the enumeration ops cap m at
    MAX_ENUM_M); codewords reuse the same type at full code length.
    """

    bits: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("length must be positive")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"mask {self.bits:#x} does not fit in {self.m} bits")

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """1-based coordinates carrying a 1."""
        return tuple(i + 1 for i in range(self.m) if self.bits >> i & 1)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.m))

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse "110"-style text, coordinate 1 first."""
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
        return cls(bits, len(s))

    @classmethod
    def from_support(cls, coords, m: int) -> "BitVector":
        bits = 0
        for c in coords:
            if not 1 <= c <= m:
                raise ValueError(f"coordinate {c} outside [1, {m}]")
            bits |= 1 << (c - 1)
        return cls(bits, m)


def _mask_of(v) -> int:
    return v.bits if isinstance(v, BitVector) else int(v)


@dataclass(frozen=True)
class BinaryMatrix:
    """Matrix over GF(2): rows as masks, all of width n."""

    rows: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative width")
        for r in self.rows:
            if r < 0 or (self.n < r.bit_length()):
                raise ValueError("row does not fit declared width")

    @property
    def r(self) -> int:
        return len(self.rows)

    def row_vectors(self) -> list[BitVector]:
        return [BitVector(r, self.n) for r in self.rows]

    def to_text(self) -> str:
        """Plain 0/1 rendering, one row per line, coordinate 1 first."""
        return "\n".join(
            "".join("1" if r >> j & 1 else "0" for j in range(self.n)) for r in self.rows
        )


def row_reduce(M: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    """Reduced row-echelon form plus pivot columns.

    Deterministic: columns scanned left to right, the first usable row
    (top to bottom) becomes the pivot.  Zero rows are dropped, so the
    output has exactly rank(M) rows and strictly increasing pivots.
    """
    rows = list(M.rows)
    pivots: list[int] = []
    rr = 0
    for col in range(M.n):
        bit = 1 << col
        src = next((i for i in range(rr, len(rows)) if rows[i] & bit), None)
        if src is None:
            continue
        rows[rr], rows[src] = rows[src], rows[rr]
        for i in range(len(rows)):
            if i != rr and rows[i] & bit:
                rows[i] ^= rows[rr]
        pivots.append(col)
        rr += 1
        if rr == len(rows):
            break
    return BinaryMatrix(tuple(rows[:rr]), M.n), pivots


def rank(M: BinaryMatrix) -> int:
    return len(row_reduce(M)[1])


def wht_inplace(table) -> None:
    """In-place Walsh-Hadamard butterflies on a mutable sequence.

    After the call, table[x] = sum_t f[t] * (-1)^(x . t) where f was the
    input.  Works on plain lists; analyze keeps its own numpy variant.
    """
    size = len(table)
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < size:
        for base in range(0, size, h * 2):
            for j in range(base, base + h):
                a, b = table[j], table[j + h]
                table[j] = a + b
                table[j + h] = a - b
        h *= 2


def walsh_hadamard_charsums(A, m: int) -> list[int]:
    """Signed character sums table[x] = sum_{t in A} (-1)^(x . t).

    A is any iterable of BitVector or masks over GF(2)^m (multiset
    semantics: repeats count).  table[0] = |A|; cost O(m 2^m).
    """
    if not 1 <= m <= MAX_ENUM_M:
        raise ValueError(f"m must be in [1, {MAX_ENUM_M}]")
    table = [0] * (1 << m)
    for v in A:
        t = _mask_of(v)
        if t >> m:
            raise ValueError("element does not fit in m bits")
        table[t] += 1
    wht_inplace(table)
    return table


def krawtchouk(j: int, i: int, n: int) -> int:
    """K_j(i; n) = sum_s (-1)^s C(i, s) C(n-i, j-s), exact."""
    if not (0 <= j <= n and 0 <= i <= n):
        raise ValueError("need 0 <= j, i <= n")
    lo = max(0, j - (n - i))
    hi = min(i, j)
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(lo, hi + 1))


@dataclass(frozen=True, eq=False)
class WeightDistribution:
    """Exact weight -> count map for an [n, k] binary code.

    Counts sum to 2^k and the count at weight 0 is exactly 1; validate()
    checks both.  Counts are plain ints, never floats.
    """

    entries: dict[int, int]
    n: int

    def __post_init__(self) -> None:
        for w, c in self.entries.items():
            if not 0 <= w <= self.n:
                raise ValueError(f"weight {w} outside [0, {self.n}]")
            if c < 0:
                raise ValueError("negative count")

    def validate(self, k: int) -> None:
        if self.entries.get(0, 0) != 1:
            raise ValueError("count at weight 0 must be exactly 1")
        total = sum(self.entries.values())
        if total != 1 << k:
            raise ValueError(f"counts sum to {total}, expected 2^{k}")

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.entries.items() if w > 0 and c > 0)

    @property
    def weight_count(self) -> int:
        """Number of distinct nonzero weights with positive count."""
        return len(self.nonzero_weights())

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted((w, c) for w, c in self.entries.items() if c > 0)

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{w},{c}" for w, c in self.sorted_items()]
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.n == other.n and dict(self.sorted_items()) == dict(other.sorted_items())


def macwilliams_prefix(W: WeightDistribution, n: int, k: int, jmax: int) -> list[int]:
    """First dual weight-distribution coefficients A'_0 .. A'_jmax.

    A'_j = 2^-k sum_i A_i K_j(i; n); every division must be exact, else
    the input distribution was inconsistent and we raise.
    """
    if jmax > n:
        raise ValueError("jmax exceeds length")
    W.validate(k)
    items = W.sorted_items()
    out: list[int] = []
    for j in range(jmax + 1):
        s = sum(c * krawtchouk(j, i, n) for i, c in items)
        q, r = divmod(s, 1 << k)
        if r:
            raise NonIntegerDualCoefficient(
                f"A'_{j} = {s}/2^{k} is not an integer; inconsistent distribution"
            )
        out.append(q)
    return out
