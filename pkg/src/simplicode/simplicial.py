"""Simplicial complexes generated by one face, and their counting tools.

A face X of {1, ..., m} generates the complex of all vectors whose
support sits inside X (size 2^|X|); the complement complex is everything
else.  SetSpec describes one such subset of GF(2)^m symbolically, so
the analysis engines can use closed-form character sums instead of
materializing members.  psi(x | Y) is the indicator that the support of
x avoids Y; it evaluates the character sum over a generated complex in
closed form, and the branch counts below feed the closed-form weight
tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .gf2core import MAX_ENUM_M, BitVector, _mask_of


class NotAntichain(ValueError):
    """A maximal-face list contained one face inside another."""


def _coords_to_mask(coords, m: int) -> int:
    mask = 0
    for c in coords:
        c = int(c)
        if not 1 <= c <= m:
            raise ValueError(f"coordinate {c} outside [1, {m}]")
        mask |= 1 << (c - 1)
    return mask


@dataclass(frozen=True)
class SetSpec:
    """Symbolic subset of GF(2)^m.

    kind is "simplex" (generated complex of face X), "complement"
    (its complement in GF(2)^m) or "explicit" (listed masks, duplicates
    kept).  The full-space and zero-singleton aliases normalize to
    simplex([m]) and simplex({}) on construction.
    """

    kind: str
    m: int
    face: frozenset[int] = frozenset()
    vectors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be positive")
        if self.kind not in ("simplex", "complement", "explicit"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "explicit":
            for v in self.vectors:
                if v < 0 or v >> self.m:
                    raise ValueError("explicit vector does not fit in m bits")
        else:
            for c in self.face:
                if not 1 <= c <= self.m:
                    raise ValueError(f"coordinate {c} outside [1, {self.m}]")

    # -- constructors -------------------------------------------------

    @classmethod
    def simplex(cls, face, m: int) -> "SetSpec":
        return cls("simplex", m, frozenset(int(c) for c in face))

    @classmethod
    def complement(cls, face, m: int) -> "SetSpec":
        return cls("complement", m, frozenset(int(c) for c in face))

    @classmethod
    def full(cls, m: int) -> "SetSpec":
        return cls.simplex(range(1, m + 1), m)

    @classmethod
    def zero(cls, m: int) -> "SetSpec":
        return cls.simplex((), m)

    @classmethod
    def explicit(cls, vectors, m: int) -> "SetSpec":
        return cls("explicit", m, vectors=tuple(sorted(_mask_of(v) for v in vectors)))

    # -- basic facts ---------------------------------------------------

    @property
    def face_mask(self) -> int:
        return _coords_to_mask(self.face, self.m)

    def size(self) -> int:
        if self.kind == "simplex":
            return 1 << len(self.face)
        if self.kind == "complement":
            return (1 << self.m) - (1 << len(self.face))
        return len(self.vectors)

    def member_masks(self) -> list[int]:
        """Members in ascending mask order (duplicates kept for explicit)."""
        if self.m > MAX_ENUM_M:
            raise ValueError(f"m > {MAX_ENUM_M}: member list too large")
        if self.kind == "explicit":
            return list(self.vectors)
        mask = self.face_mask
        if self.kind == "simplex":
            out = []
            s = 0
            while True:
                out.append(s)
                if s == mask:
                    return out
                s = (s | ~mask) + 1 & mask
        return [v for v in range(1 << self.m) if v & ~mask]

    # -- JSON ----------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == "explicit":
            return {
                "kind": "explicit",
                "vectors": [str(BitVector(v, self.m)) for v in self.vectors],
            }
        return {"kind": self.kind, "X": sorted(self.face)}

    @classmethod
    def from_json(cls, obj: dict, m: int) -> "SetSpec":
        kind = obj.get("kind")
        if kind == "full":
            return cls.full(m)
        if kind == "zero":
            return cls.zero(m)
        if kind == "simplex":
            return cls.simplex(obj.get("X", ()), m)
        if kind == "complement":
            return cls.complement(obj.get("X", ()), m)
        if kind == "explicit":
            vecs = [BitVector.from_string(s) for s in obj.get("vectors", ())]
            for v in vecs:
                if v.m != m:
                    raise ValueError("explicit vector length disagrees with m")
            return cls.explicit(vecs, m)
        raise ValueError(f"unknown SetSpec kind {kind!r}")


def members(s: SetSpec) -> list[BitVector]:
    """The described subset as BitVectors, ascending by mask."""
    return [BitVector(v, s.m) for v in s.member_masks()]


def psi(x, Y, m: int | None = None) -> int:
    """1 iff the support of x avoids Y (empty Y gives 1 for every x)."""
    if isinstance(x, BitVector):
        mask = _coords_to_mask(Y, x.m)
        return 1 if x.bits & mask == 0 else 0
    if m is None:
        raise ValueError("pass a BitVector or supply m")
    return 1 if _mask_of(x) & _coords_to_mask(Y, m) == 0 else 0


@lru_cache(maxsize=64)
def _explicit_charsum_table(vectors: tuple[int, ...], m: int) -> tuple[int, ...]:
    from .gf2core import walsh_hadamard_charsums

    return tuple(walsh_hadamard_charsums(vectors, m))


def char_sum(s: SetSpec, x) -> int:
    """sum over members t of (-1)^(x . t).

    Generated complexes and their complements go through the closed
    forms (2^|X| psi, resp. the delta-corrected version); explicit sets
    go through the transform table.
    """
    xb = _mask_of(x)
    if s.kind == "explicit":
        return _explicit_charsum_table(s.vectors, s.m)[xb]
    face = len(s.face)
    p = 1 if xb & s.face_mask == 0 else 0
    if s.kind == "simplex":
        return (1 << face) * p
    delta = 1 if xb == 0 else 0
    return (1 << s.m) * delta - (1 << face) * p


def complex_size_inclusion_exclusion(maximal_faces) -> int:
    """Size of the complex generated by several faces, by inclusion-exclusion.

    Faces must form an antichain (none contained in another), i.e. they
    really are the maximal elements.
    """
    faces = [frozenset(int(c) for c in f) for f in maximal_faces]
    if not faces:
        raise ValueError("need at least one face")
    for f, g in combinations(faces, 2):
        if f <= g or g <= f:
            raise NotAntichain(f"face {sorted(f)} comparable with {sorted(g)}")
    total = 0
    for size in range(1, len(faces) + 1):
        sign = 1 if size & 1 else -1
        for chosen in combinations(faces, size):
            inter = frozenset.intersection(*chosen)
            total += sign * (1 << len(inter))
    return total


def count_psi_pattern(m: int, X, W, pattern: tuple[int, int]) -> int:
    """Number of nonzero x in GF(2)^m with psi(x|X), psi(x|W) as prescribed.

    Closed forms; the single-set counts are the W = {} marginals.
    """
    eX, eW = pattern
    if eX not in (0, 1) or eW not in (0, 1):
        raise ValueError("pattern entries must be 0/1")
    sx = len(frozenset(int(c) for c in X))
    sw = len(frozenset(int(c) for c in W))
    su = len(frozenset(int(c) for c in X) | frozenset(int(c) for c in W))
    if su > m:
        raise ValueError("X, W must be subsets of [m]")
    both = 1 << (m - su)
    only_x = (1 << (m - sx)) - both  # psi(.|X)=1, psi(.|W)=0
    only_w = (1 << (m - sw)) - both
    if (eX, eW) == (1, 1):
        return both - 1
    if (eX, eW) == (1, 0):
        return only_x
    if (eX, eW) == (0, 1):
        return only_w
    return (1 << m) - (1 << (m - sx)) - (1 << (m - sw)) + both
