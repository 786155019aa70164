"""Weight-distribution engines and certificates.

Three independent routes to the same weight distribution:

* wd_bruteforce - enumerate all 2^k messages against the row-reduced
  generator (Gray-code order, one row XOR + popcount per message).
  Ground truth.
* wd_charsum - evaluate the product character-sum form of the codeword
  weight over every message tuple (x1, x2, x3, x4), then divide tuple
  counts by the kernel multiplicity.  Scales to m = 5 without touching
  a matrix.
* wd_closedform - the per-family weight tables, generated from the
  branch counts each component contributes (zero vector / support
  avoiding the face / support meeting it).  No enumeration at all.

full_report runs whichever engines apply, insists they agree exactly,
and attaches every certificate: Griesmer optimality, minimality
(sufficient ratio test and exact support scan), self-orthogonality
(mod-4 test and exact G.G^T), projectivity (column test cross-checked
against dual MacWilliams coefficients), strongly-regular-graph
parameters with exhaustive graph verification, and CSS parameters.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .construct import (
    BinaryCode,
    DefiningSetSpec,
    build_defining_set,
    columns_as_masks,
    generator_matrix,
)
from .gf2core import (
    BinaryMatrix,
    WeightDistribution,
    macwilliams_prefix,
    row_reduce,
)

DEFAULT_BUDGET = 1 << 28
BUDGET_ENV_VAR = "SIMPLICODE_BUDGET"

CHARSUM_MAX_M = 5
MINIMALITY_EXACT_LIMIT = 1 << 16
SRG_VERTEX_LIMIT = 1 << 14


class BudgetExceeded(RuntimeError):
    """2^k * n bit-operations would exceed the configured work budget."""


class NonIntegralWeight(ArithmeticError):
    """The character-sum form produced a half-integer (or negative) weight
    with nonzero count; the spec lies outside the formula's domain."""


class MultiplicityMismatch(ArithmeticError):
    """Tuple counts were not divisible by the kernel multiplicity."""


class UnsupportedFamily(ValueError):
    """Spec outside the closed-form families; fall back to wd_charsum."""


class ZeroCode(ValueError):
    """Operation needs a nonzero code."""


class MethodDisagreement(AssertionError):
    """Two supposedly equivalent certificate methods disagreed."""


class NonIntegralMu(ArithmeticError):
    """q^2 w1 w2 / q^k is not an integer: not a projective two-weight input."""


class NotStronglyRegular(ValueError):
    """Measured common-neighbour counts are not constant."""


class NotSelfOrthogonal(ValueError):
    """CSS construction needs C contained in its dual."""


class DistributionMismatch(AssertionError):
    """Two engines produced different distributions; carries both."""

    def __init__(self, message: str, results=None, spec=None):
        super().__init__(message)
        self.results = results or {}
        self.spec = spec


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    return DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# engine 1: message enumeration


def _enum_chunk(rows: list[int], n: int, lo: int, hi: int) -> list[int]:
    """Weight histogram of messages with Gray indices in [lo, hi)."""
    counts = [0] * (n + 1)
    g = lo ^ (lo >> 1)
    cw = 0
    b = 0
    while g:
        if g & 1:
            cw ^= rows[b]
        g >>= 1
        b += 1
    counts[cw.bit_count()] += 1
    for i in range(lo + 1, hi):
        cw ^= rows[(i & -i).bit_length() - 1]
        counts[cw.bit_count()] += 1
    return counts


def wd_bruteforce(
    code: BinaryCode, budget: int | None = None, workers: int = 1
) -> WeightDistribution:
    """Exact weight distribution by enumerating all 2^k messages.

    Raises BudgetExceeded when 2^k * n bit-operations pass the budget.
    Worker partitioning splits the message range; merged histograms are
    bit-identical for any worker count.
    """
    reduced, _ = row_reduce(code.generator)
    rows = list(reduced.rows)
    k = len(rows)
    n = code.n
    if budget is not None and (1 << k) * max(n, 1) > budget:
        raise BudgetExceeded(
            f"2^{k} x {n} = {(1 << k) * n} bit-ops over budget {budget}"
        )
    total = 1 << k
    if workers <= 1 or total < (1 << 14):
        counts = _enum_chunk(rows, n, 0, total)
    else:
        step = -(-total // workers)
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_enum_chunk, *zip(*[(rows, n, lo, hi) for lo, hi in ranges])))
        counts = [sum(p[w] for p in parts) for w in range(n + 1)]
    entries = {w: c for w, c in enumerate(counts) if c}
    dist = WeightDistribution(entries, n)
    dist.validate(k)
    return dist


# ---------------------------------------------------------------------------
# engine 2: character sums over all message tuples


def _wht_np(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.int64, copy=True)
    size = out.shape[0]
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < size:
        v = out.reshape(-1, 2, h)
        top = v[:, 0, :].copy()
        v[:, 0, :] = top + v[:, 1, :]
        v[:, 1, :] = top - v[:, 1, :]
        h *= 2
    return out


def _component_charsum_table(comp) -> np.ndarray:
    """table[x] = sum over the component's members t of (-1)^(x.t)."""
    m = comp.m
    xs = np.arange(1 << m, dtype=np.int64)
    if comp.kind == "explicit":
        f = np.bincount(np.asarray(comp.vectors, dtype=np.int64), minlength=1 << m)
        return _wht_np(f)
    avoid = (xs & comp.face_mask) == 0
    scaled = (1 << len(comp.face)) * avoid.astype(np.int64)
    if comp.kind == "simplex":
        return scaled
    delta = np.zeros(1 << m, dtype=np.int64)
    delta[0] = 1 << m
    return delta - scaled


def wd_charsum(spec: DefiningSetSpec) -> WeightDistribution:
    """Weight distribution via the product character-sum weight formula.

    Evaluates, for every tuple (x1, x2, x3, x4), twice the weight as
    |D| - S1(x1+x4) S2(x3) S3(x2) S4(x1); the whole-set complement is
    handled by the delta correction at the product level.  Tuple counts
    must come out divisible by the kernel multiplicity 2^(4m-k).
    """
    m = spec.m
    if m > CHARSUM_MAX_M:
        raise ValueError(f"wd_charsum enumerates 2^(4m) tuples; m <= {CHARSUM_MAX_M}")
    size = 1 << m
    s1, s2, s3, s4 = (_component_charsum_table(c) for c in spec.components)
    xs = np.arange(size)
    s1_xor = s1[xs[:, None] ^ xs[None, :]]  # indexed [x1, x4]
    # axes: (x1, x2, x3, x4)
    prod = (
        (s1_xor * s4[:, None])[:, None, None, :]
        * s3[None, :, None, None]
        * s2[None, None, :, None]
    )
    n = spec.size()
    if spec.complemented_whole:
        wt2 = n + prod
        wt2[0, 0, 0, 0] -= 1 << (4 * m)
    else:
        wt2 = n - prod
    return _tuple_counts_to_distribution(wt2.ravel(), m, n)


def _tuple_counts_to_distribution(wt2_flat, m: int, n: int) -> WeightDistribution:
    vals, cnts = np.unique(wt2_flat, return_counts=True)
    pairs = {int(v): int(c) for v, c in zip(vals, cnts)}
    return _finalize_tuple_histogram(pairs, m, n)


def _finalize_tuple_histogram(pairs: dict[int, int], m: int, n: int) -> WeightDistribution:
    """Shared tail of the charsum and closed-form engines: divide the
    per-tuple histogram by the kernel multiplicity and check integrality."""
    pairs = {w: c for w, c in pairs.items() if c}
    kern = pairs.get(0)
    if kern is None or kern & (kern - 1):
        raise MultiplicityMismatch(f"kernel tuple count {kern} is not a power of two")
    k = 4 * m - (kern.bit_length() - 1)
    entries: dict[int, int] = {}
    for wt2, count in pairs.items():
        if wt2 < 0 or wt2 & 1:
            raise NonIntegralWeight(f"doubled weight {wt2} with count {count}")
        if count % kern:
            raise MultiplicityMismatch(
                f"tuple count {count} at weight {wt2 // 2} not divisible by {kern}"
            )
        entries[wt2 // 2] = count // kern
    dist = WeightDistribution(entries, n)
    dist.validate(k)
    return dist


# ---------------------------------------------------------------------------
# engine 3: closed-form tables


@dataclass(frozen=True)
class FamilyInfo:
    """Which table family a spec falls into, and whether it satisfies the
    family's hypotheses (complemented face sizes pairwise distinct and
    strictly below m)."""

    family: int
    summary_row: int
    complemented: tuple[bool, bool, bool, bool]
    sizes: tuple[int, int, int, int]
    in_hypotheses: bool
    reason: str | None = None


_ROW_BY_POSITIONS = {
    (): 1,
    (0,): 2,
    (1,): 3,
    (2,): 4,
    (3,): 5,
    (0, 1): 6,
    (0, 2): 7,
    (0, 3): 8,
    (1, 2): 9,
    (1, 3): 10,
    (2, 3): 11,
    (0, 1, 2): 12,
    (0, 1, 3): 13,
    (0, 2, 3): 14,
    (1, 2, 3): 15,
    (0, 1, 2, 3): 16,
}


def classify_family(spec: DefiningSetSpec) -> FamilyInfo:
    """Map a spec onto the table families (1: all generated complexes,
    2-5: one to four complements, 6: whole-set complement)."""
    kinds = [c.kind for c in spec.components]
    if "explicit" in kinds:
        raise UnsupportedFamily("explicit components have no closed form")
    sizes = tuple(len(c.face) for c in spec.components)
    if spec.complemented_whole:
        if any(k != "simplex" for k in kinds):
            raise UnsupportedFamily(
                "whole-set complement is only tabulated over generated complexes"
            )
        return FamilyInfo(6, 17, (False,) * 4, sizes, True)
    complemented = tuple(k == "complement" for k in kinds)
    positions = tuple(i for i, c in enumerate(complemented) if c)
    family = 1 + len(positions)
    comp_sizes = [sizes[i] for i in positions]
    ok, reason = True, None
    if any(s >= spec.m for s in comp_sizes):
        ok, reason = False, "complemented face size must be < m"
    elif len(set(comp_sizes)) != len(comp_sizes):
        ok, reason = False, "complemented face sizes must be pairwise distinct"
    return FamilyInfo(family, _ROW_BY_POSITIONS[positions], complemented, sizes, ok, reason)


def _component_branches(comp, whole_complement: bool):
    """(character-sum value, message count) branches for one component.

    A generated complex contributes 2^f on the 2^(m-f) messages whose
    support avoids the face and 0 elsewhere; its complement additionally
    splits off the zero message, which contributes 2^m - 2^f.
    """
    m, f = comp.m, len(comp.face)
    avoid = 1 << (m - f)
    if comp.kind == "simplex" or whole_complement:
        branches = [(1 << f, avoid), (0, (1 << m) - avoid)]
    else:
        branches = [
            ((1 << m) - (1 << f), 1),
            (-(1 << f), avoid - 1),
            (0, (1 << m) - avoid),
        ]
    return [(v, c) for v, c in branches if c > 0]


def wd_closedform(spec: DefiningSetSpec, strict: bool = True) -> WeightDistribution:
    """Weight distribution from the per-family tables, no enumeration.

    Emits one row per combination of component branches (these are
    exactly the published table rows with the face sizes substituted),
    drops zero-frequency rows, and merges equal weights.  With strict
    (the default) a spec outside the family hypotheses raises
    UnsupportedFamily; strict=False computes the merged table anyway,
    which stays exact because the kernel multiplicity is read off the
    weight-zero row rather than assumed.
    """
    info = classify_family(spec)
    if strict and not info.in_hypotheses:
        raise UnsupportedFamily(info.reason)
    m = spec.m
    n = spec.size()
    branch_sets = [_component_branches(c, spec.complemented_whole) for c in spec.components]
    hist: dict[int, int] = defaultdict(int)
    for combo in iproduct(*branch_sets):
        value = count = 1
        for v, c in combo:
            value *= v
            count *= c
        wt2 = n + value if spec.complemented_whole else n - value
        hist[wt2] += count
    if spec.complemented_whole:
        # The all-avoiding branch contains the zero message, where the
        # delta term knocks the weight down to 0.
        psi1 = n + (1 << sum(info.sizes))
        hist[psi1] -= 1
        hist[psi1 - (1 << (4 * m))] += 1
    return _finalize_tuple_histogram(dict(hist), m, n)


# ---------------------------------------------------------------------------
# scalar certificates


def min_distance(W: WeightDistribution) -> int:
    nz = W.nonzero_weights()
    if not nz:
        raise ZeroCode("no nonzero codeword")
    return nz[0]


def griesmer_sum(k: int, d: int, q: int = 2) -> int:
    """sum_{i<k} ceil(d / q^i)."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    total = 0
    p = 1
    for _ in range(k):
        total += -(-d // p)
        p *= q
    return total


def is_distance_optimal(n: int, k: int, d: int, q: int = 2) -> bool:
    """No [n, k, d+1] code can exist (Griesmer criterion)."""
    return griesmer_sum(k, d + 1, q) > n


def is_griesmer_attaining(n: int, k: int, d: int, q: int = 2) -> bool:
    return griesmer_sum(k, d, q) == n


# ---------------------------------------------------------------------------
# codeword-level certificates


def _reduced(code: BinaryCode) -> BinaryMatrix:
    return row_reduce(code.generator)[0]


def _packed_words(masks: list[int], n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    words = (nbytes + 7) // 8
    buf = bytearray()
    for v in masks:
        buf += v.to_bytes(words * 8, "little")
    return np.frombuffer(bytes(buf), dtype=np.uint64).reshape(len(masks), words)


def _codewords_by_weight(code: BinaryCode) -> dict[int, list[int]]:
    reduced = _reduced(code)
    rows = list(reduced.rows)
    buckets: dict[int, list[int]] = defaultdict(list)
    cw = 0
    buckets[0].append(0)
    for i in range(1, 1 << len(rows)):
        cw ^= rows[(i & -i).bit_length() - 1]
        buckets[cw.bit_count()].append(cw)
    return buckets


def minimality_report(
    W: WeightDistribution,
    code: BinaryCode | None = None,
    exact_limit: int = MINIMALITY_EXACT_LIMIT,
) -> tuple[bool, bool | None]:
    """(sufficient, exact) minimality verdicts.

    sufficient is the weight-ratio test 2 wt_min > wt_max.  exact (only
    when a code is given and 2^k <= exact_limit) scans for a nonzero
    codeword whose support strictly contains another's; a strict
    containment needs strictly smaller weight, so only cross-weight
    bucket pairs are compared.
    """
    nz = W.nonzero_weights()
    if not nz:
        raise ZeroCode("minimality is about nonzero codewords")
    sufficient = 2 * nz[0] > nz[-1]
    exact: bool | None = None
    if code is not None and exact_limit and (1 << code.k) <= exact_limit:
        exact = _minimality_exact(code)
    return sufficient, exact


def _minimality_exact(code: BinaryCode) -> bool:
    buckets = _codewords_by_weight(code)
    weights = sorted(w for w in buckets if w > 0)
    packed = {w: _packed_words(buckets[w], code.n) for w in weights}
    for wi, w_lo in enumerate(weights):
        lo = packed[w_lo]
        for w_hi in weights[wi + 1 :]:
            hi = packed[w_hi]
            # u covered by v  <=>  u & ~v == 0 word-wise
            for start in range(0, len(hi), 4096):
                block = hi[start : start + 4096]
                ok = np.zeros((len(lo), len(block)), dtype=bool)
                for word in range(lo.shape[1]):
                    ok |= (lo[:, word, None] & ~block[None, :, word]) != 0
                if not ok.all():
                    return False
    return True


def self_orthogonality_report(
    W: WeightDistribution, code: BinaryCode | None = None
) -> tuple[bool, bool | None]:
    """(sufficient, exact): every weight a multiple of 4, resp. G.G^T = 0."""
    sufficient = all(w % 4 == 0 for w in W.nonzero_weights())
    exact: bool | None = None
    if code is not None:
        rows = _reduced(code).rows
        exact = all(
            (rows[i] & rows[j]).bit_count() % 2 == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )
    return sufficient, exact


def projectivity_report(
    code: BinaryCode,
    distribution: WeightDistribution | None = None,
    budget: int | None = None,
) -> tuple[bool, int, int]:
    """(projective, A'_1, A'_2), checked two ways.

    Column route: the dual distance is >= 2 iff no generator column is
    zero and >= 3 iff the columns are also pairwise distinct.  Dual
    route: MacWilliams coefficients A'_1 = A'_2 = 0.  Disagreement is an
    internal error and aborts.
    """
    if code.k < 1:
        raise ZeroCode("projectivity needs k >= 1")
    reduced = _reduced(code)
    cols = columns_as_masks(reduced)
    no_zero = bool((cols != 0).all())
    distinct = len(np.unique(cols)) == len(cols)
    by_columns = no_zero and distinct
    if distribution is None:
        distribution = wd_bruteforce(code, budget)
    mw = macwilliams_prefix(distribution, code.n, code.k, min(2, code.n))
    mw += [0] * (3 - len(mw))  # coefficients beyond the length are zero
    by_dual = mw[1] == 0 and mw[2] == 0
    if by_columns != by_dual:
        raise MethodDisagreement(
            f"columns say projective={by_columns}, MacWilliams says {by_dual} "
            f"(A'_1={mw[1]}, A'_2={mw[2]})"
        )
    return by_columns, mw[1], mw[2]


def dual_distance_up_to_three(
    code: BinaryCode, distribution: WeightDistribution
) -> tuple[int, bool]:
    """(d(C_perp) capped at 4, exact?) - exact unless the answer is >= 4."""
    projective, a1, a2 = projectivity_report(code, distribution)
    if a1 > 0:
        return 1, True
    if a2 > 0:
        return 2, True
    mw = macwilliams_prefix(distribution, code.n, code.k, min(3, code.n))
    a3 = mw[3] if len(mw) > 3 else 0
    if a3 > 0:
        return 3, True
    return 4, False


# ---------------------------------------------------------------------------
# strongly regular graphs


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular-graph parameters attached to a two-weight code."""

    n1: int
    k1: int
    lam: int
    mu: int
    w1: int
    w2: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.k1, self.lam, self.mu)


def srg_parameters(n: int, k: int, w1: int, w2: int, q: int = 2) -> SrgParams:
    """Graph parameters of a projective two-weight [n, k] code."""
    if w1 == w2 or w1 <= 0 or w2 <= 0:
        raise ValueError("need two distinct nonzero weights")
    n1 = q**k
    k1 = n * (q - 1)
    lam = k1 * k1 + 3 * k1 - q * (w1 + w2) - k1 * q * (w1 + w2) + q * q * w1 * w2
    mu, rem = divmod(q * q * w1 * w2, n1)
    if rem:
        raise NonIntegralMu(f"q^2 w1 w2 = {q*q*w1*w2} not divisible by q^k = {n1}")
    params = SrgParams(n1, k1, lam, mu, w1, w2)
    # Standard SRG counting identity; failure means the formulas above
    # were transcribed wrong, not that the input is bad.
    if (n1 - k1 - 1) * mu != k1 * (k1 - lam - 1):
        raise MethodDisagreement("SRG consistency identity violated")
    return params


def complement_srg_params(p: SrgParams) -> tuple[int, int, int, int]:
    """Parameters of the complement graph."""
    n1, k1, lam, mu = p.as_tuple()
    return (n1, n1 - k1 - 1, n1 - 2 - 2 * k1 + mu, n1 - 2 * k1 + lam)


def srg_build_verify(
    code: BinaryCode,
    distribution: WeightDistribution | None = None,
    dense_check: str = "auto",
) -> tuple[SrgParams, bool]:
    """Build the code's graph and measure its parameters exhaustively.

    Vertices are GF(2)^k; x ~ y iff x + y is a generator column.  The
    common-neighbour count of (x, y) equals the XOR autocorrelation of
    the connection set at x + y (z = x + s = y + s' pairs off exactly
    with (s, s') summing to x + y), so checking that autocorrelation on
    every coset covers every vertex pair.  For small graphs
    (dense_check "auto": 2^k <= 2^8, "always": any size) a literal
    adjacency-matrix count over all pairs is run as well.

    Returns the measured parameters and whether they match
    srg_parameters.  Raises NotStronglyRegular when counts vary.
    """
    if distribution is None:
        distribution = wd_bruteforce(code)
    nz = distribution.nonzero_weights()
    if len(nz) != 2:
        raise NotStronglyRegular(f"need exactly two nonzero weights, got {nz}")
    k = code.k
    if (1 << k) > SRG_VERTEX_LIMIT:
        raise ValueError(f"graph on 2^{k} vertices exceeds the limit")
    cols = columns_as_masks(_reduced(code))
    size = 1 << k
    f = np.zeros(size, dtype=np.int64)
    f[cols] = 1
    if f.sum() != code.n or f[0]:
        raise NotStronglyRegular("connection set must be n distinct nonzero columns")
    spectrum = _wht_np(f)
    common = _wht_np(spectrum * spectrum)
    if (common % size).any():
        raise MethodDisagreement("autocorrelation failed exact division")
    common //= size
    if common[0] != code.n:
        raise NotStronglyRegular("degree differs from n")
    on_set = common[f == 1]
    off_set = common[(f == 0) & (np.arange(size) != 0)]
    lam_values = np.unique(on_set)
    mu_values = np.unique(off_set)
    if len(lam_values) != 1 or len(mu_values) != 1:
        raise NotStronglyRegular(
            "common-neighbour count varies: adjacent pairs see "
            f"{lam_values.tolist()[:4]}, non-adjacent see {mu_values.tolist()[:4]}"
        )
    if dense_check == "always" or (dense_check == "auto" and size <= (1 << 8)):
        _srg_dense_check(f, common)
    measured = SrgParams(size, code.n, int(lam_values[0]), int(mu_values[0]), nz[0], nz[1])
    expected = srg_parameters(code.n, k, nz[0], nz[1])
    return measured, measured.as_tuple() == expected.as_tuple()


def _srg_dense_check(f: np.ndarray, common: np.ndarray) -> None:
    size = len(f)
    xs = np.arange(size)
    adj = f[xs[:, None] ^ xs[None, :]].astype(np.float64)
    counted = adj @ adj
    if not np.array_equal(counted, common[xs[:, None] ^ xs[None, :]].astype(np.float64)):
        raise MethodDisagreement("dense pair count disagrees with autocorrelation")


# ---------------------------------------------------------------------------
# CSS parameters


@dataclass(frozen=True)
class CssParams:
    """[[n, n-2k, d]] with d = d(C_perp) determined exactly up to 3.

    d_exact is False when the dual distance is only known to be >= 4;
    the reported d is then that lower bound.  Note the quoted convention
    takes d over the whole dual, while the true CSS distance is over the
    dual minus the code.
    """

    n: int
    k: int
    d: int
    d_exact: bool

    def as_list(self) -> list:
        return [self.n, self.k, self.d if self.d_exact else f">={self.d}"]

    def __str__(self) -> str:
        d = str(self.d) if self.d_exact else f">={self.d}"
        return f"[[{self.n},{self.k},{d}]]"


def css_parameters(code: BinaryCode, distribution: WeightDistribution) -> CssParams:
    """Quantum code parameters from a self-orthogonal classical code."""
    if code.k < 1:
        raise ZeroCode("CSS construction needs k >= 1")
    _, exact = self_orthogonality_report(distribution, code)
    if not exact:
        raise NotSelfOrthogonal("generator rows are not pairwise orthogonal")
    d, d_exact = dual_distance_up_to_three(code, distribution)
    return CssParams(code.n, code.n - 2 * code.k, d, d_exact)


# ---------------------------------------------------------------------------
# orchestration


@dataclass
class CodeReport:
    """Everything full_report knows about one spec."""

    spec: DefiningSetSpec
    n: int
    k: int
    d: int | None
    distribution: WeightDistribution
    weight_count: int
    family: int | None
    summary_row: int | None
    outside_hypotheses: bool
    engines_run: dict[str, str]
    griesmer_sum_at_d: int | None = None
    griesmer_sum_at_d_plus_1: int | None = None
    griesmer_attaining: bool | None = None
    griesmer_distance_optimal: bool | None = None
    minimal_sufficient: bool | None = None
    minimal_exact: bool | None = None
    self_orthogonal_sufficient: bool | None = None
    self_orthogonal_exact: bool | None = None
    projective: bool | None = None
    dual_a1: int | None = None
    dual_a2: int | None = None
    srg: SrgParams | None = None
    srg_measured: SrgParams | None = None
    srg_verified: bool | None = None
    srg_complement: tuple[int, int, int, int] | None = None
    css: CssParams | None = None
    warnings: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "weight_count": self.weight_count,
            "distribution": [[w, c] for w, c in self.distribution.sorted_items()],
            "family": self.family,
            "summary_row": self.summary_row,
            "outside_hypotheses": self.outside_hypotheses,
            "engines": self.engines_run,
            "griesmer": {
                "sum_at_d": self.griesmer_sum_at_d,
                "sum_at_d_plus_1": self.griesmer_sum_at_d_plus_1,
                "attaining": self.griesmer_attaining,
                "distance_optimal": self.griesmer_distance_optimal,
            },
            "flags": {
                "griesmer_distance_optimal": self.griesmer_distance_optimal,
                "griesmer_attaining": self.griesmer_attaining,
                "minimal_sufficient": self.minimal_sufficient,
                "minimal_exact": self.minimal_exact,
                "self_orthogonal_sufficient": self.self_orthogonal_sufficient,
                "self_orthogonal_exact": self.self_orthogonal_exact,
                "projective": self.projective,
            },
            "dual": {"A1": self.dual_a1, "A2": self.dual_a2},
            "srg": None,
            "css": self.css.as_list() if self.css else None,
            "css_d_exact": self.css.d_exact if self.css else None,
            "warnings": self.warnings,
        }
        if self.srg:
            out["srg"] = {
                "computed": list(self.srg.as_tuple()),
                "measured": list(self.srg_measured.as_tuple()) if self.srg_measured else None,
                "verified": self.srg_verified,
                "complement": list(self.srg_complement) if self.srg_complement else None,
                "weights": [self.srg.w1, self.srg.w2],
            }
        return out

    def to_text(self) -> str:
        lines = [f"[{self.n},{self.k}" + (f",{self.d}]" if self.d is not None else "] (zero code)")]
        lines.append(f"weights ({self.weight_count}): " + ", ".join(
            f"{w}:{c}" for w, c in self.distribution.sorted_items()
        ))
        if self.family is not None:
            tag = " (outside hypotheses)" if self.outside_hypotheses else ""
            lines.append(f"family {self.family}, summary row {self.summary_row}{tag}")
        lines.append("engines: " + ", ".join(f"{e}={s}" for e, s in sorted(self.engines_run.items())))
        if self.griesmer_attaining is not None:
            lines.append(
                f"griesmer: sum(d)={self.griesmer_sum_at_d} sum(d+1)={self.griesmer_sum_at_d_plus_1}"
                f" attaining={self.griesmer_attaining} distance_optimal={self.griesmer_distance_optimal}"
            )
        lines.append(
            f"minimal: sufficient={self.minimal_sufficient} exact={self.minimal_exact}; "
            f"self-orthogonal: sufficient={self.self_orthogonal_sufficient} exact={self.self_orthogonal_exact}; "
            f"projective={self.projective}"
        )
        if self.srg:
            lines.append(f"srg: computed={self.srg.as_tuple()} measured="
                         f"{self.srg_measured.as_tuple() if self.srg_measured else None}"
                         f" verified={self.srg_verified} complement={self.srg_complement}")
        if self.css:
            lines.append(f"css: {self.css}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


ALL_ENGINES = ("closedform", "charsum", "bruteforce")


def full_report(
    spec: DefiningSetSpec,
    engines=ALL_ENGINES,
    budget: int | None = None,
    workers: int = 1,
    build_graph: bool = False,
    exact_limit: int = 1 << 12,
    allow_outside_hypotheses: bool = False,
    materialize: bool = True,
) -> CodeReport:
    """Run every applicable engine, demand exact agreement, certify.

    The work budget (default from SIMPLICODE_BUDGET or 2^28) gates only
    the brute-force engine; exact_limit gates the exact-minimality scan.
    materialize=False skips the generator matrix entirely (closed-form
    runs only), losing the matrix-level certificates.
    """
    if not engines:
        raise ValueError("need at least one engine")
    if budget is None:
        budget = default_budget()
    engines = tuple(engines)
    warnings: list[str] = []
    run: dict[str, str] = {}
    results: dict[str, WeightDistribution] = {}

    family = summary_row = None
    outside = False
    try:
        info = classify_family(spec)
        family, summary_row = info.family, info.summary_row
        outside = not info.in_hypotheses
    except UnsupportedFamily as exc:
        info = None
        run["closedform"] = f"n/a: {exc}"

    if "closedform" in engines and info is not None:
        if info.in_hypotheses or allow_outside_hypotheses:
            results["closedform"] = wd_closedform(spec, strict=not allow_outside_hypotheses)
            run["closedform"] = "ok" if info.in_hypotheses else "ok (outside hypotheses)"
        else:
            run["closedform"] = f"n/a: {info.reason}"

    if "charsum" in engines:
        if spec.m <= CHARSUM_MAX_M:
            results["charsum"] = wd_charsum(spec)
            run["charsum"] = "ok"
        else:
            run["charsum"] = f"skipped: m > {CHARSUM_MAX_M}"

    code = None
    if materialize:
        try:
            code = generator_matrix(build_defining_set(spec), spec)
        except ValueError as exc:
            warnings.append(f"matrix not materialized: {exc}")

    if "bruteforce" in engines:
        if code is None:
            run["bruteforce"] = "skipped: no matrix"
        else:
            try:
                results["bruteforce"] = wd_bruteforce(code, budget, workers)
                run["bruteforce"] = "ok"
            except BudgetExceeded as exc:
                run["bruteforce"] = "skipped: budget"
                warnings.append(str(exc))

    if not results:
        raise ValueError(f"no engine produced a distribution (status: {run})")

    names = sorted(results)
    reference = results[names[0]]
    for name in names[1:]:
        if results[name] != reference:
            raise DistributionMismatch(
                f"engines {names[0]} and {name} disagree", results, spec
            )

    total = sum(c for _, c in reference.sorted_items())
    k = total.bit_length() - 1
    if code is not None and code.k != k:
        raise DistributionMismatch(
            f"matrix rank {code.k} vs distribution dimension {k}", results, spec
        )
    n = reference.n
    try:
        d = min_distance(reference)
    except ZeroCode:
        d = None

    report = CodeReport(
        spec=spec,
        n=n,
        k=k,
        d=d,
        distribution=reference,
        weight_count=reference.weight_count,
        family=family,
        summary_row=summary_row,
        outside_hypotheses=outside,
        engines_run=run,
        warnings=warnings,
    )

    if d is not None and k >= 1:
        report.griesmer_sum_at_d = griesmer_sum(k, d)
        report.griesmer_sum_at_d_plus_1 = griesmer_sum(k, d + 1)
        report.griesmer_attaining = report.griesmer_sum_at_d == n
        report.griesmer_distance_optimal = report.griesmer_sum_at_d_plus_1 > n
        report.minimal_sufficient, report.minimal_exact = minimality_report(
            reference, code, exact_limit
        )
        report.self_orthogonal_sufficient, report.self_orthogonal_exact = (
            self_orthogonality_report(reference, code)
        )
        if code is not None:
            report.projective, report.dual_a1, report.dual_a2 = projectivity_report(
                code, reference
            )
            if report.projective and reference.weight_count == 2:
                w1, w2 = reference.nonzero_weights()
                report.srg = srg_parameters(n, k, w1, w2)
                report.srg_complement = complement_srg_params(report.srg)
                if build_graph and (1 << k) <= SRG_VERTEX_LIMIT:
                    report.srg_measured, report.srg_verified = srg_build_verify(
                        code, reference
                    )
            if report.self_orthogonal_exact:
                report.css = css_parameters(code, reference)
    else:
        report.self_orthogonal_sufficient, report.self_orthogonal_exact = (
            self_orthogonality_report(reference, code)
        )
    return report
