"""Instance sweeps over the six defining-set families.

Used by the verify subcommand and the acceptance suite: enumerate every
subset tuple a family admits at a given m, run the engines against each
other, and evaluate the summary-table certificate conditions row by
row.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .analyze import (
    CodeReport,
    DistributionMismatch,
    FamilyInfo,
    classify_family,
    full_report,
)
from .construct import DefiningSetSpec
from .simplicial import SetSpec


def subsets(m: int) -> list[tuple[int, ...]]:
    """All subsets of {1..m} as coordinate tuples, in mask order."""
    out = []
    for mask in range(1 << m):
        out.append(tuple(i + 1 for i in range(m) if mask >> i & 1))
    return out


def spec_from_faces(
    m: int,
    faces,
    complement_positions=(),
    whole: bool = False,
) -> DefiningSetSpec:
    comps = []
    for i, face in enumerate(faces):
        if i in complement_positions and not whole:
            comps.append(SetSpec.complement(face, m))
        else:
            comps.append(SetSpec.simplex(face, m))
    return DefiningSetSpec(m, tuple(comps), complemented_whole=whole)


def describe(spec: DefiningSetSpec) -> str:
    parts = []
    for i, comp in enumerate(spec.components, start=1):
        face = "{" + ",".join(str(c) for c in sorted(comp.face)) + "}"
        parts.append(f"A{i}={'~' if comp.kind == 'complement' else ''}{face}")
    tail = " whole-complement" if spec.complemented_whole else ""
    return f"m={spec.m} " + " ".join(parts) + tail


def _position_choices(family: int):
    if family == 1:
        return [()]
    if family == 6:
        return [()]
    count = family - 1
    return list(combinations(range(4), count))


def family_instances(family: int, m: int):
    """Yield (spec, admissible, reason) over all subset tuples.

    Admissibility is the family hypothesis: complemented face sizes
    pairwise distinct and strictly below m.  Families 1 and 6 admit
    everything.
    """
    if family not in range(1, 7):
        raise ValueError("family must be 1..6")
    subs = subsets(m)
    whole = family == 6
    for positions in _position_choices(family):
        for f1 in subs:
            for f2 in subs:
                for f3 in subs:
                    for f4 in subs:
                        spec = spec_from_faces(
                            m, (f1, f2, f3, f4), positions, whole=whole
                        )
                        info = classify_family(spec)
                        yield spec, info.in_hypotheses, info.reason


@dataclass(frozen=True)
class VerifyResult:
    label: str
    status: str  # pass | fail | skip
    detail: str = ""


def verify_family(
    family: int,
    m: int,
    engines=("closedform", "charsum", "bruteforce"),
    budget: int | None = None,
    workers: int = 1,
) -> list[VerifyResult]:
    """Cross-check the engines on every admissible instance of one family.

    Families 2 and 6 additionally must attain the Griesmer bound.
    """
    results = []
    for spec, admissible, reason in family_instances(family, m):
        label = describe(spec)
        if not admissible:
            results.append(VerifyResult(label, "skip", f"skipped (hypotheses): {reason}"))
            continue
        try:
            report = full_report(
                spec, engines=engines, budget=budget, workers=workers, exact_limit=0
            )
        except DistributionMismatch as exc:
            results.append(VerifyResult(label, "fail", str(exc)))
            continue
        if family in (2, 6) and report.d is not None and not report.griesmer_attaining:
            results.append(
                VerifyResult(label, "fail", "expected Griesmer attainment")
            )
            continue
        results.append(VerifyResult(label, "pass"))
    return results


# ---------------------------------------------------------------------------
# summary-table certificate conditions


@dataclass(frozen=True)
class SummaryClaims:
    """Whether an instance meets its summary row's stated conditions.

    distance_optimal is None on the rows that make no optimality claim
    (three and four complements).
    """

    distance_optimal: bool | None
    minimal: bool
    self_orthogonal: bool


def summary_claims(spec: DefiningSetSpec) -> SummaryClaims:
    info = classify_family(spec)
    m = spec.m
    sizes = info.sizes
    total = sum(sizes)
    if spec.complemented_whole:
        return SummaryClaims(True, total <= 4 * m - 2, total >= 3)
    comp = [s for s, c in zip(sizes, info.complemented) if c]
    simp = [s for s, c in zip(sizes, info.complemented) if not c]
    ncomp = len(comp)
    if ncomp == 0:
        return SummaryClaims(total >= 2, True, total >= 3)
    if ncomp == 1:
        return SummaryClaims(True, comp[0] <= m - 2, sum(simp) >= 3)
    if ncomp == 2:
        do = (1 << total) <= m + sum(simp) + min(comp)
        return SummaryClaims(do, max(comp) <= m - 2, sum(simp) >= 3)
    if ncomp == 3:
        return SummaryClaims(None, max(comp) <= m - 2, simp[0] >= 3)
    return SummaryClaims(None, max(comp) <= m - 2, all(s >= 1 for s in sizes))


def check_summary_claims(report: CodeReport, claims: SummaryClaims) -> list[str]:
    """Claimed certificates that the computed report does not deliver."""
    failures = []
    if claims.distance_optimal and not report.griesmer_distance_optimal:
        failures.append("distance-optimality claimed but not certified")
    if claims.minimal and not report.minimal_sufficient:
        failures.append("minimality claimed but ratio test fails")
    if claims.self_orthogonal and not report.self_orthogonal_sufficient:
        failures.append("self-orthogonality claimed but a weight is not 0 mod 4")
    return failures


# ---------------------------------------------------------------------------
# the two strongly-regular-graph families


def srg_one_complement_family(m: int, a: int, c: int):
    """(graph, complement-graph) parameter 4-tuples for the one-complement
    codes: a = complemented face size, c = sum of the other three."""
    first = (
        1 << (m + c),
        ((1 << m) - (1 << a)) << c,
        ((1 << m) - (1 << (a + 1))) << c,
        ((1 << m) - (1 << a)) << c,
    )
    second = (1 << (m + c), (1 << (a + c)) - 1, (1 << (a + c)) - 2, 0)
    return first, second


def srg_whole_complement_family(m: int, s: int):
    """Same for the whole-set-complement codes, s = total face size."""
    fourm = 4 * m
    first = (
        1 << fourm,
        (1 << fourm) - (1 << s),
        (1 << fourm) - (1 << (s + 1)),
        (1 << fourm) - (1 << s),
    )
    second = (1 << fourm, (1 << s) - 1, (1 << s) - 2, 0)
    return first, second
