"""Command-line front end.

Subcommands: analyze (one spec, full report), verify (engine-equivalence
sweep over a family), srg (graph parameters, optionally exhaustively
verified), reproduce (golden suite), build (dump a generator matrix).

Exit codes: 0 success, 1 usage/parse errors, 2 engine disagreement,
3 structural failures (SRG or self-orthogonality preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import analyze as an
from .analyze import (
    DistributionMismatch,
    NonIntegralMu,
    NotSelfOrthogonal,
    NotStronglyRegular,
    ZeroCode,
    full_report,
)
from .construct import DefiningSetSpec, build_defining_set, columns_hex, generator_matrix
from .sweeps import (
    spec_from_faces,
    srg_one_complement_family,
    verify_family,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_STRUCTURAL = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(ValueError):
    pass


def _load_spec(path: str) -> DefiningSetSpec:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return DefiningSetSpec.from_json(json.loads(text))


def _engines_arg(raw: str) -> tuple[str, ...]:
    names = tuple(e.strip() for e in raw.split(",") if e.strip())
    bad = [e for e in names if e not in an.ALL_ENGINES]
    if bad or not names:
        raise _UsageError(f"bad engine list {raw!r}; choose from {','.join(an.ALL_ENGINES)}")
    return names


def cmd_analyze(args) -> int:
    spec = _load_spec(args.spec)
    report = full_report(
        spec,
        engines=_engines_arg(args.engines),
        budget=args.budget,
        workers=args.workers,
        build_graph=args.build_graph,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=False))
    elif args.format == "csv":
        print(report.distribution.to_csv())
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = args.family
    cap = 4 if fam <= 3 else 3
    if not 1 <= args.m <= cap:
        raise _UsageError(f"family {fam} supports m up to {cap}")
    engines = _engines_arg(args.engines)
    failed = 0
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for res in verify_family(fam, args.m, engines=engines, budget=args.budget, workers=args.workers):
        counts[res.status] += 1
        if res.status == "fail":
            failed += 1
            print(f"FAIL {res.label}: {res.detail}")
        elif res.status == "skip":
            print(f"skip {res.label}: {res.detail}")
        elif not args.quiet:
            print(f"pass {res.label}")
    print(
        f"family {fam}, m={args.m}: {counts['pass']} pass, "
        f"{counts['fail']} fail, {counts['skip']} skipped"
    )
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_srg(args) -> int:
    spec = _load_spec(args.spec)
    report = full_report(spec, build_graph=args.build_graph)
    if report.srg is None:
        raise NotStronglyRegular(
            "spec does not yield a projective two-weight code "
            f"(projective={report.projective}, weights={report.weight_count})"
        )
    print(f"code [{report.n},{report.k},{report.d}], weights "
          f"{report.distribution.nonzero_weights()}")
    print(f"computed  (N,K,lambda,mu) = {report.srg.as_tuple()}")
    if args.build_graph:
        print(f"measured  (N,K,lambda,mu) = {report.srg_measured.as_tuple()}"
              f"  verified={report.srg_verified}")
        if not report.srg_verified:
            raise NotStronglyRegular("measured parameters disagree with formulas")
    print(f"complement graph           = {report.srg_complement}")
    return EXIT_OK


def _golden_path():
    return resources.files("simplicode").joinpath("data/golden.json")


def load_golden() -> dict:
    with _golden_path().open("r", encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# the golden suite


def _published_example_specs() -> dict[str, DefiningSetSpec]:
    return {
        "example1": spec_from_faces(4, ((), (), (), (1, 2, 3)), complement_positions=(0,)),
        "example2": spec_from_faces(3, ((), (1,), (), ()), complement_positions=(0, 1)),
        "example3": spec_from_faces(4, ((1,), (), (1,), (1, 2, 3, 4)), complement_positions=(0,)),
    }


def _compute_golden() -> dict:
    """Recompute every golden value from the engines (--bless)."""
    out: dict = {"examples": {}}
    for name, spec in _published_example_specs().items():
        rep = full_report(spec, build_graph=True)
        entry = {
            "spec": spec.to_json(),
            "n": rep.n,
            "k": rep.k,
            "d": rep.d,
            "distribution": [[w, c] for w, c in rep.distribution.sorted_items()],
            "griesmer_attaining": rep.griesmer_attaining,
            "distance_optimal": rep.griesmer_distance_optimal,
            "minimal_sufficient": rep.minimal_sufficient,
            "self_orthogonal_sufficient": rep.self_orthogonal_sufficient,
            "self_orthogonal_exact": rep.self_orthogonal_exact,
            "projective": rep.projective,
        }
        if rep.css:
            entry["css"] = [rep.css.n, rep.css.k, rep.css.d]
        if rep.srg:
            entry["srg"] = list(rep.srg.as_tuple())
            entry["srg_verified"] = rep.srg_verified
            entry["srg_complement"] = list(rep.srg_complement)
        out["examples"][name] = entry

    cases = []
    for w in range(5):
        spec = spec_from_faces(4, ((), (), (), tuple(range(1, w + 1))))
        rep = full_report(spec)
        cases.append([w, rep.n, rep.k, rep.d, bool(rep.griesmer_distance_optimal)])
    out["corollary1"] = {"m": 4, "cases": cases}

    cases = []
    for m in range(2, 5):
        for w in range(1, m):
            spec = spec_from_faces(m, ((), (), (), tuple(range(1, w + 1))), (3,))
            rep = full_report(spec)
            cases.append([m, w, rep.n, rep.k, rep.d, bool(rep.griesmer_attaining)])
    out["corollary2"] = {"cases": cases}

    cases = []
    for m in range(2, 5):
        for y in range(m + 1):
            for w in range(m):
                spec = spec_from_faces(
                    m,
                    ((), tuple(range(1, y + 1)), tuple(range(1, m + 1)), tuple(range(1, w + 1))),
                    (3,),
                )
                rep = full_report(spec)
                cases.append([m, y, w, rep.n, rep.k, rep.d, bool(rep.griesmer_attaining)])
    out["corollary3"] = {"cases": cases}

    cases = []
    for x in range(3):
        for y in range(1, 4):
            for z in range(1, 4):
                for w in range(1, 4):
                    spec = spec_from_faces(
                        4,
                        (
                            tuple(range(1, x + 1)),
                            tuple(range(1, y + 1)),
                            tuple(range(1, z + 1)),
                            tuple(range(1, w + 1)),
                        ),
                        (0,),
                    )
                    rep = full_report(
                        spec, engines=("closedform", "charsum"), materialize=False
                    )
                    cases.append(
                        [
                            x,
                            y,
                            z,
                            w,
                            bool(rep.griesmer_distance_optimal),
                            bool(rep.minimal_sufficient),
                            bool(rep.self_orthogonal_sufficient),
                        ]
                    )
    out["example4"] = {"m": 4, "cases": cases}
    return out


class _GoldenRun:
    def __init__(self):
        self.total = 0
        self.passed = 0
        self.failures: list[str] = []

    def check(self, label: str, pairs) -> None:
        """One golden check: a list of (name, got, want) comparisons."""
        self.total += 1
        msgs = [
            f"{label} / {name}: got {got!r}, want {want!r}"
            for name, got, want in pairs
            if got != want
        ]
        if msgs:
            self.failures.extend(msgs)
        else:
            self.passed += 1
        print(f"{'PASS' if not msgs else 'FAIL'}  {label}")


def run_golden_suite(golden: dict) -> tuple[int, int, list[str]]:
    """Returns (passed, total, failure messages); 12 checks."""
    run = _GoldenRun()
    reports = {
        name: full_report(spec, build_graph=True)
        for name, spec in _published_example_specs().items()
    }

    for name in ("example1", "example2", "example3"):
        rep, gold = reports[name], golden["examples"][name]
        run.check(
            f"{name} parameters/distribution",
            [
                ("n", rep.n, gold["n"]),
                ("k", rep.k, gold["k"]),
                ("d", rep.d, gold["d"]),
                (
                    "distribution",
                    [[w, c] for w, c in rep.distribution.sorted_items()],
                    gold["distribution"],
                ),
            ],
        )

    rep, gold = reports["example1"], golden["examples"]["example1"]
    run.check(
        "example1 certificates",
        [
            ("attaining", rep.griesmer_attaining, gold["griesmer_attaining"]),
            ("optimal", rep.griesmer_distance_optimal, gold["distance_optimal"]),
            ("minimal", rep.minimal_sufficient, gold["minimal_sufficient"]),
            ("so", rep.self_orthogonal_sufficient, gold["self_orthogonal_sufficient"]),
            ("so exact", rep.self_orthogonal_exact, gold["self_orthogonal_exact"]),
            ("projective", rep.projective, gold["projective"]),
        ],
    )
    run.check(
        "example1 css",
        [("css", [rep.css.n, rep.css.k, rep.css.d], gold["css"])],
    )
    run.check(
        "example1 srg",
        [
            ("computed", list(rep.srg.as_tuple()), gold["srg"]),
            ("verified", rep.srg_verified, True),
            ("complement", list(rep.srg_complement), gold["srg_complement"]),
            (
                "theorem form",
                (tuple(gold["srg"]), tuple(gold["srg_complement"])),
                srg_one_complement_family(4, 0, 3),
            ),
        ],
    )

    rep, gold = reports["example2"], golden["examples"]["example2"]
    run.check(
        "example2 certificates",
        [
            ("optimal", rep.griesmer_distance_optimal, gold["distance_optimal"]),
            ("minimal", rep.minimal_sufficient, gold["minimal_sufficient"]),
        ],
    )

    rep, gold = reports["example3"], golden["examples"]["example3"]
    run.check(
        "example3 css",
        [
            ("css", [rep.css.n, rep.css.k, rep.css.d], gold["css"]),
            ("so exact", rep.self_orthogonal_exact, gold["self_orthogonal_exact"]),
        ],
    )

    fresh = _compute_golden()
    for key, label, flag_from in (
        ("corollary1", "corollary 1 parameter sweep", None),
        ("corollary2", "corollary 2 Griesmer sweep", -1),
        ("corollary3", "corollary 3 Griesmer sweep", -1),
        ("example4", "example 4 certificate sweep", 4),
    ):
        pairs = [("cases", fresh[key], golden[key])]
        for case in fresh[key]["cases"]:
            if flag_from == -1:
                pairs.append((f"attains {case}", bool(case[-1]), True))
            elif flag_from is not None:
                pairs.append((f"certified {case}", all(case[flag_from:]), True))
        run.check(label, pairs)

    return run.passed, run.total, run.failures


def cmd_reproduce(args) -> int:
    if args.bless:
        golden = _compute_golden()
        path = _golden_path()
        with path.open("w", encoding="utf-8") as fh:
            json.dump(golden, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"golden data regenerated at {path}")
        return EXIT_OK
    golden = load_golden()
    passed, total, failures = run_golden_suite(golden)
    print(f"{passed}/{total} golden checks passed")
    if failures:
        print(f"first diff: {failures[0]}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_build(args) -> int:
    spec = _load_spec(args.spec)
    code = generator_matrix(build_defining_set(spec), spec)
    if args.format == "hex":
        text = "\n".join(columns_hex(code.generator))
    else:
        text = code.generator.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"[{code.n},{code.k}] generator written to {args.out}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simplicode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_engines=True):
        if with_engines:
            p.add_argument("--engines", default=",".join(an.ALL_ENGINES),
                           help="comma list from closedform,charsum,bruteforce")
        p.add_argument("--budget", type=int, default=None,
                       help=f"max 2^k*n bit-ops for brute force (default env "
                            f"{an.BUDGET_ENV_VAR} or {an.DEFAULT_BUDGET})")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("analyze", help="full report for one spec")
    p.add_argument("--spec", required=True, help="spec JSON path, or - for stdin")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--build-graph", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="engine-equivalence sweep over a family")
    p.add_argument("--family", type=int, required=True, choices=range(1, 7))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--quiet", action="store_true", help="only failures and skips")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("srg", help="strongly-regular-graph parameters")
    p.add_argument("--spec", required=True)
    p.add_argument("--build-graph", action="store_true",
                   help="exhaustively verify on the actual graph")
    p.set_defaults(func=cmd_srg)

    p = sub.add_parser("reproduce", help="run the golden suite")
    p.add_argument("--bless", action="store_true", help="regenerate golden data")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("build", help="dump a generator matrix")
    p.add_argument("--spec", required=True)
    p.add_argument("--format", choices=("text", "hex"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_build)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DistributionMismatch as exc:
        print(f"engine mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (NotStronglyRegular, NotSelfOrthogonal, NonIntegralMu, ZeroCode) as exc:
        print(f"structural failure: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
