"""Command-line front end.

Subcommands: ``verify`` a candidate description against the Fibonacci-group
quotient map, ``survey`` a whole dimension (full enumeration or a seeded
sample), ``symbolic`` for the one-dimensional periodicity engine,
``abelianize`` for Fibonacci-group abelianizations, and ``show`` for a
human-readable look at one candidate.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
input or usage.  JSON output is byte-deterministic for a fixed
configuration (including the seed); runtimes are only ever reported in text
mode.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Optional

from .epimorphism import (
    symbolic_sequence,
    verify_addrel,
    verify_main_theorem,
    verify_periodicity,
)
from .exact import format_rational
from .fpgroup import abelianization, fibonacci_presentation
from .hwgroup import (
    candidate_count,
    candidate_from_index,
    candidate_from_json_dict,
    candidate_to_json_dict,
    classify,
    cyclic_hw,
    holonomy,
    translation_lattice,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FULL_ENUMERATION_LIMIT = 5  # dimensions above this need --sample


@dataclass
class RunConfig:
    """Parsed invocation: one command plus its options."""

    command: str
    dim: Optional[int] = None
    k: Optional[int] = None
    input_path: Optional[str] = None
    sample: Optional[int] = None
    seed: Optional[int] = None
    jobs: int = 1
    output_format: str = "text"
    r: Optional[int] = None
    n: Optional[int] = None


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _fail_usage(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_USAGE


def _dumps(data: dict) -> str:
    return json.dumps(data, separators=(",", ":"))


def _load_candidate(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return candidate_from_json_dict(data)


def _translations_text(candidate) -> str:
    return " ".join(
        "(" + ",".join(format_rational(t) for t in vec) + ")"
        for vec in candidate.translations
    )


def cmd_verify(cfg: RunConfig) -> int:
    if not cfg.input_path:
        return _fail_usage("verify needs --input FILE")
    try:
        candidate = _load_candidate(cfg.input_path)
    except (OSError, ValueError) as exc:
        return _fail_usage(f"cannot load candidate: {exc}")
    report = verify_main_theorem(candidate)
    if cfg.output_format == "json":
        _emit(_dumps(report.to_json_dict()))
    else:
        cl = report.classification
        _emit(f"candidate: dim {candidate.dim}, translations {_translations_text(candidate)}")
        _emit(
            "classification: "
            f"crystallographic={'yes' if cl.crystallographic else 'no'} "
            f"torsion-free={'yes' if cl.torsion_free else 'no'} "
            f"holonomy order={cl.holonomy_order} "
            f"hantzsche-wendt={'yes' if cl.hantzsche_wendt else 'no'}"
        )
        trivial = sum(report.relators_trivial)
        _emit(f"relators: {trivial}/{len(report.relators_trivial)} trivial")
        _emit(f"surjective: {'yes' if report.surjective else 'no'}")
        for problem in report.problems():
            _emit(f"problem: {problem}")
        _emit(f"verdict: {report.verdict.upper()}")
    return EXIT_PASS if report.passed else EXIT_FAIL


def _survey_record(args: tuple[int, int]) -> dict:
    dim, index = args
    candidate = candidate_from_index(dim, index)
    cl = classify(candidate)
    verdict = None
    if cl.hantzsche_wendt:
        verdict = verify_main_theorem(candidate).verdict
    return {
        "index": index,
        "dim": dim,
        "translations": candidate_to_json_dict(candidate)["translations"],
        "crystallographic": cl.crystallographic,
        "torsion_free": cl.torsion_free,
        "hw": cl.hantzsche_wendt,
        "verdict": verdict,
    }


def _survey_indices(cfg: RunConfig) -> Iterable[int]:
    total = candidate_count(cfg.dim)
    if cfg.sample is None:
        return range(total)
    rng = random.Random(cfg.seed)
    return [rng.randrange(total) for _ in range(cfg.sample)]


def cmd_survey(cfg: RunConfig) -> int:
    if cfg.dim is None:
        return _fail_usage("survey needs --dim N")
    if cfg.dim % 2 == 0 or cfg.dim < 3:
        return _fail_usage(f"dimension must be odd and >= 3, got {cfg.dim}")
    if cfg.dim > FULL_ENUMERATION_LIMIT and cfg.sample is None:
        return _fail_usage(
            f"full enumeration of dimension {cfg.dim} has {candidate_count(cfg.dim)} "
            f"candidates; pass --sample N (with --seed) instead"
        )
    if cfg.sample is not None and cfg.sample < 1:
        return _fail_usage("--sample must be positive")

    work = [(cfg.dim, idx) for idx in _survey_indices(cfg)]
    if cfg.jobs > 1:
        pool = Pool(processes=cfg.jobs)
        try:
            records = pool.imap(_survey_record, work, chunksize=64)
            counts = _emit_survey_records(cfg, records)
        finally:
            pool.close()
            pool.join()
    else:
        counts = _emit_survey_records(cfg, map(_survey_record, work))

    summary = {
        "summary": True,
        "dim": cfg.dim,
        "candidates": counts["total"],
        "crystallographic": counts["crystallographic"],
        "torsion_free": counts["torsion_free"],
        "hantzsche_wendt": counts["hw"],
        "verified_pass": counts["pass"],
        "verified_fail": counts["fail"],
    }
    if cfg.output_format == "json":
        _emit(_dumps(summary))
    else:
        _emit(
            f"surveyed {counts['total']} candidates in dimension {cfg.dim}: "
            f"{counts['crystallographic']} crystallographic, "
            f"{counts['hw']} hantzsche-wendt, "
            f"{counts['pass']} verified pass, {counts['fail']} verified fail"
        )
    return EXIT_PASS if counts["fail"] == 0 else EXIT_FAIL


def _emit_survey_records(cfg: RunConfig, records: Iterable[dict]) -> dict:
    counts = {"total": 0, "crystallographic": 0, "torsion_free": 0, "hw": 0, "pass": 0, "fail": 0}
    for record in records:
        counts["total"] += 1
        counts["crystallographic"] += record["crystallographic"]
        counts["torsion_free"] += record["torsion_free"]
        counts["hw"] += record["hw"]
        if record["verdict"] == "pass":
            counts["pass"] += 1
        elif record["verdict"] == "fail":
            counts["fail"] += 1
        if cfg.output_format == "json":
            _emit(_dumps(record))
        else:
            verdict = record["verdict"] or "-"
            _emit(
                f"index={record['index']} crystallographic={'y' if record['crystallographic'] else 'n'} "
                f"torsion_free={'y' if record['torsion_free'] else 'n'} "
                f"hw={'y' if record['hw'] else 'n'} verdict={verdict}"
            )
    return counts


def cmd_symbolic(cfg: RunConfig) -> int:
    if cfg.dim is None:
        return _fail_usage("symbolic needs --dim N")
    n = cfg.dim
    if n % 2 == 0 or n < 3:
        return _fail_usage(f"dimension must be odd and >= 3, got {n}")
    if cfg.k is not None and not 0 <= cfg.k <= n - 1:
        return _fail_usage(f"--k must lie in [0, {n - 1}], got {cfg.k}")
    ks = [cfg.k] if cfg.k is not None else list(range(n))
    started = time.perf_counter()
    checks = []
    for k in ks:
        checks.append(
            {
                "k": k,
                "periodic": verify_periodicity(n, k),
                "recursion_consistent": verify_addrel(n, k),
            }
        )
    elapsed = time.perf_counter() - started
    all_ok = all(c["periodic"] and c["recursion_consistent"] for c in checks)
    if cfg.output_format == "json":
        _emit(
            _dumps(
                {
                    "command": "symbolic",
                    "dim": n,
                    "period": 2 * n,
                    "checks": checks,
                    "verdict": "pass" if all_ok else "fail",
                }
            )
        )
    else:
        confirmed = [str(c["k"]) for c in checks if c["periodic"] and c["recursion_consistent"]]
        if all_ok:
            _emit(f"period {2 * n} confirmed for k={','.join(confirmed)}")
        else:
            bad = [str(c["k"]) for c in checks if not (c["periodic"] and c["recursion_consistent"])]
            _emit(f"period {2 * n} FAILED for k={','.join(bad)}")
        if cfg.k is not None:
            for i, term in enumerate(symbolic_sequence(n, cfg.k).terms):
                _emit(f"term {i}: {term}")
        _emit(f"runtime: {elapsed:.3f}s")
    return EXIT_PASS if all_ok else EXIT_FAIL


def cmd_abelianize(cfg: RunConfig) -> int:
    r, n = cfg.r, cfg.n
    if r is None or n is None or r < 1 or n < 1:
        return _fail_usage("abelianize needs positive r and n")
    divisors = abelianization(fibonacci_presentation(r, n))
    nontrivial = [x for x in divisors if x not in (0, 1)]
    free_rank = sum(1 for x in divisors if x == 0)
    order = None
    if free_rank == 0:
        order = 1
        for x in divisors:
            order *= x
    even = sum(1 for x in divisors if x == 0 or x % 2 == 0)
    # compare against the expected holonomy 2-rank when (r, n) = (m-1, 2m)
    holonomy_rank = r if (n == 2 * (r + 1)) else None
    if cfg.output_format == "json":
        _emit(
            _dumps(
                {
                    "command": "abelianize",
                    "r": r,
                    "n": n,
                    "divisors": list(divisors),
                    "nontrivial": nontrivial,
                    "free_rank": free_rank,
                    "order": order,
                    "even_divisors": even,
                    "holonomy_rank": holonomy_rank,
                }
            )
        )
    else:
        _emit(f"abelianization of F({r},{n}): divisors {list(divisors)}")
        if free_rank:
            _emit(f"free rank {free_rank} (infinite group)")
        else:
            _emit(f"finite of order {order}; nontrivial divisors {nontrivial}")
        if holonomy_rank is not None:
            _emit(
                f"even divisors: {even} (holonomy of the matching "
                f"Hantzsche-Wendt groups has 2-rank {holonomy_rank})"
            )
    return EXIT_PASS


def cmd_show(cfg: RunConfig) -> int:
    if cfg.input_path:
        try:
            candidate = _load_candidate(cfg.input_path)
        except (OSError, ValueError) as exc:
            return _fail_usage(f"cannot load candidate: {exc}")
    elif cfg.dim is not None:
        try:
            candidate = cyclic_hw(cfg.dim)
        except ValueError as exc:
            return _fail_usage(str(exc))
    else:
        return _fail_usage("show needs --input FILE or --dim N")
    cl = classify(candidate)
    lattice = translation_lattice(candidate)
    table = holonomy(candidate)
    if cfg.output_format == "json":
        _emit(
            _dumps(
                {
                    "candidate": candidate_to_json_dict(candidate),
                    "classification": cl.to_json_dict(),
                    "holonomy_order": len(table),
                    "lattice": {
                        "rank": lattice.rank,
                        "denominator": lattice.den,
                        "basis": [list(row) for row in lattice.basis],
                    },
                }
            )
        )
    else:
        _emit(f"candidate: dim {candidate.dim}")
        for i, g in enumerate(candidate.generators):
            _emit(f"generator {i}: {g}")
        _emit(f"holonomy order: {len(table)}")
        _emit(
            f"translation lattice: rank {lattice.rank}, basis rows/" + str(lattice.den)
        )
        for row in lattice.basis:
            _emit("  " + " ".join(str(v) for v in row))
        _emit(
            "classification: "
            f"crystallographic={'yes' if cl.crystallographic else 'no'} "
            f"torsion-free={'yes' if cl.torsion_free else 'no'} "
            f"hantzsche-wendt={'yes' if cl.hantzsche_wendt else 'no'}"
        )
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hwfib",
        description=(
            "Exact verification of Hantzsche-Wendt groups and their "
            "Fibonacci-group quotient maps"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, dim=False, k=False, inp=False, sampling=False):
        if dim:
            p.add_argument("--dim", type=int, help="ambient dimension (odd)")
        if k:
            p.add_argument("--k", type=int, help="position of the +1 seed generator")
        if inp:
            p.add_argument("--input", dest="input_path", help="candidate JSON file")
        if sampling:
            p.add_argument("--sample", type=int, help="number of random candidates")
            p.add_argument("--seed", type=int, help="seed for --sample")
            p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument(
            "--format",
            dest="output_format",
            choices=("json", "text"),
            default="text",
            help="output format (default: text)",
        )

    p_verify = sub.add_parser("verify", help="verify one candidate from a JSON file")
    add_common(p_verify, inp=True)

    p_survey = sub.add_parser("survey", help="classify and verify a whole dimension")
    add_common(p_survey, dim=True, sampling=True)

    p_sym = sub.add_parser("symbolic", help="symbolic one-dimensional periodicity check")
    add_common(p_sym, dim=True, k=True)

    p_ab = sub.add_parser("abelianize", help="abelianization of a Fibonacci group")
    p_ab.add_argument("r", type=int, help="relator length parameter r of F(r, n)")
    p_ab.add_argument("n", type=int, help="generator count n of F(r, n)")
    add_common(p_ab)

    p_show = sub.add_parser("show", help="describe one candidate group")
    add_common(p_show, dim=True, inp=True)

    return parser


COMMANDS = {
    "verify": cmd_verify,
    "survey": cmd_survey,
    "symbolic": cmd_symbolic,
    "abelianize": cmd_abelianize,
    "show": cmd_show,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        dim=getattr(args, "dim", None),
        k=getattr(args, "k", None),
        input_path=getattr(args, "input_path", None),
        sample=getattr(args, "sample", None),
        seed=getattr(args, "seed", None),
        jobs=getattr(args, "jobs", 1) or 1,
        output_format=args.output_format,
        r=getattr(args, "r", None),
        n=getattr(args, "n", None),
    )
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
