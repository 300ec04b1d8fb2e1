"""Command-line interface.

    prothprime prove 97
    prothprime prove "3*2^5+1" --algorithm deterministic --emit-certificate 97.cert
    prothprime verify 97.cert
    prothprime scan 1:99 2:12 --jobs 4
    prothprime experiment v2-expectation --pmax 500 --out sweep.csv

Exit codes: 0 for prime / valid / experiment assertions holding, 1 for
composite / invalid / assertions failing, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .certfile import (
    CertFileError,
    EvidenceReport,
    format_certificate,
    format_evidence,
    load_report,
)
from .core import (
    Certificate,
    InvalidInputError,
    NotProthError,
    ProthForm,
    Verdict,
    decompose,
    evidence_summary,
    parse_number,
)
from .experiments import (
    expectation_rows,
    m_rows,
    measure_m,
    opcount_rows,
    opcount_scaling,
    v2_expectation_sweep,
    write_table,
)
from .prover import check_certificate, prove_deterministic, prove_randomized, verify_evidence

__all__ = ["main", "entry", "build_parser"]

_DEFAULT_OPCOUNT_FORMS = "765*2^10+1,765*2^20+1,331*2^12+1,663*2^12+1"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prothprime",
        description="Prove primality of Proth numbers t*2^e+1 and verify the proofs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="decide one number and optionally write a report")
    prove.add_argument("number", help="decimal value or t*2^e+1 form")
    _add_algorithm_args(prove)
    prove.add_argument(
        "--emit-certificate",
        metavar="PATH",
        help="write the certificate (prime) or evidence report (composite) here",
    )

    verify = sub.add_parser("verify", help="recheck a certificate or evidence report")
    verify.add_argument("path", help="report file written by prove or scan")

    scan = sub.add_parser("scan", help="decide every Proth number in a (t, e) box")
    scan.add_argument("t_range", help="odd multipliers to cover, as LO:HI or a single value")
    scan.add_argument("e_range", help="exponents to cover, as LO:HI or a single value")
    _add_algorithm_args(scan)
    scan.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    scan.add_argument("--out", metavar="PATH", help="write lines here instead of stdout")

    experiment = sub.add_parser("experiment", help="run a study and emit its table")
    experiment.add_argument(
        "name", choices=["v2-expectation", "m-distribution", "opcount"], help="which study"
    )
    experiment.add_argument("--pmax", type=int, default=2000, help="v2-expectation: primes below this")
    experiment.add_argument("--n", metavar="NUMBER", help="m-distribution: the prime to sample")
    experiment.add_argument("--trials", type=int, default=10000, help="m-distribution: sample size")
    experiment.add_argument("--seed", type=_seed, default=0, help="random seed (default 0)")
    experiment.add_argument(
        "--forms",
        default=_DEFAULT_OPCOUNT_FORMS,
        help="opcount: comma-separated t*2^e+1 forms to profile",
    )
    experiment.add_argument(
        "--randomized", action="store_true", help="opcount: tally the randomized prover too"
    )
    experiment.add_argument("--out", metavar="PATH", help="write the CSV here, plus a figure")
    experiment.add_argument("--no-figures", action="store_true", help="skip figure rendering")
    return parser


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be >= 0")
    return value


def _add_algorithm_args(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument(
        "--algorithm",
        choices=["randomized", "deterministic"],
        default="randomized",
        help="proof strategy (default randomized)",
    )
    cmd.add_argument("--seed", type=_seed, default=0, help="random seed (default 0)")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "prove":
            return _cmd_prove(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "scan":
            return _cmd_scan(args)
        return _cmd_experiment(args)
    except (InvalidInputError, NotProthError, CertFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


def _prove_form(form: ProthForm, algorithm: str, seed: int) -> Verdict:
    if algorithm == "deterministic":
        return prove_deterministic(form)
    return prove_randomized(form, seed).verdict


def _cmd_prove(args: argparse.Namespace) -> int:
    form = decompose(parse_number(args.number))
    verdict = _prove_form(form, args.algorithm, args.seed)
    if verdict.is_prime:
        cert = verdict.certificate
        assert cert is not None
        print(f"{form.n} = {form}: PRIME (witness {cert.witness})")
        report = format_certificate(cert)
    else:
        evidence = verdict.evidence
        assert evidence is not None
        print(f"{form.n} = {form}: COMPOSITE ({evidence_summary(evidence)})")
        seed = args.seed if args.algorithm == "randomized" else None
        report = format_evidence(EvidenceReport(form, args.algorithm, evidence, seed))
    if args.emit_certificate:
        Path(args.emit_certificate).write_text(report)
    return 0 if verdict.is_prime else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    report = load_report(Path(args.path).read_text())
    if isinstance(report, Certificate):
        reason = check_certificate(report)
        if reason is None:
            print(f"OK certificate: {report.form.n} is prime (witness {report.witness})")
            return 0
        print(f"INVALID certificate: {reason}")
        return 1
    ok = verify_evidence(report.form.n, report.evidence)
    if ok:
        print(f"OK evidence: {report.form.n} is composite ({evidence_summary(report.evidence)})")
        return 0
    print("INVALID evidence: not reproducible")
    return 1


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) > 2:
        raise InvalidInputError(f"range must be LO:HI or a single value, got {text!r}")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise InvalidInputError(f"range must be integers, got {text!r}") from None
    lo, hi = numbers[0], numbers[-1]
    if lo < 0:
        raise InvalidInputError(f"range bounds must be >= 0, got {text!r}")
    return lo, hi


def _candidate_seed(master: int, t: int, e: int) -> int:
    digest = hashlib.blake2b(f"{master}:{t}:{e}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _scan_task(task: tuple[int, int, str, int]) -> str:
    t, e, algorithm, master = task
    form = ProthForm(t, e)
    verdict = _prove_form(form, algorithm, _candidate_seed(master, t, e))
    if verdict.is_prime:
        cert = verdict.certificate
        assert cert is not None
        return f"{form.n} {form} PRIME witness={cert.witness}"
    evidence = verdict.evidence
    assert evidence is not None
    return f"{form.n} {form} COMPOSITE {evidence_summary(evidence)}"


def _cmd_scan(args: argparse.Namespace) -> int:
    t_lo, t_hi = _parse_range(args.t_range)
    e_lo, e_hi = _parse_range(args.e_range)
    if args.jobs < 1:
        raise InvalidInputError(f"--jobs must be >= 1, got {args.jobs}")
    tasks = [
        (t, e, args.algorithm, args.seed)
        for e in range(max(e_lo, 2), e_hi + 1)
        for t in range(t_lo | 1, min(t_hi, 2**e - 1) + 1, 2)
    ]
    if args.jobs == 1 or len(tasks) <= 1:
        lines = [_scan_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(_scan_task, tasks, chunksize=8))
    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _emit_experiment(args: argparse.Namespace, rows, render) -> None:
    if args.out:
        out = Path(args.out)
        with out.open("w", newline="") as stream:
            write_table(rows, stream)
        if not args.no_figures:
            render(str(out.with_suffix(".png")))
    else:
        write_table(rows, sys.stdout)


def _cmd_experiment(args: argparse.Namespace) -> int:
    from . import plots

    if args.name == "v2-expectation":
        checks = v2_expectation_sweep(args.pmax)
        _emit_experiment(args, expectation_rows(checks), lambda p: plots.render_expectation(checks, p))
        bad = [c for c in checks if not c.ok]
        for c in bad:
            print(f"mismatch at p={c.p}, d={c.d}", file=sys.stderr)
        return 1 if bad else 0

    if args.name == "m-distribution":
        if not args.n:
            raise InvalidInputError("m-distribution needs --n")
        form = decompose(parse_number(args.n))
        stats = measure_m(form, args.trials, args.seed)
        _emit_experiment(args, m_rows(stats), lambda p: plots.render_m_distribution(stats, p))
        failures = []
        if stats.exact_mean is not None and not stats.exact_mean < 1:
            failures.append(f"exact mean {stats.exact_mean} is not < 1")
        if stats.trials >= 1000 and not stats.sample_mean < 1.05:
            failures.append(f"sample mean {float(stats.sample_mean):.4f} is not < 1.05")
        for failure in failures:
            print(failure, file=sys.stderr)
        return 1 if failures else 0

    forms = [decompose(parse_number(part)) for part in args.forms.split(",")]
    seed = args.seed if args.randomized else None
    reports = opcount_scaling(forms, seed)
    _emit_experiment(args, opcount_rows(reports), lambda p: plots.render_opcount(reports, p))
    return 0


if __name__ == "__main__":
    entry()
