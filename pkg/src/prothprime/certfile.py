"""Plain-text files for certificates and composite-evidence reports.

One `key: value` pair per line.  Certificates carry the keys n, t, e,
algorithm, seed, start_index, chain, witness in that order; evidence reports
swap the last three for an `evidence:` kind plus its payload keys.  A file
produced by the formatters parses back to an equal object, and re-formatting
reproduces the bytes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Certificate,
    Evidence,
    Factor,
    FermatWitness,
    GroupOrderCount,
    OrderCount,
    ProthForm,
    SqrtMismatch,
    ZeroDivisorPair,
)

__all__ = [
    "CertFileError",
    "EvidenceReport",
    "format_certificate",
    "parse_certificate",
    "format_evidence",
    "parse_evidence",
    "load_report",
]

_ALGORITHMS = ("deterministic", "randomized")


class CertFileError(ValueError):
    """File does not parse as a certificate or evidence report."""


@dataclass(frozen=True)
class EvidenceReport:
    """A composite verdict as written to disk."""

    form: ProthForm
    algorithm: str
    evidence: Evidence
    seed: int | None = None


def _format_lines(pairs: list[tuple[str, str]]) -> str:
    return "".join(f"{key}: {value}\n" if value else f"{key}:\n" for key, value in pairs)


def _head_pairs(form: ProthForm, algorithm: str, seed: int | None) -> list[tuple[str, str]]:
    return [
        ("n", str(form.n)),
        ("t", str(form.t)),
        ("e", str(form.e)),
        ("algorithm", algorithm),
        ("seed", "" if seed is None else str(seed)),
    ]


def format_certificate(cert: Certificate) -> str:
    pairs = _head_pairs(cert.form, cert.algorithm, cert.seed)
    pairs.append(("start_index", str(cert.start_index)))
    pairs.append(("chain", ",".join(str(c) for c in cert.chain)))
    pairs.append(("witness", str(cert.witness)))
    return _format_lines(pairs)


_EVIDENCE_PAYLOADS: dict[type, tuple[str, ...]] = {
    Factor: ("divisor",),
    FermatWitness: ("base",),
    OrderCount: ("residues",),
    GroupOrderCount: ("residue", "members", "base"),
    ZeroDivisorPair: ("x1", "x2", "residue"),
    SqrtMismatch: ("root", "value"),
}

_EVIDENCE_KINDS = {
    Factor: "factor",
    FermatWitness: "fermat_witness",
    OrderCount: "order_count",
    GroupOrderCount: "group_order_count",
    ZeroDivisorPair: "zero_divisor_pair",
    SqrtMismatch: "sqrt_mismatch",
}

_KIND_TYPES = {name: cls for cls, name in _EVIDENCE_KINDS.items()}


def format_evidence(report: EvidenceReport) -> str:
    evidence = report.evidence
    pairs = _head_pairs(report.form, report.algorithm, report.seed)
    pairs.append(("evidence", _EVIDENCE_KINDS[type(evidence)]))
    for key in _EVIDENCE_PAYLOADS[type(evidence)]:
        value = getattr(evidence, key)
        if value is None:
            continue
        if isinstance(value, tuple):
            pairs.append((key, ",".join(str(v) for v in value)))
        else:
            pairs.append((key, str(value)))
    return _format_lines(pairs)


def _parse_pairs(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not key:
            raise CertFileError(f"line {lineno}: expected 'key: value', got {line!r}")
        if key in pairs:
            raise CertFileError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value.strip()
    if not pairs:
        raise CertFileError("empty report")
    return pairs


def _take_int(pairs: dict[str, str], key: str) -> int:
    try:
        return int(pairs.pop(key))
    except KeyError:
        raise CertFileError(f"missing key {key!r}") from None
    except ValueError:
        raise CertFileError(f"key {key!r} is not an integer") from None


def _take_int_list(pairs: dict[str, str], key: str) -> tuple[int, ...]:
    raw = pairs.pop(key, None)
    if raw is None:
        raise CertFileError(f"missing key {key!r}")
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise CertFileError(f"key {key!r} is not a comma-separated integer list") from None


def _take_head(pairs: dict[str, str]) -> tuple[ProthForm, str, int | None]:
    n = _take_int(pairs, "n")
    t = _take_int(pairs, "t")
    e = _take_int(pairs, "e")
    try:
        form = ProthForm(t, e)
    except ValueError as exc:
        raise CertFileError(str(exc)) from None
    if form.n != n:
        raise CertFileError(f"n is {n} but t*2^e+1 is {form.n}")
    algorithm = pairs.pop("algorithm", None)
    if algorithm not in _ALGORITHMS:
        raise CertFileError(f"algorithm must be one of {_ALGORITHMS}, got {algorithm!r}")
    raw_seed = pairs.pop("seed", None)
    if raw_seed is None:
        raise CertFileError("missing key 'seed'")
    if raw_seed == "":
        seed: int | None = None
    else:
        try:
            seed = int(raw_seed)
        except ValueError:
            raise CertFileError("key 'seed' is not an integer") from None
    return form, algorithm, seed


def parse_certificate(text: str) -> Certificate:
    pairs = _parse_pairs(text)
    form, algorithm, seed = _take_head(pairs)
    start_index = _take_int(pairs, "start_index")
    chain = _take_int_list(pairs, "chain")
    witness = _take_int(pairs, "witness")
    if pairs:
        raise CertFileError(f"unexpected keys: {sorted(pairs)}")
    return Certificate(form, algorithm, start_index, chain, witness, seed)


def parse_evidence(text: str) -> EvidenceReport:
    pairs = _parse_pairs(text)
    form, algorithm, seed = _take_head(pairs)
    kind = pairs.pop("evidence", None)
    if kind not in _KIND_TYPES:
        raise CertFileError(f"unknown evidence kind {kind!r}")
    cls = _KIND_TYPES[kind]
    evidence: Evidence
    if cls is Factor:
        evidence = Factor(_take_int(pairs, "divisor"))
    elif cls is FermatWitness:
        evidence = FermatWitness(_take_int(pairs, "base"))
    elif cls is OrderCount:
        evidence = OrderCount(_take_int_list(pairs, "residues"))
    elif cls is GroupOrderCount:
        residue = _take_int(pairs, "residue")
        if "members" in pairs:
            evidence = GroupOrderCount(residue, members=_take_int_list(pairs, "members"))
        else:
            evidence = GroupOrderCount(residue, base=_take_int(pairs, "base"))
    elif cls is ZeroDivisorPair:
        evidence = ZeroDivisorPair(
            _take_int(pairs, "x1"), _take_int(pairs, "x2"), _take_int(pairs, "residue")
        )
    else:
        evidence = SqrtMismatch(_take_int(pairs, "root"), _take_int(pairs, "value"))
    if pairs:
        raise CertFileError(f"unexpected keys: {sorted(pairs)}")
    return EvidenceReport(form, algorithm, evidence, seed)


def load_report(text: str) -> Certificate | EvidenceReport:
    """Parse either kind of report, telling them apart by their keys."""
    probe = _parse_pairs(text)
    if "witness" in probe:
        return parse_certificate(text)
    if "evidence" in probe:
        return parse_evidence(text)
    raise CertFileError("neither a certificate (witness) nor an evidence report (evidence)")
