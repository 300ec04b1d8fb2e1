"""Tests for the report file format: round trips and strict parsing."""

import pytest

from prothprime.certfile import (
    CertFileError,
    EvidenceReport,
    format_certificate,
    format_evidence,
    load_report,
    parse_certificate,
    parse_evidence,
)
from prothprime.core import (
    Certificate,
    Factor,
    FermatWitness,
    GroupOrderCount,
    OrderCount,
    ProthForm,
    SqrtMismatch,
    ZeroDivisorPair,
    decompose,
)
from prothprime.prover import prove_deterministic, prove_randomized


class TestCertificateRoundTrip:
    def test_deterministic_golden_text(self):
        cert = prove_deterministic(decompose(13)).certificate
        text = format_certificate(cert)
        assert text == (
            "n: 13\n"
            "t: 3\n"
            "e: 2\n"
            "algorithm: deterministic\n"
            "seed:\n"
            "start_index: 2\n"
            "chain: 8\n"
            "witness: 8\n"
        )

    def test_byte_identical_round_trip(self):
        for cert in (
            prove_deterministic(decompose(97)).certificate,
            prove_randomized(decompose(97), seed=3).verdict.certificate,
            prove_randomized(decompose(13), seed=2).verdict.certificate,
        ):
            text = format_certificate(cert)
            parsed = parse_certificate(text)
            assert parsed == cert
            assert format_certificate(parsed) == text

    def test_seed_is_preserved(self):
        cert = prove_randomized(decompose(97), seed=42).verdict.certificate
        assert parse_certificate(format_certificate(cert)).seed == 42


EVIDENCE_SAMPLES = [
    EvidenceReport(ProthForm(1, 5), "deterministic", Factor(3)),
    EvidenceReport(ProthForm(3, 3), "randomized", FermatWitness(2), seed=7),
    EvidenceReport(ProthForm(1, 5), "randomized", OrderCount((10, 1, 32)), seed=13),
    EvidenceReport(ProthForm(63, 6), "deterministic", GroupOrderCount(3521, base=1)),
    EvidenceReport(ProthForm(3, 7), "deterministic", GroupOrderCount(32, members=(17, 38, 64, 134, 137))),
    EvidenceReport(ProthForm(1, 5), "deterministic", ZeroDivisorPair(5, 9, 4)),
    EvidenceReport(ProthForm(3, 2), "deterministic", SqrtMismatch(0, 5)),
]


class TestEvidenceRoundTrip:
    @pytest.mark.parametrize("report", EVIDENCE_SAMPLES, ids=lambda r: type(r.evidence).__name__)
    def test_byte_identical_round_trip(self, report):
        text = format_evidence(report)
        parsed = parse_evidence(text)
        assert parsed == report
        assert format_evidence(parsed) == text

    def test_golden_text(self):
        report = EvidenceReport(ProthForm(1, 5), "randomized", OrderCount((10, 1, 32)), seed=13)
        assert format_evidence(report) == (
            "n: 33\n"
            "t: 1\n"
            "e: 5\n"
            "algorithm: randomized\n"
            "seed: 13\n"
            "evidence: order_count\n"
            "residues: 10,1,32\n"
        )


class TestLoadReport:
    def test_tells_the_two_kinds_apart(self):
        cert = prove_deterministic(decompose(97)).certificate
        assert isinstance(load_report(format_certificate(cert)), Certificate)
        report = EVIDENCE_SAMPLES[0]
        assert isinstance(load_report(format_evidence(report)), EvidenceReport)

    def test_rejects_unrecognizable_text(self):
        with pytest.raises(CertFileError):
            load_report("n: 13\nt: 3\ne: 2\n")
        with pytest.raises(CertFileError):
            load_report("")


class TestStrictParsing:
    def good_text(self) -> str:
        return format_certificate(prove_deterministic(decompose(97)).certificate)

    def test_missing_key(self):
        text = self.good_text().replace("start_index: 2\n", "")
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_duplicate_key(self):
        text = self.good_text() + "witness: 5\n"
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_unknown_key(self):
        text = self.good_text() + "note: hello\n"
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_non_integer_field(self):
        text = self.good_text().replace("witness: ", "witness: twelve")
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_value_must_match_decomposition(self):
        text = self.good_text().replace("n: 97", "n: 98")
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_inconsistent_form_is_rejected(self):
        text = self.good_text().replace("t: 3", "t: 5")
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_unknown_algorithm(self):
        text = self.good_text().replace("algorithm: deterministic", "algorithm: magic")
        with pytest.raises(CertFileError):
            parse_certificate(text)

    def test_unknown_evidence_kind(self):
        report = EVIDENCE_SAMPLES[0]
        text = format_evidence(report).replace("evidence: factor", "evidence: vibes")
        with pytest.raises(CertFileError):
            parse_evidence(text)

    def test_evidence_payload_must_match_kind(self):
        report = EVIDENCE_SAMPLES[0]
        text = format_evidence(report).replace("divisor: 3", "base: 3")
        with pytest.raises(CertFileError):
            parse_evidence(text)

    def test_malformed_line(self):
        with pytest.raises(CertFileError):
            parse_certificate("just some words\n")

    def test_blank_lines_are_tolerated(self):
        text = self.good_text().replace("algorithm:", "\nalgorithm:")
        assert parse_certificate(text) == prove_deterministic(decompose(97)).certificate
