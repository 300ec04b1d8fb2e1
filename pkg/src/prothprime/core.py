"""Domain types for Proth numbers N = t*2^e + 1 with t odd and 0 < t < 2^e.

Holds the canonical decomposition, primality certificates, and the evidence
variants a prover emits when it stumbles over a proof of compositeness.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .modular import v2

__all__ = [
    "InvalidInputError",
    "NotProthError",
    "ProthForm",
    "decompose",
    "parse_number",
    "Factor",
    "FermatWitness",
    "OrderCount",
    "GroupOrderCount",
    "ZeroDivisorPair",
    "SqrtMismatch",
    "Evidence",
    "CompositeDetected",
    "Certificate",
    "Verdict",
    "evidence_summary",
]


class InvalidInputError(ValueError):
    """Input is outside the domain (not an odd integer > 3, bad syntax, ...)."""


class NotProthError(ValueError):
    """Integer is odd and > 3 but its odd part is too large: t >= 2^e."""


@dataclass(frozen=True)
class ProthForm:
    """Canonical decomposition N = t*2^e + 1 with t odd and 0 < t < 2^e."""

    t: int
    e: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.t % 2 == 0:
            raise InvalidInputError(f"t must be a positive odd integer, got {self.t}")
        if self.e < 2 or self.t >= 2**self.e:
            raise InvalidInputError(f"need 2^e > t with e >= 2, got t={self.t}, e={self.e}")

    @property
    def n(self) -> int:
        return self.t * 2**self.e + 1

    def __str__(self) -> str:
        return f"{self.t}*2^{self.e}+1"


def decompose(n: int) -> ProthForm:
    """Canonical ProthForm of n, or NotProthError if the odd part is >= 2^e."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"expected an integer, got {n!r}")
    if n <= 3 or n % 2 == 0:
        raise InvalidInputError(f"expected an odd integer > 3, got {n}")
    e = v2(n - 1)
    t = (n - 1) >> e
    if t >= 2**e:
        raise NotProthError(f"{n} = {t}*2^{e}+1 is not a Proth number (t >= 2^e)")
    return ProthForm(t, e)


_FORM_RE = re.compile(r"^(\d+)\*2\^(\d+)\+1$")


def parse_number(text: str) -> int:
    """Parse a decimal integer or a 't*2^e+1' expression into its value."""
    text = text.strip()
    match = _FORM_RE.match(text)
    if match:
        return int(match.group(1)) * 2 ** int(match.group(2)) + 1
    if text.isdigit():
        return int(text)
    raise InvalidInputError(f"cannot parse {text!r} as a number or t*2^e+1 form")


@dataclass(frozen=True)
class Factor:
    """A nontrivial divisor of N."""

    divisor: int


@dataclass(frozen=True)
class FermatWitness:
    """A base with base**(N-1) != 1 mod N."""

    base: int


@dataclass(frozen=True)
class OrderCount:
    """More residues of multiplicative order dividing 2t than a prime allows."""

    residues: tuple[int, ...]


@dataclass(frozen=True)
class GroupOrderCount:
    """Order statistics impossible in the group attached to a quadratic residue.

    Either `members` lists 2t-1 distinct elements whose 2t-th power is the
    identity, or `base` is an element whose (2t * 2^k)-th powers avoid the
    unique element of order two for all k <= e-2.  Exactly one is set.
    """

    residue: int
    members: tuple[int, ...] | None = None
    base: int | None = None

    def __post_init__(self) -> None:
        if (self.members is None) == (self.base is None):
            raise ValueError("exactly one of members/base must be given")


@dataclass(frozen=True)
class ZeroDivisorPair:
    """x1^2 - residue and x2^2 - residue are nonzero but multiply to zero mod N."""

    x1: int
    x2: int
    residue: int


@dataclass(frozen=True)
class SqrtMismatch:
    """A claimed square root whose square is not the value it should be."""

    root: int
    value: int


Evidence = Union[Factor, FermatWitness, OrderCount, GroupOrderCount, ZeroDivisorPair, SqrtMismatch]


class CompositeDetected(Exception):
    """Raised by the provers the moment compositeness becomes certain."""

    def __init__(self, evidence: Evidence):
        super().__init__(evidence_summary(evidence))
        self.evidence = evidence


@dataclass(frozen=True)
class Certificate:
    """Witness chain proving primality of form.n.

    chain[0] squares to -1 mod N.  For the deterministic algorithm
    (start_index 2) each later entry squares to its predecessor.  The
    randomized algorithm starts its chain at index k = start_index: chain[0]
    is the element of order four, chain[1] (when k > 2) reaches chain[0]
    after k-2 squarings, and each later entry squares to its predecessor.
    The last entry is the witness, which satisfies witness^((N-1)/2) = -1.
    """

    form: ProthForm
    algorithm: str
    start_index: int
    chain: tuple[int, ...]
    witness: int
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.form.n


@dataclass(frozen=True)
class Verdict:
    """Outcome of a primality proof attempt."""

    n: int
    is_prime: bool
    certificate: Certificate | None = None
    evidence: Evidence | None = None

    @classmethod
    def prime(cls, certificate: Certificate) -> "Verdict":
        return cls(certificate.form.n, True, certificate=certificate)

    @classmethod
    def composite(cls, n: int, evidence: Evidence) -> "Verdict":
        return cls(n, False, evidence=evidence)


def evidence_summary(evidence: Evidence) -> str:
    """Compact one-line rendering used in CLI output and logs."""
    if isinstance(evidence, Factor):
        return f"factor(divisor={evidence.divisor})"
    if isinstance(evidence, FermatWitness):
        return f"fermat_witness(base={evidence.base})"
    if isinstance(evidence, OrderCount):
        return f"order_count(count={len(evidence.residues)})"
    if isinstance(evidence, GroupOrderCount):
        if evidence.members is not None:
            return f"group_order_count(residue={evidence.residue}, members={len(evidence.members)})"
        return f"group_order_count(residue={evidence.residue}, base={evidence.base})"
    if isinstance(evidence, ZeroDivisorPair):
        return (
            f"zero_divisor_pair(x1={evidence.x1}, x2={evidence.x2}, "
            f"residue={evidence.residue})"
        )
    if isinstance(evidence, SqrtMismatch):
        return f"sqrt_mismatch(root={evidence.root}, value={evidence.value})"
    raise TypeError(f"not an evidence value: {evidence!r}")
