"""Primality proving for Proth numbers N = t*2^e + 1.

Two provers build a chain of square roots ending in a witness for Proth's
criterion: a deterministic one that starts from a computed square root of -1,
and a randomized one that usually gets most of the chain for free from a
single sampled base.  Prime verdicts carry certificates checkable with plain
modular arithmetic; composite verdicts carry machine-checkable evidence.
"""

from .core import (
    Certificate,
    CompositeDetected,
    Evidence,
    Factor,
    FermatWitness,
    GroupOrderCount,
    InvalidInputError,
    NotProthError,
    OrderCount,
    ProthForm,
    SqrtMismatch,
    Verdict,
    ZeroDivisorPair,
    decompose,
    evidence_summary,
    parse_number,
)
from .modsqrt import InvalidWitnessError, SqrtCounts, sqrt_minus_one, sqrt_mod
from .prover import (
    ProthTestOutcome,
    ProveCounts,
    RandomizedResult,
    check_certificate,
    proth_test,
    prove_deterministic,
    prove_randomized,
    verify_certificate,
    verify_evidence,
)
from .quadgroup import (
    INFINITY,
    GroupContext,
    GroupElement,
    Infinity,
    from_unit_group,
    group_mul,
    group_pow,
    to_unit_group,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CompositeDetected",
    "Evidence",
    "Factor",
    "FermatWitness",
    "GroupOrderCount",
    "InvalidInputError",
    "NotProthError",
    "OrderCount",
    "ProthForm",
    "SqrtMismatch",
    "Verdict",
    "ZeroDivisorPair",
    "decompose",
    "evidence_summary",
    "parse_number",
    "InvalidWitnessError",
    "SqrtCounts",
    "sqrt_minus_one",
    "sqrt_mod",
    "ProthTestOutcome",
    "ProveCounts",
    "RandomizedResult",
    "check_certificate",
    "proth_test",
    "prove_deterministic",
    "prove_randomized",
    "verify_certificate",
    "verify_evidence",
    "INFINITY",
    "GroupContext",
    "GroupElement",
    "Infinity",
    "from_unit_group",
    "group_mul",
    "group_pow",
    "to_unit_group",
    "__version__",
]
