"""Shared helpers: enumerate Proth forms by brute force for cross-checks."""

from __future__ import annotations

from prothprime.core import InvalidInputError, NotProthError, ProthForm, decompose
from prothprime.oracle import is_prime_trial


def proth_forms_below(limit: int) -> list[ProthForm]:
    """Every Proth form with value strictly below limit, ascending by value."""
    forms = []
    n = 5
    while n < limit:
        try:
            forms.append(decompose(n))
        except (InvalidInputError, NotProthError):
            pass
        n += 2
    return forms


def proth_primes_below(limit: int) -> list[ProthForm]:
    """The prime Proth forms below limit, ascending by value."""
    return [form for form in proth_forms_below(limit) if is_prime_trial(form.n)]


def proth_composites_below(limit: int) -> list[ProthForm]:
    """The composite Proth forms below limit, ascending by value."""
    return [form for form in proth_forms_below(limit) if not is_prime_trial(form.n)]
