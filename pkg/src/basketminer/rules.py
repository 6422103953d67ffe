"""Association-rule generation and scoring from mined frequent itemsets.

For every frequent itemset Z with at least two items, every non-empty
proper subset X becomes an antecedent of the rule X -> Z \\ X. Support and
confidence come straight from the counts already mined (no database
rescan), stay exact rationals internally, and render as whole percents
(rounded half away from zero) only at the presentation edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import (
    AssociationRule,
    DomainError,
    FrequentItemset,
    InternalConsistencyError,
    MiningParams,
    TransactionDb,
)


def rule_support(union_count: int, n_transactions: int) -> Fraction:
    """Rule support: union_count / N, as an exact rational."""
    if n_transactions == 0:
        raise DomainError("support is undefined for an empty database")
    if not 0 < union_count <= n_transactions:
        raise DomainError(
            f"union count {union_count} must be in 1..{n_transactions}")
    return Fraction(union_count, n_transactions)


def rule_confidence(union_count: int, antecedent_count: int) -> Fraction:
    """Rule confidence: union_count / antecedent_count, as an exact rational."""
    if antecedent_count == 0:
        raise DomainError("confidence is undefined when the antecedent never occurs")
    if not 0 < union_count <= antecedent_count:
        raise DomainError(
            f"union count {union_count} must be in 1..{antecedent_count}")
    return Fraction(union_count, antecedent_count)


def percent(value: Fraction) -> int:
    """Whole-percent rendering, rounding half away from zero (4/7 -> 57)."""
    scaled = Fraction(value) * 100
    if scaled >= 0:
        return math.floor(scaled + Fraction(1, 2))
    return -math.floor(-scaled + Fraction(1, 2))


def format_percent(value: Fraction) -> str:
    return f"{percent(value)}%"


@dataclass(frozen=True)
class RuleSet:
    """Rules passing both thresholds, in canonical order.

    Canonical order: descending confidence, then descending support, then
    lexicographic antecedent ids, then consequent ids.
    """

    rules: tuple[AssociationRule, ...]
    params: MiningParams
    n_transactions: int

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def _canonical_order(rule: AssociationRule):
    return (-rule.confidence, -rule.support, rule.antecedent, rule.consequent)


def generate_rules(frequents: Sequence[FrequentItemset], db: TransactionDb,
                   params: MiningParams,
                   max_antecedent: int | None = None) -> RuleSet:
    """Emit every X -> Z\\X split of the frequent itemsets that passes
    min_confidence (min_support holds by construction of ``frequents``).

    ``frequents`` must be downward-closed, which the mining engines
    guarantee; a missing subset count raises InternalConsistencyError.
    ``max_antecedent`` caps the antecedent size (None = no cap).
    """
    counts = {f.itemset: f.count for f in frequents}
    n = db.n
    rules = []
    for frequent in frequents:
        z = frequent.itemset
        if len(z) < 2:
            continue
        union_count = frequent.count
        if Fraction(union_count, n) < params.min_support:
            continue
        max_size = len(z) - 1
        if max_antecedent is not None:
            max_size = min(max_size, max_antecedent)
        for size in range(1, max_size + 1):
            for antecedent in combinations(z, size):
                antecedent_count = counts.get(antecedent)
                if antecedent_count is None:
                    raise InternalConsistencyError(
                        f"antecedent {antecedent} of frequent itemset {z} "
                        f"is missing from the mined counts")
                if rule_confidence(union_count, antecedent_count) < params.min_confidence:
                    continue
                chosen = set(antecedent)
                consequent = tuple(i for i in z if i not in chosen)
                rules.append(AssociationRule(
                    antecedent=antecedent,
                    consequent=consequent,
                    union_count=union_count,
                    antecedent_count=antecedent_count,
                    n_transactions=n))
    rules.sort(key=_canonical_order)
    return RuleSet(tuple(rules), params, n)
