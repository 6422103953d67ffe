"""Level-wise frequent-itemset mining with candidate generation and pruning.

Candidates of size k are produced by the classical prefix join of the
frequent (k-1)-itemsets, then pruned using the anti-monotone property: a
candidate survives only if every (k-1)-subset was frequent at the
previous level. Support counting is a full scan of the database per
level, probing each transaction's k-subsets against a hash-indexed
candidate table; no transaction-trimming tricks, correctness first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    ContractViolationError,
    EmptyInputError,
    FrequentItemset,
    ItemSet,
    MiningParams,
    TransactionDb,
)


@dataclass(frozen=True)
class CandidateSet:
    """Deduplicated size-k candidates, each surviving subset pruning."""

    k: int
    candidates: tuple[ItemSet, ...]

    def __post_init__(self) -> None:
        if self.candidates and any(len(c) != self.k for c in self.candidates):
            raise ValueError(f"all candidates must have exactly {self.k} items")


def frequent_singletons(db: TransactionDb, threshold: int) -> list[FrequentItemset]:
    """All single-item itemsets with count >= threshold, ordered by item id."""
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    counts = db.item_frequencies()
    return [FrequentItemset((item,), count)
            for item, count in sorted(counts.items())
            if count >= threshold]


def candidate_gen(prev_level: Sequence[FrequentItemset]) -> CandidateSet:
    """Join frequent (k-1)-itemsets into pruned k-candidates.

    Self-join on the first k-2 items, then drop any candidate with a
    (k-1)-subset missing from ``prev_level``. Output is lexicographically
    ordered and duplicate-free by construction.
    """
    if not prev_level:
        return CandidateSet(2, ())
    sizes = {len(f.itemset) for f in prev_level}
    if len(sizes) != 1:
        raise ContractViolationError(
            f"candidate_gen requires uniform itemset sizes, got {sorted(sizes)}")
    k = sizes.pop() + 1
    prev_sets = {f.itemset for f in prev_level}
    ordered = sorted(prev_sets)
    candidates = []
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a[:-1] != b[:-1]:
                break  # sorted input: no later b shares this prefix either
            candidate = a + (b[-1],)
            if all(candidate[:j] + candidate[j + 1:] in prev_sets
                   for j in range(k)):
                candidates.append(candidate)
    return CandidateSet(k, tuple(candidates))


def count_level(db: TransactionDb, candidate_set: CandidateSet,
                threshold: int) -> list[FrequentItemset]:
    """Scan the db once, count candidates, keep those meeting ``threshold``."""
    if not candidate_set.candidates:
        return []
    k = candidate_set.k
    counts = dict.fromkeys(candidate_set.candidates, 0)
    for t in db.transactions:
        if len(t) < k:
            continue
        for sub in combinations(t, k):
            if sub in counts:
                counts[sub] += 1
    return [FrequentItemset(c, n) for c, n in counts.items() if n >= threshold]


def mine_levels(db: TransactionDb, singletons: Sequence[FrequentItemset],
                threshold: int, max_itemset_size: int | None = None,
                ) -> tuple[list[FrequentItemset], int]:
    """Grow levels 2.. from ``singletons``; returns (all frequents, peak candidates).

    The peak is the largest candidate table built at any level, the
    benchmark-visible cost of candidate generation.
    """
    result = list(singletons)
    level = list(singletons)
    size = 1
    peak_candidates = 0
    while level and (max_itemset_size is None or size < max_itemset_size):
        candidate_set = candidate_gen(level)
        peak_candidates = max(peak_candidates, len(candidate_set.candidates))
        level = count_level(db, candidate_set, threshold)
        result.extend(level)
        size += 1
    result.sort(key=lambda f: (len(f.itemset), f.itemset))
    return result, peak_candidates


def apriori_mine(db: TransactionDb, params: MiningParams) -> list[FrequentItemset]:
    """All itemsets with count >= ceil(min_support * N), sorted by (size, ids)."""
    if db.n == 0:
        raise EmptyInputError("cannot mine an empty transaction database")
    threshold = params.absolute_threshold(db.n)
    singletons = frequent_singletons(db, threshold)
    result, _ = mine_levels(db, singletons, threshold, params.max_itemset_size)
    return result
