"""Frequent-itemset and association-rule mining over market-basket data.

Three interchangeable engines (Apriori, FP-Growth, and a brute-force
oracle for small universes) mine the same frequent itemsets from the
same transactions; rules are scored with exact rational support and
confidence. See the ``basketminer`` CLI for file-based use.
"""

from .apriori import apriori_mine
from .bench import BenchmarkReport, EngineDisagreementError, EngineRun, benchmark
from .core import (
    AssociationRule,
    ConfigError,
    ContractViolationError,
    DomainError,
    EmptyInputError,
    FrequentItemset,
    GuardError,
    IngestionError,
    InternalConsistencyError,
    Item,
    ItemDictionary,
    ItemSet,
    MiningError,
    MiningParams,
    TransactionDb,
    filter_min_items,
    ingest_basket,
    ingest_tid_pairs,
    itemset,
    support_count,
    to_basket_lines,
    to_basket_text,
)
from .fpgrowth import FpTree, build_fp_tree, fp_growth_mine
from .fpgrowth import mine as fpgrowth_mine
from .oracle import GeneratorConfig, brute_force_mine, generate_db
from .rules import RuleSet, format_percent, generate_rules, percent

__version__ = "0.1.0"

__all__ = [
    "AssociationRule",
    "BenchmarkReport",
    "ConfigError",
    "ContractViolationError",
    "DomainError",
    "EmptyInputError",
    "EngineDisagreementError",
    "EngineRun",
    "FpTree",
    "FrequentItemset",
    "GeneratorConfig",
    "GuardError",
    "IngestionError",
    "InternalConsistencyError",
    "Item",
    "ItemDictionary",
    "ItemSet",
    "MiningError",
    "MiningParams",
    "RuleSet",
    "TransactionDb",
    "apriori_mine",
    "benchmark",
    "brute_force_mine",
    "build_fp_tree",
    "filter_min_items",
    "format_percent",
    "fp_growth_mine",
    "fpgrowth_mine",
    "generate_db",
    "generate_rules",
    "ingest_basket",
    "ingest_tid_pairs",
    "itemset",
    "percent",
    "support_count",
    "to_basket_lines",
    "to_basket_text",
]
