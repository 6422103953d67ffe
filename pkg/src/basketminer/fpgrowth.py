"""Candidate-generation-free mining via a frequency-ordered prefix tree.

Transactions are filtered to frequent items, reordered by descending
item frequency (ties broken by ascending item id), and inserted into a
prefix tree whose shared prefixes merge with accumulated counts. A
header table chains all nodes of each item, enabling conditional
pattern-base extraction. Mining recurses over conditional trees; a
single-path tree short-circuits into direct subset enumeration.

Output is count-for-count identical to the Apriori engine.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterator, Sequence

from .core import (
    ContractViolationError,
    EmptyInputError,
    FrequentItemset,
    ItemSet,
    MiningParams,
    TransactionDb,
)

ROOT_ITEM = -1

# (items, weight) rows: a plain transaction has weight 1, a conditional
# pattern-base path carries the count of the node it was lifted from.
WeightedRow = tuple[Sequence[int], int]


class FpNode:
    """One prefix-tree node; ``next_same_item`` threads the header chain."""

    __slots__ = ("item", "count", "parent", "children", "next_same_item")

    def __init__(self, item: int, parent: "FpNode | None"):
        self.item = item
        self.count = 0
        self.parent = parent
        self.children: dict[int, FpNode] = {}
        self.next_same_item: FpNode | None = None

    def __repr__(self) -> str:
        return f"FpNode(item={self.item}, count={self.count})"


class HeaderEntry:
    """Header-table row: item id, its total count, and the chain head."""

    __slots__ = ("item", "total", "head")

    def __init__(self, item: int, total: int):
        self.item = item
        self.total = total
        self.head: FpNode | None = None

    def chain(self) -> Iterator[FpNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.next_same_item


class FpTree:
    """Prefix tree plus header table, pinned to the threshold it was built with."""

    def __init__(self, threshold: int, n_transactions: int):
        self.root = FpNode(ROOT_ITEM, None)
        self.header: list[HeaderEntry] = []
        self.threshold = threshold
        self.n_transactions = n_transactions

    @property
    def node_count(self) -> int:
        """Total nodes including the root."""
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(node.children.values())
        return count

    def single_path(self) -> list[FpNode] | None:
        """The root-to-leaf node list if the tree is one path, else None."""
        path = []
        node = self.root
        while node.children:
            if len(node.children) > 1:
                return None
            (node,) = node.children.values()
            path.append(node)
        return path

    def _insert(self, items: Sequence[int], weight: int,
                entries: dict[int, HeaderEntry]) -> None:
        node = self.root
        for item in items:
            child = node.children.get(item)
            if child is None:
                child = FpNode(item, node)
                node.children[item] = child
                entry = entries[item]
                child.next_same_item = entry.head
                entry.head = child
            child.count += weight
            node = child


def _build_tree(rows: Sequence[WeightedRow], threshold: int,
                n_transactions: int) -> FpTree:
    totals: Counter[int] = Counter()
    for items, weight in rows:
        for item in items:
            totals[item] += weight
    kept = [item for item, total in totals.items() if total >= threshold]
    kept.sort(key=lambda item: (-totals[item], item))
    rank = {item: position for position, item in enumerate(kept)}

    tree = FpTree(threshold, n_transactions)
    tree.header = [HeaderEntry(item, totals[item]) for item in kept]
    entries = {entry.item: entry for entry in tree.header}
    for items, weight in rows:
        path = sorted((i for i in items if i in rank), key=rank.__getitem__)
        if path:
            tree._insert(path, weight, entries)
    return tree


def build_fp_tree(db: TransactionDb, threshold: int) -> FpTree:
    """First pass drops items below ``threshold``; second pass inserts
    each transaction's surviving items in header order."""
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    return _build_tree([(t, 1) for t in db.transactions], threshold, db.n)


def _pattern_base(entry: HeaderEntry) -> list[WeightedRow]:
    rows: list[WeightedRow] = []
    for node in entry.chain():
        path = []
        parent = node.parent
        while parent is not None and parent.item != ROOT_ITEM:
            path.append(parent.item)
            parent = parent.parent
        if path:
            rows.append((path, node.count))
    return rows


def _mine(tree: FpTree, suffix: ItemSet, threshold: int,
          max_size: int | None, out: list[FrequentItemset]) -> None:
    path = tree.single_path()
    if path is not None:
        budget = None if max_size is None else max_size - len(suffix)
        limit = len(path) if budget is None else min(len(path), budget)
        for r in range(1, limit + 1):
            for combo in combinations(path, r):
                items = tuple(sorted(suffix + tuple(n.item for n in combo)))
                out.append(FrequentItemset(items, min(n.count for n in combo)))
        return
    # Least-frequent items first: their conditional trees are smallest.
    for entry in reversed(tree.header):
        extended = tuple(sorted(suffix + (entry.item,)))
        out.append(FrequentItemset(extended, entry.total))
        if max_size is not None and len(extended) >= max_size:
            continue
        base = _pattern_base(entry)
        if not base:
            continue
        conditional = _build_tree(base, threshold, tree.n_transactions)
        if conditional.header:
            _mine(conditional, extended, threshold, max_size, out)


def fp_growth_mine(tree: FpTree, threshold: int,
                   params: MiningParams) -> list[FrequentItemset]:
    """Mine the tree; result contract identical to ``apriori_mine``.

    ``threshold`` must equal the threshold the tree was built with.
    """
    if threshold != tree.threshold:
        raise ContractViolationError(
            f"tree was built with threshold {tree.threshold}, "
            f"cannot mine with {threshold}")
    result: list[FrequentItemset] = []
    _mine(tree, (), threshold, params.max_itemset_size, result)
    result.sort(key=lambda f: (len(f.itemset), f.itemset))
    return result


def mine(db: TransactionDb, params: MiningParams) -> list[FrequentItemset]:
    """Build-and-mine convenience wrapper over the two-phase operations."""
    if db.n == 0:
        raise EmptyInputError("cannot mine an empty transaction database")
    threshold = params.absolute_threshold(db.n)
    tree = build_fp_tree(db, threshold)
    return fp_growth_mine(tree, threshold, params)
