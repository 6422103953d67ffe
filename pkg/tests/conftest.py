from __future__ import annotations

from pathlib import Path

import pytest

from basketminer.core import TransactionDb, ingest_basket

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
BASKET_FILE = DATA_DIR / "market_baskets.basket"
PAIRS_FILE = DATA_DIR / "market_baskets_pairs.csv"


@pytest.fixture(scope="session")
def basket_path() -> Path:
    return BASKET_FILE


@pytest.fixture(scope="session")
def pairs_path() -> Path:
    return PAIRS_FILE


@pytest.fixture(scope="session")
def grocery_db() -> TransactionDb:
    """The shipped seven-transaction grocery dataset."""
    with BASKET_FILE.open(encoding="utf-8") as fh:
        return ingest_basket(fh)
