"""Seeded stratified train/test split."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..corpus import SentimentLabel
from ..errors import ConfigError, DataError


def split_stratified(docs: Sequence, test_fraction: float = 0.22, seed: int = 42):
    """Split per label so each class contributes round(n_c * fraction) test docs.

    Both halves keep the input order. Returns ``(train, test)`` lists.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ConfigError("test_fraction must lie in (0, 1)")
    rng = np.random.default_rng(seed)
    in_test = np.zeros(len(docs), dtype=bool)
    for label in SentimentLabel:
        members = np.array([i for i, d in enumerate(docs) if d.label == label], dtype=np.int64)
        if len(members) == 0:
            raise DataError(f"no documents with label {label.display}")
        n_test = int(math.floor(len(members) * test_fraction + 0.5))
        chosen = rng.permutation(members)[:n_test]
        in_test[chosen] = True
    train = [d for d, t in zip(docs, in_test) if not t]
    test = [d for d, t in zip(docs, in_test) if t]
    return train, test
