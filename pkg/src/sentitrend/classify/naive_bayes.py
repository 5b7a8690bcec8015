"""Multinomial Naive Bayes with additive smoothing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..corpus import SentimentLabel
from ..errors import ConfigError, DataError
from ..features import Vocabulary, encode

CLASSES = (SentimentLabel.NEGATIVE, SentimentLabel.POSITIVE)
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class NBModel:
    class_log_prior: np.ndarray      # (2,)
    feature_log_prob: np.ndarray     # (2, |V|)
    alpha: float
    vocab: Vocabulary

    def joint_log_likelihood(self, tokens: Sequence[str]) -> np.ndarray:
        w2i = self.vocab.word_to_index
        ids = [w2i[t] for t in tokens if t in w2i]
        return self.class_log_prior + self.feature_log_prob[:, ids].sum(axis=1)

    def posterior(self, tokens: Sequence[str]) -> np.ndarray:
        jll = self.joint_log_likelihood(tokens)
        top = jll.max()
        p = np.exp(jll - top)
        return p / p.sum()

    def predict(self, doc) -> tuple[SentimentLabel, float]:
        tokens = getattr(doc, "tokens", doc)
        jll = self.joint_log_likelihood(tokens)
        # summed logs of equal products can differ in the last bits; gaps at
        # rounding scale are ties, and ties go to NEGATIVE
        tol = TIE_RTOL * max(1.0, float(np.abs(jll).max()))
        k = 1 if jll[1] - jll[0] > tol else 0
        return CLASSES[k], float(self.posterior(tokens)[k])


def train_naive_bayes(train: Sequence, vocab: Vocabulary, alpha: float = 1.0) -> NBModel:
    """P(w|c) = (count(w, c) + alpha) / (total_c + alpha * |V|); priors from doc shares."""
    if not alpha > 0:
        raise ConfigError("alpha must be > 0")
    if len(vocab) == 0:
        raise DataError("empty vocabulary")
    if not train:
        raise DataError("no training documents")
    labels = np.array([CLASSES.index(d.label) for d in train])
    n_per_class = np.bincount(labels, minlength=2)
    if (n_per_class == 0).any():
        raise DataError("both classes must be present in the training data")
    enc = encode(train, vocab)
    token_class = np.repeat(labels, enc.doc_lengths())
    counts = np.zeros((2, len(vocab)), dtype=np.float64)
    np.add.at(counts, (token_class, enc.token_ids), 1.0)
    smoothed = counts + alpha
    feature_log_prob = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    class_log_prior = np.log(n_per_class) - np.log(n_per_class.sum())
    return NBModel(class_log_prior, feature_log_prob, float(alpha), vocab)
