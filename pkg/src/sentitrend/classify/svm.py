"""Linear SVM trained in the primal with Pegasos stochastic subgradient steps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from ..corpus import SentimentLabel
from ..errors import ConfigError, DataError
from ..features import EncodedCorpus, Vocabulary, encode


@dataclass(frozen=True)
class SvmModel:
    weights: np.ndarray
    bias: float
    lam: float
    epochs: int
    seed: int
    vocab: Vocabulary

    def decision(self, doc) -> float:
        w2i = self.vocab.word_to_index
        tokens = getattr(doc, "tokens", doc)
        total = self.bias
        for t in tokens:
            i = w2i.get(t)
            if i is not None:
                total += self.weights[i]
        return float(total)

    def predict(self, doc) -> tuple[SentimentLabel, float]:
        f = self.decision(doc)
        label = SentimentLabel.POSITIVE if f > 0 else SentimentLabel.NEGATIVE
        return label, abs(f)


def _csr(enc: EncodedCorpus):
    """Per-document unique ids with counts, CSR layout."""
    indptr = [0]
    indices, data = [], []
    for d in range(enc.n_docs):
        ids, counts = np.unique(enc.doc(d), return_counts=True)
        indices.append(ids)
        data.append(counts.astype(np.float64))
        indptr.append(indptr[-1] + len(ids))
    cat_i = np.concatenate(indices) if indices else np.zeros(0, np.int64)
    cat_d = np.concatenate(data) if data else np.zeros(0)
    return np.asarray(indptr, dtype=np.int64), cat_i.astype(np.int64), cat_d


@njit(cache=True)
def _pegasos_epoch(indptr, indices, data, y, order, lam, v, scale, t):
    # w = scale * v; slot v[-1] is the bias, treated as a constant feature of 1
    bias_slot = v.shape[0] - 1
    for n in range(order.shape[0]):
        i = order[n]
        t += 1
        eta = 1.0 / (lam * t)
        margin = v[bias_slot]
        for p in range(indptr[i], indptr[i + 1]):
            margin += v[indices[p]] * data[p]
        margin *= scale * y[i]
        if t == 1:
            v[:] = 0.0
            scale = 1.0
        else:
            scale *= 1.0 - 1.0 / t
        if margin < 1.0:
            step = eta * y[i] / scale
            for p in range(indptr[i], indptr[i + 1]):
                v[indices[p]] += step * data[p]
            v[bias_slot] += step
        if scale < 1e-9:
            v *= scale
            scale = 1.0
    return scale, t


def _targets(docs: Sequence) -> np.ndarray:
    return np.array([1.0 if d.label == SentimentLabel.POSITIVE else -1.0 for d in docs])


def train_linear_svm(train: Sequence, vocab: Vocabulary, lam: float = 1e-4,
                     epochs: int = 10, seed: int = 42) -> SvmModel:
    """Minimize lam/2 * |w|^2 + mean hinge loss over raw bag-of-words counts.

    Step size at update t is 1/(lam*t). Each epoch visits the examples in a
    fresh permutation drawn from ``numpy.random.default_rng(seed)``.
    """
    if not lam > 0:
        raise ConfigError("lambda must be > 0")
    if epochs < 1:
        raise ConfigError("epochs must be >= 1")
    if len(vocab) == 0:
        raise DataError("empty vocabulary")
    y = _targets(train)
    if not ((y > 0).any() and (y < 0).any()):
        raise DataError("both classes must be present in the training data")
    indptr, indices, data = _csr(encode(train, vocab))
    rng = np.random.default_rng(seed)
    v = np.zeros(len(vocab) + 1)
    scale, t = 1.0, 0
    for _ in range(epochs):
        order = rng.permutation(len(train)).astype(np.int64)
        scale, t = _pegasos_epoch(indptr, indices, data, y, order, float(lam), v, scale, t)
    w = v * scale
    return SvmModel(w[:-1].copy(), float(w[-1]), float(lam), int(epochs), int(seed), vocab)


def svm_objective(weights: np.ndarray, bias: float, docs: Sequence, vocab: Vocabulary,
                  lam: float) -> float:
    """lam/2 * (|w|^2 + b^2) + mean hinge loss over ``docs``."""
    indptr, indices, data = _csr(encode(docs, vocab))
    y = _targets(docs)
    hinge = 0.0
    for i in range(len(docs)):
        sl = slice(indptr[i], indptr[i + 1])
        f = float(weights[indices[sl]] @ data[sl]) + bias
        hinge += max(0.0, 1.0 - y[i] * f)
    reg = 0.5 * lam * (float(weights @ weights) + bias * bias)
    return reg + hinge / len(docs)
