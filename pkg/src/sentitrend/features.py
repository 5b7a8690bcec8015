"""Vocabulary, bag-of-words and TF-IDF term ranking."""
from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError, DataError


def _tokens(doc) -> Sequence[str]:
    # accepts Document objects or bare token lists
    return getattr(doc, "tokens", doc)


@dataclass(frozen=True)
class Vocabulary:
    index_to_word: tuple
    doc_freq: tuple
    total_docs: int
    min_count: int = 1

    def __post_init__(self):
        object.__setattr__(self, "word_to_index",
                           {w: i for i, w in enumerate(self.index_to_word)})
        if len(self.word_to_index) != len(self.index_to_word):
            raise DataError("vocabulary words must be unique")

    def __len__(self) -> int:
        return len(self.index_to_word)

    def __contains__(self, word: str) -> bool:
        return word in self.word_to_index

    def index(self, word: str) -> int:
        return self.word_to_index[word]

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Vocabulary":
        """Fixed vocabulary without corpus statistics (df all zero)."""
        words = tuple(words)
        return cls(words, (0,) * len(words), 0, 1)


def build_vocabulary(docs: Iterable, min_count: int = 1) -> Vocabulary:
    """Words with document frequency >= ``min_count``.

    Index order is descending document frequency, ties lexicographic.
    Empty documents are ignored and do not count toward ``total_docs``.
    """
    if min_count < 1:
        raise ConfigError("min_count must be >= 1")
    df: Counter = Counter()
    n_docs = 0
    for doc in docs:
        toks = _tokens(doc)
        if not toks:
            continue
        n_docs += 1
        df.update(set(toks))
    if n_docs == 0:
        raise DataError("no non-empty documents to build a vocabulary from")
    kept = sorted(((w, c) for w, c in df.items() if c >= min_count),
                  key=lambda wc: (-wc[1], wc[0]))
    if not kept:
        raise DataError(f"empty vocabulary: no word reaches min_count={min_count}")
    return Vocabulary(tuple(w for w, _ in kept), tuple(c for _, c in kept),
                      n_docs, min_count)


@dataclass(frozen=True)
class SparseVector:
    indices: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.indices)

    def dot(self, dense: np.ndarray) -> float:
        return float(dense[self.indices] @ self.weights)

    def to_dict(self, vocab: Vocabulary | None = None) -> dict:
        if vocab is None:
            return {int(i): float(w) for i, w in zip(self.indices, self.weights)}
        return {vocab.index_to_word[i]: float(w) for i, w in zip(self.indices, self.weights)}


def to_bow(doc, vocab: Vocabulary) -> SparseVector:
    counts = Counter(vocab.word_to_index[t] for t in _tokens(doc) if t in vocab.word_to_index)
    idx = np.array(sorted(counts), dtype=np.int64)
    vals = np.array([counts[i] for i in idx], dtype=np.float64)
    return SparseVector(idx, vals)


@dataclass(frozen=True)
class EncodedCorpus:
    """Documents as concatenated vocabulary ids with CSR-style offsets.

    OOV tokens are dropped; token order inside each document is kept.
    """

    token_ids: np.ndarray
    offsets: np.ndarray
    vocab: Vocabulary

    @property
    def n_docs(self) -> int:
        return len(self.offsets) - 1

    def doc(self, d: int) -> np.ndarray:
        return self.token_ids[self.offsets[d]:self.offsets[d + 1]]

    def doc_lengths(self) -> np.ndarray:
        return np.diff(self.offsets)

    def count_matrix_rows(self):
        """(doc index per token, token id) pairs for scatter-add counting."""
        return np.repeat(np.arange(self.n_docs), self.doc_lengths()), self.token_ids


def encode(docs: Iterable, vocab: Vocabulary) -> EncodedCorpus:
    w2i = vocab.word_to_index
    ids: list[int] = []
    offsets = [0]
    for doc in docs:
        ids.extend(w2i[t] for t in _tokens(doc) if t in w2i)
        offsets.append(len(ids))
    return EncodedCorpus(np.asarray(ids, dtype=np.int64),
                         np.asarray(offsets, dtype=np.int64), vocab)


def idf(vocab: Vocabulary) -> np.ndarray:
    """Smoothed idf: ln((1 + N) / (1 + df)) + 1, never below 1."""
    df = np.asarray(vocab.doc_freq, dtype=np.float64)
    return np.log((1.0 + vocab.total_docs) / (1.0 + df)) + 1.0


def tfidf_scores(docs: Iterable, vocab: Vocabulary) -> np.ndarray:
    """Corpus score per word: sum over documents of raw tf times idf."""
    enc = encode(docs, vocab)
    totals = np.bincount(enc.token_ids, minlength=len(vocab)).astype(np.float64)
    return totals * idf(vocab)


def tfidf_rank(docs: Iterable, vocab: Vocabulary, k: int = 20) -> list[tuple[str, float]]:
    if k < 1:
        raise ConfigError("k must be >= 1")
    scores = tfidf_scores(docs, vocab)
    order = sorted(range(len(vocab)), key=lambda i: (-scores[i], vocab.index_to_word[i]))
    return [(vocab.index_to_word[i], float(scores[i])) for i in order[:k] if scores[i] > 0]


def write_terms_csv(ranked: Sequence[tuple[str, float]], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["rank", "word", "score"])
    for rank, (word, score) in enumerate(ranked, 1):
        writer.writerow([rank, word, f"{score:.6f}"])


def rank_terms_streaming(token_lists: Iterable[Sequence[str]], k: int = 20) -> list[tuple[str, float]]:
    """Same ranking as :func:`tfidf_rank` with ``min_count=1``, in one pass and
    without holding the documents, for ranking over a full dataset."""
    if k < 1:
        raise ConfigError("k must be >= 1")
    df: Counter = Counter()
    tf: Counter = Counter()
    n_docs = 0
    for toks in token_lists:
        if not toks:
            continue
        n_docs += 1
        tf.update(toks)
        df.update(set(toks))
    if n_docs == 0:
        raise DataError("no non-empty documents to rank terms over")
    words = sorted(tf)
    dfs = np.array([df[w] for w in words], dtype=np.float64)
    scores = np.array([tf[w] for w in words], dtype=np.float64) * (
        np.log((1.0 + n_docs) / (1.0 + dfs)) + 1.0)
    order = sorted(range(len(words)), key=lambda i: (-scores[i], words[i]))[:k]
    return [(words[i], float(scores[i])) for i in order]
