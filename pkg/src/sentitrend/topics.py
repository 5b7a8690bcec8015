"""LDA topic model fitted by collapsed Gibbs sampling."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

import numpy as np
from numba import njit

from .errors import ConfigError, DataError
from .features import EncodedCorpus, Vocabulary, build_vocabulary, encode


@njit(cache=True)
def _seed(seed):
    np.random.seed(seed)


@njit(cache=True)
def _fill_counts(tokens, doc_of, z, word_topic, n_k, n_dk):
    for i in range(tokens.shape[0]):
        k = z[i]
        word_topic[tokens[i], k] += 1
        n_k[k] += 1
        n_dk[doc_of[i], k] += 1


@njit(cache=True)
def _sweep(tokens, doc_of, z, word_topic, n_k, n_dk, alpha, beta, vbeta, cdf):
    n_topics = n_k.shape[0]
    for i in range(tokens.shape[0]):
        w = tokens[i]
        d = doc_of[i]
        k = z[i]
        word_topic[w, k] -= 1
        n_k[k] -= 1
        n_dk[d, k] -= 1
        total = 0.0
        for t in range(n_topics):
            total += (n_dk[d, t] + alpha) * (word_topic[w, t] + beta) / (n_k[t] + vbeta)
            cdf[t] = total
        u = np.random.random() * total
        k = 0
        while k < n_topics - 1 and cdf[k] <= u:
            k += 1
        z[i] = k
        word_topic[w, k] += 1
        n_k[k] += 1
        n_dk[d, k] += 1


@dataclass(frozen=True)
class LdaModel:
    n_topics: int
    alpha: float
    beta: float
    word_topic: np.ndarray      # |V| x K counts
    topic_totals: np.ndarray    # K
    doc_topic: np.ndarray       # D x K
    assignments: np.ndarray     # one topic per corpus token, corpus order
    corpus: EncodedCorpus
    iterations: int
    seed: int

    @property
    def vocab(self) -> Vocabulary:
        return self.corpus.vocab

    @property
    def n_kw(self) -> np.ndarray:
        """Topic-word counts, K x |V|."""
        return self.word_topic.T

    def phi(self) -> np.ndarray:
        """Topic-word distributions, K x |V|; each row sums to 1."""
        v = self.word_topic.shape[0]
        return (self.n_kw + self.beta) / (self.topic_totals[:, None] + v * self.beta)

    def theta(self) -> np.ndarray:
        return ((self.doc_topic + self.alpha)
                / (self.doc_topic.sum(axis=1, keepdims=True) + self.n_topics * self.alpha))


def lda_corpus(docs: Iterable, min_count: int = 5) -> EncodedCorpus:
    docs = list(docs)
    return encode(docs, build_vocabulary(docs, min_count))


def fit_lda(corpus: Union[EncodedCorpus, Iterable], n_topics: int = 4, alpha: float = 0.1,
            beta: float = 0.01, iterations: int = 1000, seed: int = 42, min_count: int = 5,
            callback: Optional[Callable[[int, LdaModel], None]] = None) -> LdaModel:
    """Fit LDA on a bag-of-words corpus.

    ``corpus`` is an :class:`EncodedCorpus` or a sequence of documents (then a
    vocabulary with ``min_count`` is built first). Assignments start uniformly
    at random; each sweep resamples every token from its full conditional.
    ``callback(sweep, model)`` runs after initialization (sweep 0) and after
    each sweep, on a live view of the counts.
    """
    if n_topics < 2:
        raise ConfigError("need at least 2 topics")
    if not (alpha > 0 and beta > 0):
        raise ConfigError("alpha and beta must be > 0")
    if iterations < 0:
        raise ConfigError("iterations must be >= 0")
    if not isinstance(corpus, EncodedCorpus):
        corpus = lda_corpus(corpus, min_count)
    if corpus.token_ids.size == 0:
        raise DataError("LDA needs at least one non-empty document")
    n_vocab = len(corpus.vocab)
    tokens = corpus.token_ids
    doc_of = np.repeat(np.arange(corpus.n_docs, dtype=np.int64), corpus.doc_lengths())

    rng = np.random.default_rng(seed)
    z = rng.integers(0, n_topics, size=tokens.size).astype(np.int64)
    word_topic = np.zeros((n_vocab, n_topics), dtype=np.int64)
    n_k = np.zeros(n_topics, dtype=np.int64)
    n_dk = np.zeros((corpus.n_docs, n_topics), dtype=np.int64)
    _fill_counts(tokens, doc_of, z, word_topic, n_k, n_dk)

    model = LdaModel(n_topics, float(alpha), float(beta), word_topic, n_k, n_dk, z,
                     corpus, int(iterations), int(seed))
    if callback is not None:
        callback(0, model)
    _seed(seed)
    cdf = np.empty(n_topics)
    vbeta = n_vocab * beta
    for sweep in range(1, iterations + 1):
        _sweep(tokens, doc_of, z, word_topic, n_k, n_dk, float(alpha), float(beta), vbeta, cdf)
        if callback is not None:
            callback(sweep, model)
    for arr in (word_topic, n_k, n_dk, z):
        arr.flags.writeable = False
    return model


def top_words(model: LdaModel, k: int = 10) -> list[list[tuple[str, float]]]:
    phi = model.phi()
    words = model.vocab.index_to_word
    out = []
    for row in phi:
        order = sorted(range(len(words)), key=lambda i: (-row[i], words[i]))[:k]
        out.append([(words[i], float(row[i])) for i in order])
    return out


def format_entry(word: str, prob: float) -> str:
    return f"{word} ({prob:.3f})"


def render_topic_table(topics: list[list[tuple[str, float]]]) -> str:
    cells = [[format_entry(w, p) for w, p in row] for row in topics]
    n_cols = max((len(r) for r in cells), default=0)
    widths = [max(len(r[c]) if c < len(r) else 0 for r in cells) for c in range(n_cols)]
    widths = [max(w, len(f"Word {c + 1}")) for c, w in enumerate(widths)]
    label_w = len(f"Topic {len(cells) - 1}")
    head = f"{'Topic':<{label_w}}  " + "  ".join(f"{f'Word {c + 1}':<{widths[c]}}" for c in range(n_cols))
    lines = [head.rstrip()]
    for t, row in enumerate(cells):
        line = f"{f'Topic {t}':<{label_w}}  " + "  ".join(f"{cell:<{widths[c]}}" for c, cell in enumerate(row))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def write_topics_csv(topics: list[list[tuple[str, float]]], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["topic", "rank", "word", "probability"])
    for t, row in enumerate(topics):
        for rank, (w, p) in enumerate(row, 1):
            writer.writerow([t, rank, w, f"{p:.6f}"])
