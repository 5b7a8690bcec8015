"""Skip-gram word embeddings trained with negative sampling."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

from ..errors import ConfigError, DataError
from ..features import Vocabulary, build_vocabulary, encode


@dataclass(frozen=True)
class SgnsConfig:
    dim: int = 100
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    alpha: float = 0.025
    min_alpha: float = 1e-4
    min_count: int = 5
    seed: int = 42
    sample: float = 0.0     # frequent-word subsampling threshold, 0 disables
    ns_exponent: float = 0.75

    def __post_init__(self):
        if self.dim < 1 or self.window < 1 or self.negatives < 0 or self.epochs < 1:
            raise ConfigError(f"invalid SGNS configuration: {self}")
        if not 0 < self.min_alpha <= self.alpha:
            raise ConfigError("need 0 < min_alpha <= alpha")
        if self.sample < 0:
            raise ConfigError("sample must be >= 0")


@dataclass(frozen=True)
class EmbeddingMatrix:
    vocab: Vocabulary
    input_vectors: np.ndarray
    output_vectors: np.ndarray
    config: SgnsConfig

    @property
    def dim(self) -> int:
        return self.input_vectors.shape[1]

    def vector(self, word: str) -> np.ndarray:
        return self.input_vectors[self.vocab.index(word)]

    def config_dict(self) -> dict:
        return asdict(self.config)


# objective for a single (center, context, negatives) group, numpy reference

def log_sigmoid(x):
    return -np.logaddexp(0.0, -x)


def pair_loss(v_center: np.ndarray, u_context: np.ndarray, u_negatives: np.ndarray) -> float:
    """-log s(u_ctx . v) - sum_i log s(-u_neg_i . v)."""
    return float(-log_sigmoid(u_context @ v_center) - log_sigmoid(-(u_negatives @ v_center)).sum())


def pair_gradients(v_center, u_context, u_negatives):
    """Analytic gradients of :func:`pair_loss` w.r.t. center, context and negatives."""
    s_pos = 1.0 / (1.0 + np.exp(-(u_context @ v_center)))
    s_neg = 1.0 / (1.0 + np.exp(-(u_negatives @ v_center)))
    g_center = -(1.0 - s_pos) * u_context + s_neg @ u_negatives
    g_context = -(1.0 - s_pos) * v_center
    g_negatives = s_neg[:, None] * v_center[None, :]
    return g_center, g_context, g_negatives


@njit(cache=True)
def _seed_numba(seed):
    np.random.seed(seed)


@njit(cache=True)
def _group_update(w_in, w_out, center, targets, labels, lr, work):
    # one ascent step on log s(u_t . v) for label 1 and log s(-u_t . v) for label 0
    d = w_in.shape[1]
    for k in range(d):
        work[k] = 0.0
    for j in range(targets.shape[0]):
        t = targets[j]
        f = 0.0
        for k in range(d):
            f += w_out[t, k] * w_in[center, k]
        g = (labels[j] - 1.0 / (1.0 + np.exp(-f))) * lr
        for k in range(d):
            work[k] += g * w_out[t, k]
            w_out[t, k] += g * w_in[center, k]
    for k in range(d):
        w_in[center, k] += work[k]


@njit(cache=True)
def _train_epoch(w_in, w_out, tokens, offsets, cum_table, window, negatives,
                 lr_start, lr_end, pairs_done, total_pairs):
    work = np.zeros(w_in.shape[1])
    targets = np.empty(negatives + 1, dtype=np.int64)
    labels = np.empty(negatives + 1)
    for s in range(offsets.shape[0] - 1):
        a = offsets[s]
        b = offsets[s + 1]
        for i in range(a, b):
            center = tokens[i]
            lo = max(a, i - window)
            hi = min(b, i + window + 1)
            for j in range(lo, hi):
                if j == i:
                    continue
                lr = lr_start - (lr_start - lr_end) * pairs_done / total_pairs
                ctx = tokens[j]
                targets[0] = ctx
                labels[0] = 1.0
                n = 1
                for _ in range(negatives):
                    neg = np.searchsorted(cum_table, np.random.random(), side="right")
                    # a draw equal to the true context is dropped, as in word2vec
                    if neg == ctx:
                        continue
                    targets[n] = neg
                    labels[n] = 0.0
                    n += 1
                _group_update(w_in, w_out, center, targets[:n], labels[:n], lr, work)
                pairs_done += 1
    return pairs_done


def count_pairs(offsets: np.ndarray, window: int) -> int:
    """Number of (center, context) pairs a full pass produces."""
    lengths = np.diff(offsets)
    # each position i < L pairs with min(i, w) words on the left and as many on the right
    m = np.minimum(lengths, window + 1)
    left = m * (m - 1) // 2 + np.maximum(lengths - m, 0) * window
    return int(2 * left.sum())


def noise_table(counts: np.ndarray, exponent: float) -> np.ndarray:
    weights = counts.astype(np.float64) ** exponent
    cum = np.cumsum(weights / weights.sum())
    cum[-1] = 1.0
    return cum


def _subsample(tokens, offsets, counts, threshold, rng):
    freq = counts / counts.sum()
    with np.errstate(divide="ignore"):
        keep_p = np.minimum(1.0, (np.sqrt(freq / threshold) + 1.0) * threshold / freq)
    keep = rng.random(len(tokens)) < keep_p[tokens]
    lengths = np.diff(offsets)
    doc_of = np.repeat(np.arange(len(lengths)), lengths)
    kept = np.bincount(doc_of[keep], minlength=len(lengths))
    return tokens[keep], np.concatenate([[0], np.cumsum(kept)]).astype(np.int64)


def train_sgns(docs: Iterable, config: SgnsConfig = SgnsConfig(),
               vocab: Vocabulary | None = None) -> EmbeddingMatrix:
    """Train input/output vectors with skip-gram negative sampling.

    Every pair within a fixed symmetric window is used; the learning rate
    falls linearly from ``alpha`` to ``min_alpha`` across all pairs of all
    epochs. Input vectors start uniform in [-0.5/d, 0.5/d], output vectors
    at zero; a fixed seed reproduces the matrices exactly.
    """
    docs = [d for d in docs if getattr(d, "tokens", d)]
    if vocab is None:
        if not docs:
            raise DataError("no non-empty documents for embedding training")
        vocab = build_vocabulary(docs, config.min_count)
    if len(vocab) == 0:
        raise DataError("empty vocabulary")
    enc = encode(docs, vocab)
    counts = np.bincount(enc.token_ids, minlength=len(vocab)).astype(np.float64)
    if counts.sum() == 0:
        raise DataError("no in-vocabulary tokens for embedding training")
    cum = noise_table(np.maximum(counts, 1e-12), config.ns_exponent)

    rng = np.random.default_rng(config.seed)
    d = config.dim
    w_in = rng.uniform(-0.5 / d, 0.5 / d, size=(len(vocab), d))
    w_out = np.zeros((len(vocab), d))

    passes = []
    for _ in range(config.epochs):
        if config.sample > 0:
            passes.append(_subsample(enc.token_ids, enc.offsets, counts, config.sample, rng))
        else:
            passes.append((enc.token_ids, enc.offsets))
    total = sum(count_pairs(off, config.window) for _, off in passes)
    _seed_numba(config.seed)
    done = 0
    for tokens, offsets in passes:
        if total == 0:
            break
        done = _train_epoch(w_in, w_out, tokens, offsets, cum, config.window,
                            config.negatives, config.alpha, config.min_alpha, done, total)
    if not (np.isfinite(w_in).all() and np.isfinite(w_out).all()):
        raise DataError("embedding training diverged (non-finite values)")
    return EmbeddingMatrix(vocab, w_in, w_out, config)


def _unit_rows(m: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(m, axis=1, keepdims=True)
    return np.divide(m, norms, out=np.zeros_like(m), where=norms > 0)


def cosine(emb: EmbeddingMatrix, a: str, b: str) -> float:
    va, vb = emb.vector(a), emb.vector(b)
    denom = np.linalg.norm(va) * np.linalg.norm(vb)
    if denom == 0:
        return 0.0
    return float(np.clip(va @ vb / denom, -1.0, 1.0))


def most_similar(emb: EmbeddingMatrix, word: str, k: int = 10) -> list[tuple[str, float]]:
    if word not in emb.vocab:
        raise DataError(f"word {word!r} is not in the embedding vocabulary")
    if k < 1:
        raise ConfigError("k must be >= 1")
    unit = _unit_rows(emb.input_vectors)
    q = emb.vocab.index(word)
    sims = np.clip(unit @ unit[q], -1.0, 1.0)
    words = emb.vocab.index_to_word
    order = sorted((i for i in range(len(words)) if i != q), key=lambda i: (-sims[i], words[i]))
    return [(words[i], float(sims[i])) for i in order[:k]]


def save_text(emb: EmbeddingMatrix, out) -> None:
    """word2vec text layout: a "|V| d" line, then one "word v1 .. vd" line per word."""
    out.write(f"{len(emb.vocab)} {emb.dim}\n")
    for word, row in zip(emb.vocab.index_to_word, emb.input_vectors):
        out.write(word + " " + " ".join(f"{x:.6f}" for x in row) + "\n")


def load_text(lines: Sequence[str]) -> tuple[list[str], np.ndarray]:
    it = iter(lines)
    n, d = (int(x) for x in next(it).split())
    words, rows = [], []
    for line in it:
        parts = line.split()
        if not parts:
            continue
        words.append(parts[0])
        rows.append([float(x) for x in parts[1:]])
    mat = np.asarray(rows, dtype=np.float64).reshape(len(rows), d)
    if len(words) != n:
        raise DataError(f"header announces {n} words, found {len(words)}")
    return words, mat
