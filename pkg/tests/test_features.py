import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sentitrend.errors import ConfigError, DataError
from sentitrend.features import (build_vocabulary, encode, idf, rank_terms_streaming,
                                 tfidf_rank, tfidf_scores, to_bow)

words = st.sampled_from(["car", "wash", "crash", "drive", "keys", "road"])
corpora = st.lists(st.lists(words, max_size=6), min_size=1, max_size=12).filter(
    lambda docs: any(docs))


def test_vocabulary_example():
    vocab = build_vocabulary([["car", "wash"], ["car"]], 1)
    assert vocab.index_to_word == ("car", "wash")
    assert vocab.doc_freq == (2, 1)
    assert vocab.index("car") == 0 and vocab.total_docs == 2
    assert build_vocabulary([["car", "wash"], ["car"]], 2).index_to_word == ("car",)
    with pytest.raises(DataError):
        build_vocabulary([["x"]], 2)


def test_vocabulary_tie_break_lexicographic():
    vocab = build_vocabulary([["zeta", "alpha", "mid"]], 1)
    assert vocab.index_to_word == ("alpha", "mid", "zeta")


@given(corpora, st.integers(1, 3))
def test_vocabulary_invariants(docs, min_count):
    try:
        vocab = build_vocabulary(docs, min_count)
    except DataError:
        return
    assert sorted(vocab.word_to_index.values()) == list(range(len(vocab)))
    assert all(vocab.index_to_word[i] == w for w, i in vocab.word_to_index.items())
    assert all(min_count <= df <= vocab.total_docs for df in vocab.doc_freq)
    assert build_vocabulary(docs, min_count) == vocab


def test_to_bow_examples():
    vocab = build_vocabulary([["car", "wash"], ["car"]], 1)
    assert to_bow(["car", "car", "wash"], vocab).to_dict(vocab) == {"car": 2.0, "wash": 1.0}
    assert len(to_bow(["unknown"], vocab)) == 0
    assert len(to_bow([], vocab)) == 0


@given(corpora)
def test_bow_sums_to_in_vocab_count(docs):
    vocab = build_vocabulary(docs, 1)
    for d in docs:
        v = to_bow(d, vocab)
        assert v.weights.sum() == sum(1 for t in d if t in vocab)
        assert np.all(np.diff(v.indices) > 0) and np.all(v.weights != 0)


def test_tfidf_hand_example():
    docs = [["car", "wash"], ["car", "crash"], ["wash"]]
    vocab = build_vocabulary(docs, 1)
    idf_common = math.log(4 / 3) + 1
    idf_crash = math.log(2) + 1
    assert idf_common == pytest.approx(1.2877, abs=1e-4)
    assert idf_crash == pytest.approx(1.6931, abs=1e-4)
    ranked = tfidf_rank(docs, vocab, 3)
    assert [w for w, _ in ranked] == ["car", "wash", "crash"]
    assert ranked[0][1] == pytest.approx(2 * idf_common)
    assert ranked[1][1] == pytest.approx(2 * idf_common)
    assert ranked[2][1] == pytest.approx(idf_crash)
    assert [w for w, _ in tfidf_rank(docs, vocab, 2)] == ["car", "wash"]


def test_tfidf_single_doc_and_k():
    vocab = build_vocabulary([["car"]], 1)
    assert tfidf_rank([["car"]], vocab, 5) == [("car", 1.0)]
    with pytest.raises(ConfigError):
        tfidf_rank([["car"]], vocab, 0)


@given(corpora)
def test_tfidf_matches_per_document_sum(docs):
    vocab = build_vocabulary(docs, 1)
    n = vocab.total_docs
    brute = {}
    for d in docs:
        if not d:
            continue
        for t in set(d):
            df = sum(1 for e in docs if t in e)
            brute[t] = brute.get(t, 0.0) + d.count(t) * (math.log((1 + n) / (1 + df)) + 1)
    scores = tfidf_scores(docs, vocab)
    for w, s in brute.items():
        assert scores[vocab.index(w)] == pytest.approx(s)
    assert rank_terms_streaming(docs, 50) == pytest.approx(tfidf_rank(docs, vocab, 50))
    assert [w for w, _ in rank_terms_streaming(docs, 50)] == [w for w, _ in tfidf_rank(docs, vocab, 50)]


@given(corpora)
def test_idf_properties(docs):
    vocab = build_vocabulary(docs, 1)
    values = idf(vocab)
    assert np.all(values >= 1.0)
    order = np.argsort(vocab.doc_freq, kind="stable")
    assert np.all(np.diff(values[order]) <= 1e-12)
    for i, df in enumerate(vocab.doc_freq):
        if df == vocab.total_docs:
            assert values[i] == pytest.approx(values.min())


def test_encode_drops_oov_and_keeps_order():
    vocab = build_vocabulary([["car", "wash"]], 1)
    enc = encode([["wash", "zzz", "car"], [], ["car"]], vocab)
    assert enc.n_docs == 3
    assert [list(enc.doc(d)) for d in range(3)] == [[vocab.index("wash"), vocab.index("car")], [], [0]]
