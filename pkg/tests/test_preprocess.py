import re

import pytest
from hypothesis import given, strategies as st

from sentitrend.corpus import SentimentLabel, TweetRecord
from sentitrend.errors import ConfigError
from sentitrend.preprocess import (LengthCategory, Preprocessor, StopwordList, Thresholds,
                                   categorize, normalize_text, preprocess_records,
                                   tokenize_and_filter)

VS, S, M, L = (LengthCategory.VERY_SHORT, LengthCategory.SHORT,
               LengthCategory.MEDIUM, LengthCategory.LONG)


@pytest.mark.parametrize("raw,expected", [
    ("@jim I LOVE this http://t.co/x #car2020 :) 99", "i love this car"),
    ("", ""),
    ("Plain words only", "plain words only"),
    ("see www.example.com/x NOW", "see now"),
    ("HTTPS://A.B/c done", "done"),
    ("don't   stop\tme", "dont stop me"),
    ("#Tesla rocks", "tesla rocks"),
])
def test_normalize_examples(raw, expected):
    assert normalize_text(raw) == expected


def test_drop_hashtags_flag():
    assert normalize_text("love #car2020 wash", drop_hashtags=True) == "love wash"


@given(st.text(max_size=80))
def test_normalize_idempotent_and_charset(raw):
    once = normalize_text(raw)
    assert re.fullmatch(r"[a-z ]*", once)
    assert normalize_text(once) == once
    assert once == once.strip() and "  " not in once


def test_default_stopwords():
    sw = StopwordList.default()
    assert 150 <= len(sw) <= 200
    assert "i" in sw and "this" in sw and "car" not in sw
    assert all(w.isalpha() and w == w.lower() for w in sw.words)


def test_stopword_list_rejects_empty_and_uppercase():
    with pytest.raises(ConfigError):
        StopwordList(frozenset())
    with pytest.raises(ConfigError):
        StopwordList(frozenset({"The"}))


def test_tokenize_examples():
    sw = StopwordList(frozenset({"i", "this"}))
    assert tokenize_and_filter("i love this car", sw) == ["love", "car"]
    assert tokenize_and_filter("a b", sw) == []
    assert tokenize_and_filter("car car wash", sw) == ["car", "car", "wash"]


@given(st.text(alphabet="abcdeij ", max_size=60))
def test_tokens_never_stopwords_or_short(text):
    sw = StopwordList(frozenset({"ab", "cd"}))
    toks = tokenize_and_filter(normalize_text(text), sw)
    assert all(len(t) >= 2 and t not in sw for t in toks)


@pytest.mark.parametrize("chars,words,expected", [
    (30, 4, (VS, VS)), (100, 15, (M, M)), (140, 25, (L, L)),
    (40, 5, (VS, VS)), (41, 6, (S, S)), (80, 12, (S, S)), (81, 13, (M, M)),
    (120, 20, (M, M)), (121, 21, (L, L)), (0, 0, (VS, VS)),
])
def test_categorize_boundaries(chars, words, expected):
    assert categorize(chars, words) == expected


@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_categories_partition(chars, words):
    th = Thresholds()
    c, w = categorize(chars, words, th)
    levels = list(LengthCategory)
    bounds = [-1, *th.chars, float("inf")]
    i = levels.index(c)
    assert bounds[i] < chars <= bounds[i + 1]


@pytest.mark.parametrize("chars", [(40, 40, 120), (80, 40, 120), (1, 2)])
def test_thresholds_misordered(chars):
    with pytest.raises(ConfigError):
        Thresholds(chars=chars)


def test_thresholds_configurable():
    th = Thresholds(chars=(10, 20, 30), words=(1, 2, 3))
    assert categorize(25, 2, th) == (M, S)


def test_document_from_record():
    rec = TweetRecord(SentimentLabel.NEGATIVE, 3, None, "u", "@bob I hate this CAR!!  so much")
    doc = Preprocessor(StopwordList.default())(rec)
    assert doc.tokens == ("hate", "car", "much")
    assert doc.raw_char_len == len(rec.raw_text)
    assert doc.raw_word_count == 7
    assert doc.length_category is VS and doc.word_count_category is S
    assert doc.label is SentimentLabel.NEGATIVE and doc.timestamp is None


def test_empty_token_documents_are_kept():
    recs = [TweetRecord(SentimentLabel.POSITIVE, 1, None, "u", "@bob http://x.y 123")]
    docs = preprocess_records(recs)
    assert len(docs) == 1 and docs[0].tokens == ()


def test_keep_stopwords_mode():
    recs = [TweetRecord(SentimentLabel.POSITIVE, 1, None, "u", "the car and you")]
    assert preprocess_records(recs, keep_stopwords=True)[0].tokens == ("the", "car", "and", "you")
    assert preprocess_records(recs)[0].tokens == ("car",)
