import csv
import io

import pytest
from hypothesis import given, strategies as st

from sentitrend.corpus import (FilterMode, KeywordFilter, SentimentLabel, TimestampParts,
                               TweetRecord, filter_keyword, parse_sentiment140, parse_timestamp,
                               write_sentiment140)
from sentitrend.errors import ConfigError

ROW = b'"0","1468","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","my car broke"\n'


def test_parse_negative_row():
    records, stats = parse_sentiment140(ROW)
    assert len(records) == 1
    rec = records[0]
    assert rec.label is SentimentLabel.NEGATIVE
    assert rec.tweet_id == 1468
    assert rec.timestamp.hour == 22 and rec.timestamp.weekday == "Mon"
    assert rec.raw_text == "my car broke"
    assert (stats.read, stats.emitted, stats.skipped) == (1, 1, 0)


def test_parse_positive_and_unquoted():
    records, _ = parse_sentiment140(b'4,7,Sat May 16 07:00:00 PDT 2009,NO_QUERY,amy,Love My Car!\n')
    assert records[0].label is SentimentLabel.POSITIVE
    assert records[0].raw_text == "Love My Car!"


@pytest.mark.parametrize("line,reason", [
    (b'"0","1","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob"\n', "field_count"),
    (b'"2","1","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","meh"\n', "label"),
    (b'"1","1","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","meh"\n', "label"),
    (b'"0","abc","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","meh"\n', "tweet_id"),
])
def test_bad_rows_are_skipped_and_counted(line, reason):
    records, stats = parse_sentiment140(ROW + line)
    assert len(records) == 1
    assert stats.skipped == 1 and stats.skip_reasons[reason] == 1
    assert stats.read == stats.emitted + stats.skipped


def test_bad_date_keeps_record():
    records, stats = parse_sentiment140(b'"4","9","soon","NO_QUERY","bob","car"\n')
    assert records[0].timestamp is None
    assert stats.missing_timestamp == 1 and stats.skipped == 0


def test_latin1_fallback():
    raw = '"0","5","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","caf\xe9 car"\n'.encode("latin-1")
    utf = '"4","6","Mon Apr 06 22:19:45 PDT 2009","NO_QUERY","bob","caf\xe9 car"\n'.encode("utf-8")
    records, stats = parse_sentiment140(raw + utf)
    assert [r.raw_text for r in records] == ["caf\xe9 car", "caf\xe9 car"]
    assert stats.skipped == 0


def test_parse_timestamp_examples():
    ts = parse_timestamp("Mon Apr 06 22:19:45 PDT 2009")
    assert ts == TimestampParts("Mon", "Apr", 6, 22, 19, 45, "PDT", 2009)
    ts = parse_timestamp("Sat May 16 07:00:00 PDT 2009")
    assert ts.hour == 7 and ts.weekday == "Sat"
    assert ts.format() == "Sat May 16 07:00:00 PDT 2009"


@pytest.mark.parametrize("raw", ["garbled", "", "Mon Apr 06 24:19:45 PDT 2009",
                                 "Xyz Apr 06 22:19:45 PDT 2009", "Mon Foo 06 22:19:45 PDT 2009",
                                 "Mon Apr 06 22:19 PDT 2009", "Mon Apr 32 22:19:45 PDT 2009",
                                 "Mon Apr 06 22:61:45 PDT 2009", "Mon Apr 06 22:19:45 PDT"])
def test_parse_timestamp_missing(raw):
    assert parse_timestamp(raw) is None


def _rec(text):
    return TweetRecord(SentimentLabel.NEGATIVE, 1, None, "u", text)


def test_filter_substring_and_word_modes():
    sub = KeywordFilter("car")
    word = KeywordFilter("car", FilterMode.WORD_BOUNDARY)
    assert sub.matches("My CARD is lost")
    assert not word.matches("My CARD is lost")
    assert word.matches("I love my car")
    assert word.matches("car, finally") and word.matches("(car)") and word.matches("my_car")
    assert not word.matches("scary movie")
    assert sub.matches("scary movie")


def test_keyword_is_lowercased():
    kf = KeywordFilter("  CaR ")
    assert kf.keyword == "car"
    with pytest.raises(ConfigError):
        KeywordFilter("   ")


def test_filter_preserves_order():
    recs = [_rec(t) for t in ["car one", "bike", "Car two", "scar three"]]
    out = filter_keyword(recs, KeywordFilter("car"))
    assert [r.raw_text for r in out] == ["car one", "Car two", "scar three"]


texts = st.text(alphabet=st.sampled_from(list("abcrCAR !.,_-9é")), max_size=30)


@given(st.lists(texts, max_size=20), st.sampled_from(list(FilterMode)))
def test_filter_idempotent_and_sound(items, mode):
    kf = KeywordFilter("car", mode)
    recs = [_rec(t or "x") for t in items]
    once = filter_keyword(recs, kf)
    assert filter_keyword(once, kf) == once
    for r in once:
        low = r.raw_text.lower()
        assert "car" in low
        if mode is FilterMode.WORD_BOUNDARY:
            hit = any((i == 0 or not low[i - 1].isalnum()) and
                      (i + 3 == len(low) or not low[i + 3].isalnum())
                      for i in range(len(low)) if low.startswith("car", i))
            assert hit


@given(st.lists(st.tuples(st.sampled_from(["0", "4"]), st.integers(0, 10 ** 12),
                          st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")),
                                  min_size=1, max_size=40)), max_size=10))
def test_round_trip(rows):
    buf = io.StringIO()
    csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n").writerows(
        [[lab, str(tid), "Mon Apr 06 22:19:45 PDT 2009", "NO_QUERY", "user", text]
         for lab, tid, text in rows])
    records, stats = parse_sentiment140(buf.getvalue().encode("utf-8"))
    out = io.StringIO()
    write_sentiment140(records, out)
    reparsed = list(csv.reader(io.StringIO(out.getvalue())))
    original = list(csv.reader(io.StringIO(buf.getvalue())))
    assert reparsed == original
    assert stats.read == stats.emitted + stats.skipped
