import pytest
from hypothesis import given, strategies as st

from helpers import NEG, POS, make_doc
from sentitrend.corpus import MONTHS, WEEKDAYS, TimestampParts
from sentitrend.errors import DataError
from sentitrend.preprocess import Document, LengthCategory
from sentitrend.trends import Axis, aggregate, ranked_buckets, summarize


def _at(hour, label, weekday="Mon", month="Apr"):
    ts = TimestampParts(weekday, month, 6, hour, 0, 0, "PDT", 2009)
    return make_doc(["x"], label, timestamp=ts)


def test_hour_counts():
    docs = [_at(7, NEG), _at(7, NEG), _at(7, POS)]
    table = aggregate(docs, Axis.HOUR)
    assert table.buckets == tuple(range(24))
    assert (table.negative[7], table.positive[7]) == (2, 1)
    assert sum(table.negative) + sum(table.positive) == 3
    assert table.residual == 0


def test_missing_timestamp_is_residual():
    table = aggregate([make_doc(["x"], NEG)], Axis.HOUR)
    assert table.total() == 0 and table.residual == 1
    # non-temporal axes still count it
    assert aggregate([make_doc(["x"], NEG)], Axis.LENGTH).total() == 1


def test_summarize_shares_and_peaks():
    docs = [_at(7, NEG), _at(7, NEG), _at(19, POS), _at(3, POS)]
    s = summarize(docs)
    assert (s.negative_share, s.positive_share) == (0.5, 0.5)
    assert s.peaks["hour"]["peak_negative"] == 7
    # tie between 3 and 19: earliest bucket wins
    assert s.peaks["hour"]["peak_positive"] == 3
    assert s.peaks["hour"]["ranked_positive"][:2] == [[3, 1], [19, 1]]
    with pytest.raises(DataError):
        summarize([])


cats = st.sampled_from(list(LengthCategory))
timestamps = st.one_of(st.none(), st.builds(
    TimestampParts, st.sampled_from(WEEKDAYS), st.sampled_from(MONTHS), st.integers(1, 31),
    st.integers(0, 23), st.integers(0, 59), st.integers(0, 59), st.just("PDT"), st.just(2009)))
documents = st.builds(lambda lab, ts, c1, c2: Document(0, lab, ("x",), 1, 1, c1, c2, ts),
                      st.sampled_from([NEG, POS]), timestamps, cats, cats)


@given(st.lists(documents, max_size=30), st.randoms())
def test_conservation_and_permutation(docs, rnd):
    shuffled = list(docs)
    rnd.shuffle(shuffled)
    for axis in Axis:
        t = aggregate(docs, axis)
        assert t.total() + t.residual == len(docs)
        assert aggregate(shuffled, axis) == t
        for label in (NEG, POS):
            ranked = ranked_buckets(t, label)
            assert ranked[0][1] == max(t.counts(label))
    if docs:
        s = summarize(docs)
        assert s.negative_share + s.positive_share == 1.0
