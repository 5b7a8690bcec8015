"""Sentiment counts bucketed by time of posting and by tweet length."""
from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .corpus import MONTHS, WEEKDAYS, SentimentLabel
from .errors import DataError
from .preprocess import CATEGORY_ORDER


class Axis(str, enum.Enum):
    HOUR = "hour"
    WEEKDAY = "weekday"
    MONTH = "month"
    LENGTH = "length"
    WORD_COUNT = "word_count"

    @property
    def buckets(self) -> tuple:
        if self is Axis.HOUR:
            return tuple(range(24))
        if self is Axis.WEEKDAY:
            return WEEKDAYS
        if self is Axis.MONTH:
            return MONTHS
        return tuple(c.value for c in CATEGORY_ORDER)

    @property
    def temporal(self) -> bool:
        return self in (Axis.HOUR, Axis.WEEKDAY, Axis.MONTH)


def bucket_of(doc, axis: Axis):
    """Bucket label of ``doc`` on ``axis``, or None when undefined."""
    if axis is Axis.LENGTH:
        return doc.length_category.value
    if axis is Axis.WORD_COUNT:
        return doc.word_count_category.value
    ts = doc.timestamp
    if ts is None:
        return None
    if axis is Axis.HOUR:
        return ts.hour
    if axis is Axis.WEEKDAY:
        return ts.weekday
    return ts.month


@dataclass(frozen=True)
class TrendTable:
    axis: Axis
    buckets: tuple
    negative: tuple
    positive: tuple
    residual: int = 0

    def rows(self):
        return zip(self.buckets, self.negative, self.positive)

    def counts(self, label: SentimentLabel) -> tuple:
        return self.negative if label == SentimentLabel.NEGATIVE else self.positive

    def total(self) -> int:
        return sum(self.negative) + sum(self.positive)

    def to_dict(self) -> dict:
        return {
            "axis": self.axis.value,
            "buckets": [{"bucket": b, "negative": n, "positive": p} for b, n, p in self.rows()],
            "residual": self.residual,
        }


def aggregate(docs: Iterable, axis: Axis) -> TrendTable:
    axis = Axis(axis)
    buckets = axis.buckets
    pos_of = {b: i for i, b in enumerate(buckets)}
    neg = [0] * len(buckets)
    pos = [0] * len(buckets)
    residual = 0
    for doc in docs:
        b = bucket_of(doc, axis)
        if b is None:
            residual += 1
            continue
        i = pos_of[b]
        if doc.label == SentimentLabel.NEGATIVE:
            neg[i] += 1
        else:
            pos[i] += 1
    return TrendTable(axis, buckets, tuple(neg), tuple(pos), residual)


def ranked_buckets(table: TrendTable, label: SentimentLabel) -> list:
    """Buckets by descending count; ties keep the natural bucket order."""
    counts = table.counts(label)
    order = sorted(range(len(counts)), key=lambda i: (-counts[i], i))
    return [(table.buckets[i], counts[i]) for i in order]


@dataclass(frozen=True)
class TrendSummary:
    negative_count: int
    positive_count: int
    negative_share: float
    positive_share: float
    peaks: Mapping                   # axis value -> dict of peak and ranked buckets

    def to_dict(self) -> dict:
        return {
            "negative_count": self.negative_count,
            "positive_count": self.positive_count,
            "negative_share": self.negative_share,
            "positive_share": self.positive_share,
            "peaks": {k: v for k, v in self.peaks.items()},
        }


def summarize(docs: Sequence, tables: Optional[Iterable[TrendTable]] = None) -> TrendSummary:
    if not docs:
        raise DataError("cannot summarize an empty document set")
    if tables is None:
        tables = [aggregate(docs, a) for a in Axis]
    n_neg = sum(1 for d in docs if d.label == SentimentLabel.NEGATIVE)
    n_pos = len(docs) - n_neg
    peaks = {}
    for table in tables:
        entry = {}
        for label in SentimentLabel:
            ranked = ranked_buckets(table, label)
            entry[f"peak_{label.display}"] = ranked[0][0]
            entry[f"ranked_{label.display}"] = [[b, c] for b, c in ranked]
        peaks[table.axis.value] = entry
    return TrendSummary(n_neg, n_pos, n_neg / len(docs), n_pos / len(docs), peaks)


def write_trend_csv(table: TrendTable, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["bucket", "negative", "positive"])
    for b, n, p in table.rows():
        writer.writerow([b, n, p])
