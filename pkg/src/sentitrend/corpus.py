"""Reading the Sentiment140 CSV and selecting tweets by product keyword.

The file has no header and six columns: polarity target (0 or 4), tweet id,
date string, query flag, user and text.
"""
from __future__ import annotations

import csv
import enum
import io
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Iterator, Optional, Sequence, Union

from .errors import ConfigError

WEEKDAYS = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")
MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")


class SentimentLabel(enum.IntEnum):
    NEGATIVE = 0
    POSITIVE = 4

    @property
    def display(self) -> str:
        return self.name.lower()

    @classmethod
    def from_code(cls, code: Union[str, int]) -> "SentimentLabel":
        try:
            return cls(int(str(code).strip()))
        except ValueError:
            raise ValueError(f"unknown label code {code!r}") from None


@dataclass(frozen=True)
class TimestampParts:
    weekday: str
    month: str
    day: int
    hour: int
    minute: int
    second: int
    tz: str
    year: int

    @property
    def weekday_index(self) -> int:
        return WEEKDAYS.index(self.weekday)

    @property
    def month_index(self) -> int:
        return MONTHS.index(self.month)

    def format(self) -> str:
        return (f"{self.weekday} {self.month} {self.day:02d} "
                f"{self.hour:02d}:{self.minute:02d}:{self.second:02d} "
                f"{self.tz} {self.year}")


@dataclass(frozen=True)
class TweetRecord:
    label: SentimentLabel
    tweet_id: int
    timestamp: Optional[TimestampParts]
    user: str
    raw_text: str
    # kept verbatim so a record serializes back to its source row
    date_raw: str = ""
    query: str = "NO_QUERY"

    def to_row(self) -> list[str]:
        return [str(int(self.label)), str(self.tweet_id), self.date_raw,
                self.query, self.user, self.raw_text]


@dataclass
class ParseStats:
    read: int = 0
    emitted: int = 0
    skipped: int = 0
    missing_timestamp: int = 0
    skip_reasons: Counter = field(default_factory=Counter)

    def skip(self, reason: str) -> None:
        self.skipped += 1
        self.skip_reasons[reason] += 1

    def to_dict(self) -> dict:
        return {
            "read": self.read,
            "emitted": self.emitted,
            "skipped": self.skipped,
            "missing_timestamp": self.missing_timestamp,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
        }


def _time_field(text: str, upper: int) -> int:
    if len(text) != 2 or not text.isdigit():
        raise ValueError(text)
    value = int(text)
    if value > upper:
        raise ValueError(text)
    return value


def parse_timestamp(raw: str) -> Optional[TimestampParts]:
    """Split ``"Mon Apr 06 22:19:45 PDT 2009"`` into its parts.

    Returns None for anything that does not follow that layout exactly.
    The timezone is carried as given; nothing is converted.
    """
    parts = raw.split()
    if len(parts) != 6:
        return None
    weekday, month, day, clock, tz, year = parts
    if weekday not in WEEKDAYS or month not in MONTHS:
        return None
    if not tz.isalpha() or not year.isdigit() or not day.isdigit():
        return None
    pieces = clock.split(":")
    if len(pieces) != 3:
        return None
    try:
        hour = _time_field(pieces[0], 23)
        minute = _time_field(pieces[1], 59)
        second = _time_field(pieces[2], 59)
    except ValueError:
        return None
    day_value = int(day)
    if not 1 <= day_value <= 31:
        return None
    return TimestampParts(weekday, month, day_value, hour, minute, second,
                          tz, int(year))


def _decode_lines(source: BinaryIO) -> Iterator[str]:
    # Sentiment140 ships as Latin-1; UTF-8 rows are accepted when valid.
    for line in source:
        try:
            yield line.decode("utf-8")
        except UnicodeDecodeError:
            yield line.decode("latin-1")


def iter_sentiment140(source: BinaryIO, stats: Optional[ParseStats] = None
                      ) -> Iterator[TweetRecord]:
    """Stream records from a Sentiment140 byte stream.

    Malformed rows are skipped and counted in ``stats``; a bad date keeps
    the record with ``timestamp=None``.
    """
    if stats is None:
        stats = ParseStats()
    reader = csv.reader(_decode_lines(source))
    for row in reader:
        if not row:
            continue
        stats.read += 1
        if len(row) != 6:
            stats.skip("field_count")
            continue
        target, tweet_id, date_raw, query, user, text = row
        try:
            label = SentimentLabel.from_code(target)
        except ValueError:
            stats.skip("label")
            continue
        try:
            tid = int(tweet_id)
        except ValueError:
            stats.skip("tweet_id")
            continue
        if tid < 0:
            stats.skip("tweet_id")
            continue
        if not text:
            stats.skip("empty_text")
            continue
        timestamp = parse_timestamp(date_raw)
        if timestamp is None:
            stats.missing_timestamp += 1
        stats.emitted += 1
        yield TweetRecord(label, tid, timestamp, user, text, date_raw, query)


def parse_sentiment140(source: Union[BinaryIO, bytes, str, os.PathLike]
                       ) -> tuple[list[TweetRecord], ParseStats]:
    """Parse a whole file (path, bytes or binary stream) into records."""
    stats = ParseStats()
    if isinstance(source, (bytes, bytearray)):
        records = list(iter_sentiment140(io.BytesIO(source), stats))
    elif isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            records = list(iter_sentiment140(fh, stats))
    else:
        records = list(iter_sentiment140(source, stats))
    return records, stats


def write_sentiment140(records: Iterable[TweetRecord], out) -> int:
    """Write records back in the source format (all fields quoted)."""
    writer = csv.writer(out, quoting=csv.QUOTE_ALL, lineterminator="\n")
    n = 0
    for rec in records:
        writer.writerow(rec.to_row())
        n += 1
    return n


class FilterMode(str, enum.Enum):
    SUBSTRING = "substring"
    WORD_BOUNDARY = "word"


@dataclass(frozen=True)
class KeywordFilter:
    keyword: str
    mode: FilterMode = FilterMode.SUBSTRING

    def __post_init__(self):
        keyword = self.keyword.strip().lower()
        if not keyword:
            raise ConfigError("keyword must be non-empty")
        object.__setattr__(self, "keyword", keyword)
        object.__setattr__(self, "mode", FilterMode(self.mode))
        pattern = re.compile(r"(?<![^\W_])" + re.escape(keyword) + r"(?![^\W_])")
        object.__setattr__(self, "_pattern", pattern)

    def matches(self, text: str) -> bool:
        lowered = text.lower()
        if self.mode is FilterMode.SUBSTRING:
            return self.keyword in lowered
        return self._pattern.search(lowered) is not None


def filter_keyword(records: Iterable[TweetRecord], keyword_filter: KeywordFilter
                   ) -> list[TweetRecord]:
    return [r for r in records if keyword_filter.matches(r.raw_text)]


def load_filtered(path: Union[str, os.PathLike], keyword_filter: KeywordFilter
                  ) -> tuple[list[TweetRecord], ParseStats]:
    """Stream a file from disk keeping only keyword matches in memory."""
    stats = ParseStats()
    with open(path, "rb") as fh:
        kept = [r for r in iter_sentiment140(fh, stats)
                if keyword_filter.matches(r.raw_text)]
    return kept, stats


def label_counts(records: Sequence[TweetRecord]) -> dict[str, int]:
    counts = Counter(r.label for r in records)
    return {lab.display: counts.get(lab, 0) for lab in SentimentLabel}
