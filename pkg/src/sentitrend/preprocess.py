"""Tweet cleaning, tokenization and length categories."""
from __future__ import annotations

import enum
import json
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence, Union

from .corpus import SentimentLabel, TimestampParts, TweetRecord
from .errors import ConfigError

_URL = re.compile(r"(?:https?://|www\.)\S*", re.IGNORECASE)
_MENTION = re.compile(r"@\w*")
_HASHTAG = re.compile(r"#\w*")
_NON_LETTER = re.compile(r"[^A-Za-z\s]+")


class LengthCategory(str, enum.Enum):
    VERY_SHORT = "VeryShort"
    SHORT = "Short"
    MEDIUM = "Medium"
    LONG = "Long"


CATEGORY_ORDER = tuple(LengthCategory)


@dataclass(frozen=True)
class StopwordList:
    words: frozenset

    def __post_init__(self):
        words = frozenset(self.words)
        if not words:
            raise ConfigError("stopword list must not be empty")
        if any(w != w.lower() for w in words):
            raise ConfigError("stopwords must be lowercase")
        object.__setattr__(self, "words", words)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "StopwordList":
        words = set()
        for line in lines:
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
        return cls(frozenset(words))

    @classmethod
    def load(cls, path: Union[str, os.PathLike]) -> "StopwordList":
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)

    @classmethod
    def default(cls) -> "StopwordList":
        text = resources.files("sentitrend.data").joinpath("stopwords.txt").read_text("utf-8")
        return cls.from_lines(text.splitlines())


@dataclass(frozen=True)
class Thresholds:
    """Inclusive upper bounds for VeryShort, Short and Medium; above is Long."""

    chars: tuple = (40, 80, 120)
    words: tuple = (5, 12, 20)

    def __post_init__(self):
        for name in ("chars", "words"):
            bounds = tuple(int(b) for b in getattr(self, name))
            if len(bounds) != 3:
                raise ConfigError(f"{name} thresholds need exactly 3 bounds")
            if bounds[0] < 0 or not bounds[0] < bounds[1] < bounds[2]:
                raise ConfigError(f"{name} thresholds must be strictly increasing: {bounds}")
            object.__setattr__(self, name, bounds)

    @classmethod
    def load(cls, path: Union[str, os.PathLike]) -> "Thresholds":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return cls(**{k: tuple(v) for k, v in data.items()})


def normalize_text(raw: str, drop_hashtags: bool = False) -> str:
    """Strip URLs, mentions, hashtag marks, non-letters; lowercase; squeeze spaces.

    With ``drop_hashtags`` the whole tag is removed instead of just ``#``.
    """
    text = _URL.sub(" ", raw)
    text = _MENTION.sub(" ", text)
    if drop_hashtags:
        text = _HASHTAG.sub(" ", text)
    else:
        text = text.replace("#", "")
    # letters glued by punctuation stay glued ("don't" -> "dont")
    text = _NON_LETTER.sub("", text)
    return " ".join(text.lower().split())


def tokenize_and_filter(cleaned: str, stopwords: Optional[StopwordList]) -> list[str]:
    if stopwords is None:
        return [t for t in cleaned.split() if len(t) > 1]
    return [t for t in cleaned.split() if len(t) > 1 and t not in stopwords]


def _bucket(value: int, bounds: Sequence[int]) -> LengthCategory:
    for bound, cat in zip(bounds, CATEGORY_ORDER):
        if value <= bound:
            return cat
    return LengthCategory.LONG


def categorize(raw_char_len: int, raw_word_count: int,
               thresholds: Thresholds = Thresholds()
               ) -> tuple[LengthCategory, LengthCategory]:
    if raw_char_len < 0 or raw_word_count < 0:
        raise ConfigError("lengths must be non-negative")
    return _bucket(raw_char_len, thresholds.chars), _bucket(raw_word_count, thresholds.words)


@dataclass(frozen=True)
class Document:
    tweet_id: int
    label: SentimentLabel
    tokens: tuple
    raw_char_len: int
    raw_word_count: int
    length_category: LengthCategory
    word_count_category: LengthCategory
    timestamp: Optional[TimestampParts]


@dataclass(frozen=True)
class Preprocessor:
    stopwords: Optional[StopwordList] = None
    thresholds: Thresholds = Thresholds()
    drop_hashtags: bool = False

    def tokens(self, raw_text: str) -> list[str]:
        return tokenize_and_filter(normalize_text(raw_text, self.drop_hashtags),
                                   self.stopwords)

    def __call__(self, record: TweetRecord) -> Document:
        raw = record.raw_text
        n_chars, n_words = len(raw), len(raw.split())
        length_cat, words_cat = categorize(n_chars, n_words, self.thresholds)
        return Document(
            tweet_id=record.tweet_id,
            label=record.label,
            tokens=tuple(self.tokens(raw)),
            raw_char_len=n_chars,
            raw_word_count=n_words,
            length_category=length_cat,
            word_count_category=words_cat,
            timestamp=record.timestamp,
        )


def preprocess_records(records: Iterable[TweetRecord],
                       stopwords: Optional[StopwordList] = None,
                       thresholds: Thresholds = Thresholds(),
                       drop_hashtags: bool = False,
                       keep_stopwords: bool = False) -> list[Document]:
    """Documents for every record; ``stopwords=None`` means the default list."""
    if keep_stopwords:
        stopwords = None
    elif stopwords is None:
        stopwords = StopwordList.default()
    prep = Preprocessor(stopwords, thresholds, drop_hashtags)
    return [prep(r) for r in records]
