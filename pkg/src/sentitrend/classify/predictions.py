"""Importing externally produced predictions (e.g. from neural models)."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from ..corpus import SentimentLabel
from ..errors import DataError


@dataclass(frozen=True)
class Prediction:
    tweet_id: int
    label: SentimentLabel
    confidence: Optional[float] = None


@dataclass
class PredictionSet:
    predictions: list = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for p in self.predictions:
            if p.tweet_id in seen:
                raise DataError(f"duplicate prediction for tweet_id {p.tweet_id}")
            seen.add(p.tweet_id)

    def __len__(self) -> int:
        return len(self.predictions)

    def as_mapping(self) -> dict:
        return {p.tweet_id: p.label for p in self.predictions}

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "PredictionSet":
        return cls([Prediction(int(tid), SentimentLabel(lab)) for tid, lab in pairs])


def import_predictions(source: Union[str, os.PathLike, Iterable[str]]) -> PredictionSet:
    """Read ``tweet_id,label_code[,confidence]`` rows; label codes are 0 and 4.

    A first row starting with ``tweet_id`` is treated as a header.
    """
    if isinstance(source, (str, os.PathLike)) and not isinstance(source, io.IOBase):
        with open(source, newline="", encoding="utf-8") as fh:
            return import_predictions(fh)
    preds = []
    seen = set()
    for lineno, row in enumerate(csv.reader(source), 1):
        if not row or all(not c.strip() for c in row):
            continue
        if lineno == 1 and row[0].strip().lower() == "tweet_id":
            continue
        if len(row) not in (2, 3):
            raise DataError(f"line {lineno}: expected 2 or 3 fields, got {len(row)}")
        try:
            tid = int(row[0])
        except ValueError:
            raise DataError(f"line {lineno}: bad tweet_id {row[0]!r}") from None
        try:
            label = SentimentLabel.from_code(row[1])
        except ValueError:
            raise DataError(f"line {lineno}: unknown label code {row[1].strip()!r}") from None
        conf = None
        if len(row) == 3 and row[2].strip():
            try:
                conf = float(row[2])
            except ValueError:
                raise DataError(f"line {lineno}: bad confidence {row[2]!r}") from None
            if not 0.0 <= conf <= 1.0:
                raise DataError(f"line {lineno}: confidence {conf} outside [0, 1]")
        if tid in seen:
            raise DataError(f"duplicate prediction for tweet_id {tid}")
        seen.add(tid)
        preds.append(Prediction(tid, label, conf))
    return PredictionSet(preds)


def write_predictions(predictions: Iterable[Prediction], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["tweet_id", "label", "confidence"])
    for p in predictions:
        conf = "" if p.confidence is None else f"{p.confidence:.6f}"
        writer.writerow([p.tweet_id, int(p.label), conf])
