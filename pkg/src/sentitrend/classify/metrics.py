"""Per-class precision/recall/F1 and the averaged summary rows."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from ..corpus import SentimentLabel
from ..errors import DataError
from .predictions import PredictionSet

CLASSES = (SentimentLabel.NEGATIVE, SentimentLabel.POSITIVE)


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    per_class: dict              # display name -> ClassMetrics
    accuracy: float
    macro: ClassMetrics
    weighted: ClassMetrics
    total: int
    confusion: tuple             # rows gold, cols predicted, in CLASSES order

    def to_dict(self) -> dict:
        return {
            "per_class": {k: asdict(v) for k, v in self.per_class.items()},
            "accuracy": self.accuracy,
            "macro_avg": asdict(self.macro),
            "weighted_avg": asdict(self.weighted),
            "total": self.total,
            "confusion": [list(r) for r in self.confusion],
        }

    def render(self, digits: int = 2) -> str:
        """Text table in the familiar classification-report layout."""
        names = [c.display for c in CLASSES] + ["weighted avg"]
        width = max(len(n) for n in names)
        head = " " * width + "".join(f"{h:>10}" for h in ("precision", "recall", "f1-score", "support"))
        lines = [head, ""]
        for name, m in self.per_class.items():
            lines.append(f"{name:>{width}}" + f"{m.precision:>10.{digits}f}{m.recall:>10.{digits}f}"
                         f"{m.f1:>10.{digits}f}{m.support:>10d}")
        lines.append("")
        lines.append(f"{'accuracy':>{width}}" + " " * 20 + f"{self.accuracy:>10.{digits}f}{self.total:>10d}")
        for name, m in (("macro avg", self.macro), ("weighted avg", self.weighted)):
            lines.append(f"{name:>{width}}" + f"{m.precision:>10.{digits}f}{m.recall:>10.{digits}f}"
                         f"{m.f1:>10.{digits}f}{m.support:>10d}")
        return "\n".join(lines) + "\n"


def _f1(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2.0 * p * r / (p + r)


def report_from_confusion(confusion) -> EvalReport:
    """Build the report from a 2x2 matrix (rows gold, columns predicted)."""
    cm = np.asarray(confusion, dtype=np.int64)
    total = int(cm.sum())
    if total == 0:
        raise DataError("cannot evaluate an empty gold set")
    per_class = {}
    for k, label in enumerate(CLASSES):
        tp = int(cm[k, k])
        predicted = int(cm[:, k].sum())
        support = int(cm[k, :].sum())
        precision = tp / predicted if predicted else 0.0
        recall = tp / support if support else 0.0
        per_class[label.display] = ClassMetrics(precision, recall, _f1(precision, recall), support)
    rows = list(per_class.values())
    macro = ClassMetrics(*(sum(getattr(m, f) for m in rows) / len(rows)
                           for f in ("precision", "recall", "f1")), total)
    weighted = ClassMetrics(*(sum(getattr(m, f) * m.support for m in rows) / total
                              for f in ("precision", "recall", "f1")), total)
    accuracy = int(np.trace(cm)) / total
    return EvalReport(per_class, accuracy, macro, weighted, total,
                      tuple(tuple(int(x) for x in r) for r in cm))


def confusion_matrix(gold: Sequence[SentimentLabel], predicted: Sequence[SentimentLabel]) -> np.ndarray:
    cm = np.zeros((2, 2), dtype=np.int64)
    for g, p in zip(gold, predicted):
        cm[CLASSES.index(g), CLASSES.index(p)] += 1
    return cm


def evaluate(predictions: Union[PredictionSet, Mapping[int, SentimentLabel]],
             gold: Sequence) -> EvalReport:
    """Score predictions against labeled documents, matched by tweet_id.

    Predictions for ids outside ``gold`` are ignored; a gold id with no
    prediction is an error.
    """
    mapping = predictions.as_mapping() if isinstance(predictions, PredictionSet) else predictions
    missing = [d.tweet_id for d in gold if d.tweet_id not in mapping]
    if missing:
        shown = ", ".join(str(i) for i in missing[:20])
        more = f" (+{len(missing) - 20} more)" if len(missing) > 20 else ""
        raise DataError(f"missing predictions for {len(missing)} gold ids: {shown}{more}")
    cm = confusion_matrix([d.label for d in gold], [mapping[d.tweet_id] for d in gold])
    return report_from_confusion(cm)
