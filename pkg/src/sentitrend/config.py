"""Run configuration for the end-to-end pipeline."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Optional

from .corpus import FilterMode
from .errors import ConfigError
from .preprocess import Thresholds
from .semantics.embeddings import SgnsConfig

STAGES = ("trends", "terms", "classify", "evaluate", "similar", "entities", "topics")
CLASSIFIERS = ("naive_bayes", "svm")


@dataclass(frozen=True)
class LdaConfig:
    n_topics: int = 4
    alpha: float = 0.1
    beta: float = 0.01
    iterations: int = 1000
    min_count: int = 5
    top_k: int = 10
    keep_stopwords: bool = False


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    keyword: str = "car"
    filter_mode: str = FilterMode.SUBSTRING.value
    thresholds: Thresholds = Thresholds()
    stopwords_path: Optional[str] = None
    drop_hashtags: bool = False
    gazetteer_path: Optional[str] = None
    classifiers: tuple = CLASSIFIERS
    test_fraction: float = 0.22
    seed: int = 42
    nb_alpha: float = 1.0
    svm_lambda: float = 1e-4
    svm_epochs: int = 10
    terms_k: int = 20
    terms_scope: str = "subset"
    similar_k: int = 10
    similar_query: Optional[str] = None
    sgns: SgnsConfig = SgnsConfig()
    lda: LdaConfig = LdaConfig()
    # name -> CSV of externally produced predictions, scored on the test split
    imported_predictions: dict = field(default_factory=dict)
    stages: tuple = STAGES
    output_dir: str = "sentitrend_out"

    def __post_init__(self):
        try:
            FilterMode(self.filter_mode)
        except ValueError:
            raise ConfigError(f"unknown filter mode {self.filter_mode!r}") from None
        if not self.keyword or not self.keyword.strip():
            raise ConfigError("keyword must be non-empty")
        if not 0.0 < self.test_fraction < 1.0:
            raise ConfigError("test_fraction must lie in (0, 1)")
        unknown = set(self.stages) - set(STAGES)
        if unknown:
            raise ConfigError(f"unknown stages: {sorted(unknown)}")
        bad = set(self.classifiers) - set(CLASSIFIERS)
        if bad:
            raise ConfigError(f"unknown classifiers: {sorted(bad)}")
        if self.terms_scope not in ("subset", "corpus"):
            raise ConfigError("terms_scope must be 'subset' or 'corpus'")
        if self.terms_k < 1 or self.similar_k < 1 or self.lda.top_k < 1:
            raise ConfigError("top-k values must be >= 1")
        object.__setattr__(self, "stages", tuple(s for s in STAGES if s in self.stages))
        object.__setattr__(self, "classifiers", tuple(self.classifiers))

    def to_dict(self) -> dict:
        data = asdict(self)
        data["thresholds"] = {"chars": list(self.thresholds.chars),
                              "words": list(self.thresholds.words)}
        data["classifiers"] = list(self.classifiers)
        data["stages"] = list(self.stages)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        data = dict(data)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        try:
            if "thresholds" in data and isinstance(data["thresholds"], dict):
                data["thresholds"] = Thresholds(**{k: tuple(v) for k, v in data["thresholds"].items()})
            if "sgns" in data and isinstance(data["sgns"], dict):
                data["sgns"] = SgnsConfig(**data["sgns"])
            if "lda" in data and isinstance(data["lda"], dict):
                data["lda"] = LdaConfig(**data["lda"])
        except TypeError as exc:
            raise ConfigError(str(exc)) from None
        for key in ("classifiers", "stages"):
            if key in data:
                data[key] = tuple(data[key])
        if "input_path" not in data:
            raise ConfigError("input_path is required")
        return cls(**data)

    def with_overrides(self, **changes) -> "RunConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_config_file(path: str | os.PathLike) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    return data
