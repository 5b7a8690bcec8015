"""Sentiment-trend analysis of keyword-filtered Sentiment140 tweets."""

from .config import LdaConfig, RunConfig
from .corpus import (FilterMode, KeywordFilter, SentimentLabel, TimestampParts, TweetRecord,
                     filter_keyword, parse_sentiment140, parse_timestamp)
from .errors import ConfigError, DataError, SentitrendError
from .pipeline import AnalysisReport, emit_report, run_pipeline
from .preprocess import Document, StopwordList, Thresholds, categorize, normalize_text, tokenize_and_filter

__version__ = "0.1.0"
