"""End-to-end orchestration: corpus -> preprocess -> analysis stages -> report files."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import classify, features, topics, trends
from .config import RunConfig
from .corpus import FilterMode, KeywordFilter, iter_sentiment140, label_counts, load_filtered
from .errors import DataError, SentitrendError
from .preprocess import Preprocessor, StopwordList, preprocess_records
from .semantics import embeddings, entities

log = logging.getLogger(__name__)

OK, SKIPPED, FAILED = "ok", "skipped", "failed"


@dataclass
class Section:
    status: str
    reason: Optional[str] = None
    data: dict = field(default_factory=dict)
    # rich objects used when writing files; not part of report.json
    artifacts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.data:
            out["data"] = self.data
        return out


@dataclass
class AnalysisReport:
    config: RunConfig
    corpus: dict
    sections: dict

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "corpus": self.corpus,
            "sections": {name: s.to_dict() for name, s in self.sections.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


class _Context:
    """Lazily computed intermediates shared between stages."""

    def __init__(self, config: RunConfig, records, stopwords):
        self.config = config
        self.records = records
        self.stopwords = stopwords
        self.docs = preprocess_records(records, stopwords, config.thresholds, config.drop_hashtags)
        self._split = None

    @property
    def nonempty(self):
        return [d for d in self.docs if d.tokens]

    def split(self):
        if self._split is None:
            self._split = classify.split_stratified(self.nonempty, self.config.test_fraction,
                                                    self.config.seed)
        return self._split


def _stage_trends(ctx: _Context) -> Section:
    tables = [trends.aggregate(ctx.docs, axis) for axis in trends.Axis]
    summary = trends.summarize(ctx.docs, tables)
    return Section(OK, data={
        "tables": {t.axis.value: t.to_dict() for t in tables},
        "summary": summary.to_dict(),
    }, artifacts={"tables": tables})


def _stage_terms(ctx: _Context) -> Section:
    cfg = ctx.config
    if cfg.terms_scope == "subset":
        docs = ctx.nonempty
        ranked = features.tfidf_rank(docs, features.build_vocabulary(docs, 1), cfg.terms_k)
    else:
        prep = Preprocessor(ctx.stopwords, cfg.thresholds, cfg.drop_hashtags)
        with open(cfg.input_path, "rb") as fh:
            ranked = features.rank_terms_streaming(
                (prep.tokens(r.raw_text) for r in iter_sentiment140(fh)), cfg.terms_k)
    return Section(OK, data={"scope": cfg.terms_scope, "k": cfg.terms_k,
                             "terms": [[w, s] for w, s in ranked]},
                   artifacts={"ranked": ranked})


def _prediction_rows(model, docs):
    rows = []
    for d in docs:
        label, score = model.predict(d)
        conf = score if isinstance(model, classify.NBModel) else None
        rows.append(classify.Prediction(d.tweet_id, label, conf))
    return rows


def _stage_classify(ctx: _Context) -> Section:
    cfg = ctx.config
    train, test = ctx.split()
    vocab = features.build_vocabulary(train, 1)
    models, reports, preds = {}, {}, {}
    for name in cfg.classifiers:
        if name == "naive_bayes":
            model = classify.train_naive_bayes(train, vocab, cfg.nb_alpha)
        else:
            model = classify.train_linear_svm(train, vocab, cfg.svm_lambda, cfg.svm_epochs, cfg.seed)
        rows = _prediction_rows(model, test)
        report = classify.evaluate({p.tweet_id: p.label for p in rows}, test)
        models[name], reports[name], preds[name] = model, report, rows
    return Section(OK, data={
        "split": {"train": len(train), "test": len(test), "seed": cfg.seed,
                  "test_fraction": cfg.test_fraction},
        "vocab_size": len(vocab),
        "models": {n: r.to_dict() for n, r in reports.items()},
    }, artifacts={"reports": reports, "predictions": preds})


def _stage_evaluate(ctx: _Context) -> Section:
    cfg = ctx.config
    if not cfg.imported_predictions:
        return Section(SKIPPED, reason="no imported prediction files configured")
    _, test = ctx.split()
    reports = {}
    for name, path in sorted(cfg.imported_predictions.items()):
        reports[name] = classify.evaluate(classify.import_predictions(path), test)
    return Section(OK, data={"gold": "test_split", "models": {n: r.to_dict() for n, r in reports.items()}},
                   artifacts={"reports": reports})


def _stage_similar(ctx: _Context) -> Section:
    cfg = ctx.config
    query = (cfg.similar_query or cfg.keyword).lower()
    emb = embeddings.train_sgns(ctx.nonempty, cfg.sgns)
    neighbors = embeddings.most_similar(emb, query, cfg.similar_k)
    return Section(OK, data={"query": query, "vocab_size": len(emb.vocab),
                             "neighbors": [[w, c] for w, c in neighbors]},
                   artifacts={"neighbors": neighbors, "embeddings": emb})


def _stage_entities(ctx: _Context) -> Section:
    cfg = ctx.config
    gaz = (entities.Gazetteer.from_csv(cfg.gazetteer_path) if cfg.gazetteer_path
           else entities.Gazetteer.default())
    rows = entities.entity_frequencies((r.raw_text for r in ctx.records), gaz)
    return Section(OK, data={"gazetteer_size": len(gaz),
                             "total_mentions": sum(c for _, _, c in rows),
                             "entities": [list(r) for r in rows]},
                   artifacts={"rows": rows})


def _stage_topics(ctx: _Context) -> Section:
    cfg = ctx.config
    lda_cfg = cfg.lda
    if lda_cfg.keep_stopwords:
        docs = [d for d in preprocess_records(ctx.records, None, cfg.thresholds,
                                              cfg.drop_hashtags, keep_stopwords=True) if d.tokens]
    else:
        docs = ctx.nonempty
    corpus = topics.lda_corpus(docs, lda_cfg.min_count)
    model = topics.fit_lda(corpus, lda_cfg.n_topics, lda_cfg.alpha, lda_cfg.beta,
                           lda_cfg.iterations, cfg.seed)
    table = topics.top_words(model, lda_cfg.top_k)
    return Section(OK, data={
        "n_topics": lda_cfg.n_topics, "iterations": lda_cfg.iterations,
        "keep_stopwords": lda_cfg.keep_stopwords, "vocab_size": len(corpus.vocab),
        "tokens": int(corpus.token_ids.size),
        "topics": [[[w, p] for w, p in row] for row in table],
    }, artifacts={"table": table})


STAGE_FUNCS: dict[str, Callable[[_Context], Section]] = {
    "trends": _stage_trends,
    "terms": _stage_terms,
    "classify": _stage_classify,
    "evaluate": _stage_evaluate,
    "similar": _stage_similar,
    "entities": _stage_entities,
    "topics": _stage_topics,
}


def run_pipeline(config: RunConfig) -> AnalysisReport:
    """Run every configured stage; a failing stage is recorded and the rest continue."""
    if not os.path.isfile(config.input_path):
        raise DataError(f"input file not found: {config.input_path}")
    stopwords = (StopwordList.load(config.stopwords_path) if config.stopwords_path
                 else StopwordList.default())
    kf = KeywordFilter(config.keyword, FilterMode(config.filter_mode))
    records, stats = load_filtered(config.input_path, kf)
    if not records:
        raise DataError(f"no records match keyword {kf.keyword!r} ({kf.mode.value} mode)")
    ctx = _Context(config, records, stopwords)
    corpus = {
        "parse": stats.to_dict(),
        "keyword": kf.keyword,
        "filter_mode": kf.mode.value,
        "filtered": len(records),
        "labels": label_counts(records),
        "empty_token_docs": sum(1 for d in ctx.docs if not d.tokens),
    }
    sections = {}
    for name, func in STAGE_FUNCS.items():
        if name not in config.stages:
            sections[name] = Section(SKIPPED, reason="disabled by configuration")
            continue
        try:
            sections[name] = func(ctx)
        except SentitrendError as exc:
            log.warning("stage %s failed: %s", name, exc)
            sections[name] = Section(FAILED, reason=f"{type(exc).__name__}: {exc}")
        except Exception as exc:  # a broken stage must not take down the others
            log.exception("stage %s crashed", name)
            sections[name] = Section(FAILED, reason=f"{type(exc).__name__}: {exc}")
    return AnalysisReport(config, corpus, sections)


def _write(path: str, writer) -> str:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer(fh)
    return path


def emit_report(report: AnalysisReport, out_dir: str) -> list[str]:
    """Write report.json plus the per-section CSV/text files; return their paths."""
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create output directory {out_dir}: {exc}") from None
    if not os.access(out_dir, os.W_OK):
        raise DataError(f"output directory is not writable: {out_dir}")
    p = lambda name: os.path.join(out_dir, name)
    written = [_write(p("report.json"), lambda fh: fh.write(report.to_json()))]
    sec = report.sections

    def ok(name):
        return name in sec and sec[name].status == OK

    if ok("trends"):
        for table in sec["trends"].artifacts["tables"]:
            written.append(_write(p(f"trends_{table.axis.value}.csv"),
                                  lambda fh, t=table: trends.write_trend_csv(t, fh)))
    if ok("terms"):
        written.append(_write(p("terms_topk.csv"), lambda fh: features.write_terms_csv(
            sec["terms"].artifacts["ranked"], fh)))
    for name in ("classify", "evaluate"):
        if not ok(name):
            continue
        for model, rep in sec[name].artifacts["reports"].items():
            written.append(_write(p(f"eval_{model}.txt"), lambda fh, r=rep: fh.write(r.render())))
        for model, rows in sec[name].artifacts.get("predictions", {}).items():
            written.append(_write(p(f"predictions_{model}.csv"),
                                  lambda fh, r=rows: classify.write_predictions(r, fh)))
    if ok("similar"):
        def similar(fh):
            fh.write("rank,word,cosine\n")
            for rank, (w, c) in enumerate(sec["similar"].artifacts["neighbors"], 1):
                fh.write(f"{rank},{w},{c:.6f}\n")
        written.append(_write(p("similar_words.csv"), similar))
    if ok("entities"):
        written.append(_write(p("entities.csv"), lambda fh: entities.write_entities_csv(
            sec["entities"].artifacts["rows"], fh)))
    if ok("topics"):
        table = sec["topics"].artifacts["table"]
        written.append(_write(p("topics.csv"), lambda fh: topics.write_topics_csv(table, fh)))
        written.append(_write(p("topics.txt"), lambda fh: fh.write(topics.render_topic_table(table))))
    return written
