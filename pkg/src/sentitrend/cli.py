"""Command line entry point.

Each subcommand runs the same pipeline restricted to the relevant stages;
``report`` runs all of them. Settings come from defaults, then an optional
JSON ``--config`` file, then explicit flags.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace

from .config import RunConfig, load_config_file
from .corpus import FilterMode, KeywordFilter, iter_sentiment140, ParseStats, write_sentiment140
from .errors import ConfigError, SentitrendError
from .pipeline import emit_report, run_pipeline

SUBCOMMAND_STAGES = {
    "train": ("classify",),
    "evaluate": ("evaluate",),
    "trends": ("trends",),
    "terms": ("terms",),
    "similar": ("similar",),
    "entities": ("entities",),
    "topics": ("topics",),
    "report": None,
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="Sentiment140 CSV file")
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("-k", "--keyword", help="product keyword (default: car)")
    p.add_argument("--mode", choices=[m.value for m in FilterMode], help="keyword match mode")
    p.add_argument("--stopwords", dest="stopwords_path", help="stopword file, one word per line")
    p.add_argument("--drop-hashtags", action="store_true", default=None,
                   help="remove whole hashtags instead of just '#'")


def _analysis(p: argparse.ArgumentParser) -> None:
    _common(p)
    p.add_argument("-o", "--out", dest="output_dir", help="output directory")
    p.add_argument("--seed", type=int)
    p.add_argument("--thresholds", help="JSON file with 'chars' and 'words' bounds")
    p.add_argument("--test-fraction", type=float)
    p.add_argument("--classifiers", help="comma list: naive_bayes,svm")
    p.add_argument("--terms-k", type=int)
    p.add_argument("--terms-scope", choices=["subset", "corpus"])
    p.add_argument("--similar-k", type=int)
    p.add_argument("--query", dest="similar_query", help="word for the similarity query")
    p.add_argument("--gazetteer", dest="gazetteer_path", help="surface,kind CSV")
    p.add_argument("--topics", dest="lda_topics", type=int)
    p.add_argument("--iterations", dest="lda_iterations", type=int)
    p.add_argument("--keep-stopwords", action="store_true", default=None,
                   help="fit LDA on text with stopwords kept")
    p.add_argument("--sgns-epochs", type=int)
    p.add_argument("--skip", default="", help="comma list of stages to disable (report only)")
    p.add_argument("--predictions", action="append", default=[], metavar="NAME=CSV",
                   help="external predictions to score on the test split")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentitrend", description="Sentiment trends for keyword-filtered Sentiment140 tweets.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    f = sub.add_parser("filter", help="write keyword-matching rows as Sentiment140 CSV")
    _common(f)
    f.add_argument("-o", "--output", help="output CSV (default: stdout)")
    for name in SUBCOMMAND_STAGES:
        _analysis(sub.add_parser(name, help=f"run the {name} stage" if name != "report"
                                 else "run the full pipeline"))
    return parser


def _config_from_args(args) -> RunConfig:
    base = load_config_file(args.config) if args.config else {}
    base["input_path"] = args.input
    cfg = RunConfig.from_dict(base)
    overrides = {k: getattr(args, k, None) for k in (
        "keyword", "stopwords_path", "drop_hashtags", "output_dir", "seed", "test_fraction",
        "terms_k", "terms_scope", "similar_k", "similar_query", "gazetteer_path")}
    overrides["filter_mode"] = args.mode
    cfg = cfg.with_overrides(**overrides)
    if getattr(args, "thresholds", None):
        from .preprocess import Thresholds
        cfg = replace(cfg, thresholds=Thresholds.load(args.thresholds))
    if getattr(args, "classifiers", None):
        cfg = replace(cfg, classifiers=tuple(c.strip() for c in args.classifiers.split(",") if c.strip()))
    lda = {k: v for k, v in (("n_topics", args.lda_topics), ("iterations", args.lda_iterations),
                             ("keep_stopwords", args.keep_stopwords)) if v is not None}
    if lda:
        cfg = replace(cfg, lda=replace(cfg.lda, **lda))
    if args.sgns_epochs is not None:
        cfg = replace(cfg, sgns=replace(cfg.sgns, epochs=args.sgns_epochs))
    if args.predictions:
        imports = dict(cfg.imported_predictions)
        for item in args.predictions:
            name, sep, path = item.partition("=")
            if not sep or not name or not path:
                raise ConfigError(f"--predictions expects NAME=CSV, got {item!r}")
            imports[name] = path
        cfg = replace(cfg, imported_predictions=imports)
    stages = SUBCOMMAND_STAGES[args.command]
    if stages is None:
        skip = {s.strip() for s in args.skip.split(",") if s.strip()}
        stages = tuple(s for s in cfg.stages if s not in skip)
    # re-run validation on the final configuration
    return RunConfig.from_dict({**cfg.__dict__, "stages": stages})


def _run_filter(args) -> int:
    base = load_config_file(args.config) if args.config else {}
    kf = KeywordFilter(args.keyword or base.get("keyword", "car"),
                       FilterMode(args.mode or base.get("filter_mode", "substring")))
    stats = ParseStats()
    with open(args.input, "rb") as fh:
        kept = (r for r in iter_sentiment140(fh, stats) if kf.matches(r.raw_text))
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as out:
                n = write_sentiment140(kept, out)
        else:
            n = write_sentiment140(kept, sys.stdout)
    summary = {"keyword": kf.keyword, "mode": kf.mode.value, "kept": n, **stats.to_dict()}
    print(json.dumps(summary, sort_keys=True), file=sys.stderr if not args.output else sys.stdout)
    return 0


def _print_summary(report, manifest) -> None:
    out = {
        "filtered": report.corpus["filtered"],
        "sections": {n: s.status for n, s in report.sections.items()},
        "files": manifest,
    }
    print(json.dumps(out, indent=2, sort_keys=True))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "filter":
            return _run_filter(args)
        cfg = _config_from_args(args)
        report = run_pipeline(cfg)
        manifest = emit_report(report, cfg.output_dir)
        _print_summary(report, manifest)
        failed = [n for n, s in report.sections.items() if s.status == "failed"]
        return 3 if failed else 0
    except ConfigError as exc:
        print(json.dumps({"error": "config", "message": str(exc)}), file=sys.stderr)
        return 2
    except (SentitrendError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
