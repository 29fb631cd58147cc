"""Command-line driver for data generation, training, tuning, and serving.

One binary, subcommand style. Machine-readable output (JSON or CSV) goes
to stdout or the ``--out`` path; diagnostics go to stderr. Exit codes:
0 success, 1 usage error, 2 data or model error (the error type name is
printed to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import service
from .classifier import (
    VectorizerConfig,
    evaluate,
    fit_url_classifier,
    load_classifier,
    parse_labels,
    predict_mnb,
    save_classifier,
)
from .errors import LinksageError, MissingTargets
from .frecency import synth_history
from .history import parse_history, serialize_history, to_feature_matrix
from .recommend import (
    category_probabilities,
    category_totals,
    load_catalog,
    rank_categories,
    recommend,
    score_history,
)
from .regression import (
    fit_normal_equation,
    load_linear_model,
    metrics,
    predict_batch,
    save_linear_model,
)
from .tuning import (
    AnnealingSchedule,
    HyperParams,
    TrialResult,
    annealed_search,
    cross_validate,
    default_search_space,
    random_search,
    shuffle_split,
)

TRIALS_HEADER = "iteration,ngram_lo,ngram_hi,use_idf,alpha,mean,std,accepted"


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on usage errors; this CLI reserves 2 for
    data/model failures, so usage problems are remapped to exit 1."""

    def error(self, message: str):  # noqa: ANN201 - argparse signature
        print(f"{self.prog}: {message}", file=sys.stderr)
        raise SystemExit(1)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return value


def _fold_count(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return value


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in {"true", "1", "yes"}:
        return True
    if lowered in {"false", "0", "no"}:
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _parse_ngram(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo,hi - got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers, got {text!r}") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"need 1 <= lo <= hi, got {text!r}")
    return lo, hi


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_synth(args: argparse.Namespace) -> int:
    records = synth_history(args.n, args.seed)
    _emit(serialize_history(records), args.out)
    return 0


def _cmd_train_frecency(args: argparse.Namespace) -> int:
    data = to_feature_matrix(parse_history(Path(args.history).read_text()))
    model = fit_normal_equation(data)
    fit = metrics(data.targets, predict_batch(model, data.features))
    save_linear_model(model, args.model_out)
    print(json.dumps({"mse": fit.mse, "rmse": fit.rmse, "r2": fit.r2}))
    return 0


def _cmd_eval_frecency(args: argparse.Namespace) -> int:
    data = to_feature_matrix(parse_history(Path(args.history).read_text()))
    if data.targets is None:
        raise MissingTargets()
    model = load_linear_model(args.model)
    fit = metrics(data.targets, predict_batch(model, data.features))
    print(json.dumps({"mse": fit.mse, "rmse": fit.rmse, "r2": fit.r2}))
    return 0


def _cmd_train_classifier(args: argparse.Namespace) -> int:
    corpus = parse_labels(Path(args.labels).read_text())
    config = VectorizerConfig(args.ngram[0], args.ngram[1], args.use_idf)
    train_idx, test_idx = shuffle_split(len(corpus), 0.3, args.seed)
    train = [corpus[i] for i in train_idx]
    test = [corpus[i] for i in test_idx]
    model = fit_url_classifier(train, config, args.alpha)
    quality = evaluate(
        [doc.category for doc in test],
        [predict_mnb(model, doc.url)[0] for doc in test],
    )
    save_classifier(model, args.model_out)
    print(
        json.dumps(
            {
                "precision": quality.precision,
                "recall": quality.recall,
                "f1": quality.f1,
                "accuracy": quality.accuracy,
            }
        )
    )
    return 0


def _cmd_tune(args: argparse.Namespace) -> int:
    corpus = parse_labels(Path(args.labels).read_text())
    space = default_search_space()
    scores: dict[HyperParams, TrialResult] = {}

    def objective(params: HyperParams) -> float:
        # Memoized: the search may revisit a point, CV is the costly part.
        if params not in scores:
            scores[params] = cross_validate(corpus, params, args.folds, args.seed)
        return 1.0 - scores[params].mean_score

    if args.anneal:
        schedule = AnnealingSchedule(args.t0, args.decay)
        state, trials = annealed_search(space, args.iters, objective, schedule, args.seed)
    else:
        state, trials = random_search(space, args.iters, objective, args.seed)

    lines = [TRIALS_HEADER]
    for trial in trials:
        params = trial.point
        result = scores[params]
        lines.append(
            f"{trial.iteration},{params.ngram_range[0]},{params.ngram_range[1]},"
            f"{str(params.use_idf).lower()},{params.alpha!r},"
            f"{result.mean_score!r},{result.std_score!r},{str(trial.accepted).lower()}"
        )
    print("\n".join(lines))

    best = state.best
    best_result = scores[best]
    print(
        json.dumps(
            {
                "mean": best_result.mean_score,
                "std": best_result.std_score,
                "ngram_lo": best.ngram_range[0],
                "ngram_hi": best.ngram_range[1],
                "use_idf": best.use_idf,
                "alpha": best.alpha,
            }
        )
    )
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    model = load_classifier(args.model)
    category, class_scores = predict_mnb(model, args.url)
    print(json.dumps({"url": args.url, "category": category, "scores": class_scores}))
    return 0


def _scored_history(args: argparse.Namespace):
    records = parse_history(Path(args.history).read_text())
    linear_model = load_linear_model(args.frecency_model)
    mnb_model = load_classifier(args.classifier)
    return score_history(records, linear_model, mnb_model)


def _cmd_rank(args: argparse.Namespace) -> int:
    scored = _scored_history(args)
    ranking = rank_categories(category_probabilities(category_totals(scored)))
    print(
        json.dumps(
            [
                {
                    "category": score.category,
                    "total_frecency": score.total_frecency,
                    "total_visits": score.total_visits,
                    "probability": score.probability,
                }
                for score in ranking
            ]
        )
    )
    return 0


def _cmd_recommend(args: argparse.Namespace) -> int:
    scored = _scored_history(args)
    catalog = load_catalog(args.catalog)
    ranking = rank_categories(category_probabilities(category_totals(scored)))
    visited = {link.url for link in scored}
    picks = recommend([score.category for score in ranking], catalog, visited, args.k)
    print(json.dumps([{"category": category, "urls": urls} for category, urls in picks]))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    snapshot = service.load_snapshot(
        args.history, args.frecency_model, args.classifier, args.catalog
    )
    print(
        f"serving {len(snapshot.scored_history)} history rows on port {args.port}",
        file=sys.stderr,
    )
    service.run(snapshot, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linksage", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    p = commands.add_parser("synth", help="write a synthetic visit-history CSV")
    p.add_argument("--n", type=_positive_int, required=True, help="number of rows")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=_cmd_synth)

    p = commands.add_parser("train-frecency", help="fit the frecency regression")
    p.add_argument("--history", required=True, help="history CSV with frecency column")
    p.add_argument("--model-out", required=True, help="where to write the model JSON")
    p.set_defaults(handler=_cmd_train_frecency)

    p = commands.add_parser("eval-frecency", help="score a model on labeled history")
    p.add_argument("--history", required=True, help="history CSV with frecency column")
    p.add_argument("--model", required=True, help="trained model JSON")
    p.set_defaults(handler=_cmd_eval_frecency)

    p = commands.add_parser("train-classifier", help="train the URL categorizer")
    p.add_argument("--labels", required=True, help="labeled-URL CSV (url,category)")
    p.add_argument("--ngram", type=_parse_ngram, required=True, help="n-gram range lo,hi")
    p.add_argument("--use-idf", type=_parse_bool, required=True, help="true or false")
    p.add_argument("--alpha", type=float, required=True, help="smoothing strength")
    p.add_argument("--model-out", required=True, help="where to write the model JSON")
    p.add_argument("--seed", type=int, default=0, help="seed for the 70/30 split")
    p.set_defaults(handler=_cmd_train_classifier)

    p = commands.add_parser("tune", help="search classifier hyperparameters")
    p.add_argument("--labels", required=True, help="labeled-URL CSV (url,category)")
    p.add_argument("--iters", type=_positive_int, required=True, help="search iterations")
    p.add_argument("--folds", type=_fold_count, default=10, help="CV folds (default 10)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--anneal", action="store_true", help="accept some worse moves")
    p.add_argument("--t0", type=float, default=1.0, help="initial temperature")
    p.add_argument("--decay", type=float, default=0.9, help="geometric cooling rate")
    p.set_defaults(handler=_cmd_tune)

    p = commands.add_parser("classify", help="categorize one URL")
    p.add_argument("--model", required=True, help="trained classifier JSON")
    p.add_argument("--url", required=True, help="URL to categorize")
    p.set_defaults(handler=_cmd_classify)

    p = commands.add_parser("rank", help="rank categories by frecency share")
    p.add_argument("--history", required=True, help="history CSV")
    p.add_argument("--frecency-model", required=True, help="trained regression JSON")
    p.add_argument("--classifier", required=True, help="trained classifier JSON")
    p.set_defaults(handler=_cmd_rank)

    p = commands.add_parser("recommend", help="suggest unvisited catalog URLs")
    p.add_argument("--history", required=True, help="history CSV")
    p.add_argument("--frecency-model", required=True, help="trained regression JSON")
    p.add_argument("--classifier", required=True, help="trained classifier JSON")
    p.add_argument("--catalog", required=True, help="catalog CSV (category,url)")
    p.add_argument("--k", type=_nonnegative_int, default=3, help="URLs per category")
    p.set_defaults(handler=_cmd_recommend)

    p = commands.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=service.DEFAULT_PORT, help="TCP port")
    p.add_argument("--frecency-model", required=True, help="trained regression JSON")
    p.add_argument("--classifier", required=True, help="trained classifier JSON")
    p.add_argument("--history", required=True, help="history CSV")
    p.add_argument("--catalog", required=True, help="catalog CSV (category,url)")
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except (LinksageError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
