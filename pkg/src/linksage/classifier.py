"""URL category classification: token n-grams + multinomial Naive Bayes.

URLs are lowercased and split on every non-alphanumeric character, so
"http://www.gamespot.com/ps/" becomes [http, www, gamespot, com, ps].
Scheme tokens are kept; dropping them would be an unverifiable stopword
choice. Features are n-gram counts, optionally idf-weighted and
L2-normalized, and the classifier is a multinomial Naive Bayes with
additive smoothing.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyCorpus,
    InvariantViolation,
    MalformedRow,
    MissingHeader,
    NonPositiveAlpha,
    SingleClass,
)

LABELS_HEADER = "url,category"

_TOKEN_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class LabeledUrl:
    url: str
    category: str


@dataclass(frozen=True)
class VectorizerConfig:
    """N-gram window bounds and the idf-weighting toggle."""

    ngram_lo: int = 1
    ngram_hi: int = 1
    use_idf: bool = False

    def __post_init__(self) -> None:
        if self.ngram_lo < 1 or self.ngram_hi < self.ngram_lo:
            raise ValueError(f"bad n-gram range ({self.ngram_lo}, {self.ngram_hi})")


@dataclass
class MnbModel:
    """Trained multinomial Naive Bayes model plus its vectorizer state."""

    vocabulary: dict[str, int]
    class_labels: list[str]
    log_priors: np.ndarray
    log_likelihoods: np.ndarray
    alpha: float
    config: VectorizerConfig
    idf_weights: np.ndarray | None = None


def parse_labels(csv_text: str) -> list[LabeledUrl]:
    """Parse a labeled-URL CSV (header ``url,category``), order preserved."""
    lines = [line.rstrip("\r") for line in csv_text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != LABELS_HEADER:
        raise MissingHeader(LABELS_HEADER)
    rows = []
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise MalformedRow(line_no)
        url, category = parts
        if not url.strip():
            raise InvariantViolation(line_no, "url is empty")
        if not category.strip():
            raise InvariantViolation(line_no, "category is empty")
        rows.append(LabeledUrl(url, category))
    return rows


def serialize_labels(rows: Sequence[LabeledUrl]) -> str:
    lines = [LABELS_HEADER]
    for row in rows:
        if "," in row.url or "," in row.category:
            raise ValueError(f"cannot serialize a comma-bearing field: {row!r}")
        lines.append(f"{row.url},{row.category}")
    return "\n".join(lines) + "\n"


def tokenize_url(url: str) -> list[str]:
    """Lowercase the URL and split on every non-alphanumeric character."""
    return _TOKEN_RE.findall(url.lower())


def extract_ngrams(tokens: Sequence[str], config: VectorizerConfig) -> list[str]:
    """All contiguous n-grams for n in the configured range, joined by spaces.

    Emitted in order of n then position: unigrams first, then bigrams, ...
    """
    grams = []
    for n in range(config.ngram_lo, config.ngram_hi + 1):
        for i in range(len(tokens) - n + 1):
            grams.append(" ".join(tokens[i : i + n]))
    return grams


def fit_vectorizer(
    corpus: Sequence[LabeledUrl], config: VectorizerConfig
) -> tuple[dict[str, int], np.ndarray | None]:
    """Build the vocabulary (first-seen order) and, if enabled, idf weights.

    idf(t) = ln((1 + N) / (1 + df(t))) + 1 with N the corpus size and
    df(t) the number of documents containing t. The +1 smoothing keeps
    every weight positive even for terms in every document.
    """
    if not corpus:
        raise EmptyCorpus("cannot fit a vectorizer on an empty corpus")
    vocabulary: dict[str, int] = {}
    doc_freq: Counter[str] = Counter()
    for doc in corpus:
        grams = extract_ngrams(tokenize_url(doc.url), config)
        for gram in grams:
            vocabulary.setdefault(gram, len(vocabulary))
        doc_freq.update(set(grams))
    idf_weights = None
    if config.use_idf:
        n_docs = len(corpus)
        idf_weights = np.array(
            [math.log((1 + n_docs) / (1 + doc_freq[gram])) + 1.0 for gram in vocabulary]
        )
    return vocabulary, idf_weights


def vectorize(
    ngrams: Sequence[str],
    vocabulary: dict[str, int],
    idf_weights: np.ndarray | None = None,
) -> np.ndarray:
    """Term-count vector over the vocabulary; unknown n-grams are ignored.

    With idf weights the counts are reweighted and L2-normalized; without
    them raw counts are returned untouched.
    """
    vector = np.zeros(len(vocabulary))
    for gram in ngrams:
        index = vocabulary.get(gram)
        if index is not None:
            vector[index] += 1.0
    if idf_weights is not None:
        vector = vector * idf_weights
        norm = np.linalg.norm(vector)
        if norm > 0:
            vector = vector / norm
    return vector


def vectorize_corpus(
    corpus: Sequence[LabeledUrl],
    vocabulary: dict[str, int],
    config: VectorizerConfig,
    idf_weights: np.ndarray | None = None,
) -> np.ndarray:
    """Stack vectorize() over a corpus into an (n_docs, |V|) matrix."""
    matrix = np.zeros((len(corpus), len(vocabulary)))
    for row, doc in enumerate(corpus):
        for gram in extract_ngrams(tokenize_url(doc.url), config):
            index = vocabulary.get(gram)
            if index is not None:
                matrix[row, index] += 1.0
    if idf_weights is not None:
        matrix *= idf_weights
        norms = np.linalg.norm(matrix, axis=1)
        nonzero = norms > 0
        matrix[nonzero] /= norms[nonzero, None]
    return matrix


def train_mnb(
    vectors: np.ndarray,
    labels: Sequence[str],
    alpha: float,
    vocabulary: dict[str, int],
    config: VectorizerConfig,
    idf_weights: np.ndarray | None = None,
) -> MnbModel:
    """Fit the smoothed multinomial model on (possibly weighted) vectors.

    Priors are document-count fractions; each category's conditional
    distribution is its summed feature mass with alpha added per term.
    """
    if alpha <= 0:
        raise NonPositiveAlpha(alpha)
    if len(vectors) != len(labels):
        raise DimensionMismatch(f"{len(vectors)} vectors for {len(labels)} labels")
    if vectors.shape[1] != len(vocabulary):
        raise DimensionMismatch(
            f"vectors have {vectors.shape[1]} columns, vocabulary has {len(vocabulary)}"
        )
    class_labels = list(dict.fromkeys(labels))
    if len(class_labels) < 2:
        raise SingleClass()
    n_docs = len(labels)
    vocab_size = len(vocabulary)
    log_priors = np.zeros(len(class_labels))
    log_likelihoods = np.zeros((len(class_labels), vocab_size))
    label_array = np.asarray(labels)
    for row, label in enumerate(class_labels):
        members = vectors[label_array == label]
        log_priors[row] = math.log(len(members) / n_docs)
        term_mass = members.sum(axis=0)
        total_mass = float(term_mass.sum())
        log_likelihoods[row] = np.log(term_mass + alpha) - math.log(
            total_mass + alpha * vocab_size
        )
    return MnbModel(
        vocabulary=vocabulary,
        class_labels=class_labels,
        log_priors=log_priors,
        log_likelihoods=log_likelihoods,
        alpha=alpha,
        config=config,
        idf_weights=idf_weights,
    )


def fit_url_classifier(
    corpus: Sequence[LabeledUrl], config: VectorizerConfig, alpha: float
) -> MnbModel:
    """End-to-end training: fit vectorizer, vectorize corpus, fit the model."""
    vocabulary, idf_weights = fit_vectorizer(corpus, config)
    matrix = vectorize_corpus(corpus, vocabulary, config, idf_weights)
    labels = [doc.category for doc in corpus]
    return train_mnb(matrix, labels, alpha, vocabulary, config, idf_weights)


def predict_mnb(model: MnbModel, url: str) -> tuple[str, dict[str, float]]:
    """Most likely category and the per-category log scores.

    A URL with no in-vocabulary n-grams scores on priors alone. Ties go
    to the earlier class in class_labels order.
    """
    grams = extract_ngrams(tokenize_url(url), model.config)
    vector = vectorize(grams, model.vocabulary, model.idf_weights)
    scores = model.log_priors + model.log_likelihoods @ vector
    winner = model.class_labels[int(np.argmax(scores))]
    return winner, {label: float(s) for label, s in zip(model.class_labels, scores)}


@dataclass
class ClassifierMetrics:
    precision: float
    recall: float
    f1: float
    accuracy: float


def evaluate(y_true: Sequence[str], y_pred: Sequence[str]) -> ClassifierMetrics:
    """Macro-averaged precision/recall/F1 over y_true's label set, plus accuracy."""
    if len(y_true) != len(y_pred) or len(y_true) == 0:
        raise DimensionMismatch(
            f"need equal-length non-empty label lists, got {len(y_true)} and {len(y_pred)}"
        )
    classes = sorted(set(y_true))
    precisions, recalls, f1s = [], [], []
    for cls in classes:
        tp = sum(1 for t, p in zip(y_true, y_pred) if t == cls and p == cls)
        fp = sum(1 for t, p in zip(y_true, y_pred) if t != cls and p == cls)
        fn = sum(1 for t, p in zip(y_true, y_pred) if t == cls and p != cls)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        precisions.append(precision)
        recalls.append(recall)
        f1s.append(f1)
    accuracy = sum(1 for t, p in zip(y_true, y_pred) if t == p) / len(y_true)
    return ClassifierMetrics(
        precision=sum(precisions) / len(classes),
        recall=sum(recalls) / len(classes),
        f1=sum(f1s) / len(classes),
        accuracy=accuracy,
    )


# --- persistence ---------------------------------------------------------


def classifier_to_dict(model: MnbModel) -> dict:
    return {
        "vocabulary": model.vocabulary,
        "class_labels": model.class_labels,
        "log_priors": [float(v) for v in model.log_priors],
        "log_likelihoods": [[float(v) for v in row] for row in model.log_likelihoods],
        "alpha": model.alpha,
        "config": {
            "ngram_lo": model.config.ngram_lo,
            "ngram_hi": model.config.ngram_hi,
            "use_idf": model.config.use_idf,
        },
        "idf_weights": None
        if model.idf_weights is None
        else [float(v) for v in model.idf_weights],
    }


def classifier_from_dict(payload: dict) -> MnbModel:
    config = VectorizerConfig(**payload["config"])
    idf = payload.get("idf_weights")
    return MnbModel(
        vocabulary={gram: int(i) for gram, i in payload["vocabulary"].items()},
        class_labels=list(payload["class_labels"]),
        log_priors=np.asarray(payload["log_priors"], dtype=float),
        log_likelihoods=np.asarray(payload["log_likelihoods"], dtype=float),
        alpha=float(payload["alpha"]),
        config=config,
        idf_weights=None if idf is None else np.asarray(idf, dtype=float),
    )


def save_classifier(model: MnbModel, path) -> None:
    Path(path).write_text(json.dumps(classifier_to_dict(model)) + "\n")


def load_classifier(path) -> MnbModel:
    return classifier_from_dict(json.loads(Path(path).read_text()))
