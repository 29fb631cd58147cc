"""Category aggregation, probability ranking, and catalog recommendations.

Each category's total predicted frecency T is its interest mass; the
category probability is T_i / sum(T). Recommendations come from a static
catalog file (header ``category,url``) and never repeat a URL the user
has already visited.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .classifier import MnbModel, predict_mnb
from .errors import (
    DuplicateCatalogUrl,
    EmptyInput,
    InvariantViolation,
    MalformedRow,
    MissingHeader,
    NegativeFrecency,
    ZeroTotal,
)
from .history import HistoryRecord
from .links import ScoredLink
from .regression import LinearModel, predict_batch

CATALOG_HEADER = "category,url"


@dataclass(frozen=True)
class CategorizedLink(ScoredLink):
    category: str


@dataclass(frozen=True)
class CategoryScore:
    category: str
    total_frecency: float
    total_visits: int
    probability: float | None = None


def parse_catalog(csv_text: str) -> dict[str, list[str]]:
    """Parse a recommendation catalog, preserving URL order per category."""
    lines = [line.rstrip("\r") for line in csv_text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CATALOG_HEADER:
        raise MissingHeader(CATALOG_HEADER)
    catalog: dict[str, list[str]] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise MalformedRow(line_no)
        category, url = parts
        if not category.strip() or not url.strip():
            raise InvariantViolation(line_no, "category and url must be non-empty")
        urls = catalog.setdefault(category, [])
        if url in urls:
            raise DuplicateCatalogUrl(category, url)
        urls.append(url)
    return catalog


def load_catalog(path) -> dict[str, list[str]]:
    return parse_catalog(Path(path).read_text())


def score_history(
    records: Sequence[HistoryRecord],
    linear_model: LinearModel,
    mnb_model: MnbModel,
) -> list[CategorizedLink]:
    """Predict a frecency and a category for every history record.

    Predictions below zero are clamped: the regression extrapolates freely
    but frecency is non-negative by construction.
    """
    if not records:
        return []
    features = [[r.first_visit, r.last_visit, r.visit_count] for r in records]
    predicted = np.maximum(predict_batch(linear_model, features), 0.0)
    scored = []
    for record, frecency in zip(records, predicted):
        category, _ = predict_mnb(mnb_model, record.url)
        scored.append(
            CategorizedLink(
                url=record.url,
                visit_count=record.visit_count,
                frecency=float(frecency),
                category=category,
            )
        )
    return scored


def category_totals(links: Sequence[CategorizedLink]) -> list[CategoryScore]:
    """Sum frecency and visits per category, in first-seen category order."""
    if not links:
        raise EmptyInput("no links to aggregate")
    for link in links:
        if link.frecency < 0:
            raise NegativeFrecency(link.url, link.frecency)
    frecency_totals: dict[str, float] = {}
    visit_totals: dict[str, int] = {}
    for link in links:
        frecency_totals[link.category] = frecency_totals.get(link.category, 0.0) + link.frecency
        visit_totals[link.category] = visit_totals.get(link.category, 0) + link.visit_count
    return [
        CategoryScore(category, frecency_totals[category], visit_totals[category])
        for category in frecency_totals
    ]


def category_probabilities(totals: Sequence[CategoryScore]) -> list[CategoryScore]:
    """Attach probability = share of total frecency to each score."""
    grand_total = sum(score.total_frecency for score in totals)
    if grand_total <= 0:
        raise ZeroTotal()
    return [
        CategoryScore(
            score.category,
            score.total_frecency,
            score.total_visits,
            score.total_frecency / grand_total,
        )
        for score in totals
    ]


def rank_categories(scores: Sequence[CategoryScore]) -> list[CategoryScore]:
    """Order by probability descending; ties break alphabetically."""
    for score in scores:
        if score.probability is None:
            raise ValueError(f"category {score.category!r} has no probability set")
    return sorted(scores, key=lambda s: (-s.probability, s.category))


def recommend(
    ranking: Sequence[str],
    catalog: dict[str, list[str]],
    visited: set[str],
    k_per_category: int,
) -> list[tuple[str, list[str]]]:
    """Up to k unvisited catalog URLs per category, in ranking order.

    Categories missing from the catalog yield empty lists rather than
    being dropped, so the output shape mirrors the ranking.
    """
    if k_per_category < 0:
        raise ValueError(f"k_per_category must be >= 0, got {k_per_category}")
    result = []
    for category in ranking:
        fresh = [url for url in catalog.get(category, []) if url not in visited]
        result.append((category, fresh[:k_per_category]))
    return result
