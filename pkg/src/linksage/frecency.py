"""Explicit frecency scoring with a 30-day half-life.

This is the browser's classic rule: every visit is worth some points,
each visit's value decays exponentially with its age, and a URL's
frecency is the sum over its visits. It serves two roles here: a
reference scorer, and the ground truth behind the synthetic training
data for the regression model.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import InvalidEvent
from .history import HistoryRecord

HALF_LIFE_DAYS = 30.0
SECONDS_PER_DAY = 86400.0
DEFAULT_POINTS_PER_VISIT = 100.0

# Synthetic data is anchored to a fixed instant so generated timestamps
# are stable across runs.
_SYNTH_BASE_TIME = 1704067200  # 2024-01-01T00:00:00Z
_SYNTH_WINDOW_DAYS = 120
_SYNTH_MAX_SPAN_DAYS = 60.0
_SYNTH_MAX_VISITS = 250


@dataclass(frozen=True)
class VisitEvent:
    """A single visit: points earned and age in days at scoring time."""

    points: float
    age_days: float


def decay_constant() -> float:
    """Decay rate giving visit values a 30-day half-life."""
    return math.log(2.0) / HALF_LIFE_DAYS


def visit_value(event: VisitEvent) -> float:
    """Current value of one visit: points discounted by exponential decay."""
    if not event.points > 0:
        raise InvalidEvent(f"points must be positive, got {event.points}")
    if not event.age_days >= 0:
        raise InvalidEvent(f"age_days must be non-negative, got {event.age_days}")
    return event.points * math.exp(-decay_constant() * event.age_days)


def frecency_score(events: list[VisitEvent]) -> float:
    """Sum of visit values; the empty list scores zero.

    fsum keeps the result independent of event order.
    """
    return math.fsum(visit_value(event) for event in events)


def history_frecency(
    first_visit: int,
    last_visit: int,
    visit_count: int,
    points_per_visit: float = DEFAULT_POINTS_PER_VISIT,
) -> float:
    """Frecency of a history row, modelling its visits as evenly spaced.

    Only the first visit, last visit, and count survive in a history
    export, so the individual visit times are reconstructed by spreading
    visit_count visits evenly between the two timestamps. Ages are
    measured back from the last visit.
    """
    if visit_count < 1:
        raise InvalidEvent(f"visit_count must be >= 1, got {visit_count}")
    if last_visit < first_visit:
        raise InvalidEvent("last_visit is before first_visit")
    span_days = (last_visit - first_visit) / SECONDS_PER_DAY
    if visit_count == 1:
        ages = [0.0]
    else:
        ages = np.linspace(0.0, span_days, visit_count)
    return frecency_score([VisitEvent(points_per_visit, float(age)) for age in ages])


def synth_history(
    n: int,
    seed: int,
    points_per_visit: float = DEFAULT_POINTS_PER_VISIT,
) -> list[HistoryRecord]:
    """Generate n history records with exact frecency ground truth.

    Deterministic in the seed. Timestamps fall in a fixed recent window,
    visit counts and spans are drawn uniformly, and each record's
    frecency is computed by history_frecency so a learner trained on the
    output has a well-defined target.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    records = []
    for i in range(n):
        span_days = rng.uniform(0.0, _SYNTH_MAX_SPAN_DAYS)
        last = _SYNTH_BASE_TIME + rng.randrange(0, _SYNTH_WINDOW_DAYS * int(SECONDS_PER_DAY))
        count = rng.randint(1, _SYNTH_MAX_VISITS)
        if count == 1:
            span_days = 0.0  # a single visit is both the first and the last
        first = last - round(span_days * SECONDS_PER_DAY)
        frecency = history_frecency(first, last, count, points_per_visit)
        url = f"https://www.site{i:04d}.example.org/"
        records.append(HistoryRecord(url, first, last, count, frecency))
    return records
