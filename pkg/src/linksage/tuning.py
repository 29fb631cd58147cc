"""Random-search hyperparameter tuning with k-fold cross-validation.

The search draws candidates uniformly (with replacement) from a finite
space and minimizes an objective; for classifier tuning the objective is
1 - mean cross-validated accuracy. Greedy acceptance takes a candidate
only when it is strictly better; the annealed variant also takes worse
candidates with probability min{1, exp((f_current - f_candidate) / T)}
under a geometric cooling schedule.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .classifier import LabeledUrl, VectorizerConfig, fit_url_classifier, predict_mnb
from .errors import DegenerateFold, EmptySpace, TooFewSamples


@dataclass(frozen=True)
class HyperParams:
    """One point of the classifier tuning space."""

    ngram_range: tuple[int, int]
    use_idf: bool
    alpha: float

    def to_config(self) -> VectorizerConfig:
        return VectorizerConfig(self.ngram_range[0], self.ngram_range[1], self.use_idf)


@dataclass(frozen=True)
class TrialResult:
    params: HyperParams
    mean_score: float
    std_score: float


@dataclass
class SearchState:
    """Current and best points of a search run."""

    current: Any
    current_objective: float
    best: Any
    best_objective: float
    iteration: int


@dataclass(frozen=True)
class Trial:
    iteration: int
    point: Any
    objective: float
    accepted: bool


@dataclass(frozen=True)
class AnnealingSchedule:
    """Geometric cooling: temperature(k) = initial_temp * decay**k."""

    initial_temp: float = 1.0
    decay: float = 0.9

    def __post_init__(self) -> None:
        if self.initial_temp <= 0:
            raise ValueError(f"initial_temp must be positive, got {self.initial_temp}")
        if not 0 < self.decay < 1:
            raise ValueError(f"decay must be in (0, 1), got {self.decay}")

    def temperature(self, k: int) -> float:
        return self.initial_temp * self.decay**k


def default_search_space() -> list[HyperParams]:
    """The standard 2x2x2 grid: n-gram range x idf toggle x smoothing."""
    space = []
    for ngram_range in ((1, 1), (1, 2)):
        for use_idf in (True, False):
            for alpha in (0.01, 0.001):
                space.append(HyperParams(ngram_range, use_idf, alpha))
    return space


def kfold_split(n: int, k: int, seed: int) -> list[list[int]]:
    """Shuffle 0..n-1 and cut into k disjoint folds, sizes differing by <= 1."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < k:
        raise TooFewSamples(n, k)
    indices = list(range(n))
    random.Random(seed).shuffle(indices)
    base, extra = divmod(n, k)
    folds = []
    start = 0
    for fold in range(k):
        size = base + (1 if fold < extra else 0)
        folds.append(indices[start : start + size])
        start += size
    return folds


def cross_validate(
    dataset: Sequence[LabeledUrl], params: HyperParams, k: int, seed: int
) -> TrialResult:
    """Mean and population std of held-out accuracy over k folds."""
    folds = kfold_split(len(dataset), k, seed)
    all_categories = {doc.category for doc in dataset}
    accuracies = []
    for i, fold in enumerate(folds):
        held_out = set(fold)
        train = [dataset[j] for j in range(len(dataset)) if j not in held_out]
        train_categories = {doc.category for doc in train}
        if train_categories != all_categories:
            missing = sorted(all_categories - train_categories)[0]
            raise DegenerateFold(i, missing)
        model = fit_url_classifier(train, params.to_config(), params.alpha)
        hits = sum(1 for j in fold if predict_mnb(model, dataset[j].url)[0] == dataset[j].category)
        accuracies.append(hits / len(fold))
    return TrialResult(params, float(np.mean(accuracies)), float(np.std(accuracies)))


def random_search(
    space: Sequence[Any],
    n_iter: int,
    objective: Callable[[Any], float],
    seed: int,
) -> tuple[SearchState, list[Trial]]:
    """Greedy random search: accept a candidate only when strictly better.

    The first iteration's candidate initializes the state and is logged as
    accepted. One objective evaluation per iteration; the full trial log is
    returned alongside the final state.
    """
    return _search(space, n_iter, objective, seed, schedule=None)


def annealed_search(
    space: Sequence[Any],
    n_iter: int,
    objective: Callable[[Any], float],
    schedule: AnnealingSchedule,
    seed: int,
) -> tuple[SearchState, list[Trial]]:
    """Random search with simulated-annealing acceptance of worse candidates.

    The best point seen is tracked separately from the wandering current
    point. The temperature for the decision at iteration k is
    schedule.temperature(k).
    """
    return _search(space, n_iter, objective, seed, schedule=schedule)


def acceptance_probability(f_current: float, f_candidate: float, temperature: float) -> float:
    """min{1, exp((f_current - f_candidate) / T)}; improving moves always pass."""
    if f_candidate < f_current:
        return 1.0
    if temperature <= 0:
        return 1.0 if f_candidate < f_current else 0.0
    return min(1.0, math.exp((f_current - f_candidate) / temperature))


def _search(
    space: Sequence[Any],
    n_iter: int,
    objective: Callable[[Any], float],
    seed: int,
    schedule: AnnealingSchedule | None,
) -> tuple[SearchState, list[Trial]]:
    if not space:
        raise EmptySpace()
    if n_iter < 1:
        raise ValueError(f"n_iter must be >= 1, got {n_iter}")
    rng = random.Random(seed)
    state: SearchState | None = None
    trials = []
    for k in range(1, n_iter + 1):
        candidate = space[rng.randrange(len(space))]
        value = float(objective(candidate))
        if state is None:
            state = SearchState(candidate, value, candidate, value, k)
            accepted = True
        else:
            if schedule is None:
                accepted = value < state.current_objective
            else:
                probability = acceptance_probability(
                    state.current_objective, value, schedule.temperature(k)
                )
                # No draw when the move is certain, so logs stay stable.
                accepted = probability >= 1.0 or rng.random() < probability
            if accepted:
                state.current = candidate
                state.current_objective = value
            if value < state.best_objective:
                state.best = candidate
                state.best_objective = value
            state.iteration = k
        trials.append(Trial(k, candidate, value, accepted))
    assert state is not None
    return state, trials


def shuffle_split(n: int, test_fraction: float, seed: int) -> tuple[list[int], list[int]]:
    """Seeded shuffle of 0..n-1 cut into (train, test) index lists."""
    if not 0 < test_fraction < 1:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    indices = list(range(n))
    random.Random(seed).shuffle(indices)
    n_test = int(round(n * test_fraction))
    if n_test == 0 or n_test == n:
        raise TooFewSamples(n, 2)
    return indices[n_test:], indices[:n_test]
