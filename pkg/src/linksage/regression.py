"""Multivariate linear regression via the normal equation.

Features are z-score standardized before solving: raw history features
are Unix timestamps around 1.5e9 and the Gram matrix on raw values is
hopelessly ill-conditioned. The stored means and stds make prediction
transparent to callers. The normal equation is solved by Gaussian
elimination with partial pivoting; a pivot below PIVOT_TOLERANCE means
the design matrix is rank-deficient and is reported, not papered over.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ConstantFeature,
    ConstantTarget,
    DimensionMismatch,
    MissingTargets,
    SingularMatrix,
    TooFewRows,
)
from .history import FEATURE_ORDER, FeatureMatrix

PIVOT_TOLERANCE = 1e-10


@dataclass
class LinearModel:
    """Fitted hypothesis: theta over [bias, standardized features]."""

    theta: np.ndarray
    feature_means: np.ndarray
    feature_stds: np.ndarray

    @property
    def n_features(self) -> int:
        return len(self.feature_means)


@dataclass
class RegressionMetrics:
    mse: float
    rmse: float
    r2: float


def _solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a @ x = b by elimination with partial pivoting."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    n = len(b)
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[pivot_row, col]) < PIVOT_TOLERANCE:
            raise SingularMatrix(f"pivot {a[pivot_row, col]!r} below tolerance in column {col}")
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :] -= factors[:, None] * a[col]
        b[col + 1 :] -= factors * b[col]
    x = np.zeros(n)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x


def fit_normal_equation(data: FeatureMatrix) -> LinearModel:
    """Least-squares fit of targets on standardized features plus a bias."""
    if data.targets is None:
        raise MissingTargets()
    features = data.features
    n, m = features.shape
    if n < m + 1:
        raise TooFewRows(n, m + 1)
    means = features.mean(axis=0)
    stds = features.std(axis=0)
    for column in range(m):
        if stds[column] == 0.0:
            raise ConstantFeature(column)
    design = _design(features, means, stds)
    theta = _solve(design.T @ design, design.T @ data.targets)
    return LinearModel(theta, means, stds)


def _design(features: np.ndarray, means: np.ndarray, stds: np.ndarray) -> np.ndarray:
    standardized = (features - means) / stds
    return np.column_stack([np.ones(len(features)), standardized])


def design_matrix(model: LinearModel, features: np.ndarray) -> np.ndarray:
    """Bias column plus features standardized with the model's parameters."""
    features = np.asarray(features, dtype=float)
    if features.ndim != 2 or features.shape[1] != model.n_features:
        raise DimensionMismatch(
            f"expected (n, {model.n_features}) features, got {features.shape}"
        )
    return _design(features, model.feature_means, model.feature_stds)


def predict(model: LinearModel, x) -> float:
    """Evaluate the hypothesis at a single raw feature vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (model.n_features,):
        raise DimensionMismatch(f"expected {model.n_features} features, got shape {x.shape}")
    standardized = (x - model.feature_means) / model.feature_stds
    return float(model.theta[0] + model.theta[1:] @ standardized)


def predict_batch(model: LinearModel, features: np.ndarray) -> np.ndarray:
    return design_matrix(model, features) @ model.theta


def cost_value(theta: np.ndarray, design: np.ndarray, targets: np.ndarray) -> float:
    """Half mean squared residual over the design matrix."""
    residuals = design @ theta - targets
    return float(residuals @ residuals) / (2 * len(targets))


def cost_gradient(theta: np.ndarray, design: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Analytic gradient of cost_value with respect to theta."""
    residuals = design @ theta - targets
    return design.T @ residuals / len(targets)


def cost(model: LinearModel, data: FeatureMatrix) -> float:
    """Training objective of the model on a target-bearing matrix."""
    if data.targets is None:
        raise MissingTargets()
    if len(data.targets) != data.n_rows:
        raise DimensionMismatch("targets and features disagree on row count")
    return cost_value(model.theta, design_matrix(model, data.features), data.targets)


def original_coefficients(model: LinearModel) -> np.ndarray:
    """Theta expressed over raw (unstandardized) features, bias first."""
    weights = model.theta[1:] / model.feature_stds
    bias = model.theta[0] - float(weights @ model.feature_means)
    return np.concatenate([[bias], weights])


def metrics(y_true, y_pred) -> RegressionMetrics:
    """MSE, RMSE and coefficient of determination of a prediction."""
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    if y_true.shape != y_pred.shape or y_true.ndim != 1 or len(y_true) == 0:
        raise DimensionMismatch(
            f"need equal-length non-empty vectors, got {y_true.shape} and {y_pred.shape}"
        )
    residuals = y_true - y_pred
    mse = float(residuals @ residuals) / len(y_true)
    ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
    if ss_tot == 0.0:
        raise ConstantTarget()
    r2 = 1.0 - float(residuals @ residuals) / ss_tot
    return RegressionMetrics(mse=mse, rmse=math.sqrt(mse), r2=r2)


# --- persistence ---------------------------------------------------------


def model_to_dict(model: LinearModel, feature_order=FEATURE_ORDER) -> dict:
    if len(feature_order) != model.n_features:
        raise DimensionMismatch(
            f"feature_order names {len(feature_order)} columns, model has {model.n_features}"
        )
    return {
        "theta": [float(v) for v in model.theta],
        "feature_means": [float(v) for v in model.feature_means],
        "feature_stds": [float(v) for v in model.feature_stds],
        "feature_order": list(feature_order),
    }


def model_from_dict(payload: dict) -> LinearModel:
    theta = np.asarray(payload["theta"], dtype=float)
    means = np.asarray(payload["feature_means"], dtype=float)
    stds = np.asarray(payload["feature_stds"], dtype=float)
    if len(theta) != len(means) + 1 or len(means) != len(stds):
        raise DimensionMismatch("theta/means/stds lengths are inconsistent")
    if np.any(stds <= 0):
        raise DimensionMismatch("feature_stds must all be positive")
    return LinearModel(theta, means, stds)


def save_linear_model(model: LinearModel, path, feature_order=FEATURE_ORDER) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model, feature_order), indent=2) + "\n")


def load_linear_model(path) -> LinearModel:
    return model_from_dict(json.loads(Path(path).read_text()))
