"""Exception types shared across the linksage package.

Every error raised by library code derives from LinksageError so callers
(the CLI in particular) can distinguish data/model failures from bugs.
"""

from __future__ import annotations


class LinksageError(Exception):
    """Base class for all linksage data and model errors."""


# --- history / label CSV parsing ---------------------------------------


class MissingHeader(LinksageError):
    def __init__(self, expected: str):
        super().__init__(f"missing or wrong header row, expected {expected!r}")
        self.expected = expected


class MalformedRow(LinksageError):
    def __init__(self, line_no: int, detail: str = "wrong column count"):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class BadNumber(LinksageError):
    def __init__(self, line_no: int, column: str, value: str):
        super().__init__(f"line {line_no}: column {column!r} is not a valid number: {value!r}")
        self.line_no = line_no
        self.column = column


class InvariantViolation(LinksageError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class EmptyInput(LinksageError):
    pass


class MixedTargets(LinksageError):
    def __init__(self) -> None:
        super().__init__("some records carry a frecency value and some do not")


# --- frecency scoring ---------------------------------------------------


class InvalidEvent(LinksageError):
    pass


# --- regression ---------------------------------------------------------


class MissingTargets(LinksageError):
    def __init__(self) -> None:
        super().__init__("feature matrix has no target column")


class TooFewRows(LinksageError):
    def __init__(self, rows: int, needed: int):
        super().__init__(f"{rows} rows, need at least {needed}")
        self.rows = rows
        self.needed = needed


class SingularMatrix(LinksageError):
    pass


class ConstantFeature(LinksageError):
    def __init__(self, column: int):
        super().__init__(f"feature column {column} is constant (zero standard deviation)")
        self.column = column


class DimensionMismatch(LinksageError):
    pass


class ConstantTarget(LinksageError):
    def __init__(self) -> None:
        super().__init__("target vector is constant, coefficient of determination is undefined")


# --- URL classification -------------------------------------------------


class EmptyCorpus(LinksageError):
    pass


class SingleClass(LinksageError):
    def __init__(self) -> None:
        super().__init__("training data contains fewer than two distinct categories")


class NonPositiveAlpha(LinksageError):
    def __init__(self, alpha: float):
        super().__init__(f"smoothing constant must be positive, got {alpha}")
        self.alpha = alpha


# --- hyperparameter search ----------------------------------------------


class TooFewSamples(LinksageError):
    def __init__(self, n: int, k: int):
        super().__init__(f"cannot split {n} samples into {k} folds")
        self.n = n
        self.k = k


class DegenerateFold(LinksageError):
    def __init__(self, fold: int, missing: str):
        super().__init__(f"training portion of fold {fold} lost category {missing!r}")
        self.fold = fold
        self.missing = missing


class EmptySpace(LinksageError):
    def __init__(self) -> None:
        super().__init__("search space is empty")


# --- recommendation -----------------------------------------------------


class NegativeFrecency(LinksageError):
    def __init__(self, url: str, value: float):
        super().__init__(f"negative frecency {value} for {url!r}")
        self.url = url
        self.value = value


class ZeroTotal(LinksageError):
    def __init__(self) -> None:
        super().__init__("total frecency is zero, category probabilities are undefined")


class DuplicateCatalogUrl(LinksageError):
    def __init__(self, category: str, url: str):
        super().__init__(f"duplicate url {url!r} in catalog category {category!r}")
        self.category = category
        self.url = url
