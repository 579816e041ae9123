"""Dataset container, CSV ingestion, resampling, synthetic generators and
descriptive statistics.

All randomized operations take an explicit integer seed and are pure
functions of (inputs, seed). Quantiles everywhere use linear interpolation
between order statistics (position p*(N-1), numpy's default), and standard
deviations are population (divide by N) unless noted.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError

__all__ = [
    "Dataset",
    "SplitPlan",
    "BootstrapSample",
    "FeatureScaler",
    "load_csv",
    "generate_quartic_surface",
    "generate_scalability_set",
    "tukey_outlier_count",
    "make_folds",
    "draw_bootstrap",
    "standardize",
    "dataset_statistics",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Dataset:
    """An in-memory regression dataset: N x n feature matrix plus target.

    Immutable after construction; the backing arrays are marked read-only so
    the instance can be shared freely across workers.
    """

    features: np.ndarray
    target: np.ndarray
    feature_names: tuple[str, ...]
    target_name: str = "y"
    name: str = "dataset"

    def __post_init__(self):
        feats = np.atleast_2d(np.asarray(self.features, dtype=np.float64))
        targ = np.asarray(self.target, dtype=np.float64).ravel()
        if feats.shape[0] != targ.shape[0]:
            raise DataError(
                f"feature rows ({feats.shape[0]}) != target length ({targ.shape[0]})"
            )
        if feats.shape[0] < 1:
            raise DataError("dataset must contain at least one row")
        if not np.all(np.isfinite(feats)) or not np.all(np.isfinite(targ)):
            raise DataError("dataset contains non-finite values")
        names = tuple(self.feature_names)
        if len(names) != feats.shape[1]:
            raise DataError(
                f"{len(names)} feature names for {feats.shape[1]} feature columns"
            )
        if len(set(names)) != len(names):
            raise DataError("feature names must be unique")
        object.__setattr__(self, "features", _frozen(feats))
        object.__setattr__(self, "target", _frozen(targ))
        object.__setattr__(self, "feature_names", names)

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    def subset(self, indices) -> "Dataset":
        """Row-select into a new Dataset (duplicates allowed)."""
        idx = np.asarray(indices, dtype=np.intp)
        return Dataset(
            self.features[idx],
            self.target[idx],
            self.feature_names,
            self.target_name,
            self.name,
        )


@dataclass(frozen=True)
class SplitPlan:
    """One cross-validation repetition: k disjoint folds covering 0..N-1."""

    folds: tuple[np.ndarray, ...]
    repetition: int
    seed: int

    def __post_init__(self):
        folds = tuple(np.asarray(f, dtype=np.intp) for f in self.folds)
        all_idx = np.concatenate(folds)
        n = all_idx.size
        if not np.array_equal(np.sort(all_idx), np.arange(n)):
            raise DataError("folds must be disjoint and cover 0..N-1 exactly")
        sizes = [f.size for f in folds]
        if max(sizes) - min(sizes) > 1:
            raise DataError(f"fold sizes {sizes} differ by more than 1")
        object.__setattr__(self, "folds", folds)

    def split(self, fold_index: int) -> tuple[np.ndarray, np.ndarray]:
        """(train_indices, test_indices) for one held-out fold."""
        test = self.folds[fold_index]
        train = np.concatenate(
            [f for i, f in enumerate(self.folds) if i != fold_index]
        )
        return np.sort(train), np.sort(test)


@dataclass(frozen=True)
class BootstrapSample:
    """Indices drawn with replacement from a parent dataset of size `parent_size`."""

    indices: np.ndarray
    parent_size: int
    seed: int

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.intp)
        if idx.size < 1:
            raise DataError("bootstrap sample is empty")
        if idx.min() < 0 or idx.max() >= self.parent_size:
            raise DataError("bootstrap indices out of range")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)


@dataclass(frozen=True)
class FeatureScaler:
    """Per-feature affine transform to zero mean / unit population stdev.

    Constant features (stdev 0) map to all-zeros and are inverted back to
    their constant value.
    """

    means: np.ndarray
    stdevs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "means", _frozen(self.means))
        object.__setattr__(self, "stdevs", _frozen(self.stdevs))

    def transform(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        out = x - self.means
        return np.divide(
            out, self.stdevs, out=np.zeros_like(out), where=self.stdevs > 0
        )

    def inverse(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=np.float64)
        return z * self.stdevs + self.means


def load_csv(
    path, target_column: str, has_header: bool = True, name: str | None = None
) -> Dataset:
    """Load a comma-separated file into a Dataset.

    The target column is identified by name (with ``has_header=False``
    columns are named ``c0..c{k-1}``). Every cell must parse as a finite
    real number; failures report the offending row and column.
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"no such file: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        rows = [row for row in reader if row]
    if not rows:
        raise DataError(f"{path}: file is empty")

    if has_header:
        header = [h.strip() for h in rows[0]]
        records = rows[1:]
    else:
        header = [f"c{i}" for i in range(len(rows[0]))]
        records = rows
    if not records:
        raise DataError(f"{path}: no data rows")

    matches = [i for i, h in enumerate(header) if h == target_column]
    if len(matches) == 0:
        raise DataError(f"{path}: target column {target_column!r} not found")
    if len(matches) > 1:
        raise DataError(f"{path}: target column {target_column!r} appears twice")
    target_idx = matches[0]

    data = np.empty((len(records), len(header)), dtype=np.float64)
    for r, row in enumerate(records):
        if len(row) != len(header):
            raise DataError(
                f"{path}: row {r + 1} has {len(row)} cells, expected {len(header)}"
            )
        for c, cell in enumerate(row):
            try:
                value = float(cell)
            except ValueError:
                raise DataError(
                    f"{path}: cannot parse cell at row {r + 1}, column "
                    f"{header[c]!r}: {cell.strip()!r}"
                ) from None
            if not math.isfinite(value):
                raise DataError(
                    f"{path}: non-finite value at row {r + 1}, column {header[c]!r}"
                )
            data[r, c] = value

    feature_cols = [i for i in range(len(header)) if i != target_idx]
    return Dataset(
        data[:, feature_cols],
        data[:, target_idx],
        tuple(header[i] for i in feature_cols),
        target_name=header[target_idx],
        name=name if name is not None else path.stem,
    )


def generate_quartic_surface(
    count: int, low: float, high: float, seed: int
) -> Dataset:
    """Two uniform features on [low, high] with target (x1^4 + x2^4)^(1/2)."""
    if low >= high:
        raise DataError(f"low ({low}) must be < high ({high})")
    if count < 1:
        raise DataError("count must be >= 1")
    rng = np.random.default_rng(seed)
    x = rng.uniform(low, high, size=(count, 2))
    y = np.sqrt(x[:, 0] ** 4 + x[:, 1] ** 4)
    return Dataset(x, y, ("x1", "x2"), "y", name="quartic_surface")


def generate_scalability_set(
    count: int, dims: int, seed: int, low: float = 0.0, high: float = 1.0
) -> Dataset:
    """Quartic surface extended with dims-2 pure-noise features on the same interval."""
    if dims < 2:
        raise DataError("dims must be >= 2")
    if low >= high:
        raise DataError(f"low ({low}) must be < high ({high})")
    if count < 1:
        raise DataError("count must be >= 1")
    rng = np.random.default_rng(seed)
    x = rng.uniform(low, high, size=(count, dims))
    y = np.sqrt(x[:, 0] ** 4 + x[:, 1] ** 4)
    names = tuple(f"x{i + 1}" for i in range(dims))
    return Dataset(x, y, names, "y", name=f"scalability_{dims}d")


def tukey_outlier_count(values, range_factor: float) -> int:
    """Count values outside [Q1 - f*IQR, Q3 + f*IQR].

    Quartiles use linear interpolation between order statistics; values
    exactly on a fence are not outliers.
    """
    v = np.asarray(values, dtype=np.float64).ravel()
    if v.size == 0:
        raise DataError("tukey_outlier_count: empty input")
    if range_factor <= 0:
        raise DataError("range_factor must be positive")
    q1, q3 = np.quantile(v, [0.25, 0.75])
    iqr = q3 - q1
    lo = q1 - range_factor * iqr
    hi = q3 + range_factor * iqr
    return int(np.count_nonzero((v < lo) | (v > hi)))


def make_folds(
    dataset_size: int, k: int, repetitions: int, seed: int
) -> list[SplitPlan]:
    """One SplitPlan per repetition; each is a fresh permutation cut into k folds."""
    if k < 2:
        raise DataError("k must be >= 2")
    if k > dataset_size:
        raise DataError(f"k ({k}) exceeds dataset size ({dataset_size})")
    if repetitions < 1:
        raise DataError("repetitions must be >= 1")
    rng = np.random.default_rng(seed)
    plans = []
    for rep in range(repetitions):
        perm = rng.permutation(dataset_size)
        folds = tuple(np.sort(f) for f in np.array_split(perm, k))
        plans.append(SplitPlan(folds, repetition=rep, seed=seed))
    return plans


def draw_bootstrap(dataset_size: int, fraction: float, seed: int) -> BootstrapSample:
    """Draw ceil(fraction*N) indices uniformly with replacement."""
    if not 0.0 < fraction <= 1.0:
        raise DataError(f"fraction must be in (0, 1], got {fraction}")
    size = math.ceil(fraction * dataset_size)
    if size < 1:
        raise DataError("bootstrap would be empty")
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, dataset_size, size=size)
    return BootstrapSample(idx, parent_size=dataset_size, seed=seed)


def standardize(dataset: Dataset) -> tuple[Dataset, FeatureScaler]:
    """Zero-mean unit-stdev features (population stdev; constants -> zeros)."""
    means = dataset.features.mean(axis=0)
    stdevs = dataset.features.std(axis=0)  # ddof=0
    scaler = FeatureScaler(means, stdevs)
    return (
        Dataset(
            scaler.transform(dataset.features),
            dataset.target,
            dataset.feature_names,
            dataset.target_name,
            dataset.name,
        ),
        scaler,
    )


def dataset_statistics(dataset: Dataset) -> dict:
    """Summary row for the inspection report: shape, target range, Tukey counts."""
    t = dataset.target
    return {
        "name": dataset.name,
        "rows": dataset.n_rows,
        "features": dataset.n_features,
        "target_min": float(t.min()),
        "target_max": float(t.max()),
        "target_outliers_1.5": tukey_outlier_count(t, 1.5),
        "target_outliers_3.0": tukey_outlier_count(t, 3.0),
    }
