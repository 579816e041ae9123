"""Bagged meta-decision trees for regression.

A stacking framework that trains a pool of base regressors (experts), then
learns bootstrap-bagged meta-decision trees over per-query meta-features
(base features, neighborhood performance statistics, local landmarking) to
pick one expert per query; predictions of the selected experts are averaged.
Ships the comparison integrators (linear stacking, dynamic selection,
best-by-CV, single-tree and no-landmark ablations) and a CV benchmark
harness with significance testing.
"""

from .data import (
    BootstrapSample,
    Dataset,
    FeatureScaler,
    SplitPlan,
    draw_bootstrap,
    generate_quartic_surface,
    generate_scalability_set,
    load_csv,
    make_folds,
    standardize,
    tukey_outlier_count,
)
from .errors import DataError, MetaBagsError, NoValidSplitError

__version__ = "0.1.0"
