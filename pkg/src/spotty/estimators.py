"""scikit-learn style wrappers around the transforms.

A transformer is fitted on a code: ``fit`` collects the distribution
statistic its kind needs, ``transform`` returns the enumerator of the dual.
Inputs are :class:`LinearCode` objects rather than arrays, so these plug into
``get_params``/``set_params``/``clone`` but not into numeric pipelines.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .code import (
    DEFAULT_BUDGET,
    LinearCode,
    alpha_distribution,
    composition_distribution,
    joint_statistics,
    profile_distribution,
)
from .enumerators import joint_macwilliams, lee_macwilliams, macwilliams_hamming, split_macwilliams
from .errors import ConfigurationError, UnsupportedOperationError
from .weights import SpottyParams

KINDS = ("hamming", "split", "lee")
VARIANTS = ("dual_c", "dual_d", "dual_both")


def check_code(code, name="code"):
    """Raise TypeError unless ``code`` is a LinearCode."""
    if not isinstance(code, LinearCode):
        raise TypeError(f"{name} must be a LinearCode, got {type(code).__name__}")
    return code


def check_spotty_params(b, t):
    return SpottyParams(int(b), int(t))


def check_pair(C, D):
    check_code(C, "C")
    check_code(D, "D")
    if C.ring != D.ring or C.b != D.b or C.n != D.n:
        raise ConfigurationError("C and D must share ring, byte length and byte count")
    return C, D


class MacWilliamsTransformer(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    """Dual-code enumerator of kind ``hamming``, ``split`` or ``lee``.

    Attributes set by ``fit``: ``distribution_``, ``code_size_``, ``ring_``,
    ``b_``, ``n_``.
    """

    def __init__(self, kind="hamming", t=1):
        self.kind = kind
        self.t = t

    def _statistic(self, code):
        if self.kind == "hamming":
            return alpha_distribution(code)
        if self.kind == "split":
            return profile_distribution(code)
        if self.kind == "lee":
            if not code.ring.is_rk:
                raise UnsupportedOperationError(f"Lee transform needs an R_k ring, not {code.ring.spec}")
            return composition_distribution(code)
        raise ConfigurationError(f"kind must be one of {KINDS}, got {self.kind!r}")

    def fit(self, X, y=None):
        check_code(X)
        check_spotty_params(X.b, self.t)
        self.distribution_ = self._statistic(X)
        self.code_size_ = X.size
        self.ring_ = X.ring
        self.b_, self.n_ = X.b, X.n
        return self

    def transform(self, X=None):
        """Dual enumerator of ``X``, or of the fitted code when ``X`` is None."""
        check_is_fitted(self, "distribution_")
        if X is None:
            dist, size, ring, b = self.distribution_, self.code_size_, self.ring_, self.b_
        else:
            check_code(X)
            dist, size, ring, b = self._statistic(X), X.size, X.ring, X.b
        if self.kind == "hamming":
            return macwilliams_hamming(dist, size, b, ring.size, self.t)
        if self.kind == "split":
            return split_macwilliams(dist, size, b, ring.size, self.t)
        return lee_macwilliams(dist, size, ring, self.t)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform()


class JointMacWilliamsTransformer(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    """Joint enumerator with C, D or both replaced by their duals.

    ``fit(C, D)`` collects the joint statistics of the pair.
    """

    def __init__(self, variant="dual_c", t=1, budget=DEFAULT_BUDGET):
        self.variant = variant
        self.t = t
        self.budget = budget

    def fit(self, X, y=None):
        if y is None:
            raise ConfigurationError("joint transforms need the second code as y")
        check_pair(X, y)
        if self.variant not in VARIANTS:
            raise ConfigurationError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        check_spotty_params(X.b, self.t)
        self.stats_ = joint_statistics(X, y, budget=self.budget)
        self.sizes_ = (X.size, y.size)
        self.ring_ = X.ring
        self.b_ = X.b
        return self

    def transform(self, X=None, y=None):
        """Transform of the fitted pair, or of ``(X, y)`` when given; fitted state is left alone."""
        check_is_fitted(self, "stats_")
        if X is None:
            stats, sizes, b, ell = self.stats_, self.sizes_, self.b_, self.ring_.size
        else:
            if y is None:
                raise ConfigurationError("joint transforms need the second code as y")
            check_pair(X, y)
            stats, sizes, b, ell = joint_statistics(X, y, budget=self.budget), (X.size, y.size), X.b, X.ring.size
        return joint_macwilliams(self.variant, stats, *sizes, b, ell, self.t)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform()
