"""m-spotty weight enumerators of byte error-control codes over finite
commutative Frobenius rings, with their MacWilliams transforms and
brute-force checks."""

from .code import (
    DEFAULT_BUDGET,
    LinearCode,
    alpha_distribution,
    combine,
    composition_distribution,
    direct_sum,
    dual_brute,
    joint_statistics,
    parallel_concat,
    profile_distribution,
    span,
)
from .cyclotomic import CyclotomicSum, cyclotomic_polynomial
from .enumerators import (
    KERNELS,
    KernelCache,
    dual_hamming_enumerator,
    dual_joint_enumerator,
    dual_lee_enumerator,
    dual_split_enumerator,
    g_kernel,
    h_kernel,
    hamming_enumerator,
    joint_enumerator,
    joint_macwilliams,
    krawtchouk,
    lee_enumerator,
    lee_kernel,
    lee_macwilliams,
    macwilliams_hamming,
    split_enumerator,
    split_kernel,
    split_macwilliams,
    theta_poly,
)
from .errors import (
    BudgetExceededError,
    ConfigurationError,
    DomainError,
    IntegralityError,
    ParseError,
    SpottyError,
    UnsupportedOperationError,
)
from .estimators import JointMacWilliamsTransformer, MacWilliamsTransformer
from .poly import MultiPoly, parse_poly, poly_arith
from .ring import Ring, RingSpec, make_ring
from .specfile import load_spec, parse_spec
from .weights import (
    PairCounts,
    SpottyParams,
    jkl,
    m_spotty_distance,
    m_spotty_hamming_weight,
    m_spotty_lee_distance,
    m_spotty_lee_weight,
    pair_counts,
)

__version__ = "0.1.0"
