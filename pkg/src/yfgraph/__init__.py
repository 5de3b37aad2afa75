"""Exact combinatorics of the Young-Fibonacci graph.

Words over {1, 2}, down-path counts by brute force and by a closed form,
and the boundary measures attached to leftward-infinite words.
"""

__version__ = "0.1.0"

from .words import (
    EPSILON,
    Word,
    WordError,
    clocks,
    common_suffix_len,
    common_suffix_rank,
    concat,
    down_neighbors,
    enumerate_level,
    fibonacci,
    g,
    g_prime,
    ones,
    rank,
    runs,
    splits,
    twos,
    up_neighbors,
    word,
)
from .paths import (
    BRUTE_STATE_LIMIT,
    InfeasibleError,
    IntegralityError,
    PreconditionError,
    d_bruteforce,
    d_closed,
    d_count,
    d_from_twos,
    d_from_twos_fixed,
    d_to_empty,
    enumerate_paths,
    f_eval,
    f_table,
    factorize_check,
    precedes,
)
from .intervals import IntervalValue
from .infinite import (
    ONES,
    Constant,
    Custom,
    Explicit,
    FiniteTwos,
    Geometric,
    Positivity,
    RunWord,
    SpecError,
    parse_infinite,
)
from .boundary import (
    BudgetExceeded,
    EnclosureError,
    LevelReport,
    ToleranceError,
    VertexRow,
    ass_inequality_check,
    classify_level,
    complement_P,
    complement_Q,
    concentration_series,
    h_inf,
    h_prime_inf,
    is_positive_boundary,
    level_masses,
    mu_finite,
    mu_limit,
    mu_limit_approx,
    pi_finite,
    pi_infinite,
    pi_ratio_bounds_check,
    pi_ratio_lower,
    proof_bound,
)

__all__ = [
    "__version__",
    "IntervalValue",
    "EPSILON",
    "Word",
    "WordError",
    "clocks",
    "common_suffix_len",
    "common_suffix_rank",
    "concat",
    "down_neighbors",
    "enumerate_level",
    "fibonacci",
    "g",
    "g_prime",
    "ones",
    "rank",
    "runs",
    "splits",
    "twos",
    "up_neighbors",
    "word",
    "BRUTE_STATE_LIMIT",
    "InfeasibleError",
    "IntegralityError",
    "PreconditionError",
    "d_bruteforce",
    "d_closed",
    "d_count",
    "d_from_twos",
    "d_from_twos_fixed",
    "d_to_empty",
    "enumerate_paths",
    "f_eval",
    "f_table",
    "factorize_check",
    "precedes",
    "ONES",
    "Constant",
    "Custom",
    "Explicit",
    "FiniteTwos",
    "Geometric",
    "Positivity",
    "RunWord",
    "SpecError",
    "parse_infinite",
    "BudgetExceeded",
    "EnclosureError",
    "LevelReport",
    "ToleranceError",
    "VertexRow",
    "ass_inequality_check",
    "classify_level",
    "complement_P",
    "complement_Q",
    "concentration_series",
    "h_inf",
    "h_prime_inf",
    "is_positive_boundary",
    "level_masses",
    "mu_finite",
    "mu_limit",
    "mu_limit_approx",
    "pi_finite",
    "pi_infinite",
    "pi_ratio_bounds_check",
    "pi_ratio_lower",
    "proof_bound",
]
