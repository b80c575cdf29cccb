from ._core import (
    CheckpointCache,
    DomainError,
    Error,
    FermatViolation,
    HardyLittlewood,
    Ladder,
    BracketError,
    CacheError,
    ResourceError,
    ToleranceError,
    all_equivalents,
    dirichlet_D,
    divisor_count,
    enumerate_fermat_rationals,
    evaluate_functional,
    gram_point,
    gram_points,
    ln_gamma,
    prime_pi,
    scan,
    scan_json,
    theta,
    titchmarsh_T1,
    titchmarsh_T2,
    z_function,
)

# OverflowError stays reachable as ladderlab._core.OverflowError; not re-exported
# so a star import does not shadow the builtin.
__all__ = [name for name in dir() if not name.startswith("_")]
