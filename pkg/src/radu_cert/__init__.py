"""Mechanical certification of Ramanujan-type congruences for eta quotients."""

from .oracle import (
    PartitionCountTable,
    check_mod3_characterization,
    count_colored_regular,
    pentagonal_pair_sign_sum,
)
from .radu import (
    CosetRep,
    DeltaStarReport,
    ExactRational,
    NotSquareFree,
    ParameterTuple,
    check_delta_star,
    compute_k,
    compute_P,
    coset_reps,
    group_index,
    nu_bound,
    p_lower,
    p_star,
    squares_mod,
)
from .series import (
    ExponentVector,
    NonUnitConstantTerm,
    PrecisionExceeded,
    TruncatedSeries,
    coefficient,
    euler_factor,
    eta_quotient,
    invert,
    mul,
    power,
)
from .verifier import (
    CongruenceCertificate,
    RPrimeNotFound,
    Verdict,
    certify,
    check_certificate,
    search_rprime,
    verify_theorem1,
)

__version__ = "0.1.0"
