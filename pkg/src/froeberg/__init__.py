"""Fröberg Hilbert series for ideals of generic forms of equal degree.

Series arithmetic, the coverage criterion for generator counts, and
randomized rank verification over a prime field.
"""

from .combinatorics import ExponentVector, binomial, dim_graded, monomial_index, monomials
from .criterion import (
    CoverageReport,
    Regime,
    RegimeStatus,
    ZInterval,
    covered_z_set,
    probability_pd,
    prop2_interval,
    prop3_tail_bound,
    theorem1_status,
)
from .errors import ResourceLimitError
from .gfp_linalg import DEFAULT_PRIME, PrimeFieldMatrix, modinv, rank
from .series import (
    IntegerSeries,
    froberg_ideal_series,
    froberg_quotient_series,
    full_ring_series,
    min_form_series,
    truncate_at_first_negative,
)
from .verifier import (
    FormClass,
    FormVector,
    VerificationReport,
    az_sequence,
    empirical_hf,
    intersection_dim_az,
    multiplication_matrix,
    sample_form,
    verify_against_conjecture,
)

__version__ = "0.1.0"
