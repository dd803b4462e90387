"""gradedlab: a numerical laboratory for Z/2-graded matrix calculus.

Core layers:

* graded      -- graded spaces, matrices, commutators, Koszul tensor products
* funcalc     -- spectral functional calculus, bounded transforms, cutoffs
* pairs       -- asymptotic pairs, decay profiles, the composition calculus
* clifford    -- irreducible Clifford matrix models
* bott        -- Hermite-truncated Bott-Dirac model and perturbation checks
* estimates   -- exponential and transform bound certificates
* experiments -- seeded verification suites behind the `lab` command
"""

from .graded import (
    GradedMatrix,
    GradedSpace,
    OddSelfAdjoint,
    conjugate_by_grading,
    direct_sum,
    gamma_matrix,
    graded_commutator,
    graded_tensor,
    identity,
    operator_norm,
    parity_decompose,
    zeros,
)
from .funcalc import (
    CAYLEY,
    GAUSS0,
    GAUSS1,
    MULTIPLIER_G,
    NAMED_FUNCTIONS,
    RESOLVENT_MINUS,
    RESOLVENT_PLUS,
    ScalarFunction,
    Spectrum,
    apply_function,
    bounded_transform,
    bounded_transform_function,
    cutoff_function,
    integral_decomposition,
    resolvent_commutator_check,
    user_function,
)
from .pairs import (
    AsymptoticPair,
    BCReport,
    Composition,
    DecayProfile,
    RepresentedAlgebra,
    bounded_commutator_check,
    commutator_transfer_check,
    comultiplication_check,
    compose_pairs,
    corner_membership_check,
    decay_profile,
    default_t_grid,
    factorization_defect,
    factorization_defect_profiles,
    identity_pushforward,
    pair_inverse,
    pair_sum,
    validate_pair,
)
from .clifford import CliffordRep, clifford_rep
from .bott import (
    BottOperators,
    HermiteModel,
    bott_dirac,
    dc_commutator_check,
    ground_vector,
    hermite_model,
    multiplication_generators,
    perturbation_check,
    spectrum_and_kernel,
)
from .estimates import (
    BoundCertificate,
    exp_product_bound_check,
    exp_product_path_profiles,
    exp_product_series_bound,
    exp_shift_bound_check,
    matrix_exp,
    transform_commutator_check,
    transform_sum_sweep,
)
from .experiments import ExperimentConfig, load_config, run_experiment
from .reporting import emit_report

__version__ = "0.1.0"
