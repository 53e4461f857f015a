"""Correlation measures for qubit-qudit quantum states.

The package computes quantum mutual information, classical correlation,
quantum discord and entanglement negativity for bipartite 2 x d systems
along two independent routes: closed forms for a highly symmetric
two-parameter family of states, and a numeric optimization over projective
qubit measurements that works for arbitrary states.  An LOCC twirling
pipeline maps any 2 x d state onto the family.
"""

from .operators import (
    RECONSTRUCTION_TOL,
    VALIDATION_TOL,
    DensityMatrix,
    DimensionMismatchError,
    MatrixValidationError,
    NonHermitianError,
    NonUnitTraceError,
    NotPositiveSemidefiniteError,
    commutator_condition,
    hermitian_spectrum,
    is_classical_diagonal,
    negativity_trace_norm,
    partial_trace_a,
    partial_trace_b,
    partial_transpose_a,
    quantum_mutual_information,
    random_density_matrix,
    random_unitary,
    tensor,
    validate_density,
    von_neumann_entropy,
)
from .family import (
    CorrelationReport,
    NotInFamilyError,
    ParameterOutOfRangeError,
    TwoParamState,
    bell_vectors,
    build_state,
    classical_correlation,
    classify_family,
    conditional_entropy_closed,
    correlation_report,
    discord,
    entropy_b,
    family_spectrum,
    marginal_b_spectrum,
    mutual_information,
    nearest_family_member,
    negativity,
    random_family_state,
    singlet_weight,
)
from .measurement import (
    ConditionalEnsemble,
    MeasurementAxis,
    OptimizerConfig,
    axis_from_direction,
    classical_correlation_numeric,
    conditional_ensemble,
    conditional_entropy,
    discord_numeric,
    ensemble_spectrum_spread,
    measured_mutual_information,
    projectors,
    random_axis,
)
from .twirl import (
    DidNotConvergeError,
    IntermediateWeights,
    LevelOutOfRangeError,
    LocalUnitary,
    TwirlReport,
    check_family_invariance,
    cycle_t,
    hadamard,
    hadamard_mix,
    level_sign,
    level_sign_mix,
    phase_mix,
    random_local_unitary,
    swap01,
    swap_mix,
    t_twirl,
    twirl,
    u_theta,
)
from .statefile import StateFormatError, dumps_density, loads_density

__version__ = "0.1.0"
