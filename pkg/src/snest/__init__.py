"""Symmetric measurement families and trace-norm certification of
Schmidt-number and concurrence lower bounds for bipartite states."""

from .errors import (SnestError, ParameterError, DimensionMismatchError,
                     InvalidStateError)
from .matkernel import kron, hermitian_eig, trace_norm, realign, partial_trace_b
from .basis import (OperatorBasis, GroupedBasis, gellmann_basis, group_basis,
                    load_grouping, APPENDIX_A_PERM, APPENDIX_B_PERM)
from .povm import (SymmetricPovm, DualFrame, build_h, t_range, x_of_t,
                   build_povm, validate_povm, dual_frame, squared_overlap_sum)
from .states import (DensityMatrix, PureState, maximally_mixed,
                     maximally_entangled, horodecki_2x4, example1_state,
                     example2_state, isotropic, horodecki_3x3,
                     horodecki_3x3_verbatim, example4_state, schmidt_decompose,
                     random_schmidt_rank_state, pure_concurrence)
from .criteria import (CriterionConstants, CriterionReport, correlation_matrix,
                       klr_constants, schmidt_bound, separability_bound,
                       square_norm_ceiling, concurrence_lower_bound,
                       pure_norm_closed_forms, pure_state_identity,
                       realignment_sn_bound, isotropic_norm_closed_form,
                       fidelity_implication_check,
                       fidelity_isotropic_threshold, max_entangled_fidelity,
                       sic_from_fiducial, sic_povm_d3, gsic_povm, full_report,
                       SIC_FIDUCIALS)

__version__ = "0.1.0"
