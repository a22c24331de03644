"""Entropic subadditivity for probability vectors, qudit states and tomograms."""

from .channels import (
    EscortParams,
    bayes_conditional,
    convex_power_channel,
    escort_entropy_chain,
    escort_map,
    power_channel,
    ppt_min_eigenvalue,
    quantum_power_entropy_chain,
    truncation_channel,
    xstate_entanglement_search,
)
from .density_core import (
    SpectralDecomposition,
    random_density,
    random_unitary,
    spectral_decompose,
    validate_density,
    von_neumann_entropy,
)
from .kernels import BACKEND
from .linalg_core import entrywise_abs_squared, hermitian_eig, kron, swap_matrix
from .matrix_portrait import (
    PortraitPair,
    QuantumReport,
    embed_padded,
    partial_trace_oracle,
    permuted_portraits,
    portrait_first,
    portrait_second,
    portraits,
    quantum_subadditivity_report,
    qudit_j2_example,
)
from .prob_core import normalize_cone, pad_to_length, permute, probability_vector, shannon_entropy
from .stochastic_portrait import (
    Factorization,
    SubadditivityReport,
    build_M12,
    build_M21,
    cone_information,
    factorizations,
    marginals,
    padded_length,
    permutation_sweep,
    subadditivity_report,
)
from .tomography import (
    Tomogram,
    extend_orthostochastic,
    separable_tomogram,
    separating_transform,
    tomogram,
    tomographic_subadditivity,
)

__version__ = "0.1.0"
