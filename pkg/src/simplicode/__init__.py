"""Binary subfield codes built from simplicial-complex defining sets.

Construct the codes, compute their weight distributions three
independent ways, and certify distance-optimality, minimality,
self-orthogonality, projectivity, strongly-regular-graph parameters and
CSS quantum parameters.
"""

from .analyze import (
    CodeReport,
    CssParams,
    SrgParams,
    classify_family,
    css_parameters,
    full_report,
    griesmer_sum,
    is_distance_optimal,
    min_distance,
    minimality_report,
    projectivity_report,
    self_orthogonality_report,
    srg_build_verify,
    srg_parameters,
    wd_bruteforce,
    wd_charsum,
    wd_closedform,
)
from .construct import (
    BinaryCode,
    BinaryDefiningSet,
    DefiningSetSpec,
    build_defining_set,
    codeword,
    generator_matrix,
    subfield_generator_from_ring_matrix,
)
from .gf2core import (
    BinaryMatrix,
    BitVector,
    WeightDistribution,
    krawtchouk,
    macwilliams_prefix,
    rank,
    row_reduce,
    walsh_hadamard_charsums,
)
from .ring import (
    BasisCoeffs,
    RingElement,
    basis_decompose,
    ring_add,
    ring_mul,
    trace,
    trace_pairings,
)
from .simplicial import (
    SetSpec,
    char_sum,
    complex_size_inclusion_exclusion,
    count_psi_pattern,
    members,
    psi,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
