"""Finite-scale VC combinatorics: teaching sets, kc(d) compression,
rounded-average decompositions, k-hypes, transversals and honest
definitions over finite relations."""

__version__ = "0.1.0"

from .compression import (
    KcParameters,
    TeachingCertificate,
    extend_compressible,
    find_kc_compressible,
    implies_within,
    is_k_compressible,
    is_k_isolated,
    k_certificate,
    kc,
    kc_parameters,
    rtd_sequence,
    shattering_hard_instance,
    teaching_dimension,
)
from .errors import CapExceeded, EmptyClassError, InconsistentCondition, InputError
from .generators import GeneratorSpec, generate, oracle_min_td
from .hypes import Hype, hype_cover, hype_decompose, hype_family, is_k_hype
from .rounded import (
    Decomposition,
    Exhausted,
    TransversalReport,
    decompose,
    maj_alpha,
    min_transversal,
    pq_property,
    rounded_average,
    transversal_report,
    verify_decomposition,
)
from .setsystem import (
    Labeling,
    PartialLabeling,
    SetSystem,
    b_vc,
    dual,
    intersection_system,
    relativize,
    restrict,
    sauer_bound,
    shatters,
    vc_dimension,
)
from .udtfs import (
    BipartiteRelation,
    HonestParams,
    accepted_set,
    eval_psi,
    honest_define,
    hype_honest_define,
    phi_types,
    udtfs_report,
)
