"""Exact Mukai-lattice arithmetic for involutions of moduli spaces of sheaves on K3 surfaces."""

from .actions import (
    Dual,
    PhiConfig,
    Reflect,
    Shift,
    Tensor,
    apply_generator,
    apply_word,
    compile_word,
    derive_admissible_configs,
    fixed_condition,
    normalize_config,
    parse_word,
    phi_on_mukai,
)
from .diophantine import (
    IntervalReport,
    PellSolution,
    check_slope_monotonicity,
    check_stability_intervals,
    pell_for_moduli,
    pell_minimal,
)
from .errors import (
    AdmissibilityError,
    InconsistentDimension,
    InvalidGenus,
    MukaiError,
    NoNontrivialSolution,
    NotInComplement,
    NotInvertible,
    NotSpherical,
)
from .families import (
    FamilyInstance,
    MarkmanInstance,
    build_family_instance,
    enumerate_families,
    hilbert_scheme_n,
    markman_instances,
)
from .intmat import hermite_kernel, hermite_normal_form, smith_normal_form
from .lattice import AmbientGenus, MukaiVector, moduli_dim, mukai_pairing, n_from_v, square_norm, vec
from .picard import (
    ClassificationResult,
    PicardData,
    classify_invariant,
    mod_inverse,
    orthogonal_complement,
    picard_data,
    residue_is_square,
    verify_reflection_identity,
)

__version__ = "0.1.0"
