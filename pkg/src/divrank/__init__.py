"""Exact toolkit for divisible rank-metric codes over small finite fields."""

from .errors import DivrankError
from .field_tower import (
    FieldElement,
    FieldSpec,
    TowerEmbedding,
    default_modulus,
    embed,
    field_of_order,
    format_field,
    frobenius,
    make_field,
    parse_field,
    power_basis,
    product_basis,
    subfield_embedding,
    subfield_spec,
    tower_embedding,
    trace,
)
from .linpoly import (
    LinPoly,
    MultiLinPoly,
    compose,
    eval_poly,
    format_linpoly,
    from_matrix,
    invert,
    is_subfield_linear,
    mcompose,
    meval,
    mkernel,
    mto_matrix,
    mtuple_invert,
    parse_linpoly,
    poly_kernel,
    poly_rank,
    to_matrix,
)
from .matspace import GFMatrix, GFSubspace, parse_matrix, restrict_scalars
from .qsystem import (
    DirectionReport,
    ExtensionAmbient,
    QSystem,
    check_weight_dual,
    directions,
    dual_perp,
    system_of,
    verify_direction_theorem,
    verify_higher_direction_theorem,
    weight_via_system,
)
from .recognize import (
    RecognitionResult,
    arises_over,
    arises_over_divisors,
    canonical_form_rect,
    canonical_form_square,
    disjoint_kernel_basis,
    second_weight_divisor,
)
from .rmcode import (
    DEFAULT_MAX_ENUM,
    MatrixCode,
    PolyCode,
    VectorCode,
    WeightSpectrum,
    centralizer,
    code_equal,
    code_equivalent,
    code_of_system,
    divisibility_index,
    em_embed,
    ev_basis,
    find_field_in_idealizer,
    gamma,
    gamma_inv,
    is_nondegenerate,
    left_idealizer,
    normalize_linearity,
    weight_spectrum,
)
from .constructions import (
    CounterexampleParams,
    alternating_code,
    block_repetition,
    counterexample_code,
    counterexample_system,
    gabidulin_like,
    intersection_profile,
    random_equivalence,
)

__version__ = "0.1.0"
