"""Exact-arithmetic Seifert fibrations of lens spaces.

Construct every Seifert fibration of a given lens space L(p, q), normalise
invariant lists to a canonical isomorphism fingerprint, recognise the
oriented lens-space type of a fibration, and classify the fibrations with
prescribed singular-fibre weights, with fundamental-group and homology
cross-checks.  All arithmetic is exact.
"""

from .classify import (
    CasePrediction,
    CaseTag,
    ClassEntry,
    ClassificationReport,
    VariantSet,
    classify_pair,
    enumerate_fibrations,
    one_singular_list,
    predicted_case,
    variants,
)
from .construct import (
    Construction,
    ConstructionTrace,
    GluingChoice,
    ModelWeights,
    construct_fibration,
    construct_s2xs1,
    gluing_choice,
    isotropy_order,
    isotropy_order_oracle,
    model_fibration,
    s3_fibration,
)
from .errors import (
    DomainError,
    FibrationParseError,
    InapplicableMoveError,
    InvalidRangeError,
    NotCoprimeError,
    NotCoprimePairError,
    NotLensSpaceError,
    NotLensSpaceReason,
    OverflowLimitError,
    PredictionMismatchError,
    ZeroAlphaError,
    ZeroWeightError,
)
from .exact_arith import (
    Rational,
    ext_gcd,
    gcd_nonneg,
    int_limit,
    mod_inverse,
    set_int_limit,
    smith_normal_form,
    unimodular_complement,
)
from .pi1 import (
    BaseOrbifold,
    GroupPresentation,
    base_orbifold,
    first_homology,
    presentation,
)
from .recognize import (
    LensSpace,
    lens_equal_oriented,
    lens_equal_unoriented,
    lens_normalize,
    lens_reverse,
    recognize,
)
from .seifert import (
    CanonicalForm,
    DeleteTrivial,
    FlipSigns,
    InsertTrivial,
    IsoType,
    Move,
    Permute,
    SeifertFibration,
    SeifertPair,
    ShiftBetas,
    apply_move,
    euler_number,
    fibration,
    isomorphism_type,
    normalize,
    parse,
    reverse_orientation,
    unparse,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BaseOrbifold",
    "CanonicalForm",
    "CasePrediction",
    "CaseTag",
    "ClassEntry",
    "ClassificationReport",
    "Construction",
    "ConstructionTrace",
    "DeleteTrivial",
    "DomainError",
    "FibrationParseError",
    "FlipSigns",
    "GluingChoice",
    "GroupPresentation",
    "InapplicableMoveError",
    "InsertTrivial",
    "InvalidRangeError",
    "IsoType",
    "LensSpace",
    "ModelWeights",
    "Move",
    "NotCoprimeError",
    "NotCoprimePairError",
    "NotLensSpaceError",
    "NotLensSpaceReason",
    "OverflowLimitError",
    "Permute",
    "PredictionMismatchError",
    "Rational",
    "SeifertFibration",
    "SeifertPair",
    "ShiftBetas",
    "VariantSet",
    "ZeroAlphaError",
    "ZeroWeightError",
    "apply_move",
    "base_orbifold",
    "classify_pair",
    "construct_fibration",
    "construct_s2xs1",
    "enumerate_fibrations",
    "euler_number",
    "ext_gcd",
    "fibration",
    "first_homology",
    "gcd_nonneg",
    "gluing_choice",
    "int_limit",
    "isomorphism_type",
    "isotropy_order",
    "isotropy_order_oracle",
    "lens_equal_oriented",
    "lens_equal_unoriented",
    "lens_normalize",
    "lens_reverse",
    "mod_inverse",
    "model_fibration",
    "normalize",
    "one_singular_list",
    "parse",
    "predicted_case",
    "presentation",
    "recognize",
    "reverse_orientation",
    "s3_fibration",
    "set_int_limit",
    "smith_normal_form",
    "unimodular_complement",
    "unparse",
    "validate",
    "variants",
]
