"""Exact signature homomorphism for piecewise-affine bijections of [0, 1)."""

from .intervals import (
    Interval,
    Partition,
    common_refinement,
    format_rational,
    is_refinement,
    make_partition,
    parse_rational,
)
from .elements import (
    AffinePiece,
    FeatureReport,
    FinPerm,
    InvalidElementError,
    PwMap,
    apply,
    arrival_partition,
    build,
    classify_features,
    compose,
    compose_all,
    element_order_upto,
    equals,
    equals_mod_fin,
    flip,
    from_finperm,
    identity,
    iet_build,
    inverse,
    minimal_partition,
    rotation,
    swap_rc,
)
from .sampling import Profile, random_element
from .signature import (
    SignBit,
    finperm_sign,
    flip_number,
    inversion_sign,
    sigma_default,
    signature,
    signature_at,
)
from .decomposition import (
    conjugate_two_flips_to_one,
    decompose_g_tau_s,
    decompose_r_sigma_f,
    flips_factorization,
    normalize_to_iet,
    swaps_factorization,
)
from .subgroups import (
    NormalLevel,
    classify_normal,
    normalizer_witness_orientation,
    normalizer_witness_rc,
    simplicity_witness,
)
from .textformat import parse_element, serialize_element

__version__ = "0.1.0"
