"""Operator half-space and unit-disk hyperbolic geometry over M_n(C).

The half-space of a complex matrix algebra (matrices with positive
definite imaginary part) and the unit disk of strict contractions carry
Moebius actions of the unitary groups of two indefinite forms, a
correspondence with form-decomposing reflections, and a non-positively
curved Finsler geometry inherited from the positive cone of the 2x2 block
algebra.  This package computes all of it at finite matrix size and ships
a seeded randomized verification harness for the defining identities.
"""

from .errors import (
    DimensionMismatch,
    GeometryError,
    InvalidParams,
    NotDiagonalUnitary,
    NotHermitian,
    NotHorizontal,
    NotInDisk,
    NotInGroup,
    NotInHalfspace,
    NotInLieAlgebra,
    NotOnSphere,
    NotPositiveDefinite,
    NotReflection,
    NotSymmetricPair,
    NumericalBreakdown,
    ParseError,
    ReflectionDrift,
    Singular,
)
from .linalg import (
    DEFAULT_TOL,
    MatrixSampler,
    Tolerance,
    adjoint,
    as_matrix,
    cosm,
    coshm,
    expm,
    expm_skew,
    fun_calc,
    herm_eig,
    im_part,
    inv_sqrtm,
    is_contraction_strict,
    is_hermitian,
    is_invertible,
    is_positive_definite,
    logm,
    polar,
    powm,
    re_part,
    sechm,
    sinm,
    sinhm,
    spec_norm,
    sqrtm,
)
from .blocks import (
    LieElement,
    as_block2,
    blocks_of,
    borel_element,
    cayley_conjugate,
    cayley_conjugate_inv,
    cayley_unitary,
    embed_invertible,
    exp_chart,
    form_product,
    form_reflection,
    from_blocks,
    group_polar,
    group_residual,
    horizontal_element,
    in_group,
    lie_split,
    shear,
    symplectic_unit,
    unitary_split,
)
from .models import (
    KPair,
    act_on_pair,
    base_point,
    borel_from_sphere,
    cayley_to_disk,
    cayley_to_half_space,
    check_disk,
    check_half_space,
    check_model_point,
    disk_section,
    fibration,
    half_space_section,
    make_kpair,
    moebius,
    sphere_cayley,
    sphere_cayley_inv,
    sphere_residual,
    transitivity_witness,
)
from .reflections import (
    Reflection,
    disk_to_reflection,
    half_space_to_reflection,
    make_reflection,
    point_to_reflection,
    positive_embedding,
    rank_one_projection,
    reflection_residuals,
    reflection_to_disk,
    reflection_to_half_space,
    reflection_to_point,
    reflection_to_sphere,
)
from .geometry import (
    GeodesicFamily,
    anticommuting_family,
    anticommuting_geodesic,
    commuting_circle_center,
    commuting_family,
    commuting_geodesic,
    cone_covariant,
    cone_distance,
    cone_exp,
    cone_geodesic,
    connection_form,
    check_positive,
    disk_distance_from_origin,
    family_generator,
    finsler_norm,
    geodesic_from_base,
    half_space_covariant,
    model_distance,
    model_geodesic,
    model_geodesic_sample,
    tangent_from_horizontal,
)

__version__ = "0.1.0"
