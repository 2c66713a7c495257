"""Quaternions over the complex, dual and split-complex numbers, their
sandwich action on R^4, and the isometries of H^3, E^3 and S^3."""

from .action import (
    Minquat,
    adapted_matrix,
    apply,
    apply_matrix,
    compose,
    inverse,
    make_rotor,
    make_translator,
    matrix_of,
    metric,
    sandwich,
)
from .extquat import (
    Decomposition,
    ExtQuaternion,
    Polar,
    bilinear,
    decompose,
    degeneracy,
    ext_mul,
    inv_bar,
    inv_barstar,
    inv_star,
    polar,
    qform,
    require_unit,
)
from .quat import I1, I2, I3, ONE, Quaternion, quat_conj, quat_cross, quat_dot, quat_mul
from .rings import (
    COMPLEX,
    DUAL,
    KINDS,
    SPLIT,
    DomainError,
    Scalar,
    UnitKind,
    ring_angle_from_cos_sin,
    ring_conj,
    ring_cos,
    ring_mul,
    ring_sin,
    ring_sqrt,
)
from .spaceform import (
    SpaceFormPoint,
    act,
    basepoint,
    closed_form_distance,
    distance,
    law_of_cosines_check,
    lift,
    polar_coords,
    relative,
)

__version__ = "0.1.0"
