"""Cyclic-group actions on unitary frames and their representation-ring side.

Exact where exactness is possible (group-algebra arithmetic, kernel-ideal
membership, polynomial determinants), tolerance-controlled numerics for
the frame manifolds and bundle checks.
"""

from .bundle import BundlePoint, CanonicalPoint, f_inverse, f_map, gamma_act_bundle, module_action
from .character_ring import (
    CharacterMonomial,
    CharacterPolynomial,
    CyclicElement,
    RestrictionMap,
    augmentation_torus,
    format_polynomial,
    in_intersection,
    in_J,
    in_kernel,
    is_symmetric,
    parse_polynomial,
    restrict,
)
from .family import (
    Composition,
    SubgroupRep,
    enumerate_family,
    restriction_hom,
    rho_matrix,
    subgroup_Hk,
    subgroup_K,
)
from .homotopy import (
    G_map,
    Parity,
    UnivariatePolynomial,
    band_matrix,
    det_exact,
    g,
    gram_schmidt,
    sphere_G,
)
from .ideal_reports import (
    GeneratedIdeal,
    KernelIdeal,
    PowerMembership,
    containment_report,
    power_ideal_member,
    topology_equivalence_report,
)
from .stiefel import (
    Frame,
    GrassmannPoint,
    GroupElement,
    act,
    embed_product,
    fixed_point_factors,
    fixed_support_pattern,
    is_fixed,
    projector,
    random_frame,
    right_act,
    split_fixed_frame,
    trivial_stabilizer_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
