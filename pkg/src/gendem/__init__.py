"""Generalized Demazure crystals and generalized string polytopes, computed exactly."""

from .crystal import (
    CapExceeded,
    LSPath,
    e,
    enumerate_crystal,
    eps,
    f,
    highest_path,
    phi,
    wt,
)
from .gendem import (
    ConsistencyError,
    GenDemCrystal,
    demazure_reduction,
    enumerate_gendem,
    eps_via_psi_tilde,
    omega,
    omega_prime,
    reconstruct,
    t_lambda,
    transform_matrices,
)
from .polytope import (
    HullResult,
    PLReport,
    convex_hull,
    in_Delta,
    in_S,
    in_S_im,
    lattice_points,
    psi_eval,
    verify,
)
from .rootsys import (
    CartanData,
    RootSystemError,
    cartan_from_matrix,
    cartan_from_type,
    is_reduced,
    parse_type,
    weyl_dim,
)
from .tensor import TensorElem, t_e, t_eps, t_f, t_f_pow, t_phi

__version__ = "0.1.0"
