"""Exact computations with sortable elements, Cambrian fans and cluster fans.

Typical use::

    >>> from camfan import named_group, cambrian, cluster_complex
    >>> G = named_group("B2")
    >>> len(cambrian(G, (0, 1)).sortables), cluster_complex(G, (0, 1)).h_vector()
    (6, [1, 4, 1])
"""

from .bridges import (
    Subspace,
    b_matrix,
    check_conjecture_orthogonality,
    cluster_to_nc,
    g_vector_identity,
    geom_bijection_bipartite,
    narayana,
    nc_subspace,
    q_matrix,
    verify_quasi_cartan,
)
from .clusters import (
    Bipartition,
    ClusterComplex,
    big_R,
    bipartition_from_word,
    cl_map,
    cluster_complex,
    compatible,
    diagram_bipartition,
    sigma,
    tau,
)
from .coxeter import CoxeterGroup, GroupElement, build_group, parabolic_subgroup
from .errors import *  # noqa: F401,F403
from .fans import (
    Fan,
    bipartite_L,
    bottom_face,
    cambrian_fan,
    cambrian_rays,
    cluster_fan,
    coxeter_fan,
    induced_order,
    phi,
    phi_inverse,
    phi_of_vector,
    ray_of,
    zeta,
)
from .scalar import QuadraticNumber
from .sortable import (
    CambrianData,
    all_coxeter_elements,
    cambrian,
    is_antisortable,
    is_sortable,
    pi_down,
    pi_up,
    sorting_word,
    z_map,
)
from .suites import run_all, run_suite, verify_L_iso, verify_span
from .types import TEST_GROUPS, coxeter_matrix, named_group

__version__ = "0.1.0"
