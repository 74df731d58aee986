"""Exact simplicial fans: the Coxeter fan, the c-Cambrian fan and the c-cluster fan.

Rays are stored as exact vectors in simple-root coordinates.  Cambrian rays
are kept as *fundamental vectors* ``w . omega_s`` (never rescaled), so that
their fundamental-weight coordinates can be read directly.

Cambrian and cluster fans index their rays by almost positive root: ray ``a``
of the Cambrian fan is ``phi_c^{-1}(a)`` and ray ``a`` of the cluster fan is
the root ``a`` itself.  A maximal cone is a sorted tuple of ray indices, so
the cone of a sortable ``x`` in the Cambrian fan is literally ``cl_c(x)``.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .clusters import Bipartition, cl_map, cluster_complex
from .coxeter import CoxeterGroup
from .errors import (
    BadAscentSet,
    CycleError,
    GenericityFailure,
    NoJoinIrreducible,
    NotAntisortable,
    NotInitial,
    RaysDependent,
)
from .scalar import sign
from .sortable import _cache, cambrian, is_antisortable, is_initial, pi_down, pi_up

__all__ = [
    "CambrianRay",
    "Fan",
    "bipartite_L",
    "bottom_face",
    "cambrian_fan",
    "cambrian_rays",
    "cluster_fan",
    "cone_coefficients",
    "coxeter_fan",
    "default_generic_vector",
    "induced_order",
    "phi",
    "phi_inverse",
    "phi_of_vector",
    "positive_multiple",
    "ray_of",
    "zeta",
]

Vec = tuple


def positive_multiple(u: Vec, v: Vec) -> bool:
    """Whether ``u = lambda v`` for some ``lambda > 0``."""
    k = next((i for i, x in enumerate(v) if x), None)
    if k is None:
        return not any(u)
    lam = u[k] / v[k]
    return sign(lam) > 0 and all(a == lam * b for a, b in zip(u, v))


@dataclass
class Fan:
    """A simplicial fan given by its rays and maximal cones (tuples of ray indices)."""

    rays: dict[int, Vec]
    cones: list[tuple[int, ...]]
    dim: int
    labels: dict[int, str] = field(default_factory=dict)
    provenance: dict[int, tuple] = field(default_factory=dict)
    field_name: str = "rational"
    _inv: dict = field(default_factory=dict, repr=False)

    def cone_matrix(self, cone: Sequence[int]):
        """Matrix whose columns are the rays of ``cone``."""
        cols = [self.rays[r] for r in cone]
        return [[cols[j][i] for j in range(len(cols))] for i in range(self.dim)]

    def cone_inverse(self, cone: tuple[int, ...]):
        inv = self._inv.get(cone)
        if inv is None:
            try:
                inv = linalg.inverse(self.cone_matrix(cone))
            except ZeroDivisionError:
                raise RaysDependent(f"rays of cone {cone} are linearly dependent") from None
            self._inv[cone] = inv
        return inv

    def coefficients(self, cone: tuple[int, ...], v: Vec):
        return linalg.matvec(self.cone_inverse(cone), v)

    def contains(self, cone: tuple[int, ...], v: Vec) -> bool:
        return all(sign(x) >= 0 for x in self.coefficients(cone, v))

    def check_simplicial(self):
        for cone in self.cones:
            if len(cone) != self.dim:
                raise RaysDependent(f"cone {cone} does not have {self.dim} rays")
            self.cone_inverse(cone)

    def walls(self) -> dict[tuple[int, ...], list[int]]:
        """Codimension-one faces mapped to the cones containing them."""
        out: dict[tuple[int, ...], list[int]] = {}
        for i, cone in enumerate(self.cones):
            for face in combinations(cone, self.dim - 1):
                out.setdefault(face, []).append(i)
        return out

    def adjacency(self) -> list[tuple[int, int]]:
        return sorted(tuple(v) for v in self.walls().values() if len(v) == 2)

    def is_pseudomanifold(self) -> bool:
        """Every wall lies in exactly two maximal cones (the checkable part of completeness)."""
        return all(len(v) == 2 for v in self.walls().values())

    def ray_lookup(self) -> dict[Vec, int]:
        return {v: k for k, v in self.rays.items()}


# ------------------------------------------------------------------- Cambrian
@dataclass(frozen=True)
class CambrianRay:
    vector: Vec
    w: int
    J: tuple[int, ...]


def ray_of(G: CoxeterGroup, w: int, J: Sequence[int]) -> Vec:
    """The ray rho(w, J) = w . omega_{s'} for {s'} = S - J; J must be n-1 ascents of w."""
    J = tuple(sorted(set(J)))
    if len(J) != G.n - 1:
        raise BadAscentSet("J must have n-1 elements")
    asc = set(G.ascents(w))
    bad = [s for s in J if s not in asc]
    if bad:
        raise BadAscentSet(f"{[G.labels[s] for s in bad]} are descents of {G.word_str(w)}")
    (sp,) = [s for s in range(G.n) if s not in J]
    return G.act(w, G.fundamental_weights()[sp])


def phi(G: CoxeterGroup, w: int, J: Sequence[int], c: Sequence[int]) -> int:
    """The almost positive root attached to the Cambrian ray with provenance (w, J)."""
    if not is_antisortable(G, w, c):
        raise NotAntisortable(G.word_str(w))
    J = tuple(sorted(J))
    if w == 0:
        (sp,) = [s for s in range(G.n) if s not in J]
        return G.N + sp
    if sorted(G.ascents(w)) != list(J):
        raise BadAscentSet("J must be the ascent set of w")
    v = pi_down(G, w, c)
    cov = G.cover_reflections(v)
    if len(cov) != 1:
        raise NoJoinIrreducible(f"pi_down of {G.word_str(w)} is not join-irreducible")
    return cov[0]


def cambrian_rays(G: CoxeterGroup, c: Sequence[int]) -> dict[int, CambrianRay]:
    """All Cambrian rays, keyed by ``phi_c`` of the ray."""
    c = tuple(c)
    memo = _cache(G, "cambrian_rays")
    hit = memo.get(c)
    if hit is not None:
        return hit
    om = G.fundamental_weights()
    out: dict[int, CambrianRay] = {}
    for sp in range(G.n):
        J = tuple(s for s in range(G.n) if s != sp)
        out[G.N + sp] = CambrianRay(om[sp], 0, J)
    data = cambrian(G, c)
    for w in data.antisortables:
        d = G.descents(w)
        if len(d) != 1:
            continue
        J = tuple(G.ascents(w))
        a = phi(G, w, J, c)
        if a in out:
            raise AssertionError("phi_c is not injective")
        out[a] = CambrianRay(G.act(w, om[d[0]]), w, J)
    memo[c] = out
    return out


def phi_of_vector(G: CoxeterGroup, v: Vec, c: Sequence[int]) -> int:
    """``phi_c`` of a bare ray: scan the Cambrian rays for a positive multiple of ``v``."""
    hits = [a for a, r in cambrian_rays(G, c).items() if positive_multiple(r.vector, tuple(v))]
    if len(hits) != 1:
        raise ValueError("vector does not span a ray of the Cambrian fan")
    return hits[0]


def phi_inverse(G: CoxeterGroup, a: int, c: Sequence[int]) -> CambrianRay:
    """Cambrian ray of an almost positive root, located through join-irreducibles.

    ``-alpha_s`` goes to rho_s.  For a positive root ``alpha_t``: take the
    unique c-sortable join-irreducible ``v`` whose cover reflection is ``t``,
    then ``w = pi_up(v)`` and ``J`` = the ascents of ``w``.
    """
    om = G.fundamental_weights()
    if G.is_negative_simple(a):
        sp = a - G.N
        return CambrianRay(om[sp], 0, tuple(s for s in range(G.n) if s != sp))
    if not G.is_positive(a):
        raise ValueError("not an almost positive root")
    data = cambrian(G, c)
    vs = [x for x in data.sortables if G.cover_reflections(x) == [a]]
    if len(vs) != 1:
        raise NoJoinIrreducible(f"{len(vs)} sortable join-irreducibles with cover reflection {a}")
    w = pi_up(G, vs[0], c)
    J = tuple(G.ascents(w))
    (sp,) = G.descents(w)
    return CambrianRay(G.act(w, om[sp]), w, J)


def cambrian_fan(G: CoxeterGroup, c: Sequence[int]) -> Fan:
    c = tuple(c)
    memo = _cache(G, "cambrian_fan")
    hit = memo.get(c)
    if hit is not None:
        return hit
    rays = cambrian_rays(G, c)
    data = cambrian(G, c)
    cones = sorted(cl_map(G, x, c) for x in data.sortables)
    fan = Fan(
        rays={a: r.vector for a, r in sorted(rays.items())},
        cones=cones,
        dim=G.n,
        labels={a: G.root_label(a) for a in rays},
        provenance={a: (r.w, r.J) for a, r in rays.items()},
        field_name=G.field,
    )
    fan.check_simplicial()
    memo[c] = fan
    return fan


def cluster_fan(G: CoxeterGroup, c: Sequence[int]) -> Fan:
    c = tuple(c)
    memo = _cache(G, "cluster_fan")
    hit = memo.get(c)
    if hit is not None:
        return hit
    cx = cluster_complex(G, c)
    apr = G.almost_positive_roots()
    fan = Fan(
        rays={a: G.roots[a] for a in apr},
        cones=list(cx.clusters),
        dim=G.n,
        labels={a: G.root_label(a) for a in apr},
        field_name=G.field,
    )
    fan.check_simplicial()
    memo[c] = fan
    return fan


def coxeter_fan(G: CoxeterGroup) -> tuple[Fan, list[int]]:
    """The Coxeter fan; returns the fan and, per cone, the element whose chamber it is."""
    om = G.fundamental_weights()
    lookup: dict[Vec, int] = {}
    cones = []
    for w in G.elements():
        cone = []
        for s in range(G.n):
            v = G.act(w, om[s])
            cone.append(lookup.setdefault(v, len(lookup)))
        cones.append(tuple(sorted(cone)))
    rays = {k: v for v, k in lookup.items()}
    fan = Fan(rays=rays, cones=cones, dim=G.n, field_name=G.field)
    return fan, list(G.elements())


def cone_coefficients(fan: Fan, cone, v):
    return fan.coefficients(tuple(cone), v)


# -------------------------------------------------------------------- zeta_s
def zeta(G: CoxeterGroup, v: Vec, c: Sequence[int], s: int) -> Vec:
    """zeta_s: minus rho_s on rho_s, the reflection s everywhere else."""
    if not is_initial(G, c, s):
        raise NotInitial(f"{G.labels[s]} is not initial")
    if tuple(v) == tuple(G.fundamental_weights()[s]):
        return tuple(-x for x in v)
    return G.reflect(s, v)


# ---------------------------------------------------------------- linear map L
def _element_of(G: CoxeterGroup, letters) -> int:
    return G.from_word(list(letters))


def bipartite_L(G: CoxeterGroup, bp: Bipartition):
    """Matrix (simple-root basis) of L: alpha_s -> -eps_s omega_s."""
    om = G.fundamental_weights()
    cols = [tuple(-bp.eps(s) * x for x in om[s]) for s in range(G.n)]
    return [[cols[j][i] for j in range(G.n)] for i in range(G.n)]


def bipartite_E(G: CoxeterGroup, bp: Bipartition):
    return [[Fraction(-bp.eps(i)) if i == j else Fraction(0) for j in range(G.n)] for i in range(G.n)]


def bipartite_U(G: CoxeterGroup):
    """alpha_s -> omega_s: the inverse Cartan matrix."""
    om = G.fundamental_weights()
    return [[om[j][i] for j in range(G.n)] for i in range(G.n)]


def c_plus_minus(G: CoxeterGroup, bp: Bipartition) -> tuple[int, int]:
    return _element_of(G, sorted(bp.plus)), _element_of(G, sorted(bp.minus))


# ----------------------------------------------------------- induced orders
def _wall_normal(fan: Fan, face: Sequence[int]):
    rows = [list(fan.rays[r]) for r in face]
    ns = linalg.nullspace(rows, fan.dim)
    if len(ns) != 1:
        raise RaysDependent(f"wall {face} does not span a hyperplane")
    return ns[0]


def induced_order(fan: Fan, v: Vec) -> list[tuple[int, int]]:
    """Orient every wall by the side of ``v``: the cone on v's side is the lower one.

    Returns the oriented pairs ``(lower, upper)`` (cone indices), sorted, after
    checking acyclicity.  These are the cover relations of the induced order
    whenever the fan comes from a lattice.
    """
    edges = []
    for face, owners in fan.walls().items():
        if len(owners) != 2:
            continue
        f = _wall_normal(fan, face)
        sv = sign(linalg.dot(f, v))
        if sv == 0:
            raise GenericityFailure(f"vector lies on the wall spanned by {face}")
        i, j = owners
        extra_i = next(r for r in fan.cones[i] if r not in face)
        si = sign(linalg.dot(f, fan.rays[extra_i]))
        edges.append((i, j) if si == sv else (j, i))
    _toposort(len(fan.cones), edges)
    return sorted(edges)


def _toposort(k: int, edges) -> list[int]:
    ts = graphlib.TopologicalSorter({i: set() for i in range(k)})
    for a, b in edges:
        ts.add(b, a)
    try:
        return list(ts.static_order())
    except graphlib.CycleError:
        raise CycleError("induced orientation has a cycle") from None


def bottom_face(fan: Fan, cone: tuple[int, ...], v: Vec) -> tuple[int, ...]:
    """Rays of ``cone`` kept by the facets separating it from its lower neighbours.

    Facet opposite ray ``r`` separates ``cone`` from a lower neighbour exactly
    when ``v`` and ``r`` lie on opposite sides of it, i.e. when the coefficient
    of ``r`` in ``v`` is negative.  What remains are the positive coefficients.
    """
    coeffs = fan.coefficients(cone, v)
    if any(sign(x) == 0 for x in coeffs):
        raise GenericityFailure("vector lies on a facet hyperplane of the cone")
    return tuple(r for r, x in zip(cone, coeffs) if sign(x) > 0)


def default_generic_vector(fan: Fan, cone: Sequence[int]) -> Vec:
    """``sum_k (1 + k/(10 n)) r_k`` over the rays ``r_k`` of ``cone``."""
    n = fan.dim
    out = [Fraction(0)] * n
    for k, r in enumerate(cone):
        lam = 1 + Fraction(k, 10 * n)
        for i in range(n):
            out[i] = out[i] + lam * fan.rays[r][i]
    return tuple(out)
