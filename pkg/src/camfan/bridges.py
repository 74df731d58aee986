"""Noncrossing subspaces, the orthogonality conjecture, and cluster-algebra side checks.

Subspaces are stored by a canonical basis (reduced row echelon form of a
spanning set, in simple-root coordinates), so equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .clusters import Bipartition, cl_map, cluster_complex, tau
from .coxeter import CoxeterGroup
from .errors import MismatchWithNC, NonCrystallographic, NoRootOnLine, NotSortable
from .fans import (
    bipartite_E,
    bipartite_L,
    bipartite_U,
    bottom_face,
    cambrian_rays,
    cluster_fan,
    default_generic_vector,
    positive_multiple,
)
from .scalar import QuadraticNumber, sign
from .sortable import _cache, cambrian, is_sortable

__all__ = [
    "Subspace",
    "b_matrix",
    "check_conjecture_orthogonality",
    "cluster_to_nc",
    "dihedral_product",
    "g_vector_identity",
    "geom_bijection_bipartite",
    "inverse_cl",
    "narayana",
    "nc_subspace",
    "q_matrix",
    "symmetrizer",
    "twisted_base_cluster",
    "twisted_generic_vector",
    "verify_quasi_cartan",
]


@dataclass(frozen=True)
class Subspace:
    basis: tuple[tuple, ...]
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, vectors, ambient: int) -> "Subspace":
        return cls(linalg.span_rref([list(v) for v in vectors], ambient), ambient)


def nc_subspace(G: CoxeterGroup, w: int, c: Sequence[int]) -> Subspace:
    """Intersection of the reflecting hyperplanes of the cover reflections of ``w``."""
    if not is_sortable(G, w, c):
        raise NotSortable(G.word_str(w))
    rows = []
    for t in G.cover_reflections(w):
        a = G.roots[t]
        rows.append([sum((G.form[i][j] * a[i] for i in range(G.n)), Fraction(0)) for j in range(G.n)])
    return Subspace.span(linalg.nullspace(rows, G.n), G.n)


def inverse_cl(G: CoxeterGroup, c: Sequence[int]) -> dict[tuple[int, ...], int]:
    c = tuple(c)
    memo = _cache(G, "inverse_cl")
    hit = memo.get(c)
    if hit is None:
        hit = {cl_map(G, x, c): x for x in cambrian(G, c).sortables}
        memo[c] = hit
    return hit


def cluster_to_nc(G: CoxeterGroup, C: Sequence[int], c: Sequence[int], check: bool = True) -> Subspace:
    """Span of the Cambrian rays of the lower roots of ``C``."""
    C = tuple(sorted(C))
    cx = cluster_complex(G, c)
    rays = cambrian_rays(G, c)
    lower, _ = cx.upper_lower(C)
    sub = Subspace.span([rays[a].vector for a in lower], G.n)
    if check:
        other = nc_subspace(G, inverse_cl(G, c)[C], c)
        if other != sub:
            raise MismatchWithNC("lower-root span differs from the noncrossing subspace", C)
    return sub


def check_conjecture_orthogonality(G: CoxeterGroup, c: Sequence[int]) -> dict:
    """``<phi^{-1}(lower), upper> = 0`` over every cluster; violations are collected."""
    cx = cluster_complex(G, c)
    rays = cambrian_rays(G, c)
    violations = []
    checked = 0
    for C in cx.clusters:
        lower, upper = cx.upper_lower(C)
        for a in lower:
            for b in upper:
                checked += 1
                if G.bilinear_form(rays[a].vector, G.roots[b]):
                    violations.append((C, a, b))
    return {"clusters": len(cx.clusters), "pairs": checked, "violations": violations}


def geom_bijection_bipartite(G: CoxeterGroup, C: Sequence[int], c: Sequence[int], bp: Bipartition, v=None) -> Subspace:
    """Span of ``L(F)`` for ``F`` the bottom face of cluster cone ``C`` with respect to ``v``."""
    fan = cluster_fan(G, c)
    if v is None:
        v = twisted_generic_vector(G, bp, c)
    F = bottom_face(fan, tuple(sorted(C)), v)
    L = bipartite_L(G, bp)
    return Subspace.span([linalg.matvec(L, G.roots[a]) for a in F], G.n)


def twisted_base_cluster(G: CoxeterGroup, bp: Bipartition) -> tuple[int, ...]:
    """The cluster ``{-eps_s alpha_s}``: ``-alpha_s`` on S_+ and ``alpha_s`` on S_-."""
    return tuple(sorted(G.N + s if bp.eps(s) > 0 else s for s in range(G.n)))


def twisted_generic_vector(G: CoxeterGroup, bp: Bipartition, c: Sequence[int]):
    fan = cluster_fan(G, c)
    return default_generic_vector(fan, twisted_base_cluster(G, bp))


def b_matrix(G: CoxeterGroup, c: Sequence[int]):
    """Exchange matrix B^c from the Cartan matrix and the orientation given by ``c``."""
    if not G.crystallographic:
        raise NonCrystallographic("B^c needs an integral Cartan matrix")
    pos = {s: i for i, s in enumerate(c)}
    A = G.cartan
    out = [[0] * G.n for _ in range(G.n)]
    for j in range(G.n):
        for k in range(G.n):
            if j == k or G.m[j][k] == 2:
                continue
            out[j][k] = int(-A[j][k] if pos[j] < pos[k] else A[j][k])
    return out


def symmetrizer(G: CoxeterGroup):
    return [Fraction(G.form[j][j]) / 2 for j in range(G.n)]


def q_matrix(G: CoxeterGroup, C: Sequence[int], c: Sequence[int]):
    """Wall-normal roots ``beta_j`` of the Cambrian cone of ``C`` and ``Q = <beta_i^vee, beta_j>``."""
    C = tuple(sorted(C))
    rays = cambrian_rays(G, c)
    r = [rays[a].vector for a in C]
    n = G.n
    betas = []
    for j in range(n):
        rows = []
        for i in range(n):
            if i != j:
                rows.append([sum((G.form[p][q] * r[i][p] for p in range(n)), Fraction(0)) for q in range(n)])
        line = linalg.nullspace(rows, n)
        if len(line) != 1:
            raise NoRootOnLine("orthogonal complement is not a line")
        u = tuple(line[0])
        beta = next((k for k in range(G.N) if positive_multiple(G.roots[k], u) or positive_multiple(G.roots[k], tuple(-x for x in u))), None)
        if beta is None:
            raise NoRootOnLine(f"no root on the normal line of cone {C}, facet {j}")
        val = sign(G.bilinear_form(r[j], G.roots[beta]))
        if val == 0:
            raise NoRootOnLine("ray lies on its own wall")
        if val > 0:
            beta = G.neg(beta)
        betas.append(beta)
    vecs = [G.roots[b] for b in betas]
    Q = [
        [2 * G.bilinear_form(vecs[i], vecs[j]) / G.bilinear_form(vecs[i], vecs[i]) for j in range(n)]
        for i in range(n)
    ]
    return betas, Q


def dihedral_product(m: int):
    """``4 cos^2(pi/m)`` for m in 2..6, the value of ``Q_ij Q_ji`` on a rank-two link of type I2(m)."""
    table = {
        2: Fraction(0),
        3: Fraction(1),
        4: Fraction(2),
        5: QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5),
        6: Fraction(3),
    }
    return table[m]


def verify_quasi_cartan(G: CoxeterGroup, c: Sequence[int], crystallographic_only: bool = False) -> dict:
    """For every cluster: products ``Q_ij Q_ji`` against codimension-two link sizes, and D Q > 0.

    Crystallographic groups must give products in {0,1,2,3} with link sizes
    {4,5,6,8}.  In general a product ``4cos^2(pi/m)`` must come with ``m + 2``
    clusters around the face.
    """
    cx = cluster_complex(G, c)
    by_product = {dihedral_product(m): m for m in (2, 3, 4, 5, 6)}
    cryst_links = {Fraction(0): 4, Fraction(1): 5, Fraction(2): 6, Fraction(3): 8}
    violations = []
    seen = {}
    for C in cx.clusters:
        betas, Q = q_matrix(G, C, c)
        n = G.n
        for i in range(n):
            for j in range(i + 1, n):
                p = Q[i][j] * Q[j][i]
                link = cx.link_count([a for k, a in enumerate(C) if k not in (i, j)])
                if G.crystallographic or crystallographic_only:
                    ok = cryst_links.get(p) == link
                else:
                    m = by_product.get(p)
                    ok = m is not None and link == m + 2
                seen[(str(p), link)] = seen.get((str(p), link), 0) + 1
                if not ok:
                    violations.append((C, i, j, str(p), link))
        gram = [[G.bilinear_form(G.roots[a], G.roots[b]) for b in betas] for a in betas]
        D = [G.bilinear_form(G.roots[a], G.roots[a]) / 2 for a in betas]
        DQ = [[D[i] * Q[i][j] for j in range(G.n)] for i in range(G.n)]
        if DQ != gram or not linalg.is_positive_definite(DQ):
            violations.append((C, "DQ not positive definite"))
        if any(Q[i][i] != 2 for i in range(G.n)):
            violations.append((C, "diagonal"))
    return {"clusters": len(cx.clusters), "violations": violations, "products": seen}


def g_vector_identity(G: CoxeterGroup, a: int, c: Sequence[int], bp: Bipartition) -> dict:
    """Compare ``phi_c^{-1}(a)`` with ``U E tau_-(a)``; report the g-vector."""
    ray = cambrian_rays(G, c)[a].vector
    t = G.roots[tau(G, -1, a, bp)]
    rhs = tuple(linalg.matvec(linalg.matmul(bipartite_U(G), bipartite_E(G, bp)), t))
    via_L = tuple(linalg.matvec(bipartite_L(G, bp), t))
    return {
        "root": G.root_label(a),
        "ok": tuple(ray) == rhs and rhs == via_L,
        "g_vector": tuple(G.weight_coords(ray)),
    }


def narayana(G: CoxeterGroup, c: Sequence[int]) -> dict:
    """Three independent counts: sortables by descents, clusters by upper roots, h-vector."""
    data = cambrian(G, c)
    cx = cluster_complex(G, c)
    desc = [0] * (G.n + 1)
    for x in data.sortables:
        desc[len(G.descents(x))] += 1
    return {"descents": desc, "upper_roots": cx.upper_distribution(), "h_vector": cx.h_vector()}
