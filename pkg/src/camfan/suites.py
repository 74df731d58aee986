"""Verification suites.

Each suite takes a group and a Coxeter word and fills a :class:`Report` with
named check counts.  Nothing here is trusted by the constructions themselves:
a suite recomputes a statement by a second route and compares.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from . import linalg
from .bridges import (
    b_matrix,
    check_conjecture_orthogonality,
    cluster_to_nc,
    g_vector_identity,
    geom_bijection_bipartite,
    inverse_cl,
    narayana,
    nc_subspace,
    symmetrizer,
    twisted_base_cluster,
    verify_quasi_cartan,
)
from .clusters import (
    big_R,
    big_R_by_sigma_c,
    bipartition_from_word,
    cl_map,
    cluster_complex,
    epsilon_pair,
    in_parabolic_apr,
    little_r,
    sigma,
    tau,
)
from .coxeter import CoxeterGroup, parabolic_subgroup
from .errors import CamfanError, NotBipartiteWord
from .fans import (
    bipartite_L,
    c_plus_minus,
    cambrian_fan,
    cambrian_rays,
    cluster_fan,
    coxeter_fan,
    default_generic_vector,
    induced_order,
    phi,
    phi_inverse,
    positive_multiple,
    zeta,
)
from .report import Report, Timer
from .scalar import sign
from .sortable import (
    cambrian,
    canonical_coxeter_word,
    delete_letters,
    final_letters,
    initial_letters,
    is_antisortable,
    is_sortable,
    is_sortable_recursive,
    pi_down,
    pi_up,
    rotate,
    z_inverse,
    z_map,
)

__all__ = ["SUITES", "PRIMARY_SUITES", "run_suite", "run_all", "verify_span", "verify_L_iso"]


def _w(G: CoxeterGroup, w: int) -> str:
    return G.word_str(w) or "1"


def _roots(G: CoxeterGroup, C) -> str:
    return "{" + ", ".join(G.root_label(a) for a in C) + "}"


# ------------------------------------------------------------------- core
def suite_core(G: CoxeterGroup, c, rep: Report, seed: int = 0, samples: int = 200):
    """Weak order, inversion sets, parabolic projections and the weight basis."""
    N = G.N
    for w in G.elements():
        rep.check(G.inversion_set(w) == G.inversion_set_from_perm(w), "inversion_sets_agree", lambda: _w(G, w))
        rep.check(
            G.inversion_set(G.mul(w, G.w0)) == set(range(N)) - G.inversion_set(w),
            "inversions_complement_w0",
            lambda: _w(G, w),
        )
        for s in range(G.n):
            ws = G.right[w][s]
            down = G.perm[w][s] >= N
            rep.check(G.length[ws] == G.length[w] + (-1 if down else 1), "length_changes_by_one", lambda: (_w(G, w), s))
    # join/meet are least upper / greatest lower bounds
    rng = random.Random(seed)
    elems = list(G.elements())
    if G.order <= 48:
        pairs = list(combinations(elems, 2))
    else:
        pairs = [tuple(rng.sample(elems, 2)) for _ in range(samples)]
    for u, v in pairs:
        j, m = G.weak_join(u, v), G.weak_meet(u, v)
        ok_j = G.weak_leq(u, j) and G.weak_leq(v, j)
        ok_m = G.weak_leq(m, u) and G.weak_leq(m, v)
        for z in elems:
            if ok_j and G.weak_leq(u, z) and G.weak_leq(v, z) and not G.weak_leq(j, z):
                ok_j = False
            if ok_m and G.weak_leq(z, u) and G.weak_leq(z, v) and not G.weak_leq(z, m):
                ok_m = False
        rep.check(ok_j, "join_is_least_upper_bound", lambda: (_w(G, u), _w(G, v)))
        rep.check(ok_m, "meet_is_greatest_lower_bound", lambda: (_w(G, u), _w(G, v)))
    # fundamental weights and the root expansion in the weight basis
    om = G.fundamental_weights()
    for s in range(G.n):
        for r in range(G.n):
            rep.check(G.weight_coords(om[s])[r] == (1 if r == s else 0), "weights_dual_to_coroots", (s, r))
        alpha = tuple(1 if i == s else 0 for i in range(G.n))
        coeff = G.weight_coords(alpha)
        rebuilt = tuple(sum((coeff[r] * om[r][i] for r in range(G.n)), 0) for i in range(G.n))
        rep.check(rebuilt == alpha, "root_in_weight_basis", s)
    rep.check(linalg.is_positive_definite(G.form), "form_positive_definite")
    # Proj_J(wD) lies in w_J D_J
    for k in range(1, G.n):
        for J in combinations(range(G.n), k):
            for w in G.elements():
                wJ = G.parabolic_part(w, J)
                winv = G.inverse(wJ)
                for s in range(G.n):
                    p = G.act(winv, G.proj_parabolic(J, G.act(w, om[s])))
                    wc = G.weight_coords(p)
                    rep.check(all(sign(wc[r]) >= 0 for r in J), "projection_into_parabolic_chamber", lambda: (J, _w(G, w), s))


# --------------------------------------------------------------- sortables
def suite_sortable(G: CoxeterGroup, c, rep: Report):
    data = cambrian(G, c)
    srt = set(data.sortables)
    for w in G.elements():
        rep.check(is_sortable(G, w, c) == is_sortable_recursive(G, w, c), "sortable_two_routes", lambda: _w(G, w))
        x = data.pidown[w]
        rep.check(x in srt and G.weak_leq(x, w), "pi_down_below_and_sortable", lambda: _w(G, w))
        rep.check(pi_down(G, x, c) == x, "pi_down_idempotent", lambda: _w(G, w))
        top = pi_up(G, w, c)
        rep.check(G.weak_leq(w, top) and is_antisortable(G, top, c), "pi_up_above_and_antisortable", lambda: _w(G, w))
        rep.check(top == data.pi_up(w), "pi_up_constant_on_class", lambda: _w(G, w))
        for r in range(G.n):
            rep.check(G.is_left_descent(w, r) == G.is_left_descent(x, r), "no_crossing", lambda: (_w(G, w), r))
        for y in G.upper_covers(w):
            rep.check(G.weak_leq(x, data.pidown[y]), "pi_down_order_preserving", lambda: (_w(G, w), _w(G, y)))
    ordered = sorted(srt)
    for i, x in enumerate(ordered):
        for y in ordered[i:]:
            rep.check(G.weak_join(x, y) in srt, "sublattice_join", lambda: (_w(G, x), _w(G, y)))
            rep.check(G.weak_meet(x, y) in srt, "sublattice_meet", lambda: (_w(G, x), _w(G, y)))
    # join-irreducibles: pi_up and pi_down are mutually inverse bijections
    ji_sort = [v for v in srt if G.is_join_irreducible(v)]
    ji_anti = [v for v in data.antisortables if G.is_join_irreducible(v)]
    for v in ji_sort:
        u = data.pi_up(v)
        rep.check(u in ji_anti and data.pidown[u] == v, "irr_bijection_from_sortable", lambda: _w(G, v))
    for u in ji_anti:
        rep.check(data.pi_up(data.pidown[u]) == u, "irr_bijection_from_antisortable", lambda: _w(G, u))
    covs = sorted(G.cover_reflections(v)[0] for v in ji_sort)
    rep.check(covs == list(range(G.N)), "irr_cover_reflections_are_T", covs)
    # antisortable covers for initial letters
    for s in initial_letters(G, c):
        scs = rotate(G, c, s)
        for w in data.antisortables:
            if G.is_left_descent(w, s):
                continue
            sw = G.left[w][s]
            ok = G.length[sw] == G.length[w] + 1 and G.weak_join(G.right[0][s], w) == sw and is_antisortable(G, w, scs)
            rep.check(ok, "antisortable_initial_cover", lambda: (s, _w(G, w)))
    # pi_up of a final letter
    w0 = G.w0
    for s in final_letters(G, c):
        conj = G.mul(G.mul(w0, G.right[0][s]), w0)
        sp = next(t for t in range(G.n) if G.right[0][t] == conj)
        expect = G.mul(w0, G.longest_in([t for t in range(G.n) if t != sp]))
        rep.check(pi_up(G, G.right[0][s], c) == expect, "pi_up_of_final_letter", s)
    # classes, bottoms and tops
    for x, cls in data.classes.items():
        interval = [v for v in G.elements() if G.weak_leq(x, v) and G.weak_leq(v, cls.top)]
        rep.check(tuple(interval) == cls.members, "class_is_interval", lambda: _w(G, x))
    for s in initial_letters(G, c):
        e = G.right[0][s]
        rep.check(data.class_of(e).members == (e,), "initial_letter_singleton_class", s)


def _count_irreducibles(G: CoxeterGroup, elems) -> tuple[int, int]:
    ji = sum(1 for v in elems if len(G.descents(v)) == 1)
    mi = sum(1 for v in elems if len(G.ascents(v)) == 1)
    return ji, mi


def suite_counts(G: CoxeterGroup, c, rep: Report):
    """Sortables, clusters, classes and noncrossing subspaces are equinumerous."""
    data = cambrian(G, c)
    cx = cluster_complex(G, c)
    ncs = {nc_subspace(G, x, c) for x in data.sortables}
    k = len(data.sortables)
    rep.check(len(cx.clusters) == k, "clusters_equal_sortables", (len(cx.clusters), k))
    rep.check(len(data.classes) == k, "classes_equal_sortables", (len(data.classes), k))
    rep.check(len(ncs) == k, "nc_subspaces_equal_sortables", (len(ncs), k))
    T = G.N
    sji, smi = _count_irreducibles(G, data.sortables)
    aji, ami = _count_irreducibles(G, data.antisortables)
    for key, val in (("sortable_join_irreducibles", sji), ("sortable_meet_irreducibles", smi),
                     ("antisortable_join_irreducibles", aji), ("antisortable_meet_irreducibles", ami)):
        rep.check(val == T, key, (val, T))
    rep.notes.append(f"sortables={k} reflections={T}")


# -------------------------------------------------------------- congruence
def congruence_quadruples(G: CoxeterGroup, c, samples: int | None = None, seed: int = 0):
    """Quadruples (a1, a2, b1, b2) with a1 = a2 and b1 = b2 mod Theta_c.

    All of them when ``samples`` is None, otherwise ``samples`` draws: a1 and b1
    uniform in W, a2 and b2 uniform in their classes.
    """
    data = cambrian(G, c)
    if samples is None:
        pairs = [(a, b) for cls in data.classes.values() for a in cls.members for b in cls.members]
        for a1, a2 in pairs:
            for b1, b2 in pairs:
                yield a1, a2, b1, b2
        return
    rng = random.Random(seed)
    for _ in range(samples):
        a1, b1 = rng.randrange(G.order), rng.randrange(G.order)
        a2 = rng.choice(data.class_of(a1).members)
        b2 = rng.choice(data.class_of(b1).members)
        yield a1, a2, b1, b2


def suite_congruence(G: CoxeterGroup, c, rep: Report, samples: int | None = -1, seed: int = 0):
    """Theta_c is a lattice congruence: joins and meets respect classes.

    ``samples=-1`` picks exhaustive mode when the quadruple count is at most
    200000 and 10^4 random quadruples otherwise.
    """
    data = cambrian(G, c)
    if samples == -1:
        total = sum(len(cl.members) ** 2 for cl in data.classes.values()) ** 2
        samples = None if total <= 200000 else 10_000
    rep.notes.append("exhaustive" if samples is None else f"sampled {samples} quadruples, seed {seed}")
    pd = data.pidown
    for a1, a2, b1, b2 in congruence_quadruples(G, c, samples, seed):
        rep.check(pd[G.weak_join(a1, b1)] == pd[G.weak_join(a2, b2)], "join_compatible", lambda: tuple(_w(G, x) for x in (a1, a2, b1, b2)))
        rep.check(pd[G.weak_meet(a1, b1)] == pd[G.weak_meet(a2, b2)], "meet_compatible", lambda: tuple(_w(G, x) for x in (a1, a2, b1, b2)))
    # the three order-theoretic conditions: intervals, monotone projections
    for w in G.elements():
        cls = data.class_of(w)
        rep.check(G.weak_leq(cls.bottom, w) and G.weak_leq(w, cls.top), "class_contains_interval_ends", lambda: _w(G, w))
        for y in G.upper_covers(w):
            rep.check(G.weak_leq(pd[w], pd[y]), "pi_down_monotone", lambda: (_w(G, w), _w(G, y)))
            rep.check(G.weak_leq(data.pi_up(w), data.pi_up(y)), "pi_up_monotone", lambda: (_w(G, w), _w(G, y)))


# ----------------------------------------------------------------- rays
def suite_rays(G: CoxeterGroup, c, rep: Report):
    rays = cambrian_rays(G, c)
    apr = list(G.almost_positive_roots())
    rep.check(sorted(rays) == apr, "phi_bijective_onto_almost_positive", len(rays))
    om = G.fundamental_weights()
    for a in apr:
        ray = rays[a]
        other = phi_inverse(G, a, c)
        rep.check(other.vector == ray.vector, "phi_inverse_two_routes", lambda: G.root_label(a))
        rep.check(phi(G, ray.w, ray.J, c) == a, "phi_of_phi_inverse", lambda: G.root_label(a))
    for s in initial_letters(G, c):
        below = sorted(a for a in apr if sign(G.weight_coords(rays[a].vector)[s]) > 0)
        rep.check(below == [G.N + s] and rays[G.N + s].vector == om[s], "only_ray_below_initial_wall", lambda: (s, below))
        # parabolic rays: compare with the Cambrian fan of W_<s>
        J = [t for t in range(G.n) if t != s]
        if not J:
            continue
        H, _, root_map = parabolic_subgroup(G, J)
        pos = {t: k for k, t in enumerate(J)}
        cH = tuple(pos[t] for t in delete_letters(c, [s]))
        hrays = cambrian_rays(H, cH)
        back = {}
        for aH in H.almost_positive_roots():
            back[root_map[aH]] = aH
        for a in apr:
            if not in_parabolic_apr(G, a, s):
                continue
            r = rays[a].vector
            rep.check(G.weight_coords(r)[s] == 0, "parabolic_ray_on_wall", lambda: (s, G.root_label(a)))
            emb = [0] * G.n
            for k, t in enumerate(J):
                emb[t] = hrays[back[a]].vector[k]
            rep.check(positive_multiple(G.proj_parabolic(J, r), tuple(emb)), "parabolic_ray_projects", lambda: (s, G.root_label(a)))


# ------------------------------------------------------------------- span
def verify_span(G: CoxeterGroup, c: Sequence[int], rep: Report | None = None) -> Report:
    """Chambers against Cambrian cones, Hasse degrees and the induced orders."""
    c = tuple(c)
    rep = rep or Report("span", repr(G), G.word_str(G.from_word(c), ","))
    data = cambrian(G, c)
    fan = cambrian_fan(G, c)
    om = G.fundamental_weights()
    cone_of = {x: cl_map(G, x, c) for x in data.sortables}
    for w in G.elements():
        vs = [G.act(w, om[s]) for s in range(G.n)]
        inside = [x for x, cone in cone_of.items() if all(fan.contains(cone, v) for v in vs)]
        rep.check(inside == [data.pidown[w]], "chamber_in_exactly_its_class_cone", lambda: (_w(G, w), [_w(G, x) for x in inside]))
    rep.check(sum(len(cl.members) for cl in data.classes.values()) == G.order, "fan_covers_all_chambers")
    rep.check(fan.is_pseudomanifold(), "cambrian_fan_pseudomanifold")
    hasse = data.hasse()
    deg = {x: 0 for x in data.sortables}
    edges = set()
    for x, ups in hasse.items():
        for y in ups:
            deg[x] += 1
            deg[y] += 1
            edges.add((x, y))
    for x, d in deg.items():
        rep.check(d == G.n, "hasse_degree_is_rank", lambda: (_w(G, x), d))
        rep.check(data.up_covers_by_ascents(x) == sorted(hasse[x]), "upper_covers_two_routes", lambda: _w(G, x))
        down = sorted(y for y in data.sortables if x in hasse[y])
        rep.check(data.down_covers_by_descents(x) == down, "lower_covers_two_routes", lambda: _w(G, x))
    index = {cone: x for x, cone in cone_of.items()}
    adj = {tuple(sorted((index[fan.cones[i]], index[fan.cones[j]]))) for i, j in fan.adjacency()}
    rep.check(adj == {tuple(sorted(e)) for e in edges}, "adjacent_cones_are_covers")
    vD = tuple(sum((1 + Fraction(k, 10 * G.n)) * om[k][i] for k in range(G.n)) for i in range(G.n))
    induced = {(index[fan.cones[i]], index[fan.cones[j]]) for i, j in induced_order(fan, vD)}
    rep.check(induced == edges, "cambrian_order_induced_by_D")
    if G.order <= 2000:
        cfan, owners = coxeter_fan(G)
        weak = {(owners[i], owners[j]) for i, j in induced_order(cfan, vD)}
        rep.check(weak == set(G.hasse_edges()), "weak_order_induced_by_D")
    return rep


# ------------------------------------------------------------------- zeta
def suite_zeta(G: CoxeterGroup, c, rep: Report):
    rays = cambrian_rays(G, c)
    data = cambrian(G, c)
    om = G.fundamental_weights()
    for s in initial_letters(G, c):
        c2 = rotate(G, c, s)
        rays2 = cambrian_rays(G, c2)
        look2 = {r.vector: a for a, r in rays2.items()}
        images = set()
        for a, r in rays.items():
            v = zeta(G, r.vector, c, s)
            images.add(v)
            b = look2.get(v)
            rep.check(b == sigma(G, s, a), "phi_scs_zeta_is_sigma_phi", lambda: (s, G.root_label(a)))
        rep.check(images == set(look2), "zeta_maps_ray_sets", s)
        for r in range(G.n):
            if r != s:
                rep.check(zeta(G, om[r], c, s) == om[r], "zeta_fixes_other_simple_rays", (s, r))
        fan2 = cambrian_fan(G, c2)
        cones2 = set(fan2.cones)
        srt2 = set(cambrian(G, c2).sortables)
        seen = set()
        for x in data.sortables:
            img = tuple(sorted(sigma(G, s, a) for a in cl_map(G, x, c)))
            rep.check(img in cones2, "zeta_carries_cones", lambda: (s, _w(G, x)))
            z = z_map(G, x, c, s)
            seen.add(z)
            rep.check(z in srt2 and z_inverse(G, z, c, s) == x, "z_map_round_trip", lambda: (s, _w(G, x)))
            rep.check(z in srt2 and cl_map(G, z, c2) == img, "cl_of_z_is_sigma_cl", lambda: (s, _w(G, x)))
        rep.check(seen == srt2, "z_map_bijective", s)


# ------------------------------------------------------------------- L-iso
def _bipartition_or_none(G, c, rep):
    try:
        return bipartition_from_word(G, c)
    except NotBipartiteWord as exc:
        rep.applicable = False
        rep.notes.append(f"not bipartite: {exc}")
        return None


def verify_L_iso(G: CoxeterGroup, c: Sequence[int], bp=None, rep: Report | None = None) -> Report:
    """Matrix identities for L, the ray correspondence and the cone bijection."""
    c = tuple(c)
    rep = rep or Report("liso", repr(G), G.word_str(G.from_word(c), ","))
    if bp is None:
        bp = _bipartition_or_none(G, c, rep)
        if bp is None:
            return rep
    L = bipartite_L(G, bp)
    cp, cm = c_plus_minus(G, bp)
    Mp, Mm = G.matrix(cp), G.matrix(cm)
    wc = G.from_word(c)
    Mc, Mci = G.matrix(wc), G.matrix(G.inverse(wc))
    neg = lambda M: [[-x for x in row] for row in M]  # noqa: E731
    rep.check(linalg.matmul(Mp, L) == neg(linalg.matmul(L, Mm)), "c_plus_L_is_minus_L_c_minus")
    rep.check(linalg.matmul(Mm, L) == neg(linalg.matmul(L, Mp)), "c_minus_L_is_minus_L_c_plus")
    rep.check(linalg.matmul(Mci, L) == linalg.matmul(L, Mc), "c_inverse_L_is_L_c")
    rep.check(linalg.det(L) != 0, "L_invertible")
    rays = cambrian_rays(G, c)
    image = {}
    for a in G.almost_positive_roots():
        v = tuple(linalg.matvec(L, G.roots[a]))
        t = tau(G, -1, a, bp)
        image[a] = t
        rep.check(positive_multiple(v, rays[t].vector), "L_is_phi_inverse_tau_minus", lambda: G.root_label(a))
        rep.check(v == rays[t].vector, "L_hits_fundamental_vector", lambda: G.root_label(a))
        rep.check(g_vector_identity(G, a, c, bp)["ok"], "g_vector_identity", lambda: G.root_label(a))
    cx = cluster_complex(G, c)
    camb = set(cambrian_fan(G, c).cones)
    hit = set()
    for C in cx.clusters:
        img = tuple(sorted(image[a] for a in C))
        rep.check(img in camb, "L_maps_cluster_cone_to_cambrian_cone", lambda: _roots(G, C))
        hit.add(img)
    rep.check(hit == camb, "L_cone_map_bijective")
    return rep


# ----------------------------------------------------------------- lattice
def suite_lattice(G: CoxeterGroup, c, rep: Report):
    """Cluster-lattice orientation, exchange graph and parabolic restrictions."""
    cx = cluster_complex(G, c)
    data = cambrian(G, c)
    n = G.n
    for a in G.almost_positive_roots():
        rep.check(big_R(G, a, c) == big_R_by_sigma_c(G, a, c), "R_two_routes", lambda: G.root_label(a))
        rep.check(cx.R[a] == -(-little_r(G, a, c) // n), "R_is_ceil_r_over_n", lambda: G.root_label(a))
    nbrs = {i: set() for i in range(len(cx.clusters))}
    for i, C in enumerate(cx.clusters):
        for a in C:
            b = cx.partner(C, a)
            rep.check(cx.R[a] != cx.R[b], "no_R_tie_on_exchange", lambda: (_roots(G, C), G.root_label(a)))
            nbrs[i].add(cx.index[cx.exchange(C, a)])
    rep.check(all(len(v) == n for v in nbrs.values()), "exchange_graph_regular")
    seen, stack = {0}, [0]
    while stack:
        for j in nbrs[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    rep.check(len(seen) == len(cx.clusters), "exchange_graph_connected")
    inv = inverse_cl(G, c)
    hasse = data.hasse()
    camb = {(x, y) for x, ups in hasse.items() for y in ups}
    lat = {(inv[cx.clusters[i]], inv[cx.clusters[j]]) for i, j in cx.lattice_covers()}
    rep.check(lat == camb, "cluster_orientation_matches_cambrian_covers", lambda: len(lat ^ camb))
    bottom, top = cl_map(G, 0, c), cl_map(G, G.w0, c)
    rep.check(not cx.upper_lower(bottom)[1], "bottom_cluster_all_lower")
    rep.check(not cx.upper_lower(top)[0], "top_cluster_all_upper")
    for w in data.sortables:
        cw = set(cl_map(G, w, c))
        for x in G.lower_covers(w):
            common = len(cw & set(cl_map(G, data.pidown[x], c)))
            rep.check(common == n - 1, "cover_clusters_share_facet", lambda: (_w(G, w), _w(G, x)))
    for s in initial_letters(G, c):
        sc = delete_letters(c, [s])
        for w in data.sortables:
            if G.is_left_descent(w, s):
                continue
            expect = tuple(sorted(set(cl_map(G, w, sc)) | {G.N + s}))
            rep.check(cl_map(G, w, c) == expect, "cl_splits_at_initial_letter", lambda: (s, _w(G, w)))
    # restriction to standard parabolics
    for k in range(1, n):
        for J in combinations(range(n), k):
            H, _, root_map = parabolic_subgroup(G, J)
            pos = {t: i for i, t in enumerate(J)}
            cH = tuple(pos[t] for t in c if t in pos)
            hx = cluster_complex(H, cH)
            for C in hx.clusters:
                for a in C:
                    b = hx.partner(C, a)
                    same = (hx.R[a] < hx.R[b]) == (cx.R[root_map[a]] < cx.R[root_map[b]])
                    rep.check(same, "orientation_restricts_to_parabolic", lambda: (J, H.root_label(a), H.root_label(b)))
    # bipartite extras: k_- and the twisted lattice
    try:
        bp = bipartition_from_word(G, c)
    except NotBipartiteWord:
        rep.notes.append("bipartite checks skipped")
        return
    t = {a: tau(G, -1, a, bp) for a in G.almost_positive_roots()}
    for C in cx.clusters:
        for a in C:
            b = cx.partner(C, a)
            lhs = epsilon_pair(G, a, b, bp) == -1
            rep.check(lhs == (cx.R[t[a]] < cx.R[t[b]]), "epsilon_matches_twisted_R", lambda: (_roots(G, C), G.root_label(a)))
    fan = cluster_fan(G, c)
    v = default_generic_vector(fan, twisted_base_cluster(G, bp))
    rep.check(induced_order(fan, v) == cx.twisted_covers(bp), "twisted_order_induced_by_vector")


# -------------------------------------------------------------------- NC
def suite_nc(G: CoxeterGroup, c, rep: Report):
    data = cambrian(G, c)
    cx = cluster_complex(G, c)
    inv = inverse_cl(G, c)
    subs = {}
    for x in data.sortables:
        sub = nc_subspace(G, x, c)
        subs[x] = sub
        rep.check(sub.dim == G.n - len(G.descents(x)), "nc_dimension_is_rank_minus_descents", lambda: _w(G, x))
    rep.check(len(set(subs.values())) == len(subs), "nc_injective")
    rep.check(subs[0].dim == G.n and subs[G.w0].dim == 0, "nc_extremes")
    images = set()
    for C in cx.clusters:
        sub = cluster_to_nc(G, C, c, check=False)
        images.add(sub)
        rep.check(sub == subs[inv[C]], "lower_root_span_is_nc", lambda: _roots(G, C))
    rep.check(len(images) == len(cx.clusters), "lower_root_span_injective")
    try:
        bp = bipartition_from_word(G, c)
    except NotBipartiteWord:
        return
    v = default_generic_vector(cluster_fan(G, c), twisted_base_cluster(G, bp))
    for C in cx.clusters:
        tC = tuple(sorted(tau(G, -1, a, bp) for a in C))
        rep.check(
            geom_bijection_bipartite(G, C, c, bp, v) == subs[inv[tC]],
            "bottom_face_image_is_nc_of_twist",
            lambda: _roots(G, C),
        )


def suite_conj101(G: CoxeterGroup, c, rep: Report):
    out = check_conjecture_orthogonality(G, c)
    rep.checks["orthogonality_pairs"] += out["pairs"]
    for C, a, b in out["violations"]:
        rep.check(False, "orthogonality_pairs", lambda: (_roots(G, C), G.root_label(a), G.root_label(b)))
    rep.notes.append(f"clusters={out['clusters']}")


def suite_quasicartan(G: CoxeterGroup, c, rep: Report):
    out = verify_quasi_cartan(G, c)
    rep.checks["cluster_pairs"] += sum(out["products"].values())
    for v in out["violations"]:
        rep.check(False, "cluster_pairs", lambda: (_roots(G, v[0]),) + tuple(v[1:]))
    rep.notes.append("products/link sizes: " + ", ".join(f"{p}->{k} x{m}" for (p, k), m in sorted(out["products"].items())))
    if not G.crystallographic:
        rep.notes.append("non-crystallographic: products 4cos^2(pi/m) matched against links of size m+2")
        return
    B = b_matrix(G, c)
    d = symmetrizer(G)
    n = G.n
    rep.check(all(d[j] * B[j][k] == -d[k] * B[k][j] for j in range(n) for k in range(n)), "B_skew_symmetrizable")
    Bi = b_matrix(G, tuple(reversed(c)))
    rep.check(all(B[j][k] + Bi[j][k] == 0 for j in range(n) for k in range(n)), "B_reverses_with_c")
    rep.check(b_matrix(G, canonical_coxeter_word(G, c)) == B, "B_commutation_invariant")


def suite_narayana(G: CoxeterGroup, c, rep: Report):
    out = narayana(G, c)
    rep.check(out["descents"] == out["upper_roots"] == out["h_vector"], "three_counts_agree", out)
    rep.check(out["descents"][0] == 1, "identity_only_without_descents")
    rep.check(sum(out["h_vector"]) == len(cluster_complex(G, c).clusters), "sum_is_cluster_count")
    rep.notes.append("narayana=" + ",".join(map(str, out["h_vector"])))


def _span(G, c, rep):
    verify_span(G, c, rep)


def _liso(G, c, rep):
    verify_L_iso(G, c, rep=rep)


SUITES: dict[str, Callable] = {
    "core": suite_core,
    "counts": suite_counts,
    "sortable": suite_sortable,
    "congruence": suite_congruence,
    "rays": suite_rays,
    "span": _span,
    "zeta": suite_zeta,
    "liso": _liso,
    "lattice": suite_lattice,
    "nc": suite_nc,
    "conj101": suite_conj101,
    "quasicartan": suite_quasicartan,
    "narayana": suite_narayana,
}

PRIMARY_SUITES = ("span", "zeta", "liso", "nc", "conj101", "quasicartan", "narayana")


def run_suite(name: str, G: CoxeterGroup, c: Sequence[int], group_name: str | None = None) -> Report:
    """Run one suite; an exception from the library counts as a failure with its message."""
    c = tuple(c)
    rep = Report(name, group_name or repr(G), ",".join(G.labels[s] for s in c))
    with Timer() as t:
        try:
            SUITES[name](G, c, rep)
        except CamfanError as exc:
            rep.check(False, "raised", f"{type(exc).__name__}: {exc}")
    rep.runtime_s = t.elapsed
    return rep


def run_all(G: CoxeterGroup, c: Sequence[int], group_name: str | None = None, names=None) -> list[Report]:
    return [run_suite(name, G, c, group_name) for name in (names or SUITES)]
