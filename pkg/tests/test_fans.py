from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from camfan import named_group
from camfan.clusters import cl_map, sigma
from camfan.errors import BadAscentSet, CycleError, GenericityFailure, NotAntisortable, NotInitial
from camfan.fans import (
    Fan,
    _toposort,
    bottom_face,
    cambrian_fan,
    cambrian_rays,
    cluster_fan,
    coxeter_fan,
    default_generic_vector,
    induced_order,
    phi,
    phi_inverse,
    phi_of_vector,
    ray_of,
    zeta,
)
from camfan.scalar import format_scalar, sign
from camfan.sortable import all_coxeter_elements, cambrian, initial_letters, is_antisortable, rotate
from camfan.types import TEST_GROUPS

from oracles import catalan

SMALL = TEST_GROUPS["rank2"] + TEST_GROUPS["rank3"]


def solve(M, v):
    """Exact Gaussian elimination for the coefficients of v in the columns of M."""
    n = len(v)
    A = [[M[i][j] for j in range(n)] + [v[i]] for i in range(n)]
    for col in range(n):
        p = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[p] = A[p], A[col]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col] / A[col][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[i][n] / A[i][i] for i in range(n)]


def test_b2_cambrian_rays_golden():
    G = named_group("B2")
    got = {
        G.root_label(a): ([format_scalar(x) for x in r.vector], G.word_str(r.w), r.J)
        for a, r in cambrian_rays(G, (0, 1)).items()
    }
    assert got == {
        "a[s0]": (["0", "1/2"], "s0", (1,)),
        "a[s1]": (["-1", "-1"], "s1s0s1", (0,)),
        "a[s1s0s1]": (["-1", "-1/2"], "s0s1s0", (1,)),
        "a[s0s1s0]": (["-1", "0"], "s0s1", (0,)),
        "-a[s0]": (["1", "1/2"], "", (1,)),
        "-a[s1]": (["1", "1"], "", (0,)),
    }


def test_b2_fans_have_six_cones():
    G = named_group("B2")
    for c in [(0, 1), (1, 0)]:
        for fan in (cambrian_fan(G, c), cluster_fan(G, c)):
            assert len(fan.cones) == 6 and fan.is_pseudomanifold()
            assert len(fan.walls()) == 6


@pytest.mark.parametrize("name", SMALL)
def test_chambers_glue_into_cambrian_cones(name):
    # every chamber lies, by an independent exact solve, in the cone of its pi_down
    G = named_group(name)
    om = G.fundamental_weights()
    for c in all_coxeter_elements(G):
        data = cambrian(G, c)
        fan = cambrian_fan(G, c)
        assert len(fan.cones) == catalan(name)
        for w in G.elements():
            cone = cl_map(G, data.pidown[w], c)
            M = [[fan.rays[r][i] for r in cone] for i in range(G.n)]
            for s in range(G.n):
                coeffs = solve(M, G.act(w, om[s]))
                assert all(sign(x) >= 0 for x in coeffs)


@pytest.mark.parametrize("name", SMALL + ["A4", "D4"])
def test_phi_and_phi_inverse(name):
    G = named_group(name)
    for c in all_coxeter_elements(G):
        rays = cambrian_rays(G, c)
        assert sorted(rays) == list(G.almost_positive_roots())
        for a, r in rays.items():
            assert phi_inverse(G, a, c) == r
            assert phi(G, r.w, r.J, c) == a
            assert ray_of(G, r.w, r.J) == r.vector


def test_phi_of_bare_vector():
    G = named_group("H3")
    c = (0, 1, 2)
    for a, r in cambrian_rays(G, c).items():
        assert phi_of_vector(G, tuple(3 * x for x in r.vector), c) == a
    om = G.fundamental_weights()
    with pytest.raises(ValueError):
        phi_of_vector(G, tuple(x + y for x, y in zip(om[0], om[1])), c)  # inside a 2-face, not a ray


def test_ray_and_phi_errors():
    G = named_group("A2")
    with pytest.raises(BadAscentSet):
        ray_of(G, 0, [0, 1])
    with pytest.raises(BadAscentSet):
        ray_of(G, G.from_word("s0"), [0])
    w = next(w for w in G.elements() if not is_antisortable(G, w, (0, 1)))
    with pytest.raises(NotAntisortable):
        phi(G, w, G.ascents(w), (0, 1))
    with pytest.raises(NotInitial):
        zeta(G, G.fundamental_weights()[0], (0, 1), 1)


@pytest.mark.parametrize("name", ["B2", "A3", "H3"])
def test_zeta_carries_fans(name):
    G = named_group(name)
    for c in all_coxeter_elements(G):
        for s in initial_letters(G, c):
            c2 = rotate(G, c, s)
            rays1, rays2 = cambrian_rays(G, c), cambrian_rays(G, c2)
            for a, r in rays1.items():
                assert rays2[sigma(G, s, a)].vector == zeta(G, r.vector, c, s)


def test_induced_order_on_weak_order():
    G = named_group("A3")
    fan, owners = coxeter_fan(G)
    start = owners.index(0)
    v = default_generic_vector(fan, fan.cones[start])
    edges = {(owners[i], owners[j]) for i, j in induced_order(fan, v)}
    assert edges == set(G.hasse_edges())


def test_induced_order_errors():
    G = named_group("B2")
    fan = cluster_fan(G, (0, 1))
    with pytest.raises(GenericityFailure):
        induced_order(fan, G.roots[0])  # a ray spans a wall
    with pytest.raises(CycleError):
        _toposort(3, [(0, 1), (1, 2), (2, 0)])
    order = _toposort(3, [(2, 0), (0, 1)])
    assert sorted(order) == [0, 1, 2] and order.index(2) < order.index(0) < order.index(1)


def test_bottom_face():
    G = named_group("A2")
    fan = cluster_fan(G, (0, 1))
    cone = fan.cones[0]
    v = default_generic_vector(fan, cone)
    assert bottom_face(fan, cone, v) == cone
    assert bottom_face(fan, cone, tuple(-x for x in v)) == ()
    with pytest.raises(GenericityFailure):
        bottom_face(fan, cone, fan.rays[cone[0]])


def test_default_generic_vector_weights():
    fan = Fan(rays={0: (Fraction(1), Fraction(0)), 1: (Fraction(0), Fraction(1))}, cones=[(0, 1)], dim=2)
    assert default_generic_vector(fan, (0, 1)) == (Fraction(1), Fraction(21, 20))


@st.composite
def group_c_w(draw):
    G = named_group(draw(st.sampled_from(SMALL)))
    c = draw(st.sampled_from(all_coxeter_elements(G)))
    return G, c, draw(st.integers(0, G.order - 1))


@given(group_c_w())
def test_pi_down_chamber_point_in_cone(data):
    G, c, w = data
    fan = cambrian_fan(G, c)
    cone = cl_map(G, cambrian(G, c).pidown[w], c)
    om = G.fundamental_weights()
    v = tuple(sum(G.act(w, om[s])[i] for s in range(G.n)) for i in range(G.n))
    assert fan.contains(cone, v)
    assert bottom_face(fan, cone, v) == cone
