import pytest
from hypothesis import given
from hypothesis import strategies as st

from camfan import named_group
from camfan.errors import NotInitial, NotSortable
from camfan.sortable import (
    all_coxeter_elements,
    cambrian,
    canonical_coxeter_word,
    coxeter_words_equal,
    final_letters,
    initial_letters,
    is_antisortable,
    is_sortable,
    is_sortable_recursive,
    parse_coxeter_word,
    pi_down,
    pi_up,
    rotate,
    sorting_word,
    z_inverse,
    z_map,
)
from camfan.types import TEST_GROUPS, coxeter_matrix

from oracles import OracleGroup, catalan, sorting_word_by_search

SMALL = TEST_GROUPS["rank2"] + TEST_GROUPS["rank3"]


def test_b2_sortables_golden():
    G = named_group("B2")
    c = (0, 1)
    got = sorted(G.word_str(x) or "1" for x in cambrian(G, c).sortables)
    assert got == sorted(["1", "s0", "s0s1", "s0s1s0", "s0s1s0s1", "s1"])
    assert [sorting_word(G, G.from_word("s0s1s0s1"), c).format(G)] == ["s0s1|s0s1"]
    assert sorting_word(G, G.from_word("s0s1s0"), c).dividers == (2,)


def test_b2_classes():
    G = named_group("B2")
    data = cambrian(G, (0, 1))
    s1 = G.from_word("s1")
    cls = data.classes[s1]
    assert sorted(G.word_str(w) for w in cls.members) == ["s1", "s1s0", "s1s0s1"]
    assert G.word_str(cls.top) == "s1s0s1"
    assert all(len(data.classes[x].members) == 1 for x in data.sortables if x != s1)


def test_pi_up_of_final_letter_b2():
    # pi_up(s) = w0 (w0)_<s'> with s' = w0 s w0; in B2 w0 is central so s' = s
    G = named_group("B2")
    s1 = G.from_word("s1")
    expect = G.mul(G.w0, G.longest_in([0]))
    assert pi_up(G, s1, (0, 1)) == expect == G.from_word("s1s0s1")


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "I2(5)", "A3", "B3", "A1xA2", "H3"])
def test_sortable_against_search_oracle(name):
    G = named_group(name)
    O = OracleGroup(coxeter_matrix(name))
    for c in all_coxeter_elements(G):
        for w in G.elements():
            blocks = sorting_word_by_search(O, O.from_word(G.word[w]), c)
            mine = sorting_word(G, w, c).subsets() if w else ()
            assert mine == blocks
            assert is_sortable(G, w, c) == all(b <= a for a, b in zip(blocks, blocks[1:]))


@pytest.mark.parametrize("name", ["B2", "A3", "B3", "H3", "A1xG2"])
def test_pi_down_is_largest_sortable_below(name):
    G = named_group(name)
    for c in all_coxeter_elements(G):
        srt = [x for x in G.elements() if is_sortable(G, x, c)]
        for w in G.elements():
            below = [x for x in srt if G.weak_leq(x, w)]
            top = [x for x in below if all(G.weak_leq(y, x) for y in below)]
            assert top == [pi_down(G, w, c)]


@pytest.mark.parametrize("name", SMALL + TEST_GROUPS["rank4"])
def test_sortable_count_is_catalan(name):
    G = named_group(name)
    for c in all_coxeter_elements(G):
        assert len(cambrian(G, c).sortables) == catalan(name)


@pytest.mark.parametrize(
    "name,count", [("A3", 4), ("B3", 4), ("D4", 8), ("A1xA2", 2), ("A1xA1xA1", 1), ("F4", 8), ("A2xA2", 4)]
)
def test_number_of_coxeter_elements(name, count):
    assert len(all_coxeter_elements(named_group(name))) == count


def test_coxeter_word_helpers():
    G = named_group("A3")
    c = parse_coxeter_word(G, "s1,s0,s2")
    assert coxeter_words_equal(G, c, (1, 2, 0))
    assert not coxeter_words_equal(G, c, (0, 1, 2))
    assert canonical_coxeter_word(G, (2, 1, 0)) == (2, 1, 0)
    assert canonical_coxeter_word(G, (1, 2, 0)) == (1, 0, 2)
    assert initial_letters(G, c) == [1]
    assert sorted(final_letters(G, c)) == [0, 2]
    assert rotate(G, c, 1) == (0, 2, 1)
    with pytest.raises(NotInitial):
        rotate(G, c, 0)
    with pytest.raises(ValueError):
        parse_coxeter_word(G, "s0,s1")


def test_z_map_errors():
    G = named_group("B2")
    with pytest.raises(NotInitial):
        z_map(G, 0, (0, 1), 1)
    with pytest.raises(NotSortable):
        z_map(G, G.from_word("s1s0"), (0, 1), 0)


# ----------------------------------------------------------- properties
@st.composite
def group_c_w(draw):
    G = named_group(draw(st.sampled_from(SMALL + ["A4", "D4"])))
    c = draw(st.sampled_from(all_coxeter_elements(G)))
    w = draw(st.integers(0, G.order - 1))
    return G, c, w


@given(group_c_w())
def test_projection_properties(data):
    G, c, w = data
    x = pi_down(G, w, c)
    assert is_sortable(G, x, c) and G.weak_leq(x, w) and pi_down(G, x, c) == x
    u = pi_up(G, w, c)
    assert is_antisortable(G, u, c) and G.weak_leq(w, u)
    assert cambrian(G, c).class_of(w).top == u
    assert is_sortable(G, w, c) == is_sortable_recursive(G, w, c)
    for y in G.upper_covers(w):
        assert G.weak_leq(x, pi_down(G, y, c))


@given(group_c_w())
def test_z_map_round_trip(data):
    G, c, w = data
    x = pi_down(G, w, c)
    for s in initial_letters(G, c):
        z = z_map(G, x, c, s)
        assert is_sortable(G, z, rotate(G, c, s))
        assert z_inverse(G, z, c, s) == x


@given(group_c_w())
def test_sortability_depends_only_on_commutation_class(data):
    G, c, w = data
    assert is_sortable(G, w, c) == is_sortable(G, w, canonical_coxeter_word(G, c))
