"""Coxeter elements, c-sorting words, c-sortable elements and the Cambrian lattice.

A Coxeter element is always handled through a word: a tuple of distinct
generator indices.  Words over a proper subset J of S are allowed as well;
they stand for Coxeter elements of the parabolic subgroup W_J and show up in
the rank-reducing recursions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .coxeter import CoxeterGroup
from .errors import NotInitial, NotSortable

__all__ = [
    "CambrianData",
    "SortingWord",
    "all_coxeter_elements",
    "cambrian",
    "canonical_coxeter_word",
    "coxeter_words_equal",
    "delete_letters",
    "final_letters",
    "initial_letters",
    "is_antisortable",
    "is_initial",
    "is_sortable",
    "is_sortable_recursive",
    "parse_coxeter_word",
    "pi_down",
    "pi_up",
    "rotate",
    "sorting_word",
    "z_map",
    "z_inverse",
]

Word = tuple[int, ...]


# ------------------------------------------------------------ Coxeter elements
def parse_coxeter_word(G: CoxeterGroup, text) -> Word:
    """Read ``"s0,s1,s2"`` (or a sequence of labels/indices) as a full Coxeter word."""
    if isinstance(text, str):
        word = G.parse_word(text)
    else:
        word = tuple(G.label_index[x] if isinstance(x, str) else int(x) for x in text)
    if sorted(word) != list(range(G.n)):
        raise ValueError("a Coxeter element must use every generator exactly once")
    return word


def _commute(G: CoxeterGroup, a: int, b: int) -> bool:
    return G.m[a][b] == 2


def canonical_coxeter_word(G: CoxeterGroup, c: Sequence[int]) -> Word:
    """Lexicographically smallest word in the commutation class of ``c``.

    Greedy: repeatedly emit the smallest letter that can be moved to the front
    of what remains.  This picks the lex-least linear extension of the
    orientation of the Coxeter diagram defined by ``c``.
    """
    rest = list(c)
    out = []
    while rest:
        best = None
        for i, s in enumerate(rest):
            if all(_commute(G, s, r) for r in rest[:i]) and (best is None or s < rest[best]):
                best = i
        out.append(rest.pop(best))
    return tuple(out)


def coxeter_words_equal(G: CoxeterGroup, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two words are related by swapping adjacent commuting letters."""
    if sorted(a) != sorted(b):
        return False
    pos_a = {s: i for i, s in enumerate(a)}
    pos_b = {s: i for i, s in enumerate(b)}
    return all(
        (pos_a[s] < pos_a[t]) == (pos_b[s] < pos_b[t])
        for s in a
        for t in a
        if s != t and not _commute(G, s, t)
    )


def all_coxeter_elements(G: CoxeterGroup, J: Iterable[int] | None = None) -> list[Word]:
    """One canonical word per Coxeter element of W (or of W_J)."""
    letters = sorted(range(G.n) if J is None else set(J))
    seen = {}
    for p in permutations(letters):
        key = canonical_coxeter_word(G, p)
        seen.setdefault(key, key)
    return sorted(seen)


def is_initial(G: CoxeterGroup, c: Sequence[int], s: int) -> bool:
    if s not in c:
        return False
    i = list(c).index(s)
    return all(_commute(G, s, r) for r in c[:i])


def is_final(G: CoxeterGroup, c: Sequence[int], s: int) -> bool:
    return is_initial(G, tuple(reversed(c)), s)


def initial_letters(G: CoxeterGroup, c: Sequence[int]) -> list[int]:
    return [s for s in c if is_initial(G, c, s)]


def final_letters(G: CoxeterGroup, c: Sequence[int]) -> list[int]:
    return [s for s in c if is_final(G, c, s)]


def _move_to_front(G: CoxeterGroup, c: Sequence[int], s: int) -> Word:
    if not is_initial(G, c, s):
        raise NotInitial(f"{G.labels[s]} is not initial in {c}")
    return (s,) + tuple(r for r in c if r != s)


def rotate(G: CoxeterGroup, c: Sequence[int], s: int) -> Word:
    """The word for ``s c s`` when ``s`` is initial in ``c``."""
    front = _move_to_front(G, c, s)
    return front[1:] + (s,)


def delete_letters(c: Sequence[int], drop: Iterable[int]) -> Word:
    d = set(drop)
    return tuple(r for r in c if r not in d)


# ---------------------------------------------------------------- sorting words
@dataclass(frozen=True)
class SortingWord:
    """The c-sorting word, split into the blocks between dividers."""

    blocks: tuple[Word, ...]

    @property
    def letters(self) -> Word:
        return tuple(s for b in self.blocks for s in b)

    @property
    def dividers(self) -> tuple[int, ...]:
        """Positions (in ``letters``) after which a divider sits."""
        out, k = [], 0
        for b in self.blocks[:-1]:
            k += len(b)
            out.append(k)
        return tuple(out)

    def subsets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(b) for b in self.blocks)

    def is_nested(self) -> bool:
        sets = self.subsets()
        return all(b <= a for a, b in zip(sets, sets[1:]))

    def format(self, G: CoxeterGroup) -> str:
        return "|".join("".join(G.labels[s] for s in b) for b in self.blocks)


def sorting_word(G: CoxeterGroup, w: int, c: Sequence[int]) -> SortingWord:
    """Leftmost reduced subword of ``c^infinity`` for ``w``."""
    blocks = []
    u = w
    while u != 0:
        block = []
        for s in c:
            if G.mask[u] >> s & 1:
                block.append(s)
                u = G.left[u][s]
        if not block:
            raise ValueError("element is not in the parabolic subgroup of the word")
        blocks.append(tuple(block))
    return SortingWord(tuple(blocks))


def is_sortable(G: CoxeterGroup, w: int, c: Sequence[int]) -> bool:
    return sorting_word(G, w, c).is_nested()


def is_sortable_recursive(G: CoxeterGroup, w: int, c: Sequence[int]) -> bool:
    """Second implementation, by induction on rank and length.

    With ``s`` the first letter of ``c``: if ``s <= w`` then ``w`` is
    c-sortable exactly when ``sw`` is scs-sortable; otherwise exactly when
    ``w`` lies in ``W_<s>`` and is sc-sortable.
    """
    c = tuple(c)
    while True:
        if w == 0:
            return True
        if not c:
            return False
        s = c[0]
        if G.mask[w] >> s & 1:
            w = G.left[w][s]
            c = c[1:] + (s,)
        else:
            c = c[1:]
            if not G.in_parabolic(w, c):
                return False


def _cache(G: CoxeterGroup, name: str) -> dict:
    store = G.__dict__.setdefault("_camfan_caches", {})
    return store.setdefault(name, {})


def pi_down(G: CoxeterGroup, w: int, c: Sequence[int]) -> int:
    """Largest c-sortable element weakly below ``w``, by the recursion on initial letters."""
    memo = _cache(G, "pi_down")
    c = tuple(c)
    key = (w, c)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if w == 0 or not c:
        out = 0
    else:
        s = c[0]
        if G.mask[w] >> s & 1:
            out = G.left[pi_down(G, G.left[w][s], c[1:] + (s,))][s]
        else:
            rest = c[1:]
            out = pi_down(G, G.parabolic_part(w, rest), rest)
    memo[key] = out
    return out


def pi_up(G: CoxeterGroup, w: int, c: Sequence[int]) -> int:
    """Smallest c-antisortable element weakly above ``w``."""
    w0 = G.w0
    return G.mul(pi_down(G, G.mul(w, w0), tuple(reversed(c))), w0)


def is_antisortable(G: CoxeterGroup, w: int, c: Sequence[int]) -> bool:
    return is_sortable(G, G.mul(w, G.w0), tuple(reversed(c)))


def z_map(G: CoxeterGroup, w: int, c: Sequence[int], s: int) -> int:
    """Bijection from c-sortables to scs-sortables (``s`` initial in ``c``)."""
    if not is_initial(G, c, s):
        raise NotInitial(f"{G.labels[s]} is not initial")
    if not is_sortable(G, w, c):
        raise NotSortable(G.word_str(w))
    if G.mask[w] >> s & 1:
        return G.left[w][s]
    return G.weak_join(G.right[0][s], w)


def z_inverse(G: CoxeterGroup, w: int, c: Sequence[int], s: int) -> int:
    """Inverse of :func:`z_map`; ``w`` must be scs-sortable."""
    if not is_initial(G, c, s):
        raise NotInitial(f"{G.labels[s]} is not initial")
    if not is_sortable(G, w, rotate(G, c, s)):
        raise NotSortable(G.word_str(w))
    if G.mask[w] >> s & 1:
        return G.parabolic_part(w, [r for r in range(G.n) if r != s])
    return G.left[w][s]


# ------------------------------------------------------------- Cambrian lattice
@dataclass(frozen=True)
class CambrianClass:
    bottom: int
    top: int
    members: tuple[int, ...]


@dataclass
class CambrianData:
    """Everything about Theta_c that is computed once per Coxeter element."""

    G: CoxeterGroup
    c: Word
    pidown: list[int] = field(repr=False)
    sortables: list[int]
    classes: dict[int, CambrianClass] = field(repr=False)
    _covers: dict | None = field(default=None, repr=False)

    @property
    def antisortables(self) -> list[int]:
        return sorted(cl.top for cl in self.classes.values())

    def class_of(self, w: int) -> CambrianClass:
        return self.classes[self.pidown[w]]

    def pi_up(self, w: int) -> int:
        return self.class_of(w).top

    def hasse(self) -> dict[int, list[int]]:
        """Upper covers among sortables, by restricting weak order to them."""
        if self._covers is None:
            G = self.G
            srt = sorted(self.sortables, key=lambda x: G.length[x])
            up: dict[int, list[int]] = {x: [] for x in srt}
            for i, x in enumerate(srt):
                above = [y for y in srt[i + 1 :] if G.weak_leq(x, y)]
                up[x] = [
                    y for y in above if not any(z != y and G.weak_leq(z, y) for z in above)
                ]
            self._covers = up
        return self._covers

    def down_covers_by_descents(self, x: int) -> list[int]:
        """Lower covers of the class of ``x``: ``pi_down(x s)`` for right descents ``s``."""
        return sorted({self.pidown[y] for y in self.G.lower_covers(x)})

    def up_covers_by_ascents(self, x: int) -> list[int]:
        """Upper covers of the class of ``x``: ``pi_down(top * s)`` for ascents of its top."""
        top = self.classes[x].top
        return sorted({self.pidown[y] for y in self.G.upper_covers(top)})


def cambrian(G: CoxeterGroup, c: Sequence[int]) -> CambrianData:
    """Cached per-c data: pi_down on all of W, sortables and congruence classes."""
    c = tuple(c)
    memo = _cache(G, "cambrian")
    hit = memo.get(c)
    if hit is not None:
        return hit
    pid = [pi_down(G, w, c) for w in G.elements()]
    groups: dict[int, list[int]] = {}
    for w, x in enumerate(pid):
        groups.setdefault(x, []).append(w)
    classes = {}
    for x, members in groups.items():
        top = pi_up(G, x, c)
        classes[x] = CambrianClass(x, top, tuple(members))
    data = CambrianData(G, c, pid, sorted(groups), classes)
    memo[c] = data
    return data
