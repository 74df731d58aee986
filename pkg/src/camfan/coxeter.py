"""Finite Coxeter groups built from a Coxeter matrix.

A group is realized through its root system: roots are exact coordinate
vectors in the basis of simple roots, and an element is the permutation it
induces on the root set.  All |W| elements are enumerated once, breadth first
under right multiplication, and referred to by integer ids afterwards.  The
identity is id 0, and ids are sorted by length.

Root indices: ``0..N-1`` are the positive roots (simple roots first, then in
breadth-first order), and ``i + N`` is the negative of root ``i``.  In
particular ``-alpha_s`` has index ``N + s``, so the almost positive roots are
exactly the indices ``0..N+n-1``.  A reflection is identified with the index
of its positive root.

>>> from camfan.types import named_group
>>> G = named_group("B2")
>>> G.order, G.num_reflections
(8, 4)
>>> [G.root_label(t) for t in range(G.N)]
['a[s0]', 'a[s1]', 'a[s1s0s1]', 'a[s0s1s0]']
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import NonFiniteType, UnsupportedBondLabel
from .scalar import QuadraticNumber, sign

__all__ = ["CoxeterGroup", "GroupElement", "build_group", "parabolic_subgroup", "DEFAULT_CAP"]

DEFAULT_CAP = 200_000

# cos(pi/5) = (1 + sqrt5)/4
_COS_PI_5 = QuadraticNumber(Fraction(1, 4), Fraction(1, 4), 5)


def _default_cap() -> int:
    env = os.environ.get("CAMFAN_ELEMENT_CAP")
    return int(env) if env else DEFAULT_CAP


def _validate_matrix(m: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("Coxeter matrix must be square")
    for i in range(n):
        if m[i][i] != 1:
            raise ValueError("Coxeter matrix must have 1 on the diagonal")
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
            if i != j:
                v = m[i][j]
                if not isinstance(v, int) or v in (0, -1) or v >= 7:
                    raise UnsupportedBondLabel(
                        f"m({i},{j}) = {v}: only bond labels 2..6 are supported"
                    )
                if v < 2:
                    raise ValueError(f"m({i},{j}) = {v} must be at least 2")
    return tuple(tuple(int(x) for x in row) for row in m)


_RATIO = {3: 1, 5: 1, 4: 2, 6: 3}


def _root_lengths(m) -> list[Fraction]:
    """Squared lengths of simple roots making the cosine form rational (or in Q(sqrt5)).

    Breadth first from the lowest index of each component: crossing a 4-bond
    doubles the squared length, crossing a 6-bond triples it.  Each component
    is rescaled so its shortest simple root has squared length 2.
    """
    n = len(m)
    L: list[Fraction | None] = [None] * n
    for start in range(n):
        if L[start] is not None:
            continue
        L[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for t in range(n):
                if t == s or m[s][t] == 2:
                    continue
                want = L[s] * _RATIO[m[s][t]]
                if L[t] is None:
                    L[t] = want
                    comp.append(t)
                    queue.append(t)
                elif max(L[s], L[t]) != _RATIO[m[s][t]] * min(L[s], L[t]):
                    raise NonFiniteType("Coxeter diagram has a cycle with inconsistent bonds")
        low = min(L[t] for t in comp)
        for t in comp:
            L[t] = 2 * L[t] / low
    return L  # type: ignore[return-value]


def _check_lengths(m, L):
    n = len(m)
    for s in range(n):
        for t in range(s + 1, n):
            k = m[s][t]
            if k == 2:
                continue
            lo, hi = sorted((L[s], L[t]))
            if hi != _RATIO[k] * lo:
                raise ValueError(
                    f"root lengths {L[s]}, {L[t]} incompatible with m={k} between {s} and {t}"
                )


def _form_entry(k: int, Ls, Lt):
    """<alpha_s, alpha_t> = -cos(pi/k) |alpha_s| |alpha_t| for lengths already in ratio."""
    if k == 2:
        return Fraction(0)
    lo = min(Ls, Lt)
    if k == 3:
        return -lo / 2
    if k == 4:
        return -lo
    if k == 6:
        return -Fraction(3, 2) * lo
    if k == 5:
        return -_COS_PI_5 * lo
    raise UnsupportedBondLabel(str(k))


@dataclass(frozen=True)
class GroupElement:
    """Read-only handle ``(group, id)`` with convenience accessors."""

    group: "CoxeterGroup"
    id: int

    @property
    def perm(self) -> tuple[int, ...]:
        return self.group.perm[self.id]

    @property
    def length(self) -> int:
        return self.group.length[self.id]

    @property
    def inversions(self) -> frozenset[int]:
        return frozenset(self.group.inversion_set(self.id))

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.word[self.id]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, self.group.mul(self.id, other.id))

    def __invert__(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inverse(self.id))

    def __le__(self, other: "GroupElement") -> bool:
        return self.group.weak_leq(self.id, other.id)

    def __repr__(self) -> str:
        return f"<{self.group.word_str(self.id) or '1'}>"


class CoxeterGroup:
    """Finite Coxeter group with its root system and fully enumerated elements.

    Construct via :func:`build_group`.  Instances are immutable after
    construction, apart from lazily filled caches.
    """

    def __init__(self, coxeter_matrix, labels=None, root_lengths=None, cap=None):
        m = _validate_matrix(coxeter_matrix)
        n = len(m)
        self.n = n
        self.m = m
        self.labels = tuple(labels) if labels is not None else tuple(f"s{i}" for i in range(n))
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise ValueError("need one distinct label per generator")
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}
        self.has_sqrt5 = any(m[i][j] == 5 for i in range(n) for j in range(n))
        self.field = "sqrt5" if self.has_sqrt5 else "rational"

        if root_lengths is None:
            L = _root_lengths(m)
        else:
            L = [Fraction(x) for x in root_lengths]
            _check_lengths(m, L)
        self.root_lengths = tuple(L)
        self.form = [
            [L[s] if s == t else _form_entry(m[s][t], L[s], L[t]) for t in range(n)]
            for s in range(n)
        ]
        if not linalg.is_positive_definite(self.form):
            raise NonFiniteType("bilinear form is not positive definite: the group is infinite")
        # A[s][t] = <alpha_s^vee, alpha_t>
        self.cartan = [[2 * self.form[s][t] / L[s] for t in range(n)] for s in range(n)]
        self.crystallographic = all(
            not isinstance(x, QuadraticNumber) and Fraction(x).denominator == 1
            for row in self.cartan
            for x in row
        )
        self._build_roots()
        self._enumerate(cap if cap is not None else _default_cap())
        self._fund = None
        self._matrix_cache: dict[int, list] = {}

    # ------------------------------------------------------------------ roots
    def _reflect_vec(self, s: int, v):
        # s(v) = v - <v, alpha_s^vee> alpha_s, and <v, alpha_s^vee> = (A v)_s
        coeff = sum((self.cartan[s][t] * v[t] for t in range(self.n)), Fraction(0))
        if not coeff:
            return tuple(v)
        out = list(v)
        out[s] = out[s] - coeff
        return tuple(out)

    def _build_roots(self):
        n = self.n
        one, zero = Fraction(1), Fraction(0)
        pos = [tuple(one if i == s else zero for i in range(n)) for s in range(n)]
        index = {v: i for i, v in enumerate(pos)}
        words: list[tuple[int, ...]] = [(s,) for s in range(n)]
        queue = deque(range(n))
        while queue:
            i = queue.popleft()
            for s in range(n):
                if words[i] == (s,):
                    continue
                v = self._reflect_vec(s, pos[i])
                if v in index:
                    continue
                if sign(next(x for x in v if x)) < 0:
                    continue  # only s(alpha_s) is negative, handled above
                index[v] = len(pos)
                pos.append(v)
                words.append((s,) + words[i] + (s,))
                queue.append(index[v])
                if len(pos) > 10_000:
                    raise NonFiniteType("root system too large")
        N = len(pos)
        self.N = N
        self.roots = pos + [tuple(-x for x in v) for v in pos]
        self.root_index = {v: i for i, v in enumerate(self.roots)}
        self.root_word = words
        self.root_support = [
            sum(1 << t for t in range(n) if pos[i][t]) for i in range(N)
        ]
        self.simple_perm = []
        for s in range(n):
            self.simple_perm.append(
                tuple(self.root_index[self._reflect_vec(s, v)] for v in self.roots)
            )

    @property
    def num_reflections(self) -> int:
        return self.N

    def neg(self, i: int) -> int:
        return (i + self.N) % (2 * self.N)

    def is_positive(self, i: int) -> bool:
        return i < self.N

    def is_negative_simple(self, i: int) -> bool:
        return self.N <= i < self.N + self.n

    def almost_positive_roots(self) -> range:
        return range(self.N + self.n)

    def root_label(self, i: int) -> str:
        if i < self.N:
            return "a[" + "".join(self.labels[g] for g in self.root_word[i]) + "]"
        return "-" + self.root_label(i - self.N)

    def parse_root_label(self, text: str) -> int:
        for i in range(2 * self.N):
            if self.root_label(i) == text:
                return i
        raise KeyError(text)

    # --------------------------------------------------------------- elements
    def _enumerate(self, cap: int):
        n, N = self.n, self.N
        ident = tuple(range(2 * N))
        perm = [ident]
        index = {ident: 0}
        mask = [0]
        length = [0]
        word: list[tuple[int, ...]] = [()]
        parent = [-1]
        parent_gen = [-1]
        right: list[list[int]] = []
        k = 0
        while k < len(perm):
            p = perm[k]
            row = []
            for s in range(n):
                sp = self.simple_perm[s]
                q = tuple(p[j] for j in sp)
                j = index.get(q)
                if j is None:
                    j = len(perm)
                    if j >= cap:
                        raise NonFiniteType(f"more than {cap} elements: enumeration cap exceeded")
                    index[q] = j
                    perm.append(q)
                    # w(alpha_s) positive here, and becomes a new inversion of ws
                    mask.append(mask[k] | (1 << p[s]))
                    length.append(length[k] + 1)
                    word.append(word[k] + (s,))
                    parent.append(k)
                    parent_gen.append(s)
                row.append(j)
            right.append(row)
            k += 1
        self.perm = perm
        self.elem_index = index
        self.mask = mask
        self.length = length
        self.word = word
        self.right = right
        self.order = len(perm)
        self.by_mask = {mk: i for i, mk in enumerate(mask)}
        if len(self.by_mask) != self.order:
            raise AssertionError("inversion sets are not distinct")
        left = [list(right[0])]
        inv = [0]
        for w in range(1, self.order):
            u, t = parent[w], parent_gen[w]
            left.append([right[left[u][s]][t] for s in range(n)])
        for w in range(1, self.order):
            u, t = parent[w], parent_gen[w]
            inv.append(left[inv[u]][t])
        self.left = left
        self._inv = inv
        top = max(length)
        tops = [i for i, l in enumerate(length) if l == top]
        if len(tops) != 1 or top != N:
            raise AssertionError("longest element is not unique")
        self.w0 = tops[0]
        self.identity = 0
        # _len_start[k] = first id of length >= k (ids are sorted by length)
        self._len_start = [self.order] * (top + 2)
        for i in range(self.order - 1, -1, -1):
            self._len_start[length[i]] = i
        self.reflection_elem = [self.from_word(self.root_word[t]) for t in range(N)]
        self.elem_to_reflection = {e: t for t, e in enumerate(self.reflection_elem)}
        self.parabolic_masks: dict[int, int] = {}

    def element(self, w: int) -> GroupElement:
        return GroupElement(self, w)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, u: int, w: int) -> int:
        pu, pw = self.perm[u], self.perm[w]
        return self.elem_index[tuple(pu[j] for j in pw)]

    def inverse(self, w: int) -> int:
        return self._inv[w]

    def from_word(self, letters: Iterable) -> int:
        if isinstance(letters, str):
            letters = self.parse_word(letters)
        w = 0
        for s in letters:
            if isinstance(s, str):
                s = self.label_index[s]
            w = self.right[w][s]
        return w

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Split a concatenated or comma/space separated word of labels."""
        text = text.strip()
        if text in ("", "1", "e"):
            return ()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return tuple(self.label_index[p] for p in parts)
        out = []
        i = 0
        names = sorted(self.labels, key=len, reverse=True)
        while i < len(text):
            for lab in names:
                if text.startswith(lab, i):
                    out.append(self.label_index[lab])
                    i += len(lab)
                    break
            else:
                raise KeyError(f"cannot parse word {text!r}")
        return tuple(out)

    def word_str(self, w: int, sep: str = "") -> str:
        return sep.join(self.labels[s] for s in self.word[w])

    def gen_mask(self, J: Iterable[int]) -> int:
        return sum(1 << s for s in set(J))

    # ------------------------------------------------------------ weak order
    def inversion_set(self, w: int) -> set[int]:
        mk = self.mask[w]
        return {t for t in range(self.N) if mk >> t & 1}

    def inversion_set_from_perm(self, w: int) -> set[int]:
        """Reflections t with w^{-1}(alpha_t) negative, read off the permutation."""
        p = self.perm[self._inv[w]]
        return {t for t in range(self.N) if p[t] >= self.N}

    def is_left_descent(self, w: int, s: int) -> bool:
        """s <= w in weak order, i.e. l(sw) < l(w)."""
        return bool(self.mask[w] >> s & 1)

    def weak_leq(self, u: int, w: int) -> bool:
        return self.mask[u] & ~self.mask[w] == 0

    def weak_join(self, u: int, w: int) -> int:
        target = self.mask[u] | self.mask[w]
        hit = self.by_mask.get(target)
        if hit is not None:
            return hit
        masks = self.mask
        for v in range(self._len_start[bin(target).count("1")], self.order):
            if masks[v] & target == target:
                return v
        raise AssertionError("no upper bound")

    def weak_meet(self, u: int, w: int) -> int:
        target = self.mask[u] & self.mask[w]
        hit = self.by_mask.get(target)
        if hit is not None:
            return hit
        masks = self.mask
        for v in range(self._len_start[bin(target).count("1") + 1] - 1, -1, -1):
            if masks[v] & ~target == 0:
                return v
        raise AssertionError("no lower bound")

    def join_all(self, elems: Iterable[int]) -> int:
        out = 0
        for e in elems:
            out = self.weak_join(out, e)
        return out

    def descents(self, w: int) -> list[int]:
        """Right descents: s with l(ws) < l(w)."""
        p = self.perm[w]
        return [s for s in range(self.n) if p[s] >= self.N]

    def ascents(self, w: int) -> list[int]:
        p = self.perm[w]
        return [s for s in range(self.n) if p[s] < self.N]

    def cover_reflections(self, w: int) -> list[int]:
        """Positive-root indices of w s w^{-1} for the right descents s of w."""
        p = self.perm[w]
        return [p[s] - self.N for s in range(self.n) if p[s] >= self.N]

    def lower_covers(self, w: int) -> list[int]:
        return [self.right[w][s] for s in self.descents(w)]

    def upper_covers(self, w: int) -> list[int]:
        return [self.right[w][s] for s in self.ascents(w)]

    def is_join_irreducible(self, w: int) -> bool:
        return len(self.descents(w)) == 1

    # --------------------------------------------------------------- parabolics
    def parabolic_mask(self, J: Iterable[int]) -> int:
        """Bitmask of the reflections (positive roots) lying in W_J."""
        jm = self.gen_mask(J)
        hit = self.parabolic_masks.get(jm)
        if hit is None:
            hit = sum(1 << t for t in range(self.N) if self.root_support[t] & ~jm == 0)
            self.parabolic_masks[jm] = hit
        return hit

    def in_parabolic(self, w: int, J: Iterable[int]) -> bool:
        return self.mask[w] & ~self.parabolic_mask(J) == 0

    def parabolic_part(self, w: int, J: Iterable[int]) -> int:
        return self.by_mask[self.mask[w] & self.parabolic_mask(J)]

    def parabolic_factor(self, w: int, J: Iterable[int]) -> tuple[int, int]:
        """``w = w_J * rest`` with ``w_J`` in W_J and ``rest`` minimal in its coset."""
        wj = self.parabolic_part(w, J)
        return wj, self.mul(self.inverse(wj), w)

    def longest_in(self, J: Iterable[int]) -> int:
        return self.by_mask[self.parabolic_mask(J)]

    # ---------------------------------------------------------------- geometry
    def bilinear_form(self, x, y):
        B = self.form
        return sum(
            (x[i] * B[i][j] * y[j] for i in range(self.n) for j in range(self.n) if x[i] and y[j]),
            Fraction(0),
        )

    def coroot(self, v):
        q = self.bilinear_form(v, v)
        return tuple(2 * x / q for x in v)

    def weight_coords(self, v):
        """Coordinates ``<v, alpha_r^vee>`` of ``v`` in the fundamental-weight basis."""
        return tuple(
            sum((self.cartan[r][t] * v[t] for t in range(self.n)), Fraction(0))
            for r in range(self.n)
        )

    def from_weight_coords(self, g):
        return tuple(
            sum((g[r] * self.fundamental_weights()[r][i] for r in range(self.n)), Fraction(0))
            for i in range(self.n)
        )

    def fundamental_weights(self) -> list[tuple]:
        """omega_s in simple-root coordinates: column s of the inverse Cartan matrix."""
        if self._fund is None:
            Ainv = linalg.inverse(self.cartan)
            self._fund = [tuple(Ainv[i][s] for i in range(self.n)) for s in range(self.n)]
        return self._fund

    def matrix(self, w: int):
        """Matrix of w in the simple-root basis (column j is w(alpha_j))."""
        M = self._matrix_cache.get(w)
        if M is None:
            cols = [self.roots[self.perm[w][j]] for j in range(self.n)]
            M = [[cols[j][i] for j in range(self.n)] for i in range(self.n)]
            self._matrix_cache[w] = M
        return M

    def act(self, w: int, v):
        p = self.perm[w]
        out = [Fraction(0)] * self.n
        for j in range(self.n):
            if v[j]:
                r = self.roots[p[j]]
                for i in range(self.n):
                    if r[i]:
                        out[i] = out[i] + v[j] * r[i]
        return tuple(out)

    def reflect(self, s: int, v):
        return self._reflect_vec(s, v)

    def proj_parabolic(self, J: Iterable[int], v):
        """Orthogonal projection of ``v`` onto the span of ``{alpha_s : s in J}``."""
        J = sorted(set(J))
        if not J:
            return tuple(Fraction(0) for _ in range(self.n))
        Bv = [sum((self.form[s][t] * v[t] for t in range(self.n)), Fraction(0)) for s in J]
        BJ = [[self.form[s][t] for t in J] for s in J]
        x = linalg.solve(BJ, Bv)
        out = [Fraction(0)] * self.n
        for k, s in enumerate(J):
            out[s] = x[k]
        return tuple(out)

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(w, self.right[w][s]) for w in range(self.order) for s in self.ascents(w)]

    def __repr__(self) -> str:
        return f"CoxeterGroup(rank={self.n}, order={self.order})"


def build_group(coxeter_matrix, labels=None, root_lengths=None, cap=None) -> CoxeterGroup:
    """Build the finite Coxeter group of a Coxeter matrix (bond labels 2..6)."""
    return CoxeterGroup(coxeter_matrix, labels=labels, root_lengths=root_lengths, cap=cap)


def parabolic_subgroup(G: CoxeterGroup, J: Sequence[int]):
    """The standard parabolic W_J as a group on its own, with embedding maps.

    Returns ``(H, elem_map, root_map)``: ``elem_map[h]`` is the id in ``G`` of
    the element ``h`` of ``H``, ``root_map[i]`` the ``G``-index of root ``i``
    of ``H``.  Generator ``k`` of ``H`` is generator ``J[k]`` of ``G`` and root
    lengths are inherited, so roots correspond coordinate-wise.
    """
    J = list(J)
    sub = [[G.m[a][b] for b in J] for a in J]
    H = build_group(
        sub,
        labels=[G.labels[a] for a in J],
        root_lengths=[G.root_lengths[a] for a in J],
    )
    elem_map = [G.from_word(J[k] for k in H.word[h]) for h in range(H.order)]
    root_map = []
    for v in H.roots:
        full = [Fraction(0)] * G.n
        for k, a in enumerate(J):
            full[a] = v[k]
        root_map.append(G.root_index[tuple(full)])
    return H, elem_map, root_map
