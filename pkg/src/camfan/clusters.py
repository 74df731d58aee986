"""Almost positive roots, c-compatibility, c-clusters and the cluster lattice.

Almost positive roots are the root indices ``0..N+n-1`` of the group (see
:mod:`camfan.coxeter`): positive roots, then ``-alpha_s`` at ``N+s``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .coxeter import CoxeterGroup
from .errors import (
    IterationCapExceeded,
    MaximalCliqueWrongSize,
    MultiplePartners,
    NoPartner,
    NotBipartiteDiagram,
    NotBipartiteWord,
    NotSortable,
)
from .sortable import _cache, is_sortable, sorting_word

__all__ = [
    "Bipartition",
    "ClusterComplex",
    "big_R",
    "big_R_by_sigma_c",
    "bipartition_from_word",
    "cl_map",
    "cluster_complex",
    "compatible",
    "diagram_bipartition",
    "epsilon_pair",
    "h_from_f",
    "in_parabolic_apr",
    "k_minus",
    "little_r",
    "sigma",
    "tau",
]


def sigma(G: CoxeterGroup, s: int, a: int) -> int:
    """The involution sigma_s of the almost positive roots."""
    if G.is_negative_simple(a) and a != G.N + s:
        return a
    return G.simple_perm[s][a]


def in_parabolic_apr(G: CoxeterGroup, a: int, s: int) -> bool:
    """Whether ``a`` lies in the almost positive roots of W_<s> (standard parabolic S - {s})."""
    if G.is_negative_simple(a):
        return a != G.N + s
    return not (G.root_support[a] >> s & 1)


def sigma_cap(G: CoxeterGroup) -> int:
    return G.n * (2 * G.N + G.n) + G.n


def compatible(G: CoxeterGroup, a: int, b: int, c: Sequence[int]) -> bool:
    """c-compatibility, by the sigma recursion.  A root counts as compatible with itself."""
    if a == b:
        return True
    c = tuple(c)
    cap = sigma_cap(G)
    steps = 0
    while True:
        if G.is_negative_simple(a):
            return in_parabolic_apr(G, b, a - G.N)
        if G.is_negative_simple(b):
            return in_parabolic_apr(G, a, b - G.N)
        s = c[0]
        a, b = sigma(G, s, a), sigma(G, s, b)
        c = c[1:] + (s,)
        steps += 1
        if steps > cap:
            raise IterationCapExceeded("compatibility recursion did not terminate")


def little_r(G: CoxeterGroup, a: int, c: Sequence[int]) -> int:
    """Number of cyclic steps sigma_{s1}, sigma_{s2}, ... until ``a`` is negative simple."""
    cap = sigma_cap(G)
    r = 0
    while not G.is_negative_simple(a):
        a = sigma(G, c[r % len(c)], a)
        r += 1
        if r > cap:
            raise IterationCapExceeded("r did not terminate")
    return r


def big_R(G: CoxeterGroup, a: int, c: Sequence[int]) -> int:
    r = little_r(G, a, c)
    return -(-r // len(c))


def big_R_by_sigma_c(G: CoxeterGroup, a: int, c: Sequence[int]) -> int:
    """Least R with sigma_c^{-R}(a) negative simple, iterating whole sigma_c^{-1} steps."""
    apr = G.N + G.n
    inv = list(range(apr))
    for s in c:  # sigma_c^{-1} applies sigma_{s1} first
        inv = [sigma(G, s, x) for x in inv]
    R = 0
    while not G.is_negative_simple(a):
        a = inv[a]
        R += 1
        if R > apr:
            raise IterationCapExceeded("R did not terminate")
    return R


def cl_map(G: CoxeterGroup, w: int, c: Sequence[int]) -> tuple[int, ...]:
    """The c-cluster of a c-sortable element: last-reflection roots plus missing -alpha_s.

    For a word over J only the letters of J contribute, giving a cluster of W_J.
    """
    if not is_sortable(G, w, c):
        raise NotSortable(G.word_str(w))
    letters = sorting_word(G, w, c).letters
    last = {}
    u = 0
    for s in letters:
        last[s] = G.perm[u][s]  # root a_1...a_{j-1}(alpha_s)
        u = G.right[u][s]
    out = [last.get(s, G.N + s) for s in sorted(set(c))]
    return tuple(sorted(out))


def h_from_f(f: Sequence[int], n: int) -> list[int]:
    """h-vector from f-vector ``f = (f_{-1}, f_0, ..., f_{n-1})``."""
    return [
        sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
        for k in range(n + 1)
    ]


# ------------------------------------------------------------ bipartite tools
@dataclass(frozen=True)
class Bipartition:
    plus: frozenset
    minus: frozenset

    def eps(self, s: int) -> int:
        return 1 if s in self.plus else -1

    def part(self, e: int) -> frozenset:
        return self.plus if e > 0 else self.minus

    def word(self) -> tuple[int, ...]:
        """The Coxeter word c_+ c_-."""
        return tuple(sorted(self.plus)) + tuple(sorted(self.minus))


def _check_bipartition(G: CoxeterGroup, bp: Bipartition) -> Bipartition:
    if bp.plus | bp.minus != set(range(G.n)) or bp.plus & bp.minus:
        raise NotBipartiteDiagram("not a partition of the generators")
    for part in (bp.plus, bp.minus):
        for s in part:
            for t in part:
                if s != t and G.m[s][t] != 2:
                    raise NotBipartiteDiagram(
                        f"{G.labels[s]} and {G.labels[t]} are joined but on the same side"
                    )
    return bp


def diagram_bipartition(G: CoxeterGroup) -> Bipartition:
    """Two-colour the Coxeter diagram by BFS; the lowest index of a component goes to S_+."""
    color: dict[int, int] = {}
    for start in range(G.n):
        if start in color:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for t in range(G.n):
                if t != s and G.m[s][t] != 2:
                    if t not in color:
                        color[t] = -color[s]
                        queue.append(t)
                    elif color[t] == color[s]:
                        raise NotBipartiteDiagram("odd cycle in the Coxeter diagram")
    bp = Bipartition(
        frozenset(s for s in color if color[s] > 0), frozenset(s for s in color if color[s] < 0)
    )
    return _check_bipartition(G, bp)


def bipartition_from_word(G: CoxeterGroup, c: Sequence[int]) -> Bipartition:
    """Read S_+ (sources) and S_- (sinks) off a bipartite word ``c = c_+ c_-``."""
    pos = {s: i for i, s in enumerate(c)}
    plus, minus = set(), set()
    for s in range(G.n):
        nbrs = [t for t in range(G.n) if t != s and G.m[s][t] != 2]
        if all(pos[s] < pos[t] for t in nbrs):
            plus.add(s)
        elif all(pos[s] > pos[t] for t in nbrs):
            minus.add(s)
        else:
            raise NotBipartiteWord(f"{G.labels[s]} is neither a source nor a sink")
    return _check_bipartition(G, Bipartition(frozenset(plus), frozenset(minus)))


def tau(G: CoxeterGroup, e: int, a: int, bp: Bipartition) -> int:
    for s in sorted(bp.part(e)):
        a = sigma(G, s, a)
    return a


def k_minus(G: CoxeterGroup, a: int, bp: Bipartition) -> int:
    """Least k with tau^{(k)}(a) negative simple and fixed by the next tau.

    ``tau^{(k)}`` applies ``tau_-`` at odd steps and ``tau_+`` at even steps.
    """
    cap = 2 * (G.N + G.n) + 2
    x = a
    for k in range(cap):
        nxt = -1 if (k + 1) % 2 else 1
        if G.is_negative_simple(x) and (x - G.N) not in bp.part(nxt):
            return k
        x = tau(G, nxt, x, bp)
    raise IterationCapExceeded("k_- did not terminate")


def epsilon_pair(G: CoxeterGroup, a: int, b: int, bp: Bipartition) -> int:
    ka, kb = k_minus(G, a, bp), k_minus(G, b, bp)
    if ka == kb:
        raise ValueError("k_- values tie")
    return -1 if ka < kb else 1


# -------------------------------------------------------------- the complex
@dataclass
class ClusterComplex:
    G: CoxeterGroup
    c: tuple[int, ...]
    compat: list[list[bool]] = field(repr=False)
    clusters: list[tuple[int, ...]] = field(repr=False)
    index: dict = field(repr=False)
    R: list[int] = field(repr=False)
    r: list[int] = field(repr=False)
    _partners: dict = field(default_factory=dict, repr=False)

    def partner(self, C: tuple[int, ...], a: int) -> int:
        """The unique other almost positive root completing ``C - {a}`` to a cluster."""
        key = (C, a)
        hit = self._partners.get(key)
        if hit is not None:
            return hit
        base = [x for x in C if x != a]
        found = [
            b
            for b in self.G.almost_positive_roots()
            if b not in C and tuple(sorted(base + [b])) in self.index
        ]
        if not found:
            raise NoPartner(f"no partner for {a} in {C}")
        if len(found) > 1:
            raise MultiplePartners(f"partners {found} for {a} in {C}")
        self._partners[key] = found[0]
        return found[0]

    def exchange(self, C: tuple[int, ...], a: int) -> tuple[int, ...]:
        b = self.partner(C, a)
        return tuple(sorted([x for x in C if x != a] + [b]))

    def upper_lower(self, C: tuple[int, ...]) -> tuple[list[int], list[int]]:
        """``(lower, upper)``: ``a`` is upper when ``R(a) > R(partner)``."""
        lower, upper = [], []
        for a in C:
            b = self.partner(C, a)
            if self.R[a] == self.R[b]:
                raise ValueError(f"R tie on exchangeable pair {a}, {b}")
            (upper if self.R[a] > self.R[b] else lower).append(a)
        return lower, upper

    def lattice_covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(i, j)`` of cluster indices, oriented by R."""
        out = []
        for i, C in enumerate(self.clusters):
            for a in C:
                b = self.partner(C, a)
                if self.R[a] < self.R[b]:
                    out.append((i, self.index[self.exchange(C, a)]))
        return sorted(out)

    def twisted_covers(self, bp: Bipartition) -> list[tuple[int, int]]:
        out = []
        t = [tau(self.G, -1, x, bp) for x in self.G.almost_positive_roots()]
        for i, C in enumerate(self.clusters):
            for a in C:
                b = self.partner(C, a)
                if self.R[t[a]] < self.R[t[b]]:
                    out.append((i, self.index[self.exchange(C, a)]))
        return sorted(out)

    def faces(self) -> list[tuple[int, ...]]:
        """All compatible subsets (including the empty face), by clique search."""
        apr = list(self.G.almost_positive_roots())
        out = []

        def grow(face, cands):
            out.append(tuple(face))
            for k, x in enumerate(cands):
                grow(face + [x], [y for y in cands[k + 1 :] if self.compat[x][y]])

        grow([], apr)
        return out

    def f_vector(self) -> list[int]:
        """``(f_{-1}, f_0, ..., f_{n-1})``."""
        f = [0] * (self.G.n + 1)
        for face in self.faces():
            f[len(face)] += 1
        return f

    def h_vector(self) -> list[int]:
        return h_from_f(self.f_vector(), self.G.n)

    def upper_distribution(self) -> list[int]:
        dist = [0] * (self.G.n + 1)
        for C in self.clusters:
            dist[len(self.upper_lower(C)[1])] += 1
        return dist

    def link_count(self, face: Iterable[int]) -> int:
        f = set(face)
        return sum(1 for C in self.clusters if f <= set(C))


def _maximal_cliques(adj: list[set[int]], verts: list[int]) -> list[tuple[int, ...]]:
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            bk(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    bk(set(), set(verts), set())
    return out


def cluster_complex(G: CoxeterGroup, c: Sequence[int]) -> ClusterComplex:
    """Build (and cache) the c-cluster complex."""
    c = tuple(c)
    memo = _cache(G, "clusters")
    hit = memo.get(c)
    if hit is not None:
        return hit
    apr = list(G.almost_positive_roots())
    compat = [[compatible(G, a, b, c) for b in apr] for a in apr]
    adj = [{b for b in apr if b != a and compat[a][b]} for a in apr]
    cl = sorted(_maximal_cliques(adj, apr))
    for C in cl:
        if len(C) != G.n:
            raise MaximalCliqueWrongSize(f"maximal compatible set {C} has size {len(C)}")
    r = [little_r(G, a, c) for a in apr]
    R = [-(-x // G.n) for x in r]
    cx = ClusterComplex(G, c, compat, cl, {C: i for i, C in enumerate(cl)}, R, r)
    memo[c] = cx
    return cx
