"""Coxeter matrices of the finite types, by name.

Generators are labelled ``s0, s1, ...``.  Conventions for where the special
bond sits:

* ``A_n``: a path.
* ``B_n``: path with ``m(s0, s1) = 4``.
* ``D_n``: ``s0`` and ``s1`` both attached to ``s2``, then a path.
* ``E_n``: path ``s0 - ... - s_{n-2}`` with ``s_{n-1}`` attached to ``s2``.
* ``F4``: bonds 3, 4, 3.  ``H3``/``H4``: the 5-bond is ``s0 - s1``.
* ``G2`` = ``I2(6)``, and ``I2(m)`` for the dihedral group of order ``2m``.

Products are written with ``x``, for example ``"A1xB2"``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .coxeter import CoxeterGroup, build_group

__all__ = ["coxeter_matrix", "named_group", "product_matrix", "TEST_GROUPS"]


def _path(bonds):
    n = len(bonds) + 1
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, b in enumerate(bonds):
        m[i][i + 1] = m[i + 1][i] = b
    return m


def _irreducible(name: str):
    mt = re.fullmatch(r"I2\((\d+)\)", name)
    if mt:
        k = int(mt.group(1))
        return [[1, k], [k, 1]]
    mt = re.fullmatch(r"([A-HI])(\d+)", name)
    if not mt:
        raise KeyError(f"unknown Coxeter type {name!r}")
    letter, n = mt.group(1), int(mt.group(2))
    if letter == "A" and n >= 1:
        return _path([3] * (n - 1))
    if letter == "B" and n >= 2:
        return _path([4] + [3] * (n - 2))
    if letter == "C" and n >= 2:
        return _path([4] + [3] * (n - 2))
    if letter == "D" and n >= 4:
        m = _path([2] + [3] * (n - 2))
        m[0][1] = m[1][0] = 2
        m[0][2] = m[2][0] = 3
        return m
    if letter == "E" and n in (6, 7, 8):
        m = _path([3] * (n - 2) + [2])
        m[n - 2][n - 1] = m[n - 1][n - 2] = 2
        m[2][n - 1] = m[n - 1][2] = 3
        return m
    if letter == "F" and n == 4:
        return _path([3, 4, 3])
    if letter == "G" and n == 2:
        return [[1, 6], [6, 1]]
    if letter == "H" and n in (3, 4):
        return _path([5] + [3] * (n - 2))
    raise KeyError(f"unknown Coxeter type {name!r}")


def product_matrix(blocks):
    n = sum(len(b) for b in blocks)
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[off + i][off + j] = b[i][j]
        off += k
    return m


def coxeter_matrix(name: str):
    """Coxeter matrix for a type name such as ``"B3"``, ``"I2(5)"`` or ``"A1xA2"``."""
    parts = [p.strip() for p in name.split("x")]
    return product_matrix([_irreducible(p) for p in parts])


@lru_cache(maxsize=None)
def named_group(name: str) -> CoxeterGroup:
    """Build (and cache) the group of a named type."""
    return build_group(coxeter_matrix(name))


# Groups exercised by the exhaustive suites.
TEST_GROUPS = {
    "rank2": ["A1xA1", "A2", "B2", "G2", "I2(5)"],
    "rank3": ["A3", "B3", "H3", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1", "A1xI2(5)"],
    "rank4": ["A4", "B4", "D4", "F4"],
    "rank4_reducible": ["A2xA2", "A1xA3", "A1xB3", "B2xG2", "A1xH3", "A1xA1xA2", "A1xA1xA1xA1"],
}
