"""Dense exact linear algebra over ``Fraction`` / :class:`QuadraticNumber`.

Matrices are lists of rows.  Every routine works for any exact field whose
elements support ``+ - * /`` and truthiness (zero test).  Integers are
promoted to ``Fraction`` on entry so division never falls back to floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import as_scalar, sign

__all__ = [
    "det",
    "dot",
    "identity",
    "inverse",
    "leading_minors",
    "matmul",
    "matvec",
    "nullspace",
    "rank",
    "rref",
    "solve",
    "span_rref",
    "transpose",
    "is_positive_definite",
]


def _copy(M):
    return [[as_scalar(x) for x in row] for row in M]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def rref(M):
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    R = _copy(M)
    if not R:
        return [], []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R[:r], pivots


def rank(M) -> int:
    return len(rref(M)[1])


def span_rref(vectors: Sequence[Sequence], dim: int):
    """Canonical basis (as a tuple of row tuples) of the span of ``vectors``."""
    if not vectors:
        return ()
    R, _ = rref([list(v) for v in vectors])
    return tuple(tuple(row) for row in R)


def nullspace(M, ncols: int | None = None):
    """Basis of ``{x : M x = 0}``; ``ncols`` is needed when ``M`` has no rows."""
    if not M:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(M)
    cols = len(M[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(A, b):
    """Solve the square system ``A x = b``; return ``None`` if ``A`` is singular."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(_copy(A), b)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        return None
    return [R[i][n] for i in range(n)]


def inverse(A):
    n = len(A)
    aug = [list(row) + e for row, e in zip(_copy(A), identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def det(A):
    M = _copy(A)
    n = len(M)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out = out * M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return out


def leading_minors(A):
    return [det([row[:k] for row in A[:k]]) for k in range(1, len(A) + 1)]


def is_positive_definite(A) -> bool:
    """Sylvester's criterion: symmetric with all leading principal minors positive."""
    n = len(A)
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(n)):
        return False
    return all(sign(m) > 0 for m in leading_minors(A))
