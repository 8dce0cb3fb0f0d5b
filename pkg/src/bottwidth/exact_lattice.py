"""Exact integer and rational linear algebra on plain tuples.

Vectors are tuples of ``int`` or ``fractions.Fraction``; matrices are tuples of
row tuples. Nothing here touches floating point.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
IntVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value) -> Fraction:
    """Read a rational from an int, a Fraction, or a ``"p"``/``"p/q"`` string.

    Floats are rejected on purpose so that nothing inexact leaks in.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match:
            num, den = match.groups()
            if den is not None and int(den) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den) if den else 1)
    raise ValueError(f"not a rational (expected 'p' or 'p/q'): {value!r}")


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v: Sequence) -> tuple:
    return tuple(t * a for a in v)


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def primitive_part(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries (keeps orientation)."""
    g = gcd_all(int(a) for a in v)
    if g == 0:
        raise ValueError("no primitive part: zero vector")
    return tuple(int(a) // g for a in v)


def is_primitive(v: Sequence[int]) -> bool:
    return gcd_all(v) == 1


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f = f / p
                row_r, row_c = m[r], m[col]
                for c in range(col + 1, n):
                    if row_c[c]:
                        row_r[c] -= f * row_c[c]
    return det


def is_unimodular_basis(vectors: Sequence[Sequence]) -> bool:
    """True iff the n given n-vectors (as columns) have determinant +-1."""
    n = len(vectors)
    if any(len(v) != n for v in vectors):
        raise ValueError(f"need {n} vectors of dimension {n}")
    return abs(determinant(vectors)) == 1


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse over Q; ``None`` if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        if p != 1:
            m[col] = [x / p for x in m[col]]
        row_c = m[col]
        nz = [c for c in range(2 * n) if row_c[c]]
        for r in range(n):
            if r != col:
                f = m[r][col]
                if f:
                    row_r = m[r]
                    for c in nz:
                        row_r[c] -= f * row_c[c]
    return [r[n:] for r in m]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> RationalVector | None:
    """Solve the square system ``rows @ x = rhs`` exactly; ``None`` if singular."""
    inv = inverse(rows)
    if inv is None:
        return None
    return tuple(sum((a * b for a, b in zip(r, rhs) if a and b), Fraction(0)) for r in inv)


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        for r in range(rk + 1, len(m)):
            f = m[r][col]
            if f:
                f = f / m[rk][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def lattice_length(p: Sequence, q: Sequence) -> Fraction:
    """Lattice length of the segment from ``p`` to ``q``.

    Writing ``q - p = t * w`` with ``w`` a primitive integer vector, the
    length is ``t``. Equivalently: rescale the segment by the least ``c``
    that makes it integral, count lattice intervals, divide by ``c``.
    """
    d = [Fraction(b) - Fraction(a) for a, b in zip(p, q)]
    if len(p) != len(q):
        raise ValueError("dimension mismatch")
    if not any(d):
        raise ValueError("degenerate segment")
    den = 1
    for x in d:
        den = den * x.denominator // math.gcd(den, x.denominator)
    g = gcd_all(int(x * den) for x in d)
    return Fraction(g, den)


def primitive_direction(p: Sequence, q: Sequence) -> IntVector:
    """Primitive integer vector pointing from ``p`` to ``q``."""
    d = [Fraction(b) - Fraction(a) for a, b in zip(p, q)]
    den = 1
    for x in d:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return primitive_part([int(x * den) for x in d])


def column_echelon(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Unimodular column reduction ``matrix @ U = H``.

    ``H`` is in column echelon form (each nonzero column's leading row is
    strictly below the previous one); returns ``(H, U)`` as lists of rows.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    # work column-wise: h[c] is column c of H, u[c] is column c of U
    h = [[int(matrix[r][c]) for r in range(rows)] for c in range(cols)]
    u = [[int(i == c) for i in range(cols)] for c in range(cols)]

    def combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j); ad - bc = +-1
        for vecs in (h, u):
            x, y = vecs[i], vecs[j]
            vecs[i] = [a * s + b * t for s, t in zip(x, y)]
            vecs[j] = [c * s + d * t for s, t in zip(x, y)]

    piv_col = 0
    for r in range(rows):
        if piv_col >= cols:
            break
        for c in range(piv_col + 1, cols):
            if h[c][r] == 0:
                continue
            x, y = h[piv_col][r], h[c][r]
            if x == 0:
                h[piv_col], h[c] = h[c], h[piv_col]
                u[piv_col], u[c] = u[c], u[piv_col]
                continue
            g, s, t = _xgcd(x, y)
            # [s t; -y/g x/g] has determinant 1 and kills entry (c, r)
            combine(piv_col, c, s, t, -y // g, x // g)
        if h[piv_col][r] != 0:
            if h[piv_col][r] < 0:
                h[piv_col] = [-v for v in h[piv_col]]
                u[piv_col] = [-v for v in u[piv_col]]
            piv_col += 1
    H = [[h[c][r] for c in range(cols)] for r in range(rows)]
    U = [[u[c][r] for c in range(cols)] for r in range(cols)]
    return H, U


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) > 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def kernel_lattice_basis(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[IntVector]:
    """Z-basis of ``{a in Z^N : matrix @ a = 0}``.

    The basis is the set of columns of the unimodular transform that the
    column echelon form sends to zero. ``ncols`` is only needed when the
    matrix has no rows.
    """
    if not matrix:
        n = ncols or 0
        return [tuple(int(i == j) for i in range(n)) for j in range(n)]
    H, U = column_echelon(matrix)
    cols = len(matrix[0])
    zero_cols = [c for c in range(cols) if all(H[r][c] == 0 for r in range(len(H)))]
    return [tuple(U[r][c] for r in range(cols)) for c in zero_cols]


def echelon_lattice_basis(basis: Sequence[Sequence[int]]) -> list[IntVector]:
    """Rewrite a lattice basis so leading indices strictly increase.

    Each returned vector has a positive leading entry and later vectors vanish
    on all earlier leading positions' prefixes; this is the Hermite shape used
    for bounded enumeration.
    """
    if not basis:
        return []
    dim = len(basis[0])
    # rows of the transposed problem: treat basis vectors as columns of a dim x r matrix
    mat = [[int(v[i]) for v in basis] for i in range(dim)]
    H, _ = column_echelon(mat)
    out = []
    for c in range(len(basis)):
        col = tuple(H[r][c] for r in range(dim))
        if any(col):
            out.append(col)
    return out
