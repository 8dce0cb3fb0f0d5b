"""Half-space lattice polytopes ``{x : <x, eta_i> <= kappa_i}`` over Q.

Vertices are found by walking the graph of feasible bases (simplex pivots,
degenerate pivots included) from one starting vertex. For simple polytopes
this visits each vertex once; the cost grows with the number of feasible
bases, which is fine for the desk-scale inputs this package targets
(dimension up to ~15, a few hundred to a thousand vertices).
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

from .exact_lattice import (
    determinant,
    dot,
    format_rational,
    inverse,
    is_primitive,
    is_unimodular_basis,
    parse_rational,
    primitive_part,
    rank,
    sub,
)


class InvalidPolytope(ValueError):
    """Input does not describe a bounded, full-dimensional, irredundant polytope."""

    def __init__(self, reason: str, facet: int | None = None):
        super().__init__(reason)
        self.reason = reason
        self.facet = facet


@dataclass(frozen=True)
class Vertex:
    point: tuple[Fraction, ...]
    active_facets: frozenset[int]


class LatticePolytope:
    """Polytope given by primitive integer normals and rational offsets.

    Construction validates eagerly: the polytope must be nonempty, bounded,
    full-dimensional, and every inequality must be tight at some vertex.
    ``start`` optionally names ``n`` facets whose intersection is a vertex,
    which skips the search for a first vertex.
    """

    def __init__(self, normals: Sequence[Sequence[int]], offsets: Sequence,
                 *, start: Sequence[int] | None = None):
        if len(normals) != len(offsets):
            raise InvalidPolytope(f"{len(normals)} normals but {len(offsets)} offsets")
        if not normals:
            raise InvalidPolytope("no inequalities")
        self.normals: tuple[tuple[int, ...], ...] = tuple(tuple(int(a) for a in eta) for eta in normals)
        self.offsets: tuple[Fraction, ...] = tuple(parse_rational(k) for k in offsets)
        self.dim = len(self.normals[0])
        for i, eta in enumerate(self.normals):
            if len(eta) != self.dim:
                raise InvalidPolytope(f"normal {i} has dimension {len(eta)}, expected {self.dim}", i)
            if not is_primitive(eta):
                raise InvalidPolytope(f"normal {i} is not primitive", i)
        self._sparse = [tuple((c, a) for c, a in enumerate(eta) if a) for eta in self.normals]
        # enumeration runs on offsets scaled to integers; Delzant vertices then stay integral
        self._scale = math.lcm(*(k.denominator for k in self.offsets))
        self._kint = tuple(int(k * self._scale) for k in self.offsets)
        self._enumerate(start)

    # -- construction -------------------------------------------------------

    def _pair(self, i: int, x):
        return sum(a * x[c] for c, a in self._sparse[i])

    def _is_feasible(self, x, offsets=None) -> bool:
        offsets = self.offsets if offsets is None else offsets
        return all(self._pair(i, x) <= k for i, k in enumerate(offsets))

    def _basis_point(self, basis):
        inv = inverse([self.normals[i] for i in basis])
        if inv is None:
            return None
        # columns of the inverse: cols[p][c] = inv[c][p]
        cols = [[_shrink(inv[c][p]) for c in range(self.dim)] for p in range(self.dim)]
        x = [0] * self.dim
        for p, i in enumerate(basis):
            k = self._kint[i]
            if k:
                col = cols[p]
                for c in range(self.dim):
                    if col[c]:
                        x[c] += k * col[c]
        return tuple(_shrink(c) for c in x), cols

    def _find_start(self, start):
        if start is not None:
            basis = tuple(start)
            if len(basis) != self.dim:
                raise InvalidPolytope(f"start needs {self.dim} facets")
            found = self._basis_point(basis)
            if found is None:
                raise InvalidPolytope("start facets are linearly dependent")
            if not self._is_feasible(found[0], self._kint):
                raise InvalidPolytope("invalid polytope: start point violates an inequality")
            return basis, found
        for basis in itertools.combinations(range(len(self.normals)), self.dim):
            found = self._basis_point(basis)
            if found is not None and self._is_feasible(found[0], self._kint):
                return basis, found
        raise InvalidPolytope("invalid polytope: empty or without vertices")

    def _enumerate(self, start) -> None:
        n, N = self.dim, len(self.normals)
        basis, (x, cols) = self._find_start(start)
        seen = {frozenset(basis)}
        queue = deque([(basis, x, cols)])
        # everything below is in scaled coordinates
        vertices: dict[tuple, frozenset[int]] = {}
        frames = {}
        neighbors: dict[tuple, set[tuple]] = {}
        while queue:
            basis, x, cols = queue.popleft()
            slack = [self._kint[j] - self._pair(j, x) for j in range(N)]
            if x not in vertices:
                vertices[x] = frozenset(j for j in range(N) if slack[j] == 0)
                frames[x] = (basis, cols)
                neighbors[x] = set()
            in_basis = set(basis)
            for p in range(n):
                col = cols[p]
                # moving along -col leaves facet basis[p] and keeps the others tight
                rates = {}
                for j in range(N):
                    if j in in_basis:
                        continue
                    s = -sum(a * col[c] for c, a in self._sparse[j] if col[c])
                    if s > 0:
                        rates[j] = s
                if not rates:
                    raise InvalidPolytope("invalid polytope: unbounded")
                ratios = {j: _div(slack[j], s) for j, s in rates.items()}
                step = min(ratios.values())
                entering = [j for j, r in ratios.items() if r == step]
                y = tuple(_shrink(xc - step * cc) if cc else xc for xc, cc in zip(x, col))
                if step > 0:
                    neighbors[x].add(y)
                for j in entering:
                    new_basis = basis[:p] + (j,) + basis[p + 1:]
                    key = frozenset(new_basis)
                    if key in seen:
                        continue
                    seen.add(key)
                    queue.append((new_basis, y, _pivot_columns(cols, p, self._sparse[j])))
        D = self._scale
        real = {v: tuple(Fraction(c) / D if D != 1 else Fraction(c) for c in v) for v in vertices}
        self._frames = {real[v]: f for v, f in frames.items()}
        self._neighbors = {real[v]: {real[w] for w in ws} for v, ws in neighbors.items()}
        vertices = {real[v]: act for v, act in vertices.items()}
        points = sorted(vertices)
        if rank([sub(v, points[0]) for v in points[1:]]) < n:
            raise InvalidPolytope("invalid polytope: not full-dimensional")
        self.vertices: tuple[Vertex, ...] = tuple(Vertex(v, vertices[v]) for v in points)
        touched = set().union(*(v.active_facets for v in self.vertices))
        for i in range(N):
            if i not in touched:
                raise InvalidPolytope(f"redundant inequality {i}", i)

    # -- queries ------------------------------------------------------------

    @property
    def num_facets(self) -> int:
        return len(self.normals)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise ValueError(f"point has dimension {len(x)}, polytope has {self.dim}")
        x = tuple(Fraction(c) for c in x)
        return self._is_feasible(x)

    def is_simple(self) -> bool:
        return all(len(v.active_facets) == self.dim for v in self.vertices)

    def edge_generators(self, vertex: Vertex) -> list[tuple[Fraction, ...]]:
        """Edge directions at a simple vertex, one per active facet (in basis order).

        Direction ``p`` satisfies ``<w_p, eta_{b_p}> = -1`` and is orthogonal to
        the other active normals.
        """
        if len(vertex.active_facets) != self.dim:
            raise ValueError("edge generators need a simple vertex")
        _, cols = self._frames[vertex.point]
        return [tuple(-c for c in col) for col in cols]

    def vertex_basis(self, vertex: Vertex) -> tuple[int, ...]:
        return self._frames[vertex.point][0]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Edges of a simple polytope as sorted vertex pairs."""
        if not self.is_simple():
            raise ValueError("edges are only listed for simple polytopes")
        by_point = {v.point: v for v in self.vertices}
        out = set()
        for v in self.vertices:
            for w in self._neighbors[v.point]:
                out.add((v.point, w) if v.point < w else (w, v.point))
        return [(by_point[a], by_point[b]) for a, b in sorted(out)]

    def vertex_at(self, facets) -> Vertex | None:
        """The vertex whose active set contains ``facets`` (if it is a vertex)."""
        facets = frozenset(facets)
        hits = [v for v in self.vertices if facets <= v.active_facets]
        return hits[0] if len(hits) == 1 else None

    def __repr__(self) -> str:
        return (f"LatticePolytope(dim={self.dim}, facets={self.num_facets}, "
                f"vertices={len(self.vertices)})")

    def to_dict(self) -> dict:
        return {"eta": [list(eta) for eta in self.normals],
                "kappa": [format_rational(k) for k in self.offsets]}


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _shrink(Fraction(a) / b)


def _shrink(x):
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


def _pivot_columns(cols, p, sparse_row):
    """Inverse columns after replacing basis row ``p`` with ``sparse_row``."""
    w = [sum(a * col[c] for c, a in sparse_row if col[c]) for col in cols]
    wp = w[p]
    # unimodular pivots keep integer columns as plain ints
    new_p = [c * wp if wp in (1, -1) else _shrink(Fraction(c) / wp) for c in cols[p]]
    out = []
    for q, col in enumerate(cols):
        if q == p:
            out.append(new_p)
        elif w[q]:
            f = w[q]
            out.append([a - f * b for a, b in zip(col, new_p)])
        else:
            out.append(col)
    return out


def contains(P: LatticePolytope, x: Sequence) -> bool:
    return P.contains(x)


def vertices(P: LatticePolytope) -> list[Vertex]:
    return list(P.vertices)


def is_delzant(P: LatticePolytope) -> bool:
    """Every vertex is simple and its primitive edge directions form a Z-basis."""
    for v in P.vertices:
        if len(v.active_facets) != P.dim:
            return False
        dirs = [primitive_part(_clear(w)) for w in P.edge_generators(v)]
        if not is_unimodular_basis(dirs):
            return False
    return True


def _clear(w) -> list[int]:
    den = 1
    for x in w:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    return [int(x * den) for x in w]


def translate(P: LatticePolytope, t: Sequence) -> LatticePolytope:
    """Shift by ``t``: same normals, offsets ``kappa_i + <t, eta_i>``."""
    t = tuple(parse_rational(c) for c in t)
    if len(t) != P.dim:
        raise ValueError("dimension mismatch")
    offsets = [k + dot(eta, t) for eta, k in zip(P.normals, P.offsets)]
    start = P.vertex_basis(P.vertices[0])
    return LatticePolytope(P.normals, offsets, start=start)


def volume(P: LatticePolytope, method: str = "auto") -> Fraction:
    """Exact Euclidean volume.

    ``"lawrence"`` sums one rational term per vertex (simple polytopes only);
    ``"triangulation"`` sums simplices of a pulling triangulation. ``"auto"``
    uses the former when it applies.
    """
    if method == "auto":
        method = "lawrence" if P.is_simple() else "triangulation"
    if method == "lawrence":
        return _lawrence_volume(P)
    if method == "triangulation":
        return _pulling_volume(P)
    raise ValueError(f"unknown volume method {method!r}")


def _lawrence_volume(P: LatticePolytope) -> Fraction:
    n = P.dim
    gens = {v.point: P.edge_generators(v) for v in P.vertices}
    t = 1
    while True:
        c = tuple(t ** k for k in range(n))
        if all(dot(c, w) != 0 for ws in gens.values() for w in ws):
            break
        t += 1
    total = Fraction(0)
    for v in P.vertices:
        ws = gens[v.point]
        det_w = abs(determinant(ws))
        denom = Fraction(1)
        for w in ws:
            denom *= -dot(c, w)
        total += dot(c, v.point) ** n * det_w / denom
    return total / math.factorial(n)


def _affine_dim(points) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def _pulling_volume(P: LatticePolytope) -> Fraction:
    pts = [v.point for v in P.vertices]
    active = [v.active_facets for v in P.vertices]
    n = P.dim

    def triangulate(face: frozenset[int], k: int):
        if k == 0:
            return [[next(iter(face))]]
        apex = min(face)
        facets = set()
        for i in range(P.num_facets):
            g = frozenset(v for v in face if i in active[v])
            if g and g != face and apex not in g and g not in facets:
                if _affine_dim([pts[v] for v in sorted(g)]) == k - 1:
                    facets.add(g)
        out = []
        for g in sorted(facets, key=sorted):
            for simplex in triangulate(g, k - 1):
                out.append([apex] + simplex)
        return out

    total = Fraction(0)
    for simplex in triangulate(frozenset(range(len(pts))), n):
        base = pts[simplex[0]]
        total += abs(determinant([sub(pts[v], base) for v in simplex[1:]]))
    return total / math.factorial(n)


@dataclass(frozen=True)
class VolumeBound:
    """Ball-volume obstruction: a width ``w`` needs ``w**n <= n! * vol``."""

    dim: int
    scaled_volume: Fraction  # n! * vol(P)
    approx: Decimal  # (n! vol)^(1/n), truncated
    digits: int

    def admits(self, width) -> bool:
        return Fraction(width) ** self.dim <= self.scaled_volume


def volume_upper_bound(P: LatticePolytope, digits: int = 6) -> VolumeBound:
    scaled = volume(P) * math.factorial(P.dim)
    return VolumeBound(P.dim, scaled, nth_root_truncated(scaled, P.dim, digits), digits)


def nth_root_truncated(x: Fraction, n: int, digits: int) -> Decimal:
    """``x**(1/n)`` truncated (not rounded) to ``digits`` decimals."""
    if x < 0:
        raise ValueError("negative radicand")
    target = x * 10 ** (n * digits)
    r = _iroot(target.numerator // target.denominator, n)
    return Decimal(r).scaleb(-digits)


def _iroot(m: int, n: int) -> int:
    if m < 2:
        return m
    r = 1 << ((m.bit_length() + n - 1) // n)
    while True:
        s = ((n - 1) * r + m // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > m:
        r -= 1
    while (r + 1) ** n <= m:
        r += 1
    return r


def cyclic_vertices(P: LatticePolytope) -> list[Vertex]:
    """Vertices of a 2-D polygon in boundary order (counter-clockwise)."""
    if P.dim != 2:
        raise ValueError("cyclic order needs dimension 2")
    verts = list(P.vertices)
    order = [verts[0]]
    used = {verts[0].point}
    while len(order) < len(verts):
        cur = order[-1]
        nxt = next(w for w in verts if w.point not in used and cur.active_facets & w.active_facets)
        order.append(nxt)
        used.add(nxt.point)
    area2 = sum(a.point[0] * b.point[1] - b.point[0] * a.point[1]
                for a, b in zip(order, order[1:] + order[:1]))
    if area2 < 0:
        order = [order[0]] + order[1:][::-1]
    return order
