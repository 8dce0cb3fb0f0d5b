"""Upper bounds from nonnegative facet relations and lower bounds from cross-polytopes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_lattice import (
    echelon_lattice_basis,
    is_unimodular_basis,
    kernel_lattice_basis,
    lattice_length,
    parse_rational,
    primitive_direction,
)
from .polytope import LatticePolytope
from .width import Verdict


class NoWitnessUnderCap(LookupError):
    """No nonzero nonnegative relation with entries <= cap exists."""


@dataclass(frozen=True)
class LuWitness:
    a: tuple[int, ...]
    value: Fraction
    cap: int

    @property
    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.a) if x]


def _tie_key(value: Fraction, a: Sequence[int]):
    # facet indices with multiplicity, e.g. eta_3 + eta_6 -> (2, 5)
    expansion = tuple(i for i, x in enumerate(a) for _ in range(x))
    return value, expansion


def nonnegative_relations(normals: Sequence[Sequence[int]], cap: int):
    """Yield every nonzero ``a`` in ``{0..cap}^N`` with ``sum a_i eta_i = 0``.

    Walks integer combinations of an echelon kernel basis; the leading entry of
    each basis vector pins its coefficient to a finite range, so the walk is
    complete inside the cap box.
    """
    N = len(normals)
    dim = len(normals[0])
    matrix = [[normals[i][r] for i in range(N)] for r in range(dim)]
    basis = echelon_lattice_basis(kernel_lattice_basis(matrix))
    if not basis:
        return
    pivots = [next(i for i, x in enumerate(h) if x) for h in basis]
    r = len(basis)
    bounds = pivots[1:] + [N]

    def walk(j: int, partial: list[int]):
        if j == r:
            if any(partial):
                yield tuple(partial)
            return
        h, p = basis[j], pivots[j]
        lead = h[p]
        lo = -(partial[p] // lead)  # ceil(-partial / lead)
        hi = (cap - partial[p]) // lead
        for c in range(lo, hi + 1):
            nxt = [x + c * y for x, y in zip(partial, h)] if c else partial
            if all(0 <= nxt[i] <= cap for i in range(p, bounds[j])):
                yield from walk(j + 1, nxt)

    yield from walk(0, [0] * N)


def lu_bound(P: LatticePolytope, cap: int = 4) -> LuWitness:
    """Minimum of ``sum a_i kappa_i`` over nonnegative relations with entries <= ``cap``.

    Ties go to the relation whose facet-index expansion is lexicographically
    smallest. The result is optimal within the cap only.
    """
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    best = None
    for a in nonnegative_relations(P.normals, cap):
        value = sum((x * k for x, k in zip(a, P.offsets) if x), Fraction(0))
        key = _tie_key(value, a)
        if best is None or key < best[0]:
            best = (key, a, value)
    if best is None:
        raise NoWitnessUnderCap(f"no witness under cap {cap}")
    return LuWitness(best[1], best[2], cap)


def is_fano(P: LatticePolytope) -> bool:
    """Anticanonical test on the normal fan of a simple polytope.

    For every vertex cone, the point pairing to 1 with its normals must pair
    to less than 1 with every other normal.
    """
    if not P.is_simple():
        raise ValueError("Fano test needs a simple polytope")
    for v in P.vertices:
        basis = P.vertex_basis(v)
        gens = P.edge_generators(v)
        # m with <m, eta_b> = 1 on the basis: m = -sum of edge generators
        m = [-sum(col) for col in zip(*gens)]
        for j, eta in enumerate(P.normals):
            if j not in basis and sum(a * b for a, b in zip(eta, m)) >= 1:
                return False
    return True


@dataclass(frozen=True)
class CrossPolytopeSpec:
    center: tuple[Fraction, ...]
    segments: tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]
    rho: Fraction

    @classmethod
    def from_values(cls, center, segments, rho) -> "CrossPolytopeSpec":
        vec = lambda v: tuple(parse_rational(c) for c in v)  # noqa: E731
        return cls(vec(center), tuple((vec(p), vec(q)) for p, q in segments), parse_rational(rho))

    def endpoints(self):
        for p, q in self.segments:
            yield p
            yield q


def _on_segment(c, p, q) -> bool:
    d = [b - a for a, b in zip(p, q)]
    e = [b - a for a, b in zip(p, c)]
    # c = p + t (q - p) with 0 <= t <= 1
    t = None
    for di, ei in zip(d, e):
        if di:
            t = ei / di
            break
    if t is None or not 0 <= t <= 1:
        return False
    return all(ei == t * di for di, ei in zip(d, e))


def verify_cross_polytope(P: LatticePolytope, spec: CrossPolytopeSpec) -> Verdict:
    """True certifies that ``P`` contains a distorted cross-polytope of length ``rho``.

    Hull containment reduces to the endpoints because ``P`` is convex.
    """
    n = P.dim
    if len(spec.segments) != n or len(spec.center) != n:
        return Verdict(False, "shape", f"need {n} segments in dimension {n}")
    for i, pt in enumerate(spec.endpoints()):
        if len(pt) != n or not P.contains(pt):
            return Verdict(False, "containment", f"endpoint {i} not in P")
    for i, (p, q) in enumerate(spec.segments):
        if p == q:
            return Verdict(False, "length", f"segment {i} is degenerate")
        if not _on_segment(spec.center, p, q):
            return Verdict(False, "center", f"segment {i} misses the center")
    dirs = [primitive_direction(p, q) for p, q in spec.segments]
    if not is_unimodular_basis(dirs):
        return Verdict(False, "basis", "segment directions are not a Z-basis")
    for i, (p, q) in enumerate(spec.segments):
        if lattice_length(p, q) != spec.rho:
            return Verdict(False, "length", f"segment {i} has lattice length {lattice_length(p, q)}")
    return Verdict(True)


def lu_value_caveat(P: LatticePolytope) -> str:
    try:
        fano = is_fano(P)
    except ValueError:
        fano = False
    return "upper bound (Fano)" if fano else "conjectural upper bound (non-Fano)"


__all__ = [
    "CrossPolytopeSpec",
    "LuWitness",
    "NoWitnessUnderCap",
    "is_fano",
    "lu_bound",
    "lu_value_caveat",
    "nonnegative_relations",
    "verify_cross_polytope",
]

