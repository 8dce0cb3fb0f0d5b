"""Fans and moment polytopes of generalized Bott towers.

Facets are labelled ``(l, k)`` with block ``l`` in ``1..m`` and ``k`` in
``0..n_l``, always listed in the order (1,0), (1,1), ..., (1,n_1), (2,0), ...
Coordinates are block-major: ``e^k_l`` is coordinate ``start(l) + k - 1``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_lattice import dot, parse_rational
from .polytope import InvalidPolytope, LatticePolytope, Vertex

FacetLabel = tuple[int, int]


class NotProductOfSimplices(InvalidPolytope):
    pass


@dataclass(frozen=True)
class BottTower:
    """Stage dimensions ``n`` and twisting vectors ``a[(j, l)]`` for ``l < j``.

    Missing twisting vectors are zero.
    """

    n: tuple[int, ...]
    a: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if not self.n:
            raise ValueError("a tower needs at least one stage")
        if any(x < 1 for x in self.n):
            raise ValueError(f"stage dimensions must be >= 1, got {self.n}")
        clean = {}
        for (j, l), vec in dict(self.a).items():
            j, l = int(j), int(l)
            if not 1 <= l < j <= self.m:
                raise ValueError(f"twist index (j={j}, l={l}) outside 1 <= l < j <= {self.m}")
            vec = tuple(int(x) for x in vec)
            if len(vec) != self.n[j - 1]:
                raise ValueError(f"a[{j},{l}] has length {len(vec)}, expected n_{j} = {self.n[j - 1]}")
            if any(vec):
                clean[(j, l)] = vec
        object.__setattr__(self, "a", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.a.items())))

    @property
    def m(self) -> int:
        return len(self.n)

    @property
    def dim(self) -> int:
        return sum(self.n)

    def twist(self, j: int, l: int) -> tuple[int, ...]:
        return self.a.get((j, l), (0,) * self.n[j - 1])

    def start(self, l: int) -> int:
        """Coordinate index of ``e^1_l``."""
        return sum(self.n[: l - 1])

    def coord(self, l: int, k: int) -> int:
        return self.start(l) + k - 1

    def labels(self) -> list[FacetLabel]:
        return [(l, k) for l in range(1, self.m + 1) for k in range(self.n[l - 1] + 1)]

    def sequences(self) -> list[tuple[int, ...]]:
        """The index set S of maximal cones / vertices."""
        return list(itertools.product(*(range(x + 1) for x in self.n)))

    def is_zero_block(self, l: int) -> bool:
        return all(not any(self.twist(j, l)) for j in range(l + 1, self.m + 1))


def rays(tower: BottTower) -> dict[FacetLabel, tuple[int, ...]]:
    out = {}
    dim = tower.dim
    for l in range(1, tower.m + 1):
        u0 = [0] * dim
        for k in range(1, tower.n[l - 1] + 1):
            u0[tower.coord(l, k)] = -1
        for j in range(l + 1, tower.m + 1):
            for i, a in enumerate(tower.twist(j, l), start=1):
                u0[tower.coord(j, i)] = a
        out[(l, 0)] = tuple(u0)
        for k in range(1, tower.n[l - 1] + 1):
            e = [0] * dim
            e[tower.coord(l, k)] = 1
            out[(l, k)] = tuple(e)
    return out


def maximal_cones(tower: BottTower) -> list[frozenset[FacetLabel]]:
    """One cone per ``s`` in S: all labels ``(l, k)`` with ``k != s_l``."""
    labels = tower.labels()
    return [frozenset(lab for lab in labels if lab[1] != s[lab[0] - 1]) for s in tower.sequences()]


def fan_compatible(tower: BottTower, offsets: Mapping[FacetLabel, Fraction]) -> bool:
    """Ampleness test: each cone's vertex candidate satisfies every other inequality strictly.

    For the complete simplicial fan of a tower this holds iff the offsets
    define a polytope with exactly that normal fan.
    """
    r = rays(tower)
    labels = tower.labels()
    for s in tower.sequences():
        x = _cone_point(tower, r, offsets, s)
        for lab in labels:
            if lab[1] == s[lab[0] - 1] and dot(r[lab], x) >= offsets[lab]:
                return False
    return True


def _cone_point(tower, r, offsets, s) -> list[Fraction]:
    x = [Fraction(0)] * tower.dim
    for (l, k), v in offsets.items():
        if k >= 1:
            x[tower.coord(l, k)] = v
    for l in range(tower.m, 0, -1):
        sl = s[l - 1]
        if sl:
            # <x, u^0_l> = lambda^0_l fixes the one free coordinate x^{s_l}_l
            c = tower.coord(l, sl)
            x[c] = dot(r[(l, 0)], x) + x[c] - offsets[(l, 0)]
    return x


def standard_offsets(tower: BottTower, zero_form: Sequence) -> dict[FacetLabel, Fraction]:
    """Offsets ``lambda^0_l`` on the (l, 0) facets and 0 on the rest."""
    if len(zero_form) != tower.m:
        raise ValueError(f"zero_form needs {tower.m} values, got {len(zero_form)}")
    lam = {lab: Fraction(0) for lab in tower.labels()}
    for l, v in enumerate(zero_form, start=1):
        lam[(l, 0)] = parse_rational(v)
    return lam


class GbmPolytope:
    """Moment polytope ``{x : <x, u^k_l> <= lambda^k_l}`` of a generalized Bott tower."""

    def __init__(self, tower: BottTower, offsets: Mapping[FacetLabel, Fraction] | Sequence):
        self.tower = tower
        self.labels = tower.labels()
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if isinstance(offsets, Mapping):
            missing = [lab for lab in self.labels if lab not in offsets]
            if missing:
                raise ValueError(f"missing offsets for facets {missing}")
            lam = {lab: parse_rational(offsets[lab]) for lab in self.labels}
        else:
            if len(offsets) != len(self.labels):
                raise ValueError(f"expected {len(self.labels)} offsets in facet order, got {len(offsets)}")
            lam = {lab: parse_rational(v) for lab, v in zip(self.labels, offsets)}
        self.offsets = lam
        self.rays = rays(tower)
        normals = [self.rays[lab] for lab in self.labels]
        kappa = [lam[lab] for lab in self.labels]
        start = [self.index[(l, k)] for (l, k) in self.labels if k >= 1]
        ample = fan_compatible(tower, lam)
        if ample:
            self.base = LatticePolytope(normals, kappa, start=start)
        else:
            self.base = self._diagnose(normals, kappa, start)
        cones = {frozenset(self.index[lab] for lab in cone) for cone in maximal_cones(tower)}
        expected = math.prod(x + 1 for x in tower.n)
        if not ample or len(self.base.vertices) != expected or any(
                v.active_facets not in cones for v in self.base.vertices):
            raise NotProductOfSimplices(
                "not combinatorially a product of simplices: vertex structure does not match the fan")

    def _diagnose(self, normals, kappa, start) -> LatticePolytope:
        """Full enumeration, used only to name the inequality that breaks the fan."""
        lam = self.offsets
        corner = self.corner()
        for lab in self.labels:
            if dot(self.rays[lab], corner) > lam[lab]:
                raise NotProductOfSimplices(
                    f"not combinatorially a product of simplices: vertex s=(0,...,0) "
                    f"violates inequality {_fmt(lab)}", self.index[lab])
        try:
            return LatticePolytope(normals, kappa, start=start)
        except InvalidPolytope as exc:
            reason = exc.reason
            if exc.facet is not None:
                reason = reason.replace(f"inequality {exc.facet}", f"inequality {_fmt(self.labels[exc.facet])}")
            raise NotProductOfSimplices(f"not combinatorially a product of simplices: {reason}", exc.facet) from None

    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.tower.dim

    def lam(self, l: int, k: int) -> Fraction:
        return self.offsets[(l, k)]

    def offset_vector(self) -> tuple[Fraction, ...]:
        return tuple(self.offsets[lab] for lab in self.labels)

    def normal_matrix(self) -> list[tuple[int, ...]]:
        """Rows of the n x N matrix whose columns are the facet normals."""
        cols = [self.rays[lab] for lab in self.labels]
        return [tuple(c[r] for c in cols) for r in range(self.dim)]

    def contains(self, x: Sequence) -> bool:
        return self.base.contains(x)

    def corner(self) -> tuple[Fraction, ...]:
        """The point where every ``(l, k >= 1)`` facet is tight (vertex s = 0)."""
        x = [Fraction(0)] * self.dim
        for (l, k), v in self.offsets.items():
            if k >= 1:
                x[self.tower.coord(l, k)] = v
        return tuple(x)

    def is_standard_form(self) -> bool:
        return all(v == 0 for (l, k), v in self.offsets.items() if k >= 1)

    def vertex_of(self, s: Sequence[int]) -> Vertex:
        """Vertex for the sequence ``s``; blocks solved from last to first."""
        point = tuple(_cone_point(self.tower, self.rays, self.offsets, s))
        active = frozenset(self.index[(l, k)] for (l, k) in self.labels if k != s[l - 1])
        return Vertex(point, active)

    def sequence_of(self, vertex: Vertex) -> tuple[int, ...]:
        missing = [self.labels[i] for i in range(len(self.labels)) if i not in vertex.active_facets]
        s = [0] * self.tower.m
        for l, k in missing:
            s[l - 1] = k
        return tuple(s)

    def translate(self, shift: Sequence) -> "GbmPolytope":
        shift = tuple(parse_rational(c) for c in shift)
        return GbmPolytope(self.tower, {lab: v + dot(self.rays[lab], shift) for lab, v in self.offsets.items()})

    def standard_form(self) -> tuple["GbmPolytope", tuple[Fraction, ...]]:
        """Translate so the s = 0 vertex sits at the origin; returns the shift used."""
        shift = tuple(-c for c in self.corner())
        if not any(shift):
            return self, shift
        return self.translate(shift), shift

    def __repr__(self) -> str:
        return f"GbmPolytope(n={self.tower.n}, a={self.tower.a}, offsets={self.offset_vector()})"


def build_polytope(tower: BottTower, lam) -> GbmPolytope:
    """``lam`` is a label map, a flat list in facet order, or ``{"zero_form": [...]}``."""
    if isinstance(lam, Mapping) and "zero_form" in lam:
        lam = standard_offsets(tower, lam["zero_form"])
    return GbmPolytope(tower, lam)


@dataclass(frozen=True)
class Face:
    """The face ``F_I``: blocks outside ``I`` pinned to their s = 0 coordinates."""

    polytope: GbmPolytope
    blocks: frozenset[int]

    def constraints(self) -> list[str]:
        P, t = self.polytope, self.polytope.tower
        lines = []
        for l in range(1, t.m + 1):
            for k in range(1, t.n[l - 1] + 1):
                rel = "<=" if l in self.blocks else "=="
                lines.append(f"x[{l},{k}] {rel} {P.offsets[(l, k)]}")
        for l in sorted(self.blocks):
            lines.append(f"<x, u({l},0)> <= {P.offsets[(l, 0)]}")
        return lines

    def contains(self, x: Sequence) -> bool:
        """Membership via the reduced system: only the (l, 0) facets with l in I are tested.

        The (l, 0) inequalities for pinned blocks are implied, which is what
        makes this test cheaper than the full one.
        """
        P, t = self.polytope, self.polytope.tower
        x = tuple(Fraction(c) for c in x)
        if len(x) != P.dim:
            raise ValueError("dimension mismatch")
        for l in range(1, t.m + 1):
            for k in range(1, t.n[l - 1] + 1):
                c, bound = x[t.coord(l, k)], P.offsets[(l, k)]
                if (c != bound) if l not in self.blocks else (c > bound):
                    return False
        return all(dot(P.rays[(l, 0)], x) <= P.offsets[(l, 0)] for l in self.blocks)


def face(P: GbmPolytope, blocks) -> Face:
    blocks = frozenset(int(b) for b in blocks)
    if not blocks <= set(range(1, P.tower.m + 1)):
        raise ValueError(f"blocks {sorted(blocks)} not within 1..{P.tower.m}")
    return Face(P, blocks)


def _fmt(label: FacetLabel) -> str:
    return f"({label[0]},{label[1]})"
