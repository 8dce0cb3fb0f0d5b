"""Recognise a raw half-space polytope as the moment polytope of a Bott tower."""
from __future__ import annotations

from dataclasses import dataclass

from .bott import BottTower, GbmPolytope
from .polytope import InvalidPolytope, LatticePolytope


@dataclass(frozen=True)
class Recognition:
    """``blocks[l-1]`` lists the original coordinates of block ``l`` (in ``k`` order);
    ``facet_of[label]`` is the original facet index carrying that label."""

    polytope: GbmPolytope
    blocks: tuple[tuple[int, ...], ...]
    facet_of: dict

    def original_facet(self, label) -> int:
        return self.facet_of[label]


def recognize_tower(P: LatticePolytope) -> Recognition | None:
    """Match the normals to the unit-vector / ``u^0`` pattern of some tower, up to coordinate order.

    Peels blocks from the last one: a candidate ``u^0`` whose restriction to
    the remaining coordinates is ``-1`` on its support and ``0`` elsewhere
    closes a block. Backtracks over ambiguous choices. Returns ``None`` when
    no tower structure exists.
    """
    n = P.dim
    unit = {}
    others = []
    for i, eta in enumerate(P.normals):
        if sum(1 for a in eta if a) == 1 and 1 in eta:
            unit[eta.index(1)] = i
        else:
            others.append(i)
    if len(unit) != n or len(P.normals) != n + len(others):
        return None

    def peel(remaining: frozenset, todo: tuple):
        if not todo:
            return [] if not remaining else None
        if not remaining:
            return None
        for i in todo:
            eta = P.normals[i]
            if any(eta[c] not in (0, -1) for c in remaining):
                continue
            support = frozenset(c for c in remaining if eta[c] == -1)
            if not support:
                continue
            rest = peel(remaining - support, tuple(x for x in todo if x != i))
            if rest is not None:
                return rest + [(i, tuple(sorted(support)))]
        return None

    order = peel(frozenset(range(n)), tuple(others))
    if order is None:
        return None
    blocks = tuple(b for _, b in order)
    ns = tuple(len(b) for b in blocks)
    a = {}
    for l, (i, _) in enumerate(order, start=1):
        eta = P.normals[i]
        for j in range(l + 1, len(order) + 1):
            vec = tuple(eta[c] for c in blocks[j - 1])
            if any(vec):
                a[(j, l)] = vec
    tower = BottTower(ns, a)
    facet_of = {}
    offsets = {}
    for l, (i, blk) in enumerate(order, start=1):
        facet_of[(l, 0)] = i
        for k, c in enumerate(blk, start=1):
            facet_of[(l, k)] = unit[c]
    for lab, i in facet_of.items():
        offsets[lab] = P.offsets[i]
    try:
        gbm = GbmPolytope(tower, offsets)
    except InvalidPolytope:
        return None
    return Recognition(gbm, blocks, facet_of)
