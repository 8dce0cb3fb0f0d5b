"""Gromov width of generalized Bott manifolds and the embedded-simplex certificate."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bott import FacetLabel, GbmPolytope
from .exact_lattice import is_unimodular_basis, lattice_length

Pair = tuple[int, int]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BlockData:
    block: int
    u_sum: tuple[int, ...]
    lam_sum: Fraction
    is_zero_block: bool


def block_data(P: GbmPolytope) -> list[BlockData]:
    t = P.tower
    out = []
    for l in range(1, t.m + 1):
        labs = [(l, k) for k in range(t.n[l - 1] + 1)]
        u = tuple(sum(col) for col in zip(*(P.rays[lab] for lab in labs)))
        lam = sum((P.offsets[lab] for lab in labs), Fraction(0))
        out.append(BlockData(l, u, lam, not any(u)))
    if not any(b.is_zero_block for b in out):
        raise AssertionError("no zero block: the last block of a tower always has u(l) = 0")
    return out


def width_witness(P: GbmPolytope) -> tuple[Fraction, int]:
    """``(w, l)``: the minimum of lambda(l) over zero blocks and the smallest block attaining it."""
    zero = [b for b in block_data(P) if b.is_zero_block]
    w = min(b.lam_sum for b in zero)
    return w, min(b.block for b in zero if b.lam_sum == w)


def gromov_width(P: GbmPolytope) -> Fraction:
    return width_witness(P)[0]


@dataclass(frozen=True)
class SimplexCertificate:
    """Points ``v^k_l = lam * direction[(l, k)]``; ``links`` records the recursion."""

    lam: Fraction
    directions: dict[FacetLabel, tuple[int, ...]]
    links: dict[FacetLabel, FacetLabel | None] = field(default_factory=dict)

    @property
    def points(self) -> dict[FacetLabel, tuple[Fraction, ...]]:
        return {lab: tuple(self.lam * c for c in d) for lab, d in self.directions.items()}


def certificate(P: GbmPolytope) -> SimplexCertificate:
    """Build the ``n`` simplex vertices by the descending-block recursion.

    Block ``l`` gets ``-lam e^k_l`` when no later twist ``a_{j,l}`` has a
    positive entry; otherwise it borrows the point at the last positive
    entry of ``u^0_l``.
    """
    if not P.is_standard_form():
        raise ValueError("certificate requires standard form (offsets of (l, k>=1) facets zero); translate first")
    t = P.tower
    lam = gromov_width(P)
    dirs: dict[FacetLabel, tuple[int, ...]] = {}
    links: dict[FacetLabel, FacetLabel | None] = {}
    for l in range(t.m, 0, -1):
        later = [j for j in range(l + 1, t.m + 1) if any(a > 0 for a in t.twist(j, l))]
        link = None
        if later:
            lp = max(later)
            kp = max(i for i, a in enumerate(t.twist(lp, l), start=1) if a > 0)
            link = (lp, kp)
        for k in range(1, t.n[l - 1] + 1):
            d = [0] * t.dim
            d[t.coord(l, k)] = -1
            if link is not None:
                d = [a + b for a, b in zip(d, dirs[link])]
            dirs[(l, k)] = tuple(d)
            links[(l, k)] = link
    order = [lab for lab in P.labels if lab[1] >= 1]
    return SimplexCertificate(lam, {lab: dirs[lab] for lab in order}, {lab: links[lab] for lab in order})


def verify_certificate(P: GbmPolytope, cert: SimplexCertificate) -> Verdict:
    """Check containment, the Z-basis property, and lattice lengths (in that order)."""
    origin = (Fraction(0),) * P.dim
    if not P.contains(origin):
        return Verdict(False, "containment", "origin not in P")
    points = cert.points
    for lab, v in points.items():
        if not P.contains(v):
            return Verdict(False, "containment", f"v{lab} not in P")
    if cert.lam <= 0 or len(points) != P.dim:
        return Verdict(False, "basis", "need n points and positive length")
    scaled = [tuple(c / cert.lam for c in v) for v in points.values()]
    if any(c.denominator != 1 for v in scaled for c in v) or not is_unimodular_basis(scaled):
        return Verdict(False, "basis", "points / lam do not form a Z-basis")
    for lab, v in points.items():
        if lattice_length(origin, v) != cert.lam:
            return Verdict(False, "length", f"segment to v{lab} has the wrong lattice length")
    return Verdict(True)


@dataclass(frozen=True)
class Implied:
    larger: int
    smaller: int
    larger_value: Fraction
    smaller_value: Fraction

    @property
    def holds(self) -> bool:
        return self.larger_value >= self.smaller_value


@dataclass(frozen=True)
class ChainReport:
    block: int
    k: int
    chain: list[Pair]
    splits: list[list[Pair]]
    implied: list[Implied]


def chain_sequence(P: GbmPolytope, l: int, k: int) -> list[Pair]:
    """``((l,k), (i_1,p_1), ...)``: jump to the last block with a nonzero twist, at its last nonzero entry."""
    t = P.tower
    chain = [(l, k)]
    cur = l
    while True:
        nxt = [j for j in range(cur + 1, t.m + 1) if any(t.twist(j, cur))]
        if not nxt:
            return chain
        j = max(nxt)
        p = max(q for q, a in enumerate(t.twist(j, cur), start=1) if a != 0)
        chain.append((j, p))
        cur = j


def admissible_chains(P: GbmPolytope, l: int, k: int) -> ChainReport:
    """Split the chain from ``(l, k)`` into admissible pieces and list the implied inequalities.

    A new piece starts at every negative step after the first; each piece
    ``(j_0, ..., j_s)`` implies ``lambda_{j_0} >= lambda_{j_s}``, evaluated on the
    standard-form offsets of ``P``.
    """
    t = P.tower
    if not 1 <= l <= t.m or not 1 <= k <= t.n[l - 1]:
        raise ValueError(f"no facet ({l},{k})")
    if t.is_zero_block(l):
        raise ValueError(f"block already closed: u({l}) = 0")
    chain = chain_sequence(P, l, k)
    signs = [t.twist(j, chain[v][0])[p - 1] for v, (j, p) in enumerate(chain[1:])]
    if signs[0] > 0:
        raise ValueError(f"chain from ({l},{k}) starts with a positive twist; no admissible split exists")
    splits = [[chain[0], chain[1]]]
    for v in range(1, len(signs)):
        if signs[v] < 0:
            splits.append([chain[v], chain[v + 1]])
        else:
            splits[-1].append(chain[v + 1])
    std, _ = P.standard_form()
    implied = [Implied(s[0][0], s[-1][0], std.offsets[(s[0][0], 0)], std.offsets[(s[-1][0], 0)]) for s in splits]
    return ChainReport(l, k, chain, splits, implied)


def chain_blocks(P: GbmPolytope) -> list[int]:
    """Blocks whose certificate points are plain ``-lam e^k_l`` but ``u(l) != 0``.

    These are exactly the blocks where containment rests on a chain argument.
    """
    t = P.tower
    return [l for l in range(1, t.m + 1)
            if not t.is_zero_block(l)
            and all(a <= 0 for j in range(l + 1, t.m + 1) for a in t.twist(j, l))]
