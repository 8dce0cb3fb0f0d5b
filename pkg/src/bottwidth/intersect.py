"""Toric curve classes of polytope edges and the divisor relations of a Bott tower."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bott import FacetLabel, GbmPolytope
from .polytope import LatticePolytope, Vertex


@dataclass(frozen=True)
class EdgeRef:
    """An edge given by its endpoints; ``common_facets`` are the ``n - 1`` facets containing it."""

    endpoints: tuple[Vertex, Vertex]
    common_facets: frozenset[int]

    @property
    def completing(self) -> tuple[int, int]:
        """The facet active only at the first endpoint, then the one active only at the second."""
        v, w = self.endpoints
        (a,) = v.active_facets - w.active_facets
        (b,) = w.active_facets - v.active_facets
        return a, b


def edge_ref(v: Vertex, w: Vertex) -> EdgeRef:
    if len(v.active_facets) != len(w.active_facets):
        raise ValueError("not an edge: endpoints have different numbers of active facets")
    common = v.active_facets & w.active_facets
    if len(v.active_facets - common) != 1 or len(w.active_facets - common) != 1:
        raise ValueError("not an edge: endpoints must differ in exactly one active facet each")
    return EdgeRef((v, w), frozenset(common))


@dataclass(frozen=True)
class CurveClass:
    pairings: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.pairings[i]


def _base(P) -> LatticePolytope:
    return P.base if isinstance(P, GbmPolytope) else P


def edge_curve_class(P, E: EdgeRef) -> CurveClass:
    """Intersection numbers ``E . D_i`` from the wall relation.

    With ``a, b`` the completing facets, ``eta_a + eta_b + sum_j c_j eta_j = 0``
    over the common facets ``j``; the class is 1 at ``a`` and ``b``, ``c_j`` on
    the common facets and 0 elsewhere.
    """
    base = _base(P)
    v, _ = E.endpoints
    if v.point not in base._frames or len(v.active_facets) != base.dim:
        raise ValueError("not an edge: endpoint is not a simple vertex of P")
    a, b = E.completing
    basis, cols = base._frames[v.point]
    if set(basis) != set(v.active_facets):
        raise ValueError("not an edge: vertex basis mismatch")
    eta_b = base.normals[b]
    # eta_b = sum_q beta_q eta_{basis[q]} with beta_q = <eta_b, column q of the inverse>
    beta = {basis[q]: sum((x * y for x, y in zip(eta_b, col) if x), Fraction(0)) for q, col in enumerate(cols)}
    if beta[a] != -1:
        raise ValueError("not an edge of a Delzant polytope: wall relation is not unimodular")
    out = [0] * base.num_facets
    out[a] = out[b] = 1
    for j in E.common_facets:
        c = -beta[j]
        if c.denominator != 1:
            raise ValueError("non-integral wall relation")
        out[j] = int(c)
    return CurveClass(tuple(out))


def pair_omega_c1(P: GbmPolytope, C: CurveClass) -> tuple[Fraction, int]:
    """``(omega(C), c_1(C))`` with ``omega = sum lambda_i D_i`` and ``c_1 = sum D_i``."""
    lam = P.offset_vector()
    omega = sum((c * x for c, x in zip(C.pairings, lam) if c), Fraction(0))
    return omega, sum(C.pairings)


def divisor_rewrite(P: GbmPolytope, p: int, q: int, s: Sequence[int]) -> dict[FacetLabel, int]:
    """Express ``[D_p^q]`` in the basis ``{[D_j^{s_j}] : j <= p}``.

    One step uses ``[D_p^q] = [D_p^{s_p}] + sum_{j<p} (a^{(s_p)}_{p,j} - a^{(q)}_{p,j}) [D_j^0]``
    (``a^{(0)} = 0``); each ``[D_j^0]`` with ``s_j != 0`` is then rewritten the
    same way, from block ``p - 1`` down to block 1.
    """
    t = P.tower
    if not 1 <= p <= t.m or not 0 <= q <= t.n[p - 1]:
        raise ValueError(f"no divisor ({p},{q})")
    if len(s) != t.m or any(not 0 <= x <= n for x, n in zip(s, t.n)):
        raise ValueError(f"{tuple(s)} is not a vertex sequence")

    def step(j: int, k: int) -> dict[int, int]:
        # [D_j^k] - [D_j^{s_j}] as multiples of [D_i^0], i < j
        sj = s[j - 1]
        diff = {}
        for i in range(1, j):
            tw = t.twist(j, i)
            c = (tw[sj - 1] if sj else 0) - (tw[k - 1] if k else 0)
            if c:
                diff[i] = c
        return diff

    coeff: dict[FacetLabel, int] = {(j, s[j - 1]): 0 for j in range(p, 0, -1)}
    coeff[(p, s[p - 1])] = 1
    pending = step(p, q)  # multiples of [D_i^0]
    for i in range(p - 1, 0, -1):
        c = pending.pop(i, 0)
        if not c:
            continue
        coeff[(i, s[i - 1])] += c
        if s[i - 1] != 0:
            for h, d in step(i, 0).items():
                pending[h] = pending.get(h, 0) + c * d
    return coeff


def pair_rewrite(P: GbmPolytope, coeff: dict[FacetLabel, int], C: CurveClass) -> int:
    return sum(c * C[P.index[lab]] for lab, c in coeff.items())


def block_edges(P: GbmPolytope, l: int) -> list[EdgeRef]:
    """Edges moving only inside simplex block ``l``: from vertex ``s`` to ``s`` with ``s_l`` changed."""
    t = P.tower
    seen = set()
    out = []
    for s in t.sequences():
        for k in range(t.n[l - 1] + 1):
            if k == s[l - 1]:
                continue
            s2 = s[: l - 1] + (k,) + s[l:]
            key = frozenset((s, s2))
            if key in seen:
                continue
            seen.add(key)
            out.append(edge_ref(P.vertex_of(s), P.vertex_of(s2)))
    return out


@dataclass
class EdgeCheck:
    edge: EdgeRef
    curve: CurveClass
    omega: Fraction
    c1: int


@dataclass
class BlockReport:
    block: int
    ok: bool
    checked: list[EdgeCheck] = field(default_factory=list)
    counterexample: EdgeCheck | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_block_intersections(P: GbmPolytope, l: int) -> BlockReport:
    """Every block-``l`` edge pairs to 1 with block-``l`` divisors and 0 with the rest.

    Also checks ``omega = lambda(l)`` and ``c_1 = n_l + 1`` on each such edge.
    """
    t = P.tower
    if not 1 <= l <= t.m:
        raise ValueError(f"no block {l}")
    if not t.is_zero_block(l):
        raise ValueError(f"u({l}) != 0")
    expected = tuple(int(lab[0] == l) for lab in P.labels)
    lam_l = sum((P.offsets[(l, k)] for k in range(t.n[l - 1] + 1)), Fraction(0))
    report = BlockReport(l, True)
    for E in block_edges(P, l):
        C = edge_curve_class(P, E)
        omega, c1 = pair_omega_c1(P, C)
        chk = EdgeCheck(E, C, omega, c1)
        report.checked.append(chk)
        if C.pairings != expected or omega != lam_l or c1 != t.n[l - 1] + 1:
            report.ok = False
            report.counterexample = chk
            break
    return report
