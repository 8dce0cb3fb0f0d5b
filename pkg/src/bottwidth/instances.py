"""Named reference instances used by tests, scripts and the CLI ``info`` command."""
from __future__ import annotations

from .bott import BottTower, GbmPolytope, build_polytope
from .bounds import CrossPolytopeSpec
from .polytope import LatticePolytope


def h1_tower() -> BottTower:
    """Hirzebruch surface with twist -1."""
    return BottTower((1, 1), {(2, 1): (-1,)})


def h1(lam1=2, lam2=1) -> GbmPolytope:
    return build_polytope(h1_tower(), {"zero_form": [lam1, lam2]})


def lu_tower() -> BottTower:
    """P^3-bundle over P^1 whose raw half-space form is :func:`lu_polytope`."""
    return BottTower((1, 3), {(2, 1): (-2, -2, -2)})


def lu_gbm() -> GbmPolytope:
    # facet order (1,0),(1,1),(2,0),(2,1),(2,2),(2,3)
    return GbmPolytope(lu_tower(), [1, 0, 0, 1, 0, 0])


def lu_polytope() -> LatticePolytope:
    eta = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -2, -2, -2), (0, -1, -1, -1)]
    return LatticePolytope(eta, [0, 1, 0, 0, 1, 0])


def b5_tower() -> BottTower:
    return BottTower(
        (1, 1, 1, 1, 2),
        {(2, 1): (-3,), (3, 2): (1,), (4, 2): (-2,), (5, 2): (-1, 0), (4, 3): (-4,), (5, 4): (-2, 2)},
    )


B5_ZERO_FORM = (400, 60, 30, 3, 1)


def b5() -> GbmPolytope:
    return build_polytope(b5_tower(), {"zero_form": list(B5_ZERO_FORM)})


def surface_polytope() -> LatticePolytope:
    """Nine-facet Delzant polygon of area 141/2."""
    eta = [(1, 0), (1, 1), (0, 1), (-1, 1), (-2, 1), (-1, 0), (0, -1), (1, -2), (1, -1)]
    return LatticePolytope(eta, [6, 7, 6, 6, 7, 6, 6, 7, 6])


SURFACE_BLOWUP = "18;6,6,6,5,5,5"


def fano_bundle(kappa=1) -> LatticePolytope:
    eta = [(1, 0, 1), (-1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, 1), (0, -1, 0), (0, 0, -1), (0, 1, -1)]
    return LatticePolytope(eta, [kappa] * len(eta))


def fano_diamond() -> CrossPolytopeSpec:
    return CrossPolytopeSpec.from_values(
        (-1, 0, 0),
        [((-1, 0, 0), (1, 0, 0)), ((-1, -1, 0), (-1, 1, 0)), ((-1, 0, -1), (-1, 0, 1))],
        2,
    )


def h1_corner_diamond() -> CrossPolytopeSpec:
    return CrossPolytopeSpec.from_values((0, 0), [((0, 0), (-1, 0)), ((0, 0), (0, -1))], 1)


def product_tower(n=(1, 1)) -> BottTower:
    return BottTower(tuple(n))
