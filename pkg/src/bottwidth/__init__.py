"""Exact Gromov-width computations for generalized Bott manifolds."""
from .bott import BottTower, GbmPolytope, build_polytope, face, maximal_cones, rays
from .bounds import CrossPolytopeSpec, LuWitness, NoWitnessUnderCap, lu_bound, verify_cross_polytope
from .cremona import BlowupVector, ball_capacity, cremona_move, reduces_positively
from .intersect import check_block_intersections, divisor_rewrite, edge_curve_class, pair_omega_c1
from .polytope import InvalidPolytope, LatticePolytope, is_delzant, translate, volume, volume_upper_bound
from .width import admissible_chains, block_data, certificate, gromov_width, verify_certificate, width_witness

__all__ = [
    "BlowupVector", "BottTower", "CrossPolytopeSpec", "GbmPolytope", "InvalidPolytope", "LatticePolytope",
    "LuWitness", "NoWitnessUnderCap", "admissible_chains", "ball_capacity", "block_data", "build_polytope",
    "certificate", "check_block_intersections", "cremona_move", "divisor_rewrite", "edge_curve_class", "face",
    "gromov_width", "is_delzant", "lu_bound", "maximal_cones", "pair_omega_c1", "rays", "reduces_positively",
    "translate", "verify_certificate", "verify_cross_polytope", "volume", "volume_upper_bound", "width_witness",
]
