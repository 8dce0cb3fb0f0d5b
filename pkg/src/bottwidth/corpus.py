"""Seeded random generator of valid generalized Bott polytopes."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .bott import BottTower, GbmPolytope, build_polytope, fan_compatible, standard_offsets


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240
    size: int = 200
    max_blocks: int = 5
    max_fiber: int = 3
    max_twist: int = 3
    max_vertices: int = 144  # keeps the full property suite fast
    twist_density: float = 0.5
    retries: int = 8


def random_tower(rng: random.Random, cfg: CorpusConfig) -> BottTower:
    while True:
        m = rng.randint(1, cfg.max_blocks)
        n = [rng.randint(1, cfg.max_fiber) for _ in range(m)]
        if math.prod(x + 1 for x in n) <= cfg.max_vertices:
            break
    a = {}
    for j in range(2, m + 1):
        for l in range(1, j):
            if rng.random() < cfg.twist_density:
                a[(j, l)] = tuple(rng.randint(-cfg.max_twist, cfg.max_twist) for _ in range(n[j - 1]))
    return BottTower(tuple(n), a)


def _random_rational(rng: random.Random, lo: int, hi: int) -> Fraction:
    q = rng.choice((1, 1, 2, 3))
    return Fraction(rng.randint(lo * q, hi * q), q)


def safe_zero_form(tower: BottTower, rng: random.Random) -> list[Fraction]:
    """Offsets growing fast enough towards block 1 that every vertex stays separated.

    ``bound[j]`` caps the absolute coordinates of block ``j`` over all vertices;
    choosing ``lambda_l`` above the largest twisted contribution of later blocks
    keeps every ``(l, 0)`` facet strictly away from the rest.
    """
    m = tower.m
    lam = [Fraction(0)] * m
    bound = [Fraction(0)] * m
    for l in range(m, 0, -1):
        pull = sum((sum(abs(a) for a in tower.twist(j, l)) * bound[j - 1] for j in range(l + 1, m + 1)),
                   Fraction(0))
        lam[l - 1] = pull + _random_rational(rng, 1, 6)
        bound[l - 1] = lam[l - 1] + pull
    return lam


def random_gbm(rng: random.Random, cfg: CorpusConfig) -> GbmPolytope:
    tower = random_tower(rng, cfg)
    for _ in range(cfg.retries):
        zf = [_random_rational(rng, 1, 20) for _ in range(tower.m)]
        if fan_compatible(tower, standard_offsets(tower, zf)):
            return build_polytope(tower, {"zero_form": zf})
    return build_polytope(tower, {"zero_form": safe_zero_form(tower, rng)})


def generate_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[GbmPolytope]:
    rng = random.Random(cfg.seed)
    return [random_gbm(rng, cfg) for _ in range(cfg.size)]
