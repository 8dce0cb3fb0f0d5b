"""Ball capacities of blowups of the projective plane by repeated Cremona moves."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_lattice import format_rational, parse_rational


@dataclass(frozen=True)
class BlowupVector:
    """Class ``d L - sum m_i E_i``; written ``(d; m_1, ..., m_k)``."""

    d: Fraction
    m: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d", parse_rational(self.d))
        object.__setattr__(self, "m", tuple(parse_rational(x) for x in self.m))

    @classmethod
    def parse(cls, text: str) -> "BlowupVector":
        """Read ``"18;6,6,6,5,5,5"``; ``"3"`` and ``"3;"`` mean no blowups."""
        head, _, tail = text.partition(";")
        if not head.strip():
            raise ValueError(f"missing line coefficient in {text!r}")
        m = [parse_rational(x) for x in tail.split(",") if x.strip()] if tail.strip() else []
        return cls(parse_rational(head), tuple(m))

    def __str__(self) -> str:
        return f"{format_rational(self.d)};" + ",".join(format_rational(x) for x in self.m)

    def append(self, c) -> "BlowupVector":
        return BlowupVector(self.d, self.m + (parse_rational(c),))

    def scaled(self, t) -> "BlowupVector":
        t = parse_rational(t)
        return BlowupVector(t * self.d, tuple(t * x for x in self.m))

    def self_intersection(self) -> Fraction:
        return self.d * self.d - sum(x * x for x in self.m)

    def first_chern(self) -> Fraction:
        return 3 * self.d - sum(self.m)


def _move(d, m: list, zero):
    """One move on sorted-descending ``m`` (len >= 3); returns ``None`` if already reduced."""
    delta = d - m[0] - m[1] - m[2]
    if delta >= zero:
        return None
    top = [x + delta for x in m[:3]]
    return d + delta, sorted(top + m[3:], reverse=True)


def cremona_move(v: BlowupVector) -> BlowupVector:
    """Add ``delta = d - m_1 - m_2 - m_3`` to ``d`` and the three largest weights.

    Weights are padded with zeros to length 3; a reduced vector is returned
    unchanged.
    """
    m = sorted(v.m + (Fraction(0),) * max(0, 3 - len(v.m)), reverse=True)
    step = _move(v.d, m, 0)
    if step is None:
        return v
    return BlowupVector(step[0], tuple(step[1]))


# Padding entries behave as infinitesimally positive weights so that missing
# blowups never count as zero entries. Scalars become (value, eps) pairs,
# compared lexicographically.
def _eps_add(a, b):
    return a[0] + b[0], a[1] + b[1]


def _eps_sub(a, b):
    return a[0] - b[0], a[1] - b[1]


def reduces_positively(v: BlowupVector, max_iter: int = 10 ** 4) -> bool:
    """Move until reduced; true iff the reduced vector has ``d > 0`` and every weight positive."""
    zero = (Fraction(0), 0)
    d = (v.d, 0)
    m = [(x, 0) for x in v.m] + [(Fraction(0), 1)] * max(0, 3 - len(v.m))
    m.sort(reverse=True)
    for _ in range(max_iter):
        if d <= zero or m[-1] < zero:
            return False
        delta = _eps_sub(_eps_sub(_eps_sub(d, m[0]), m[1]), m[2])
        if delta >= zero:
            return m[-1] > zero
        d = _eps_add(d, delta)
        m = sorted([_eps_add(x, delta) for x in m[:3]] + m[3:], reverse=True)
    raise RuntimeError(f"no reduced form after {max_iter} Cremona moves")


class ThresholdNotRational(ValueError):
    def __init__(self, lo: Fraction, hi: Fraction, denom: int):
        super().__init__(f"threshold not rational under bound {denom}: lies in [{lo}, {hi}]")
        self.lo, self.hi = lo, hi


def ball_capacity(v: BlowupVector, denom: int = 10 ** 4, max_iter: int = 10 ** 4) -> Fraction:
    """Supremum of ``c`` such that ``v`` with weight ``c`` appended reduces positively.

    Bisects until the bracket is shorter than ``1 / (2 denom^2)``, recovers the
    unique fraction of denominator at most ``denom`` inside, and confirms it by
    testing both sides.
    """
    if v.d <= 0:
        raise ValueError("line coefficient must be positive")

    def ok(c: Fraction) -> bool:
        return reduces_positively(v.append(c), max_iter)

    hi = v.d
    while ok(hi):
        hi *= 2
        if hi > 2 ** 20 * v.d:
            raise ValueError("capacity unbounded")
    lo = Fraction(0)
    tol = Fraction(1, 2 * denom * denom)
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    r = ((lo + hi) / 2).limit_denominator(denom)
    below = r - min(Fraction(1, denom), r / 2)
    if not lo < r <= hi or ok(r) or not ok(below):
        raise ThresholdNotRational(lo, hi, denom)
    return r


__all__ = [
    "BlowupVector",
    "ThresholdNotRational",
    "ball_capacity",
    "cremona_move",
    "reduces_positively",
]
