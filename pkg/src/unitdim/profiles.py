"""Feasible-radius sets: unions of intervals and points inside (0, 1).

A RadiusProfile records at which radii a graph is known to embed on a sphere
of a given dimension. Pieces are a lower approximation of the true feasible
set; `complete` marks profiles where the pieces are provably the whole set,
which is what licenses negative answers. `unspecified` marks "nonempty but
with no pinned values" (existence known, radii not characterized).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

MEMBERSHIP_TOL = 1e-9
ROOT_HALF = math.sqrt(2.0) / 2.0
CONE_DOMAIN_LIMIT = math.sqrt(3.0) / 2.0  # R(r) < 1 exactly below this


@dataclass(frozen=True)
class Interval:
    """A nonempty interval of radii; lo == hi with closed ends is a point."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if self.lo > self.hi + 1e-15:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate open interval")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: float, tol: float = MEMBERSHIP_TOL) -> bool:
        if self.is_point:
            return abs(x - self.lo) <= tol
        above = x > self.lo + tol if self.lo_open else x >= self.lo - tol
        below = x < self.hi - tol if self.hi_open else x <= self.hi + tol
        return above and below

    def __str__(self):
        if self.is_point:
            return f"{{{self.lo:.9g}}}"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo:.9g}, {self.hi:.9g}{right}"


def point(x: float) -> Interval:
    return Interval(x, x)


def open_interval(lo: float, hi: float) -> Interval:
    return Interval(lo, hi, True, True)


FULL = open_interval(0.0, 1.0)


def clip_to_unit(pieces: Iterable[Interval]) -> tuple:
    """Intersect pieces with the open unit interval (0, 1) of legal radii."""
    out = []
    for p in pieces:
        lo, lo_open = p.lo, p.lo_open
        hi, hi_open = p.hi, p.hi_open
        if lo <= 0.0:
            lo, lo_open = 0.0, True
        if hi >= 1.0:
            hi, hi_open = 1.0, True
        if lo > hi or (lo == hi and (lo_open or hi_open)):
            continue
        if hi <= 0.0 or lo >= 1.0:
            continue
        out.append(Interval(lo, hi, lo_open, hi_open))
    return normalize(out)


def normalize(pieces: Iterable[Interval]) -> tuple:
    """Sort and merge overlapping or touching-closed pieces."""
    items = sorted(pieces, key=lambda p: (p.lo, p.hi))
    merged = []
    for p in items:
        if merged:
            q = merged[-1]
            touches = p.lo < q.hi or (
                p.lo == q.hi and not (p.lo_open and q.hi_open)
            )
            if touches and p.lo >= q.lo:
                hi, hi_open = max((q.hi, not q.hi_open), (p.hi, not p.hi_open))
                merged[-1] = Interval(q.lo, hi, q.lo_open, not hi_open)
                continue
        merged.append(p)
    return tuple(merged)


@dataclass(frozen=True)
class RadiusProfile:
    """Known feasible radii for some graph on a sphere of a fixed dimension."""

    sphere_dim: int
    pieces: tuple = ()
    complete: bool = False
    unspecified: bool = False
    provenance: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", clip_to_unit(self.pieces))
        object.__setattr__(self, "provenance", tuple(self.provenance))

    @property
    def known_nonempty(self) -> bool:
        return bool(self.pieces) or self.unspecified

    def contains(self, x: float, tol: float = MEMBERSHIP_TOL) -> bool:
        return any(p.contains(x, tol) for p in self.pieces)

    def inf(self) -> Optional[float]:
        """Infimum of the known pieces; None when nothing is pinned."""
        if not self.pieces:
            return None
        return self.pieces[0].lo

    def inf_attained(self) -> bool:
        return bool(self.pieces) and not self.pieces[0].lo_open

    def is_full(self) -> bool:
        """Covers every legal radius in (0, 1)."""
        return len(self.pieces) == 1 and self.pieces[0].lo <= 0.0 and self.pieces[0].hi >= 1.0

    def describe(self) -> str:
        if self.unspecified and not self.pieces:
            return "nonempty (radii not characterized)"
        return " u ".join(str(p) for p in self.pieces) or "empty"


def full_profile(sphere_dim: int, provenance: str) -> RadiusProfile:
    return RadiusProfile(sphere_dim, (FULL,), complete=True, provenance=(provenance,))


def lift(profile: RadiusProfile, provenance: str = "sphere-lift") -> RadiusProfile:
    """Profile one sphere dimension up.

    A set on a (d-1)-sphere of radius r lies on d-spheres of every radius in
    [r, 1), so each piece extends rightward to 1. Lifts are sound but not
    complete: higher-dimensional spheres can admit genuinely new embeddings.
    """
    pieces = []
    for p in profile.pieces:
        pieces.append(Interval(p.lo, 1.0, p.lo_open, True))
    return RadiusProfile(
        profile.sphere_dim + 1,
        tuple(pieces),
        complete=False,
        unspecified=profile.unspecified,
        provenance=profile.provenance + (provenance,),
    )


def cone_map(profile: RadiusProfile, provenance: str = "apex-step") -> RadiusProfile:
    """Push a profile through r -> 1/(2 sqrt(1 - r^2)), one dimension up.

    Only the part of the domain where the image stays below 1 survives
    (r < sqrt(3)/2). The map is strictly increasing there.
    """

    def rmap(x: float) -> float:
        return 1.0 / (2.0 * math.sqrt(1.0 - x * x))

    pieces = []
    limit = CONE_DOMAIN_LIMIT
    for p in profile.pieces:
        lo, lo_open = p.lo, p.lo_open
        hi, hi_open = p.hi, p.hi_open
        if lo >= limit:
            continue
        if hi > limit:
            hi, hi_open = limit, True
        if lo == hi and (lo_open or hi_open):
            continue
        new_lo = rmap(lo) if lo > 0 else 0.5
        new_hi = rmap(hi)
        pieces.append(Interval(new_lo, new_hi, lo_open, hi_open))
    return RadiusProfile(
        profile.sphere_dim + 1,
        tuple(pieces),
        complete=False,
        unspecified=False,
        provenance=profile.provenance + (provenance,),
    )


def _squared(p: Interval) -> Interval:
    # Radii are nonnegative, so squaring is monotone.
    return Interval(p.lo * p.lo, p.hi * p.hi, p.lo_open, p.hi_open)


def _sum_hits_one(a: Interval, b: Interval, tol: float) -> bool:
    sa, sb = _squared(a), _squared(b)
    lo = sa.lo + sb.lo
    hi = sa.hi + sb.hi
    lo_open = sa.lo_open or sb.lo_open
    hi_open = sa.hi_open or sb.hi_open
    # Tolerance only absorbs numerical fuzz in endpoint values; an open
    # endpoint sitting exactly at 1 is a genuine miss.
    if abs(lo - 1.0) <= tol:
        return not lo_open
    if abs(hi - 1.0) <= tol:
        return not hi_open
    return lo < 1.0 < hi


def solvable_sum(p1: RadiusProfile, p2: RadiusProfile,
                 tol: float = MEMBERSHIP_TOL) -> Optional[bool]:
    """Three-valued: can radii r1, r2 be chosen with r1^2 + r2^2 = 1?

    True when a witness pair of known pieces exists. False only when both
    profiles are complete characterizations. None otherwise (including the
    existence-only case, unless the partner covers all of (0, 1)).
    """
    if p1.unspecified or p2.unspecified:
        spec, other = (p1, p2) if p1.unspecified else (p2, p1)
        if not spec.pieces:
            # Every radius in (0,1) has a complement in (0,1).
            return True if other.is_full() else None
    for a in p1.pieces:
        for b in p2.pieces:
            if _sum_hits_one(a, b, tol):
                return True
    if p1.complete and p2.complete and not p1.unspecified and not p2.unspecified:
        return False
    return None
