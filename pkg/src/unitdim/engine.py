"""Symbolic dimension and spherical-dimension bounds with certificates.

Every bound carries a certificate naming the rule that produced it. Exact
values only arise when a lower-bound rule meets an upper-bound construction
(or a validated embedding); the engine never fabricates exactness.

Two rule modes exist: "crossings" (edges may cross each other) and
"non-crossing" (they may not). They differ in which circle layouts of cycles
and paths are admissible, which shifts spherical dimensions of cycles with
seven or more vertices, and of six-cycles' companions.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from functools import total_ordering
from math import gcd
from typing import Optional, Union

from .geometry import SELF_DUAL_RADIUS, cone_radius, simplex_radius
from .graphs import (
    FamilySpec,
    Graph,
    build_family,
    canonical_form,
    clique_number,
    component_shape,
    has_biclique,
    is_path_union,
    join,
    join_decompose,
    max_clique_with_common_triple,
)
from .profiles import (
    CONE_DOMAIN_LIMIT,
    FULL,
    Interval,
    RadiusProfile,
    cone_map,
    full_profile,
    lift,
    open_interval,
    point,
    solvable_sum,
)

CROSSINGS = "crossings"
NON_CROSSING = "non-crossing"
MODES = (CROSSINGS, NON_CROSSING)

DIM = "dim"
SDIM = "sdim"


class RegistryMiss(LookupError):
    """The graph is not covered by the known-family registry."""


def _stable_key(g: Graph) -> bytes:
    """Cache key: canonical bytes at desk scale, labeled serialization above."""
    if g.vertex_count <= 12:
        return canonical_form(g)
    payload = ",".join(f"{u}-{v}" for u, v in g.edges)
    return f"raw:{g.vertex_count}:{payload}".encode()


class EngineError(ValueError):
    pass


@total_ordering
class _NegInf:
    """Distinguished bound value below every integer (edgeless 0-vertex case)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __hash__(self):
        return hash("neg-inf")

    def __repr__(self):
        return "-inf"

    def __add__(self, other):
        return self

    __radd__ = __add__


NEG_INF = _NegInf()
Bound = Union[int, _NegInf]


@dataclass(frozen=True)
class Certificate:
    """One machine-checkable justification for a bound."""

    side: str       # "lower" | "upper"
    bound: object   # int or NEG_INF
    rule: str       # rule family identifier
    anchor: str     # specific claim instance
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        b = self.bound
        return {
            "side": self.side,
            "bound": "-inf" if isinstance(b, _NegInf) else b,
            "rule": self.rule,
            "anchor": self.anchor,
            "inputs": dict(self.inputs),
        }


@dataclass(frozen=True)
class DimensionBounds:
    kind: str
    lower: object            # int | NEG_INF
    upper: object            # int | NEG_INF | None (unknown)
    certificates: tuple = ()

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self):
        if not self.exact:
            raise EngineError(f"bounds are not exact: {self}")
        return self.lower

    def to_json(self) -> dict:
        def enc(x):
            if x is None:
                return None
            return "-inf" if isinstance(x, _NegInf) else x

        return {
            "kind": self.kind,
            "lower": enc(self.lower),
            "upper": enc(self.upper),
            "exact": self.exact,
            "certificates": [c.to_json() for c in self.certificates],
        }

    def __str__(self):
        if self.exact:
            return f"{self.kind}={self.lower}"
        hi = "?" if self.upper is None else str(self.upper)
        return f"{self.kind} in [{self.lower}, {hi}]"


# ---------------------------------------------------------------------------
# Circle / sphere feasibility for unions of paths and cycles
# ---------------------------------------------------------------------------
# An embedding of a cycle on a circle with unit chords is a regular polygon:
# the unit chord fixes the step angle, and a closed walk with distinct
# vertices forces the full {n/m} pattern. Path components grid-lock the same
# way once the step angle is an exact fraction of the turn, but place freely
# at generic angles. These facts make the circle profile computable exactly.

def _convex_radius(n: int) -> float:
    return 1.0 / (2.0 * math.sin(math.pi / n))


def _star_radii(j: int) -> list:
    out = []
    for m in range(1, (j - 1) // 2 + 1):
        if 2 * m < j and gcd(m, j) == 1:
            out.append(1.0 / (2.0 * math.sin(math.pi * m / j)))
    return out


def _shape_parts(shape):
    cycles = sorted(v for t, v in shape if t == "cycle")
    paths = sorted((v for t, v in shape if t == "path" and v > 0), reverse=True)
    return cycles, paths


def circle_profile_for_shape(shape, mode: str) -> RadiusProfile:
    """Exact set of circle radii on which the shape embeds (complete)."""
    cycles, paths = _shape_parts(shape)
    total = sum(paths)
    max_path = paths[0] if paths else 0
    prov = (f"circle-layout[{mode}]",)

    if cycles:
        j0 = cycles[0]
        pieces = []
        if all(j == j0 for j in cycles):
            if mode == NON_CROSSING:
                # A convex polygon's chords block every other chord on the
                # same circle, so the cycle must be alone (isolated vertices
                # still fit between polygon corners).
                if len(cycles) == 1 and total == 0:
                    pieces = [point(_convex_radius(j0))]
            else:
                # Any polygon step angle works; paths need enough grid slots.
                for r in _star_radii(j0):
                    if max_path + 1 <= j0:
                        pieces.append(point(r))
        return RadiusProfile(2, tuple(pieces), complete=True, provenance=prov)

    if total == 0:
        return RadiusProfile(2, (FULL,), complete=True, provenance=prov)

    if mode == NON_CROSSING:
        # Unit chords have equal arcs, so non-crossing means pairwise disjoint
        # arcs: the spans must fit strictly inside one turn.
        if total == 1:
            pieces = (Interval(0.5, 1.0, False, True),)
        else:
            pieces = (Interval(_convex_radius(total), 1.0, True, True),)
        return RadiusProfile(2, pieces, complete=True, provenance=prov)

    # Crossings allowed: every radius >= 1/2 works except step angles that
    # are exact fractions of the turn with too few grid slots for the
    # longest path.
    excluded = set()
    for q in range(3, max_path + 1):
        for p in range(1, (q - 1) // 2 + 1):
            if 2 * p < q and gcd(p, q) == 1:
                excluded.add(1.0 / (2.0 * math.sin(math.pi * p / q)))
    cuts = sorted(x for x in excluded if 0.5 < x < 1.0)
    lo_open = max_path >= 2  # the half-turn grid has only two slots
    pieces = []
    lo = 0.5
    for cut in cuts:
        pieces.append(Interval(lo, cut, lo_open, True))
        lo, lo_open = cut, True
    pieces.append(Interval(lo, 1.0, lo_open, True))
    return RadiusProfile(2, tuple(pieces), complete=True, provenance=prov)


def sphere3_profile_for_shape(shape, mode: str) -> RadiusProfile:
    """Known radii for the shape on a 3-dimensional sphere (sound, not complete).

    Construction: each component planar on its own lesser circle, components
    stacked at distinct heights, so nothing can cross. A lone long cycle has
    a known embedding at some radius below 1 but no pinned value.
    """
    cycles, paths = _shape_parts(shape)
    prov = (f"stacked-lesser-circles[{mode}]",)
    floors = []
    feasible = True
    for j in cycles:
        r = _convex_radius(j)
        if r >= 1.0:
            feasible = False
        floors.append(r)
    for k in paths:
        floors.append(0.5 if k == 1 else _convex_radius(k))
        if k >= 2 and _convex_radius(k) >= 1.0:
            feasible = False
    if feasible and floors:
        floor = max(floors)
        # The floor is attained only when a single cycle sits on the great
        # circle; paths and stacked duplicates need strictly larger spheres.
        attained = (
            floors.count(floor) == 1
            and any(_convex_radius(j) == floor for j in cycles)
        )
        pieces = (Interval(floor, 1.0, not attained, True),)
        return RadiusProfile(3, pieces, complete=False, provenance=prov)
    if feasible and not floors:
        return RadiusProfile(3, (FULL,), complete=False, provenance=prov)
    # Single long component: existence is known, the radii are not.
    if len(cycles) + len(paths) == 1:
        return RadiusProfile(
            3, (), complete=False, unspecified=True,
            provenance=("skew-band-construction",),
        )
    return RadiusProfile(3, (), complete=False, provenance=prov)


def unit_circle_feasible(shape, mode: str) -> bool:
    """Can the shape sit on a circle of radius exactly 1?

    Unit chords on the unit circle step a sixth of a turn, so cycle
    components must close over six slots (the hexagon) and each path needs
    its length plus one slots in its own rotation class.
    """
    cycles, paths = _shape_parts(shape)
    total = sum(paths)
    if mode == NON_CROSSING:
        if cycles:
            return cycles == [6] and total == 0
        return total <= 5
    if any(j != 6 for j in cycles):
        return False
    return all(k <= 5 for k in paths)


def unit_sphere_feasible(shape) -> Optional[bool]:
    """Can the shape sit on a 2-sphere of radius exactly 1 (either mode)?

    True: single path or cycle (band construction around a great circle），
    or components small enough for stacked lesser circles with at most one
    needing the equator itself. None: unknown, decide numerically.
    """
    cycles, paths = _shape_parts(shape)
    if len(cycles) + len(paths) <= 1:
        return True
    equator_needed = sum(1 for j in cycles if j == 6) + sum(1 for k in paths if k >= 6)
    if all(j <= 6 for j in cycles) and all(k <= 5 for k in paths) and equator_needed <= 1:
        return True
    return None


# ---------------------------------------------------------------------------
# Family classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyInfo:
    kind: str                 # empty0 | edgeless | complete | maxdeg2 | s_family
    n: int
    shape: tuple = ()


def classify_family(g: Graph) -> Optional[FamilyInfo]:
    n = g.vertex_count
    if n == 0:
        return FamilyInfo("empty0", 0)
    if g.edge_count == 0:
        return FamilyInfo("edgeless", n)
    if g.edge_count == n * (n - 1) // 2:
        return FamilyInfo("complete", n)
    shape = component_shape(g)
    if shape is not None:
        return FamilyInfo("maxdeg2", n, tuple(shape))
    factors = join_decompose(g)
    if len(factors) >= 2:
        singles = sum(1 for f in factors if f.vertex_count == 1)
        triples = [f for f in factors if f.vertex_count == 3 and f.edge_count == 0]
        if singles == len(factors) - 1 and len(triples) == 1:
            return FamilyInfo("s_family", n)
    return None


def _as_graph(spec_or_graph) -> Graph:
    if isinstance(spec_or_graph, Graph):
        return spec_or_graph
    if isinstance(spec_or_graph, FamilySpec):
        return build_family(spec_or_graph)
    raise EngineError(f"expected Graph or FamilySpec, got {type(spec_or_graph)!r}")


def known_sdim(spec_or_graph, mode: str = CROSSINGS):
    """Registry lookup: exact spherical dimension plus its radius profile.

    Raises RegistryMiss for graphs outside the known families; callers fall
    back to the bounds pipeline.
    """
    if mode not in MODES:
        raise EngineError(f"unknown mode {mode!r}")
    g = _as_graph(spec_or_graph)
    info = classify_family(g)
    if info is None:
        raise RegistryMiss(f"{g} is not a registry family")

    def exact(v, rule, anchor, profile):
        certs = (
            Certificate("lower", v, rule, anchor),
            Certificate("upper", v, rule, anchor),
        )
        return DimensionBounds(SDIM, v, v, certs), profile

    if info.kind == "empty0":
        return exact(NEG_INF, "void-graph", "void-graph",
                     RadiusProfile(0, (), complete=True))
    if info.kind == "edgeless":
        n = info.n
        if n == 1:
            return exact(0, "single-point", "single-point",
                         RadiusProfile(0, (), complete=True))
        if n == 2:
            return exact(1, "point-pair", "point-pair[any-radius]",
                         full_profile(1, "point-pair"))
        return exact(2, "scatter-on-circle", f"scatter-on-circle[n={n}]",
                     full_profile(2, "scatter-on-circle"))
    if info.kind == "complete":
        n = info.n
        if n == 1:
            return exact(0, "single-point", "single-point",
                         RadiusProfile(0, (), complete=True))
        rho = simplex_radius(n)
        prof = RadiusProfile(n - 1, (point(rho),), complete=True,
                             provenance=("simplex-unique-radius",))
        return exact(n - 1, "clique-registry", f"clique-registry[n={n}]", prof)
    if info.kind == "maxdeg2":
        circle = circle_profile_for_shape(info.shape, mode)
        if circle.pieces:
            return exact(2, "circle-layout", f"circle-layout[{mode}]", circle)
        sphere = sphere3_profile_for_shape(info.shape, mode)
        if sphere.known_nonempty:
            certs = (
                Certificate("lower", 3, "circle-layout",
                            f"circle-layout[{mode}][no-circle]"),
                Certificate("upper", 3, "sphere-layout",
                            "sphere-layout" if sphere.pieces else "skew-band-construction"),
            )
            return DimensionBounds(SDIM, 3, 3, certs), sphere
        raise RegistryMiss(f"no known sphere placement for shape {info.shape}")
    if info.kind == "s_family":
        n = info.n
        lo = simplex_radius(n - 2)  # apex chain starting from a point pair
        prof = RadiusProfile(
            n - 1, (open_interval(lo, 1.0),), complete=True,
            provenance=("apex-over-scatter",),
        )
        return exact(n - 1, "apex-over-scatter", f"apex-over-scatter[n={n}]", prof)
    raise RegistryMiss(f"unhandled family {info.kind}")


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------

@dataclass
class EmbedderBudget:
    restarts: int = 100
    seed: int = 0
    tolerance: float = 1e-8


def _derived_seed(g: Graph, dimension: int, base: int) -> int:
    digest = hashlib.sha256(
        _stable_key(g) + bytes([dimension & 0xFF]) + base.to_bytes(8, "big", signed=True)
    ).digest()
    return int.from_bytes(digest[:6], "big")


class Engine:
    """Bounds engine for one rule mode; results are memoized per instance."""

    def __init__(self, mode: str = CROSSINGS, use_embedder: bool = True,
                 budget: Optional[EmbedderBudget] = None):
        if mode not in MODES:
            raise EngineError(f"unknown mode {mode!r}; choose from {MODES}")
        self.mode = mode
        self.use_embedder = use_embedder
        self.budget = budget or EmbedderBudget()
        self._cache = {}
        self._embed_cache = {}

    # -- profiles -----------------------------------------------------------

    def profile_at(self, g: Graph, d: int) -> RadiusProfile:
        """Known feasible radii for g on a d-dimensional sphere."""
        try:
            bounds, base = known_sdim(g, self.mode)
        except RegistryMiss:
            return RadiusProfile(d, (), complete=False)
        if isinstance(bounds.lower, _NegInf):
            return RadiusProfile(d, (), complete=True)
        s = bounds.value
        if s == 0:
            # A single point sits on spheres of every radius.
            return full_profile(d, "single-point") if d >= 1 else RadiusProfile(0, (), complete=True)
        if d < s:
            return RadiusProfile(d, (), complete=True,
                                 provenance=("below-spherical-dimension",))
        prof = base
        while prof.sphere_dim < d:
            lifted = lift(prof)
            if prof.sphere_dim == 2:
                info = classify_family(g)
                if info is not None and info.kind == "maxdeg2":
                    extra = sphere3_profile_for_shape(info.shape, self.mode)
                    lifted = RadiusProfile(
                        3,
                        lifted.pieces + extra.pieces,
                        complete=False,
                        unspecified=lifted.unspecified or extra.unspecified,
                        provenance=lifted.provenance + extra.provenance,
                    )
            prof = lifted
        return prof

    # -- public bounds ------------------------------------------------------

    def bounds(self, g: Graph, kind: str) -> DimensionBounds:
        if kind == DIM:
            return self.dim(g)
        if kind == SDIM:
            return self.sdim(g)
        raise EngineError(f"kind must be {DIM!r} or {SDIM!r}")

    def dim(self, g: Graph) -> DimensionBounds:
        return self._memoized(g, DIM)

    def sdim(self, g: Graph) -> DimensionBounds:
        return self._memoized(g, SDIM)

    def rules_bounds(self, g: Graph, kind: str) -> DimensionBounds:
        """Bounds from symbolic rules alone, no numerical search."""
        return self._rules_only(g, kind)

    def try_embed_upper(self, g: Graph, d: int, on_sphere: bool) -> Optional[float]:
        """Targeted numerical upper-bound attempt; residual on success."""
        return self._search_embedding(g, d, on_sphere)

    def _memoized(self, g: Graph, kind: str) -> DimensionBounds:
        key = (_stable_key(g), kind)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rules_only = self._compute(g, kind, allow_embedder=False)
        result = rules_only
        if self.use_embedder and not rules_only.exact:
            result = self._embedder_upgrade(g, kind, rules_only)
        self._cache[key] = result
        return result

    def _rules_lower(self, g: Graph, kind: str):
        b = self._rules_only(g, kind)
        return b.lower

    def _rules_only(self, g: Graph, kind: str) -> DimensionBounds:
        key = (_stable_key(g), kind, "rules")
        hit = self._cache.get(key)
        if hit is None:
            hit = self._compute(g, kind, allow_embedder=False)
            self._cache[key] = hit
        return hit

    # -- rule pipeline ------------------------------------------------------

    def _compute(self, g: Graph, kind: str, allow_embedder: bool) -> DimensionBounds:
        n = g.vertex_count
        if n == 0:
            # The 0-vertex graph gets the distinguished value for both
            # notions, so it is strictly below every attained value.
            certs = (Certificate("lower", NEG_INF, "void-graph", "void-graph"),
                     Certificate("upper", NEG_INF, "void-graph", "void-graph"))
            return DimensionBounds(kind, NEG_INF, NEG_INF, certs)
        if kind == SDIM:
            return self._compute_sdim(g)
        return self._compute_dim(g)

    def _compute_dim(self, g: Graph) -> DimensionBounds:
        n, m = g.vertex_count, g.edge_count
        certs = []
        if m == 0:
            v = 0 if n == 1 else 1
            anchor = "distinct-points-need-a-line" if n > 1 else "single-point"
            certs = [Certificate("lower", v, "point-scatter", anchor),
                     Certificate("upper", v, "point-scatter", anchor)]
            return DimensionBounds(DIM, v, v, tuple(certs))
        if is_path_union(g):
            certs = [Certificate("lower", 1, "edge-floor", "has-an-edge"),
                     Certificate("upper", 1, "paths-on-a-line", "paths-on-a-line")]
            return DimensionBounds(DIM, 1, 1, tuple(certs))

        lower: Bound = 2
        certs.append(Certificate("lower", 2, "line-obstruction",
                                 "branch-or-cycle-blocks-the-line"))
        if component_shape(g) is not None:
            # Unions of paths and cycles always lay out in the plane with
            # unit edges (convex polygons plus separated path arcs).
            certs.append(Certificate("upper", 2, "plane-layout", "plane-layout"))
            return DimensionBounds(DIM, 2, 2, tuple(certs))
        w = clique_number(g)
        if w - 1 > lower:
            lower = w - 1
            certs.append(Certificate("lower", w - 1, "clique-floor",
                                     f"clique-floor[w={w}]", {"clique": w}))
        for bound, anchor in self._subgraph_floors(g, DIM):
            if bound > lower:
                lower = bound
                certs.append(Certificate("lower", bound, "family-subgraph-floor",
                                         anchor))

        upper: Optional[int] = n - 1 if n >= 2 else 0
        certs.append(Certificate("upper", upper, "complete-ceiling",
                                 f"subgraph-of-complete[n={n}]"))

        info = classify_family(g)
        if info is not None and info.kind == "complete":
            certs.append(Certificate("lower", n - 1, "clique-registry",
                                     f"clique-registry[n={n}]"))
            certs.append(Certificate("upper", n - 1, "clique-registry",
                                     f"clique-registry[n={n}]"))
            return DimensionBounds(DIM, n - 1, n - 1, tuple(certs))

        factors = join_decompose(g)
        if len(factors) >= 2:
            lo2, hi2, cc = self._join_rules_dim(g, factors)
            certs.extend(cc)
            if lo2 is not None and lo2 > lower:
                lower = lo2
            if hi2 is not None and hi2 < upper:
                upper = hi2

        best_l = max((c.bound for c in certs if c.side == "lower"),
                     default=lower)
        lower = max(lower, best_l)
        ups = [c.bound for c in certs if c.side == "upper"]
        upper = min(ups) if ups else upper
        return DimensionBounds(DIM, lower, upper, tuple(certs))

    def _subgraph_floors(self, g: Graph, kind: str):
        """Lower bounds from fully-joined subgraph patterns.

        A clique joined to three extra vertices, and complete bipartite
        patterns, have known exact values; subgraph containment transfers
        them as floors.
        """
        out = []
        a = max_clique_with_common_triple(g)
        if kind == DIM:
            if a >= 2:
                out.append((a + 1, f"clique-over-triple[a={a}]"))
            if has_biclique(g, 2, 3):
                out.append((3, "biclique[2x3]"))
            if has_biclique(g, 3, 3):
                out.append((4, "biclique[3x3]"))
        else:
            if has_biclique(g, 3, 3):
                out.append((4, "biclique[3x3]"))
        return out

    def _join_rules_dim(self, g: Graph, factors):
        """Lower and upper candidates from join structure."""
        certs = []
        lower = None
        upper = None

        hubs = [f for f in factors if f.vertex_count == 1]
        rest = [f for f in factors if f.vertex_count > 1]

        # Hub rule: one apex joined to a union of paths and cycles must see
        # its partner on a circle (in the plane) or sphere (in space) of
        # radius exactly 1.
        if len(hubs) == 1 and rest:
            partner = join(*rest) if len(rest) > 1 else rest[0]
            shape = component_shape(partner)
            if shape is not None:
                if unit_circle_feasible(shape, self.mode):
                    upper = _min_opt(upper, 2)
                    certs.append(Certificate("upper", 2, "hub-unit-circle",
                                             f"hub-unit-circle[{self.mode}]"))
                else:
                    lower = _max_opt(lower, 3)
                    certs.append(Certificate("lower", 3, "hub-unit-circle",
                                             f"hub-unit-circle[{self.mode}][infeasible]"))
                    if unit_sphere_feasible(shape):
                        upper = _min_opt(upper, 3)
                        certs.append(Certificate("upper", 3, "hub-unit-sphere",
                                                 "hub-unit-sphere"))

        # Split rules over exhaustive bipartitions of the factor multiset.
        for mask in range(1, 1 << (len(factors) - 1)):
            side_a = [factors[i] for i in range(len(factors)) if (mask >> i) & 1]
            side_b = [factors[i] for i in range(len(factors)) if not (mask >> i) & 1]
            ga = side_a[0] if len(side_a) == 1 else join(*side_a)
            gb = side_b[0] if len(side_b) == 1 else join(*side_b)
            if ga.vertex_count < 2 or gb.vertex_count < 2:
                continue
            la = self._rules_lower(ga, SDIM)
            lb = self._rules_lower(gb, SDIM)
            if isinstance(la, int) and isinstance(lb, int):
                cand = la + lb
                if lower is None or cand > lower:
                    lower = cand
                    certs.append(Certificate(
                        "lower", cand, "join-split",
                        f"join-split[{la}+{lb}]",
                        {"left": str(ga), "right": str(gb)},
                    ))
            up = self._join_sum_upper(ga, gb)
            if up is not None and (upper is None or up < upper):
                upper = up
                certs.append(Certificate(
                    "upper", up, "join-sum", f"join-sum[{up}]",
                    {"left": str(ga), "right": str(gb)},
                ))
        return lower, upper, certs

    def _join_sum_upper(self, ga: Graph, gb: Graph) -> Optional[int]:
        """Smallest d1 + d2 with compatible radii (squares summing to 1)."""
        try:
            ba, _ = known_sdim(ga, self.mode)
            bb, _ = known_sdim(gb, self.mode)
        except RegistryMiss:
            return None
        if not (isinstance(ba.lower, int) and isinstance(bb.lower, int)):
            return None
        sa, sb = ba.value, bb.value
        best = None
        for d1 in range(sa, sa + 3):
            for d2 in range(sb, sb + 3):
                if best is not None and d1 + d2 >= best:
                    continue
                ok = solvable_sum(self.profile_at(ga, d1), self.profile_at(gb, d2))
                if ok is True:
                    best = d1 + d2
        return best

    # -- spherical dimension --------------------------------------------------

    def _compute_sdim(self, g: Graph) -> DimensionBounds:
        n = g.vertex_count
        certs = []
        try:
            bounds, _ = known_sdim(g, self.mode)
            return bounds
        except RegistryMiss:
            pass

        lower: Bound = 0
        if n >= 2:
            lower = 1
        if n >= 3:
            lower = 2
            certs.append(Certificate("lower", 2, "point-count",
                                     "three-points-need-a-circle"))
        w = clique_number(g)
        if w - 1 > lower:
            lower = w - 1
            certs.append(Certificate("lower", w - 1, "clique-floor",
                                     f"clique-floor[w={w}]", {"clique": w}))
        a = max_clique_with_common_triple(g)
        if a >= 1 and a + 2 > lower:
            lower = a + 2
            certs.append(Certificate(
                "lower", a + 2, "clique-triple-floor",
                f"clique-triple-floor[a={a}]",
                {"clique_over_triple": a},
            ))
        for bound, anchor in self._subgraph_floors(g, SDIM):
            if bound > lower:
                lower = bound
                certs.append(Certificate("lower", bound, "family-subgraph-floor",
                                         anchor))

        upper: Optional[int] = n - 1 if n >= 2 else 0
        certs.append(Certificate("upper", upper, "complete-ceiling",
                                 f"subgraph-of-complete[n={n}]"))

        factors = join_decompose(g)
        if len(factors) >= 2:
            hubs = [f for f in factors if f.vertex_count == 1]
            rest = [f for f in factors if f.vertex_count > 1]
            if hubs and rest:
                partner = rest[0] if len(rest) == 1 else join(*rest)
                lo_rest = self._rules_lower(partner, SDIM)
                if isinstance(lo_rest, int):
                    cand = lo_rest + len(hubs)
                    if cand > lower:
                        lower = cand
                        certs.append(Certificate(
                            "lower", cand, "apex-chain",
                            f"apex-chain[{lo_rest}+{len(hubs)}]",
                            {"apexes": len(hubs)},
                        ))
                up = self._apex_chain_upper(partner, len(hubs))
                if up is not None and up < upper:
                    upper = up
                    certs.append(Certificate("upper", up, "apex-chain",
                                             f"apex-chain-upper[{up}]"))
            # Orthogonal placement at the self-dual radius.
            for mask in range(1, 1 << (len(factors) - 1)):
                side_a = [factors[i] for i in range(len(factors)) if (mask >> i) & 1]
                side_b = [factors[i] for i in range(len(factors)) if not (mask >> i) & 1]
                ga = side_a[0] if len(side_a) == 1 else join(*side_a)
                gb = side_b[0] if len(side_b) == 1 else join(*side_b)
                if ga.vertex_count < 2 or gb.vertex_count < 2:
                    continue
                up = self._orthogonal_sum_upper(ga, gb)
                if up is not None and up < upper:
                    upper = up
                    certs.append(Certificate("upper", up, "orthogonal-sum",
                                             f"orthogonal-sum[{up}]"))
                la = self._rules_lower(ga, SDIM)
                lb = self._rules_lower(gb, SDIM)
                if isinstance(la, int) and isinstance(lb, int) and la + lb > lower:
                    lower = la + lb
                    certs.append(Certificate("lower", la + lb, "join-split",
                                             f"join-split[{la}+{lb}]"))

        best_l = max((c.bound for c in certs if c.side == "lower"), default=lower)
        lower = max(lower, best_l) if isinstance(lower, int) else best_l
        ups = [c.bound for c in certs if c.side == "upper"]
        upper = min(ups) if ups else upper
        return DimensionBounds(SDIM, lower, upper, tuple(certs))

    def _apex_chain_upper(self, partner: Graph, apexes: int) -> Optional[int]:
        try:
            b, prof = known_sdim(partner, self.mode)
        except RegistryMiss:
            return None
        if not isinstance(b.lower, int):
            return None
        s = b.value
        for _ in range(apexes):
            if not any(p.lo < CONE_DOMAIN_LIMIT for p in prof.pieces):
                return None
            prof = cone_map(prof)
            s += 1
        return s

    def _orthogonal_sum_upper(self, ga: Graph, gb: Graph) -> Optional[int]:
        try:
            ba, _ = known_sdim(ga, self.mode)
            bb, _ = known_sdim(gb, self.mode)
        except RegistryMiss:
            return None
        if not (isinstance(ba.lower, int) and isinstance(bb.lower, int)):
            return None
        for d1 in range(ba.value, ba.value + 3):
            if not self.profile_at(ga, d1).contains(SELF_DUAL_RADIUS):
                continue
            for d2 in range(bb.value, bb.value + 3):
                if self.profile_at(gb, d2).contains(SELF_DUAL_RADIUS):
                    return d1 + d2
        return None

    # -- numerical fallback ----------------------------------------------------

    def _embedder_upgrade(self, g: Graph, kind: str, bounds: DimensionBounds) -> DimensionBounds:
        if not isinstance(bounds.lower, int):
            return bounds
        hi = bounds.upper if isinstance(bounds.upper, int) else g.vertex_count - 1
        certs = list(bounds.certificates)
        upper = bounds.upper
        for d in range(max(bounds.lower, 1), hi):
            found = self._search_embedding(g, d, on_sphere=(kind == SDIM))
            if found is not None:
                upper = d
                certs.append(Certificate(
                    "upper", d, "embedding-certificate",
                    f"embedding-certificate[d={d}]",
                    {"max_edge_residual": f"{found:.3e}", "restarts": self.budget.restarts},
                ))
                break
        new_upper = upper if upper is not None else bounds.upper
        if new_upper is not None and isinstance(bounds.upper, int):
            new_upper = min(new_upper, bounds.upper)
        return DimensionBounds(bounds.kind, bounds.lower, new_upper, tuple(certs))

    def _search_embedding(self, g: Graph, d: int, on_sphere: bool) -> Optional[float]:
        """Try to embed g in R^d; returns the max edge residual on success."""
        from . import embedder as emb

        key = (_stable_key(g), d, on_sphere)
        if key in self._embed_cache:
            return self._embed_cache[key]
        req = emb.EmbedRequest(
            graph=g,
            ambient_dim=d,
            on_sphere=on_sphere,
            forbid_crossings=(self.mode == NON_CROSSING),
            restarts=self.budget.restarts,
            seed=_derived_seed(g, d, self.budget.seed),
            tolerance=self.budget.tolerance,
        )
        result = emb.find_embedding(req)
        out = None
        if result is not None:
            report = emb.validate(result, req)
            if report.verdict == "valid":
                out = report.max_edge_residual
        self._embed_cache[key] = out
        return out


def _min_opt(a, b):
    return b if a is None else min(a, b)


def _max_opt(a, b):
    return b if a is None else max(a, b)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def dimension_bounds(g: Graph, kind: str = DIM, mode: str = CROSSINGS,
                     use_embedder: bool = True,
                     budget: Optional[EmbedderBudget] = None) -> DimensionBounds:
    return Engine(mode, use_embedder, budget).bounds(g, kind)


def wheel_dimension(n: int, k: int, non_crossing: bool = False) -> int:
    """Exact dimension of the cycle-plus-k-apexes graph from the closed tables."""
    if n < 3 or k < 1:
        raise EngineError("wheel needs n >= 3 and k >= 1")
    if not non_crossing:
        if k == 1:
            return 2 if n == 6 else 3
        if k == 2:
            return 4 if n == 6 else 3
        return 5 if n == 6 else 4
    if k == 1:
        return 2 if n == 6 else 3
    if k == 2:
        return 3 if n < 6 else 4
    return 4 if n < 6 else 5


def sum_dimension(specs, mode: str = CROSSINGS, use_embedder: bool = True,
                  budget: Optional[EmbedderBudget] = None) -> DimensionBounds:
    """Dimension bounds of the join of the given family members."""
    graphs = [_as_graph(s) for s in specs]
    if len(graphs) < 2:
        raise EngineError("sum needs at least two factors")
    return Engine(mode, use_embedder, budget).dim(join(*graphs))


NO_JUMP = "no_jump"
JUMP = "jump"


@dataclass(frozen=True)
class JumpResult:
    kind: str
    at: Optional[int] = None


def jump_test(profile: RadiusProfile, tol: float = 1e-9) -> JumpResult:
    """Does joining enough apex cliques eventually overshoot sphere radius 1?

    No jump when the profile reaches radii at or below the self-dual radius;
    otherwise the first apex count n with the iterated map above 1.
    """
    if not profile.known_nonempty:
        raise EngineError("jump test needs a nonempty profile")
    if profile.unspecified and not profile.pieces:
        raise EngineError("jump test needs pinned radii")
    inf = profile.inf()
    if inf <= SELF_DUAL_RADIUS + tol:
        return JumpResult(NO_JUMP)
    value = inf
    steps = 0
    while value <= 1.0:
        value = cone_radius(value)
        steps += 1
    return JumpResult(JUMP, steps)
