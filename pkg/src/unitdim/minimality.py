"""Exhaustive minor-minimality verification at desk scale.

A graph is minor minimal for a dimension notion when it attains the value
and every proper minor stays strictly below. Dimension is not monotone
under minor operations (a wheel's rim-shortened minor can gain a dimension),
so the full minor closure is checked, not just one-step minors.

Soundness policy: a minor the engine cannot settle and the embedder cannot
place makes the whole verdict inconclusive, never minimal.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .embedder import EmbedRequest, find_embedding, validate
from .engine import CROSSINGS, DIM, SDIM, EmbedderBudget, Engine, EngineError
from .geometry import SELF_DUAL_RADIUS
from .graphs import (
    Graph,
    all_graphs,
    max_clique_with_common_triple,
    minor_closure,
    sort_key,
)


class InconclusiveRootError(EngineError):
    """The engine cannot certify the root graph's exact value."""


MINIMAL = "minimal"
NOT_MINIMAL = "not_minimal"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MinorFinding:
    minor: Graph
    reason: str

    def to_json(self) -> dict:
        return {
            "minor": {
                "vertex_count": self.minor.vertex_count,
                "edges": [list(e) for e in self.minor.edges],
            },
            "reason": self.reason,
        }


@dataclass(frozen=True)
class MinimalityReport:
    graph: Graph
    kind: str
    mode: str
    value: int
    minors_checked: int
    failures: tuple
    inconclusive_minors: tuple
    verdict: str

    def to_json(self, failures_only: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "mode": self.mode,
            "value": self.value,
            "minors_checked": self.minors_checked,
            "verdict": self.verdict,
            "failures": [f.to_json() for f in self.failures],
            "inconclusive_minors": [
                {"vertex_count": m.vertex_count, "edges": [list(e) for e in m.edges]}
                for m in self.inconclusive_minors
            ],
        }
        if not failures_only:
            out["graph"] = {
                "vertex_count": self.graph.vertex_count,
                "edges": [list(e) for e in self.graph.edges],
            }
        return out


def _worker_count() -> int:
    raw = os.environ.get("UNITDIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_minor_minimal(g: Graph, kind: str = DIM, mode: str = CROSSINGS,
                         restarts: int = 100, seed: int = 0,
                         cap: int = 10,
                         engine: Optional[Engine] = None) -> MinimalityReport:
    """Check minor minimality of g for dim or sdim in the given mode.

    Raises InconclusiveRootError when the engine cannot pin g's own value.
    Each minor needs either an engine-exact value, a rule upper bound at
    value - 1, or a validated embedding there; a rule lower bound at the
    root value instead witnesses non-minimality.
    """
    eng = engine or Engine(mode, use_embedder=True,
                           budget=EmbedderBudget(restarts, seed))
    root = eng.bounds(g, kind)
    if not root.exact or not isinstance(root.value, int):
        raise InconclusiveRootError(
            f"engine cannot certify an exact {kind} for the root: {root}"
        )
    value = root.value
    minors = minor_closure(g, proper_only=True, cap=cap)

    def check(minor: Graph):
        """Returns (status, reason) with status in {fine, failure, inconclusive}."""
        rb = eng.rules_bounds(minor, kind)
        if rb.upper is not None and rb.upper <= value - 1:
            return "fine", ""
        if isinstance(rb.lower, int) and rb.lower >= value:
            return "failure", f"{kind} lower bound {rb.lower} >= root value {value}"
        target = value - 1
        if target >= 1:
            residual = eng.try_embed_upper(minor, target, on_sphere=(kind == SDIM))
            if residual is not None:
                return "fine", ""
        return "inconclusive", ""

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, minors))
    else:
        results = [check(m) for m in minors]

    failures = []
    inconclusive = []
    for minor, (status, reason) in zip(minors, results):
        if status == "failure":
            failures.append(MinorFinding(minor, reason))
        elif status == "inconclusive":
            inconclusive.append(minor)
    if failures:
        verdict = NOT_MINIMAL
    elif inconclusive:
        verdict = INCONCLUSIVE
    else:
        verdict = MINIMAL
    return MinimalityReport(
        graph=g,
        kind=kind,
        mode=mode,
        value=value,
        minors_checked=len(minors),
        failures=tuple(failures),
        inconclusive_minors=tuple(inconclusive),
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# Smallest minor-minimal graphs per vertex count
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SCandidateReport:
    n: int
    target: int
    candidates: tuple      # graphs minor minimal for sdim n-1 on n vertices
    inconclusive: tuple    # graphs whose sdim or verdict could not be settled
    checked: int

    def to_json(self) -> dict:
        enc = lambda g: {"vertex_count": g.vertex_count,
                         "edges": [list(e) for e in g.edges]}
        return {
            "n": self.n,
            "target": self.target,
            "candidates": [enc(g) for g in self.candidates],
            "inconclusive": [enc(g) for g in self.inconclusive],
            "checked": self.checked,
        }


def enumerate_S_candidates(n: int, mode: str = CROSSINGS, restarts: int = 100,
                           seed: int = 0) -> SCandidateReport:
    """All n-vertex graphs that are minor minimal for spherical dimension n-1.

    Brute force over all isomorphism classes: settle each graph's spherical
    dimension (rules, else embedding sandwich), then verify minimality of
    those attaining n-1. Unsettled graphs are flagged, never dropped.
    """
    if n < 1 or n > 7:
        raise EngineError("exhaustive candidate search supports 1 <= n <= 7")
    target = n - 1
    eng = Engine(mode, use_embedder=True, budget=EmbedderBudget(restarts, seed))
    candidates = []
    flagged = []
    graphs = all_graphs(n)
    for g in graphs:
        b = eng.sdim(g)
        if not b.exact:
            flagged.append(g)
            continue
        if b.value != target:
            continue
        try:
            rep = verify_minor_minimal(g, SDIM, mode, restarts=restarts,
                                       seed=seed, engine=eng)
        except InconclusiveRootError:
            flagged.append(g)
            continue
        if rep.verdict == MINIMAL:
            candidates.append(g)
        elif rep.verdict == INCONCLUSIVE:
            flagged.append(g)
    candidates.sort(key=sort_key)
    flagged.sort(key=sort_key)
    return SCandidateReport(n, target, tuple(candidates), tuple(flagged),
                            len(graphs))


# ---------------------------------------------------------------------------
# The four-vertex circle sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FourVertexEntry:
    graph: Graph
    has_star: bool           # contains the 3-leaf star as a subgraph
    sdim: Optional[int]
    circle_radius: Optional[float]

    @property
    def ok(self) -> bool:
        if self.has_star:
            return self.sdim == 3
        return (
            self.circle_radius is not None
            and self.circle_radius <= SELF_DUAL_RADIUS + 1e-6
        )


@dataclass(frozen=True)
class FourVertexReport:
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def check_4vertex_lemma(mode: str = CROSSINGS, restarts: int = 60,
                        seed: int = 0) -> FourVertexReport:
    """Every 4-vertex graph either contains the 3-leaf star (then its
    spherical dimension is 3) or embeds on a circle of radius at most
    sqrt(2)/2, found by a fixed-radius sweep."""
    eng = Engine(mode, use_embedder=True, budget=EmbedderBudget(restarts, seed))
    # Sweep includes the square's and triangle's exact radii.
    sweep = (SELF_DUAL_RADIUS, 1.0 / (3.0 ** 0.5), 0.65, 0.6, 0.55, 0.5, 0.45)
    entries = []
    for g in all_graphs(4):
        has_star = max_clique_with_common_triple(g) >= 1
        if has_star:
            b = eng.sdim(g)
            entries.append(FourVertexEntry(g, True, b.value if b.exact else None, None))
            continue
        found_radius = None
        for radius in sweep:
            req = EmbedRequest(g, 2, on_sphere=True, sphere_radius=radius,
                               restarts=restarts, seed=seed,
                               forbid_crossings=False)
            emb = find_embedding(req)
            if emb is not None and validate(emb, req).verdict == "valid":
                found_radius = radius
                break
        entries.append(FourVertexEntry(g, False, None, found_radius))
    return FourVertexReport(tuple(entries))
