"""Numerical realization of unit-distance embeddings and certificate checks.

The search is randomized restarts of damped least squares on squared edge
residuals, optionally constrained to a sphere (free or fixed radius). A
failed search is never evidence of non-embeddability; callers must report it
as inconclusive. Validation recomputes everything independently of the
optimizer, including segment crossings and vertices lying on edges.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import least_squares

from .geometry import SphereSpec, polygon_coords, simplex_coords
from .graphs import Graph, GraphError, cycle_graph, join, complete_graph, empty_graph

FOUND_TOL = 1e-8          # edge-length deviation for the optimizer to claim success
CERT_TOL = 1e-6           # edge-length deviation accepted by validate
SEPARATION_FLOOR = 1e-4   # minimum pairwise vertex distance
SPHERE_MARGIN = 1e-6      # fitted sphere radius must stay below 1 - margin
CROSSING_TOL = 1e-7       # segment-segment distance that counts as a crossing
RADIUS_SOFT_CAP = 0.98    # free sphere radii are pushed below this during search


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    ambient_dim: int
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float).reshape(
            self.graph.vertex_count, self.ambient_dim
        )
        object.__setattr__(self, "coords", coords)
        if not np.all(np.isfinite(coords)):
            raise GraphError("embedding coordinates must be finite")

    def edge_lengths(self) -> np.ndarray:
        if not self.graph.edges:
            return np.zeros(0)
        idx = np.array(self.graph.edges)
        diff = self.coords[idx[:, 0]] - self.coords[idx[:, 1]]
        return np.linalg.norm(diff, axis=1)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "coords": [[float(x) for x in row] for row in self.coords],
            "graph": {
                "vertex_count": self.graph.vertex_count,
                "edges": [list(e) for e in self.graph.edges],
            },
        }

    @staticmethod
    def from_json(data: dict) -> "Embedding":
        g = Graph(data["graph"]["vertex_count"],
                  [tuple(e) for e in data["graph"]["edges"]])
        return Embedding(g, data["ambient_dim"], np.array(data["coords"]))


@dataclass(frozen=True)
class EmbedRequest:
    graph: Graph
    ambient_dim: int
    on_sphere: bool = False
    sphere_radius: Optional[float] = None
    forbid_crossings: bool = False
    restarts: int = 100
    seed: int = 0
    tolerance: float = FOUND_TOL

    def __post_init__(self):
        if self.graph.vertex_count < 1:
            raise GraphError("embedding needs at least one vertex")
        if self.ambient_dim < 1:
            raise GraphError("ambient dimension must be >= 1")
        if self.sphere_radius is not None:
            if not self.on_sphere:
                raise GraphError("sphere_radius requires on_sphere")
            if not 0.0 < self.sphere_radius < 1.0:
                raise GraphError("fixed sphere radius must sit in (0, 1)")
        if self.restarts < 1:
            raise GraphError("restarts must be >= 1")


@dataclass(frozen=True)
class CertificateReport:
    max_edge_residual: float
    min_vertex_separation: float
    sphere_deviation: Optional[float]
    sphere_radius: Optional[float]
    crossings: tuple
    vertex_on_edge: tuple
    verdict: str  # "valid" | "invalid"

    def to_json(self) -> dict:
        return {
            "max_edge_residual": self.max_edge_residual,
            "min_vertex_separation": self.min_vertex_separation,
            "sphere_deviation": self.sphere_deviation,
            "sphere_radius": self.sphere_radius,
            "crossings": [list(map(list, pair)) for pair in self.crossings],
            "vertex_on_edge": [[v, list(e)] for v, e in self.vertex_on_edge],
            "verdict": self.verdict,
        }


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def _worker_count() -> int:
    raw = os.environ.get("UNITDIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _unpack(x, n, d, req):
    pts = x[: n * d].reshape(n, d)
    pos = n * d
    center = None
    radius = None
    if req.on_sphere:
        center = x[pos: pos + d]
        pos += d
        if req.sphere_radius is None:
            radius = x[pos]
        else:
            radius = req.sphere_radius
    return pts, center, radius


def _residuals(x, n, d, req, edges, sep_pairs):
    pts, center, radius = _unpack(x, n, d, req)
    out = []
    for u, v in edges:
        diff = pts[u] - pts[v]
        out.append(diff @ diff - 1.0)
    if req.on_sphere:
        for v in range(n):
            diff = pts[v] - center
            out.append(diff @ diff - radius * radius)
        if req.sphere_radius is None:
            out.append(5.0 * max(0.0, radius - RADIUS_SOFT_CAP))
    target = (5.0 * SEPARATION_FLOOR) ** 2
    for u, v in sep_pairs:
        diff = pts[u] - pts[v]
        out.append(3.0 * max(0.0, target - diff @ diff))
    return np.array(out)


def _jacobian(x, n, d, req, edges, sep_pairs):
    pts, center, radius = _unpack(x, n, d, req)
    rows = len(edges) + (n + (1 if req.sphere_radius is None else 0) if req.on_sphere else 0)
    rows += len(sep_pairs)
    jac = np.zeros((rows, x.size))
    r = 0
    for u, v in edges:
        diff = 2.0 * (pts[u] - pts[v])
        jac[r, u * d: (u + 1) * d] = diff
        jac[r, v * d: (v + 1) * d] = -diff
        r += 1
    if req.on_sphere:
        cpos = n * d
        for v in range(n):
            diff = 2.0 * (pts[v] - center)
            jac[r, v * d: (v + 1) * d] = diff
            jac[r, cpos: cpos + d] = -diff
            if req.sphere_radius is None:
                jac[r, cpos + d] = -2.0 * radius
            r += 1
        if req.sphere_radius is None:
            jac[r, cpos + d] = 5.0 if radius > RADIUS_SOFT_CAP else 0.0
            r += 1
    target = (5.0 * SEPARATION_FLOOR) ** 2
    for u, v in sep_pairs:
        diff = pts[u] - pts[v]
        if target - diff @ diff > 0:
            jac[r, u * d: (u + 1) * d] = -6.0 * diff
            jac[r, v * d: (v + 1) * d] = 6.0 * diff
        r += 1
    return jac


def _bfs_tree_init(g: Graph, d: int, rng) -> np.ndarray:
    """Place vertices along a breadth-first tree with unit steps.

    Tree edges start at exactly length 1, which lands far closer to the
    solution manifold than a uniform cloud and rarely self-crosses.
    """
    n = g.vertex_count
    masks = g.adjacency_masks()
    pts = np.zeros((n, d))
    placed = [False] * n
    for root in range(n):
        if placed[root]:
            continue
        pts[root] = rng.uniform(-1.0, 1.0, d)
        placed[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not placed[u]:
                    step = rng.normal(size=d)
                    step /= np.linalg.norm(step)
                    pts[u] = pts[v] + step
                    placed[u] = True
                    queue.append(u)
    return pts.ravel()


def _ring_init(g: Graph, d: int, rng) -> np.ndarray:
    """Vertices jittered around a circle; convex-ish starts rarely cross."""
    n = g.vertex_count
    radius = max(0.5, 1.0 / (2.0 * math.sin(math.pi / max(n, 3))))
    angles = 2.0 * math.pi * (np.arange(n) + rng.uniform(0, 1)) / n
    pts = np.zeros((n, d))
    pts[:, 0] = radius * np.cos(angles)
    pts[:, 1 % d] = radius * np.sin(angles)
    pts += rng.normal(scale=0.1, size=(n, d))
    return pts.ravel()


def _solve_restart(req: EmbedRequest, restart_index: int) -> Optional[Embedding]:
    g = req.graph
    n, d = g.vertex_count, req.ambient_dim
    rng = np.random.default_rng((req.seed, restart_index))
    style = restart_index % 3
    if style == 1:
        x = _bfs_tree_init(g, d, rng)
    elif style == 2:
        x = _ring_init(g, d, rng)
    else:
        x = rng.uniform(-1.5, 1.5, n * d)
    if req.on_sphere:
        pts = x.reshape(n, d)
        center = pts.mean(axis=0)
        if req.sphere_radius is None:
            radius = float(np.mean(np.linalg.norm(pts - center, axis=1)))
            radius = min(max(radius, 0.3), RADIUS_SOFT_CAP - 0.05)
            x = np.concatenate([x, center, [radius]])
        else:
            # Start the cloud roughly on the requested sphere.
            norms = np.linalg.norm(pts - center, axis=1)
            norms[norms < 1e-9] = 1.0
            pts = center + (pts - center) / norms[:, None] * req.sphere_radius
            x = np.concatenate([pts.ravel(), center])
    edges = list(g.edges)
    sep_pairs = []
    for _ in range(4):
        res = least_squares(
            _residuals, x, jac=_jacobian,
            args=(n, d, req, edges, sep_pairs),
            method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400,
        )
        x = res.x
        pts, center, radius = _unpack(x, n, d, req)
        emb = Embedding(g, d, pts.copy())
        ok, new_pairs = _search_success(emb, req, center, radius)
        if ok:
            return emb
        if not new_pairs and req.on_sphere and center is not None and radius:
            # Re-anchor by projecting points radially onto the current sphere.
            offs = pts - center
            norms = np.linalg.norm(offs, axis=1)
            if np.all(norms > 1e-9):
                pts = center + offs / norms[:, None] * radius
                x[: n * d] = pts.ravel()
            else:
                return None
        elif new_pairs:
            sep_pairs = sorted(set(sep_pairs) | set(new_pairs))
        else:
            return None
    return None


def _search_success(emb: Embedding, req: EmbedRequest, center, radius):
    lengths = emb.edge_lengths()
    if lengths.size and np.max(np.abs(lengths - 1.0)) > req.tolerance:
        return False, []
    n = emb.graph.vertex_count
    bad_pairs = []
    if n > 1:
        diffs = emb.coords[:, None, :] - emb.coords[None, :, :]
        dist = np.linalg.norm(diffs, axis=2)
        iu = np.triu_indices(n, k=1)
        pairs = np.array(iu).T
        close = dist[iu] < SEPARATION_FLOOR
        bad_pairs = [tuple(p) for p in pairs[close]]
        if bad_pairs:
            return False, bad_pairs
    if req.on_sphere:
        offs = emb.coords - center
        dev = np.abs(np.linalg.norm(offs, axis=1) - radius)
        if np.max(dev) > req.tolerance * 10:
            return False, []
        if radius >= 1.0 - SPHERE_MARGIN or radius <= 0:
            return False, []
        if req.sphere_radius is not None and abs(radius - req.sphere_radius) > 1e-9:
            return False, []
    return True, []


def find_embedding(req: EmbedRequest) -> Optional[Embedding]:
    """Randomized-restart search; None means inconclusive, never impossible."""
    g = req.graph
    if g.vertex_count == 1:
        coords = np.zeros((1, req.ambient_dim))
        if req.on_sphere:
            coords[0, 0] = req.sphere_radius if req.sphere_radius else 0.5
        return Embedding(g, req.ambient_dim, coords)

    def attempt(k):
        emb = _solve_restart(req, k)
        if emb is None:
            return None
        report = validate(emb, req)
        return emb if report.verdict == "valid" else None

    workers = _worker_count()
    if workers <= 1:
        for k in range(req.restarts):
            emb = attempt(k)
            if emb is not None:
                return emb
        return None
    # Parallel restarts, merged deterministically by restart index.
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunk = max(workers, 4)
        for start in range(0, req.restarts, chunk):
            ks = range(start, min(start + chunk, req.restarts))
            for k, emb in zip(ks, pool.map(attempt, ks)):
                if emb is not None:
                    return emb
    return None


# ---------------------------------------------------------------------------
# Validation (independent of the optimizer)
# ---------------------------------------------------------------------------

def _segment_distance(p1, q1, p2, q2) -> float:
    """Minimal distance between closed segments [p1,q1] and [p2,q2] in R^d."""
    d1 = q1 - p1
    d2 = q2 - p2
    r = p1 - p2
    a = d1 @ d1
    e = d2 @ d2
    f = d2 @ r
    eps = 1e-15
    if a <= eps and e <= eps:
        return float(np.linalg.norm(r))
    if a <= eps:
        t = min(1.0, max(0.0, f / e))
        return float(np.linalg.norm(r - t * d2))
    c = d1 @ r
    if e <= eps:
        s = min(1.0, max(0.0, -c / a))
        return float(np.linalg.norm(r + s * d1))
    b = d1 @ d2
    denom = a * e - b * b
    s = min(1.0, max(0.0, (b * f - c * e) / denom)) if denom > eps else 0.0
    t = (b * s + f) / e
    if t < 0.0:
        t = 0.0
        s = min(1.0, max(0.0, -c / a))
    elif t > 1.0:
        t = 1.0
        s = min(1.0, max(0.0, (b - c) / a))
    return float(np.linalg.norm((p1 + s * d1) - (p2 + t * d2)))


def _point_segment(p, a, b):
    """(distance, parameter t) from point p to closed segment [a, b]."""
    ab = b - a
    denom = ab @ ab
    if denom < 1e-15:
        return float(np.linalg.norm(p - a)), 0.0
    t = float((p - a) @ ab / denom)
    tc = min(1.0, max(0.0, t))
    return float(np.linalg.norm(p - (a + tc * ab))), tc


def validate(e: Embedding, req: Optional[EmbedRequest] = None) -> CertificateReport:
    """Recompute all certificate quantities from raw coordinates."""
    g = e.graph
    coords = e.coords
    n = g.vertex_count
    lengths = e.edge_lengths()
    max_res = float(np.max(np.abs(lengths - 1.0))) if lengths.size else 0.0

    min_sep = math.inf
    if n > 1:
        diffs = coords[:, None, :] - coords[None, :, :]
        dist = np.linalg.norm(diffs, axis=2)
        iu = np.triu_indices(n, k=1)
        min_sep = float(np.min(dist[iu]))

    sphere_dev = None
    sphere_radius = None
    on_sphere = bool(req.on_sphere) if req is not None else False
    if on_sphere:
        spec = fitted_sphere(e)
        if spec is None:
            sphere_dev = math.inf
        else:
            sphere_radius = spec.radius
            sphere_dev = float(
                np.max(np.abs(np.linalg.norm(coords - spec.center, axis=1) - spec.radius))
            )

    crossings = []
    edges = list(g.edges)
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue  # sharing an endpoint is incidence, not a crossing
            gap = _segment_distance(coords[a], coords[b], coords[c], coords[d])
            if gap < CROSSING_TOL:
                crossings.append((edges[i], edges[j]))

    vertex_on_edge = []
    for v in range(n):
        for (a, b) in edges:
            if v == a or v == b:
                continue
            gap, t = _point_segment(coords[v], coords[a], coords[b])
            if gap < CROSSING_TOL and 1e-9 < t < 1.0 - 1e-9:
                vertex_on_edge.append((v, (a, b)))

    ok = max_res <= CERT_TOL and min_sep >= SEPARATION_FLOOR and not vertex_on_edge
    if on_sphere:
        ok = ok and sphere_dev is not None and sphere_dev <= CERT_TOL
        ok = ok and sphere_radius is not None and sphere_radius <= 1.0 - SPHERE_MARGIN
        if req is not None and req.sphere_radius is not None and sphere_radius is not None:
            ok = ok and abs(sphere_radius - req.sphere_radius) <= CERT_TOL
    if req is not None and req.forbid_crossings:
        ok = ok and not crossings
    return CertificateReport(
        max_edge_residual=max_res,
        min_vertex_separation=min_sep,
        sphere_deviation=sphere_dev,
        sphere_radius=sphere_radius,
        crossings=tuple(crossings),
        vertex_on_edge=tuple(vertex_on_edge),
        verdict="valid" if ok else "invalid",
    )


def fitted_sphere(e: Embedding, tol: float = CERT_TOL) -> Optional[SphereSpec]:
    """Least-squares sphere through the vertices, at the affine rank of the set."""
    pts = e.coords
    n = pts.shape[0]
    if n < 2:
        return None
    mean = pts.mean(axis=0)
    centered = pts - mean
    u, s, vt = np.linalg.svd(centered, full_matrices=False)
    rank = int(np.sum(s > 1e-7 * max(1.0, s[0] if s.size else 1.0)))
    if rank == 0:
        return None
    basis = vt[:rank]
    y = centered @ basis.T
    design = np.hstack([2.0 * y, np.ones((n, 1))])
    rhs = np.sum(y * y, axis=1)
    sol, *_ = np.linalg.lstsq(design, rhs, rcond=None)
    c, b = sol[:rank], sol[rank]
    rho_sq = b + c @ c
    if rho_sq <= 0:
        return None
    rho = math.sqrt(rho_sq)
    dev = np.abs(np.linalg.norm(y - c, axis=1) - rho)
    if float(np.max(dev)) > tol:
        return None
    center = mean + c @ basis
    return SphereSpec(
        ambient_dim=e.ambient_dim,
        sphere_dim=rank,
        center=center,
        radius=rho,
        carrier=basis,
    )


# ---------------------------------------------------------------------------
# Orthogonal join construction
# ---------------------------------------------------------------------------

def orthogonal_join_embedding(eg: Embedding, eh: Embedding,
                              forbid_crossings: bool = False,
                              tol: float = CERT_TOL) -> Embedding:
    """Join two on-sphere embeddings in orthogonal coordinate blocks.

    Each input is recentered on its fitted sphere; the radii must satisfy
    r1^2 + r2^2 = 1 so that all cross edges come out unit length.
    """
    sg = fitted_sphere(eg)
    sh = fitted_sphere(eh)
    if sg is None or sh is None:
        raise GraphError("both inputs must lie on spheres")
    gap = sg.radius ** 2 + sh.radius ** 2 - 1.0
    if abs(gap) > tol:
        raise GraphError(
            f"squared radii sum to {1.0 + gap:.9f}, not 1 (gap {gap:.2e})"
        )
    a = eg.coords - sg.center
    b = eh.coords - sh.center
    d1, d2 = eg.ambient_dim, eh.ambient_dim
    n1, n2 = eg.graph.vertex_count, eh.graph.vertex_count
    coords = np.zeros((n1 + n2, d1 + d2))
    coords[:n1, :d1] = a
    coords[n1:, d1:] = b
    out = Embedding(join(eg.graph, eh.graph), d1 + d2, coords)
    lengths = out.edge_lengths()
    if lengths.size and np.max(np.abs(lengths - 1.0)) > tol * 10:
        raise GraphError("join construction produced non-unit edges")
    if forbid_crossings:
        report = validate(out, EmbedRequest(out.graph, out.ambient_dim,
                                            forbid_crossings=True))
        if report.crossings:
            raise GraphError("join construction produced crossings")
    return out


# ---------------------------------------------------------------------------
# Exact reference constructions
# ---------------------------------------------------------------------------

def exact_polygon_embedding(n: int, m: int = 1) -> Embedding:
    """The cycle on n vertices drawn as the unit-side {n/m} polygon."""
    return Embedding(cycle_graph(n), 2, polygon_coords(n, m))


def exact_simplex_embedding(n: int) -> Embedding:
    """The complete graph on n vertices at its unique unit-distance shape."""
    return Embedding(complete_graph(n), max(n - 1, 1),
                     simplex_coords(n) if n > 1 else np.zeros((1, 1)))


def exact_hexagon_wheel_embedding() -> Embedding:
    """The six-cycle on the unit circle plus its hub at the center."""
    g = join(cycle_graph(6), empty_graph(1))
    coords = np.vstack([polygon_coords(6, 1), np.zeros((1, 2))])
    return Embedding(g, 2, coords)


# ---------------------------------------------------------------------------
# Figure export
# ---------------------------------------------------------------------------

def save_projection(e: Embedding, path: str) -> None:
    """Render the first two coordinates to an image file (svg/png by suffix)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    coords = e.coords
    if e.ambient_dim == 1:
        coords = np.hstack([coords, np.zeros((coords.shape[0], 1))])
    xy = coords[:, :2]
    fig, ax = plt.subplots(figsize=(4, 4))
    for u, v in e.graph.edges:
        ax.plot([xy[u, 0], xy[v, 0]], [xy[u, 1], xy[v, 1]],
                color="tab:blue", linewidth=1.0, zorder=1)
    ax.scatter(xy[:, 0], xy[:, 1], color="tab:red", s=18, zorder=2)
    for i, (x, y) in enumerate(xy):
        ax.annotate(str(i), (x, y), textcoords="offset points",
                    xytext=(4, 4), fontsize=8)
    ax.set_aspect("equal")
    ax.set_title(f"projection to first two of {e.ambient_dim} coordinates")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def embedding_to_json(e: Embedding) -> str:
    return json.dumps(e.to_json(), indent=2)
