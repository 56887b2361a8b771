"""Finite simple graphs: named families, minor operations, canonical labeling.

Graphs are immutable. Vertices are the integers 0..n-1 and edges are stored
as a sorted tuple of sorted pairs, so two Graph values compare equal exactly
when they are equal as labeled graphs. Isomorphism questions go through
``canonical_form``, which is deterministic and stable across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Malformed graph, edge, or family parameter."""


class SizeCapError(GraphError):
    """An enumeration was asked to run past its configured vertex cap."""


DEFAULT_MINOR_CAP = 10
CANONICAL_CAP = 12


# ---------------------------------------------------------------------------
# Core type
# ---------------------------------------------------------------------------

def _normalize_edges(vertex_count: int, edges: Iterable[Sequence[int]]):
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u},{v}) outside vertex range 0..{vertex_count - 1}")
        out.add((min(u, v), max(u, v)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.vertex_count, self.edges))

    # -- basic views --------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency_masks(self) -> list:
        """Neighbor sets as bitmasks, one int per vertex."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degrees(self) -> list:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def neighbors(self, v: int) -> list:
        return sorted({u for e in self.edges for u in e if v in e and u != v})

    def complement(self) -> "Graph":
        n = self.vertex_count
        present = set(self.edges)
        return Graph(n, [e for e in combinations(range(n), 2) if e not in present])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation: vertex i of the result is perm[i] of self."""
        inv = [0] * self.vertex_count
        for i, p in enumerate(perm):
            inv[p] = i
        return Graph(self.vertex_count, [(inv[u], inv[v]) for u, v in self.edges])

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        kept = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), kept)

    def components(self) -> list:
        """Connected components as sorted vertex lists."""
        masks = self.adjacency_masks()
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                m = masks[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def __str__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# Construction helpers
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.vertex_count
    return Graph(n, edges)


def join(*graphs: Graph) -> Graph:
    """Disjoint copies plus every edge between distinct parts."""
    base = disjoint_union(*graphs)
    edges = list(base.edges)
    offsets = []
    n = 0
    for g in graphs:
        offsets.append((n, n + g.vertex_count))
        n += g.vertex_count
    for i in range(len(offsets)):
        for j in range(i + 1, len(offsets)):
            a0, a1 = offsets[i]
            b0, b1 = offsets[j]
            edges.extend((a, b) for a in range(a0, a1) for b in range(b0, b1))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Family specs and literals
# ---------------------------------------------------------------------------

FAMILY_TAGS = ("K", "C", "E", "P", "W", "S", "PETAL", "FLOWER", "J", "U")


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, e.g. K:4 or W:6:2 or J(S:4,E:3).

    tag is one of FAMILY_TAGS; params hold the integer parameters and
    children the nested specs for J (join) and U (disjoint union).
    """

    tag: str
    params: tuple = ()
    children: tuple = ()

    def __str__(self):
        if self.tag in ("J", "U"):
            return f"{self.tag}({','.join(str(c) for c in self.children)})"
        return ":".join([self.tag] + [str(p) for p in self.params])


def _split_top_level(s: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GraphError(f"unbalanced parentheses in {s!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise GraphError(f"unbalanced parentheses in {s!r}")
    parts.append("".join(cur))
    return parts


def parse_family(text: str) -> FamilySpec:
    """Parse a family literal such as K:4, W:6:2, PETAL:6:0, J(S:4,E:3)."""
    s = text.strip()
    m = re.fullmatch(r"([JU])\((.*)\)", s)
    if m:
        children = tuple(parse_family(p) for p in _split_top_level(m.group(2)))
        if not children:
            raise GraphError(f"{m.group(1)}() needs at least one member")
        return FamilySpec(m.group(1), (), children)
    bits = s.split(":")
    tag = bits[0].upper()
    if tag not in FAMILY_TAGS or tag in ("J", "U"):
        raise GraphError(
            f"unknown family literal {text!r}; valid tags: "
            "K:n C:n E:n P:n W:n:k S:n PETAL:n:i J(...) U(...)"
        )
    try:
        params = tuple(int(b) for b in bits[1:])
    except ValueError:
        raise GraphError(f"non-integer parameter in family literal {text!r}") from None
    return FamilySpec(tag, params)


def _expect_params(spec: FamilySpec, count: int):
    if len(spec.params) != count:
        raise GraphError(f"{spec.tag} takes {count} parameter(s), got {len(spec.params)}")


def build_family(spec: FamilySpec) -> Graph:
    """Materialize a FamilySpec as a concrete graph."""
    tag = spec.tag
    if tag == "K":
        _expect_params(spec, 1)
        (n,) = spec.params
        if n < 0:
            raise GraphError("K:n needs n >= 0")
        return complete_graph(n)
    if tag == "E":
        _expect_params(spec, 1)
        (n,) = spec.params
        if n < 0:
            raise GraphError("E:n needs n >= 0")
        return empty_graph(n)
    if tag == "C":
        _expect_params(spec, 1)
        (n,) = spec.params
        if n < 3:
            raise GraphError("C:n needs n >= 3")
        return cycle_graph(n)
    if tag == "P":
        _expect_params(spec, 1)
        (n,) = spec.params
        if n < 1:
            raise GraphError("P:n needs n >= 1")
        return path_graph(n)
    if tag == "W":
        _expect_params(spec, 2)
        n, k = spec.params
        if n < 3 or k < 1:
            raise GraphError("W:n:k needs n >= 3 and k >= 1")
        return join(cycle_graph(n), empty_graph(k))
    if tag == "S":
        _expect_params(spec, 1)
        (n,) = spec.params
        if n < 1:
            raise GraphError("S:n needs n >= 1")
        if n <= 3:
            return empty_graph(n)
        return join(complete_graph(n - 3), empty_graph(3))
    if tag == "PETAL":
        _expect_params(spec, 2)
        n, idx = spec.params
        petals = enumerate_petals(n)
        if not (0 <= idx < len(petals)):
            raise GraphError(f"PETAL:{n} has indices 0..{len(petals) - 1}, got {idx}")
        return petals[idx]
    if tag == "FLOWER":
        # FLOWER with one child (the center) plus petal parameters n, i.
        _expect_params(spec, 2)
        if len(spec.children) != 1:
            raise GraphError("FLOWER needs exactly one center spec")
        n, idx = spec.params
        return join(build_family(spec.children[0]), build_family(FamilySpec("PETAL", (n, idx))))
    if tag == "J":
        return join(*(build_family(c) for c in spec.children))
    if tag == "U":
        return disjoint_union(*(build_family(c) for c in spec.children))
    raise GraphError(f"unknown family tag {tag!r}")


def family(text: str) -> Graph:
    """Shorthand: parse a literal and build it."""
    return build_family(parse_family(text))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def format_graph_text(g: Graph) -> str:
    """Serialize: first line n, then one `u v` pair per line, ascending."""
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphError("line 1: expected vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphError(f"line 1: expected vertex count, got {lines[0]!r}") from None
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        s = line.strip()
        if not s:
            continue
        bits = s.split()
        if len(bits) != 2:
            raise GraphError(f"line {i}: expected `u v`, got {line!r}")
        try:
            edges.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise GraphError(f"line {i}: expected integers, got {line!r}") from None
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"invalid graph body: {exc}") from None


# ---------------------------------------------------------------------------
# Minor operations
# ---------------------------------------------------------------------------

VERTEX_REMOVAL = "vertex_removal"
EDGE_REMOVAL = "edge_removal"
EDGE_CONTRACTION = "edge_contraction"


@dataclass(frozen=True)
class MinorOp:
    """One minor-producing operation; target is a vertex id or an edge pair."""

    kind: str
    target: object

    def __post_init__(self):
        if self.kind not in (VERTEX_REMOVAL, EDGE_REMOVAL, EDGE_CONTRACTION):
            raise GraphError(f"unknown minor op kind {self.kind!r}")


def apply_minor_op(g: Graph, op: MinorOp) -> Graph:
    """Apply one operation; contraction merges neighborhoods and stays simple."""
    if op.kind == VERTEX_REMOVAL:
        v = int(op.target)
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"vertex {v} not in graph")
        keep = [u for u in range(g.vertex_count) if u != v]
        return g.induced_subgraph(keep)
    u, v = op.target
    u, v = min(u, v), max(u, v)
    if (u, v) not in set(g.edges):
        if op.kind == EDGE_CONTRACTION and max(u, v) < g.vertex_count:
            raise GraphError(f"cannot contract ({u},{v}): vertices not adjacent")
        raise GraphError(f"edge ({u},{v}) not in graph")
    if op.kind == EDGE_REMOVAL:
        return Graph(g.vertex_count, [e for e in g.edges if e != (u, v)])
    # Contraction: fold v into u, then drop v and compact ids.
    edges = set()
    for a, b in g.edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            edges.add((min(a, b), max(a, b)))
    remap = [w if w < v else w - 1 for w in range(g.vertex_count)]
    return Graph(g.vertex_count - 1, [(remap[a], remap[b]) for a, b in edges])


def one_step_minors(g: Graph):
    """All graphs one operation away, with the op that produced each."""
    for v in range(g.vertex_count):
        yield MinorOp(VERTEX_REMOVAL, v), apply_minor_op(g, MinorOp(VERTEX_REMOVAL, v))
    for e in g.edges:
        yield MinorOp(EDGE_REMOVAL, e), apply_minor_op(g, MinorOp(EDGE_REMOVAL, e))
    for e in g.edges:
        yield MinorOp(EDGE_CONTRACTION, e), apply_minor_op(g, MinorOp(EDGE_CONTRACTION, e))


def minor_closure(g: Graph, proper_only: bool = False, cap: int = DEFAULT_MINOR_CAP,
                  include_empty: bool = True) -> list:
    """Every minor of g up to isomorphism, BFS with canonical-form dedup.

    Raises SizeCapError when |g| exceeds the cap (override via `cap`).
    """
    if g.vertex_count > cap:
        raise SizeCapError(
            f"graph has {g.vertex_count} vertices, closure cap is {cap}; "
            "pass a larger cap to override"
        )
    seen = {canonical_form(g): g}
    frontier = [g]
    while frontier:
        nxt = []
        for h in frontier:
            for _, m in one_step_minors(h):
                key = canonical_form(m)
                if key not in seen:
                    seen[key] = m
                    nxt.append(m)
        frontier = nxt
    out = []
    root_key = canonical_form(g)
    for key in sorted(seen):
        m = seen[key]
        if proper_only and key == root_key:
            continue
        if not include_empty and m.vertex_count == 0:
            continue
        out.append(m)
    out.sort(key=lambda h: (h.vertex_count, h.edge_count, canonical_form(h)))
    return out


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------
# Equitable-partition refinement with individualization, minimizing the
# upper-triangle adjacency bitstring over refinement-respecting orderings.
# Cells whose vertices are mutually interchangeable (same outside
# neighborhoods, clique or independent inside) are ordered without branching.

def _refine(n: int, adj: list, cells: list) -> list:
    cells = [list(c) for c in cells]
    while True:
        cell_of = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {}
            for v in c:
                counts = []
                m = adj[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    counts.append(cell_of[u])
                key = tuple(sorted(counts))
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sorted(sig[key]))
        cells = new_cells
        if not changed:
            return cells


def _interchangeable(adj: list, cell: list) -> bool:
    m = 0
    for v in cell:
        m |= 1 << v
    outside = {adj[v] & ~m for v in cell}
    if len(outside) != 1:
        return False
    inside = [bin(adj[v] & m).count("1") for v in cell]
    k = len(cell)
    return all(c == 0 for c in inside) or all(c == k - 1 for c in inside)


def _order_bits(n: int, adj: list, order: list) -> int:
    bits = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((ai >> order[j]) & 1)
    return bits


def _canonical_order(g: Graph) -> list:
    n = g.vertex_count
    if n == 0:
        return []
    adj = g.adjacency_masks()
    deg = g.degrees()
    start = {}
    for v in range(n):
        start.setdefault(deg[v], []).append(v)
    cells = _refine(n, adj, [start[d] for d in sorted(start)])
    best = {"bits": None, "order": None}

    def search(cells):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target is None:
            order = [c[0] for c in cells]
            bits = _order_bits(n, adj, order)
            if best["bits"] is None or bits < best["bits"]:
                best["bits"], best["order"] = bits, order
            return
        cell = cells[target]
        if _interchangeable(adj, cell):
            fixed = cells[:target] + [[v] for v in sorted(cell)] + cells[target + 1:]
            search(_refine(n, adj, fixed))
            return
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            trial = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(n, adj, trial))

    search(cells)
    return best["order"]


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal iff isomorphic, stable across runs."""
    n = g.vertex_count
    if n > CANONICAL_CAP:
        raise SizeCapError(f"canonical_form supports up to {CANONICAL_CAP} vertices, got {n}")
    if n == 0:
        return b"\x00"
    order = _canonical_order(g)
    bits = _order_bits(n, g.adjacency_masks(), order)
    nbits = n * (n - 1) // 2
    return bytes([n]) + bits.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_graph(g: Graph) -> Graph:
    """Relabeled copy whose labeling realizes canonical_form."""
    if g.vertex_count == 0:
        return g
    order = _canonical_order(g)
    perm = [0] * g.vertex_count
    for i, v in enumerate(order):
        perm[i] = v
    return g.relabel(perm)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# Join decomposition
# ---------------------------------------------------------------------------

def sort_key(g: Graph) -> tuple:
    """Deterministic ordering key; canonical at desk scale, labeled above."""
    if g.vertex_count <= CANONICAL_CAP:
        return (g.vertex_count, g.edge_count, 0, canonical_form(g))
    return (g.vertex_count, g.edge_count, 1, repr(g.edges).encode())


def join_decompose(g: Graph) -> list:
    """Indecomposable join factors: connected components of the complement.

    join(join_decompose(g)) is isomorphic to g; a single factor means g is
    join-indecomposable. Factors come back canonically sorted.
    """
    if g.vertex_count == 0:
        return [g]
    comps = g.complement().components()
    factors = [g.induced_subgraph(c) for c in comps]
    factors.sort(key=sort_key)
    return factors


# ---------------------------------------------------------------------------
# Petals (max-degree-2 graphs with a fixed edge budget)
# ---------------------------------------------------------------------------

def _partitions(total: int, smallest: int):
    """Multisets of integers >= smallest summing to total, descending parts."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, 10 ** 9), smallest - 1, -1):
        for rest in _partitions(total - first, smallest):
            if not rest or first >= rest[0]:
                yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_petals(n: int) -> tuple:
    """All graphs with n edges, max degree <= 2, no isolated vertices, up to iso.

    These are disjoint unions of paths and cycles; the cycle on n vertices is
    always a member. Sorted canonically, so indices are stable.
    """
    if n < 1:
        raise GraphError("petal enumeration needs n >= 1")
    out = []
    for cycle_edges in range(0, n + 1):
        path_edges = n - cycle_edges
        for cycles in _partitions(cycle_edges, 3):
            for paths in _partitions(path_edges, 1):
                parts = [cycle_graph(j) for j in cycles] + [path_graph(k + 1) for k in paths]
                shape = tuple(sorted([("c", j) for j in cycles] + [("p", k) for k in paths]))
                out.append((shape, disjoint_union(*parts)))
    # The component multiset is a complete isomorphism invariant here, so
    # sorting by it gives a stable canonical order without size limits.
    out.sort(key=lambda item: (item[1].vertex_count, item[0]))
    return tuple(g for _, g in out)


def petal_count_oracle(n: int) -> int:
    """Independent count of |petals(n)| by partition pairs (for testing)."""
    def count_partitions(total, smallest):
        if total == 0:
            return 1
        return sum(
            count_partitions(total - first, first)
            for first in range(smallest, total + 1)
        )

    total = 0
    for cycle_edges in range(0, n + 1):
        c = count_partitions(cycle_edges, 3) if cycle_edges else 1
        p = count_partitions(n - cycle_edges, 1) if n - cycle_edges else 1
        total += c * p
    return total


# ---------------------------------------------------------------------------
# Exhaustive generation of all graphs on n vertices
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """All graphs on exactly n labeled-vertex-count vertices, up to iso.

    Grown incrementally; counts are 1, 1, 2, 4, 11, 34, 156, 1044 for n=0..7.
    """
    if n < 0:
        raise GraphError("n must be non-negative")
    if n > 7:
        raise SizeCapError("all_graphs supports n <= 7")
    if n == 0:
        return (Graph(0),)
    seen = {}
    for g in all_graphs(n - 1):
        for bits in range(1 << (n - 1)):
            edges = list(g.edges) + [(v, n - 1) for v in range(n - 1) if bits >> v & 1]
            h = Graph(n, edges)
            seen.setdefault(canonical_form(h), h)
    out = sorted(seen.values(), key=lambda h: (h.edge_count, canonical_form(h)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Structure probes used by the bounds engine
# ---------------------------------------------------------------------------

def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def is_path_union(g: Graph) -> bool:
    """True when every component is a path (single vertices count)."""
    if max_degree(g) > 2:
        return False
    return all(
        len(g.induced_subgraph(c).edges) == len(c) - 1
        for c in g.components()
    )


def component_shape(g: Graph) -> Optional[list]:
    """For max-degree-2 graphs: list of ('path', k_edges) / ('cycle', length).

    Returns None when some vertex has degree above 2.
    """
    if max_degree(g) > 2:
        return None
    shape = []
    for c in g.components():
        sub = g.induced_subgraph(c)
        if sub.edge_count == len(c):
            shape.append(("cycle", len(c)))
        else:
            shape.append(("path", sub.edge_count))
    return shape


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound (desk-scale graphs)."""
    adj = g.adjacency_masks()
    n = g.vertex_count
    best = 0

    def grow(candidates: int, size: int):
        nonlocal best
        if size + bin(candidates).count("1") <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        m = candidates
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            grow(candidates & adj[v] & ~((1 << (v + 1)) - 1), size + 1)
            candidates &= ~(1 << v)
            if size + bin(candidates).count("1") <= best:
                return

    grow((1 << n) - 1, 0)
    return best


def max_clique_with_common_triple(g: Graph) -> int:
    """Largest a such that some a-clique has >= 3 common neighbors.

    Witnesses the subgraph K_a joined to three extra vertices; 0 when no
    vertex has degree 3.
    """
    adj = g.adjacency_masks()
    n = g.vertex_count
    best = 0
    full = (1 << n) - 1

    def grow(candidates: int, common: int, size: int):
        nonlocal best
        if bin(common).count("1") >= 3:
            best = max(best, size)
        m = candidates
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            new_common = common & adj[v]
            if bin(new_common).count("1") >= 3:
                grow(candidates & adj[v] & ~((1 << (v + 1)) - 1), new_common, size + 1)

    grow(full, full, 0)
    return best


def contains_subgraph_spec(g: Graph, a: int) -> bool:
    """Does g contain an a-clique fully joined to 3 further vertices?"""
    return max_clique_with_common_triple(g) >= a


def has_biclique(g: Graph, a: int, b: int) -> bool:
    """Does g contain the complete bipartite graph on a + b vertices?

    Subgraph containment only: the two sides need not be independent sets.
    """
    if a > b:
        a, b = b, a
    adj = g.adjacency_masks()
    n = g.vertex_count
    for side in combinations(range(n), a):
        common = (1 << n) - 1
        for v in side:
            common &= adj[v]
        for v in side:
            common &= ~(1 << v)
        if bin(common).count("1") >= b:
            return True
    return False
