"""Left-turn directed networks dual to the n-triangulation of a polygon.

Nodes
-----
``("U", face, base)``  small up-triangle with vertices base + e0, base + e1, base + e2
``("D", face, base)``  small down-triangle with vertices base + e1 + e2, base + e0 + e2, base + e0 + e1
``("B", edge, m)``     the m-th small edge along a big edge (reference direction);
                       on an internal edge it is shared by both faces

Every small edge of the n-triangulation gives exactly one network edge.
Inside a face with distinguished out-side ``o``, an edge crossing a small
edge parallel to ``o`` runs from the up-triangle outward; edges crossing
small edges parallel to the other two sides run into the up-triangle.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .surface import Lattice, TriSurface


class InconsistentOutAssignment(ValueError):
    pass


class DegenerateGeometry(ValueError):
    pass


E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _plus(*vs):
    return tuple(sum(x) for x in zip(*vs))


def _minus(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class NetEdge:
    id: int
    tail: tuple
    head: tuple
    face: str
    parallel_to: int  # side slot the crossed small edge is parallel to


@dataclass(frozen=True, eq=False)
class Network:
    lattice: Lattice
    out: dict  # face id -> out-side slot
    nodes: tuple
    edges: tuple
    positions: dict
    sources: tuple = ()  # alpha_1 .. alpha_n
    sinks: tuple = ()  # beta_1 .. beta_n
    _out_edges: dict = field(default_factory=dict, repr=False)
    _in_edges: dict = field(default_factory=dict, repr=False)

    def out_edges(self, node) -> list:
        return self._out_edges.get(node, [])

    def in_edges(self, node) -> list:
        return self._in_edges.get(node, [])

    def degree(self, node) -> tuple:
        return len(self.in_edges(node)), len(self.out_edges(node))

    def is_acyclic(self) -> bool:
        indeg = {v: len(self.in_edges(v)) for v in self.nodes}
        queue = deque(v for v, d in indeg.items() if d == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for e in self.out_edges(v):
                indeg[e.head] -= 1
                if indeg[e.head] == 0:
                    queue.append(e.head)
        return seen == len(self.nodes)

    def degree_violations(self) -> list:
        """Triangle nodes that break the 2-in/1-out (up) or 1-in/2-out (down) rule."""
        bad = []
        for v in self.nodes:
            want = {"U": (2, 1), "D": (1, 2)}.get(v[0])
            if want is not None and self.degree(v) != want:
                bad.append(v)
        return bad

    def label(self, node) -> str:
        if node in self.sources:
            return f"alpha{self.sources.index(node) + 1}"
        if node in self.sinks:
            return f"beta{self.sinks.index(node) + 1}"
        if node[0] == "B" and not self.lattice.surface.edges[node[1]].boundary:
            return f"gamma:{node[1]}:{node[2]}"
        return ":".join(str(x) for x in node)

    def to_dot(self, name: str = "network") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.nodes:
            x, y = self.positions[v]
            lines.append(f'  "{self.label(v)}" [pos="{float(x) * 10:.3f},{float(y) * 10:.3f}!"];')
        for e in self.edges:
            lines.append(f'  "{self.label(e.tail)}" -> "{self.label(e.head)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "out": self.out,
            "nodes": [{"id": self.label(v), "pos": [str(c) for c in self.positions[v]]}
                      for v in self.nodes],
            "edges": [{"id": e.id, "tail": self.label(e.tail), "head": self.label(e.head)}
                      for e in self.edges],
        }


@dataclass(frozen=True)
class NetPath:
    edges: tuple  # NetEdge sequence

    @property
    def nodes(self) -> tuple:
        if not self.edges:
            return ()
        return (self.edges[0].tail,) + tuple(e.head for e in self.edges)

    def __len__(self):
        return len(self.edges)

    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)


def _small_edge_on_side(base, par, n):
    """For the up-triangle at ``base``, the (slot, m) position of its small
    edge parallel to side ``par`` when that edge lies on the big side.

    ``m`` counts small edges from corner c_slot (1-based)."""
    i, j, k = base
    if par == 0 and k == 0:
        return 0, j + 1
    if par == 1 and i == 0:
        return 1, k + 1
    if par == 2 and j == 0:
        return 2, i + 1
    return None


def _boundary_node(surf: TriSurface, face, slot, m, n):
    if not surf.side_agrees(face, slot):
        m = n + 1 - m
    return ("B", face.sides[slot], m)


def build_left_network(lat: Lattice, out: dict) -> Network:
    surf = lat.surface
    n = lat.n
    # each internal edge must be the out-side of exactly one of its faces
    for e in surf.internal_edges:
        inc = surf.faces_of(e.id)
        outs = sum(1 for f, s in inc if out.get(f.id) == s)
        if outs != 1:
            raise InconsistentOutAssignment(
                f"internal edge {e.id} is declared out by {outs} faces")
    for f in surf.faces:
        if f.id not in out:
            raise InconsistentOutAssignment(f"face {f.id} has no out-side")

    nodes: dict = {}
    edges = []

    def place(node, bary, face):
        if node not in nodes:
            P = [surf.positions[c] for c in face.corners]
            nodes[node] = tuple(sum(Fraction(w) / n * P[t][ax] for t, w in enumerate(bary))
                                for ax in range(2))

    for f in surf.faces:
        o = out[f.id]
        for i in range(n):
            for j in range(n - i):
                base = (i, j, n - 1 - i - j)
                U = ("U", f.id, base)
                place(U, tuple(Fraction(x) + Fraction(1, 3) for x in base), f)
                for par in range(3):
                    a, b = (par, (par + 1) % 3)  # the two vertices spanning this small edge
                    mid = tuple(Fraction(x) for x in _plus(base, [Fraction(y, 2) for y in _plus(E[a], E[b])]))
                    on_side = _small_edge_on_side(base, par, n)
                    if on_side is not None:
                        slot, m = on_side
                        other = _boundary_node(surf, f, slot, m, n)
                        place(other, mid, f)
                    else:
                        c = (par + 2) % 3  # the opposite vertex
                        d = _minus(base, E[c])
                        other = ("D", f.id, d)
                        place(other, tuple(Fraction(x) + Fraction(2, 3) for x in d), f)
                    if par == o:
                        tail, head = U, other
                    else:
                        tail, head = other, U
                    edges.append((tail, head, f.id, par))

    edges.sort(key=lambda e: (_node_key(e[0]), _node_key(e[1])))
    net_edges = tuple(NetEdge(idx, t, h, fid, par) for idx, (t, h, fid, par) in enumerate(edges))
    out_e: dict = {}
    in_e: dict = {}
    for e in net_edges:
        out_e.setdefault(e.tail, []).append(e)
        in_e.setdefault(e.head, []).append(e)
    order = tuple(sorted(nodes, key=_node_key))
    return Network(lat, dict(out), order, net_edges, nodes, (), (), out_e, in_e)


def _node_key(v):
    return tuple((0, x) if isinstance(x, int) else (1, str(x)) for x in v)


def rooted_out_assignment(surf: TriSurface, root_face: str, root_slot: int) -> dict:
    """Out-sides pointing along the dual tree toward ``root_face``.

    Faces in other components (after cutting) get the first side that does
    not conflict; they carry no relevant paths.
    """
    out = _bfs_out(surf, root_face, root_slot)
    for comp in surf.components():
        if any(fid in out for fid in comp):
            continue
        start = sorted(comp)[0]
        f = surf.face(start)
        slot = next((s for s, e in enumerate(f.sides) if surf.edges[e].boundary), 0)
        out.update(_bfs_out(surf, start, slot))
    return out


def _bfs_out(surf, root_face, root_slot):
    out = {root_face: root_slot}
    queue = deque([root_face])
    while queue:
        fid = queue.popleft()
        f = surf.face(fid)
        for eid in f.sides:
            if surf.edges[eid].boundary:
                continue
            for g, gs in surf.faces_of(eid):
                if g.id != fid and g.id not in out:
                    out[g.id] = gs
                    queue.append(g.id)
    return out


def side_nodes_from(surf: TriSurface, edge_id: str, corner, n: int) -> tuple:
    """Boundary nodes on ``edge_id`` listed outward from ``corner``."""
    e = surf.edges[edge_id]
    if e.ends[0] == corner:
        return tuple(("B", edge_id, m) for m in range(1, n + 1))
    if e.ends[1] == corner:
        return tuple(("B", edge_id, m) for m in range(n, 0, -1))
    raise ValueError(f"{corner!r} is not an end of {edge_id}")


def corner_network(lat: Lattice, corner, source_edge: str, sink_edge: str) -> Network:
    """Network for arcs that leave ``source_edge`` and end on ``sink_edge``
    turning counterclockwise around ``corner``."""
    surf = lat.surface
    (f, s), = surf.faces_of(sink_edge)
    out = rooted_out_assignment(surf, f.id, s)
    net = build_left_network(lat, out)
    sources = side_nodes_from(surf, source_edge, corner, lat.n)
    sinks = side_nodes_from(surf, sink_edge, corner, lat.n)
    return Network(net.lattice, net.out, net.nodes, net.edges, net.positions,
                   sources, sinks, net._out_edges, net._in_edges)


def enumerate_paths(net: Network, i: int, j: int) -> list:
    """All directed paths alpha_i -> beta_j, sorted by edge-id sequence."""
    n = net.lattice.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("path indices must lie in 1..n")
    src, dst = net.sources[i - 1], net.sinks[j - 1]
    # prune with reachability to keep the DFS linear in the output
    reach = {dst}
    stack = [dst]
    while stack:
        v = stack.pop()
        for e in net.in_edges(v):
            if e.tail not in reach:
                reach.add(e.tail)
                stack.append(e.tail)
    if src not in reach:
        return []
    paths = []

    def dfs(v, acc):
        if v == dst:
            paths.append(NetPath(tuple(acc)))
            return
        for e in sorted(net.out_edges(v), key=lambda e: e.id):
            if e.head in reach:
                acc.append(e)
                dfs(e.head, acc)
                acc.pop()

    dfs(src, [])
    paths.sort(key=lambda p: p.edge_ids())
    return paths


# ---------------------------------------------------------------------------
# left-of-path exponents


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_in_polygon(p, poly) -> bool:
    """Even-odd rule with exact arithmetic; ``p`` must not lie on the boundary."""
    inside = False
    m = len(poly)
    for idx in range(m):
        a, b = poly[idx], poly[(idx + 1) % m]
        if (a[1] > p[1]) != (b[1] > p[1]):
            x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x > p[0]:
                inside = not inside
    return inside


def _component_vertices(lat: Lattice, face_id: str) -> set:
    comp = next(c for c in lat.surface.components() if face_id in c)
    out = set()
    for fid in comp:
        out.update(lat.face_maps[fid].values())
    return out


def left_exponent(net: Network, p: NetPath, lat: Lattice | None = None,
                  corner=None) -> tuple:
    """0/1 vector of small vertices lying strictly left of ``p``.

    The path is closed into a loop through a point far outside the
    polygon beyond ``corner`` (the corner the arc turns around), so the
    enclosed region is the one between the path and that corner.
    """
    lat = lat or net.lattice
    surf = lat.surface
    pts = [net.positions[v] for v in p.nodes]
    if corner is None:
        corner = _arc_corner(net)
    c = surf.positions[corner]
    sink_face = net.sinks[0]
    (f, _), = surf.faces_of(sink_face[1])
    g = tuple(sum(surf.positions[x][ax] for x in f.corners) / 3 for ax in range(2))
    t = Fraction(10 ** 6)
    far = (c[0] + t * (c[0] - g[0]), c[1] + t * (c[1] - g[1]))
    loop = pts + [far]
    verts = _component_vertices(lat, f.id)
    out = [0] * len(lat.vertices)
    for v in verts:
        q = lat.positions[v]
        for a, b in zip(pts, pts[1:]):
            if _on_segment(q, a, b):
                raise DegenerateGeometry(f"small vertex {v} lies on the path")
        if point_in_polygon(q, loop):
            out[lat.index(v)] = 1
    return tuple(out)


def _arc_corner(net: Network):
    surf = net.lattice.surface
    a = surf.edges[net.sources[0][1]].ends
    b = surf.edges[net.sinks[0][1]].ends
    common = set(a) & set(b)
    if len(common) != 1:
        raise DegenerateGeometry("source and sink sides do not share a corner")
    return common.pop()


def paths_json(net: Network, paths: list) -> list:
    return [{"edges": list(p.edge_ids()), "length": len(p),
             "nodes": [net.label(v) for v in p.nodes]} for p in paths]
