"""Triangulated pb surfaces, their n-triangulation lattices, flips and cuts.

Conventions
-----------
* A face lists its corners ``(c0, c1, c2)`` in clockwise order; side slot
  ``s`` joins ``c_s`` and ``c_{s+1}``.
* A small vertex of a face has barycentric coordinates ``(i, j, k)``
  (weights on c0, c1, c2, ``i + j + k = n``).  Side 0 has ``k = 0``,
  side 1 has ``i = 0``, side 2 has ``j = 0``.
* Quiver arrows run along one rotational direction of each face boundary
  and parallel to it inside the face; ``ARROW_SENSE`` picks the direction.
* An edge carries reference ends ``(a, b)``; the vertex key
  ``("e", edge_id, d)`` sits at distance ``d`` from ``a``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

import numpy as np

from .quiver import Seed


class PolygonTooSmall(ValueError):
    pass


class NotATriangulation(ValueError):
    pass


class FlipNotAllowed(ValueError):
    pass


class CannotCutBoundary(ValueError):
    pass


# Global orientation switch.  +1 makes quiver arrows run counterclockwise
# around each face in the planar embedding, -1 clockwise.  Paired with
# "left of the path" in the network module, only -1 makes the corner-arc
# traces transform correctly under flips, so it is pinned here.
ARROW_SENSE = -1

# barycentric steps counterclockwise along sides 0, 1, 2, scaled by the switch
ARROW_STEPS = tuple(tuple(ARROW_SENSE * x for x in step)
                    for step in ((1, -1, 0), (0, 1, -1), (-1, 0, 1)))


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple
    boundary: bool


@dataclass(frozen=True)
class Face:
    id: str
    corners: tuple
    sides: tuple

    def slot_of(self, edge_id: str) -> int:
        return self.sides.index(edge_id)


@dataclass(frozen=True, eq=False)
class TriSurface:
    """Combinatorial triangulated surface (possibly with no faces yet).

    ``positions`` maps corner labels to exact planar coordinates; it is
    present for polygons and is what the network geometry relies on.
    """

    edges: dict
    faces: tuple = ()
    positions: dict = field(default_factory=dict)
    name: str = ""

    # -- queries ---------------------------------------------------------
    def face(self, fid: str) -> Face:
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    @property
    def boundary_edges(self) -> list:
        return [e for e in self.edges.values() if e.boundary]

    @property
    def internal_edges(self) -> list:
        return [e for e in self.edges.values() if not e.boundary]

    def faces_of(self, edge_id: str) -> list:
        """``(face, slot)`` pairs incident to an edge."""
        out = []
        for f in self.faces:
            for s, e in enumerate(f.sides):
                if e == edge_id:
                    out.append((f, s))
        return out

    def side_agrees(self, f: Face, slot: int) -> bool:
        """Does side ``slot`` of ``f`` run along the edge's reference direction?"""
        e = self.edges[f.sides[slot]]
        a, b = f.corners[slot], f.corners[(slot + 1) % 3]
        if (a, b) == tuple(e.ends):
            return True
        if (b, a) == tuple(e.ends):
            return False
        raise ValueError(f"face {f.id} side {slot} does not match edge {e.id}")

    def check(self) -> None:
        for e in self.edges.values():
            inc = self.faces_of(e.id)
            want = 1 if e.boundary else 2
            if self.faces and len(inc) != want:
                raise NotATriangulation(
                    f"edge {e.id} meets {len(inc)} face sides, expected {want}")
        for f in self.faces:
            if len(set(f.sides)) != 3:
                raise NotATriangulation(f"face {f.id} is self-folded")
            for s in range(3):
                self.side_agrees(f, s)
        for e in self.internal_edges:
            (f1, s1), (f2, s2) = self.faces_of(e.id)
            if self.side_agrees(f1, s1) == self.side_agrees(f2, s2):
                raise NotATriangulation(f"gluing along {e.id} does not reverse orientation")

    def components(self) -> list:
        """Face-id sets of connected components (adjacency through internal edges)."""
        parent = {f.id: f.id for f in self.faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.internal_edges:
            fs = self.faces_of(e.id)
            if len(fs) == 2:
                parent[find(fs[0][0].id)] = find(fs[1][0].id)
        groups: dict = {}
        for f in self.faces:
            groups.setdefault(find(f.id), set()).add(f.id)
        return sorted(groups.values(), key=lambda g: sorted(g))

    # -- serialisation ---------------------------------------------------
    def to_json(self) -> dict:
        gluing = []
        for e in self.internal_edges:
            (f1, s1), (f2, s2) = self.faces_of(e.id)
            gluing.append([f1.id, s1, f2.id, s2])
        return {
            "name": self.name,
            "faces": [{"id": f.id, "sides": list(f.sides), "corners": list(f.corners)}
                      for f in self.faces],
            "edges": [{"id": e.id, "boundary": e.boundary, "ends": list(e.ends)}
                      for e in self.edges.values()],
            "gluing": gluing,
            "positions": {str(c): [str(x) for x in p] for c, p in self.positions.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "TriSurface":
        """Load a surface; faces without corner labels get them from the gluing."""
        faces_in = data["faces"]
        if all("corners" in f for f in faces_in):
            faces = tuple(Face(f["id"], tuple(_key(c) for c in f["corners"]), tuple(f["sides"]))
                          for f in faces_in)
            edges = {}
            for e in data["edges"]:
                ends = tuple(_key(c) for c in e["ends"]) if "ends" in e else None
                edges[e["id"]] = (e["boundary"], ends)
            out_edges = {}
            for eid, (bd, ends) in edges.items():
                if ends is None:
                    f, s = next((f, s) for f in faces for s in range(3) if f.sides[s] == eid)
                    ends = (f.corners[s], f.corners[(s + 1) % 3])
                out_edges[eid] = Edge(eid, ends, bd)
        else:
            faces, out_edges = _corners_from_gluing(data)
        positions = {}
        for c, p in data.get("positions", {}).items():
            positions[_key_from_str(c, faces)] = tuple(Fraction(x) for x in p)
        surf = cls(out_edges, faces, positions, data.get("name", ""))
        surf.check()
        return surf


def _key(c):
    return tuple(c) if isinstance(c, list) else c


def _key_from_str(c: str, faces):
    for f in faces:
        for x in f.corners:
            if str(x) == c:
                return x
    try:
        return int(c)
    except ValueError:
        return c


def _corners_from_gluing(data: dict):
    """Derive puncture labels from the gluing (union-find on face corners)."""
    faces_in = data["faces"]
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in faces_in:
        for s in range(3):
            find((f["id"], s))
    for fa, sa, fb, sb in data.get("gluing", []):
        # slot sa runs c_sa -> c_sa+1 and is glued reversed to slot sb
        parent[find((fa, sa))] = find((fb, (sb + 1) % 3))
        parent[find((fa, (sa + 1) % 3))] = find((fb, sb))
    labels = {}
    for f in faces_in:
        for s in range(3):
            r = find((f["id"], s))
            labels.setdefault(r, f"p{len(labels)}")
    faces = tuple(Face(f["id"], tuple(labels[find((f["id"], s))] for s in range(3)),
                       tuple(f["sides"])) for f in faces_in)
    edges = {}
    for e in data["edges"]:
        f, s = next((f, s) for f in faces for s in range(3) if f.sides[s] == e["id"])
        edges[e["id"]] = Edge(e["id"], (f.corners[s], f.corners[(s + 1) % 3]), e["boundary"])
    return faces, edges


# ---------------------------------------------------------------------------
# polygons

P4_SIDE_NAMES = {(0, 1): "e2", (1, 2): "e5", (2, 3): "e4", (3, 0): "e3"}
P4_DIAGONAL_NAMES = {(1, 3): "e1", (0, 2): "e1p"}


def _polygon_positions(k: int) -> dict:
    if k == 3:
        pts = [(0, 0), (1, 0), (0, 1)]
    elif k == 4:
        pts = [(0, 0), (1, 0), (1, 1), (0, 1)]
    else:
        # points on a parabola are in convex position, listed counterclockwise
        pts = [(i, i * i) for i in range(k)]
    return {i: (Fraction(x), Fraction(y)) for i, (x, y) in enumerate(pts)}


def side_name(k: int, a: int, b: int) -> str:
    if k == 4 and (a, b) in P4_SIDE_NAMES:
        return P4_SIDE_NAMES[(a, b)]
    return f"s{a}"


def diagonal_name(k: int, a: int, b: int) -> str:
    a, b = min(a, b), max(a, b)
    if k == 4:
        return P4_DIAGONAL_NAMES[(a, b)]
    return f"d{a}_{b}"


def build_polygon(k: int) -> TriSurface:
    """The polygon P_k: corners 0..k-1 counterclockwise, boundary sides only.

    For k = 4 the corners are bottom-left, bottom-right, top-right,
    top-left and the sides carry the names e2 (bottom), e5 (right),
    e4 (top), e3 (left).
    """
    if k < 3:
        raise PolygonTooSmall(f"P_{k} needs at least 3 corners")
    edges = {}
    for a in range(k):
        b = (a + 1) % k
        name = side_name(k, a, b)
        edges[name] = Edge(name, (a, b), True)
    return TriSurface(edges, (), _polygon_positions(k), f"P{k}")


def polygon_size(s: TriSurface) -> int:
    return len(s.positions)


def _crosses(d1, d2) -> bool:
    a, b = sorted(d1)
    c, d = sorted(d2)
    return (a < c < b < d) or (c < a < d < b)


def _face_id(a, b, c) -> str:
    return "t" + "-".join(str(x) for x in sorted((a, b, c)))


def triangulate_polygon(s: TriSurface, diagonals: Sequence) -> TriSurface:
    k = polygon_size(s)
    diags = []
    for d in diagonals:
        a, b = sorted(int(x) for x in d)
        if not (0 <= a < b < k) or b - a in (1, k - 1):
            raise NotATriangulation(f"{d} is not a diagonal of P_{k}")
        if (a, b) in diags:
            raise NotATriangulation(f"repeated diagonal {d}")
        diags.append((a, b))
    for d1, d2 in itertools.combinations(diags, 2):
        if _crosses(d1, d2):
            raise NotATriangulation(f"diagonals {d1} and {d2} cross")
    if len(diags) != k - 3:
        raise NotATriangulation(f"P_{k} needs {k - 3} diagonals, got {len(diags)}")

    edges = {e.id: e for e in s.edges.values() if e.boundary}
    chord = {}
    for a in range(k):
        chord[frozenset((a, (a + 1) % k))] = side_name(k, a, (a + 1) % k)
    for a, b in diags:
        name = diagonal_name(k, a, b)
        edges[name] = Edge(name, (a, b), False)
        chord[frozenset((a, b))] = name
    faces = []
    for a, b, c in itertools.combinations(range(k), 3):
        if all(frozenset(p) in chord for p in ((a, b), (b, c), (a, c))):
            cw = (a, c, b)  # a < b < c are counterclockwise
            sides = tuple(chord[frozenset((cw[i], cw[(i + 1) % 3]))] for i in range(3))
            faces.append(Face(_face_id(a, b, c), cw, sides))
    surf = TriSurface(edges, tuple(faces), dict(s.positions), s.name)
    surf.check()
    return surf


def polygon_triangulations(k: int) -> list:
    """All triangulations of P_k as sorted diagonal tuples (brute force)."""
    all_d = [(a, b) for a, b in itertools.combinations(range(k), 2) if b - a not in (1, k - 1)]
    out = []
    for combo in itertools.combinations(all_d, k - 3):
        if not any(_crosses(x, y) for x, y in itertools.combinations(combo, 2)):
            out.append(tuple(sorted(combo)))
    return out


def diagonals_of(s: TriSurface) -> tuple:
    return tuple(sorted(tuple(sorted(e.ends)) for e in s.internal_edges))


def P4(which: str = "lambda") -> TriSurface:
    """The two triangulations of the square: lambda has the diagonal
    bottom-right/top-left, lambda' the diagonal bottom-left/top-right."""
    diag = {"lambda": (1, 3), "lambda'": (0, 2), "lambdap": (0, 2)}[which]
    return triangulate_polygon(build_polygon(4), [diag])


# ---------------------------------------------------------------------------
# flips


def _quad(s: TriSurface, edge_id: str):
    e = s.edges.get(edge_id)
    if e is None or e.boundary:
        raise FlipNotAllowed(f"{edge_id} is not an internal edge")
    inc = s.faces_of(edge_id)
    if len(inc) != 2 or inc[0][0].id == inc[1][0].id:
        raise FlipNotAllowed(f"{edge_id} does not border two distinct faces")
    (f1, s1), (f2, s2) = inc
    p, q, r = f1.corners[s1], f1.corners[(s1 + 1) % 3], f1.corners[(s1 + 2) % 3]
    t = f2.corners[(s2 + 2) % 3]
    side_qr, side_rp = f1.sides[(s1 + 1) % 3], f1.sides[(s1 + 2) % 3]
    side_pt, side_tq = f2.sides[(s2 + 1) % 3], f2.sides[(s2 + 2) % 3]
    if len({side_qr, side_rp, side_pt, side_tq}) < 4 or r == t:
        raise FlipNotAllowed(f"flipping {edge_id} would create a self-folded triangle")
    return f1, f2, (p, q, r, t), (side_qr, side_rp, side_pt, side_tq)


def flip(s: TriSurface, edge_id: str) -> TriSurface:
    """Replace ``edge_id`` by the other diagonal of its quadrilateral."""
    f1, f2, (p, q, r, t), (side_qr, side_rp, side_pt, side_tq) = _quad(s, edge_id)
    k = polygon_size(s)
    if k and all(isinstance(x, int) for x in (r, t)):
        new_id = diagonal_name(k, r, t)
    else:
        new_id = f"{edge_id}*"
    edges = {eid: e for eid, e in s.edges.items() if eid != edge_id}
    ends = (r, t)
    if all(isinstance(x, int) for x in ends):
        ends = tuple(sorted(ends))  # same reference direction as a fresh triangulation
    edges[new_id] = Edge(new_id, ends, False)
    fa = _canonical(Face(_face_id(r, p, t) if k else f1.id + "*", (r, p, t), (side_rp, side_pt, new_id)))
    fb = _canonical(Face(_face_id(t, q, r) if k else f2.id + "*", (t, q, r), (side_tq, side_qr, new_id)))
    faces = tuple(f for f in s.faces if f.id not in (f1.id, f2.id)) + (fa, fb)
    out = TriSurface(edges, faces, dict(s.positions), s.name)
    out.check()
    return out


def _canonical(f: Face) -> Face:
    """Rotate integer-labelled corners so the smallest comes first (keeps
    face-interior vertex keys stable around flip cycles)."""
    if not all(isinstance(c, int) for c in f.corners):
        return f
    r = f.corners.index(min(f.corners))
    return Face(f.id, f.corners[r:] + f.corners[:r], f.sides[r:] + f.sides[:r])


def flipped_edge_id(s: TriSurface, edge_id: str) -> str:
    _, _, (p, q, r, t), _ = _quad(s, edge_id)
    k = polygon_size(s)
    if k and all(isinstance(x, int) for x in (r, t)):
        return diagonal_name(k, r, t)
    return f"{edge_id}*"


# ---------------------------------------------------------------------------
# lattice


def face_points(n: int):
    """Barycentric points of a face minus its three corners."""
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            if max(i, j, k) == n:
                continue
            yield (i, j, k)


def _side_position(ijk, n):
    """(slot, distance from c_slot) for a point on a side, else None."""
    i, j, k = ijk
    if k == 0:
        return 0, j
    if i == 0:
        return 1, k
    if j == 0:
        return 2, i
    return None


@dataclass(frozen=True, eq=False)
class Lattice:
    """Small vertices V of a triangulated surface together with Q and H."""

    surface: TriSurface
    n: int
    vertices: tuple
    face_maps: dict
    seed: Seed
    H: np.ndarray
    positions: dict

    def index(self, v) -> int:
        return self.seed.index(v)

    def __len__(self):
        return len(self.vertices)

    def edge_vertices(self, edge_id: str) -> list:
        """Edge vertices in reference order."""
        return [("e", edge_id, d) for d in range(1, self.n)]

    def face_vertices(self, fid: str) -> dict:
        return self.face_maps[fid]

    def vector(self, mapping: dict) -> tuple:
        """Dense exponent tuple from a sparse {vertex: int} map."""
        out = [0] * len(self.vertices)
        for v, c in mapping.items():
            out[self.index(v)] += int(c)
        return tuple(out)

    def sparse(self, vec: Sequence[int]) -> dict:
        return {v: int(c) for v, c in zip(self.vertices, vec) if c}

    def on_boundary_edge(self, v) -> str | None:
        if v[0] == "e" and self.surface.edges[v[1]].boundary:
            return v[1]
        return None


def _vertex_key(surf: TriSurface, f: Face, ijk, n):
    pos = _side_position(ijk, n)
    if pos is None:
        return ("f", f.id) + tuple(ijk)
    slot, d = pos
    eid = f.sides[slot]
    if not surf.side_agrees(f, slot):
        d = n - d
    return ("e", eid, d)


def build_lattice(s: TriSurface, n: int) -> Lattice:
    if n < 2:
        raise ValueError("n must be at least 2")
    if not s.faces:
        raise NotATriangulation("surface has no faces")
    face_maps: dict = {}
    order: list = []
    seen = set()
    for f in s.faces:
        fm = {}
        for ijk in face_points(n):
            key = _vertex_key(s, f, ijk, n)
            fm[ijk] = key
            if key not in seen:
                seen.add(key)
                order.append(key)
        face_maps[f.id] = fm
    order.sort(key=_sort_key)
    index = {v: i for i, v in enumerate(order)}
    N = len(order)
    twoQ = np.zeros((N, N), dtype=np.int64)
    for f in s.faces:
        fm = face_maps[f.id]
        for ijk, v in fm.items():
            for step in ARROW_STEPS:
                w_ijk = tuple(a + b for a, b in zip(ijk, step))
                if w_ijk not in fm:
                    continue
                w = fm[w_ijk]
                # boundary small edge of the face: both ends on the side the step runs along
                on_side = _side_position(ijk, n) is not None and _same_side(ijk, w_ijk)
                weight = 1 if on_side else 2
                a, b = index[v], index[w]
                twoQ[a, b] += weight
                twoQ[b, a] -= weight
    mutable = frozenset(v for v in order if v[0] == "f" or not s.edges[v[1]].boundary)
    seed = Seed(tuple(order), mutable, twoQ)

    H = twoQ.copy()
    for a, v in enumerate(order):
        for b, w in enumerate(order):
            ev = v[0] == "e" and s.edges[v[1]].boundary
            if ev and w[0] == "e" and w[1] == v[1]:
                if a == b:
                    H[a, b] = -2
                elif twoQ[a, b] > 0:
                    H[a, b] = 2
                else:
                    H[a, b] = 0
    if np.any(H % 2):
        raise AssertionError("H has half-integer entries")
    H = H // 2

    positions = {}
    if s.positions:
        for f in s.faces:
            P = [s.positions[c] for c in f.corners]
            for ijk, v in face_maps[f.id].items():
                positions.setdefault(v, tuple(
                    sum(Fraction(w, n) * P[t][ax] for t, w in enumerate(ijk)) for ax in range(2)))
    return Lattice(s, n, tuple(order), face_maps, seed, H, positions)


def _same_side(a, b) -> bool:
    for ax in range(3):
        if a[ax] == 0 and b[ax] == 0:
            return True
    return False


def _sort_key(v):
    return tuple((0, x) if isinstance(x, int) else (1, str(x)) for x in v)


def face_vertex_count(n: int) -> int:
    return 3 * (n - 1) + (n - 1) * (n - 2) // 2


# ---------------------------------------------------------------------------
# flip geometry and mutation stages


def quad_coordinates(lat: Lattice, edge_id: str) -> dict:
    """Planar coordinates (x, y) in the diamond picture of the flip.

    The flipped edge is the vertical segment from (0, n) to (0, -n); the
    new diagonal would be horizontal.  Returned for every vertex of the
    two faces along ``edge_id``.
    """
    s = lat.surface
    f1, f2, (p, q, r, t), _ = _quad(s, edge_id)
    n = lat.n
    out = {}
    for f in (f1, f2):
        for ijk, v in lat.face_maps[f.id].items():
            w = dict(zip(f.corners, ijk))
            x = -w.get(r, 0) + w.get(t, 0)
            y = w.get(p, 0) - w.get(q, 0)
            out[v] = (x, y)
    return out


def flip_mutation_sequence(lat: Lattice, edge_id: str) -> list:
    """Stages V^(0), ..., V^(n-2) of the flip mutation sequence.

    Stage i holds the vertices with |x| <= i, |x| = i (mod 2),
    |y| <= n-2-i, |y| = n-2-i (mod 2) in the diamond picture, sorted by (x, y).
    Stage 0 therefore lies on the flipped edge itself.
    """
    n = lat.n
    coords = quad_coordinates(lat, edge_id)
    inner = {v: c for v, c in coords.items() if abs(c[0]) + abs(c[1]) < n}
    stages = []
    for i in range(n - 1):
        h = n - 2 - i
        stage = [v for v, (x, y) in inner.items()
                 if abs(x) <= i and (abs(x) - i) % 2 == 0 and abs(y) <= h and (abs(y) - h) % 2 == 0]
        stage.sort(key=lambda v: inner[v])
        stages.append(stage)
    return stages


def flip_identification(lat: Lattice, lat2: Lattice, edge_id: str) -> dict:
    """Map vertices of the flipped lattice ``lat2`` to vertices of ``lat``.

    Vertices away from the quadrilateral keep their keys; inside the
    quadrilateral both lattices occupy the same points of the diamond.
    """
    s = lat.surface
    f1, f2, (p, q, r, t), _ = _quad(s, edge_id)
    new_edge = flipped_edge_id(s, edge_id)
    n = lat.n
    here = {c: v for v, c in quad_coordinates(lat, edge_id).items()}
    quad_faces = set()
    for fa, _ in lat2.surface.faces_of(new_edge):
        quad_faces.add(fa.id)
    mapping = {}
    for v in lat2.vertices:
        mapping[v] = v
    for fid in quad_faces:
        f = lat2.surface.face(fid)
        for ijk, v in lat2.face_maps[fid].items():
            w = dict(zip(f.corners, ijk))
            x = -w.get(r, 0) + w.get(t, 0)
            y = w.get(p, 0) - w.get(q, 0)
            if abs(x) + abs(y) < n:
                mapping[v] = here[(x, y)]
    if sorted(mapping.values(), key=_sort_key) != sorted(lat.vertices, key=_sort_key):
        raise AssertionError("flip identification is not a bijection")
    return mapping


# ---------------------------------------------------------------------------
# cutting


@dataclass(frozen=True)
class CutResult:
    lattice: Lattice
    projection: dict  # cut vertex -> original vertex
    edge_copies: tuple  # (e', e'')


def cut_surface(s: TriSurface, edge_id: str) -> tuple:
    e = s.edges.get(edge_id)
    if e is None or e.boundary:
        raise CannotCutBoundary(f"{edge_id} is not an internal edge")
    (f1, s1), (f2, s2) = s.faces_of(edge_id)
    e1, e2 = f"{edge_id}'", f'{edge_id}"'
    edges = {eid: x for eid, x in s.edges.items() if eid != edge_id}
    edges[e1] = Edge(e1, e.ends, True)
    edges[e2] = Edge(e2, e.ends, True)
    faces = []
    for f in s.faces:
        if f.id == f1.id:
            f = Face(f.id, f.corners, tuple(e1 if x == edge_id else x for x in f.sides))
        elif f.id == f2.id:
            f = Face(f.id, f.corners, tuple(e2 if x == edge_id else x for x in f.sides))
        faces.append(f)
    cut = TriSurface(edges, tuple(faces), dict(s.positions), s.name + f"|cut {edge_id}")
    cut.check()
    return cut, (e1, e2)


def cut_edge(lat: Lattice, edge_id: str) -> CutResult:
    cut, copies = cut_surface(lat.surface, edge_id)
    clat = build_lattice(cut, lat.n)
    proj = {}
    for v in clat.vertices:
        if v[0] == "e" and v[1] in copies:
            proj[v] = ("e", edge_id, v[2])
        else:
            proj[v] = v
    return CutResult(clat, proj, copies)


def surface_from_json_text(text: str) -> TriSurface:
    return TriSurface.from_json(json.loads(text))
