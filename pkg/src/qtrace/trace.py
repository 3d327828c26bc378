"""Quantum traces of corner arcs as sums over network paths, and the
splitting map that cuts a surface along an internal edge."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coeff import ONE
from .network import corner_network, enumerate_paths, left_exponent
from .surface import CannotCutBoundary, Lattice, cut_edge, polygon_size, side_name
from .torus import TorusElement

# named corners of the square: bottom-left, bottom-right, top-right, top-left
ARC_CORNERS = {"a": 0, "b": 1, "c": 2, "d": 3}


class UnsupportedArc(ValueError):
    pass


@dataclass(frozen=True)
class CornerArc:
    """Arc turning counterclockwise around ``corner``.

    It starts on ``source_edge`` with state ``i`` and ends on ``sink_edge``
    with state ``j``.
    """

    corner: object
    source_edge: str
    sink_edge: str
    i: int
    j: int
    name: str = ""


def polygon_arc(lat: Lattice, corner, i: int, j: int, name: str = "") -> CornerArc:
    """Corner arc of a polygon: from side (c, c+1) to side (c-1, c)."""
    k = polygon_size(lat.surface)
    if not k:
        raise UnsupportedArc("corner arcs need a polygon with planar positions")
    if isinstance(corner, str):
        if k != 4 or corner not in ARC_CORNERS:
            raise UnsupportedArc(f"unknown arc name {corner!r}")
        name = name or corner
        corner = ARC_CORNERS[corner]
    if not (0 <= corner < k):
        raise UnsupportedArc(f"corner {corner} is not a corner of P_{k}")
    src = side_name(k, corner, (corner + 1) % k)
    snk = side_name(k, (corner - 1) % k, corner)
    return CornerArc(corner, src, snk, i, j, name or str(corner))


def _network(lat: Lattice, arc: CornerArc):
    cache = lat.__dict__.setdefault("_net_cache", {})
    key = (arc.corner, arc.source_edge, arc.sink_edge)
    if key not in cache:
        surf = lat.surface
        for eid in (arc.source_edge, arc.sink_edge):
            if eid not in surf.edges or not surf.edges[eid].boundary:
                raise UnsupportedArc(f"{eid} is not a boundary edge")
        net = corner_network(lat, arc.corner, arc.source_edge, arc.sink_edge)
        diag = [left_exponent(net, enumerate_paths(net, t, t)[0], lat, arc.corner)
                for t in range(1, lat.n + 1)]
        K = tuple(sum(col) for col in zip(*diag))
        cache[key] = (net, K)
    return cache[key]


def diagonal_exponent(lat: Lattice, arc: CornerArc) -> tuple:
    """Sum of the left exponents of the paths alpha_t -> beta_t."""
    return _network(lat, arc)[1]


def path_exponents(lat: Lattice, arc: CornerArc) -> list:
    """n k(p) + K for every path p from alpha_i to beta_j."""
    net, K = _network(lat, arc)
    n = lat.n
    out = []
    for p in enumerate_paths(net, arc.i, arc.j):
        kp = left_exponent(net, p, lat, arc.corner)
        out.append(tuple(n * a + b for a, b in zip(kp, K)))
    return out


def corner_arc_trace(lat: Lattice, arc: CornerArc) -> TorusElement:
    terms: dict = {}
    for t in path_exponents(lat, arc):
        terms[t] = terms[t] + ONE if t in terms else ONE
    return TorusElement(lat.seed, terms)


# ---------------------------------------------------------------------------
# splitting


def split_element(A: TorusElement, lat: Lattice, edge_id: str, cut=None) -> TorusElement:
    """Push a torus element to the cut surface by duplicating exponents on the edge."""
    if cut is None:
        cut = cut_edge(lat, edge_id)
    clat = cut.lattice
    src = [lat.index(cut.projection[w]) for w in clat.vertices]
    terms = {}
    for t, c in A.items():
        terms[tuple(t[i] for i in src)] = c
    return TorusElement(clat.seed, terms)


@dataclass(frozen=True)
class SplitCheck:
    ok: bool
    lhs: TorusElement
    rhs: TorusElement

    def to_json(self) -> dict:
        return {"ok": self.ok, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


def check_split_compatibility(lat: Lattice, i: int, j: int, corner=0,
                              edge_id: str | None = None) -> SplitCheck:
    """Compare the split trace of the corner arc with the sum over middle states.

    ``lat`` is a square triangulated so that the arc at ``corner`` crosses
    the diagonal ``edge_id``; the two triangles of the cut surface each
    carry one half of the arc.
    """
    surf = lat.surface
    if edge_id is None:
        (e,) = surf.internal_edges
        edge_id = e.id
    arc = polygon_arc(lat, corner, i, j)
    if corner not in surf.edges[edge_id].ends:
        raise UnsupportedArc("the arc does not cross the chosen diagonal")
    cut = cut_edge(lat, edge_id)
    clat = cut.lattice
    copy_src = _copy_in_face_of(clat, cut.edge_copies, arc.source_edge)
    copy_snk = _copy_in_face_of(clat, cut.edge_copies, arc.sink_edge)
    lhs = split_element(corner_arc_trace(lat, arc), lat, edge_id, cut)
    rhs = TorusElement.zero(clat.seed)
    for t in range(1, lat.n + 1):
        first = corner_arc_trace(clat, CornerArc(corner, arc.source_edge, copy_src, i, t))
        second = corner_arc_trace(clat, CornerArc(corner, copy_snk, arc.sink_edge, t, j))
        rhs = rhs + first * second
    return SplitCheck(lhs == rhs, lhs, rhs)


def _copy_in_face_of(clat: Lattice, copies, boundary_edge: str) -> str:
    surf = clat.surface
    (f, _), = surf.faces_of(boundary_edge)
    for c in copies:
        if any(g.id == f.id for g, _ in surf.faces_of(c)):
            return c
    raise CannotCutBoundary("edge copies are not adjacent to the arc's ends")
