"""Exact integer embeddings of pseudo-foldings and link-based obstructions.

The cube is [0, S]^3.  A cell on face f in layer l becomes a full S x S
square parallel to f at outward distance G*l, so squares over the same
face are parallel planes and squares over different faces live in
disjoint half-slabs.  Every glued polyomino edge becomes a connector: a
strip routed through the exterior quadrant of its cube edge.  Within one
quadrant a connector follows a rectangular contour at an integer depth
assigned by interval-containment rank of its chord, so nested chords get
smaller depths; with that rule two connectors intersect exactly when
their chords cross, which makes geometric disjointness equivalent to the
layer-map check.

The boundary of the folded state is traced as closed integer polylines:
each boundary edge of P contributes a segment along its square's side,
and each boundary vertex contributes a corridor around the corresponding
cube vertex at a globally unique radius, crossing the connectors of the
glued edges fanned around that vertex.  Linking numbers and Fox
3-colorings are then computed from exact projections along directions
(1, p, p^2).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .grid import (
    BoundaryCycle,
    Polyomino,
    boundary_components,
    N, E, S, W,
)
from .cube import ConsistentMapping, dir_face
from .layers import (
    PseudoFolding,
    check_self_intersections,
)


class HasViolations(Exception):
    pass


class DegenerateProjection(Exception):
    pass


# face -> (axis, plane coordinate as multiple of scale): 0 means the
# coordinate-0 plane, 1 the coordinate-S plane
_FACE_PLANE = {1: (2, 0), 6: (2, 1), 2: (0, 0), 5: (0, 1),
               4: (1, 0), 3: (1, 1)}

_CORNER_DIRS = {(0, 0): (N, W), (0, 1): (N, E), (1, 1): (S, E),
                (1, 0): (S, W)}

Point = tuple[int, int, int]
Box = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


@dataclass
class EmbeddedState:
    pf: PseudoFolding
    scale: int
    gap: int
    squares: dict  # cell -> Box
    connectors: dict  # (cell_a, cell_b) -> list[Box]
    depths: dict  # (cell_a, cell_b) -> int
    conflicts: list  # pairs of piece labels whose boxes overlap illegally
    chord_groups: dict = field(default_factory=dict, repr=False)

    @property
    def disjoint(self) -> bool:
        return not self.conflicts


def _plane_value(face: int, layer: int, scale: int, gap: int) -> int:
    axis, side = _FACE_PLANE[face]
    return -gap * layer if side == 0 else scale + gap * layer


def _outward(face: int, dist: int, scale: int) -> int:
    axis, side = _FACE_PLANE[face]
    return -dist if side == 0 else scale + dist


def _cube_vertex(m: ConsistentMapping, cell, corner, scale: int) -> Point:
    """corner is (dr, dc) in {0,1}^2 naming one of the cell's corners."""
    pl = m.placement(cell)
    d1, d2 = _CORNER_DIRS[corner]
    faces = (pl[0], dir_face(pl, d1), dir_face(pl, d2))
    coords: list[Optional[int]] = [None, None, None]
    for f in faces:
        axis, side = _FACE_PLANE[f]
        coords[axis] = side * scale
    if None in coords:
        raise AssertionError(f"degenerate corner {cell} {corner}")
    return tuple(coords)  # type: ignore[return-value]


@dataclass(frozen=True)
class _Chord:
    edge: tuple  # (cell_a, cell_b)
    terms: tuple  # ((face, layer), (face, layer)) aligned with edge
    lo: int
    hi: int


def _edge_chords(pf: PseudoFolding):
    """Chords grouped per cube edge with containment-rank depths."""
    p = pf.polyomino
    m = pf.mapping
    groups: dict[frozenset[int], list[_Chord]] = {}
    for a in p.sorted_cells():
        for d in (E, S):
            b = p.neighbor(a, d)
            if b is None or not p.is_glued(a, b):
                continue
            pa = m.placement(a)
            ce = frozenset({pa[0], dir_face(pa, d)})
            lo_f = min(ce)
            ta = (-pf.layers[a] if pa[0] == lo_f else pf.layers[a])
            fb = m.covered_face(b)
            tb = (-pf.layers[b] if fb == lo_f else pf.layers[b])
            groups.setdefault(ce, []).append(_Chord(
                (a, b), ((pa[0], pf.layers[a]), (fb, pf.layers[b])),
                min(ta, tb), max(ta, tb)))
    depths = {}
    for ce, chords in groups.items():
        ranked = sorted(chords, key=lambda c: (c.hi - c.lo, c.lo, c.hi))
        for i, c in enumerate(ranked, 1):
            depths[c.edge] = i
    return groups, depths


def _chord_path_2d(chord: _Chord, ce: frozenset[int], depth: int,
                   gap: int) -> list[tuple[int, int]]:
    """Path in quadrant coordinates (a, b): a = outward distance from the
    lower face's plane, b = from the higher face's plane.  Starts at the
    foot of chord.edge[0]'s terminal."""
    lo_f = min(ce)
    (fa, la), (fb, lb) = chord.terms
    d = depth

    def foot(f, l):
        return (gap * l, 0) if f == lo_f else (0, gap * l)

    a0, b0 = foot(fa, la)
    a1, b1 = foot(fb, lb)
    if fa == fb:  # half chord: rectangular detour on one side
        if fa == lo_f:
            return [(a0, 0), (a0, d), (a1, d), (a1, 0)]
        return [(0, b0), (d, b0), (d, b1), (0, b1)]
    # quarter chord: follow the depth-d contour around the corner
    if fa == lo_f:
        return [(a0, 0), (a0, d), (d, d), (d, b1), (0, b1)]
    return [(0, b0), (d, b0), (d, d), (a1, d), (a1, 0)]


def _chord_path_3d(ce: frozenset[int], path2d, u_axis: int, u_lo: int,
                   u_hi: int, scale: int) -> list[Box]:
    """Extrude the 2D quadrant path along the cube-edge axis."""
    lo_f, hi_f = sorted(ce)
    a_axis = _FACE_PLANE[lo_f][0]
    b_axis = _FACE_PLANE[hi_f][0]
    boxes = []
    for (a0, b0), (a1, b1) in zip(path2d, path2d[1:]):
        iv = [None, None, None]
        iv[u_axis] = (u_lo, u_hi)
        xa = sorted((_outward(lo_f, a0, scale), _outward(lo_f, a1, scale)))
        xb = sorted((_outward(hi_f, b0, scale), _outward(hi_f, b1, scale)))
        iv[a_axis] = tuple(xa)
        iv[b_axis] = tuple(xb)
        boxes.append(tuple(iv))
    return boxes


def _edge_axis(ce: frozenset[int]) -> int:
    lo_f, hi_f = sorted(ce)
    return 3 - _FACE_PLANE[lo_f][0] - _FACE_PLANE[hi_f][0]


def _square_box(m: ConsistentMapping, layers, cell, scale, gap) -> Box:
    f = m.covered_face(cell)
    axis, _ = _FACE_PLANE[f]
    h = _plane_value(f, layers[cell], scale, gap)
    iv = [(0, scale)] * 3
    iv[axis] = (h, h)
    return tuple(iv)


def _boxes_overlap(x: Box, y: Box) -> Optional[Box]:
    out = []
    for (a0, a1), (b0, b1) in zip(x, y):
        lo, hi = max(a0, b0), min(a1, b1)
        if lo > hi:
            return None
        out.append((lo, hi))
    return tuple(out)


def _box_dim(b: Box) -> int:
    return sum(1 for lo, hi in b if lo < hi)


def geometry_parameters(pf: PseudoFolding) -> tuple[int, int]:
    """(scale, gap) large enough for all offsets and corridors."""
    groups, _ = _edge_chords(pf)
    max_chords = max((len(v) for v in groups.values()), default=0)
    max_layer = max(pf.layers.values(), default=1)
    visits = sum(len(c.edges) for c in boundary_components(pf.polyomino))
    gap = max_chords + 2
    scale = max(4 * gap * (max_layer + 2), 4 * (visits + 2), 16)
    return scale, gap


def embed(pf: PseudoFolding, force: bool = False) -> EmbeddedState:
    if not force and check_self_intersections(pf):
        raise HasViolations("pseudo-folding has self-intersections")
    scale, gap = geometry_parameters(pf)
    m = pf.mapping
    squares = {c: _square_box(m, pf.layers, c, scale, gap)
               for c in pf.polyomino.sorted_cells()}
    groups, depths = _edge_chords(pf)
    connectors = {}
    for ce, chords in groups.items():
        u_axis = _edge_axis(ce)
        for ch in chords:
            path = _chord_path_2d(ch, ce, depths[ch.edge], gap)
            connectors[ch.edge] = _chord_path_3d(
                ce, path, u_axis, 1, scale - 1, scale)

    conflicts = []
    pieces = [(("square", c), b) for c, b in squares.items()]
    for e, boxes in connectors.items():
        pieces += [(("conn", e, i), b) for i, b in enumerate(boxes)]
    for (la, ba), (lb, bb) in itertools.combinations(pieces, 2):
        ov = _boxes_overlap(ba, bb)
        if ov is None:
            continue
        if _allowed_contact(la, lb) and _box_dim(ov) < 2:
            continue
        conflicts.append((la, lb))
    return EmbeddedState(pf, scale, gap, squares, connectors, depths,
                         conflicts, groups)


def _allowed_contact(la, lb) -> bool:
    if la[0] == "conn" and lb[0] == "conn":
        return la[1] == lb[1] and abs(la[2] - lb[2]) == 1
    if la[0] == "conn":
        la, lb = lb, la
    if la[0] == "square" and lb[0] == "conn":
        return la[1] in lb[1]
    return False


# ------------------------------------------------------------ boundary link

@dataclass
class BoundaryLink:
    components: list[list[Point]]  # closed polylines; last point != first

    def to_text(self) -> str:
        blocks = []
        for comp in self.components:
            blocks.append("\n".join(f"{x} {y} {z}" for x, y, z in comp))
        return "\n\n".join(blocks) + "\n"

    @staticmethod
    def from_text(text: str) -> "BoundaryLink":
        comps = []
        for block in text.strip().split("\n\n"):
            comps.append([tuple(int(t) for t in ln.split())
                          for ln in block.splitlines()])
        return BoundaryLink(comps)


def _side_point(m, layers, cell, side, vertex, delta, scale, gap) -> Point:
    """Point on cell's square, on the side line toward cube edge
    E(face, dir_face(side)), at distance delta from the corner mapped
    from the given lattice vertex."""
    pl = m.placement(cell)
    f = pl[0]
    g = dir_face(pl, side)
    corner = (vertex[0] - cell[0], vertex[1] - cell[1])
    v3 = list(_cube_vertex(m, cell, corner, scale))
    fa, _ = _FACE_PLANE[f]
    ga, _ = _FACE_PLANE[g]
    ua = 3 - fa - ga
    v3[fa] = _plane_value(f, layers[cell], scale, gap)
    v3[ua] += delta if v3[ua] == 0 else -delta
    return tuple(v3)


def _corner_diag_point(m, layers, cell, vertex, delta, scale, gap) -> Point:
    pl = m.placement(cell)
    f = pl[0]
    corner = (vertex[0] - cell[0], vertex[1] - cell[1])
    v3 = list(_cube_vertex(m, cell, corner, scale))
    fa, _ = _FACE_PLANE[f]
    for axis in range(3):
        if axis == fa:
            v3[axis] = _plane_value(f, layers[cell], scale, gap)
        else:
            v3[axis] += delta if v3[axis] == 0 else -delta
    return tuple(v3)


# lattice edges around a vertex v=(r,c) in clockwise order; each entry is
# (edge name, quadrant crossed when rotating clockwise past it).  The
# quadrants are the four cells incident to v.
def _quadrants(v):
    r, c = v
    return {"NW": (r - 1, c - 1), "NE": (r - 1, c), "SE": (r, c),
            "SW": (r, c - 1)}

# for each lattice edge at v: the two incident quadrants and, per
# quadrant, which side of that cell the lattice edge is
_EDGE_INFO = {
    "up": (("NW", E), ("NE", W)),
    "right": (("NE", S), ("SE", N)),
    "down": (("SE", W), ("SW", E)),
    "left": (("SW", N), ("NW", S)),
}
_CW = ["up", "right", "down", "left"]
# quadrant lying between consecutive clockwise lattice edges
_BETWEEN_CW = {("up", "right"): "NE", ("right", "down"): "SE",
               ("down", "left"): "SW", ("left", "up"): "NW"}


def _fan(p: Polyomino, v, arrive_cell, arrive_side, depart_cell,
         depart_side):
    """Cells and glued edges swept between two boundary edges at v.

    Returns (cells, crossed) where cells = [c0..ck] starts at arrive_cell
    and ends at depart_cell and crossed[i] = (side out of cells[i],
    side into cells[i+1]).
    """
    quads = _quadrants(v)
    start = None
    for name, info in _EDGE_INFO.items():
        for qname, side in info:
            if quads[qname] == arrive_cell and side == arrive_side:
                start = (name, qname)
    if start is None:
        raise AssertionError("arriving edge not incident to vertex")
    edge_name, qname = start
    cells = [arrive_cell]
    crossed = []
    for _ in range(5):
        # rotate to the next lattice edge with the current quadrant
        # between it and the previous one
        for direction in (1, -1):
            i = _CW.index(edge_name)
            nxt = _CW[(i + direction) % 4]
            pair = (edge_name, nxt) if direction == 1 else (nxt, edge_name)
            if _BETWEEN_CW[pair] == qname:
                edge_name = nxt
                rotation = direction
                break
        else:
            raise AssertionError("no rotation step")
        info = dict(_EDGE_INFO[edge_name])
        here_side = info[qname]
        (qa, sa), (qb, sb) = _EDGE_INFO[edge_name]
        other_q, other_s = (qb, sb) if qa == qname else (qa, sa)
        other_cell = quads[other_q]
        cell = quads[qname]
        if cell == depart_cell and here_side == depart_side:
            return cells, crossed
        if other_cell in p.cells and p.is_glued(cell, other_cell):
            crossed.append((here_side, other_s))
            cells.append(other_cell)
            qname = other_q
        else:
            raise AssertionError(
                f"fan at {v} hit unexpected boundary {cell}/{here_side}")
    raise AssertionError(f"fan at {v} did not close")


def boundary_link(es: EmbeddedState) -> BoundaryLink:
    pf = es.pf
    p = pf.polyomino
    m = pf.mapping
    scale, gap = es.scale, es.gap
    cycles = boundary_components(p)
    delta = 0
    comps = []
    for cyc in cycles:
        edges = list(cyc.edges)
        verts = list(cyc.vertices[:-1])
        n = len(edges)
        # visit j sits at the end vertex of edge j
        deltas = []
        for _ in range(n):
            delta += 1
            deltas.append(delta)
        pts: list[Point] = []

        def emit(q):
            if not pts or pts[-1] != q:
                pts.append(q)

        for j in range(n):
            cell, side = edges[j]
            v_start = verts[j]
            v_end = verts[(j + 1) % n]
            d_start = deltas[(j - 1) % n]
            d_end = deltas[j]
            emit(_side_point(m, pf.layers, cell, side, v_start, d_start,
                             scale, gap))
            emit(_side_point(m, pf.layers, cell, side, v_end, d_end,
                             scale, gap))
            # transition at v_end toward the next boundary edge
            ncell, nside = edges[(j + 1) % n]
            cells, crossed = _fan(p, v_end, cell, side, ncell, nside)
            cur_side = side
            for i, (out_side, in_side) in enumerate(crossed):
                c_here, c_next = cells[i], cells[i + 1]
                if out_side != cur_side:
                    emit(_corner_diag_point(m, pf.layers, c_here, v_end,
                                            d_end, scale, gap))
                    emit(_side_point(m, pf.layers, c_here, out_side, v_end,
                                     d_end, scale, gap))
                for q in _rail(es, c_here, c_next, out_side, v_end, d_end):
                    emit(q)
                cur_side = in_side
            last = cells[-1]
            if cur_side != nside:
                emit(_corner_diag_point(m, pf.layers, last, v_end, d_end,
                                        scale, gap))
                emit(_side_point(m, pf.layers, last, nside, v_end, d_end,
                                 scale, gap))
        if pts[0] == pts[-1]:
            pts.pop()
        comps.append(pts)
    return BoundaryLink(comps)


def _rail(es: EmbeddedState, c_here, c_next, out_side, vertex,
          delta) -> list[Point]:
    """The connector crossing between c_here and c_next, traversed on the
    cross-section at offset delta from the cube vertex."""
    pf = es.pf
    m = pf.mapping
    scale, gap = es.scale, es.gap
    groups, depths = es.chord_groups, es.depths
    key = (c_here, c_next) if (c_here, c_next) in depths else (c_next, c_here)
    pl = m.placement(c_here)
    ce = frozenset({pl[0], dir_face(pl, out_side)})
    chord = next(ch for ch in groups[ce] if ch.edge == key)
    path2d = _chord_path_2d(chord, ce, depths[key], gap)
    if key[0] != c_here:
        path2d = path2d[::-1]
    lo_f, hi_f = sorted(ce)
    a_axis = _FACE_PLANE[lo_f][0]
    b_axis = _FACE_PLANE[hi_f][0]
    u_axis = 3 - a_axis - b_axis
    corner = (vertex[0] - c_here[0], vertex[1] - c_here[1])
    v3 = _cube_vertex(m, c_here, corner, scale)
    u = v3[u_axis] + (delta if v3[u_axis] == 0 else -delta)
    out = []
    for a, b in path2d:
        q = [0, 0, 0]
        q[a_axis] = _outward(lo_f, a, scale)
        q[b_axis] = _outward(hi_f, b, scale)
        q[u_axis] = u
        out.append(tuple(q))
    return out


# ------------------------------------------------------- link invariants

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def _proj_coords(v: Point, p: int) -> tuple[int, int, int]:
    """Scaled plane coordinates (alpha, beta) and depth gamma for the
    projection along d = (1, p, p*p), with a positively oriented basis."""
    d = (1, p, p * p)
    e1 = (-p, 1, 0)
    e2 = (-p * p, 0, 1)

    def det(a, b, c):
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))

    return det(v, e2, d), det(e1, v, d), det(e1, e2, v)


def _segments(loop: list[Point]):
    return [(loop[i], loop[(i + 1) % len(loop)]) for i in range(len(loop))]


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _crossings(segs_a, segs_b, p, same_loop: bool):
    """Strict transverse crossings between two projected segment lists.

    Yields (ia, ib, t_a, t_b, sign, a_over).  Raises DegenerateProjection
    on any touching, collinear or depth-tied configuration.
    """
    proj_a = [(_proj_coords(s, p), _proj_coords(t, p)) for s, t in segs_a]
    proj_b = proj_a if same_loop else [
        (_proj_coords(s, p), _proj_coords(t, p)) for s, t in segs_b]
    na = len(segs_a)
    out = []
    for ia in range(na):
        (A0, A1) = proj_a[ia]
        rb = range(ia + 2, na) if same_loop else range(len(segs_b))
        for ib in rb:
            if same_loop and ia == 0 and ib == na - 1:
                continue
            (B0, B1) = proj_b[ib]
            a0, a1 = (A0[0], A0[1]), (A1[0], A1[1])
            b0, b1 = (B0[0], B0[1]), (B1[0], B1[1])
            d1 = _cross2(a0, a1, b0)
            d2 = _cross2(a0, a1, b1)
            d3 = _cross2(b0, b1, a0)
            d4 = _cross2(b0, b1, a1)
            if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
                for dv, pt, s0, s1 in ((d1, b0, a0, a1), (d2, b1, a0, a1),
                                       (d3, a0, b0, b1), (d4, a1, b0, b1)):
                    if dv == 0 and _on_segment(pt, s0, s1):
                        raise DegenerateProjection(f"touching at p={p}")
                continue
            if 0 in (d1, d2, d3, d4):
                raise DegenerateProjection(f"non-transverse at p={p}")
            # crossing parameters: t_a = d3/(d3-d4), t_b = d1/(d1-d2)
            ta = Fraction(d3, d3 - d4)
            tb = Fraction(d1, d1 - d2)
            ga = A0[2] + ta * (A1[2] - A0[2])
            gb = B0[2] + tb * (B1[2] - B0[2])
            if ga == gb:
                raise DegenerateProjection(f"depth tie at p={p}")
            dira = (a1[0] - a0[0], a1[1] - a0[1])
            dirb = (b1[0] - b0[0], b1[1] - b0[1])
            sigma = 1 if dira[0] * dirb[1] - dira[1] * dirb[0] > 0 else -1
            out.append((ia, ib, ta, tb, sigma, ga > gb))
    return out


def _on_segment(pt, s0, s1):
    """pt is known collinear with segment (s0, s1); is it within it?"""
    for k in range(2):
        if not (min(s0[k], s1[k]) <= pt[k] <= max(s0[k], s1[k])):
            return False
    return True


def linking_number(link: BoundaryLink, i: int, j: int,
                   samples: int = 3) -> int:
    """Half the signed crossing count between components i and j,
    verified over several projection directions."""
    if i == j:
        raise ValueError("need two distinct components")
    segs_a = _segments(link.components[i])
    segs_b = _segments(link.components[j])
    values = []
    for p in _PRIMES:
        try:
            cr = _crossings(segs_a, segs_b, p, same_loop=False)
        except DegenerateProjection:
            continue
        total = 0
        for ia, ib, ta, tb, sigma, a_over in cr:
            total += sigma if a_over else -sigma
        if total % 2:
            raise DegenerateProjection("odd crossing sum")
        values.append(total // 2)
        if len(values) >= samples:
            break
    if len(values) < samples:
        raise DegenerateProjection("not enough generic directions")
    if len(set(values)) != 1:
        raise DegenerateProjection(f"projection-dependent values {values}")
    return values[0]


# ------------------------------------------------------------- Gauss code

@dataclass(frozen=True)
class GaussCode:
    # cyclic sequence of (crossing id, is_over, sign)
    entries: tuple[tuple[int, bool, int], ...]

    def to_text(self) -> str:
        return " ".join(
            f"{'O' if over else 'U'}{cid}{'+' if s > 0 else '-'}"
            for cid, over, s in self.entries)


def gauss_code(loop: list[Point]) -> GaussCode:
    segs = _segments(loop)
    for p in _PRIMES:
        try:
            cr = _crossings(segs, segs, p, same_loop=True)
        except DegenerateProjection:
            continue
        events = []
        for cid, (ia, ib, ta, tb, sigma, a_over) in enumerate(cr):
            events.append(((ia, ta), cid, a_over, sigma))
            events.append(((ib, tb), cid, not a_over, sigma))
        events.sort(key=lambda e: e[0])
        return GaussCode(tuple((cid, over, sigma)
                               for _, cid, over, sigma in events))
    raise DegenerateProjection("no generic projection found")


def fox3_nontrivial(code: GaussCode) -> bool:
    """True iff the mod-3 Fox coloring system has a non-constant solution,
    certifying a knotted component."""
    entries = code.entries
    if not entries:
        return False
    n = len(entries)
    # arcs: maximal runs between consecutive under-passes
    under_positions = [i for i, (_, over, _) in enumerate(entries)
                       if not over]
    if not under_positions:
        return False
    arc_of_pos = {}
    k = len(under_positions)
    for ai in range(k):
        start = under_positions[ai]
        end = under_positions[(ai + 1) % k]
        i = (start + 1) % n
        while True:
            arc_of_pos[i] = ai
            if i == end:
                break
            i = (i + 1) % n
    # the under-pass position itself ends its arc; the entry at an under
    # position belongs to the arc that terminates there
    rows = []
    for ai in range(k):
        under_pos = under_positions[(ai + 1) % k]
        cid = entries[under_pos][0]
        over_pos = next(i for i, (c, over, _) in enumerate(entries)
                        if c == cid and over)
        a_in = ai
        a_out = (ai + 1) % k
        a_over = arc_of_pos[over_pos]
        row = [0] * k
        row[a_over] = (row[a_over] + 2) % 3
        row[a_in] = (row[a_in] - 1) % 3
        row[a_out] = (row[a_out] - 1) % 3
        rows.append(row)
    rank = _rank_mod3(rows)
    return k - rank >= 2


def _rank_mod3(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        piv = next((i for i in range(rank, len(rows))
                    if rows[i][col] % 3), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 if rows[rank][col] % 3 == 1 else 2
        rows[rank] = [(x * inv) % 3 for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % 3:
                f = rows[i][col] % 3
                rows[i] = [(x - f * y) % 3
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------- verdicts

@dataclass(frozen=True)
class Verdict:
    kind: str  # "Valid" | "Invalid" | "Unknown"
    obstruction: Optional[str] = None  # "linking" | "knotted"
    details: tuple = ()


def validity_verdict(pf: PseudoFolding) -> Verdict:
    if check_self_intersections(pf):
        return Verdict("Invalid", "self-intersection")
    if pf.polyomino.is_simply_connected():
        return Verdict("Valid")
    es = embed(pf)
    if not es.disjoint:
        raise AssertionError("zero-violation embedding not disjoint")
    link = boundary_link(es)
    ncomp = len(link.components)
    for i in range(ncomp):
        for j in range(i + 1, ncomp):
            lk = linking_number(link, i, j)
            if lk != 0:
                return Verdict("Invalid", "linking", ((i, j), lk))
    for i in range(ncomp):
        if fox3_nontrivial(gauss_code(link.components[i])):
            return Verdict("Invalid", "knotted", (i,))
    return Verdict("Unknown")
