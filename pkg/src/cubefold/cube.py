"""Cube faces, cell placements, and enumeration of consistent mappings.

Faces are labelled 1..6 with opposite faces summing to 7, pinned by the
standard cross net: middle row (west to east) covers 2, 1, 5, 6; rolling the
second square north covers 3, south covers 4.

A cell placement is the triple (face, north_face, east_face): the face the
cell covers, plus the faces across the cube edges met by the cell's north
and east edges.  There are 48 placements; the 24 with positive handedness
correspond to cells lying with their original upper side outward.  Folding a
cell onto its neighbour by 90° ("roll") or 180° ("flip") induces the
placement transitions below; a consistent mapping assigns each cell a
placement so that every glued adjacency is one of the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .grid import (
    DIR_VECTORS,
    E,
    Hole,
    HoleKind,
    N,
    Polyomino,
    S,
    W,
    transform_cell,
    transform_dir,
)

Placement = tuple[int, int, int]  # (face, north_face, east_face)

_FACE_VECTORS = {
    1: (0, 0, -1),
    6: (0, 0, 1),
    2: (-1, 0, 0),
    5: (1, 0, 0),
    3: (0, 1, 0),
    4: (0, -1, 0),
}


def _det(a, b, c) -> int:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _valid_placement(face: int, fn: int, fe: int) -> bool:
    if fn in (face, 7 - face) or fe in (face, 7 - face):
        return False
    return fe not in (fn, 7 - fn)


PLACEMENTS: tuple[Placement, ...] = tuple(
    (face, fn, fe)
    for face in range(1, 7)
    for fn in range(1, 7)
    for fe in range(1, 7)
    if _valid_placement(face, fn, fe)
)
PLACEMENT_INDEX = {p: i for i, p in enumerate(PLACEMENTS)}


def handedness(p: Placement) -> int:
    """+1 for upper-side-out placements, -1 for flipped-over ones."""
    face, fn, fe = p
    return 1 if _det(_FACE_VECTORS[fn], _FACE_VECTORS[fe], _FACE_VECTORS[face]) > 0 else -1


UPRIGHT_PLACEMENTS = tuple(p for p in PLACEMENTS if handedness(p) > 0)

# The placement of the paper's initial die square (first square of the
# standard net's middle row): covers 2, north edge meets face 3, east meets 1.
INITIAL_PLACEMENT: Placement = (2, 3, 1)


def roll(p: Placement, d: int) -> Placement:
    """Placement of the neighbour in direction d after a 90° fold."""
    face, fn, fe = p
    if d == E:
        return (fe, fn, 7 - face)
    if d == W:
        return (7 - fe, fn, face)
    if d == N:
        return (fn, 7 - face, fe)
    return (7 - fn, face, fe)  # S


def flip(p: Placement, d: int) -> Placement:
    """Placement of the neighbour in direction d after a 180° fold."""
    face, fn, fe = p
    if d in (E, W):
        return (face, fn, 7 - fe)
    return (face, 7 - fn, fe)


def dir_face(p: Placement, d: int) -> int:
    face, fn, fe = p
    return (fn, fe, 7 - fn, 7 - fe)[d]


def cube_edge(p: Placement, d: int) -> frozenset[int]:
    """The cube edge met by the cell's side in direction d."""
    return frozenset((p[0], dir_face(p, d)))


# -- CubeOrientation (top, north) view, for upright placements ------------


def orientation_of(p: Placement) -> tuple[int, int]:
    if handedness(p) < 0:
        raise ValueError("flipped placement has no die orientation")
    return (7 - p[0], p[1])


def placement_of_orientation(top: int, north: int) -> Placement:
    face = 7 - top
    for fe in range(1, 7):
        cand = (face, north, fe)
        if _valid_placement(*cand) and handedness(cand) > 0:
            return cand
    raise ValueError(f"invalid orientation ({top}, {north})")


def roll_orientation(o: tuple[int, int], d: int) -> tuple[int, int]:
    return orientation_of(roll(placement_of_orientation(*o), d))


# -- cube rotation group ---------------------------------------------------


def _rotation_perms() -> tuple[tuple[int, ...], ...]:
    # face permutations generated by quarter turns; index 0 unused
    def compose(a, b):
        return tuple(a[b[i]] for i in range(7))

    rx = (0, 3, 2, 6, 1, 5, 4)  # rotate about the 2-5 axis
    rz = (0, 1, 3, 5, 2, 4, 6)  # rotate about the 1-6 axis
    perms = {(0, 1, 2, 3, 4, 5, 6)}
    frontier = set(perms)
    while frontier:
        nxt = set()
        for p in frontier:
            for g in (rx, rz):
                q = compose(g, p)
                if q not in perms:
                    perms.add(q)
                    nxt.add(q)
        frontier = nxt
    assert len(perms) == 24
    return tuple(sorted(perms))


ROTATIONS = _rotation_perms()


def rotate_placement(p: Placement, perm: tuple[int, ...]) -> Placement:
    return (perm[p[0]], perm[p[1]], perm[p[2]])


# -- consistent mappings ----------------------------------------------------


@dataclass(frozen=True)
class ConsistentMapping:
    polyomino: Polyomino
    placements: tuple[Placement, ...]  # aligned with polyomino.sorted_cells()

    def placement(self, cell) -> Placement:
        return self.placements[self._index[cell]]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.polyomino.sorted_cells())}
            self.__dict__["_index_cache"] = idx
        return idx

    def covered_face(self, cell) -> int:
        return self.placement(cell)[0]

    def faces(self) -> set[int]:
        return {p[0] for p in self.placements}

    def face_multiplicities(self) -> dict[int, int]:
        mult: dict[int, int] = {}
        for p in self.placements:
            mult[p[0]] = mult.get(p[0], 0) + 1
        return mult

    def fold_angle(self, a, b) -> str:
        """'Quarter' or 'Half' for the glued edge between cells a and b."""
        if not self.polyomino.is_glued(a, b):
            raise ValueError(f"edge {a}-{b} is not a glued adjacency")
        return "Half" if self.covered_face(a) == self.covered_face(b) else "Quarter"

    def edge_cube_edge(self, a, b) -> frozenset[int]:
        d = _direction(a, b)
        ce = cube_edge(self.placement(a), d)
        assert ce == cube_edge(self.placement(b), (d + 2) % 4)
        return ce


def _direction(a, b) -> int:
    delta = (b[0] - a[0], b[1] - a[1])
    return DIR_VECTORS.index(delta)


def is_surjective(m: ConsistentMapping) -> bool:
    return m.faces() == {1, 2, 3, 4, 5, 6}


def neighbor_placements(p: Placement, d: int) -> tuple[Placement, Placement]:
    return (roll(p, d), flip(p, d))


def enumerate_consistent_mappings(
    p: Polyomino,
    surjective_only: bool = False,
    up_to_rotation: bool = False,
    quarter_only: bool = False,
) -> Iterator[ConsistentMapping]:
    """All consistent mappings of p, by DFS over fold choices.

    The cells are visited in BFS order from the lexicographically least
    cell; each root placement (24 upright ones, or one if up_to_rotation)
    is propagated along the BFS tree with a roll/flip choice per tree edge,
    and every non-tree glued adjacency is checked for consistency.  Cube
    rotations act freely on mappings, so fixing the root placement
    enumerates exactly one mapping per rotation orbit.
    """
    cells = p.sorted_cells()
    index = {c: i for i, c in enumerate(cells)}
    root = cells[0]
    # BFS order with parent links
    order = [root]
    parent: dict = {root: None}
    qi = 0
    while qi < len(order):
        cell = order[qi]
        qi += 1
        for d in range(4):
            nb = p.neighbor(cell, d)
            if nb in p.cells and nb not in parent and p.is_glued(cell, nb):
                parent[nb] = (cell, d)
                order.append(nb)
    # glued neighbours already assigned when a cell is placed (for checks)
    check_edges: list[list[tuple[int, int]]] = [[] for _ in order]
    pos_in_order = {c: i for i, c in enumerate(order)}
    for i, cell in enumerate(order):
        for d in range(4):
            nb = p.neighbor(cell, d)
            if nb in p.cells and p.is_glued(cell, nb) and pos_in_order[nb] < i:
                if parent[cell] is not None and parent[cell][0] == nb:
                    continue
                check_edges[i].append((pos_in_order[nb], d))

    roots = (UPRIGHT_PLACEMENTS[0],) if up_to_rotation else UPRIGHT_PLACEMENTS
    n = len(order)
    assigned: list[Optional[Placement]] = [None] * n

    def consistent(q: Placement, prev: Placement, d_prev_to_q: int) -> bool:
        return q == roll(prev, d_prev_to_q) or (
            not quarter_only and q == flip(prev, d_prev_to_q)
        )

    def dfs(i: int, facemask: int, nfaces: int) -> Iterator[ConsistentMapping]:
        if surjective_only and 6 - nfaces > n - i:
            return
        if i == n:
            if not surjective_only or nfaces == 6:
                placements = [None] * n
                for j, cell in enumerate(order):
                    placements[index[cell]] = assigned[j]
                yield ConsistentMapping(p, tuple(placements))
            return
        prev_cell, d = parent[order[i]]
        prev = assigned[pos_in_order[prev_cell]]
        options = (roll(prev, d),) if quarter_only else (roll(prev, d), flip(prev, d))
        for q in options:
            ok = True
            for j, d_back in check_edges[i]:
                # edge from order[i] to order[j] in direction d_back
                if not consistent(assigned[j], q, d_back):
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = q
            bit = 1 << q[0]
            if facemask & bit:
                yield from dfs(i + 1, facemask, nfaces)
            else:
                yield from dfs(i + 1, facemask | bit, nfaces + 1)
        assigned[i] = None

    for root_placement in roots:
        assigned[0] = root_placement
        yield from dfs(1, 1 << root_placement[0], 1)
        assigned[0] = None


def check_vertex_face_bound(m: ConsistentMapping) -> bool:
    """Around every interior vertex the four cells cover at most 2 faces."""
    p = m.polyomino
    for r in range(1, p.rows):
        for c in range(1, p.cols):
            quad = [(r - 1, c - 1), (r - 1, c), (r, c), (r, c - 1)]
            if any(cell not in p.cells for cell in quad):
                continue
            edges = [
                (quad[0], quad[1]),
                (quad[1], quad[2]),
                (quad[3], quad[2]),
                (quad[0], quad[3]),
            ]
            if any(p.is_cut(a, b) for a, b in edges):
                continue
            faces = {m.covered_face(cell) for cell in quad}
            if len(faces) > 2:
                return False
    return True


# -- unit-hole analysis ------------------------------------------------------


class NotUnitSquareHole(ValueError):
    pass


def _hole_boundary_cube_edges(m: ConsistentMapping, h: Hole) -> list[frozenset[int]]:
    (r, c) = next(iter(h.missing_cells))
    p = m.polyomino
    edges = []
    for d in range(4):
        nb = (r + DIR_VECTORS[d][0], c + DIR_VECTORS[d][1])
        if nb in p.cells:
            edges.append(cube_edge(m.placement(nb), (d + 2) % 4))
    return edges


def hole_restriction_trivial(m: ConsistentMapping, h: Hole) -> bool:
    """True iff the mapping stays consistent when the hole is filled/glued."""
    p = m.polyomino
    if h.kind == HoleKind.UNIT_SQUARE:
        (r, c) = next(iter(h.missing_cells))
        for q in PLACEMENTS:
            ok = True
            for d in range(4):
                nb = (r + DIR_VECTORS[d][0], c + DIR_VECTORS[d][1])
                if nb not in p.cells:
                    continue
                nq = m.placement(nb)
                if nq != roll(q, d) and nq != flip(q, d):
                    ok = False
                    break
            if ok:
                return True
        return False
    # slit holes: trivial iff every cut edge is itself a roll/flip relation
    for o, r, c in h.cut_edges:
        a = (r, c)
        b = (r + 1, c) if o == "H" else (r, c + 1)
        d = _direction(a, b)
        qb = m.placement(b)
        qa = m.placement(a)
        if qb != roll(qa, d) and qb != flip(qa, d):
            return False
    return True


def unit_hole_type(m: ConsistentMapping, h: Hole) -> Optional[int]:
    """The face whose boundary carries both cube edges around a unit hole.

    None for a trivial restriction and for the single-edge (unrealisable)
    pattern.
    """
    if h.kind != HoleKind.UNIT_SQUARE:
        raise NotUnitSquareHole(str(h.kind))
    if hole_restriction_trivial(m, h):
        return None
    edges = set(_hole_boundary_cube_edges(m, h))
    if len(edges) != 2:
        return None
    e1, e2 = edges
    common = e1 & e2
    if len(common) == 1:
        return next(iter(common))
    return None


def is_good(m: ConsistentMapping) -> bool:
    """No unit hole exhibits the unrealisable single-cube-edge pattern."""
    from .grid import find_holes

    for h in find_holes(m.polyomino):
        if h.kind != HoleKind.UNIT_SQUARE:
            continue
        if hole_restriction_trivial(m, h):
            continue
        if len(set(_hole_boundary_cube_edges(m, h))) == 1:
            return False
    return True


# -- symmetry quotient -------------------------------------------------------


def transform_mapping(m: ConsistentMapping, t: int) -> ConsistentMapping:
    """Image of a mapping under a dihedral transform of the polyomino."""
    p = m.polyomino
    q = p.transformed(t)
    inv = [None] * 4
    for d in range(4):
        inv[transform_dir(d, t)] = d
    new_placements = [None] * len(m.placements)
    qcells = q.sorted_cells()
    qindex = {c: i for i, c in enumerate(qcells)}
    for cell in p.cells:
        pl = m.placement(cell)
        cell2 = transform_cell(cell, t, p.rows, p.cols)
        fn = dir_face(pl, inv[N])
        fe = dir_face(pl, inv[E])
        new_placements[qindex[cell2]] = (pl[0], fn, fe)
    return ConsistentMapping(q, tuple(new_placements))


def rotate_mapping(m: ConsistentMapping, perm: tuple[int, ...]) -> ConsistentMapping:
    return ConsistentMapping(
        m.polyomino, tuple(rotate_placement(p, perm) for p in m.placements)
    )


def mapping_key(m: ConsistentMapping):
    return m.placements


def count_up_to_isomorphism(
    mappings: list[ConsistentMapping], include_reflections: bool = False
) -> int:
    """Orbits under cube rotations x symmetries of the (fixed) polyomino."""
    if not mappings:
        return 0
    p = mappings[0].polyomino
    sym_ts = [
        t
        for t in range(8)
        if p.transformed(t).cells == p.cells and p.transformed(t).cuts == p.cuts
    ]
    keys = {mapping_key(m) for m in mappings}
    seen = set()
    orbits = 0
    mirror = (0, 6, 5, 4, 3, 2, 1) if include_reflections else None
    for m in mappings:
        k = mapping_key(m)
        if k in seen:
            continue
        orbits += 1
        for t in sym_ts:
            base = transform_mapping(m, t)
            if base.polyomino.cells != p.cells:
                continue
            variants = [base]
            if mirror is not None:
                variants.append(
                    ConsistentMapping(
                        base.polyomino,
                        tuple(
                            (mirror[f], mirror[fn], mirror[fe])
                            for f, fn, fe in base.placements
                        ),
                    )
                )
            for v in variants:
                for perm in ROTATIONS:
                    k2 = mapping_key(rotate_mapping(v, perm))
                    if k2 in keys:
                        seen.add(k2)
    return orbits


# -- serialisation ------------------------------------------------------------


def mapping_to_text(m: ConsistentMapping) -> str:
    p = m.polyomino
    rows = []
    for r in range(p.rows):
        toks = []
        for c in range(p.cols):
            if (r, c) in p.cells:
                pl = m.placement((r, c))
                toks.append(f"{pl[0]}/{PLACEMENT_INDEX[pl]}")
            else:
                toks.append(".")
        rows.append(" ".join(toks))
    return "\n".join(rows) + "\n"


def mapping_from_text(p: Polyomino, text: str) -> ConsistentMapping:
    placements = [None] * len(p.cells)
    index = {c: i for i, c in enumerate(p.sorted_cells())}
    for r, line in enumerate(text.strip().split("\n")):
        for c, tok in enumerate(line.split()):
            if tok == ".":
                continue
            _, idx = tok.split("/")
            placements[index[(r, c)]] = PLACEMENTS[int(idx)]
    return ConsistentMapping(p, tuple(placements))
