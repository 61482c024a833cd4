"""Polyominoes with slits: parsing, duals, holes, boundaries, symmetry.

Coordinates are (row, col) with row 0 at the top.  A cut is an adjacency
between two *present* cells that is not glued: ("H", r, c) cuts the edge
between (r, c) and (r+1, c); ("V", r, c) cuts the edge between (r, c) and
(r, c+1).  Lattice vertices are (row, col) corner points; the outer
boundary is traced clockwise (east along the top edge first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

Cell = tuple[int, int]
Cut = tuple[str, int, int]

# Directions, in fixed order.
N, E, S, W = 0, 1, 2, 3
DIR_VECTORS = ((-1, 0), (0, 1), (1, 0), (0, -1))
OPPOSITE_DIR = (S, W, N, E)


class ParseError(ValueError):
    pass


class InvalidPolyomino(ValueError):
    pass


class NotTreeShaped(ValueError):
    pass


class HoleKind(Enum):
    UNIT_SQUARE = "UnitSquare"
    SLIT1 = "Slit1"
    I_SLIT2 = "ISlit2"
    L_SLIT2 = "LSlit2"
    U_SLIT3 = "USlit3"
    NON_SIMPLE = "NonSimple"


@dataclass(frozen=True)
class Hole:
    kind: HoleKind
    missing_cells: frozenset[Cell]
    cut_edges: frozenset[Cut]
    support: tuple[int, int, int, int]  # r0, c0, r1, c1 inclusive cell range


@dataclass(frozen=True)
class BoundaryCycle:
    """A closed boundary walk.

    ``vertices`` is the closed vertex sequence (first == last); ``edges``
    holds one (cell, side) per step, naming the cell whose side is walked.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[Cell, int], ...]


def _edge_between(a: Cell, b: Cell) -> Cut:
    (r1, c1), (r2, c2) = sorted((a, b))
    if (r2, c2) == (r1 + 1, c1):
        return ("H", r1, c1)
    if (r2, c2) == (r1, c1 + 1):
        return ("V", r1, c1)
    raise ValueError(f"cells {a} and {b} are not adjacent")


@dataclass(frozen=True)
class Polyomino:
    rows: int
    cols: int
    cells: frozenset[Cell]
    cuts: frozenset[Cut] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.cells:
            raise InvalidPolyomino("no cells")
        rs = [r for r, _ in self.cells]
        cs = [c for _, c in self.cells]
        if min(rs) != 0 or min(cs) != 0:
            raise InvalidPolyomino("bounding box not anchored at (0, 0)")
        if max(rs) != self.rows - 1 or max(cs) != self.cols - 1:
            raise InvalidPolyomino("bounding box not tight")
        for cut in self.cuts:
            o, r, c = cut
            if o not in ("H", "V"):
                raise InvalidPolyomino(f"bad cut orientation {cut}")
            other = (r + 1, c) if o == "H" else (r, c + 1)
            if (r, c) not in self.cells or other not in self.cells:
                raise InvalidPolyomino(f"dangling cut {cut}")
        # Connectivity under uncut adjacency.
        start = next(iter(self.cells))
        seen = {start}
        stack = [start]
        while stack:
            cell = stack.pop()
            for nb in self.glued_neighbors(cell):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != self.cells:
            raise InvalidPolyomino("not connected under uncut adjacency")

    # -- basic structure ------------------------------------------------

    def neighbor(self, cell: Cell, d: int) -> Cell:
        dr, dc = DIR_VECTORS[d]
        return (cell[0] + dr, cell[1] + dc)

    def is_cut(self, a: Cell, b: Cell) -> bool:
        return _edge_between(a, b) in self.cuts

    def is_glued(self, a: Cell, b: Cell) -> bool:
        return (
            a in self.cells and b in self.cells and not self.is_cut(a, b)
        )

    def glued_neighbors(self, cell: Cell) -> Iterator[Cell]:
        for d in range(4):
            nb = self.neighbor(cell, d)
            if nb in self.cells and not self.is_cut(cell, nb):
                yield nb

    def dual_edges(self) -> list[tuple[Cell, Cell]]:
        """Uncut adjacencies, each reported once as (lesser, greater)."""
        out = []
        for cell in self.cells:
            for d in (E, S):
                nb = self.neighbor(cell, d)
                if nb in self.cells and not self.is_cut(cell, nb):
                    out.append((cell, nb))
        return sorted(out)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    # -- shape flags ----------------------------------------------------

    def is_tree_shaped(self) -> bool:
        return len(self.dual_edges()) == len(self.cells) - 1

    def is_path_shaped(self) -> bool:
        if not self.is_tree_shaped():
            return False
        degs = {c: 0 for c in self.cells}
        for a, b in self.dual_edges():
            degs[a] += 1
            degs[b] += 1
        return all(d <= 2 for d in degs.values())

    def is_rectangular(self) -> bool:
        """Full bounding box of cells (holes may remove interior cells)."""
        missing = [
            (r, c)
            for r in range(self.rows)
            for c in range(self.cols)
            if (r, c) not in self.cells
        ]
        return all(
            0 < r < self.rows - 1 and 0 < c < self.cols - 1 for r, c in missing
        )

    def is_full_rectangle(self) -> bool:
        return len(self.cells) == self.rows * self.cols and not self.cuts

    def is_simply_connected(self) -> bool:
        """True iff the glued complex is a topological disk.

        Computed from the Euler characteristic V - E + F of the complex
        whose identifications are generated by the glued adjacencies: a
        shape whose dual is a tree is a disk even when touching cells are
        separated by slits.
        """
        f = len(self.cells)
        glued = self.dual_edges()
        e = 4 * f - len(glued)
        # corners: (cell, dr, dc) with (dr, dc) in {0,1}^2
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for cell in self.cells:
            for dr in (0, 1):
                for dc in (0, 1):
                    parent[(cell, dr, dc)] = (cell, dr, dc)
        for a, b in glued:
            (r1, c1), (r2, c2) = a, b
            if r1 == r2:  # horizontal neighbours, b east of a
                union((a, 0, 1), (b, 0, 0))
                union((a, 1, 1), (b, 1, 0))
            else:  # b south of a
                union((a, 1, 0), (b, 0, 0))
                union((a, 1, 1), (b, 0, 1))
        v = sum(1 for x in parent if find(x) == x)
        return v - e + f == 1

    # -- transforms -----------------------------------------------------

    def transformed(self, t: int) -> "Polyomino":
        """Apply dihedral transform 0..7 (see transform_cell)."""
        cells = [transform_cell(c, t, self.rows, self.cols) for c in self.cells]
        cuts = [transform_cut(c, t, self.rows, self.cols) for c in self.cuts]
        swap = (t % 2 == 1) if t < 4 else (t % 2 == 0)
        rows, cols = (self.cols, self.rows) if swap else (self.rows, self.cols)
        return Polyomino(rows, cols, frozenset(cells), frozenset(cuts))


# Dihedral transforms: 0..3 rotate clockwise by 90°·t, 4..7 = transpose then
# rotate.  All map the rows×cols box onto its image box anchored at (0, 0).


def transform_cell(cell: Cell, t: int, rows: int, cols: int) -> Cell:
    r, c = cell
    if t >= 4:
        r, c = c, r
        rows, cols = cols, rows
        t -= 4
    for _ in range(t):
        r, c = c, rows - 1 - r
        rows, cols = cols, rows
    return (r, c)


def transform_dir(d: int, t: int) -> int:
    """Image of grid direction d under dihedral transform t."""
    if t >= 4:
        d = {N: W, W: N, S: E, E: S}[d]
        t -= 4
    # clockwise rotation by 90° maps N->E->S->W->N
    return (d + t) % 4


def transform_cut(cut: Cut, t: int, rows: int, cols: int) -> Cut:
    o, r, c = cut
    a = (r, c)
    b = (r + 1, c) if o == "H" else (r, c + 1)
    return _edge_between(
        transform_cell(a, t, rows, cols), transform_cell(b, t, rows, cols)
    )


# -- text format ---------------------------------------------------------


def parse(text: str) -> Polyomino:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    idx = 0

    def expect(prefix: str) -> str:
        nonlocal idx
        if idx >= len(lines):
            raise ParseError(f"line {idx + 1}: expected {prefix!r}, got end of input")
        line = lines[idx]
        if not line.startswith(prefix):
            raise ParseError(f"line {idx + 1}: expected {prefix!r}, got {line!r}")
        idx += 1
        return line[len(prefix):]

    expect("POLYOMINO v1")
    try:
        rows = int(expect("rows: "))
        cols = int(expect("cols: "))
    except ValueError as exc:
        raise ParseError(f"line {idx}: bad integer ({exc})") from None
    expect("grid:")
    cells = set()
    for r in range(rows):
        if idx >= len(lines):
            raise ParseError(f"line {idx + 1}: missing grid row {r}")
        line = lines[idx]
        idx += 1
        if len(line) != cols or any(ch not in "#." for ch in line):
            raise ParseError(f"line {idx}: bad grid row {line!r}")
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add((r, c))
    expect("slits:")
    cuts = set()
    while idx < len(lines):
        parts = lines[idx].split()
        if len(parts) != 3 or parts[0] not in ("H", "V"):
            raise ParseError(f"line {idx + 1}: bad slit line {lines[idx]!r}")
        try:
            cuts.add((parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise ParseError(f"line {idx + 1}: bad slit indices") from None
        idx += 1
    return Polyomino(rows, cols, frozenset(cells), frozenset(cuts))


def serialize(p: Polyomino) -> str:
    out = ["POLYOMINO v1", f"rows: {p.rows}", f"cols: {p.cols}", "grid:"]
    for r in range(p.rows):
        out.append(
            "".join("#" if (r, c) in p.cells else "." for c in range(p.cols))
        )
    out.append("slits:")
    for o, r, c in sorted(p.cuts):
        out.append(f"{o} {r} {c}")
    return "\n".join(out) + "\n"


def from_cells(cells: Iterable[Cell], cuts: Iterable[Cut] = ()) -> Polyomino:
    """Build a polyomino from arbitrary coords, translating to anchor (0,0)."""
    cells = list(cells)
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    moved = frozenset((r - r0, c - c0) for r, c in cells)
    moved_cuts = frozenset((o, r - r0, c - c0) for o, r, c in cuts)
    rows = max(r for r, _ in moved) + 1
    cols = max(c for _, c in moved) + 1
    return Polyomino(rows, cols, moved, moved_cuts)


# -- boundary tracing -----------------------------------------------------

# For a cell side, the directed boundary edge keeps material on the right,
# which traces the outer boundary clockwise (in row-down screen coords the
# walk goes east along the top).  start/heading per side:
_SIDE_WALK = {
    N: ((0, 0), (0, 1)),  # start at NW corner, head east
    E: ((0, 1), (1, 0)),  # NE corner, head south
    S: ((1, 1), (0, -1)),  # SE corner, head west
    W: ((1, 0), (-1, 0)),  # SW corner, head north
}


def _boundary_sides(p: Polyomino) -> dict[tuple[tuple[int, int], tuple[int, int]], tuple[Cell, int]]:
    """Directed boundary edges keyed by (start_vertex, heading)."""
    out = {}
    for cell in p.cells:
        r, c = cell
        for d in range(4):
            nb = p.neighbor(cell, d)
            if nb in p.cells and not p.is_cut(cell, nb):
                continue
            (orr, occ), heading = _SIDE_WALK[d]
            start = (r + orr, c + occ)
            out[(start, heading)] = (cell, d)
    return out


def boundary_components(p: Polyomino) -> list[BoundaryCycle]:
    """All boundary cycles, outer one first, traced clockwise."""
    sides = _boundary_sides(p)
    unused = dict(sides)
    cycles = []
    while unused:
        start_key = min(unused)
        verts = [start_key[0]]
        edges = []
        key = start_key
        while True:
            (pos, heading) = key
            cell, side = unused.pop(key)
            edges.append((cell, side))
            nxt = (pos[0] + heading[0], pos[1] + heading[1])
            verts.append(nxt)
            # pick next edge: prefer right turn (hug the material corner),
            # then straight, then left, then u-turn (slit dead end)
            for h2 in (_turn(heading, "r"), heading, _turn(heading, "l"),
                       (-heading[0], -heading[1])):
                key2 = (nxt, h2)
                if key2 == start_key:
                    key = None
                    break
                if key2 in unused:
                    key = key2
                    break
            else:
                raise AssertionError("boundary trace stuck")
            if key is None:
                break
        cycles.append(BoundaryCycle(tuple(verts), tuple(edges)))
    # outer component: contains the lexicographically least boundary vertex
    least = min(min(c.vertices) for c in cycles)
    cycles.sort(key=lambda c: (min(c.vertices) != least, c.vertices))
    return cycles


def _turn(heading: tuple[int, int], where: str) -> tuple[int, int]:
    dr, dc = heading
    if where == "r":  # clockwise in paper orientation
        return (dc, -dr)
    return (-dc, dr)


# -- holes ----------------------------------------------------------------


def find_holes(p: Polyomino) -> list[Hole]:
    cycles = boundary_components(p)
    holes = []
    for cyc in cycles[1:]:
        seeds = set()
        cuts = set()
        for cell, side in cyc.edges:
            nb = p.neighbor(cell, side)
            if nb in p.cells:
                cuts.add(_edge_between(cell, nb))
            else:
                seeds.add(nb)
        # flood through absent cells so fully interior missing cells (not
        # edge-adjacent to the cycle) are also collected
        missing = set(seeds)
        stack = list(seeds)
        while stack:
            cell = stack.pop()
            for dr, dc in DIR_VECTORS:
                nb = (cell[0] + dr, cell[1] + dc)
                if nb in p.cells or nb in missing:
                    continue
                if 0 <= nb[0] < p.rows and 0 <= nb[1] < p.cols:
                    missing.add(nb)
                    stack.append(nb)
        holes.append(_classify_hole(frozenset(missing), frozenset(cuts)))
    holes.sort(key=lambda h: h.support)
    return holes


def _hole_lattice_span(missing: frozenset[Cell], cuts: frozenset[Cut]):
    rs, cs = [], []
    for r, c in missing:
        rs += [r, r + 1]
        cs += [c, c + 1]
    for o, r, c in cuts:
        if o == "H":  # edge between (r,c),(r+1,c): lattice row r+1, cols c..c+1
            rs += [r + 1, r + 1]
            cs += [c, c + 1]
        else:  # between (r,c),(r,c+1): lattice col c+1, rows r..r+1
            rs += [r, r + 1]
            cs += [c + 1, c + 1]
    return min(rs), min(cs), max(rs), max(cs)


def _classify_hole(missing: frozenset[Cell], cuts: frozenset[Cut]) -> Hole:
    kind = HoleKind.NON_SIMPLE
    if len(missing) == 1 and not cuts:
        kind = HoleKind.UNIT_SQUARE
    elif not missing and len(cuts) == 1:
        kind = HoleKind.SLIT1
    elif not missing and len(cuts) == 2:
        (o1, r1, c1), (o2, r2, c2) = sorted(cuts)
        if o1 == o2 == "H" and (r2, c2) == (r1, c1 + 1):
            kind = HoleKind.I_SLIT2
        elif o1 == o2 == "V" and (r2, c2) == (r1 + 1, c1):
            kind = HoleKind.I_SLIT2
        elif _cuts_share_vertex(*sorted(cuts)) and o1 != o2:
            kind = HoleKind.L_SLIT2
    elif not missing and len(cuts) == 3:
        # U-slit: the three cut edges are three sides of one unit square
        for cell in _candidate_squares(cuts):
            sides = _square_side_edges(cell)
            if cuts <= sides:
                kind = HoleKind.U_SLIT3
                break
    r0, c0, r1, c1 = _hole_lattice_span(missing, cuts)
    # support: smallest cell rectangle containing the hole in its interior
    support = (r0 - 1, c0 - 1, r1, c1)
    return Hole(kind, missing, cuts, support)


def _cut_vertices(cut: Cut) -> set[tuple[int, int]]:
    o, r, c = cut
    if o == "H":
        return {(r + 1, c), (r + 1, c + 1)}
    return {(r, c + 1), (r + 1, c + 1)}


def _cuts_share_vertex(a: Cut, b: Cut) -> bool:
    return bool(_cut_vertices(a) & _cut_vertices(b))


def _candidate_squares(cuts: frozenset[Cut]) -> set[Cell]:
    cands = set()
    for cut in cuts:
        cands.update(_cut_cells(cut))
    return cands


def _square_side_edges(cell: Cell) -> frozenset[Cut]:
    r, c = cell
    return frozenset(
        {("H", r - 1, c), ("H", r, c), ("V", r, c - 1), ("V", r, c)}
    )


# -- canonical form -------------------------------------------------------


def canonical_form(p: Polyomino) -> Polyomino:
    best = None
    best_key = None
    for t in range(8):
        q = p.transformed(t)
        key = serialize(q)
        if best_key is None or key < best_key:
            best, best_key = q, key
    return best


# -- leaf-fold reduction ---------------------------------------------------


def reduce_by_leaf_folds(
    p: Polyomino, min_box: tuple[int, int]
) -> tuple[Polyomino, list[tuple[Cell, Cell]]]:
    """Remove leaf squares while the bounding size stays ≥ min_box.

    Silhouette semantics: each removed leaf folds onto its unique glued
    neighbour; the log records (leaf, neighbour) pairs in order.
    """
    if not p.is_tree_shaped():
        raise NotTreeShaped("leaf-fold reduction requires a tree-shaped polyomino")
    cells = set(p.cells)
    cuts = set(p.cuts)
    log: list[tuple[Cell, Cell]] = []
    changed = True
    while changed:
        changed = False
        for cell in sorted(cells):
            nbs = [
                nb
                for d in range(4)
                if (nb := (cell[0] + DIR_VECTORS[d][0], cell[1] + DIR_VECTORS[d][1]))
                in cells
                and _edge_between(cell, nb) not in cuts
            ]
            if len(nbs) != 1:
                continue
            rest = cells - {cell}
            h = max(r for r, _ in rest) - min(r for r, _ in rest) + 1
            w = max(c for _, c in rest) - min(c for _, c in rest) + 1
            if h < min_box[0] or w < min_box[1]:
                continue
            cells.remove(cell)
            cuts = {
                cut for cut in cuts if cell not in _cut_cells(cut)
            }
            log.append((cell, nbs[0]))
            changed = True
            break
    return from_cells(cells, cuts), log


def _cut_cells(cut: Cut) -> tuple[Cell, Cell]:
    o, r, c = cut
    return ((r, c), (r + 1, c) if o == "H" else (r, c + 1))
