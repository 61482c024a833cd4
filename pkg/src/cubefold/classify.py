"""Theorem-backed foldability deciders and the top-level verdict dispatcher.

Every FOLDABLE verdict carries a certificate that can be replayed: a
folding plan whose execution succeeds, a zero-violation surjective
pseudo-folding passing the topology checks, or a theorem citation whose
hypothesis predicate was verified on the input.  NOT_FOLDABLE verdicts
carry a theorem citation or an exhaustion record.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .grid import (
    N, E, S, W,
    Hole,
    HoleKind,
    NotTreeShaped,
    Polyomino,
    boundary_components,
    canonical_form,
    find_holes,
    parse,
    serialize,
    transform_cell,
    transform_dir,
)
from .cube import NotUnitSquareHole, enumerate_consistent_mappings
from .layers import (
    FoldingPlan,
    InvalidFoldLine,
    LimitExceeded,
    PseudoFolding,
    RollFold,
    WrapFailed,
    _apply_roll,
    _initial_silhouette,
    check_self_intersections,
    execute_plan,
    find_layer_map,
    iter_layer_maps,
    pseudo_folding_to_text,
)
from .topology import validity_verdict
from .enumeration import _leaves, minimal_foldable_set, remove_leaf


class WrongBoundingSize(ValueError):
    pass


class VertexOnBoundingBox(ValueError):
    pass


FOLDABLE = "FOLDABLE"
NOT_FOLDABLE = "NOT_FOLDABLE"
UNKNOWN = "UNKNOWN"

CORNERS = ("TL", "TR", "BR", "BL")  # clockwise around the bounding box

# The unique tree-shaped polyomino of bounding size 4x4 (up to symmetry)
# that does not fold onto the cube: a W-shaped staircase heptomino.
UNFOLDABLE_4X4 = parse(
    "POLYOMINO v1\nrows: 4\ncols: 4\ngrid:\n...#\n...#\n..##\n###.\nslits:\n"
)


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: dict
    budget_exhausted: bool = False

    def to_json(self) -> dict:
        return {
            "verdict": self.status,
            "certificate": self.certificate,
            "budget_exhausted": self.budget_exhausted,
        }


def _theorem(name: str, statement: str, hypothesis: dict,
             external: bool = False) -> dict:
    cert = {"kind": "theorem", "name": name, "statement": statement,
            "hypothesis": hypothesis}
    if external:
        cert["external"] = True
    return cert


def _pf_certificate(pf: PseudoFolding) -> dict:
    verdict = validity_verdict(pf)
    return {
        "kind": "pseudo_folding",
        "pseudo_folding": pseudo_folding_to_text(pf),
        "violations": len(check_self_intersections(pf)),
        "topology": verdict.kind,
    }


# ------------------------------------------------------------ unit holes


def stored_hole_certificates() -> dict:
    """Pseudo-folding texts for cooperating-hole reference shapes, keyed
    by the canonical form of their polyomino."""
    from importlib import resources
    out = {}
    root = resources.files("cubefold").joinpath("data/cooperating_holes")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".txt"):
            text = entry.read_text()
            shape = parse(text.split("mapping:\n", 1)[0])
            out[serialize(canonical_form(shape))] = text
    return out


_HOLE_CERTS: Optional[dict] = None


def holes_cooperate(p: Polyomino, h1: Hole, h2: Hole) -> bool:
    """Two unit square holes cooperate when they lie in the same or in
    adjacent rows (resp. columns) and the number of columns (resp. rows)
    between them is odd."""
    for h in (h1, h2):
        if h.kind is not HoleKind.UNIT_SQUARE:
            raise NotUnitSquareHole(f"hole of kind {h.kind.value}")
    (r1, c1), = h1.missing_cells
    (r2, c2), = h2.missing_cells
    dr, dc = abs(r1 - r2), abs(c1 - c2)
    return (dr <= 1 and dc >= 2 and (dc - 1) % 2 == 1) or (
        dc <= 1 and dr >= 2 and (dr - 1) % 2 == 1)


# ------------------------------------------------------------ tree classes


def _glued_pairs(p: Polyomino) -> set[frozenset]:
    return {frozenset(e) for e in p.dual_edges()}


def _runs(q: Polyomino, row: int, glued: set[frozenset]) -> list[list[int]]:
    """Maximal glued horizontal runs of cells in the given row."""
    cols = sorted(c for (r, c) in q.cells if r == row)
    out: list[list[int]] = []
    cur: list[int] = []
    for c in cols:
        if cur and c == cur[-1] + 1 and \
                frozenset({(row, cur[-1]), (row, c)}) in glued:
            cur.append(c)
        else:
            if cur:
                out.append(cur)
            cur = [c]
    if cur:
        out.append(cur)
    return out


def _components(cells, glued: set[frozenset]) -> list[set]:
    cells = set(cells)
    seen: set = set()
    out = []
    for cell in sorted(cells):
        if cell in seen:
            continue
        comp = {cell}
        stack = [cell]
        while stack:
            x = stack.pop()
            for y in cells:
                if y not in comp and frozenset({x, y}) in glued:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(comp)
    return out


def _require_tree(p: Polyomino) -> None:
    if not p.is_tree_shaped():
        raise NotTreeShaped("decider requires a tree-shaped polyomino")


def is_class_A(p: Polyomino) -> bool:
    """Strip-plus-confined-attachments shapes of bounding height 2.

    Some maximal glued run (the strip) in one row decomposes the shape so
    that every remaining component hangs from the strip by a single
    vertical glued edge at some column i, occupies only columns i-1..i+1
    of the other row, and re-enters the strip row only at the run ends,
    glued to the square above.
    """
    _require_tree(p)
    if min(p.rows, p.cols) != 2:
        raise WrongBoundingSize(f"bounding size {p.rows}x{p.cols}")
    for t in range(8):
        q = p.transformed(t)
        if q.rows != 2:
            continue
        glued = _glued_pairs(q)
        for row in (0, 1):
            other = 1 - row
            for run in _runs(q, row, glued):
                strip = {(row, c) for c in run}
                ok = True
                for comp in _components(set(q.cells) - strip, glued):
                    joins = [(a, b) for a in comp for b in strip
                             if frozenset({a, b}) in glued]
                    if len(joins) != 1:
                        ok = False
                        break
                    a, b = joins[0]
                    if a[0] != other or a[1] != b[1]:
                        ok = False  # must attach by a vertical edge
                        break
                    i = a[1]
                    allowed = {(other, i - 1), (other, i), (other, i + 1)}
                    for s in (-1, 1):
                        if (row, i + s) not in strip:
                            allowed.add((row, i + s))
                    if not comp <= allowed:
                        ok = False
                        break
                    for s in (-1, 1):
                        if (row, i + s) in comp and frozenset(
                                {(row, i + s), (other, i + s)}) not in glued:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    return True
    return False


def is_class_B(p: Polyomino) -> bool:
    """Strip shapes of bounding height 3 with one confined height-2
    attachment.

    The strip is a maximal glued run in an extremal row; the single
    remaining component hangs from it by one vertical glued edge at
    column i, lies in the two rows beyond the strip within columns
    i-1..i+1, reaches the far row, and if the far-row centre square is
    glued to both its horizontal neighbours it is also glued to the
    square between it and the strip.
    """
    _require_tree(p)
    if min(p.rows, p.cols) != 3:
        raise WrongBoundingSize(f"bounding size {p.rows}x{p.cols}")
    for t in range(8):
        q = p.transformed(t)
        if q.rows != 3:
            continue
        glued = _glued_pairs(q)
        for row, d in ((2, -1), (0, 1)):
            mid, top = row + d, row + 2 * d
            for run in _runs(q, row, glued):
                strip = {(row, c) for c in run}
                comps = _components(set(q.cells) - strip, glued)
                if len(comps) != 1:
                    continue
                comp = comps[0]
                joins = [(a, b) for a in comp for b in strip
                         if frozenset({a, b}) in glued]
                if len(joins) != 1:
                    continue
                a, b = joins[0]
                if a[0] != mid or a[1] != b[1]:
                    continue
                i = a[1]
                allowed = {(mid, i - 1), (mid, i), (mid, i + 1),
                           (top, i - 1), (top, i), (top, i + 1)}
                if not comp <= allowed:
                    continue
                if not any(cell[0] == top for cell in comp):
                    continue  # attachment must have height 2
                centre = (top, i)
                if (frozenset({centre, (top, i - 1)}) in glued
                        and frozenset({centre, (top, i + 1)}) in glued
                        and frozenset({centre, (mid, i)}) not in glued):
                    continue
                return True
    return False


# ----------------------------------------------- small-tree minimal sets

_MINIMAL_KEYS: dict[tuple[int, int], frozenset] = {}
_DESCENT: dict[str, bool] = {}


def _minimal_keys(bbox: tuple[int, int]) -> frozenset:
    if bbox not in _MINIMAL_KEYS:
        _MINIMAL_KEYS[bbox] = frozenset(
            serialize(q) for q in minimal_foldable_set(bbox))
    return _MINIMAL_KEYS[bbox]


def _foldable_by_descent(p: Polyomino) -> bool:
    """Membership of the leaf-removal downset in the minimal foldable
    sets: P is foldable iff it is minimal foldable itself or some leaf
    removal stays foldable."""
    key = serialize(canonical_form(p))
    hit = _DESCENT.get(key)
    if hit is not None:
        return hit
    result = False
    if len(p.cells) >= 6:
        h, w = sorted((p.rows, p.cols))
        if key in _minimal_keys((h, w)):
            result = True
        else:
            result = any(_foldable_by_descent(remove_leaf(p, leaf))
                         for leaf in _leaves(p))
    _DESCENT[key] = result
    return result


# ------------------------------------------------------------ tree verdict


def tree_dispatch(p: Polyomino) -> Verdict:
    _require_tree(p)
    h, w = sorted((p.rows, p.cols))
    if h == 1:
        return Verdict(NOT_FOLDABLE, _theorem(
            "strip-covers-four-faces",
            "A folding of a polyomino of bounding size 1xn covers at most "
            "4 faces of the cube.",
            {"bounding_size": [h, w]}))
    if h == 2:
        if w <= 3:
            return Verdict(NOT_FOLDABLE, _theorem(
                "no-net-fits-2x3",
                "A foldable polyomino contains at least 6 squares and no "
                "cube net fits into a 2x3 rectangle.",
                {"bounding_size": [h, w]}))
        in_a = is_class_A(p)
        cert = _theorem(
            "height-2-strip-classification",
            "A tree-shaped polyomino of bounding size 2xn (n >= 4) folds "
            "onto the cube if and only if it is not a strip with confined "
            "attachments (Class A).",
            {"bounding_size": [h, w], "class_A": in_a})
        return Verdict(NOT_FOLDABLE if in_a else FOLDABLE, cert)
    if h == 3:
        if w <= 4:
            if _foldable_by_descent(p):
                pf, _, _ = _solver_search(p, None)
                return Verdict(FOLDABLE, _pf_certificate(pf))
            return Verdict(NOT_FOLDABLE, {
                "kind": "obstruction",
                "method": "minimal-foldable-set descent",
                "detail": "no chain of leaf removals reaches a minimal "
                          "foldable tree shape",
                "bounding_size": [h, w]})
        in_b = is_class_B(p)
        cert = _theorem(
            "height-3-strip-classification",
            "A tree-shaped polyomino of bounding size 3xn (n >= 5) folds "
            "onto the cube if and only if it is not a strip with one "
            "confined height-2 attachment (Class B).",
            {"bounding_size": [h, w], "class_B": in_b})
        return Verdict(NOT_FOLDABLE if in_b else FOLDABLE, cert)
    # both dimensions at least 4
    if (h, w) == (4, 4) and serialize(canonical_form(p)) == serialize(
            canonical_form(UNFOLDABLE_4X4)):
        return Verdict(NOT_FOLDABLE, _theorem(
            "w-heptomino-unfoldable",
            "The W-shaped staircase heptomino is the only tree-shaped "
            "polyomino of bounding size at least 4x4 that does not fold "
            "onto the cube.",
            {"bounding_size": [4, 4], "is_w_heptomino": True}))
    name = "4x4-trees-fold" if (h, w) == (4, 4) else "large-trees-fold"
    return Verdict(FOLDABLE, _theorem(
        name,
        "Every tree-shaped polyomino of bounding size at least 4x4 folds "
        "onto the cube, except the W-shaped staircase heptomino.",
        {"bounding_size": [h, w], "is_w_heptomino": False}))


# ------------------------------------------------------------ valid corners


def _on_box(v, rows: int, cols: int) -> bool:
    return v[0] in (0, rows) or v[1] in (0, cols)


def valid_corners(p: Polyomino, v: tuple[int, int]) -> frozenset:
    """The bounding-box corners reachable first from the two boundary
    walks out of v: follow the boundary backwards to the box and take the
    next corner clockwise, and forwards to the box and take the next
    corner counterclockwise."""
    rows, cols = p.rows, p.cols
    if _on_box(v, rows, cols):
        raise VertexOnBoundingBox(f"{v} lies on the bounding box")
    cyc = boundary_components(p)[0].vertices[:-1]
    occurrences = [i for i, u in enumerate(cyc) if u == v]
    if not occurrences:
        raise ValueError(f"{v} is not on the outer boundary")
    total = 2 * (rows + cols)

    def perimeter(u):  # clockwise box parameter from the TL corner
        r, c = u
        if r == 0:
            return c
        if c == cols:
            return cols + r
        if r == rows:
            return cols + rows + (cols - c)
        return 2 * cols + rows + (rows - r)

    corner_at = {"TL": 0, "TR": cols, "BR": cols + rows,
                 "BL": 2 * cols + rows}
    found = set()
    n = len(cyc)
    for i in occurrences:
        j = i
        while not _on_box(cyc[j], rows, cols):
            j = (j - 1) % n
        t1 = perimeter(cyc[j])
        found.add(min(CORNERS, key=lambda k: (corner_at[k] - t1) % total))
        j = i
        while not _on_box(cyc[j], rows, cols):
            j = (j + 1) % n
        t2 = perimeter(cyc[j])
        found.add(min(CORNERS, key=lambda k: (t2 - corner_at[k]) % total))
    return frozenset(found)


# ---------------------------------------------------------- folding plans


_DIR_OF = {"N": N, "E": E, "S": S, "W": W}
_LETTER_OF = {N: "N", E: "E", S: "S", W: "W"}
_INVERSE_T = (0, 3, 2, 1, 4, 5, 6, 7)


def _transform_vertex(v, t: int, rows: int, cols: int):
    r, c = v
    if t >= 4:
        r, c = c, r
        rows, cols = cols, rows
        t -= 4
    for _ in range(t):
        r, c = c, rows - r
        rows, cols = cols, rows
    return (r, c)


def _transform_roll(rf: RollFold, t: int, rows: int, cols: int) -> RollFold:
    horizontal = rf.orientation == "H"
    pt = (rf.index, 0) if horizontal else (0, rf.index)
    qt = (rf.index, 1) if horizontal else (1, rf.index)
    a = _transform_vertex(pt, t, rows, cols)
    b = _transform_vertex(qt, t, rows, cols)
    if a[0] == b[0]:
        orientation, index = "H", a[0]
    else:
        orientation, index = "V", a[1]
    side = _LETTER_OF[transform_dir(_DIR_OF[rf.side], t)]
    span = None
    if rf.span is not None:
        vals = []
        for x in rf.span:
            cell = (rf.index - 1, x) if horizontal else (x, rf.index - 1)
            img = transform_cell(cell, t, rows, cols)
            vals.append(img[1] if orientation == "H" else img[0])
        span = (min(vals), max(vals))
    return RollFold(orientation, index, side, span)


def _positions_of(sil) -> dict:
    return {cell: pos for pos, stack in sil.items()
            for (cell, _, _) in stack}


def _tl_plan(q: Polyomino, v) -> Optional[FoldingPlan]:
    """Roll-fold plan flattening q into an L against the top-left corner.

    v is a boundary vertex with the top-left corner valid and both
    distances at least 3; the anchor square has v as its top-left corner.
    After rolling everything below and to the right of the anchor onto
    it, the sheet minus the squares stacked at the anchor position falls
    apart into a left and an upper flap, which are rolled into the
    anchor's row and column with pinched single-crease folds.
    """
    rv, cv = v
    rolls: list[RollFold] = []
    sil = _initial_silhouette(q)
    glued = _glued_pairs(q)

    def do(rf: RollFold) -> bool:
        nonlocal sil
        new = _apply_roll(q, sil, rf)
        if set(new) == set(sil):
            return False
        sil = new
        rolls.append(rf)
        return True

    while max(r for r, _ in sil) > rv:  # rows below the anchor roll up
        if not do(RollFold("H", max(r for r, _ in sil), "S")):
            return None
    while max(c for _, c in sil) > cv:  # columns right of it roll left
        if not do(RollFold("V", max(c for _, c in sil), "E")):
            return None

    anchor = (rv, cv)
    if anchor not in sil:
        return None
    s_cells = {cell for cell, _, _ in sil[anchor]}
    comps = _components(set(q.cells) - s_cells, glued)
    pos = _positions_of(sil)
    roll_down: list[set] = []
    roll_right: list[set] = []
    for comp in comps:
        if all(pos[x][0] == rv or pos[x][1] == cv for x in comp):
            continue  # already inside the target L
        is_left = any(pos[x] == (rv, cv - 1) for x in comp)
        is_upper = any(pos[x] == (rv - 1, cv) for x in comp)
        if is_left and not is_upper:
            roll_down.append(comp)
        elif is_upper and not is_left:
            roll_right.append(comp)
        else:
            return None

    def roll_flap(flap, horizontal: bool) -> bool:
        """Fold the flap into the anchor's row (or column), one pinched
        crease at a time; the chosen crease must move exactly the cells
        of one chunk so interleaved flaps at the same positions stay."""
        limit = rv if horizontal else cv
        axis = 0 if horizontal else 1
        while True:
            pos = _positions_of(sil)
            beyond = {x for x in flap if pos[x][axis] < limit}
            if not beyond:
                return True
            edge = min(pos[x][axis] for x in beyond)
            line = edge + 1
            frontier = sorted(x for x in beyond if pos[x][axis] == edge)
            chunk = {frontier[0]}
            stack = [frontier[0]]
            while stack:
                x = stack.pop()
                for y in frontier:
                    if y not in chunk and frozenset({x, y}) in glued:
                        chunk.add(y)
                        stack.append(y)
            seed_coords = sorted(
                pos[a][1 - axis] for a in chunk for b in q.cells
                if frozenset({a, b}) in glued and pos[b][axis] == line)
            moved = False
            for c in seed_coords:
                rf = RollFold("H" if horizontal else "V", line,
                              "N" if horizontal else "W", (c, c))
                new = _apply_roll(q, sil, rf)
                newpos = _positions_of(new)
                if {x for x in newpos if newpos[x] != pos[x]} == chunk:
                    sil_update(new, rf)
                    moved = True
                    break
            if not moved:
                return False

    def sil_update(new, rf):
        nonlocal sil
        sil = new
        rolls.append(rf)

    for comp in roll_down:
        if not roll_flap(comp, horizontal=True):
            return None
    for comp in roll_right:
        if not roll_flap(comp, horizontal=False):
            return None

    if any(p_[0] != rv and p_[1] != cv for p_ in sil):
        return None
    return FoldingPlan(tuple(rolls))


def simply_connected_plan(p: Polyomino) -> Optional[FoldingPlan]:
    """A verified roll-fold plan for a simply connected polyomino with a
    boundary vertex at distance at least 3 from one of its valid corners;
    None when no vertex qualifies or no candidate plan survives replay."""
    if not p.is_simply_connected():
        return None
    for t in range(8):
        q = p.transformed(t)
        tinv = _INVERSE_T[t]
        try:
            cyc = boundary_components(q)[0].vertices[:-1]
        except Exception:
            continue
        seen = set()
        for v in cyc:
            if v in seen or _on_box(v, q.rows, q.cols):
                continue
            seen.add(v)
            if v[0] < 3 or v[1] < 3:
                continue
            if "TL" not in valid_corners(q, v):
                continue
            try:
                plan_q = _tl_plan(q, v)
            except InvalidFoldLine:
                continue
            if plan_q is None:
                continue
            plan = FoldingPlan(tuple(
                _transform_roll(rf, tinv, q.rows, q.cols)
                for rf in plan_q.rolls))
            try:
                execute_plan(p, plan)
            except (InvalidFoldLine, WrapFailed):
                continue
            return plan
    return None


# ------------------------------------------------------------ solver core


def _solver_search(p: Polyomino, deadline: Optional[float]):
    """First realisable surjective pseudo-folding, mappings checked, and
    whether the deadline cut the search short."""
    checked = 0
    for m in enumerate_consistent_mappings(p, surjective_only=True,
                                           up_to_rotation=True):
        if deadline is not None and time.monotonic() > deadline:
            return None, checked, True
        checked += 1
        res = find_layer_map(m)
        if res.layer_map is not None:
            return PseudoFolding(p, m, res.layer_map), checked, False
    return None, checked, False


def _solver_with_obstructions(p: Polyomino, deadline: float) -> Verdict:
    """Exhaustive pseudo-folding search with topology screening for
    shapes outside every theorem's scope."""
    mappings = 0
    pfs = 0
    refuted = {"linking": 0, "knotted": 0, "self-intersection": 0}
    unknown = 0
    for m in enumerate_consistent_mappings(p, surjective_only=True,
                                           up_to_rotation=True):
        mappings += 1
        try:
            candidates = iter_layer_maps(m)
        except LimitExceeded:
            unknown += 1
            continue
        for layers in candidates:
            if time.monotonic() > deadline:
                return Verdict(UNKNOWN, {
                    "kind": "obstruction", "method": "budgeted search",
                    "mappings": mappings, "pseudo_foldings": pfs,
                    "refuted": refuted}, budget_exhausted=True)
            pfs += 1
            pf = PseudoFolding(p, m, layers)
            verdict = validity_verdict(pf)
            if verdict.kind == "Valid":
                return Verdict(FOLDABLE, _pf_certificate(pf))
            if verdict.kind == "Invalid":
                refuted[verdict.obstruction] += 1
            else:
                unknown += 1
    if unknown == 0:
        return Verdict(NOT_FOLDABLE, {
            "kind": "obstruction", "method": "exhaustive search",
            "detail": "every surjective pseudo-folding is refuted by a "
                      "self-intersection or link obstruction",
            "mappings": mappings, "pseudo_foldings": pfs,
            "refuted": refuted})
    return Verdict(UNKNOWN, {
        "kind": "obstruction", "method": "exhaustive search",
        "detail": "some pseudo-foldings pass every implemented "
                  "obstruction but carry no realisability proof",
        "mappings": mappings, "pseudo_foldings": pfs,
        "unscreened": unknown, "refuted": refuted})


# ------------------------------------------------------------- dispatcher


def classify(p: Polyomino, budget: float = 60.0) -> Verdict:
    """Decide foldability onto the cube, preferring theorem-backed
    answers and falling back to the exhaustive solver within budget."""
    deadline = time.monotonic() + budget
    holes = find_holes(p)

    if any(h.kind is HoleKind.NON_SIMPLE for h in holes):
        return Verdict(FOLDABLE, _theorem(
            "non-simple-hole-foldable",
            "The presence of a non-simple hole in a polyomino guarantees "
            "that it folds onto the cube.",
            {"holes": [h.kind.value for h in holes]},
            external=True))

    if p.is_rectangular() and len(holes) == 1:
        return Verdict(NOT_FOLDABLE, _theorem(
            "one-simple-hole-unfoldable",
            "A rectangular polyomino with a single simple hole and no "
            "other holes does not fold onto the cube.",
            {"hole": holes[0].kind.value}))

    if p.is_rectangular() and len(holes) >= 2 and all(
            h.kind is HoleKind.UNIT_SQUARE for h in holes):
        pair = next(((i, j) for i in range(len(holes))
                     for j in range(i + 1, len(holes))
                     if holes_cooperate(p, holes[i], holes[j])), None)
        statement = ("A rectangular polyomino whose holes are all unit "
                     "squares folds onto the cube if and only if two of "
                     "the holes cooperate.")
        if pair is not None:
            cert = _theorem(
                "cooperating-unit-holes", statement,
                {"cooperating_pair": [sorted(holes[k].missing_cells)[0]
                                      for k in pair]})
            global _HOLE_CERTS
            if _HOLE_CERTS is None:
                _HOLE_CERTS = stored_hole_certificates()
            stored = _HOLE_CERTS.get(serialize(canonical_form(p)))
            if stored is not None:
                cert["pseudo_folding"] = stored
            return Verdict(FOLDABLE, cert)
        return Verdict(NOT_FOLDABLE, _theorem(
            "cooperating-unit-holes", statement,
            {"cooperating_pair": None,
             "holes": [sorted(h.missing_cells)[0] for h in holes]}))

    if p.is_tree_shaped():
        return tree_dispatch(p)

    if p.is_simply_connected():
        plan = simply_connected_plan(p)
        if plan is not None:
            return Verdict(FOLDABLE, {"kind": "plan",
                                      "plan": plan.to_text()})
        pf, checked, timed_out = _solver_search(p, deadline)
        if pf is not None:
            return Verdict(FOLDABLE, _pf_certificate(pf))
        if timed_out:
            return Verdict(UNKNOWN, {
                "kind": "obstruction", "method": "budgeted search",
                "mappings": checked}, budget_exhausted=True)
        return Verdict(NOT_FOLDABLE, {
            "kind": "obstruction", "method": "exhaustive search",
            "detail": "no surjective consistent mapping admits a "
                      "violation-free layer assignment; for a simply "
                      "connected shape this decides foldability",
            "mappings": checked})

    return _solver_with_obstructions(p, deadline)
