"""Layer maps, self-intersection checking, and folding-plan execution.

A layer map assigns to every cell a positive integer: its position in the
stack of cells covering the same cube face, with layer 1 touching the face.
A consistent mapping plus a layer map is a pseudo-folding.

Self-intersections are detected with one uniform constraint model.  For
each cube edge we place all incident polyomino edges on a terminal line:
the lower-numbered face contributes terminals at coordinate ``-layer``
(so deeper layers sit further out) and the higher-numbered face at
``+layer``.  Every interior polyomino edge becomes a chord connecting its
two terminals; a quarter fold connects opposite sides of the line, a half
fold connects two terminals on the same side.  Two edges collide exactly
when their chords cross, i.e. when their terminal intervals strictly
interleave.  This reproduces the three classical collision types (two
quarter folds out of order; a quarter fold caught inside a half fold; two
interleaved half folds) and shows that half folds on opposite faces never
conflict.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .grid import Polyomino, DIR_VECTORS, N, E, S, W, from_cells, parse, serialize
from .cube import (
    ConsistentMapping,
    INITIAL_PLACEMENT,
    Placement,
    dir_face,
    enumerate_consistent_mappings,
    flip,
    mapping_from_text,
    mapping_to_text,
    roll,
)

DEFAULT_NODE_LIMIT = 10**8


class LimitExceeded(Exception):
    """The backtracking search hit its node budget before finishing."""


@dataclass(frozen=True)
class Violation:
    cube_edge: frozenset[int]
    edge1: tuple[tuple[int, int], tuple[int, int]]
    edge2: tuple[tuple[int, int], tuple[int, int]]
    vtype: int  # 1, 2 or 3


@dataclass
class PseudoFolding:
    polyomino: Polyomino
    mapping: ConsistentMapping
    layers: dict[tuple[int, int], int]

    def __post_init__(self):
        mult = self.mapping.face_multiplicities()
        seen: dict[int, set[int]] = {f: set() for f in mult}
        for cell in self.polyomino.cells:
            f = self.mapping.covered_face(cell)
            l = self.layers[cell]
            if not 1 <= l <= mult[f] or l in seen[f]:
                raise ValueError(f"bad layer {l} for cell {cell} on face {f}")
            seen[f].add(l)

    def layer(self, cell) -> int:
        return self.layers[cell]


def fold_angle(m: ConsistentMapping, a, b) -> str:
    """"Half" if the glued neighbours a, b cover the same face else
    "Quarter"."""
    return m.fold_angle(a, b)


# ------------------------------------------------------------------ chords

@dataclass(frozen=True)
class Chord:
    edge: tuple[tuple[int, int], tuple[int, int]]
    lo: int
    hi: int
    half: bool


@dataclass
class EdgeChordDiagram:
    """All polyomino edges mapped to one cube edge.

    Terminals of the lower face label sit at coordinate -layer, terminals
    of the higher at +layer.  ``loose`` holds terminals of boundary edges,
    which have no chord.
    """
    cube_edge: frozenset[int]
    chords: list[Chord] = field(default_factory=list)
    loose: list[int] = field(default_factory=list)


def _terminal(cube_edge: frozenset[int], face: int, layer: int) -> int:
    return -layer if face == min(cube_edge) else layer


def build_chord_diagrams(pf: PseudoFolding) -> dict[frozenset[int], EdgeChordDiagram]:
    p = pf.polyomino
    m = pf.mapping
    diags: dict[frozenset[int], EdgeChordDiagram] = {}

    def diagram(ce):
        if ce not in diags:
            diags[ce] = EdgeChordDiagram(ce)
        return diags[ce]

    for cell in p.sorted_cells():
        pl = m.placement(cell)
        for d in (N, E, S, W):
            nb = p.neighbor(cell, d)
            ce = frozenset({pl[0], dir_face(pl, d)})
            t = _terminal(ce, pl[0], pf.layers[cell])
            if nb is None or nb not in p.cells or p.is_cut(cell, nb):
                diagram(ce).loose.append(t)
            elif d in (E, S):  # interior edge, record once
                u = _terminal(ce, m.covered_face(nb), pf.layers[nb])
                diagram(ce).chords.append(Chord(
                    (cell, nb), min(t, u), max(t, u), (t < 0) == (u < 0)))
    for dg in diags.values():
        dg.loose.sort()
    return diags


def chords_cross(a: Chord, b: Chord) -> bool:
    return (a.lo < b.lo < a.hi) != (a.lo < b.hi < a.hi)


def _violation_type(a: Chord, b: Chord) -> int:
    if not a.half and not b.half:
        return 1
    if a.half and b.half:
        return 3
    return 2


def check_self_intersections(pf: PseudoFolding) -> list[Violation]:
    out = []
    for ce, dg in sorted(build_chord_diagrams(pf).items(),
                         key=lambda kv: sorted(kv[0])):
        for a, b in itertools.combinations(dg.chords, 2):
            if chords_cross(a, b):
                out.append(Violation(ce, a.edge, b.edge,
                                     _violation_type(a, b)))
    return out


# ------------------------------------------------------------ layer search

@dataclass
class SearchResult:
    layer_map: Optional[dict]
    exhausted: bool
    nodes: int


def _search(m: ConsistentMapping, limit: int,
            find_one: bool) -> tuple[list[dict], bool, int]:
    """Backtracking over layer assignments with incremental chord checks.

    Cells are processed in breadth-first order through the glued
    adjacency graph and each one is *inserted* into a gap of its face's
    current stack.  Crossing constraints only depend on the relative
    order of cells within each face, so every relative order is explored
    exactly once and violations prune the search as soon as the second
    endpoint of an edge is placed.
    """
    p = m.polyomino
    cells = p.sorted_cells()
    edges_of: dict[tuple[int, int], list] = {c: [] for c in cells}
    for a in cells:
        for d in (E, S):
            b = p.neighbor(a, d)
            if b is not None and p.is_glued(a, b):
                pa = m.placement(a)
                ce = frozenset({pa[0], dir_face(pa, d)})
                edges_of[a].append((b, ce))
                edges_of[b].append((a, ce))

    # breadth-first processing order so every later cell touches an
    # earlier one (single-cell polyominoes and detached components are
    # rejected by Polyomino validation)
    order = [cells[0]]
    seen = {cells[0]}
    i = 0
    while i < len(order):
        for b, _ in edges_of[order[i]]:
            if b not in seen:
                seen.add(b)
                order.append(b)
        i += 1

    stacks: dict[int, list] = {}
    placed: dict[tuple[int, int], int] = {}  # cell -> covered face
    chords: dict[frozenset[int], list] = {}  # cube edge -> [(a, b), ...]
    solutions: list[dict] = []
    nodes = 0
    aborted = False

    def terminal(ce, cell):
        f = placed[cell]
        l = stacks[f].index(cell) + 1
        return -l if f == min(ce) else l

    def crossing(ce, e1, e2) -> bool:
        a1, b1 = sorted(terminal(ce, c) for c in e1)
        a2, b2 = sorted(terminal(ce, c) for c in e2)
        return (a1 < a2 < b1) != (a1 < b2 < b1)

    def dfs(idx: int):
        nonlocal nodes, aborted
        if idx == len(order):
            layers = {}
            for f, st in stacks.items():
                for l, c in enumerate(st, 1):
                    layers[c] = l
            solutions.append(layers)
            return
        cell = order[idx]
        f = m.covered_face(cell)
        stack = stacks.setdefault(f, [])
        new_edges = [(b, ce) for b, ce in edges_of[cell] if b in placed]
        for gap in range(len(stack) + 1):
            nodes += 1
            if nodes > limit:
                aborted = True
                return
            stack.insert(gap, cell)
            placed[cell] = f
            ok = True
            for b, ce in new_edges:
                e = (cell, b)
                for other in chords.get(ce, ()):
                    if crossing(ce, e, other):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for b, ce in new_edges:
                    chords.setdefault(ce, []).append((cell, b))
                dfs(idx + 1)
                for b, ce in new_edges:
                    chords[ce].pop()
            del placed[cell]
            stack.pop(gap)
            if aborted or (find_one and solutions):
                return

    dfs(0)
    return solutions, not aborted, nodes


def find_layer_map(m: ConsistentMapping,
                   limit: int = DEFAULT_NODE_LIMIT) -> SearchResult:
    sols, exhausted, nodes = _search(m, limit, find_one=True)
    return SearchResult(sols[0] if sols else None, exhausted, nodes)


def iter_layer_maps(m: ConsistentMapping,
                    limit: int = DEFAULT_NODE_LIMIT) -> list[dict]:
    sols, exhausted, _ = _search(m, limit, find_one=False)
    if not exhausted:
        raise LimitExceeded(f"node limit {limit} hit")
    return sols


def count_layer_maps(m: ConsistentMapping,
                     limit: int = DEFAULT_NODE_LIMIT) -> int:
    return len(iter_layer_maps(m, limit))


# ---------------------------------------------------------- stamp folding

def strip_mapping(k: int, base: Placement = INITIAL_PLACEMENT
                  ) -> ConsistentMapping:
    """The 1 x k strip with every cell folded flat onto one face."""
    p = from_cells([(0, i) for i in range(k)])
    pls = [base if i % 2 == 0 else flip(base, E) for i in range(k)]
    return ConsistentMapping(p, tuple(pls))


def stamp_fold_count(k: int, maximum: int = 12) -> int:
    if not 1 <= k <= maximum:
        raise ValueError(f"k must be in 1..{maximum}")
    return count_layer_maps(strip_mapping(k))


# -------------------------------------------------------- serialisation


def pseudo_folding_to_text(pf: PseudoFolding) -> str:
    """Polyomino, mapping grid and layer grid in one text block."""
    p = pf.polyomino
    out = [serialize(p).rstrip("\n"), "mapping:",
           mapping_to_text(pf.mapping).rstrip("\n"), "layers:"]
    for r in range(p.rows):
        out.append(" ".join(
            str(pf.layers[(r, c)]) if (r, c) in p.cells else "."
            for c in range(p.cols)))
    return "\n".join(out) + "\n"


def pseudo_folding_from_text(text: str) -> PseudoFolding:
    head, rest = text.split("mapping:\n", 1)
    map_text, layer_text = rest.split("layers:\n", 1)
    p = parse(head)
    m = mapping_from_text(p, map_text)
    layers = {}
    for r, line in enumerate(layer_text.strip().split("\n")):
        for c, tok in enumerate(line.split()):
            if tok != ".":
                layers[(r, c)] = int(tok)
    return PseudoFolding(p, m, layers)


# ------------------------------------------------------------ folding plans

class InvalidFoldLine(Exception):
    pass


class WrapFailed(Exception):
    pass


@dataclass(frozen=True)
class RollFold:
    """A 180-degree fold of part of the (possibly stacked) silhouette.

    orientation "H": the crease is the horizontal grid line between rows
    index-1 and index; side "S" folds everything below it up (and "N" the
    mirror case).  orientation "V": the line between columns index-1 and
    index, with sides "E"/"W".  ``span`` optionally restricts the crease
    to an inclusive range of columns (for "H") or rows (for "V"); only
    connectivity through the restricted crease is folded over.
    """
    orientation: str
    index: int
    side: str
    span: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class FoldingPlan:
    rolls: tuple[RollFold, ...]

    def to_text(self) -> str:
        lines = []
        for r in self.rolls:
            parts = ["ROLL", r.orientation, str(r.index), r.side]
            if r.span is not None:
                parts += [str(r.span[0]), str(r.span[1])]
            lines.append(" ".join(parts))
        lines.append("WRAP")
        return "\n".join(lines)

    @staticmethod
    def from_text(text: str) -> "FoldingPlan":
        rolls = []
        saw_wrap = False
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if saw_wrap:
                raise ValueError("content after WRAP")
            if line == "WRAP":
                saw_wrap = True
                continue
            parts = line.split()
            if parts[0] != "ROLL" or len(parts) not in (4, 6):
                raise ValueError(f"bad plan line: {line}")
            span = None
            if len(parts) == 6:
                span = (int(parts[4]), int(parts[5]))
            rolls.append(RollFold(parts[1], int(parts[2]), parts[3], span))
        if not saw_wrap:
            raise ValueError("plan must end with WRAP")
        return FoldingPlan(tuple(rolls))


# A silhouette is a dict position -> stack of (cell, hpar, vpar), bottom
# first.  hpar/vpar record how often the cell has been reflected across
# horizontal/vertical lines (mod 2).

def _initial_silhouette(p: Polyomino):
    return {c: [(c, 0, 0)] for c in p.sorted_cells()}


def _apply_roll(p: Polyomino, sil, fold: RollFold):
    """Fold the flaps of the sheet reached through the chosen creases.

    The creases are the glued edges of p whose squares currently sit on
    opposite sides of the fold line (restricted to the span, when given).
    The moving part consists of the squares on the named side that are
    glued-connected to a crease without crossing the line, so a pinched
    fold can move one flap while other flaps stacked at the same
    positions stay put.
    """
    if fold.orientation not in ("H", "V") or fold.side not in "NESW":
        raise InvalidFoldLine(f"bad fold {fold}")
    horizontal = fold.orientation == "H"
    k = fold.index

    def across(pos):
        return pos[0] >= k if horizontal else pos[1] >= k

    moving_sign = fold.side in ("S", "E")

    pos_of = {cell: pos for pos, stack in sil.items()
              for (cell, _, _) in stack}
    adj = {cell: [] for cell in pos_of}
    seeds = set()
    for a, b in p.dual_edges():
        adj[a].append(b)
        adj[b].append(a)
        pa, pb = pos_of[a], pos_of[b]
        if across(pa) == across(pb):
            continue
        cross = pa[1] if horizontal else pa[0]
        if fold.span is not None and not (
                fold.span[0] <= cross <= fold.span[1]):
            continue
        seeds.add(a if across(pa) == moving_sign else b)
    if not seeds:
        raise InvalidFoldLine(f"fold line touches nothing: {fold}")

    moving = set()
    stack = list(seeds)
    while stack:
        cell = stack.pop()
        if cell in moving:
            continue
        moving.add(cell)
        stack.extend(nb for nb in adj[cell]
                     if across(pos_of[nb]) == moving_sign)

    out = {}
    for pos, entries in sil.items():
        r, c = pos
        tgt = (2 * k - 1 - r, c) if horizontal else (r, 2 * k - 1 - c)
        for cell, h, v in entries:
            if cell in moving:
                out.setdefault(tgt, []).append(
                    (cell, h ^ horizontal, v ^ (not horizontal)))
            else:
                out.setdefault(pos, []).append((cell, h, v))
    return out


def _entry_placement(q: Placement, h: int, v: int) -> Placement:
    face, fn, fe = q
    return (face, 7 - fn if h else fn, 7 - fe if v else fe)


def execute_plan(p: Polyomino, plan: FoldingPlan,
                 limit: int = DEFAULT_NODE_LIMIT) -> PseudoFolding:
    sil = _initial_silhouette(p)
    for fold in plan.rolls:
        sil = _apply_roll(p, sil, fold)

    residual = from_cells(sorted(sil))
    rows = {pos[0] for pos in sil}
    cols = {pos[1] for pos in sil}
    off = (min(rows), min(cols))
    wraps = enumerate_consistent_mappings(
        residual, surjective_only=True, up_to_rotation=True,
        quarter_only=True)
    for w in wraps:
        placements = {}
        for pos, stack in sil.items():
            q = w.placement((pos[0] - off[0], pos[1] - off[1]))
            for cell, h, v in stack:
                placements[cell] = _entry_placement(q, h, v)
        try:
            m = ConsistentMapping(
                p, tuple(placements[c] for c in p.sorted_cells()))
        except ValueError:
            continue
        if not _mapping_consistent(m):
            continue
        res = find_layer_map(m, limit)
        if res.layer_map is not None:
            return PseudoFolding(p, m, res.layer_map)
    raise WrapFailed("no surjective wrap of the residual silhouette "
                     "yields a realisable folding")


def _mapping_consistent(m: ConsistentMapping) -> bool:
    p = m.polyomino
    for a in p.sorted_cells():
        for d in (E, S):
            b = p.neighbor(a, d)
            if b is not None and p.is_glued(a, b):
                pa = m.placement(a)
                if m.placement(b) not in (roll(pa, d), flip(pa, d)):
                    return False
    return True
