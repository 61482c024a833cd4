"""Shared test helpers: fixture access, random shape and pseudo-folding
generators, and an independent pairwise fold-collision check used to
cross-validate the chord-diagram model."""

import itertools
import random
from collections import defaultdict

from cubefold.cube import (
    ConsistentMapping,
    PLACEMENTS,
    flip,
    roll,
)
from cubefold.grid import DIR_VECTORS, E, S, Polyomino, boundary_components, from_cells, parse
from cubefold.layers import PseudoFolding

from fixture_data import FIXTURES


def fixture_polyomino(name: str) -> Polyomino:
    return parse(FIXTURES[name]["shape"])


def fixture_mapping(name: str) -> ConsistentMapping:
    p = fixture_polyomino(name)
    placements = tuple(FIXTURES[name]["mapping"][c] for c in p.sorted_cells())
    return ConsistentMapping(p, placements)


def fixture_pf(name: str) -> PseudoFolding:
    m = fixture_mapping(name)
    return PseudoFolding(m.polyomino, m, dict(FIXTURES[name]["layers"]))


# --------------------------------------------------------- random shapes


def random_simply_connected(rng: random.Random, n: int) -> Polyomino:
    """Random edge-connected shape of ~n cells with any enclosed holes
    filled in, so the result is simply connected and slit-free."""
    cells = {(0, 0)}
    while len(cells) < n:
        r, c = rng.choice(sorted(cells))
        cells.add(rng.choice([(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)]))
    p = from_cells(cells, [])
    while not p.is_simply_connected():
        stack = [(-1, -1)]
        seen = {(-1, -1)}
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in seen:
                    continue
                if -1 <= nb[0] <= p.rows and -1 <= nb[1] <= p.cols and nb not in p.cells:
                    seen.add(nb)
                    stack.append(nb)
        full = {(r, c) for r in range(p.rows) for c in range(p.cols)}
        p = from_cells(set(p.cells) | (full - set(p.cells) - seen), [])
    return p


def has_remote_boundary_vertex(p: Polyomino) -> bool:
    """True when some boundary vertex off the bounding box admits a valid
    corner at lattice distance >= 3 in both coordinates."""
    from cubefold.classify import _on_box, valid_corners

    corner_at = {
        "TL": (0, 0),
        "TR": (0, p.cols),
        "BR": (p.rows, p.cols),
        "BL": (p.rows, 0),
    }
    cyc = boundary_components(p)[0].vertices[:-1]
    for v in set(cyc):
        if _on_box(v, p.rows, p.cols):
            continue
        for k in valid_corners(p, v):
            cr, cc = corner_at[k]
            if abs(v[0] - cr) >= 3 and abs(v[1] - cc) >= 3:
                return True
    return False


# --------------------------------------------------- random pseudo-foldings


def random_pseudo_folding(rng: random.Random, max_cells: int = 12) -> PseudoFolding:
    """Random pseudo-folding: random shape, random spanning-tree blueprint
    (each crease a random quarter or half fold), inconsistent non-tree
    adjacencies turned into slits, and random per-face layer orders."""
    n = rng.randint(2, max_cells)
    cells = {(0, 0)}
    while len(cells) < n:
        r, c = rng.choice(sorted(cells))
        d = rng.randrange(4)
        dr, dc = DIR_VECTORS[d]
        cells.add((r + dr, c + dc))
    cells = sorted(cells)
    cellset = set(cells)
    adj = defaultdict(list)
    for (r, c) in cells:
        for d in (E, S):
            dr, dc = DIR_VECTORS[d]
            nb = (r + dr, c + dc)
            if nb in cellset:
                adj[(r, c)].append(nb)
                adj[nb].append((r, c))
    root = cells[0]
    placement = {root: rng.choice(PLACEMENTS)}
    seen = {root}
    frontier = [root]
    tree_edges = set()
    while frontier:
        x = frontier.pop(rng.randrange(len(frontier)))
        for y in rng.sample(adj[x], len(adj[x])):
            if y in seen:
                continue
            seen.add(y)
            d = next(d for d in range(4)
                     if (x[0] + DIR_VECTORS[d][0], x[1] + DIR_VECTORS[d][1]) == y)
            placement[y] = rng.choice([roll, flip])(placement[x], d)
            tree_edges.add(frozenset({x, y}))
            frontier.append(y)
    cuts = []
    for (r, c) in cells:
        for o, d in (("H", S), ("V", E)):
            dr, dc = DIR_VECTORS[d]
            nb = (r + dr, c + dc)
            if nb not in cellset or frozenset({(r, c), nb}) in tree_edges:
                continue
            if placement[nb] in (roll(placement[(r, c)], d), flip(placement[(r, c)], d)):
                continue
            cuts.append((o, r, c))
    p = from_cells(cells, cuts)
    dr = min(r for r, _ in cells)
    dc = min(c for _, c in cells)
    m = ConsistentMapping(
        p, tuple(placement[(r + dr, c + dc)] for (r, c) in p.sorted_cells()))
    byface = defaultdict(list)
    for cell in p.sorted_cells():
        byface[m.covered_face(cell)].append(cell)
    layers = {}
    for face, cs in byface.items():
        perm = list(range(1, len(cs) + 1))
        rng.shuffle(perm)
        for cell, l in zip(cs, perm):
            layers[cell] = l
    return PseudoFolding(p, m, layers)


# ------------------------------------------- independent collision check


def _folds_by_cube_edge(pf: PseudoFolding):
    """Group the interior creases by the cube edge they fold around.

    Each fold is reported as ("Q", layer_on_lower_face, layer_on_higher_face)
    or ("H", common_face, low_layer, high_layer)."""
    p = pf.polyomino
    m = pf.mapping
    folds = defaultdict(list)
    for a in p.sorted_cells():
        for d in (E, S):
            b = p.neighbor(a, d)
            if b is None or b not in p.cells or p.is_cut(a, b):
                continue
            ce = m.edge_cube_edge(a, b)
            fa, fb = m.covered_face(a), m.covered_face(b)
            la, lb = pf.layers[a], pf.layers[b]
            if fa == fb:
                folds[ce].append(("H", fa, min(la, lb), max(la, lb)))
            else:
                if fa != min(ce):
                    fa, fb, la, lb = fb, fa, lb, la
                folds[ce].append(("Q", la, lb))
    return folds


def _pair_collides(x, y, lo_face: int) -> bool:
    if x[0] == "Q" and y[0] == "Q":
        # two quarter folds collide when their stacking orders disagree
        return (x[1] < y[1]) != (x[2] < y[2])
    if x[0] == "H" and y[0] == "H":
        # half folds on opposite faces never collide; on the same face
        # they collide when the layer intervals strictly interleave
        if x[1] != y[1]:
            return False
        inside = sum(1 for l in (y[2], y[3]) if x[2] < l < x[3])
        return inside == 1
    if x[0] == "H":
        x, y = y, x
    # quarter fold x vs half fold y: collide when the quarter fold's layer
    # on the half fold's face lies strictly between the half fold's layers
    l = x[1] if y[1] == lo_face else x[2]
    return y[2] < l < y[3]


def direct_collision_check(pf: PseudoFolding) -> bool:
    """True when the pseudo-folding has no pairwise fold collision.

    Case analysis on the three classical collision types, written without
    the chord-diagram encoding."""
    for ce, folds in _folds_by_cube_edge(pf).items():
        lo = min(ce)
        for x, y in itertools.combinations(folds, 2):
            if _pair_collides(x, y, lo):
                return False
    return True
