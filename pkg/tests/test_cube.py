import itertools

from cubefold import cube
from cubefold.cube import (
    INITIAL_PLACEMENT,
    PLACEMENTS,
    ROTATIONS,
    ConsistentMapping,
    cube_edge,
    dir_face,
    enumerate_consistent_mappings,
    flip,
    handedness,
    is_surjective,
    mapping_from_text,
    mapping_to_text,
    roll,
    rotate_placement,
)
from cubefold.grid import E, N, S, W, from_cells

from helpers import fixture_mapping, fixture_polyomino


def test_placement_count_and_handedness():
    assert len(PLACEMENTS) == 48
    assert sum(1 for p in PLACEMENTS if handedness(p) > 0) == 24


def test_roll_four_times_identity():
    for p in PLACEMENTS:
        for d in range(4):
            q = p
            for _ in range(4):
                q = roll(q, d)
            assert q == p


def test_flip_preserves_face_roll_changes_it():
    for p in PLACEMENTS:
        for d in range(4):
            assert flip(p, d)[0] == p[0]
            assert roll(p, d)[0] == dir_face(p, d)


def test_roll_preserves_flip_reverses_handedness():
    for p in PLACEMENTS:
        for d in range(4):
            assert handedness(roll(p, d)) == handedness(p)
            assert handedness(flip(p, d)) == -handedness(p)


def test_neighbors_share_cube_edge():
    for p in PLACEMENTS:
        for d in range(4):
            ce = cube_edge(p, d)
            back = (d + 2) % 4
            assert cube_edge(roll(p, d), back) == ce
            assert cube_edge(flip(p, d), back) == ce


def test_rotations_form_group_of_24():
    assert len(ROTATIONS) == 24
    assert len({tuple(r) for r in ROTATIONS}) == 24
    images = {tuple(rotate_placement(INITIAL_PLACEMENT, r)) for r in ROTATIONS}
    assert len(images) == 24


def test_domino_mappings():
    p = from_cells([(0, 0), (0, 1)], [])
    ms = list(enumerate_consistent_mappings(p, surjective_only=False,
                                            up_to_rotation=True))
    # root fixed: the second cell is rolled east or flipped east
    assert len(ms) == 2
    roots = {m.placement((0, 0)) for m in ms}
    assert len(roots) == 1
    root = next(iter(roots))
    assert {m.placement((0, 1)) for m in ms} == {roll(root, E), flip(root, E)}


def test_full_enumeration_is_rotation_closed():
    p = from_cells([(0, 0), (0, 1), (1, 0)], [])
    fixed = list(enumerate_consistent_mappings(p, surjective_only=False,
                                               up_to_rotation=True))
    full = list(enumerate_consistent_mappings(p, surjective_only=False,
                                              up_to_rotation=False))
    assert len(full) == 24 * len(fixed)


def test_cross_net_fixture_surjective_once():
    m = fixture_mapping("cross_net")
    assert is_surjective(m)
    assert all(v == 1 for v in m.face_multiplicities().values())


def test_fold_angle():
    m = fixture_mapping("twist")
    assert m.fold_angle((3, 1), (3, 2)) == "Half"
    assert m.fold_angle((0, 0), (1, 0)) == "Quarter"


def test_mapping_text_roundtrip():
    m = fixture_mapping("twist")
    text = mapping_to_text(m)
    again = mapping_from_text(m.polyomino, text)
    assert again.placements == m.placements


def test_count_up_to_isomorphism_collapses_rotations():
    p = fixture_polyomino("cross_net")
    full = list(enumerate_consistent_mappings(p, surjective_only=True,
                                              up_to_rotation=False))
    assert cube.count_up_to_isomorphism(full, include_reflections=True) == 1


def test_hole_triviality_on_ring_fixtures():
    from cubefold.grid import find_holes

    for name, trivial in (("unit_hole_ring_quarter", False),
                          ("unit_hole_ring_half", False)):
        m = fixture_mapping(name)
        h = find_holes(m.polyomino)[0]
        assert cube.hole_restriction_trivial(m, h) == trivial


def test_unit_hole_type():
    from cubefold.grid import find_holes

    m = fixture_mapping("unit_hole_ring_half")
    h = find_holes(m.polyomino)[0]
    t = cube.unit_hole_type(m, h)
    assert t in {1, 2, 3, 4, 5, 6}
