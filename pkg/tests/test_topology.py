import random

from cubefold.layers import PseudoFolding, check_self_intersections, iter_layer_maps
from cubefold.topology import (
    BoundaryLink,
    boundary_link,
    embed,
    fox3_nontrivial,
    gauss_code,
    linking_number,
    validity_verdict,
)

from helpers import fixture_mapping, fixture_pf, random_pseudo_folding


def square(z):
    return [(2, 2, z), (-2, 2, z), (-2, -2, z), (2, -2, z)]


def test_linking_number_split_circles():
    link = BoundaryLink([square(0), square(4)])
    assert linking_number(link, 0, 1) == 0


def test_linking_number_hopf_link():
    a = [(1, 1, 0), (-1, 1, 0), (-1, -1, 0), (1, -1, 0)]
    b = [(0, 0, 1), (2, 0, 1), (2, 0, -1), (0, 0, -1)]
    link = BoundaryLink([a, b])
    assert abs(linking_number(link, 0, 1)) == 1


def test_fox3_unknot_trivial():
    code = gauss_code(square(0))
    assert not fox3_nontrivial(code)


def test_boundary_link_text_roundtrip():
    link = BoundaryLink([square(0), square(3)])
    again = BoundaryLink.from_text(link.to_text())
    assert again.components == link.components


def test_embed_clean_pf_is_disjoint():
    m = fixture_mapping("cross_net")
    pf = PseudoFolding(m.polyomino, m, {c: 1 for c in m.polyomino.cells})
    assert embed(pf).disjoint


def test_embed_force_flags_violating_pf():
    rng = random.Random(5)
    saw_bad = False
    for _ in range(200):
        pf = random_pseudo_folding(rng)
        violations = check_self_intersections(pf)
        es = embed(pf, force=True)
        assert es.disjoint == (not violations)
        saw_bad = saw_bad or bool(violations)
    assert saw_bad


def test_simply_connected_zero_violation_is_valid():
    m = fixture_mapping("cross_net")
    pf = PseudoFolding(m.polyomino, m, {c: 1 for c in m.polyomino.cells})
    assert validity_verdict(pf).kind == "Valid"


def test_twisted_ring_fixture_invalid():
    pf = fixture_pf("twisted_ring")
    v = validity_verdict(pf)
    assert v.kind == "Invalid"


def test_knotted_frame_boundary_is_knotted():
    pf = fixture_pf("knotted_frame")
    assert check_self_intersections(pf) == []
    link = boundary_link(embed(pf))
    assert len(link.components) == 2
    assert fox3_nontrivial(gauss_code(link.components[0]))


def test_twist_fixture_has_linked_verdicts_and_valid_ones():
    m = fixture_mapping("twist")
    kinds = {"Invalid": 0, "other": 0}
    for lm in iter_layer_maps(m):
        v = validity_verdict(PseudoFolding(m.polyomino, m, lm))
        if v.kind == "Invalid":
            assert v.obstruction == "linking"
            kinds["Invalid"] += 1
        else:
            kinds["other"] += 1
    assert kinds["Invalid"] == 12 and kinds["other"] == 4
