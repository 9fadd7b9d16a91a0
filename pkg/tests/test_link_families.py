import math

import pytest

from cusplink.finite_field import field_of_order
from cusplink.link_families import (
    EXAMPLE_BRAID,
    BraidWord,
    braid_permutation,
    chain_link,
    cube_edge_link,
    cube_link,
    cyclic_braid_closure,
    helical_link,
    icosahedral_link,
    polygon_geometry,
    polygon_radii,
)
from cusplink.perm_action import group_closure, is_k_transitive


def all_blueprints():
    return [
        chain_link(5, 2),
        chain_link(6, 0),
        cyclic_braid_closure(EXAMPLE_BRAID, 1),
        cyclic_braid_closure(BraidWord(2, (1,)), 1),
        cube_link(),
        cube_edge_link(),
        icosahedral_link(),
        helical_link(field_of_order(5))[0],
    ]


# ---------------------------------------------------------------------------
# shared invariants


def test_linking_matrices_symmetric_zero_diagonal():
    for bp in all_blueprints():
        matrix = bp.linking_matrix
        if matrix is None:
            continue
        n = bp.n_components
        for i in range(n):
            assert matrix[i][i] == 0
            for j in range(n):
                assert matrix[i][j] == matrix[j][i]


def test_generators_preserve_linking():
    for bp in all_blueprints():
        matrix = bp.linking_matrix
        if matrix is None:
            continue
        for g in bp.symmetry_generators:
            for i in range(bp.n_components):
                for j in range(bp.n_components):
                    assert matrix[g(i)][g(j)] == matrix[i][j]


def test_json_export_shape():
    payload = chain_link(5, 2).to_json_dict()
    assert payload["family"] == "chain"
    assert payload["ambient"] == "S3"
    assert payload["n_components"] == 5
    assert payload["hyperbolicity"]["status"] == "asserted_by_paper"
    assert payload["linking"][0][1] == 1
    helical_payload = helical_link(field_of_order(5))[0].to_json_dict()
    assert helical_payload["linking"] == "complete"
    assert helical_payload["ambient"] == "SxS1"


# ---------------------------------------------------------------------------
# chains


def test_chain_basic():
    bp = chain_link(6, 0)
    assert bp.n_components == 6
    assert bp.symmetry_order == 6
    assert bp.transitivity_degree == 1
    assert bp.hyperbolicity.status == "asserted_by_paper"


def test_chain_small_is_unknown():
    for t in (-2, 0, 5):
        assert chain_link(3, t).hyperbolicity.status == "unknown"
    assert chain_link(4, 0).hyperbolicity.status == "unknown"


def test_chain_neighbor_matrix():
    bp = chain_link(5, 2)
    expected = [
        [0, 1, 0, 0, 1],
        [1, 0, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1],
        [1, 0, 0, 1, 0],
    ]
    assert [list(row) for row in bp.linking_matrix] == expected
    negative = chain_link(5, -1)
    assert negative.linking_matrix[0][1] == -1


@pytest.mark.parametrize("n", [3, 5, 6, 7])
def test_chain_cyclic_action_is_exactly_one_transitive(n):
    bp = chain_link(n, 0)
    group = group_closure(bp.symmetry_generators)
    assert is_k_transitive(group, 1)
    assert not is_k_transitive(group, 2)
    assert bp.transitivity_degree == 1


def test_chain_rejects_single_loop():
    with pytest.raises(ValueError):
        chain_link(1, 0)


# ---------------------------------------------------------------------------
# braids


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(0, ())


def test_example_braid_permutation():
    # strands 1..5 permute as the 5-cycle (1 3 5 4 2), 0-based (0 2 4 3 1)
    perm = braid_permutation(EXAMPLE_BRAID)
    assert perm.images == (2, 0, 4, 1, 3)
    assert perm.cycle_string() == "(0 2 4 3 1)"


def test_braid_permutation_trivia():
    assert braid_permutation(BraidWord(4, ())).is_identity()
    assert braid_permutation(BraidWord(2, (1,))).images == (1, 0)
    # signs do not change the underlying permutation
    assert braid_permutation(BraidWord(2, (-1,))).images == (1, 0)


def test_example_braid_power_closes_to_five_components():
    bp = cyclic_braid_closure(EXAMPLE_BRAID, 1)
    assert bp.n_components == 5
    assert bp.family == "braid_closure"
    assert bp.params["power"] == 5
    assert bp.hyperbolicity.status == "conditional"
    assert bp.transitivity_degree == 1


def test_closure_of_squared_generator_is_hopf_pattern():
    bp = cyclic_braid_closure(BraidWord(2, (1,)), 1)
    assert bp.n_components == 2
    assert [list(row) for row in bp.linking_matrix] == [[0, 1], [1, 0]]


def test_higher_power_scales_linking():
    bp = cyclic_braid_closure(BraidWord(2, (1,)), 3)
    assert bp.n_components == 2
    assert bp.params["power"] == 6
    assert bp.linking_matrix[0][1] == 3


def test_closure_requires_single_cycle():
    with pytest.raises(ValueError):
        cyclic_braid_closure(BraidWord(3, (1,)), 1)  # permutation is a transposition
    with pytest.raises(ValueError):
        cyclic_braid_closure(EXAMPLE_BRAID, 0)


# ---------------------------------------------------------------------------
# polyhedral links


def test_cube_link():
    bp = cube_link()
    assert bp.n_components == 4
    assert bp.symmetry_order == 24
    assert bp.transitivity_degree == 4
    assert bp.params["crossings"] == 12
    assert bp.linking_complete


def test_cube_edge_link():
    bp = cube_edge_link()
    assert bp.n_components == 12
    assert bp.symmetry_order == 24
    assert bp.transitivity_degree == 1
    # non-cyclic action: more group elements than components
    assert bp.symmetry_order > bp.n_components
    # each edge loop interlocks with the four loops sharing one of its vertices
    assert all(sum(row) == 4 for row in bp.linking_matrix)


def test_icosahedral_link():
    bp = icosahedral_link()
    assert bp.n_components == 6
    assert bp.symmetry_order == 60
    assert bp.transitivity_degree == 2
    group = group_closure(bp.symmetry_generators)
    # order 60 < 6*5*4 = 120 rules out 3-transitivity
    assert not is_k_transitive(group, 3)
    assert bp.params["crossings"] == 30


# ---------------------------------------------------------------------------
# polygon radii


def test_unit_square_radii():
    r1, r2 = polygon_radii(4, 4)
    assert r1 == pytest.approx(0.5, abs=1e-12)
    assert r2 == pytest.approx(math.sqrt(2) / 2, abs=1e-12)


def test_unit_hexagon_radii():
    r1, r2 = polygon_radii(6, 3)
    assert r1 == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    assert r2 == pytest.approx(1.0, abs=1e-12)


def test_spherical_rejected():
    with pytest.raises(ValueError):
        polygon_radii(3, 3)
    assert polygon_geometry(3, 3) == "spherical"
    with pytest.raises(ValueError):
        polygon_radii(2, 7)


def _hyperbolic_angle(opposite, side_b, side_c):
    """Angle between sides b and c from the hyperbolic law of cosines."""
    value = (math.cosh(side_b) * math.cosh(side_c) - math.cosh(opposite)) / (
        math.sinh(side_b) * math.sinh(side_c))
    return math.acos(value)


@pytest.mark.parametrize("p,q", [(6, 4), (7, 7), (8, 8), (10, 5), (12, 12)])
def test_hyperbolic_radii_against_law_of_cosines(p, q):
    r1, r2 = polygon_radii(p, q)
    assert 0 < r1 < r2
    # right triangle: center (angle pi/p), vertex (angle pi/q), edge midpoint
    # (right angle); half edge from the hyperbolic Pythagorean relation
    half_edge = math.acosh(math.cosh(r2) / math.cosh(r1))
    assert _hyperbolic_angle(half_edge, r1, r2) == pytest.approx(math.pi / p, abs=1e-9)
    assert _hyperbolic_angle(r1, half_edge, r2) == pytest.approx(math.pi / q, abs=1e-9)
    assert _hyperbolic_angle(r2, half_edge, r1) == pytest.approx(math.pi / 2, abs=1e-9)


# ---------------------------------------------------------------------------
# helical links


@pytest.mark.parametrize("n", [4, 5, 7, 8, 9, 11, 13])
def test_helical_families(n):
    blueprint, helix = helical_link(field_of_order(n))
    assert blueprint.n_components == n
    assert blueprint.linking_complete
    assert blueprint.transitivity_degree == 2
    # sharply 2-transitive: order equals the number of ordered pairs
    assert blueprint.symmetry_order == n * (n - 1)
    assert helix.strands_per_face == n - 1
    assert helix.arc_count == n * (n - 1)
    assert helix.puncture_count_per_fiber == n * (n - 1)
    if n == 4:
        assert helix.rho_window is None  # tetrahedral case is spherical
    else:
        r1, r2 = helix.rho_window
        assert 0 < r1 < r2


def test_helical_n5_window_is_the_unit_square_window():
    _, helix = helical_link(field_of_order(5))
    assert helix.rho_window[0] == pytest.approx(0.5, abs=1e-12)
    assert helix.rho_window[1] == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert helix.to_json_dict()["slope"] == "4/sigma"


def test_helical_components_carry_field_labels():
    blueprint, _ = helical_link(field_of_order(4))
    assert blueprint.components == ("face_0,0", "face_1,0", "face_0,1", "face_1,1")


def test_helical_rejects_tiny_orders():
    with pytest.raises(ValueError):
        helical_link(field_of_order(3))
