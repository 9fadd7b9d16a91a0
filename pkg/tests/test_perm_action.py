import random
from math import factorial

import pytest

from cusplink.finite_field import field_of_order, make_field
from cusplink.perm_action import (
    Permutation,
    affine_group,
    affine_permutation,
    group_closure,
    is_k_transitive,
    is_k_transitive_literal,
    orbit_sizes_divide_order,
    transitivity_degree,
)


def cyclic(n):
    return Permutation(tuple((i + 1) % n for i in range(n)))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 2))


def test_composition_convention():
    # (p * q)(x) = p(q(x)): the right factor acts first
    p = Permutation.from_cycles(3, [(0, 1, 2)])
    q = Permutation.from_cycles(3, [(0, 1)])
    assert (p * q)(0) == p(q(0)) == 2
    assert (q * p)(0) == q(p(0)) == 0


def test_inverse_and_power():
    g = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert (g * g.inverse()).is_identity()
    assert g ** 5 == Permutation.identity(5)
    assert g ** -2 == (g.inverse()) ** 2
    assert g.order() == 5


def test_cycle_string():
    g = Permutation.from_cycles(5, [(0, 2), (1, 3)])
    assert g.cycle_string() == "(0 2)(1 3)"
    assert Permutation.identity(3).cycle_string() == "()"


def test_closure_orders():
    assert group_closure([cyclic(5)]).order == 5
    s4 = group_closure([Permutation.from_cycles(4, [(0, 1)]), cyclic(4)])
    assert s4.order == 24
    assert affine_group(make_field(5, 1)).order == 20


def test_closure_degree_mismatch_and_cap():
    with pytest.raises(ValueError):
        group_closure([cyclic(4), cyclic(5)])
    gens = [Permutation.from_cycles(4, [(0, 1)]), cyclic(4)]
    with pytest.raises(RuntimeError):
        group_closure(gens, max_order=10)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("CSL_MAX_GROUP", "3")
    gens = [Permutation.from_cycles(4, [(0, 1)]), cyclic(4)]
    with pytest.raises(RuntimeError):
        group_closure(gens)


def test_k_transitivity_cyclic():
    c5 = group_closure([cyclic(5)])
    assert is_k_transitive(c5, 1)
    assert not is_k_transitive(c5, 2)
    with pytest.raises(ValueError):
        is_k_transitive(c5, 0)
    with pytest.raises(ValueError):
        is_k_transitive(c5, 6)


def test_k_transitivity_affine():
    a5 = affine_group(make_field(5, 1))
    assert is_k_transitive(a5, 2)
    # order 20 < 5*4*3 = 60, so no triple orbit can be full
    assert not is_k_transitive(a5, 3)


def _sample_groups():
    yield group_closure([Permutation.identity(3)])
    yield group_closure([cyclic(4)])
    yield group_closure([Permutation.from_cycles(3, [(0, 1)]),
                         Permutation.from_cycles(3, [(0, 1, 2)])])  # S3
    yield group_closure([cyclic(4), Permutation((0, 3, 2, 1))])  # dihedral
    yield group_closure([Permutation.from_cycles(4, [(0, 1, 2)]),
                         Permutation.from_cycles(4, [(1, 2, 3)])])  # A4
    yield group_closure([Permutation.from_cycles(4, [(0, 1)]), cyclic(4)])  # S4
    yield affine_group(make_field(2, 2))
    yield affine_group(make_field(5, 1))


def test_single_orbit_check_matches_literal_definition():
    for group in _sample_groups():
        for k in range(1, min(3, group.degree) + 1):
            assert is_k_transitive(group, k) == is_k_transitive_literal(group, k)


def test_transitivity_degree_examples():
    s4 = group_closure([Permutation.from_cycles(4, [(0, 1)]), cyclic(4)])
    assert transitivity_degree(s4) == 4
    assert transitivity_degree(affine_group(make_field(2, 3))) == 2
    trivial = group_closure([Permutation.identity(3)])
    assert transitivity_degree(trivial) == 0


def test_inclusive_hierarchy():
    for group in _sample_groups():
        flags = [is_k_transitive(group, k) for k in range(1, group.degree + 1)]
        # once false, never true again
        seen_false = False
        for flag in flags:
            if seen_false:
                assert not flag
            seen_false = seen_false or not flag


def test_orbit_sizes_divide_order():
    for group in _sample_groups():
        assert orbit_sizes_divide_order(group)
        assert factorial(group.degree) % group.order == 0


@pytest.mark.parametrize("n,expected_order", [(5, 20), (4, 12), (7, 42)])
def test_affine_group_orders(n, expected_order):
    group = affine_group(field_of_order(n))
    assert group.degree == n
    assert group.order == expected_order


@pytest.mark.parametrize("n", [4, 5, 7, 8, 9, 11, 13])
def test_affine_group_sharply_two_transitive(n):
    group = affine_group(field_of_order(n))
    assert group.order == n * (n - 1)
    assert transitivity_degree(group) == 2


def test_affine_permutation_translation_is_shift():
    spec = make_field(5, 1)
    shift = affine_permutation(spec, 1, 1)
    assert shift.images == (1, 2, 3, 4, 0)
    with pytest.raises(ValueError):
        affine_permutation(spec, 0, 1)


def test_group_elements_form_group():
    rng = random.Random(7)
    for group in _sample_groups():
        elements = group.elements
        assert Permutation.identity(group.degree) in elements
        for g in elements:
            assert g.inverse() in elements
        pool = sorted(elements, key=lambda p: p.images)
        for _ in range(20):
            g, h = rng.choice(pool), rng.choice(pool)
            assert g * h in elements


def test_group_json_shape():
    payload = group_closure([cyclic(3)]).to_json_dict()
    assert payload == {
        "degree": 3,
        "generators": [[1, 2, 0]],
        "order": 3,
        "transitivity_degree": 1,
    }
