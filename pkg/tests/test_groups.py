"""Group constructors, predicates, and validation."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from epgraph import (
    CayleyValidationError,
    FiniteGroup,
    GroupParameterError,
    GroupSizeError,
    abelian_shape,
    closure_from_generators,
    has_cyclic_sylow,
    has_unique_minimal_subgroup,
    is_generalized_quaternion,
    is_simple,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_metacyclic,
    normal_closure,
    prime_order_subgroup_count,
    totient,
)
from helpers import (
    brute_center,
    brute_prime_order_subgroups,
    brute_totient,
    fixed_point_closure,
    orders_multiset,
    table_of,
)


# -- cyclic groups -------------------------------------------------------------


def test_cyclic_trivial():
    g = make_cyclic(1)
    assert g.order == 1
    assert g.orders == (1,)


def test_cyclic_orders_follow_gcd():
    g = make_cyclic(6)
    assert g.orders[1] == 6
    assert g.orders[3] == 2
    g12 = make_cyclic(12)
    assert g12.orders[8] == 3
    for i in range(1, 12):
        assert g12.orders[i] == 12 // math.gcd(12, i)


def test_cyclic_bounds():
    with pytest.raises(GroupParameterError):
        make_cyclic(0)
    with pytest.raises(GroupSizeError):
        make_cyclic(513)
    assert make_cyclic(513, max_order=1024).order == 513


# -- direct products -------------------------------------------------------------


def test_klein_four_orders():
    g = make_direct_product([make_cyclic(2), make_cyclic(2)])
    assert g.order == 4
    assert sorted(g.orders) == [1, 2, 2, 2]


def test_product_order_is_lcm():
    g = make_direct_product([make_cyclic(2), make_cyclic(3)])
    assert 6 in g.orders
    for a in range(2):
        for b in range(3):
            idx = a * 3 + b
            assert g.orders[idx] == math.lcm(
                2 // math.gcd(2, a) if a else 1, 3 // math.gcd(3, b) if b else 1
            )


def test_product_with_trivial_is_same_table():
    g = make_cyclic(5)
    prod = make_direct_product([make_cyclic(1), g])
    assert np.array_equal(prod.table, g.table)


def test_product_overflow():
    with pytest.raises(GroupSizeError):
        make_direct_product([make_cyclic(32), make_cyclic(32)])


# -- dicyclic groups -------------------------------------------------------------


def test_q8_has_unique_involution():
    q8 = make_dicyclic(2)
    assert q8.order == 8
    assert orders_multiset(q8).count(2) == 1


def test_dicyclic_defining_relation():
    # b^2 = a^m: with pairs (i, j) at index j*2m + i, b = (0, 1)
    for m in (2, 3, 4):
        g = make_dicyclic(m)
        b = 2 * m
        assert g.mul(b, b) == m


def test_q16_nonabelian():
    q16 = make_dicyclic(4)
    assert q16.order == 16
    table = table_of(q16)
    assert any(
        table[a][b] != table[b][a] for a in range(16) for b in range(16)
    )


def test_dicyclic_bounds():
    with pytest.raises(GroupParameterError):
        make_dicyclic(1)


# -- metacyclic groups ------------------------------------------------------------


def test_metacyclic_s3():
    g = make_metacyclic(3, 2, 2)
    assert not g.is_abelian()
    assert orders_multiset(g) == [1, 2, 2, 2, 3, 3]


def test_metacyclic_semidihedral_16():
    g = make_metacyclic(8, 2, 3)
    assert g.order == 16
    assert not g.is_abelian()
    assert orders_multiset(g).count(8) == 4
    assert orders_multiset(g).count(2) > 1


def test_metacyclic_degenerate_is_cyclic():
    g = make_metacyclic(5, 1, 1)
    assert np.array_equal(g.table, make_cyclic(5).table)


def test_metacyclic_rejects_bad_parameters():
    with pytest.raises(GroupParameterError):
        make_metacyclic(5, 2, 2)  # 2^2 = 4 != 1 mod 5
    with pytest.raises(GroupParameterError):
        make_metacyclic(6, 2, 3)  # gcd(3, 6) != 1


def test_dihedral_is_metacyclic_special_case():
    d4 = make_dihedral(4)
    assert np.array_equal(d4.table, make_metacyclic(4, 2, 3).table)
    assert orders_multiset(d4) == [1, 2, 2, 2, 2, 2, 4, 4]


# -- permutation closures ----------------------------------------------------------


def test_closure_s3():
    g = closure_from_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert g.order == 6


def test_closure_single_four_cycle():
    g = closure_from_generators(4, [(1, 2, 3, 0)])
    assert g.order == 4


def test_closure_a5_matches_fixed_point_oracle():
    gens = [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)]
    assert len(fixed_point_closure(5, gens)) == 60
    g = closure_from_generators(5, gens)
    assert g.order == 60


def test_closure_identity_first():
    g = closure_from_generators(3, [(1, 2, 0)])
    assert g.orders[0] == 1


def test_closure_rejects_non_permutation():
    with pytest.raises(GroupParameterError):
        closure_from_generators(3, [(0, 0, 1)])


def test_closure_size_cap():
    with pytest.raises(GroupSizeError):
        closure_from_generators(5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)], max_order=30)


# -- element orders and totient ------------------------------------------------------


def test_element_order_identity():
    for g in (make_cyclic(7), make_dicyclic(3)):
        assert g.element_order(0) == 1


def test_element_order_examples():
    assert make_cyclic(12).element_order(8) == 3
    assert make_dicyclic(2).element_order(1) == 4  # a = (1, 0)


def test_element_order_range_error():
    with pytest.raises(IndexError):
        make_cyclic(4).element_order(4)


def test_totient_examples():
    assert totient(1) == 1
    assert totient(6) == brute_totient(6) == 2
    assert totient(9) == brute_totient(9) == 6


@given(st.integers(min_value=1, max_value=2000))
def test_totient_matches_brute_force(n):
    assert totient(n) == brute_totient(n)


# -- center, normal closure, simplicity ------------------------------------------------


def test_center_abelian_is_whole_group():
    g = make_cyclic(9)
    assert g.center() == tuple(range(9))


def test_center_s3_trivial():
    s3 = make_metacyclic(3, 2, 2)
    assert set(s3.center()) == brute_center(s3) == {0}


def test_center_q8():
    q8 = make_dicyclic(2)
    assert set(q8.center()) == brute_center(q8)
    assert len(q8.center()) == 2


def test_normal_closure_identity():
    g = make_dihedral(5)
    assert normal_closure(g, 0) == frozenset({0})


def test_normal_closure_s4_double_transposition():
    s4 = closure_from_generators(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    # double transpositions are exactly the squares of 4-cycles
    four_cycle = next(x for x in range(24) if s4.orders[x] == 4)
    double = s4.power(four_cycle, 2)
    assert s4.orders[double] == 2
    assert len(normal_closure(s4, double)) == 4


def test_normal_closure_a5_exhausts():
    a5 = closure_from_generators(5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)])
    for x in (1, 7, 30):
        assert len(normal_closure(a5, x)) == 60


def test_is_simple_examples():
    assert is_simple(make_cyclic(5)) is True
    s4 = closure_from_generators(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    assert is_simple(s4) is False
    a5 = closure_from_generators(5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)])
    assert is_simple(a5) is True


def test_is_simple_trivial_group_errors():
    with pytest.raises(GroupParameterError):
        is_simple(make_cyclic(1))


# -- prime-order subgroups ----------------------------------------------------------


def test_prime_order_subgroup_counts():
    assert prime_order_subgroup_count(make_dicyclic(2)) == 1
    assert prime_order_subgroup_count(make_dihedral(4)) == 5
    assert prime_order_subgroup_count(make_cyclic(9)) == 1


def test_unique_minimal_subgroup():
    assert has_unique_minimal_subgroup(make_dicyclic(4)) is True
    assert has_unique_minimal_subgroup(make_dihedral(8)) is False
    with pytest.raises(GroupParameterError):
        prime_order_subgroup_count(make_cyclic(1))


def test_prime_order_subgroups_match_subset_enumeration(roster_groups_48):
    # every p-group roster member: brute-force every candidate subset of size p
    checked = 0
    for g in roster_groups_48:
        if g.order >= 2 and g.is_p_group() is not None:
            expected = brute_prime_order_subgroups(g)
            assert prime_order_subgroup_count(g) == len(expected), g.spec.serialize()
            assert has_unique_minimal_subgroup(g) == (len(expected) == 1)
            checked += 1
    assert checked >= 20


# -- abelian shapes -----------------------------------------------------------------


def test_abelian_shape_examples():
    z223 = make_direct_product([make_cyclic(2), make_cyclic(2), make_cyclic(3)])
    assert abelian_shape(z223).factors == (2, 2, 3)
    assert has_cyclic_sylow(abelian_shape(z223)) is True

    z2233 = make_direct_product(
        [make_cyclic(2), make_cyclic(2), make_cyclic(3), make_cyclic(3)]
    )
    assert abelian_shape(z2233).factors == (2, 2, 3, 3)
    assert has_cyclic_sylow(abelian_shape(z2233)) is False

    assert abelian_shape(make_cyclic(30)).factors == (2, 3, 5)
    assert has_cyclic_sylow(abelian_shape(make_cyclic(30))) is True


def test_abelian_shape_mixed_powers():
    g = make_direct_product([make_cyclic(4), make_cyclic(2), make_cyclic(9)])
    assert abelian_shape(g).factors == (2, 4, 9)


def test_abelian_shape_rejects_nonabelian():
    with pytest.raises(GroupParameterError):
        abelian_shape(make_dihedral(3))


def test_abelian_shape_of_ingested_table_matches_spec_free_computation():
    # shape must come from the table itself, not the construction recipe
    z12 = make_cyclic(12)
    assert abelian_shape(z12).factors == (3, 4)


# -- predicates ---------------------------------------------------------------------


def test_is_abelian_and_p_group():
    z6 = make_cyclic(6)
    assert z6.is_abelian() and z6.is_p_group() is None
    q8 = make_dicyclic(2)
    assert not q8.is_abelian() and q8.is_p_group() == 2
    triv = make_cyclic(1)
    assert triv.is_abelian() and triv.is_p_group() is None


def test_generalized_quaternion_detection():
    assert is_generalized_quaternion(make_dicyclic(4)) is True
    assert is_generalized_quaternion(make_dihedral(8)) is False
    assert is_generalized_quaternion(make_cyclic(8)) is False


def test_generalized_quaternion_across_families(roster_groups_48):
    for k in range(3, 7):
        assert is_generalized_quaternion(make_dicyclic(2 ** (k - 2))) is True
    for g in (
        make_metacyclic(16, 2, 7),     # semidihedral 32
        make_direct_product([make_cyclic(2), make_cyclic(8)]),
    ):
        assert is_generalized_quaternion(g) is False
    # false on every dihedral, semidihedral, abelian, and odd-order roster member
    for g in roster_groups_48:
        family = g.spec.family
        if (
            family == "dihedral"
            or g.is_abelian()
            or g.order % 2 == 1
            or (family == "metacyclic" and g.spec.params[1] == 2)
        ):
            assert is_generalized_quaternion(g) is False, g.spec.serialize()


# -- validation ---------------------------------------------------------------------


def test_constructed_roster_groups_validate(roster_groups_48):
    # construction already validates; re-validate explicitly and check Lagrange
    for group in roster_groups_48:
        FiniteGroup.from_table(group.table, validate="full", max_order=512)
        assert all(group.order % o == 0 for o in group.orders)


def test_validation_catches_broken_tables():
    with pytest.raises(CayleyValidationError) as exc:
        FiniteGroup.from_table([[0, 1], [1, 1]])
    assert exc.value.law == "latin-square"
    with pytest.raises(CayleyValidationError) as exc:
        FiniteGroup.from_table([[1, 0], [0, 1]])
    assert exc.value.law == "identity"
    with pytest.raises(CayleyValidationError) as exc:
        FiniteGroup.from_table([[0, 1], [1, 2]])
    assert exc.value.law == "closure"


def test_sampled_validation_above_cutoff():
    g = make_cyclic(300)  # above the full-validation cutoff, auto -> sampled
    assert g.order == 300
    bad = np.array(make_cyclic(300).table)
    # breaking one entry keeps rows/columns Latin only if we swap a pair
    bad[1, [2, 3]] = bad[1, [3, 2]]
    bad[[2, 3], 1] = bad[[3, 2], 1]
    with pytest.raises(CayleyValidationError):
        FiniteGroup.from_table(bad, validate="full")


def test_metacyclic_matches_permutation_dihedral():
    # same abstract group built two ways: equal order multisets
    for m in (3, 4, 5, 6):
        meta = make_dihedral(m)
        rot = tuple((i + 1) % m for i in range(m))
        ref = tuple((m - i) % m for i in range(m))
        perm = closure_from_generators(m, [rot, ref])
        assert orders_multiset(meta) == orders_multiset(perm)


def test_power_method():
    g = make_cyclic(10)
    assert g.power(3, 0) == 0
    assert g.power(3, 4) == 2
    assert g.power(3, -1) == 7


def test_roster_invariants_additional(roster_groups_48):
    for group in roster_groups_48:
        assert group.orders[0] == 1
        assert (set(group.center()) == set(range(group.order))) == group.is_abelian()
