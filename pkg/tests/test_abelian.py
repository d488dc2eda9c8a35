import pytest
from hypothesis import given, strategies as st

from vertexmagic.abelian import (
    GroupError,
    GroupSpec,
    InfeasibleDecomposition,
    MismatchedGroups,
    automorphisms,
    cauchy_element,
    cayley_tables,
    decompose_sum,
    enumerate_abelian_groups,
    exponent,
    involutions,
    parse_group,
    squares,
)

Z2 = GroupSpec((2,))
Z3 = GroupSpec((3,))
Z4 = GroupSpec((4,))
Z6 = GroupSpec((6,))
V4 = GroupSpec((2, 2))
Z2Z4 = GroupSpec((2, 4))

specs_small = st.sampled_from(list(enumerate_abelian_groups(8)))


def test_modular_addition():
    assert Z4.element(3) + Z4.element(2) == Z4.element(1)


def test_inverse_law():
    for spec in (Z4, V4, Z6, Z2Z4):
        for a in spec.elements():
            assert (a + (-a)).is_zero()


def test_scalar_mul_componentwise():
    assert 2 * Z2Z4.element((1, 1)) == Z2Z4.element((0, 2))


def test_element_orders():
    assert Z4.element(2).order() == 2
    assert Z2Z4.element((1, 1)).order() == 4
    assert Z6.element(2).order() == 3


def test_exponent():
    assert exponent(Z2Z4) == 4
    assert exponent(V4) == 2
    assert exponent(Z3) == 3


def test_exponent_is_max_order():
    for spec in enumerate_abelian_groups(16):
        assert exponent(spec) == max(a.order() for a in spec.elements())


def test_squares():
    assert squares(V4) == frozenset()
    assert squares(Z4) == frozenset({Z4.element(2)})
    assert squares(Z3) == frozenset({Z3.element(1), Z3.element(2)})


def test_squares_by_enumeration():
    for spec in enumerate_abelian_groups(12):
        doubled = {2 * h for h in spec.elements()}
        doubled.discard(spec.zero())
        assert squares(spec) == doubled


def test_involutions():
    assert involutions(Z4) == frozenset({Z4.element(2)})
    assert involutions(Z3) == frozenset()
    assert involutions(V4) == frozenset(
        {V4.element((1, 0)), V4.element((0, 1)), V4.element((1, 1))}
    )


def test_involutions_iff_even_order():
    for spec in enumerate_abelian_groups(15):
        assert bool(involutions(spec)) == (spec.order % 2 == 0)


def test_cauchy_element():
    assert cauchy_element(Z6, 3) == Z6.element(2)
    assert cauchy_element(Z4, 2) == Z4.element(2)
    # lexicographically least element of order 2 in Z2+Z4 is (0,2)
    assert cauchy_element(Z2Z4, 2) == Z2Z4.element((0, 2))


def test_cauchy_order_exact_up_to_16():
    for spec in enumerate_abelian_groups(16):
        for p in (2, 3, 5, 7, 11, 13):
            if spec.order % p == 0:
                assert cauchy_element(spec, p).order() == p


def test_cauchy_rejects_nondivisor():
    with pytest.raises(GroupError):
        cauchy_element(Z4, 3)
    with pytest.raises(GroupError):
        cauchy_element(Z6, 4)


def test_decompose_examples():
    assert decompose_sum(Z3, Z3.element(1), 2) == (Z3.element(2), Z3.element(2))
    assert decompose_sum(Z3, Z3.zero(), 3) == (Z3.element(1),) * 3
    assert decompose_sum(Z4, Z4.element(2), 2) == (Z4.element(1), Z4.element(1))


def test_decompose_z2_corners():
    one = Z2.element(1)
    assert decompose_sum(Z2, one, 3) == (one, one, one)
    assert decompose_sum(Z2, Z2.zero(), 2) == (one, one)
    with pytest.raises(InfeasibleDecomposition):
        decompose_sum(Z2, one, 2)
    with pytest.raises(InfeasibleDecomposition):
        decompose_sum(Z2, Z2.zero(), 3)


def test_decompose_rejects_zero_singleton():
    with pytest.raises(GroupError):
        decompose_sum(Z4, Z4.zero(), 1)


@given(specs_small, st.integers(min_value=0, max_value=63),
       st.integers(min_value=1, max_value=6))
def test_decompose_property(spec, target_idx, n):
    target = spec.element_at(target_idx % spec.order)
    if n == 1 and target.is_zero():
        return
    if spec.order == 2:
        want = spec.element(n % 2)
        if want != target:
            with pytest.raises(InfeasibleDecomposition):
                decompose_sum(spec, target, n)
            return
    parts = decompose_sum(spec, target, n)
    assert len(parts) == n
    assert all(not p.is_zero() for p in parts)
    total = spec.zero()
    for p in parts:
        total = total + p
    assert total == target


def _partition_count(k):
    table = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            table[total] += table[total - part]
    return table[k]


def _class_count(m):
    count = 1
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            count *= _partition_count(e)
        d += 1
    if m > 1:
        count *= _partition_count(1)
    return count


def test_catalog_counts_match_partition_formula():
    cat = enumerate_abelian_groups(16)
    by_order = {}
    for spec in cat:
        by_order.setdefault(spec.order, []).append(spec)
    for m in range(2, 17):
        assert len(by_order.get(m, [])) == _class_count(m)


def test_catalog_example_counts():
    cat = enumerate_abelian_groups(8)
    assert len(cat) == 10
    order4 = sorted(s.factors for s in cat if s.order == 4)
    assert order4 == [(2, 2), (4,)]
    order8 = sorted(s.factors for s in cat if s.order == 8)
    assert order8 == [(2, 2, 2), (2, 4), (8,)]


def test_catalog_pairwise_distinct_canonical():
    cat = enumerate_abelian_groups(16)
    forms = [s.canonical().factors for s in cat]
    assert len(set(forms)) == len(forms)
    assert all(s.is_canonical for s in cat)


def test_canonicalization():
    assert GroupSpec((2, 3)).canonical() == GroupSpec((6,))
    assert GroupSpec((4, 2, 3)).canonical() == GroupSpec((2, 12))
    assert GroupSpec((6,)).isomorphic_to(GroupSpec((3, 2)))
    assert not GroupSpec((8,)).isomorphic_to(GroupSpec((2, 4)))
    spec = GroupSpec((12, 10))
    assert spec.canonical().canonical() == spec.canonical()


def test_mismatched_groups_error():
    with pytest.raises(MismatchedGroups):
        Z4.element(1) + Z3.element(1)


def test_parse_and_render():
    assert parse_group("Z4") == Z4
    assert parse_group("z2+z4") == Z2Z4
    assert parse_group("V4") == V4
    assert str(GroupSpec((2, 4))) == "Z2+Z4"
    with pytest.raises(GroupError):
        parse_group("Q8")


@given(specs_small)
def test_order_annihilates(spec):
    for a in spec.elements():
        k = a.order()
        assert (k * a).is_zero()
        assert all(not (j * a).is_zero() for j in range(1, k))


def test_cayley_tables_consistency():
    m, add, neg = cayley_tables(Z2Z4)
    elems = Z2Z4.elements()
    assert m == 8
    for i, a in enumerate(elems):
        assert elems[neg[i]] == -a
        for j, b in enumerate(elems):
            assert elems[add[i * m + j]] == a + b


def test_automorphism_counts():
    # |Aut(Zn)| = phi(n); |Aut(V4)| = 6; |Aut(Z2+Z4)| = 8
    assert len(automorphisms(Z4)) == 2
    assert len(automorphisms(GroupSpec((5,)))) == 4
    assert len(automorphisms(V4)) == 6
    assert len(automorphisms(Z2Z4)) == 8
    for phi in automorphisms(V4):
        for a in V4.elements():
            for b in V4.elements():
                assert phi[a + b] == phi[a] + phi[b]
