import pytest

from coxlehmer.multicomplex import (
    ChainProduct,
    OrderIdeal,
    all_order_ideals,
    count_linear_extensions,
    full_ideal,
    ideal_from_points,
    is_linear_extension,
    is_m_sequence,
    is_order_ideal,
    join,
    linear_extensions,
    meet,
    random_order_ideals,
    sample_linear_extensions,
)
from coxlehmer.qpoly import IntPolynomial, q_analog


def test_ambient_validation():
    with pytest.raises(ValueError):
        ChainProduct((2, 0))
    with pytest.raises(ValueError):
        ChainProduct(())


def test_closure_of_origin():
    amb = ChainProduct((2, 2))
    assert ideal_from_points(amb, [(0, 0)]).points == {(0, 0)}


def test_closure_of_top_of_2x2():
    amb = ChainProduct((2, 2))
    j = ideal_from_points(amb, [(1, 1)])
    assert len(j) == 4


def test_closure_hand_count():
    amb = ChainProduct((2, 3))
    j = ideal_from_points(amb, [(0, 2), (1, 1)])
    assert j.points == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)}


def test_closure_rejects_out_of_bounds():
    amb = ChainProduct((2, 2))
    with pytest.raises(ValueError, match="outside"):
        ideal_from_points(amb, [(2, 0)])


def test_is_order_ideal():
    amb = ChainProduct((2, 2))
    assert is_order_ideal(amb, [(0, 0), (0, 1)])
    assert not is_order_ideal(amb, [(0, 1)])
    with pytest.raises(ValueError, match="downward closed"):
        OrderIdeal(amb, [(1, 1)])


def test_meet_examples():
    assert meet((0, 2, 2), (2, 0, 2)) == (0, 0, 2)
    assert meet((1, 1), (1, 1)) == (1, 1)
    assert join((0, 2), (1, 0)) == (1, 2)


def test_meet_properties_inside_ideal():
    amb = ChainProduct((3, 3))
    j = ideal_from_points(amb, [(2, 1), (1, 2)])
    pts = sorted(j.points)
    for x in pts:
        for y in pts:
            m = meet(x, y)
            assert m in j
            assert meet(x, y) == meet(y, x)
            assert meet(x, x) == x
            for z in pts:
                assert meet(meet(x, y), z) == meet(x, meet(y, z))


def test_maxima_of_full_box():
    amb = ChainProduct((2, 3))
    assert full_ideal(amb).maxima() == {(1, 2)}


def test_maxima_hand_example():
    amb = ChainProduct((2, 3))
    j = ideal_from_points(amb, [(0, 2), (1, 1)])
    assert j.maxima() == {(0, 2), (1, 1)}


def test_f_polynomial():
    amb = ChainProduct((2, 3))
    assert ideal_from_points(amb, [(0, 0)]).f_polynomial() == IntPolynomial([1])
    assert full_ideal(amb).f_polynomial() == q_analog(2) * q_analog(3)


def test_f_polynomial_counts_points():
    amb = ChainProduct((3, 3, 2))
    for j in random_order_ideals(amb, 20, seed=5):
        assert j.f_polynomial()(1) == len(j)


def test_is_m_sequence_basics():
    assert is_m_sequence([1])
    assert is_m_sequence([1, 0, 0])
    assert not is_m_sequence([1, 0, 1])
    assert not is_m_sequence([])
    assert not is_m_sequence([2])
    assert not is_m_sequence([1, -1])
    assert is_m_sequence([1, 3, 5, 4, 1])
    assert is_m_sequence([1, 2, 3])
    assert not is_m_sequence([1, 2, 4])
    assert is_m_sequence([1, 4, 10, 20])


def test_m_sequence_of_every_small_ideal():
    # f-vectors of multicomplexes always satisfy the growth bound
    for dims in [(2, 3), (2, 2, 2), (3, 3)]:
        for j in all_order_ideals(ChainProduct(dims)):
            assert is_m_sequence(j.f_polynomial().coeffs)


def test_linear_extensions_of_chain():
    amb = ChainProduct((3,))
    exts = list(linear_extensions(full_ideal(amb)))
    assert exts == [((0,), (1,), (2,))]


def test_linear_extensions_of_diamond():
    amb = ChainProduct((2, 2))
    exts = list(linear_extensions(full_ideal(amb)))
    assert len(exts) == 2
    for e in exts:
        assert e[0] == (0, 0) and e[-1] == (1, 1)


def test_extension_count_2x3_box():
    # standard Young tableaux of shape 2x3
    amb = ChainProduct((2, 3))
    assert count_linear_extensions(full_ideal(amb)) == 5
    assert len(list(linear_extensions(full_ideal(amb)))) == 5


def test_count_matches_enumeration():
    amb = ChainProduct((2, 2, 2))
    for j in all_order_ideals(amb):
        assert count_linear_extensions(j) == len(list(linear_extensions(j)))


def test_sampled_extensions_are_extensions_and_deterministic():
    amb = ChainProduct((3, 3))
    j = full_ideal(amb)
    a = list(sample_linear_extensions(j, 10, seed=42))
    b = list(sample_linear_extensions(j, 10, seed=42))
    assert a == b
    for ext in a:
        assert is_linear_extension(j, ext)
    assert list(sample_linear_extensions(j, 10, seed=43)) != a


def test_all_order_ideals_counts():
    # 2xn grid ideals are counted by binomial(n+2, 2); [2]^3 by Dedekind's 20
    assert sum(1 for _ in all_order_ideals(ChainProduct((2, 3)))) == 10 - 1
    assert sum(1 for _ in all_order_ideals(ChainProduct((2, 2, 2)))) == 20 - 1
    assert sum(1 for _ in all_order_ideals(ChainProduct((2, 2, 2, 2)))) == 168 - 1


def test_all_order_ideals_are_ideals():
    for j in all_order_ideals(ChainProduct((2, 2, 2))):
        assert is_order_ideal(j.ambient, j.points)


def test_random_ideals_deterministic():
    amb = ChainProduct((3, 3, 4))
    a = random_order_ideals(amb, 10, seed=1)
    b = random_order_ideals(amb, 10, seed=1)
    assert [x.points for x in a] == [y.points for y in b]
    for j in a:
        assert is_order_ideal(amb, j.points)


def test_ideal_json():
    amb = ChainProduct((2, 2))
    j = ideal_from_points(amb, [(1, 0)])
    assert j.to_json() == [[0, 0], [1, 0]]
