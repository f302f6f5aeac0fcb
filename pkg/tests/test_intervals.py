import pytest

from coxlehmer.codes import shared_standard_code
from coxlehmer.coxeter import shared_poset
from coxlehmer.intervals import (
    InvalidCodeImage,
    analyze_interval,
    code_join,
    code_leq,
    code_meet,
    group_complex,
    interval_complex,
    interval_ideal,
    interval_poincare,
    interval_polynomials,
    is_principal,
    is_unimodal_element,
    palindromic_intervals,
    principal_set,
    unimodal_set,
    verify_principal_lattice,
)
from coxlehmer.qpoly import IntPolynomial, q_analog, q_analog_product

H3_UNIMODAL_TRIPLES = {
    (1, 5, 9), (1, 5, 4), (1, 4, 4), (1, 3, 4), (1, 2, 4), (1, 1, 4), (1, 2, 3),
    (0, 1, 4), (1, 1, 3), (1, 2, 2), (0, 1, 3), (1, 1, 2), (0, 1, 2), (1, 1, 1),
    (0, 1, 1), (0, 0, 1), (0, 0, 0),
}


@pytest.fixture(scope="module")
def a3():
    return shared_poset("A", 3)


@pytest.fixture(scope="module")
def la3(a3):
    return shared_standard_code("A", 3)


@pytest.fixture(scope="module")
def h3():
    return shared_poset("H3")


@pytest.fixture(scope="module")
def lh3(h3):
    return shared_standard_code("H3")


def test_interval_ideal_of_identity(la3):
    j = interval_ideal(0, la3)
    assert j.points == {(0, 0, 0)}


def test_interval_ideal_3412(a3, la3):
    w = a3.index[(3, 4, 1, 2)]
    j = interval_ideal(w, la3)
    assert len(j) == 14
    assert j.f_polynomial() == IntPolynomial([1, 3, 5, 4, 1])
    assert j.maxima() == {(1, 0, 2), (1, 2, 0), (0, 2, 2)}
    codes_of = {la3.of(a3.index[p]) for p in [(2, 4, 1, 3), (3, 2, 1, 4), (3, 4, 1, 2)]}
    assert j.maxima() == codes_of


def test_interval_ideal_of_top_is_box(a3, la3):
    j = interval_ideal(a3.w0, la3)
    assert j.is_full_box()


def test_interval_ideal_detects_corruption(a3, la3):
    from coxlehmer.codes import LehmerCode

    s1 = a3.index[(2, 1, 3, 4)]
    s3 = a3.index[(1, 2, 4, 3)]
    vectors = list(la3.vectors)
    vectors[s1], vectors[s3] = vectors[s3], vectors[s1]
    bad = LehmerCode("bad", a3, la3.bounds, vectors,
                     {v: w for w, v in enumerate(vectors)})
    w = a3.index[(2, 3, 1, 4)]  # s1 s2: its interval sees only one swapped element
    with pytest.raises(InvalidCodeImage):
        interval_ideal(w, bad)


def test_group_complex_shapes(a3, h3):
    a2 = shared_poset("A", 2)
    sc = group_complex(a2)
    assert sc.dims == (2, 3)
    i25 = shared_poset("I2", m=5)
    assert group_complex(i25).dims == (2, 5)
    sch = group_complex(h3)
    assert sch.dims == (2, 6, 10)
    assert sch.facet_count == 120


def test_interval_complex(a3, la3):
    assert interval_complex(0, la3).facet_count == 1
    w = a3.index[(3, 4, 1, 2)]
    sc = interval_complex(w, la3)
    assert sc.facet_count == 14
    assert interval_complex(a3.w0, la3).facet_count == 24


def test_routes_identity(la3):
    for route in ("direct", "complex", "maxima"):
        assert interval_poincare(0, la3, route) == IntPolynomial([1])


def test_routes_3412(a3, la3):
    w = a3.index[(3, 4, 1, 2)]
    expected = IntPolynomial([1, 3, 5, 4, 1])
    for route in ("direct", "complex", "maxima"):
        assert interval_poincare(w, la3, route) == expected


def test_maxima_route_matches_hand_expansion():
    # the inclusion-exclusion over {(1,0,2),(1,2,0),(0,2,2)} written out
    two, three = q_analog(2), q_analog(3)
    byhand = (2 * (two * three) + three * three
              - two - 2 * three + q_analog(1))
    assert byhand == IntPolynomial([1, 3, 5, 4, 1])


def test_routes_whole_h3(h3, lh3):
    expected = q_analog_product([2, 6, 10])
    for route in ("direct", "complex", "maxima"):
        assert interval_poincare(h3.w0, lh3, route) == expected


def test_route_agreement_everywhere_a3(a3, la3):
    for w in range(a3.size):
        d = interval_poincare(w, la3, "direct")
        assert interval_poincare(w, la3, "complex") == d
        assert interval_poincare(w, la3, "maxima") == d


def test_maxima_route_bound(a3, la3):
    w = a3.index[(3, 4, 1, 2)]
    with pytest.raises(ValueError, match="exceeds"):
        interval_poincare(w, la3, "maxima", max_maxima=2)


def test_unknown_route(la3):
    with pytest.raises(ValueError, match="unknown route"):
        interval_poincare(0, la3, "fast")


def test_code_meet_worked_example(a3, la3):
    u = a3.index[(2, 4, 1, 3)]
    v = a3.index[(3, 2, 1, 4)]
    t = a3.index[(3, 4, 1, 2)]
    assert a3.elements[code_meet(u, v, la3)] == (2, 1, 3, 4)
    assert a3.elements[code_meet(u, t, la3)] == (1, 4, 2, 3)
    assert a3.elements[code_meet(v, t, la3)] == (3, 1, 2, 4)
    triple = code_meet(code_meet(u, v, la3), t, la3)
    assert a3.elements[triple] == (1, 2, 3, 4)


def test_code_meet_idempotent_and_leq(a3, la3):
    for w in range(0, a3.size, 3):
        assert code_meet(w, w, la3) == w
        assert code_join(w, w, la3) == w
        assert code_leq(0, w, la3)


def test_code_order_refines_bruhat(a3, la3):
    for u in range(a3.size):
        for w in range(a3.size):
            if code_leq(u, w, la3):
                assert a3.leq(u, w)


def test_principal_basics(a3, la3):
    assert is_principal(0, la3)
    assert is_principal(a3.w0, la3)
    assert len(principal_set(la3)) == 14  # Catalan number C_4


def test_principal_h_factors(a3, la3):
    for w in principal_set(la3):
        expected = q_analog_product(x + 1 for x in la3.of(w))
        assert interval_poincare(w, la3, "direct") == expected


def test_principal_lattice_a3(la3):
    rep = verify_principal_lattice(la3)
    assert rep.passed, rep.witnesses


def test_principal_lattice_h3(lh3):
    rep = verify_principal_lattice(lh3)
    assert rep.passed, rep.witnesses


def test_unimodal_identity(la3):
    assert is_unimodal_element(0, la3)


def test_unimodal_requires_principal(a3, la3):
    w = a3.index[(3, 4, 1, 2)]  # not principal: 14 < 27
    assert not is_principal(w, la3)
    with pytest.raises(ValueError, match="principal"):
        is_unimodal_element(w, la3)


def test_h3_unimodal_triples(h3, lh3):
    uni = unimodal_set(lh3)
    assert len(uni) == 17
    assert {lh3.of(w) for w in uni} == H3_UNIMODAL_TRIPLES


def test_h3_unimodal_hasse_diagram(h3, lh3):
    # Bruhat order restricted to the unimodal set, as drawn: each triple
    # covers the listed ones
    uni = unimodal_set(lh3)
    by_code = {lh3.of(w): w for w in uni}
    expected_edges = {
        ((1, 5, 4), (1, 5, 9)), ((1, 4, 4), (1, 5, 4)), ((1, 3, 4), (1, 4, 4)),
        ((1, 2, 4), (1, 3, 4)), ((1, 1, 4), (1, 2, 4)), ((1, 2, 3), (1, 2, 4)),
        ((1, 1, 3), (1, 2, 3)), ((1, 2, 2), (1, 2, 3)), ((0, 1, 4), (1, 1, 4)),
        ((1, 1, 3), (1, 1, 4)), ((0, 1, 3), (1, 1, 3)), ((1, 1, 2), (1, 1, 3)),
        ((1, 1, 2), (1, 2, 2)), ((0, 1, 3), (0, 1, 4)), ((0, 1, 2), (0, 1, 3)),
        ((0, 1, 2), (1, 1, 2)), ((1, 1, 1), (1, 1, 2)), ((0, 1, 1), (0, 1, 2)),
        ((0, 1, 1), (1, 1, 1)), ((0, 0, 1), (0, 1, 1)), ((0, 0, 0), (0, 0, 1)),
    }
    got = set()
    for a in uni:
        for b in uni:
            if a != b and h3.leq(a, b):
                if not any(c not in (a, b) and h3.leq(a, c) and h3.leq(c, b)
                           for c in uni):
                    got.add((lh3.of(a), lh3.of(b)))
    assert got == expected_edges


def test_unimodal_poset_equality(h3, lh3):
    # Bruhat and the code order agree on the unimodal set
    uni = unimodal_set(lh3)
    for a in uni:
        for b in uni:
            assert h3.leq(a, b) == code_leq(a, b, lh3)


def test_principal_poset_equality(a3, la3, h3, lh3):
    # ... and already on the whole principal set
    for poset, code in ((a3, la3), (h3, lh3)):
        pr = principal_set(code)
        for a in pr:
            for b in pr:
                assert poset.leq(a, b) == code_leq(a, b, code)


def test_pal_h3_matches_unimodal_and_principal(h3, lh3):
    pal = palindromic_intervals(h3)
    uni_polys = interval_polynomials(h3, unimodal_set(lh3))
    pr_polys = interval_polynomials(h3, principal_set(lh3))
    assert pal == uni_polys == pr_polys


def test_pal_a_n_counts():
    for n in (1, 2, 3, 4, 5):
        poset = shared_poset("A", n)
        assert len(palindromic_intervals(poset)) == 2 ** n


def test_unimodal_polys_inside_pal(a3, la3):
    pal = palindromic_intervals(a3)
    uni_polys = interval_polynomials(a3, unimodal_set(la3))
    pr_polys = interval_polynomials(a3, principal_set(la3))
    assert uni_polys == pr_polys
    assert uni_polys <= pal


def test_strict_inclusion_b3():
    b3 = shared_poset("B", 3)
    pal = palindromic_intervals(b3)
    u_std = unimodal_set(shared_standard_code("B", 3))
    u_var = unimodal_set(shared_standard_code("B", 3, variant=True))
    assert len(pal) > len(u_std)
    assert len(pal) == len(u_var)


def test_group_complexes_are_vertex_decomposable(h3):
    from coxlehmer.simplicial import is_vertex_decomposable

    assert is_vertex_decomposable(group_complex(shared_poset("A", 4)), max_facets=200)
    assert is_vertex_decomposable(group_complex(h3), max_facets=200)


def test_full_morphism_not_just_covers(a3, la3, h3, lh3):
    # the definition verbatim: componentwise order implies Bruhat order
    for poset, code in ((a3, la3), (h3, lh3)):
        for u in range(poset.size):
            cu = code.of(u)
            for v in range(poset.size):
                if all(a <= b for a, b in zip(cu, code.of(v))):
                    assert poset.leq(u, v)


def test_analyze_interval(a3, la3):
    w = a3.index[(3, 4, 1, 2)]
    info = analyze_interval(w, la3)
    assert info.h == IntPolynomial([1, 3, 5, 4, 1])
    assert not info.principal
    assert not info.unimodal
    assert not info.palindromic
    top = analyze_interval(a3.w0, la3)
    assert top.principal and top.unimodal and top.palindromic
