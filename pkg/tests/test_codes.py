import itertools

import pytest

from coxlehmer.codes import (
    LehmerCode,
    chain_words,
    classic_lehmer_code,
    code_a,
    code_b,
    code_d,
    code_h3,
    code_i2,
    dual_code,
    enumerate_dihedral_codes,
    inversion_code,
    product_code,
    standard_code,
    verify_code,
    verify_d_factorization,
    verify_h3_quotients,
)
from coxlehmer.coxeter import build_system, enumerate_group, product_system


@pytest.fixture(scope="module")
def a3():
    return enumerate_group(build_system("A", 3))


@pytest.fixture(scope="module")
def a4():
    return enumerate_group(build_system("A", 4))


@pytest.fixture(scope="module")
def b3():
    return enumerate_group(build_system("B", 3))


@pytest.fixture(scope="module")
def d4():
    return enumerate_group(build_system("D", 4))


@pytest.fixture(scope="module")
def h3():
    return enumerate_group(build_system("H3"))


# -- dihedral


def test_code_i2_basics():
    p = enumerate_group(build_system("I2", m=4))
    code = code_i2(p)
    assert code.of(0) == (0, 0)
    assert code.of(p.w0) == (1, 3)
    assert code.bounds == (1, 3)
    assert verify_code(code).passed


def test_code_i2_rejects_wrong_type(a3):
    with pytest.raises(ValueError, match="dihedral"):
        code_i2(a3)


@pytest.mark.parametrize("m,count", [(3, 4), (4, 8), (5, 16)])
def test_enumerate_dihedral_codes_count(m, count):
    p = enumerate_group(build_system("I2", m=m))
    assert len(enumerate_dihedral_codes(p)) == count


def test_enumerate_dihedral_codes_limit():
    p = enumerate_group(build_system("I2", m=9))
    with pytest.raises(ValueError, match="m <= 8"):
        enumerate_dihedral_codes(p)


def test_dihedral_codes_are_automorphism_twists():
    # brute-force the rank-preserving poset automorphisms and compose
    for m in (3, 4, 5):
        p = enumerate_group(build_system("I2", m=m))
        base = code_i2(p)
        levels = [[w for w in range(p.size) if p.length[w] == l] for l in range(m + 1)]
        autos = []
        for mask in range(2 ** (m - 1)):
            f = list(range(p.size))
            for l in range(1, m):
                if mask >> (l - 1) & 1:
                    a, b = levels[l]
                    f[a], f[b] = b, a
            if all(p.leq(u, w) == p.leq(f[u], f[w])
                   for u in range(p.size) for w in range(p.size)):
                autos.append(f)
        assert len(autos) == 2 ** (m - 1)
        twisted = {tuple(base.vectors[f[w]] for w in range(p.size)) for f in autos}
        found = {tuple(c.vectors) for c in enumerate_dihedral_codes(p)}
        assert twisted == found


# -- type A


def test_code_a_known_values(a3):
    code = code_a(a3)
    w = a3.index[(3, 4, 1, 2)]
    assert code.of(w) == (0, 2, 2)
    assert code.of(0) == (0, 0, 0)
    assert code.of(a3.w0) == (1, 2, 3)
    assert code.bounds == (1, 2, 3)


def test_code_a_valid_on_a4(a4):
    assert verify_code(code_a(a4)).passed


def test_inversion_code_examples():
    assert inversion_code((1, 2, 3, 4)) == (0, 0, 0, 0)
    assert inversion_code((3, 4, 1, 2)) == (0, 0, 2, 2)


def test_inversion_code_matches_code_a_up_to_s6():
    for n in (5, 6):
        p = enumerate_group(build_system("A", n - 1))
        code = code_a(p)
        for w, perm in enumerate(p.elements):
            assert inversion_code(perm) == (0,) + code.of(w)


def test_classic_lehmer_examples():
    assert classic_lehmer_code((1, 2, 3, 4)) == (0, 0, 0, 0)
    assert classic_lehmer_code((4, 3, 2, 1)) == (3, 2, 1, 0)


def test_classic_lehmer_conjugation_identity():
    # classic(w)_i equals the value-indexed code of w0 w^{-1} w0, read backwards
    def compose(a, b):
        return tuple(a[v - 1] for v in b)

    for n in (4, 5):
        w0 = tuple(range(n, 0, -1))
        for perm in itertools.permutations(range(1, n + 1)):
            inv = tuple(perm.index(v) + 1 for v in range(1, n + 1))
            winv = compose(compose(w0, inv), w0)
            lhs = classic_lehmer_code(perm)
            rhs = inversion_code(winv)
            assert lhs == tuple(rhs[n - i - 1] for i in range(n))


# -- type B


def test_code_b_examples(b3):
    code = code_b(b3)
    assert code.of(0) == (0, 0, 0)
    assert code.bounds == (1, 3, 5)
    assert verify_code(code).passed


def test_code_b2_quotient_word():
    p = enumerate_group(build_system("B", 2))
    code = code_b(p)
    w = p.apply_word([1, 0, 1])  # s2 s1 s2
    assert code.of(w) == (0, 3)


def test_code_b_max_quotient_is_chain(b3):
    # the quotient by the parabolic missing the last generator has 2n elements
    quot = b3.minimal_coset_reps((0, 1))
    assert len(quot) == 6
    lens = sorted(b3.length[w] for w in quot)
    assert lens == list(range(6))


def test_code_b_variant(b3):
    code = code_b(b3, variant=True)
    assert code.name.endswith("~")
    assert code.bounds == (1, 3, 5)
    assert verify_code(code).passed
    assert code.vectors != code_b(b3).vectors


# -- type D


def test_chain_data_shapes():
    for n in (4, 5, 6):
        chains = chain_words(f"D{n}")["chains"]
        assert [len(c) for c in chains[:-1]] == [2 * i for i in range(1, n)]
        assert len(chains[-1]) == n


def test_chain_first_parts_are_parabolic_quotients(d4):
    # the low half of each X_i is the one-step parabolic quotient
    n = 4
    chains = chain_words("D4")["chains"]
    for i in range(2, n):
        words = chains[i - 1][: i + 1]
        got = {d4.apply_word([d4.system.gen_index(s) for s in w]) for w in words}
        par = d4.parabolic_elements([d4.system.gen_index(s) for s in range(1, i + 1)])
        quot = {w for w in par
                if not (d4.descents_left(w)
                        & {d4.system.gen_index(s) for s in range(1, i)})}
        assert got == quot


def test_code_d_valid(d4):
    code = code_d(d4)
    assert code.of(0) == (0, 0, 0, 0)
    assert code.bounds == (1, 3, 5, 3)
    assert verify_code(code).passed


def test_verify_d_factorization():
    p4 = enumerate_group(build_system("D", 4))
    rep = verify_d_factorization(p4)
    assert rep.passed, rep.witnesses
    p5 = enumerate_group(build_system("D", 5))
    rep5 = verify_d_factorization(p5)
    assert rep5.passed, rep5.witnesses


def test_code_d6_supported():
    # the upper end of the default type D support range
    from coxlehmer.coxeter import shared_poset

    p6 = shared_poset("D", 6)
    code = code_d(p6)
    assert code.bounds == (1, 3, 5, 7, 9, 5)
    assert p6.exponents() == (1, 3, 5, 5, 7, 9)
    assert verify_code(code).passed


# -- type H3


def test_code_h3(h3):
    code = code_h3(h3)
    assert code.of(0) == (0, 0, 0)
    assert code.of(h3.w0) == (1, 5, 9)
    assert code.bounds == (1, 5, 9)
    assert verify_code(code).passed


def test_verify_h3_quotients(h3):
    rep = verify_h3_quotients(h3)
    assert rep.passed, rep.witnesses


# -- duals, products, dispatch


def test_dual_is_involution(a3):
    code = code_a(a3)
    assert dual_code(dual_code(code)).vectors == code.vectors


def test_dual_code_valid(a3, b3):
    assert verify_code(dual_code(code_a(a3))).passed
    assert verify_code(dual_code(code_b(b3))).passed


def test_dual_fixes_longest_element(a3, b3, h3):
    for poset, code in ((a3, code_a(a3)), (b3, code_b(b3)), (h3, code_h3(h3))):
        assert poset.mult(poset.w0, poset.w0) == 0  # w0 is an involution
        assert dual_code(code).of(poset.w0) == code.of(poset.w0)


def test_product_code():
    sa2 = build_system("A", 2)
    sa1 = build_system("A", 1)
    pa2, pa1 = enumerate_group(sa2), enumerate_group(sa1)
    prod = enumerate_group(product_system(sa2, sa1))
    code = product_code(code_a(pa2), code_a(pa1), prod)
    assert code.bounds == (1, 2, 1)
    assert code.of(0) == (0, 0, 0)
    assert verify_code(code).passed


def test_product_code_a1_a1():
    s = build_system("A", 1)
    p = enumerate_group(s)
    prod = enumerate_group(product_system(s, s))
    code = product_code(code_a(p), code_a(p), prod)
    assert code.bounds == (1, 1)
    assert verify_code(code).passed


def test_product_code_factor_mismatch(a3):
    p1 = enumerate_group(build_system("A", 1))
    with pytest.raises(ValueError, match="split"):
        product_code(code_a(p1), code_a(p1), a3)


def test_standard_code_dispatch(a3, b3, d4, h3):
    assert standard_code(a3).name == "LA3"
    assert standard_code(b3).name == "LB3"
    assert standard_code(d4).name == "LD4"
    assert standard_code(h3).name == "LH3"
    p = enumerate_group(build_system("I2", m=5))
    assert standard_code(p).name == "LI2(5)"


# -- verification behaviour


def test_verify_code_negative_control(a3):
    code = code_a(a3)
    s1 = a3.index[(2, 1, 3, 4)]
    s3 = a3.index[(1, 2, 4, 3)]
    vectors = list(code.vectors)
    vectors[s1], vectors[s3] = vectors[s3], vectors[s1]
    bad = LehmerCode("corrupted", a3, code.bounds, vectors,
                     {v: w for w, v in enumerate(vectors)})
    rep = verify_code(bad)
    assert not rep.passed
    assert rep.failures > 0
    assert rep.witnesses


def test_sum_of_code_is_length_everywhere(a4, b3, d4, h3):
    for poset, build in ((a4, code_a), (b3, code_b), (d4, code_d), (h3, code_h3)):
        code = build(poset)
        for w in range(poset.size):
            assert sum(code.of(w)) == poset.length[w]


def test_code_json_table(a3):
    table = code_a(a3).to_json()
    assert table["3412"] == [0, 2, 2]
    assert table["1234"] == [0, 0, 0]
    assert len(table) == 24
