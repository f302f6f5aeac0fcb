"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a single PASS line with its runtime (visible with
pytest -rA); any assertion failure marks the criterion FAILED.
"""

import time

from coxlehmer.codes import (
    dual_code,
    enumerate_dihedral_codes,
    shared_standard_code,
    verify_code,
)
from coxlehmer.coxeter import shared_poset
from coxlehmer.intervals import code_meet, interval_ideal, interval_poincare
from coxlehmer.qpoly import IntPolynomial
from coxlehmer.schubert import catalan
from coxlehmer.verify import (
    CODE_SYSTEMS,
    suite_catalan,
    suite_d_factorization,
    suite_exponents,
    suite_flag,
    suite_h3_unimodal,
    suite_h3_quotients,
    suite_msequence,
    suite_shellings,
    suite_smooth,
    suite_strict_inclusions,
    suite_vd,
)


class _Stopwatch:
    def __init__(self, number, label):
        self.number = number
        self.label = label

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {self.number:02d} {status} [{elapsed:.2f}s] {self.label}")
        return False


def test_criterion_01_code_word_example():
    with _Stopwatch(1, "code of s2 s1 s3 s2 in A3 is (0,2,2)"):
        poset = shared_poset("A", 3)
        code = shared_standard_code("A", 3)
        w = poset.apply_word([1, 0, 2, 1])
        assert poset.elements[w] == (3, 4, 1, 2)
        assert code.of(w) == (0, 2, 2)


def test_criterion_02_worked_interval_3412():
    with _Stopwatch(2, "3412 interval: three routes, maxima, meets"):
        poset = shared_poset("A", 3)
        code = shared_standard_code("A", 3)
        w = poset.index[(3, 4, 1, 2)]
        expected = IntPolynomial([1, 3, 5, 4, 1])
        for route in ("direct", "complex", "maxima"):
            assert interval_poincare(w, code, route) == expected
        ideal = interval_ideal(w, code)
        maxima_elements = {poset.elements[code.element(v)] for v in ideal.maxima()}
        assert maxima_elements == {(2, 4, 1, 3), (3, 2, 1, 4), (3, 4, 1, 2)}
        u, v = poset.index[(2, 4, 1, 3)], poset.index[(3, 2, 1, 4)]
        assert poset.elements[code_meet(u, v, code)] == (2, 1, 3, 4)
        assert poset.elements[code_meet(u, w, code)] == (1, 4, 2, 3)
        assert poset.elements[code_meet(v, w, code)] == (3, 1, 2, 4)
        assert poset.elements[code_meet(code_meet(u, v, code), w, code)] == (1, 2, 3, 4)


def test_criterion_03_code_validity():
    with _Stopwatch(3, "all shipped codes and duals are valid"):
        for label, rank, m in CODE_SYSTEMS:
            code = shared_standard_code(label, rank, m)
            rep = verify_code(code)
            assert rep.passed, (code.name, rep.witnesses)
            rep_dual = verify_code(dual_code(code))
            assert rep_dual.passed, (code.name, rep_dual.witnesses)


def test_criterion_04_catalan_classification():
    with _Stopwatch(4, "principal = lazy Fubini = 312-avoiding, n = 2..7"):
        rep = suite_catalan(n=7)
        assert rep.passed, rep.witnesses
        assert [catalan(n) for n in range(2, 8)] == [2, 5, 14, 42, 132, 429]


def test_criterion_05_smooth_classification():
    with _Stopwatch(5, "smooth = unimodal Poincare sets, n = 3..6"):
        rep = suite_smooth(n=6)
        assert rep.passed, rep.witnesses


def test_criterion_06_h3_unimodal():
    with _Stopwatch(6, "17 unimodal triples and palindromic equalities in H3"):
        rep = suite_h3_unimodal()
        assert rep.passed, rep.witnesses


def test_criterion_07_shellings():
    with _Stopwatch(7, "every linear extension shells; h equals ideal ranks"):
        rep = suite_shellings(seed=2024)
        assert rep.passed, rep.witnesses
        assert rep.failures == 0


def test_criterion_08_vertex_decomposability():
    with _Stopwatch(8, "ideal complexes in boxes up to volume 16 and S4 intervals"):
        rep = suite_vd(max_volume=16)
        assert rep.passed, rep.witnesses
        assert rep.failures == 0


def test_criterion_09_flag_equivalence():
    with _Stopwatch(9, "complex flag iff ideal flag over 0/1 boxes"):
        rep = suite_flag()
        assert rep.passed, rep.witnesses


def test_criterion_10_m_sequences():
    with _Stopwatch(10, "interval rank counts pass the Macaulay test"):
        rep = suite_msequence()
        assert rep.passed, rep.witnesses


def test_criterion_11_d_structure():
    with _Stopwatch(11, "type D quotient recursion and chain factorization"):
        rep = suite_d_factorization()
        assert rep.passed, rep.witnesses


def test_criterion_12_h3_structure():
    with _Stopwatch(12, "H3 five-set equality and chain factorization"):
        rep = suite_h3_quotients()
        assert rep.passed, rep.witnesses


def test_criterion_13_dihedral_code_count():
    with _Stopwatch(13, "2^(m-1) dihedral codes for m = 3, 4, 5"):
        for m, expected in ((3, 4), (4, 8), (5, 16)):
            found = enumerate_dihedral_codes(shared_poset("I2", None, m))
            assert len(found) == expected


def test_criterion_14_strict_inclusions():
    with _Stopwatch(14, "palindromic versus unimodal counts in B3, B4, D4, D5"):
        rep = suite_strict_inclusions()
        assert rep.passed, rep.witnesses


def test_criterion_15_exponent_products():
    with _Stopwatch(15, "group Poincare polynomials factor over the exponents"):
        rep = suite_exponents()
        assert rep.passed, rep.witnesses
        assert shared_poset("H3").exponents() == (1, 5, 9)
