"""Verification suites: each re-checks one family of structural claims at
desk scale and returns a Report.  The CLI exposes them under `verify`; the
acceptance tests call them directly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import codes as codes_mod
from . import intervals, schubert
from .coxeter import shared_poset
from .multicomplex import (
    ChainProduct,
    all_order_ideals,
    count_linear_extensions,
    is_m_sequence,
    linear_extensions,
    random_order_ideals,
    sample_linear_extensions,
)
from .qpoly import IntPolynomial, q_analog_product
from .report import Report
from .simplicial import (
    complex_of_ideal,
    f_vector,
    h_from_f,
    is_flag,
    is_flag_ideal,
    is_vertex_decomposable,
    order_from_extension,
    verify_shelling,
)

H3_UNIMODAL_TRIPLES = frozenset({
    (1, 5, 9), (1, 5, 4), (1, 4, 4), (1, 3, 4), (1, 2, 4), (1, 1, 4), (1, 2, 3),
    (0, 1, 4), (1, 1, 3), (1, 2, 2), (0, 1, 3), (1, 1, 2), (0, 1, 2), (1, 1, 1),
    (0, 1, 1), (0, 0, 1), (0, 0, 0),
})

CODE_SYSTEMS = (
    [("A", n, None) for n in range(1, 6)]
    + [("B", n, None) for n in range(2, 5)]
    + [("D", n, None) for n in (4, 5)]
    + [("H3", None, None)]
    + [("I2", None, m) for m in range(3, 11)]
)


def _cap_rank(systems, max_rank):
    if max_rank is None:
        return list(systems)
    return [(label, rank, m) for label, rank, m in systems
            if (rank or (3 if label == "H3" else 2)) <= max_rank]


def suite_codes(seed: int = 2024, jobs: int = 1, max_rank: int | None = None, **_) -> Report:
    """Validity of every shipped code and its dual, plus the dihedral count."""
    rep = Report("codes")
    systems = _cap_rank(CODE_SYSTEMS, max_rank)

    def one(system_key):
        label, rank, m = system_key
        code = codes_mod.shared_standard_code(label, rank, m)
        sub = codes_mod.verify_code(code)
        sub.merge(codes_mod.verify_code(codes_mod.dual_code(code)))
        return sub

    for sub in _pool_map(one, systems, jobs):
        rep.merge(sub)
    for m in (3, 4, 5):
        found = codes_mod.enumerate_dihedral_codes(shared_poset("I2", None, m))
        rep.check(len(found) == 2 ** (m - 1),
                  f"I2({m}): found {len(found)} codes, expected {2 ** (m - 1)}")
    rep.note(f"{len(systems)} systems with duals; dihedral counts at m=3,4,5")
    return rep


def _check_ideal_shellings(rep: Report, ideal, extensions) -> None:
    sc = complex_of_ideal(ideal)
    expected = tuple(ideal.f_polynomial().coeffs)
    transform = tuple(h_from_f(f_vector(sc), sc.dimension))
    rep.check(IntPolynomial(transform) == IntPolynomial(expected),
              f"{ideal.to_json()}: f/h transform disagrees with the ideal ranks")
    for ext in extensions:
        res = verify_shelling(sc, order_from_extension(sc, ext))
        if not rep.check(res.ok, f"{ideal.to_json()}: extension fails at {res.violation}"):
            return
        rep.check(IntPolynomial(res.h_vector) == IntPolynomial(expected),
                  f"{ideal.to_json()}: shelling h-vector differs from ideal ranks")


def suite_shellings(seed: int = 2024, extension_cap: int = 10 ** 4,
                    sample_size: int = 100, random_ideal_count: int = 100, **_) -> Report:
    """Every linear extension of an ideal shells its complex, and the
    h-vector matches the ideal's rank counts both ways."""
    rep = Report("shellings")
    for dims in [(2, 3), (2, 2, 2)]:
        for ideal in all_order_ideals(ChainProduct(dims)):
            _check_ideal_shellings(rep, ideal, linear_extensions(ideal))
    big = ChainProduct((3, 3, 4))
    for k, ideal in enumerate(random_order_ideals(big, random_ideal_count, seed)):
        if count_linear_extensions(ideal, cap=extension_cap) <= extension_cap:
            exts = linear_extensions(ideal)
        else:
            exts = sample_linear_extensions(ideal, sample_size, seed + k)
        _check_ideal_shellings(rep, ideal, exts)
    return rep


def _boxes_up_to(volume: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, minimum, vol):
        if prefix:
            out.append(tuple(prefix))
        d = minimum
        while vol * d <= volume:
            rec(prefix + [d], d, vol * d)
            d += 1

    rec([], 2, 1)
    return sorted(out)


def suite_vd(max_volume: int = 16, **_) -> Report:
    """Vertex decomposability of every ideal complex in small boxes and of
    every interval complex in S4."""
    rep = Report("vertex decomposability")
    boxes = _boxes_up_to(max_volume)
    for dims in boxes:
        for ideal in all_order_ideals(ChainProduct(dims)):
            rep.check(is_vertex_decomposable(complex_of_ideal(ideal), max_facets=max_volume),
                      f"box {dims}: ideal {ideal.to_json()} not vertex decomposable")
    code = codes_mod.shared_standard_code("A", 3)
    for w in range(code.poset.size):
        rep.check(is_vertex_decomposable(intervals.interval_complex(w, code), max_facets=64),
                  f"S4 interval below {code.poset.render(w)} not vertex decomposable")
    rep.note(f"{len(boxes)} boxes up to volume {max_volume}, plus 24 S4 intervals")
    return rep


def suite_flag(**_) -> Report:
    """Flagness of the complex matches flagness of the ideal on 0/1 boxes."""
    rep = Report("flag equivalence")
    for dims in [(2, 2, 2), (2, 2, 2, 2)]:
        for ideal in all_order_ideals(ChainProduct(dims)):
            rep.check(is_flag(complex_of_ideal(ideal)) == is_flag_ideal(ideal),
                      f"box {dims}: ideal {ideal.to_json()} breaks the equivalence")
    return rep


ROUTE_SYSTEMS = (
    [("A", n, None) for n in range(1, 5)]
    + [("B", 3, None), ("D", 4, None), ("H3", None, None)]
    + [("I2", None, m) for m in range(3, 9)]
)


def suite_routes(jobs: int = 1, max_rank: int | None = None, **_) -> Report:
    """The three interval Poincare routes agree everywhere, including the
    worked S4 example with its maxima and meets."""
    rep = Report("route agreement")
    systems = _cap_rank(ROUTE_SYSTEMS, max_rank)

    a3 = shared_poset("A", 3)
    la3 = codes_mod.shared_standard_code("A", 3)
    w = a3.index[(3, 4, 1, 2)]
    expected = IntPolynomial([1, 3, 5, 4, 1])
    for route in intervals.ROUTES:
        rep.check(intervals.interval_poincare(w, la3, route) == expected,
                  f"3412 {route} route")
    ideal = intervals.interval_ideal(w, la3)
    maxima_elems = {a3.elements[la3.element(v)] for v in ideal.maxima()}
    rep.check(maxima_elems == {(2, 4, 1, 3), (3, 2, 1, 4), (3, 4, 1, 2)},
              f"3412 maxima are {sorted(maxima_elems)}")
    u, v = a3.index[(2, 4, 1, 3)], a3.index[(3, 2, 1, 4)]
    meets = {
        a3.elements[intervals.code_meet(u, v, la3)],
        a3.elements[intervals.code_meet(u, w, la3)],
        a3.elements[intervals.code_meet(v, w, la3)],
        a3.elements[intervals.code_meet(intervals.code_meet(u, v, la3), w, la3)],
    }
    rep.check(meets == {(2, 1, 3, 4), (1, 4, 2, 3), (3, 1, 2, 4), (1, 2, 3, 4)},
              f"3412 meets are {sorted(meets)}")

    def one(system_key):
        label, rank, m = system_key
        code = codes_mod.shared_standard_code(label, rank, m)
        sub = Report(f"routes {code.name}")
        for x in range(code.poset.size):
            direct = intervals.interval_poincare(x, code, "direct")
            for route in ("complex", "maxima"):
                sub.check(intervals.interval_poincare(x, code, route) == direct,
                          f"{code.poset.render(x)}: {route} route differs")
        return sub

    for sub in _pool_map(one, systems, jobs):
        rep.merge(sub)
    return rep


def suite_catalan(n: int = 7, max_rank: int | None = None, **_) -> Report:
    if max_rank is not None:
        n = min(n, max_rank + 1)
    rep = Report("catalan classification")
    for k in range(2, n + 1):
        rep.merge(schubert.verify_catalan_equivalence(k))
    return rep


def suite_unimodal(n: int = 5, max_rank: int | None = None, **_) -> Report:
    if max_rank is not None:
        n = min(n, max_rank + 1)
    rep = Report("unimodal classification")
    for k in range(2, n + 1):
        rep.merge(schubert.verify_unimodal_equivalence(k))
    rep.merge(schubert.verify_tail_partitions(min(n + 1, 6)))
    rep.merge(schubert.verify_forest_chain_counts(min(n, 5)))
    return rep


def suite_smooth(n: int = 6, max_rank: int | None = None, **_) -> Report:
    if max_rank is not None:
        n = min(n, max_rank + 1)
    rep = Report("smooth classification")
    for k in range(3, n + 1):
        rep.merge(schubert.verify_smooth_classification(k))
    rep.merge(schubert.verify_smooth_factorization(min(n, 5)))
    return rep


def suite_h3_unimodal(**_) -> Report:
    """The 17 unimodal code triples and the palindromic classification."""
    rep = Report("H3 unimodal classification")
    poset = shared_poset("H3")
    code = codes_mod.shared_standard_code("H3")
    uni = intervals.unimodal_set(code)
    rep.check(len(uni) == 17, f"|unimodal| = {len(uni)}")
    triples = {code.of(w) for w in uni}
    rep.check(triples == H3_UNIMODAL_TRIPLES,
              f"triples differ: extra {sorted(triples - H3_UNIMODAL_TRIPLES)}, "
              f"missing {sorted(H3_UNIMODAL_TRIPLES - triples)}")
    pal = intervals.palindromic_intervals(poset)
    uni_polys = intervals.interval_polynomials(poset, uni)
    pr_polys = intervals.interval_polynomials(poset, intervals.principal_set(code))
    rep.check(pal == uni_polys, "palindromic set differs from unimodal polynomials")
    rep.check(uni_polys == pr_polys, "unimodal and principal polynomials differ")
    rep.note(f"{len(uni)} unimodal code triples; {len(pal)} palindromic polynomials")
    return rep


def suite_d_factorization(**_) -> Report:
    """Type D chain structure: quotient recursion and bijective factorization."""
    rep = Report("D factorization")
    for n in (4, 5):
        poset = shared_poset("D", n)
        rep.merge(codes_mod.verify_d_factorization(poset))
        code = codes_mod.shared_standard_code("D", n)  # build aborts on failure
        rep.check(code.box_size() == poset.size, f"D{n} code table size")
        chains = codes_mod.chain_words(f"D{n}")["chains"]
        sizes = [len(c) for c in chains]
        rep.check(sizes == [2 * i for i in range(1, n)] + [n],
                  f"D{n} chain sizes are {sizes}")
    return rep


def suite_h3_quotients(**_) -> Report:
    return codes_mod.verify_h3_quotients(shared_poset("H3"))


def suite_strict_inclusions(**_) -> Report:
    """Palindromic counts against unimodal counts for both B codes and D."""
    rep = Report("palindromic strict inclusions")

    def pal_count(label, rank):
        return len(intervals.palindromic_intervals(shared_poset(label, rank)))

    def uni_count(label, rank, variant=False):
        return len(intervals.unimodal_set(
            codes_mod.shared_standard_code(label, rank, variant=variant)))

    pal_b3 = pal_count("B", 3)
    rep.check(pal_b3 > uni_count("B", 3), "expected |Pal(B3)| > |U(LB3)|")
    rep.check(pal_b3 == uni_count("B", 3, variant=True),
              "expected |Pal(B3)| = |U(LB3~)|")
    rep.check(pal_count("B", 4) > uni_count("B", 4, variant=True),
              "expected |Pal(B4)| > |U(LB4~)|")
    rep.check(pal_count("D", 4) == uni_count("D", 4),
              "expected |Pal(D4)| = |U(LD4)|")
    rep.check(pal_count("D", 5) > uni_count("D", 5),
              "expected |Pal(D5)| > |U(LD5)|")
    return rep


MSEQUENCE_SYSTEMS = (("A", 4, None), ("B", 3, None), ("D", 4, None),
                     ("H3", None, None), ("I2", None, 8))


def suite_msequence(**_) -> Report:
    """Interval rank counts satisfy the Macaulay growth bound everywhere."""
    rep = Report("interval M-sequences")
    for label, rank, m in MSEQUENCE_SYSTEMS:
        poset = shared_poset(label, rank, m)
        for w in range(poset.size):
            rep.check(is_m_sequence(poset.interval_poincare_coeffs(w)),
                      f"{poset.system.describe()}: interval below {poset.render(w)}")
    return rep


def suite_exponents(**_) -> Report:
    """The group Poincare polynomial factors over the exponents exactly."""
    rep = Report("exponent products")
    expected = {
        ("A", 1, None): (1,), ("A", 2, None): (1, 2), ("A", 3, None): (1, 2, 3),
        ("A", 4, None): (1, 2, 3, 4), ("A", 5, None): (1, 2, 3, 4, 5),
        ("B", 2, None): (1, 3), ("B", 3, None): (1, 3, 5), ("B", 4, None): (1, 3, 5, 7),
        ("D", 4, None): (1, 3, 3, 5), ("D", 5, None): (1, 3, 4, 5, 7),
        ("H3", None, None): (1, 5, 9),
    }
    expected.update({("I2", None, m): (1, m - 1) for m in range(3, 11)})
    for (label, rank, m), exps in expected.items():
        poset = shared_poset(label, rank, m)
        got = poset.exponents()
        rep.check(got == exps, f"{poset.system.describe()}: exponents {got} != {exps}")
        rep.check(poset.group_poincare() == q_analog_product(e + 1 for e in got),
                  f"{poset.system.describe()}: Poincare product mismatch")
    return rep


SUITES = {
    "codes": suite_codes,
    "shellings": suite_shellings,
    "vd": suite_vd,
    "flag": suite_flag,
    "routes": suite_routes,
    "catalan": suite_catalan,
    "unimodal": suite_unimodal,
    "smooth": suite_smooth,
    "h3-unimodal": suite_h3_unimodal,
    "d-factorization": suite_d_factorization,
    "h3-quotients": suite_h3_quotients,
    "strict-inclusions": suite_strict_inclusions,
    "msequence": suite_msequence,
    "exponents": suite_exponents,
}


def _pool_map(fn, items, jobs: int):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def run_suite(name: str, **opts) -> Report:
    if name == "all":
        rep = Report("all")
        for key in SUITES:
            rep.merge(run_suite(key, **opts))
        return rep
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; valid: {', '.join([*SUITES, 'all'])}") from None
    return fn(**opts)
