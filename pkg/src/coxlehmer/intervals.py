"""Lower Bruhat intervals through a Lehmer code.

A valid code turns the interval below w into an order ideal of the product
of chains.  This module computes the interval's rank generating function
three independent ways (direct summation, shelling of the attached complex,
inclusion-exclusion over the ideal's maxima with meets of code vectors),
and classifies elements whose intervals are full boxes (principal) or
lexicographically minimal in their coordinate orbit (unimodal).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .codes import LehmerCode
from .coxeter import BruhatPoset
from .multicomplex import ChainProduct, OrderIdeal, is_order_ideal, join, meet
from .qpoly import IntPolynomial, q_analog_product
from .report import Report
from .simplicial import SimplicialComplex, build_box_complex, complex_of_ideal, shelling_h_polynomial

ROUTES = ("direct", "complex", "maxima")


class InvalidCodeImage(RuntimeError):
    """The image of an interval is not an order ideal: the code is broken."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# ideals and complexes of intervals


def interval_ideal(w: int, code: LehmerCode) -> OrderIdeal:
    """The code image of {v : v <= w}, checked to be downward closed."""
    poset = code.poset
    pts = {code.of(v) for v in _bits(poset.downset(w))}
    amb = ChainProduct(tuple(b + 1 for b in code.bounds))
    if not is_order_ideal(amb, pts):
        raise InvalidCodeImage(
            f"{code.name}: image of the interval below {poset.render(w)} "
            f"is not an order ideal")
    return OrderIdeal(amb, pts, _trusted=True)


def group_complex(poset: BruhatPoset) -> SimplicialComplex:
    """The box complex over the group's exponents; no code needed."""
    return build_box_complex(tuple(e + 1 for e in poset.exponents()))


def interval_complex(w: int, code: LehmerCode) -> SimplicialComplex:
    return complex_of_ideal(interval_ideal(w, code))


# ---------------------------------------------------------------------------
# the three Poincare routes


@lru_cache(maxsize=None)
def _box_poly(dims: tuple[int, ...]) -> IntPolynomial:
    return q_analog_product(dims)


def interval_poincare(w: int, code: LehmerCode, route: str = "direct",
                      max_maxima: int = 20) -> IntPolynomial:
    """Rank generating function of {v : v <= w} by the chosen route.

    "direct" sums q^length over the interval; "complex" reads the h-vector
    off a shelling of the interval's complex; "maxima" runs
    inclusion-exclusion over subsets of the ideal's maximal points, with
    meets taken componentwise.
    """
    if route == "direct":
        return IntPolynomial(code.poset.interval_poincare_coeffs(w))
    if route == "complex":
        return shelling_h_polynomial(interval_complex(w, code))
    if route == "maxima":
        maxs = sorted(interval_ideal(w, code).maxima())
        if len(maxs) > max_maxima:
            raise ValueError(
                f"{len(maxs)} maxima exceeds the inclusion-exclusion bound {max_maxima}")
        total = IntPolynomial()
        k = len(maxs)

        def rec(start, current, size):
            nonlocal total
            for j in range(start, k):
                m = meet(current, maxs[j]) if size else maxs[j]
                term = _box_poly(tuple(x + 1 for x in m))
                total = total + (term if size % 2 == 0 else -term)
                rec(j + 1, m, size + 1)

        rec(0, None, 0)
        return total
    raise ValueError(f"unknown route {route!r}; valid: {', '.join(ROUTES)}")


# ---------------------------------------------------------------------------
# the code order on the group


def code_leq(u: int, v: int, code: LehmerCode) -> bool:
    return all(a <= b for a, b in zip(code.of(u), code.of(v)))


def code_meet(u: int, v: int, code: LehmerCode) -> int:
    return code.element(meet(code.of(u), code.of(v)))


def code_join(u: int, v: int, code: LehmerCode) -> int:
    return code.element(join(code.of(u), code.of(v)))


def code_interval_size(w: int, code: LehmerCode) -> int:
    n = 1
    for x in code.of(w):
        n *= x + 1
    return n


# ---------------------------------------------------------------------------
# principal and unimodal elements


def is_principal(w: int, code: LehmerCode) -> bool:
    """Whether the interval below w is exactly the box below its code."""
    return code.poset.downset(w).bit_count() == code_interval_size(w, code)


def principal_set(code: LehmerCode) -> list[int]:
    return [w for w in range(code.poset.size) if is_principal(w, code)]


def verify_principal_lattice(code: LehmerCode, principal: list[int] | None = None) -> Report:
    """Closure of the principal set under code meet and join, plus the
    distributive laws on principal triples."""
    rep = Report(f"principal lattice of {code.name}")
    pr = principal_set(code) if principal is None else principal
    pr_set = set(pr)
    for a, b in itertools.combinations(pr, 2):
        rep.check(code_meet(a, b, code) in pr_set,
                  f"meet of {code.poset.render(a)}, {code.poset.render(b)} not principal")
        rep.check(code_join(a, b, code) in pr_set,
                  f"join of {code.poset.render(a)}, {code.poset.render(b)} not principal")
    for a, b, c in itertools.combinations(pr, 3):
        va, vb, vc = code.of(a), code.of(b), code.of(c)
        rep.check(meet(va, join(vb, vc)) == join(meet(va, vb), meet(va, vc)),
                  "distributivity fails")
        rep.check(join(va, meet(vb, vc)) == meet(join(va, vb), join(va, vc)),
                  "distributivity fails")
    return rep


def code_orbit(w: int, code: LehmerCode,
               principal_vectors: frozenset | None = None) -> set[tuple[int, ...]]:
    """Principal code vectors that are coordinate permutations of L(w)."""
    if principal_vectors is None:
        principal_vectors = frozenset(code.of(u) for u in principal_set(code))
    return set(itertools.permutations(code.of(w))) & set(principal_vectors)


def is_unimodal_element(w: int, code: LehmerCode,
                        principal_vectors: frozenset | None = None) -> bool:
    """Whether a principal element's code is the lex minimum of its orbit."""
    if not is_principal(w, code):
        raise ValueError(f"{code.poset.render(w)} is not principal under {code.name}")
    return code.of(w) == min(code_orbit(w, code, principal_vectors))


def unimodal_set(code: LehmerCode) -> list[int]:
    pr = principal_set(code)
    pr_vecs = frozenset(code.of(u) for u in pr)
    return [w for w in pr if code.of(w) == min(code_orbit(w, code, pr_vecs))]


# ---------------------------------------------------------------------------
# palindromic intervals


def interval_is_palindromic(w: int, poset: BruhatPoset) -> bool:
    cs = poset.interval_poincare_coeffs(w)
    return cs == cs[::-1]


def palindromic_intervals(poset: BruhatPoset) -> set[IntPolynomial]:
    """Distinct palindromic rank generating functions of lower intervals."""
    out = set()
    for w in range(poset.size):
        cs = poset.interval_poincare_coeffs(w)
        if cs == cs[::-1]:
            out.add(IntPolynomial(cs))
    return out


def interval_polynomials(poset: BruhatPoset, elements) -> set[IntPolynomial]:
    return {IntPolynomial(poset.interval_poincare_coeffs(w)) for w in elements}


@dataclass
class IntervalAnalysis:
    element: int
    code_name: str
    ideal: OrderIdeal
    maxima: set
    h: IntPolynomial
    principal: bool
    unimodal: bool
    palindromic: bool


def analyze_interval(w: int, code: LehmerCode,
                     principal_vectors: frozenset | None = None) -> IntervalAnalysis:
    poset = code.poset
    ideal = interval_ideal(w, code)
    h = IntPolynomial(poset.interval_poincare_coeffs(w))
    assert h(1) == len(ideal)
    assert h.degree == poset.length[w]
    principal = is_principal(w, code)
    unimodal = principal and is_unimodal_element(w, code, principal_vectors)
    return IntervalAnalysis(
        element=w,
        code_name=code.name,
        ideal=ideal,
        maxima=ideal.maxima(),
        h=h,
        principal=principal,
        unimodal=unimodal,
        palindromic=interval_is_palindromic(w, poset),
    )
