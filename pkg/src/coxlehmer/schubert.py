"""Smooth permutations and the combinatorics of their Poincare polynomials.

Everything here speaks plain one-line permutations (tuples over 1..n).
A permutation w gives a poset on [n] whose comparability graph is the
permutation graph of w; for smooth w (avoiding 3412 and 4231) the counts of
saturated chains by rank assemble into a partition whose dual lists the
factorization exponents of the interval below w.  Unimodal permutations,
lazy Fubini words and partitions into distinct parts tie the classes
together; the verify_* routines check those equivalences exhaustively
against the enumerated Bruhat order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .codes import inversion_code
from .coxeter import shared_poset
from .qpoly import IntPolynomial, q_analog_product
from .report import Report

SMOOTH_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


def perm_inverse(w):
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def identity_perm(n):
    return tuple(range(1, n + 1))


def _standardize(vals):
    order = sorted(vals)
    return tuple(order.index(v) + 1 for v in vals)


def avoids(w, pattern) -> bool:
    """Whether no subsequence of w is order-isomorphic to the pattern."""
    k = len(pattern)
    if k > len(w):
        return True
    pattern = tuple(pattern)
    for idx in itertools.combinations(range(len(w)), k):
        if _standardize([w[i] for i in idx]) == pattern:
            return False
    return True


def is_smooth(w) -> bool:
    return all(avoids(w, p) for p in SMOOTH_PATTERNS)


def smooth_permutations(n):
    return [w for w in itertools.permutations(range(1, n + 1)) if is_smooth(w)]


# ---------------------------------------------------------------------------
# the permutation poset and its chain statistics


@dataclass(frozen=True)
class PermPoset:
    """Poset on [n]: i below j when i < j but j comes first in w."""

    n: int
    relation: frozenset
    hasse: tuple

    def covers_up(self):
        out = {i: [] for i in range(1, self.n + 1)}
        for a, b in self.hasse:
            out[a].append(b)
        return out


def permutation_poset(w) -> PermPoset:
    n = len(w)
    pos = [0] * (n + 1)
    for i, v in enumerate(w):
        pos[v] = i
    rel = frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                    if pos[j] < pos[i])
    hasse = tuple((i, j) for (i, j) in sorted(rel)
                  if not any((i, z) in rel and (z, j) in rel for z in range(i + 1, j)))
    return PermPoset(n, rel, hasse)


def hasse_is_forest(poset: PermPoset) -> bool:
    """Whether the underlying undirected Hasse graph is acyclic."""
    parent = list(range(poset.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in poset.hasse:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def chain_counts_from_covers(n: int, covers_up: dict) -> tuple[int, ...]:
    """Counts of saturated chains by rank: entry r counts chains of r+1
    elements walking cover edges; entry 0 is the number of elements."""
    memo: dict = {}

    def paths_from(x):
        got = memo.get(x)
        if got is None:
            got = [1]
            for y in covers_up.get(x, ()):
                sub = paths_from(y)
                while len(got) < len(sub) + 1:
                    got.append(0)
                for r, c in enumerate(sub):
                    got[r + 1] += c
            memo[x] = got
        return got

    total: list[int] = []
    for x in range(1, n + 1):
        for r, c in enumerate(paths_from(x)):
            while len(total) < r + 1:
                total.append(0)
            total[r] += c
    return tuple(total)


def chain_counts(poset: PermPoset) -> tuple[int, ...]:
    return chain_counts_from_covers(poset.n, poset.covers_up())


def chain_partition(w) -> tuple[int, ...]:
    """The partition of the length of a smooth permutation read off the
    chain counts, highest rank first; (0,) for the identity."""
    if not is_smooth(w):
        raise ValueError(f"{w} contains 3412 or 4231; the chain partition needs smoothness")
    if w == identity_perm(len(w)):
        return (0,)
    rho = chain_counts(permutation_poset(w))
    lam = tuple(rho[r] for r in range(len(rho) - 1, 0, -1))
    if any(a > b for a, b in zip(lam, lam[1:])):
        raise AssertionError(f"chain counts of {w} are not strictly decreasing: {rho}")
    if sum(lam) != perm_length(w):
        raise AssertionError(f"chain counts of {w} do not partition its length")
    return lam


def dual_partition(lam) -> tuple[int, ...]:
    """Conjugate partition, in weakly increasing (French) order."""
    lam = tuple(lam)
    if lam == (0,):
        return (0,)
    if any(x <= 0 for x in lam) or any(a > b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition in weakly increasing order")
    return tuple(sum(1 for x in lam if x >= j) for j in range(lam[-1], 0, -1))


def smooth_exponents(w) -> tuple[int, ...]:
    """Exponents of a smooth permutation: the dual of its chain partition."""
    return dual_partition(chain_partition(w))


# ---------------------------------------------------------------------------
# Fubini words


def is_fubini_word(x) -> bool:
    x = tuple(x)
    if not x or min(x) < 0:
        return False
    return set(x) == set(range(max(x) + 1))


def is_lazy_fubini_word(x) -> bool:
    x = tuple(x)
    return bool(x) and x[0] == 0 and all(b - a <= 1 for a, b in zip(x, x[1:])) and min(x) >= 0


def lazy_fubini_words(k: int) -> set[tuple[int, ...]]:
    out = set()

    def rec(word):
        if len(word) == k:
            out.add(tuple(word))
            return
        for v in range(0, word[-1] + 2) if word else (0,):
            word.append(v)
            rec(word)
            word.pop()

    rec([])
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# unimodal permutations and partitions into distinct parts


def is_unimodal_permutation(w) -> bool:
    n = len(w)
    peak = w.index(n)
    return (all(w[i] < w[i + 1] for i in range(peak))
            and all(w[i] > w[i + 1] for i in range(peak, n - 1)))


def unimodal_permutations(n) -> list[tuple[int, ...]]:
    out = []
    values = list(range(1, n))
    for mask in range(2 ** (n - 1)):
        tail = [values[i] for i in range(n - 1) if mask >> i & 1]
        head = [v for v in values if v not in tail]
        out.append(tuple(head + [n] + sorted(tail, reverse=True)))
    return sorted(set(out))


def unimodal_to_partition(u) -> tuple[int, ...]:
    """The partition with distinct parts n - u(j+1), ..., n - u(n) read off
    the falling tail of a unimodal permutation."""
    if not is_unimodal_permutation(u):
        raise ValueError(f"{u} is not unimodal")
    n = len(u)
    if u == identity_perm(n):
        return (0,)
    peak = u.index(n)
    return tuple(n - u[i] for i in range(peak + 1, n))


def partition_to_unimodal(lam, n) -> tuple[int, ...]:
    lam = tuple(lam)
    if lam == (0,):
        return identity_perm(n)
    if (any(x <= 0 for x in lam) or lam[-1] > n - 1
            or any(a >= b for a, b in zip(lam, lam[1:]))):
        raise ValueError(f"{lam} is not a partition into distinct parts at most {n - 1}")
    tail = [n - x for x in lam]
    head = sorted(set(range(1, n + 1)) - set(tail))
    return tuple(head + tail)


# ---------------------------------------------------------------------------
# exhaustive verifications against the Bruhat order


def _interval_poly(poset, perm) -> IntPolynomial:
    return IntPolynomial(poset.interval_poincare_coeffs(poset.index[perm]))


def _principal_in(poset, perm, code_vec) -> bool:
    size = 1
    for x in code_vec:
        size *= x + 1
    return poset.downset(poset.index[perm]).bit_count() == size


def verify_catalan_equivalence(n: int, max_n: int = 8) -> Report:
    """Principal = lazy-Fubini code = 312-avoiding, element by element."""
    if not 2 <= n <= max_n:
        raise ValueError(f"supported range is 2..{max_n}, got {n}")
    rep = Report(f"catalan classification in S_{n}")
    poset = shared_poset("A", n - 1)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        code = inversion_code(perm)
        principal = _principal_in(poset, perm, code)
        lazy = is_lazy_fubini_word(code)
        av312 = avoids(perm, (3, 1, 2))
        rep.check(principal == lazy == av312,
                  f"{perm}: principal={principal} lazy={lazy} 312-avoiding={av312}")
        if principal:
            count += 1
            rep.check(_interval_poly(poset, perm) == q_analog_product(x + 1 for x in code),
                      f"{perm}: interval does not factor over its code")
    rep.check(count == catalan(n), f"found {count} principal elements, expected C_{n}")
    rep.note(f"{count} principal elements")
    return rep


def verify_unimodal_equivalence(n: int, max_n: int = 8) -> Report:
    """Lex-minimal principal = weakly increasing Fubini code = unimodal."""
    if not 2 <= n <= max_n:
        raise ValueError(f"supported range is 2..{max_n}, got {n}")
    rep = Report(f"unimodal classification in S_{n}")
    poset = shared_poset("A", n - 1)
    perms = list(itertools.permutations(range(1, n + 1)))
    codes = {perm: inversion_code(perm) for perm in perms}
    principal_vecs = {codes[p] for p in perms if _principal_in(poset, p, codes[p])}
    count = 0
    for perm in perms:
        code = codes[perm]
        if code in principal_vecs:
            orbit = set(itertools.permutations(code)) & principal_vecs
            lexmin = code == min(orbit)
        else:
            lexmin = False
        increasing_fubini = (is_fubini_word(code)
                             and all(a <= b for a, b in zip(code, code[1:])))
        unimodal = is_unimodal_permutation(perm)
        rep.check(lexmin == increasing_fubini == unimodal,
                  f"{perm}: lexmin={lexmin} incr-fubini={increasing_fubini} "
                  f"unimodal={unimodal}")
        count += unimodal
    rep.check(count == 2 ** (n - 1), f"found {count} unimodal permutations")
    return rep


def check_tail_partition(u) -> Report:
    """For one unimodal permutation: the tail partition equals the chain
    partition, and the code is its dual padded with zeros."""
    n = len(u)
    rep = Report(f"tail partition of {u}")
    lam = unimodal_to_partition(u)
    rep.check(lam == chain_partition(u),
              f"tail partition {lam} != chain partition {chain_partition(u)}")
    code = inversion_code(u)
    if lam == (0,):
        rep.check(code == (0,) * n, f"identity code {code} not all zero")
    else:
        dual = dual_partition(lam)
        expected = (0,) * u[-1] + dual
        rep.check(code == expected, f"code {code} != zero-padded dual {expected}")
    return rep


def verify_tail_partitions(n: int) -> Report:
    rep = Report(f"tail partitions of unimodal permutations in S_{n}")
    for u in unimodal_permutations(n):
        rep.merge(check_tail_partition(u))
    return rep


EXPECTED_SMOOTH_POLYS_S4 = (
    (1,), (2,), (2, 2), (2, 3), (2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4),
)


def verify_smooth_classification(n: int, max_n: int = 6) -> Report:
    """Poincare polynomials of smooth and of unimodal permutations coincide
    as sets of cardinality 2^(n-1)."""
    if not 2 <= n <= max_n:
        raise ValueError(f"supported range is 2..{max_n}, got {n}")
    rep = Report(f"smooth Poincare classification in S_{n}")
    poset = shared_poset("A", n - 1)
    smooth_polys = set()
    for perm in itertools.permutations(range(1, n + 1)):
        if is_smooth(perm):
            smooth_polys.add(_interval_poly(poset, perm))
    unimodal_polys = {_interval_poly(poset, u) for u in unimodal_permutations(n)}
    rep.check(smooth_polys == unimodal_polys,
              f"{len(smooth_polys)} smooth vs {len(unimodal_polys)} unimodal polynomials")
    rep.check(len(smooth_polys) == 2 ** (n - 1),
              f"{len(smooth_polys)} distinct polynomials, expected {2 ** (n - 1)}")
    if n == 4:
        expected = {q_analog_product(f) for f in EXPECTED_SMOOTH_POLYS_S4}
        rep.check(smooth_polys == expected, "explicit S_4 polynomial list differs")
    rep.note(f"{len(smooth_polys)} polynomials")
    return rep


def verify_smooth_factorization(n: int) -> Report:
    """Interval polynomials of smooth permutations factor over their
    exponents from the chain partition."""
    rep = Report(f"smooth interval factorization in S_{n}")
    poset = shared_poset("A", n - 1)
    for perm in itertools.permutations(range(1, n + 1)):
        if not is_smooth(perm):
            continue
        exps = smooth_exponents(perm)
        expected = (IntPolynomial([1]) if exps == (0,)
                    else q_analog_product(e + 1 for e in exps))
        rep.check(_interval_poly(poset, perm) == expected,
                  f"{perm}: interval poly differs from exponent product {exps}")
    return rep


def random_forest_covers(size: int, rng: random.Random) -> dict:
    """Random forest on 1..size with each component oriented consistently
    toward or away from its root.

    Arbitrary acyclic orientations do not keep the chain counts monotone (a
    node with several lower covers and several upper covers multiplies the
    paths through it); consistently rooted components do.
    """
    parent = {}
    for child in range(2, size + 1):
        if rng.random() < 0.85:
            parent[child] = rng.randrange(1, child)

    def rep_of(x):
        while x in parent:
            x = parent[x]
        return x

    flip = {}
    covers: dict = {i: [] for i in range(1, size + 1)}
    for child, par in parent.items():
        root = rep_of(child)
        if root not in flip:
            flip[root] = rng.random() < 0.5
        if flip[root]:
            covers[par].append(child)
        else:
            covers[child].append(par)
    return covers


def verify_forest_chain_counts(n: int, samples: int = 50, seed: int = 2024) -> Report:
    """Strict decrease of chain counts: every smooth permutation's poset,
    plus seeded random rooted forests."""
    rep = Report("forest chain counts decrease strictly")
    for perm in itertools.permutations(range(1, n + 1)):
        if not is_smooth(perm):
            continue
        P = permutation_poset(perm)
        if not rep.check(hasse_is_forest(P), f"{perm}: Hasse diagram is not a forest"):
            continue
        rho = chain_counts(P)
        rep.check(all(rho[i] > rho[i + 1] for i in range(len(rho) - 1)),
                  f"{perm}: counts {rho} not strictly decreasing")
    rng = random.Random(seed)
    for _ in range(samples):
        size = rng.randint(2, 12)
        covers = random_forest_covers(size, rng)
        rho = chain_counts_from_covers(size, covers)
        rep.check(all(rho[i] > rho[i + 1] for i in range(len(rho) - 1)),
                  f"random rooted forest {covers}: counts {rho}")
    return rep
