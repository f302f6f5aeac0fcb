"""Finite Coxeter systems: exact element arithmetic and Bruhat combinatorics.

Systems of types A_n, B_n, D_n, H3 and I2(m) are realized over type-specific
canonical forms: one-line permutations, signed permutations, affine maps of
Z_m for the dihedral groups, and 3x3 matrices over Z[phi] (phi the golden
ratio) for H3.  All arithmetic is exact; structural equality of canonical
forms is group equality.

Enumerating a system yields a BruhatPoset: every element indexed in BFS
order, lengths, one-sided multiplication tables, Bruhat covers computed
from reflections, and reachability bitsets answering u <= w in O(1).
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .qpoly import ONE, IntPolynomial

CACHE_FORMAT = 2


class SizeLimitError(RuntimeError):
    """Raised when a group exceeds the configured enumeration limit."""


# ---------------------------------------------------------------------------
# type-specific element kernels


def _perm_compose(a, b):
    # (a . b)(x) = a(b(x)), one-line tuples over 1..n
    return tuple(a[v - 1] for v in b)


def _perm_invert(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v - 1] = i + 1
    return tuple(inv)


def _signed_compose(a, b):
    # windows over +-1..+-n with w(-i) = -w(i)
    return tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in b)


def _signed_invert(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        if v > 0:
            inv[v - 1] = i + 1
        else:
            inv[-v - 1] = -(i + 1)
    return tuple(inv)


def _phi_mul(x, y):
    # (a + b phi)(c + d phi) with phi^2 = phi + 1
    a, b = x
    c, d = y
    return (a * c + b * d, a * d + b * c + b * d)


def _mat3_compose(m1, m2):
    out = []
    for i in (0, 3, 6):
        row = m1[i : i + 3]
        for j in range(3):
            s0 = s1 = 0
            for k in range(3):
                a, b = row[k]
                c, d = m2[3 * k + j]
                s0 += a * c + b * d
                s1 += a * d + b * c + b * d
            out.append((s0, s1))
    return tuple(out)


def _mat3_det(m):
    def minor(r, c):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != c]
        p1 = _phi_mul(m[3 * rows[0] + cols[0]], m[3 * rows[1] + cols[1]])
        p2 = _phi_mul(m[3 * rows[0] + cols[1]], m[3 * rows[1] + cols[0]])
        return (p1[0] - p2[0], p1[1] - p2[1])

    det = (0, 0)
    for c in range(3):
        mm = minor(0, c)
        t = _phi_mul(m[c], mm)
        if c == 1:
            t = (-t[0], -t[1])
        det = (det[0] + t[0], det[1] + t[1])
    return det


def _mat3_invert(m):
    # adjugate divided by determinant; group elements have det = +-1
    def minor(r, c):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != c]
        p1 = _phi_mul(m[3 * rows[0] + cols[0]], m[3 * rows[1] + cols[1]])
        p2 = _phi_mul(m[3 * rows[0] + cols[1]], m[3 * rows[1] + cols[0]])
        return (p1[0] - p2[0], p1[1] - p2[1])

    det = _mat3_det(m)
    if det not in ((1, 0), (-1, 0)):
        raise ArithmeticError(f"matrix determinant {det} is not a unit +-1")
    sign = det[0]
    out = []
    for i in range(3):
        for j in range(3):
            a, b = minor(j, i)
            if (i + j) % 2:
                a, b = -a, -b
            out.append((sign * a, sign * b))
    return tuple(out)


_BOND_VALUES = {2: (0, 0), 3: (1, 0), 5: (0, 1)}


def _reflection_matrix(matrix_row, i, rank=3):
    # sigma_i maps alpha_j to alpha_j + 2cos(pi/m(i,j)) alpha_i, alpha_i to -alpha_i
    cols = []
    for j in range(rank):
        col = [(0, 0)] * rank
        if j == i:
            col[i] = (-1, 0)
        else:
            col[j] = (1, 0)
            col[i] = _BOND_VALUES[matrix_row[j]]
        cols.append(col)
    return tuple(cols[j][i] for i in range(rank) for j in range(rank))


# ---------------------------------------------------------------------------
# systems


class CoxeterSystem:
    """A finite Coxeter system with concrete, exactly-represented elements."""

    def __init__(self, label, rank, matrix, gen_subscripts, identity, generators,
                 compose, invert, order, dihedral_m=None, render=None):
        self.label = label
        self.rank = rank
        self.coxeter_matrix = matrix
        self.gen_subscripts = tuple(gen_subscripts)
        self.identity = identity
        self.generators = tuple(generators)
        self.compose: Callable = compose
        self.invert: Callable = invert
        self.order = order
        self.dihedral_m = dihedral_m
        self._render = render
        self._check_relations()

    def _check_relations(self):
        # (s_i s_j)^m(i,j) = e for every pair; catches kernel mistakes early
        for i in range(self.rank):
            for j in range(self.rank):
                m = self.coxeter_matrix[i][j]
                p = self.compose(self.generators[i], self.generators[j])
                acc = p
                k = 1
                while acc != self.identity:
                    acc = self.compose(acc, p)
                    k += 1
                    if k > m:
                        break
                if k != m:
                    raise AssertionError(
                        f"{self.describe()}: (s{self.gen_subscripts[i]} "
                        f"s{self.gen_subscripts[j]}) has order {k}, expected {m}")

    def describe(self) -> str:
        if self.label == "I2":
            return f"I2({self.dihedral_m})"
        if self.label == "H3":
            return "H3"
        return f"{self.label}{self.rank}"

    def gen_index(self, subscript: int) -> int:
        try:
            return self.gen_subscripts.index(subscript)
        except ValueError:
            valid = ", ".join(f"s{s}" for s in self.gen_subscripts)
            raise ValueError(f"unknown generator s{subscript}; valid: {valid}") from None

    def word_element(self, word: Iterable[int]):
        """Product of generators given by position indices (empty word = e)."""
        e = self.identity
        for gi in word:
            if not 0 <= gi < self.rank:
                raise ValueError(f"generator index {gi} out of range 0..{self.rank - 1}")
            e = self.compose(e, self.generators[gi])
        return e

    def render_element(self, elem) -> str:
        if self._render is not None:
            return self._render(elem)
        return str(elem)


def _chain_matrix(rank, bonds):
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for (i, j), v in bonds.items():
        m[i][j] = m[j][i] = v
    return tuple(tuple(row) for row in m)


def build_system(label: str, rank: int | None = None, m: int | None = None) -> CoxeterSystem:
    """Construct a Coxeter system of type A_n, B_n, D_n, H3 or I2(m).

    Generator numbering follows the conventions used throughout: type B has
    the 4-bond between s1 and s2; type D has generators s0..s_{n-1} with the
    branch vertex s2 adjacent to both s0 and s1; H3 has the 5-bond between
    s2 and s3.
    """
    label = label.upper()
    if label == "A":
        if rank is None or rank < 1:
            raise ValueError(f"type A requires rank >= 1, got {rank}")
        n = rank + 1
        ident = tuple(range(1, n + 1))
        gens = []
        for i in range(rank):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        order = 1
        for k in range(2, n + 1):
            order *= k
        mat = _chain_matrix(rank, {(i, i + 1): 3 for i in range(rank - 1)})
        return CoxeterSystem("A", rank, mat, range(1, rank + 1), ident, gens,
                             _perm_compose, _perm_invert, order,
                             render=_render_perm)
    if label == "B":
        if rank is None or rank < 2:
            raise ValueError(f"type B requires rank >= 2, got {rank}")
        n = rank
        ident = tuple(range(1, n + 1))
        gens = [tuple([-1] + list(range(2, n + 1)))]
        for i in range(1, n):
            g = list(ident)
            g[i - 1], g[i] = g[i], g[i - 1]
            gens.append(tuple(g))
        order = 2 ** n
        for k in range(2, n + 1):
            order *= k
        bonds = {(0, 1): 4}
        bonds.update({(i, i + 1): 3 for i in range(1, n - 1)})
        mat = _chain_matrix(rank, bonds)
        return CoxeterSystem("B", rank, mat, range(1, rank + 1), ident, gens,
                             _signed_compose, _signed_invert, order,
                             render=_render_signed)
    if label == "D":
        if rank is None or rank < 4:
            raise ValueError(f"type D requires rank >= 4, got {rank}")
        n = rank
        ident = tuple(range(1, n + 1))
        g0 = list(ident)
        g0[0], g0[1] = -2, -1
        gens = [tuple(g0)]
        for i in range(1, n):
            g = list(ident)
            g[i - 1], g[i] = g[i], g[i - 1]
            gens.append(tuple(g))
        order = 2 ** (n - 1)
        for k in range(2, n + 1):
            order *= k
        bonds = {(0, 2): 3, (1, 2): 3}
        bonds.update({(i, i + 1): 3 for i in range(2, n - 1)})
        mat = _chain_matrix(rank, bonds)
        return CoxeterSystem("D", rank, mat, range(0, rank), ident, gens,
                             _signed_compose, _signed_invert, order,
                             render=_render_signed)
    if label == "H3":
        if rank not in (None, 3):
            raise ValueError(f"type H3 has rank 3, got {rank}")
        mat = _chain_matrix(3, {(0, 1): 3, (1, 2): 5})
        ident = tuple((1, 0) if i == j else (0, 0) for i in range(3) for j in range(3))
        gens = [_reflection_matrix(mat[i], i) for i in range(3)]
        return CoxeterSystem("H3", 3, mat, range(1, 4), ident, gens,
                             _mat3_compose, _mat3_invert, 120)
    if label == "I2":
        if m is None or m < 3:
            raise ValueError(f"type I2(m) requires m >= 3, got {m}")
        ident = (1, 0)
        gens = [(-1, 0), (-1, 1)]

        def compose(a, b, _m=m):
            e1, c1 = a
            e2, c2 = b
            return (e1 * e2, (e1 * c2 + c1) % _m)

        def invert(a, _m=m):
            e1, c1 = a
            return (e1, (-e1 * c1) % _m)

        mat = _chain_matrix(2, {(0, 1): m})
        return CoxeterSystem("I2", 2, mat, range(1, 3), ident, gens,
                             compose, invert, 2 * m, dihedral_m=m)
    raise ValueError(f"unknown type {label!r}; valid: A, B, D, H3, I2")


def product_system(s1: CoxeterSystem, s2: CoxeterSystem) -> CoxeterSystem:
    """Reducible system W1 x W2 over pair canonical forms."""
    rank = s1.rank + s2.rank
    ident = (s1.identity, s2.identity)
    gens = [(g, s2.identity) for g in s1.generators]
    gens += [(s1.identity, g) for g in s2.generators]
    mat = [[2] * rank for _ in range(rank)]
    for i in range(s1.rank):
        for j in range(s1.rank):
            mat[i][j] = s1.coxeter_matrix[i][j]
    for i in range(s2.rank):
        for j in range(s2.rank):
            mat[s1.rank + i][s1.rank + j] = s2.coxeter_matrix[i][j]

    def compose(a, b, _c1=s1.compose, _c2=s2.compose):
        return (_c1(a[0], b[0]), _c2(a[1], b[1]))

    def invert(a, _i1=s1.invert, _i2=s2.invert):
        return (_i1(a[0]), _i2(a[1]))

    return CoxeterSystem("product", rank, tuple(tuple(r) for r in mat),
                         range(1, rank + 1), ident, gens, compose, invert,
                         s1.order * s2.order)


def _render_perm(p):
    if all(v <= 9 for v in p):
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def _render_signed(p):
    return " ".join(str(v) for v in p)


# ---------------------------------------------------------------------------
# enumerated groups


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BruhatPoset:
    """A fully enumerated finite Coxeter group with its orders materialized.

    Elements are referred to by their BFS index; index 0 is the identity.
    `downset(w)` is a bitset over indices encoding {v : v <= w} in Bruhat
    order, so comparisons and interval extraction are bit operations.
    """

    def __init__(self, system: CoxeterSystem, limit: int = 10 ** 6,
                 _cached_covers: list[list[int]] | None = None):
        if system.order > limit:
            raise SizeLimitError(
                f"|{system.describe()}| = {system.order} exceeds enumeration limit {limit}")
        self.system = system
        compose = system.compose
        gens = system.generators

        elements = [system.identity]
        index = {system.identity: 0}
        length = [0]
        word: list[tuple[int, ...]] = [()]
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                eu = elements[u]
                wu = word[u]
                lu = length[u]
                for gi, g in enumerate(gens):
                    v = compose(eu, g)
                    if v not in index:
                        index[v] = len(elements)
                        elements.append(v)
                        length.append(lu + 1)
                        word.append(wu + (gi,))
                        nxt.append(index[v])
            frontier = nxt
        if len(elements) != system.order:
            raise AssertionError(
                f"enumerated {len(elements)} elements, classification says {system.order}")

        self.size = len(elements)
        self.elements = elements
        self.index = index
        self.length = length
        self.word = word
        self.right_mult = [[index[compose(elements[u], g)] for g in gens]
                           for u in range(self.size)]
        self.left_mult = [[index[compose(g, elements[u])] for g in gens]
                          for u in range(self.size)]
        self.inverse = [index[system.invert(e)] for e in elements]

        max_len = max(length)
        self.max_length = max_len
        self.by_length = [0] * (max_len + 1)
        for i, l in enumerate(length):
            self.by_length[l] |= 1 << i
        tops = [i for i in range(self.size) if length[i] == max_len]
        if len(tops) != 1:
            raise AssertionError("longest element is not unique")
        self.w0 = tops[0]

        if _cached_covers is None:
            covers_down = [[] for _ in range(self.size)]
            for t in self.reflections():
                et = elements[t]
                for u in range(self.size):
                    w = index[compose(elements[u], et)]
                    if length[w] == length[u] + 1:
                        covers_down[w].append(u)
        else:
            covers_down = _cached_covers
        self.covers_down = covers_down
        self.covers_up = [[] for _ in range(self.size)]
        for w, lows in enumerate(covers_down):
            for u in lows:
                self.covers_up[u].append(w)

        down = [0] * self.size
        for w in sorted(range(self.size), key=length.__getitem__):
            m = 1 << w
            for u in covers_down[w]:
                m |= down[u]
            down[w] = m
        self._down = down
        self._weak_down = {"L": None, "R": None}

    # -- element arithmetic by index

    def mult(self, a: int, b: int) -> int:
        return self.index[self.system.compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def apply_word(self, word: Sequence[int]) -> int:
        w = 0
        for gi in word:
            if not 0 <= gi < self.system.rank:
                raise ValueError(f"generator index {gi} out of range 0..{self.system.rank - 1}")
            w = self.right_mult[w][gi]
        return w

    def reduced_word(self, w: int) -> tuple[int, ...]:
        return self.word[w]

    def render(self, w: int) -> str:
        sys = self.system
        if sys.label in ("A", "B", "D"):
            return sys.render_element(self.elements[w])
        if w == 0:
            return "e"
        subs = sys.gen_subscripts
        return " ".join(f"s{subs[gi]}" for gi in self.word[w])

    # -- reflections and orders

    def reflections(self) -> list[int]:
        seen = set(self.index[g] for g in self.system.generators)
        frontier = list(seen)
        while frontier:
            t = frontier.pop()
            for gi in range(self.system.rank):
                u = self.left_mult[self.right_mult[t][gi]][gi]
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return sorted(seen)

    def downset(self, w: int) -> int:
        return self._down[w]

    def leq(self, u: int, w: int) -> bool:
        return bool(self._down[w] >> u & 1)

    def interval(self, u: int, w: int) -> list[int]:
        return [z for z in _bits(self._down[w]) if self._down[z] >> u & 1]

    def _weak_downsets(self, side: str) -> list[int]:
        cached = self._weak_down[side]
        if cached is not None:
            return cached
        table = self.left_mult if side == "L" else self.right_mult
        covers_down = [[] for _ in range(self.size)]
        for u in range(self.size):
            for gi in range(self.system.rank):
                w = table[u][gi]
                if self.length[w] == self.length[u] + 1:
                    covers_down[w].append(u)
        down = [0] * self.size
        for w in sorted(range(self.size), key=self.length.__getitem__):
            m = 1 << w
            for u in covers_down[w]:
                m |= down[u]
            down[w] = m
        self._weak_down[side] = down
        return down

    def weak_leq(self, u: int, w: int, side: str = "L") -> bool:
        return bool(self._weak_downsets(side)[w] >> u & 1)

    def weak_left_interval(self, u: int, w: int) -> list[int]:
        down = self._weak_downsets("L")
        return [z for z in _bits(down[w]) if down[z] >> u & 1]

    # -- descents and parabolic machinery

    def descents_left(self, w: int) -> frozenset[int]:
        lw = self.length[w]
        return frozenset(gi for gi in range(self.system.rank)
                         if self.length[self.left_mult[w][gi]] < lw)

    def descents_right(self, w: int) -> frozenset[int]:
        lw = self.length[w]
        return frozenset(gi for gi in range(self.system.rank)
                         if self.length[self.right_mult[w][gi]] < lw)

    def parabolic_decompose(self, w: int, J: Iterable[int]) -> tuple[int, int]:
        """Split w = w_J * u with u the minimal coset representative.

        u has no left descent in J and lengths add.
        """
        Jt = tuple(J)
        u = w
        moved = True
        while moved:
            moved = False
            for gi in Jt:
                v = self.left_mult[u][gi]
                if self.length[v] < self.length[u]:
                    u = v
                    moved = True
        wj = self.mult(w, self.inverse[u])
        assert self.length[wj] + self.length[u] == self.length[w]
        return wj, u

    def quotient_factorization(self, w: int,
                               gen_order: Sequence[int] | None = None) -> tuple[int, ...]:
        """Factor w = w(1) w(2) ... w(n) along a chain of parabolics.

        Factor i lies in the quotient of W_{J_i} by W_{J_{i-1}} where J_i is
        the set of the first i generators of `gen_order`; lengths add.
        """
        order = tuple(gen_order) if gen_order is not None else tuple(range(self.system.rank))
        n = len(order)
        factors = [0] * n
        cur = w
        for i in range(n - 1, -1, -1):
            cur, jw = self.parabolic_decompose(cur, order[:i])
            factors[i] = jw
        assert cur == 0
        return tuple(factors)

    def parabolic_elements(self, J: Iterable[int]) -> list[int]:
        Jt = tuple(J)
        seen = {0}
        frontier = [0]
        while frontier:
            u = frontier.pop()
            for gi in Jt:
                v = self.right_mult[u][gi]
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        return sorted(seen)

    def max_parabolic_element(self, J: Iterable[int]) -> int:
        elems = self.parabolic_elements(J)
        tops = sorted(elems, key=self.length.__getitem__)
        top = tops[-1]
        if len(tops) > 1 and self.length[tops[-2]] == self.length[top]:
            raise AssertionError("parabolic longest element is not unique")
        return top

    def minimal_coset_reps(self, J: Iterable[int]) -> list[int]:
        """The quotient of W by W_J: elements with no left descent in J."""
        Jt = tuple(J)
        out = []
        for w in range(self.size):
            lw = self.length[w]
            if all(self.length[self.left_mult[w][gi]] > lw for gi in Jt):
                out.append(w)
        return out

    def generalized_quotient(self, V: Iterable[int]) -> list[int]:
        Vt = tuple(V)
        out = []
        for w in range(self.size):
            lw = self.length[w]
            if all(self.length[self.mult(w, v)] == lw + self.length[v] for v in Vt):
                out.append(w)
        return out

    # -- generating functions

    def poincare(self, X: Iterable[int]) -> IntPolynomial:
        coeffs = [0] * (self.max_length + 1)
        for x in X:
            coeffs[self.length[x]] += 1
        return IntPolynomial(coeffs)

    def group_poincare(self) -> IntPolynomial:
        return IntPolynomial([m.bit_count() for m in self.by_length])

    def interval_poincare_coeffs(self, w: int) -> tuple[int, ...]:
        """Coefficients of the rank generating function of {v : v <= w}."""
        d = self._down[w]
        return tuple((d & mask).bit_count() for mask in self.by_length[: self.length[w] + 1])

    def exponents(self) -> tuple[int, ...]:
        """The multiset e_1 <= ... <= e_n with W(q) equal to prod [e_i + 1]_q."""
        fac = _factor_into_q_analogs(self.group_poincare(), self.system.rank)
        if fac is None:
            raise ArithmeticError(
                f"{self.system.describe()}: Poincare polynomial does not factor into q-analogs")
        return tuple(d - 1 for d in fac)


def _div_q_analog(p: IntPolynomial, d: int) -> IntPolynomial | None:
    """Exact quotient p / [d]_q, or None if the division is inexact."""
    if p.degree < d - 1:
        return None
    rem = list(p.coeffs)
    qdeg = p.degree - (d - 1)
    quot = [0] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        c = rem[i + d - 1]
        if c:
            quot[i] = c
            for j in range(d):
                rem[i + j] -= c
    if any(rem):
        return None
    return IntPolynomial(quot)


def _factor_into_q_analogs(p: IntPolynomial, k: int, min_d: int = 2) -> list[int] | None:
    if k == 0:
        return [] if p == ONE else None
    total = p(1)
    for d in range(min_d, p.degree + 2):
        if total % d:
            continue
        q = _div_q_analog(p, d)
        if q is not None:
            rest = _factor_into_q_analogs(q, k - 1, d)
            if rest is not None:
                return [d] + rest
    return None


def enumerate_group(system: CoxeterSystem, limit: int = 10 ** 6) -> BruhatPoset:
    return BruhatPoset(system, limit=limit)


@lru_cache(maxsize=None)
def shared_poset(label: str, rank: int | None = None, m: int | None = None,
                 limit: int = 10 ** 6) -> BruhatPoset:
    """Process-wide memo of enumerated groups; they are immutable, so
    sharing across callers is safe."""
    return BruhatPoset(build_system(label, rank, m), limit=limit)


# ---------------------------------------------------------------------------
# optional on-disk cache


def _serialize_element(label, e):
    if label in ("A", "B", "D"):
        return list(e)
    if label == "I2":
        return list(e)
    if label == "H3":
        return [list(x) for x in e]
    raise ValueError(f"cannot cache elements of type {label}")


def _deserialize_element(label, data):
    if label in ("A", "B", "D", "I2"):
        return tuple(data)
    if label == "H3":
        return tuple((x[0], x[1]) for x in data)
    raise ValueError(f"cannot load elements of type {label}")


def save_poset(poset: BruhatPoset, path) -> None:
    sys = poset.system
    doc = {
        "format": CACHE_FORMAT,
        "type": sys.label,
        "rank": sys.rank,
        "m": sys.dihedral_m,
        "count": poset.size,
        "lengths": poset.length,
        "covers_down": poset.covers_down,
        "canonical": [_serialize_element(sys.label, e) for e in poset.elements],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)


def load_poset(path, limit: int = 10 ** 6) -> BruhatPoset:
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != CACHE_FORMAT:
        raise ValueError(f"cache format {doc.get('format')} != {CACHE_FORMAT}")
    system = build_system(doc["type"], doc["rank"] if doc["type"] != "I2" else None,
                          m=doc["m"])
    if doc["count"] != system.order:
        raise ValueError("cache element count does not match the system")
    poset = BruhatPoset(system, limit=limit, _cached_covers=doc["covers_down"])
    # the BFS is deterministic, so cached indices must agree
    if poset.length != doc["lengths"]:
        raise ValueError("cache lengths do not match a fresh enumeration")
    first = _deserialize_element(system.label, doc["canonical"][1]) if poset.size > 1 else None
    if first is not None and poset.elements[1] != first:
        raise ValueError("cache canonical forms do not match a fresh enumeration")
    return poset
