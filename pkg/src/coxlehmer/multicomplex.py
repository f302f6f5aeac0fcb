"""Finite multicomplexes, i.e. order ideals of a product of chains.

Points are stored zero-based, so the rank of a point is the plain sum of its
entries; the one-based view used by the facet construction shifts at that
boundary only.  Includes the Macaulay growth test characterizing f-vectors
of multicomplexes, and exhaustive or seeded-random linear extensions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ChainProduct:
    """Ambient box: the product of chains of sizes dims[i] (points 0..d_i-1)."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"chain sizes must be >= 1, got {self.dims}")

    def __contains__(self, point) -> bool:
        return (len(point) == len(self.dims)
                and all(0 <= x < d for x, d in zip(point, self.dims)))

    def points(self) -> Iterator[tuple[int, ...]]:
        def rec(prefix, rest):
            if not rest:
                yield prefix
                return
            for x in range(rest[0]):
                yield from rec(prefix + (x,), rest[1:])
        yield from rec((), self.dims)

    def size(self) -> int:
        n = 1
        for d in self.dims:
            n *= d
        return n


def lower_covers(point):
    for i, x in enumerate(point):
        if x:
            yield point[:i] + (x - 1,) + point[i + 1 :]


def upper_covers(point, dims):
    for i, x in enumerate(point):
        if x + 1 < dims[i]:
            yield point[:i] + (x + 1,) + point[i + 1 :]


def meet(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """Componentwise minimum, the lattice meet in a product of chains."""
    return tuple(map(min, x, y))


def join(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(max, x, y))


def dominates(x, y) -> bool:
    return all(a >= b for a, b in zip(x, y))


class OrderIdeal:
    """A downward-closed set of points in a ChainProduct."""

    __slots__ = ("ambient", "points")

    def __init__(self, ambient: ChainProduct, points: Iterable[tuple[int, ...]], *,
                 _trusted: bool = False):
        self.ambient = ambient
        pts = frozenset(tuple(p) for p in points)
        for p in pts:
            if p not in ambient:
                raise ValueError(f"point {p} outside ambient {ambient.dims}")
        if not _trusted and not _closed(pts):
            raise ValueError("point set is not downward closed")
        self.points = pts

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderIdeal) and self.ambient == other.ambient
                and self.points == other.points)

    def __hash__(self):
        return hash((self.ambient, self.points))

    def maxima(self) -> set[tuple[int, ...]]:
        return {p for p in self.points
                if not any(q in self.points for q in upper_covers(p, self.ambient.dims))}

    def f_polynomial(self):
        from .qpoly import IntPolynomial

        if not self.points:
            raise ValueError("the empty ideal has no rank generating function")
        coeffs = [0] * (sum(d - 1 for d in self.ambient.dims) + 1)
        for p in self.points:
            coeffs[sum(p)] += 1
        return IntPolynomial(coeffs)

    def is_full_box(self) -> bool:
        return len(self.points) == self.ambient.size()

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in sorted(self.points)]


def _closed(points: frozenset) -> bool:
    return all(q in points for p in points for q in lower_covers(p))


def is_order_ideal(ambient: ChainProduct, points: Iterable[tuple[int, ...]]) -> bool:
    pts = frozenset(tuple(p) for p in points)
    return all(p in ambient for p in pts) and _closed(pts)


def ideal_from_points(ambient: ChainProduct, points: Iterable[tuple[int, ...]]) -> OrderIdeal:
    """Downward closure of the given points."""
    todo = [tuple(p) for p in points]
    for p in todo:
        if p not in ambient:
            raise ValueError(f"point {p} outside ambient {ambient.dims}")
    seen = set(todo)
    while todo:
        p = todo.pop()
        for q in lower_covers(p):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return OrderIdeal(ambient, seen, _trusted=True)


def full_ideal(ambient: ChainProduct) -> OrderIdeal:
    return OrderIdeal(ambient, ambient.points(), _trusted=True)


# ---------------------------------------------------------------------------
# Macaulay's criterion


def _macaulay_power(h: int, i: int) -> int:
    """h^<i>: write h in its i-binomial representation and bump every index."""
    out = 0
    j = i
    while h > 0:
        a = j
        while comb(a + 1, j) <= h:
            a += 1
        h -= comb(a, j)
        out += comb(a + 1, j + 1)
        j -= 1
    return out


def is_m_sequence(coeffs: Iterable[int]) -> bool:
    """Whether the sequence is the f-vector of some multicomplex.

    Macaulay's characterization: h_0 = 1 and h_{i+1} <= h_i^<i> for i >= 1,
    treating the sequence as extended by zeros.
    """
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs or cs[0] != 1 or any(c < 0 for c in cs):
        return False
    for i in range(1, len(cs) - 1):
        if cs[i + 1] > _macaulay_power(cs[i], i):
            return False
    return True


# ---------------------------------------------------------------------------
# linear extensions


def _minimal_points(remaining: set) -> list[tuple[int, ...]]:
    # valid while the removed prefix is downward closed
    return sorted(p for p in remaining
                  if not any(q in remaining for q in lower_covers(p)))


def linear_extensions(ideal: OrderIdeal) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Exhaustively generate every linear extension."""
    remaining = set(ideal.points)
    acc: list = []

    def rec():
        if not remaining:
            yield tuple(acc)
            return
        for p in _minimal_points(remaining):
            remaining.remove(p)
            acc.append(p)
            yield from rec()
            acc.pop()
            remaining.add(p)

    yield from rec()


def count_linear_extensions(ideal: OrderIdeal, cap: int | None = None) -> int:
    """Number of linear extensions; stops early once `cap` is exceeded."""

    @lru_cache(maxsize=None)
    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        total = 0
        rem = set(remaining)
        for p in _minimal_points(rem):
            total += count(remaining - {p})
            if cap is not None and total > cap:
                return total
        return total

    result = count(frozenset(ideal.points))
    count.cache_clear()
    return result


def sample_linear_extensions(ideal: OrderIdeal, count: int,
                             seed: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Seeded random topological shuffles (uniform choice among minima)."""
    rng = random.Random(seed)
    for _ in range(count):
        remaining = set(ideal.points)
        out = []
        while remaining:
            p = rng.choice(_minimal_points(remaining))
            remaining.remove(p)
            out.append(p)
        yield tuple(out)


def is_linear_extension(ideal: OrderIdeal, order) -> bool:
    seen = set()
    for p in order:
        if any(q not in seen for q in lower_covers(p)):
            return False
        seen.add(p)
    return seen == set(ideal.points)


# ---------------------------------------------------------------------------
# ideal enumeration


def all_order_ideals(ambient: ChainProduct) -> Iterator[OrderIdeal]:
    """Every nonempty order ideal of the box."""
    box = sorted(ambient.points(), key=lambda p: (sum(p), p))
    chosen: set = set()

    def rec(i):
        if i == len(box):
            if chosen:
                yield OrderIdeal(ambient, frozenset(chosen), _trusted=True)
            return
        p = box[i]
        if all(q in chosen for q in lower_covers(p)):
            chosen.add(p)
            yield from rec(i + 1)
            chosen.remove(p)
        yield from rec(i + 1)

    yield from rec(0)


def random_order_ideals(ambient: ChainProduct, count: int, seed: int) -> list[OrderIdeal]:
    """Seeded random ideals: downward closures of a few random points."""
    rng = random.Random(seed)
    box = sorted(ambient.points())
    out = []
    for _ in range(count):
        k = rng.randint(1, 4)
        gens = [box[rng.randrange(len(box))] for _ in range(k)]
        out.append(ideal_from_points(ambient, gens))
    return out
