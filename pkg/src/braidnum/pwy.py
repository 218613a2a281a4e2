"""The poset ``P_{w,Y}`` on bar positions with its vertex labeling ``Lambda``.

For a permutation ``w`` of ``1..n+1`` and an admissible set ``Y`` of values,
the linear extensions of ``P_{w,Y}`` are exactly the ``sigma`` whose positive
labels are ``Y``, and reading ``Lambda`` along such a ``sigma`` reproduces the
signed word of ``(w, sigma)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .braid import ino_set
from .perms import all_permutations, ltr_minima, rtl_minima
from .poset import FinitePoset, to_dot


class InadmissibleY(ValueError):
    pass


class ConstructionError(AssertionError):
    """An internal invariant of the construction failed."""


@dataclass(frozen=True)
class LabeledPoset:
    poset: FinitePoset          # element k-1 is bar k
    Lambda: tuple[int, ...]     # Lambda[k-1] labels bar k

    @property
    def n(self) -> int:
        return self.poset.size

    def label(self, bar: int) -> int:
        return self.Lambda[bar - 1]

    def covers(self) -> list[tuple[int, int]]:
        """Covers as pairs of bar positions."""
        return [(a + 1, b + 1) for a, b in self.poset.covers]

    def linear_extensions(self) -> Iterator[tuple[int, ...]]:
        return self.poset.linear_extensions()

    def vertex_word(self, sigma: Sequence[int]) -> tuple[int, ...]:
        return vertex_word(self, sigma)

    def reverses_covers(self) -> bool:
        """Every cover ``a < b`` of the poset has ``a < b`` iff ``Lambda(a) > Lambda(b)``."""
        return all((a < b) == (self.label(a) > self.label(b)) for a, b in self.covers())

    def to_dict(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()],
                "Lambda": {str(k): lab for k, lab in enumerate(self.Lambda, 1)}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "LabeledPoset":
        n = d["n"]
        P = FinitePoset(n, [(a - 1, b - 1) for a, b in d["covers"]])
        lam = tuple(int(d["Lambda"][str(k)]) for k in range(1, n + 1))
        return cls(P, lam)

    def to_dot(self) -> str:
        return to_dot(self.poset, vertex_label=lambda x: f"{x + 1}:{self.Lambda[x]}", name="Pwy")


def admissible_Y(w: Sequence[int]) -> Iterator[frozenset[int]]:
    """All value sets ``Y`` avoiding left-to-right minima of ``w`` and
    containing every right-to-left minimum except 1."""
    forced = rtl_minima(w) - {1}
    free = sorted(set(range(2, len(w) + 1)) - ltr_minima(w) - forced)
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield frozenset(forced | set(extra))


def check_admissible(w: Sequence[int], Y: Iterable[int]) -> frozenset[int]:
    Y = frozenset(Y)
    n1 = len(w)
    bad = sorted(v for v in Y if not 2 <= v <= n1)
    if bad:
        raise InadmissibleY(f"Y contains values outside 2..{n1}: {bad}")
    ltr = sorted(Y & ltr_minima(w))
    if ltr:
        raise InadmissibleY(f"Y contains left-to-right minimum {', '.join(map(str, ltr))} of w")
    missing = sorted((rtl_minima(w) - {1}) - Y)
    if missing:
        raise InadmissibleY(f"Y misses right-to-left minimum {', '.join(map(str, missing))} of w")
    return Y


class _Segments:
    """Union-find over bar positions; each class is a contiguous run of bars
    and remembers its current maximum in the partially built order."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.top = list(range(n + 1))
        self.lo = list(range(n + 1))
        self.hi = list(range(n + 1))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def maximum_of(self, first: int, last: int) -> int:
        root = self.find(first)
        if (self.lo[root], self.hi[root]) != (first, last):
            raise ConstructionError(f"bars {first}..{last} do not form one merged segment")
        return self.top[root]

    def union(self, x: int, y: int, new_top: int) -> None:
        rx, ry = self.find(x), self.find(y)
        self.parent[ry] = rx
        self.lo[rx] = min(self.lo[rx], self.lo[ry])
        self.hi[rx] = max(self.hi[rx], self.hi[ry])
        self.top[rx] = new_top


def _check_segment(n: int, covers: list[tuple[int, int]], bars: range, expected_top: int) -> None:
    """Slow inline check: ``bars`` induce a connected subposet with unique maximum."""
    P = FinitePoset(n, [(a - 1, b - 1) for a, b in covers])
    members = 0
    for b in bars:
        members |= 1 << (b - 1)
    tops = [b for b in bars if P.up[b - 1] & members == 1 << (b - 1)]
    if tops != [expected_top]:
        raise ConstructionError(f"bars {bars.start}..{bars.stop - 1} have maxima {tops}, expected {expected_top}")
    # connectivity of the Hasse diagram restricted to the segment
    seen = {bars[0]}
    stack = [bars[0]]
    inside = set(bars)
    adj = {b: set() for b in bars}
    for a, b in covers:
        if a in inside and b in inside:
            adj[a].add(b)
            adj[b].add(a)
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    if seen != inside:
        raise ConstructionError(f"bars {bars.start}..{bars.stop - 1} are not connected")


def build_pwy(w: Sequence[int], Y: Iterable[int], check: bool = True) -> LabeledPoset:
    """Build ``P_{w,Y}`` by processing the values ``n+1, ..., 2`` of ``w``.

    With ``check`` the connectivity and unique-maximum invariants are
    re-verified from scratch at every step.
    """
    w = tuple(w)
    Y = check_admissible(w, Y)
    n = len(w) - 1
    pos = {v: k for k, v in enumerate(w, 1)}
    seg = _Segments(n)
    covers: list[tuple[int, int]] = []
    lam: list[int | None] = [None] * n

    def set_label(bar, value):
        if lam[bar - 1] is not None:
            raise ConstructionError(f"bar {bar} labeled twice")
        lam[bar - 1] = value

    for v in range(n + 1, 1, -1):
        i = pos[v]
        ell = next((j for j in range(i - 1, 0, -1) if w[j - 1] < v), None)
        r = next((j for j in range(i + 1, n + 2) if w[j - 1] < v), None)
        a = b = None
        if ell is not None:
            a = seg.maximum_of(ell, i - 1)
            if check:
                _check_segment(n, covers, range(ell, i), a)
        if r is not None:
            b = seg.maximum_of(i, r - 1)
            if check:
                _check_segment(n, covers, range(i, r), b)
        if a is None and b is None:
            raise ConstructionError(f"value {v} is both a left-to-right and right-to-left minimum")
        if a is None:
            set_label(b, -v)
        elif b is None:
            set_label(a, v)
        elif v in Y:
            covers.append((a, b))
            set_label(a, v)
            seg.union(a, b, b)
        else:
            covers.append((b, a))
            set_label(b, -v)
            seg.union(a, b, a)

    if any(x is None for x in lam):
        raise ConstructionError("some bar was never labeled")
    P = FinitePoset(n, [(a - 1, b - 1) for a, b in covers])
    return LabeledPoset(P, tuple(lam))  # type: ignore[arg-type]


def vertex_word(P: LabeledPoset, sigma: Sequence[int]) -> tuple[int, ...]:
    if not P.poset.is_linear_extension(sigma):
        raise ValueError(f"{tuple(sigma)} is not a linear extension")
    return tuple(P.Lambda[s - 1] for s in sigma)


def fiber(w: Sequence[int], Y: Iterable[int]) -> set[tuple[int, ...]]:
    """All ``sigma`` whose positive labels with ``w`` are exactly ``Y``."""
    Y = frozenset(Y)
    return {s for s in all_permutations(len(w) - 1) if ino_set(w, s) == Y}


def lin_equals_fiber(w: Sequence[int], Y: Iterable[int]) -> bool:
    P = build_pwy(w, Y)
    return set(P.linear_extensions()) == fiber(w, Y)


def poset_stats(P: LabeledPoset) -> dict:
    """Small summary used by the CLI."""
    return {"n": P.n, "covers": len(P.poset.covers),
            "linear_extensions": sum(1 for _ in P.linear_extensions()),
            "maximal": [x + 1 for x in range(P.n) if not P.poset.upper[x]],
            "components": _count_components(P.poset)}


def _count_components(P: FinitePoset) -> int:
    seen = 0
    comps = 0
    for x in range(P.size):
        if seen >> x & 1:
            continue
        comps += 1
        stack = [x]
        seen |= 1 << x
        while stack:
            y = stack.pop()
            for z in P.upper[y] + P.lower[y]:
                if not seen >> z & 1:
                    seen |= 1 << z
                    stack.append(z)
    return comps


__all__ = ["LabeledPoset", "InadmissibleY", "ConstructionError", "admissible_Y",
           "check_admissible", "build_pwy", "vertex_word", "fiber", "lin_equals_fiber",
           "poset_stats"]
