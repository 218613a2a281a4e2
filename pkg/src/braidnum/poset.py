"""Finite posets given by their cover relations.

Elements are ``0..size-1``.  The order relation is stored as bitmasks, which
keeps interval and up-set queries cheap for the few hundred elements of the
partition lattices used here.
"""
from __future__ import annotations

import json
import threading
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .poly import MultiPoly, Variable, Y


class PosetError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite poset on ``0..size-1`` defined by its covers ``a < b``."""

    def __init__(self, size: int, covers: Iterable[tuple[int, int]],
                 rank: Mapping[int, int] | Sequence[int] | None = None,
                 labels: Sequence | None = None):
        self.size = size
        self.covers = tuple(sorted(set((int(a), int(b)) for a, b in covers)))
        self.labels = list(labels) if labels is not None else None
        self.upper: list[list[int]] = [[] for _ in range(size)]
        self.lower: list[list[int]] = [[] for _ in range(size)]
        for a, b in self.covers:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise PosetError(f"bad cover {(a, b)}")
            self.upper[a].append(b)
            self.lower[b].append(a)
        self.topo = self._toposort()
        # up[x]: bitmask of all z >= x
        up = [0] * size
        for x in reversed(self.topo):
            m = 1 << x
            for b in self.upper[x]:
                m |= up[b]
            up[x] = m
        self.up = up
        down = [0] * size
        for x in self.topo:
            m = 1 << x
            for a in self.lower[x]:
                m |= down[a]
            down[x] = m
        self.down = down
        if rank is None:
            self.rank = self._infer_rank()
        else:
            self.rank = [rank[i] for i in range(size)]
            for a, b in self.covers:
                if self.rank[b] != self.rank[a] + 1:
                    raise PosetError(f"rank does not increase by one along cover {(a, b)}")
        self._mobius: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    def _toposort(self) -> list[int]:
        indeg = [len(self.lower[x]) for x in range(self.size)]
        ready = [x for x in range(self.size) if indeg[x] == 0]
        out = []
        while ready:
            ready.sort(reverse=True)
            x = ready.pop()
            out.append(x)
            for b in self.upper[x]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        if len(out) != self.size:
            raise PosetError("cover relation has a cycle")
        return out

    def _infer_rank(self) -> list[int] | None:
        rank: list[int | None] = [None] * self.size
        for x in self.topo:
            if not self.lower[x]:
                rank[x] = 0
            else:
                rs = {rank[a] + 1 for a in self.lower[x]}
                if len(rs) != 1:
                    return None
                rank[x] = rs.pop()
        # graded requires all minimal elements at the same height; they are 0 by fiat
        return rank  # type: ignore[return-value]

    # -- basic queries --------------------------------------------------
    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def interval(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            raise PosetError(f"{x} is not below {y}")
        return list(_bits(self.up[x] & self.down[y]))

    def minimal(self) -> list[int]:
        return [x for x in range(self.size) if not self.lower[x]]

    def maximal(self) -> list[int]:
        return [x for x in range(self.size) if not self.upper[x]]

    @property
    def bottom(self) -> int:
        mins = self.minimal()
        if len(mins) != 1:
            raise PosetError("poset has no unique minimum")
        return mins[0]

    @property
    def top(self) -> int:
        maxs = self.maximal()
        if len(maxs) != 1:
            raise PosetError("poset has no unique maximum")
        return maxs[0]

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def index_of(self, label) -> int:
        if self.labels is None:
            return int(label)
        if not hasattr(self, "_index"):
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    # -- Möbius function ------------------------------------------------
    def _mobius_row(self, x: int) -> dict[int, int]:
        row = self._mobius.get(x)
        if row is not None:
            return row
        with self._lock:
            row = self._mobius.get(x)
            if row is not None:
                return row
            row = {x: 1}
            upset = self.up[x]
            for z in self.topo:
                if z == x or not upset >> z & 1:
                    continue
                # mu(x,z) = -sum_{x <= u < z} mu(x,u)
                s = 0
                below = self.down[z] & upset & ~(1 << z)
                for u in _bits(below):
                    s += row[u]
                row[z] = -s
            self._mobius[x] = row
            return row

    def mobius(self, x: int, y: int) -> int:
        if not self.leq(x, y):
            raise PosetError(f"mobius({x}, {y}) undefined: elements not comparable as x <= y")
        return self._mobius_row(x)[y]

    def interval_poincare_coeffs(self, x: int, y: int) -> tuple[int, ...]:
        """Coefficient tuple of the interval Poincaré polynomial."""
        if self.rank is None:
            raise PosetError("interval Poincaré polynomial needs a ranked poset")
        if not self.leq(x, y):
            raise PosetError(f"{x} is not below {y}")
        row = self._mobius_row(x)
        r0 = self.rank[x]
        coeffs = [0] * (self.rank[y] - r0 + 1)
        for z in _bits(self.up[x] & self.down[y]):
            coeffs[self.rank[z] - r0] += abs(row[z])
        return tuple(coeffs)

    def interval_poincare(self, x: int, y: int, var: Variable = Y) -> MultiPoly:
        """``sum_{z in [x,y]} |mu(x,z)| var**(rank z - rank x)``."""
        return MultiPoly.from_univariate(self.interval_poincare_coeffs(x, y), var)

    # -- chains ---------------------------------------------------------
    def chains_avoiding_bottom(self) -> Iterator[tuple[int, ...]]:
        """Every chain (the empty one included) not containing the minimum."""
        bot = self.bottom
        yield ()
        stack: list[tuple[int, ...]] = []
        for x in reversed(range(self.size)):
            if x != bot:
                stack.append((x,))
        while stack:
            ch = stack.pop()
            yield ch
            last = ch[-1]
            above = self.up[last] & ~(1 << last)
            for z in sorted(_bits(above), reverse=True):
                stack.append(ch + (z,))

    def maximal_chains(self) -> Iterator[tuple[int, ...]]:
        """All bottom-to-top cover paths, depth first with sorted children."""
        bot, top = self.bottom, self.top
        stack = [(bot,)]
        while stack:
            ch = stack.pop()
            last = ch[-1]
            if last == top:
                yield ch
                continue
            for z in sorted(self.upper[last], reverse=True):
                stack.append(ch + (z,))

    def count_maximal_chains(self) -> int:
        """Number of maximal chains, by dynamic programming over covers."""
        bot, top = self.bottom, self.top
        ways = [0] * self.size
        ways[bot] = 1
        for x in self.topo:
            for b in self.upper[x]:
                ways[b] += ways[x]
        return ways[top]

    def linear_extensions(self) -> Iterator[tuple[int, ...]]:
        """Linear extensions as permutations of ``1..size``.

        Element ``k`` of the poset is reported as the value ``k + 1``; the
        permutation lists elements from first to last.
        """
        n = self.size
        indeg = [len(self.lower[x]) for x in range(n)]
        seq: list[int] = []

        def rec():
            if len(seq) == n:
                yield tuple(x + 1 for x in seq)
                return
            for x in range(n):
                if indeg[x] == 0:
                    indeg[x] = -1
                    for b in self.upper[x]:
                        indeg[b] -= 1
                    seq.append(x)
                    yield from rec()
                    seq.pop()
                    for b in self.upper[x]:
                        indeg[b] += 1
                    indeg[x] = 0

        return rec()

    def is_linear_extension(self, sigma: Sequence[int]) -> bool:
        if sorted(sigma) != list(range(1, self.size + 1)):
            return False
        pos = [0] * self.size
        for k, v in enumerate(sigma):
            pos[v - 1] = k
        return all(pos[a] < pos[b] for a, b in self.covers)

    # -- export ---------------------------------------------------------
    def to_dict(self) -> dict:
        return {"size": self.size, "covers": [list(c) for c in self.covers],
                "rank": list(self.rank) if self.rank is not None else None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: Mapping) -> "FinitePoset":
        return cls(d["size"], [tuple(c) for c in d["covers"]], rank=d.get("rank"))

    @classmethod
    def from_json(cls, text: str) -> "FinitePoset":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (self.size, self.covers, self.rank) == (other.size, other.covers, other.rank)

    def __hash__(self):
        return hash((self.size, self.covers))

    def __repr__(self):
        return f"FinitePoset(size={self.size}, covers={len(self.covers)})"


def mobius(P: FinitePoset, x: int, y: int) -> int:
    return P.mobius(x, y)


def interval_poincare(P: FinitePoset, x: int, y: int, var: Variable = Y) -> MultiPoly:
    return P.interval_poincare(x, y, var)


def chains_avoiding_bottom(P: FinitePoset):
    return P.chains_avoiding_bottom()


def maximal_chains(P: FinitePoset):
    return P.maximal_chains()


def linear_extensions(P: FinitePoset):
    return P.linear_extensions()


def _dot_quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(P: FinitePoset, vertex_label: Callable[[int], str] | Mapping | None = None,
           edge_label: Callable[[int, int], str] | Mapping | None = None,
           name: str = "P") -> str:
    """Graphviz source for the Hasse diagram, drawn bottom to top."""
    def vl(x):
        if vertex_label is None:
            return str(P.label(x))
        return vertex_label[x] if isinstance(vertex_label, Mapping) else vertex_label(x)

    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in range(P.size):
        lines.append(f"  n{x} [label={_dot_quote(vl(x))}];")
    for a, b in P.covers:
        attr = ""
        if edge_label is not None:
            lab = edge_label.get((a, b)) if isinstance(edge_label, Mapping) else edge_label(a, b)
            if lab is not None:
                attr = f" [label={_dot_quote(lab)}]"
        lines.append(f"  n{a} -> n{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
