"""The braid arrangement: set partitions, set compositions and the signed
max-of-min labeling of a pair ``(w, sigma)``.

A pair ``(w, sigma)`` with ``w`` a permutation of ``1..n+1`` and ``sigma`` a
permutation of ``1..n`` encodes a maximal chain of set compositions: start
from the singletons of ``w`` and delete the bars between entries in the order
``sigma(1), ..., sigma(n)``.  Bar ``j`` sits between ``w_j`` and ``w_{j+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perms import PERM_BUDGET, check_budget, inverse
from .poset import FinitePoset

# Pi_n and Sigma_n are materialized only up to this rank
LATTICE_BUDGET = 5

Block = tuple  # sorted tuple of ints


def _fmt_block(block: Sequence[int]) -> str:
    if all(x < 10 for x in block):
        return "".join(map(str, block))
    return ",".join(map(str, block))


@dataclass(frozen=True, order=True)
class SetPartition:
    blocks: tuple  # tuple[Block, ...], sorted by minimum

    @classmethod
    def of(cls, blocks) -> "SetPartition":
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    @property
    def ground(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self):
        return "".join("{" + _fmt_block(b) + "}" for b in self.blocks)


@dataclass(frozen=True, order=True)
class SetComposition:
    blocks: tuple  # ordered; each block sorted

    @classmethod
    def of(cls, blocks) -> "SetComposition":
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "SetComposition":
        out = []
        for part in text.split("|"):
            out.append([int(x) for x in part.split(",")] if "," in part else [int(c) for c in part])
        return cls.of(out)

    def partition(self) -> SetPartition:
        return SetPartition.of(self.blocks)

    def __str__(self):
        return "|".join(_fmt_block(b) for b in self.blocks)


@dataclass(frozen=True)
class BarPositions:
    """Positions ``ell < i < r`` of the nearest smaller entries, and the merge
    ranks of the last bar deleted on each side.  ``None`` stands for infinity.
    """

    i: int
    ell: int | None
    r: int | None
    ell_sigma: int | None
    r_sigma: int | None

    @property
    def merge_rank(self) -> int | None:
        """Rank at which the value first merges with something smaller."""
        if self.ell_sigma is None:
            return self.r_sigma
        if self.r_sigma is None:
            return self.ell_sigma
        return min(self.ell_sigma, self.r_sigma)

    @property
    def merges_left(self) -> bool:
        """True when the left merge happens first (``ell_sigma < r_sigma``)."""
        if self.ell_sigma is None:
            return False
        return self.r_sigma is None or self.ell_sigma < self.r_sigma


def _check_pair(w: Sequence[int], sigma: Sequence[int]) -> None:
    if len(w) != len(sigma) + 1:
        raise ValueError(f"need |w| = |sigma| + 1, got {len(w)} and {len(sigma)}")


# ---------------------------------------------------------------------------
# the two posets


def set_partitions(m: int) -> Iterator[SetPartition]:
    """All set partitions of ``1..m`` (restricted growth strings)."""
    def rec(k, blocks):
        if k > m:
            yield SetPartition.of(blocks)
            return
        for b in blocks:
            b.append(k)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([k])
        yield from rec(k + 1, blocks)
        blocks.pop()

    if m == 0:
        yield SetPartition(())
        return
    yield from rec(1, [])


def set_compositions(m: int) -> Iterator[SetComposition]:
    from itertools import permutations
    for p in set_partitions(m):
        for order in permutations(p.blocks):
            yield SetComposition(order)


def partition_lattice(n: int, budget: int = LATTICE_BUDGET) -> FinitePoset:
    """The partition lattice of ``1..n+1``; labels are :class:`SetPartition`."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(n, budget, "partition lattice rank")
    m = n + 1
    elems = sorted(set_partitions(m), key=lambda p: (-len(p.blocks), p.blocks))
    index = {p: k for k, p in enumerate(elems)}
    covers = []
    for k, p in enumerate(elems):
        for a, b in combinations(range(len(p.blocks)), 2):
            merged = [blk for c, blk in enumerate(p.blocks) if c not in (a, b)]
            merged.append(p.blocks[a] + p.blocks[b])
            covers.append((k, index[SetPartition.of(merged)]))
    rank = [m - len(p.blocks) for p in elems]
    return FinitePoset(len(elems), covers, rank=rank, labels=elems)


def composition_poset(n: int, budget: int = LATTICE_BUDGET) -> FinitePoset:
    """The face poset of set compositions of ``1..n+1``."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(n, budget, "set composition poset rank")
    m = n + 1
    elems = sorted(set_compositions(m), key=lambda c: (-len(c.blocks), c.blocks))
    index = {c: k for k, c in enumerate(elems)}
    covers = []
    for k, c in enumerate(elems):
        bl = c.blocks
        for j in range(len(bl) - 1):
            merged = bl[:j] + (tuple(sorted(bl[j] + bl[j + 1])),) + bl[j + 2:]
            covers.append((k, index[SetComposition(merged)]))
    rank = [m - len(c.blocks) for c in elems]
    return FinitePoset(len(elems), covers, rank=rank, labels=elems)


def cover_label(P: FinitePoset, a: int, b: int) -> int:
    """Unsigned max-of-min label of a cover in the partition lattice."""
    lo, hi = P.labels[a], P.labels[b]
    gone = [blk for blk in lo.blocks if blk not in hi.blocks]
    if len(gone) != 2:
        raise ValueError(f"{lo} -> {hi} is not a cover")
    return max(min(gone[0]), min(gone[1]))


# ---------------------------------------------------------------------------
# the chain of a pair (w, sigma)


def chain_from_pair(w: Sequence[int], sigma: Sequence[int]) -> list[SetComposition]:
    _check_pair(w, sigma)
    blocks = [[x] for x in w]
    # owner[j]: index into blocks for the block holding position j (0-based)
    chain = [SetComposition.of(blocks)]
    bars = set(range(1, len(w)))
    for s in sigma:
        if s not in bars:
            raise ValueError(f"bar {s} deleted twice")
        bars.discard(s)
        cuts = [0] + sorted(bars) + [len(w)]
        chain.append(SetComposition.of(
            [w[cuts[k]:cuts[k + 1]] for k in range(len(cuts) - 1)]))
    return chain


def lambda_word(w: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Signed labels ``(lambda_1, ..., lambda_n)`` of the chain ``(w, sigma)``.

    ``lambda_i`` is ``+max(min B, min B')`` when the merging blocks ``B|B'``
    have ``min B < min B'`` and the negative of that otherwise.
    """
    _check_pair(w, sigma)
    m = len(w)
    # blocks are intervals of positions; track endpoints and minima
    left_end = list(range(m))   # valid at right endpoints
    right_end = list(range(m))  # valid at left endpoints
    bmin = list(w)              # valid at both endpoints
    out = []
    for s in sigma:
        j = s - 1               # block ending at j meets block starting at j+1
        lo, hi = left_end[j], right_end[j + 1]
        a, b = bmin[j], bmin[j + 1]
        out.append(b if a < b else -a)
        mn = a if a < b else b
        right_end[lo] = hi
        left_end[hi] = lo
        bmin[lo] = bmin[hi] = mn
    return tuple(out)


def ino_set(w: Sequence[int], sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(x for x in lambda_word(w, sigma) if x > 0)


def ino(w: Sequence[int], sigma: Sequence[int]) -> int:
    return sum(1 for x in lambda_word(w, sigma) if x > 0)


def ino_count_from_chain(w: Sequence[int], sigma: Sequence[int]) -> int:
    """``ino`` read directly off the set-composition chain (slow, independent)."""
    chain = chain_from_pair(w, sigma)
    count = 0
    for lo, hi in zip(chain, chain[1:]):
        gone = [b for b in lo.blocks if b not in hi.blocks]
        left, right = gone
        if lo.blocks.index(left) > lo.blocks.index(right):
            left, right = right, left
        count += min(left) < min(right)
    return count


def last_bar_positions(w: Sequence[int], sigma: Sequence[int], v: int) -> BarPositions:
    _check_pair(w, sigma)
    if v == 1:
        raise ValueError("1 is never the larger of two merging minima")
    if v not in w:
        raise ValueError(f"{v} does not occur in w")
    i = list(w).index(v) + 1
    ell = next((j for j in range(i - 1, 0, -1) if w[j - 1] < v), None)
    r = next((j for j in range(i + 1, len(w) + 1) if w[j - 1] < v), None)
    sinv = inverse(sigma)
    ell_sigma = max(sinv[b - 1] for b in range(ell, i)) if ell is not None else None
    r_sigma = max(sinv[b - 1] for b in range(i, r)) if r is not None else None
    return BarPositions(i, ell, r, ell_sigma, r_sigma)


def lambda_from_bar_positions(w: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Rebuild the signed word value by value from the last bar positions."""
    out = [0] * len(sigma)
    for v in range(2, len(w) + 1):
        bp = last_bar_positions(w, sigma, v)
        j = bp.merge_rank
        if j is None:
            raise AssertionError(f"value {v} never merges with a smaller block")
        if out[j - 1]:
            raise AssertionError(f"rank {j} claimed twice")
        out[j - 1] = v if bp.merges_left else -v
    return tuple(out)


def pair_to_flat_chain(w: Sequence[int], sigma: Sequence[int]):
    """Forget block order: ``(chain of SetPartition, positions with positive label)``."""
    chain = tuple(c.partition() for c in chain_from_pair(w, sigma))
    lam = lambda_word(w, sigma)
    return chain, frozenset(k for k, x in enumerate(lam, 1) if x > 0)


# ---------------------------------------------------------------------------
# checks on the partition lattice


def maximal_chain_labels(P: FinitePoset, chain: Sequence[int]) -> tuple[int, ...]:
    return tuple(cover_label(P, a, b) for a, b in zip(chain, chain[1:]))


def is_r_labeling(P: FinitePoset) -> bool:
    """Every interval has exactly one maximal chain with weakly increasing labels."""
    labels = {(a, b): cover_label(P, a, b) for a, b in P.covers}
    for x in range(P.size):
        # count weakly increasing paths from x to every y above it
        # state: (element, last label) -> number of paths
        frontier = {(x, 0): 1}
        found: dict[int, int] = {x: 1}
        while frontier:
            nxt: dict = {}
            for (z, last), c in frontier.items():
                for b in P.upper[z]:
                    lab = labels[(z, b)]
                    if lab >= last:
                        nxt[(b, lab)] = nxt.get((b, lab), 0) + c
            for (b, _), c in nxt.items():
                found[b] = found.get(b, 0) + c
            frontier = nxt
        for y in range(P.size):
            if P.leq(x, y) and found.get(y, 0) != 1:
                return False
    return True


def check_pair_sizes(n: int) -> None:
    check_budget(n + 1, PERM_BUDGET, "permutation size")
