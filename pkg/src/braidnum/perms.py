"""Permutations in one-line notation and the word statistics built on them.

Permutations and signed words are plain tuples of ints.  Positions and values
are 1-based, as in one-line notation.
"""
from __future__ import annotations

from itertools import permutations as _itperms
from math import factorial
from typing import Iterator, Sequence

from .poly import T, MultiPoly

Permutation = tuple  # tuple[int, ...], a bijection on {1..m}
SignedWord = tuple  # tuple[int, ...], nonzero entries

# largest m for which all m! permutations may be enumerated
PERM_BUDGET = 9


class BudgetExceeded(ValueError):
    """Raised instead of starting an enumeration that would not finish."""


def check_budget(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise BudgetExceeded(f"{what}: {value} exceeds the enumeration budget of {limit}")


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def parse_perm(text: str) -> Permutation:
    """Parse ``"215463"`` or ``"2,1,5,4,6,3"``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        vals = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        vals = tuple(int(c) for c in text)
    else:
        raise ValueError(f"not a permutation: {text!r}")
    if not is_permutation(vals):
        raise ValueError(f"not a permutation of 1..{len(vals)}: {text!r}")
    return vals


def format_perm(p: Sequence[int], compact: bool | None = None) -> str:
    if compact is None:
        compact = len(p) <= 9
    if compact and all(0 < x < 10 for x in p):
        return "".join(map(str, p))
    return ",".join(map(str, p))


def format_signed(word: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in word) + ")"


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for pos, val in enumerate(p, 1):
        inv[val - 1] = pos
    return tuple(inv)


def descent_set(sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def ascent_set(word: Sequence[int]) -> frozenset[int]:
    """Positions ``i`` with ``word[i] < word[i+1]``, compared as signed ints."""
    return frozenset(i for i in range(1, len(word)) if word[i - 1] < word[i])


def des(sigma: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def asc(word: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(word)) if word[i - 1] < word[i])


def all_permutations(m: int, budget: int = PERM_BUDGET) -> Iterator[Permutation]:
    """All permutations of ``1..m`` in lexicographic order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    check_budget(m, budget, "permutation size")
    return _itperms(range(1, m + 1))


def eulerian_polynomial(n: int, budget: int = PERM_BUDGET) -> MultiPoly:
    """``sum over sigma in Sym(n) of t**des(sigma)``, by enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(n, budget, "Eulerian polynomial degree")
    counts = [0] * n
    for s in all_permutations(n, budget):
        counts[des(s)] += 1
    return MultiPoly.from_univariate(counts, T)


def eulerian_numbers(n: int) -> list[int]:
    """Eulerian numbers ``A(n, k)`` from the standard recurrence.

    Independent of :func:`eulerian_polynomial`; used to cross-check it.
    """
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k in range(m):
            left = row[k] if k < len(row) else 0
            prev = row[k - 1] if 0 < k <= len(row) else 0
            new[k] = (k + 1) * left + (m - k) * prev
        row = new
    return row


def ltr_minima(w: Sequence[int]) -> frozenset[int]:
    out = []
    cur = None
    for x in w:
        if cur is None or x < cur:
            out.append(x)
            cur = x
    return frozenset(out)


def rtl_minima(w: Sequence[int]) -> frozenset[int]:
    return ltr_minima(tuple(reversed(w)))


def n_factorial_pairs(n: int) -> int:
    return factorial(n + 1) * factorial(n)
