"""Quasisymmetric generating functions truncated to finitely many variables.

A degree-``n`` series restricted to ``x_1..x_m`` is a finite homogeneous
polynomial; for ``m >= n`` two such truncations agree iff the full series do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .perms import descent_set
from .poly import MultiPoly, tvar
from .poset import FinitePoset


@dataclass(frozen=True)
class TruncatedQSym:
    m: int
    degree: int
    coeffs: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            if len(e) != self.m or sum(e) != self.degree or min(e, default=0) < 0:
                raise ValueError(f"exponent {e} is not a degree-{self.degree} monomial in {self.m} variables")
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __add__(self, other: "TruncatedQSym") -> "TruncatedQSym":
        if (self.m, self.degree) != (other.m, other.degree):
            raise ValueError("mismatched truncation")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedQSym(self.m, self.degree, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedQSym):
            return NotImplemented
        return (self.m, self.degree, self.coeffs) == (other.m, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.m, self.degree, frozenset(self.coeffs.items())))

    def count(self) -> int:
        """Value at ``x_i = 1``: the number of contributing sequences."""
        return sum(self.coeffs.values())

    def __len__(self):
        return len(self.coeffs)


def _exponent(values: Iterable[int], m: int) -> tuple[int, ...]:
    e = [0] * m
    for v in values:
        e[v - 1] += 1
    return tuple(e)


def fundamental_L(S: Iterable[int], n: int, m: int) -> TruncatedQSym:
    """Sum of ``x_{i_1}...x_{i_n}`` over ``1 <= i_1 <= ... <= i_n <= m`` with
    ``i_k < i_{k+1}`` whenever ``k`` is in ``S``."""
    if m < 1:
        raise ValueError("need at least one variable")
    S = frozenset(S)
    coeffs: dict = {}

    def rec(k, lo, seq):
        if k == n:
            e = _exponent(seq, m)
            coeffs[e] = coeffs.get(e, 0) + 1
            return
        start = lo + 1 if k > 0 and k in S else lo
        for v in range(max(start, 1), m + 1):
            seq.append(v)
            rec(k + 1, v, seq)
            seq.pop()

    rec(0, 1, [])
    return TruncatedQSym(m, n, coeffs)


def k_p_omega(P: FinitePoset, omega: Sequence[int], m: int) -> TruncatedQSym:
    """Generating function of reverse ``(P, omega)``-partitions into ``1..m``.

    ``omega[k]`` labels element ``k``.  A map ``f`` counts when every cover
    ``a < b`` has ``f(a) <= f(b)``, strictly if ``omega(a) > omega(b)``.
    Checking covers suffices: a strict step is forced along any chain whose
    endpoints are out of ``omega`` order.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    n = P.size
    rules = [(a, b, omega[a] > omega[b]) for a, b in P.covers]
    coeffs: dict = {}
    for f in product(range(1, m + 1), repeat=n):
        if all(f[a] < f[b] if strict else f[a] <= f[b] for a, b, strict in rules):
            e = _exponent(f, m)
            coeffs[e] = coeffs.get(e, 0) + 1
    return TruncatedQSym(m, n, coeffs)


def relabeled_descents(sigma: Sequence[int], omega: Sequence[int] | None = None) -> frozenset[int]:
    """Descent set of ``omega(sigma(1)), ..., omega(sigma(n))``."""
    if omega is None:
        return descent_set(sigma)
    return descent_set([omega[s - 1] for s in sigma])


def k_via_fundamental(P: FinitePoset, omega: Sequence[int], m: int) -> TruncatedQSym:
    total = TruncatedQSym(m, P.size, {})
    cache: dict = {}
    for sigma in P.linear_extensions():
        S = relabeled_descents(sigma, omega)
        if S not in cache:
            cache[S] = fundamental_L(S, P.size, m)
        total = total + cache[S]
    return total


def descent_generating_function(A: Iterable[Sequence[int]],
                                omega: Sequence[int] | None = None) -> MultiPoly:
    """``sum over sigma in A of prod_{i in Des(omega(sigma))} t_i``."""
    counts: dict = {}
    for sigma in A:
        key = tuple(sorted(relabeled_descents(sigma, omega)))
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly({tuple((tvar(i), 1) for i in S): c for S, c in counts.items()})


def standardize(labels: Sequence[int]) -> tuple[int, ...]:
    """Replace injective labels by their ranks ``1..n``, keeping relative order."""
    order = sorted(range(len(labels)), key=lambda k: labels[k])
    out = [0] * len(labels)
    for r, k in enumerate(order, 1):
        out[k] = r
    return tuple(out)


def same_cover_order(P: FinitePoset, omega: Sequence[int], omega2: Sequence[int]) -> bool:
    return all((omega[a] < omega[b]) == (omega2[a] < omega2[b]) for a, b in P.covers)
