"""The numerator polynomial of the coarse flag Hilbert-Poincaré series of the
braid arrangement, computed three independent ways, and the per-``w``
identities between the ascent and descent generating functions.

* ``chains``: sum over chains of the partition lattice of products of interval
  Poincaré polynomials times ``t^k (1-t)^(n-k)``;
* ``rlabeling``: sum over maximal chains and position subsets of
  ``y^|Y| t^asc`` for the signed max-of-min labels;
* ``statistic``: sum over pairs ``(w, sigma)`` of ``y^ino t^des``.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable

from . import kernels
from .braid import LATTICE_BUDGET, maximal_chain_labels, partition_lattice
from .perms import all_permutations, asc, check_budget, eulerian_polynomial
from .poly import T, Y, MultiPoly, format_text, pow_binomial, tvar, yvar

CHAINS_BUDGET = LATTICE_BUDGET
STATISTIC_BUDGET = 6
IDENTITY_BUDGET = 7  # size of w

METHODS = ("chains", "rlabeling", "statistic")


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("BRAIDNUM_WORKERS", "1")))
    except ValueError:
        return 1


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, z in enumerate(b):
                out[i + j] += x * z
    return out


def _bivariate(counts: dict[tuple[int, int], int]) -> MultiPoly:
    """``{(y_exp, t_exp): c}`` -> polynomial in y and t."""
    terms = {}
    for (a, b), c in counts.items():
        mono = tuple(p for p in ((Y, a), (T, b)) if p[1])
        terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


# ---------------------------------------------------------------------------
# Path A: chains of the lattice of flats


def numerator_via_chains(n: int, budget: int = CHAINS_BUDGET) -> MultiPoly:
    check_budget(n, budget, "chain enumeration rank")
    P = partition_lattice(n, budget)
    bot, top = P.bottom, P.top
    poin: dict = {}

    def interval(x, y):
        key = (x, y)
        if key not in poin:
            poin[key] = P.interval_poincare_coeffs(x, y)
        return poin[key]

    # chain Poincaré polynomials grouped by chain length
    by_len = [[0] * (n + 1) for _ in range(n + 1)]
    for chain in P.chains_avoiding_bottom():
        pts = (bot,) + chain + (top,)
        prod = [1]
        for x, y in zip(pts, pts[1:]):
            prod = _convolve(prod, interval(x, y))
        acc = by_len[len(chain)]
        for k, c in enumerate(prod):
            acc[k] += c
    total = MultiPoly()
    for k, coeffs in enumerate(by_len):
        if any(coeffs):
            total = total + MultiPoly.from_univariate(coeffs, Y) * pow_binomial(k, n - k)
    return total


# ---------------------------------------------------------------------------
# Path B: R-labeling of the partition lattice


def numerator_via_rlabeling(n: int, budget: int = CHAINS_BUDGET) -> MultiPoly:
    check_budget(n, budget, "maximal chain enumeration rank")
    P = partition_lattice(n, budget)
    counts: dict = {}
    for chain in P.maximal_chains():
        labels = maximal_chain_labels(P, chain)
        for mask in range(1 << n):
            word = [lab if mask >> k & 1 else -lab for k, lab in enumerate(labels)]
            key = (bin(mask).count("1"), asc(word))
            counts[key] = counts.get(key, 0) + 1
    return _bivariate(counts)


# ---------------------------------------------------------------------------
# Path C: the companion statistic


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _stat_worker(w):
    _, des_counts, _ = kernels.sweep(w)
    out: dict = {}
    for (im, dm), c in des_counts.items():
        key = (_popcount(im), _popcount(dm))
        out[key] = out.get(key, 0) + c
    return out


def map_over_permutations(func: Callable, m: int, workers: int | None = None,
                          reduce: Callable | None = None):
    """Apply ``func`` to every permutation of ``1..m``; reduce the results.

    The default reduction adds count dictionaries, which is order-independent,
    so the result does not depend on ``workers``.
    """
    workers = default_workers() if workers is None else workers
    if reduce is None:
        reduce = _add_counts
    perms = all_permutations(m)
    acc = None
    if workers <= 1:
        results: Iterable = map(func, perms)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(func, perms, chunksize=64)
    try:
        for r in results:
            acc = r if acc is None else reduce(acc, r)
    finally:
        if workers > 1:
            pool.shutdown()
    return acc


def _add_counts(a: dict, b: dict) -> dict:
    for k, c in b.items():
        a[k] = a.get(k, 0) + c
    return a


def numerator_via_statistic(n: int, budget: int = STATISTIC_BUDGET,
                            workers: int | None = None) -> MultiPoly:
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(n, budget, "pair enumeration rank")
    return _bivariate(map_over_permutations(_stat_worker, n + 1, workers))


def numerator(n: int, method: str, workers: int | None = None) -> MultiPoly:
    if method == "chains":
        return numerator_via_chains(n)
    if method == "rlabeling":
        return numerator_via_rlabeling(n)
    if method == "statistic":
        return numerator_via_statistic(n, workers=workers)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class NumeratorReport:
    n: int
    polys: dict[str, MultiPoly]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        vals = list(self.polys.values())
        return all(v == vals[0] for v in vals[1:])

    @property
    def poly_chains(self):
        return self.polys.get("chains")

    @property
    def poly_rlabel(self):
        return self.polys.get("rlabeling")

    @property
    def poly_stat(self):
        return self.polys.get("statistic")


def numerator_report(n: int, methods: Iterable[str] = METHODS,
                     workers: int | None = None) -> NumeratorReport:
    rep = NumeratorReport(n, {})
    for m in methods:
        t0 = time.perf_counter()
        rep.polys[m] = numerator(n, m, workers)
        rep.timings[m] = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# refined identities


def _mask_items(mask: int):
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def _refined_poly(counts: dict) -> MultiPoly:
    terms = {}
    for (im, tm), c in counts.items():
        mono = tuple([(yvar(v), 1) for v in _mask_items(im)] + [(tvar(k), 1) for k in _mask_items(tm)])
        terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


def _check_w(w) -> None:
    check_budget(len(w), IDENTITY_BUDGET, "size of w")


def refined_sides(w) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the refined identity for ``w``:
    ``sum_sigma y^Ino t^Asc(lambda)`` and ``sum_sigma y^Ino t^Des(sigma)``."""
    _check_w(w)
    asc_counts, des_counts, _ = kernels.sweep(tuple(w))
    return _refined_poly(asc_counts), _refined_poly(des_counts)


def refined_identity_check(w) -> bool:
    lhs, rhs = refined_sides(w)
    return lhs == rhs


def _collapse(counts: dict) -> dict:
    out: dict = {}
    for (im, tm), c in counts.items():
        key = (_popcount(im), _popcount(tm))
        out[key] = out.get(key, 0) + c
    return out


def local_sides(w) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the bivariate identity for ``w``."""
    _check_w(w)
    asc_counts, des_counts, _ = kernels.sweep(tuple(w))
    return _bivariate(_collapse(asc_counts)), _bivariate(_collapse(des_counts))


def local_identity_check(w) -> bool:
    lhs, rhs = local_sides(w)
    return lhs == rhs


class _IdentityWorker:
    """Picklable per-``w`` check for process pools; returns ``[w]`` on failure."""

    def __init__(self, refined: bool):
        self.refined = refined

    def __call__(self, w):
        asc_counts, des_counts, _ = kernels.sweep(w)
        if self.refined:
            ok = asc_counts == des_counts
        else:
            ok = _collapse(asc_counts) == _collapse(des_counts)
        return [] if ok else [w]


def identity_failures(n: int, refined: bool, workers: int | None = None) -> list[tuple[int, ...]]:
    """Every ``w`` of size ``n+1`` for which the identity fails (expected: none)."""
    check_budget(n + 1, IDENTITY_BUDGET, "size of w")
    return map_over_permutations(_IdentityWorker(refined), n + 1, workers,
                                 reduce=lambda a, b: a + b)


# ---------------------------------------------------------------------------
# closed forms


def poincare_product(n: int) -> MultiPoly:
    """``prod_{k=1}^{n} (1 + k y)``."""
    out = MultiPoly.const(1)
    for k in range(1, n + 1):
        out = out * MultiPoly.from_univariate([1, k], Y)
    return out


def closed_form_checks(n: int, numerator_poly: MultiPoly | None = None) -> dict:
    N = numerator_via_statistic(n) if numerator_poly is None else numerator_poly
    at_y1 = N.substitute({Y: 1})
    at_t0 = N.substitute({T: 0})
    want_y1 = eulerian_polynomial(n) * factorial(n + 1)
    want_t0 = poincare_product(n)
    return {
        "n": n,
        "N(1,t)": format_text(at_y1),
        "N(y,0)": format_text(at_t0),
        "regions_times_eulerian": at_y1 == want_y1,
        "poincare_polynomial": at_t0 == want_t0,
        "nonnegative": N.is_nonnegative(),
        "mass": N.total_mass() == factorial(n + 1) * factorial(n),
        "ok": at_y1 == want_y1 and at_t0 == want_t0 and N.is_nonnegative()
              and N.total_mass() == factorial(n + 1) * factorial(n),
    }


def summed_refined(n: int) -> MultiPoly:
    """Sum of the refined des-side over all ``w`` with ``y_i -> y``, ``t_i -> t``."""
    check_budget(n, STATISTIC_BUDGET, "pair enumeration rank")
    total = MultiPoly()
    for w in all_permutations(n + 1):
        _, rhs = refined_sides(w)
        binds = {v: MultiPoly.var(Y) for v in rhs.variables() if v.kind == "yi"}
        binds.update({v: MultiPoly.var(T) for v in rhs.variables() if v.kind == "ti"})
        total = total + rhs.substitute(binds)
    return total
