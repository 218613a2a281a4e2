"""Exhaustive verification suites over all small ``n``.

Each suite checks one family of properties for every ``k = 1..n`` and returns
a :class:`SuiteResult` listing counterexamples (there should be none).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from . import cfhp, kernels
from .braid import (cover_label, is_r_labeling, lambda_from_bar_positions, lambda_word,
                    partition_lattice, pair_to_flat_chain)
from .perms import BudgetExceeded, all_permutations, ltr_minima, rtl_minima
from .pwy import admissible_Y, build_pwy
from .qsym import (descent_generating_function, fundamental_L, k_p_omega, k_via_fundamental,
                   same_cover_order, standardize)


@dataclass
class SuiteResult:
    name: str
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, item) -> None:
        # keep reports bounded
        if len(self.failures) < 20:
            self.failures.append(item)
        else:
            self.failures[-1] = "...more failures"

    def to_dict(self) -> dict:
        return {"suite": self.name, "n": self.n, "checked": self.checked,
                "ok": self.ok, "failures": [repr(f) for f in self.failures],
                "seconds": round(self.seconds, 3)}


def suite_three_way(n: int) -> SuiteResult:
    res = SuiteResult("three_way", n)
    for k in range(1, n + 1):
        rep = cfhp.numerator_report(k)
        res.checked += 1
        if not rep.agree:
            res.fail(("disagree", k, {m: str(p) for m, p in rep.polys.items()}))
    return res


def suite_closed_forms(n: int) -> SuiteResult:
    res = SuiteResult("closed_forms", n)
    for k in range(1, n + 1):
        rep = cfhp.closed_form_checks(k)
        res.checked += 1
        if not rep["ok"]:
            res.fail(rep)
        if cfhp.summed_refined(k) != cfhp.numerator_via_statistic(k):
            res.fail(("refined sum differs from statistic", k))
    return res


def _identity_suite(name: str, refined: bool) -> Callable[[int], SuiteResult]:
    def run(n: int) -> SuiteResult:
        res = SuiteResult(name, n)
        for k in range(1, n + 1):
            for w in cfhp.identity_failures(k, refined):
                res.fail(w)
            res.checked += factorial(k + 1)
        return res
    run.__name__ = f"suite_{name}"
    return run


suite_refined_identity = _identity_suite("refined_identity", refined=True)
suite_bivariate_identity = _identity_suite("bivariate_identity", refined=False)


def suite_label_set(n: int) -> SuiteResult:
    """Absolute labels are exactly ``2..n+1``; kernel and direct route."""
    res = SuiteResult("label_set", n)
    for k in range(1, n + 1):
        want = set(range(2, k + 2))
        for w in all_permutations(k + 1):
            _, _, bad = kernels.sweep(w)
            if bad:
                res.fail((w, "kernel", bad))
            if k <= 4:
                for s in all_permutations(k):
                    if {abs(x) for x in lambda_word(w, s)} != want:
                        res.fail((w, s))
            res.checked += factorial(k)
    return res


def suite_bar_positions(n: int) -> SuiteResult:
    """The signed word is recovered from the last left/right bar positions."""
    res = SuiteResult("bar_positions", n)
    for k in range(1, n + 1):
        for w in all_permutations(k + 1):
            for s in all_permutations(k):
                res.checked += 1
                if lambda_from_bar_positions(w, s) != lambda_word(w, s):
                    res.fail((w, s))
    return res


def suite_minima(n: int) -> SuiteResult:
    """Positive labels avoid left-to-right minima and contain the
    right-to-left minima other than 1."""
    res = SuiteResult("minima", n)
    for k in range(1, n + 1):
        for w in all_permutations(k + 1):
            ltr, rtl = ltr_minima(w), rtl_minima(w) - {1}
            asc_counts, _, _ = kernels.sweep(w)
            for im, _ in asc_counts:
                vals = {v for v in range(2, k + 2) if im >> v & 1}
                res.checked += 1
                if vals & ltr or not rtl <= vals:
                    res.fail((w, sorted(vals)))
    return res


def suite_partition(n: int) -> SuiteResult:
    """For each ``w``: the ``P_{w,Y}`` partition ``Sym(n)`` into ino-fibers,
    ``Lambda`` along a linear extension is the signed word, and every cover
    reverses the order of ``Lambda``."""
    res = SuiteResult("partition", n)
    for k in range(1, n + 1):
        sym = list(all_permutations(k))
        for w in all_permutations(k + 1):
            words = {s: lambda_word(w, s) for s in sym}
            fibers: dict = {}
            for s, lam in words.items():
                fibers.setdefault(frozenset(x for x in lam if x > 0), set()).add(s)
            seen: set = set()
            admissible = list(admissible_Y(w))
            for Y in admissible:
                P = build_pwy(w, Y)
                lin = set(P.linear_extensions())
                res.checked += 1
                if lin & seen:
                    res.fail((w, sorted(Y), "overlap"))
                seen |= lin
                if lin != fibers.get(Y, set()):
                    res.fail((w, sorted(Y), "fiber"))
                if not P.reverses_covers():
                    res.fail((w, sorted(Y), "cover order"))
                for s in lin:
                    if tuple(P.Lambda[x - 1] for x in s) != words[s]:
                        res.fail((w, s, "vertex word"))
            if seen != set(sym):
                res.fail((w, "not a cover of Sym(n)"))
            if not set(fibers) <= set(admissible):
                res.fail((w, "fiber with inadmissible Y"))
    return res


def suite_qsym(n: int, max_m: int = 4) -> SuiteResult:
    """K_{P,omega} equals its fundamental expansion, and cover-equivalent
    labelings give equal descent-set generating functions."""
    res = SuiteResult("qsym", n)
    for k in range(1, n + 1):
        for w in all_permutations(k + 1):
            for Y in admissible_Y(w):
                P = build_pwy(w, Y, check=False)
                lam = P.Lambda
                for m in range(1, max_m + 1):
                    res.checked += 1
                    if k_p_omega(P.poset, lam, m) != k_via_fundamental(P.poset, lam, m):
                        res.fail((w, sorted(Y), m))
                lin = list(P.linear_extensions())
                neg = tuple(-x for x in lam)
                natural = tuple(range(1, k + 1))
                pairs = [(lam, standardize(lam)), (neg, natural)]
                for om, om2 in pairs:
                    res.checked += 1
                    if not same_cover_order(P.poset, om, om2):
                        res.fail((w, sorted(Y), "labelings differ on a cover"))
                    elif descent_generating_function(lin, om) != descent_generating_function(lin, om2):
                        res.fail((w, sorted(Y), om, om2))
    return res


def suite_bijection(n: int) -> SuiteResult:
    """(w, sigma) -> (maximal chain of the partition lattice, positive positions)
    is a bijection, with matching label sizes."""
    res = SuiteResult("bijection", n)
    for k in range(1, n + 1):
        P = partition_lattice(k)
        index = {lab: i for i, lab in enumerate(P.labels)}
        chains = {tuple(c) for c in P.maximal_chains()}
        image = set()
        for w in all_permutations(k + 1):
            for s in all_permutations(k):
                res.checked += 1
                flat, ypos = pair_to_flat_chain(w, s)
                idx = tuple(index[p] for p in flat)
                lam = lambda_word(w, s)
                if idx not in chains:
                    res.fail((w, s, "not a maximal chain"))
                    continue
                if len(ypos) != sum(1 for x in lam if x > 0):
                    res.fail((w, s, "#Y != ino"))
                if tuple(cover_label(P, a, b) for a, b in zip(idx, idx[1:])) != tuple(abs(x) for x in lam):
                    res.fail((w, s, "labels"))
                image.add((idx, ypos))
        if len(image) != factorial(k + 1) * factorial(k):
            res.fail((k, "not injective"))
        if len(image) != len(chains) * 2 ** k:
            res.fail((k, "not surjective"))
    return res


def suite_rlabel(n: int) -> SuiteResult:
    res = SuiteResult("rlabel", n)
    for k in range(1, n + 1):
        res.checked += 1
        if not is_r_labeling(partition_lattice(k)):
            res.fail(k)
    return res


def suite_fundamental(n: int) -> SuiteResult:
    """Sanity counts for the fundamental basis: ``L_empty`` has C(n+m-1, n) terms."""
    from math import comb
    res = SuiteResult("fundamental", n)
    for k in range(1, n + 1):
        for m in range(1, 5):
            res.checked += 1
            if fundamental_L((), k, m).count() != comb(k + m - 1, k):
                res.fail((k, m))
    return res


# name -> (runner, largest n it accepts)
SUITES: dict[str, tuple[Callable[[int], SuiteResult], int]] = {
    "three_way": (suite_three_way, 5),
    "closed_forms": (suite_closed_forms, 6),
    "refined_identity": (suite_refined_identity, 6),
    "bivariate_identity": (suite_bivariate_identity, 6),
    "label_set": (suite_label_set, 6),
    "bar_positions": (suite_bar_positions, 5),
    "minima": (suite_minima, 6),
    "partition": (suite_partition, 5),
    "qsym": (suite_qsym, 4),
    "bijection": (suite_bijection, 4),
    "rlabel": (suite_rlabel, 4),
    "fundamental": (suite_fundamental, 6),
}
MAX_VERIFY_N = max(b for _, b in SUITES.values())


def run_suites(n: int, names: list[str] | None = None) -> list[SuiteResult]:
    """Run suites up to ``n``.

    Explicitly named suites refuse an ``n`` above their budget; with no names,
    every suite runs up to ``min(n, its budget)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_VERIFY_N:
        raise BudgetExceeded(f"verify: n={n} exceeds the largest suite budget {MAX_VERIFY_N}")
    explicit = names is not None
    names = list(SUITES) if names is None else names
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if explicit:
        over = [x for x in names if n > SUITES[x][1]]
        if over:
            raise BudgetExceeded("n=%d exceeds the budget of %s" % (
                n, ", ".join(f"{x} (max {SUITES[x][1]})" for x in over)))
    out = []
    for name in names:
        runner, cap = SUITES[name]
        t0 = time.perf_counter()
        res = runner(min(n, cap))
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
