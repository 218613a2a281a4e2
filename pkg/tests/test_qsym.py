from itertools import combinations_with_replacement, product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from braidnum.perms import all_permutations
from braidnum.poly import MultiPoly, tvar
from braidnum.poset import FinitePoset
from braidnum.pwy import admissible_Y, build_pwy
from braidnum.qsym import (TruncatedQSym, descent_generating_function, fundamental_L, k_p_omega,
                           k_via_fundamental, same_cover_order, standardize)


def brute_L(S, n, m):
    """Count sequences by filtering every tuple in [m]^n."""
    out = {}
    for seq in product(range(1, m + 1), repeat=n):
        ok = all(seq[k] <= seq[k + 1] and (k + 1 not in S or seq[k] < seq[k + 1])
                 for k in range(n - 1))
        if ok:
            e = tuple(seq.count(v) for v in range(1, m + 1))
            out[e] = out.get(e, 0) + 1
    return TruncatedQSym(m, n, out)


def test_fundamental_examples():
    assert fundamental_L((), 2, 2).coeffs == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert fundamental_L({1}, 2, 2).coeffs == {(1, 1): 1}
    assert fundamental_L({1, 2}, 3, 2).count() == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_fundamental_matches_filter(n, m, data):
    S = data.draw(st.sets(st.integers(1, n - 1)) if n > 1 else st.just(set()))
    assert fundamental_L(S, n, m) == brute_L(S, n, m)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 5)])
def test_fundamental_empty_count(n, m):
    assert fundamental_L((), n, m).count() == comb(n + m - 1, n)
    # strict everywhere: choose n distinct values
    assert fundamental_L(range(1, n), n, m).count() == comb(m, n)


def test_k_p_omega_examples():
    anti = FinitePoset(2, [])
    chain = FinitePoset(2, [(0, 1)])
    assert k_p_omega(anti, (1, 2), 2).coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert len(k_p_omega(chain, (1, 2), 2)) == 3
    assert k_p_omega(chain, (2, 1), 2).coeffs == {(1, 1): 1}
    assert k_via_fundamental(anti, (1, 2), 2).count() == 4


def test_k_via_fundamental_examples():
    for w, Y, m in [((3, 2, 1), set(), 3), ((2, 1, 5, 4, 6, 3), {3, 5, 6}, 2)]:
        P = build_pwy(w, Y)
        assert k_p_omega(P.poset, P.Lambda, m) == k_via_fundamental(P.poset, P.Lambda, m)


def test_truncated_validation():
    with pytest.raises(ValueError):
        TruncatedQSym(2, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        fundamental_L((), 2, 0)
    with pytest.raises(ValueError):
        TruncatedQSym(2, 1, {(1, 0): 1}) + TruncatedQSym(2, 2, {})


@pytest.mark.parametrize("n", range(1, 4))
def test_fundamental_expansion_exhaustive(n):
    for w in all_permutations(n + 1):
        for Y in admissible_Y(w):
            P = build_pwy(w, Y)
            for m in range(1, n + 2):
                assert k_p_omega(P.poset, P.Lambda, m) == k_via_fundamental(P.poset, P.Lambda, m)


def test_descent_generating_function_examples():
    t1 = MultiPoly.var(tvar(1))
    assert descent_generating_function([(1, 2), (2, 1)]) == 1 + t1
    assert descent_generating_function([]) == MultiPoly()
    P = build_pwy((2, 1, 3), {3})
    assert descent_generating_function(P.linear_extensions()) == 1 + t1


def test_descent_gf_of_all_permutations_is_refined_eulerian():
    # total mass n! and each descent set S occurs beta(S) times; at t_i = t
    from braidnum.perms import eulerian_polynomial
    from braidnum.poly import T
    for n in range(1, 6):
        g = descent_generating_function(all_permutations(n))
        flat = g.substitute({tvar(i): MultiPoly.var(T) for i in range(1, n)})
        assert flat == eulerian_polynomial(n)


def test_cover_equivalent_labelings():
    for n in range(1, 5):
        for w in all_permutations(n + 1):
            for Y in admissible_Y(w):
                P = build_pwy(w, Y)
                lin = list(P.linear_extensions())
                lam = P.Lambda
                for om in (standardize(lam), ):
                    assert same_cover_order(P.poset, lam, om)
                    assert descent_generating_function(lin, lam) == descent_generating_function(lin, om)
                neg = tuple(-x for x in lam)
                nat = tuple(range(1, n + 1))
                assert same_cover_order(P.poset, neg, nat)
                assert descent_generating_function(lin, neg) == descent_generating_function(lin, nat)


def test_standardize():
    assert standardize((-2, 5, 3, 6, -4)) == (2, 4, 3, 5, 1)
