from itertools import product

import pytest

from braidnum import kernels
from braidnum._kernels_py import signed_labels as py_labels
from braidnum.braid import (BarPositions, SetComposition, SetPartition, chain_from_pair,
                            composition_poset, cover_label, ino, ino_count_from_chain, ino_set,
                            is_r_labeling, lambda_from_bar_positions, lambda_word,
                            last_bar_positions, pair_to_flat_chain, partition_lattice)
from braidnum.perms import BudgetExceeded, all_permutations, ltr_minima, rtl_minima

# signed words for every pair at n=2, as tabulated for the rank-2 example
TABLE_N2 = {
    (1, 2, 3): ((2, 3), (3, 2)),
    (1, 3, 2): ((3, 2), (-3, 2)),
    (2, 1, 3): ((-2, 3), (3, -2)),
    (2, 3, 1): ((3, -2), (-3, -2)),
    (3, 1, 2): ((-3, 2), (2, -3)),
    (3, 2, 1): ((-3, -2), (-2, -3)),
}


def brute_partitions(m):
    """Set partitions of 1..m from all block-assignment functions."""
    seen = set()
    for f in product(range(m), repeat=m):
        blocks = {}
        for x, b in enumerate(f, 1):
            blocks.setdefault(b, []).append(x)
        seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


def brute_compositions(m):
    """Set compositions of 1..m as surjections onto 1..k."""
    count = 0
    for k in range(1, m + 1):
        for f in product(range(k), repeat=m):
            count += len(set(f)) == k
    return count


def test_partition_lattice_shapes():
    P1 = partition_lattice(1)
    assert P1.size == 2 and P1.covers == ((0, 1),)
    P2 = partition_lattice(2)
    assert P2.size == 5
    assert len(P2.upper[P2.bottom]) == 3 and len(P2.lower[P2.top]) == 3
    assert P2.labels[P2.bottom] == SetPartition.of([[1], [2], [3]])
    assert P2.labels[P2.top] == SetPartition.of([[1, 2, 3]])
    P3 = partition_lattice(3)
    assert P3.size == len(brute_partitions(4)) == 15
    assert {frozenset(map(frozenset, p.blocks)) for p in P3.labels} == brute_partitions(4)
    for x in range(P3.size):
        assert P3.rank[x] == 4 - len(P3.labels[x].blocks)


def test_composition_poset_shapes():
    S1 = composition_poset(1)
    assert sorted(str(c) for c in S1.labels) == ["12", "1|2", "2|1"]
    S2 = composition_poset(2)
    assert S2.size == 13
    assert len(S2.minimal()) == 6 and S2.maximal() == [S2.top]
    assert sum(1 for x in range(S2.size) if S2.rank[x] == 1) == 6
    S3 = composition_poset(3)
    assert S3.size == brute_compositions(4) == 75
    assert len(S3.minimal()) == 24


def test_budget_refusal():
    with pytest.raises(BudgetExceeded):
        partition_lattice(8)
    with pytest.raises(BudgetExceeded):
        composition_poset(8)


def test_chain_from_pair():
    got = [str(c) for c in chain_from_pair((2, 1, 5, 4, 6, 3), (1, 4, 2, 5, 3))]
    assert got == ["2|1|5|4|6|3", "12|5|4|6|3", "12|5|46|3", "125|46|3", "125|346", "123456"]
    assert [str(c) for c in chain_from_pair((1, 2, 3), (1, 2))] == ["1|2|3", "12|3", "123"]
    assert [str(c) for c in chain_from_pair((1, 2), (1,))] == ["1|2", "12"]
    assert SetComposition.parse("125|346") == chain_from_pair((2, 1, 5, 4, 6, 3), (1, 4, 2, 5, 3))[4]


def test_chain_is_maximal_in_composition_poset():
    S = composition_poset(3)
    index = {c: i for i, c in enumerate(S.labels)}
    for w in all_permutations(4):
        for s in all_permutations(3):
            idx = [index[c] for c in chain_from_pair(w, s)]
            assert all((a, b) in set(S.covers) for a, b in zip(idx, idx[1:]))


def test_lambda_examples():
    assert lambda_word((1, 2, 3), (2, 1)) == (3, 2)
    assert lambda_word((3, 1, 2), (1, 2)) == (-3, 2)
    assert lambda_word((2, 1, 5, 4, 6, 3), (1, 4, 2, 5, 3)) == (-2, 6, 5, -4, 3)
    for w, (l12, l21) in TABLE_N2.items():
        assert lambda_word(w, (1, 2)) == l12
        assert lambda_word(w, (2, 1)) == l21


def test_ino_examples():
    assert ino((3, 1, 2), (1, 2)) == 1
    assert ino((1, 2, 3), (2, 1)) == 2
    assert ino_set((2, 1, 5, 4, 6, 3), (1, 4, 2, 5, 3)) == {3, 5, 6}


@pytest.mark.parametrize("n", range(1, 5))
def test_ino_matches_chain_reading(n):
    for w in all_permutations(n + 1):
        for s in all_permutations(n):
            assert ino(w, s) == ino_count_from_chain(w, s)


def test_ino_with_identity_counts_non_ltr_minima():
    for n in range(1, 6):
        ident = tuple(range(1, n + 1))
        for w in all_permutations(n + 1):
            assert ino(w, ident) == n + 1 - len(ltr_minima(w))


def test_last_bar_positions():
    bp = last_bar_positions((2, 1, 5, 4, 6, 3), (1, 4, 2, 5, 3), 6)
    assert (bp.ell, bp.r, bp.ell_sigma, bp.r_sigma) == (4, 6, 2, 4)
    assert bp.merge_rank == 2 and bp.merges_left
    bp = last_bar_positions((1, 2), (1,), 2)
    assert (bp.ell, bp.r, bp.ell_sigma, bp.r_sigma) == (1, None, 1, None)
    bp = last_bar_positions((2, 1), (1,), 2)
    assert (bp.ell, bp.r, bp.ell_sigma, bp.r_sigma) == (None, 2, None, 1)
    assert not bp.merges_left
    with pytest.raises(ValueError):
        last_bar_positions((2, 1), (1,), 1)


def test_bar_positions_infinity_is_explicit():
    bp = BarPositions(2, None, None, None, None)
    assert bp.merge_rank is None and not bp.merges_left


@pytest.mark.parametrize("n", range(1, 5))
def test_absolute_labels_are_two_to_n_plus_one(n):
    for w in all_permutations(n + 1):
        for s in all_permutations(n):
            assert sorted(abs(x) for x in lambda_word(w, s)) == list(range(2, n + 2))


@pytest.mark.parametrize("n", range(1, 5))
def test_sign_and_position_rule(n):
    for w in all_permutations(n + 1):
        for s in all_permutations(n):
            lam = lambda_word(w, s)
            assert lambda_from_bar_positions(w, s) == lam
            for v in range(2, n + 2):
                bp = last_bar_positions(w, s, v)
                j = bp.merge_rank
                assert lam[j - 1] == (v if bp.merges_left else -v)


@pytest.mark.parametrize("n", range(1, 6))
def test_positive_labels_and_minima(n):
    for w in all_permutations(n + 1):
        ltr, rtl = ltr_minima(w), rtl_minima(w) - {1}
        for s in all_permutations(n):
            Y = ino_set(w, s)
            assert not Y & ltr and rtl <= Y


def test_pair_to_flat_chain_examples():
    chain, ypos = pair_to_flat_chain((1, 2, 3), (2, 1))
    assert [str(p) for p in chain] == ["{1}{2}{3}", "{1}{23}", "{123}"]
    assert ypos == {1, 2}
    chain, ypos = pair_to_flat_chain((3, 1, 2), (1, 2))
    assert [str(p) for p in chain] == ["{1}{2}{3}", "{13}{2}", "{123}"]
    assert ypos == {2}


def test_pair_to_flat_chain_bijection_n2():
    P = partition_lattice(2)
    images = {pair_to_flat_chain(w, s) for w in all_permutations(3) for s in all_permutations(2)}
    assert len(images) == 12
    chains = {c for c, _ in images}
    assert len(chains) == 3
    assert all(sum(1 for c, _ in images if c == ch) == 4 for ch in chains)


def test_cover_labels_of_pi2():
    P = partition_lattice(2)
    labels = sorted(cover_label(P, a, b) for a, b in P.covers)
    # bottom covers: merging {1}{2} -> 2, {1}{3} -> 3, {2}{3} -> 3; top covers: 3, 2, 2
    assert labels == [2, 2, 2, 3, 3, 3]


@pytest.mark.parametrize("n", range(1, 5))
def test_r_labeling(n):
    assert is_r_labeling(partition_lattice(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_kernel_labels_match_reference(n):
    for w in all_permutations(n + 1):
        for s in list(all_permutations(n))[:30]:
            want = lambda_word(w, s)
            assert tuple(kernels.signed_labels(w, s)) == want
            assert tuple(py_labels(w, s)) == want
