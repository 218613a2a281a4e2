"""Pure-Python kernels; the reference twin of ``_ckernels.pyx``."""
from itertools import permutations


def signed_labels(w, sigma):
    m = len(w)
    left_end = list(range(m))
    right_end = list(range(m))
    bmin = list(w)
    out = []
    for s in sigma:
        j = s - 1
        lo = left_end[j]
        hi = right_end[j + 1]
        a = bmin[j]
        b = bmin[j + 1]
        if a < b:
            out.append(b)
            mn = a
        else:
            out.append(-a)
            mn = b
        right_end[lo] = hi
        left_end[hi] = lo
        bmin[lo] = mn
        bmin[hi] = mn
    return out


def sweep(w):
    """Sweep all sigma for fixed w.

    Returns ``(asc_counts, des_counts, label_set_failures)`` where the count maps
    are keyed by ``(ino_mask, mask)``; bit ``v`` of ``ino_mask`` marks a
    positive label ``v``, bit ``i`` of the second mask marks position ``i``.
    """
    m = len(w)
    n = m - 1
    full = ((1 << (n + 2)) - 1) ^ 3  # bits 2..n+1
    asc_counts = {}
    des_counts = {}
    bad = 0
    rng = range(m)
    for sigma in permutations(range(1, n + 1)):
        left_end = list(rng)
        right_end = list(rng)
        bmin = list(w)
        ino_mask = 0
        absmask = 0
        prev = 0
        asc_mask = 0
        des_mask = 0
        k = 0
        for s in sigma:
            j = s - 1
            lo = left_end[j]
            hi = right_end[j + 1]
            a = bmin[j]
            b = bmin[j + 1]
            if a < b:
                lab = b
                ino_mask |= 1 << b
                absmask |= 1 << b
                bmin[lo] = bmin[hi] = a
            else:
                lab = -a
                absmask |= 1 << a
                bmin[lo] = bmin[hi] = b
            right_end[lo] = hi
            left_end[hi] = lo
            if k:
                if prev < lab:
                    asc_mask |= 1 << k
                if sigma[k - 1] > s:
                    des_mask |= 1 << k
            prev = lab
            k += 1
        if absmask != full:
            bad += 1
        key = (ino_mask, asc_mask)
        asc_counts[key] = asc_counts.get(key, 0) + 1
        key = (ino_mask, des_mask)
        des_counts[key] = des_counts.get(key, 0) + 1
    return asc_counts, des_counts, bad
