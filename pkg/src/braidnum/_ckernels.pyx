# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the (w, sigma) sweep.  Same contract as _kernels_py."""
from libc.stdlib cimport malloc, calloc, free

DEF MAXM = 16


cdef inline void _reverse(int* a, int i, int j) noexcept nogil:
    cdef int t
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1


cdef inline bint _next_perm(int* a, int n) noexcept nogil:
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    _reverse(a, i + 1, n - 1)
    return True


def signed_labels(w, sigma):
    cdef int m = len(w)
    if m > MAXM:
        raise ValueError("permutation too long for the compiled kernel")
    cdef int le[MAXM]
    cdef int re[MAXM]
    cdef int bmin[MAXM]
    cdef int k, j, lo, hi, a, b
    for k in range(m):
        le[k] = k
        re[k] = k
        bmin[k] = w[k]
    out = []
    for s in sigma:
        j = s - 1
        lo = le[j]
        hi = re[j + 1]
        a = bmin[j]
        b = bmin[j + 1]
        if a < b:
            out.append(b)
            bmin[lo] = a
            bmin[hi] = a
        else:
            out.append(-a)
            bmin[lo] = b
            bmin[hi] = b
        re[lo] = hi
        le[hi] = lo
    return out


def sweep(w):
    cdef int m = len(w)
    cdef int n = m - 1
    if m > MAXM or m < 1:
        raise ValueError("unsupported permutation length for the compiled kernel")
    cdef int wa[MAXM]
    cdef int sig[MAXM]
    cdef int le[MAXM]
    cdef int re[MAXM]
    cdef int bmin[MAXM]
    cdef int k, j, lo, hi, a, b, lab, prev
    cdef long ino_mask, absmask, asc_mask, des_mask
    cdef long full = ((1 << (n + 2)) - 1) ^ 3
    cdef long nino = 1 << (n + 2)
    cdef long npos = 1 << (n if n > 0 else 1)
    cdef long long bad = 0
    cdef long long* acnt = <long long*> calloc(nino * npos, sizeof(long long))
    cdef long long* dcnt = <long long*> calloc(nino * npos, sizeof(long long))
    if acnt == NULL or dcnt == NULL:
        free(acnt)
        free(dcnt)
        raise MemoryError()
    for k in range(m):
        wa[k] = w[k]
    for k in range(n):
        sig[k] = k + 1
    with nogil:
        while True:
            for k in range(m):
                le[k] = k
                re[k] = k
                bmin[k] = wa[k]
            ino_mask = 0
            absmask = 0
            asc_mask = 0
            des_mask = 0
            prev = 0
            for k in range(n):
                j = sig[k] - 1
                lo = le[j]
                hi = re[j + 1]
                a = bmin[j]
                b = bmin[j + 1]
                if a < b:
                    lab = b
                    ino_mask |= 1 << b
                    absmask |= 1 << b
                    bmin[lo] = a
                    bmin[hi] = a
                else:
                    lab = -a
                    absmask |= 1 << a
                    bmin[lo] = b
                    bmin[hi] = b
                re[lo] = hi
                le[hi] = lo
                if k > 0:
                    if prev < lab:
                        asc_mask |= 1 << k
                    if sig[k - 1] > sig[k]:
                        des_mask |= 1 << k
                prev = lab
            if absmask != full:
                bad += 1
            acnt[ino_mask * npos + asc_mask] += 1
            dcnt[ino_mask * npos + des_mask] += 1
            if n < 2 or not _next_perm(sig, n):
                break
    asc_counts = {}
    des_counts = {}
    cdef long idx
    for idx in range(nino * npos):
        if acnt[idx]:
            asc_counts[(idx // npos, idx % npos)] = acnt[idx]
        if dcnt[idx]:
            des_counts[(idx // npos, idx % npos)] = dcnt[idx]
    free(acnt)
    free(dcnt)
    return asc_counts, des_counts, bad
