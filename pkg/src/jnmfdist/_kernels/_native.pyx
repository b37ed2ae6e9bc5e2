# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: multiplicative-update sweep and Chamfer scan.

Loop orders keep the innermost index on the contiguous axis; products with
the rank-k factors go through k x k Gram matrices so each sweep reads X only
twice.
"""

import numpy as np


def mu_step(double[:, ::1] X, double[:, ::1] A, double[:, ::1] S, double eps):
    """One multiplicative update sweep: A first, then S against the new A."""
    cdef Py_ssize_t m = X.shape[0]
    cdef Py_ssize_t n = X.shape[1]
    cdef Py_ssize_t k = A.shape[1]
    cdef Py_ssize_t i, j, r, c
    cdef double acc, a

    A2_arr = np.empty((m, k), dtype=np.float64)
    S2_arr = np.empty((k, n), dtype=np.float64)
    G_arr = np.empty((k, k), dtype=np.float64)
    NA_arr = np.empty((m, k), dtype=np.float64)
    NS_arr = np.zeros((k, n), dtype=np.float64)
    DS_arr = np.zeros((k, n), dtype=np.float64)
    cdef double[:, ::1] A2 = A2_arr
    cdef double[:, ::1] S2 = S2_arr
    cdef double[:, ::1] G = G_arr
    cdef double[:, ::1] NA = NA_arr
    cdef double[:, ::1] NS = NS_arr
    cdef double[:, ::1] DS = DS_arr

    # G = S S^T
    for r in range(k):
        for c in range(r, k):
            acc = 0.0
            for j in range(n):
                acc += S[r, j] * S[c, j]
            G[r, c] = acc
            G[c, r] = acc

    # A2 = A * (X S^T) / (A G + eps)
    for i in range(m):
        for r in range(k):
            acc = 0.0
            for j in range(n):
                acc += X[i, j] * S[r, j]
            NA[i, r] = acc
        for r in range(k):
            acc = 0.0
            for c in range(k):
                acc += A[i, c] * G[c, r]
            A2[i, r] = A[i, r] * NA[i, r] / (acc + eps)

    # G = A2^T A2, NS = A2^T X
    for r in range(k):
        for c in range(k):
            G[r, c] = 0.0
    for i in range(m):
        for r in range(k):
            a = A2[i, r]
            for c in range(r, k):
                G[r, c] += a * A2[i, c]
            for j in range(n):
                NS[r, j] += a * X[i, j]
    for r in range(k):
        for c in range(r + 1, k):
            G[c, r] = G[r, c]

    # S2 = S * NS / (G S + eps)
    for r in range(k):
        for c in range(k):
            a = G[r, c]
            for j in range(n):
                DS[r, j] += a * S[c, j]
        for j in range(n):
            S2[r, j] = S[r, j] * NS[r, j] / (DS[r, j] + eps)

    return A2_arr, S2_arr


def frobenius_objective(double[:, ::1] X, double[:, ::1] A, double[:, ::1] S):
    """Squared Frobenius norm of the reconstruction residual X - A S."""
    cdef Py_ssize_t m = X.shape[0]
    cdef Py_ssize_t n = X.shape[1]
    cdef Py_ssize_t k = A.shape[1]
    cdef Py_ssize_t i, j, r
    cdef double total = 0.0
    cdef double a

    buf_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] buf = buf_arr

    for i in range(m):
        for j in range(n):
            buf[j] = X[i, j]
        for r in range(k):
            a = A[i, r]
            for j in range(n):
                buf[j] -= a * S[r, j]
        for j in range(n):
            total += buf[j] * buf[j]
    return total


def chamfer_terms(double[:, ::1] P1, double[:, ::1] P2):
    """Directed average-min squared distances between point rows.

    Single pass over all pairs; per-pair distances use direct differencing so
    coincident points contribute exactly 0.
    """
    cdef Py_ssize_t n1 = P1.shape[0]
    cdef Py_ssize_t n2 = P2.shape[0]
    cdef Py_ssize_t m = P1.shape[1]
    cdef Py_ssize_t i, j, t
    cdef double d, diff, best
    cdef double inf = float("inf")
    cdef double sum1 = 0.0

    best2_arr = np.full(n2, np.inf, dtype=np.float64)
    cdef double[::1] best2 = best2_arr

    for i in range(n1):
        best = inf
        for j in range(n2):
            d = 0.0
            for t in range(m):
                diff = P1[i, t] - P2[j, t]
                d += diff * diff
            if d < best:
                best = d
            if d < best2[j]:
                best2[j] = d
        sum1 += best

    cdef double sum2 = 0.0
    for j in range(n2):
        sum2 += best2[j]
    return sum1 / n1, sum2 / n2
