# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_kernels_py``."""

import numpy as np

cdef long long SAFE = 1LL << 58


cdef inline long long lmax(long long a, long long b):
    return a if a > b else b


cdef inline long long lmin(long long a, long long b):
    return a if a < b else b


def dynnikov_apply(coords, letters):
    """Return ``(coords, consumed)``; stops early before int64 overflow."""
    cdef Py_ssize_t m = len(coords)
    cdef long long[:] c = np.array(coords, dtype=np.int64)
    cdef long long[:] w = np.array(letters, dtype=np.int64) if len(letters) else np.zeros(0, dtype=np.int64)
    cdef Py_ssize_t t, i, j
    cdef long long letter, a, b, cc, d, e, f, ep, fm
    cdef Py_ssize_t n_letters = w.shape[0]
    for t in range(n_letters):
        for j in range(m):
            if c[j] > SAFE or c[j] < -SAFE:
                return [int(v) for v in c], t
        letter = w[t]
        i = ((letter if letter > 0 else -letter) - 1) * 2
        a = c[i]
        b = c[i + 1]
        cc = c[i + 2]
        d = c[i + 3]
        if letter > 0:
            e = a - lmin(b, 0) - cc + lmax(d, 0)
            ep = lmax(e, 0)
            c[i] = a + lmax(b, 0) + lmax(lmax(d, 0) - e, 0)
            c[i + 1] = d - ep
            c[i + 2] = cc + lmin(d, 0) + lmin(lmin(b, 0) + e, 0)
            c[i + 3] = b + ep
        else:
            f = a + lmin(b, 0) - cc - lmax(d, 0)
            fm = lmin(f, 0)
            c[i] = a - lmax(b, 0) - lmax(lmax(d, 0) + f, 0)
            c[i + 1] = d + fm
            c[i + 2] = cc - lmin(d, 0) - lmin(lmin(b, 0) - f, 0)
            c[i + 3] = b - fm
    return [int(v) for v in c], n_letters


def crossing_events(xs, ys, double tol=1e-12):
    cdef double[:, :] X = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[:, :] Y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t T = X.shape[0], k = X.shape[1]
    cdef Py_ssize_t f, p, q, lo, hi, ip, iq
    cdef double d0, d1, s, yl, yr
    order = sorted(range(k), key=lambda p: X[0, p])
    order0 = list(order)
    events = []
    for f in range(T):
        for p in range(k):
            for q in range(p + 1, k):
                if abs(X[f, p] - X[f, q]) <= tol:
                    raise ValueError(f"frame {f}: points {p},{q} share x")
        if f == 0:
            continue
        pending = []
        for p in range(k):
            for q in range(p + 1, k):
                d0 = X[f - 1, p] - X[f - 1, q]
                d1 = X[f, p] - X[f, q]
                if (d0 < 0) != (d1 < 0):
                    s = d0 / (d0 - d1)
                    pending.append((s, p, q))
        pending.sort()
        for s, p, q in pending:
            ip = order.index(p)
            iq = order.index(q)
            lo, hi = (ip, iq) if ip < iq else (iq, ip)
            if hi != lo + 1:
                raise ValueError(f"frame {f}: non-adjacent swap")
            left = order[lo]
            right = order[hi]
            yl = Y[f - 1, left] + s * (Y[f, left] - Y[f - 1, left])
            yr = Y[f - 1, right] + s * (Y[f, right] - Y[f - 1, right])
            if abs(yl - yr) <= tol:
                raise ValueError(f"frame {f}: points collide")
            events.append((lo, left, right, yl, yr))
            order[lo] = right
            order[hi] = left
    return order0, events
