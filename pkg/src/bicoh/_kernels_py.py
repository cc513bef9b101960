"""Pure-Python versions of the hot loops.

These are the reference implementations; the compiled module in
``_speedups.pyx`` mirrors them line for line.
"""

from __future__ import annotations


def dynnikov_apply(coords: list[int], letters: tuple[int, ...]) -> list[int]:
    """Apply a braid word (signed generator indices) to Dynnikov coordinates.

    ``coords`` is the flat list ``[a1, b1, a2, b2, ...]``; the list is
    copied, never mutated.
    """
    c = list(coords)
    for letter in letters:
        i = (abs(letter) - 1) * 2
        a, b, cc, d = c[i], c[i + 1], c[i + 2], c[i + 3]
        if letter > 0:
            e = a - min(b, 0) - cc + max(d, 0)
            ep = max(e, 0)
            c[i] = a + max(b, 0) + max(max(d, 0) - e, 0)
            c[i + 1] = d - ep
            c[i + 2] = cc + min(d, 0) + min(min(b, 0) + e, 0)
            c[i + 3] = b + ep
        else:
            f = a + min(b, 0) - cc - max(d, 0)
            fm = min(f, 0)
            c[i] = a - max(b, 0) - max(max(d, 0) + f, 0)
            c[i + 1] = d + fm
            c[i + 2] = cc - min(d, 0) - min(min(b, 0) - f, 0)
            c[i + 3] = b - fm
    return c


def crossing_events(xs, ys, tol: float = 1e-12):
    """Adjacent transpositions read off sampled planar point paths.

    ``xs`` and ``ys`` are sequences of frames, each a sequence of the k
    point coordinates. Returns ``(order0, events)`` where ``order0`` lists
    point ids by increasing x in the first frame and each event is
    ``(position, left_id, right_id, y_left, y_right)`` with ``position``
    0-based, in the order the swaps happen. Raises ``ValueError`` with the
    frame index when a frame is not generic.
    """
    k = len(xs[0])
    order = sorted(range(k), key=lambda p: xs[0][p])
    order0 = list(order)
    events = []
    for f in range(len(xs)):
        x = xs[f]
        for p in range(k):
            for q in range(p + 1, k):
                if abs(x[p] - x[q]) <= tol:
                    raise ValueError(f"frame {f}: points {p},{q} share x")
        if f == 0:
            continue
        px = xs[f - 1]
        py = ys[f - 1]
        y = ys[f]
        # crossing times of every pair whose x-order flips in this step
        pending = []
        for p in range(k):
            for q in range(p + 1, k):
                d0 = px[p] - px[q]
                d1 = x[p] - x[q]
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
            left, right = order[lo], order[hi]
            yl = py[left] + s * (y[left] - py[left])
            yr = py[right] + s * (y[right] - py[right])
            if abs(yl - yr) <= tol:
                raise ValueError(f"frame {f}: points collide")
            events.append((lo, left, right, yl, yr))
            order[lo], order[hi] = right, left
    return order0, events
