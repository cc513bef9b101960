"""Brute-force braid equality for small words.

Two words are declared equal when they are connected through words of
length at most ``cap`` by the elementary changes: inserting or deleting
``s_j^e s_j^-e``, commuting far generators, and the two forms of the braid
relation. Shares no code with the Dynnikov decision in ``braids``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def _digit(letter: int) -> int:
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


@dataclass
class ClosureClasses:
    strands: int
    cap: int
    offsets: list[int]
    labels: np.ndarray

    def code(self, letters) -> int:
        base = 2 * (self.strands - 1)
        c = 0
        for x in letters:
            c = c * base + _digit(x)
        return self.offsets[len(letters)] + c

    def component(self, letters) -> int:
        if len(letters) > self.cap:
            raise ValueError("word longer than the closure cap")
        return int(self.labels[self.code(letters)])

    def equal(self, w1, w2) -> bool:
        return self.component(w1) == self.component(w2)


def _all_words(base: int, length: int) -> np.ndarray:
    codes = np.arange(base ** length, dtype=np.int64)
    powers = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % base


def _encode(digits: np.ndarray, base: int, offset: int) -> np.ndarray:
    length = digits.shape[1]
    if length == 0:
        return np.full(digits.shape[0], offset, dtype=np.int64)
    powers = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return offset + digits @ powers


def closure_classes(strands: int, cap: int = 8) -> ClosureClasses:
    base = 2 * (strands - 1)
    offsets = [0]
    for length in range(cap + 1):
        offsets.append(offsets[-1] + (base ** length if base else (1 if length == 0 else 0)))
    total = offsets[-1]
    if base == 0:
        return ClosureClasses(strands, cap, offsets, np.zeros(total, dtype=np.int64))
    rows, cols = [], []
    for length in range(2, cap + 1):
        d = _all_words(base, length)
        src = _encode(d, base, offsets[length])
        gen = d // 2
        sign = d % 2
        for p in range(length - 1):
            # pair deletion
            hit = (gen[:, p] == gen[:, p + 1]) & (sign[:, p] != sign[:, p + 1])
            if hit.any():
                rest = np.delete(d[hit], [p, p + 1], axis=1)
                rows.append(src[hit])
                cols.append(_encode(rest, base, offsets[length - 2]))
            # far commutation
            hit = np.abs(gen[:, p] - gen[:, p + 1]) > 1
            if hit.any():
                sw = d[hit].copy()
                sw[:, [p, p + 1]] = sw[:, [p + 1, p]]
                rows.append(src[hit])
                cols.append(_encode(sw, base, offsets[length]))
        for p in range(length - 2):
            shape = (gen[:, p] == gen[:, p + 2]) & (np.abs(gen[:, p] - gen[:, p + 1]) == 1)
            same = (sign[:, p] == sign[:, p + 1])
            # s_l^e s_j^e s_l^e -> s_j^e s_l^e s_j^e
            hit = shape & same & (sign[:, p + 2] == sign[:, p])
            if hit.any():
                nw = d[hit].copy()
                nw[:, p], nw[:, p + 1], nw[:, p + 2] = d[hit][:, p + 1], d[hit][:, p], d[hit][:, p + 1]
                rows.append(src[hit])
                cols.append(_encode(nw, base, offsets[length]))
            # s_l^e s_j^e s_l^-e -> s_j^-e s_l^e s_j^e
            hit = shape & same & (sign[:, p + 2] != sign[:, p])
            if hit.any():
                old = d[hit]
                nw = old.copy()
                nw[:, p] = old[:, p + 1] ^ 1
                nw[:, p + 1] = old[:, p]
                nw[:, p + 2] = old[:, p + 1]
                rows.append(src[hit])
                cols.append(_encode(nw, base, offsets[length]))
    r = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    c = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(total, total))
    _, labels = connected_components(graph, directed=False)
    return ClosureClasses(strands, cap, offsets, labels)
