"""Evaluation of 1-cells to labeled braids.

Coherence cells (associators, unitors, identities) evaluate to the empty
word, ``R[x,y]`` to the block braid taking the strands of ``x`` past those
of ``y``, tensor juxtaposes with an index shift and composition
concatenates first-then-second.
"""

from __future__ import annotations

from .braids import BraidWord, LabeledBraid, transport, perm_of
from . import terms as T


def block_letters(p: int, q: int, sign: int = 1) -> tuple[int, ...]:
    """Letters of the braid moving the first ``p`` strands past the last ``q``.

    The rightmost strand of the first block crosses first. ``sign=-1`` gives
    the inverse word, which starts from the swapped arrangement.
    """
    word = []
    for i in range(p, 0, -1):
        word.extend(range(i, i + q))
    word = tuple(word)
    if sign > 0:
        return word
    return tuple(-x for x in reversed(word))


def block_braid(p: int, q: int, sign: int = 1) -> BraidWord:
    return BraidWord(max(p + q, 1), block_letters(p, q, sign))


def _shift(letters, k: int) -> tuple[int, ...]:
    return tuple(x + k if x > 0 else x - k for x in letters)


def _eval(f) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Source labels and letters of a 1-cell (boundaries assumed valid)."""
    if isinstance(f, T.Tensor):
        la, wa = _eval(f.f)
        lb, wb = _eval(f.g)
        return la + lb, wa + _shift(wb, len(la))
    if isinstance(f, T.Compose):
        la, wa = _eval(f.first)
        _, wb = _eval(f.second)
        return la, wa + wb
    if isinstance(f, T.Braid):
        lx, ly = T.obj_flatten(f.x), T.obj_flatten(f.y)
        return lx + ly, block_letters(len(lx), len(ly), 1)
    if isinstance(f, T.BraidInv):
        lx, ly = T.obj_flatten(f.x), T.obj_flatten(f.y)
        return ly + lx, block_letters(len(lx), len(ly), -1)
    return T.obj_flatten(T.src_obj(f)), ()


def eval_one_cell(f: T.OneCell) -> LabeledBraid:
    """Raises ``MalformedTerm`` when ``f`` does not typecheck."""
    T.src_obj(f)
    labels, letters = _eval(f)
    return LabeledBraid(labels, BraidWord(max(len(labels), 1), letters))


def word_of(f: T.OneCell) -> tuple[int, ...]:
    return _eval(f)[1]


def strands_of(f: T.OneCell) -> int:
    return max(len(T.obj_flatten(T.src_obj(f))), 1)


def check_labels(f: T.OneCell) -> bool:
    """The braid permutation carries source labels to target labels."""
    lb = eval_one_cell(f)
    return transport(lb.labels, perm_of(lb.word)) == T.obj_flatten(T.tgt_obj(f))


# coherence paths between bracketings


def _invert(f):
    if isinstance(f, T.Id):
        return f
    if isinstance(f, T.Assoc):
        return T.AssocInv(f.x, f.y, f.z)
    if isinstance(f, T.AssocInv):
        return T.Assoc(f.x, f.y, f.z)
    if isinstance(f, T.LUnit):
        return T.LUnitInv(f.x)
    if isinstance(f, T.LUnitInv):
        return T.LUnit(f.x)
    if isinstance(f, T.RUnit):
        return T.RUnitInv(f.x)
    if isinstance(f, T.RUnitInv):
        return T.RUnit(f.x)
    if isinstance(f, T.Braid):
        return T.BraidInv(f.x, f.y)
    if isinstance(f, T.BraidInv):
        return T.Braid(f.x, f.y)
    if isinstance(f, T.Tensor):
        return T.Tensor(_invert(f.f), _invert(f.g))
    if isinstance(f, T.Compose):
        return T.Compose(_invert(f.first), _invert(f.second))
    raise T.MalformedTerm(f"not a 1-cell: {f!r}", f)


def invert(f: T.OneCell) -> T.OneCell:
    """The pseudo-inverse 1-cell, built constructor by constructor."""
    return _invert(f)


def _merge(left, right) -> tuple[list, T.ObjTerm]:
    """Path from ``left*right`` (both normal) to a normal object."""
    if isinstance(left, T.Unit):
        return [T.LUnit(right)], right
    if isinstance(right, T.Unit):
        return [T.RUnit(left)], left
    if isinstance(left, T.Gen):
        return [], T.ObjTensor(left, right)
    head, rest = left.left, left.right
    steps, merged = _merge(rest, right)
    out = [T.Assoc(head, rest, right)]
    out += [T.Tensor(T.Id(head), s) for s in steps]
    return out, T.ObjTensor(head, merged)


def _normal_path(x) -> tuple[list, T.ObjTerm]:
    if not isinstance(x, T.ObjTensor):
        return [], x
    pl, nl = _normal_path(x.left)
    pr, nr = _normal_path(x.right)
    steps = [T.Tensor(s, T.Id(x.right)) for s in pl]
    steps += [T.Tensor(T.Id(nl), s) for s in pr]
    more, out = _merge(nl, nr)
    return steps + more, out


def normal_form(x: T.ObjTerm) -> T.ObjTerm:
    """Right-bracketed object with the same generators, units removed."""
    return _normal_path(x)[1]


def rebracket(src: T.ObjTerm, tgt: T.ObjTerm) -> T.OneCell:
    """A coherence 1-cell from ``src`` to ``tgt`` (same generator sequence)."""
    if T.obj_flatten(src) != T.obj_flatten(tgt):
        raise T.MalformedTerm("objects have different generator sequences")
    a, _ = _normal_path(src)
    b, _ = _normal_path(tgt)
    cells = a + [invert(c) for c in reversed(b)]
    if not cells:
        return T.Id(src)
    return T.compose_all(cells)


def power(x: T.ObjTerm, k: int) -> T.ObjTerm:
    """Left-bracketed tensor power (unit for ``k = 0``)."""
    return T.tensor_all([x] * k)


def sigma_composite(k: int, i: int, x: T.ObjTerm = T.Gen("x")) -> T.OneCell:
    """1-cell on the k-fold power of ``x`` evaluating to the single letter
    sigma_i: rebracket so positions i, i+1 form a pair, braid, rebracket back."""
    if not 1 <= i < k:
        raise ValueError(f"need 1 <= i < k, got i={i}, k={k}")
    pair = T.ObjTensor(x, x)
    swap = T.Braid(x, x)
    tail = k - i - 1
    if tail:
        core = T.ObjTensor(pair, power(x, tail))
        swap = T.Tensor(swap, T.Id(power(x, tail)))
    else:
        core = pair
    if i > 1:
        mid = T.ObjTensor(power(x, i - 1), core)
        swap = T.Tensor(T.Id(power(x, i - 1)), swap)
    else:
        mid = core
    top = power(x, k)
    cells = []
    for c in (rebracket(top, mid), swap, rebracket(mid, top)):
        if not isinstance(c, T.Id):
            cells.append(c)
    return T.compose_all(cells)
