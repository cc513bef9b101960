"""Random terms and words shared by the tests."""

from __future__ import annotations

import random

from bicoh import terms as T


def random_object(rng: random.Random, gens, size: int, units: bool = True):
    if size <= 1:
        if units and rng.random() < 0.1:
            return T.Unit()
        return T.Gen(rng.choice(gens))
    k = rng.randint(1, size - 1)
    return T.ObjTensor(random_object(rng, gens, k, units), random_object(rng, gens, size - k, units))


def random_cell(rng: random.Random, x, depth: int, braids: bool = True):
    """A random well-typed 1-cell with source ``x``."""
    opts = ["id"]
    if depth > 0:
        opts += ["compose", "compose", "l'", "r'"]
        if isinstance(x, T.ObjTensor):
            opts += ["tensor", "tensor"]
            if braids:
                opts += ["R", "R'"]
            if isinstance(x.left, T.ObjTensor):
                opts.append("a")
            if isinstance(x.right, T.ObjTensor):
                opts.append("a'")
            if isinstance(x.left, T.Unit):
                opts.append("l")
            if isinstance(x.right, T.Unit):
                opts.append("r")
    op = rng.choice(opts)
    if op == "id":
        return T.Id(x)
    if op == "compose":
        f = random_cell(rng, x, depth - 1, braids)
        g = random_cell(rng, T.tgt_obj(f), depth - 1, braids)
        return T.Compose(g, f)
    if op == "tensor":
        return T.Tensor(random_cell(rng, x.left, depth - 1, braids),
                        random_cell(rng, x.right, depth - 1, braids))
    if op == "R":
        return T.Braid(x.left, x.right)
    if op == "R'":
        return T.BraidInv(x.right, x.left)
    if op == "a":
        return T.Assoc(x.left.left, x.left.right, x.right)
    if op == "a'":
        return T.AssocInv(x.left, x.right.left, x.right.right)
    if op == "l":
        return T.LUnit(x.right)
    if op == "r":
        return T.RUnit(x.left)
    if op == "l'":
        return T.LUnitInv(x)
    return T.RUnitInv(x)


def random_word(rng: random.Random, strands: int, length: int) -> tuple[int, ...]:
    if strands < 2:
        return ()
    return tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))


def scramble(rng: random.Random, w, strands: int, steps: int):
    """Apply random elementary changes, giving an equal word."""
    from bicoh.movies import apply_change, ElementaryChange, InvalidChange
    w = tuple(w)
    for _ in range(steps):
        kind = rng.choice(("PairInsert", "PairDelete", "FarCommute", "BraidRelation"))
        pos = rng.randint(0, len(w))
        gen = rng.randint(1, strands - 1) if strands > 1 else 1
        ch = ElementaryChange(kind, pos, gen, rng.choice((1, -1)), rng.randint(0, 2))
        if kind == "PairDelete" and pos < len(w):
            ch = ElementaryChange(kind, pos, abs(w[pos]), 1 if w[pos] > 0 else -1)
        try:
            w = apply_change(w, ch, strands)
        except InvalidChange:
            pass
    return w
