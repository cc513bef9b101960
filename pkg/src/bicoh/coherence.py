"""Coherence decisions.

Parallel 1-cells are isomorphic exactly when their labeled braids are
equal, and parallel 2-cells are always equal, so both questions reduce to
computations on braids and boundaries. The module also carries the string
model of the braided structure (unit checks) and builders for pasting
composites such as the two sides of the fourth braiding axiom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .braids import BraidWord, LabeledBraid, are_equal
from .functor import block_letters, eval_one_cell
from . import terms as T

REASONS = ("ObjectMismatch", "LabelMismatch", "BraidDiffer", "Isomorphic", "ParallelEqual", "NotParallel")


@dataclass(frozen=True)
class DecisionReport:
    verdict: bool
    reason: str
    left_braid: LabeledBraid | None = None
    right_braid: LabeledBraid | None = None

    def __bool__(self) -> bool:
        return self.verdict


def iso_exists(f: T.OneCell, g: T.OneCell, flatten_objects: bool = False) -> DecisionReport:
    """Whether an invertible 2-cell ``f => g`` exists.

    Objects are compared syntactically unless ``flatten_objects`` is set, in
    which case only their generator sequences must agree."""
    sf, tf = T.src_obj(f), T.tgt_obj(f)
    sg, tg = T.src_obj(g), T.tgt_obj(g)
    ef, eg = eval_one_cell(f), eval_one_cell(g)
    if flatten_objects:
        if T.obj_flatten(sf) != T.obj_flatten(sg) or T.obj_flatten(tf) != T.obj_flatten(tg):
            return DecisionReport(False, "LabelMismatch", ef, eg)
    elif (sf, tf) != (sg, tg):
        return DecisionReport(False, "ObjectMismatch", ef, eg)
    if ef.labels != eg.labels:
        return DecisionReport(False, "LabelMismatch", ef, eg)
    if are_equal(ef.word, eg.word):
        return DecisionReport(True, "Isomorphic", ef, eg)
    return DecisionReport(False, "BraidDiffer", ef, eg)


def two_cells_equal(a: T.TwoCell, b: T.TwoCell) -> DecisionReport:
    """Two 2-cells are equal exactly when they are parallel.

    Relies on every generating 2-cell being invertible, so that any two
    parallel 2-cells in the free structure coincide."""
    sa, ta = T.boundary2(a)
    sb, tb = T.boundary2(b)
    ea, eb = eval_one_cell(sa), eval_one_cell(sb)
    if (T.src_obj(sa), T.tgt_obj(sa)) != (T.src_obj(sb), T.tgt_obj(sb)):
        return DecisionReport(False, "ObjectMismatch", ea, eb)
    if (sa, ta) == (sb, tb):
        return DecisionReport(True, "ParallelEqual", ea, eb)
    return DecisionReport(False, "NotParallel", ea, eb)


# string model


def gr_identity(xs) -> LabeledBraid:
    xs = tuple(xs)
    return LabeledBraid(xs, BraidWord(max(len(xs), 1), ()))


def gr_braiding(xs, ys) -> LabeledBraid:
    xs, ys = tuple(xs), tuple(ys)
    return LabeledBraid(xs + ys, BraidWord(max(len(xs) + len(ys), 1), block_letters(len(xs), len(ys))))


def gr_tensor(a: LabeledBraid, b: LabeledBraid) -> LabeledBraid:
    k = len(a.labels)
    n = max(k + len(b.labels), 1)
    shifted = tuple(x + k if x > 0 else x - k for x in b.word.letters)
    return LabeledBraid(a.labels + b.labels, BraidWord(n, a.word.letters + shifted))


def gr_compose(second: LabeledBraid, first: LabeledBraid) -> LabeledBraid:
    if first.target_labels() != second.labels:
        raise ValueError("labels do not match in composite")
    return LabeledBraid(first.labels, BraidWord(first.word.strands, first.word.letters + second.word.letters))


def _same(a: LabeledBraid, b: LabeledBraid) -> bool:
    """Letter-for-letter equality, as required of unit instances."""
    return a.labels == b.labels and a.word.letters == b.word.letters


@dataclass
class CransReport:
    results: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def crans_unit_checks(gens=("x", "y"), max_len: int = 3) -> CransReport:
    """The eight unit conditions in the string model over all strings of
    length at most ``max_len``."""
    strings = [s for n in range(max_len + 1) for s in itertools.product(gens, repeat=n)]
    I = ()
    B, Id, X, C = gr_braiding, gr_identity, gr_tensor, gr_compose

    def hex_left(a, b, c):
        # braid a past b then past c, against braiding a past bc at once
        return C(X(Id(b), B(a, c)), X(B(a, b), Id(c))), B(a, b + c)

    def hex_right(a, b, c):
        return C(X(B(a, c), Id(b)), X(Id(a), B(b, c))), B(a + b, c)

    conditions = {
        "R_{I,A}": lambda a, b: (B(I, a), Id(a)),
        "R_{A,I}": lambda a, b: (B(a, I), Id(a)),
        "R_(A|B,I)": lambda a, b: hex_left(a, b, I),
        "R_(A|I,B)": lambda a, b: hex_left(a, I, b),
        "R_(A,I|B)": lambda a, b: hex_right(a, I, b),
        "R_(I,A|B)": lambda a, b: hex_right(I, a, b),
        "R_(I|A,B)": lambda a, b: (hex_left(I, a, b)[0], Id(a + b)),
        "R_(A,B|I)": lambda a, b: (hex_right(a, b, I)[0], Id(a + b)),
    }
    report = CransReport()
    for name, cond in conditions.items():
        count = 0
        for a in strings:
            for b in strings:
                lhs, rhs = cond(a, b)
                count += 1
                if not _same(lhs, rhs):
                    report.failures.append((name, a, b))
        report.results[name] = count
    return report


# pastings


def path_atoms(f: T.OneCell) -> list[T.OneCell]:
    """Non-identity atoms of a composite, in application order."""
    return [c for c in T.flatten_compose(f) if not isinstance(c, T.Id)]


def canonical(atoms, obj: T.ObjTerm) -> T.OneCell:
    return T.compose_all(list(atoms)) if atoms else T.Id(obj)


def _merge(G: T.OneCell, F: T.OneCell) -> T.TwoCell:
    """From ``Compose(G, F)`` (both canonical) to the canonical composite."""
    if isinstance(G, T.Id):
        return T.CompLUnit(F)
    if isinstance(F, T.Id):
        return T.CompRUnit(G)
    if not isinstance(G, T.Compose):
        return T.Id2(T.Compose(G, F))
    last, rest = G.second, G.first
    return T.VComp(T.HComp(T.Id2(last), _merge(rest, F)), T.CompAssoc(last, rest, F))


def normalize(f: T.OneCell) -> T.TwoCell:
    """2-cell from ``f`` to the canonical composite of its atoms."""
    if not isinstance(f, T.Compose):
        return T.Id2(f)
    nf, ng = normalize(f.first), normalize(f.second)
    F = canonical(path_atoms(f.first), T.src_obj(f.first))
    G = canonical(path_atoms(f.second), T.src_obj(f.second))
    return T.VComp(_merge(G, F), T.HComp(ng, nf))


def whisker(pre: list, a: T.TwoCell, post: list) -> T.TwoCell:
    """``a`` placed between the composites ``pre`` and ``post``, with both
    boundaries brought to canonical form."""
    s, _ = T.boundary2(a)
    x, y = T.src_obj(s), T.tgt_obj(s)
    raw = T.HComp(T.Id2(canonical(post, y)), T.HComp(a, T.Id2(canonical(pre, x))))
    rs, rt = T.boundary2(raw)
    return T.VComp(normalize(rt), T.VComp(raw, T.Inv(normalize(rs))))


class Pasting:
    """Builds a vertical composite by rewriting a canonical path step by step."""

    def __init__(self, atoms: list, obj: T.ObjTerm):
        self.atoms = list(atoms)
        self.obj = obj
        self.cells: list[T.TwoCell] = []

    def rewrite(self, start: int, a: T.TwoCell) -> Pasting:
        s, t = T.boundary2(a)
        old, new = path_atoms(s), path_atoms(t)
        if self.atoms[start:start + len(old)] != old:
            raise T.MalformedTerm(f"cell does not match the path at {start}", a)
        self.cells.append(whisker(self.atoms[:start], a, self.atoms[start + len(old):]))
        self.atoms[start:start + len(old)] = new
        return self

    def result(self) -> T.TwoCell:
        if not self.cells:
            return T.Id2(canonical(self.atoms, self.obj))
        out = self.cells[0]
        for c in self.cells[1:]:
            out = T.VComp(c, out)
        return out


def fourth_axiom_paths(A, B, C) -> tuple[list, list]:
    """The two 1-cell paths (ABC)->(CBA) compared by the fourth axiom."""
    O = T.ObjTensor
    top = [T.Tensor(T.Braid(A, B), T.Id(C)), T.Assoc(B, A, C), T.Tensor(T.Id(B), T.Braid(A, C)),
           T.AssocInv(B, C, A), T.Tensor(T.Braid(B, C), T.Id(A))]
    bottom = [T.Assoc(A, B, C), T.Tensor(T.Id(A), T.Braid(B, C)), T.AssocInv(A, C, B),
              T.Tensor(T.Braid(A, C), T.Id(B)), T.Assoc(C, A, B), T.Tensor(T.Id(C), T.Braid(A, B)),
              T.AssocInv(C, B, A)]
    assert T.src_obj(top[0]) == O(O(A, B), C)
    return top, bottom


def fourth_axiom_pastings(A, B, C) -> tuple[T.TwoCell, T.TwoCell]:
    """The two pastings of the fourth axiom, both from the top path to the
    bottom path: one through the hexagonators braiding A past the rest, one
    through those braiding the pair past C."""
    top, _ = fourth_axiom_paths(A, B, C)
    start = T.src_obj(top[0])
    left = (Pasting(top, start)
            .rewrite(0, T.HexL(A, B, C))
            .rewrite(2, T.Inv(T.EtaA(B, C, A)))
            .rewrite(1, T.Inv(T.NatB(T.Id(A), T.Braid(B, C))))
            .rewrite(2, T.Inv(T.EpsA(A, C, B)))
            .rewrite(5, T.EtaA(C, B, A))
            .rewrite(3, T.Inv(T.HexL(A, C, B)))
            .result())
    right = (Pasting(top, start)
             .rewrite(2, T.HexR(B, A, C))
             .rewrite(1, T.Inv(T.EtaA(B, A, C)))
             .rewrite(0, T.NatB(T.Braid(A, B), T.Id(C)))
             .rewrite(0, T.EtaA(A, B, C))
             .rewrite(3, T.Inv(T.EpsA(C, A, B)))
             .rewrite(1, T.Inv(T.HexR(A, B, C)))
             .result())
    return left, right


def triple(x: T.ObjTerm) -> tuple:
    """Split ``(A*B)*C`` into its three factors."""
    if isinstance(x, T.ObjTensor) and isinstance(x.left, T.ObjTensor):
        return x.left.left, x.left.right, x.right
    if isinstance(x, T.ObjTensor) and isinstance(x.right, T.ObjTensor):
        return x.left, x.right.left, x.right.right
    raise ValueError("object must be a tensor of three factors")
