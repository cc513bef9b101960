"""Terms of the free braided monoidal bicategory on a set of generators.

Objects, 1-cells and 2-cells are immutable dataclasses; equality is
syntactic. Boundaries are computed structurally and raise
``MalformedTerm`` when a composite does not typecheck; ``well_formed``
reports the same failures as a value instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class MalformedTerm(ValueError):
    def __init__(self, message: str, subterm=None):
        super().__init__(message)
        self.subterm = subterm


# objects


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class ObjTensor:
    left: "ObjTerm"
    right: "ObjTerm"


ObjTerm = Union[Unit, Gen, ObjTensor]


def obj_flatten(x: ObjTerm) -> tuple[str, ...]:
    """Generator names left to right, units dropped."""
    if isinstance(x, Gen):
        return (x.name,)
    if isinstance(x, ObjTensor):
        return obj_flatten(x.left) + obj_flatten(x.right)
    return ()


def tensor_all(objs: list[ObjTerm]) -> ObjTerm:
    """Left-bracketed tensor of a list of objects (unit when empty)."""
    if not objs:
        return Unit()
    out = objs[0]
    for o in objs[1:]:
        out = ObjTensor(out, o)
    return out


# 1-cells


@dataclass(frozen=True)
class Id:
    x: ObjTerm


@dataclass(frozen=True)
class Assoc:
    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class AssocInv:
    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class LUnit:
    x: ObjTerm


@dataclass(frozen=True)
class LUnitInv:
    x: ObjTerm


@dataclass(frozen=True)
class RUnit:
    x: ObjTerm


@dataclass(frozen=True)
class RUnitInv:
    x: ObjTerm


@dataclass(frozen=True)
class Braid:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class BraidInv:
    """The pseudo-inverse of ``Braid(x, y)``: from ``y*x`` to ``x*y``."""

    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class Tensor:
    f: "OneCell"
    g: "OneCell"


@dataclass(frozen=True)
class Compose:
    """``second`` after ``first``."""

    second: "OneCell"
    first: "OneCell"


OneCell = Union[Id, Assoc, AssocInv, LUnit, LUnitInv, RUnit, RUnitInv, Braid, BraidInv, Tensor, Compose]


def _bounds1(f) -> tuple[ObjTerm, ObjTerm]:
    if isinstance(f, Id):
        return f.x, f.x
    if isinstance(f, Assoc):
        return ObjTensor(ObjTensor(f.x, f.y), f.z), ObjTensor(f.x, ObjTensor(f.y, f.z))
    if isinstance(f, AssocInv):
        return ObjTensor(f.x, ObjTensor(f.y, f.z)), ObjTensor(ObjTensor(f.x, f.y), f.z)
    if isinstance(f, LUnit):
        return ObjTensor(Unit(), f.x), f.x
    if isinstance(f, LUnitInv):
        return f.x, ObjTensor(Unit(), f.x)
    if isinstance(f, RUnit):
        return ObjTensor(f.x, Unit()), f.x
    if isinstance(f, RUnitInv):
        return f.x, ObjTensor(f.x, Unit())
    if isinstance(f, Braid):
        return ObjTensor(f.x, f.y), ObjTensor(f.y, f.x)
    if isinstance(f, BraidInv):
        return ObjTensor(f.y, f.x), ObjTensor(f.x, f.y)
    if isinstance(f, Tensor):
        a, b = _bounds1(f.f)
        c, d = _bounds1(f.g)
        return ObjTensor(a, c), ObjTensor(b, d)
    if isinstance(f, Compose):
        a, b = _bounds1(f.first)
        c, d = _bounds1(f.second)
        if b != c:
            raise MalformedTerm(
                f"cannot compose: {print_obj(b)} is not {print_obj(c)}", f)
        return a, d
    raise MalformedTerm(f"not a 1-cell: {f!r}", f)


def src_obj(f: OneCell) -> ObjTerm:
    return _bounds1(f)[0]


def tgt_obj(f: OneCell) -> ObjTerm:
    return _bounds1(f)[1]


def compose_all(cells: list[OneCell]) -> OneCell:
    """Composite of 1-cells listed in application order, nested so that the
    last cell applied is outermost."""
    out = cells[0]
    for c in cells[1:]:
        out = Compose(c, out)
    return out


def flatten_compose(f: OneCell) -> list[OneCell]:
    """Atoms of a composite in application order; identities are kept."""
    if isinstance(f, Compose):
        return flatten_compose(f.first) + flatten_compose(f.second)
    return [f]


# 2-cells


@dataclass(frozen=True)
class Id2:
    f: OneCell


@dataclass(frozen=True)
class EtaA:
    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class EpsA:
    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class EtaL:
    x: ObjTerm


@dataclass(frozen=True)
class EpsL:
    x: ObjTerm


@dataclass(frozen=True)
class EtaRu:
    x: ObjTerm


@dataclass(frozen=True)
class EpsRu:
    x: ObjTerm


@dataclass(frozen=True)
class EtaB:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class EpsB:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class Pi:
    w: ObjTerm
    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class Mu:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class Lambda:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class Rho:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class HexL:
    """Braiding ``x`` past the pair ``y, z`` one at a time vs all at once."""

    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class HexR:
    """Braiding the pair ``x, y`` past ``z`` one at a time vs all at once."""

    x: ObjTerm
    y: ObjTerm
    z: ObjTerm


@dataclass(frozen=True)
class NatA:
    f: OneCell
    g: OneCell
    h: OneCell


@dataclass(frozen=True)
class NatL:
    f: OneCell


@dataclass(frozen=True)
class NatRu:
    f: OneCell


@dataclass(frozen=True)
class NatB:
    f: OneCell
    g: OneCell


@dataclass(frozen=True)
class Interchange:
    f: OneCell
    g: OneCell


@dataclass(frozen=True)
class Funct2:
    """``(f2*g2) after (f1*g1)`` to ``(f2 after f1) * (g2 after g1)``."""

    f1: OneCell
    f2: OneCell
    g1: OneCell
    g2: OneCell


@dataclass(frozen=True)
class Funct0:
    x: ObjTerm
    y: ObjTerm


@dataclass(frozen=True)
class CompAssoc:
    """Rebracketing of 1-cell composition: ``(h.g).f`` to ``h.(g.f)``."""

    h: OneCell
    g: OneCell
    f: OneCell


@dataclass(frozen=True)
class CompLUnit:
    """``id after f`` to ``f``."""

    f: OneCell


@dataclass(frozen=True)
class CompRUnit:
    """``f after id`` to ``f``."""

    f: OneCell


@dataclass(frozen=True)
class Inv:
    a: "TwoCell"


@dataclass(frozen=True)
class VComp:
    second: "TwoCell"
    first: "TwoCell"


@dataclass(frozen=True)
class HComp:
    """Horizontal composite along 1-cell composition: ``second`` after ``first``."""

    second: "TwoCell"
    first: "TwoCell"


@dataclass(frozen=True)
class Tensor2:
    a: "TwoCell"
    b: "TwoCell"


TwoCell = Union[
    Id2, EtaA, EpsA, EtaL, EpsL, EtaRu, EpsRu, EtaB, EpsB, Pi, Mu, Lambda, Rho,
    HexL, HexR, NatA, NatL, NatRu, NatB, Interchange, Funct2, Funct0,
    CompAssoc, CompLUnit, CompRUnit, Inv, VComp, HComp, Tensor2,
]

ONE_CELL_TYPES = (Id, Assoc, AssocInv, LUnit, LUnitInv, RUnit, RUnitInv, Braid, BraidInv, Tensor, Compose)
OBJ_TYPES = (Unit, Gen, ObjTensor)


def _tensor_ids(*objs) -> OneCell:
    return Id(objs[0]) if len(objs) == 1 else Tensor(*[Id(o) for o in objs])


def _bounds2(a) -> tuple[OneCell, OneCell]:
    T = ObjTensor
    if isinstance(a, Id2):
        _bounds1(a.f)
        return a.f, a.f
    if isinstance(a, EtaA):
        return Id(T(T(a.x, a.y), a.z)), Compose(AssocInv(a.x, a.y, a.z), Assoc(a.x, a.y, a.z))
    if isinstance(a, EpsA):
        return Compose(Assoc(a.x, a.y, a.z), AssocInv(a.x, a.y, a.z)), Id(T(a.x, T(a.y, a.z)))
    if isinstance(a, EtaL):
        return Id(T(Unit(), a.x)), Compose(LUnitInv(a.x), LUnit(a.x))
    if isinstance(a, EpsL):
        return Compose(LUnit(a.x), LUnitInv(a.x)), Id(a.x)
    if isinstance(a, EtaRu):
        return Id(T(a.x, Unit())), Compose(RUnitInv(a.x), RUnit(a.x))
    if isinstance(a, EpsRu):
        return Compose(RUnit(a.x), RUnitInv(a.x)), Id(a.x)
    if isinstance(a, EtaB):
        return Id(T(a.x, a.y)), Compose(BraidInv(a.x, a.y), Braid(a.x, a.y))
    if isinstance(a, EpsB):
        return Compose(Braid(a.x, a.y), BraidInv(a.x, a.y)), Id(T(a.y, a.x))
    if isinstance(a, Pi):
        w, x, y, z = a.w, a.x, a.y, a.z
        src = compose_all([
            Tensor(Assoc(w, x, y), Id(z)),
            Assoc(w, T(x, y), z),
            Tensor(Id(w), Assoc(x, y, z)),
        ])
        tgt = compose_all([Assoc(T(w, x), y, z), Assoc(w, x, T(y, z))])
        return src, tgt
    if isinstance(a, Mu):
        x, y = a.x, a.y
        src = compose_all([
            Tensor(RUnitInv(x), Id(y)),
            Assoc(x, Unit(), y),
            Tensor(Id(x), LUnit(y)),
        ])
        return src, Id(T(x, y))
    if isinstance(a, Lambda):
        x, y = a.x, a.y
        return Tensor(LUnit(x), Id(y)), compose_all([Assoc(Unit(), x, y), LUnit(T(x, y))])
    if isinstance(a, Rho):
        x, y = a.x, a.y
        return Tensor(Id(x), RUnitInv(y)), compose_all([RUnitInv(T(x, y)), Assoc(x, y, Unit())])
    if isinstance(a, HexL):
        x, y, z = a.x, a.y, a.z
        src = compose_all([Tensor(Braid(x, y), Id(z)), Assoc(y, x, z), Tensor(Id(y), Braid(x, z))])
        tgt = compose_all([Assoc(x, y, z), Braid(x, T(y, z)), Assoc(y, z, x)])
        return src, tgt
    if isinstance(a, HexR):
        x, y, z = a.x, a.y, a.z
        src = compose_all([Tensor(Id(x), Braid(y, z)), AssocInv(x, z, y), Tensor(Braid(x, z), Id(y))])
        tgt = compose_all([AssocInv(x, y, z), Braid(T(x, y), z), AssocInv(z, x, y)])
        return src, tgt
    if isinstance(a, NatA):
        (x, x2), (y, y2), (z, z2) = _bounds1(a.f), _bounds1(a.g), _bounds1(a.h)
        return (Compose(Assoc(x2, y2, z2), Tensor(Tensor(a.f, a.g), a.h)),
                Compose(Tensor(a.f, Tensor(a.g, a.h)), Assoc(x, y, z)))
    if isinstance(a, NatL):
        x, x2 = _bounds1(a.f)
        return Compose(LUnit(x2), Tensor(Id(Unit()), a.f)), Compose(a.f, LUnit(x))
    if isinstance(a, NatRu):
        x, x2 = _bounds1(a.f)
        return Compose(RUnit(x2), Tensor(a.f, Id(Unit()))), Compose(a.f, RUnit(x))
    if isinstance(a, NatB):
        (x, x2), (y, y2) = _bounds1(a.f), _bounds1(a.g)
        return Compose(Braid(x2, y2), Tensor(a.f, a.g)), Compose(Tensor(a.g, a.f), Braid(x, y))
    if isinstance(a, Interchange):
        (x, x2), (y, y2) = _bounds1(a.f), _bounds1(a.g)
        return (Compose(Tensor(a.f, Id(y2)), Tensor(Id(x), a.g)),
                Compose(Tensor(Id(x2), a.g), Tensor(a.f, Id(y))))
    if isinstance(a, Funct2):
        src = Compose(Tensor(a.f2, a.g2), Tensor(a.f1, a.g1))
        tgt = Tensor(Compose(a.f2, a.f1), Compose(a.g2, a.g1))
        _bounds1(src)
        _bounds1(tgt)
        return src, tgt
    if isinstance(a, Funct0):
        return Tensor(Id(a.x), Id(a.y)), Id(T(a.x, a.y))
    if isinstance(a, CompAssoc):
        src = Compose(Compose(a.h, a.g), a.f)
        _bounds1(src)
        return src, Compose(a.h, Compose(a.g, a.f))
    if isinstance(a, CompLUnit):
        _, y = _bounds1(a.f)
        return Compose(Id(y), a.f), a.f
    if isinstance(a, CompRUnit):
        x, _ = _bounds1(a.f)
        return Compose(a.f, Id(x)), a.f
    if isinstance(a, Inv):
        s, t = _bounds2(a.a)
        return t, s
    if isinstance(a, VComp):
        s1, t1 = _bounds2(a.first)
        s2, t2 = _bounds2(a.second)
        if t1 != s2:
            raise MalformedTerm(
                f"vertical composite does not match: {print_cell(t1)} vs {print_cell(s2)}", a)
        return s1, t2
    if isinstance(a, HComp):
        s1, t1 = _bounds2(a.first)
        s2, t2 = _bounds2(a.second)
        src = Compose(s2, s1)
        _bounds1(src)
        return src, Compose(t2, t1)
    if isinstance(a, Tensor2):
        s1, t1 = _bounds2(a.a)
        s2, t2 = _bounds2(a.b)
        return Tensor(s1, s2), Tensor(t1, t2)
    raise MalformedTerm(f"not a 2-cell: {a!r}", a)


def boundary2(a: TwoCell) -> tuple[OneCell, OneCell]:
    s, t = _bounds2(a)
    # the endpoints of both 1-cells must agree for a globular cell
    if _bounds1(s) != _bounds1(t):
        raise MalformedTerm("2-cell boundaries are not parallel", a)
    return s, t


@dataclass(frozen=True)
class Validation:
    ok: bool
    message: str = ""
    subterm: object = None

    def __bool__(self) -> bool:
        return self.ok


def _generators(t, acc: set) -> None:
    if isinstance(t, Gen):
        acc.add(t.name)
        return
    for v in getattr(t, "__dict__", {}).values():
        if isinstance(v, (Unit, Gen, ObjTensor)) or hasattr(v, "__dataclass_fields__"):
            _generators(v, acc)


def generators(t) -> set[str]:
    acc: set[str] = set()
    _generators(t, acc)
    return acc


def well_formed(term, gens=None) -> Validation:
    """Check a term; ``gens`` restricts the allowed generator names."""
    if gens is not None:
        extra = sorted(generators(term) - set(gens))
        if extra:
            return Validation(False, f"unknown generator {extra[0]!r}", Gen(extra[0]))
    try:
        if isinstance(term, OBJ_TYPES):
            pass
        elif isinstance(term, ONE_CELL_TYPES):
            _bounds1(term)
        else:
            boundary2(term)
    except MalformedTerm as e:
        return Validation(False, str(e), e.subterm)
    return Validation(True)


# printing


def print_obj(x: ObjTerm) -> str:
    if isinstance(x, Unit):
        return "I"
    if isinstance(x, Gen):
        return x.name
    return f"({print_obj(x.left)}*{print_obj(x.right)})"


_CELL_NAMES = {
    Assoc: "a", AssocInv: "a'", LUnit: "l", LUnitInv: "l'",
    RUnit: "r", RUnitInv: "r'", Braid: "R", BraidInv: "R'", Id: "id",
}


def print_cell(f: OneCell) -> str:
    if isinstance(f, Tensor):
        return f"({print_cell(f.f)}*{print_cell(f.g)})"
    if isinstance(f, Compose):
        return f"({print_cell(f.first)};{print_cell(f.second)})"
    args = ",".join(print_obj(v) for v in f.__dict__.values())
    return f"{_CELL_NAMES[type(f)]}[{args}]"


_TWO_NAMES = {
    Id2: "id2", EtaA: "etaA", EpsA: "epsA", EtaL: "etaL", EpsL: "epsL",
    EtaRu: "etaR", EpsRu: "epsR", EtaB: "etaB", EpsB: "epsB", Pi: "pi",
    Mu: "mu", Lambda: "lambda", Rho: "rho", HexL: "hexL", HexR: "hexR",
    NatA: "natA", NatL: "natL", NatRu: "natR", NatB: "natB",
    Interchange: "interchange", Funct2: "funct2", Funct0: "funct0",
    CompAssoc: "cassoc", CompLUnit: "clunit", CompRUnit: "crunit", Inv: "inv",
}


def print_two(a: TwoCell) -> str:
    if isinstance(a, VComp):
        return f"({print_two(a.first)};{print_two(a.second)})"
    if isinstance(a, HComp):
        return f"({print_two(a.first)}.{print_two(a.second)})"
    if isinstance(a, Tensor2):
        return f"({print_two(a.a)}*{print_two(a.b)})"
    parts = []
    for v in a.__dict__.values():
        if isinstance(v, OBJ_TYPES):
            parts.append(print_obj(v))
        elif isinstance(v, ONE_CELL_TYPES):
            parts.append(print_cell(v))
        else:
            parts.append(print_two(v))
    return f"{_TWO_NAMES[type(a)]}[{','.join(parts)}]"


def print_term(t) -> str:
    if isinstance(t, OBJ_TYPES):
        return print_obj(t)
    if isinstance(t, ONE_CELL_TYPES):
        return print_cell(t)
    return print_two(t)
