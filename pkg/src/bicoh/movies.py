"""Braid movies, the moves between them and certificate search.

A movie is a sequence of words on a fixed number of strands in which each
word differs from the previous one by an elementary change: equality,
inserting or deleting ``s_j^e s_j^-e``, commuting far generators, or one of
the braid relations

    v0:  s_l^e s_j^e s_l^e   <->  s_j^e s_l^e s_j^e
    v1:  s_l^e s_j^e s_l^-e  ->   s_j^-e s_l^e s_j^e
    v2:  s_j^-e s_l^e s_j^e  ->   s_l^e s_j^e s_l^-e

(``|j - l| = 1``; v2 is v1 read backwards). Frames are tuples of signed
generator indices as in ``braids``.

Two movies with the same ends are equivalent when one can be turned into
the other by the ten movie moves (each usable in either direction, and in
its letter-inverted, palindromic and time-reversed variants) and by
locality changes, which swap two consecutive changes acting on disjoint
parts of the word.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .braids import letters_text, parse_letters, WordFormatError
from . import functor
from . import terms as T

DEFAULT_BUDGET = 64
DEFAULT_MAX_NODES = 200_000

Word = tuple[int, ...]


class InvalidChange(ValueError):
    pass


class InvalidStep(ValueError):
    pass


class UnsupportedCell(ValueError):
    pass


class MovieFormatError(ValueError):
    pass


# elementary changes

KINDS = ("Equal", "PairInsert", "PairDelete", "FarCommute", "BraidRelation")


@dataclass(frozen=True)
class ElementaryChange:
    kind: str
    pos: int = 0
    gen: int = 0
    sign: int = 1
    variant: int = 0

    def span(self) -> tuple[int, int, int]:
        """(start, letters removed, letters inserted)."""
        return {
            "Equal": (self.pos, 0, 0),
            "PairInsert": (self.pos, 0, 2),
            "PairDelete": (self.pos, 2, 0),
            "FarCommute": (self.pos, 2, 2),
            "BraidRelation": (self.pos, 3, 3),
        }[self.kind]

    def moved(self, pos: int) -> ElementaryChange:
        return ElementaryChange(self.kind, pos, self.gen, self.sign, self.variant)

    def __str__(self) -> str:
        if self.kind == "Equal":
            return "Equal"
        if self.kind in ("PairInsert", "PairDelete"):
            return f"{self.kind} j={self.gen} e={self.sign} pos={self.pos}"
        if self.kind == "FarCommute":
            return f"FarCommute pos={self.pos}"
        return f"BraidRelation pos={self.pos} variant={self.variant}"


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


def _braid_rewrite(a: int, b: int, c: int, variant: int):
    """Image of the three letters under a braid relation variant, or None."""
    if abs(a) != abs(c) or abs(abs(a) - abs(b)) != 1:
        return None
    if variant == 0 and _sgn(a) == _sgn(b) == _sgn(c):
        return (b, a, b)
    if variant == 1 and _sgn(a) == _sgn(b) == -_sgn(c):
        return (-b, a, b)
    if variant == 2 and -_sgn(a) == _sgn(b) == _sgn(c):
        return (b, c, -b)
    return None


def apply_change(w: Word, ch: ElementaryChange, strands: int) -> Word:
    k, p = ch.kind, ch.pos
    if k == "Equal":
        return w
    if k == "PairInsert":
        if not (1 <= ch.gen < strands and ch.sign in (1, -1) and 0 <= p <= len(w)):
            raise InvalidChange(f"cannot insert at {p}")
        return w[:p] + (ch.gen * ch.sign, -ch.gen * ch.sign) + w[p:]
    if k == "PairDelete":
        if p < 0 or p + 2 > len(w) or w[p] != ch.gen * ch.sign or w[p + 1] != -w[p]:
            raise InvalidChange(f"no cancelling pair at {p}")
        return w[:p] + w[p + 2:]
    if k == "FarCommute":
        if p < 0 or p + 2 > len(w) or abs(abs(w[p]) - abs(w[p + 1])) < 2:
            raise InvalidChange(f"letters at {p} do not commute")
        return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
    if k == "BraidRelation":
        if p < 0 or p + 3 > len(w):
            raise InvalidChange(f"no braid relation at {p}")
        new = _braid_rewrite(w[p], w[p + 1], w[p + 2], ch.variant)
        if new is None:
            raise InvalidChange(f"no braid relation variant {ch.variant} at {p}")
        return w[:p] + new + w[p + 3:]
    raise InvalidChange(f"unknown change {k!r}")


def changes_between(w1: Word, w2: Word) -> list[ElementaryChange]:
    """Every elementary change taking ``w1`` to ``w2``, in a fixed order."""
    out = []
    d = len(w2) - len(w1)
    if d == 0 and w1 == w2:
        out.append(ElementaryChange("Equal"))
        return out
    if d == 2:
        for p in range(len(w1) + 1):
            x = w2[p]
            if w2[p + 1] == -x and w2[:p] + w2[p + 2:] == w1:
                out.append(ElementaryChange("PairInsert", p, abs(x), _sgn(x)))
    elif d == -2:
        for p in range(len(w2) + 1):
            x = w1[p]
            if w1[p + 1] == -x and w1[:p] + w1[p + 2:] == w2:
                out.append(ElementaryChange("PairDelete", p, abs(x), _sgn(x)))
    elif d == 0:
        first = next(i for i in range(len(w1)) if w1[i] != w2[i])
        for p in range(max(first - 1, 0), first + 1):
            if p + 2 <= len(w1) and w1[p + 2:] == w2[p + 2:] and w2[p:p + 2] == (w1[p + 1], w1[p]) \
                    and abs(abs(w1[p]) - abs(w1[p + 1])) >= 2:
                out.append(ElementaryChange("FarCommute", p))
        for p in range(max(first - 2, 0), first + 1):
            if p + 3 <= len(w1) and w1[p + 3:] == w2[p + 3:]:
                for v in (0, 1, 2):
                    if _braid_rewrite(*w1[p:p + 3], v) == w2[p:p + 3]:
                        out.append(ElementaryChange("BraidRelation", p, variant=v))
    return out


# movies


@dataclass(frozen=True)
class Movie:
    strands: int
    frames: tuple[Word, ...]
    changes: tuple[ElementaryChange, ...] = ()

    @staticmethod
    def from_frames(strands: int, frames) -> Movie:
        """Build a movie, inferring the change between consecutive frames."""
        frames = tuple(tuple(f) for f in frames)
        if not frames:
            raise MovieFormatError("a movie needs at least one frame")
        changes = []
        for i in range(len(frames) - 1):
            cands = changes_between(frames[i], frames[i + 1])
            if not cands:
                raise InvalidChange(f"frames {i} and {i + 1} differ by no elementary change")
            changes.append(cands[0])
        return Movie(strands, frames, tuple(changes))

    @property
    def source(self) -> Word:
        return self.frames[0]

    @property
    def target(self) -> Word:
        return self.frames[-1]

    def reversed(self) -> Movie:
        return Movie.from_frames(self.strands, self.frames[::-1])


@dataclass(frozen=True)
class MovieCheck:
    ok: bool
    index: int = -1
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_movie(m: Movie) -> MovieCheck:
    """Every declared change carries its frame to the next one."""
    if not m.frames:
        return MovieCheck(False, 0, "no frames")
    for i, w in enumerate(m.frames):
        for x in w:
            if x == 0 or abs(x) >= m.strands:
                return MovieCheck(False, i, f"letter {x} out of range for n={m.strands}")
    if len(m.changes) != len(m.frames) - 1:
        return MovieCheck(False, len(m.changes), "need one change per pair of frames")
    for i, ch in enumerate(m.changes):
        try:
            got = apply_change(m.frames[i], ch, m.strands)
        except InvalidChange as e:
            return MovieCheck(False, i, str(e))
        if got != m.frames[i + 1]:
            return MovieCheck(False, i, f"{ch} does not produce frame {i + 1}")
    return MovieCheck(True)


# movie moves

# pattern words are strings of letters i j k (positive) and I J K (inverse)


def _pw(s: str) -> tuple:
    return tuple(s.split()) if s else ()


def _side(*words: str) -> tuple:
    return tuple(_pw(w) for w in words)


def _far(a, b):
    return abs(a - b) > 1


def _adj(a, b):
    return abs(a - b) == 1


@dataclass(frozen=True)
class MoveDef:
    name: str
    symbols: str
    left: tuple
    right: tuple
    cond: object
    gated: bool = False


MOVES = (
    MoveDef("CI-R1", "ij",
            _side("i", "i j J", "j i J"), _side("i", "j J i", "j i J"),
            lambda i, j: _far(i, j)),
    MoveDef("CI-R1'", "i",
            _side("i", "i I i", "i"), _side("i"),
            lambda i: True),
    MoveDef("CI-R2", "ij",
            _side("i j", "j i", "i j"), _side("i j"),
            lambda i, j: _far(i, j)),
    MoveDef("CI-R3", "ijk",
            _side("i k j", "k i j", "k j i", "j k i"),
            _side("i k j", "i j k", "j i k", "j k i"),
            lambda i, j, k: _far(i, j) and _far(i, k) and _far(j, k)),
    MoveDef("CI-R4", "ijk",
            _side("k i j i", "i k j i", "i j k i", "i j i k", "j i j k"),
            _side("k i j i", "k j i j", "j k i j", "j i k j", "j i j k"),
            lambda i, j, k: _adj(i, j) and _far(i, k) and _far(j, k)),
    MoveDef("CI-M1", "i",
            _side(""), _side("", "i I", ""),
            lambda i: True),
    MoveDef("CI-M2", "i",
            _side("i I", "", "i I"), _side("i I"),
            lambda i: True),
    MoveDef("CI-M3", "ij",
            _side("i j i", "j i j", "i j i"), _side("i j i"),
            lambda i, j: _adj(i, j)),
    MoveDef("CI-M4", "ijk",
            _side("i j k i j i", "i j i k j i", "j i j k j i", "j i k j k i",
                  "j k i j k i", "j k i j i k", "j k j i j k", "k j k i j k"),
            _side("i j k i j i", "i j k j i j", "i k j k i j", "k i j k i j",
                  "k i j i k j", "k j i j k j", "k j i k j k", "k j k i j k"),
            lambda i, j, k: (k == j + 1 == i + 2) or (k == j - 1 == i - 2),
            gated=True),
    MoveDef("CI-M5", "ij",
            _side("j i", "I i j i", "I j i j"), _side("j i", "j i J j", "I j i j"),
            lambda i, j: _adj(i, j)),
)

MOVE_NAMES = tuple(m.name for m in MOVES)
MODIFIERS = ("inv", "pal", "rev")
MODIFIER_NAMES = {"inv": "InvertLetters", "pal": "Palindrome", "rev": "ReverseSegment"}


def m4_enabled() -> bool:
    return _M4[0]


_M4 = [False]


def enable_m4(flag: bool = True) -> None:
    """Turn the corrected tetrahedron move on or off globally."""
    _M4[0] = flag


def _instantiate_word(pw, env) -> Word:
    return tuple(env[s] if s.islower() else -env[s.lower()] for s in pw)


def instantiate(move: MoveDef, params: dict, mods=()) -> tuple[tuple[Word, ...], tuple[Word, ...]]:
    """Concrete left and right frame sequences of a move."""
    env = {s: params[s] for s in move.symbols}
    left = [_instantiate_word(w, env) for w in move.left]
    right = [_instantiate_word(w, env) for w in move.right]
    if "inv" in mods:
        left = [tuple(-x for x in w) for w in left]
        right = [tuple(-x for x in w) for w in right]
    if "pal" in mods:
        left = [w[::-1] for w in left]
        right = [w[::-1] for w in right]
    if "rev" in mods:
        left, right = left[::-1], right[::-1]
    return tuple(left), tuple(right)


@dataclass(frozen=True)
class CatalogEntry:
    move: str
    params: tuple
    mods: tuple
    direction: str
    source: tuple
    target: tuple


def _move_by_name(name: str) -> MoveDef:
    for m in MOVES:
        if m.name == name:
            return m
    raise InvalidStep(f"unknown move {name!r}")


def catalog(strands: int, m4: bool | None = None) -> list[CatalogEntry]:
    """All instances of the moves on ``strands`` strands, deduplicated by
    their frame sequences, in a fixed order."""
    if m4 is None:
        m4 = m4_enabled()
    seen = set()
    out = []
    gens = range(1, strands)
    for move in MOVES:
        if move.gated and not m4:
            continue
        for vals in itertools.product(gens, repeat=len(move.symbols)):
            if not move.cond(*vals):
                continue
            params = dict(zip(move.symbols, vals))
            for r in range(len(MODIFIERS) + 1):
                for mods in itertools.combinations(MODIFIERS, r):
                    left, right = instantiate(move, params, mods)
                    for direction, src, tgt in ((">", left, right), ("<", right, left)):
                        key = (src, tgt)
                        if key in seen:
                            continue
                        seen.add(key)
                        out.append(CatalogEntry(move.name, tuple(sorted(params.items())),
                                                mods, direction, src, tgt))
    return out


# certificate steps


@dataclass(frozen=True)
class Step:
    move: str
    frame: int
    offset: int = 0
    params: tuple = ()
    mods: tuple = ()
    direction: str = ">"
    to: Word | None = None

    def inverse(self, before: tuple[Word, ...]) -> Step:
        if self.move == "Locality":
            return Step("Locality", self.frame, to=before[self.frame])
        return Step(self.move, self.frame, self.offset, self.params, self.mods,
                    "<" if self.direction == ">" else ">")

    def __str__(self) -> str:
        if self.move == "Locality":
            to = ",".join(letters_text(self.to).split()) or "e"
            return f"Locality to={to} @{self.frame}"
        parts = [self.move]
        parts += [f"{k}={v}" for k, v in self.params]
        parts.append(f"dir={self.direction}")
        parts.append("mods=" + (",".join(self.mods) or "-"))
        parts.append(f"off={self.offset}")
        parts.append(f"@{self.frame}")
        return " ".join(parts)


@dataclass
class Certificate:
    steps: list[Step] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __bool__(self) -> bool:
        # an empty certificate is still a found one
        return True

    def to_text(self) -> str:
        return "".join(str(s) + "\n" for s in self.steps)


@dataclass(frozen=True)
class NotFoundWithinBudget:
    budget: int
    explored: int
    reason: str = "budget"

    def __bool__(self) -> bool:
        return False


def _match(frames, p: int, q: int, side) -> tuple[Word, Word] | None:
    """Context ``(u, v)`` when frames p.. are ``u + side[t] + v``."""
    if p + len(side) > len(frames):
        return None
    w0 = frames[p]
    s0 = side[0]
    if q + len(s0) > len(w0) or w0[q:q + len(s0)] != s0:
        return None
    u, v = w0[:q], w0[q + len(s0):]
    for t in range(1, len(side)):
        if frames[p + t] != u + side[t] + v:
            return None
    return u, v


def _locality_options(frames, p: int, strands: int) -> list[Word]:
    """Alternative middle frames obtained by swapping the changes around frame p."""
    if not 1 <= p < len(frames) - 1:
        return []
    w0, w1, w2 = frames[p - 1], frames[p], frames[p + 1]
    out = []
    for eta in changes_between(w0, w1):
        if eta.kind == "Equal":
            continue
        s1, a1, b1 = eta.span()
        for xi in changes_between(w1, w2):
            if xi.kind == "Equal":
                continue
            s2, a2, b2 = xi.span()
            if s2 >= s1 + b1:
                xi2, eta2 = xi.moved(s2 - b1 + a1), eta
            elif s2 + a2 <= s1:
                xi2, eta2 = xi, eta.moved(s1 + b2 - a2)
            else:
                continue
            try:
                mid = apply_change(w0, xi2, strands)
                end = apply_change(mid, eta2, strands)
            except InvalidChange:
                continue
            if end == w2 and mid != w1 and mid not in out:
                out.append(mid)
    return out


def apply_step(frames: tuple[Word, ...], step: Step, strands: int,
               m4: bool | None = None) -> tuple[Word, ...]:
    frames = tuple(frames)
    p = step.frame
    if step.move == "Locality":
        if step.to is None or step.to not in _locality_options(frames, p, strands):
            raise InvalidStep(f"no locality change to that frame at {p}")
        return frames[:p] + (step.to,) + frames[p + 1:]
    move = _move_by_name(step.move)
    if move.gated and not (m4_enabled() if m4 is None else m4):
        raise InvalidStep(f"{move.name} is disabled")
    params = dict(step.params)
    if set(params) != set(move.symbols):
        raise InvalidStep(f"{move.name} needs parameters {move.symbols}")
    vals = [params[s] for s in move.symbols]
    if not all(1 <= v < strands for v in vals) or not move.cond(*vals):
        raise InvalidStep(f"side conditions fail for {move.name} {params}")
    if any(m not in MODIFIERS for m in step.mods):
        raise InvalidStep(f"unknown modifier in {step.mods}")
    left, right = instantiate(move, params, step.mods)
    src, tgt = (left, right) if step.direction == ">" else (right, left)
    if not 0 <= p < len(frames):
        raise InvalidStep(f"frame {p} out of range")
    ctx = _match(frames, p, step.offset, src)
    if ctx is None:
        raise InvalidStep(f"{move.name} does not match at frame {p}, offset {step.offset}")
    u, v = ctx
    return frames[:p] + tuple(u + w + v for w in tgt) + frames[p + len(src):]


def apply_move(m: Movie, step: Step, m4: bool | None = None) -> Movie:
    return Movie.from_frames(m.strands, apply_step(m.frames, step, m.strands, m4))


def check_certificate(a: Movie, b: Movie, cert: Certificate, m4: bool | None = None) -> bool:
    """Replay ``cert`` from ``a``; true when every step applies and ends at ``b``."""
    if a.strands != b.strands or not validate_movie(a) or not validate_movie(b):
        return False
    frames = a.frames
    for step in cert.steps:
        try:
            frames = apply_step(frames, step, a.strands, m4)
        except InvalidStep:
            return False
    return frames == b.frames


class _Neighbours:
    def __init__(self, strands: int, m4: bool):
        self.strands = strands
        self.index: dict = {}
        self.empty_first: list = []
        for rank, e in enumerate(catalog(strands, m4)):
            e = (rank, e)
            first = e[1].source[0]
            if first:
                self.index.setdefault(first, []).append(e)
            else:
                self.empty_first.append(e)
        self.lengths = sorted({len(k) for k in self.index})

    def __call__(self, frames) -> list[tuple[Step, tuple]]:
        out = []
        for p, w in enumerate(frames):
            for q in range(len(w) + 1):
                cands = list(self.empty_first)
                for ell in self.lengths:
                    if q + ell <= len(w):
                        cands += self.index.get(w[q:q + ell], [])
                cands.sort(key=lambda re: re[0])
                for _, e in cands:
                    ctx = _match(frames, p, q, e.source)
                    if ctx is None:
                        continue
                    u, v = ctx
                    new = frames[:p] + tuple(u + x + v for x in e.target) + frames[p + len(e.source):]
                    out.append((Step(e.move, p, q, e.params, e.mods, e.direction), new))
            for mid in _locality_options(frames, p, self.strands):
                out.append((Step("Locality", p, to=mid), frames[:p] + (mid,) + frames[p + 1:]))
        return out


def _budget_from_env(budget):
    if budget is not None:
        return budget
    raw = os.environ.get("BICOH_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def movie_equivalent(a: Movie, b: Movie, budget: int | None = None,
                     max_nodes: int = DEFAULT_MAX_NODES, threads: int = 1,
                     m4: bool | None = None):
    """Search for a certificate turning ``a`` into ``b``.

    Breadth-first from both ends, expanding the smaller frontier, so the
    certificate found is as short as possible up to ``budget`` steps. The
    result does not depend on ``threads``. Returns ``Certificate`` or
    ``NotFoundWithinBudget``.
    """
    budget = _budget_from_env(budget)
    if a.strands != b.strands:
        raise ValueError("movies have different strand counts")
    if a.source != b.source or a.target != b.target:
        raise ValueError("movies do not share their end frames")
    for m in (a, b):
        chk = validate_movie(m)
        if not chk:
            raise ValueError(f"invalid movie: {chk.message}")
    if a.frames == b.frames:
        return Certificate([])
    nb = _Neighbours(a.strands, m4_enabled() if m4 is None else m4)
    # parents[side][state] = (previous state, step taken from it)
    parents = [{a.frames: None}, {b.frames: None}]
    frontier = [[a.frames], [b.frames]]
    depth = [0, 0]
    explored = 2
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while depth[0] + depth[1] < budget and frontier[0] and frontier[1]:
            side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
            mapper = pool.map if pool else map
            expanded = list(mapper(nb, frontier[side]))
            nxt = []
            for state, moves in zip(frontier[side], expanded):
                for step, new in moves:
                    if new in parents[side]:
                        continue
                    parents[side][new] = (state, step)
                    explored += 1
                    if new in parents[1 - side]:
                        return _join(parents, new)
                    nxt.append(new)
                    if explored >= max_nodes:
                        return NotFoundWithinBudget(budget, explored, "nodes")
            frontier[side] = nxt
            depth[side] += 1
    finally:
        if pool:
            pool.shutdown()
    return NotFoundWithinBudget(budget, explored)


def _join(parents, meet) -> Certificate:
    forward = []
    s = meet
    while parents[0][s] is not None:
        prev, step = parents[0][s]
        forward.append(step)
        s = prev
    forward.reverse()
    backward = []
    s = meet
    while parents[1][s] is not None:
        prev, step = parents[1][s]
        # step took prev to s on the b side; undo it from s
        backward.append(step.inverse(prev))
        s = prev
    return Certificate(forward + backward)


# compiling 2-cells


_CONSTANT = (T.Id2, T.EtaA, T.EpsA, T.EtaL, T.EpsL, T.EtaRu, T.EpsRu, T.Pi, T.Mu,
             T.Lambda, T.Rho, T.NatA, T.NatL, T.NatRu, T.Funct0, T.CompAssoc,
             T.CompLUnit, T.CompRUnit)

_SLIDE_LIMIT = 50_000


def slide_movie(w1: Word, w2: Word, strands: int, limit: int = _SLIDE_LIMIT) -> list[Word]:
    """Shortest frame sequence between two words of equal length using only
    far commutations and braid relations."""
    if w1 == w2:
        return [w1]
    if len(w1) != len(w2):
        raise UnsupportedCell("words of different length")
    parent = {w1: None}
    queue = deque([w1])
    while queue:
        w = queue.popleft()
        for p in range(len(w) - 1):
            cands = []
            if abs(abs(w[p]) - abs(w[p + 1])) >= 2:
                cands.append(w[:p] + (w[p + 1], w[p]) + w[p + 2:])
            if p + 3 <= len(w):
                for v in (0, 1, 2):
                    new = _braid_rewrite(*w[p:p + 3], v)
                    if new is not None:
                        cands.append(w[:p] + new + w[p + 3:])
            for c in cands:
                if c in parent:
                    continue
                parent[c] = w
                if c == w2:
                    path = [c]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                if len(parent) > limit:
                    raise UnsupportedCell("sliding search exceeded its limit")
                queue.append(c)
    raise UnsupportedCell("words are not related by length-preserving changes")


def _cancel_frames(word: Word) -> list[Word]:
    """Frames deleting the innermost cancelling pair until the word is empty
    (``word`` must be ``w w^-1`` or ``w^-1 w``)."""
    frames = [word]
    while word:
        m = len(word) // 2 - 1
        if word[m] != -word[m + 1]:
            raise UnsupportedCell("word is not a nested cancellation")
        word = word[:m] + word[m + 2:]
        frames.append(word)
    return frames


def _shift(w: Word, k: int) -> Word:
    return tuple(x + k if x > 0 else x - k for x in w)


def _labels(f) -> int:
    return len(T.obj_flatten(T.src_obj(f)))


def _frames(a) -> list[Word]:
    src, tgt = T.boundary2(a)
    ws, wt = functor.word_of(src), functor.word_of(tgt)
    n = max(_labels(src), 1)
    if isinstance(a, _CONSTANT):
        if ws != wt:
            raise UnsupportedCell(f"{type(a).__name__} with unequal words")
        return [ws]
    if isinstance(a, (T.HexL, T.HexR, T.NatB, T.Interchange, T.Funct2)):
        return slide_movie(ws, wt, n)
    if isinstance(a, T.EtaB):
        return _cancel_frames(wt)[::-1]
    if isinstance(a, T.EpsB):
        return _cancel_frames(ws)
    if isinstance(a, T.Inv):
        return _frames(a.a)[::-1]
    if isinstance(a, T.VComp):
        f1, f2 = _frames(a.first), _frames(a.second)
        return f1 + f2[1:]
    if isinstance(a, T.HComp):
        f1, f2 = _frames(a.first), _frames(a.second)
        g = functor.word_of(T.boundary2(a.second)[0])
        return [w + g for w in f1] + [f1[-1] + w for w in f2[1:]]
    if isinstance(a, T.Tensor2):
        f1, f2 = _frames(a.a), _frames(a.b)
        k = _labels(T.boundary2(a.a)[0])
        tail = _shift(f2[0], k)
        return [w + tail for w in f1] + [f1[-1] + _shift(w, k) for w in f2[1:]]
    raise UnsupportedCell(f"no movie for {type(a).__name__}")


def compile_two_cell(a) -> Movie:
    """The braid movie of a 2-cell; its ends are the evaluated boundary words.

    Raises ``MalformedTerm`` for ill-typed terms and ``UnsupportedCell`` when a
    naturality instance cannot be realised by the built-in constructions."""
    src, _ = T.boundary2(a)
    n = max(_labels(src), 1)
    return Movie.from_frames(n, _frames(a))


# file formats


def movie_to_text(m: Movie, annotate: bool = True) -> str:
    lines = [f"n={m.strands}"]
    for i, w in enumerate(m.frames):
        if i and annotate and m.changes:
            lines.append(f"#change: {m.changes[i - 1]}")
        lines.append(letters_text(w))
    return "\n".join(lines) + "\n"


def _parse_change(text: str) -> ElementaryChange:
    parts = text.split()
    if not parts or parts[0] not in KINDS:
        raise MovieFormatError(f"unknown change {text!r}")
    kw = {}
    for p in parts[1:]:
        k, _, v = p.partition("=")
        kw[k] = int(v)
    return ElementaryChange(parts[0], kw.get("pos", 0), kw.get("j", 0), kw.get("e", 1), kw.get("variant", 0))


def movie_from_text(text: str) -> Movie:
    """Parse a movie file. When every transition is annotated with a
    ``#change:`` line the annotations are kept; otherwise changes are inferred."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].strip().startswith("n="):
        raise MovieFormatError("first line must be n=<int>")
    try:
        n = int(lines[0].strip()[2:])
    except ValueError:
        raise MovieFormatError("bad strand count") from None
    frames, changes = [], []
    for line in lines[1:]:
        if line.lstrip().startswith("#change:"):
            changes.append(_parse_change(line.split(":", 1)[1]))
        elif line.lstrip().startswith("#"):
            continue
        else:
            try:
                frames.append(parse_letters(line))
            except WordFormatError as e:
                raise MovieFormatError(str(e)) from None
    if not frames:
        raise MovieFormatError("no frames")
    if changes and len(changes) == len(frames) - 1:
        return Movie(n, tuple(frames), tuple(changes))
    try:
        return Movie.from_frames(n, frames)
    except InvalidChange:
        # keep the frames so validation can report where it fails
        return Movie(n, tuple(frames), ())


def certificate_from_text(text: str) -> Certificate:
    steps = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not parts[-1].startswith("@"):
            raise MovieFormatError(f"missing @frame in {raw!r}")
        frame = int(parts[-1][1:])
        move = parts[0]
        kw = dict(p.partition("=")[::2] for p in parts[1:-1])
        if move == "Locality":
            to = kw.get("to", "e")
            steps.append(Step("Locality", frame, to=() if to == "e" else parse_letters(to)))
            continue
        mods = tuple(m for m in kw.pop("mods", "-").split(",") if m and m != "-")
        direction = kw.pop("dir", ">")
        offset = int(kw.pop("off", 0))
        params = tuple(sorted((k, int(v)) for k, v in kw.items()))
        steps.append(Step(move, frame, offset, params, mods, direction))
    return Certificate(steps)
