"""Little 1- and 2-cubes: configurations, operad composition, named paths
in configuration space and the braids they trace out.

Coordinates may be ``Fraction`` (exact) or ``float``. Braid extraction
reads crossings from the x-order of cube centers; when two centers swap
x-order, the one that was on the left passing with the smaller y gives a
positive generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .braids import BraidWord, are_equal
from . import kernels

DISJOINT_MARGIN = 1e-9
POINT_TOL = 1e-6

F = Fraction


class CubeError(ValueError):
    pass


class PathError(CubeError):
    def __init__(self, message: str, t: float):
        super().__init__(f"{message} (t={t:.17g})")
        self.t = t


class NonGenericPath(CubeError):
    pass


@dataclass(frozen=True)
class LittleCube:
    intervals: tuple[tuple, ...]

    def __post_init__(self) -> None:
        if len(self.intervals) not in (1, 2):
            raise CubeError("cubes have dimension 1 or 2")
        for lo, hi in self.intervals:
            if not 0 <= lo < hi <= 1:
                raise CubeError(f"bad interval ({lo}, {hi})")

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def center(self) -> tuple:
        return tuple((lo + hi) / 2 for lo, hi in self.intervals)

    def half_sizes(self) -> tuple:
        return tuple((hi - lo) / 2 for lo, hi in self.intervals)


def separation(a: LittleCube, b: LittleCube):
    """Largest gap between the two cubes along any axis (negative if they overlap)."""
    return max(max(lb - ha, la - hb) for (la, ha), (lb, hb) in zip(a.intervals, b.intervals))


@dataclass(frozen=True)
class CubeConfig:
    dim: int
    cubes: tuple[LittleCube, ...]

    def __post_init__(self) -> None:
        for c in self.cubes:
            if c.dim != self.dim:
                raise CubeError("cube dimension does not match configuration")

    def __len__(self) -> int:
        return len(self.cubes)


def config_valid(c: CubeConfig, margin=0) -> bool:
    """Interiors pairwise disjoint, with at least ``margin`` of clearance."""
    n = len(c.cubes)
    return all(separation(c.cubes[i], c.cubes[j]) >= margin
               for i in range(n) for j in range(i + 1, n))


def make_config(*boxes) -> CubeConfig:
    cubes = tuple(LittleCube(tuple(tuple(iv) for iv in b)) for b in boxes)
    return CubeConfig(cubes[0].dim, cubes)


def unit_config(dim: int) -> CubeConfig:
    return make_config(((0, 1),) * dim)


def operad_compose(outer: CubeConfig, inners: list[CubeConfig]) -> CubeConfig:
    """Insert ``inners[i]`` into the i-th cube of ``outer``."""
    if len(inners) != len(outer.cubes):
        raise CubeError(f"need {len(outer.cubes)} inner configurations, got {len(inners)}")
    out = []
    for cube, inner in zip(outer.cubes, inners):
        if inner.dim != outer.dim:
            raise CubeError("dimension mismatch in composition")
        for e in inner.cubes:
            out.append(LittleCube(tuple(
                (lo + (hi - lo) * a, lo + (hi - lo) * b)
                for (lo, hi), (a, b) in zip(cube.intervals, e.intervals))))
    return CubeConfig(outer.dim, tuple(out))


# the binary element used for every tensor product
M1 = make_config(((F(1, 5), F(2, 5)),), ((F(3, 5), F(4, 5)),))
M2 = make_config(((F(1, 5), F(2, 5)), (F(2, 5), F(3, 5))),
                 ((F(3, 5), F(4, 5)), (F(2, 5), F(3, 5))))


def binary(dim: int) -> CubeConfig:
    return M1 if dim == 1 else M2


def left_triple(dim: int) -> CubeConfig:
    """Cubes of ``(xy)z``."""
    m = binary(dim)
    return operad_compose(m, [m, unit_config(dim)])


def right_triple(dim: int) -> CubeConfig:
    """Cubes of ``x(yz)``."""
    m = binary(dim)
    return operad_compose(m, [unit_config(dim), m])


# paths


def _circle(cx, cy, r, angle):
    return cx + r * math.cos(angle), cy + r * math.sin(angle)


@dataclass(frozen=True)
class PathSpec:
    """A path of k cubes; ``centers(t)`` and ``half_sizes(t)`` for t in [0, duration]."""

    name: str = "path"
    dim: int = 2
    duration: float = 1.0
    count: int = 0

    def centers(self, t: float) -> list[tuple[float, ...]]:
        raise NotImplementedError

    def half_sizes(self, t: float) -> list[tuple[float, ...]]:
        raise NotImplementedError

    def config(self, t: float) -> CubeConfig:
        cubes = []
        for c, h in zip(self.centers(t), self.half_sizes(t)):
            cubes.append(LittleCube(tuple((ci - hi, ci + hi) for ci, hi in zip(c, h))))
        return CubeConfig(self.dim, tuple(cubes))


@dataclass(frozen=True)
class AssocPath(PathSpec):
    """From the cubes of ``(xy)z`` to those of ``x(yz)``."""

    name: str = "assoc"
    dim: int = 2
    count: int = 3

    def centers(self, t):
        xs = ((13 + 2 * t) / 50, (17 + 16 * t) / 50, (35 + 2 * t) / 50)
        return [(x,) if self.dim == 1 else (x, 0.5) for x in xs]

    def half_sizes(self, t):
        ls = ((1 + 4 * t) / 25, 1 / 25, (5 - 4 * t) / 25)
        return [(s / 2,) * self.dim for s in ls]


@dataclass(frozen=True)
class BraidPath(PathSpec):
    """Two cubes of side 1/5 swapping places on a circle of radius 1/5."""

    name: str = "braid"
    count: int = 2

    def centers(self, t):
        a = math.pi * t
        return [_circle(0.5, 0.5, 0.2, math.pi + a), _circle(0.5, 0.5, 0.2, a)]

    def half_sizes(self, t):
        return [(0.1, 0.1)] * 2


HEX_HALF = 0.005


def _segment(t: float) -> tuple[int, float]:
    """Segment index and local parameter for t in [0, 3]."""
    k = min(int(t), 2)
    return k, t - k


@dataclass(frozen=True)
class HexSource(PathSpec):
    """Swap x,y; reassociate; swap x,z. Centers only, small cubes."""

    name: str = "hex-source"
    duration: float = 3.0
    count: int = 3

    def centers(self, t):
        k, u = _segment(t)
        pi = math.pi
        if k == 0:
            return [_circle(0.3, 0.5, 1 / 25, pi + pi * u),
                    _circle(0.3, 0.5, 1 / 25, pi * u), (0.7, 0.5)]
        if k == 1:
            return [((17 + 16 * u) / 50, 0.5), ((13 + 2 * u) / 50, 0.5), ((35 + 2 * u) / 50, 0.5)]
        return [_circle(0.7, 0.5, 1 / 25, pi + pi * u), (0.3, 0.5),
                _circle(0.7, 0.5, 1 / 25, pi * u)]

    def half_sizes(self, t):
        return [(HEX_HALF, HEX_HALF)] * 3


@dataclass(frozen=True)
class HexTarget(PathSpec):
    """Reassociate; x past the pair y,z; reassociate."""

    name: str = "hex-target"
    duration: float = 3.0
    count: int = 3

    def centers(self, t):
        k, u = _segment(t)
        pi = math.pi
        if k == 0:
            return [((13 + 2 * u) / 50, 0.5), ((17 + 16 * u) / 50, 0.5), ((35 + 2 * u) / 50, 0.5)]
        if k == 1:
            return [_circle(0.5, 0.5, 0.2, pi + pi * u),
                    _circle(23 / 50, 0.5, 0.2, pi * u),
                    _circle(27 / 50, 0.5, 0.2, pi * u)]
        return [((35 + 2 * u) / 50, 0.5), ((13 + 2 * u) / 50, 0.5), ((17 + 16 * u) / 50, 0.5)]

    def half_sizes(self, t):
        return [(HEX_HALF, HEX_HALF)] * 3


@dataclass(frozen=True)
class HexDelta(PathSpec):
    """x along one arc under y and z, each on its own arc above."""

    name: str = "hex-delta"
    duration: float = 3.0
    count: int = 3

    def centers(self, t):
        pi = math.pi
        a = pi * t / 3
        return [_circle(0.5, 0.5, 6 / 25, pi + a),
                _circle(0.3, 0.5, 2 / 25, a),
                _circle(17 / 25, 0.5, 1 / 50, a)]

    def half_sizes(self, t):
        return [(HEX_HALF, HEX_HALF)] * 3


@dataclass(frozen=True)
class PiecewiseLinear(PathSpec):
    """Linear interpolation between keyframe configurations at times 0..m-1."""

    name: str = "piecewise"
    keyframes: tuple = field(default=())

    def __post_init__(self) -> None:
        if len(self.keyframes) < 2:
            raise CubeError("need at least two keyframes")
        object.__setattr__(self, "duration", float(len(self.keyframes) - 1))
        object.__setattr__(self, "count", len(self.keyframes[0].cubes))
        object.__setattr__(self, "dim", self.keyframes[0].dim)

    def _pair(self, t):
        k = min(int(t), len(self.keyframes) - 2)
        return self.keyframes[k], self.keyframes[k + 1], t - k

    def centers(self, t):
        a, b, u = self._pair(t)
        return [tuple(float(p) + u * (float(q) - float(p)) for p, q in zip(ca.center(), cb.center()))
                for ca, cb in zip(a.cubes, b.cubes)]

    def half_sizes(self, t):
        a, b, u = self._pair(t)
        return [tuple(float(p) + u * (float(q) - float(p)) for p, q in zip(ca.half_sizes(), cb.half_sizes()))
                for ca, cb in zip(a.cubes, b.cubes)]


NAMED_PATHS = {
    "assoc": AssocPath, "braid": BraidPath, "hex-source": HexSource,
    "hex-target": HexTarget, "hex-delta": HexDelta,
}


def sample_times(p: PathSpec, steps: int) -> np.ndarray:
    if steps < 2:
        raise CubeError("need at least 2 samples")
    return np.linspace(0.0, p.duration, steps)


def sample_path(p: PathSpec, steps: int) -> list[CubeConfig]:
    """Sampled configurations; raises ``PathError`` at the first bad frame."""
    out = []
    for t in sample_times(p, steps):
        try:
            c = p.config(float(t))
        except CubeError as e:
            raise PathError(str(e), float(t)) from None
        if not config_valid(c, DISJOINT_MARGIN):
            raise PathError("cubes overlap", float(t))
        out.append(c)
    return out


def center_frames(p: PathSpec, steps: int) -> np.ndarray:
    """Array of shape (steps, k, 2) of cube centers."""
    return np.array([p.centers(float(t)) for t in sample_times(p, steps)], dtype=float)


def extract_braid(frames) -> BraidWord:
    """Braid word traced by moving points; ``frames`` has shape (T, k, 2).

    Raises ``NonGenericPath`` when two points share an x-coordinate at a
    sampled frame or cross without a clear over/under."""
    arr = np.asarray(frames, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise CubeError("frames must have shape (T, k, 2)")
    k = arr.shape[1]
    try:
        _, events = kernels.crossing_events(arr[:, :, 0], arr[:, :, 1], 1e-12)
    except ValueError as e:
        raise NonGenericPath(str(e)) from None
    letters = []
    for pos, _, _, y_left, y_right in events:
        letters.append(pos + 1 if y_left < y_right else -(pos + 1))
    return BraidWord(max(k, 1), tuple(letters))


def braid_of_path(p: PathSpec, steps: int = 400, retries: int = 8) -> BraidWord:
    """Extract the braid of a named 2-dimensional path, resampling with a
    different step count when a sampled frame is not generic."""
    if p.dim != 2:
        return BraidWord(max(p.count, 1), ())
    last = None
    for r in range(retries):
        try:
            return extract_braid(center_frames(p, steps + r))
        except NonGenericPath as e:
            last = e
    raise last


def min_point_distance(frames) -> float:
    arr = np.asarray(frames, dtype=float)
    k = arr.shape[-2]
    best = math.inf
    for i in range(k):
        for j in range(i + 1, k):
            d = np.hypot(arr[..., i, 0] - arr[..., j, 0], arr[..., i, 1] - arr[..., j, 1])
            best = min(best, float(d.min()))
    return best


@dataclass
class HexReport:
    source_word: BraidWord
    target_word: BraidWord
    delta_word: BraidWord
    words_agree: bool
    source_min_distance: float
    target_min_distance: float
    homotopy_min_distance: dict

    @property
    def ok(self) -> bool:
        return self.words_agree and all(v > POINT_TOL for v in self.homotopy_min_distance.values())


def _homotopy_min(a: PathSpec, b: PathSpec, grid: int):
    """Smallest point separation over the straight-line homotopy from a to b,
    with the (s, t) grid point where it occurs."""
    ts = np.linspace(0.0, a.duration, grid)
    pa = np.array([a.centers(float(t)) for t in ts])
    pb = np.array([b.centers(float(t)) for t in ts])
    s = np.linspace(0.0, 1.0, grid)[:, None, None, None]
    h = (1 - s) * pa[None] + s * pb[None]  # (s, t, k, 2)
    best, where = math.inf, (0.0, 0.0)
    k = pa.shape[1]
    for i in range(k):
        for j in range(i + 1, k):
            d = np.hypot(h[..., i, 0] - h[..., j, 0], h[..., i, 1] - h[..., j, 1])
            idx = np.unravel_index(np.argmin(d), d.shape)
            if d[idx] < best:
                best = float(d[idx])
                where = (float(s[idx[0], 0, 0, 0]), float(ts[idx[1]]))
    return best, where


def hex_paths_check(grid: int = 100, steps: int = 600) -> HexReport:
    """Braids of the hexagon paths agree, and both straight-line homotopies
    (source to delta, delta to target) keep the points apart on the grid.
    Raises ``PathError`` naming the offending (s, t) otherwise."""
    src, tgt, dlt = HexSource(), HexTarget(), HexDelta()
    ws, wt, wd = (braid_of_path(p, steps) for p in (src, tgt, dlt))
    agree = are_equal(ws, wt) and are_equal(ws, wd)
    h1, at1 = _homotopy_min(src, dlt, grid)
    h2, at2 = _homotopy_min(dlt, tgt, grid)
    report = HexReport(
        ws, wt, wd, agree,
        min_point_distance(center_frames(src, steps)),
        min_point_distance(center_frames(tgt, steps)),
        {"source-delta": h1, "delta-target": h2},
    )
    for name, d, at in (("source-delta", h1, at1), ("delta-target", h2, at2)):
        if d <= POINT_TOL:
            raise PathError(f"points meet on the {name} homotopy at s={at[0]:.6g}", at[1])
    return report


def emit_csv(p: PathSpec, steps: int, out) -> int:
    """Write ``t, cube_index, center..., half_size...`` rows; returns row count."""
    rows = 0
    for t in sample_times(p, steps):
        for i, (c, h) in enumerate(zip(p.centers(float(t)), p.half_sizes(float(t)))):
            vals = [float(t), i, *c, *h]
            out.write(",".join(str(v) if isinstance(v, int) else f"{v:.17g}" for v in vals) + "\n")
            rows += 1
    return rows
