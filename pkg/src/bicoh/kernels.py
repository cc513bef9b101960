"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. ``use_backend`` switches explicitly (benchmarks and tests).
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

_INT64_SAFE = 1 << 58

BACKEND = "compiled" if _speedups is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _speedups is not None else [])


def use_backend(name: str) -> None:
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available")
    BACKEND = name


def dynnikov_apply(coords: list[int], letters: tuple[int, ...]) -> list[int]:
    if BACKEND == "compiled" and all(abs(c) < _INT64_SAFE for c in coords):
        out, done = _speedups.dynnikov_apply(coords, letters)
        if done == len(letters):
            return out
        # int64 headroom exhausted; finish exactly with Python integers
        return _kernels_py.dynnikov_apply(out, letters[done:])
    return _kernels_py.dynnikov_apply(coords, letters)


def crossing_events(xs, ys, tol: float = 1e-12):
    if BACKEND == "compiled":
        return _speedups.crossing_events(xs, ys, tol)
    return _kernels_py.crossing_events(xs, ys, tol)
