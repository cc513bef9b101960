import subprocess
import sys

import numpy as np
import pytest

from bicoh import kernels
from bicoh.cubes import BraidPath, HexDelta, HexSource, HexTarget, center_frames

compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(),
                              reason="extension not built")


def _with(backend, fn, *args):
    old = kernels.BACKEND
    kernels.use_backend(backend)
    try:
        return fn(*args)
    finally:
        kernels.use_backend(old)


@compiled
@pytest.mark.parametrize("path", [BraidPath(), HexSource(), HexTarget(), HexDelta()], ids=lambda p: p.name)
def test_crossing_backends_agree(path):
    f = center_frames(path, 600)
    xs, ys = np.ascontiguousarray(f[:, :, 0]), np.ascontiguousarray(f[:, :, 1])
    a = _with("python", kernels.crossing_events, xs, ys, 1e-12)
    b = _with("compiled", kernels.crossing_events, xs, ys, 1e-12)
    assert list(a[0]) == list(b[0])
    assert [e[:3] for e in a[1]] == [e[:3] for e in b[1]]
    assert np.allclose([e[3:] for e in a[1]], [e[3:] for e in b[1]])


@compiled
def test_crossing_backends_reject_same_frames():
    xs = np.array([[0.2, 0.8], [0.5, 0.5], [0.8, 0.2]])
    ys = np.array([[0.5, 0.5], [0.4, 0.6], [0.5, 0.5]])
    for b in ("python", "compiled"):
        with pytest.raises(ValueError):
            _with(b, kernels.crossing_events, xs, ys, 1e-12)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_fallback_without_extension():
    code = ("import sys; sys.modules['bicoh._speedups'] = None\n"
            "from bicoh import kernels, are_equal, BraidWord\n"
            "assert kernels.BACKEND == 'python'\n"
            "assert are_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))\n"
            "print(kernels.available_backends())")
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip() == "['python']"
