import io
import math
from fractions import Fraction as F

import numpy as np
import pytest

from bicoh.braids import BraidWord, are_equal
from bicoh.cubes import (M1, M2, AssocPath, BraidPath, CubeError, HexDelta, HexSource, HexTarget,
                         LittleCube, NonGenericPath, PathError, PiecewiseLinear, braid_of_path,
                         center_frames, config_valid, emit_csv, extract_braid, hex_paths_check,
                         left_triple, make_config, operad_compose, right_triple, sample_path,
                         unit_config)


def centers(c):
    return [cube.center()[0] for cube in c.cubes]


def lengths(c):
    return [cube.intervals[0][1] - cube.intervals[0][0] for cube in c.cubes]


def test_left_triple_exact():
    c = operad_compose(M1, [M1, unit_config(1)])
    assert centers(c) == [F(13, 50), F(17, 50), F(35, 50)]
    assert lengths(c) == [F(1, 25), F(1, 25), F(1, 5)]


def test_right_triple_exact():
    c = operad_compose(M1, [unit_config(1), M1])
    assert centers(c) == [F(15, 50), F(33, 50), F(37, 50)]
    assert lengths(c) == [F(1, 5), F(1, 25), F(1, 25)]


def test_composition_is_associative():
    a = operad_compose(M2, [operad_compose(M2, [M2, unit_config(2)]), M2])
    b = operad_compose(operad_compose(M2, [M2, unit_config(2)]), [M2, unit_config(2), M2])
    assert a == b


def test_composition_arity_checked():
    with pytest.raises(CubeError):
        operad_compose(M1, [M1])


def test_bad_cubes_rejected():
    with pytest.raises(CubeError):
        LittleCube(((0.5, 0.2),))
    with pytest.raises(CubeError):
        LittleCube(((0, 1.2),))


def test_overlap_detection():
    assert config_valid(M2)
    assert not config_valid(make_config(((0, 0.5),), ((0.4, 0.9),)))
    assert config_valid(make_config(((0, 0.5),), ((0.5, 0.9),)))
    assert not config_valid(make_config(((0, 0.5),), ((0.5, 0.9),)), margin=0.01)


def test_assoc_path_hits_both_triples():
    p = AssocPath(dim=1)
    for t, target in ((0, left_triple(1)), (1, right_triple(1))):
        got = p.config(t)
        for a, b in zip(got.cubes, target.cubes):
            assert np.allclose(np.array(a.intervals, float), np.array(b.intervals, float), atol=1e-12)
    assert len(sample_path(p, 200)) == 200


def test_path_words():
    assert braid_of_path(AssocPath()).letters == ()
    assert are_equal(braid_of_path(BraidPath()), BraidWord(2, (1,)))


def _swap(direction):
    # two points exchange places, the left one passing on the low side when direction is 1
    ts = np.linspace(0, 1, 100)
    a = np.stack([0.5 - 0.2 * np.cos(math.pi * ts), 0.5 - direction * 0.2 * np.sin(math.pi * ts)], 1)
    b = np.stack([0.5 + 0.2 * np.cos(math.pi * ts), 0.5 + direction * 0.2 * np.sin(math.pi * ts)], 1)
    return np.stack([a, b], 1)


def test_extract_swap_directions():
    assert extract_braid(_swap(1)).letters == (1,)
    assert extract_braid(_swap(-1)).letters == (-1,)
    there_and_back = np.concatenate([_swap(1), _swap(1)[::-1][1:]])
    assert extract_braid(there_and_back).letters == (1, -1)


def test_extract_rejects_collision():
    ts = np.linspace(0, 1, 11)
    a = np.stack([0.2 + 0.6 * ts, 0.5 + 0 * ts], 1)
    b = np.stack([0.8 - 0.6 * ts, 0.5 + 0 * ts], 1)
    with pytest.raises(NonGenericPath):
        extract_braid(np.stack([a, b], 1))


def test_hex_paths():
    r = hex_paths_check(grid=100)
    assert r.ok
    for w in (r.source_word, r.target_word, r.delta_word):
        assert are_equal(w, BraidWord(3, (1, 2)))
    assert min(r.homotopy_min_distance.values()) > 0.05


def test_hex_paths_stay_in_square():
    for p in (HexSource(), HexTarget(), HexDelta()):
        frames = sample_path(p, 301)
        assert all(config_valid(c) for c in frames)


def test_linear_path_through_collision_fails():
    a = make_config(((0.1, 0.2), (0.4, 0.5)), ((0.7, 0.8), (0.4, 0.5)))
    b = make_config(((0.7, 0.8), (0.4, 0.5)), ((0.1, 0.2), (0.4, 0.5)))
    with pytest.raises(PathError) as e:
        sample_path(PiecewiseLinear(keyframes=(a, b)), 101)
    assert 0 < e.value.t < 1


def test_centers_shape():
    assert center_frames(HexSource(), 50).shape == (50, 3, 2)


def test_csv_rows_round_trip():
    buf = io.StringIO()
    n = emit_csv(BraidPath(), 11, buf)
    rows = [line.split(",") for line in buf.getvalue().splitlines()]
    assert n == len(rows) == 22
    assert all(len(r) == 6 for r in rows)
    t, i, cx, cy = float(rows[3][0]), int(rows[3][1]), float(rows[3][2]), float(rows[3][3])
    assert (cx, cy) == BraidPath().centers(t)[i]


def test_segment_local_parameter_is_needed():
    # reading the middle segment with the global parameter 2t-1 instead of t-1
    def literal(t):
        return (17 + 16 * (2 * t - 1)) / 50
    end_of_first = HexSource().centers(1.0 - 1e-12)[0][0]
    assert abs(literal(1.0) - end_of_first) > 0.3
    assert literal(2.0) > 1
    ours = HexSource()
    for t in (1.0, 2.0):
        before, after = ours.centers(t - 1e-9), ours.centers(t)
        assert max(abs(a - b) for p, q in zip(before, after) for a, b in zip(p, q)) < 1e-6
