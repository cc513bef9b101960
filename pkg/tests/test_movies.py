import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from bicoh import terms as T
from bicoh.braids import BraidWord, are_equal, exponent_sum, perm_of
from bicoh.movies import (MOVES, Certificate, ElementaryChange, InvalidChange, InvalidStep, Movie,
                          MovieFormatError, NotFoundWithinBudget, Step, UnsupportedCell,
                          apply_change, apply_move, catalog, certificate_from_text,
                          changes_between, check_certificate, compile_two_cell, enable_m4,
                          instantiate, m4_enabled, movie_equivalent, movie_from_text,
                          movie_to_text, slide_movie, validate_movie)
from bicoh.syntax import parse_two
from bicoh.functor import word_of


@pytest.fixture
def m4():
    old = m4_enabled()
    enable_m4(True)
    yield
    enable_m4(old)


def move(name):
    return next(m for m in MOVES if m.name == name)


def smallest(m):
    for vals in itertools.product(range(1, 8), repeat=len(m.symbols)):
        if m.cond(*vals):
            return dict(zip(m.symbols, vals))


# elementary changes

def test_pair_insert_and_delete():
    m = Movie(2, ((), (1, -1), ()), (ElementaryChange("PairInsert", 0, 1, 1),
                                     ElementaryChange("PairDelete", 0, 1, 1)))
    assert validate_movie(m)


def test_braid_relation_change():
    m = Movie(3, ((1, 2, 1), (2, 1, 2)), (ElementaryChange("BraidRelation", 0),))
    assert validate_movie(m)


def test_single_letter_insertion_is_not_a_change():
    assert changes_between((), (1,)) == []
    for kind in ("PairInsert", "FarCommute", "BraidRelation", "Equal"):
        m = Movie(2, ((), (1,)), (ElementaryChange(kind, 0, 1, 1),))
        chk = validate_movie(m)
        assert not chk and chk.index == 0


def test_far_commute_needs_distant_generators():
    assert apply_change((1, 3), ElementaryChange("FarCommute", 0), 4) == (3, 1)
    with pytest.raises(InvalidChange):
        apply_change((1, 2), ElementaryChange("FarCommute", 0), 4)


def test_mixed_sign_braid_relations():
    # s1 s2 S1 = S2 s1 s2 and its reverse
    assert apply_change((1, 2, -1), ElementaryChange("BraidRelation", 0, variant=1), 3) == (-2, 1, 2)
    assert apply_change((-2, 1, 2), ElementaryChange("BraidRelation", 0, variant=2), 3) == (1, 2, -1)
    with pytest.raises(InvalidChange):
        apply_change((1, 2, 1), ElementaryChange("BraidRelation", 0, variant=1), 3)


def test_validation_reports_first_bad_transition():
    m = Movie(3, ((1, 2, 1), (2, 1, 2), (1, 1)), (ElementaryChange("BraidRelation", 0),
                                                 ElementaryChange("PairDelete", 0, 2, 1)))
    chk = validate_movie(m)
    assert not chk and chk.index == 1


def test_letters_must_fit_strands():
    assert not validate_movie(Movie(2, ((2,),), ()))


@given(st.integers(0, 2 ** 32))
def test_frames_of_valid_movies_are_equal_braids(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    w = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6)))
    frames = [w]
    for _ in range(30):
        opts = []
        for p in range(len(w) + 1):
            for g in range(1, n):
                for e in (1, -1):
                    opts.append(ElementaryChange("PairInsert", p, g, e))
            opts.append(ElementaryChange("FarCommute", p))
            opts.append(ElementaryChange("PairDelete", p, abs(w[p]) if p < len(w) else 1,
                                         (1 if w[p] > 0 else -1) if p < len(w) else 1))
            for v in range(3):
                opts.append(ElementaryChange("BraidRelation", p, variant=v))
        rng.shuffle(opts)
        for ch in opts:
            try:
                w = apply_change(w, ch, n)
                break
            except InvalidChange:
                continue
        frames.append(w)
    m = Movie.from_frames(n, frames)
    assert validate_movie(m)
    first = BraidWord(n, frames[0])
    for f in frames[1:]:
        b = BraidWord(n, f)
        assert are_equal(first, b)
        assert perm_of(b) == perm_of(first) and exponent_sum(b) == exponent_sum(first)


# the move catalog

@pytest.mark.parametrize("m", MOVES, ids=lambda m: m.name)
def test_move_sides_are_valid_movies_with_shared_ends(m, m4):
    n = max(max(smallest(m).values()) + 1, 2)
    for mods in [(), ("inv",), ("pal",), ("rev",), ("inv", "pal", "rev")]:
        left, right = instantiate(m, smallest(m), mods)
        a, b = Movie.from_frames(n, left), Movie.from_frames(n, right)
        assert validate_movie(a) and validate_movie(b)
        assert a.source == b.source and a.target == b.target


def test_catalog_sides_valid_on_five_strands(m4):
    for e in catalog(5):
        assert validate_movie(Movie.from_frames(5, e.source))
        assert e.source[0] == e.target[0] and e.source[-1] == e.target[-1]


def _bridges(w1, w2):
    """Words one elementary change away from both ``w1`` and ``w2``."""
    letters = sorted(set(map(abs, w1 + w2)))
    out = set()
    for cand in itertools.product(letters, repeat=len(w1)):
        if changes_between(w1, cand) and changes_between(cand, w2) and cand not in (w1, w2):
            out.add(cand)
    return out


def test_corrected_tetrahedron_frames_are_forced(m4):
    left, right = instantiate(move("CI-M4"), {"i": 1, "j": 2, "k": 3})
    # the second and seventh frames are the only words bridging their neighbours
    assert _bridges(right[0], right[2]) == {right[1]}
    assert _bridges(right[5], right[7]) == {right[6]}
    assert right[1] == (1, 2, 3, 2, 1, 2)
    assert right[6] == (3, 2, 1, 3, 2, 3)


def test_tetrahedron_is_gated():
    old = m4_enabled()
    enable_m4(False)
    try:
        assert all(e.move != "CI-M4" for e in catalog(4))
        left, _ = instantiate(move("CI-M4"), {"i": 1, "j": 2, "k": 3})
        with pytest.raises(InvalidStep):
            apply_move(Movie.from_frames(4, left), Step("CI-M4", 0, 0, (("i", 1), ("j", 2), ("k", 3))))
    finally:
        enable_m4(old)


def test_apply_m3_collapses_to_constant():
    a = Movie.from_frames(3, [(1, 2, 1), (2, 1, 2), (1, 2, 1)])
    b = apply_move(a, Step("CI-M3", 0, 0, (("i", 1), ("j", 2))))
    assert b.frames == ((1, 2, 1),)


def test_apply_r2_in_context():
    a = Movie.from_frames(5, [(2, 1, 3), (2, 3, 1), (2, 1, 3)])
    b = apply_move(a, Step("CI-R2", 0, 1, (("i", 1), ("j", 3))))
    assert b.frames == ((2, 1, 3),)


def test_side_conditions_enforced():
    a = Movie.from_frames(3, [(1, 2)])
    with pytest.raises(InvalidStep):
        apply_move(a, Step("CI-R2", 0, 0, (("i", 1), ("j", 2))))


def test_modifier_inverts_letters():
    a = Movie.from_frames(3, [(-1, -2, -1), (-2, -1, -2), (-1, -2, -1)])
    b = apply_move(a, Step("CI-M3", 0, 0, (("i", 1), ("j", 2)), ("inv",)))
    assert b.frames == ((-1, -2, -1),)
    with pytest.raises(InvalidStep):
        apply_move(a, Step("CI-M3", 0, 0, (("i", 1), ("j", 2))))


def test_locality_swaps_independent_changes():
    a = Movie.from_frames(5, [(), (1, -1), (1, -1, 4, -4)])
    b = apply_move(a, Step("Locality", 1, to=(4, -4)))
    assert b.frames == ((), (4, -4), (1, -1, 4, -4))
    with pytest.raises(InvalidStep):
        apply_move(a, Step("Locality", 1, to=(2, -2)))


# search and certificates

@pytest.mark.parametrize("m", MOVES, ids=lambda m: m.name)
def test_one_step_certificates(m, m4):
    p = smallest(m)
    n = max(p.values()) + 1
    left, right = instantiate(m, p)
    a, b = Movie.from_frames(n, left), Movie.from_frames(n, right)
    cert = movie_equivalent(a, b, budget=8)
    assert isinstance(cert, Certificate) and len(cert) == 1
    assert cert.steps[0].move == m.name
    assert check_certificate(a, b, cert)


def test_identical_movies_give_empty_certificate():
    a = Movie.from_frames(3, [(1, 2, 1), (2, 1, 2)])
    cert = movie_equivalent(a, a)
    assert isinstance(cert, Certificate) and len(cert) == 0
    assert check_certificate(a, a, cert)


def test_endpoint_mismatch_is_an_error():
    a = Movie.from_frames(3, [(1, 2, 1)])
    b = Movie.from_frames(3, [(1, 2, 1), (2, 1, 2)])
    with pytest.raises(ValueError):
        movie_equivalent(a, b)


def test_budget_exhaustion():
    a = Movie.from_frames(4, [(), (1, -1), ()])
    b = Movie.from_frames(4, [(), (3, -3), ()])
    r = movie_equivalent(a, b, budget=1)
    assert isinstance(r, NotFoundWithinBudget) and not r
    r = movie_equivalent(a, b, budget=4)
    assert check_certificate(a, b, r)


def test_corrupted_certificate_rejected():
    a = Movie.from_frames(3, [(1, 2, 1), (2, 1, 2), (1, 2, 1)])
    b = Movie.from_frames(3, [(1, 2, 1)])
    cert = movie_equivalent(a, b, budget=8)
    bad = Certificate([Step(s.move, s.frame + 1, s.offset, s.params, s.mods, s.direction)
                       for s in cert.steps])
    assert check_certificate(a, b, cert)
    assert not check_certificate(a, b, bad)


def test_threads_do_not_change_certificate():
    a = Movie.from_frames(4, [(), (1, -1), (1, -1, 3, -3), (3, -3), ()])
    b = Movie.from_frames(4, [(), (3, -3), ()])
    c1 = movie_equivalent(a, b, budget=12)
    c4 = movie_equivalent(a, b, budget=12, threads=4)
    assert c1.to_text() == c4.to_text()
    assert check_certificate(a, b, c1)


@settings(max_examples=40)
@given(st.integers(0, 2 ** 32))
def test_search_soundness(seed):
    rng = random.Random(seed)
    entries = catalog(4, m4=False)
    e = rng.choice(entries)
    ctx = tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 2)))
    a = Movie.from_frames(4, [ctx + w for w in e.source])
    b = Movie.from_frames(4, [ctx + w for w in e.target])
    cert = movie_equivalent(a, b, budget=4)
    assert cert and check_certificate(a, b, cert)


# compiling 2-cells

@pytest.mark.parametrize("text", [
    "id2[R[x,y]]", "hexL[x,y,z]", "hexR[x,y,z]", "pi[x,y,z,w]", "etaB[x,y]", "epsB[x,y]",
    "natB[R[x,y], id[z]]", "interchange[R[x,y], R[z,w]]", "inv[hexL[x,y,z]] ; inv[inv[hexL[x,y,z]]]",
    "etaB[x,y] * id2[R[z,w]]", "id2[R[y,x]] . etaB[x,y]",
])
def test_compiled_ends_match_boundaries(text):
    a = parse_two(text)
    m = compile_two_cell(a)
    assert validate_movie(m)
    s, t = T.boundary2(a)
    assert m.source == word_of(s) and m.target == word_of(t)


def test_unit_braiding_cells_compile():
    m = compile_two_cell(parse_two("etaB[x,y]"))
    assert m.frames == ((), (1, -1))


def test_hexagonator_compiles_to_constant():
    m = compile_two_cell(parse_two("hexL[x,y,z]"))
    assert m.frames == ((1, 2),)


def test_malformed_two_cell():
    with pytest.raises(T.MalformedTerm):
        compile_two_cell(parse_two("hexL[x,y,z] ; hexL[x,y,z]"))


def test_sliding_needs_length_preserving_route():
    assert slide_movie((1, 2, 1), (2, 1, 2), 3) == [(1, 2, 1), (2, 1, 2)]
    with pytest.raises(UnsupportedCell):
        slide_movie((1, -1), (2, -2), 3)


# file formats

def test_movie_text_round_trip():
    m = Movie.from_frames(3, [(), (1, -1), (1, 2, -2, -1)])
    text = movie_to_text(m)
    assert text.splitlines()[0] == "n=3"
    assert "#change: PairInsert j=1 e=1 pos=0" in text
    assert movie_from_text(text) == m
    bare = movie_from_text(movie_to_text(m, annotate=False))
    assert bare.frames == m.frames and validate_movie(bare)


def test_movie_text_errors():
    with pytest.raises(MovieFormatError):
        movie_from_text("s1\n")
    with pytest.raises(MovieFormatError):
        movie_from_text("n=3\nq1\n")


def test_certificate_text_round_trip():
    cert = Certificate([Step("CI-M3", 0, 1, (("i", 1), ("j", 2)), ("inv",), "<"),
                        Step("Locality", 2, to=(1, -2)), Step("Locality", 1, to=())])
    assert certificate_from_text(cert.to_text()) == cert
