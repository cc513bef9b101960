"""Command line interface: ``bicoh <subcommand> ...``.

Exit status is 0 for a true verdict or valid input, 1 for a false verdict
or invalid input, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cubes, movies
from . import terms as T
from .braids import letters_text
from .coherence import (crans_unit_checks, fourth_axiom_pastings, iso_exists,
                        triple, two_cells_equal)
from .functor import eval_one_cell
from .syntax import ParseError, parse_cell, parse_obj, parse_two, parse_any

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _word_text(letters) -> str:
    return ",".join(letters_text(letters).split()) or "(empty)"


def _braid_json(lb):
    return {"strands": lb.word.strands, "labels": list(lb.labels), "word": list(lb.word.letters)}


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _kind(t) -> str:
    if isinstance(t, T.OBJ_TYPES):
        return "object"
    if isinstance(t, T.ONE_CELL_TYPES):
        return "1-cell"
    return "2-cell"


def cmd_parse(args) -> int:
    term = parse_obj(args.term) if args.object else parse_any(args.term)
    gens = args.gens.split(",") if args.gens else None
    v = T.well_formed(term, gens)
    data = {"kind": _kind(term), "term": T.print_term(term), "well_formed": v.ok}
    lines = [f"{data['kind']} {data['term']}"]
    if not v.ok:
        data["error"] = v.message
        lines.append(f"malformed: {v.message}")
    elif data["kind"] == "1-cell":
        data["source"], data["target"] = T.print_obj(T.src_obj(term)), T.print_obj(T.tgt_obj(term))
        lines.append(f"{data['source']} -> {data['target']}")
    elif data["kind"] == "2-cell":
        s, t = T.boundary2(term)
        data["source"], data["target"] = T.print_cell(s), T.print_cell(t)
        lines.append(f"{data['source']} => {data['target']}")
    _emit(args, data, lines)
    return EXIT_TRUE if v.ok else EXIT_FALSE


def cmd_eval(args) -> int:
    f = parse_cell(args.term)
    lb = eval_one_cell(f)
    data = _braid_json(lb)
    line = f"n={lb.word.strands} labels={','.join(lb.labels)} word={_word_text(lb.word.letters)}"
    _emit(args, data, [line])
    return EXIT_TRUE


def _report(args, r) -> int:
    data = {"verdict": r.verdict, "reason": r.reason,
            "left": _braid_json(r.left_braid), "right": _braid_json(r.right_braid)}
    lines = [f"{'true' if r.verdict else 'false'} {r.reason}",
             f"left:  labels={','.join(r.left_braid.labels)} word={_word_text(r.left_braid.word.letters)}",
             f"right: labels={','.join(r.right_braid.labels)} word={_word_text(r.right_braid.word.letters)}"]
    _emit(args, data, lines)
    return EXIT_TRUE if r.verdict else EXIT_FALSE


def cmd_iso(args) -> int:
    return _report(args, iso_exists(parse_cell(args.f), parse_cell(args.g), args.flatten_objects))


def cmd_eq2(args) -> int:
    return _report(args, two_cells_equal(parse_two(args.a), parse_two(args.b)))


def cmd_compile(args) -> int:
    m = movies.compile_two_cell(parse_two(args.term))
    text = movies.movie_to_text(m)
    if args.json:
        print(json.dumps({"strands": m.strands, "frames": [list(w) for w in m.frames],
                          "changes": [str(c) for c in m.changes]}, sort_keys=True))
    else:
        sys.stdout.write(text)
    return EXIT_TRUE


def _load_movie(path: str) -> movies.Movie:
    try:
        return movies.movie_from_text(_read(path))
    except movies.MovieFormatError as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_movie_check(args) -> int:
    m = _load_movie(args.file)
    chk = movies.validate_movie(m)
    data = {"valid": chk.ok, "strands": m.strands, "frames": len(m.frames)}
    if chk.ok:
        lines = [f"valid n={m.strands} frames={len(m.frames)}"]
    else:
        data.update(index=chk.index, error=chk.message)
        lines = [f"invalid at change {chk.index}: {chk.message}"]
    _emit(args, data, lines)
    return EXIT_TRUE if chk.ok else EXIT_FALSE


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get("BICOH_BUDGET")
    if raw is None:
        return movies.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BICOH_BUDGET must be an integer, got {raw!r}") from None


def _search(args, a, b):
    for name, m in (("first", a), ("second", b)):
        chk = movies.validate_movie(m)
        if not chk:
            raise UsageError(f"{name} movie invalid at change {chk.index}: {chk.message}")
    if a.strands != b.strands or a.source != b.source or a.target != b.target:
        raise UsageError("movies must have the same strands and end frames")
    return movies.movie_equivalent(a, b, _budget(args), threads=args.threads, m4=args.enable_m4)


def _cert_lines(args, cert) -> list[str]:
    lines = [f"certificate: {len(cert)} steps"] + [f"  {s}" for s in cert.steps]
    if getattr(args, "cert_out", None):
        with open(args.cert_out, "w") as fh:
            fh.write(cert.to_text())
        lines.append(f"certificate written to {args.cert_out}")
    return lines


def cmd_movie_search(args) -> int:
    a, b = _load_movie(args.a), _load_movie(args.b)
    res = _search(args, a, b)
    if not res:
        data = {"found": False, "budget": res.budget, "explored": res.explored, "limit": res.reason}
        _emit(args, data, [f"not found within budget {res.budget} (explored {res.explored} movies)"])
        return EXIT_FALSE
    lines = _cert_lines(args, res)
    _emit(args, {"found": True, "steps": [str(s) for s in res.steps]}, lines)
    return EXIT_TRUE


def _axiom4(args, x) -> tuple[bool, dict, list[str]]:
    A, B, C = triple(x)
    left, right = fourth_axiom_pastings(A, B, C)
    ml, mr = movies.compile_two_cell(left), movies.compile_two_cell(right)
    res = movies.movie_equivalent(ml, mr, _budget(args), threads=args.threads, m4=args.enable_m4)
    eq = two_cells_equal(left, right)
    ok = bool(res) and eq.verdict
    data = {"axiom": "4", "object": T.print_obj(x),
            "left_movie": [list(w) for w in ml.frames], "right_movie": [list(w) for w in mr.frames],
            "certificate": [str(s) for s in res.steps] if res else None,
            "two_cells_equal": eq.verdict, "verdict": ok}
    lines = [f"axiom 4 on {T.print_obj(x)}: {'true' if ok else 'false'}",
             "left movie:  " + " | ".join(_word_text(w) for w in ml.frames),
             "right movie: " + " | ".join(_word_text(w) for w in mr.frames),
             f"two_cells_equal: {eq.reason}"]
    lines += _cert_lines(args, res) if res else [f"no certificate within budget {res.budget}"]
    return ok, data, lines


def cmd_axioms(args) -> int:
    results, lines, ok = {}, [], True
    if args.which in ("4", "all"):
        x = parse_obj(args.object)
        good, data, more = _axiom4(args, x)
        results["4"] = data
        lines += more
        ok &= good
    if args.which in ("crans", "all"):
        rep = crans_unit_checks()
        results["crans"] = {"verdict": rep.ok, "instances": rep.results,
                            "failures": [list(f) for f in rep.failures]}
        lines.append(f"crans unit conditions: {'true' if rep.ok else 'false'}")
        lines += [f"  {name}: {n} instances" for name, n in rep.results.items()]
        ok &= rep.ok
    _emit(args, {"verdict": ok, "results": results}, lines)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_cubes(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.path == "hex":
        try:
            rep = cubes.hex_paths_check(steps=max(args.samples, 2))
        except cubes.PathError as e:
            _emit(args, {"path": "hex", "valid": False, "error": str(e)}, [f"invalid: {e}"])
            return EXIT_FALSE
        data = {"path": "hex", "valid": rep.ok,
                "source": list(rep.source_word.letters), "target": list(rep.target_word.letters),
                "delta": list(rep.delta_word.letters), "homotopy_min_distance": rep.homotopy_min_distance}
        lines = [f"samples={args.samples} valid={'yes' if rep.ok else 'no'}",
                 f"source: {_word_text(rep.source_word.letters)}",
                 f"target: {_word_text(rep.target_word.letters)}",
                 f"delta: {_word_text(rep.delta_word.letters)}"]
        lines += [f"homotopy {k}: min distance {v:.6g}" for k, v in rep.homotopy_min_distance.items()]
        _emit(args, data, lines)
        return EXIT_TRUE if rep.ok else EXIT_FALSE
    shape = cubes.AssocPath(dim=args.dim) if args.path == "assoc" else cubes.BraidPath()
    try:
        cubes.sample_path(shape, args.samples)
    except cubes.PathError as e:
        _emit(args, {"path": args.path, "valid": False, "error": str(e)}, [f"invalid: {e}"])
        return EXIT_FALSE
    word = cubes.braid_of_path(shape, max(args.samples, 2))
    if args.emit_csv:
        with open(args.emit_csv, "w") as fh:
            cubes.emit_csv(shape, args.samples, fh)
    data = {"path": args.path, "samples": args.samples, "valid": True, "word": list(word.letters)}
    lines = [f"samples={args.samples} valid=yes", f"extracted: {_word_text(word.letters)}"]
    _emit(args, data, lines)
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for searches (results do not depend on it)")
    p = argparse.ArgumentParser(prog="bicoh", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", default=False)
    p.add_argument("--threads", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", parents=[common], help="parse and typecheck a term")
    s.add_argument("term")
    s.add_argument("--object", action="store_true", help="parse as an object")
    s.add_argument("--gens", help="comma-separated allowed generators")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("eval", parents=[common], help="evaluate a 1-cell to a labeled braid")
    s.add_argument("term")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("iso", parents=[common], help="decide whether two 1-cells are isomorphic")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--flatten-objects", action="store_true",
                   help="compare objects by their generator sequences")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("eq2", parents=[common], help="decide whether two 2-cells are equal")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_eq2)

    s = sub.add_parser("compile", parents=[common], help="print the braid movie of a 2-cell")
    s.add_argument("term")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("movie-check", parents=[common], help="validate a movie file")
    s.add_argument("file")
    s.set_defaults(func=cmd_movie_check)

    for name, func, help_ in (("movie-search", cmd_movie_search, "search for a certificate between two movies"),
                              ("axioms", cmd_axioms, "run the axiom suites")):
        s = sub.add_parser(name, parents=[common], help=help_)
        if name == "movie-search":
            s.add_argument("a")
            s.add_argument("b")
        else:
            s.add_argument("--which", choices=["4", "crans", "all"], default="all")
            s.add_argument("--object", default="x*x*x")
        s.add_argument("--budget", type=int, default=None, help="maximum certificate length")
        s.add_argument("--cert-out", help="write the certificate to this file")
        s.add_argument("--enable-m4", action="store_true", help="allow the tetrahedron move")
        s.set_defaults(func=func)

    s = sub.add_parser("cubes", parents=[common], help="sample a named path of little cubes")
    s.add_argument("--path", choices=["assoc", "braid", "hex"], required=True)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--dim", type=int, choices=[1, 2], default=2, help="dimension for the assoc path")
    s.add_argument("--emit-csv", help="write sampled cubes as CSV")
    s.set_defaults(func=cmd_cubes)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError) as e:
        print(f"bicoh: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
