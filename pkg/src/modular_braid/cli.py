"""
Command-line front end.

Matrices are written row-major as ``"a b c d"``; words as ``"A^-3 B A^2"``
(``a``/``b`` for braids, ``g1``/``g2`` for the derived subgroup).  With
``--json`` inputs and outputs use ``{"m": [...]}`` and ``{"word": [...]}``.

Exit status: 0 success, 1 domain error (e.g. determinant != 1, not in the
derived subgroup), 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import braid3, derived, halfplane, sl2, weierstrass
from .errors import DomainError, ParseError, ReductionError
from .sampling import verify_presentation
from .tiling import emit_tiling_svg
from .words import BraidWord, GenWord

SEED_ENV = "MODULAR_BRAID_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _matrix(args, text):
    return sl2.Mat2Z.from_json(text) if args.json else sl2.Mat2Z.parse(text)


def _word(args, cls, text):
    return cls.from_json(text) if args.json else cls.parse(text)


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise ParseError("not an integer", text, 0) from None


def _float(text):
    try:
        return float(text)
    except ValueError:
        raise ParseError("not a number", text, 0) from None


def _emit(args, text, obj):
    print(json.dumps(obj) if args.json else text)


def _emit_matrix(args, m):
    _emit(args, str(m), m.to_json())


def _emit_word(args, w):
    _emit(args, str(w), w.to_json())


def _emit_bool(args, key, value):
    _emit(args, "true" if value else "false", {key: value})


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ParseError("range must look like a..b", text, 0)
    return _int(lo), _int(hi)


def _default_seed():
    env = os.environ.get(SEED_ENV)
    return _int(env) if env else 0


def cmd_matrix_of_word(args):
    _emit_matrix(args, sl2.eval_word(_word(args, GenWord, args.word)))


def cmd_word_of_matrix(args):
    _emit_word(args, sl2.word_of_matrix(_matrix(args, args.matrix)))


def cmd_braid_eval(args):
    _emit_matrix(args, braid3.sigma(_word(args, BraidWord, args.braid)))


def cmd_braid_equal(args):
    u = _word(args, BraidWord, args.u)
    v = _word(args, BraidWord, args.v)
    _emit_bool(args, "equal", braid3.braid_equal(u, v))


def cmd_abelianize(args):
    cls = sl2.abelianize(_matrix(args, args.matrix), projective=args.projective)
    _emit(args, str(cls), cls.to_json())


def cmd_f_matrix(args):
    _emit_matrix(args, sl2.f_matrix(_int(args.n)))


def cmd_f_free(args):
    _emit_word(args, derived.f_in_free_gens(_int(args.n)))


def cmd_derived_member(args):
    _emit_bool(args, "member", derived.derived_member(_matrix(args, args.matrix)))


def cmd_derived_factor(args):
    _emit_word(args, derived.factor_derived(_matrix(args, args.matrix)))


def cmd_reduce_point(args):
    z = halfplane.HPoint(_float(args.re), _float(args.im))
    zr, w = halfplane.reduce_point(z, args.tol)
    _emit(args, f"{zr}\n{w}", {"z": [zr.re, zr.im], **w.to_json()})


def cmd_verify_presentation(args):
    seed = args.seed if args.seed is not None else _default_seed()
    results = verify_presentation(args.samples, seed)
    if args.json:
        print(json.dumps({"seed": seed, "samples": args.samples,
                          "checks": [{"name": r.name, "passed": r.passed, "total": r.total}
                                     for r in results]}))
    else:
        for r in results:
            print(r)
    return 0 if all(r.ok for r in results) else 1


def cmd_hexagon_svg(args):
    count = emit_tiling_svg(_parse_range(args.range), args.depth, args.out)
    _emit(args, f"wrote {count} tiles to {args.out}", {"tiles": count, "path": args.out})


def cmd_wp_eval(args):
    v = weierstrass.wp(weierstrass.TorusPoint(_float(args.re), _float(args.im)), args.radius)
    _emit(args, str(v), {"value": None if v.is_infinite else [v.value.real, v.value.imag]})


def cmd_wp_report(args):
    report = weierstrass.appendix_report(args.radius, args.tol, stated=args.stated)
    ok = report.passed(args.tol)
    if args.json:
        print(json.dumps({**report.to_json(), "passed": ok}))
    else:
        d = report.to_json()
        for key in ("e_m", "e_n", "e_p"):
            print(f"{key} = {d[key][0]!r} {d[key][1]!r}")
        print(f"max_axis_error = {d['max_axis_error']!r}")
        print(f"parity_periodicity_error = {d['parity_periodicity_error']!r}")
        for name, good in d["half_turn_ok"].items():
            print(f"half_turn {name} = {'true' if good else 'false'}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modular-braid", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--json", action="store_true", help="JSON input and output")
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="JSON input and output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    add("matrix-of-word", cmd_matrix_of_word, "evaluate a word in A, B").add_argument("word")
    add("word-of-matrix", cmd_word_of_matrix, "write a matrix 'a b c d' as a word in A, B"
        ).add_argument("matrix")
    add("braid-eval", cmd_braid_eval, "image of a braid word under sigma").add_argument("braid")
    p = add("braid-equal", cmd_braid_equal, "decide equality of two braid words in B3")
    p.add_argument("u")
    p.add_argument("v")
    p = add("abelianize", cmd_abelianize, "class in Z/12 (Z/6 with --projective)")
    p.add_argument("matrix")
    p.add_argument("--projective", action="store_true")
    add("f-matrix", cmd_f_matrix, "the side pairing f_n").add_argument("n")
    add("f-free", cmd_f_free, "f_n as a word in g1, g2").add_argument("n")
    add("derived-member", cmd_derived_member, "is the matrix in SL(2,Z)'?").add_argument("matrix")
    add("derived-factor", cmd_derived_factor, "write a member of SL(2,Z)' in g1, g2"
        ).add_argument("matrix")
    p = add("reduce-point", cmd_reduce_point, "move a point of H into the standard domain")
    p.add_argument("re")
    p.add_argument("im")
    p.add_argument("--tol", type=float, default=halfplane.DEFAULT_TOL)
    p = add("verify-presentation", cmd_verify_presentation, "randomized relation checks")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None,
                   help=f"default 0, or ${SEED_ENV} when set")
    p = add("hexagon-svg", cmd_hexagon_svg, "draw the tiles B_n as SVG")
    p.add_argument("out")
    p.add_argument("--range", default="0..5")
    p.add_argument("--depth", type=int, default=0)
    p = add("wp-eval", cmd_wp_eval, "Weierstrass p of the Gaussian lattice")
    p.add_argument("re")
    p.add_argument("im")
    p.add_argument("--radius", type=int, default=weierstrass.DEFAULT_RADIUS)
    p = add("wp-report", cmd_wp_report, "run the appendix checks on p")
    p.add_argument("--radius", type=int, default=weierstrass.DEFAULT_RADIUS)
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--stated", action="store_true",
                   help="check the axis claims exactly as literally asserted")
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args) or 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ReductionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
