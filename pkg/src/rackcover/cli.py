"""Command line front end.  Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 input/parse problem, 2 semantic validation failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .classify import classify, classify_square
from .commutator import c1, centralize1, centralize2, commutator, pi0
from .congruence import congruence_closure
from .core import cyclic, dihedral, trivial
from .errors import RackError
from .groups import conj_functor, cyclic_group, quaternion_group, sym_group
from .paths import x_alpha_bounded


def _read(path, expect):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return io.loads(text, expect)


def _out(doc):
    sys.stdout.buffer.write(io.emit(doc))
    sys.stdout.flush()


GEN = {
    "trivial": lambda n: trivial(n),
    "dihedral": lambda n: dihedral(n),
    "cyclic": lambda n: cyclic(n),
    "conj-sym": lambda n: conj_functor(sym_group(n)),
    "conj-cyclic": lambda n: conj_functor(cyclic_group(n)),
    "quaternion": lambda n=None: conj_functor(quaternion_group()),
}


def cmd_validate(args):
    text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.ParseError(f"invalid JSON: {exc}") from exc
    obj = io.from_doc(doc)
    _out({"valid": True, "type": doc["type"], "size": getattr(obj, "size", None)})


def cmd_gen(args):
    if args.kind not in GEN:
        raise io.ParseError(f"unknown kind {args.kind!r}; choose from {sorted(GEN)}")
    if args.kind == "quaternion":
        _out(io.rack_doc(GEN["quaternion"]()))
        return
    if args.n is None or args.n < 0:
        raise io.ParseError(f"{args.kind} needs a non-negative size N")
    _out(io.rack_doc(GEN[args.kind](args.n)))


def cmd_classify(args):
    _out(classify(_read(args.file, "morphism")).to_dict())


def cmd_classify_square(args):
    _out(classify_square(_read(args.file, "square")).to_dict())


def cmd_centralize(args):
    f = _read(args.file, "morphism")
    g, unit = centralize1(f)
    _out({"type": "centralization", "covering": io.morphism_doc(g), "unit": io.morphism_doc(unit),
          "congruence": io.congruence_doc(c1(f))})


def cmd_centralize_square(args):
    sq, unit = centralize2(_read(args.file, "square"))
    _out({"type": "centralization", "square": io.square_doc(sq), "unit_top": io.morphism_doc(unit)})


def _pairs(text):
    try:
        pairs = json.loads(text)
        return [(int(a), int(b)) for a, b in pairs]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise io.ParseError(f"pairs must be a JSON list of [x, y] lists: {exc}") from exc


def cmd_commutator(args):
    A = _read(args.file, "rack")
    R = congruence_closure(A, _pairs(args.r))
    S = congruence_closure(A, _pairs(args.s))
    _out(io.congruence_doc(commutator(A, R, S, args.variant)))


def cmd_pi0(args):
    Q, unit = pi0(_read(args.file, "rack"))
    _out({"type": "pi0", "quotient": io.rack_doc(Q), "unit": io.morphism_doc(unit)})


def cmd_oracle_volumes(args):
    res = x_alpha_bounded(_read(args.file, "square"), args.max_len, stabilize=args.stabilize)
    _out(res.to_dict())


def cmd_selftest(args):
    from .selftest import run_selftest
    summary = run_selftest()
    _out(summary)
    return 0 if summary["ok"] else 2


def build_parser():
    ap = argparse.ArgumentParser(prog="rackcover", description="Coverings of finite racks and quandles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a JSON document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="emit a standard rack")
    p.add_argument("kind", help="trivial | dihedral | cyclic | conj-sym | conj-cyclic | quaternion")
    p.add_argument("n", nargs="?", type=int)
    p.set_defaults(func=cmd_gen)

    for name, func, what in (("classify", cmd_classify, "morphism"),
                             ("classify-square", cmd_classify_square, "square"),
                             ("centralize", cmd_centralize, "morphism"),
                             ("centralize-square", cmd_centralize_square, "square")):
        p = sub.add_parser(name, help=f"{name} a {what} file ('-' for stdin)")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("commutator", help="[R, S] for congruences generated by pair lists")
    p.add_argument("file")
    p.add_argument("--r", required=True, help="JSON list of pairs generating R")
    p.add_argument("--s", required=True, help="JSON list of pairs generating S")
    p.add_argument("--variant", default="i", choices=["i", "ii", "iii", "iv"])
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("pi0", help="connected components of a rack")
    p.add_argument("file")
    p.set_defaults(func=cmd_pi0)

    p = sub.add_parser("oracle-volumes", help="bounded horn oracle for a square")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--stabilize", action="store_true", help="grow the bound until no new horn appears")
    p.set_defaults(func=cmd_oracle_volumes)

    p = sub.add_parser("selftest", help="recompute the example corpus")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (OSError, io.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (RackError, IndexError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
