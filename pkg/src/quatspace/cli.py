"""Command-line interface; JSON lines in, JSON lines out.

Exit status: 0 success, 1 check failure, 2 usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import __version__
from .action import Minquat, apply, matrix_of
from .bench import run_bench
from .checks import SUITES, run_checks
from .extquat import ExtQuaternion, decompose, ext_mul
from .jsonio import JsonFormatError, dumps, ext_from_json, ext_to_json, minquat_to_json
from .rings import KINDS, DomainError, UnitKind
from .spaceform import distance

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ALGEBRAS = [k.label for k in KINDS]


class UsageError(Exception):
    pass


# -- commands on parsed values -------------------------------------------


def cmd_compose(inputs: list[ExtQuaternion]) -> ExtQuaternion:
    if not inputs:
        raise UsageError("compose needs at least one element")
    out = inputs[0]
    for q in inputs[1:]:
        if q.kind != out.kind:
            raise DomainError(f"algebra mismatch: {out.kind.label} vs {q.kind.label}")
        out = ext_mul(out, q)
    return out


def cmd_decompose(q: ExtQuaternion) -> dict:
    d = decompose(q)
    return {"q_r": ext_to_json(d.q_r), "q_b": ext_to_json(d.q_b), "theta": float(d.theta)}


def cmd_apply(q: ExtQuaternion, v: Minquat) -> Minquat:
    return apply(q, v)


def cmd_matrix(q: ExtQuaternion) -> list:
    return matrix_of(q).tolist()


def cmd_distance(v: Minquat, w: Minquat) -> float:
    return float(distance(v, w))


# -- I/O -----------------------------------------------------------------


def _documents(args) -> list:
    lines = args.json if args.json else sys.stdin.read().splitlines()
    docs = []
    for n, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            docs.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise JsonFormatError(f"line {n}: malformed JSON: {exc}") from None
    return docs


def _ext(doc, args) -> ExtQuaternion:
    q = ext_from_json(doc, args.algebra)
    if args.algebra and q.kind != UnitKind.parse(args.algebra):
        raise JsonFormatError(f"document algebra {q.kind.label!r} conflicts with --algebra {args.algebra}")
    return q


def _minquat(doc, args) -> Minquat:
    return Minquat.from_ext(_ext(doc, args))


def _pair(doc, keys):
    if not isinstance(doc, dict) or any(k not in doc for k in keys):
        raise JsonFormatError(f"expected an object with keys {list(keys)}")
    return (doc[k] for k in keys)


def _run_compose(args):
    return [ext_to_json(cmd_compose([_ext(d, args) for d in _documents(args)]))], EXIT_OK


def _run_decompose(args):
    return [cmd_decompose(_ext(d, args)) for d in _documents(args)], EXIT_OK


def _run_apply(args):
    out = []
    for doc in _documents(args):
        q, v = _pair(doc, ("q", "v"))
        out.append(minquat_to_json(cmd_apply(_ext(q, args), _minquat(v, args))))
    return out, EXIT_OK


def _run_matrix(args):
    return [cmd_matrix(_ext(d, args)) for d in _documents(args)], EXIT_OK


def _run_distance(args):
    out = []
    for doc in _documents(args):
        v, w = _pair(doc, ("v", "w"))
        out.append(cmd_distance(_minquat(v, args), _minquat(w, args)))
    return out, EXIT_OK


def _kinds(args):
    return KINDS if args.algebra is None else (UnitKind.parse(args.algebra),)


def _run_check(args):
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    reports = run_checks(args.seed, args.samples, args.tolerance_scale, _kinds(args), args.suite)
    passed = all(r.passed for r in reports)
    out = [r.as_dict() for r in reports]
    out.append({"summary": {"seed": args.seed, "samples": args.samples, "suites": len(reports),
                            "failed": [r.suite for r in reports if not r.passed], "passed": passed}})
    return out, EXIT_OK if passed else EXIT_FAIL


def _run_bench(args):
    if args.n < 1 or args.batch < 1:
        raise UsageError("--n and --batch must be >= 1")
    out = run_bench(args.n, args.batch, _kinds(args), args.seed)
    return out, EXIT_OK if all(r["agree"] for r in out) else EXIT_FAIL


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatspace", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRAS, default=None,
                        help="ring of the coefficients; default for documents without 'algebra'")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    io_help = {
        "compose": ("left-to-right product of the input elements", _run_compose),
        "decompose": ("q = q_r q_b for each unit element", _run_decompose),
        "apply": ("T_q(v) for each {\"q\": ..., \"v\": ...}", _run_apply),
        "matrix": ("4x4 matrix of T_q for each element", _run_matrix),
        "distance": ("d(v, w) for each {\"v\": ..., \"w\": ...}", _run_distance),
    }
    for name, (text, fn) in io_help.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("json", nargs="*", help="JSON documents; read from stdin, one per line, if omitted")
        p.set_defaults(func=fn)

    p = sub.add_parser("check", parents=[common], help="randomized identity checks")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tolerance-scale", type=float, default=1.0,
                   help="multiplier on every suite tolerance")
    p.add_argument("--suite", action="append", choices=list(SUITES), default=None,
                   help="run only this suite (repeatable)")
    p.set_defaults(func=_run_check)

    p = sub.add_parser("bench", parents=[common], help="sandwich vs matrix pipeline timing")
    p.add_argument("--n", type=int, default=10, help="repetitions")
    p.add_argument("--batch", type=int, default=100_000, help="minquats per repetition")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_run_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (JsonFormatError, DomainError) as exc:
        print(f"quatspace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sink = open(args.out, "w", encoding="utf-8") if args.out else nullcontext(sys.stdout)
    with sink as fh:
        for line in lines:
            fh.write(dumps(line) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
