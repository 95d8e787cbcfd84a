"""
Command-line front end.

    skein-hecke normalize --surface disk --kappa 2 "s1 s1"
    skein-hecke mul --surface torus --kappa 1 b1 a1
    skein-hecke table --surface disk --kappa 2 --specialize hbar=0,c=1 --format json

Exit status: 0 on success, 1 on domain errors (bad syntax, illegal letters,
mismatched variant, unreadable fixture, non-confluent report), 2 when a
reduction runs past its step cap.  With ``--format json`` errors go to stderr
as ``{"error": <code>, "detail": <message>}``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from pathlib import Path

from .braids import BraidContext, random_word
from .coeff import Coefficient
from .errors import SkeinHeckeError, StepCapExceeded, VariantSurfaceMismatch
from .hecke import VARIANTS, build_instance, degenerate, enumerate_hecke_basis, hecke_mul, to_bsk
from .index import IndexInput, fredholm_index, graded_index, hbar_degree, matching_maslov
from .rewrite import confluence_check
from .words import AlgebraElement

__all__ = ["main", "run", "UsageError"]


class UsageError(SkeinHeckeError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which we reserve for the step cap
    def error(self, message):
        raise UsageError(message)


def _instance_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--surface", choices=sorted(VARIANTS.values()), required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--variant", choices=sorted(VARIANTS))
    p.add_argument("--fixture", type=Path, help="presentation file overriding the shipped one")
    p.add_argument("--verify", action="store_true",
                   help="run the confluence check on a --fixture before trusting it")
    p.add_argument("--step-cap", type=int)
    p.add_argument("--degree-bound", type=int)
    return p


def _io_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    inst, io = _instance_flags(), _io_flags()
    ap = _Parser(prog="skein-hecke", description="Surface Hecke algebra calculator.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[inst, io], help="reduced form of a word")
    p.add_argument("word", nargs="?")
    p.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    p.add_argument("--random", type=int, metavar="N", help="normalize N seeded random words instead")
    p.add_argument("--length", type=int, default=8, help="length of random words")

    p = sub.add_parser("mul", parents=[inst, io], help="reduced product of words")
    p.add_argument("words", nargs="+")

    sub.add_parser("basis", parents=[inst, io], help="reduced words up to --degree-bound")

    p = sub.add_parser("degenerate", parents=[inst, io], help="image at hbar=0 in the wreath product")
    p.add_argument("word")
    p.add_argument("--c-to-one", action="store_true")

    sub.add_parser("confluence", parents=[inst, io], help="ambiguity report up to --degree-bound (default 8)")

    p = sub.add_parser("to-bsk", parents=[inst, io], help="reduced form with hbar written as s - s^-1")
    p.add_argument("word")

    p = sub.add_parser("index", parents=[io], help="index and grading formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", type=int)
    p.add_argument("--degrees", type=int, nargs="+", help="|y0| |y1| ... |ym|")

    p = sub.add_parser("table", parents=[inst, io], help="multiplication table on the reduced basis")
    p.add_argument("--specialize", help="e.g. hbar=0 or hbar=0,c=1")
    return ap


def parse_specialize(text: str | None) -> tuple[bool, bool]:
    if not text:
        return False, False
    hbar0 = c1 = False
    for part in text.split(","):
        key, _, value = part.strip().partition("=")
        if (key, value) == ("hbar", "0"):
            hbar0 = True
        elif (key, value) == ("c", "1"):
            c1 = True
        else:
            raise UsageError(f"cannot specialize {part!r}; allowed: hbar=0, c=1")
    if c1 and not hbar0:
        raise UsageError("c=1 is only supported together with hbar=0")
    return hbar0, c1


def _validate(args) -> None:
    if getattr(args, "kappa", 1) < 1:
        raise UsageError("--kappa must be at least 1")
    if getattr(args, "step_cap", None) is not None and args.step_cap < 1:
        raise UsageError("--step-cap must be positive")
    if getattr(args, "degree_bound", None) is not None and args.degree_bound < 0:
        raise UsageError("--degree-bound must be non-negative")
    if getattr(args, "verify", False) and args.fixture is None:
        raise UsageError("--verify only applies to a --fixture override")
    variant = getattr(args, "variant", None)
    if variant and VARIANTS[variant] != args.surface:
        # build_instance raises the same error; checking here keeps it ahead of any file IO
        raise VariantSurfaceMismatch(f"{variant} Hecke algebra lives on the {VARIANTS[variant]}, not the {args.surface}")
    if args.command == "normalize" and (args.word is None) == (args.random is None):
        raise UsageError("normalize takes either a word or --random N")
    if args.command == "index":
        if args.degrees is not None and len(args.degrees) != args.m + 1:
            raise UsageError(f"--degrees needs m+1 = {args.m + 1} values")
    if args.command == "table":
        parse_specialize(args.specialize)


def _instance(args):
    ctx = BraidContext.of(args.surface, args.kappa)
    H = build_instance(ctx, args.variant, args.fixture, args.step_cap)
    meta = H.to_json()
    if args.verify:
        report = confluence_check(H.system, args.degree_bound or 8)
        meta["confluence"] = report.to_json()
        if report.ok:
            H = dataclasses.replace(H, verified=True)
            meta["verified"] = True
    return H, meta


def _elem_text(x: AlgebraElement, H) -> str:
    return x.to_text(H.sort_key)


def _elem_json(x: AlgebraElement, H) -> dict:
    return x.to_json(H.sort_key)


def _cmd_normalize(args, H):
    if args.word is not None:
        x = H.reduce(H.element(args.word), args.strategy)
        return {"input": args.word, "result": _elem_json(x, H)}, _elem_text(x, H)
    rng = random.Random(args.seed)
    rows, lines = [], []
    one = Coefficient.one(H.system.ring)
    for _ in range(args.random):
        w = random_word(rng, H.ctx, args.length)
        x = H.reduce(AlgebraElement.from_word(w, one), args.strategy)
        rows.append({"input": w.to_text(), "result": _elem_json(x, H)})
        lines.append(f"{w.to_text() or '1'} = {_elem_text(x, H)}")
    return {"seed": args.seed, "samples": rows}, "\n".join(lines)


def _cmd_mul(args, H):
    x = H.reduce(H.element(args.words[0]))
    for text in args.words[1:]:
        x = hecke_mul(x, H.element(text), H)
    return {"factors": args.words, "result": _elem_json(x, H)}, _elem_text(x, H)


def _cmd_basis(args, H):
    words = enumerate_hecke_basis(H, args.degree_bound)
    return {"degree_bound": args.degree_bound, "basis": [w.to_text() for w in words]}, \
        "\n".join(w.to_text() or "1" for w in words)


def _cmd_degenerate(args, H):
    x = H.reduce(H.element(args.word))
    d = degenerate(x, H, args.c_to_one)
    return {"input": args.word, "result": d.to_json()}, repr(d)


def _cmd_confluence(args, H):
    report = confluence_check(H.system, args.degree_bound or 8)
    doc = report.to_json()
    lines = [f"{report.system}: {report.checked} ambiguities up to length {report.max_len}, "
             f"{len(report.failures)} failures"]
    for f in report.failures:
        lines.append(f"  {f.ambiguity.word.to_text()}: {f.left} != {f.right}")
    return doc, "\n".join(lines)


def _cmd_to_bsk(args, H):
    x = to_bsk(H.reduce(H.element(args.word)))
    return {"input": args.word, "result": _elem_json(x, H)}, _elem_text(x, H)


def _cmd_table(args, H):
    hbar0, c1 = parse_specialize(args.specialize)
    R = H.specialized(hbar0, c1) if (hbar0 or c1) else H.system
    words = enumerate_hecke_basis(H, args.degree_bound)
    one = Coefficient.one(R.ring)
    elems = [AlgebraElement.from_word(w, one) for w in words]
    rows, lines = [], []
    for w, x in zip(words, elems):
        row = []
        for v, y in zip(words, elems):
            p = R.multiply(x, y)
            row.append(_elem_json(p, H))
            lines.append(f"{w.to_text() or '1'} * {v.to_text() or '1'} = {_elem_text(p, H)}")
        rows.append(row)
    doc = {"basis": [w.to_text() for w in words], "ring": R.ring.value,
           "specialize": args.specialize, "entries": rows}
    return doc, "\n".join(lines)


def _cmd_index(args):
    inp = IndexInput(args.n, args.chi, args.kappa, args.m, args.mu, tuple(args.degrees or ()))
    doc = {"hbar_degree": hbar_degree(args.n)}
    if args.mu is not None:
        doc["fredholm_index"] = fredholm_index(inp)
    if args.degrees:
        doc["graded_index"] = graded_index(inp)
        doc["matching_mu"] = matching_maslov(inp)
    return doc, "\n".join(f"{k}: {v}" for k, v in doc.items())


COMMANDS = {
    "normalize": _cmd_normalize,
    "mul": _cmd_mul,
    "basis": _cmd_basis,
    "degenerate": _cmd_degenerate,
    "confluence": _cmd_confluence,
    "to-bsk": _cmd_to_bsk,
    "table": _cmd_table,
}


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fmt = "json" if "--format=json" in argv or _follows(argv, "--format", "json") else "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        _validate(args)
        if args.command == "index":
            doc, text = _cmd_index(args)
        else:
            H, meta = _instance(args)
            doc, text = COMMANDS[args.command](args, H)
            doc = {"instance": meta, **doc}
            if args.command == "confluence" and not doc["confluent"]:
                _emit(doc, text, fmt, stdout)
                return 1
    except StepCapExceeded as exc:
        _error(exc, fmt, stderr)
        return 2
    except SkeinHeckeError as exc:
        _error(exc, fmt, stderr)
        return 1
    except ValueError as exc:
        _error(exc, fmt, stderr, "invalid_argument")
        return 1
    _emit(doc, text, fmt, stdout)
    return 0


def _follows(argv, flag, value) -> bool:
    return any(a == flag and b == value for a, b in zip(argv, argv[1:]))


def _emit(doc, text, fmt, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    elif text:
        out.write(text + "\n")


def _error(exc, fmt, err, code=None) -> None:
    code = code or getattr(exc, "code", "error")
    if fmt == "json":
        err.write(json.dumps({"error": code, "detail": str(exc)}) + "\n")
    else:
        err.write(f"error ({code}): {exc}\n")


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else list(argv)))


if __name__ == "__main__":
    main()
