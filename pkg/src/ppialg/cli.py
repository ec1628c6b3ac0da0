"""Command-line front end: reduce, eval, verify, decompose, detect-nv."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Element
from .exprs import ExprSyntaxError, parse_element
from .reps import (
    JordanRep,
    ShiftPairRep,
    WindowTooSmallError,
    detect_nv,
    eval_element,
)
from .toeplitz import DecompositionError, FsConfig, FsSequence, StabilizationError
from .verify import SUITES, SuiteOptions, run_suite
from .words import WordSyntaxError, parse_word, reduce_word

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def load_config(path: str) -> dict:
    """Flat key=value file; ints, floats, booleans, and bare strings."""
    out: dict[str, object] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"bad config line: {raw!r}")
        out[key.strip()] = _config_value(value.strip())
    return out


def _config_value(text: str):
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text.strip("\"'")


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _matrix_payload(matrix) -> dict:
    return {"rows": matrix.rows, "cols": matrix.cols, "entries": matrix.to_lists()}


def _matrix_lines(matrix, indent: str = "  "):
    width = max((len(s) for row in matrix.to_lists() for s in row), default=1)
    for row in matrix.to_lists():
        yield indent + "[" + " ".join(s.rjust(width) for s in row) + "]"


def _pair_payload(pm) -> dict:
    return {"fwd": _matrix_payload(pm.fwd), "bwd": _matrix_payload(pm.bwd)}


def cmd_reduce(args) -> int:
    word = parse_word(args.expression)
    normal = reduce_word(word)
    payload = {
        "command": "reduce",
        "input": args.expression,
        "normal_form": str(normal),
        "shape": normal.shape,
        "exponents": list(normal.exponents),
        "letters": normal.letters,
    }
    lines = [str(normal)]
    if args.jordan:
        payload["jordan"] = {}
        for n in args.jordan:
            matrix = eval_element(JordanRep(n), Element.from_word(normal))
            payload["jordan"][str(n)] = _matrix_payload(matrix)
            lines.append(f"jordan {n}:")
            lines.extend(_matrix_lines(matrix))
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_eval(args) -> int:
    element = parse_element(args.expression)
    payload = {"command": "eval", "input": args.expression,
               "structurally_zero": element.is_zero}
    lines = []
    if args.jordan is not None:
        rep = JordanRep(args.jordan)
        matrix = eval_element(rep, element)
        payload["representation"] = f"jordan:{args.jordan}"
        payload["matrix"] = _matrix_payload(matrix)
        payload["zero_in_representation"] = matrix.is_zero
        lines.append(f"jordan {args.jordan}:")
        lines.extend(_matrix_lines(matrix))
    else:
        window = args.window or 2 * max(element.max_letters, 1) + 4
        rep = ShiftPairRep(window)
        pm = eval_element(rep, element)
        payload["representation"] = f"pair:{window}"
        payload["matrix"] = _pair_payload(pm)
        payload["zero_in_representation"] = pm.is_zero
        for leg, m in (("fwd", pm.fwd), ("bwd", pm.bwd)):
            lines.append(f"pair window {window}, {leg} leg:")
            lines.extend(_matrix_lines(m))
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = load_config(args.config) if args.config else {}

    def setting(flag, key, default=None):
        if flag is not None:
            return flag
        return cfg.get(key, default)

    opts = SuiteOptions(
        n=setting(args.n, "n"),
        m=setting(args.m, "m"),
        nmax=setting(args.nmax, "nmax"),
        samples=setting(args.samples, "samples"),
        seed=setting(args.seed, "seed", 0),
        window=setting(args.window, "window"),
        workers=setting(args.workers, "workers", 4),
    )
    report = run_suite(args.suite, opts)
    payload = dict(report.to_json_dict(), command="verify")
    lines = [f"suite {report.suite}: {report.passed} passed, {report.failed} failed "
             f"({report.wall_time_s:.2f}s)"]
    for check in report.checks:
        tag = "PASS" if check.status == "pass" else "FAIL"
        detail = ", ".join(f"{k}={v}" for k, v in check.params.items())
        lines.append(f"{tag} {check.claim} [{detail}] :: {check.statement}")
        if check.witness:
            lines.append(f"     witness: {json.dumps(check.witness, sort_keys=True)}")
    _emit(payload, args.json, lines)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    cfg_file = load_config(args.config) if args.config else {}
    element = parse_element(args.expression)
    probe = args.probe or cfg_file.get("probe") or 2 * max(element.max_letters, 1) + 8
    n_max = args.n_max or cfg_file.get("n_max")
    if n_max is None:
        n_max = max(24, probe + 6)
    cfg = FsConfig(
        probe=int(probe),
        n_min=int(args.n_min or cfg_file.get("n_min", 2)),
        n_max=int(n_max),
        tol=float(args.tol or cfg_file.get("tol", 1e-10)),
    )
    seq = FsSequence.from_element(element)
    try:
        from .toeplitz import extract_decomposition

        deco = extract_decomposition(seq, cfg)
    except (StabilizationError, DecompositionError) as exc:
        failure = {"command": "decompose", "input": args.expression, "status": "fail",
                   "error": str(exc)}
        if isinstance(exc, DecompositionError):
            failure["report"] = exc.report
        else:
            failure["entries"] = exc.entries
        _emit(failure, args.json, [f"decomposition failed: {exc}"])
        return EXIT_FAIL
    payload = dict(deco.to_json_dict(), command="decompose", input=args.expression,
                   status="ok")
    max_resid = max((r for _, r in deco.residuals), default=0.0)
    lines = [f"symbol: {deco.symbol.to_json_dict()}",
             f"K ({deco.K.shape[0]}x{deco.K.shape[1]}): {deco.K.tolist()}",
             f"L ({deco.L.shape[0]}x{deco.L.shape[1]}): {deco.L.tolist()}",
             f"residual max over tested n: {max_resid:g}",
             f"corners stabilized at n={deco.stabilized_at}"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_detect_nv(args) -> int:
    n_max = args.nmax
    if args.jordan is not None:
        rep = JordanRep(args.jordan)
        label = f"jordan:{args.jordan}"
    else:
        window = args.window or max(32, 2 * (n_max + 4) + 2)
        rep = ShiftPairRep(window)
        label = f"pair:{window}"
    found = detect_nv(rep, n_max)
    payload = {"command": "detect-nv", "representation": label,
               "nmax": n_max, "levels": sorted(found)}
    text = "{" + ", ".join(str(n) for n in sorted(found)) + "}" if found else "{}"
    _emit(payload, args.json, [f"{label}: {text}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppialg",
        description="Canonical forms, exact representations, and finite-section "
                    "decompositions for words in a power partial isometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="rewrite a word into canonical form")
    reduce_p.add_argument("expression")
    reduce_p.add_argument("--jordan", type=int, action="append",
                          help="also print the image in this block dimension (repeatable)")
    reduce_p.add_argument("--json", action="store_true")
    reduce_p.set_defaults(fn=cmd_reduce)

    eval_p = sub.add_parser("eval", help="evaluate an element expression in one model")
    eval_p.add_argument("expression")
    group = eval_p.add_mutually_exclusive_group(required=True)
    group.add_argument("--jordan", type=int)
    group.add_argument("--pair", action="store_true")
    eval_p.add_argument("--window", type=int)
    eval_p.add_argument("--json", action="store_true")
    eval_p.set_defaults(fn=cmd_eval)

    verify_p = sub.add_parser("verify", help="run a named identity suite")
    verify_p.add_argument("suite", choices=sorted(SUITES))
    verify_p.add_argument("--n", type=int)
    verify_p.add_argument("--m", type=int)
    verify_p.add_argument("--nmax", type=int)
    verify_p.add_argument("--samples", type=int)
    verify_p.add_argument("--seed", type=int)
    verify_p.add_argument("--window", type=int)
    verify_p.add_argument("--workers", type=int)
    verify_p.add_argument("--config")
    verify_p.add_argument("--json", action="store_true")
    verify_p.set_defaults(fn=cmd_verify)

    deco_p = sub.add_parser("decompose",
                            help="split the section sequence of an element into "
                                 "symbol + compact corrections")
    deco_p.add_argument("expression")
    deco_p.add_argument("--probe", type=int)
    deco_p.add_argument("--n-min", type=int, dest="n_min")
    deco_p.add_argument("--n-max", type=int, dest="n_max")
    deco_p.add_argument("--tol", type=float)
    deco_p.add_argument("--config")
    deco_p.add_argument("--json", action="store_true")
    deco_p.set_defaults(fn=cmd_decompose)

    nv_p = sub.add_parser("detect-nv", help="find the levels where p v^n pt is nonzero")
    group = nv_p.add_mutually_exclusive_group(required=True)
    group.add_argument("--jordan", type=int)
    group.add_argument("--pair", action="store_true")
    nv_p.add_argument("--nmax", type=int, default=6)
    nv_p.add_argument("--window", type=int)
    nv_p.add_argument("--json", action="store_true")
    nv_p.set_defaults(fn=cmd_detect_nv)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (WordSyntaxError, ExprSyntaxError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WindowTooSmallError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
