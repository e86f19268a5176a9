"""Command-line front end.

Each invocation prints exactly one JSON object on stdout; anything meant
for humans goes to stderr.  Exit codes: 0 success (or witness found),
1 error or bad usage, 2 search exhausted, 3 search inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import SymmetryClass, classify, gamma
from .bent import (
    is_bent,
    predicted_params,
    sigma,
    sigma_function,
    tau,
    tau_function,
    verify_difference_set,
)
from .graphs import (
    BLUE,
    RED,
    build_delta,
    export_graph,
    oracle_build_delta,
    predicted_srg_params,
    verify_srg,
)
from .swap import (
    SearchStatus,
    certificate_payload,
    search_all,
    search_swap,
    witness_payload,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXHAUSTED = 2
EXIT_INCONCLUSIVE = 3

_TABLE_MAX_M = 14
_BENT_MAX_M = 12
_CONFIRM_MAX_M = 8
_GRAPH_MAX_M = 8
_ORACLE_MAX_M = 4
_SEARCH_ALL_DEFAULT_LIMIT = 100


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="ctwin", description=__doc__)
    p.add_argument("--verbose", action="store_true", help="human summaries on stderr")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("table", help="truth table of sigma_m or tau_m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--function", choices=("sigma", "tau"), required=True)
    s.add_argument("--format", choices=("hex", "bits"), default="hex")

    s = sub.add_parser("bent", help="check the constant spectrum magnitude")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--function", choices=("sigma", "tau"), required=True)

    s = sub.add_parser("params", help="difference-set and SRG parameters")
    s.add_argument("--m", type=int, required=True)

    s = sub.add_parser("graph", help="export one colour class of Delta_m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--colour", choices=("red", "blue"), required=True)
    s.add_argument("--format", choices=("graph6", "json-edges"), default="graph6")
    s.add_argument("--out", help="write the payload to this file")

    s = sub.add_parser("search", help="search for the red/blue swap")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--node-budget", type=int, default=None)
    s.add_argument(
        "--all",
        nargs="?",
        type=int,
        const=_SEARCH_ALL_DEFAULT_LIMIT,
        default=None,
        metavar="LIMIT",
        help="enumerate witnesses instead of stopping at the first",
    )

    s = sub.add_parser("oracle", help="cross-validate bit rules against the matrices")
    s.add_argument("--m", type=int, required=True)
    return p


def _check_m(m: int, low: int, high: int | None):
    if m < low or (high is not None and m > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise UsageError(f"--m must be in {bound}, got {m}")


def _cmd_table(args):
    _check_m(args.m, 1, _TABLE_MAX_M)
    f = sigma_function(args.m) if args.function == "sigma" else tau_function(args.m)
    if args.format == "bits":
        table = format(f.bits, f"0{f.size}b")[::-1]
    else:
        table = f.hex()
    return {"function": args.function, "m": args.m, "table": table}, EXIT_OK


def _cmd_bent(args):
    _check_m(args.m, 1, _BENT_MAX_M)
    f = sigma_function(args.m) if args.function == "sigma" else tau_function(args.m)
    return {"bent": is_bent(f), "magnitude": 1 << args.m}, EXIT_OK


def _cmd_params(args):
    _check_m(args.m, 1, None)
    ds = predicted_params(args.m)
    srg = predicted_srg_params(args.m)
    result = {"ds": list(ds.as_tuple()), "srg": list(srg.as_tuple()), "confirmed": None}
    if args.m <= _CONFIRM_MAX_M:
        graph = build_delta(args.m)
        measured = (
            verify_difference_set(sigma_function(args.m)),
            verify_difference_set(tau_function(args.m)),
            verify_srg(graph, RED),
            verify_srg(graph, BLUE),
        )
        expected = (ds, ds, srg, srg)
        if measured != expected:
            raise RuntimeError(
                f"measured parameters {measured} disagree with the closed form"
            )
        result["confirmed"] = True
    return result, EXIT_OK


def _cmd_graph(args):
    _check_m(args.m, 1, _GRAPH_MAX_M)
    colour = RED if args.colour == "red" else BLUE
    data = export_graph(build_delta(args.m), colour, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        result = {"format": args.format, "path": args.out, "bytes": len(data)}
    elif args.format == "json-edges":
        result = {"format": args.format, "payload": json.loads(data)}
    else:
        result = {"format": args.format, "payload": data.decode("ascii")}
    return result, EXIT_OK


def _resolve_threads(value):
    if value is None:
        value = os.environ.get("CTWIN_THREADS", "1")
        try:
            value = int(value)
        except ValueError:
            raise UsageError(f"CTWIN_THREADS must be an integer, got {value!r}")
    if value < 1:
        raise UsageError("--threads must be >= 1")
    return value


def _cmd_search(args):
    _check_m(args.m, 1, None)
    threads = _resolve_threads(args.threads)
    if args.node_budget is not None and args.node_budget < 1:
        raise UsageError("--node-budget must be >= 1")
    if args.all is not None:
        if args.all < 1:
            raise UsageError("--all limit must be >= 1")
        witnesses = search_all(args.m, args.all)
        result = {
            "m": args.m,
            "witnesses": [list(w.phi) for w in witnesses],
            "count": len(witnesses),
        }
        return result, EXIT_OK if witnesses else EXIT_EXHAUSTED
    outcome = search_swap(
        args.m, threads=threads, node_budget=args.node_budget
    )
    if outcome.status is SearchStatus.FOUND:
        return witness_payload(outcome.witness), EXIT_OK
    code = (
        EXIT_EXHAUSTED
        if outcome.status is SearchStatus.EXHAUSTED
        else EXIT_INCONCLUSIVE
    )
    return certificate_payload(args.m, outcome), code


def _cmd_oracle(args):
    _check_m(args.m, 1, _ORACLE_MAX_M)
    v = 1 << (2 * args.m)
    for i in range(v):
        cls = classify(gamma(args.m, i))
        if sigma(args.m, i) != (cls is SymmetryClass.SKEW):
            raise RuntimeError(f"sigma mismatch at index {i}")
        if tau(args.m, i) != (cls is SymmetryClass.SYMMETRIC_OFF_DIAGONAL):
            raise RuntimeError(f"tau mismatch at index {i}")
    if oracle_build_delta(args.m) != build_delta(args.m):
        raise RuntimeError("matrix-built graph disagrees with the bit rules")
    return {"checked": v, "pairs": v * (v - 1) // 2, "ok": True}, EXIT_OK


_DISPATCH = {
    "table": _cmd_table,
    "bent": _cmd_bent,
    "params": _cmd_params,
    "graph": _cmd_graph,
    "search": _cmd_search,
    "oracle": _cmd_oracle,
}


def _emit(obj):
    try:
        print(json.dumps(obj))
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the pipe; not our error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _emit({"error": str(e)})
        print(f"ctwin: {e}", file=sys.stderr)
        return EXIT_ERROR
    start = time.monotonic()
    try:
        result, code = _DISPATCH[args.cmd](args)
    except UsageError as e:
        _emit({"error": str(e)})
        print(f"ctwin: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, RuntimeError) as e:
        _emit({"error": str(e)})
        print(f"ctwin: {e}", file=sys.stderr)
        return EXIT_ERROR
    elapsed_ms = (time.monotonic() - start) * 1000.0
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("cmd", "verbose") and v is not None
    }
    report = {
        "command": args.cmd,
        "params": params,
        "result": result,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    _emit(report)
    if args.verbose:
        print(f"ctwin {args.cmd}: done in {elapsed_ms:.1f} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
