"""
Command line front end.

Exit codes: 0 when the checked property holds (or the command succeeded),
1 when it fails (a witness is printed), 2 for usage or input errors, and
3 when a time budget ran out before a verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence, TextIO

from . import aggregation, csd, cubillage, snakes, symmetric, tiling
from .formats import (
    format_set, read_inversion_sets, read_majority_system, read_orders,
    write_inversion_sets,
)
from .lambda_core import InversionSet, Stick, Triple, Verdict, lambda_space, parse_triple

__all__ = ["main", "run", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(x: Any) -> Any:
    if isinstance(x, InversionSet):
        return x.to_bitstring()
    if isinstance(x, Stick):
        return [str(t) for t in x.members]
    if isinstance(x, Triple):
        return str(x)
    if isinstance(x, snakes.LinearOrder):
        return str(x)
    if isinstance(x, csd.SuperDomain):
        return [T.to_bitstring() for T in x]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


class _Out:
    def __init__(self, args, stream: TextIO):
        self.json = args.format == "json"
        self.style = "triples" if args.format == "triples" else "bits"
        self.verb = args.verb
        self.stream = stream

    def text(self, s: str) -> None:
        if not self.json:
            self.stream.write(s if s.endswith("\n") else s + "\n")

    def fmt(self, P: InversionSet) -> str:
        return format_set(P, self.style)

    def result(self, n: int | None, prop: str | None, verdict: bool | None,
               witness: Any = None, data: Any = None, text: str | None = None) -> int:
        if self.json:
            obj = {"verb": self.verb, "n": n, "verdict": verdict}
            if prop is not None:
                obj["property"] = prop
                obj["holds"] = verdict
            if witness is not None:
                obj["witness"] = _jsonable(witness)
            if data is not None:
                obj["data"] = _jsonable(data)
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            if text is not None:
                self.text(text)
            if prop is not None:
                status = {True: "holds", False: "fails", None: "unknown"}[verdict]
                self.text(f"{prop}: {status}")
            if witness is not None:
                self.text(f"witness: {self._witness_text(witness)}")
        return {True: EXIT_OK, False: EXIT_FAIL, None: EXIT_UNKNOWN}[verdict]

    def _witness_text(self, w: Any) -> str:
        if isinstance(w, InversionSet):
            return self.fmt(w)
        if isinstance(w, Stick):
            return f"stick {w} ({','.join(map(str, w.members))})"
        if isinstance(w, Triple):
            return str(w)
        if isinstance(w, (list, tuple)):
            return " ".join(self._witness_text(v) for v in w)
        return str(w)


# input helpers ----------------------------------------------------------------------

def _read_text(args) -> str:
    chunks = []
    if args.input:
        try:
            chunks.append(Path(args.input).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    chunks.extend(getattr(args, "items", None) or [])
    return "\n".join(chunks)


def _sets(args) -> tuple[int, list[InversionSet]]:
    n, sets = read_inversion_sets(_read_text(args), args.n)
    if not sets:
        raise UsageError("no inversion sets given (use --input FILE or positional items)")
    return n, sets


def _tilings(args) -> tuple[int, list[tiling.Tiling]]:
    n, sets = _sets(args)
    out = []
    for P in sets:
        verdict = tiling.is_tiling(P)
        if not verdict:
            raise UsageError(f"{P.to_bitstring()} is not a tiling (stick {verdict.witness})")
        out.append(tiling.Tiling.of(P))
    return n, out


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    lambda_space(args.n)
    return args.n


def _orientations(args, n: int) -> cubillage.StickOrientations:
    if not args.orient:
        return cubillage.StickOrientations.all_direct(n)
    try:
        text = Path(args.orient).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.orient}: {exc.strerror}") from None
    return cubillage.parse_orientations(text, n)


# verbs ---------------------------------------------------------------------------------

def _cmd_enumerate(args, out: _Out) -> int:
    n = _need_n(args)
    tilings = tiling.enumerate_all(n)
    if args.count:
        return out.result(n, None, True, data={"count": len(tilings)}, text=str(len(tilings)))
    out.text(write_inversion_sets(n, tilings, out.style))
    return out.result(n, None, True, data={"count": len(tilings), "tilings": list(tilings)})


def _cmd_validate(args, out: _Out) -> int:
    n, sets = _sets(args)
    code = EXIT_OK
    for P in sets:
        verdict = tiling.is_tiling(P)
        code = max(code, out.result(n, "is_tiling", verdict.holds, verdict.witness,
                                    data={"input": P}, text=out.fmt(P)))
    return code


def _cmd_aggregate(args, out: _Out) -> int:
    n, sets = _sets(args)
    if args.system:
        try:
            F = read_majority_system(Path(args.system).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.system}: {exc.strerror}") from None
        agg = aggregation.aggregate_with_system(sets, F)
    else:
        agg = aggregation.simple_majority(sets)
    verdict = tiling.is_tiling(agg)
    return out.result(n, "is_tiling", verdict.holds, verdict.witness,
                      data={"aggregate": agg}, text=f"aggregate: {out.fmt(agg)}")


def _cmd_median(args, out: _Out) -> int:
    n, sets = _sets(args)
    if len(sets) != 3:
        raise UsageError(f"median takes exactly three inversion sets, got {len(sets)}")
    m = tiling.median3(*sets)
    verdict = tiling.is_tiling(m)
    return out.result(n, "is_tiling", verdict.holds, verdict.witness,
                      data={"median": m}, text=f"median: {out.fmt(m)}")


def _cmd_snakes(args, out: _Out) -> int:
    n, tilings = _tilings(args)
    if len(tilings) != 1:
        raise UsageError("snakes takes exactly one tiling")
    orders = snakes.sigma(tilings[0])
    out.text("".join(f"{o}\n" for o in orders))
    return out.result(n, None, True, data={"count": len(orders), "orders": orders})


def _cmd_cd_check(args, out: _Out) -> int:
    if args.sigma:
        n, tilings = _tilings(args)
        if len(tilings) != 1:
            raise UsageError("cd-check --sigma takes exactly one tiling")
        orders = snakes.sigma(tilings[0])
    else:
        orders = read_orders(_read_text(args))
        if not orders:
            raise UsageError("no linear orders given")
        n = orders[0].n
    verdict = snakes.is_condorcet_domain(orders)
    witness = None
    if not verdict:
        cand, triple = verdict.witness
        witness = ["".join(map(str, cand)), *triple]
    return out.result(n, "is_condorcet_domain", verdict.holds, witness,
                      data={"orders": len(orders)})


def _median_witness(verdict: Verdict):
    *triple, median = verdict.witness
    return median, {"triple": triple}


def _cmd_csd_check(args, out: _Out) -> int:
    n, tilings = _tilings(args)
    D = csd.SuperDomain(n, tilings)
    verdict = csd.is_csd(D)
    if verdict:
        return out.result(n, "is_csd", True, data={"size": len(D)})
    median, data = _median_witness(verdict)
    data["size"] = len(D)
    if not out.json:
        out.text("triple: " + " ".join(out.fmt(T) for T in data["triple"]))
    return out.result(n, "is_csd", False, median, data=data)


def _cmd_csd_closed(args, out: _Out) -> int:
    n, tilings = _tilings(args)
    D = csd.SuperDomain(n, tilings)
    verdict = csd.is_closed(D)
    if verdict:
        return out.result(n, "is_closed", True, data={"size": len(D)})
    median, data = _median_witness(verdict)
    data["size"] = len(D)
    if not out.json:
        out.text("triple: " + " ".join(out.fmt(T) for T in data["triple"]))
    return out.result(n, "is_closed", False, median, data=data)


def _cmd_csd_maximal(args, out: _Out) -> int:
    n, tilings = _tilings(args)
    D = csd.SuperDomain(n, tilings)
    verdict = csd.is_maximal_csd(D, budget=args.budget)
    witness = verdict.witness
    if isinstance(witness, tuple):
        witness = witness[-1]
    return out.result(n, "is_maximal_csd", verdict.holds, witness, data={"size": len(D)})


def _cmd_build_cubillage(args, out: _Out) -> int:
    n = _need_n(args)
    o = _orientations(args, n)
    try:
        D = cubillage.cubillage_csd(o)
    except cubillage.CyclicOrientationError as exc:
        return out.result(n, "acyclic", False, list(exc.cycle))
    out.text(write_inversion_sets(n, D, out.style))
    return out.result(n, None, True, data={"size": len(D), "members": D})


def _cmd_build_chain(args, out: _Out) -> int:
    n = _need_n(args)
    if args.seq:
        try:
            seq = [parse_triple(t) for t in args.seq.split(",") if t.strip()]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        seq = list(lambda_space(n).triples)
    verdict = cubillage.validate_admissible(seq, n)
    if not verdict:
        return out.result(n, "admissible", False, verdict.witness)
    chain = cubillage.chain_from_linear(seq, n)
    out.text(write_inversion_sets(n, chain, out.style))
    return out.result(n, None, True, data={"length": len(chain), "chain": chain})


def _cmd_build_symmetric(args, out: _Out) -> int:
    n = _need_n(args)
    seq = symmetric.parse_sequence(args.seq) if args.seq else tuple(range(2, n))
    P = symmetric.symmetric_partition(seq, n)
    if args.parts:
        out.text(P.to_text())
        return out.result(n, None, True, data={"parts": {j: T for j, T in P.parts.items()}})
    D = symmetric.boolean_csd(P)
    out.text(write_inversion_sets(n, D, out.style))
    return out.result(n, None, True, data={"size": len(D), "members": D})


def _cmd_export_graph(args, out: _Out) -> int:
    n = _need_n(args)
    if args.kind == "flip":
        dot = tiling.flip_graph(n).to_dot()
    else:
        try:
            dot = cubillage.precedence_digraph(_orientations(args, n)).to_dot()
        except cubillage.CyclicOrientationError as exc:
            return out.result(n, "acyclic", False, list(exc.cycle))
    out.text(dot)
    return out.result(n, None, True, data={"dot": dot})


_VERBS = {
    "enumerate": (_cmd_enumerate, "list all tilings of Z(n;2)"),
    "validate": (_cmd_validate, "check inversion sets against Ziegler's criterion"),
    "aggregate": (_cmd_aggregate, "majority aggregate of a profile"),
    "median": (_cmd_median, "median of three inversion sets"),
    "snakes": (_cmd_snakes, "linear orders compatible with a tiling"),
    "cd-check": (_cmd_cd_check, "Condorcet-domain check for linear orders"),
    "csd-check": (_cmd_csd_check, "Condorcet super-domain check"),
    "csd-closed": (_cmd_csd_closed, "closedness (median) check"),
    "csd-maximal": (_cmd_csd_maximal, "maximality among CSDs"),
    "build-cubillage": (_cmd_build_cubillage, "cubillage CSD from stick orientations"),
    "build-chain": (_cmd_build_chain, "maximal chain from an admissible linear order"),
    "build-symmetric": (_cmd_build_symmetric, "symmetric CSD from a split sequence"),
    "export-graph": (_cmd_export_graph, "DOT export of the flip graph or precedence digraph"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rhombus-csd", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, (_, help_text) in _VERBS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--n", type=int, help="number of colors")
        p.add_argument("--input", help="input file")
        p.add_argument("--format", choices=("bits", "triples", "json"), default="bits")
        p.add_argument("--budget", type=float, help="time budget in seconds")
        p.add_argument("items", nargs="*", help="inline inputs, one per argument")
        if verb == "enumerate":
            p.add_argument("--count", action="store_true", help="print only the number of tilings")
        if verb == "aggregate":
            p.add_argument("--system", help="majority system file")
        if verb == "cd-check":
            p.add_argument("--sigma", action="store_true",
                           help="input is one tiling; check its snake domain")
        if verb in ("build-cubillage", "export-graph"):
            p.add_argument("--orient", help="stick orientation file")
        if verb in ("build-chain", "build-symmetric"):
            p.add_argument("--seq", help="comma-separated sequence")
        if verb == "build-symmetric":
            p.add_argument("--parts", action="store_true", help="print the partition instead")
        if verb == "export-graph":
            p.add_argument("--kind", choices=("flip", "precedence"), default="flip")
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"rhombus-csd: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    handler = _VERBS[args.verb][0]
    try:
        return handler(args, _Out(args, stdout))
    except (UsageError, ValueError) as exc:
        stderr.write(f"rhombus-csd {args.verb}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
