"""Command line front end: `genbell bell|ghz|measure|verify|render|thuemorse`"""

from typing import List, Optional, Callable, Dict
import argparse
import logging
import sys

import numpy as np
from rich.console import Console
from rich.table import Table

from genbell import log
from genbell.config import Config
from genbell.core.state import PureState, IMPLICIT_MAX_QUBITS
from genbell.core.io import read_state, write_state, dump_state, format_float
from genbell.entanglement import ghz_state
from genbell.errors import CapacityError, DomainError, StateFileError
from genbell.gates import GateKind, GateTag, bell_state
from genbell.render import RenderSpec, write_ppm
from genbell.report import ReportRecord
from genbell.thuemorse import prefix, evil_odious_indices
from genbell import verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CAPACITY = 4

THUEMORSE_MAX_N = 24
NONZERO_TOL = 1e-12
SUMMARY_WIDTH = 120


class UsageError(ValueError):
    """Flags parsed but their values are not acceptable"""


def _out() -> Console:
    return Console(highlight=False, width=SUMMARY_WIDTH, soft_wrap=True)


def _err() -> Console:
    return Console(stderr=True, highlight=False, soft_wrap=True)


def _write_generated(s: PureState, label: str, out: Optional[str]) -> None:
    nonzeros = int(np.count_nonzero(np.abs(s.amplitudes) > NONZERO_TOL))
    summary = f"{label} n={s.n} nonzeros={nonzeros} norm={format_float(float(np.linalg.norm(s.amplitudes)))}"
    if out is None:
        dump_state(s, sys.stdout)
        _err().print(summary, markup=False)
        return
    write_state(s, out)
    _out().print(summary, markup=False)


def cmd_bell(args: argparse.Namespace, cfg: Config) -> int:
    if args.n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{args.n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    if not 0 <= args.k < 1 << args.n:
        raise UsageError(f"--k must be within 0..{(1 << args.n) - 1}, got {args.k}")

    _write_generated(bell_state(args.n, args.k), f"bell k={args.k}", args.out)
    return EXIT_OK


def cmd_ghz(args: argparse.Namespace, cfg: Config) -> int:
    if args.n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{args.n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
    if args.n < 1:
        raise UsageError(f"--n must be at least 1, got {args.n}")

    _write_generated(ghz_state(args.n), "ghz", args.out)
    return EXIT_OK


def cmd_measure(args: argparse.Namespace, cfg: Config) -> int:
    s = read_state(args.path)
    record = ReportRecord.measure(s, f"file:{args.path}")
    if args.format == "kv":
        for line in record.to_kv():
            sys.stdout.write(line + "\n")
    else:
        _out().print(record.to_table())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    if args.list:
        for name in verify.property_names():
            sys.stdout.write(name + "\n")
        return EXIT_OK

    max_n = cfg.max_n if args.max_n is None else args.max_n
    seed = cfg.seed if args.seed is None else args.seed
    trials = cfg.trials if args.trials is None else args.trials
    if not verify.VERIFY_MIN_N <= max_n <= verify.VERIFY_MAX_N:
        raise UsageError(f"--max-n must be within {verify.VERIFY_MIN_N}..{verify.VERIFY_MAX_N}, got {max_n}")
    if trials < 1:
        raise UsageError(f"--trials must be positive, got {trials}")
    if args.only:
        unknown = [name for name in args.only if name not in verify.PROPERTIES]
        if unknown:
            raise UsageError(f"unknown properties: {', '.join(unknown)}")

    results = verify.run_suite(seed, max_n, trials, only=args.only, progress=sys.stderr.isatty())
    failed = [res for res in results if not res.passed]

    if args.format == "kv":
        for res in results:
            sys.stdout.write(res.summary() + "\n")
        sys.stdout.write(f"record=verify seed={seed} max_n={max_n} trials={trials} failed={len(failed)}\n")
    else:
        table = Table(title=f"verify seed={seed} max_n={max_n} trials={trials}")
        for column in ("property", "checks", "failures", "worst residual", "limit", "status"):
            table.add_column(column)
        for res in results:
            status = "pass" if res.passed else "FAIL"
            table.add_row(res.name, str(res.checks), str(res.failures), f"{res.worst:.3e}", f"{res.limit:.1e}", status)
        console = _out()
        console.print(table)
        console.print(f"{len(results) - len(failed)}/{len(results)} properties passed", markup=False)

    for res in failed:
        _err().print(f"failed: {res.failing_instance}", markup=False)
        _err().print(
            f"replay: genbell verify --seed {seed} --max-n {max_n} --trials {trials} --only {res.name}",
            markup=False,
        )
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _render_target(gate: str, n: Optional[int]) -> GateTag:
    if "(" in gate:
        if n is not None:
            raise UsageError(f"--n conflicts with the size in '{gate}'")
        return GateTag.parse(gate)
    try:
        kind = GateKind(gate)
    except ValueError:
        raise UsageError(f"unknown gate '{gate}', expected one of {', '.join(k.value for k in GateKind)}")
    if kind.sized and n is None:
        raise UsageError(f"{kind.value} needs --n")
    if not kind.sized and n is not None:
        raise UsageError(f"{kind.value} has a fixed size and takes no --n")
    return GateTag(kind, n if kind.sized else None)


def cmd_render(args: argparse.Namespace, cfg: Config) -> int:
    cellsize = cfg.cellsize if args.cellsize is None else args.cellsize
    if cellsize < 1:
        raise UsageError(f"--cellsize must be positive, got {cellsize}")

    spec = RenderSpec(_render_target(args.gate, args.n), cellsize)
    write_ppm(spec, args.out)
    _out().print(f"rendered {spec.target} as {spec.size}x{spec.size} to {args.out}", markup=False)
    return EXIT_OK


def cmd_thuemorse(args: argparse.Namespace, cfg: Config) -> int:
    if not 1 <= args.n <= THUEMORSE_MAX_N:
        raise UsageError(f"--n must be within 1..{THUEMORSE_MAX_N}, got {args.n}")

    if args.show == "bits":
        bits = [str(b) for b in prefix(args.n).bits.tolist()]
        if args.format == "kv":
            sys.stdout.write(f"record=thuemorse n={args.n} bits={''.join(bits)}\n")
        else:
            sys.stdout.write(" ".join(bits) + "\n")
        return EXIT_OK

    classes = evil_odious_indices(args.n)
    evil = [str(i) for i in classes.evil.tolist()]
    odious = [str(i) for i in classes.odious.tolist()]
    if args.format == "kv":
        sys.stdout.write(f"record=partition n={args.n} evil={','.join(evil)} odious={','.join(odious)}\n")
    else:
        sys.stdout.write(f"evil: {' '.join(evil)}\nodious: {' '.join(odious)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genbell", description="Generalized Bell states and entanglement witnesses")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    bell = sub.add_parser("bell", help="write the Bell state B_{2^n}|k>")
    bell.add_argument("--n", type=int, required=True, help="qubit count, 2..26")
    bell.add_argument("--k", type=int, required=True, help="basis index, 0..2^n-1")
    bell.add_argument("--out", help="state file to write, stdout when omitted")
    bell.set_defaults(handler=cmd_bell)

    ghz = sub.add_parser("ghz", help="write the GHZ state")
    ghz.add_argument("--n", type=int, required=True, help="qubit count, 1..26")
    ghz.add_argument("--out", help="state file to write, stdout when omitted")
    ghz.set_defaults(handler=cmd_ghz)

    measure = sub.add_parser("measure", help="report Q, F, Schmidt spectra and product verdict of a state file")
    measure.add_argument("path", help="state file to read")
    measure.add_argument("--format", choices=["text", "kv"], default="text")
    measure.set_defaults(handler=cmd_measure)

    ver = sub.add_parser("verify", help="run the property suite")
    ver.add_argument("--max-n", type=int, help="largest qubit count, 2..12")
    ver.add_argument("--seed", type=int)
    ver.add_argument("--trials", type=int, help="random trials per property")
    ver.add_argument("--only", action="append", help="run only this property, repeatable")
    ver.add_argument("--list", action="store_true", help="list property names and exit")
    ver.add_argument("--format", choices=["text", "kv"], default="text")
    ver.set_defaults(handler=cmd_verify)

    render = sub.add_parser("render", help="render an operator as a portable pixmap")
    render.add_argument("gate", help="gate name such as M, Bell, CnotGen, Walsh, LMatrix, or a tag like 'M(3)'")
    render.add_argument("--n", type=int, help="qubit count for sized gates")
    render.add_argument("--cellsize", type=int, help="pixels per matrix entry")
    render.add_argument("--out", required=True, help="pixmap file to write")
    render.set_defaults(handler=cmd_render)

    thue = sub.add_parser("thuemorse", help="print the Thue-Morse prefix or the evil/odious partition")
    thue.add_argument("--n", type=int, required=True, help="exponent, the prefix has 2^n terms")
    thue.add_argument("--show", choices=["bits", "partition"], default="bits")
    thue.add_argument("--format", choices=["text", "kv"], default="text")
    thue.set_defaults(handler=cmd_thuemorse)

    return parser


_EXIT_CODES: Dict[type, int] = {
    CapacityError: EXIT_CAPACITY,
    StateFileError: EXIT_IO,
    OSError: EXIT_IO,
    UsageError: EXIT_USAGE,
    DomainError: EXIT_USAGE,
    ValueError: EXIT_USAGE,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI

    Args:
        argv (Optional[List[str]], optional): Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        int: Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    try:
        cfg = Config()
    except ValueError as e:
        _err().print(f"error: {e}", markup=False)
        return EXIT_USAGE

    if args.verbose:
        log.debug()
    else:
        log.setup(cfg.log_level)
    handler: Callable[[argparse.Namespace, Config], int] = args.handler
    try:
        return handler(args, cfg)
    except tuple(_EXIT_CODES) as e:
        code = next(c for exc, c in _EXIT_CODES.items() if isinstance(e, exc))
        logging.debug("command failed", exc_info=True)
        _err().print(f"error: {e}", markup=False)
        return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
