"""Command-line front end: every operation, with JSON/CSV output.

Exit codes: 0 success, 2 usage or parse error, 3 size-cap violation,
4 non-convergence.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .circuits import export_text, lim_comp, nb_maxcomp
from .compress import bias_gain, find_optswaps, verify_optimality
from .errors import DivergenceError, ResourceCapError
from .hbac import HbacConfig, register_compression
from .limits import (analytic_limit, max_rounds, numerical_limits,
                     shannon_bound, single_round_limit, sqrt_bound)
from .regstate import RegisterBiases, marginal_bias, probamps

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_NONCONVERGENCE = 4


class UsageError(ValueError):
    pass


def _fmt(x: float) -> str:
    # 17 significant digits: enough to round-trip any double
    return format(float(x), ".17g")


def _to_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  "{k}": {_to_json(v, indent + 1)}' for k, v in obj.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {_to_json(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_biases(args) -> RegisterBiases:
    has_list = getattr(args, "biases", None) is not None
    has_pair = getattr(args, "n", None) is not None or getattr(args, "epsilon", None) is not None
    if has_list and has_pair:
        raise UsageError("--biases and --n/--epsilon are mutually exclusive")
    if has_list:
        try:
            values = [float(tok) for tok in args.biases.split(",") if tok != ""]
        except ValueError as exc:
            raise UsageError(f"bad bias list {args.biases!r}: {exc}") from None
        if not values:
            raise UsageError("empty bias list")
        return RegisterBiases.from_values(values)
    if args.n is None or args.epsilon is None:
        raise UsageError("provide either --biases or both --n and --epsilon")
    return RegisterBiases.equal(args.n, args.epsilon)


def _ket(j: int, n: int) -> str:
    return format(j, f"0{n}b")


def _matrix_rows(values: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in values]


def _matrix_csv(values: np.ndarray) -> str:
    n = values.shape[1]
    lines = ["round," + ",".join(f"q{i}" for i in range(1, n + 1))]
    for r, row in enumerate(values, start=1):
        lines.append(f"{r}," + ",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def cmd_optswaps(args) -> int:
    register = _parse_biases(args)
    dist = probamps(register)
    swaps = sorted(find_optswaps(dist))
    gain = bias_gain(dist, frozenset(swaps))
    before = marginal_bias(dist, 1)
    n = register.n
    report = {
        "schema": SCHEMA_VERSION,
        "command": "optswaps",
        "n": n,
        "biases": [b.value for b in register.biases],
        "swaps": [{"zero_t": j, "one_t": (1 << n) - 1 - j,
                   "ket_zero_t": _ket(j, n), "ket_one_t": _ket((1 << n) - 1 - j, n)}
                  for j in swaps],
        "count": len(swaps),
        "gain": gain,
        "target_bias_before": before,
        "target_bias_after": before + gain,
    }
    verification = None
    if args.verify:
        verification = verify_optimality(dist)
        report["verify"] = {
            "swaps_performed": verification.swaps_performed,
            "case1_passed": verification.case1_passed,
            "case2_passed": verification.case2_passed,
            "case3_passed": verification.case3_passed,
            "counterexamples": [
                {"case": c.case, "k": c.k, "l": c.l, "excess": c.excess}
                for c in verification.counterexamples],
        }
    if args.format == "json":
        _emit(_to_json(report) + "\n", args.out)
    elif args.format == "csv":
        lines = ["zero_t,one_t,ket_zero_t,ket_one_t"]
        lines += [f"{j},{(1 << n) - 1 - j},{_ket(j, n)},{_ket((1 << n) - 1 - j, n)}"
                  for j in swaps]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"n: {n}", f"swaps: {len(swaps)}"]
        for j in swaps:
            comp = (1 << n) - 1 - j
            lines.append(f"  {j} <-> {comp}    |{_ket(j, n)}> <-> |{_ket(comp, n)}>")
        lines.append(f"gain: {_fmt(gain)}")
        lines.append(f"target bias: {_fmt(before)} -> {_fmt(before + gain)}")
        if verification is not None:
            def word(flag):
                return "n/a" if flag is None else ("pass" if flag else "FAIL")
            lines.append(
                f"optimality: swaps={verification.swaps_performed} "
                f"case1={word(verification.case1_passed)} "
                f"case2={word(verification.case2_passed)} "
                f"case3={word(verification.case3_passed)}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_limits(args) -> int:
    register = _parse_biases(args)
    n = register.n
    rounds = args.rounds if args.rounds is not None else max_rounds(n)
    if args.analytic:
        values = register.values
        if np.unique(values).size != 1:
            raise UsageError("--analytic requires equal biases")
        eps = float(values[0])
        matrix = np.array([[analytic_limit(r, k, n, eps)
                            for k in range(1, n + 1)]
                           for r in range(1, rounds + 1)])
    else:
        matrix = numerical_limits(register, rounds, args.precision).values
    if args.format == "csv":
        _emit(_matrix_csv(matrix), args.out)
    else:
        _emit(_to_json({
            "schema": SCHEMA_VERSION,
            "command": "limits",
            "n": n,
            "rounds": rounds,
            "precision": args.precision,
            "analytic": bool(args.analytic),
            "matrix": _matrix_rows(matrix),
        }) + "\n", args.out)
    return EXIT_OK


def cmd_cool(args) -> int:
    register = _parse_biases(args)
    rounds = args.rounds if args.rounds is not None else max_rounds(register.n)
    config = HbacConfig(register, rounds, precision=args.precision, mode=args.mode)
    report = register_compression(config)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "cool",
        "n": register.n,
        "biases": [b.value for b in register.biases],
        "rounds": rounds,
        "precision": args.precision,
        "mode": args.mode,
        "complexity": report.complexity,
        "per_round_swaps": list(report.per_round_swaps),
        "while_passes": report.while_passes,
        "round_limits": _matrix_rows(report.round_limits.values),
        "targets": _matrix_rows(report.targets.values),
    }
    _emit(_to_json(payload) + "\n", args.out)
    return EXIT_OK


def cmd_circuit(args) -> int:
    if args.lim is not None:
        if args.from_biases is not None:
            raise UsageError("--lim and --from-biases are mutually exclusive")
        circuit = lim_comp(args.lim)
    elif args.from_biases is not None:
        try:
            values = [float(tok) for tok in args.from_biases.split(",") if tok != ""]
        except ValueError as exc:
            raise UsageError(f"bad bias list {args.from_biases!r}: {exc}") from None
        register = RegisterBiases.from_values(values)
        swaps = find_optswaps(probamps(register))
        circuit = nb_maxcomp(register.n, swaps)
    else:
        raise UsageError("provide --lim N or --from-biases LIST")
    _emit(export_text(circuit), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.ns is not None and args.epsilons is not None:
        raise UsageError("--ns and --epsilons are mutually exclusive")
    rows: list[tuple[str, float | int, int]] = []
    if args.ns is not None:
        if args.epsilon is None:
            raise UsageError("--ns requires --epsilon")
        try:
            ns = [int(tok) for tok in args.ns.split(",") if tok != ""]
        except ValueError as exc:
            raise UsageError(f"bad size list {args.ns!r}: {exc}") from None
        key = "n"
        for n in ns:
            rounds = args.rounds if args.rounds is not None else max_rounds(n)
            config = HbacConfig(RegisterBiases.equal(n, args.epsilon), rounds,
                                precision=args.precision, mode=args.mode)
            rows.append((key, n, register_compression(config).complexity))
    elif args.epsilons is not None:
        if args.n is None:
            raise UsageError("--epsilons requires --n")
        try:
            epsilons = [float(tok) for tok in args.epsilons.split(",") if tok != ""]
        except ValueError as exc:
            raise UsageError(f"bad bias list {args.epsilons!r}: {exc}") from None
        key = "epsilon"
        rounds = args.rounds if args.rounds is not None else max_rounds(args.n)
        for eps in epsilons:
            config = HbacConfig(RegisterBiases.equal(args.n, eps), rounds,
                                precision=args.precision, mode=args.mode)
            rows.append((key, eps, register_compression(config).complexity))
    else:
        raise UsageError("provide --ns LIST or --epsilons LIST")
    if args.format == "json":
        _emit(_to_json({
            "schema": SCHEMA_VERSION,
            "command": "sweep",
            "rows": [{key: v, "complexity": c} for key, v, c in rows],
        }) + "\n", args.out)
    else:
        lines = [f"{rows[0][0]},complexity"]
        for key, v, c in rows:
            value = str(v) if key == "n" else _fmt(v)
            lines.append(f"{value},{c}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.n is None or args.epsilon is None:
        raise UsageError("bounds requires --n and --epsilon")
    n, eps = args.n, args.epsilon
    rounds = args.rounds if args.rounds is not None else max_rounds(n)
    k = args.k
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "bounds",
        "n": n,
        "epsilon": eps,
        "rounds": rounds,
        "k": k,
        "shannon_bound": shannon_bound(n, eps),
        "sqrt_bound": sqrt_bound(n, eps),
        "single_round_limit": single_round_limit(eps, n - 1),
        "analytic_limit": analytic_limit(rounds, k, n, eps),
    }
    _emit(_to_json(payload) + "\n", args.out)
    return EXIT_OK


def _add_bias_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--biases", help="comma-separated per-qubit biases, e.g. 0.2,0.5")
    p.add_argument("--n", type=int, help="register size (with --epsilon)")
    p.add_argument("--epsilon", type=float, help="equal bias for all qubits (with --n)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcool",
        description="Optimal entropy-compression swaps and heat-bath "
                    "algorithmic cooling of diagonal qubit registers.")
    parser.add_argument("--version", action="version", version=f"qcool {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optswaps", help="select the beneficial complementary swaps")
    _add_bias_args(p)
    p.add_argument("--verify", action="store_true",
                   help="run the exhaustive optimality check")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(func=cmd_optswaps)

    p = sub.add_parser("limits", help="per-round cooling limits "
                                      "(CSV columns: round,q1..qn)")
    _add_bias_args(p)
    p.add_argument("--rounds", type=int, help="number of limiting rounds (default n-2)")
    p.add_argument("--precision", type=float, default=1e-9)
    p.add_argument("--analytic", action="store_true",
                   help="closed-form evaluation (equal biases only)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("cool", help="full register compression with swap counting")
    _add_bias_args(p)
    p.add_argument("--rounds", type=int)
    p.add_argument("--precision", type=float, default=1e-9)
    p.add_argument("--mode", choices=["full", "lim"], default="full")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cool)

    p = sub.add_parser("circuit", help="synthesize a .nbmc reversible circuit")
    p.add_argument("--from-biases", dest="from_biases",
                   help="emit the NB-MaxComp of the biases' optswap set")
    p.add_argument("--lim", type=int, help="emit the n-wire limiting-swap circuit")
    p.add_argument("--out")
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("sweep", help="complexity sweep "
                                     "(CSV columns: n,complexity or epsilon,complexity)")
    p.add_argument("--ns", help="comma-separated register sizes (with --epsilon)")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--epsilons", help="comma-separated biases (with --n)")
    p.add_argument("--n", type=int)
    p.add_argument("--rounds", type=int, help="override rounds (default n-2)")
    p.add_argument("--precision", type=float, default=1e-9)
    p.add_argument("--mode", choices=["full", "lim"], default="full")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="closed-system bounds and the analytic limit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--rounds", type=int, help="round for the analytic limit (default n-2)")
    p.add_argument("--k", type=int, default=1, help="qubit for the analytic limit")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
