"""Command-line front end.

Every command emits one JSON report document with the same top-level
shape: schema_version, command, inputs, outputs, timing_seconds. Floats
are printed with 17 significant digits so documents from identical inputs
are byte-identical apart from the timing field. Exit codes: 0 on success,
1 when a verification check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from . import __version__
from .analysis import (
    ResistanceReport,
    bias,
    collision_resistance,
    epsilon_of_biased_set,
)
from .hashing import (
    BiasedSet,
    HashForm,
    ParamSet,
    build_shallow_hash,
    build_single_qubit_hash,
    build_standard_hash,
    derive_biased_set,
)
from .search import SearchConfig, random_search
from .verification import DEFAULT_SEED, run_all_checks

SCHEMA_VERSION = "1"

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["schema_version", "command", "inputs", "outputs", "timing_seconds"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["hash", "bias", "resist", "search", "verify"]},
        "inputs": {"type": "object"},
        "outputs": {"type": "object"},
        "timing_seconds": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}


def _format_float(value: float) -> str:
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError(f"cannot serialize non-finite value {value!r}")
    text = format(value, ".17g")
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def _fragment(value: Any, indent: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    if isinstance(value, dict):
        if not value:
            return "{}"
        pad = "  " * (indent + 1)
        rows = ",\n".join(
            f"{pad}{json.dumps(str(key))}: {_fragment(item, indent + 1)}"
            for key, item in value.items()
        )
        return "{\n" + rows + "\n" + "  " * indent + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fragment(item, indent) for item in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_report(document: dict[str, Any]) -> str:
    """Serialize a report document deterministically, floats at 17
    significant digits, keys in insertion order."""
    return _fragment(document, 0) + "\n"


def parse_residues(text: str) -> list[int]:
    """Parse a residue list given inline ("1,2,3") or as a file path whose
    content is integers separated by commas or whitespace."""
    source = text
    path = Path(text)
    try:
        if path.is_file():
            source = path.read_text()
    except OSError:
        pass
    tokens = source.replace(",", " ").split()
    if not tokens:
        raise ValueError(f"no integers found in {text!r}")
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ValueError(f"could not parse {text!r} as an integer list") from None


class _Command:
    """Shared emit plumbing; subcommand handlers return an exit code."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.started = time.perf_counter()

    def warn(self, message: str) -> None:
        if not self.args.quiet:
            print(f"warning: {message}", file=sys.stderr)

    def emit(self, command: str, inputs: dict, outputs: dict) -> None:
        document = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "outputs": outputs,
            "timing_seconds": time.perf_counter() - self.started,
        }
        text = dumps_report(document)
        if self.args.out:
            Path(self.args.out).write_text(text)
            if not self.args.quiet:
                print(f"wrote {self.args.out}", file=sys.stderr)
        else:
            sys.stdout.write(text)


def _resolve_form(text: str) -> HashForm:
    return HashForm(text)


def _check_x(x: int, q: int) -> None:
    if not 0 <= x < q:
        raise ValueError(f"x must be in [0, q): got x={x} with q={q}")


def _ingest_params(command: _Command, q: int, raw: list[int]) -> ParamSet:
    params = ParamSet(q, tuple(raw))
    if list(params.elements) != raw:
        command.warn(f"parameters reduced mod {q} to {list(params.elements)}")
    return params


def _ingest_biased(command: _Command, q: int, raw: list[int]) -> BiasedSet:
    biased = BiasedSet(q, tuple(raw))
    if list(biased.elements) != raw:
        command.warn(f"residues reduced mod {q} to {list(biased.elements)}")
    return biased


def _report_outputs(report: ResistanceReport) -> dict[str, Any]:
    return {
        "epsilon": report.epsilon,
        "worst_x": report.worst_x,
        "table": [[x, value] for x, value in report.table()],
    }


def cmd_hash(args: argparse.Namespace) -> int:
    command = _Command(args)
    form = _resolve_form(args.form)
    _check_x(args.x, args.q)
    if form is not HashForm.STANDARD and args.b is not None:
        raise ValueError(f"--b only applies to the standard form, not {form.value}")
    inputs: dict[str, Any] = {"form": form.value, "q": args.q, "x": args.x}
    if form is HashForm.STANDARD and args.b is not None:
        if args.s is not None:
            raise ValueError("give either --s or --b, not both")
        raw = parse_residues(args.b)
        inputs["b"] = raw
        biased = _ingest_biased(command, args.q, raw)
        state = build_standard_hash(biased, args.x)
        set_info: dict[str, Any] = {"biased_set": list(biased.elements)}
    else:
        if args.s is None:
            raise ValueError(f"the {form.value} form needs --s (or --b for standard)")
        raw = parse_residues(args.s)
        inputs["s"] = raw
        params = _ingest_params(command, args.q, raw)
        if form is HashForm.STANDARD:
            biased = derive_biased_set(params)
            state = build_standard_hash(biased, args.x)
            set_info = {
                "parameters": list(params.elements),
                "biased_set": list(biased.elements),
            }
        elif form is HashForm.SHALLOW:
            state = build_shallow_hash(params, args.x)
            set_info = {"parameters": list(params.elements)}
        else:
            inputs["sum_qubit"] = args.sum_qubit == "on"
            state = build_single_qubit_hash(
                params, args.x, include_sum_qubit=args.sum_qubit == "on"
            )
            set_info = {"parameters": list(params.elements)}
    outputs = {
        "form": form.value,
        **set_info,
        "num_qubits": state.num_qubits,
        "amplitudes": [float(a) for a in state.amplitudes],
    }
    command.emit("hash", inputs, outputs)
    return 0


def cmd_bias(args: argparse.Namespace) -> int:
    command = _Command(args)
    raw = parse_residues(args.b)
    inputs: dict[str, Any] = {"q": args.q, "b": raw}
    biased = _ingest_biased(command, args.q, raw)
    if args.x is not None:
        inputs["x"] = args.x
        value = bias(biased, args.x)
        outputs: dict[str, Any] = {
            "mode": "single-x",
            "biased_set": list(biased.elements),
            "x": args.x,
            "bias": value,
        }
        if args.x == 0:
            command.warn("bias at x=0 is always 1; epsilon excludes x=0")
            outputs["note"] = "x=0 always has bias 1 and is excluded from epsilon"
    else:
        report = epsilon_of_biased_set(biased)
        outputs = {
            "mode": "sweep",
            "biased_set": list(biased.elements),
            **_report_outputs(report),
        }
    command.emit("bias", inputs, outputs)
    return 0


def cmd_resist(args: argparse.Namespace) -> int:
    command = _Command(args)
    form = _resolve_form(args.form)
    raw = parse_residues(args.s)
    inputs = {
        "q": args.q,
        "s": raw,
        "form": form.value,
        "sum_qubit": args.sum_qubit == "on",
    }
    params = _ingest_params(command, args.q, raw)
    report = collision_resistance(
        params, form, include_sum_qubit=args.sum_qubit == "on"
    )
    outputs = {
        "form": form.value,
        "parameters": list(params.elements),
        **_report_outputs(report),
    }
    command.emit("resist", inputs, outputs)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    command = _Command(args)
    form = _resolve_form(args.form)
    config = SearchConfig(
        q=args.q,
        n=args.n,
        trials=args.trials,
        seed=args.seed,
        target_epsilon=args.target_epsilon,
    )
    inputs = {
        "q": args.q,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "target_epsilon": args.target_epsilon,
        "form": form.value,
        "sum_qubit": args.sum_qubit == "on",
    }
    result = random_search(config, form, include_sum_qubit=args.sum_qubit == "on")
    outputs = {
        "form": form.value,
        "best_set": list(result.best_set.elements),
        "trials_run": result.trials_run,
        "history": [[trial, value] for trial, value in result.history],
        **_report_outputs(result.report),
    }
    command.emit("search", inputs, outputs)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    command = _Command(args)
    results = run_all_checks(
        q_max=args.q_max, n_max=args.n_max, seed=args.seed, trials=args.trials
    )
    inputs = {
        "q_max": args.q_max,
        "n_max": args.n_max,
        "seed": args.seed,
        "trials": args.trials,
    }
    outputs = {
        "checks": [
            {
                "name": result.name,
                "passed": result.passed,
                "max_deviation": result.max_deviation,
                "detail": result.detail,
            }
            for result in results
        ],
        "all_passed": all(result.passed for result in results),
    }
    command.emit("verify", inputs, outputs)
    return 0 if outputs["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zqhash",
        description="Hash states over the residues mod q: build, analyze, search.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the report here")
    common.add_argument(
        "--quiet", action="store_true", help="suppress warnings and notes"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hash = sub.add_parser(
        "hash", parents=[common], help="build one hash state and dump amplitudes"
    )
    p_hash.add_argument("--q", type=int, required=True, help="modulus")
    p_hash.add_argument(
        "--form",
        required=True,
        choices=[form.value for form in HashForm],
        help="construction to use",
    )
    p_hash.add_argument("--s", help="parameter set, inline or a file path")
    p_hash.add_argument(
        "--b", help="explicit residue set (standard form), inline or a file path"
    )
    p_hash.add_argument("--x", type=int, required=True, help="input residue")
    p_hash.add_argument(
        "--sum-qubit",
        choices=["on", "off"],
        default="off",
        help="append the sum-parameter qubit (single-qubit form)",
    )
    p_hash.set_defaults(func=cmd_hash)

    p_bias = sub.add_parser(
        "bias", parents=[common], help="bias of a residue set, one x or a sweep"
    )
    p_bias.add_argument("--q", type=int, required=True, help="modulus")
    p_bias.add_argument(
        "--b", required=True, help="residue set, inline or a file path"
    )
    p_bias.add_argument(
        "--x", type=int, help="single point; omit for the full sweep"
    )
    p_bias.set_defaults(func=cmd_bias)

    p_resist = sub.add_parser(
        "resist",
        parents=[common],
        help="certified collision resistance of a parameter set",
    )
    p_resist.add_argument("--q", type=int, required=True, help="modulus")
    p_resist.add_argument(
        "--s", required=True, help="parameter set, inline or a file path"
    )
    p_resist.add_argument(
        "--form",
        choices=[form.value for form in HashForm],
        default=HashForm.SINGLE_QUBIT.value,
        help="construction to certify",
    )
    p_resist.add_argument(
        "--sum-qubit",
        choices=["on", "off"],
        default="off",
        help="append the sum-parameter qubit (single-qubit form)",
    )
    p_resist.set_defaults(func=cmd_resist)

    p_search = sub.add_parser(
        "search", parents=[common], help="random search for a low-epsilon set"
    )
    p_search.add_argument("--q", type=int, required=True, help="modulus")
    p_search.add_argument(
        "--n", type=int, required=True, help="parameters per candidate"
    )
    p_search.add_argument(
        "--trials", type=int, default=100, help="candidates to examine"
    )
    p_search.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="search seed"
    )
    p_search.add_argument(
        "--target-epsilon",
        type=float,
        help="stop early at or below this epsilon",
    )
    p_search.add_argument(
        "--form",
        choices=[form.value for form in HashForm],
        default=HashForm.SINGLE_QUBIT.value,
        help="construction to certify",
    )
    p_search.add_argument(
        "--sum-qubit",
        choices=["on", "off"],
        default="off",
        help="append the sum-parameter qubit (single-qubit form)",
    )
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run the simulator self-checks"
    )
    p_verify.add_argument(
        "--q-max", type=int, default=64, help="largest modulus to sweep"
    )
    p_verify.add_argument(
        "--n-max", type=int, default=5, help="largest parameter count"
    )
    p_verify.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="sweep seed"
    )
    p_verify.add_argument(
        "--trials", type=int, default=5, help="random sets per modulus"
    )
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
