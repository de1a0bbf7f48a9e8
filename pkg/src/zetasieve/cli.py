"""Command-line front end.

Subcommands: terms, eval, converge, zeros, special.  Data goes to stdout
(or --out FILE), diagnostics to stderr.  JSON emissions are wrapped in an
envelope {schema_version, command, parameters, payload} so a result file
records the invocation that produced it.  CSV uses '.' decimals and 17
significant digits, enough to round-trip a double losslessly.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import representations as rep
from .admissible import admissible_up_to
from .errors import DomainError, InputError
from .reference import reference_zeta
from .representations import (
    RepresentationKind,
    euler_even_zeta,
    remainder_bound,
    special_value,
    zeta_alt_coth_partial,
    zeta_alt_partial,
    zeta_bernoulli_partial,
    zeta_coth_partial,
    zeta_direct_partial,
)
from .rootfind import PRESETS, SearchRegion, find_zeros, make_target

__all__ = ["main"]

SCHEMA_VERSION = "1"

_EVALUATORS = {
    "direct": zeta_direct_partial,
    "coth": zeta_coth_partial,
    "alt": zeta_alt_partial,
    "alt-coth": zeta_alt_coth_partial,
}


def _g(x) -> str:
    """17 significant digits: lossless double round-trip."""
    return format(float(x), ".17g")


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise InputError(f"bad complex literal {text!r}") from exc


def _parse_region(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise InputError(
            f"expected 're_min,re_max,im_min,im_max', got {text!r}"
        )
    try:
        values = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad region literal {text!r}") from exc
    return values


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.split(",")
    try:
        numbers = [int(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"bad grid literal {text!r}") from exc
    if len(numbers) == 1:
        return numbers[0], numbers[0]
    if len(numbers) == 2:
        return numbers[0], numbers[1]
    raise InputError(f"expected 'N' or 'N_re,N_im', got {text!r}")


def _envelope(command: str, parameters: dict, payload) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "payload": payload,
    }
    return json.dumps(doc, indent=2)


def _reference_delta(value: complex, z: complex) -> float | None:
    try:
        return abs(value - reference_zeta(z))
    except (DomainError, InputError):
        return None


def _cmd_terms(args) -> str:
    aset = admissible_up_to(args.n)
    if args.json:
        return _envelope(
            "terms",
            {"n": args.n},
            {"members": list(aset.members), "term_count": aset.term_count},
        )
    lines = [str(r) for r in aset.members]
    lines.append(f"l={aset.term_count}")
    return "\n".join(lines)


def _evaluate(args):
    if args.rep == "bernoulli":
        return zeta_bernoulli_partial(args.z, args.n, args.order)
    return _EVALUATORS[args.rep](args.z, args.n)


def _cmd_eval(args) -> str:
    result = _evaluate(args)
    delta = _reference_delta(result.value, args.z)
    if args.json:
        return _envelope(
            "eval",
            {
                "rep": args.rep,
                "z": [args.z.real, args.z.imag],
                "n": args.n,
                "order": args.order if args.rep == "bernoulli" else None,
            },
            {
                "value_re": result.value.real,
                "value_im": result.value.imag,
                "term_count": result.term_count,
                "tail_bound": result.tail_bound,
                "reference_delta": delta,
            },
        )
    lines = [
        f"value_re = {_g(result.value.real)}",
        f"value_im = {_g(result.value.imag)}",
        f"l = {result.term_count}",
    ]
    if result.tail_bound is not None:
        lines.append(f"tail_bound = {_g(result.tail_bound)}")
    if delta is not None:
        lines.append(f"reference_delta = {_g(delta)}")
    return "\n".join(lines)


def _converge_values(z: complex, n_max: int, kind: str, ns: list[int]):
    """Values at every requested truncation from one cumulative pass."""
    members, logs, signs = rep._base_data(n_max)
    rep._gate(z, n_max, rep.POLE_GATE)
    if kind in ("direct", "coth"):
        sign_vec = None
    else:
        sign_vec = signs
    if kind in ("direct", "alt"):
        if z.real >= 0.0:
            w = np.exp(-z * logs)
            terms = w / (1.0 - w)
        else:
            v = np.exp(z * logs)
            terms = 1.0 / (v - 1.0)
    else:
        terms = 1.0 / np.tanh(0.5 * z * logs)
    if sign_vec is not None:
        terms = terms * sign_vec
    partial = np.cumsum(terms)
    counts = np.searchsorted(members, np.asarray(ns, dtype=np.float64), "right")
    prefactor = None
    if kind in ("alt", "alt-coth"):
        prefactor = rep._eta_prefactor(z)
    out = []
    for n_row, count in zip(ns, counts):
        count = int(count)
        acc = complex(partial[count - 1]) if count else 0j
        if kind == "direct":
            value = 1.0 + acc
        elif kind == "coth":
            value = (2.0 - count) / 2.0 + 0.5 * acc
        elif kind == "alt":
            value = (1.0 + acc) / prefactor
        else:
            constant = 1.0 if count % 2 == 0 else 0.5
            value = (constant + 0.5 * acc) / prefactor
        scale = 1.0 if prefactor is None else 1.0 / abs(prefactor)
        tail = (
            remainder_bound(n_row, z.real) * scale if z.real > 1.0 else None
        )
        out.append((n_row, value, tail))
    return out


def _cmd_converge(args) -> str:
    if args.step < 1:
        raise InputError(f"step must be >= 1, got {args.step}")
    if args.n_max < 2:
        raise InputError(f"n-max must be >= 2, got {args.n_max}")
    ns = [n for n in range(args.step, args.n_max + 1, args.step) if n >= 2]
    if not ns:
        raise InputError("no truncations >= 2 to report; raise n-max or step")
    try:
        reference = reference_zeta(args.z)
    except (DomainError, InputError):
        reference = None
    if args.rep == "bernoulli":
        rows = []
        for n_row in ns:
            result = zeta_bernoulli_partial(args.z, n_row, args.order)
            rows.append((n_row, result.value, result.tail_bound))
    else:
        rows = _converge_values(args.z, args.n_max, args.rep, ns)
    lines = ["n,value_re,value_im,abs_error,tail_bound"]
    for n_row, value, tail in rows:
        err = "" if reference is None else _g(abs(value - reference))
        bound = "" if tail is None else _g(tail)
        lines.append(
            f"{n_row},{_g(value.real)},{_g(value.imag)},{err},{bound}"
        )
    return "\n".join(lines)


def _zeros_target(args):
    if args.preset is not None:
        if args.rep is not None or args.n is not None:
            raise InputError("give either --preset or --rep/--n, not both")
        try:
            return args.preset, PRESETS[args.preset]
        except KeyError:
            raise InputError(
                f"unknown preset {args.preset!r}; choose from"
                f" {sorted(PRESETS)}"
            ) from None
    if args.rep is None or args.n is None:
        raise InputError("need --preset, or --rep and --n")
    kind = (
        RepresentationKind.DIRECT
        if args.rep == "direct"
        else RepresentationKind.ALTERNATING
    )
    constant = 1.0 if args.constant is None else args.constant
    return None, make_target(kind, args.n, constant)


def _cmd_zeros(args) -> str:
    preset_name, target = _zeros_target(args)
    grid_re, grid_im = args.grid
    region = SearchRegion(*args.region, grid_re=grid_re, grid_im=grid_im)
    roots = find_zeros(target, region, tol=args.tol, threads=args.threads)
    payload = {
        "roots": [
            {
                "re": r.location.real,
                "im": r.location.imag,
                "residual": r.residual,
                "verified": r.verified,
                "conjugate_of": r.conjugate_of,
                "winding": r.winding,
            }
            for r in roots
        ]
    }
    parameters = {
        "preset": preset_name,
        "rep": target.kind.value,
        "n": target.n,
        "constant": target.constant,
        "region": list(args.region),
        "grid": [grid_re, grid_im],
        "tol": args.tol,
        "threads": args.threads,
    }
    return _envelope("zeros", parameters, payload)


def _cmd_special(args) -> str:
    result = special_value(args.kind, args.m, args.n)
    euler = None
    deviation = None
    if args.kind == "even":
        euler = euler_even_zeta(args.m)
        deviation = abs(result.value - euler)
    if args.json:
        return _envelope(
            "special",
            {"kind": args.kind, "m": args.m, "n": args.n},
            {
                "value_re": result.value.real,
                "value_im": result.value.imag,
                "term_count": result.term_count,
                "euler": euler,
                "deviation": deviation,
            },
        )
    lines = [f"value = {_g(result.value.real)}"]
    if euler is not None:
        lines.append(f"euler = {_g(euler)}")
        lines.append(f"deviation = {_g(deviation)}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetasieve",
        description=(
            "Partial sums of zeta over non-perfect-power bases:"
            " evaluation, convergence tables, and zero searches."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_terms = sub.add_parser("terms", help="list the admissible bases up to n")
    p_terms.add_argument("--n", type=int, required=True)
    p_terms.add_argument("--json", action="store_true")
    p_terms.add_argument("--out", type=Path, default=None)
    p_terms.set_defaults(handler=_cmd_terms)

    p_eval = sub.add_parser("eval", help="evaluate one representation at z")
    p_eval.add_argument(
        "--rep",
        choices=["direct", "coth", "alt", "alt-coth", "bernoulli"],
        required=True,
    )
    p_eval.add_argument("--z", type=_parse_complex, required=True)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument(
        "--order", type=int, default=40, help="Bernoulli series order M"
    )
    p_eval.add_argument("--json", action="store_true")
    p_eval.add_argument("--out", type=Path, default=None)
    p_eval.set_defaults(handler=_cmd_eval)

    p_conv = sub.add_parser(
        "converge", help="CSV of values and errors over truncations"
    )
    p_conv.add_argument(
        "--rep",
        choices=["direct", "coth", "alt", "alt-coth", "bernoulli"],
        required=True,
    )
    p_conv.add_argument("--z", type=_parse_complex, required=True)
    p_conv.add_argument("--n-max", dest="n_max", type=int, required=True)
    p_conv.add_argument("--step", type=int, required=True)
    p_conv.add_argument("--order", type=int, default=40)
    p_conv.add_argument("--out", type=Path, default=None)
    p_conv.set_defaults(handler=_cmd_converge)

    p_zeros = sub.add_parser(
        "zeros", help="search a region for zeros of a partial-sum target"
    )
    p_zeros.add_argument("--preset", choices=sorted(PRESETS), default=None)
    p_zeros.add_argument("--rep", choices=["direct", "alt"], default=None)
    p_zeros.add_argument("--n", type=int, default=None)
    p_zeros.add_argument("--constant", type=float, default=None)
    p_zeros.add_argument("--region", type=_parse_region, required=True)
    p_zeros.add_argument("--tol", type=float, default=1e-10)
    p_zeros.add_argument("--grid", type=_parse_grid, default=(40, 40))
    p_zeros.add_argument("--threads", type=int, default=1)
    p_zeros.add_argument("--out", type=Path, default=None)
    p_zeros.set_defaults(handler=_cmd_zeros)

    p_special = sub.add_parser(
        "special", help="partial sum at integer arguments m, 2m, or 2m+1"
    )
    p_special.add_argument(
        "--kind", choices=["any", "even", "odd"], required=True
    )
    p_special.add_argument("--m", type=int, required=True)
    p_special.add_argument("--n", type=int, required=True)
    p_special.add_argument("--json", action="store_true")
    p_special.add_argument("--out", type=Path, default=None)
    p_special.set_defaults(handler=_cmd_special)

    return parser


# Flags whose values legitimately start with a minus sign ("-2,2,-6,6");
# argparse would misread the value as an option, so fold it into --flag=value.
_NEGATIVE_VALUE_FLAGS = {"--z", "--region", "--constant", "--tol"}


def _fold_negative_values(argv: list[str]) -> list[str]:
    folded = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _NEGATIVE_VALUE_FLAGS
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and len(argv[i + 1]) > 1
            and (argv[i + 1][1].isdigit() or argv[i + 1][1] == ".")
        ):
            folded.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            folded.append(token)
            i += 1
    return folded


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fold_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.out is not None:
        args.out.write_text(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
