"""Command-line front end.

Exit status: 0 on success, 1 when an oracle residual exceeds the tolerance,
2 for malformed input (bad operator/excitation strings, out-of-range modes,
unreadable system files, invalid gate names).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import checks
from .fermion import ParseError, anti_hermitian_generator, parse_excitation, parse_operator
from .gates import gate_matrix
from .oracle import expm_antihermitian, matrix_of_circuit, matrix_of_pauli_sum, phase_residual
from .orbitals import OrbitalSystem, enumerate_doubles, enumerate_singles, h2_sto3g, load_system
from .pauli import jw_map
from .synth import compile_generator_evolution

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _system(arg: str) -> OrbitalSystem:
    if arg.lower() in ("h2", "h2_sto3g"):
        return h2_sto3g()
    try:
        return load_system(arg)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot load system {arg!r}: {exc}") from exc


def _cmd_map(args, out) -> int:
    op = parse_operator(args.operator)
    n = args.qubits if args.qubits is not None else max(op.n_modes, 1)
    if op.n_modes > n:
        raise InputError(f"operator uses mode {op.n_modes - 1} but only {n} qubits were requested")
    ps = jw_map(op.with_modes(n), n)
    print(ps.to_json(indent=2) if args.format == "json" else ps.to_text(), file=out)
    return EXIT_OK


def _cmd_excitations(args, out) -> int:
    sys_ = _system(args.system)
    excs = enumerate_singles(sys_) + enumerate_doubles(sys_)
    if args.format == "json":
        data = [
            {"kind": e.kind, "from": list(e.from_modes), "to": list(e.to_modes), "parameter": e.parameter_label}
            for e in excs
        ]
        print(json.dumps(data, indent=2), file=out)
    else:
        for e in excs:
            print(e, file=out)
    return EXIT_OK


def _cmd_compile(args, out) -> int:
    sys_ = _system(args.system) if args.system else None
    if args.excitation:
        exc = parse_excitation(args.excitation)
        if sys_ is not None and not sys_.is_allowed(exc):
            raise InputError(f"excitation {exc} is not allowed in the given system")
        gen = anti_hermitian_generator(exc)
    else:
        gen = parse_operator(args.operator)
    if args.qubits is not None:
        n = args.qubits
    elif sys_ is not None:
        n = sys_.n_orbitals
    else:
        n = max(gen.n_modes, 1)
    if gen.n_modes > n:
        raise InputError(f"generator uses mode {gen.n_modes - 1} but only {n} qubits are available")

    g = jw_map(gen.with_modes(n), n)
    circ = compile_generator_evolution(g, args.theta, args.target_choice)
    residual, _ = phase_residual(matrix_of_circuit(circ), expm_antihermitian(args.theta * matrix_of_pauli_sum(g)))

    if args.format == "json":
        print(circ.to_json(), file=out)
        print(f"residual {residual:.3e}", file=sys.stderr)
    elif args.format == "qasm":
        print(circ.to_qasm(), file=out)
        print(f"// residual {residual:.3e}", file=out)
    else:
        print("generator:", file=out)
        print(g.to_text(), file=out)
        print(f"circuit ({len(circ)} gates, {circ.count('cx')} cx):", file=out)
        print(circ.to_text(), file=out)
        print(f"residual {residual:.3e}", file=out)
    return EXIT_OK if residual <= args.tol else EXIT_VERIFY


def _cmd_verify(args, out) -> int:
    results = checks.run_all(args.tol)
    for r in results:
        print(r, file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _fmt_entry(z: complex) -> str:
    re_, im = round(z.real, 4) + 0.0, round(z.imag, 4) + 0.0
    return f"{re_:.4f}{im:+.4f}i"


def _cmd_dump_gate(args, out) -> int:
    try:
        m = gate_matrix(args.name, args.angle)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    for row in np.asarray(m):
        print(" ".join(_fmt_entry(z) for z in row), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jwcompile", description=__doc__.splitlines()[0])
    p.add_argument("--dump-gate", metavar="NAME", help="print a gate matrix and exit")
    p.add_argument("--angle", type=float, help="angle for --dump-gate rx/rz")
    sub = p.add_subparsers(dest="command")

    m = sub.add_parser("map", help="Jordan-Wigner map an operator string")
    m.add_argument("operator", help='e.g. "3^ 1^ 2 0" or "1^ 0 - 0^ 1"')
    m.add_argument("-n", "--qubits", type=int)
    m.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("excitations", help="enumerate singles and doubles")
    e.add_argument("--system", default="h2", help="'h2' or a JSON system file")
    e.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compile", help="compile exp(theta * (T - T^dagger)) to gates")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--excitation", help="'i->a' or 'i,j->a,b'")
    src.add_argument("--operator", help="anti-Hermitian generator in operator notation")
    c.add_argument("--theta", type=float, required=True)
    c.add_argument("-n", "--qubits", type=int)
    c.add_argument("--system", help="'h2' or a JSON system file")
    c.add_argument("--format", choices=("text", "json", "qasm"), default="text")
    c.add_argument("--target-choice", choices=("highest", "lowest"), default="highest")
    c.add_argument("--tol", type=float, default=1e-10)

    v = sub.add_parser("verify", help="run oracle cross-checks")
    v.add_argument("--tol", type=float, default=None)

    d = sub.add_parser("dump-gate", help="print a gate matrix")
    d.add_argument("name")
    d.add_argument("--angle", type=float)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.dump_gate and args.command is None:
        args.name = args.dump_gate
        args.command = "dump-gate"
    handlers = {
        "map": _cmd_map,
        "excitations": _cmd_excitations,
        "compile": _cmd_compile,
        "verify": _cmd_verify,
        "dump-gate": _cmd_dump_gate,
    }
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        return handlers[args.command](args, out)
    except (InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
