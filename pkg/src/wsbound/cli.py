"""Command-line front end.

Subcommands:

    spectrum      closed-form energies for a (l, n) selection
    compare       closed-form energies plus the finite-difference oracle
    oracle        oracle energies only
    scan          comparison table over a parameter sweep grid
    wavefunction  sampled closed-form radial wavefunction for one level

All numeric output is deterministic: identical invocations produce
byte-identical bytes.  Exit codes: 0 on success, 2 on usage errors,
3 when a numeric failure prevents producing any output at all
(per-point failures inside a table never abort; they become flags).
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import __version__
from .errors import WsboundError
from .fdsolver import RadialGrid, default_grid
from .potential import (
    CentrifugalMode,
    PhysicalSystem,
    PotentialFamily,
    PotentialParams,
    QuantumNumbers,
    make_params,
)
from .report import build_row, fmt17, serialize_csv, serialize_json, sort_rows
from .spectrum import Reading, energy_large_c, energy_small_c
from .wavefunction import radial_wavefunction, wavefunction_spec

_FAMILIES = {f.value: f for f in PotentialFamily}


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _add_common(parser: argparse.ArgumentParser, quantum: bool = True) -> None:
    parser.add_argument("--config", type=Path, default=None, help="key=value defaults file; command-line flags win")
    parser.add_argument("--potential", choices=sorted(_FAMILIES), default="standard-ws")
    parser.add_argument("--V0", type=float, default=50.0, help="well depth (positive)")
    parser.add_argument("--R0", type=float, default=6.0, help="well radius")
    parser.add_argument("--a", type=float, default=0.6, help="surface thickness (positive)")
    parser.add_argument("--c", type=float, default=None, help="c-factor override (generalized family only)")
    parser.add_argument("--hbar", type=float, default=1.0)
    parser.add_argument("--mass", type=float, default=1.0)
    parser.add_argument("--reading", choices=["A", "B"], default="A", help="resolution of the ambiguous formula terms")
    parser.add_argument("--centrifugal", choices=["exact", "pekeris"], default="exact")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--output", type=Path, default=None, help="write here instead of stdout")
    if quantum:
        parser.add_argument("--l", type=int, action="append", default=None, help="orbital quantum number (repeatable)")
        parser.add_argument("--lmax", type=int, default=None, help="include every l from 0 to lmax")
        parser.add_argument("--n", type=int, action="append", default=None, help="level index (repeatable)")
        parser.add_argument("--nmax", type=int, default=None, help="include every n from 0 to nmax")


def _build_parser() -> tuple[argparse.ArgumentParser, list[argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="wsbound",
        description="Bound states of the generalized Woods-Saxon family: closed-form spectra vs a finite-difference oracle.",
    )
    parser.add_argument("--version", action="version", version=f"wsbound {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers = []

    p = sub.add_parser("spectrum", help="closed-form energies")
    _add_common(p)
    subparsers.append(p)

    p = sub.add_parser("compare", help="closed-form energies plus the oracle")
    _add_common(p)
    p.add_argument("--oracle-tol", type=float, default=1e-6)
    subparsers.append(p)

    p = sub.add_parser("oracle", help="finite-difference energies only")
    _add_common(p)
    p.add_argument("--oracle-tol", type=float, default=1e-6)
    subparsers.append(p)

    p = sub.add_parser("scan", help="comparison table over a parameter sweep")
    _add_common(p)
    p.add_argument("--sweep-V0", type=_float_list, default=None)
    p.add_argument("--sweep-R0", type=_float_list, default=None)
    p.add_argument("--sweep-a", type=_float_list, default=None)
    p.add_argument("--sweep-c", type=_float_list, default=None)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--oracle-tol", type=float, default=1e-6)
    subparsers.append(p)

    p = sub.add_parser("wavefunction", help="sampled closed-form wavefunction")
    _add_common(p, quantum=False)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--energy", type=float, default=None, help="level energy; defaults to the regime formula")
    p.add_argument("--rmin", type=float, default=None)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=2001)
    subparsers.append(p)
    return parser, subparsers


def _apply_config(
    parser: argparse.ArgumentParser,
    subparsers: list[argparse.ArgumentParser],
    argv: list[str],
) -> None:
    """Install key=value file entries as parser defaults (flags still win)."""
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = Path(argv[i + 1])
        elif tok.startswith("--config="):
            path = Path(tok.split("=", 1)[1])
    if path is None:
        return
    if not path.exists():
        parser.error(f"config file not found: {path}")
    overrides = {}
    for line_no, line in enumerate(path.read_text().splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            parser.error(f"{path}:{line_no}: expected key=value")
        key, value = stripped.split("=", 1)
        overrides[key.strip().replace("-", "_")] = value.strip()
    typed = {}
    for key, value in overrides.items():
        if key in ("l", "n"):
            typed[key] = [int(tok) for tok in value.split(",") if tok != ""]
        elif key in ("lmax", "nmax", "points"):
            typed[key] = int(value)
        elif key.startswith("sweep_"):
            typed[key] = _float_list(value)
        elif key in ("potential", "reading", "centrifugal", "format"):
            typed[key] = value
        elif key in ("output", "config"):
            typed[key] = Path(value)
        elif key == "with_oracle":
            typed[key] = value.lower() in ("1", "true", "yes")
        else:
            try:
                typed[key] = float(value)
            except ValueError:
                parser.error(f"config key {key!r}: cannot parse {value!r}")
    # subcommand parsers re-apply their own defaults after the top-level
    # parse, so the overrides must land on each of them as well
    parser.set_defaults(**typed)
    for sp in subparsers:
        sp.set_defaults(**{k: v for k, v in typed.items() if k in {a.dest for a in sp._actions}})


def _system(args) -> PhysicalSystem:
    return PhysicalSystem(hbar=args.hbar, mass=args.mass)


def _params(args, V0=None, R0=None, a=None, c=None) -> PotentialParams:
    family = _FAMILIES[args.potential]
    c_eff = c if c is not None else args.c
    return make_params(
        V0 if V0 is not None else args.V0,
        R0 if R0 is not None else args.R0,
        a if a is not None else args.a,
        family,
        c_override=c_eff if family is PotentialFamily.GENERALIZED_WS else None,
    )


def _quantum_list(args, parser) -> list[QuantumNumbers]:
    ls = list(args.l) if args.l else []
    if args.lmax is not None:
        ls.extend(range(args.lmax + 1))
    if not ls:
        ls = [0]
    ns = list(args.n) if args.n else []
    if args.nmax is not None:
        ns.extend(range(args.nmax + 1))
    if not ns:
        ns = [0]
    ls = sorted(set(ls))
    ns = sorted(set(ns))
    if any(l < 0 for l in ls) or any(n < 0 for n in ns):
        parser.error("quantum numbers must be nonnegative")
    return [QuantumNumbers(n=n, l=l) for l in ls for n in ns]


def _emit(args, text: str) -> None:
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)


def _meta(args) -> dict:
    return {
        "version": __version__,
        "reading": args.reading,
        "centrifugal_mode": args.centrifugal,
    }


def _run_table(args, parser, want_formulas: bool, want_oracle: bool) -> int:
    system = _system(args)
    reading = Reading(args.reading)
    mode = CentrifugalMode(args.centrifugal)
    quantum = _quantum_list(args, parser)
    if args.command == "scan":
        family = _FAMILIES[args.potential]
        v0s = args.sweep_V0 or [args.V0]
        r0s = args.sweep_R0 or [args.R0]
        a_s = args.sweep_a or [args.a]
        if family is PotentialFamily.GENERALIZED_WS:
            cs = args.sweep_c or ([args.c] if args.c is not None else None)
            if cs is None:
                parser.error("the generalized family needs --c or --sweep-c")
        else:
            if args.sweep_c:
                parser.error("--sweep-c applies only to the generalized family")
            cs = [None]
        points = [
            (V0, R0, a, c) for V0 in v0s for R0 in r0s for a in a_s for c in cs
        ]
    else:
        points = [(args.V0, args.R0, args.a, args.c)]

    rows = []
    for V0, R0, a, c in points:
        try:
            params = _params(args, V0=V0, R0=R0, a=a, c=c)
        except WsboundError as exc:
            parser.error(str(exc))
        for q in quantum:
            rows.append(
                build_row(
                    params,
                    q,
                    system,
                    reading=reading,
                    mode=mode,
                    want_formulas=want_formulas,
                    want_oracle=want_oracle,
                    oracle_tol=getattr(args, "oracle_tol", 1e-6),
                )
            )
    rows = sort_rows(rows)
    if args.format == "csv":
        _emit(args, serialize_csv(rows))
    else:
        _emit(args, serialize_json(rows, _meta(args)))
    return 0


def _run_wavefunction(args, parser) -> int:
    system = _system(args)
    reading = Reading(args.reading)
    if args.l < 0 or args.n < 0:
        parser.error("quantum numbers must be nonnegative")
    try:
        params = _params(args)
    except WsboundError as exc:
        parser.error(str(exc))
    q = QuantumNumbers(n=args.n, l=args.l)
    try:
        if args.energy is not None:
            energy = args.energy
        elif params.c >= 1.0:
            energy = energy_large_c(params, q, system, reading)
        else:
            energy = energy_small_c(params, q, system, reading)
        rmax = args.rmax if args.rmax is not None else default_grid(params, system).r_max
        points = args.points
        rmin = args.rmin if args.rmin is not None else rmax / points
        grid = RadialGrid(r_min=rmin, r_max=rmax, points=points)
        spec = wavefunction_spec(params, energy, args.l, args.n, system)
        samples = radial_wavefunction(spec, q, grid.nodes())
    except WsboundError as exc:
        print(f"wsbound: {exc}", file=sys.stderr)
        return 3
    if args.format == "csv":
        lines = ["r,R,u"]
        for r, R in zip(samples.grid, samples.values):
            lines.append(f"{fmt17(r)},{fmt17(R)},{fmt17(r * R)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        meta = _meta(args)
        meta["normalization"] = fmt17(samples.normalization)
        meta["energy"] = fmt17(energy)
        body = ["{"]
        meta_items = ", ".join(f'"{k}": "{v}"' for k, v in sorted(meta.items()))
        body.append(f'  "meta": {{{meta_items}}},')
        body.append('  "samples": [')
        n_rows = len(samples.grid)
        for i, (r, R) in enumerate(zip(samples.grid, samples.values)):
            comma = "," if i + 1 < n_rows else ""
            body.append(
                f'    {{"r": {fmt17(r)}, "R": {fmt17(R)}, "u": {fmt17(r * R)}}}{comma}'
            )
        body.append("  ]")
        body.append("}")
        _emit(args, "\n".join(body) + "\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser, subparsers = _build_parser()
    _apply_config(parser, subparsers, argv)
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.command == "spectrum":
                status = _run_table(args, parser, want_formulas=True, want_oracle=False)
            elif args.command == "compare":
                status = _run_table(args, parser, want_formulas=True, want_oracle=True)
            elif args.command == "oracle":
                status = _run_table(args, parser, want_formulas=False, want_oracle=True)
            elif args.command == "scan":
                status = _run_table(args, parser, want_formulas=True, want_oracle=args.with_oracle)
            elif args.command == "wavefunction":
                status = _run_wavefunction(args, parser)
            else:
                parser.error(f"unknown command {args.command!r}")
        for note in sorted({str(w.message) for w in caught}):
            print(f"wsbound: warning: {note}", file=sys.stderr)
        return status
    except WsboundError as exc:
        print(f"wsbound: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
