"""Comparison rows and their deterministic CSV/JSON serialization.

A row holds the closed-form energies (both regime formulas plus the
applicable special case), the finite-difference oracle energy when
requested, and their deviation.  Every absent numeric field is explained
by at least one flag; numeric failures become flags, never aborts.

Serialization rules: floats carry 17 significant digits (exact
round-trip), rows are sorted by (V0, R0, a, c, l, n), flags are joined
with ';' in CSV, and identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DomainError,
    NoRealLevelError,
    NoSuchLevelError,
    SpecialCaseError,
    WsboundError,
)
from .fdsolver import default_grid, refine_to_tolerance
from .potential import (
    CentrifugalMode,
    PhysicalSystem,
    PotentialFamily,
    PotentialParams,
    QuantumNumbers,
    potential_value,
)
from .spectrum import (
    Reading,
    SpecialCase,
    energy_large_c,
    energy_small_c,
    energy_special,
    regime_label,
)

CSV_HEADER = "V0,R0,a,c,l,n,E_eq32,E_eq33,E_special,E_oracle,deviation,flags"

_COLUMNS = CSV_HEADER.split(",")


@dataclass(frozen=True)
class ComparisonRow:
    V0: float
    R0: float
    a: float
    c: float
    l: int
    n: int
    E_eq32: float | None
    E_eq33: float | None
    E_special: float | None
    E_oracle: float | None
    deviation: float | None
    flags: tuple[str, ...]


def fmt17(x: float) -> str:
    """17 significant digits: enough for exact float round-trips."""
    return format(float(x), ".17g")


def build_row(
    params: PotentialParams,
    q: QuantumNumbers,
    system: PhysicalSystem = PhysicalSystem(),
    reading: Reading = Reading.A,
    mode: CentrifugalMode = CentrifugalMode.EXACT,
    want_formulas: bool = True,
    want_oracle: bool = False,
    oracle_tol: float = 1e-6,
) -> ComparisonRow:
    """Evaluate every column for one (params, n, l) point, flagging failures."""
    flags: list[str] = [f"regime:{regime_label(params.c)}"]

    def attempt(label: str, fn):
        if not want_formulas:
            flags.append(f"{label}:not-requested")
            return None
        try:
            return fn()
        except SpecialCaseError:
            flags.append(f"{label}:c==-1")
        except NoRealLevelError:
            flags.append(f"{label}:D<=0")
        except DomainError:
            flags.append(f"{label}:c==0")
        return None

    e32 = attempt("eq32", lambda: energy_large_c(params, q, system, reading))
    e33 = attempt("eq33", lambda: energy_small_c(params, q, system, reading))

    if params.family is PotentialFamily.HULTHEN or params.c == -1.0:
        e_special = attempt(
            "special",
            lambda: energy_special(params, q, system, SpecialCase.HULTHEN, reading),
        )
    elif params.c == 1.0:
        e_special = attempt(
            "special",
            lambda: energy_special(params, q, system, SpecialCase.STANDARD_WS, reading),
        )
    else:
        e_special = None
        flags.append("special:n/a")

    e_oracle = None
    if want_oracle:
        try:
            state = refine_to_tolerance(
                lambda r: potential_value(params, r),
                q.l,
                q.n,
                system,
                mode,
                tol=oracle_tol,
                initial_grid=default_grid(params, system),
                alpha=params.alpha,
            )
            e_oracle = state.energy
        except NoSuchLevelError:
            flags.append("oracle:no-level")
        except ConvergenceError:
            flags.append("oracle:no-converge")
        except WsboundError:
            flags.append("oracle:failed")
    else:
        flags.append("oracle:not-requested")

    primary = e32 if params.c >= 1.0 else e33
    if primary is not None and e_oracle is not None:
        deviation = primary - e_oracle
    else:
        deviation = None
        flags.append("deviation:missing-operand")

    return ComparisonRow(
        V0=params.V0,
        R0=params.R0,
        a=params.a,
        c=params.c,
        l=q.l,
        n=q.n,
        E_eq32=e32,
        E_eq33=e33,
        E_special=e_special,
        E_oracle=e_oracle,
        deviation=deviation,
        flags=tuple(flags),
    )


def sort_rows(rows) -> list[ComparisonRow]:
    return sorted(rows, key=lambda r: (r.V0, r.R0, r.a, r.c, r.l, r.n))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        raise DomainError("no boolean columns exist")
    if isinstance(value, int):
        return str(value)
    return fmt17(value)


def serialize_csv(rows) -> str:
    lines = [CSV_HEADER]
    for row in sort_rows(rows):
        cells = [
            fmt17(row.V0),
            fmt17(row.R0),
            fmt17(row.a),
            fmt17(row.c),
            str(row.l),
            str(row.n),
            _cell(row.E_eq32),
            _cell(row.E_eq33),
            _cell(row.E_special),
            _cell(row.E_oracle),
            _cell(row.deviation),
            ";".join(row.flags),
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, bool):
        raise DomainError("no boolean fields exist")
    if isinstance(value, int):
        return str(value)
    return fmt17(value)


def serialize_json(rows, meta: dict) -> str:
    """Fixed-layout JSON document; float fields carry 17 significant digits."""
    out = ["{"]
    meta_items = ", ".join(
        f"{json.dumps(k)}: {json.dumps(str(v))}" for k, v in sorted(meta.items())
    )
    out.append(f'  "meta": {{{meta_items}}},')
    out.append('  "rows": [')
    sorted_rows = sort_rows(rows)
    for i, row in enumerate(sorted_rows):
        fields = []
        for col in _COLUMNS[:-1]:
            fields.append(f"{json.dumps(col)}: {_json_value(getattr(row, col))}")
        flags = ", ".join(json.dumps(f) for f in row.flags)
        fields.append(f'"flags": [{flags}]')
        comma = "," if i + 1 < len(sorted_rows) else ""
        out.append("    {" + ", ".join(fields) + "}" + comma)
    out.append("  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def parse_json(text: str) -> tuple[dict, list[ComparisonRow]]:
    """Inverse of serialize_json; float fields round-trip exactly."""
    doc = json.loads(text)
    rows = []
    for entry in doc["rows"]:
        rows.append(
            ComparisonRow(
                V0=float(entry["V0"]),
                R0=float(entry["R0"]),
                a=float(entry["a"]),
                c=float(entry["c"]),
                l=int(entry["l"]),
                n=int(entry["n"]),
                E_eq32=None if entry["E_eq32"] is None else float(entry["E_eq32"]),
                E_eq33=None if entry["E_eq33"] is None else float(entry["E_eq33"]),
                E_special=None if entry["E_special"] is None else float(entry["E_special"]),
                E_oracle=None if entry["E_oracle"] is None else float(entry["E_oracle"]),
                deviation=None if entry["deviation"] is None else float(entry["deviation"]),
                flags=tuple(entry["flags"]),
            )
        )
    return doc["meta"], rows
