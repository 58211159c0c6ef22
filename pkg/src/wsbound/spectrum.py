"""Closed-form level formulas for the generalized exponential well.

Covers the family V(r) = -V0/(1 + c*e^{2 alpha r}) with the centrifugal
term folded in through the Pekeris exponential surrogate.  Two regime
formulas are provided (`energy_large_c` for c >> 1, `energy_small_c`
for c << 1) plus the c = +-1 special cases, which are evaluated by
substituting c = +-1 into the general formulas so there is a single
arithmetic path.

A few terms of these formulas admit two plausible algebraic readings.
Each ambiguity is resolved by a documented canonical reading (flag A)
with the alternative behind flag B; docs/readings.md enumerates every
reading and its effect.  Agreement of these formulas with the
independent finite-difference solver is reported, never assumed; the
formulas are kept exactly in their stated form.

delta0 = 2*hbar^2*l*(l+1)/(mass*alpha^2) is kept exactly in its stated
form even though it is dimensionally inconsistent with an energy; it
feeds only this module, never the finite-difference solver.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, NoRealLevelError, SpecialCaseError
from .potential import PhysicalSystem, PotentialParams, QuantumNumbers


class Reading(enum.Enum):
    """A: canonical resolution of each garbled fragment; B: literal alternative."""

    A = "A"
    B = "B"


class SpecialCase(enum.Enum):
    STANDARD_WS = "standard-ws"  # c = +1 substitution
    HULTHEN = "hulthen"  # c = -1 substitution


@dataclass(frozen=True)
class DimensionlessSet:
    eps2: float
    beta2: float
    gamma2: float
    xi1sq: float
    xi2sq: float
    xi3sq: float
    xi4sq: float
    delta0: float


@dataclass(frozen=True)
class CoeffSet:
    """Quadratic coefficients sigma_bar = -a_*s^2 + b_*s + d_ and the b1..b3 combos."""

    a_: float
    b_: float
    d_: float
    b1: float
    b2: float
    b3: float


def delta0_term(l: int, alpha: float, system: PhysicalSystem) -> float:
    """The centrifugal constant delta0 = 2*hbar^2*l*(l+1)/(mass*alpha^2)."""
    return 2.0 * system.hbar**2 * l * (l + 1) / (system.mass * alpha**2)


def dimensionless_set(
    params: PotentialParams,
    energy: float,
    l: int,
    system: PhysicalSystem = PhysicalSystem(),
) -> DimensionlessSet:
    """The dimensionless combinations used by the reduction, at energy E < 0."""
    if energy >= 0.0:
        raise DomainError("the dimensionless set is defined for bound energies E < 0")
    c = params.c
    if c == -1.0:
        raise SpecialCaseError(
            "c = -1 divides by 1 + c; use the hulthen special-case path"
        )
    h2 = system.hbar**2
    m = system.mass
    al2 = params.alpha**2
    d0 = delta0_term(l, params.alpha, system)
    return DimensionlessSet(
        eps2=-m * energy / (2.0 * h2 * al2),
        beta2=m * params.V0 / (2.0 * h2 * al2 * (1.0 + c)),
        gamma2=m * params.V0 / (2.0 * al2 * h2 * (1.0 + c) ** 2),
        xi1sq=m * d0 / (2.0 * h2 * al2),
        xi2sq=m * c**2 * d0 / (2.0 * h2 * al2),
        xi3sq=m * c * d0 / (h2 * al2),
        xi4sq=m / (2.0 * h2 * al2),
        delta0=d0,
    )


def coeff_set(dset: DimensionlessSet) -> CoeffSet:
    """Collect the transformed-equation coefficients.

    b2 and b3 use the decided readings of two ambiguous lines (the
    collided symbol in the d_-definition is read as d_ = xi2sq; see
    docs/readings.md, entries R3 and R4).
    """
    a_ = dset.eps2 + dset.gamma2 + dset.xi1sq + dset.xi4sq
    b_ = dset.beta2 + dset.xi3sq
    d_ = dset.xi2sq
    return CoeffSet(
        a_=a_,
        b_=b_,
        d_=d_,
        b1=-4.0 * a_ + 1.0,
        b2=2.0 * d_ - 4.0 * b_,
        b3=d_**2 - 4.0 * d_,
    )


def _eq_large_c(
    V0: float,
    alpha: float,
    c: float,
    n: int,
    l: int,
    system: PhysicalSystem,
    reading: Reading,
) -> float:
    """The c >> 1 regime formula, term by term."""
    if c == 0.0:
        raise DomainError("the large-c formula divides by c")
    if c == -1.0:
        raise SpecialCaseError(
            "c = -1 divides by 1 + c; use the hulthen special-case path"
        )
    hbar, m = system.hbar, system.mass
    d0 = delta0_term(l, alpha, system)
    ha2m = hbar**2 * alpha**2 / m
    depth = V0 / (1.0 + c) + c * d0
    D = 2.0 * c - (2.0 / ha2m) * depth
    if D <= 0.0:
        raise NoRealLevelError(f"square-root argument D = {D!r} is not positive")
    lead = (2.0 * n if reading is Reading.A else 2.0) / math.sqrt(D)
    inner = lead + (4.0 + c - 3.0 * n * (n - 1)) / (2.0 * D) - 1.0 / c
    first = 2.0 * c - (4.0 / ha2m) * depth
    return (
        1.0
        + d0
        + V0 / (1.0 + c) ** 2
        - 0.5 * ha2m
        - 0.25 * (2.0 * hbar * alpha / m) ** 2 * first * (c - 1.0)
        - 2.0 * ha2m * inner**2
    )


def _eq_small_c(
    V0: float,
    alpha: float,
    c: float,
    n: int,
    l: int,
    system: PhysicalSystem,
    reading: Reading,
) -> float:
    """The c << 1 regime formula, term by term.

    Whether the final bracket is squared is ambiguous in the stated
    form; reading A squares it (structural symmetry with the large-c
    formula), reading B leaves it unsquared.
    """
    if c == 0.0:
        raise DomainError("the small-c formula divides by c")
    hbar, m = system.hbar, system.mass
    d0 = delta0_term(l, alpha, system)
    ha2m = hbar**2 * alpha**2 / m
    D = 2.0 * c - (2.0 / ha2m) * (V0 * (1.0 - c) + c * d0)
    if D <= 0.0:
        raise NoRealLevelError(f"square-root argument D = {D!r} is not positive")
    inner = (
        2.0 * n / (c * math.sqrt(D))
        + (4.0 + c - 3.0 * n * (n - 1)) / (2.0 * D)
        - 1.0 / c
    )
    bracket = inner**2 if reading is Reading.A else inner
    mid = 2.0 * c - (2.0 / ha2m) * (V0 * (1.0 - c) + 2.0 * d0 * c)
    return (
        1.0
        + d0
        - 0.5 * ha2m
        + V0 * (1.0 - 2.0 * c)
        + 0.25 * (hbar * alpha) ** 2 / m * mid * (c - 1.0)
        - 2.0 * ha2m * bracket
    )


def energy_large_c(
    params: PotentialParams,
    q: QuantumNumbers,
    system: PhysicalSystem = PhysicalSystem(),
    reading: Reading = Reading.A,
) -> float:
    """Level energy from the c >> 1 regime formula at the params' own c."""
    return _eq_large_c(params.V0, params.alpha, params.c, q.n, q.l, system, reading)


def energy_small_c(
    params: PotentialParams,
    q: QuantumNumbers,
    system: PhysicalSystem = PhysicalSystem(),
    reading: Reading = Reading.A,
) -> float:
    """Level energy from the c << 1 regime formula at the params' own c."""
    return _eq_small_c(params.V0, params.alpha, params.c, q.n, q.l, system, reading)


def energy_special(
    params: PotentialParams,
    q: QuantumNumbers,
    system: PhysicalSystem = PhysicalSystem(),
    which: SpecialCase = SpecialCase.STANDARD_WS,
    reading: Reading = Reading.A,
) -> float:
    """The c = +1 (standard well) or c = -1 (hulthen) special case.

    Evaluated by substituting c = +-1 into the corresponding general
    transcription, so the special cases share one arithmetic path with
    the regime formulas.
    """
    if which is SpecialCase.STANDARD_WS:
        return _eq_large_c(params.V0, params.alpha, 1.0, q.n, q.l, system, reading)
    if which is SpecialCase.HULTHEN:
        return _eq_small_c(params.V0, params.alpha, -1.0, q.n, q.l, system, reading)
    raise DomainError(f"unknown special case {which!r}")


def regime_label(c: float) -> str:
    """Which regime formula is primary for reporting at this c."""
    return "large-c" if c >= 1.0 else "small-c"
