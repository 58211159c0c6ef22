"""Potential family, physical constants, and the radial coordinate transform.

The family is the exponential-well trio

    generalized:  V(r) = -V0 / (1 + c * exp(2*alpha*r))
    standard:     same, with c = exp(-2*alpha*R0) so that
                  V(r) = -V0 / (1 + exp((r - R0)/a))
    hulthen:      V(r) = -V0 * exp(-2*alpha*r) / (1 - exp(-2*alpha*r))

with alpha = 1/(2a).  The Hulthen well is the physically attractive
screened-Coulomb form (screening parameter delta = 2*alpha); the formal
c = -1 member of the generalized family has the opposite sign for r > 0
and is available through an explicit c override, not through the
`hulthen` family tag.

All evaluators accept scalars or numpy arrays of radii.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverflowDomainError

# exp argument beyond which 1 + c*e^z is evaluated through e^{-z} instead
_EXP_SWITCH = 350.0


class PotentialFamily(enum.Enum):
    GENERALIZED_WS = "generalized-ws"
    STANDARD_WS = "standard-ws"
    HULTHEN = "hulthen"


class CentrifugalMode(enum.Enum):
    EXACT = "exact"
    PEKERIS = "pekeris"


@dataclass(frozen=True)
class PhysicalSystem:
    """Unit system: natural units (hbar = mass = 1) unless overridden."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0.0) or not (self.mass > 0.0):
            raise DomainError("hbar and mass must be positive")


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.l, int):
            raise DomainError("quantum numbers must be integers")
        if self.n < 0 or self.l < 0:
            raise DomainError("quantum numbers must be nonnegative")


@dataclass(frozen=True)
class PotentialParams:
    """Validated parameter set; alpha and c are derived at construction."""

    V0: float
    R0: float
    a: float
    alpha: float
    c: float
    family: PotentialFamily
    surface_warning: bool = False


def make_params(
    V0: float,
    R0: float,
    a: float,
    family: PotentialFamily = PotentialFamily.STANDARD_WS,
    c_override: float | None = None,
) -> PotentialParams:
    """Build a PotentialParams, deriving alpha = 1/(2a) and the c-factor.

    The c-factor is exp(-2*alpha*R0) for the standard family, -1 for the
    Hulthen family, and caller-supplied for the generalized family (where
    it is required and must be nonzero).  a >= R0 produces a soft
    surface-thickness warning, recorded on the returned params.
    """
    if not (V0 > 0.0):
        raise DomainError("V0 must be positive")
    if not (a > 0.0):
        raise DomainError("a must be positive")
    if R0 < 0.0:
        raise DomainError("R0 must be nonnegative")
    alpha = 1.0 / (2.0 * a)

    if family is PotentialFamily.GENERALIZED_WS:
        if c_override is None:
            raise DomainError("the generalized family requires an explicit c_override")
        if c_override == 0.0:
            raise DomainError("c_override must be nonzero (c = 0 degenerates the transform)")
        c = float(c_override)
    else:
        if c_override is not None:
            raise DomainError("c_override is permitted only for the generalized family")
        if family is PotentialFamily.STANDARD_WS:
            c = math.exp(-2.0 * alpha * R0)
        elif family is PotentialFamily.HULTHEN:
            c = -1.0
        else:
            raise DomainError(f"unknown family {family!r}")

    warn = a >= R0
    if warn:
        warnings.warn(
            "surface thickness a >= radius R0: the well has no flat interior",
            UserWarning,
            stacklevel=2,
        )
    return PotentialParams(
        V0=float(V0), R0=float(R0), a=float(a), alpha=alpha, c=c, family=family, surface_warning=warn
    )


def _check_radii(r):
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(arr < 0.0):
        raise DomainError("r must be nonnegative")
    return arr


def _as_input_shape(arr, r):
    if np.isscalar(r) or getattr(r, "shape", None) == ():
        return float(arr[0]) if getattr(arr, "ndim", 0) else float(arr)
    return arr


def potential_value(params: PotentialParams, r):
    """V(r) for scalar or array r > 0."""
    arr = _check_radii(r)
    z = 2.0 * params.alpha * arr
    if params.family is PotentialFamily.HULTHEN:
        denom = -np.expm1(-z)  # 1 - e^{-2 alpha r}, accurate near r = 0
        if np.any(denom == 0.0):
            bad = float(arr[np.asarray(denom) == 0.0][0])
            raise OverflowDomainError(f"hulthen denominator vanished at r = {bad!r}")
        out = -params.V0 * np.exp(-z) / denom
        return _as_input_shape(out, r)

    c = params.c
    out = np.empty_like(arr)
    small = z < _EXP_SWITCH
    out[small] = -params.V0 / (1.0 + c * np.exp(z[small]))
    # large r: rewrite through e^{-z} so nothing overflows
    ez = np.exp(-z[~small])
    out[~small] = -params.V0 * ez / (ez + c)
    return _as_input_shape(out, r)


def centrifugal_term(l: int, r, system: PhysicalSystem, mode: CentrifugalMode, alpha: float | None = None):
    """The l(l+1) barrier, exact (1/r^2) or with the Pekeris exponential surrogate.

    The surrogate replaces 1/r^2 by 4*alpha^2*e^{-2 alpha r}/(1-e^{-2 alpha r})^2,
    whose leading relative error is (alpha*r)^2/3.
    """
    arr = _check_radii(r)
    if l == 0:
        return _as_input_shape(np.zeros_like(arr), r)
    if np.any(arr == 0.0):
        raise DomainError("the centrifugal barrier is singular at r = 0")
    pref = system.hbar**2 * l * (l + 1) / (2.0 * system.mass)
    if mode is CentrifugalMode.EXACT:
        out = pref / arr**2
    elif mode is CentrifugalMode.PEKERIS:
        if alpha is None:
            raise DomainError("the Pekeris surrogate needs alpha")
        z = 2.0 * alpha * arr
        out = pref * 4.0 * alpha**2 * np.exp(-z) / np.expm1(-z) ** 2
    else:
        raise DomainError(f"unknown centrifugal mode {mode!r}")
    return _as_input_shape(out, r)


def effective_potential(
    params: PotentialParams,
    l: int,
    r,
    system: PhysicalSystem = PhysicalSystem(),
    mode: CentrifugalMode = CentrifugalMode.EXACT,
):
    """V(r) plus the centrifugal barrier in the requested mode."""
    v = potential_value(params, r)
    cent = centrifugal_term(l, r, system, mode, alpha=params.alpha)
    return v + cent


def s_of_r(params: PotentialParams, r):
    """Coordinate transform s = c*(e^{2 alpha r} - 1)."""
    arr = _check_radii(r)
    with np.errstate(over="ignore"):
        s = params.c * np.expm1(2.0 * params.alpha * arr)
    if not np.all(np.isfinite(s)):
        raise OverflowDomainError("s_of_r overflowed; r too large for this alpha")
    return _as_input_shape(s, r)


def r_of_s(params: PotentialParams, s):
    """Inverse transform r = log1p(s/c) / (2 alpha)."""
    arr = np.asarray(s, dtype=float)
    ratio = arr / params.c
    if np.any(ratio <= -1.0):
        raise DomainError("s outside the image of the transform")
    r = np.log1p(ratio) / (2.0 * params.alpha)
    return _as_input_shape(r, s)
