"""Jacobi-polynomial machinery and assembled radial wavefunctions.

The bound solutions of the transformed equation are weight-function
powers times Jacobi polynomials.  The polynomial argument used here is

    x(r) = 1 - 2*exp(-2*alpha*r)        equivalently  x(s) = (s - c)/(s + c)

which maps r in (0, inf) onto (-1, 1), so the n-th level crosses zero
exactly n times.  Polynomial evaluation uses the three-term recurrence,
which is valid for any real argument.

RadialSamples stores R(r); the normalization convention is on the
reduced function u = r*R, i.e. quadrature of (r*R)^2 equals one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateWavefunctionError,
    DomainError,
    NoRealLevelError,
    OverflowDomainError,
    PoleError,
)
from .potential import PhysicalSystem, PotentialParams, QuantumNumbers
from .quadrature import simpson_with_estimate
from .spectrum import coeff_set, dimensionless_set


@dataclass(frozen=True)
class WavefunctionSpec:
    """Exponents of the assembled solution s^(A/2) * (c e^{2 alpha r})^(B - sqrt_eta2) * P_n^(A/2, B)."""

    A: float
    B: float
    n: int
    params: PotentialParams
    sqrt_eta2: float


@dataclass(frozen=True)
class RadialSamples:
    grid: np.ndarray
    values: np.ndarray  # R(r) samples, normalized so that integral of (r*R)^2 is 1
    normalization: float

    def reduced(self) -> np.ndarray:
        """u(r) = r * R(r)."""
        return self.grid * self.values


def jacobi_eval(n: int, a: float, b: float, x):
    """P_n^(a,b)(x) by the three-term recurrence; scalar or array x.

    Requires a > -1 and b > -1 (the classical parameter domain).  The
    recurrence itself is stable for arguments beyond [-1, 1] as well.
    """
    if n < 0:
        raise DomainError("polynomial degree must be nonnegative")
    if a <= -1.0 or b <= -1.0:
        raise DomainError("jacobi parameters must exceed -1")
    xa = np.asarray(x, dtype=float)
    p_prev = np.ones_like(xa)
    if n == 0:
        return float(p_prev) if xa.ndim == 0 else p_prev
    p = (a + 1.0) + (a + b + 2.0) * (xa - 1.0) / 2.0
    for m in range(2, n + 1):
        apb = a + b
        c1 = 2.0 * m * (m + apb) * (2.0 * m + apb - 2.0)
        c2 = (2.0 * m + apb - 1.0) * ((2.0 * m + apb) * (2.0 * m + apb - 2.0) * xa + a * a - b * b)
        c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + apb)
        p, p_prev = (c2 * p - c3 * p_prev) / c1, p
    return float(p) if xa.ndim == 0 else p


def wavefunction_spec(
    params: PotentialParams,
    energy: float,
    l: int,
    n: int,
    system: PhysicalSystem = PhysicalSystem(),
) -> WavefunctionSpec:
    """Build the exponent set (A, B, sqrt_eta2) for a level.

    A = 2*mu/c - 1 and B = 2*nu/c^2, where mu = -sqrt(eta2)/c^2 + c + 2
    and nu = 2*sqrt((1-c)*eta2 + eta1 + c^2)/c^2 with eta1 = b1 and
    eta2 = b2 from the coefficient set (readings R5 and R6 in
    docs/readings.md).  The nu radicand is taken verbatim; the variant
    with eta1*c^2 in place of eta1 + c^2 leaves no parameter point with
    all-real exponents, so it cannot be the intended form (reading R6).
    Parameter points where either square root goes complex are rejected.
    """
    cs = coeff_set(dimensionless_set(params, energy, l, system))
    c = params.c
    if cs.b2 < 0.0:
        raise NoRealLevelError(f"sqrt(eta2) is complex here: b2 = {cs.b2!r} < 0")
    sqrt_eta2 = math.sqrt(cs.b2)
    mu = -sqrt_eta2 / c**2 + c + 2.0
    rad = (1.0 - c) * cs.b2 + cs.b1 + c**2
    if rad < 0.0:
        raise NoRealLevelError(f"nu radicand is negative here: {rad!r}")
    nu = 2.0 * math.sqrt(rad) / c**2
    return WavefunctionSpec(
        A=2.0 * mu / c - 1.0, B=2.0 * nu / c**2, n=n, params=params, sqrt_eta2=sqrt_eta2
    )


def _jacobi_argument_from_s(spec: WavefunctionSpec, s):
    c = spec.params.c
    sa = np.asarray(s, dtype=float)
    denom = sa + c
    if np.any(denom == 0.0):
        raise DomainError("s = -c is outside the domain of the argument map")
    return (sa - c) / denom


def rodrigues_chi(spec: WavefunctionSpec, s, n: int | None = None):
    """The derivative-form solution chi_n(s), via Jacobi identification.

    The n-th derivative formula for chi_n collapses to the Jacobi
    polynomial P_n^(A/2, B) of the mapped argument x(s) = (s-c)/(s+c);
    this evaluates that identification rather than differentiating
    symbolically.  Requests at a zero of the weight with a negative
    exponent raise PoleError (the quotient form is singular there even
    though the polynomial limit exists).
    """
    if n is None:
        n = spec.n
    x = _jacobi_argument_from_s(spec, s)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if spec.A / 2.0 < 0.0 and np.any(xa == 1.0):
        raise PoleError("weight factor (1-x)^(A/2) has a pole at x = 1")
    if spec.B < 0.0 and np.any(xa == -1.0):
        raise PoleError("weight factor (1+x)^B has a pole at x = -1")
    return jacobi_eval(n, spec.A / 2.0, spec.B, x)


def radial_wavefunction(
    spec: WavefunctionSpec,
    q: QuantumNumbers,
    grid,
) -> RadialSamples:
    """Assemble and normalize R(r) on the given radial grid.

    R(r) = (1/r) * s(r)^(A/2) * (c*e^{2 alpha r})^(B - sqrt_eta2)
         * P_n^(A/2, B)(x(r)),   x(r) = 1 - 2 e^{-2 alpha r},

    normalized so the grid quadrature of (r*R)^2 is one.  Real exponents
    require s > 0, i.e. c > 0 on this family; points violating that are
    rejected rather than silently complexified.
    """
    if q.n != spec.n:
        raise DomainError("quantum numbers disagree with the spec degree")
    r = np.asarray(grid, dtype=float)
    if r.ndim != 1 or r.shape[0] < 3:
        raise DomainError("grid must be a 1-d array of at least 3 radii")
    if np.any(r <= 0.0):
        raise DomainError("grid radii must be positive")
    if np.any(np.diff(r) <= 0.0):
        raise DomainError("grid must be strictly increasing")
    params = spec.params
    c, alpha = params.c, params.alpha
    if c <= 0.0:
        raise DomainError("real exponents need c > 0 (s(r) must stay positive)")

    z = 2.0 * alpha * r
    # log-space assembly keeps the two huge opposing exponentials tame
    log_s = math.log(c) + z + np.log1p(-np.exp(-z))  # log(c*(e^z - 1))
    log_w = (spec.B - spec.sqrt_eta2) * (math.log(c) + z)
    x = 1.0 - 2.0 * np.exp(-z)
    poly = jacobi_eval(spec.n, spec.A / 2.0, spec.B, x)
    log_mag = 0.5 * spec.A * log_s + log_w - np.log(r)
    if np.any(log_mag > 700.0):
        bad = float(r[np.argmax(log_mag)])
        raise OverflowDomainError(f"wavefunction magnitude overflows near r = {bad!r}")
    values = np.exp(log_mag) * poly
    if not np.all(np.isfinite(values)):
        bad = float(r[~np.isfinite(values)][0])
        raise OverflowDomainError(f"wavefunction evaluation not finite at r = {bad!r}")

    raw = RadialSamples(grid=r, values=values, normalization=1.0)
    norm = normalization_constant(raw)
    return RadialSamples(grid=r, values=norm * values, normalization=norm)


def normalization_constant(samples: RadialSamples) -> float:
    """N such that the quadrature of (N * r * R)^2 over the grid is one.

    Composite Simpson with a Richardson two-grid estimate; a grossly
    unresolved integrand (estimate above 1e-3 of the integral) is
    rejected, a zero integral cannot be normalized at all.
    """
    r = np.asarray(samples.grid, dtype=float)
    h = float(r[1] - r[0])
    dr = np.diff(r)
    if not np.allclose(dr, h, rtol=1e-9, atol=0.0):
        raise DomainError("normalization quadrature expects a uniform grid")
    integrand = (r * np.asarray(samples.values, dtype=float)) ** 2
    integral, estimate = simpson_with_estimate(integrand, h)
    if integral <= 0.0:
        raise DegenerateWavefunctionError("zero-norm sample set cannot be normalized")
    if estimate > 1e-3 * integral:
        raise DomainError(
            f"quadrature unresolved: estimated error {estimate!r} vs integral {integral!r}"
        )
    return 1.0 / math.sqrt(integral)


def count_nodes(values, rel_floor: float = 1e-12) -> int:
    """Sign changes over the samples, ignoring entries below a relative floor."""
    v = np.asarray(values, dtype=float)
    vmax = np.max(np.abs(v))
    if vmax == 0.0:
        return 0
    kept = v[np.abs(v) > rel_floor * vmax]
    return int(np.sum(np.sign(kept[:-1]) * np.sign(kept[1:]) < 0))
