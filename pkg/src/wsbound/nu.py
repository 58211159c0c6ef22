"""Hypergeometric-reduction engine for equations of the form

    psi'' + (tau_bar/sigma) psi' + (sigma_bar/sigma^2) psi = 0

with polynomial coefficients deg(sigma) <= 2, deg(tau_bar) <= 1,
deg(sigma_bar) <= 2.  The method introduces

    pi(s) = (sigma' - tau_bar)/2 +- sqrt(((sigma' - tau_bar)/2)^2 - sigma_bar + k*sigma)

and restricts k to values making the radicand a perfect square, so pi is
a polynomial.  Quantization follows from lambda = k + pi' matching
lambda_n = -n tau' - n(n-1)/2 sigma'' on the branch with tau' < 0.

Polynomials are coefficient tuples in ascending order: (c0, c1, c2)
means c0 + c1*s + c2*s^2.

The k condition is enforced numerically: the discriminant of the
radicand, itself a quadratic in k, is driven to zero.  No closed-form
expression for k is assumed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, NoBoundBranchError, NonSquareRadicandError, NoRootError

_REL_TOL_SQUARE = 1e-10  # |discriminant| tolerance for the perfect-square check
_TINY = 1e-13


class Branch(enum.Enum):
    PLUS_ROOT = "+"
    MINUS_ROOT = "-"


def _coeffs(p, deg: int, name: str) -> tuple[float, ...]:
    t = tuple(float(x) for x in p)
    if len(t) > deg + 1:
        raise DomainError(f"{name} has degree > {deg}")
    return t + (0.0,) * (deg + 1 - len(t))


@dataclass(frozen=True)
class NUProblem:
    sigma: tuple[float, ...]
    tau_bar: tuple[float, ...]
    sigma_bar: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", _coeffs(self.sigma, 2, "sigma"))
        object.__setattr__(self, "tau_bar", _coeffs(self.tau_bar, 1, "tau_bar"))
        object.__setattr__(self, "sigma_bar", _coeffs(self.sigma_bar, 2, "sigma_bar"))
        if all(x == 0.0 for x in self.sigma):
            raise DomainError("sigma must not be identically zero")


@dataclass(frozen=True)
class NUSolution:
    """One admissible reduction: pi and tau are ascending coefficient tuples."""

    k: float
    pi: tuple[float, float]
    tau: tuple[float, float]
    lam: float
    branch: Branch


def _half_diff(problem: NUProblem) -> tuple[float, float]:
    """(sigma' - tau_bar)/2 as (constant, slope)."""
    s0, s1, s2 = problem.sigma
    t0, t1 = problem.tau_bar
    return ((s1 - t0) / 2.0, (2.0 * s2 - t1) / 2.0)


def _radicand_coeffs(problem: NUProblem, k: float) -> tuple[float, float, float]:
    """(q0, q1, q2) of ((sigma'-tau_bar)/2)^2 - sigma_bar + k*sigma."""
    h0, h1 = _half_diff(problem)
    s0, s1, s2 = problem.sigma
    b0, b1, b2 = problem.sigma_bar
    q0 = h0 * h0 - b0 + k * s0
    q1 = 2.0 * h0 * h1 - b1 + k * s1
    q2 = h1 * h1 - b2 + k * s2
    return q0, q1, q2


def k_values(problem: NUProblem) -> list[float]:
    """All real k for which the radicand has zero discriminant.

    The discriminant q1^2 - 4 q2 q0 is a quadratic in k; its real roots
    are returned sorted ascending.  A discriminant that vanishes
    identically admits every k; [0.0] is returned as the canonical
    representative of that degenerate case.
    """
    h0, h1 = _half_diff(problem)
    s0, s1, s2 = problem.sigma
    b0, b1, b2 = problem.sigma_bar
    # q_i = alpha_i + beta_i * k
    a0, be0 = h0 * h0 - b0, s0
    a1, be1 = 2.0 * h0 * h1 - b1, s1
    a2, be2 = h1 * h1 - b2, s2
    ka = be1 * be1 - 4.0 * be2 * be0
    kb = 2.0 * a1 * be1 - 4.0 * (a2 * be0 + a0 * be2)
    kc = a1 * a1 - 4.0 * a2 * a0
    scale = max(1.0, abs(ka), abs(kb), abs(kc))
    if abs(ka) <= _TINY * scale:
        if abs(kb) <= _TINY * scale:
            if abs(kc) <= _TINY * scale:
                return [0.0]
            return []
        return [-kc / kb]
    disc = kb * kb - 4.0 * ka * kc
    if disc < 0.0:
        if disc > -_TINY * scale * scale:
            disc = 0.0
        else:
            return []
    root = math.sqrt(disc)
    # stable quadratic roots
    if kb >= 0.0:
        q = -(kb + root) / 2.0
    else:
        q = -(kb - root) / 2.0
    r1 = q / ka
    r2 = kc / q if q != 0.0 else r1
    return sorted({r1, r2})


def _sqrt_poly(problem: NUProblem, k: float) -> tuple[float, float]:
    """Linear polynomial (t, p) with (p*s + t)^2 equal to the radicand.

    Raises NonSquareRadicandError when the radicand is not the square of
    a real linear polynomial (nonzero residual discriminant, negative
    leading coefficient, or odd degree).
    """
    q0, q1, q2 = _radicand_coeffs(problem, k)
    scale = max(1.0, abs(q0), abs(q1), abs(q2))
    tiny = _TINY * scale
    if abs(q2) <= tiny:
        if abs(q1) > tiny:
            raise NonSquareRadicandError(
                "radicand is linear in s and cannot be a perfect square", residual=q1
            )
        if q0 < -tiny:
            raise NonSquareRadicandError(
                "constant radicand is negative", residual=q0
            )
        return (math.sqrt(max(q0, 0.0)), 0.0)
    if q2 < 0.0:
        raise NonSquareRadicandError(
            "radicand has negative leading coefficient", residual=q2
        )
    resid = q1 * q1 - 4.0 * q2 * q0
    if abs(resid) > _REL_TOL_SQUARE * scale:
        raise NonSquareRadicandError(
            f"radicand discriminant {resid!r} exceeds tolerance", residual=resid
        )
    p = math.sqrt(q2)
    t = q1 / (2.0 * p)
    return (t, p)


def pi_candidates(problem: NUProblem, k: float) -> list[tuple[float, float]]:
    """The pi polynomials for this k: (sigma'-tau_bar)/2 +- sqrt(radicand).

    Returns one candidate when the square root vanishes identically,
    otherwise two (plus branch first).
    """
    h0, h1 = _half_diff(problem)
    t, p = _sqrt_poly(problem, k)
    if t == 0.0 and p == 0.0:
        return [(h0, h1)]
    return [(h0 + t, h1 + p), (h0 - t, h1 - p)]


def select_branch(problem: NUProblem) -> NUSolution:
    """Pick the admissible (k, pi) with tau' < 0.

    Among all candidates the most negative tau' wins; ties go to the
    smaller k.  Raises NoBoundBranchError when no candidate qualifies.
    """
    t0, t1 = problem.tau_bar
    best = None
    for k in k_values(problem):
        try:
            cands = pi_candidates(problem, k)
        except NonSquareRadicandError:
            continue
        for idx, (p0, p1) in enumerate(cands):
            tau = (t0 + 2.0 * p0, t1 + 2.0 * p1)
            if tau[1] >= 0.0:
                continue
            branch = Branch.PLUS_ROOT if idx == 0 else Branch.MINUS_ROOT
            key = (tau[1], k)
            if best is None or key < best[0]:
                lam = k + p1
                best = (key, NUSolution(k=k, pi=(p0, p1), tau=tau, lam=lam, branch=branch))
    if best is None:
        raise NoBoundBranchError("no (k, pi) candidate has tau' < 0")
    return best[1]


def lambda_n(solution: NUSolution, problem: NUProblem, n: int) -> float:
    """lambda_n = -n tau' - n(n-1)/2 sigma''."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    tau_prime = solution.tau[1]
    sigma_pp = 2.0 * problem.sigma[2]
    return -n * tau_prime - 0.5 * n * (n - 1) * sigma_pp


def quantization_residual(problem_at_energy, n: int, energy: float) -> float:
    """lambda(E) - lambda_n(E) on the selected branch at this energy."""
    problem = problem_at_energy(energy)
    sol = select_branch(problem)
    return sol.lam - lambda_n(sol, problem, n)


def solve_quantization(
    problem_at_energy,
    n: int,
    lo: float,
    hi: float,
    rtol: float = 1e-12,
    max_iter: int = 240,
) -> float:
    """Bisect the quantization residual on [lo, hi].

    The bracket is caller-supplied; endpoints with residuals of equal
    sign raise NoRootError.  The residual need not be monotone, only
    sign-changing across the bracket.
    """
    if not lo < hi:
        raise DomainError("need lo < hi")
    f_lo = quantization_residual(problem_at_energy, n, lo)
    f_hi = quantization_residual(problem_at_energy, n, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoRootError(f"no sign change on [{lo}, {hi}]: ({f_lo}, {f_hi})")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rtol * max(1.0, abs(mid)):
            return mid
        f_mid = quantization_residual(problem_at_energy, n, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)
