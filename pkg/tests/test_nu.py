"""Polynomial-reduction engine: k roots, branch selection, quantization.

Polynomials are ascending coefficient tuples.  The harmonic oscillator
in its dimensionless form (sigma = 1, tau_bar = 0, sigma_bar =
2*eps - s^2) is the reference problem: everything about it is known in
closed form, so it anchors every stage of the pipeline.
"""

import math

import numpy as np
import pytest

from wsbound import nu
from wsbound.errors import NoBoundBranchError, NonSquareRadicandError, NoRootError


def oscillator(eps: float) -> nu.NUProblem:
    return nu.NUProblem(
        sigma=(1.0,), tau_bar=(0.0,), sigma_bar=(2.0 * eps, 0.0, -1.0)
    )


def _poly_eval(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def _radicand(problem: nu.NUProblem, k: float):
    """((sigma' - tau_bar)/2)^2 - sigma_bar + k*sigma as coefficient tuple."""
    sig = problem.sigma
    dsig = tuple((i + 1) * c for i, c in enumerate(sig[1:]))
    half = [0.0, 0.0]
    for i, c in enumerate(dsig):
        half[i] += 0.5 * c
    for i, c in enumerate(problem.tau_bar):
        half[i] -= 0.5 * c
    out = [0.0, 0.0, 0.0]
    out[0] = half[0] ** 2
    out[1] = 2.0 * half[0] * half[1]
    out[2] = half[1] ** 2
    for i, c in enumerate(problem.sigma_bar):
        out[i] -= c
    for i, c in enumerate(sig):
        out[i] += k * c
    return tuple(out)


def test_oscillator_k_root():
    # radicand s^2 + (k - 2 eps) is a perfect square only at k = 2 eps
    assert nu.k_values(oscillator(2.5)) == [5.0]
    assert nu.k_values(oscillator(0.5)) == [1.0]


def test_k_values_by_brute_force_discriminant_scan():
    # independent root finding: scan k for a sign change of the
    # discriminant of the radicand quadratic
    problem = nu.NUProblem(
        sigma=(0.0, 1.0, 1.0), tau_bar=(0.0, 1.0), sigma_bar=(0.0, 1.0, -1.0)
    )
    ks = nu.k_values(problem)
    assert ks == pytest.approx([1.0 - math.sqrt(2.0), 1.0 + math.sqrt(2.0)], rel=1e-12)

    def disc(k):
        c0, c1, c2 = _radicand(problem, k)
        return c1 * c1 - 4.0 * c2 * c0

    grid = np.linspace(-4.0, 5.0, 20001)
    vals = np.array([disc(k) for k in grid])
    crossings = grid[:-1][np.sign(vals[:-1]) * np.sign(vals[1:]) < 0]
    assert len(crossings) == len(ks)
    for found, scanned in zip(sorted(ks), crossings):
        assert abs(found - scanned) < 1e-3


def test_k_root_makes_radicand_a_square():
    problem = nu.NUProblem(
        sigma=(0.0, 1.0, 1.0), tau_bar=(0.0, 1.0), sigma_bar=(0.0, 1.0, -1.0)
    )
    for k in nu.k_values(problem):
        c0, c1, c2 = _radicand(problem, k)
        assert abs(c1 * c1 - 4.0 * c2 * c0) < 1e-10


def test_pi_candidates_oscillator():
    # sqrt(s^2) = s, so pi = 0 +- s
    cands = nu.pi_candidates(oscillator(2.5), 5.0)
    assert sorted(cands) == [(0.0, -1.0), (0.0, 1.0)]


def test_pi_candidates_square_reproduction():
    # the square of the extracted root polynomial reproduces the radicand
    problem = nu.NUProblem(
        sigma=(0.0, 1.0, 1.0), tau_bar=(0.0, 1.0), sigma_bar=(0.0, 1.0, -1.0)
    )
    for k in nu.k_values(problem):
        plus, minus = nu.pi_candidates(problem, k)
        root = tuple(0.5 * (p - q) for p, q in zip(plus, minus))
        rad = _radicand(problem, k)
        square = (
            root[0] ** 2,
            2.0 * root[0] * root[1],
            root[1] ** 2,
        )
        assert square == pytest.approx(rad, abs=1e-10)


def test_pi_candidates_all_zero_radicand_single_candidate():
    # sigma = s, tau_bar = 1: half-term vanishes, radicand k*s is a
    # square only at k = 0 and then the root is identically zero
    problem = nu.NUProblem(sigma=(0.0, 1.0), tau_bar=(1.0,), sigma_bar=(0.0,))
    ks = nu.k_values(problem)
    assert len(ks) == 1 and ks[0] == 0.0
    assert nu.pi_candidates(problem, 0.0) == [(0.0, 0.0)]


def test_pi_candidates_rejects_non_square():
    problem = oscillator(2.5)
    with pytest.raises(NonSquareRadicandError):
        nu.pi_candidates(problem, 1.0)  # k != 2 eps leaves a non-square radicand


def test_select_branch_oscillator():
    sol = nu.select_branch(oscillator(2.5))
    assert sol.k == 5.0
    assert sol.pi == (0.0, -1.0)
    assert sol.tau == (0.0, -2.0)
    assert sol.lam == 4.0
    assert sol.branch is nu.Branch.MINUS_ROOT


def test_select_branch_downhill_tau_bar():
    # tau_bar = -2s already has negative slope; the zero-pi candidate wins
    problem = nu.NUProblem(sigma=(1.0,), tau_bar=(0.0, -2.0), sigma_bar=(0.0,))
    sol = nu.select_branch(problem)
    assert sol.k == 0.0
    assert sol.pi == (0.0, 0.0)
    assert sol.tau == (0.0, -2.0)
    assert sol.lam == 0.0


def test_select_branch_tau_relation_and_lambda():
    # tau = tau_bar + 2 pi and lam = k + pi' hold exactly
    problem = nu.NUProblem(
        sigma=(0.0, 1.0, 1.0), tau_bar=(0.0, 1.0), sigma_bar=(0.0, 1.0, -1.0)
    )
    sol = nu.select_branch(problem)
    assert sol.tau[0] == problem.tau_bar[0] + 2.0 * sol.pi[0]
    assert sol.tau[1] == 1.0 + 2.0 * sol.pi[1]
    assert sol.lam == sol.k + sol.pi[1]
    assert sol.tau[1] < 0.0


def test_select_branch_unique_valid_branch():
    # for this problem only k = 1 + sqrt(2) admits a decreasing tau
    problem = nu.NUProblem(
        sigma=(0.0, 1.0, 1.0), tau_bar=(0.0, 1.0), sigma_bar=(0.0, 1.0, -1.0)
    )
    sol = nu.select_branch(problem)
    assert sol.k == pytest.approx(1.0 + math.sqrt(2.0), rel=1e-14)
    assert sol.pi == pytest.approx((0.0, -math.sqrt(2.0)), rel=1e-14)
    assert sol.lam == pytest.approx(1.0, rel=1e-12)


def test_select_branch_no_bound_branch():
    # sigma = s^2, sigma_bar = -1: the only k root (-1) leaves a constant
    # radicand, both candidates have slope +1, so tau' = +2 on both
    problem = nu.NUProblem(sigma=(0.0, 0.0, 1.0), tau_bar=(0.0,), sigma_bar=(-1.0,))
    ks = nu.k_values(problem)
    assert ks == [-1.0]
    with pytest.raises(NoBoundBranchError):
        nu.select_branch(problem)


def test_lambda_n_values():
    prob = oscillator(2.5)
    sol = nu.select_branch(prob)
    assert nu.lambda_n(sol, prob, 0) == 0.0
    assert nu.lambda_n(sol, prob, 3) == 6.0  # -n tau' with tau' = -2


def test_lambda_n_curvature_term():
    # sigma'' = 2 and tau' = -5: lambda_2 = 10 - 2 = 8
    problem = nu.NUProblem(
        sigma=(0.0, 0.0, 1.0), tau_bar=(0.0, -5.0), sigma_bar=(0.0,)
    )
    sol = nu.NUSolution(
        k=0.0, pi=(0.0, 0.0), tau=(0.0, -5.0), lam=0.0, branch=nu.Branch.MINUS_ROOT
    )
    assert nu.lambda_n(sol, problem, 2) == 8.0


def test_lambda_zero_identity_random_problems():
    # n = 0 always yields lambda_0 = 0 exactly, for any problem with a
    # valid bound branch
    rng = np.random.default_rng(20240614)
    for _ in range(100):
        t0, t1, g0, g1 = rng.uniform(-2.0, 2.0, size=4)
        lead_gap = rng.uniform(0.1, 2.0)
        problem = nu.NUProblem(
            sigma=(1.0,),
            tau_bar=(t0, t1),
            sigma_bar=(g0, g1, t1 * t1 / 4.0 - lead_gap),
        )
        sol = nu.select_branch(problem)
        assert sol.tau[1] < 0.0
        assert nu.lambda_n(sol, problem, 0) == 0.0


def test_quantization_residual_sign_change_brackets_level():
    def at_energy(eps):
        return oscillator(eps)

    for n in range(4):
        lo = nu.quantization_residual(at_energy, n, float(n))
        hi = nu.quantization_residual(at_energy, n, float(n + 1))
        assert lo * hi < 0.0


def test_solve_quantization_oscillator_levels():
    def at_energy(eps):
        return oscillator(eps)

    for n in range(6):
        eps = nu.solve_quantization(at_energy, n, float(n), float(n + 1), rtol=1e-14)
        assert abs(eps - (n + 0.5)) < 1e-12


def test_solve_quantization_rejects_unbracketed():
    def at_energy(eps):
        return oscillator(eps)

    with pytest.raises(NoRootError):
        nu.solve_quantization(at_energy, 0, 2.0, 3.0)


def test_solve_quantization_tightens_with_rtol():
    def at_energy(eps):
        return oscillator(eps)

    loose = nu.solve_quantization(at_energy, 2, 2.0, 3.0, rtol=1e-6)
    tight = nu.solve_quantization(at_energy, 2, 2.0, 3.0, rtol=1e-14)
    assert abs(tight - 2.5) <= abs(loose - 2.5) + 1e-15
    assert abs(tight - 2.5) < 1e-13
