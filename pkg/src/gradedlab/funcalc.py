"""Functional calculus for odd self-adjoint matrices.

f(D) is computed through the eigendecomposition U diag(f(lambda)) U*.
The calculus is a graded *-homomorphism: it is multiplicative on
functions, contractive (||f(D)|| <= sup|f|), and satisfies
gamma f(D) gamma = f(-D), so even functions of D are even and odd
functions are odd.

The named function table carries exact sup norms so contractivity can
be certified without sampling.  User-supplied functions may declare a
sup-norm bound; without one, contractivity checks are skipped for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graded import (
    GradedMatrix,
    OddSelfAdjoint,
    VALIDATION_TOL,
    graded_commutator,
    operator_norm,
)

__all__ = [
    "ScalarFunction",
    "GAUSS0",
    "GAUSS1",
    "CAYLEY",
    "MULTIPLIER_G",
    "RESOLVENT_PLUS",
    "RESOLVENT_MINUS",
    "NAMED_FUNCTIONS",
    "PAIR_FUNCTIONS",
    "bounded_transform_function",
    "cutoff_function",
    "user_function",
    "Spectrum",
    "apply_function",
    "bounded_transform",
    "integral_decomposition",
    "ResolventCommutatorReport",
    "resolvent_commutator_check",
]


@dataclass(frozen=True)
class ScalarFunction:
    """Named real-to-complex function with optional sup norm and parity.

    parity is 0 for even functions, 1 for odd ones, None when mixed or
    unknown; sup_norm is None when no bound was declared.
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    sup_norm: float | None = None
    parity: int | None = None

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))


GAUSS0 = ScalarFunction("gauss0", lambda x: np.exp(-(x**2)), 1.0, 0)
# sup of |x e^{-x^2}| is attained at x = 1/sqrt(2)
GAUSS1 = ScalarFunction("gauss1", lambda x: x * np.exp(-(x**2)), 1.0 / math.sqrt(2.0 * math.e), 1)
CAYLEY = ScalarFunction("cayley", lambda x: 1.0 / (1.0 + x**2), 1.0, 0)
MULTIPLIER_G = ScalarFunction("g", lambda x: x / (1.0 + x**2), 0.5, 1)
RESOLVENT_PLUS = ScalarFunction("resolvent+", lambda x: 1.0 / (x + 1j), 1.0, None)
RESOLVENT_MINUS = ScalarFunction("resolvent-", lambda x: 1.0 / (x - 1j), 1.0, None)

NAMED_FUNCTIONS = (GAUSS0, GAUSS1, CAYLEY, MULTIPLIER_G, RESOLVENT_PLUS, RESOLVENT_MINUS)

# Function set used when validating asymptotic pairs.
PAIR_FUNCTIONS = (GAUSS0, GAUSS1, RESOLVENT_PLUS, RESOLVENT_MINUS)


def bounded_transform_function(n_scale: float) -> ScalarFunction:
    """i_N(x) = x (1 + x^2/N^2)^(-1); odd, with sup norm N/2 at x = +-N."""
    if n_scale <= 0:
        raise ValueError("transform scale must be positive")
    n2 = float(n_scale) ** 2
    return ScalarFunction(
        f"transform[{n_scale:g}]",
        lambda x: x / (1.0 + (x**2) / n2),
        float(n_scale) / 2.0,
        1,
    )


def cutoff_function(radius: float) -> ScalarFunction:
    """C^1 plateau function: 1 on [-R, R], 0 off [-2R, 2R].

    The shoulders are the cubic smoothstep 3u^2 - 2u^3 in
    u = (2R - |x|)/R, so the function and its first derivative are
    continuous everywhere.
    """
    if radius <= 0:
        raise ValueError("cutoff radius must be positive")
    r = float(radius)

    def chi(x):
        u = np.clip((2.0 * r - np.abs(x)) / r, 0.0, 1.0)
        return u * u * (3.0 - 2.0 * u)

    return ScalarFunction(f"cutoff[{r:g}]", chi, 1.0, 0)


def user_function(name, fn, sup_norm=None, parity=None) -> ScalarFunction:
    return ScalarFunction(name, fn, sup_norm, parity)


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def of(cls, operator, tol: float = 1e-10) -> "Spectrum":
        if isinstance(operator, OddSelfAdjoint):
            matrix = operator.mat
        elif isinstance(operator, GradedMatrix):
            matrix = operator.entries
        else:
            matrix = np.asarray(operator, dtype=np.complex128)
        scale = max(1.0, float(np.abs(matrix).max(initial=0.0)))
        if np.abs(matrix - matrix.conj().T).max(initial=0.0) > VALIDATION_TOL * scale:
            raise ValueError("eigendecomposition requires a Hermitian matrix")
        values, vectors = np.linalg.eigh(matrix)
        spec = cls(values, vectors)
        norm = max(1.0, float(np.abs(values).max(initial=0.0)))
        residual = np.abs(spec.reconstruct() - matrix).max(initial=0.0)
        gram = vectors.conj().T @ vectors
        unitary_defect = np.abs(gram - np.eye(len(values))).max(initial=0.0)
        if residual > tol * norm or unitary_defect > tol:
            raise ValueError("eigendecomposition failed accuracy validation")
        return spec

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues[None, :]) @ self.eigenvectors.conj().T

    def apply(self, f: ScalarFunction, scale: float = 1.0) -> np.ndarray:
        """Matrix of f(scale * D) in the original basis."""
        w = np.asarray(f(scale * self.eigenvalues), dtype=np.complex128)
        return (self.eigenvectors * w[None, :]) @ self.eigenvectors.conj().T


def apply_function(d: OddSelfAdjoint, f: ScalarFunction, scale: float = 1.0) -> GradedMatrix:
    """f(scale * D) via the spectral theorem."""
    spec = Spectrum.of(d)
    return GradedMatrix(d.space, spec.apply(f, scale))


def bounded_transform(d: OddSelfAdjoint, n_scale: float) -> OddSelfAdjoint:
    """D_N = i_N(D) with i_N(x) = x (1 + x^2/N^2)^(-1).

    Odd and Hermitian with ||D_N|| <= N/2; f(D_N) -> f(D) in norm as the
    scale N grows, for f vanishing at infinity.
    """
    f = bounded_transform_function(n_scale)
    m = apply_function(d, f)
    # i_N is odd and real, so the result is exactly odd Hermitian up to roundoff
    sym = (m.entries + m.entries.conj().T) * 0.5
    return OddSelfAdjoint(GradedMatrix(d.space, sym))


def integral_decomposition(d: OddSelfAdjoint, n_scale: float, quad_points: int) -> GradedMatrix:
    """Resolvent-kernel integral reproducing the bounded transform.

    Evaluates int_0^inf (D^2/N^2 + 1 + s^2)^(-3/2) D ds by Gauss-Legendre
    quadrature after the substitution s = tan(theta); the scalar identity
    int_0^inf (a^2 + s^2)^(-3/2) ds = a^(-2) makes the integral equal to
    i_N(D) exactly, so the quadrature converges to bounded_transform(d, N)
    as quad_points grows.  The integrand is evaluated in the eigenbasis of
    D, where all factors commute.
    """
    if n_scale <= 0:
        raise ValueError("transform scale must be positive")
    if quad_points < 8:
        raise ValueError("need at least 8 quadrature points")
    spec = Spectrum.of(d)
    nodes, weights = np.polynomial.legendre.leggauss(int(quad_points))
    theta = (nodes + 1.0) * (np.pi / 4.0)
    jacobian = weights * (np.pi / 4.0) / np.cos(theta) ** 2
    s = np.tan(theta)
    lam = spec.eigenvalues
    a2 = (lam / n_scale) ** 2 + 1.0
    kernel = (a2[:, None] + (s**2)[None, :]) ** -1.5
    values = lam * (kernel @ jacobian)
    out = (spec.eigenvectors * values[None, :]) @ spec.eigenvectors.conj().T
    return GradedMatrix(d.space, out)


@dataclass(frozen=True)
class ResolventCommutatorReport:
    """Commutator contraction certificate for the resolvent-type functions.

    lhs_cayley = ||[ (D^2+1)^(-1), T ]||, lhs_g = ||[ D(D^2+1)^(-1), T ]||,
    both certified against rhs = ||[D, T]|| + tol.
    """

    lhs_cayley: float
    lhs_g: float
    rhs: float
    tol: float
    passed: bool


def resolvent_commutator_check(
    d: OddSelfAdjoint, t: GradedMatrix, tol: float = 1e-10
) -> ResolventCommutatorReport:
    """Certify ||[f(D), T]|| <= ||[D, T]|| for f = cayley and f = g.

    T must be homogeneous; the estimates are graded-commutator statements
    about homogeneous multipliers.
    """
    if t.parity() is None:
        raise ValueError("commutator contraction check needs homogeneous T")
    if d.space != t.space:
        raise ValueError("operator and test element live on different spaces")
    rhs = operator_norm(graded_commutator(d.underlying, t))
    lhs_cayley = operator_norm(graded_commutator(apply_function(d, CAYLEY), t))
    lhs_g = operator_norm(graded_commutator(apply_function(d, MULTIPLIER_G), t))
    passed = lhs_cayley <= rhs + tol and lhs_g <= rhs + tol
    return ResolventCommutatorReport(lhs_cayley, lhs_g, rhs, tol, passed)
