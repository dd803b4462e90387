"""Matrix models of complexified Clifford algebras.

clifford_rep(n) builds the irreducible 2^ceil(n/2)-dimensional model by
the alternating sigma_x / sigma_y chain construction: generators at odd
positions are Z...Z X I...I, at even positions Z...Z Y I...I.  Each
generator is Hermitian, odd with respect to the monomial-degree grading
(parity of an index is its popcount), squares to the identity, and
anticommutes with the others.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graded import GradedMatrix, GradedSpace, graded_commutator, identity, operator_norm

__all__ = ["CliffordRep", "clifford_rep", "MAX_CLIFFORD_DIM"]

MAX_CLIFFORD_DIM = 6

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class CliffordRep:
    """Irreducible matrix model of Cliff_C(R^n) with its degree grading."""

    n: int
    space: GradedSpace
    generators: tuple[GradedMatrix, ...]

    def relation_defect(self) -> float:
        """Largest deviation from [e_i, e_j] = 2 delta_ij."""
        worst = 0.0
        two_id = 2.0 * identity(self.space)
        for i, ei in enumerate(self.generators):
            for j, ej in enumerate(self.generators):
                comm = graded_commutator(ei, ej)
                expected = two_id if i == j else None
                defect = operator_norm(comm - expected) if expected else operator_norm(comm)
                worst = max(worst, defect)
        return worst


def _chain(factors) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def clifford_rep(n: int, tol: float = 1e-12) -> CliffordRep:
    """Generators e_1..e_n of the irreducible Clifford matrix model.

    Supported for 1 <= n <= 6; relations are certified to `tol` at
    construction.
    """
    if not 1 <= n <= MAX_CLIFFORD_DIM:
        raise ValueError(f"clifford_rep supports 1 <= n <= {MAX_CLIFFORD_DIM}")
    m = (n + 1) // 2
    dim = 2**m
    parity = tuple(bin(i).count("1") % 2 for i in range(dim))
    space = GradedSpace(parity)
    generators = []
    for index in range(1, n + 1):
        k = (index + 1) // 2
        head = _PAULI_X if index % 2 else _PAULI_Y
        factors = [_PAULI_Z] * (k - 1) + [head] + [np.eye(2, dtype=np.complex128)] * (m - k)
        generators.append(GradedMatrix(space, _chain(factors)))
    rep = CliffordRep(n, space, tuple(generators))
    if rep.relation_defect() > tol:
        raise AssertionError("clifford relations failed validation")
    for g in generators:
        if g.parity() != 1 or not g.is_hermitian():
            raise AssertionError("clifford generator must be odd and Hermitian")
    return rep
