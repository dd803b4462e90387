"""Dense Z/2-graded linear algebra.

A graded space is a finite-dimensional complex vector space whose basis
vectors carry a parity in {0, 1}.  The grading operator gamma is the
diagonal sign matrix diag((-1)**parity); a matrix is even if it commutes
with gamma and odd if it anticommutes.  Everything in this module is a
pure function of immutable values (entry arrays are marked read-only),
so values are safe to share across threads.

Sign conventions:

* graded commutator of homogeneous a, b:  [a, b] = ab - (-1)^(pa*pb) ba,
  extended bilinearly over parity parts for inhomogeneous input;
* graded tensor product a (x) b realized as the Kronecker product
  (a . gamma^pb) (x) b, which reproduces the Koszul sign
  (a (x) b)(c (x) d) = (-1)^(pb*pc) (ac) (x) (bd) with plain matrix
  arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "VALIDATION_TOL",
    "GradedSpace",
    "GradedMatrix",
    "OddSelfAdjoint",
    "identity",
    "zeros",
    "gamma_matrix",
    "parity_decompose",
    "graded_commutator",
    "graded_tensor",
    "direct_sum",
    "conjugate_by_grading",
    "operator_norm",
]

# Default constructor-validation tolerance; overridable per call where noted.
VALIDATION_TOL = 1e-12


@dataclass(frozen=True)
class GradedSpace:
    """Finite-dimensional space with one parity bit per basis vector."""

    parity: tuple[int, ...]

    def __post_init__(self):
        if len(self.parity) < 1:
            raise ValueError("graded space needs dimension >= 1")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parity entries must be 0 or 1")

    @classmethod
    def ungraded(cls, dim: int) -> "GradedSpace":
        return cls((0,) * dim)

    @classmethod
    def split(cls, even: int, odd: int) -> "GradedSpace":
        """Space with `even` parity-0 vectors followed by `odd` parity-1 ones."""
        return cls((0,) * even + (1,) * odd)

    @property
    def dim(self) -> int:
        return len(self.parity)

    def gamma_signs(self) -> np.ndarray:
        """Diagonal of the grading operator, exactly +-1."""
        return np.where(np.asarray(self.parity) == 0, 1.0, -1.0)

    def gamma(self) -> np.ndarray:
        return np.diag(self.gamma_signs().astype(np.complex128))


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class GradedMatrix:
    """Complex square matrix on a graded space."""

    space: GradedSpace
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries)
        d = self.space.dim
        if entries.shape != (d, d):
            raise ValueError(f"entries must be {d}x{d}, got {entries.shape}")
        object.__setattr__(self, "entries", _frozen(entries))

    # -- structure ---------------------------------------------------------

    def even_part(self) -> "GradedMatrix":
        return parity_decompose(self)[0]

    def odd_part(self) -> "GradedMatrix":
        return parity_decompose(self)[1]

    def parity(self, tol: float = VALIDATION_TOL) -> int | None:
        """0 or 1 for homogeneous matrices, None for mixed ones."""
        even, odd = parity_decompose(self)
        scale = max(1.0, float(np.abs(self.entries).max(initial=0.0)))
        even_small = np.abs(even.entries).max(initial=0.0) <= tol * scale
        odd_small = np.abs(odd.entries).max(initial=0.0) <= tol * scale
        if odd_small:
            return 0
        if even_small:
            return 1
        return None

    def adjoint(self) -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries.conj().T)

    def is_hermitian(self, tol: float = VALIDATION_TOL) -> bool:
        scale = max(1.0, float(np.abs(self.entries).max(initial=0.0)))
        return bool(np.abs(self.entries - self.entries.conj().T).max(initial=0.0) <= tol * scale)

    # -- arithmetic ---------------------------------------------------------

    def _check_space(self, other: "GradedMatrix"):
        if self.space != other.space:
            raise ValueError("graded matrices live on different spaces")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check_space(other)
        return GradedMatrix(self.space, self.entries + other.entries)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check_space(other)
        return GradedMatrix(self.space, self.entries - other.entries)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.space, -self.entries)

    def __mul__(self, scalar: complex) -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check_space(other)
        return GradedMatrix(self.space, self.entries @ other.entries)

    def allclose(self, other: "GradedMatrix", tol: float = VALIDATION_TOL) -> bool:
        self._check_space(other)
        return bool(np.abs(self.entries - other.entries).max(initial=0.0) <= tol)


def identity(space: GradedSpace) -> GradedMatrix:
    return GradedMatrix(space, np.eye(space.dim, dtype=np.complex128))


def zeros(space: GradedSpace) -> GradedMatrix:
    return GradedMatrix(space, np.zeros((space.dim, space.dim), dtype=np.complex128))


def gamma_matrix(space: GradedSpace) -> GradedMatrix:
    return GradedMatrix(space, space.gamma())


@dataclass(frozen=True)
class OddSelfAdjoint:
    """Hermitian matrix that anticommutes with the grading operator.

    Plays the role of the unbounded odd self-adjoint multipliers (Dirac
    operators, Clifford multiplications, potentials) at finite scale.
    Construction validates Hermiticity and oddness to `tol`.
    """

    underlying: GradedMatrix

    def __post_init__(self):
        tol = getattr(self, "_tol", VALIDATION_TOL)
        m = self.underlying
        if not m.is_hermitian(tol):
            raise ValueError("odd self-adjoint operator must be Hermitian")
        signs = m.space.gamma_signs()
        flipped = (signs[:, None] * m.entries) * signs[None, :]
        scale = max(1.0, float(np.abs(m.entries).max(initial=0.0)))
        if np.abs(flipped + m.entries).max(initial=0.0) > tol * scale:
            raise ValueError("operator does not anticommute with the grading")

    @classmethod
    def of(cls, space: GradedSpace, entries: np.ndarray, tol: float = VALIDATION_TOL) -> "OddSelfAdjoint":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_tol", tol)
        object.__setattr__(obj, "underlying", GradedMatrix(space, entries))
        obj.__post_init__()
        return obj

    @property
    def space(self) -> GradedSpace:
        return self.underlying.space

    @property
    def mat(self) -> np.ndarray:
        return self.underlying.entries

    def __add__(self, other: "OddSelfAdjoint") -> "OddSelfAdjoint":
        return OddSelfAdjoint(self.underlying + other.underlying)

    def __sub__(self, other: "OddSelfAdjoint") -> "OddSelfAdjoint":
        return OddSelfAdjoint(self.underlying - other.underlying)

    def __neg__(self) -> "OddSelfAdjoint":
        return OddSelfAdjoint(-self.underlying)

    def scaled(self, factor: float) -> "OddSelfAdjoint":
        return OddSelfAdjoint(self.underlying * float(factor))


def parity_decompose(m: GradedMatrix) -> tuple[GradedMatrix, GradedMatrix]:
    """Split m = even + odd; exact (the two halves sum back bit for bit).

    The even part commutes with gamma, the odd part anticommutes.
    """
    signs = m.space.gamma_signs()
    conj = (signs[:, None] * m.entries) * signs[None, :]
    even = GradedMatrix(m.space, (m.entries + conj) * 0.5)
    odd = GradedMatrix(m.space, (m.entries - conj) * 0.5)
    return even, odd


def _commutator_term(a: np.ndarray, b: np.ndarray, sign: float) -> np.ndarray:
    return a @ b - sign * (b @ a)


def graded_commutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """[a, b] = ab - (-1)^(pa*pb) ba, extended bilinearly over parity parts."""
    if a.space != b.space:
        raise ValueError("graded commutator needs matrices on the same space")
    a0, a1 = parity_decompose(a)
    b0, b1 = parity_decompose(b)
    out = _commutator_term(a0.entries, b0.entries, 1.0)
    out += _commutator_term(a0.entries, b1.entries, 1.0)
    out += _commutator_term(a1.entries, b0.entries, 1.0)
    out += _commutator_term(a1.entries, b1.entries, -1.0)
    return GradedMatrix(a.space, out)


def graded_tensor(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Koszul-signed tensor product (a . gamma^pb) Kron b.

    Inhomogeneous b is handled by linear extension over its parity parts.
    The product space carries parity p(i, j) = (pa_i + pb_j) mod 2 in
    row-major Kronecker order.
    """
    b0, b1 = parity_decompose(b)
    gamma = a.space.gamma_signs()
    out = np.kron(a.entries, b0.entries)
    out += np.kron(a.entries * gamma[None, :], b1.entries)
    pa = np.asarray(a.space.parity)
    pb = np.asarray(b.space.parity)
    parity = tuple(int(p) for p in ((pa[:, None] + pb[None, :]) % 2).ravel())
    return GradedMatrix(GradedSpace(parity), out)


def direct_sum(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Block-diagonal sum on the concatenated space."""
    da, db = a.space.dim, b.space.dim
    out = np.zeros((da + db, da + db), dtype=np.complex128)
    out[:da, :da] = a.entries
    out[da:, da:] = b.entries
    return GradedMatrix(GradedSpace(a.space.parity + b.space.parity), out)


def conjugate_by_grading(a: GradedMatrix) -> GradedMatrix:
    """a -> gamma a gamma; fixes the even part and negates the odd part."""
    signs = a.space.gamma_signs()
    return GradedMatrix(a.space, (signs[:, None] * a.entries) * signs[None, :])


def operator_norm(a) -> float:
    """Largest singular value."""
    if isinstance(a, OddSelfAdjoint):
        a = a.underlying
    entries = a.entries if isinstance(a, GradedMatrix) else np.asarray(a)
    if entries.size == 0:
        return 0.0
    return float(np.linalg.norm(entries, 2))
