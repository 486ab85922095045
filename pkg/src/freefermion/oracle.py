"""Dense exact-diagonalization ground truth for small models.

Independent of the graph pipeline: Hamiltonians are materialized as
2^n x 2^n complex matrices by direct Pauli action on basis states and
diagonalized with LAPACK.  Intended as the reference every pipeline
result is checked against; refuses more than 12 qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OracleSizeError
from .pauli import HamiltonianSpec, PauliWord, SignedPauli

MAX_ORACLE_QUBITS = 12


def _reverse_bits(mask: int, n: int) -> int:
    out = 0
    for k in range(n):
        if mask >> k & 1:
            out |= 1 << (n - 1 - k)
    return out


def _parity_lookup(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint32)
    par = np.zeros(1 << n, dtype=np.int8)
    while idx.any():
        par ^= (idx & 1).astype(np.int8)
        idx >>= 1
    return par


def dense_pauli(word: PauliWord) -> np.ndarray:
    """Dense matrix of the Hermitian word, qubit 0 as the leftmost factor."""
    return dense_matrix(HamiltonianSpec(word.n, ((word, 1.0),)))


def dense_signed(op: SignedPauli) -> np.ndarray:
    return (1j ** op.phase_power) * dense_pauli(op.word)


def dense_matrix(spec: HamiltonianSpec) -> np.ndarray:
    """Assemble the full Hamiltonian matrix.

    A word (x, z) sends basis state |v> to i^(x.z) (-1)^(z.v) |v xor x>,
    so each term fills one (row-permuted) diagonal.
    """
    n = spec.n
    if n > MAX_ORACLE_QUBITS:
        raise OracleSizeError(f"dense oracle capped at {MAX_ORACLE_QUBITS} qubits, got {n}")
    dim = 1 << n
    cols = np.arange(dim, dtype=np.int64)
    parity = _parity_lookup(n)
    out = np.zeros((dim, dim), dtype=np.complex128)
    for word, coeff in spec.terms:
        a = _reverse_bits(word.x, n)
        b = _reverse_bits(word.z, n)
        phase = 1j ** ((word.x & word.z).bit_count() % 4)
        values = coeff * phase * np.where(parity[cols & b] == 1, -1.0, 1.0)
        out[cols ^ a, cols] += values
    return out


def full_spectrum(dense: np.ndarray, hermiticity_tol: float = 1e-12) -> np.ndarray:
    """All eigenvalues, ascending.  Rejects non-Hermitian input."""
    dev = np.abs(dense - dense.conj().T).max()
    if dev > hermiticity_tol * max(1.0, np.abs(dense).max()):
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return np.linalg.eigvalsh(dense)


def sector_project(
    dense: np.ndarray, stabilizers: list[tuple[SignedPauli, int]]
) -> np.ndarray:
    """Restrict to the joint eigenspace of signed commuting Pauli stabilizers.

    Each entry is (operator, eigenvalue in {+1, -1}).  Returns the
    restricted Hamiltonian in an orthonormal basis of the subspace.
    """
    dim = dense.shape[0]
    proj = np.eye(dim, dtype=np.complex128)
    mats = [(dense_signed(op), val) for op, val in stabilizers]
    for i, (m1, _) in enumerate(mats):
        if np.abs(m1 @ dense - dense @ m1).max() > 1e-9:
            raise ValueError("stabilizer does not commute with the Hamiltonian")
        for m2, _ in mats[i + 1:]:
            if np.abs(m1 @ m2 - m2 @ m1).max() > 1e-9:
                raise ValueError("stabilizers do not commute pairwise")
    for mat, val in mats:
        proj = proj @ (np.eye(dim) + val * mat) / 2.0
    evals, evecs = np.linalg.eigh(proj)
    basis = evecs[:, evals > 0.5]
    return basis.conj().T @ dense @ basis


def projected_spectrum(
    spec: HamiltonianSpec, stabilizers: list[tuple[SignedPauli, int]]
) -> np.ndarray:
    """Spectrum (with multiplicity) of the Hamiltonian inside a stabilizer sector."""
    restricted = sector_project(dense_matrix(spec), stabilizers)
    if restricted.shape[0] == 0:
        return np.array([])
    return full_spectrum(restricted, hermiticity_tol=1e-10)


@dataclass(frozen=True)
class MultisetReport:
    equal: bool
    max_deviation: float
    first_mismatch: int | None
    size_a: int
    size_b: int

    def __str__(self) -> str:
        if self.equal:
            return f"MATCH (max dev {self.max_deviation:.3e})"
        if self.size_a != self.size_b:
            return f"MISMATCH (sizes {self.size_a} vs {self.size_b})"
        return (
            f"MISMATCH at index {self.first_mismatch} "
            f"(max dev {self.max_deviation:.3e})"
        )


def compare_multisets(a, b, tol: float = 1e-8) -> MultisetReport:
    """Greedy sorted matching of two real multisets within absolute tolerance."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if len(a) != len(b):
        return MultisetReport(False, float("inf"), None, len(a), len(b))
    if len(a) == 0:
        return MultisetReport(True, 0.0, None, 0, 0)
    dev = np.abs(a - b)
    worst = int(np.argmax(dev))
    max_dev = float(dev[worst])
    if max_dev <= tol:
        return MultisetReport(True, max_dev, None, len(a), len(b))
    first = int(np.argmax(dev > tol))
    return MultisetReport(False, max_dev, first, len(a), len(b))


def expand_multiplicities(groups) -> np.ndarray:
    """Flatten (value, count) pairs into a sorted value array."""
    out: list[float] = []
    for value, count in groups:
        out.extend([value] * count)
    return np.sort(np.array(out))
