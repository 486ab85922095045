"""Exact symplectic algebra for Hermitian Pauli words.

An n-qubit Pauli word is stored as a pair of n-bit integers ``(x, z)``:
bit k of ``x`` is set when the word acts on qubit k with X or Y, bit k of
``z`` when it acts with Z or Y.  Qubit 0 is the leftmost character of a
Pauli string, and bit k of a mask refers to qubit k.  The represented
operator is ``i**(x.z) * X^x * Z^z``, which is Hermitian by construction,
so no phase is stored on a bare word.  All phase arithmetic is exact,
tracked as an integer power of i modulo 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

_PAULI_CHARS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class PauliWord:
    """Hermitian Pauli word in symplectic (x-mask, z-mask) form."""

    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"qubit count must be >= 1, got {self.n}")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise InputError("bit mask exceeds qubit count")

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> int:
        return self.x | self.z

    def to_string(self) -> str:
        out = []
        for k in range(self.n):
            xb = self.x >> k & 1
            zb = self.z >> k & 1
            out.append("IXZY"[xb + 2 * zb])
        return "".join(out)

    def __str__(self) -> str:
        return self.to_string()

    def symplectic_vector(self) -> int:
        """Pack (x, z) into a single 2n-bit integer for GF(2) row work."""
        return (self.x << self.n) | self.z


def parse_pauli(text: str, n: int | None = None) -> PauliWord:
    """Parse a string over {I, X, Y, Z} into a PauliWord.

    Character k of the string addresses qubit k.  When ``n`` is given the
    string length must match it exactly.
    """
    if n is not None and len(text) != n:
        raise InputError(f"expected a length-{n} Pauli string, got {len(text)}")
    if not text:
        raise InputError("empty Pauli string")
    x = z = 0
    for k, ch in enumerate(text):
        try:
            xb, zb = _PAULI_CHARS[ch]
        except KeyError:
            raise InputError(f"illegal Pauli character {ch!r} at position {k}") from None
        x |= xb << k
        z |= zb << k
    return PauliWord(len(text), x, z)


def symplectic_inner(j: PauliWord, k: PauliWord) -> int:
    """Binary symplectic inner product: 1 iff the words anticommute."""
    if j.n != k.n:
        raise InputError(f"qubit count mismatch: {j.n} vs {k.n}")
    return ((j.x & k.z) ^ (j.z & k.x)).bit_count() & 1


@dataclass(frozen=True)
class SignedPauli:
    """A Pauli word with an exact scalar prefactor i**phase_power.

    Hermitian operators carry phase_power in {0, 2}.
    """

    word: PauliWord
    phase_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase_power", self.phase_power % 4)

    @property
    def is_hermitian(self) -> bool:
        return self.phase_power % 2 == 0

    @property
    def sign(self) -> int:
        """Return +1/-1 for a Hermitian operator; error otherwise."""
        if not self.is_hermitian:
            raise ValueError("operator is not +/- a Hermitian Pauli word")
        return 1 if self.phase_power == 0 else -1

    def to_string(self) -> str:
        prefix = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase_power]
        return prefix + self.word.to_string()

    def __str__(self) -> str:
        return self.to_string()


def _word_product(j: PauliWord, k: PauliWord) -> tuple[PauliWord, int]:
    """Return (word, t) with sigma_j sigma_k = i**t sigma_word, t exact mod 4."""
    if j.n != k.n:
        raise InputError(f"qubit count mismatch: {j.n} vs {k.n}")
    x = j.x ^ k.x
    z = j.z ^ k.z
    t = (
        (j.x & j.z).bit_count()
        + (k.x & k.z).bit_count()
        - (x & z).bit_count()
        + 2 * (j.z & k.x).bit_count()
    ) % 4
    return PauliWord(j.n, x, z), t


def multiply(j: PauliWord | SignedPauli, k: PauliWord | SignedPauli) -> SignedPauli:
    """Exact group product of two (signed) Pauli words."""
    pj = j if isinstance(j, SignedPauli) else SignedPauli(j)
    pk = k if isinstance(k, SignedPauli) else SignedPauli(k)
    word, t = _word_product(pj.word, pk.word)
    return SignedPauli(word, pj.phase_power + pk.phase_power + t)


def pauli_product(words: Iterable[PauliWord | SignedPauli], n: int | None = None) -> SignedPauli:
    """Exact ordered product of a sequence of (signed) Pauli words.

    ``n`` supplies the qubit count for an empty product.
    """
    acc: SignedPauli | None = None
    for w in words:
        acc = multiply(acc, w) if acc is not None else (
            w if isinstance(w, SignedPauli) else SignedPauli(w)
        )
    if acc is None:
        if n is None:
            raise ValueError("empty product needs an explicit qubit count")
        acc = SignedPauli(PauliWord(n, 0, 0))
    return acc


@dataclass(frozen=True)
class HamiltonianSpec:
    """Validated Pauli Hamiltonian: qubit count plus ordered (word, coefficient) terms."""

    n: int
    terms: tuple[tuple[PauliWord, float], ...]

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def words(self) -> tuple[PauliWord, ...]:
        return tuple(w for w, _ in self.terms)

    def coefficients(self) -> tuple[float, ...]:
        return tuple(c for _, c in self.terms)

    def term_strings(self) -> tuple[str, ...]:
        return tuple(w.to_string() for w, _ in self.terms)


def validate_hamiltonian(n: int, raw_terms: Iterable[tuple[PauliWord | str, float]]) -> HamiltonianSpec:
    """Merge duplicates, strip identity and zero terms, and fix a deterministic order.

    Term order is lexicographic on (x-mask, z-mask).  Coefficients must be
    real and finite; the identity word is accepted on input but stripped.

    Raises:
        InputError: on a non-real or non-finite coefficient, or when no
            term survives stripping.
    """
    if n < 1:
        raise InputError(f"qubit count must be >= 1, got {n}")
    merged: dict[tuple[int, int], float] = {}
    for word, coeff in raw_terms:
        if isinstance(word, str):
            word = parse_pauli(word, n)
        if word.n != n:
            raise InputError(f"term on {word.n} qubits in an n={n} Hamiltonian")
        if isinstance(coeff, complex):
            raise InputError(f"non-real coefficient {coeff!r}")
        coeff = float(coeff)
        if not math.isfinite(coeff):
            raise InputError(f"non-finite coefficient {coeff!r}")
        key = (word.x, word.z)
        merged[key] = merged.get(key, 0.0) + coeff
    terms = []
    for (x, z) in sorted(merged):
        coeff = merged[(x, z)]
        if (x, z) == (0, 0) or coeff == 0.0:
            continue
        terms.append((PauliWord(n, x, z), coeff))
    if not terms:
        raise InputError("Hamiltonian is empty after stripping identity and zero terms")
    return HamiltonianSpec(n, tuple(terms))
