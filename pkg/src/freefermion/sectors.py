"""Sector bookkeeping for the commuting Pauli constraints of a model.

Twin-vertex stabilizers and cycle operators all commute with every
Hamiltonian term and with each other.  A solve fixes a +/-1 eigenvalue
for each independent generator; dependent generators (equal words up to
products) have their eigenvalue forced, with the linking sign computed by
exact phase arithmetic.  The ledger below owns that bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf2 import Gf2Basis
from .pauli import PauliWord, SignedPauli, pauli_product


@dataclass
class FixedGenerator:
    """One commuting constraint sigma^w with a per-sector value (-1)^bit.

    ``free_index`` is the sector-bit position for an independent generator.
    A dependent generator stores how its word decomposes over the free ones:
    canonical sigma^w == base_sign * product of the free generators in
    ``combo`` (ascending index order).
    """

    word: PauliWord
    kind: str  # 'twin' | 'cycle'
    component: int
    free_index: int | None
    combo: int = 0
    base_sign: int = 1

    @property
    def is_free(self) -> bool:
        return self.free_index is not None

    def label(self) -> str:
        return f"{self.kind}[c{self.component}] {self.word.to_string()}"


class GeneratorLedger:
    """Registry of all fixed commuting generators, with GF(2) dependence tracking."""

    def __init__(self, n: int):
        self.n = n
        self.basis = Gf2Basis()
        self.free: list[FixedGenerator] = []
        self.entries: list[FixedGenerator] = []

    def _combo_sign(self, word: PauliWord, combo: int) -> int:
        """Exact sign s with canonical sigma^word == s * prod(free gens in combo)."""
        members = [self.free[i].word for i in range(self.basis.size) if combo >> i & 1]
        prod = pauli_product(members, n=self.n)
        if prod.word != word:
            raise AssertionError("GF(2) combination does not reproduce the word")
        return prod.sign

    def add(self, word: PauliWord, kind: str, component: int) -> FixedGenerator:
        """Register a non-identity commuting generator; classify free/dependent."""
        if word.is_identity:
            raise ValueError("identity word cannot be a sector generator")
        index, combo = self.basis.add(word.symplectic_vector())
        if index is not None:
            gen = FixedGenerator(word, kind, component, free_index=index)
            self.free.append(gen)
        else:
            gen = FixedGenerator(
                word, kind, component, free_index=None,
                combo=combo, base_sign=self._combo_sign(word, combo),
            )
        self.entries.append(gen)
        return gen

    def locate(self, word: PauliWord) -> tuple[bool, int, int]:
        """Resolve a word against the current span without inserting it.

        Returns (in_span, combo, base_sign); combo/base_sign are meaningful
        only when in_span.
        """
        in_span, combo = self.basis.locate(word.symplectic_vector())
        if not in_span:
            return False, 0, 1
        return True, combo, self._combo_sign(word, combo)

    def value(self, gen: FixedGenerator, bits: int) -> int:
        """Eigenvalue (+1/-1) of sigma^w in the sector selected by ``bits``."""
        if gen.is_free:
            return -1 if bits >> gen.free_index & 1 else 1
        return gen.base_sign * self.combo_value(gen.combo, bits)

    def combo_value(self, combo: int, bits: int) -> int:
        return -1 if (combo & bits).bit_count() & 1 else 1

    @property
    def num_free(self) -> int:
        return self.basis.size


@dataclass
class SectorPlan:
    """Describes how sector bit strings map onto free generators."""

    free_generators: tuple[FixedGenerator, ...] = field(default_factory=tuple)

    @property
    def num_bits(self) -> int:
        return len(self.free_generators)

    def labels(self) -> tuple[str, ...]:
        return tuple(g.label() for g in self.free_generators)

    def parse_bits(self, text: str) -> int:
        if len(text) != self.num_bits or set(text) - {"0", "1"}:
            raise ValueError(
                f"sector string must be {self.num_bits} characters over 0/1, got {text!r}"
            )
        # leftmost character is bit 0
        return sum(1 << i for i, ch in enumerate(text) if ch == "1")

    def format_bits(self, bits: int) -> str:
        return "".join("1" if bits >> i & 1 else "0" for i in range(self.num_bits))


def signed_generator(gen: FixedGenerator, value: int) -> SignedPauli:
    """The stabilizer (+/-)sigma^w pinned to eigenvalue ``value`` in a sector."""
    return SignedPauli(gen.word, 0 if value == 1 else 2)
