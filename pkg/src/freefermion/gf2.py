"""GF(2) linear algebra on integer bitmask rows.

Rows are plain Python integers; bit k is column k.  XOR is row addition.
"""

from __future__ import annotations


def gf2_rank(rows) -> int:
    """Rank of a collection of bitmask rows over GF(2)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        row = _reduce(row, pivots)
        if row:
            pivots[row.bit_length() - 1] = row
            rank += 1
    return rank


def _reduce(vec: int, pivots: dict[int, int]) -> int:
    while vec:
        top = vec.bit_length() - 1
        piv = pivots.get(top)
        if piv is None:
            return vec
        vec ^= piv
    return 0


class Gf2Basis:
    """Incremental GF(2) row basis that tracks combinations of inserted rows.

    Rows accepted as independent get consecutive indices 0, 1, ...; any
    vector can then be expressed (when possible) as an XOR of those rows,
    reported as a bitmask over the indices.
    """

    def __init__(self):
        # pivot bit -> (reduced row, combination over independent indices)
        self._pivots: dict[int, tuple[int, int]] = {}
        self.size = 0

    def _reduce_tracked(self, vec: int) -> tuple[int, int]:
        combo = 0
        while vec:
            top = vec.bit_length() - 1
            entry = self._pivots.get(top)
            if entry is None:
                return vec, combo
            vec ^= entry[0]
            combo ^= entry[1]
        return 0, combo

    def locate(self, vec: int) -> tuple[bool, int]:
        """Return (in_span, combo).  combo is valid only when in_span."""
        residual, combo = self._reduce_tracked(vec)
        return residual == 0, combo

    def add(self, vec: int) -> tuple[int | None, int]:
        """Insert a row.

        Returns (index, 0) when the row is independent and becomes basis
        row ``index``, or (None, combo) when it already lies in the span.
        """
        residual, combo = self._reduce_tracked(vec)
        if residual == 0:
            return None, combo
        index = self.size
        self.size += 1
        self._pivots[residual.bit_length() - 1] = (residual, combo | (1 << index))
        return index, 0
