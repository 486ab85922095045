"""Bitmask GF(2) elimination."""

from freefermion.gf2 import Gf2Basis, gf2_rank


def test_rank_simple():
    assert gf2_rank([0b01, 0b10, 0b11]) == 2
    assert gf2_rank([0, 0]) == 0
    assert gf2_rank([0b111]) == 1


def test_basis_tracks_combinations():
    basis = Gf2Basis()
    assert basis.add(0b011) == (0, 0)
    assert basis.add(0b101) == (1, 0)
    index, combo = basis.add(0b110)  # xor of the first two
    assert index is None and combo == 0b11
    in_span, combo = basis.locate(0b011 ^ 0b101)
    assert in_span and combo == 0b11
    assert basis.locate(0b111)[0] is False
    assert basis.size == 2


def test_basis_handles_zero_vector():
    basis = Gf2Basis()
    assert basis.add(0) == (None, 0)
    assert basis.locate(0) == (True, 0)
