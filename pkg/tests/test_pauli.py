"""Symplectic Pauli algebra: encoding, products, validation."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from freefermion.errors import InputError
from freefermion.oracle import dense_matrix, dense_signed
from freefermion.pauli import (
    HamiltonianSpec,
    PauliWord,
    SignedPauli,
    multiply,
    parse_pauli,
    pauli_product,
    symplectic_inner,
    validate_hamiltonian,
)


def test_parse_xyz_masks():
    w = parse_pauli("XYZ", 3)
    # leftmost character is qubit 0, mask bit k is qubit k
    assert (w.x, w.z) == (0b011, 0b110)
    assert w.to_string() == "XYZ"


def test_parse_identity_word_is_a_valid_word():
    w = parse_pauli("III", 3)
    assert w.is_identity


def test_parse_rejects_bad_character_and_length():
    with pytest.raises(InputError):
        parse_pauli("XQZ", 3)
    with pytest.raises(InputError):
        parse_pauli("XX", 3)


@pytest.mark.parametrize(
    "a,b,expected",
    [("X", "Z", 1), ("X", "X", 0), ("XX", "YY", 0), ("XY", "YX", 0), ("XI", "ZI", 1)],
)
def test_symplectic_inner_examples(a, b, expected):
    n = len(a)
    assert symplectic_inner(parse_pauli(a, n), parse_pauli(b, n)) == expected


def test_multiply_examples():
    x, y, z = (parse_pauli(c, 1) for c in "XYZ")
    xz = multiply(x, z)
    assert xz.word == y and xz.phase_power == 3  # X Z = -i Y
    xx = multiply(x, x)
    assert xx.word.is_identity and xx.phase_power == 0
    prod = multiply(parse_pauli("XX", 2), parse_pauli("YY", 2))
    assert prod.word == parse_pauli("ZZ", 2) and prod.phase_power == 2


def test_multiply_matches_dense_exhaustively_up_to_three_qubits():
    for n in (1, 2, 3):
        words = [
            PauliWord(n, x, z)
            for x in range(1 << n)
            for z in range(1 << n)
        ]
        dense = {(w.x, w.z): dense_matrix(HamiltonianSpec(n, ((w, 1.0),))) if not w.is_identity
                 else np.eye(1 << n, dtype=complex) for w in words}
        rng = np.random.default_rng(n)
        pairs = (
            itertools.product(words, words)
            if n < 3
            else ((words[i], words[j]) for i, j in rng.integers(0, len(words), (1500, 2)))
        )
        for a, b in pairs:
            prod = multiply(a, b)
            lhs = dense[(a.x, a.z)] @ dense[(b.x, b.z)]
            rhs = (1j ** prod.phase_power) * dense[(prod.word.x, prod.word.z)]
            assert np.abs(lhs - rhs).max() < 1e-12


@st.composite
def word(draw, n=4):
    return PauliWord(n, draw(st.integers(0, (1 << n) - 1)), draw(st.integers(0, (1 << n) - 1)))


@given(word(), word())
@settings(max_examples=200, deadline=None)
def test_symplectic_symmetry(a, b):
    assert symplectic_inner(a, b) == symplectic_inner(b, a)
    assert symplectic_inner(a, a) == 0


@given(word(), word(), word())
@settings(max_examples=200, deadline=None)
def test_symplectic_distributes_over_products(j, k, l):
    lhs = symplectic_inner(j, multiply(k, l).word)
    assert lhs == symplectic_inner(j, k) ^ symplectic_inner(j, l)


@given(word(), word(), word())
@settings(max_examples=200, deadline=None)
def test_multiply_associative(a, b, c):
    left = multiply(multiply(a, b), c)
    right = multiply(a, multiply(b, c))
    assert left == right


def test_hermitian_square_is_identity():
    for text in ("X", "Y", "Z"):
        sq = multiply(parse_pauli(text, 1), parse_pauli(text, 1))
        assert sq.word.is_identity and sq.phase_power == 0


def test_signed_pauli_sign_and_string():
    sp = SignedPauli(parse_pauli("ZZ", 2), 2)
    assert sp.sign == -1 and sp.to_string() == "-ZZ"
    with pytest.raises(ValueError):
        SignedPauli(parse_pauli("ZZ", 2), 1).sign  # noqa: B018


def test_pauli_product_order_and_empty():
    x, y, z = (parse_pauli(c, 1) for c in "XYZ")
    prod = pauli_product([x, y, z])
    assert prod.word.is_identity and prod.phase_power == 1  # X Y Z = i I
    empty = pauli_product([], n=2)
    assert empty.word.is_identity and empty.phase_power == 0
    with pytest.raises(ValueError):
        pauli_product([])


def test_dense_signed_tracks_phase():
    sp = SignedPauli(parse_pauli("Y", 1), 3)
    expected = -1j * np.array([[0, -1j], [1j, 0]])
    assert np.abs(dense_signed(sp) - expected).max() < 1e-14


def test_validate_merges_duplicates():
    spec = validate_hamiltonian(1, [("X", 1.0), ("X", 0.5)])
    assert spec.num_terms == 1 and spec.terms[0][1] == 1.5


def test_validate_strips_identity():
    spec = validate_hamiltonian(2, [("II", 3.0), ("XX", 1.0)])
    assert spec.term_strings() == ("XX",)


def test_validate_rejects_empty_after_stripping():
    with pytest.raises(InputError):
        validate_hamiltonian(2, [("XX", 0.0)])
    with pytest.raises(InputError):
        validate_hamiltonian(2, [("II", 1.0)])


def test_validate_rejects_bad_coefficients():
    with pytest.raises(InputError):
        validate_hamiltonian(1, [("X", float("nan"))])
    with pytest.raises(InputError):
        validate_hamiltonian(1, [("X", 1.0 + 2.0j)])


def test_validate_orders_terms_deterministically():
    spec = validate_hamiltonian(2, [("ZZ", 1.0), ("XI", 1.0), ("IZ", 1.0)])
    assert spec.term_strings() == tuple(sorted(
        spec.term_strings(), key=lambda s: (parse_pauli(s, 2).x, parse_pauli(s, 2).z)
    ))
