from itertools import product

import pytest

from hypoplactic.congruence import canonical_form, equiv_invariants
from hypoplactic.embeddings import (
    components_to_json,
    index_pairs,
    non_embedding_pair,
    non_embedding_witness,
    phi,
    phi_ij,
    phi_n,
    relation_instances,
    relations_respected,
    verify_embedding,
)
from hypoplactic.errors import ResourceLimitError
from hypoplactic.words import parse_word, words_up_to

W = parse_word


@pytest.mark.parametrize("w, i, j, expected", [("123", 1, 3, "1212"), ("55", 1, 2, ""), ("12", 1, 2, "12")])
def test_phi_ij(w, i, j, expected):
    assert phi_ij(W(w), i, j) == W(expected)


def test_phi_ij_requires_order():
    with pytest.raises(ValueError):
        phi_ij(W("12"), 2, 2)
    with pytest.raises(ValueError):
        phi_ij(W("12"), 3, 1)


def test_phi_n():
    assert phi_n(W("121"), 2) == {(1, 2): canonical_form(W("121"))}
    assert phi_n(W("123"), 3) == {
        (1, 2): phi_ij(W("123"), 1, 2),
        (1, 3): phi_ij(W("123"), 1, 3),
        (2, 3): phi_ij(W("123"), 2, 3),
    }
    assert all(v == () for v in phi_n((), 4).values())
    assert len(phi_n((), 4)) == 6


def test_phi_n_rejects_large_letters():
    with pytest.raises(ValueError):
        phi_n(W("14"), 3)


def test_components_are_canonical():
    for w in words_up_to(4, 4):
        for v in phi_n(w, 4).values():
            assert set(v) <= {1, 2}
            assert canonical_form(v) == v


def test_infinite_rank_components_extend_finite_ones():
    w = W("3 7 1 5")
    assert phi(w) == phi_n(w, 7)
    assert phi(w, [(2, 9)]) == {(2, 9): phi_ij(w, 2, 9)}


@pytest.mark.parametrize("n, max_len", [(3, 5), (2, 6), (4, 4)])
def test_verify_embedding(n, max_len):
    assert verify_embedding(n, max_len)


def test_verify_embedding_bound():
    with pytest.raises(ResourceLimitError):
        verify_embedding(4, 8, bound=100)


def test_homomorphism_rank4():
    ws = list(words_up_to(4, 3))
    for u, v in product(ws, repeat=2):
        for i, j in index_pairs(4):
            assert phi_ij(u + v, i, j) == canonical_form(phi_ij(u, i, j) + phi_ij(v, i, j))


def test_relations_respected():
    kinds = {k for k, _, _ in relation_instances(6)}
    assert kinds == {"plactic-1", "plactic-2", "hypoplactic-1", "hypoplactic-2"}
    assert relations_respected(6)


def test_single_map_is_not_injective():
    # a single phi_ij loses information for n >= 3
    u, v = W("13"), W("31")
    assert phi_ij(u, 1, 2) == phi_ij(v, 1, 2)
    assert not equiv_invariants(u, v)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_non_embedding_witness(n):
    assert non_embedding_witness(n)


def test_non_embedding_pair_rank3():
    u, v = non_embedding_pair(3)
    assert (u, v) == (W("31212"), W("12123"))
    from hypoplactic.words import inversions

    assert (3, 2) in inversions(u) and (3, 2) not in inversions(v)


def test_non_embedding_rejects_small_n():
    with pytest.raises(ValueError):
        non_embedding_witness(2)


def test_json_keys():
    assert components_to_json(phi_n(W("123"), 3)) == {"1,2": "12", "1,3": "1212", "2,3": "12"}
