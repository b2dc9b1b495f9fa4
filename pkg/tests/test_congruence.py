from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hypoplactic.congruence import (
    RELATIONS,
    canonical_form,
    congruence_class,
    equiv_invariants,
    equiv_rewrite,
    equiv_tableau,
    rewrite_neighbors,
)
from hypoplactic.errors import ResourceLimitError
from hypoplactic.words import parse_word, words_up_to

W = parse_word
words = st.lists(st.integers(1, 4), max_size=7).map(tuple)


@pytest.mark.parametrize("equiv", [equiv_tableau, equiv_invariants, equiv_rewrite])
@pytest.mark.parametrize(
    "u, v, expected",
    [("132", "312", True), ("12", "21", False), ("3142", "1324", True), ("2413", "2431", True), ("", "", True)],
)
def test_equiv_examples(equiv, u, v, expected):
    assert equiv(W(u), W(v)) is expected


def test_invariants_example_decided_by_tableau_oracle():
    # 31214 has a 3-2 inversion, 21314 does not
    assert equiv_tableau(W("31214"), W("21314")) is False
    assert equiv_invariants(W("31214"), W("21314")) is False


def test_rewrite_matches_invariants_on_1212_2112():
    assert equiv_rewrite(W("1212"), W("2112")) == equiv_invariants(W("1212"), W("2112")) is True


def test_relations_are_content_preserving():
    for rel in RELATIONS:
        assert sorted(rel.left) == sorted(rel.right)


def test_rewrite_neighbors_examples():
    assert W("312") in rewrite_neighbors(W("132"))
    assert W("1324") in rewrite_neighbors(W("3142"))
    assert rewrite_neighbors(()) == set()
    assert rewrite_neighbors(W("123")) == set()


def test_each_relation_instance_rewrites_both_ways():
    # brute force over letters 1..5: every side-condition instance is a neighbour pair
    for rel in RELATIONS:
        names = sorted(set(rel.left))
        for vals in product(range(1, 6), repeat=len(names)):
            env = dict(zip(names, vals))
            if not rel.condition(**env):
                continue
            left = tuple(env[c] for c in rel.left)
            right = tuple(env[c] for c in rel.right)
            if left != right:
                assert right in rewrite_neighbors(left)
                assert left in rewrite_neighbors(right)


def test_class_bound_raises():
    with pytest.raises(ResourceLimitError):
        congruence_class(W("321321"), bound=3)
    with pytest.raises(ResourceLimitError):
        equiv_rewrite(W("321321"), W("123123"), bound=3)


def test_three_methods_agree_rank3_len5():
    classes = defaultdict(list)
    for w in words_up_to(3, 5):
        classes[tuple(sorted(w))].append(w)
    for group in classes.values():
        for u in group:
            cls = congruence_class(u)
            for v in group:
                t = equiv_tableau(u, v)
                assert t == equiv_invariants(u, v) == (v in cls)


@pytest.mark.parametrize(
    "w, expected", [("1", "1"), ("12654768", "12654768"), ("", "")]
)
def test_canonical_form_examples(w, expected):
    assert canonical_form(W(w)) == W(expected)


def test_canonical_form_312():
    assert canonical_form(W("312")) == canonical_form(W("132"))


@given(words)
def test_canonical_form_idempotent_and_in_class(w):
    c = canonical_form(w)
    assert canonical_form(c) == c
    assert equiv_invariants(c, w)


@given(words, words, words)
def test_congruence_property(u, v, w):
    if equiv_invariants(u, v):
        assert equiv_invariants(w + u, w + v)
        assert equiv_invariants(u + w, v + w)


def test_congruence_exhaustive_small():
    ws = list(words_up_to(3, 3))
    for u, v in product(ws, repeat=2):
        if equiv_tableau(u, v):
            for w in words_up_to(3, 2):
                assert equiv_tableau(w + u, w + v)
                assert equiv_tableau(u + w, v + w)


@given(words, words)
def test_canonical_form_separates_classes(u, v):
    assert (canonical_form(u) == canonical_form(v)) == equiv_tableau(u, v)
