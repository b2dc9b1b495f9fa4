import json
from collections import defaultdict
from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hypoplactic.basis import (
    BASIS,
    BACKWARD,
    FORWARD,
    Derivation,
    DerivationMismatch,
    apply_basis,
    basis_neighbors,
    consequence_bfs,
    derive_from_basis,
    find_invalid_step,
    make_step,
    verify_derivation,
)
from hypoplactic.errors import ResourceLimitError
from hypoplactic.identities import Identity, holds_in_hypo, hypo_key

I = Identity.parse
P = tuple


def test_basis_identities():
    assert BASIS["L"] == I("xyzxty ~ yxzxty")
    assert BASIS["M"] == I("xzxytx ~ xzyxtx")
    assert BASIS["R"] == I("xzytxy ~ xzytyx")
    for ident in BASIS.values():
        assert holds_in_hypo(ident)


def test_apply_m_with_empty_z_t():
    sigma = {"x": P("x"), "y": P("y"), "z": (), "t": ()}
    assert apply_basis(P("xxyx"), "M", FORWARD, 0, sigma) == P("xyxx")


def test_apply_forward_then_backward_is_identity():
    sigma = {"x": P("ab"), "y": P("c"), "z": P("d"), "t": ()}
    w = P("q") + P("ab") + P("c") + P("d") + P("ab") + P("c") + P("qq")
    after = apply_basis(w, "L", FORWARD, 1, sigma)
    assert after != w
    assert apply_basis(after, "L", BACKWARD, 1, sigma) == w


def test_apply_splice_with_prefix():
    sigma = {v: (v,) for v in "xyzt"}
    assert apply_basis(P("axyzxtyb"), "L", FORWARD, 1, sigma) == P("ayxzxtyb")


def test_apply_mismatch():
    sigma = {v: (v,) for v in "xyzt"}
    with pytest.raises(DerivationMismatch):
        apply_basis(P("xyzxty"), "L", FORWARD, 1, sigma)


def test_verify_single_step():
    step = make_step(P("xxyx"), "M", FORWARD, 0, {"x": P("x"), "y": P("y"), "z": (), "t": ()})
    d = Derivation(P("xxyx"), P("xyxx"), (step,))
    assert verify_derivation(d, P("xxyx"), P("xyxx"))


def test_verify_empty():
    assert verify_derivation(Derivation(P("xy"), P("xy")), P("xy"), P("xy"))
    assert not verify_derivation(Derivation(P("xy"), P("yx")))


def test_verify_rejects_corruption():
    d = derive_from_basis(I("xyxyzz ~ yxyxzz"))
    assert len(d) >= 2
    bad_step = replace(d.steps[1], before=P("zzzzzz"))
    corrupted = replace(d, steps=d.steps[:1] + (bad_step,) + d.steps[2:])
    assert not verify_derivation(corrupted)
    assert find_invalid_step(corrupted, d.start, d.end) == 1
    wrong_sigma = replace(d.steps[0], sigma={**d.steps[0].sigma, "x": P("t")})
    assert find_invalid_step(replace(d, steps=(wrong_sigma,) + d.steps[1:]), d.start, d.end) == 0
    assert find_invalid_step(d, d.start, P("zzyxyx")) == len(d.steps)


def test_base_case_single_m_step():
    d = derive_from_basis(I("xxyx ~ xyxx"))
    assert len(d) == 1 and d.steps[0].tag == "M"
    assert verify_derivation(d)


@pytest.mark.parametrize(
    "text",
    ["xyxy ~ yxyx", "xyxy ~ xyyx", "yxxy ~ yxyx", "xabxx ~ xxabx", "xabcxx ~ xxabcx", "zzxyxy ~ zzyxyx"],
)
def test_derivations(text):
    ident = I(text)
    d = derive_from_basis(ident)
    assert verify_derivation(d, ident.lhs, ident.rhs)
    for s in d.steps:
        assert holds_in_hypo(Identity(s.after, ident.rhs))
        assert sorted(s.before) == sorted(s.after)


def test_derive_rejects_non_identities():
    with pytest.raises(ValueError):
        derive_from_basis(I("xy ~ yx"))


def test_trivial_derivation_is_empty():
    assert len(derive_from_basis(I("xyx ~ xyx"))) == 0


def test_json_round_trip():
    d = derive_from_basis(I("xzytxyz ~ xzytyxz"))
    again = Derivation.from_json(json.loads(json.dumps(d.to_json())))
    assert again == d
    assert verify_derivation(again)


@pytest.mark.parametrize(
    "u, v, expected", [("xxyx", "xyxx", True), ("xy", "yx", False), ("xyzxty", "yxzxty", True), ("xxyy", "xyxy", False)]
)
def test_consequence_bfs(u, v, expected):
    assert consequence_bfs(P(u), P(v)) is expected


def test_consequence_bfs_bound():
    with pytest.raises(ResourceLimitError):
        consequence_bfs(P("xyxyxyzz"), P("zzxyxyxy"), bound=2)


def test_basis_neighbors_preserve_content():
    for w in [P("xyxyzt"), P("xxyyxx"), P("xzxytxzy")]:
        for n in basis_neighbors(w):
            assert sorted(n) == sorted(w)
            assert holds_in_hypo(Identity(w, n))


patterns = st.lists(st.sampled_from("xyzt"), min_size=2, max_size=8).map(tuple)


@settings(max_examples=300)
@given(patterns, st.randoms(use_true_random=False))
def test_derivation_soundness(u, rng):
    # pick a target in the same class by a random walk of basis moves
    v = u
    for _ in range(6):
        ns = sorted(basis_neighbors(v))
        if not ns:
            break
        v = rng.choice(ns)
    ident = Identity(u, v)
    assert holds_in_hypo(ident)
    d = derive_from_basis(ident)
    assert verify_derivation(d, u, v)


def test_search_closure_equals_hypo_classes_len6():
    """Search from one member of each class reaches exactly that class."""
    groups = defaultdict(set)
    for n in range(7):
        for p in product("xyzt", repeat=n):
            groups[hypo_key(p)].add(p)
    for group in groups.values():
        start = min(group)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for n in basis_neighbors(w):
                    if n not in seen:
                        seen.add(n)
                        nxt.append(n)
            frontier = nxt
        assert seen == group
