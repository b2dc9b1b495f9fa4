"""Worked examples from the literature on hypo, runnable as a quick self-test."""
from __future__ import annotations

from .basis import BASIS, derive_from_basis, verify_derivation
from .congruence import equiv_invariants, equiv_rewrite, equiv_tableau
from .embeddings import non_embedding_witness
from .identities import Identity, canonical_identity, enumerate_identities, holds_in_hypo
from .monoids import left_zero, right_zero, satisfies, table_s, validate_monoid
from .tableau import insertion_steps, p_symbol
from .words import inversions, parse_word

INSERTION_STEPS = [
    ((1,),),
    ((1, 2),),
    ((1, 2, 6),),
    ((1, 2, 5), (6,)),
    ((1, 2, 4), (5,), (6,)),
    ((1, 2, 4), (5,), (6, 7)),
    ((1, 2, 4), (5,), (6, 6), (7,)),
    ((1, 2, 4), (5,), (6, 6), (7, 8)),
]

SHORTEST_TWO_VARIABLE = [
    "xyxy ~ xyyx", "xyxy ~ yxxy", "xyxy ~ yxyx",
    "xyyx ~ yxxy", "xyyx ~ yxyx", "yxxy ~ yxyx",
    "xxyx ~ xyxx",
]


def _insertion():
    return [t.rows for t in insertion_steps(parse_word("12654768"))] == INSERTION_STEPS


def _offsets():
    return p_symbol(parse_word("12654768")).offsets == (0, 2, 2, 3)


def _inversions():
    return inversions(parse_word("31214")) == {(3, 2), (2, 1)} and inversions(parse_word("21341")) == {(2, 1)}


def _relations():
    pairs = [("132", "312"), ("3142", "1324")]
    return all(
        f(parse_word(u), parse_word(v))
        for u, v in pairs
        for f in (equiv_tableau, equiv_invariants, equiv_rewrite)
    )


def _shortest():
    expected = {canonical_identity(Identity.parse(s)) for s in SHORTEST_TWO_VARIABLE}
    return enumerate_identities(2, 4) == expected and not enumerate_identities(2, 3)


def _basis_holds():
    return all(holds_in_hypo(i) for i in BASIS.values())


def _base_derivation():
    d = derive_from_basis(Identity.parse("xxyx ~ xyxx"))
    return len(d) == 1 and d.steps[0].tag == "M" and verify_derivation(d)


def _separations():
    s, lz, rz = table_s(), left_zero(2), right_zero(2)
    L, M, R = BASIS["L"], BASIS["M"], BASIS["R"]
    witness = {"x": "a", "z": "a", "t": "a", "y": "c"}
    return (
        validate_monoid(s).ok
        and satisfies(s, L).holds and satisfies(s, R).holds and not satisfies(s, M).holds
        and s.evaluate(M.lhs, witness) == "c" and s.evaluate(M.rhs, witness) == "b"
        and not satisfies(lz, L).holds and satisfies(lz, M).holds and satisfies(lz, R).holds
        and not satisfies(rz, R).holds and satisfies(rz, L).holds and satisfies(rz, M).holds
    )


def _non_embedding():
    return all(non_embedding_witness(n) for n in (3, 4, 5))


CHECKS = [
    ("insertion of 12654768, every step", _insertion),
    ("ribbon offsets of P(12654768)", _offsets),
    ("inversions of 31214 and 21341", _inversions),
    ("plactic/hypoplactic relation instances", _relations),
    ("shortest two-variable identities", _shortest),
    ("L, M, R hold in hypo", _basis_holds),
    ("xxyx ~ xyxx in one M step", _base_derivation),
    ("separating monoids for L, M, R", _separations),
    ("n (1..n-1)^2 differs from (1..n-1)^2 n, n=3..5", _non_embedding),
]


def run() -> list[tuple[str, bool]]:
    return [(name, bool(fn())) for name, fn in CHECKS]
