"""Maps into rank 2 and the product embedding of hypo_n."""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations, product
from typing import Sequence

from . import limits
from .congruence import RELATIONS, canonical_form, equiv_invariants
from .errors import ResourceLimitError
from .words import Word, check_rank, words_up_to


def phi_ij(w: Sequence[int], i: int, j: int) -> Word:
    """Image in hypo_2: ``i -> 1``, ``j -> 2``, letters strictly between ``-> 21``, others erased."""
    if not i < j:
        raise ValueError(f"need i < j, got i={i}, j={j}")
    out: list[int] = []
    for a in w:
        if a == i:
            out.append(1)
        elif a == j:
            out.append(2)
        elif i < a < j:
            out += (2, 1)
    return canonical_form(out)


def index_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def phi_n(w: Sequence[int], n: int) -> dict[tuple[int, int], Word]:
    """Components ``phi_ij(w)`` for all ``1 <= i < j <= n``.

    ``n = 2`` is accepted and gives the single component ``(1, 2)``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    check_rank(w, n)
    return {(i, j): phi_ij(w, i, j) for i, j in index_pairs(n)}


def phi(w: Sequence[int], pairs: Sequence[tuple[int, int]] | None = None) -> dict[tuple[int, int], Word]:
    """Components of the infinite-rank embedding, computed only for ``pairs``.

    Without ``pairs`` the components for ``n = max letter`` are returned;
    every other component is determined by them.
    """
    if pairs is None:
        n = max(w, default=1)
        pairs = index_pairs(max(n, 2))
    return {(i, j): phi_ij(w, i, j) for i, j in pairs}


def components_to_json(components: dict[tuple[int, int], Word]) -> dict[str, str]:
    return {f"{i},{j}": "".join(map(str, v)) for (i, j), v in sorted(components.items())}


def verify_embedding(n: int, max_len: int, bound: int | None = None) -> bool:
    """Exhaustively check that ``phi_n`` separates exactly the hypo classes.

    Over all words on ``1..n`` of length ``<= max_len``: equal-content pairs
    are equivalent iff their images agree, and each ``phi_ij`` is a
    homomorphism on every product ``uv`` within the length bound.
    """
    bound = limits.search_bound() if bound is None else bound
    total = sum(n**k for k in range(max_len + 1))
    if total > bound:
        raise ResourceLimitError("word enumeration", bound)
    words = list(words_up_to(n, max_len))
    images = {w: phi_n(w, n) for w in words}
    by_content: dict[tuple, list[Word]] = defaultdict(list)
    for w in words:
        by_content[tuple(sorted(w))].append(w)
    for group in by_content.values():
        for u, v in combinations(group, 2):
            if equiv_invariants(u, v) != (images[u] == images[v]):
                return False
    for u, v in product(words, repeat=2):
        if len(u) + len(v) > max_len:
            continue
        uv = images[u + v]
        for pair in uv:
            if uv[pair] != canonical_form(images[u][pair] + images[v][pair]):
                return False
    return True


def relation_instances(max_letter: int):
    """Every instance ``(left, right)`` of the defining relations with letters ``<= max_letter``."""
    for rel in RELATIONS:
        names = sorted(set(rel.left))
        for vals in product(range(1, max_letter + 1), repeat=len(names)):
            env = dict(zip(names, vals))
            if rel.condition(**env):
                yield rel.kind, tuple(env[c] for c in rel.left), tuple(env[c] for c in rel.right)


def relations_respected(max_letter: int) -> bool:
    """Both sides of each relation instance agree under every ``phi_ij`` with ``j <= max_letter``."""
    pairs = index_pairs(max_letter)
    for _, left, right in relation_instances(max_letter):
        for i, j in pairs:
            if phi_ij(left, i, j) != phi_ij(right, i, j):
                return False
    return True


def non_embedding_pair(n: int) -> tuple[Word, Word]:
    """``n (1..n-1)^2`` and ``(1..n-1)^2 n``."""
    if n < 3:
        raise ValueError("need n >= 3")
    base = tuple(range(1, n)) * 2
    return (n,) + base, base + (n,)


def non_embedding_witness(n: int) -> bool:
    """True iff the two words of :func:`non_embedding_pair` are distinct in hypo_n."""
    u, v = non_embedding_pair(n)
    return not equiv_invariants(u, v)
