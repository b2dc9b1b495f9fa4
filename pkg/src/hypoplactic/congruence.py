"""The hypoplactic congruence, decided by tableaux, by invariants and by rewriting."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from . import limits
from .errors import ResourceLimitError
from .tableau import p_symbol, reading_word, tableau_equal
from .words import Word, content, inversions


@dataclass(frozen=True)
class RewriteRelation:
    """One family of defining relations, e.g. ``acb = cab`` for ``a <= b < c``.

    ``left``/``right`` name letters by position; ``condition`` receives the
    letters bound by name.
    """

    kind: str
    left: str
    right: str
    condition: Callable[..., bool]

    def match(self, window: Sequence[int], side: str) -> dict[str, int] | None:
        pattern = self.left if side == "left" else self.right
        env: dict[str, int] = {}
        for name, a in zip(pattern, window):
            if env.setdefault(name, a) != a:
                return None
        return env if self.condition(**env) else None

    def rewrite(self, window: Sequence[int]) -> list[tuple[int, ...]]:
        """Images of ``window`` under one application, in either direction."""
        out = []
        for side, other in (("left", self.right), ("right", self.left)):
            env = self.match(window, side)
            if env is not None:
                out.append(tuple(env[name] for name in other))
        return out


RELATIONS = (
    RewriteRelation("plactic-1", "acb", "cab", lambda a, b, c: a <= b < c),
    RewriteRelation("plactic-2", "bac", "bca", lambda a, b, c: a < b <= c),
    RewriteRelation("hypoplactic-1", "cadb", "acbd", lambda a, b, c, d: a <= b < c <= d),
    RewriteRelation("hypoplactic-2", "bdac", "dbca", lambda a, b, c, d: a < b <= c < d),
)


def equiv_tableau(u: Sequence[int], v: Sequence[int]) -> bool:
    return tableau_equal(p_symbol(u), p_symbol(v))


def equiv_invariants(u: Sequence[int], v: Sequence[int]) -> bool:
    return content(u) == content(v) and inversions(u) == inversions(v)


equivalent = equiv_invariants


def rewrite_neighbors(w: Sequence[int]) -> set[Word]:
    w = tuple(w)
    out = set()
    for rel in RELATIONS:
        k = len(rel.left)
        for i in range(len(w) - k + 1):
            for image in rel.rewrite(w[i : i + k]):
                out.add(w[:i] + image + w[i + k :])
    out.discard(w)
    return out


def congruence_class(w: Sequence[int], bound: int | None = None) -> frozenset[Word]:
    """Breadth-first closure of ``w`` under the defining relations.

    The relations preserve content, so the closure is finite; ``bound``
    caps its size.
    """
    bound = limits.class_bound() if bound is None else bound
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in rewrite_neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise ResourceLimitError("congruence class size", bound)
                queue.append(nxt)
    return frozenset(seen)


def equiv_rewrite(u: Sequence[int], v: Sequence[int], bound: int | None = None) -> bool:
    u, v = tuple(u), tuple(v)
    if u == v:
        return True
    if sorted(u) != sorted(v):
        return False
    bound = limits.class_bound() if bound is None else bound
    seen = {u}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        for nxt in rewrite_neighbors(cur):
            if nxt == v:
                return True
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise ResourceLimitError("congruence class size", bound)
                queue.append(nxt)
    return False


@lru_cache(maxsize=1 << 18)
def _canonical(w: Word) -> Word:
    return reading_word(p_symbol(w))


def canonical_form(w: Sequence[int]) -> Word:
    return _canonical(tuple(w))


METHODS = {
    "tableau": equiv_tableau,
    "invariants": equiv_invariants,
    "rewrite": equiv_rewrite,
}
