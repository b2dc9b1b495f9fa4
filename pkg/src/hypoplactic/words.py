"""Words over the ordered alphabet 1 < 2 < 3 < ...

A word is a plain tuple of positive ints. The empty tuple is the empty word.
"""
from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

Word = tuple[int, ...]

EMPTY_MARKERS = ("", "ε", "e", "eps")

_SEP = re.compile(r"[\s,]+")


def word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    for a in w:
        if a < 1:
            raise ValueError(f"letters must be positive integers, got {a}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"31214"``, ``"3 1 2 1 4"`` or ``"3,1,2,1,4"``.

    The contiguous form reads one digit per letter, so it only covers
    letters 1..9; anything larger needs separators.
    """
    text = text.strip()
    if text in EMPTY_MARKERS:
        return ()
    if _SEP.search(text):
        tokens = [t for t in _SEP.split(text) if t]
    else:
        tokens = list(text)
    letters = []
    for tok in tokens:
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"invalid letter {tok!r} in word {text!r}", tok)
        letters.append(int(tok))
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    """Contiguous digits when every letter is below 10, else comma separated.

    A lone multi-digit letter keeps a trailing comma so it parses back as one letter.
    """
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    if len(w) == 1:
        return f"{w[0]},"
    return ",".join(str(a) for a in w)


def content(w: Sequence[int]) -> dict[int, int]:
    return dict(sorted(Counter(w).items()))


def support(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(set(w)))


def has_subsequence(w: Sequence, s: Sequence) -> bool:
    it = iter(w)
    return all(any(c == a for c in it) for a in s)


def inversions(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Pairs ``(b, a)`` of support-adjacent letters ``a < b`` with ``b`` before the last ``a``."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, a in enumerate(w):
        first.setdefault(a, i)
        last[a] = i
    supp = sorted(first)
    return frozenset(
        (b, a) for a, b in zip(supp, supp[1:]) if first[b] < last[a]
    )


def words_up_to(n: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words over 1..n with length in [min_len, max_len], shortest first."""
    from itertools import product

    for k in range(min_len, max_len + 1):
        yield from product(range(1, n + 1), repeat=k)


def check_rank(w: Sequence[int], n: int) -> None:
    for a in w:
        if a > n:
            raise ValueError(f"letter {a} is outside the rank-{n} alphabet")
