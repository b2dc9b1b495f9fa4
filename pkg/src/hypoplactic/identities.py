"""Monoid identities ``u ~ v`` and their satisfaction in the hypoplactic monoid."""
from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from . import limits
from .congruence import canonical_form
from .errors import ParseError, ResourceLimitError
from .words import Word, words_up_to

Pattern = tuple[str, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def pattern(symbols: Iterable[str] | str) -> Pattern:
    if isinstance(symbols, str):
        return parse_pattern(symbols)
    return tuple(symbols)


def parse_pattern(text: str) -> Pattern:
    """``"x y z"`` splits on whitespace; ``"xyz"`` reads one variable per character."""
    text = text.strip()
    if text in ("", "ε", "1"):
        return ()
    toks = text.split() if any(c.isspace() for c in text) else list(text)
    for tok in toks:
        if not _IDENT.match(tok):
            raise ParseError(f"invalid variable {tok!r}", tok)
    return tuple(toks)


def format_pattern(p: Sequence[str]) -> str:
    if not p:
        return "ε"
    if all(len(x) == 1 for x in p):
        return "".join(p)
    return " ".join(p)


@dataclass(frozen=True)
class Identity:
    lhs: Pattern
    rhs: Pattern

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))

    @classmethod
    def parse(cls, text: str) -> "Identity":
        if text.count("~") != 1:
            raise ParseError(f"expected exactly one '~' in {text!r}", text)
        left, right = text.split("~")
        return cls(parse_pattern(left), parse_pattern(right))

    def __str__(self):
        return f"{format_pattern(self.lhs)} ~ {format_pattern(self.rhs)}"

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def variables(self) -> tuple[str, ...]:
        """Occurring variables in order of first appearance (lhs, then rhs)."""
        return tuple(dict.fromkeys(self.lhs + self.rhs))

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def renamed(self, mapping: Mapping[str, str]) -> "Identity":
        return Identity(
            tuple(mapping.get(x, x) for x in self.lhs),
            tuple(mapping.get(x, x) for x in self.rhs),
        )


def is_balanced(identity: Identity) -> bool:
    return Counter(identity.lhs) == Counter(identity.rhs)


def _span(p: Sequence) -> tuple[dict, dict]:
    first: dict = {}
    last: dict = {}
    for i, x in enumerate(p):
        first.setdefault(x, i)
        last[x] = i
    return first, last


def subsequence_pairs(p: Sequence) -> frozenset[tuple]:
    """Ordered pairs ``(x, y)`` of distinct symbols such that ``xy`` is a subsequence of ``p``."""
    first, last = _span(p)
    return frozenset(
        (x, y) for x in first for y in first if x != y and first[x] < last[y]
    )


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str = ""
    pair: tuple[str, str] | None = None

    def __bool__(self):
        return self.holds


def decide(identity: Identity) -> Verdict:
    """Decide satisfaction in hypo, explaining a failure.

    An identity holds iff it is balanced and, for every ordered pair of
    distinct variables, both sides agree on containing ``xy`` as a
    subsequence. The ``x = y`` case is implied by balance.
    """
    if identity.trivial:
        return Verdict(True, "trivial")
    lc, rc = Counter(identity.lhs), Counter(identity.rhs)
    if lc != rc:
        diff = sorted(x for x in set(lc) | set(rc) if lc[x] != rc[x])
        return Verdict(False, f"unbalanced: variable {diff[0]} occurs {lc[diff[0]]} vs {rc[diff[0]]} times")
    lf, ll = _span(identity.lhs)
    rf, rl = _span(identity.rhs)
    for x in lf:
        for y in lf:
            if x != y and (lf[x] < ll[y]) != (rf[x] < rl[y]):
                return Verdict(False, f"pair ({x},{y}) subsequence mismatch", (x, y))
    return Verdict(True, "balanced with matching subsequence pairs")


def holds_in_hypo(identity: Identity) -> bool:
    return decide(identity).holds


def hypo_key(p: Sequence) -> tuple:
    """Two patterns form a satisfied identity iff their keys agree."""
    return (tuple(sorted(Counter(p).items())), subsequence_pairs(p))


# -- evaluation oracles --------------------------------------------------------


@dataclass(frozen=True)
class EvaluationResult:
    holds: bool
    counterexample: dict | None = None
    lhs_value: object = None
    rhs_value: object = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class HypoTarget:
    """hypo_n with every variable ranging over words of length <= ``cap``.

    ``words`` overrides the assignment range with an explicit list.
    """

    n: int = 2
    cap: int = 2
    words: tuple[Word, ...] | None = None

    def assignment_words(self) -> tuple[Word, ...]:
        if self.words is not None:
            return tuple(tuple(w) for w in self.words)
        return tuple(words_up_to(self.n, self.cap))


# Images used in the characterization proof, plus the support-{1,2} generator.
PROOF_WORDS: tuple[Word, ...] = ((), (1,), (2,), (2, 1))


def evaluate_in_hypo(p: Sequence[str], assignment: Mapping[str, Word]) -> Word:
    w: tuple[int, ...] = ()
    for x in p:
        w += tuple(assignment[x])
    return canonical_form(w)


def evaluation_signature(p: Sequence[str], variables: Sequence[str], words: Sequence[Word]) -> tuple[Word, ...]:
    """Values of ``p`` under every assignment of ``words`` to ``variables`` (product order)."""
    return tuple(
        evaluate_in_hypo(p, dict(zip(variables, vals)))
        for vals in product(words, repeat=len(variables))
    )


def holds_by_evaluation(identity: Identity, target, bound: int | None = None) -> EvaluationResult:
    """Exhaustively check ``identity`` in ``target``.

    ``target`` is a :class:`HypoTarget` or a
    :class:`~hypoplactic.monoids.MultiplicationTable`. Assignments are
    scanned in ``itertools.product`` order over the variables in first
    appearance order; the first failure is returned.
    """
    from .monoids import MultiplicationTable, satisfies

    if isinstance(target, MultiplicationTable):
        return satisfies(target, identity, bound=bound)
    bound = limits.assignment_bound() if bound is None else bound
    words = target.assignment_words()
    for w in words:
        if any(a > target.n for a in w):
            raise ValueError(f"assignment word {w} is outside the rank-{target.n} alphabet")
    variables = identity.variables()
    if len(words) ** len(variables) > bound:
        raise ResourceLimitError("assignment space", bound)
    for vals in product(words, repeat=len(variables)):
        psi = dict(zip(variables, vals))
        left = evaluate_in_hypo(identity.lhs, psi)
        right = evaluate_in_hypo(identity.rhs, psi)
        if left != right:
            return EvaluationResult(False, psi, left, right)
    return EvaluationResult(True)


# -- projections and two-variable identities -----------------------------------


def restrict_to_vars(p: Sequence[str], x: str, y: str) -> Pattern:
    return tuple(s for s in p if s == x or s == y)


def _is_two_block(p: Pattern) -> bool:
    # of the form x^a y^b with a, b >= 0
    return sum(1 for s, t in zip(p, p[1:]) if s != t) <= 1


def two_variable_form_check(identity: Identity) -> bool:
    """Decide a two-variable identity by shape alone.

    A non-trivial identity in two variables holds iff it is balanced and
    neither side is a power of one variable followed by a power of the other.
    """
    variables = identity.variables()
    if len(variables) != 2:
        raise ValueError(f"expected exactly 2 variables, got {len(variables)}: {variables}")
    if identity.trivial:
        return True
    return (
        is_balanced(identity)
        and not _is_two_block(identity.lhs)
        and not _is_two_block(identity.rhs)
    )


# -- enumeration ----------------------------------------------------------------

VARIABLE_NAMES = ("x", "y", "z", "t", "s", "r", "q", "p", "w", "v")


def variable_names(k: int) -> tuple[str, ...]:
    if k <= len(VARIABLE_NAMES):
        return VARIABLE_NAMES[:k]
    return tuple(f"x{i}" for i in range(1, k + 1))


def canonical_identity(identity: Identity) -> Identity:
    """Least representative under renaming of variables and swapping sides."""
    variables = sorted(identity.variables())
    best = None
    for perm in permutations(variables):
        renamed = identity.renamed(dict(zip(variables, perm)))
        for cand in (renamed, renamed.swapped()):
            key = (cand.lhs, cand.rhs)
            if best is None or key < best:
                best = key
    if best is None:
        return identity
    return Identity(*best)


def patterns(variables: Sequence[str], length: int, all_used: bool = True) -> Iterator[Pattern]:
    need = set(variables)
    for p in product(variables, repeat=length):
        if not all_used or set(p) == need:
            yield p


def enumerate_identities(num_vars: int, length: int, bound: int | None = None) -> set[Identity]:
    """Non-trivial identities satisfied by hypo, both sides of ``length``, with exactly ``num_vars`` variables.

    Returned up to renaming and side swap, each as its canonical representative.
    """
    bound = limits.search_bound() if bound is None else bound
    if num_vars ** length > bound:
        raise ResourceLimitError("pattern search space", bound)
    variables = variable_names(num_vars)
    groups: dict[tuple, list[Pattern]] = defaultdict(list)
    for p in patterns(variables, length):
        groups[hypo_key(p)].append(p)
    found = set()
    for group in groups.values():
        for i, u in enumerate(group):
            for v in group[i + 1 :]:
                ident = Identity(u, v)
                if holds_in_hypo(ident):
                    found.add(canonical_identity(ident))
    return found


def shortest_identity_length(num_vars: int, bound: int | None = None) -> int:
    if num_vars < 2:
        raise ValueError("single-variable identities that hold are trivial; need num_vars >= 2")
    length = num_vars
    while True:
        if enumerate_identities(num_vars, length, bound=bound):
            return length
        length += 1


def shortest_identity_witness(num_vars: int) -> Identity:
    """``x a1 .. a(n-1) x x ~ x x a1 .. a(n-1) x``."""
    if num_vars < 2:
        raise ValueError("need num_vars >= 2")
    x, *rest = variable_names(num_vars)
    rest = tuple(rest)
    return Identity((x,) + rest + (x, x), (x, x) + rest + (x,))
