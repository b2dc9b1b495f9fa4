"""Finite monoids given by multiplication tables, and exhaustive identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import product
from typing import Sequence

from . import limits
from .errors import ParseError, ResourceLimitError
from .identities import EvaluationResult, Identity, is_balanced, holds_in_hypo


@dataclass(frozen=True)
class MultiplicationTable:
    """``table[i][j]`` is the index of ``elements[i] * elements[j]``."""

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("element labels must be distinct")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError(f"table must be {n}x{n}")
        if any(not 0 <= v < n for r in self.table for v in r):
            raise ValueError("table entries must index elements")
        if not 0 <= self.identity_index < n:
            raise ValueError("identity index out of range")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def mul(self, a: str, b: str) -> str:
        return self.elements[self.table[self.index(a)][self.index(b)]]

    def evaluate(self, p: Sequence[str], assignment: dict[str, str]) -> str:
        return self.elements[self._eval_idx(p, {x: self.index(v) for x, v in assignment.items()})]

    def _eval_idx(self, p: Sequence[str], assignment: dict[str, int]) -> int:
        acc = self.identity_index
        t = self.table
        for x in p:
            acc = t[acc][assignment[x]]
        return acc

    # -- text format ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "MultiplicationTable":
        """Read the table format.

        First line: ``<size> <neutral-label>``. Then one line per element,
        ``<label>: <products...>``, where the columns follow the order in
        which the row labels are listed. ``#`` starts a comment.
        """
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ParseError("empty table")
        head = lines[0].split()
        if len(head) != 2 or not head[0].isdigit():
            raise ParseError(f"header must be '<size> <neutral>', got {lines[0]!r}", lines[0])
        size, neutral = int(head[0]), head[1]
        rows = lines[1:]
        if len(rows) != size:
            raise ParseError(f"expected {size} rows, got {len(rows)}")
        labels, entries = [], []
        for ln in rows:
            if ":" not in ln:
                raise ParseError(f"row must look like 'label: products...', got {ln!r}", ln)
            label, rest = ln.split(":", 1)
            labels.append(label.strip())
            entries.append(rest.split())
        for row in entries:
            if len(row) != size:
                raise ParseError(f"row {row} has {len(row)} entries, expected {size}")
            for tok in row:
                if tok not in labels:
                    raise ParseError(f"unknown element {tok!r}", tok)
        if neutral not in labels:
            raise ParseError(f"unknown neutral element {neutral!r}", neutral)
        table = tuple(tuple(labels.index(tok) for tok in row) for row in entries)
        return cls(tuple(labels), table, labels.index(neutral))

    def dumps(self) -> str:
        width = max(len(e) for e in self.elements)
        out = [f"{self.size} {self.elements[self.identity_index]}"]
        for e, row in zip(self.elements, self.table):
            out.append(f"{e.ljust(width)}: " + " ".join(self.elements[j].ljust(width) for j in row).rstrip())
        return "\n".join(out) + "\n"


@dataclass
class ValidationReport:
    associative_failures: list[tuple[str, str, str]] = field(default_factory=list)
    neutral_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.associative_failures and not self.neutral_failures

    def __bool__(self):
        return self.ok


def validate_monoid(t: MultiplicationTable, limit: int = 10) -> ValidationReport:
    """Check associativity over all triples and two-sided neutrality.

    At most ``limit`` violations of each kind are recorded.
    """
    report = ValidationReport()
    m, e, n = t.table, t.identity_index, t.size
    for a in range(n):
        if m[e][a] != a or m[a][e] != a:
            if len(report.neutral_failures) < limit:
                report.neutral_failures.append(t.elements[a])
    for a, b, c in product(range(n), repeat=3):
        if m[m[a][b]][c] != m[a][m[b][c]]:
            report.associative_failures.append((t.elements[a], t.elements[b], t.elements[c]))
            if len(report.associative_failures) >= limit:
                break
    return report


def satisfies(t: MultiplicationTable, identity: Identity, bound: int | None = None) -> EvaluationResult:
    """Try every assignment of elements to variables.

    Variables are taken in first-appearance order and elements in table
    order, scanned as ``itertools.product``; the first failing assignment
    is reported with both side values.
    """
    bound = limits.assignment_bound() if bound is None else bound
    variables = identity.variables()
    if t.size ** len(variables) > bound:
        raise ResourceLimitError("assignment space", bound)
    for vals in product(range(t.size), repeat=len(variables)):
        psi = dict(zip(variables, vals))
        left = t._eval_idx(identity.lhs, psi)
        right = t._eval_idx(identity.rhs, psi)
        if left != right:
            return EvaluationResult(
                False,
                {x: t.elements[v] for x, v in psi.items()},
                t.elements[left],
                t.elements[right],
            )
    return EvaluationResult(True)


# -- built-in monoids -----------------------------------------------------------

S_TEXT = """\
5 1
1: 1 a b c 0
a: a 1 b c 0
b: b c 0 0 0
c: c b 0 0 0
0: 0 0 0 0 0
"""


@cache
def table_s() -> MultiplicationTable:
    """Five-element monoid separating (M) from (L) and (R)."""
    return MultiplicationTable.parse(S_TEXT)


def _adjoin_neutral(labels: Sequence[str], op) -> MultiplicationTable:
    elements = ("1",) + tuple(labels)
    n = len(elements)

    def mul(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return 1 + op(i - 1, j - 1)

    return MultiplicationTable(elements, tuple(tuple(mul(i, j) for j in range(n)) for i in range(n)), 0)


def left_zero(k: int) -> MultiplicationTable:
    """``k`` elements with ``ab = a``, plus an adjoined neutral element."""
    if k < 2:
        raise ValueError("need k >= 2")
    return _adjoin_neutral([f"e{i}" for i in range(1, k + 1)], lambda i, j: i)


def right_zero(k: int) -> MultiplicationTable:
    """``k`` elements with ``ab = b``, plus an adjoined neutral element."""
    if k < 2:
        raise ValueError("need k >= 2")
    return _adjoin_neutral([f"e{i}" for i in range(1, k + 1)], lambda i, j: j)


@cache
def c3() -> MultiplicationTable:
    """Extensive order-preserving maps of the chain 1 < 2 < 3 under composition.

    Maps are written as image tuples ``(f(1), f(2), f(3))`` and composed
    left to right: ``f * g`` applies ``f`` first.
    """
    maps = [
        f
        for f in product((1, 2, 3), repeat=3)
        if all(f[i] >= i + 1 for i in range(3)) and all(f[i] <= f[i + 1] for i in range(2))
    ]
    ident = maps.index((1, 2, 3))
    index = {f: i for i, f in enumerate(maps)}
    table = tuple(
        tuple(index[tuple(g[f[i] - 1] for i in range(3))] for g in maps) for f in maps
    )
    labels = tuple("".join(map(str, f)) for f in maps)
    return MultiplicationTable(labels, table, ident)


def builtin(name: str) -> MultiplicationTable:
    """``S``, ``C3``, ``left_zero(k)`` / ``right_zero(k)`` (``k`` defaults to 2)."""
    key = name.strip()
    if key in ("S", "s"):
        return table_s()
    if key.upper() == "C3":
        return c3()
    for prefix, fn in (("left_zero", left_zero), ("right_zero", right_zero)):
        if key.startswith(prefix):
            arg = key[len(prefix):].strip("()") or "2"
            return fn(int(arg))
    raise ValueError(f"unknown built-in monoid {name!r}")


def hypo_vs_c3(identity: Identity, bound: int | None = None) -> bool:
    """Whether hypo satisfies ``identity`` exactly when it is balanced and C3 satisfies it."""
    return holds_in_hypo(identity) == (is_balanced(identity) and satisfies(c3(), identity, bound=bound).holds)
