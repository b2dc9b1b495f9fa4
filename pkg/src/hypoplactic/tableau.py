"""Quasi-ribbon tableaux and the insertion algorithm building them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParseError
from .words import Word


@dataclass(frozen=True)
class QuasiRibbonTableau:
    """A ribbon of rows; row ``k + 1`` starts under the last cell of row ``k``.

    Offsets are implied by the row lengths, so two tableaux are equal exactly
    when their rows are.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        problems = self.violations()
        if problems:
            raise ValueError("not a quasi-ribbon tableau: " + "; ".join(problems))

    @property
    def offsets(self) -> tuple[int, ...]:
        out = []
        col = 0
        for row in self.rows:
            out.append(col)
            col += len(row) - 1
        return tuple(out)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self):
        return self.size

    def entries(self) -> tuple[int, ...]:
        """Entries in ribbon order: rows top to bottom, each left to right."""
        return tuple(a for row in self.rows for a in row)

    def violations(self) -> list[str]:
        problems = []
        seen: dict[int, int] = {}
        for k, row in enumerate(self.rows):
            if not row:
                problems.append(f"row {k} is empty")
                continue
            if any(a < 1 for a in row):
                problems.append(f"row {k} has a non-positive entry")
            if any(x > y for x, y in zip(row, row[1:])):
                problems.append(f"row {k} is not weakly increasing")
            if k and self.rows[k - 1] and not self.rows[k - 1][-1] < row[0]:
                problems.append(f"column break between rows {k - 1} and {k} is not strict")
            for a in set(row):
                if a in seen:
                    problems.append(f"letter {a} appears in rows {seen[a]} and {k}")
                seen[a] = k
        return problems

    def columns(self) -> list[list[int]]:
        """Columns left to right, each listed top to bottom."""
        cols: list[list[int]] = []
        for off, row in zip(self.offsets, self.rows):
            for i, a in enumerate(row):
                c = off + i
                while len(cols) <= c:
                    cols.append([])
                cols[c].append(a)
        return cols

    def render(self) -> str:
        if not self.rows:
            return ""
        width = max(len(str(a)) for a in self.entries())
        lines = []
        for off, row in zip(self.offsets, self.rows):
            cells = [" " * width] * off + [str(a).rjust(width) for a in row]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def to_json(self) -> list[dict]:
        return [{"offset": off, "row": list(row)} for off, row in zip(self.offsets, self.rows)]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "QuasiRibbonTableau":
        data = list(data)
        t = cls(tuple(tuple(int(a) for a in item["row"]) for item in data))
        given = tuple(int(item["offset"]) for item in data)
        if given != t.offsets:
            raise ValueError(f"offsets {given} do not match ribbon shape {t.offsets}")
        return t

    @classmethod
    def parse(cls, text: str) -> "QuasiRibbonTableau":
        """Inverse of :meth:`render`; offsets are recovered from row lengths."""
        rows = []
        for line in text.splitlines():
            toks = line.split()
            if not toks:
                continue
            for tok in toks:
                if not tok.isdigit():
                    raise ParseError(f"invalid tableau entry {tok!r}", tok)
            rows.append(tuple(int(tok) for tok in toks))
        return cls(tuple(rows))

    def __str__(self):
        return self.render()


EMPTY = QuasiRibbonTableau(())


def insert(t: QuasiRibbonTableau, a: int) -> QuasiRibbonTableau:
    """Insert letter ``a`` into ``t``."""
    if a < 1:
        raise ValueError(f"letters must be positive, got {a}")
    rows = t.rows
    # bottom-most row holding an entry <= a, then its right-most such entry
    for k in range(len(rows) - 1, -1, -1):
        row = rows[k]
        if row[0] <= a:
            i = max(j for j, b in enumerate(row) if b <= a)
            head = row[: i + 1] + (a,)
            tail = row[i + 1 :]
            new_rows = rows[:k] + (head,) + ((tail,) if tail else ()) + rows[k + 1 :]
            return QuasiRibbonTableau(new_rows)
    # nothing <= a: new cell on top, old ribbon glued below it
    return QuasiRibbonTableau(((a,),) + rows)


def insertion_steps(w: Sequence[int]) -> list[QuasiRibbonTableau]:
    """Tableaux after each successive insertion of the letters of ``w``."""
    out = []
    t = EMPTY
    for a in w:
        t = insert(t, a)
        out.append(t)
    return out


@lru_cache(maxsize=1 << 18)
def _p_symbol(w: Word) -> QuasiRibbonTableau:
    t = EMPTY
    for a in w:
        t = insert(t, a)
    return t


def p_symbol(w: Sequence[int]) -> QuasiRibbonTableau:
    return _p_symbol(tuple(w))


def reading_word(t: QuasiRibbonTableau) -> Word:
    """Columns left to right, each read bottom to top."""
    return tuple(a for col in t.columns() for a in reversed(col))


def tableau_equal(t1: QuasiRibbonTableau, t2: QuasiRibbonTableau) -> bool:
    return t1.rows == t2.rows
