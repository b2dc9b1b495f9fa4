"""The basis {L, M, R}, checked derivations, and a derivation engine.

A derivation rewrites one side of an identity into the other by splicing
substituted instances of basis identities: each step replaces a factor
``sigma(p)`` of the current pattern by ``sigma(q)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from . import limits
from .errors import HypoError, ResourceLimitError
from .identities import Identity, Pattern, decide, format_pattern

BASIS: dict[str, Identity] = {
    "L": Identity(tuple("xyzxty"), tuple("yxzxty")),
    "M": Identity(tuple("xzxytx"), tuple("xzyxtx")),
    "R": Identity(tuple("xzytxy"), tuple("xzytyx")),
}

FORWARD = "forward"
BACKWARD = "backward"

Substitution = Mapping[str, Pattern]


class DerivationMismatch(HypoError, ValueError):
    pass


class DerivationFailure(HypoError, RuntimeError):
    """The engine found no applicable case. This is a bug, not a verdict."""


def oriented(tag: str, direction: str) -> tuple[Pattern, Pattern]:
    ident = BASIS[tag]
    if direction == FORWARD:
        return ident.lhs, ident.rhs
    if direction == BACKWARD:
        return ident.rhs, ident.lhs
    raise ValueError(f"direction must be {FORWARD!r} or {BACKWARD!r}, got {direction!r}")


def substitute(p: Sequence[str], sigma: Substitution) -> Pattern:
    out: list[str] = []
    for x in p:
        out.extend(sigma[x])
    return tuple(out)


def apply_basis(w: Sequence[str], tag: str, direction: str, r_len: int, sigma: Substitution) -> Pattern:
    """Replace ``sigma(p)`` at offset ``r_len`` of ``w`` by ``sigma(q)``."""
    w = tuple(w)
    p, q = oriented(tag, direction)
    image = substitute(p, sigma)
    if w[r_len : r_len + len(image)] != image:
        raise DerivationMismatch(
            f"{tag} {direction}: {format_pattern(image)} does not occur at offset {r_len} "
            f"of {format_pattern(w)}"
        )
    return w[:r_len] + substitute(q, sigma) + w[r_len + len(image) :]


@dataclass(frozen=True)
class DerivationStep:
    tag: str
    direction: str
    prefix: Pattern
    suffix: Pattern
    sigma: dict
    before: Pattern
    after: Pattern

    def is_valid(self) -> bool:
        p, q = oriented(self.tag, self.direction)
        try:
            return (
                self.before == self.prefix + substitute(p, self.sigma) + self.suffix
                and self.after == self.prefix + substitute(q, self.sigma) + self.suffix
            )
        except KeyError:
            return False

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "direction": self.direction,
            "r": list(self.prefix),
            "s": list(self.suffix),
            "sigma": {x: list(v) for x, v in sorted(self.sigma.items())},
            "before": list(self.before),
            "after": list(self.after),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DerivationStep":
        return cls(
            data["tag"],
            data["direction"],
            tuple(data["r"]),
            tuple(data["s"]),
            {x: tuple(v) for x, v in data["sigma"].items()},
            tuple(data["before"]),
            tuple(data["after"]),
        )


@dataclass(frozen=True)
class Derivation:
    start: Pattern
    end: Pattern
    steps: tuple[DerivationStep, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "lhs": list(self.start),
            "rhs": list(self.end),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Derivation":
        return cls(
            tuple(data["lhs"]),
            tuple(data["rhs"]),
            tuple(DerivationStep.from_json(s) for s in data["steps"]),
        )

    def render(self) -> str:
        lines = [f"   {format_pattern(self.start)}"]
        for i, s in enumerate(self.steps, 1):
            sig = ", ".join(f"{x}->{format_pattern(v)}" for x, v in sorted(s.sigma.items()))
            lines.append(
                f"{i:>2}. {format_pattern(s.after)}    [{s.tag} {s.direction}, "
                f"r={format_pattern(s.prefix)}, {sig}]"
            )
        return "\n".join(lines)


def make_step(w: Pattern, tag: str, direction: str, r_len: int, sigma: Substitution) -> DerivationStep:
    sigma = {x: tuple(v) for x, v in sigma.items()}
    after = apply_basis(w, tag, direction, r_len, sigma)
    p, _ = oriented(tag, direction)
    end = r_len + len(substitute(p, sigma))
    return DerivationStep(tag, direction, w[:r_len], w[end:], sigma, w, after)


def find_invalid_step(d: Derivation, start: Sequence[str], end: Sequence[str]) -> int | None:
    """Index of the first bad step, or ``len(d.steps)`` if only the endpoints are wrong."""
    cur = tuple(start)
    for i, step in enumerate(d.steps):
        if step.before != cur or not step.is_valid():
            return i
        cur = step.after
    if cur != tuple(end):
        return len(d.steps)
    return None


def verify_derivation(d: Derivation, start: Sequence[str] | None = None, end: Sequence[str] | None = None) -> bool:
    start = d.start if start is None else tuple(start)
    end = d.end if end is None else tuple(end)
    return find_invalid_step(d, start, end) is None


# -- the engine ----------------------------------------------------------------


def _swap_candidates(cur: Pattern, p: int, q: int) -> Iterator[tuple[str, str, int, dict]]:
    """Basis applications turning ``... a y ...`` at ``q-1, q`` into ``... y a ...``.

    ``cur[:p]`` is the prefix already agreeing with the target. The four
    groups mirror where else ``a`` and ``y`` occur: both in the prefix (R),
    both after the pair (L), ``y`` on both sides (M backwards), ``a`` on
    both sides (M forwards). Within a group both relative orders are tried.
    """
    a, y = cur[q - 1], cur[q]
    w, after = range(p), range(q + 1, len(cur))
    w_a = [i for i in w if cur[i] == a]
    w_y = [i for i in w if cur[i] == y]
    u_a = [j for j in after if cur[j] == a]
    u_y = [j for j in after if cur[j] == y]

    # both in the prefix: ... a z y t (a y)  or  ... y z a t (a y)
    for first, second, sx, sy, direction in ((w_a, w_y, a, y, FORWARD), (w_y, w_a, y, a, BACKWARD)):
        for j in reversed(second):
            earlier = [i for i in first if i < j]
            if earlier:
                i = earlier[-1]
                yield "R", direction, i, {"x": (sx,), "y": (sy,), "z": cur[i + 1 : j], "t": cur[j + 1 : q - 1]}
                break
    # both after the pair: (a y) z a t y  or  (a y) z y t a
    for first, second, sx, sy, direction in ((u_a, u_y, a, y, FORWARD), (u_y, u_a, y, a, BACKWARD)):
        for i in first:
            later = [j for j in second if j > i]
            if later:
                j = later[0]
                yield "L", direction, q - 1, {"x": (sx,), "y": (sy,), "z": cur[q + 1 : i], "t": cur[i + 1 : j]}
                break
    # y before and after: y z (a y) t y
    if w_y and u_y:
        i, j = w_y[-1], u_y[0]
        yield "M", BACKWARD, i, {"x": (y,), "y": (a,), "z": cur[i + 1 : q - 1], "t": cur[q + 1 : j]}
    # a before and after: a z (a y) t a
    if w_a and u_a:
        i, j = w_a[-1], u_a[0]
        yield "M", FORWARD, i, {"x": (a,), "y": (y,), "z": cur[i + 1 : q - 1], "t": cur[q + 1 : j]}


def derive_from_basis(identity: Identity) -> Derivation:
    """Rewrite ``lhs`` into ``rhs`` using only L, M and R.

    Repeatedly take the first position where the current pattern and the
    target differ, say target letter ``y``; bubble the leftmost later ``y``
    one place to the left at a time until it reaches that position. Every
    swap of adjacent ``a y`` is one basis application.
    """
    verdict = decide(identity)
    if not verdict.holds:
        raise ValueError(f"{identity} does not hold in hypo: {verdict.reason}")
    target = identity.rhs
    cur = identity.lhs
    steps: list[DerivationStep] = []
    while cur != target:
        p = next(i for i, (s, t) in enumerate(zip(cur, target)) if s != t)
        y = target[p]
        q = cur.index(y, p)
        while q > p:
            expected = cur[: q - 1] + (y, cur[q - 1]) + cur[q + 1 :]
            for tag, direction, r_len, sigma in _swap_candidates(cur, p, q):
                step = make_step(cur, tag, direction, r_len, sigma)
                if step.after == expected:
                    break
            else:
                raise DerivationFailure(
                    f"no basis application swaps positions {q - 1},{q} of {format_pattern(cur)} "
                    f"towards {format_pattern(target)}"
                )
            steps.append(step)
            cur = step.after
            new_q = cur.index(y, p)
            assert new_q == q - 1, "swap must move the distinguished letter one place left"
            q = new_q
        assert cur[: p + 1] == target[: p + 1], "common prefix must grow"
    return Derivation(identity.lhs, identity.rhs, tuple(steps))


# -- consequence by search --------------------------------------------------------


def _match(p: Sequence[str], w: Pattern, start: int, nonempty: frozenset) -> Iterator[tuple[int, dict]]:
    """All ``(end, sigma)`` with ``sigma(p) == w[start:end]``."""

    def go(k: int, pos: int, sigma: dict):
        if k == len(p):
            yield pos, dict(sigma)
            return
        x = p[k]
        if x in sigma:
            img = sigma[x]
            if w[pos : pos + len(img)] == img:
                yield from go(k + 1, pos + len(img), sigma)
            return
        lo = 1 if x in nonempty else 0
        for end in range(pos + lo, len(w) + 1):
            sigma[x] = w[pos:end]
            yield from go(k + 1, end, sigma)
            del sigma[x]

    yield from go(0, start, {})


_NONEMPTY = frozenset("xy")


def basis_neighbors(w: Sequence[str]) -> set[Pattern]:
    """Patterns reachable from ``w`` by one basis application.

    ``x`` and ``y`` range over non-empty patterns (an empty image makes
    both sides equal); ``z`` and ``t`` may be empty.
    """
    w = tuple(w)
    out = set()
    for tag in BASIS:
        for direction in (FORWARD, BACKWARD):
            p, q = oriented(tag, direction)
            for start in range(len(w)):
                for end, sigma in _match(p, w, start, _NONEMPTY):
                    out.add(w[:start] + substitute(q, sigma) + w[end:])
    out.discard(w)
    return out


def consequence_bfs(lhs: Sequence[str], rhs: Sequence[str], bound: int | None = None) -> bool:
    """Breadth-first reachability of ``rhs`` from ``lhs`` under basis applications.

    Every basis identity is balanced, so only patterns with the content of
    ``lhs`` are reachable and the search is finite.
    """
    lhs, rhs = tuple(lhs), tuple(rhs)
    if lhs == rhs:
        return True
    if sorted(lhs) != sorted(rhs):
        return False
    bound = limits.frontier_bound() if bound is None else bound
    seen = {lhs}
    queue = deque([lhs])
    while queue:
        cur = queue.popleft()
        for nxt in basis_neighbors(cur):
            if nxt == rhs:
                return True
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise ResourceLimitError("consequence search frontier", bound)
                queue.append(nxt)
    return False


def is_consequence(identity: Identity) -> bool:
    return consequence_bfs(identity.lhs, identity.rhs)

