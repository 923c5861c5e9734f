"""Brute-force ground truth for word equality and finite-group structure.

The search functions here decide nothing cleverly: ``bfs_equal`` explores raw
words under free cancellation, free insertion, and relation replacement, so
its verdicts depend only on the presentation itself.  They deliberately never
touch the rewriting engine — cross-validating that engine is their job.

``table_from_normal_forms`` is the one deliberate exception: it consumes a
proven-convergent system to build a multiplication table, then audits the
group laws on the result, turning engine bugs into loud LawViolation errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LawViolation, MultiObjectUnsupported
from .model import Polygraph
from .words import Word

__all__ = [
    "Equal",
    "NotWithinRadius",
    "SearchSpace",
    "bfs_equal",
    "bfs_reach",
    "default_length_cap",
    "MultiplicationTable",
    "closure_generates",
    "table_from_normal_forms",
]


@dataclass(frozen=True)
class Equal:
    """The words were connected within the radius, in ``steps`` moves."""

    steps: int


@dataclass(frozen=True)
class NotWithinRadius:
    """Honest unknown: no connection found inside radius and length cap."""


def default_length_cap(u_len: int, v_len: int, radius: int) -> int:
    """Word-length cap bounding the search space: 2·max(|u|,|v|) + 2·radius."""
    return 2 * max(u_len, v_len) + 2 * radius


# Internal state encoding: a word is a tuple of small ints, generator i
# positively as i and inverted as i + n.  Tuples hash fast and keep the
# visited set compact.
_State = tuple[int, ...]


class SearchSpace:
    """Move generator for one presentation; reusable across many searches."""

    def __init__(self, p: Polygraph):
        if len(p.cells0) != 1:
            raise MultiObjectUnsupported(
                "word search needs exactly one 0-cell, got "
                f"{len(p.cells0)}"
            )
        self.polygraph = p
        self._gens = list(p.gens)
        self._index = {g: i for i, g in enumerate(self._gens)}
        n = len(self._gens)
        self._n = n
        # Both replacement directions for every relation.
        self._swaps: list[tuple[_State, _State]] = []
        for lhs, rhs in p.rels.values():
            left = self._encode(lhs)
            right = self._encode(rhs)
            self._swaps.append((left, right))
            if left != right:
                self._swaps.append((right, left))

    def _encode(self, word: Word) -> _State:
        n = self._n
        return tuple(
            self._index[lt.gen] + (0 if lt.sign > 0 else n) for lt in word.letters
        )

    def _mate(self, letter: int) -> int:
        n = self._n
        return letter - n if letter >= n else letter + n

    def encode(self, word: Word | str) -> _State:
        if isinstance(word, str):
            word = self.polygraph.word(word)
        return self._encode(word)

    def reduce(self, state: _State) -> _State:
        """Free reduction: cancel adjacent mutually inverse letters."""
        stack: list[int] = []
        for letter in state:
            if stack and stack[-1] == self._mate(letter):
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    def neighbors(self, state: _State, length_cap: int) -> list[_State]:
        """All words one move away: cancel, insert, or swap a relation side."""
        out: list[_State] = []
        length = len(state)
        # Cancellations of an adjacent inverse pair.
        for i in range(length - 1):
            if state[i + 1] == self._mate(state[i]):
                out.append(state[:i] + state[i + 2 :])
        # Insertions of an inverse pair, any letter, any position.
        if length + 2 <= length_cap:
            for i in range(length + 1):
                head, tail = state[:i], state[i:]
                for letter in range(2 * self._n):
                    out.append(head + (letter, self._mate(letter)) + tail)
        # Relation replacements, both directions, every occurrence.
        for pattern, replacement in self._swaps:
            span = len(pattern)
            if length - span + len(replacement) > length_cap:
                continue
            for i in range(length - span + 1):
                if state[i : i + span] == pattern:
                    out.append(state[:i] + replacement + state[i + span :])
        return out


def bfs_reach(
    p_or_space: Polygraph | SearchSpace,
    start: Word | str,
    radius: int,
    *,
    length_cap: int,
) -> dict[_State, int]:
    """Every word reachable from the free reduction of ``start``, with its
    distance in moves.  Keys are internal letter tuples; use a SearchSpace's
    ``encode``/``reduce`` to look up targets."""
    space = p_or_space if isinstance(p_or_space, SearchSpace) else SearchSpace(p_or_space)
    origin = space.reduce(space.encode(start))
    seen: dict[_State, int] = {origin: 0}
    frontier = [origin]
    for depth in range(1, radius + 1):
        next_frontier: list[_State] = []
        for state in frontier:
            for child in space.neighbors(state, length_cap):
                if child not in seen:
                    seen[child] = depth
                    next_frontier.append(child)
        frontier = next_frontier
        if not frontier:
            break
    return seen


def bfs_equal(
    p: Polygraph | SearchSpace,
    u: Word | str,
    v: Word | str,
    radius: int,
    *,
    length_cap: int | None = None,
) -> Equal | NotWithinRadius:
    """Search for a chain of elementary moves connecting u to v.

    Moves: free cancellation of an adjacent inverse pair, free insertion of
    one, and replacement of one relation side by the other at any position.
    The search starts at the free reduction of u and succeeds when the free
    reduction of v appears.  ``Equal(k)`` reports the number of moves on the
    shortest such chain; NotWithinRadius means only that no chain exists
    within this radius and length cap.
    """
    space = p if isinstance(p, SearchSpace) else SearchSpace(p)
    start = space.reduce(space.encode(u))
    goal = space.reduce(space.encode(v))
    if length_cap is None:
        u_len = len(u) if isinstance(u, Word) else len(space.encode(u))
        v_len = len(v) if isinstance(v, Word) else len(space.encode(v))
        length_cap = default_length_cap(u_len, v_len, radius)
    if start == goal:
        return Equal(0)
    seen = {start}
    frontier = [start]
    for depth in range(1, radius + 1):
        next_frontier: list[_State] = []
        for state in frontier:
            for child in space.neighbors(state, length_cap):
                if child == goal:
                    return Equal(depth)
                if child not in seen:
                    seen.add(child)
                    next_frontier.append(child)
        frontier = next_frontier
        if not frontier:
            break
    return NotWithinRadius()


# ------------------------------------------------------------- group tables


@dataclass(frozen=True)
class MultiplicationTable:
    """A finite group as an explicit table over element indices.

    Construction-time checks enforce closure, a two-sided identity,
    two-sided inverses, and full associativity, so holding an instance is
    already a proof that the data is a group.
    """

    size: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        n = self.size
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise LawViolation(f"table is not {n}x{n}")
        for row in self.table:
            for x in row:
                if not (0 <= x < n):
                    raise LawViolation("table entry out of range: not closed")
        e = self.identity
        for i in range(n):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise LawViolation(f"element {e} is not a two-sided identity")
        if len(self.inverse) != n:
            raise LawViolation("inverse map has the wrong length")
        for i in range(n):
            j = self.inverse[i]
            if self.table[i][j] != e or self.table[j][i] != e:
                raise LawViolation(f"element {j} is not the inverse of {i}")
        t = self.table
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    if t[ij][k] != t[i][t[j][k]]:
                        raise LawViolation(
                            f"associativity fails at ({i}, {j}, {k})"
                        )


def closure_generates(table: MultiplicationTable, subset) -> bool:
    """Does the subset generate the whole group?

    Closes the subset under multiplication and inversion and compares the
    closure's size with the group order.
    """
    pending = list(dict.fromkeys(subset))
    if not pending:
        raise ValueError("the generating subset must be nonempty")
    for x in pending:
        if not (0 <= x < table.size):
            raise ValueError(f"index {x} is outside the table")
    closure = set(pending)
    while pending:
        x = pending.pop()
        candidates = [table.inverse[x]]
        candidates.extend(table.table[x][y] for y in closure)
        candidates.extend(table.table[y][x] for y in closure)
        for c in candidates:
            if c not in closure:
                closure.add(c)
                pending.append(c)
    return len(closure) == table.size


def table_from_normal_forms(system, cap: int = 10000) -> MultiplicationTable:
    """Multiplication table of the finite group a convergent system presents.

    table[i][j] is the index of normalize(w_i · w_j) in the shortlex list of
    normal forms.  The MultiplicationTable constructor then re-checks every
    group law, so a defective system cannot produce a quiet wrong answer.
    """
    from .errors import InfiniteOrUnknown
    from .rewriting import Finite, enumerate_normal_forms, normalize_bytes

    outcome = enumerate_normal_forms(system, cap=cap)
    if not isinstance(outcome, Finite):
        raise InfiniteOrUnknown(
            f"more than {cap} normal forms; no finite table to build"
        )
    words = [system.word_bytes(w) for w in outcome.words]
    index = {w: i for i, w in enumerate(words)}
    identity = index[b""]
    n = len(words)
    table: list[tuple[int, ...]] = []
    for i in range(n):
        row = []
        for j in range(n):
            product = normalize_bytes(system, words[i] + words[j])
            if product not in index:
                raise LawViolation(
                    "product fell outside the enumerated normal forms"
                )
            row.append(index[product])
        table.append(tuple(row))
    inverse = [0] * n
    for i in range(n):
        matches = [j for j in range(n) if table[i][j] == identity]
        if len(matches) != 1:
            raise LawViolation(f"element {i} has {len(matches)} right inverses")
        inverse[i] = matches[0]
    return MultiplicationTable(
        size=n, table=tuple(table), identity=identity, inverse=tuple(inverse)
    )
