"""The enveloping LD monoid over an arbitrary finite LD system.

A finite LD system is a size-n magma table satisfying left distributivity
a.(b.c) = (a.b).(a.c); the loader rejects anything else, naming a violating
triple.  The envelope consists of nonempty sequences of table elements, with

    circle = concatenation,
    dot    = (a_1 ... a_n) . (b_1 ... b_m) = (abar.b_1, ..., abar.b_m)
             where abar.c = a_1.(a_2.( ... (a_n.c))),

taken modulo the positive-braid action

    sigma_i (a_1, ..., a_n) = (a_1, ..., a_i . a_{i+1}, a_i, ..., a_n).

Two sequences are equal in the envelope iff some positive braids take them
to a common sequence; for a finite table the reachable sets are finite, so
``orbit_eq`` is exact whenever the search budget covers them.
"""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Sequence, Union

EnvElement = tuple[int, ...]


class OrbitResult(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


class NotLeftDistributiveError(ValueError):
    """The table fails a.(b.c) = (a.b).(a.c); reports one violating triple."""

    def __init__(self, a: int, b: int, c: int):
        super().__init__(
            f"not left distributive: a={a}, b={b}, c={c} gives "
            f"a.(b.c) != (a.b).(a.c)"
        )
        self.triple = (a, b, c)


class IndexOutOfRangeError(IndexError):
    """A sigma action addressed a position outside the sequence."""


class LDTable:
    """A finite left-distributive magma on elements 1..size."""

    __slots__ = ("size", "table")

    def __init__(self, table: Sequence[Sequence[int]]):
        self.size = len(table)
        if self.size < 1:
            raise ValueError("table must be nonempty")
        rows = []
        for row in table:
            if len(row) != self.size:
                raise ValueError("table must be square")
            for entry in row:
                if not 1 <= entry <= self.size:
                    raise ValueError(f"entry {entry} outside 1..{self.size}")
            rows.append(tuple(row))
        self.table = tuple(rows)
        for a in range(1, self.size + 1):
            for b in range(1, self.size + 1):
                ab = self.dot(a, b)
                for c in range(1, self.size + 1):
                    if self.dot(a, self.dot(b, c)) != self.dot(ab, self.dot(a, c)):
                        raise NotLeftDistributiveError(a, b, c)

    def dot(self, a: int, b: int) -> int:
        return self.table[a - 1][b - 1]

    def elements(self) -> range:
        return range(1, self.size + 1)

    def check_element(self, a: int) -> int:
        if not 1 <= a <= self.size:
            raise ValueError(f"element {a} outside 1..{self.size}")
        return a

    # -- sequences ----------------------------------------------------------

    def sigma_action(self, i: int, s: EnvElement) -> EnvElement:
        """Replace positions i, i+1 by (a_i . a_{i+1}, a_i); 1-based i."""
        if not 1 <= i < len(s):
            raise IndexOutOfRangeError(
                f"sigma_{i} undefined on a sequence of length {len(s)}"
            )
        return s[: i - 1] + (self.dot(s[i - 1], s[i]), s[i - 1]) + s[i + 1 :]

    def env_dot(self, u: EnvElement, v: EnvElement) -> EnvElement:
        """Left-nested products of u applied to each entry of v."""
        self._check_seq(u)
        self._check_seq(v)

        def nested(c: int) -> int:
            for a in reversed(u):
                c = self.dot(a, c)
            return c

        return tuple(nested(b) for b in v)

    def env_circ(self, u: EnvElement, v: EnvElement) -> EnvElement:
        self._check_seq(u)
        self._check_seq(v)
        return u + v

    def orbit(self, s: EnvElement, depth: Union[int, None] = None) -> tuple[set[EnvElement], bool]:
        """Reachable set under sigma actions; (set, whether it is complete)."""
        seen = {s}
        frontier = [s]
        steps = 0
        while frontier:
            if depth is not None and steps >= depth:
                return seen, False
            steps += 1
            new = []
            for seq in frontier:
                for i in range(1, len(seq)):
                    image = self.sigma_action(i, seq)
                    if image not in seen:
                        seen.add(image)
                        new.append(image)
            frontier = new
        return seen, True

    def orbit_eq(
        self, u: EnvElement, v: EnvElement, depth: Union[int, None] = None
    ) -> OrbitResult:
        """Exact orbit equality when the budget covers the reachable sets.

        ``depth`` caps the number of breadth-first layers explored from each
        side; None explores until closure (always finite here).
        """
        self._check_seq(u)
        self._check_seq(v)
        if len(u) != len(v):
            return OrbitResult.NO
        if u == v:
            return OrbitResult.YES
        left, left_complete = self.orbit(u, depth)
        if v in left:
            return OrbitResult.YES
        right, right_complete = self.orbit(v, depth)
        if left & right:
            return OrbitResult.YES
        if left_complete and right_complete:
            return OrbitResult.NO
        return OrbitResult.UNKNOWN

    def _check_seq(self, s: EnvElement) -> None:
        if not s:
            raise ValueError("envelope sequences are nonempty")
        for a in s:
            self.check_element(a)


def singleton(a: int) -> EnvElement:
    """The canonical embedding of a system element."""
    return (a,)


def seq_length(s: EnvElement) -> int:
    """The canonical homomorphism to the naturals."""
    return len(s)


# -- table construction and I/O ---------------------------------------------


def one_element_table() -> LDTable:
    return LDTable(((1,),))


def cyclic_table(n: int) -> LDTable:
    """The cyclic system a.b = 2b - a (mod n) on 1..n."""
    return LDTable(
        tuple(
            tuple((2 * b - a) % n + 1 for b in range(n))
            for a in range(n)
        )
    )


def parse_table(text: str) -> LDTable:
    """Line 1: size n; then n rows of n entries in 1..n (row a, column b)."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty table file")
    try:
        size = int(lines[0].strip())
    except ValueError:
        raise ValueError(f"first line must be the size, got {lines[0]!r}")
    if len(lines) != size + 1:
        raise ValueError(f"expected {size} rows after the size line, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        entries = line.split()
        try:
            rows.append(tuple(int(e) for e in entries))
        except ValueError:
            raise ValueError(f"non-integer entry in row {line!r}")
    return LDTable(rows)


def load_table(path: Union[str, Path]) -> LDTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))
