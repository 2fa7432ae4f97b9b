"""Words over the shrinking-braid monoid generators.

The monoid R is generated by crossings s_i, their inverses s_i^-1 and the
strand-merging letters x_i (i >= 1), subject to seven defining relations:

    (1) s_i x_i = x_i
    (2) x_{i+1} x_i = x_i x_i
    (3) x_{i+1} s_i = s_i s_{i+1} x_i
    (4) x_i s_i = s_{i+1} s_i x_{i+1}
    (5) x_i x_j = x_{j+1} x_i,  x_i s_j = s_{j+1} x_i   (j > i)
        x_i s_k = s_k x_i                               (k < i - 1)
    (6) s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    (7) s_i s_j = s_j s_i                               (j > i + 1)

plus free cancellation s_i s_i^-1 = s_i^-1 s_i = e.  Words are purely
syntactic here: two RWords may denote the same monoid element.  Semantic
equality is decided by the faithful free-group representation
(``representation.morphism_eq``); no confluent rewriting system is attempted.

Inverse-letter variants of (3)/(4)/(5) are not among the defining relations;
they are obtained by formal rearrangement and each is validated against the
representation in the test suite before ``sx_decompose`` relies on it:

    x_{i+1} s_i^-1 = s_i^-1 s_{i+1}^-1 x_i        (from (4))
    x_i s_i^-1     = s_{i+1}^-1 s_i^-1 x_{i+1}    (from (3))
    x_i s_j^-1     = s_{j+1}^-1 x_i   (j > i);  x_i s_k^-1 = s_k^-1 x_i  (k < i-1)
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Literal, NamedTuple, Optional


class Kind(Enum):
    SIGMA = "s"
    SIGMA_INV = "s^-1"
    X = "x"


class Generator(NamedTuple):
    kind: Kind
    index: int

    def shifted(self, k: int) -> "Generator":
        return Generator(self.kind, self.index + k)

    def __str__(self) -> str:
        if self.kind is Kind.SIGMA:
            return f"s{self.index}"
        if self.kind is Kind.SIGMA_INV:
            return f"s{self.index}^-1"
        return f"x{self.index}"


def sigma(i: int) -> Generator:
    return Generator(Kind.SIGMA, _checked(i))

def sigma_inv(i: int) -> Generator:
    return Generator(Kind.SIGMA_INV, _checked(i))

def x(i: int) -> Generator:
    return Generator(Kind.X, _checked(i))


def _checked(i: int) -> int:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return i


class XLetterPresentError(ValueError):
    """An operation restricted to braid words met an x letter."""


class RWord:
    """A word over the R generators; the empty word is the identity e."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Generator] = ()):
        self.letters = tuple(letters)

    @staticmethod
    def identity() -> "RWord":
        return RWord(())

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "RWord") -> "RWord":
        return RWord(self.letters + other.letters)

    def __repr__(self) -> str:
        return f"RWord({str(self)!r})"

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def max_index(self) -> int:
        return max((g.index for g in self.letters), default=0)

    def x_count(self) -> int:
        return sum(1 for g in self.letters if g.kind is Kind.X)

    def is_braid(self) -> bool:
        return all(g.kind is not Kind.X for g in self.letters)

    def pow(self, n: int) -> "RWord":
        if n < 0:
            raise ValueError("negative powers are undefined in R")
        return RWord(self.letters * n)


def shift(w: RWord, k: int) -> RWord:
    """The shift map sh^k: every letter index is raised by k, kinds kept."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    return RWord(g.shifted(k) for g in w.letters)


def braid_inverse(w: RWord) -> RWord:
    """Group inverse in B_oo: reverse and swap s_i <-> s_i^-1."""
    out = []
    for g in reversed(w.letters):
        if g.kind is Kind.X:
            raise XLetterPresentError("x letters are not invertible in R")
        swapped = Kind.SIGMA_INV if g.kind is Kind.SIGMA else Kind.SIGMA
        out.append(Generator(swapped, g.index))
    return RWord(out)


def free_cancel(w: RWord) -> RWord:
    """Remove all adjacent s_i s_i^-1 and s_i^-1 s_i pairs."""
    out: list[Generator] = []
    for g in w.letters:
        if out and g.kind is not Kind.X and out[-1].index == g.index and (
            (out[-1].kind is Kind.SIGMA and g.kind is Kind.SIGMA_INV)
            or (out[-1].kind is Kind.SIGMA_INV and g.kind is Kind.SIGMA)
        ):
            out.pop()
        else:
            out.append(g)
    return RWord(out)


def _push_x_right(xi: int, s: Generator) -> list[Generator]:
    """Rewrite the pair x_a . s as sigma letters followed by one x letter.

    Which rule fires is forced by (a, s.index, s.kind); the positive cases
    are relations (3)/(4)/(5), the inverse cases their rearrangements.
    """
    a, b = xi, s.index
    if s.kind is Kind.SIGMA:
        if b == a - 1:
            return [sigma(a - 1), sigma(a), x(a - 1)]
        if b == a:
            return [sigma(a + 1), sigma(a), x(a + 1)]
        if b > a:
            return [sigma(b + 1), x(a)]
        return [sigma(b), x(a)]
    if b == a - 1:
        return [sigma_inv(a - 1), sigma_inv(a), x(a - 1)]
    if b == a:
        return [sigma_inv(a + 1), sigma_inv(a), x(a + 1)]
    if b > a:
        return [sigma_inv(b + 1), x(a)]
    return [sigma_inv(b), x(a)]


def sx_decompose(w: RWord) -> tuple[RWord, RWord]:
    """Split w = braidPart . xPart with the same image in R.

    Scans right to left; each step moves one x letter past the sigma letter
    to its right, so the procedure is deterministic and terminates.
    """
    letters = list(w.letters)
    i = len(letters) - 2
    while i >= 0:
        if (
            i + 1 < len(letters)
            and letters[i].kind is Kind.X
            and letters[i + 1].kind is not Kind.X
        ):
            replacement = _push_x_right(letters[i].index, letters[i + 1])
            letters[i : i + 2] = replacement
            i += len(replacement) - 1  # keep following the moved x letter
        else:
            i -= 1
    split = 0
    while split < len(letters) and letters[split].kind is not Kind.X:
        split += 1
    return RWord(letters[:split]), RWord(letters[split:])


Direction = Literal["L2R", "R2L"]

# _match_rule inspects the word at a position and returns the consumed
# length plus the replacement segment, or None when the side of the chosen
# relation does not occur there.


def _match_rule(
    letters: tuple[Generator, ...], rule: int, pos: int, direction: Direction
) -> Optional[tuple[int, list[Generator]]]:
    def at(k: int) -> Optional[Generator]:
        return letters[pos + k] if pos + k < len(letters) else None

    g0, g1, g2 = at(0), at(1), at(2)
    fwd = direction == "L2R"
    if rule == 1:
        if fwd:
            if g0 and g1 and g0.kind is Kind.SIGMA and g1 == x(g0.index):
                return 2, [g1]
        else:
            if g0 and g0.kind is Kind.X:
                return 1, [sigma(g0.index), g0]
        return None
    if rule == 2:
        if fwd:
            if g0 and g1 and g0.kind is Kind.X and g0.index >= 2 and g1 == x(g0.index - 1):
                return 2, [g1, g1]
        else:
            if g0 and g1 and g0.kind is Kind.X and g1 == g0:
                return 2, [x(g0.index + 1), g0]
        return None
    if rule == 3:
        if fwd:
            if g0 and g1 and g0.kind is Kind.X and g0.index >= 2 and g1 == sigma(g0.index - 1):
                i = g0.index - 1
                return 2, [sigma(i), sigma(i + 1), x(i)]
        else:
            if (
                g0 is not None and g1 is not None and g2 is not None
                and g0.kind is Kind.SIGMA and g1 == sigma(g0.index + 1) and g2 == x(g0.index)
            ):
                i = g0.index
                return 3, [x(i + 1), sigma(i)]
        return None
    if rule == 4:
        if fwd:
            if g0 and g1 and g0.kind is Kind.X and g1 == sigma(g0.index):
                i = g0.index
                return 2, [sigma(i + 1), sigma(i), x(i + 1)]
        else:
            if (
                g0 is not None and g1 is not None and g2 is not None
                and g0.kind is Kind.SIGMA and g0.index >= 2 and g1 == sigma(g0.index - 1)
                and g2 == x(g0.index)
            ):
                i = g0.index - 1
                return 3, [x(i), sigma(i)]
        return None
    if rule == 5:
        if fwd:
            if g0 and g1 and g0.kind is Kind.X:
                i = g0.index
                if g1.kind is Kind.X and g1.index > i:
                    return 2, [x(g1.index + 1), g0]
                if g1.kind is Kind.SIGMA and g1.index > i:
                    return 2, [sigma(g1.index + 1), g0]
                if g1.kind is Kind.SIGMA and g1.index < i - 1:
                    return 2, [g1, g0]
        else:
            if g0 and g1:
                if (
                    g0.kind is Kind.X and g1.kind is Kind.X
                    and g0.index >= g1.index + 2
                ):
                    return 2, [g1, x(g0.index - 1)]
                if (
                    g0.kind is Kind.SIGMA and g1.kind is Kind.X
                    and g0.index >= g1.index + 2
                ):
                    return 2, [g1, sigma(g0.index - 1)]
                if (
                    g0.kind is Kind.SIGMA and g1.kind is Kind.X
                    and g0.index < g1.index - 1
                ):
                    return 2, [g1, g0]
        return None
    if rule == 6:
        if g0 is None or g1 is None or g2 is None:
            return None
        if fwd:
            if (
                g0.kind is Kind.SIGMA and g1 == sigma(g0.index + 1) and g2 == g0
            ):
                i = g0.index
                return 3, [sigma(i + 1), sigma(i), sigma(i + 1)]
        else:
            if (
                g0.kind is Kind.SIGMA and g0.index >= 2 and g1 == sigma(g0.index - 1)
                and g2 == g0
            ):
                i = g0.index - 1
                return 3, [sigma(i), sigma(i + 1), sigma(i)]
        return None
    if rule == 7:
        if g0 is None or g1 is None:
            return None
        if g0.kind is not Kind.SIGMA or g1.kind is not Kind.SIGMA:
            return None
        if fwd:
            if g1.index > g0.index + 1:
                return 2, [g1, g0]
        else:
            if g0.index > g1.index + 1:
                return 2, [g1, g0]
        return None
    raise ValueError(f"rule must be 1..7, got {rule}")


def apply_relation(
    w: RWord, rule: int, position: int, direction: Direction
) -> Optional[RWord]:
    """Apply one defining relation at a position, or return None on no match.

    L2R rewrites the displayed left side to the right side, R2L the reverse.
    Used by test harnesses to generate provably equal word pairs.
    """
    if position < 0 or position > len(w.letters):
        raise IndexError(f"position {position} outside word of length {len(w)}")
    matched = _match_rule(w.letters, rule, position, direction)
    if matched is None:
        return None
    consumed, replacement = matched
    return RWord(w.letters[:position] + tuple(replacement) + w.letters[position + consumed :])


# --- word grammar ---------------------------------------------------------


class RWordParseError(ValueError):
    """Raised on malformed R-word input; carries the byte offset."""

    def __init__(self, message: str, offset: int, token: str):
        super().__init__(f"{message} (offset {offset}, token {token!r})")
        self.offset = offset
        self.token = token


def parse_rword(text: str) -> RWord:
    """Parse: token := ("s" | "x") digits ["^-1"]; "^-1" is illegal after x."""
    letters = []
    pos = 0
    for token in text.split():
        offset = text.index(token, pos)
        pos = offset + len(token)
        body = token
        inverse = False
        if body.endswith("^-1"):
            inverse = True
            body = body[:-3]
        if len(body) < 2 or body[0] not in "sx" or not body[1:].isdigit():
            raise RWordParseError("expected s<digits>[^-1] or x<digits>", offset, token)
        index = int(body[1:])
        if index < 1:
            raise RWordParseError("generator index must be >= 1", offset, token)
        if body[0] == "x":
            if inverse:
                raise RWordParseError("x letters are not invertible", offset, token)
            letters.append(x(index))
        else:
            letters.append(sigma_inv(index) if inverse else sigma(index))
    return RWord(letters)
