"""Left-distributive operations on braids and their circle compositions.

On braid words the two compositions are

    a . b = a sh(b) s_1 sh(a^-1)        (self-distributive dot)
    a o b = a sh(b) x_1                 (associative circle)

The subset generated by the identity braid under dot is the free
monogenerated LD system; closing under circle gives the free monogenerated
LD monoid.  Circle compositions of braids are exactly the monoid elements of
the form (braid) x_1^{n-1}, represented here by ``BElement(braid, n)``.  The
extended operations on those elements are

    (a x_1^{n-1}) . c = a sh^n(c) s_n ... s_1 sh(a^-1)
    (a x_1^{n-1}) o c = a sh^n(c) x_1^n

Equality and order of terms always go through the faithful representation
(``morphism_eq`` / ``cmp_L``); no term normalization is attempted.  Note the
induced order sorts a . b above a but a o b BELOW a: the dot direction is
forced by Dehornoy positivity of s_1 and the circle direction is its
unavoidable complement (see the freegroup module's orientation note).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .freegroup import Cmp
from .representation import cmp_L
from .words import (
    RWord,
    XLetterPresentError,
    braid_inverse,
    free_cancel,
    shift,
    sigma,
    sx_decompose,
    x,
)
from .xmonoid import XWord, x_canonicalize


def _require_braid(w: RWord, what: str) -> None:
    if not w.is_braid():
        raise XLetterPresentError(f"{what} needs braid-only words")


def ld_dot(a: RWord, b: RWord) -> RWord:
    """The self-distributive composition a sh(b) s_1 sh(a^-1) on braids."""
    _require_braid(a, "ld_dot")
    _require_braid(b, "ld_dot")
    return a * shift(b, 1) * RWord([sigma(1)]) * shift(braid_inverse(a), 1)


def ld_circ(a: RWord, b: RWord) -> RWord:
    """The circle composition a sh(b) x_1 on braids."""
    _require_braid(a, "ld_circ")
    _require_braid(b, "ld_circ")
    return a * shift(b, 1) * RWord([x(1)])


@dataclass(frozen=True)
class BElement:
    """A braid-with-power pair (a, n) denoting the element a x_1^{n-1}."""

    braid: RWord
    n: int

    def __post_init__(self) -> None:
        _require_braid(self.braid, "BElement")
        if self.n < 1:
            raise ValueError("power must be >= 1")

    def realize(self) -> RWord:
        return self.braid * RWord((x(1),) * (self.n - 1))

    @staticmethod
    def from_braid(a: RWord) -> "BElement":
        return BElement(a, 1)


def b_dot(a: BElement, c: BElement) -> BElement:
    """(a x_1^{n-1}) . c = a sh^n(c) s_n ... s_1 sh(a^-1), renormalized.

    The x letters contributed by c are pushed back to the tail with
    ``sx_decompose``; for circle compositions of braids the tail always
    canonicalizes to a power of x_1, which is asserted.
    """
    n = a.n
    word = (
        a.braid
        * shift(c.realize(), n)
        * RWord(sigma(i) for i in range(n, 0, -1))
        * shift(braid_inverse(a.braid), 1)
    )
    braid_part, x_part = sx_decompose(word)
    canon = x_canonicalize(XWord.from_rword(x_part))
    if any(i != 1 for i in canon.indices):
        raise AssertionError(f"dot result left the braid-power family: {canon}")
    return BElement(free_cancel(braid_part), len(canon) + 1)


def b_circ(a: BElement, c: BElement) -> BElement:
    """(a x_1^{n-1}) o c = a sh^n(c) x_1^n; powers add."""
    return BElement(a.braid * shift(c.braid, a.n), a.n + c.n)


# --- terms over the single generator --------------------------------------


@dataclass(frozen=True)
class LDTerm:
    """Binary dot/circle tree over the generator (the identity braid).

    ``op`` is None for the leaf, "dot" or "circ" for inner nodes.
    """

    op: Union[str, None] = None
    left: Union["LDTerm", None] = None
    right: Union["LDTerm", None] = None

    def __post_init__(self) -> None:
        if self.op is None:
            if self.left is not None or self.right is not None:
                raise ValueError("leaf terms carry no children")
        elif self.op not in ("dot", "circ") or self.left is None or self.right is None:
            raise ValueError("inner terms need op in {dot, circ} and two children")

    def depth(self) -> int:
        if self.op is None:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())

    def __str__(self) -> str:
        if self.op is None:
            return "j"
        symbol = "." if self.op == "dot" else "o"
        return f"({self.left} {symbol} {self.right})"


LEAF = LDTerm()


def dot(s: LDTerm, t: LDTerm) -> LDTerm:
    return LDTerm("dot", s, t)


def circ(s: LDTerm, t: LDTerm) -> LDTerm:
    return LDTerm("circ", s, t)


def eval_term_b(t: LDTerm) -> BElement:
    if t.op is None:
        return BElement(RWord.identity(), 1)
    lhs = eval_term_b(t.left)
    rhs = eval_term_b(t.right)
    return b_dot(lhs, rhs) if t.op == "dot" else b_circ(lhs, rhs)


def eval_term(t: LDTerm) -> RWord:
    """Realize a term as a word in R (braid part followed by x_1 power)."""
    return eval_term_b(t).realize()


def laver_cmp(s: LDTerm, t: LDTerm) -> Cmp:
    """Compare realized terms in the representation order."""
    return cmp_L(eval_term(s), eval_term(t))


def shift_vector(braids: Sequence[RWord]) -> RWord:
    """The interleaved product a_1 sh(a_2) ... sh^{n-1}(a_n)."""
    out = RWord.identity()
    for k, a in enumerate(braids):
        _require_braid(a, "shift_vector")
        out = out * shift(a, k)
    return out


def sigma_on_braids(i: int, braids: Sequence[RWord]) -> tuple[RWord, ...]:
    """Positive-braid action on braid sequences: merge i, i+1 via dot."""
    if not 1 <= i < len(braids):
        raise IndexError(f"position {i} not below sequence length {len(braids)}")
    out = list(braids)
    out[i - 1 : i + 1] = [ld_dot(braids[i - 1], braids[i]), braids[i - 1]]
    return tuple(out)


# --- term grammar ----------------------------------------------------------


class TermParseError(ValueError):
    """Raised on malformed LD-term input; carries the byte offset."""

    def __init__(self, message: str, offset: int, token: str):
        super().__init__(f"{message} (offset {offset}, token {token!r})")
        self.offset = offset
        self.token = token


def _tokenize_term(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append((text[i:j], i))
            i = j
    return tokens


def parse_term(text: str) -> LDTerm:
    """Parse the grammar: term := "j" | "(" term ("."|"o") term ")"."""
    tokens = _tokenize_term(text)
    pos = 0

    def expect_term() -> LDTerm:
        nonlocal pos
        if pos >= len(tokens):
            raise TermParseError("unexpected end of input", len(text), "")
        token, offset = tokens[pos]
        pos += 1
        if token == "j":
            return LEAF
        if token != "(":
            raise TermParseError("expected 'j' or '('", offset, token)
        left = expect_term()
        if pos >= len(tokens):
            raise TermParseError("unexpected end of input", len(text), "")
        op_token, op_offset = tokens[pos]
        pos += 1
        if op_token not in (".", "o"):
            raise TermParseError("expected '.' or 'o'", op_offset, op_token)
        right = expect_term()
        if pos >= len(tokens) or tokens[pos][0] != ")":
            offset = tokens[pos][1] if pos < len(tokens) else len(text)
            token = tokens[pos][0] if pos < len(tokens) else ""
            raise TermParseError("expected ')'", offset, token)
        pos += 1
        return LDTerm("dot" if op_token == "." else "circ", left, right)

    term = expect_term()
    if pos != len(tokens):
        token, offset = tokens[pos]
        raise TermParseError("trailing input after term", offset, token)
    return term


def enumerate_terms(max_depth: int) -> list[LDTerm]:
    """All dot/circle terms of depth at most max_depth."""
    by_depth: list[list[LDTerm]] = [[LEAF]]
    for d in range(1, max_depth + 1):
        shallow = [t for level in by_depth for t in level]
        exact = []
        for op in ("dot", "circ"):
            for left in shallow:
                for right in shallow:
                    if max(left.depth(), right.depth()) == d - 1:
                        exact.append(LDTerm(op, left, right))
        by_depth.append(exact)
    return [t for level in by_depth for t in level]
