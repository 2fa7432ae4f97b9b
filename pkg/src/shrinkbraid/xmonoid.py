"""The submonoid X_oo generated by the merge letters x_i.

X_oo has the single relation family x_i x_j = x_{j+1} x_i (j >= i).  Every
element has a unique canonical form with weakly increasing indices.  The
invariant S(y) = (n_1, n_2, ...) lists the fiber sizes of the monotone
function p(y), where p(x_i) maps j to j for j <= i and to j - 1 for j > i;
all entries are eventually 1 and only the prefix up to the last non-1 entry
is stored.  For the canonical word of y, n_j = 1 + (multiplicity of j).

Functions compose in word order: the leftmost letter acts first, which is the
convention under which S is a homomorphism onto sequence composition
(``seq_compose``).  The quotient R' of R by s_i^2 = e is represented only
through ``sf_eval`` (s_i acts as the transposition of i and i+1).
"""

from __future__ import annotations

from .freegroup import Cmp
from .words import Kind, RWord, x


class XWord:
    """A word x_{i_1} ... x_{i_m}, stored as its index sequence."""

    __slots__ = ("indices",)

    def __init__(self, indices: tuple[int, ...] = ()):
        if any(i < 1 for i in indices):
            raise ValueError("x indices must be >= 1")
        self.indices = tuple(indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, XWord) and self.indices == other.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def __mul__(self, other: "XWord") -> "XWord":
        return XWord(self.indices + other.indices)

    def __repr__(self) -> str:
        return f"XWord({self.indices!r})"

    def __str__(self) -> str:
        return " ".join(f"x{i}" for i in self.indices)

    def is_canonical(self) -> bool:
        return all(a <= b for a, b in zip(self.indices, self.indices[1:]))

    def to_rword(self) -> RWord:
        return RWord(x(i) for i in self.indices)

    @staticmethod
    def from_rword(w: RWord) -> "XWord":
        if not all(g.kind is Kind.X for g in w.letters):
            raise ValueError("word contains non-x letters")
        return XWord(tuple(g.index for g in w.letters))


def x_canonicalize(w: XWord) -> XWord:
    """The unique weakly increasing form of the same X_oo element.

    An adjacent descent (a, b) with a > b is the right side of the defining
    relation and rewrites to (b, a - 1).  The index sum drops each step, so
    the loop terminates; uniqueness holds regardless of application order.
    """
    seq = list(w.indices)
    i = 0
    while i < len(seq) - 1:
        a, b = seq[i], seq[i + 1]
        if a > b:
            seq[i], seq[i + 1] = b, a - 1
            if i > 0:
                i -= 1
        else:
            i += 1
    return XWord(tuple(seq))


class XSeq:
    """Eventually-1 sequence of positive integers, trailing 1s trimmed."""

    __slots__ = ("prefix",)

    def __init__(self, prefix: tuple[int, ...] = ()):
        if any(n < 1 for n in prefix):
            raise ValueError("sequence entries must be >= 1")
        trimmed = list(prefix)
        while trimmed and trimmed[-1] == 1:
            trimmed.pop()
        self.prefix = tuple(trimmed)

    def entry(self, k: int) -> int:
        """1-based access; entries beyond the prefix equal 1."""
        return self.prefix[k - 1] if 1 <= k <= len(self.prefix) else 1

    def weight(self) -> int:
        """Sum of (entry - 1); equals the canonical word length."""
        return sum(n - 1 for n in self.prefix)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, XSeq) and self.prefix == other.prefix

    def __hash__(self) -> int:
        return hash(self.prefix)

    def __repr__(self) -> str:
        return f"XSeq({self.prefix!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.prefix) + ")"


def s_of(w: XWord) -> XSeq:
    """The fiber-size sequence of p(w), read off the canonical form."""
    canon = x_canonicalize(w)
    if not canon.indices:
        return XSeq(())
    top = canon.indices[-1]
    counts = [1] * top
    for i in canon.indices:
        counts[i - 1] += 1
    return XSeq(tuple(counts))


def seq_compose(m: XSeq, n: XSeq) -> XSeq:
    """Blockwise composition: k-th output sums m over the k-th block of n.

    Block lengths are the entries of n (the partial sums partition the
    positive integers).  Matches s_of on products: s_of(u v) =
    seq_compose(s_of(u), s_of(v)) with u the left factor.
    """
    blocks = max(len(n.prefix), len(m.prefix), 1)
    # Past the prefix of n, blocks are singletons; one extra block suffices
    # to cover the remainder of m's prefix.
    while sum(n.entry(k) for k in range(1, blocks + 1)) < len(m.prefix):
        blocks += 1
    out = []
    pos = 1
    for k in range(1, blocks + 1):
        width = n.entry(k)
        out.append(sum(m.entry(pos + t) for t in range(width)))
        pos += width
    return XSeq(tuple(out))


def lex_cmp(c: XWord, d: XWord) -> Cmp:
    """Order X_oo elements by their S-sequences, padded with 1s.

    Oriented to agree with the representation order ``cmp_L``: the word with
    the lexicographically SMALLER sequence is the GREATER element (x_2 > x_1,
    and every x-word sorts below the identity there).
    """
    sc, sd = s_of(c), s_of(d)
    if sc == sd:
        return Cmp.EQUAL
    for k in range(1, max(len(sc.prefix), len(sd.prefix)) + 1):
        a, b = sc.entry(k), sd.entry(k)
        if a != b:
            return Cmp.GREATER if a < b else Cmp.LESS
    return Cmp.EQUAL


def p_eval(w: XWord, k: int) -> int:
    """Value at k of the composed monotone function p(w), leftmost first."""
    if k < 1:
        raise ValueError("argument must be >= 1")
    for i in w.indices:
        if k > i:
            k -= 1
    return k


def sf_eval(w: RWord, k: int) -> int:
    """Value at k of the R' representation: s_i^{+-1} swaps i and i+1."""
    if k < 1:
        raise ValueError("argument must be >= 1")
    for g in w.letters:
        i = g.index
        if g.kind is Kind.X:
            if k > i:
                k -= 1
        else:
            if k == i:
                k = i + 1
            elif k == i + 1:
                k = i
    return k
