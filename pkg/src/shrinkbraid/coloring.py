"""Braid coloring: multi-braid words as morphisms between free groups.

A word on n top strands is processed top to bottom (leftmost letter first).
Strands start colored with the free generators (e_1, ..., e_n); each letter
recolors the current strand configuration:

    s_i:    (g, h) at i, i+1  ->  (g h g^-1, g)
    s_i^-1: (g, h) at i, i+1  ->  (h, h^-1 g h)     (two-sided inverse of s_i)
    x_i:    merge i, i+1 into the single color g h  (strand count drops by 1)

A word ending with m strands induces the morphism F_m -> F_n sending the
k-th generator to the k-th final color; stacking words composes morphisms by
substitution, contravariantly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freegroup import FWord, finv, fmul
from .words import Kind, RWord


class InvalidStrandIndexError(ValueError):
    """A letter addressed a strand pair that does not exist at its height."""


class RankMismatchError(ValueError):
    """Composition of colored morphisms with incompatible ranks."""


@dataclass(frozen=True)
class ColoredMorphism:
    """Images of the source generators as words over the target generators."""

    source_rank: int
    target_rank: int
    images: tuple[FWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source_rank:
            raise ValueError("one image per source generator required")
        for image in self.images:
            if image.max_index() > self.target_rank:
                raise ValueError("image uses generators beyond the target rank")

    def apply(self, w: FWord) -> FWord:
        """Substitute source generators by their images."""
        out = FWord.identity()
        for let in w.letters:
            if let.index > self.source_rank:
                raise ValueError(f"letter index {let.index} beyond source rank")
            image = self.images[let.index - 1]
            out = fmul(out, image if let.sign > 0 else finv(image))
        return out

    @staticmethod
    def identity_on(n: int) -> "ColoredMorphism":
        return ColoredMorphism(n, n, tuple(FWord.generator(k) for k in range(1, n + 1)))


def color(w: RWord, n_top: int) -> ColoredMorphism:
    """Color a multi-braid word starting from n_top strands."""
    if n_top < 1:
        raise ValueError("need at least one strand")
    colors = [FWord.generator(k) for k in range(1, n_top + 1)]
    for g in w.letters:
        i = g.index
        if i + 1 > len(colors):
            raise InvalidStrandIndexError(
                f"letter {g} needs strands {i},{i + 1} but only {len(colors)} remain"
            )
        left, right = colors[i - 1], colors[i]
        if g.kind is Kind.SIGMA:
            colors[i - 1 : i + 1] = [fmul(fmul(left, right), finv(left)), left]
        elif g.kind is Kind.SIGMA_INV:
            colors[i - 1 : i + 1] = [right, fmul(fmul(finv(right), left), right)]
        else:
            colors[i - 1 : i + 1] = [fmul(left, right)]
    return ColoredMorphism(len(colors), n_top, tuple(colors))


def compose_colored(f: ColoredMorphism, g: ColoredMorphism) -> ColoredMorphism:
    """Substitution composite: g's images rewritten through f.

    For stacked words u (on top, colored by f) and v (below, colored by g
    from f's source rank), this equals color(u v, n): contravariance.
    """
    if g.target_rank != f.source_rank:
        raise RankMismatchError(
            f"cannot feed rank-{g.target_rank} images into a rank-{f.source_rank} source"
        )
    return ColoredMorphism(
        g.source_rank, f.target_rank, tuple(f.apply(image) for image in g.images)
    )
