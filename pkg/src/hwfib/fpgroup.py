"""Free-group words, finite presentations, and homomorphism checking.

Words are tuples of (generator index, exponent) letters with exponent ±1.
The module provides the cyclically-presented Fibonacci presentations F(r, n),
the subscript-shift automorphism, evaluation of words in a concrete isometry
group, relator verification, and abelianization via the Smith normal form of
the relator exponent matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact import smith_normal_form

__all__ = [
    "Word",
    "Presentation",
    "GenImages",
    "RelatorReport",
    "word",
    "gen",
    "word_inverse",
    "concat",
    "free_reduce",
    "shift",
    "word_to_ints",
    "word_from_ints",
    "fibonacci_presentation",
    "evaluate",
    "verify_relators",
    "relator_matrix",
    "abelianization",
]

# A letter is (generator index, exponent) with exponent +1 or -1; a word is a
# tuple of letters.  Higher powers are spelled out as repeated letters.
Letter = tuple[int, int]
Word = tuple[Letter, ...]


def word(letters: Iterable[Letter]) -> Word:
    out = []
    for idx, exp in letters:
        if idx < 0:
            raise ValueError(f"negative generator index {idx}")
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
        out.append((int(idx), int(exp)))
    return tuple(out)


def gen(i: int, exp: int = 1) -> Word:
    """One-letter word a_i or a_i^(-1)."""
    return word([(i, exp)])


def word_inverse(w: Word) -> Word:
    return tuple((i, -e) for i, e in reversed(w))


def concat(*words: Word) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain; idempotent."""
    stack: list[Letter] = []
    for letter in w:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def shift(w: Word, k: int, modulus: int) -> Word:
    """Apply the automorphism a_i -> a_(i-k) with subscripts mod ``modulus``,
    k times the single shift; exponents are unchanged."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    if any(i >= modulus for i, _ in w):
        raise ValueError("word uses generator indices outside the modulus")
    return tuple(((i - k) % modulus, e) for i, e in w)


def word_to_ints(w: Word) -> list[int]:
    """Wire format: signed integers, ±(i+1) meaning a_i^(±1)."""
    return [e * (i + 1) for i, e in w]


def word_from_ints(values: Sequence[int]) -> Word:
    out = []
    for v in values:
        if v == 0:
            raise ValueError("0 is not a valid letter")
        out.append((abs(v) - 1, 1 if v > 0 else -1))
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator count plus freely reduced relators."""

    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.generator_count < 0:
            raise ValueError("generator count must be nonnegative")
        reduced = tuple(free_reduce(word(r)) for r in self.relators)
        object.__setattr__(self, "relators", reduced)
        for r in reduced:
            for i, _ in r:
                if i >= self.generator_count:
                    raise ValueError(
                        f"relator uses generator {i} but only "
                        f"{self.generator_count} exist"
                    )


def fibonacci_presentation(r: int, n: int) -> Presentation:
    """The Fibonacci presentation F(r, n): n generators a_0..a_(n-1) and the
    n cyclic relators a_i a_(i+1) ... a_(i+r-1) a_(i+r)^(-1), indices mod n."""
    if r < 1 or n < 1:
        raise ValueError(f"F(r, n) needs r >= 1 and n >= 1, got ({r}, {n})")
    relators = []
    for i in range(n):
        letters = [((i + j) % n, 1) for j in range(r)]
        letters.append(((i + r) % n, -1))
        relators.append(tuple(letters))
    return Presentation(n, tuple(relators))


@dataclass(frozen=True)
class GenImages:
    """Images of the generators a_0, a_1, ... in a concrete isometry group."""

    images: tuple

    def __post_init__(self) -> None:
        if not self.images:
            raise ValueError("at least one generator image is required")
        dims = {getattr(img, "dim", 1) for img in self.images}
        if len(dims) != 1:
            raise ValueError(f"images live in different dimensions: {sorted(dims)}")
        object.__setattr__(self, "images", tuple(self.images))

    def __len__(self) -> int:
        return len(self.images)

    @property
    def identity(self):
        return self.images[0].identity_like()


def evaluate(w: Word, imgs: GenImages):
    """Left-to-right product of generator images along the word."""
    acc = imgs.identity
    for i, e in w:
        if not 0 <= i < len(imgs.images):
            raise IndexError(f"generator index {i} has no image")
        img = imgs.images[i]
        acc = acc.compose(img if e > 0 else img.inverse())
    return acc


@dataclass(frozen=True)
class RelatorReport:
    """Outcome of checking every relator of a presentation under an image
    assignment; failures are recorded, not raised."""

    trivial: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.trivial)

    def failures(self) -> list[int]:
        return [i for i, ok in enumerate(self.trivial) if not ok]


def verify_relators(p: Presentation, imgs: GenImages) -> RelatorReport:
    """Check that every relator evaluates to the identity, i.e. that the
    assignment extends to a homomorphism."""
    if len(imgs.images) < p.generator_count:
        raise ValueError(
            f"{p.generator_count} generators but only {len(imgs.images)} images"
        )
    return RelatorReport(
        tuple(evaluate(r, imgs).is_identity() for r in p.relators)
    )


def relator_matrix(p: Presentation) -> list[list[int]]:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    rows = []
    for rel in p.relators:
        row = [0] * p.generator_count
        for i, e in rel:
            row[i] += e
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> tuple[int, ...]:
    """Elementary divisors of the abelianized group, one per generator;
    zeros indicate free rank."""
    divisors = smith_normal_form(relator_matrix(p))
    return divisors + (0,) * (p.generator_count - len(divisors))
