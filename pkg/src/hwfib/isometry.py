"""Affine isometries with diagonal ±1 linear part.

``DiagIsometry`` is an element (B, b) of E(n) whose orthogonal part is a
diagonal sign matrix, stored as a sign vector plus an exact rational
translation.  ``SymIsometry1`` is an element of E(1) whose translation is a
formal linear form, so one-parameter families of one-dimensional groups can
be manipulated symbolically.  Both carry the same semidirect-product law
(A, a)(B, b) = (AB, A b + a); all values are immutable and all operations
pure, so they are safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import ExactNumber, LinForm, format_rational, lf_affine_apply, parse_rational

__all__ = [
    "DiagIsometry",
    "SymIsometry1",
    "compose",
    "inverse",
    "rotational_part",
    "component",
    "direct_sum",
    "apply",
]


def _check_signs(signs: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(s) for s in signs)
    if any(s not in (1, -1) for s in out):
        raise ValueError(f"signs must be +1/-1, got {out}")
    return out


@dataclass(frozen=True)
class DiagIsometry:
    """Exact isometry x -> diag(signs) x + translation of R^n."""

    signs: tuple[int, ...]
    translation: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", _check_signs(self.signs))
        object.__setattr__(
            self,
            "translation",
            tuple(
                t if type(t) is Fraction else Fraction(t) for t in self.translation
            ),
        )
        if len(self.signs) != len(self.translation):
            raise ValueError(
                f"sign vector has length {len(self.signs)} but translation "
                f"has length {len(self.translation)}"
            )

    @property
    def dim(self) -> int:
        return len(self.signs)

    @classmethod
    def identity(cls, dim: int) -> "DiagIsometry":
        return cls((1,) * dim, (Fraction(0),) * dim)

    def identity_like(self) -> "DiagIsometry":
        return DiagIsometry.identity(self.dim)

    def is_identity(self) -> bool:
        return all(s == 1 for s in self.signs) and not any(self.translation)

    def compose(self, other: "DiagIsometry") -> "DiagIsometry":
        """Product self∘other in E(n): (A,a)(B,b) = (AB, A b + a)."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        signs = tuple(s * t for s, t in zip(self.signs, other.signs))
        trans = tuple(
            (b if s > 0 else -b) + a
            for s, b, a in zip(self.signs, other.translation, self.translation)
        )
        return DiagIsometry(signs, trans)

    def inverse(self) -> "DiagIsometry":
        """(A, a)^(-1) = (A, -A a) since A is an involution."""
        trans = tuple(-t if s > 0 else t for s, t in zip(self.signs, self.translation))
        return DiagIsometry(self.signs, trans)

    def apply(self, point: Sequence[ExactNumber]) -> tuple[Fraction, ...]:
        if len(point) != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {len(point)}")
        return tuple(
            s * Fraction(x) + t
            for s, x, t in zip(self.signs, point, self.translation)
        )

    def to_json_dict(self) -> dict:
        return {
            "signs": list(self.signs),
            "translation": [format_rational(t) for t in self.translation],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DiagIsometry":
        return cls(
            tuple(data["signs"]),
            tuple(parse_rational(t) for t in data["translation"]),
        )

    def __str__(self) -> str:
        signs = ",".join("+" if s > 0 else "-" for s in self.signs)
        trans = ",".join(format_rational(t) for t in self.translation)
        return f"(diag({signs}), ({trans}))"


@dataclass(frozen=True)
class SymIsometry1:
    """Element of E(1) with a formal translation: x -> sign*x + translation."""

    sign: int
    translation: LinForm

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def identity(cls) -> "SymIsometry1":
        return cls(1, LinForm.zero())

    def identity_like(self) -> "SymIsometry1":
        return SymIsometry1.identity()

    def is_identity(self) -> bool:
        return self.sign == 1 and self.translation.is_zero()

    def compose(self, other: "SymIsometry1") -> "SymIsometry1":
        return SymIsometry1(
            self.sign * other.sign,
            lf_affine_apply(self.sign, other.translation, self.translation),
        )

    def inverse(self) -> "SymIsometry1":
        return SymIsometry1(self.sign, self.translation.scaled(-self.sign))

    def __str__(self) -> str:
        return f"({'+' if self.sign > 0 else '-'}1, {self.translation})"


# Operation-style aliases; the methods above are the implementation.

def compose(g, h):
    """Exact product g∘h in E(n) (numeric) or E(1) (symbolic)."""
    return g.compose(h)


def inverse(g):
    return g.inverse()


def rotational_part(g: DiagIsometry) -> tuple[int, ...]:
    """Orthogonal part of (B, b), i.e. the sign vector of B."""
    return g.signs


def component(g: DiagIsometry, i: int) -> tuple[int, Fraction]:
    """Restriction of g to coordinate i, as an E(1) pair (sign, translation).

    Taking the i-th component is a group homomorphism: the component of a
    product is the E(1)-product of the components.
    """
    if not 0 <= i < g.dim:
        raise IndexError(f"coordinate index {i} out of range for dimension {g.dim}")
    return g.signs[i], g.translation[i]


def direct_sum(parts: Sequence[tuple[int, ExactNumber]]) -> DiagIsometry:
    """Reassemble an E(n) element from n one-dimensional (sign, translation)
    pairs acting on the coordinate axes; inverse of taking all components."""
    parts = list(parts)
    if not parts:
        raise ValueError("direct_sum needs at least one component")
    return DiagIsometry(
        tuple(s for s, _ in parts),
        tuple(Fraction(t) for _, t in parts),
    )


def apply(g: DiagIsometry, point: Sequence[ExactNumber]) -> tuple[Fraction, ...]:
    """Image B x + b of a rational point under the isometry."""
    return g.apply(point)
