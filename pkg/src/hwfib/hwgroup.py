"""Hantzsche-Wendt candidate groups in the standard diagonal form.

A candidate in dimension n (odd) is the group generated by n-1 isometries
whose linear parts are the standard sign matrices (+1 at exactly one
coordinate, -1 elsewhere) and whose translations are half-integer vectors.
This module classifies such candidates: holonomy closure, translation
lattice via Schreier generators, crystallographic and torsion-freeness
tests, and enumeration of the whole half-integer search space.

Internally translations are handled in "half units" (twice their value), so
the heavy per-candidate work runs in plain integer arithmetic; the public
surface is exact rationals throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Optional, Sequence

from .exact import ExactNumber, format_rational, hermite_normal_form, parse_rational
from .isometry import DiagIsometry

__all__ = [
    "HWCandidate",
    "Lattice",
    "HolonomyTable",
    "Classification",
    "build_candidate",
    "cyclic_hw",
    "holonomy",
    "translation_lattice",
    "is_crystallographic",
    "is_torsion_free",
    "torsion_oracle",
    "is_hantzsche_wendt",
    "classify",
    "enumerate_candidates",
    "candidate_count",
    "candidate_from_index",
    "candidate_to_json_dict",
    "candidate_from_json_dict",
]

HALF = Fraction(1, 2)


def standard_signs(n: int, i: int) -> tuple[int, ...]:
    """Sign vector of the i-th standard generator: +1 at coordinate i only."""
    return tuple(1 if j == i else -1 for j in range(n))


@dataclass(frozen=True)
class HWCandidate:
    """Generator data for a candidate group: dimension plus the n-1
    half-integer translations attached to the standard sign matrices."""

    dim: int
    generators: tuple[DiagIsometry, ...]

    def __post_init__(self) -> None:
        n = self.dim
        if n % 2 == 0 or n < 3:
            raise ValueError(
                f"dimension must be odd and >= 3 (Hantzsche-Wendt groups exist "
                f"only in odd dimensions); got {n}"
            )
        if len(self.generators) != n - 1:
            raise ValueError(f"expected {n - 1} generators, got {len(self.generators)}")
        for i, g in enumerate(self.generators):
            if g.signs != standard_signs(n, i):
                raise ValueError(f"generator {i} does not carry the standard sign pattern")
            for t in g.translation:
                if t.denominator not in (1, 2):
                    raise ValueError(
                        f"generator {i} translation entry {t} is not a half-integer"
                    )

    @property
    def translations(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(g.translation for g in self.generators)


def build_candidate(
    n: int, translations: Sequence[Sequence[ExactNumber]]
) -> HWCandidate:
    """Candidate with the standard sign patterns and the given half-integer
    translations (one vector of length n per generator)."""
    gens = []
    for i, t in enumerate(translations):
        if len(t) != n:
            raise ValueError(f"translation {i} has length {len(t)}, expected {n}")
        gens.append(DiagIsometry(standard_signs(n, i), tuple(Fraction(x) for x in t)))
    return HWCandidate(n, tuple(gens))


def cyclic_hw(n: int) -> HWCandidate:
    """The classical cyclic family: generator i translates by (e_i + e_(i+1))/2."""
    translations = []
    for i in range(n - 1):
        vec = [Fraction(0)] * n
        vec[i] = HALF
        vec[i + 1] = HALF
        translations.append(tuple(vec))
    return build_candidate(n, translations)


# ---------------------------------------------------------------------------
# sign-vector structure, shared by every candidate of a given dimension

@dataclass(frozen=True)
class _SignStructure:
    order: tuple[tuple[int, ...], ...]  # BFS discovery order, identity first
    index: dict
    tree: tuple  # position -> (parent position, generator index); None at 0
    gen_signs: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _sign_structure(n: int) -> _SignStructure:
    gens = tuple(standard_signs(n, i) for i in range(n - 1))
    identity = (1,) * n
    order = [identity]
    index = {identity: 0}
    tree: list = [None]
    head = 0
    while head < len(order):
        base = order[head]
        for j, gs in enumerate(gens):
            prod = tuple(a * b for a, b in zip(base, gs))
            if prod not in index:
                index[prod] = len(order)
                order.append(prod)
                tree.append((head, j))
        head += 1
    return _SignStructure(tuple(order), index, tuple(tree), gens)


def _generator_units(c: HWCandidate) -> tuple[tuple[int, ...], ...]:
    # translations in half units: integer vector u with value u/2
    return tuple(
        tuple(int(t * 2) for t in g.translation) for g in c.generators
    )


def _rep_units_raw(
    struct: _SignStructure, gens: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """Representative translations (half units) for every holonomy class,
    indexed in BFS discovery order."""
    dim = len(struct.order[0])
    units: list[tuple[int, ...]] = [(0,) * dim]
    for pos in range(1, len(struct.order)):
        parent, j = struct.tree[pos]
        psigns = struct.order[parent]
        units.append(
            tuple(s * b + t for s, b, t in zip(psigns, gens[j], units[parent]))
        )
    return tuple(units)


@lru_cache(maxsize=256)
def _rep_units(c: HWCandidate) -> tuple[tuple[int, ...], ...]:
    return _rep_units_raw(_sign_structure(c.dim), _generator_units(c))


@dataclass(frozen=True)
class HolonomyTable:
    """One representative group element per holonomy sign-vector, in the
    order breadth-first closure discovered them."""

    entries: tuple[tuple[tuple[int, ...], DiagIsometry], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def sign_vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(signs for signs, _ in self.entries)

    def representative(self, signs: tuple[int, ...]) -> DiagIsometry:
        for s, rep in self.entries:
            if s == signs:
                return rep
        raise KeyError(f"sign vector {signs} not in holonomy group")


def holonomy(c: HWCandidate) -> HolonomyTable:
    """Breadth-first closure of the generators' rotational parts, keeping the
    first representative found for each sign vector; always 2^(n-1) entries."""
    struct = _sign_structure(c.dim)
    units = _rep_units(c)
    entries = tuple(
        (signs, DiagIsometry(signs, tuple(Fraction(u, 2) for u in vec)))
        for signs, vec in zip(struct.order, units)
    )
    return HolonomyTable(entries)


# ---------------------------------------------------------------------------
# translation lattice

@dataclass(frozen=True)
class Lattice:
    """Lattice of rational vectors: canonical-HNF integer basis rows divided
    by one global denominator.  Canonicity makes equality structural."""

    dim: int
    den: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(v, self.den) for v in row) for row in self.basis
        )

    @classmethod
    def from_scaled(cls, dim: int, rows: Sequence[Sequence[int]], den: int) -> "Lattice":
        h, rank = hermite_normal_form(list(rows))
        basis = [row for row in h[:rank]]
        g = den
        for row in basis:
            for v in row:
                g = gcd(g, v)
        if g > 1:
            den //= g
            basis = [[v // g for v in row] for row in basis]
        return cls(dim, den, tuple(tuple(row) for row in basis))

    @classmethod
    def from_vectors(
        cls, dim: int, vectors: Sequence[Sequence[ExactNumber]]
    ) -> "Lattice":
        fracs = [[Fraction(v) for v in vec] for vec in vectors]
        den = 1
        for vec in fracs:
            for v in vec:
                den = den * v.denominator // gcd(den, v.denominator)
        rows = [[int(v * den) for v in vec] for vec in fracs]
        return cls.from_scaled(dim, rows, den)

    def scaled_basis(self, den: int) -> list[list[int]]:
        """Basis rows rescaled so vectors are rows/den; den must be a
        multiple of the stored denominator."""
        if den % self.den:
            raise ValueError(f"{den} is not a multiple of the lattice denominator {self.den}")
        f = den // self.den
        return [[v * f for v in row] for row in self.basis]

    def contains(self, vec: Sequence[ExactNumber]) -> bool:
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        scaled = []
        for v in vec:
            q = Fraction(v) * self.den
            if q.denominator != 1:
                return False
            scaled.append(q.numerator)
        return _in_hnf_span(self.basis, scaled)

    def reduce(self, vec: Sequence[ExactNumber]) -> tuple[Fraction, ...]:
        """Canonical representative of vec modulo the lattice, inside the
        fundamental cell of the HNF basis; requires full rank."""
        if self.rank != self.dim:
            raise ValueError("reduction needs a full-rank lattice")
        v = [Fraction(x) for x in vec]
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x)
            q = v[p] * self.den // row[p]  # floor of the basis coordinate
            if q:
                v = [a - q * Fraction(b, self.den) for a, b in zip(v, row)]
        return tuple(v)


def _in_hnf_span(hnf_rows: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Membership of an integer vector in the row lattice given by nonzero
    HNF rows."""
    pivots = {}
    for row in hnf_rows:
        for j, x in enumerate(row):
            if x:
                pivots[j] = row
                break
    v = list(vec)
    for j in range(len(v)):
        if v[j] == 0:
            continue
        row = pivots.get(j)
        if row is None:
            return False
        q, r = divmod(v[j], row[j])
        if r:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return True


def _reduce_units(hnf_rows: Sequence[Sequence[int]], vec: Sequence[int]) -> list[int]:
    """Reduce an integer vector into the fundamental cell of an HNF basis
    (all in the same units); coordinates without a pivot are left alone."""
    v = list(vec)
    for row in hnf_rows:
        p = next(j for j, x in enumerate(row) if x)
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def _schreier_lattice(
    struct: _SignStructure,
    units: tuple[tuple[int, ...], ...],
    gens: tuple[tuple[int, ...], ...],
    dim: int,
) -> Lattice:
    vectors = set()
    for pos, signs in enumerate(struct.order):
        t = units[pos]
        for j, gsigns in enumerate(struct.gen_signs):
            prod = tuple(a * b for a, b in zip(signs, gsigns))
            q = struct.index[prod]
            target = units[q]
            vec = tuple(
                s * b + a - r for s, b, a, r in zip(signs, gens[j], t, target)
            )
            if any(vec):
                vectors.add(vec)
    return Lattice.from_scaled(dim, sorted(vectors), 2)


@lru_cache(maxsize=256)
def translation_lattice(c: HWCandidate) -> Lattice:
    """Lattice of pure translations, generated by the Schreier generators of
    the kernel of the holonomy projection: for every holonomy representative
    t and generator g, the pure translation t g rep(tg)^(-1)."""
    return _schreier_lattice(
        _sign_structure(c.dim), _rep_units(c), _generator_units(c), c.dim
    )


def is_crystallographic(c: HWCandidate) -> bool:
    """True when the pure translations span all of R^n, i.e. the group is
    discrete and cocompact."""
    return translation_lattice(c).rank == c.dim


# ---------------------------------------------------------------------------
# torsion

def _torsion_classes(struct, units, lat: Lattice):
    rows2 = lat.scaled_basis(2)  # half units, like the representatives
    classes = []
    for pos in range(1, len(struct.order)):
        signs = struct.order[pos]
        fixed = [j for j, s in enumerate(signs) if s == 1]
        reduced = _reduce_units(rows2, units[pos])
        classes.append((signs, fixed, reduced))
    return rows2, classes


def _torsion_class_data(c: HWCandidate):
    return _torsion_classes(_sign_structure(c.dim), _rep_units(c), translation_lattice(c))


def _torsion_exists(struct, units, lat: Lattice) -> bool:
    """Fixed-point torsion criterion, valid for any candidate.

    An element (A, a + λ) with λ in the translation lattice has a fixed
    point (and then order two, since A is an involution) exactly when λ
    matches -a on every coordinate the sign vector A fixes.  Each holonomy
    class therefore needs one lattice-membership test of -a restricted to
    the fixed coordinates; Schreier generation of the lattice works at any
    rank, so this does not require the candidate to be crystallographic.
    """
    rows2, classes = _torsion_classes(struct, units, lat)
    for _, fixed, reduced in classes:
        proj = [[row[j] for j in fixed] for row in rows2]
        target = [-reduced[j] for j in fixed]
        h, rank = hermite_normal_form(proj)
        if _in_hnf_span(h[:rank], target):
            return True
    return False


def _has_torsion(c: HWCandidate) -> bool:
    return _torsion_exists(_sign_structure(c.dim), _rep_units(c), translation_lattice(c))


def _require_crystallographic(c: HWCandidate) -> None:
    rank = translation_lattice(c).rank
    if rank != c.dim:
        raise ValueError(
            "torsion test requires a crystallographic candidate "
            f"(translation lattice has rank {rank} < {c.dim})"
        )


def is_torsion_free(c: HWCandidate) -> bool:
    """No non-identity holonomy class contains a finite-order element;
    defined for crystallographic candidates."""
    _require_crystallographic(c)
    return not _has_torsion(c)


def torsion_oracle(c: HWCandidate) -> bool:
    """Independent brute-force torsion test: per holonomy class, search for
    a fixed point of (A, a + λ) over lattice vectors λ whose basis
    coefficients lie in [-2, 2].  The representative a is first reduced into
    the fundamental HNF cell, which is what justifies the coefficient bound.
    Intended for n <= 5; must agree with is_torsion_free.
    """
    _require_crystallographic(c)
    rows2, classes = _torsion_class_data(c)
    nrows = len(rows2)
    span = range(-2, 3)
    for _, fixed, reduced in classes:
        proj = [tuple(row[j] for j in fixed) for row in rows2]
        target = tuple(-reduced[j] for j in fixed)
        # meet-in-the-middle over the coefficient box
        half = nrows // 2
        left, right = proj[:half], proj[half:]
        left_sums = set()
        for coeffs in product(span, repeat=len(left)):
            s = tuple(
                sum(cf * row[i] for cf, row in zip(coeffs, left))
                for i in range(len(fixed))
            )
            left_sums.add(s)
        found = False
        for coeffs in product(span, repeat=len(right)):
            s = tuple(
                sum(cf * row[i] for cf, row in zip(coeffs, right))
                for i in range(len(fixed))
            )
            need = tuple(t - x for t, x in zip(target, s))
            if need in left_sums:
                found = True
                break
        if found:
            return False
    return True


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Classification:
    crystallographic: bool
    torsion_free: bool
    holonomy_order: int
    orientation_preserving: bool
    hantzsche_wendt: bool

    def to_json_dict(self) -> dict:
        return {
            "crystallographic": self.crystallographic,
            "torsion_free": self.torsion_free,
            "holonomy_order": self.holonomy_order,
            "orientation_preserving": self.orientation_preserving,
            "hantzsche_wendt": self.hantzsche_wendt,
        }


def classify(c: HWCandidate) -> Classification:
    # one linear pass (no cache round trips): survey throughput matters here
    struct = _sign_structure(c.dim)
    gens = _generator_units(c)
    units = _rep_units_raw(struct, gens)
    lat = _schreier_lattice(struct, units, gens, c.dim)
    order = len(struct.order)
    orientation = all(
        sum(1 for s in signs if s == -1) % 2 == 0 for signs in struct.order
    )
    cryst = lat.rank == c.dim
    torsion_free = not _torsion_exists(struct, units, lat)
    hw = cryst and torsion_free and order == 2 ** (c.dim - 1) and orientation
    return Classification(cryst, torsion_free, order, orientation, hw)


def is_hantzsche_wendt(c: HWCandidate) -> bool:
    """Crystallographic, torsion-free, full holonomy order 2^(n-1), and every
    holonomy matrix of determinant +1."""
    return classify(c).hantzsche_wendt


# ---------------------------------------------------------------------------
# enumeration

def candidate_count(n: int) -> int:
    """Size of the search space: entries in {0, 1/2}, n per generator."""
    return 2 ** (n * (n - 1))


def candidate_from_index(n: int, idx: int) -> HWCandidate:
    """Bit i*n+j of idx decides whether generator i translates by 1/2 along
    coordinate j; indices enumerate the whole space deterministically."""
    if not 0 <= idx < candidate_count(n):
        raise ValueError(f"index {idx} out of range for dimension {n}")
    translations = []
    for i in range(n - 1):
        translations.append(
            tuple(HALF if (idx >> (i * n + j)) & 1 else Fraction(0) for j in range(n))
        )
    return build_candidate(n, translations)


def enumerate_candidates(
    n: int, sample: Optional[int] = None, seed: Optional[int] = None
) -> Iterator[HWCandidate]:
    """All candidates with translation entries in {0, 1/2}, in index order; or,
    when ``sample`` is given, that many uniform draws from the same space
    (seeded, with replacement)."""
    total = candidate_count(n)
    if sample is None:
        for idx in range(total):
            yield candidate_from_index(n, idx)
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            yield candidate_from_index(n, rng.randrange(total))


# ---------------------------------------------------------------------------
# JSON wire format

def candidate_to_json_dict(c: HWCandidate) -> dict:
    return {
        "dim": c.dim,
        "translations": [
            [format_rational(t) for t in vec] for vec in c.translations
        ],
    }


def candidate_from_json_dict(data: dict) -> HWCandidate:
    try:
        dim = int(data["dim"])
        translations = [
            [parse_rational(str(t)) for t in vec] for vec in data["translations"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed candidate description: {exc}") from exc
    return build_candidate(dim, translations)
