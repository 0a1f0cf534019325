"""Seifert invariants, their equivalence moves, and the canonical form.

A closed Seifert fibred 3-manifold over a base of genus ``g`` (negative for
non-orientable bases, -1 meaning the projective plane) is encoded by the
invariant list ``M(g; (alpha_1, beta_1), ..., (alpha_n, beta_n))`` of coprime
pairs with alpha_i != 0.  Two invariant lists describe isomorphic oriented
fibrations exactly when they are related by the four classical rewrites:
permutation, insertion/deletion of a (1, 0) pair, shifting the betas by
multiples of their alphas with total shift zero, and negating both entries
of a pair.  Replacing every beta by its negative yields the orientation
reversal.

Normalising (all alphas positive, betas reduced into [0, alpha), multiplicity
one pairs folded into a single integer ``b``, pairs sorted) produces a unique
fingerprint per isomorphism class, which is how isomorphism is decided here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import (
    FibrationParseError,
    InapplicableMoveError,
    NotCoprimePairError,
    ZeroAlphaError,
)
from .exact_arith import check_magnitude, gcd_nonneg


class SeifertPair(NamedTuple):
    alpha: int
    beta: int

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta})"


@dataclass(frozen=True)
class SeifertFibration:
    """Invariant list M(genus; (alpha_1,beta_1), ..., (alpha_n,beta_n))."""

    genus: int
    pairs: tuple[SeifertPair, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple(SeifertPair(a, b) for a, b in self.pairs)
        )

    def __str__(self) -> str:
        return unparse(self)


def fibration(genus: int, *pairs: tuple[int, int]) -> SeifertFibration:
    """Convenience constructor: fibration(0, (3, -1), (3, 2))."""
    return SeifertFibration(genus, tuple(SeifertPair(a, b) for a, b in pairs))


class CanonicalForm(NamedTuple):
    """Unique representative of an oriented fibration-isomorphism class.

    Stored pairs satisfy alpha >= 2 and 0 < beta < alpha and are sorted;
    all multiplicity-one contributions are absorbed into ``b``.
    """

    genus: int
    b: int
    pairs: tuple[SeifertPair, ...]

    def expand(self) -> SeifertFibration:
        """An invariant list normalising back to this canonical form."""
        return SeifertFibration(self.genus, self.pairs + (SeifertPair(1, self.b),))


# --- equivalence moves -----------------------------------------------------


@dataclass(frozen=True)
class Permute:
    order: tuple[int, ...]


@dataclass(frozen=True)
class InsertTrivial:
    index: int


@dataclass(frozen=True)
class DeleteTrivial:
    index: int


@dataclass(frozen=True)
class ShiftBetas:
    """Replace each (alpha_i, beta_i) by (alpha_i, beta_i + k_i*alpha_i)."""

    offsets: tuple[int, ...]

    def __post_init__(self):
        if sum(self.offsets) != 0:
            raise InapplicableMoveError(
                f"beta shifts must sum to zero, got {self.offsets}"
            )


@dataclass(frozen=True)
class FlipSigns:
    index: int


Move = Union[Permute, InsertTrivial, DeleteTrivial, ShiftBetas, FlipSigns]


def validate(f: SeifertFibration) -> None:
    """Check the type invariants, raising on the first violation."""
    for i, (alpha, beta) in enumerate(f.pairs):
        if alpha == 0:
            raise ZeroAlphaError(f"pair {i} has alpha = 0")
        if gcd_nonneg(alpha, beta) != 1:
            raise NotCoprimePairError(
                f"pair {i} = ({alpha}, {beta}) is not coprime"
            )
    check_magnitude(f.genus, *(v for pair in f.pairs for v in pair))


def apply_move(f: SeifertFibration, move: Move) -> SeifertFibration:
    """Rewrite the invariant list; the total space is unchanged."""
    pairs = f.pairs
    n = len(pairs)
    if isinstance(move, Permute):
        if sorted(move.order) != list(range(n)):
            raise InapplicableMoveError(
                f"{move.order} is not a permutation of 0..{n - 1}"
            )
        new = tuple(pairs[j] for j in move.order)
    elif isinstance(move, InsertTrivial):
        if not 0 <= move.index <= n:
            raise InapplicableMoveError(f"insertion index {move.index} out of range")
        new = pairs[: move.index] + (SeifertPair(1, 0),) + pairs[move.index :]
    elif isinstance(move, DeleteTrivial):
        if not 0 <= move.index < n:
            raise InapplicableMoveError(f"deletion index {move.index} out of range")
        if pairs[move.index] not in (SeifertPair(1, 0), SeifertPair(-1, 0)):
            raise InapplicableMoveError(
                f"pair {pairs[move.index]} is not (1, 0) up to sign"
            )
        new = pairs[: move.index] + pairs[move.index + 1 :]
    elif isinstance(move, ShiftBetas):
        if len(move.offsets) != n:
            raise InapplicableMoveError(
                f"expected {n} beta shifts, got {len(move.offsets)}"
            )
        new = tuple(
            SeifertPair(a, b + k * a) for (a, b), k in zip(pairs, move.offsets)
        )
    elif isinstance(move, FlipSigns):
        if not 0 <= move.index < n:
            raise InapplicableMoveError(f"flip index {move.index} out of range")
        a, b = pairs[move.index]
        new = pairs[: move.index] + (SeifertPair(-a, -b),) + pairs[move.index + 1 :]
    else:
        raise InapplicableMoveError(f"unknown move {move!r}")
    return SeifertFibration(f.genus, new)


def normalize(f: SeifertFibration) -> CanonicalForm:
    """Deterministic, idempotent canonical form under the equivalence moves.

    Signs are flipped so every alpha is positive, each beta is reduced
    modulo its alpha with the quotients accumulated into ``b``, pairs of
    multiplicity one are dropped, and the remainder is sorted.
    """
    validate(f)
    b = 0
    kept = []
    for alpha, beta in f.pairs:
        if alpha < 0:
            alpha, beta = -alpha, -beta
        q, r = divmod(beta, alpha)
        b += q
        if alpha > 1:
            kept.append(SeifertPair(alpha, r))
    kept.sort()
    return CanonicalForm(f.genus, b, tuple(kept))


def reverse_orientation(f: SeifertFibration) -> SeifertFibration:
    """The same fibration on the oppositely oriented total space."""
    return SeifertFibration(f.genus, tuple(SeifertPair(a, -b) for a, b in f.pairs))


def euler_number(f: SeifertFibration) -> Fraction:
    """-sum(beta_i / alpha_i), a move-invariant rational."""
    validate(f)
    total = Fraction(0)
    for alpha, beta in f.pairs:
        total += Fraction(beta, alpha)
    return -total


class IsoType(Enum):
    ORIENTED = "oriented"
    REVERSING = "reversing"
    BOTH = "both"
    NONE = "none"


def isomorphism_type(f1: SeifertFibration, f2: SeifertFibration) -> IsoType:
    """How f1 and f2 compare as fibrations of oriented manifolds."""
    c1 = normalize(f1)
    oriented = c1 == normalize(f2)
    reversing = c1 == normalize(reverse_orientation(f2))
    if oriented and reversing:
        return IsoType.BOTH
    if oriented:
        return IsoType.ORIENTED
    if reversing:
        return IsoType.REVERSING
    return IsoType.NONE


# --- text form -------------------------------------------------------------
#
#   fibration := "M(" integer ";" [ pair { "," pair } ] ")"
#   pair      := "(" integer "," integer ")"
#
# Whitespace is ignored everywhere; the canonical text uses none.

_INT_RE = re.compile(r"-?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise FibrationParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        m = _INT_RE.match(self.text, self.pos)
        if m is None:
            raise FibrationParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise FibrationParseError("trailing input", self.pos)


def parse(text: str) -> SeifertFibration:
    """Parse invariant-list text such as ``M(0;(35,-2),(14,1))``."""
    s = _Scanner(text)
    s.expect("M")
    s.expect("(")
    genus = s.integer()
    s.expect(";")
    pairs = []
    if not s.peek(")"):
        while True:
            s.expect("(")
            alpha = s.integer()
            s.expect(",")
            beta = s.integer()
            s.expect(")")
            pairs.append(SeifertPair(alpha, beta))
            if not s.peek(","):
                break
            s.expect(",")
    s.expect(")")
    s.end()
    return SeifertFibration(genus, tuple(pairs))


def unparse(f: SeifertFibration) -> str:
    """Canonical text form: no whitespace, pairs in stored order."""
    body = ",".join(f"({a},{b})" for a, b in f.pairs)
    return f"M({f.genus};{body})"
