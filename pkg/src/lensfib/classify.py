"""Classification of the Seifert fibrations of a fixed lens space.

Fixing L(p, q) with p >= 1 and an unordered coprime weight pair {m1, m2},
the candidate fibrations come from the four ordered sign choices

    e = (m1, m2),  a = (m1, -m2),  b = (m2, m1),  c = (m2, -m1)

(negating both weights has no effect).  How many of the four are distinct,
and which are isomorphic after reversing orientation, is decided purely by
the residue of q*q modulo p:

  equal weights (m1 = m2 = 1): two distinct fibrations, a reversing pair
      exactly when q*q = -1 (mod p);
  m1 != m2:
      q*q != +-1        -> four distinct;
      q*q = +1 only     -> two distinct (e = b and a = c);
      q*q = -1 only     -> four distinct in two reversing pairs
                           (e = -c and a = -b);
      q*q = +1 and -1   -> two distinct forming one reversing pair
                           (forces p in {1, 2}).

The three pairwise predicates are exposed separately: e vs a is never
oriented-isomorphic and reverses exactly for p in {1, 2} (equal weights:
q*q = -1); e vs b is oriented-isomorphic exactly for equal weights or
q*q = +1, and never reverses; e vs c reverses exactly for q*q = -1 and is
never oriented-isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .construct import Construction, construct_fibration, construct_s2xs1
from .errors import InvalidRangeError, NotCoprimeError, PredictionMismatchError
from .exact_arith import gcd_nonneg
from .pi1 import BaseOrbifold, base_orbifold
from .recognize import LensSpace, lens_equal_oriented
from .seifert import (
    CanonicalForm,
    IsoType,
    SeifertFibration,
    fibration,
    isomorphism_type,
    normalize,
)


class VariantSet(NamedTuple):
    """The four constructions from (m1,m2), (m1,-m2), (m2,m1), (m2,-m1)."""

    e: Construction
    a: Construction
    b: Construction
    c: Construction

    def fibrations(self) -> tuple[SeifertFibration, ...]:
        return tuple(v.fibration for v in self)


def variants(lens: LensSpace, a10: int, a20: int) -> VariantSet:
    return VariantSet(
        e=construct_fibration(lens, a10, a20),
        a=construct_fibration(lens, a10, -a20),
        b=construct_fibration(lens, a20, a10),
        c=construct_fibration(lens, a20, -a10),
    )


class CaseTag(Enum):
    EQUAL_SPLIT = "i-split"
    EQUAL_REVERSING = "i-reversing"
    FOUR_DISTINCT = "ii-1"
    TWO_DISTINCT = "ii-2"
    TWO_REVERSING_PAIRS = "ii-3"
    ONE_REVERSING_PAIR = "ii-4"


@dataclass(frozen=True)
class CasePrediction:
    tag: CaseTag
    class_count: int
    reversing_pair_count: int
    # Pairwise predicates for (e, a), (e, b), (e, c) respectively.
    flip_gives_reversing: bool
    exchange_gives_oriented: bool
    exchange_flip_gives_reversing: bool


def predicted_case(lens: LensSpace, m1: int, m2: int) -> CasePrediction:
    """Class counts and pairwise predicates for the weight pair {m1, m2}."""
    if m1 < 1 or m2 < 1:
        raise InvalidRangeError(f"weights must be >= 1, got ({m1}, {m2})")
    if gcd_nonneg(m1, m2) != 1:
        raise NotCoprimeError(f"gcd({m1}, {m2}) != 1")
    if lens.p < 1:
        raise InvalidRangeError("the census needs p >= 1")

    p, q = lens.p, lens.q
    sq_plus = (q * q - 1) % p == 0
    sq_minus = (q * q + 1) % p == 0
    equal = m1 == m2

    if equal:
        tag = CaseTag.EQUAL_REVERSING if sq_minus else CaseTag.EQUAL_SPLIT
        classes, pairs = 2, (1 if sq_minus else 0)
    elif sq_plus and sq_minus:
        tag, classes, pairs = CaseTag.ONE_REVERSING_PAIR, 2, 1
    elif sq_plus:
        tag, classes, pairs = CaseTag.TWO_DISTINCT, 2, 0
    elif sq_minus:
        tag, classes, pairs = CaseTag.TWO_REVERSING_PAIRS, 4, 2
    else:
        tag, classes, pairs = CaseTag.FOUR_DISTINCT, 4, 0

    return CasePrediction(
        tag=tag,
        class_count=classes,
        reversing_pair_count=pairs,
        flip_gives_reversing=(sq_minus if equal else p in (1, 2)),
        exchange_gives_oriented=(equal or sq_plus),
        exchange_flip_gives_reversing=sq_minus,
    )


class ClassEntry(NamedTuple):
    canonical: CanonicalForm
    weights: tuple[int, int]
    representative: SeifertFibration
    orbifold: BaseOrbifold


@dataclass(frozen=True)
class ClassificationReport:
    lens: LensSpace
    weights: tuple[int, int]
    classes: tuple[ClassEntry, ...]
    reversing_pairs: tuple[tuple[int, int], ...]
    prediction: CasePrediction


def classify_pair(lens: LensSpace, m1: int, m2: int) -> ClassificationReport:
    """Deduplicate the four variant fibrations and verify the prediction.

    A disagreement between the computed classes and the number-theoretic
    prediction would be an implementation bug and raises loudly.
    """
    prediction = predicted_case(lens, m1, m2)
    vs = variants(lens, m1, m2)
    weight_choices = ((m1, m2), (m1, -m2), (m2, m1), (m2, -m1))

    classes: list[ClassEntry] = []
    seen: dict[CanonicalForm, int] = {}
    for built, weights in zip(vs, weight_choices):
        cf = normalize(built.fibration)
        if cf not in seen:
            seen[cf] = len(classes)
            classes.append(
                ClassEntry(cf, weights, built.fibration, base_orbifold(built.fibration))
            )

    reversing = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            t = isomorphism_type(classes[i].representative, classes[j].representative)
            if t in (IsoType.REVERSING, IsoType.BOTH):
                reversing.append((i, j))

    if len(classes) != prediction.class_count:
        raise PredictionMismatchError(
            f"{lens} weights ({m1}, {m2}): found {len(classes)} classes, "
            f"predicted {prediction.class_count}"
        )
    if len(reversing) != prediction.reversing_pair_count:
        raise PredictionMismatchError(
            f"{lens} weights ({m1}, {m2}): found {len(reversing)} reversing "
            f"pairs, predicted {prediction.reversing_pair_count}"
        )
    return ClassificationReport(
        lens, (m1, m2), tuple(classes), tuple(reversing), prediction
    )


def one_singular_list(lens: LensSpace, bound: int) -> list[SeifertFibration]:
    """All fibrations M(0; (a2, p)) with at most one singular fibre and
    0 < |a2| <= bound; a2 must satisfy a2 = q or a2*q = 1 (mod p)."""
    if lens.p < 1:
        raise InvalidRangeError("one-singular-fibre list needs p >= 1")
    if bound < 1:
        raise InvalidRangeError(f"bound must be >= 1, got {bound}")
    p, q = lens.p, lens.q
    out = []
    for a2 in range(-bound, bound + 1):
        if a2 == 0:
            continue
        if (a2 - q) % p == 0 or (a2 * q - 1) % p == 0:
            out.append(fibration(0, (a2, p)))
    return out


def enumerate_fibrations(lens: LensSpace, max_mult: int) -> list[CanonicalForm]:
    """All fibration classes of ``lens`` with multiplicities <= max_mult.

    For p >= 1 this sweeps the weight pairs (positive first weight is
    enough, since negating both weights changes nothing) and keeps the
    constructions whose resulting multiplicities stay within the bound,
    adding the projective-plane fibration for L(4,1) and L(4,3).  For the
    p = 0 space it is the family M(0; (alpha, beta), (alpha, -beta)).
    """
    if max_mult < 1:
        raise InvalidRangeError(f"max_mult must be >= 1, got {max_mult}")
    found: set[CanonicalForm] = set()
    if lens.p == 0:
        # beta beyond [0, alpha) repeats classes, so this range is complete.
        found.add(normalize(construct_s2xs1(1, 0)))
        for alpha in range(2, max_mult + 1):
            for beta in range(1, alpha):
                if gcd_nonneg(alpha, beta) == 1:
                    found.add(normalize(construct_s2xs1(alpha, beta)))
        return sorted(found)

    for m1 in range(1, max_mult + 1):
        for m2 in range(1, max_mult + 1):
            if gcd_nonneg(m1, m2) != 1:
                continue
            for a20 in (m2, -m2):
                fib, trace = construct_fibration(lens, m1, a20)
                if abs(trace.alpha1) <= max_mult and abs(trace.alpha2) <= max_mult:
                    found.add(normalize(fib))
    if lens_equal_oriented(lens, LensSpace(4, 1)):
        found.add(normalize(fibration(-1, (1, 1))))
    elif lens_equal_oriented(lens, LensSpace(4, 3)):
        found.add(normalize(fibration(-1, (1, -1))))
    return sorted(found)
