"""Shared test utilities: brute-force oracles and random generators."""

from __future__ import annotations

from itertools import permutations

from lensfib import (
    DeleteTrivial,
    FlipSigns,
    InsertTrivial,
    Permute,
    SeifertFibration,
    SeifertPair,
    ShiftBetas,
    apply_move,
    gcd_nonneg,
)


def det_bruteforce(matrix) -> int:
    """Determinant by signed permutation expansion; independent of any
    elimination code under test."""
    n = len(matrix)
    assert all(len(row) == n for row in matrix)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= matrix[i][perm[i]]
        total += prod
    return total


def coprime_pairs(bound: int):
    """All ordered coprime (m1, m2) with 1 <= m1, m2 <= bound."""
    for m1 in range(1, bound + 1):
        for m2 in range(1, bound + 1):
            if gcd_nonneg(m1, m2) == 1:
                yield m1, m2


def lens_parameters(p_max: int):
    """All normalized (p, q) with 1 <= p <= p_max."""
    for p in range(1, p_max + 1):
        for q in range(p == 1 and 0 or 1, p or 1):
            if gcd_nonneg(p, q) == 1:
                yield p, q


def random_pair(rng, alpha_max: int = 9) -> SeifertPair:
    while True:
        alpha = rng.choice([-1, 1]) * rng.randint(1, alpha_max)
        beta = rng.randint(-alpha_max, alpha_max)
        if gcd_nonneg(alpha, beta) == 1:
            return SeifertPair(alpha, beta)


def random_fibration(rng, genus_choices=(0, 0, 0, -1, 1), max_pairs: int = 4):
    genus = rng.choice(genus_choices)
    pairs = tuple(random_pair(rng) for _ in range(rng.randint(0, max_pairs)))
    return SeifertFibration(genus, pairs)


def random_move(rng, f: SeifertFibration, max_pairs: int = 8):
    n = len(f.pairs)
    kinds = []
    if n > 0:
        kinds += ["permute", "shift", "flip"]
    if n < max_pairs:
        kinds.append("insert")
    trivial = [
        i for i, pr in enumerate(f.pairs)
        if pr in (SeifertPair(1, 0), SeifertPair(-1, 0))
    ]
    if trivial:
        kinds.append("delete")
    kind = rng.choice(kinds)
    if kind == "permute":
        order = list(range(n))
        rng.shuffle(order)
        return Permute(tuple(order))
    if kind == "shift":
        offsets = [rng.randint(-3, 3) for _ in range(n - 1)]
        offsets.append(-sum(offsets))
        return ShiftBetas(tuple(offsets))
    if kind == "flip":
        return FlipSigns(rng.randrange(n))
    if kind == "insert":
        return InsertTrivial(rng.randint(0, n))
    return DeleteTrivial(rng.choice(trivial))


def apply_random_moves(rng, f: SeifertFibration, count: int, max_pairs: int = 8):
    for _ in range(count):
        f = apply_move(f, random_move(rng, f, max_pairs))
    return f
