"""Shared test helpers: independent oracles and random-path generators."""

from __future__ import annotations

import random
from fractions import Fraction

from rauzycert.diagram import AllowedPath
from rauzycert.induction import Move, apply_move
from rauzycert.perm import LabeledPermutation, default_alphabet, equal_unlabeled, is_irreducible


def bisect_largest_root(coeffs, lo, hi, tol=Fraction(1, 10**12)):
    """Bracket a root of the integer polynomial (coeffs high power first) by
    exact-rational bisection on [lo, hi]; the polynomial must change sign."""

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * x + c
        return acc

    lo, hi = Fraction(lo), Fraction(hi)
    flo, fhi = value(lo), value(hi)
    assert flo * fhi < 0, "bisection bracket must straddle a sign change"
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = value(mid)
        if fmid == 0:
            return mid, mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo, hi


def random_labeled_permutation(rng: random.Random, n: int) -> LabeledPermutation:
    top = list(range(n))
    bottom = list(range(n))
    rng.shuffle(top)
    rng.shuffle(bottom)
    return LabeledPermutation(default_alphabet(n), tuple(top), tuple(bottom))


def random_irreducible(rng: random.Random, n: int) -> LabeledPermutation:
    while True:
        p = random_labeled_permutation(rng, n)
        if is_irreducible(p):
            return p


def random_allowed_paths(
    rng: random.Random,
    count: int,
    min_n: int = 2,
    max_n: int = 6,
    augmented: bool = True,
    max_walk: int = 300,
) -> list[AllowedPath]:
    """Allowed paths found by random walks that return to an unlabeled-equal
    vertex; components are finite and strongly connected, so walks close fast."""
    paths: list[AllowedPath] = []
    while len(paths) < count:
        start = random_irreducible(rng, rng.randint(min_n, max_n))
        moves: list[Move] = []
        current = start
        for _ in range(max_walk):
            roll = rng.random()
            if augmented and roll < 0.1:
                move = Move.FLIP
            elif roll < 0.55:
                move = Move.TOP
            else:
                move = Move.BOTTOM
            edge = apply_move(current, move)
            moves.append(move)
            current = edge.target
            if equal_unlabeled(start, current):
                paths.append(AllowedPath(start, moves))
                break
    return paths


def all_standard_permutations(n: int):
    """Every labeled permutation with identity top row; irreducibility and
    the unlabeled image only depend on this representative."""
    import itertools

    alphabet = default_alphabet(n)
    for images in itertools.permutations(range(n)):
        yield LabeledPermutation(alphabet, tuple(range(n)), tuple(images))
