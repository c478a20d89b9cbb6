"""The three moves on labeled permutations and their per-edge matrices.

A top move keeps the top row and reinserts the bottom-last letter (the
loser) immediately to the right of the top-last letter (the winner) in the
bottom row.  A bottom move is the mirror image: the bottom row is kept and
the top-last letter is reinserted right of the bottom-last letter.  The
flip reverses both rows and swaps them; it has no winner or loser.

Top and bottom moves are only defined on irreducible permutations, which
guarantees winner != loser.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import PermutationParseError, ReducibleError
from .linalg import IntMatrix
from .perm import LabeledPermutation, is_irreducible


class Move(enum.Enum):
    TOP = "t"
    BOTTOM = "b"
    FLIP = "f"

    @staticmethod
    def from_letter(letter: str) -> "Move":
        try:
            return Move(letter)
        except ValueError:
            raise PermutationParseError("unknown move %r (expected t, b or f)" % letter) from None


@dataclass(frozen=True)
class EdgeRecord:
    """One move with both endpoints and its winner/loser letters.

    ``winner`` and ``loser`` are letter names; both are None exactly for
    flip edges.
    """

    kind: Move
    source: LabeledPermutation
    target: LabeledPermutation
    winner: str | None
    loser: str | None


def _reinsert_after(row: tuple[int, ...], moved: int, anchor: int) -> tuple[int, ...]:
    out = [x for x in row if x != moved]
    out.insert(out.index(anchor) + 1, moved)
    return tuple(out)


def apply_top(p: LabeledPermutation) -> EdgeRecord:
    """Top move: winner is the last top letter, loser the last bottom letter.

    >>> from .perm import parse
    >>> apply_top(parse("A B C D / D C B A")).target.display()
    'A B C D / D A C B'
    """
    if not is_irreducible(p):
        raise ReducibleError("top move undefined on reducible permutation %s" % p.display())
    winner, loser = p.top[-1], p.bottom[-1]
    target = LabeledPermutation(p.alphabet, p.top, _reinsert_after(p.bottom, loser, winner))
    return EdgeRecord(Move.TOP, p, target, p.alphabet[winner], p.alphabet[loser])


def apply_bottom(p: LabeledPermutation) -> EdgeRecord:
    """Bottom move: winner is the last bottom letter, loser the last top letter.

    >>> from .perm import parse
    >>> apply_bottom(parse("A B C D / D C B A")).target.display()
    'A D B C / D C B A'
    """
    if not is_irreducible(p):
        raise ReducibleError("bottom move undefined on reducible permutation %s" % p.display())
    winner, loser = p.bottom[-1], p.top[-1]
    target = LabeledPermutation(p.alphabet, _reinsert_after(p.top, loser, winner), p.bottom)
    return EdgeRecord(Move.BOTTOM, p, target, p.alphabet[winner], p.alphabet[loser])


def apply_flip(p: LabeledPermutation) -> EdgeRecord:
    """Flip: reverse both rows and swap them.  An involution on all inputs.

    >>> from .perm import parse
    >>> apply_flip(parse("A C B / B A C")).target.display()
    'C A B / B C A'
    """
    target = LabeledPermutation(p.alphabet, tuple(reversed(p.bottom)), tuple(reversed(p.top)))
    return EdgeRecord(Move.FLIP, p, target, None, None)


_APPLY = {Move.TOP: apply_top, Move.BOTTOM: apply_bottom, Move.FLIP: apply_flip}


def apply_move(p: LabeledPermutation, move: Move) -> EdgeRecord:
    return _APPLY[move](p)


def edge_matrix(e: EdgeRecord) -> IntMatrix:
    """Identity plus a single 1 at (winner, loser); the identity for flips.

    Rows and columns follow the alphabet order of the source permutation.
    """
    n = e.source.n
    if e.kind is Move.FLIP:
        return IntMatrix.identity(n)
    index = {letter: i for i, letter in enumerate(e.source.alphabet)}
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[index[e.winner]][index[e.loser]] += 1
    return IntMatrix.from_rows(rows)
