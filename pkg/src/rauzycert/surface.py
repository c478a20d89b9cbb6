"""The glued surface of a two-row permutation.

The 2n-gon has n top sides ordered by the top row and n bottom sides
ordered by the bottom row; the leftmost and rightmost corners are shared
between the two chains, giving 2n corners in total.  Both copies of each
letter are oriented left to right and glued left-with-left and
right-with-right; corners are identified accordingly and counted with a
union-find.  With E = n sides and one face,

    euler_char = vertex_count - n + 1,    genus = (2 - euler_char) / 2.

A side is closed when its two endpoints land in the same corner class.
Homological nontriviality of a closed side is decided in the CW chain
complex (vertex classes, n side edges, one face whose abelianized boundary
word counts each top traversal +1 and each bottom traversal -1).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .perm import LabeledPermutation, is_irreducible


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class GluedSurface:
    """Corner classes, Euler characteristic and per-side flags of the gluing."""

    corner_classes: tuple[tuple[str, ...], ...]
    vertex_count: int
    euler_char: int
    genus: int
    side_closed: dict[str, bool]
    side_homology_nonzero: dict[str, bool | None]

    def to_json_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "euler_char": self.euler_char,
            "genus": self.genus,
            "sides": {
                letter: {
                    "closed": self.side_closed[letter],
                    "homology_nonzero": self.side_homology_nonzero[letter],
                }
                for letter in sorted(self.side_closed)
            },
        }


def _corner_name(n: int, corner: int) -> str:
    # Corners 0..n run along the top chain (0 and n shared with the bottom);
    # corners n+1..2n-1 are the interior bottom corners b1..b{n-1}.
    return "t%d" % corner if corner <= n else "b%d" % (corner - n)


def glue(p: LabeledPermutation) -> GluedSurface:
    """Glue the 2n-gon of ``p`` and report corner classes, genus and side flags.

    The gluing is defined for reducible permutations too; those only emit a
    warning since the downstream certification steps assume irreducibility.
    """
    if not is_irreducible(p):
        warnings.warn("gluing a reducible permutation: %s" % p.display(), stacklevel=2)
    n = p.n
    uf = _UnionFind(2 * n)

    def bottom_corner(k: int) -> int:
        # k-th corner of the bottom chain, 0 <= k <= n; the ends coincide
        # with the top chain's ends.
        return k if k in (0, n) else n + k

    top_pos = p.top_positions()
    bottom_pos = p.bottom_positions()
    for letter in range(n):
        i, j = top_pos[letter], bottom_pos[letter]
        uf.union(i, bottom_corner(j))  # left endpoints
        uf.union(i + 1, bottom_corner(j + 1))  # right endpoints

    classes: dict[int, list[int]] = {}
    for corner in range(2 * n):
        classes.setdefault(uf.find(corner), []).append(corner)
    vertex_count = len(classes)
    euler_char = vertex_count - n + 1
    assert euler_char % 2 == 0, "gluing always yields an even Euler characteristic"
    genus = (2 - euler_char) // 2

    corner_classes = tuple(
        tuple(_corner_name(n, c) for c in sorted(members))
        for _, members in sorted(classes.items())
    )

    side_closed: dict[str, bool] = {}
    for letter in range(n):
        i = top_pos[letter]
        side_closed[p.alphabet[letter]] = uf.find(i) == uf.find(i + 1)

    relation = _boundary_relation(p)
    side_homology_nonzero: dict[str, bool | None] = {}
    for letter in range(n):
        name = p.alphabet[letter]
        if not side_closed[name]:
            side_homology_nonzero[name] = None
            continue
        # The side's cycle class vanishes only if the basis vector e_letter
        # lies in the rank-<=1 lattice spanned by the boundary relation.
        unit = [1 if k == letter else 0 for k in range(n)]
        neg_unit = [-x for x in unit]
        side_homology_nonzero[name] = relation != unit and relation != neg_unit

    return GluedSurface(
        corner_classes=corner_classes,
        vertex_count=vertex_count,
        euler_char=euler_char,
        genus=genus,
        side_closed=side_closed,
        side_homology_nonzero=side_homology_nonzero,
    )


def _boundary_relation(p: LabeledPermutation) -> list[int]:
    """Abelianized boundary word of the single face: +1 per top traversal,
    -1 per bottom traversal of each side."""
    relation = [0] * p.n
    for letter in p.top:
        relation[letter] += 1
    for letter in p.bottom:
        relation[letter] -= 1
    return relation


def side_homology_nonzero(s: GluedSurface, letter: str) -> bool:
    """Whether the closed side ``letter`` is homologically nontrivial."""
    if letter not in s.side_closed:
        raise KeyError("unknown side %r" % letter)
    if not s.side_closed[letter]:
        raise ValueError("side %r is not closed" % letter)
    flag = s.side_homology_nonzero[letter]
    assert flag is not None
    return flag


def stratum_of_central(n: int) -> str:
    """Stratum label of the component of the central permutation on n letters.

    Even n = 2g lands in H(2g-2), odd n = 2g+1 in H(g-1, g-1); n = 2 is the
    torus boundary case H(0).
    """
    if n < 2:
        raise ValueError("need n >= 2, got %d" % n)
    g, odd = divmod(n, 2)
    if odd:
        return "H(%d,%d)" % (g - 1, g - 1)
    return "H(%d)" % (2 * g - 2)
