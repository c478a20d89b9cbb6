"""Connected components of the (augmented) move diagram, and move paths.

``explore`` closes a seed permutation under the top and bottom moves (plus
the flip when augmented) by breadth-first search with a fixed child order
t, b, f; vertex numbering is therefore reproducible across runs.

A path is a start permutation plus a sequence of moves in execution order.
It is *allowed* when its endpoints define the same unlabeled permutation;
only allowed paths induce a mapping class and a path matrix.  Move words
are written over {t, b, f} with an optional ^k repeat, and are read
right-to-left by default ("ftb" applies b, then t, then f); pass
``reading="ltr"`` for left-to-right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EnumerationCapError, PermutationParseError, ReducibleError
from .induction import EdgeRecord, Move, apply_move
from .perm import LabeledPermutation, equal_unlabeled, is_irreducible, unlabeled

DEFAULT_CAP = 10**6


@dataclass
class RauzyDiagram:
    """A component: vertices in BFS order and outgoing edges per vertex."""

    vertices: tuple[LabeledPermutation, ...]
    edges: tuple[tuple[EdgeRecord, ...], ...]
    augmented: bool
    _index: dict[str, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self._index:
            self._index = {v.display(): i for i, v in enumerate(self.vertices)}

    def vertex_index(self, p: LabeledPermutation) -> int:
        return self._index[p.display()]

    def __contains__(self, p: LabeledPermutation) -> bool:
        return p.display() in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def successor(self, index: int, move: Move) -> int:
        """Index of the target of the given move from vertex ``index``."""
        for edge in self.edges[index]:
            if edge.kind is move:
                return self.vertex_index(edge.target)
        raise KeyError("vertex %d has no %s edge" % (index, move.value))

    def to_json_dict(self) -> dict:
        edge_list = []
        for i, out in enumerate(self.edges):
            for edge in out:
                edge_list.append(
                    {
                        "src": i,
                        "dst": self.vertex_index(edge.target),
                        "kind": edge.kind.value,
                        "winner": edge.winner,
                        "loser": edge.loser,
                    }
                )
        return {
            "augmented": self.augmented,
            "vertices": [v.to_json_dict() for v in self.vertices],
            "edges": edge_list,
        }


def explore(
    seed: LabeledPermutation, augmented: bool = False, cap: int = DEFAULT_CAP
) -> RauzyDiagram:
    """Breadth-first closure of ``seed`` under the moves.

    Raises ReducibleError for a reducible seed and EnumerationCapError when
    the component exceeds ``cap`` vertices.
    """
    if not is_irreducible(seed):
        raise ReducibleError("cannot explore from reducible seed %s" % seed.display())
    moves = (Move.TOP, Move.BOTTOM, Move.FLIP) if augmented else (Move.TOP, Move.BOTTOM)
    vertices: list[LabeledPermutation] = [seed]
    index: dict[str, int] = {seed.display(): 0}
    out_edges: list[tuple[EdgeRecord, ...]] = []
    frontier = 0
    while frontier < len(vertices):
        current = vertices[frontier]
        edges = tuple(apply_move(current, move) for move in moves)
        out_edges.append(edges)
        for edge in edges:
            key = edge.target.display()
            if key not in index:
                if len(vertices) >= cap:
                    raise EnumerationCapError(
                        "component exceeds the %d-vertex cap from %s" % (cap, seed.display())
                    )
                index[key] = len(vertices)
                vertices.append(edge.target)
        frontier += 1
    return RauzyDiagram(tuple(vertices), tuple(out_edges), augmented, index)


def injectivity_check(d: RauzyDiagram) -> bool:
    """No two distinct vertices define the same unlabeled permutation."""
    seen = {unlabeled(v).images for v in d.vertices}
    return len(seen) == len(d.vertices)


_TOKEN_RE = re.compile(r"([tbf])(?:\^(\d+))?|(\S)")


def parse_move_word(word: str) -> tuple[Move, ...]:
    """Parse a move word like ``"ftb^3"`` into moves in written order."""
    moves: list[Move] = []
    for match in _TOKEN_RE.finditer(word):
        letter, repeat, bad = match.groups()
        if bad is not None:
            raise PermutationParseError("unexpected %r in move word %r" % (bad, word))
        count = int(repeat) if repeat else 1
        if repeat and count < 1:
            raise PermutationParseError("repeat must be >= 1 in move word %r" % word)
        moves.extend([Move(letter)] * count)
    return tuple(moves)


class AllowedPath:
    """A start permutation plus moves in execution order, with derived edges.

    The edge sequence, endpoint and allowed/not-allowed verdict are derived
    eagerly, so a path object is self-checking from birth.
    """

    def __init__(self, start: LabeledPermutation, moves):
        self.start = start
        self.moves: tuple[Move, ...] = tuple(moves)
        edges: list[EdgeRecord] = []
        current = start
        for move in self.moves:
            edge = apply_move(current, move)
            edges.append(edge)
            current = edge.target
        self.edges: tuple[EdgeRecord, ...] = tuple(edges)
        self.end: LabeledPermutation = current
        self.allowed: bool = equal_unlabeled(start, current)

    @property
    def word(self) -> str:
        """The move word in execution order (left-to-right)."""
        return "".join(move.value for move in self.moves)

    @property
    def word_rtl(self) -> str:
        """The move word in right-to-left composition order."""
        return "".join(move.value for move in reversed(self.moves))

    def winners(self) -> frozenset[str]:
        return frozenset(e.winner for e in self.edges if e.winner is not None)

    def concat(self, other: "AllowedPath") -> "AllowedPath":
        if self.end != other.start:
            raise ValueError("paths do not concatenate: endpoint mismatch")
        return AllowedPath(self.start, self.moves + other.moves)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AllowedPath):
            return NotImplemented
        return self.start == other.start and self.moves == other.moves

    def __repr__(self) -> str:
        return "AllowedPath(%s, %r, allowed=%s)" % (self.start.display(), self.word, self.allowed)


def build_path(
    start: LabeledPermutation, word: str, reading: str = "paper"
) -> AllowedPath:
    """Build the path of ``word`` from ``start`` and report its verdict.

    ``reading="paper"`` (the default) reads the word right-to-left, so the
    rightmost letter is the first move executed; ``reading="ltr"`` executes
    the word as written.
    """
    written = parse_move_word(word)
    if reading == "paper":
        execution = tuple(reversed(written))
    elif reading == "ltr":
        execution = written
    else:
        raise ValueError("reading must be 'paper' or 'ltr', got %r" % reading)
    return AllowedPath(start, execution)


def _dot_label(p: LabeledPermutation) -> str:
    return " ".join(p.top_letters()) + "\\n" + " ".join(p.bottom_letters())


def to_dot(d: RauzyDiagram) -> str:
    """Deterministic DOT rendering: vertices by BFS index, edges labeled t/b/f."""
    lines = ["digraph rauzy {", "  rankdir=LR;", '  node [shape=box, fontname="monospace"];']
    for i, v in enumerate(d.vertices):
        lines.append('  v%d [label="%s"];' % (i, _dot_label(v)))
    for i, out in enumerate(d.edges):
        for edge in out:
            lines.append(
                '  v%d -> v%d [label="%s"];' % (i, d.vertex_index(edge.target), edge.kind.value)
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
