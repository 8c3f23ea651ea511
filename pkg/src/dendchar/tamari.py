"""Planar binary trees and the Tamari order.

A tree is either ``LEAF`` (the empty tuple) or a pair ``(left, right)``.
Trees are encoded as balanced-parenthesis words: a leaf is the empty word and
``(left, right)`` is ``"(" + enc(left) + ")" + enc(right)``, so a tree with m
internal nodes has a word of length 2m.

The order is generated by right rotations ``((A, B), C) -> (A, (B, C))``; the
left comb is the minimum and the right comb the maximum.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

import numpy as np

from .arith import catalan
from .matrix import ExactMatrix

__all__ = [
    "LEAF",
    "Tree",
    "SizeLimit",
    "MAX_INTERNAL_NODES",
    "MAX_LEAVES",
    "encode",
    "decode",
    "internal_nodes",
    "enumerate_trees",
    "left_comb",
    "right_comb",
    "covers",
    "TamariLattice",
    "build_lattice",
    "order_matrix",
]

Tree = Union[tuple, tuple[object, object]]
LEAF: Tree = ()

# 208012 trees at 12 internal nodes; 4862 lattice elements at 10 leaves
MAX_INTERNAL_NODES = 12
MAX_LEAVES = 10


class SizeLimit(ValueError):
    """Requested object exceeds the configured size cap."""


def encode(t: Tree) -> str:
    parts: list[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, str):
            parts.append(node)
        elif node:
            left, right = node
            stack.extend([right, ")", left, "("])
    return "".join(parts)


def decode(word: str) -> Tree:
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos == len(word) or word[pos] == ")":
            return LEAF
        if word[pos] != "(":
            raise ValueError(f"bad character {word[pos]!r} in tree word")
        pos += 1
        left = parse()
        if pos == len(word) or word[pos] != ")":
            raise ValueError(f"unbalanced tree word {word!r}")
        pos += 1
        right = parse()
        return (left, right)

    tree = parse()
    if pos != len(word):
        raise ValueError(f"unbalanced tree word {word!r}")
    return tree


def internal_nodes(t: Tree) -> int:
    return len(encode(t)) // 2


@lru_cache(maxsize=None)
def _trees(m: int) -> tuple[Tree, ...]:
    if m == 0:
        return (LEAF,)
    out = []
    for k in range(m):
        for left in _trees(k):
            for right in _trees(m - 1 - k):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(m: int, max_nodes: int = MAX_INTERNAL_NODES) -> list[Tree]:
    """All planar binary trees with ``m`` internal nodes, sorted by encoding."""
    if m < 0:
        raise ValueError("number of internal nodes must be >= 0")
    if m > max_nodes:
        raise SizeLimit(f"{m} internal nodes exceeds the cap of {max_nodes}")
    return sorted(_trees(m), key=encode)


def left_comb(n_leaves: int) -> Tree:
    t = LEAF
    for _ in range(n_leaves - 1):
        t = (t, LEAF)
    return t


def right_comb(n_leaves: int) -> Tree:
    t = LEAF
    for _ in range(n_leaves - 1):
        t = (LEAF, t)
    return t


def covers(t: Tree) -> list[Tree]:
    """Trees reached from ``t`` by a single right rotation at any node."""
    if not t:
        return []
    left, right = t
    out = []
    if left:
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in covers(left))
    out.extend((left, r2) for r2 in covers(right))
    return out


@dataclass(frozen=True, eq=False)
class TamariLattice:
    n_leaves: int
    elements: list[Tree]
    words: list[str]
    covers: list[tuple[int, int]]
    leq: np.ndarray = field(repr=False)
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.words)})

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, t: Tree | str) -> int:
        word = t if isinstance(t, str) else encode(t)
        return self._index[word]

    def is_leq(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def minimum(self) -> list[int]:
        return [i for i in range(len(self)) if self.leq[i].all()]

    def maximum(self) -> list[int]:
        return [i for i in range(len(self)) if self.leq[:, i].all()]

    def meet(self, x: int, y: int) -> int | None:
        lower = np.flatnonzero(self.leq[:, x] & self.leq[:, y])
        tops = [z for z in lower if self.leq[lower, z].all()]
        return int(tops[0]) if len(tops) == 1 else None

    def join(self, x: int, y: int) -> int | None:
        upper = np.flatnonzero(self.leq[x] & self.leq[y])
        bottoms = [z for z in upper if self.leq[z, upper].all()]
        return int(bottoms[0]) if len(bottoms) == 1 else None

    def is_lattice(self) -> bool:
        n = len(self)
        return all(
            self.meet(x, y) is not None and self.join(x, y) is not None
            for x in range(n)
            for y in range(x + 1, n)
        )

    def to_json(self) -> dict:
        return {
            "leaves": self.n_leaves,
            "elements": list(self.words),
            "covers": [[i, j] for i, j in self.covers],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def build_lattice(n_leaves: int, max_leaves: int = MAX_LEAVES) -> TamariLattice:
    """Tamari lattice on trees with ``n_leaves`` leaves in a canonical linear extension.

    Elements are topologically sorted along covers, breaking ties by the
    smallest parenthesis word, so the order matrix is upper triangular.
    """
    if n_leaves < 1:
        raise ValueError("need at least one leaf")
    if n_leaves > max_leaves:
        raise SizeLimit(f"{n_leaves} leaves exceeds the cap of {max_leaves}")
    trees = enumerate_trees(n_leaves - 1)
    words = [encode(t) for t in trees]
    pos = {w: i for i, w in enumerate(words)}
    succ = [[pos[encode(u)] for u in covers(t)] for t in trees]

    indeg = [0] * len(trees)
    for targets in succ:
        for j in targets:
            indeg[j] += 1
    heap = [(words[i], i) for i, d in enumerate(indeg) if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (words[j], j))
    rank = {old: new for new, old in enumerate(order)}

    n = len(order)
    cover_pairs = sorted((rank[i], rank[j]) for i in range(n) for j in succ[i])
    up: list[list[int]] = [[] for _ in range(n)]
    for i, j in cover_pairs:
        up[i].append(j)
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n - 1, -1, -1):
        leq[i, i] = True
        for j in up[i]:
            leq[i] |= leq[j]
    leq.flags.writeable = False

    return TamariLattice(
        n_leaves=n_leaves,
        elements=[trees[i] for i in order],
        words=[words[i] for i in order],
        covers=cover_pairs,
        leq=leq,
    )


def order_matrix(lattice: TamariLattice) -> ExactMatrix:
    """0/1 matrix with entry (x, y) equal to 1 iff x <= y."""
    return ExactMatrix(lattice.leq.astype(np.int64))


def expected_size(n_leaves: int) -> int:
    return catalan(n_leaves - 1)
