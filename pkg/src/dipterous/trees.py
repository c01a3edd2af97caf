"""Canonical combinatorial bases: planar rooted trees, forests, binary trees,
and non-planar labeled rooted trees.

Planar rooted trees here are Schroeder trees: every internal node has at
least two children, and the degree of a tree is its number of leaves.
Counts per degree are the little Schroeder numbers (1, 1, 3, 11, 45, ...);
forests of such trees are counted by the large Schroeder numbers
(1, 2, 6, 22, 90, ...).

Each kind of tree has one canonical text encoding which doubles as its
hash/sort key; see ``encode``/``parse``. Enumerations are ordered by degree
then lexicographically on encodings so downstream matrices are reproducible.
Enumeration caches are append-only dicts and safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class PlanarTree:
    """A planar rooted tree whose internal nodes all have >= 2 children.

    The leaf is ``PlanarTree()`` with no children.
    """

    children: tuple["PlanarTree", ...] = ()

    def __post_init__(self):
        if len(self.children) == 1:
            raise ValueError("unary nodes are not in the Schroeder basis")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @cached_property
    def degree(self) -> int:
        """Number of leaves."""
        if self.is_leaf:
            return 1
        return sum(c.degree for c in self.children)

    def __str__(self) -> str:
        if self.is_leaf:
            return "|"
        return "(" + " ".join(str(c) for c in self.children) + ")"


LEAF = PlanarTree()


@dataclass(frozen=True)
class Forest:
    """A nonempty ordered sequence of planar trees."""

    trees: tuple[PlanarTree, ...]

    def __post_init__(self):
        if not self.trees:
            raise ValueError("forests are nonempty")

    @cached_property
    def degree(self) -> int:
        return sum(t.degree for t in self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __str__(self) -> str:
        return "[" + " ".join(str(t) for t in self.trees) + "]"


@dataclass(frozen=True)
class BinaryTree:
    """A planar binary tree; degree counts internal nodes."""

    left: "BinaryTree | None" = None
    right: "BinaryTree | None" = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("binary nodes have exactly two children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def degree(self) -> int:
        """Number of internal nodes."""
        if self.is_leaf:
            return 0
        return 1 + self.left.degree + self.right.degree

    def __str__(self) -> str:
        if self.is_leaf:
            return "|"
        return f"({self.left} {self.right})"


BLEAF = BinaryTree()
#: The one-node binary tree, generator of the degree-1 component.
Y1 = BinaryTree(BLEAF, BLEAF)


@dataclass(frozen=True)
class NapTree:
    """A labeled rooted tree with no planarity: children form a multiset.

    Children are stored sorted by their encodings, so equal trees compare
    and hash equal; the degree is the number of nodes.
    """

    label: str
    children: tuple["NapTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(sorted(self.children, key=str)))

    @cached_property
    def degree(self) -> int:
        return 1 + sum(c.degree for c in self.children)

    def __str__(self) -> str:
        if not self.children:
            return self.label
        return self.label + "[" + ",".join(str(c) for c in self.children) + "]"


def graft(ts) -> PlanarTree:
    """Join p >= 2 trees in order under a new common root."""
    ts = tuple(ts)
    if len(ts) < 2:
        raise ValueError("unary/empty grafting not in Schroeder basis")
    return PlanarTree(ts)


def decompose(t: PlanarTree) -> tuple[PlanarTree, ...]:
    """The unique children sequence with ``graft(decompose(t)) == t``."""
    if t.is_leaf:
        raise ValueError("leaf has no grafting decomposition")
    return t.children


def corolla(n: int) -> PlanarTree:
    """The depth-one tree with n leaves."""
    if n < 2:
        raise ValueError(f"corollas need arity >= 2, got {n}")
    return PlanarTree((LEAF,) * n)


_TREES: dict[int, tuple[PlanarTree, ...]] = {}
_FORESTS: dict[int, tuple[Forest, ...]] = {}
_BINARY: dict[int, tuple[BinaryTree, ...]] = {}


def _compositions(n: int, min_parts: int):
    """Ordered compositions of n into >= min_parts positive parts."""
    def rec(rest: int, parts: tuple[int, ...]):
        if rest == 0:
            if len(parts) >= min_parts:
                yield parts
            return
        for head in range(1, rest + 1):
            yield from rec(rest - head, parts + (head,))

    yield from rec(n, ())


def enumerate_trees(n: int) -> tuple[PlanarTree, ...]:
    """All planar trees of degree n, sorted by encoding."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n not in _TREES:
        if n == 1:
            out = (LEAF,)
        else:
            found = []
            for comp in _compositions(n, 2):
                choices = [enumerate_trees(k) for k in comp]
                stack = [()]
                for opts in choices:
                    stack = [pre + (t,) for pre in stack for t in opts]
                found.extend(PlanarTree(ch) for ch in stack)
            out = tuple(sorted(found, key=str))
        _TREES[n] = out
    return _TREES[n]


def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """All forests of total degree n, sorted by encoding."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n not in _FORESTS:
        found = []
        for comp in _compositions(n, 1):
            choices = [enumerate_trees(k) for k in comp]
            stack = [()]
            for opts in choices:
                stack = [pre + (t,) for pre in stack for t in opts]
            found.extend(Forest(ch) for ch in stack)
        _FORESTS[n] = tuple(sorted(found, key=str))
    return _FORESTS[n]


def enumerate_binary(n: int) -> tuple[BinaryTree, ...]:
    """All binary trees with n internal nodes (Catalan many), sorted."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n not in _BINARY:
        if n == 0:
            out = (BLEAF,)
        else:
            found = [
                BinaryTree(l, r)
                for k in range(n)
                for l in enumerate_binary(k)
                for r in enumerate_binary(n - 1 - k)
            ]
            out = tuple(sorted(found, key=str))
        _BINARY[n] = out
    return _BINARY[n]


def bin_graft(l: BinaryTree, r: BinaryTree) -> BinaryTree:
    """l v r: glue the roots under a new root; degrees add plus one."""
    return BinaryTree(l, r)


def bin_nwarrow(r: BinaryTree, s: BinaryTree) -> BinaryTree:
    """Glue the root of s onto the rightmost leaf of r; degrees add.

    Conventions: ``| nw t = t`` and ``t nw | = t``.
    """
    if r.is_leaf:
        return s
    if s.is_leaf:
        return r
    return BinaryTree(r.left, bin_nwarrow(r.right, s))


def bin_nearrow(r: BinaryTree, s: BinaryTree) -> BinaryTree:
    """Mirror of ``bin_nwarrow``: glue the root of r onto the leftmost leaf of s."""
    if s.is_leaf:
        return r
    if r.is_leaf:
        return s
    return BinaryTree(bin_nearrow(r, s.left), s.right)


def nap_graft(t: NapTree, s: NapTree) -> NapTree:
    """Link the root of s to the root of t (child multiset re-canonicalized)."""
    return NapTree(t.label, t.children + (s,))


_NAP: dict[tuple[int, tuple[str, ...]], tuple[NapTree, ...]] = {}


def enumerate_nap(n: int, labels: tuple[str, ...] = ("v",)) -> tuple[NapTree, ...]:
    """All labeled rooted trees with n nodes over the label alphabet."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    key = (n, labels)
    if key not in _NAP:
        found = []
        for label in labels:
            for kids in _nap_multisets(n - 1, labels):
                found.append(NapTree(label, kids))
        _NAP[key] = tuple(sorted(set(found), key=str))
    return _NAP[key]


def _nap_multisets(total: int, labels: tuple[str, ...]) -> list[tuple[NapTree, ...]]:
    """Multisets of labeled trees with degrees summing to ``total``."""
    if total == 0:
        return [()]
    pool: list[NapTree] = []
    for d in range(1, total + 1):
        pool.extend(enumerate_nap(d, labels))

    def rec(rest: int, start: int) -> list[tuple[NapTree, ...]]:
        if rest == 0:
            return [()]
        out = []
        for i in range(start, len(pool)):
            t = pool[i]
            if t.degree <= rest:
                out.extend((t,) + tail for tail in rec(rest - t.degree, i))
        return out

    return rec(total, 0)


def encode(x) -> str:
    """Canonical text form of any tree kind; inverse of ``parse``."""
    return str(x)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def done(self):
        if self.pos != len(self.text):
            self.error("trailing input")

    def tree(self) -> PlanarTree:
        c = self.peek()
        if c == "|":
            self.pos += 1
            return LEAF
        if c == "(":
            self.pos += 1
            children = [self.tree()]
            while self.peek() == " ":
                self.pos += 1
                children.append(self.tree())
            self.take(")")
            if len(children) < 2:
                self.error("internal nodes need >= 2 children")
            return PlanarTree(tuple(children))
        self.error("expected '|' or '('")

    def forest(self) -> Forest:
        self.take("[")
        trees = [self.tree()]
        while self.peek() == " ":
            self.pos += 1
            trees.append(self.tree())
        self.take("]")
        return Forest(tuple(trees))

    def binary(self) -> BinaryTree:
        c = self.peek()
        if c == "|":
            self.pos += 1
            return BLEAF
        if c == "(":
            self.pos += 1
            left = self.binary()
            self.take(" ")
            right = self.binary()
            self.take(")")
            return BinaryTree(left, right)
        self.error("expected '|' or '('")

    def nap(self) -> NapTree:
        start = self.pos
        while self.peek() and self.peek() not in "[],":
            self.pos += 1
        label = self.text[start : self.pos]
        if not label:
            self.error("expected a label")
        children: tuple[NapTree, ...] = ()
        if self.peek() == "[":
            self.pos += 1
            kids = [self.nap()]
            while self.peek() == ",":
                self.pos += 1
                kids.append(self.nap())
            self.take("]")
            children = tuple(kids)
        return NapTree(label, children)


def parse_tree(text: str) -> PlanarTree:
    p = _Parser(text)
    t = p.tree()
    p.done()
    return t


def parse_forest(text: str) -> Forest:
    p = _Parser(text)
    f = p.forest()
    p.done()
    return f


def parse_binary(text: str) -> BinaryTree:
    p = _Parser(text)
    t = p.binary()
    p.done()
    return t


def parse_nap(text: str) -> NapTree:
    p = _Parser(text)
    t = p.nap()
    p.done()
    return t


def parse(text: str):
    """Parse a tree, forest, or labeled tree, dispatching on the first character."""
    if not text:
        raise ParseError("empty input", 0)
    head = text[0]
    if head == "[":
        return parse_forest(text)
    if head in "|(":
        return parse_tree(text)
    return parse_nap(text)
