"""Labeled plane forests with prescribed child types.

Vertices are labeled 1..n. A type array ``w`` has one entry per index
0..n: ``w[i][0]`` is the type of vertex i ("O" for the virtual index 0,
"A" or "B" otherwise) and ``w[i][1:]`` lists, left to right, the types of
its children. The children of index 0 are the tree roots.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

A, B, O = "A", "B", "O"

Forest = tuple[tuple[int, ...], ...]  # children labels of indices 0..n


@dataclass(frozen=True)
class ForestStats:
    a: int
    b: int
    aO: int
    bO: int
    aB: int
    bA: int


@dataclass(frozen=True, init=False)
class TypeArray:
    """``TypeArray(w0, w1, ..., wn)`` with each ``wi`` a sequence of letters."""

    w: tuple[tuple[str, ...], ...]

    def __init__(self, w0: Sequence[str], *rest: Sequence[str]) -> None:
        object.__setattr__(self, "w", tuple(tuple(x) for x in (w0, *rest)))
        self._validate()

    def _validate(self) -> None:
        if not self.w or self.w[0][:1] != (O,):
            raise ValueError("entry 0 of a type array must start with O")
        for i, seq in enumerate(self.w[1:], start=1):
            if not seq or seq[0] not in (A, B):
                raise ValueError(f"vertex {i} needs a type A or B")
        for i, seq in enumerate(self.w):
            if any(c not in (A, B) for c in seq[1:]):
                raise ValueError(f"child types of index {i} must be A or B")
        if len(self.w[0]) < 2 and len(self.w) > 1:
            raise ValueError("a non-empty forest has at least one root")

    @property
    def n(self) -> int:
        return len(self.w) - 1

    def own_type(self, i: int) -> str:
        return self.w[i][0]

    def stats(self) -> ForestStats:
        a = sum(1 for seq in self.w[1:] if seq[0] == A)
        b = self.n - a
        roots = self.w[0][1:]
        aB = sum(seq[1:].count(A) for seq in self.w[1:] if seq[0] == B)
        bA = sum(seq[1:].count(B) for seq in self.w[1:] if seq[0] == A)
        return ForestStats(a, b, roots.count(A), roots.count(B), aB, bA)

    def check_consistent(self) -> None:
        a = sum(1 for seq in self.w[1:] if seq[0] == A)
        b = self.n - a
        slots = [c for seq in self.w for c in seq[1:]]
        if slots.count(A) != a:
            raise ValueError(f"A-consistency fails: {a} vertices of type A but {slots.count(A)} A slots")
        if slots.count(B) != b:
            raise ValueError(f"B-consistency fails: {b} vertices of type B but {slots.count(B)} B slots")

    def is_consistent(self) -> bool:
        try:
            self.check_consistent()
        except ValueError:
            return False
        return True


def count_onetype(n: int, k: Sequence[int]) -> int:
    """Forests on labels 1..n where vertex i has k[i-1] children and vertex 1
    lies in the first tree."""
    if len(k) != n or n < 1:
        raise ValueError("need one child count per vertex")
    return factorial(n - 1) if sum(k) < n else 0


def twotype_from_stats(s: ForestStats) -> int:
    if s.a == 0 and s.b == 0:
        return 1
    if s.b == 0:
        return s.aO * factorial(s.a - 1)
    if s.a == 0:
        return s.bO * factorial(s.b - 1)
    return (s.aO * s.bO + s.aO * s.bA + s.aB * s.bO) * factorial(s.a - 1) * factorial(s.b - 1)


def count_twotype(w: TypeArray) -> int:
    w.check_consistent()
    return twotype_from_stats(w.stats())


def count_twotype_constrained(w: TypeArray) -> int:
    """Forests with vertex 1 (of type A) inside the first tree."""
    w.check_consistent()
    if w.n < 1 or w.own_type(1) != A:
        raise ValueError("the constrained count needs vertex 1 of type A")
    s = w.stats()
    if s.b == 0:
        return factorial(s.a - 1)
    first_root = w.w[0][1]
    if first_root == A:
        return (s.bO + s.bA) * factorial(s.a - 1) * factorial(s.b - 1)
    return s.aB * factorial(s.a - 1) * factorial(s.b - 1)


# brute force -----------------------------------------------------------------

MAX_ENUM = 8


def enumerate_forests(w: TypeArray, constrained: bool = False) -> Iterator[Forest]:
    """Every forest realising ``w``, by filling child slots in preorder.

    A forest is returned as the tuple of children-label tuples of indices
    0..n. With ``constrained`` only forests whose first tree holds vertex 1
    are produced.
    """
    n = w.n
    if n > MAX_ENUM:
        raise ValueError(f"forest enumeration is capped at n = {MAX_ENUM}")
    kids: list[list[int]] = [[] for _ in range(n + 1)]
    used = [False] * (n + 1)
    seen: set[tuple] = set()

    def serial() -> tuple:
        out = []

        def walk(v: int) -> None:
            out.append((v, w.w[v][0], len(kids[v])))
            for c in kids[v]:
                walk(c)

        for r in kids[0]:
            walk(r)
        return tuple(out)

    def first_tree_has_one() -> bool:
        stack = [kids[0][0]]
        while stack:
            v = stack.pop()
            if v == 1:
                return True
            stack.extend(kids[v])
        return False

    # stack of pending slots (parent, required type); top is next in preorder
    def rec(stack: list[tuple[int, str]]) -> Iterator[Forest]:
        if not stack:
            if all(used[1:]):
                if constrained and not first_tree_has_one():
                    return
                key = serial()
                if key in seen:
                    raise AssertionError("forest produced twice")
                seen.add(key)
                yield tuple(tuple(k) for k in kids)
            return
        parent, need = stack[-1]
        rest = stack[:-1]
        for v in range(1, n + 1):
            if used[v] or w.w[v][0] != need:
                continue
            used[v] = True
            kids[parent].append(v)
            child_slots = [(v, t) for t in reversed(w.w[v][1:])]
            yield from rec(rest + child_slots)
            kids[parent].pop()
            used[v] = False

    roots = [(0, t) for t in reversed(w.w[0][1:])]
    if n == 0:
        yield ((),)
        return
    yield from rec(roots)


def _valid_preorder(c: Sequence[int]) -> bool:
    h = 0
    k0 = len(c) - sum(c)
    for t, x in enumerate(c):
        h += x - 1
        if t < len(c) - 1 and h <= -k0:
            return False
    return h == -k0 and k0 >= 1


def tally_all_forests(n: int) -> tuple[Counter, Counter]:
    """Count every labeled two-type plane forest on n vertices by type array.

    Returns (all forests, forests with vertex 1 in the first tree), both
    keyed by the type array tuple ``w``.
    """
    everything: Counter = Counter()
    first: Counter = Counter()
    perms = list(itertools.permutations(range(n)))
    for shape in itertools.product(range(n), repeat=n) if n else [()]:
        if not _valid_preorder(shape):
            continue
        # parent of each preorder position, and first-tree positions
        parent = [-1] * n
        stack: list[list[int]] = []
        roots: list[int] = []
        for pos, c in enumerate(shape):
            if stack:
                par = stack[-1]
                parent[pos] = par[0]
                par[1] -= 1
                if par[1] == 0:
                    stack.pop()
            else:
                roots.append(pos)
            if c:
                stack.append([pos, c])
        children: list[list[int]] = [[] for _ in range(n)]
        for pos in range(n):
            if parent[pos] >= 0:
                children[parent[pos]].append(pos)
        first_end = roots[1] if len(roots) > 1 else n
        for types in itertools.product((A, B), repeat=n):
            records = [(types[p], *(types[c] for c in children[p])) for p in range(n)]
            root_types = (O, *(types[p] for p in roots))
            for perm in perms:
                # perm[label - 1] = preorder position holding that label
                key = (root_types, *map(records.__getitem__, perm))
                everything[key] += 1
                if perm[0] < first_end:
                    first[key] += 1
    return everything, first


def consistent_arrays(n: int) -> Iterator[TypeArray]:
    """Every consistent type array on n labeled vertices."""
    for types in itertools.product((A, B), repeat=n):
        a = types.count(A)
        for k0 in range(1, n + 1):
            for counts in _compositions_into(n - k0, n):
                sizes = (k0, *counts)
                total = n
                # choose which slots are A: exactly a of the n slots
                for a_slots in itertools.combinations(range(total), a):
                    marks = [B] * total
                    for j in a_slots:
                        marks[j] = A
                    seqs = []
                    pos = 0
                    for sz in sizes:
                        seqs.append(tuple(marks[pos : pos + sz]))
                        pos += sz
                    yield TypeArray((O, *seqs[0]), *((types[i], *seqs[i + 1]) for i in range(n)))


def _compositions_into(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_into(total - first, parts - 1):
            yield (first, *rest)


def rotate_roots(w: TypeArray, j: int) -> TypeArray:
    roots = w.w[0][1:]
    j %= len(roots)
    return TypeArray((O, *roots[j:], *roots[:j]), *w.w[1:])
