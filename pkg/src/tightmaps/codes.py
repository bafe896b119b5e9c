"""Words and lattice paths coding tight trees.

Letters: ``U`` (step away from the pointed vertex), ``DM`` (step back
towards it from a marked vertex), ``DP`` (step back from an unmarked
vertex) and ``E`` (a petal). The factor ``U DP`` never occurs: it would
be an unmarked leaf.

Trees are plane trees given by rotation systems: ``rot[v]`` lists the
neighbours of v in counterclockwise order. The contour moves from dart
(u, v) to (v, w) with w the neighbour following u around v.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .forests import A, B, O, TypeArray, enumerate_forests
from .numeric import Scalar, as_fraction
from .polys import weak_compositions


class Letter(str, Enum):
    U = "U"
    DM = "DM"
    DP = "DP"
    E = "E"

    def __str__(self) -> str:
        return self.value


U, DM, DP, E = Letter.U, Letter.DM, Letter.DP, Letter.E
Word = tuple[Letter, ...]


class Form(str, Enum):
    UDFORM1 = "UDFORM1"  # two distinguished vertices
    UDFORM2 = "UDFORM2"  # pointed and rooted
    UDFORM3 = "UDFORM3"  # pointed, with one loop
    PETAL = "PETAL"


class WordError(ValueError):
    def __init__(self, index: int, reason: str) -> None:
        super().__init__(f"letter {index}: {reason}")
        self.index = index


def word_str(w: Sequence[Letter]) -> str:
    return " ".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    return tuple(Letter(tok) for tok in text.split())


def forbidden_factor(w: Sequence[Letter]) -> Optional[int]:
    """Index of the first ``DP`` that follows a ``U``, if any."""
    for i in range(1, len(w)):
        if w[i] == DP and w[i - 1] == U:
            return i
    return None


def _as_count(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x < 0:
        raise ValueError(f"{what} = {x} is not a non-negative integer")
    return int(x)


def _blocks(leaders: Sequence[Sequence[Letter]], n_down: int, n_up: int, head: bool) -> Iterator[Word]:
    """Words  [DP^a0 U^b0]  L1 DP^a1 U^b1  L2 ...  with the given leaders.

    Every U is followed by U, a leader, or the end, so no forbidden factor
    appears; conversely every such word splits uniquely at its leaders.
    """
    parts = len(leaders) + (1 if head else 0)
    if parts == 0:
        if n_down == 0 and n_up == 0:
            yield ()
        return
    for a in weak_compositions(n_down, parts):
        for b in weak_compositions(n_up, parts):
            out: list[Letter] = []
            j = 0
            if head:
                out += [DP] * a[0] + [U] * b[0]
                j = 1
            for lead in leaders:
                out += list(lead) + [DP] * a[j] + [U] * b[j]
                j += 1
            yield tuple(out)


def enumerate_words(form: Union[Form, str], m: Scalar, k: int = 0, r: int = 0, s: int = 0, eps: int = 0) -> Iterator[Word]:
    """Every word of the given form, each once.

    UDFORM1: length 2m, starts with DM, k+1 letters DM, m letters U.
    UDFORM2: length 2m, ends with U, k letters DM, m letters U.
    UDFORM3: length 2m-1 (m half-odd), k letters DM, m-1/2 letters U.
    PETAL: length 2m-1, r letters DM, s letters E,
           m-(s+1+eps)/2 letters U and m-r-(s+1-eps)/2 letters DP.
    """
    form = Form(form)
    m = as_fraction(m)
    if form is Form.UDFORM1:
        if m < 1 or k < 0 or m.denominator != 1 or k + 1 > m:
            return
        yield from _blocks([(DM,)] * (k + 1), int(m) - k - 1, int(m), head=False)
    elif form is Form.UDFORM2:
        if m < 1 or k < 0 or m.denominator != 1 or k > m:
            return
        for w in _blocks([(DM,)] * k, int(m) - k, int(m) - 1, head=True):
            yield w + (U,)
    elif form is Form.UDFORM3:
        if m.denominator != 2 or k < 0 or k > m - Fraction(1, 2):
            return
        half = int(m - Fraction(1, 2))
        yield from _blocks([(DM,)] * k, half - k, half, head=True)
    else:
        if m <= 0 or r < 0 or s < 0:
            return
        ups = m - Fraction(s + 1 + eps, 2)
        downs = m - r - Fraction(s + 1 - eps, 2)
        if ups.denominator != 1 or ups < 0 or downs < 0:
            return
        for e_pos in itertools.combinations(range(r + s), s):
            leaders = [(E,) if i in e_pos else (DM,) for i in range(r + s)]
            yield from _blocks(leaders, int(downs), int(ups), head=True)


# trees ---------------------------------------------------------------------------

Dart = tuple[int, int]


@dataclass(frozen=True)
class MarkedTree:
    """A plane tree with decorations.

    ``pointed`` is the distinguished vertex the contour heights are measured
    from. ``second`` is the other distinguished vertex (UDFORM1).
    ``root`` is a dart: for UDFORM2 the root edge oriented away from
    ``pointed``; for UDFORM3 the dart that follows the loop
    counterclockwise around its vertex. ``marked`` holds the other marked
    vertices.
    """

    rot: tuple[tuple[int, ...], ...]
    marked: frozenset[int]
    pointed: int
    second: Optional[int] = None
    root: Optional[Dart] = None

    @property
    def n_edges(self) -> int:
        return sum(len(x) for x in self.rot) // 2

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        nb = self.rot[v]
        return (v, nb[(nb.index(u) + 1) % len(nb)])

    def contour(self, start: Dart) -> list[Dart]:
        out = [start]
        for _ in range(2 * self.n_edges - 1):
            out.append(self.next_dart(out[-1]))
        return out

    def distances(self) -> list[int]:
        dist = [-1] * len(self.rot)
        dist[self.pointed] = 0
        queue = [self.pointed]
        for v in queue:
            for w in self.rot[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def towards_pointed(self, v: int) -> Dart:
        dist = self.distances()
        return next((v, w) for w in self.rot[v] if dist[w] == dist[v] - 1)

    def relabel(self, order: Sequence[int]) -> "MarkedTree":
        """Rename vertex order[i] to i; each rotation starts at its least label."""
        new = {old: i for i, old in enumerate(order)}
        rot = [()] * len(order)
        for old, i in new.items():
            nb = [new[w] for w in self.rot[old]]
            j = nb.index(min(nb)) if nb else 0
            rot[i] = tuple(nb[j:] + nb[:j])
        return MarkedTree(
            tuple(rot),
            frozenset(new[v] for v in self.marked),
            new[self.pointed],
            None if self.second is None else new[self.second],
            None if self.root is None else (new[self.root[0]], new[self.root[1]]),
        )

    def is_tight(self, form: Union[Form, str]) -> bool:
        form = Form(form)
        special = {self.pointed} | ({self.second} if self.second is not None else set())
        for v, nb in enumerate(self.rot):
            if len(nb) != 1 or v in special or v in self.marked:
                continue
            if form is Form.UDFORM2 and self.root is not None and v == self.root[1]:
                continue
            if form is Form.UDFORM3 and self.root is not None and v == self.root[0]:
                continue
            return False
        return True


def start_dart(t: MarkedTree, form: Union[Form, str]) -> Optional[Dart]:
    form = Form(form)
    if t.n_edges == 0:
        return None
    if form is Form.UDFORM1:
        return t.towards_pointed(t.second)
    if form is Form.UDFORM2:
        return t.next_dart(t.root)
    if form is Form.UDFORM3:
        return t.root
    raise ValueError(f"{form} trees are coded by petal_tree_to_word")


def tree_to_word(t: MarkedTree, form: Union[Form, str]) -> Word:
    """Contour word of a decorated tree, starting at the form's start dart."""
    form = Form(form)
    start = start_dart(t, form)
    if start is None:
        return ()
    dist = t.distances()
    marked = t.marked | ({t.second} if t.second is not None else set())
    out = []
    for u, v in t.contour(start):
        if dist[v] > dist[u]:
            out.append(U)
        else:
            out.append(DM if u in marked else DP)
    return tuple(out)


def canonical(t: MarkedTree, form: Union[Form, str]) -> MarkedTree:
    """Relabel vertices by first visit along the contour from the start dart."""
    start = start_dart(t, form)
    if start is None:
        return t.relabel([t.pointed])
    order: list[int] = []
    for u, v in t.contour(start):
        for x in (u, v):
            if x not in order:
                order.append(x)
    return t.relabel(order)


def _check_word(w: Sequence[Letter], form: Form) -> None:
    for i, x in enumerate(w):
        if x not in (U, DM, DP):
            raise WordError(i, f"letter {x} not allowed in {form.value} words")
    bad = forbidden_factor(w)
    if bad is not None:
        raise WordError(bad, "unmarked step down right after a step up")
    if form is Form.UDFORM1 and (not w or w[0] != DM):
        raise WordError(0, "must start with DM")
    if form is Form.UDFORM2 and (not w or w[-1] != U):
        raise WordError(max(len(w) - 1, 0), "must end with U")
    h = 0
    for i, x in enumerate(w):
        h += 1 if x == U else -1
    if h != 0:
        raise WordError(len(w) - 1, "word does not return to its starting height")


def word_to_tree(w: Sequence[Letter], form: Union[Form, str]) -> MarkedTree:
    """Inverse of ``tree_to_word``; vertices come out in canonical order."""
    form = Form(form)
    w = tuple(Letter(x) for x in w)
    _check_word(w, form)
    if not w:
        if form is not Form.UDFORM3:
            raise WordError(0, "empty word")
        return MarkedTree(((),), frozenset(), 0)
    heights = [0]
    for x in w:
        heights.append(heights[-1] + (1 if x == U else -1))
    low = min(heights)
    cut = heights.index(low)
    order = list(range(cut, len(w))) + list(range(cut))
    # rebuild from a corner of the pointed vertex
    rot: list[list[int]] = [[]]
    parent = [-1]
    stack = [0]
    dart_at: dict[int, Dart] = {}
    for i in order:
        cur = stack[-1]
        if w[i] == U:
            child = len(rot)
            rot.append([cur])
            parent.append(cur)
            rot[cur].append(child)
            stack.append(child)
            dart_at[i] = (cur, child)
        else:
            if len(stack) == 1:
                raise WordError(i, "step below the pointed vertex")
            stack.pop()
            dart_at[i] = (cur, parent[cur])
    marked = {dart_at[i][0] for i, x in enumerate(w) if x == DM}
    first = dart_at[0]
    second = None
    root = None
    if form is Form.UDFORM1:
        second = first[0]
        marked.discard(second)
    elif form is Form.UDFORM2:
        root = dart_at[len(w) - 1]
    else:
        root = first
    t = MarkedTree(tuple(tuple(x) for x in rot), frozenset(marked), 0, second, root)
    return canonical(t, form)


def _encode_from(t: MarkedTree, d: Dart) -> tuple:
    order: list[int] = []
    darts = t.contour(d)
    for u, v in darts:
        for x in (u, v):
            if x not in order:
                order.append(x)
    pos = {x: i for i, x in enumerate(order)}
    return (
        tuple((pos[u], pos[v]) for u, v in darts),
        tuple(sorted(pos[x] for x in t.marked)),
        pos[t.pointed],
        None if t.second is None else pos[t.second],
        None if t.root is None else (pos[t.root[0]], pos[t.root[1]]),
    )


def iso_key(t: MarkedTree) -> tuple:
    """Isomorphism invariant: least encoding over all starting darts."""
    if t.n_edges == 0:
        return ((), tuple(sorted(t.marked)), 0, t.second, t.root)
    darts = [(u, v) for u in range(len(t.rot)) for v in t.rot[u]]
    return min(_encode_from(t, d) for d in darts)


def plane_trees(n_edges: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Rotation systems of all corner-rooted plane trees with n_edges edges
    (one per Dyck word, so unrooted trees appear several times)."""
    for bits in itertools.combinations(range(2 * n_edges), n_edges):
        ups = set(bits)
        h, ok = 0, True
        for i in range(2 * n_edges):
            h += 1 if i in ups else -1
            if h < 0:
                ok = False
                break
        if not ok:
            continue
        rot: list[list[int]] = [[]]
        parent = [-1]
        cur = 0
        for i in range(2 * n_edges):
            if i in ups:
                child = len(rot)
                rot.append([cur])
                parent.append(cur)
                rot[cur].append(child)
                cur = child
            else:
                cur = parent[cur]
        yield tuple(tuple(x) for x in rot)


def all_marked_trees(form: Union[Form, str], m: Scalar, k: int) -> list[MarkedTree]:
    """Every decorated tree of the form up to isomorphism, built from plane
    trees by brute force and deduplicated with ``iso_key``."""
    form = Form(form)
    m = as_fraction(m)
    n_edges = int(m - Fraction(1, 2)) if form is Form.UDFORM3 else int(m)
    found: dict[tuple, MarkedTree] = {}
    for rot in plane_trees(n_edges):
        nv = len(rot)
        darts = [(u, v) for u in range(nv) for v in rot[u]]
        for pointed in range(nv):
            base = MarkedTree(rot, frozenset(), pointed)
            dist = base.distances()
            if form is Form.UDFORM1:
                extras = [dict(second=v) for v in range(nv) if v != pointed]
            elif form is Form.UDFORM2:
                extras = [dict(root=(u, v)) for u, v in darts if dist[v] > dist[u]]
            else:
                extras = [dict(root=d) for d in darts] if darts else [dict()]
            for extra in extras:
                taken = {pointed} | ({extra["second"]} if "second" in extra else set())
                free = [v for v in range(nv) if v not in taken]
                for marks in itertools.combinations(free, k):
                    t = MarkedTree(rot, frozenset(marks), pointed, **extra)
                    if t.is_tight(form):
                        found.setdefault(iso_key(t), t)
    return list(found.values())


# petal trees ------------------------------------------------------------------------

PETAL_ITEM = "petal"


@dataclass(frozen=True)
class PetalTree:
    """A vertex with its corner-ordered items: petals or child subtrees."""

    marked: bool
    items: tuple[Union[str, "PetalTree"], ...] = ()

    def n_edges(self) -> int:
        return sum(1 if it == PETAL_ITEM else 1 + it.n_edges() for it in self.items)


def petal_tree_to_word(t: PetalTree) -> Word:
    out: list[Letter] = []
    for it in t.items:
        if it == PETAL_ITEM:
            out.append(E)
        else:
            out.append(U)
            out.extend(petal_tree_to_word(it))
            out.append(DM if it.marked else DP)
    return tuple(out)


def word_to_petal_tree(w: Sequence[Letter]) -> PetalTree:
    w = tuple(Letter(x) for x in w)
    bad = forbidden_factor(w)
    if bad is not None:
        raise WordError(bad, "unmarked step down right after a step up")
    stack: list[list] = [[False, []]]
    for i, x in enumerate(w):
        if x == E:
            stack[-1][1].append(PETAL_ITEM)
        elif x == U:
            stack.append([False, []])
        else:
            if len(stack) == 1:
                raise WordError(i, "step below the root")
            _, items = stack.pop()
            stack[-1][1].append(PetalTree(x == DM, tuple(items)))
    if len(stack) != 1:
        raise WordError(len(w) - 1, "word ends above the root")
    return PetalTree(False, tuple(stack[0][1]))


def petal_trees(n_edges: int, root: bool = True) -> Iterator[PetalTree]:
    """Rooted tight petal trees with n_edges edges (petals count as edges):
    the root is unmarked, other vertices may be marked, and every non-root
    vertex without items is marked."""
    for items in _item_lists(n_edges):
        if root:
            yield PetalTree(False, items)
        else:
            if items:
                yield PetalTree(False, items)
            yield PetalTree(True, items)


def _item_lists(budget: int) -> Iterator[tuple]:
    if budget == 0:
        yield ()
        return
    for rest in _item_lists(budget - 1):
        yield (PETAL_ITEM, *rest)
    for size in range(1, budget + 1):
        for child in petal_trees(size - 1, root=False):
            for rest in _item_lists(budget - size):
                yield (child, *rest)


# marked lattice paths ----------------------------------------------------------------


@dataclass(frozen=True)
class MarkedPath:
    steps: tuple[int, ...]
    marked: frozenset[int]

    def is_valid(self) -> bool:
        for i, x in enumerate(self.steps):
            if x == 0 and i not in self.marked:
                return False
            if x == 1 and i > 0 and self.steps[i - 1] == -1 and i not in self.marked:
                return False
            if i in self.marked and x == -1:
                return False
        return True

    @property
    def child_types(self) -> tuple[int, ...]:
        return tuple(self.steps[i] for i in sorted(self.marked))


def count_marked_paths(d: int, eps: int, marks: Sequence[int]) -> int:
    """Paths of d-1 steps in {-1, 0, 1} from height 0 to eps whose marked
    steps have the increments listed in ``marks``, in order.

    Horizontal steps and up steps right after a down step must be marked;
    other up steps may be. ``d = 0`` stands for a lone marked vertex.
    """
    marks = list(marks)
    if any(x not in (0, 1) for x in marks):
        raise ValueError("marks are increments 0 or 1")
    if d == 0:
        return 1 if eps == 1 and not marks else 0
    k = len(marks)
    # state: (height, marks used, last step was down) -> count
    states = {(0, 0, False): 1}
    for _ in range(d - 1):
        new: dict[tuple[int, int, bool], int] = {}
        for (h, j, down), c in states.items():
            moves = [(h - 1, j, True)]
            if not down:
                moves.append((h + 1, j, False))
            if j < k:
                moves.append((h + marks[j], j + 1, False))
            for key in moves:
                new[key] = new.get(key, 0) + c
        states = new
    return sum(c for (h, j, _), c in states.items() if h == eps and j == k)


def all_marked_paths(d: int, eps: int) -> Iterator[MarkedPath]:
    """Every valid marked path of d-1 steps from 0 to eps, by brute force."""
    if d == 0:
        if eps == 1:
            yield MarkedPath((), frozenset())
        return
    for steps in itertools.product((-1, 0, 1), repeat=d - 1):
        if sum(steps) != eps:
            continue
        forced = {i for i, x in enumerate(steps) if x == 0 or (x == 1 and i > 0 and steps[i - 1] == -1)}
        optional = [i for i, x in enumerate(steps) if x == 1 and i not in forced]
        for extra in itertools.chain.from_iterable(
            itertools.combinations(optional, j) for j in range(len(optional) + 1)
        ):
            yield MarkedPath(tuple(steps), frozenset(forced | set(extra)))


def enumerate_decorated_families(eps: int, ms: Sequence[Scalar], size_cap: int = 6):
    """Pairs (tree, paths): a labeled plane tree on vertices 1..n with root of
    type ``eps``, and for each vertex i a marked path of 2m_i - 1 steps from
    0 to its type whose marked increments list its children's types."""
    ms = [as_fraction(m) for m in ms]
    n = len(ms)
    if n > size_cap:
        raise ValueError(f"{n} vertices exceeds the cap of {size_cap}")
    letter = {1: A, 0: B}
    per_vertex = [[p for e in (0, 1) for p in all_marked_paths(int(2 * m), e)] for m in ms]
    for paths in itertools.product(*per_vertex):
        types = [sum(p.steps) if ms[i] else 1 for i, p in enumerate(paths)]
        w = TypeArray(
            (O, letter[eps]),
            *((letter[t], *(letter[c] for c in p.child_types)) for t, p in zip(types, paths)),
        )
        if not w.is_consistent():
            continue
        for forest in enumerate_forests(w):
            yield forest, paths
