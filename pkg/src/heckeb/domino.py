"""Signed permutations and Garfinkle-style domino insertion.

An element of the hyperoctahedral group is stored in window notation
(w(1), ..., w(n)).  Insertion of w builds a standard domino tableau around
the staircase 2-core: the letter inserted at step i is |w(i)|, entering as a
horizontal domino in row 1 when w(i) > 0 and as a vertical domino in column
1 when w(i) < 0, followed by Garfinkle bumping of the larger letters.  The
bumping case analysis (including the one-cell "twist" collision) follows
the standard presentation of the algorithm.

The recording tableau marks, with label i, the two cells added at step i;
the identity Q(w) = P(w^{-1}) is exercised by the test suite rather than
assumed here.
"""

from __future__ import annotations

import functools
import json
from collections import deque
from dataclasses import dataclass

from . import INFINITY
from .combinat import (Bipartition, Partition, delta_core, format_bipartition,
                       q_r)
from .errors import BoundExceeded, MalformedTableau

Cell = tuple[int, int]  # (row, column), 1-based


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the type B Weyl group W_n, in window notation."""

    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.window)
        assert sorted(abs(x) for x in w) == list(range(1, len(w) + 1)), w
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self.window[-i - 1]
        return self.window[i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        assert self.n == other.n
        return SignedPermutation(tuple(self(other(i))
                                       for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i in range(1, self.n + 1):
            v = self(i)
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(tuple(inv))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.window)

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        return cls(tuple(int(x) for x in text.replace(",", " ").split()))

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def generator(cls, n: int, i: int) -> "SignedPermutation":
        """Generator i: index 0 is t (sign change in slot 1), index i >= 1
        is the adjacent transposition s_i."""
        w = list(range(1, n + 1))
        if i == 0:
            w[0] = -1
        else:
            assert 1 <= i < n
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))


@functools.lru_cache(maxsize=None)
def group_elements(n: int) -> dict[SignedPermutation, tuple[int, tuple[int, ...]]]:
    """BFS of W_n over right multiplication by the generators.

    Maps each element to (length, reduced word), the word listing generator
    indices (0 for t) left to right.  The BFS explores generator indices in
    increasing order, so the stored word is a deterministic normal form.
    """
    gens = [SignedPermutation.generator(n, i) for i in range(n)]
    e = SignedPermutation.identity(n)
    out = {e: (0, ())}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        length, word = out[w]
        for i, g in enumerate(gens):
            wg = w * g
            if wg not in out:
                out[wg] = (length + 1, word + (i,))
                queue.append(wg)
    return out


def length(w: SignedPermutation) -> int:
    return group_elements(w.n)[w][0]


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    return group_elements(w.n)[w][1]


# --- domino tableaux ----------------------------------------------------

@dataclass(frozen=True)
class DominoTableau:
    """Standard domino tableau on top of a staircase core.

    dominoes maps each entry to a frozenset of its two (adjacent) cells.
    """

    core: Partition
    dominoes: tuple[tuple[int, frozenset[Cell]], ...]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(k for k, _ in self.dominoes))

    def domino(self, k: int) -> frozenset[Cell]:
        return dict(self.dominoes)[k]

    def shape_at(self, k: int) -> Partition:
        """Shape of core plus dominoes with entries at most k."""
        cells = set(self.core.cells())
        for label, dom in self.dominoes:
            if label <= k:
                cells |= dom
        return _cells_to_partition(cells)

    @property
    def shape(self) -> Partition:
        return self.shape_at(len(self.dominoes))

    def validate(self) -> None:
        seen = set(self.core.cells())
        for label in self.entries:
            dom = self.domino(label)
            if len(dom) != 2 or not _adjacent(*sorted(dom)):
                raise MalformedTableau(f"entry {label} is not a domino: {dom}")
            if dom & seen:
                raise MalformedTableau(f"entry {label} overlaps earlier cells")
            seen |= dom
            if _cells_to_partition(seen) is None:
                raise MalformedTableau(
                    f"shape after entry {label} is not a partition")

    def to_text(self) -> str:
        grid = {}
        for (i, j) in self.core.cells():
            grid[(i, j)] = "."
        for label, dom in self.dominoes:
            for cell in dom:
                grid[cell] = str(label)
        if not grid:
            return "(empty)"
        rows = max(i for i, _ in grid)
        cols = max(j for _, j in grid)
        width = max(len(v) for v in grid.values())
        lines = []
        for i in range(1, rows + 1):
            lines.append(" ".join(
                grid.get((i, j), "").rjust(width)
                for j in range(1, cols + 1)).rstrip())
        return "\n".join(lines)


def _adjacent(c1: Cell, c2: Cell) -> bool:
    (a, b), (c, d) = c1, c2
    return abs(a - c) + abs(b - d) == 1


def _cells_to_partition(cells: set[Cell]) -> Partition | None:
    if not cells:
        return Partition()
    rows: dict[int, int] = {}
    for (i, j) in cells:
        rows[i] = max(rows.get(i, 0), j)
    nrows = max(rows)
    parts = [rows.get(i, 0) for i in range(1, nrows + 1)]
    if sorted(parts, reverse=True) != parts or 0 in parts:
        return None
    if sum(parts) != len(cells):
        return None
    return Partition(tuple(parts))


class _Shape:
    """Row/column lengths of a growing Young diagram, as cell sets."""

    def __init__(self, cells):
        self.cells = set(cells)
        self.rows: dict[int, int] = {}
        self.cols: dict[int, int] = {}
        for (i, j) in self.cells:
            self.rows[i] = max(self.rows.get(i, 0), j)
            self.cols[j] = max(self.cols.get(j, 0), i)

    def row(self, i: int) -> int:
        return self.rows.get(i, 0)

    def col(self, j: int) -> int:
        return self.cols.get(j, 0)

    def add(self, dom):
        for (i, j) in dom:
            assert (i, j) not in self.cells
            self.cells.add((i, j))
            self.rows[i] = max(self.rows.get(i, 0), j)
            self.cols[j] = max(self.cols.get(j, 0), i)


def _is_horizontal(dom: frozenset[Cell]) -> bool:
    (a, _), (c, _) = sorted(dom)
    return a == c


def _insert_letter(dominoes: dict[int, frozenset[Cell]], core: Partition,
                   m: int, horizontal: bool) -> dict[int, frozenset[Cell]]:
    """Insert letter m into the tableau, bumping larger letters."""
    smaller = {l: d for l, d in dominoes.items() if l < m}
    shape = _Shape(set(core.cells()).union(*smaller.values())
                   if smaller else set(core.cells()))
    if horizontal:
        c = shape.row(1)
        new = frozenset({(1, c + 1), (1, c + 2)})
    else:
        rr = shape.col(1)
        new = frozenset({(rr + 1, 1), (rr + 2, 1)})
    current = dict(smaller)
    current[m] = new
    shape.add(new)
    for label in sorted(l for l in dominoes if l > m):
        dom = dominoes[label]
        inter = dom & shape.cells
        if not inter:
            placed = dom
        elif len(inter) == 2:
            if _is_horizontal(dom):
                i = next(iter(dom))[0] + 1
                c = shape.row(i)
                placed = frozenset({(i, c + 1), (i, c + 2)})
            else:
                j = next(iter(dom))[1] + 1
                rr = shape.col(j)
                placed = frozenset({(rr + 1, j), (rr + 2, j)})
        else:
            # One-cell collision ("twist"): the covered cell is necessarily
            # the top-left one; the domino flips around the free cell.
            (i, j) = min(dom)
            assert inter == {(i, j)}, (dom, inter)
            if _is_horizontal(dom):
                placed = frozenset({(i, j + 1), (i + 1, j + 1)})
            else:
                placed = frozenset({(i + 1, j), (i + 1, j + 1)})
        current[label] = placed
        shape.add(placed)
    return current


def resolve_r(r, n: int) -> int:
    if r == INFINITY:
        return max(n - 1, 0)
    assert isinstance(r, int) and r >= 0
    return r


def insert(w: SignedPermutation, r) -> tuple[DominoTableau, DominoTableau]:
    """Domino insertion: returns (P, Q) with equal shape and core delta_r."""
    rr = resolve_r(r, w.n)
    core = delta_core(rr)
    dominoes: dict[int, frozenset[Cell]] = {}
    recording: dict[int, frozenset[Cell]] = {}
    for step in range(1, w.n + 1):
        v = w(step)
        before = set(core.cells()).union(*dominoes.values()) \
            if dominoes else set(core.cells())
        dominoes = _insert_letter(dominoes, core, abs(v), v > 0)
        after = set(core.cells()).union(*dominoes.values())
        grown = after - before
        assert len(grown) == 2
        recording[step] = frozenset(grown)
    p = DominoTableau(core, tuple(sorted(dominoes.items())))
    q = DominoTableau(core, tuple(sorted(recording.items())))
    return p, q


# --- standard bitableaux ------------------------------------------------

@dataclass(frozen=True)
class StandardBitableau:
    """Pair of fillings whose entries partition {1..n}; rows and columns
    increase within each component."""

    first: tuple[tuple[int, ...], ...]
    second: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.first) + sum(len(r) for r in self.second)

    def component(self, c: int):
        return self.first if c == 0 else self.second

    @property
    def shape(self) -> Bipartition:
        return Bipartition(Partition(tuple(len(r) for r in self.first)),
                           Partition(tuple(len(r) for r in self.second)))

    def validate(self) -> None:
        entries = sorted(x for comp in (self.first, self.second)
                         for row in comp for x in row)
        if entries != list(range(1, self.n + 1)):
            raise MalformedTableau(f"entries {entries} are not 1..{self.n}")
        for comp in (self.first, self.second):
            for row in comp:
                if list(row) != sorted(row):
                    raise MalformedTableau("row not increasing")
            for a, b in zip(comp, comp[1:]):
                if len(b) > len(a):
                    raise MalformedTableau("shape not a partition")
                if any(b[j] <= a[j] for j in range(len(b))):
                    raise MalformedTableau("column not increasing")

    def to_text(self) -> str:
        def comp_text(comp):
            if not comp:
                return "∅"
            return " / ".join(" ".join(str(x) for x in row) for row in comp)
        return f"[{comp_text(self.first)} ; {comp_text(self.second)}]"


def qtilde_r(d: DominoTableau) -> StandardBitableau:
    """Bitableau image of a standard domino tableau, via 2-quotients of the
    chain of sub-shapes."""
    from .combinat import staircase_index
    r = staircase_index(d.core)
    comps: list[list[list[int]]] = [[], []]
    prev = q_r(d.core, r)
    for k in d.entries:
        cur = q_r(d.shape_at(k), r)
        placed = False
        for c in (0, 1):
            old, new = prev.component(c), cur.component(c)
            if old == new:
                continue
            diff = [i for i in range(1, len(new.parts) + 1)
                    if new.part(i) != old.part(i)]
            if placed or len(diff) != 1 or new.part(diff[0]) != old.part(diff[0]) + 1:
                raise MalformedTableau(
                    f"quotient chain does not grow by one box at entry {k}")
            row = diff[0]
            if row == len(comps[c]) + 1:
                comps[c].append([])
            comps[c][row - 1].append(k)
            placed = True
        if not placed:
            raise MalformedTableau(f"no growth at entry {k}")
        prev = cur
    out = StandardBitableau(tuple(tuple(r_) for r_ in comps[0]),
                            tuple(tuple(r_) for r_ in comps[1]))
    out.validate()
    return out


def s_t_lambda(w: SignedPermutation, r) -> tuple[StandardBitableau,
                                                 StandardBitableau,
                                                 Bipartition]:
    """(S_r(w), T_r(w), lambda_r(w))."""
    p, q = insert(w, r)
    s = qtilde_r(p)
    t = qtilde_r(q)
    return s, t, s.shape


def verify_insertion_bijection(n: int, r, bound: int = 5) -> dict:
    """Exhaustive check that w -> (S, T) is a bijection onto same-shape
    bitableau pairs, with |W_n| = 2^n n!."""
    if n > bound:
        raise BoundExceeded(f"n = {n} > bound {bound}")
    seen = {}
    shapes: dict[Bipartition, int] = {}
    for w in group_elements(n):
        s, t, lam = s_t_lambda(w, r)
        if s.shape != t.shape:
            return {"ok": False, "reason": f"shape mismatch at {w}"}
        key = (s, t)
        if key in seen:
            return {"ok": False, "reason": f"collision {w} vs {seen[key]}"}
        seen[key] = w
        shapes[lam] = shapes.get(lam, 0) + 1
    expected = 2 ** n * functools.reduce(lambda a, b: a * b, range(1, n + 1), 1)
    ok = len(seen) == expected
    return {
        "ok": ok,
        "count": len(seen),
        "expected": expected,
        "per_shape": {format_bipartition(k): v for k, v in sorted(shapes.items())},
    }


def stl_json(w: SignedPermutation, r) -> str:
    s, t, lam = s_t_lambda(w, r)
    return json.dumps({
        "schema": "1",
        "w": str(w),
        "S": [list(map(list, s.first)), list(map(list, s.second))],
        "T": [list(map(list, t.first)), list(map(list, t.second))],
        "shape": format_bipartition(lam),
    }, ensure_ascii=False, indent=2)
