"""Reversing grids: elementary tiles, exhaustive grid enumeration, replay.

A grid is a rectangular van Kampen diagram assembled from five kinds of
tiles.  A relation tile for left letter s and top letter t realizes an
oriented relation s·b1..bq = t·r1..rp, emitting b1..bq on its bottom edge
and r1..rp on its right edge; a cancellation tile absorbs equal letters;
pass-through and empty tiles advance a letter across an ε edge.

Edges are tracked as *segments* (a letter or ε), because a tile whose
output word is empty still contributes an ε edge that later rows must
cross with pass tiles; this is what makes cell counts and shapes agree
with hand-drawn grids.  The boundary words of a grid are the segment
labels with ε dropped.

Enumeration follows one canonical recursion: fill the corner cell, then
the block to its right (left edge = the corner tile's right output), then
the block below (top edge = the corner's bottom output followed by the
right block's bottom edge).  The cell sequence in this order is the trace;
two grids are equal iff their traces are equal, and replaying a trace is
deterministic.  Termination is not guaranteed for arbitrary presentations,
so budgets bound cells per branch and total grids.
"""

from __future__ import annotations

import enum
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .congruence import Budget, DEFAULT_BUDGET
from .core import Presentation, PresentationError, Word

# Edge segments are labelled by a letter id, or by None for ε.
EPS_WORD: Word = ()


class TileKind(enum.Enum):
    RELATION = "relation"
    CANCEL = "cancel"
    PASS_LEFT = "pass_left"
    PASS_TOP = "pass_top"
    EMPTY = "empty"


@dataclass(frozen=True)
class Tile:
    kind: TileKind
    left: int | None
    top: int | None
    right: Word
    bottom: Word
    rel_index: int | None = None
    orientation: int | None = None

    def key(self) -> tuple:
        return (
            self.kind.value,
            -1 if self.left is None else self.left,
            -1 if self.top is None else self.top,
            self.right,
            self.bottom,
            -1 if self.rel_index is None else self.rel_index,
            -1 if self.orientation is None else self.orientation,
        )


class ReversalStatus(enum.Enum):
    COMPLETED = "completed"
    STUCK_ONLY = "stuck_only"
    BUDGET_EXCEEDED = "budget_exceeded"


class GridError(ValueError):
    """Replay failure: mismatched edges or an illegal tile."""


@dataclass(frozen=True)
class Grid:
    """A replayable record of one complete reversing diagram."""

    letters: tuple[str, ...]
    source: tuple[Word, Word]
    target: tuple[Word, Word]
    cells: tuple[Tile, ...]

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def trace_key(self) -> tuple:
        return tuple(c.key() for c in self.cells)

    def choice_cells(self) -> list[Tile]:
        return [c for c in self.cells if c.kind in (TileKind.RELATION, TileKind.CANCEL)]


@dataclass(frozen=True)
class ReversalOutcome:
    status: ReversalStatus
    grids: tuple[Grid, ...]
    stuck: tuple[tuple[int, int], ...]
    cells_filled: int

    @property
    def completed(self) -> bool:
        """Whether the branching search terminated (grids may still be
        empty: then every branch died on a stuck pair)."""
        return self.status is not ReversalStatus.BUDGET_EXCEEDED


def letter_tiles(p: Presentation, s: int, t: int) -> tuple[Tile, ...]:
    """Tiles applicable to a letter/letter cell: the cancellation tile when
    the letters agree, then one tile per oriented relation s... = t...,
    ordered by relation index then orientation."""
    out: list[Tile] = []
    if s == t:
        out.append(Tile(TileKind.CANCEL, s, t, EPS_WORD, EPS_WORD))
    for rel in p.relations:
        for orientation, (side_s, side_t) in enumerate(
            ((rel.lhs, rel.rhs), (rel.rhs, rel.lhs))
        ):
            if side_s and side_t and side_s[0] == s and side_t[0] == t:
                out.append(
                    Tile(
                        TileKind.RELATION,
                        s,
                        t,
                        right=side_t[1:],
                        bottom=side_s[1:],
                        rel_index=rel.index,
                        orientation=orientation,
                    )
                )
    return tuple(out)



def tiles(
    p: Presentation, left: int | None, top: int | None
) -> tuple[Tile, ...]:
    """All tiles applicable to a cell with the given inputs; an empty
    sequence means the cell is stuck."""
    if left is None and top is None:
        return (Tile(TileKind.EMPTY, None, None, EPS_WORD, EPS_WORD),)
    if top is None:
        return (Tile(TileKind.PASS_LEFT, left, None, right=(left,), bottom=EPS_WORD),)
    if left is None:
        return (Tile(TileKind.PASS_TOP, None, top, right=EPS_WORD, bottom=(top,)),)
    return letter_tiles(p, left, top)


def _segs(w: Word) -> tuple:
    """Edge segments of a tile output: its letters, or a single ε segment."""
    return w if w else (None,)


def _word(segs: Sequence) -> Word:
    return tuple(s for s in segs if s is not None)


class _BudgetHit(Exception):
    pass


@dataclass
class _SearchState:
    budget: Budget
    stuck: set[tuple[int, int]] = field(default_factory=set)
    cells_filled: int = 0


@dataclass(frozen=True)
class _Fill:
    cells: tuple[Tile, ...]
    right: tuple
    bottom: tuple


_MAX_DEPTH = 4000


@contextmanager
def _deep_recursion():
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 3 * _MAX_DEPTH))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _fill_all(
    p: Presentation, L: tuple, T: tuple, used: int, st: _SearchState, depth: int
) -> list[_Fill]:
    """All complete fillings of a block with left segments L and top
    segments T.  `used` counts the cells already committed on the current
    branch; exceeding the budget aborts the whole search."""
    if depth > _MAX_DEPTH:
        raise _BudgetHit
    if not L:
        return [_Fill((), (), T)]
    if not T:
        return [_Fill((), L, ())]
    ell, top = L[0], T[0]
    options = tiles(p, ell, top)
    if not options:
        st.stuck.add((ell, top))
        return []
    out: list[_Fill] = []
    b = st.budget
    for tile in options:
        if used + 1 > b.max_cells:
            raise _BudgetHit
        st.cells_filled += 1
        for up in _fill_all(p, _segs(tile.right), T[1:], used + 1, st, depth + 1):
            low_used = used + 1 + len(up.cells)
            lower_top = _segs(tile.bottom) + up.bottom
            for low in _fill_all(p, L[1:], lower_top, low_used, st, depth + 1):
                out.append(
                    _Fill(
                        (tile,) + up.cells + low.cells,
                        up.right + low.right,
                        low.bottom,
                    )
                )
                if len(out) > b.max_grids:
                    raise _BudgetHit
    return out


def _require_reversible(p: Presentation, *words: Word) -> None:
    if p.epsilon_relations:
        raise PresentationError(
            "reversing is undefined for presentations with ε-relations"
        )
    for w in words:
        for i in w:
            if not 0 <= i < len(p.letters):
                raise PresentationError(f"unknown letter id {i}")


def reverse_enumerate(
    p: Presentation, u: Word, v: Word, b: Budget = DEFAULT_BUDGET
) -> ReversalOutcome:
    """Enumerate every reversing grid with source (u, v).

    Grids are returned sorted by trace; stuck letter pairs encountered on
    dead branches are recorded so that "no grid" outcomes carry witnesses.
    """
    _require_reversible(p, u, v)
    st = _SearchState(b)
    try:
        with _deep_recursion():
            fills = _fill_all(p, tuple(u), tuple(v), 0, st, 0)
    except _BudgetHit:
        return ReversalOutcome(
            ReversalStatus.BUDGET_EXCEEDED, (), tuple(sorted(st.stuck)), st.cells_filled
        )
    grids = [
        Grid(p.letters, (u, v), (_word(f.right), _word(f.bottom)), f.cells)
        for f in fills
    ]
    grids.sort(key=Grid.trace_key)
    deduped: list[Grid] = []
    for g in grids:
        if not deduped or deduped[-1].cells != g.cells:
            deduped.append(g)
    if deduped or not st.stuck:
        status = ReversalStatus.COMPLETED
    else:
        status = ReversalStatus.STUCK_ONLY
    return ReversalOutcome(
        status, tuple(deduped), tuple(sorted(st.stuck)), st.cells_filled
    )


def reverse_complemented(
    p: Presentation, u: Word, v: Word, b: Budget = DEFAULT_BUDGET
) -> ReversalOutcome:
    """Deterministic reversing for right-complemented presentations: the
    same recursion, with at most one applicable tile per cell."""
    from .core import is_right_complemented

    if not is_right_complemented(p):
        raise PresentationError("presentation is not right complemented")
    outcome = reverse_enumerate(p, u, v, b)
    assert len(outcome.grids) <= 1, "complemented reversing produced several grids"
    return outcome


# ---------------------------------------------------------------------------
# Target-set search.
#
# Deciding whether (u, v) reverses to some target (in particular to (ε, ε))
# does not need the grids themselves.  The same recursion, memoized on word
# pairs, computes the set of targets while sharing repeated subproblems; ε
# segments can be dropped here because pass tiles never change the words.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TargetSearch:
    targets: frozenset[tuple[Word, Word]]
    complete: bool
    stuck: frozenset[tuple[int, int]]
    explored: int


def reverse_targets(
    p: Presentation, u: Word, v: Word, b: Budget = DEFAULT_BUDGET
) -> TargetSearch:
    """The set of targets of all grids from (u, v).

    `complete` is False when the step budget (max_cells applications), a
    target-set cap (max_grids), a depth cap, or a cyclic subproblem cut the
    search; a True value certifies the target set is exhaustive.
    """
    _require_reversible(p, u, v)
    done: dict[tuple[Word, Word], frozenset[tuple[Word, Word]]] = {}
    active: set[tuple[Word, Word]] = set()
    stuck: set[tuple[int, int]] = set()
    state = {"steps": 0, "complete": True}

    def targets(uu: Word, vv: Word, depth: int) -> frozenset[tuple[Word, Word]]:
        key = (uu, vv)
        if key in done:
            return done[key]
        if key in active or depth > _MAX_DEPTH:
            state["complete"] = False
            return frozenset()
        if not uu or not vv:
            res = frozenset({(uu, vv)})
            done[key] = res
            return res
        active.add(key)
        s, t = uu[0], vv[0]
        u2, v2 = uu[1:], vv[1:]
        options = letter_tiles(p, s, t)
        if not options:
            stuck.add((s, t))
        acc: set[tuple[Word, Word]] = set()
        for tile in options:
            state["steps"] += 1
            if state["steps"] > b.max_cells:
                state["complete"] = False
                break
            for a1, c in targets(tile.right, v2, depth + 1):
                for u1, v1 in targets(u2, tile.bottom + c, depth + 1):
                    acc.add((a1 + u1, v1))
                    if len(acc) > b.max_grids:
                        state["complete"] = False
                        break
        active.discard(key)
        res = frozenset(acc)
        done[key] = res
        return res

    with _deep_recursion():
        result = targets(u, v, 0)
    return TargetSearch(
        result, state["complete"], frozenset(stuck), explored=state["steps"]
    )


# ---------------------------------------------------------------------------
# Replay: rebuild a grid from its trace, compose and split grids.
# ---------------------------------------------------------------------------


def _fill_replay(
    L: tuple,
    T: tuple,
    choose: Callable[[int, int, object], Tile],
) -> _Fill:
    """Deterministic refill.  T holds (segment, tag) pairs; `choose` is
    consulted at letter/letter cells only, all other tiles are forced.
    Returns a _Fill whose bottom keeps (segment, tag) pairs."""
    if not L:
        return _Fill((), (), T)
    if not T:
        return _Fill((), L, ())
    ell = L[0]
    top, tag = T[0]
    if ell is None and top is None:
        tile = Tile(TileKind.EMPTY, None, None, EPS_WORD, EPS_WORD)
    elif top is None:
        tile = Tile(TileKind.PASS_LEFT, ell, None, right=(ell,), bottom=EPS_WORD)
    elif ell is None:
        tile = Tile(TileKind.PASS_TOP, None, top, right=EPS_WORD, bottom=(top,))
    else:
        tile = choose(ell, top, tag)
        if tile.left != ell or tile.top != top:
            raise GridError(
                f"edge mismatch: expected cell ({ell}, {top}), "
                f"trace has ({tile.left}, {tile.top})"
            )
    up = _fill_replay(_segs(tile.right), T[1:], choose)
    lower_top = tuple((s, tag) for s in _segs(tile.bottom)) + up.bottom
    low = _fill_replay(L[1:], lower_top, choose)
    return _Fill((tile,) + up.cells + low.cells, up.right + low.right, low.bottom)


def _tagged(w: Word, tag: object) -> tuple:
    return tuple((s, tag) for s in w)


def replay(g: Grid) -> Grid:
    """Rebuild a grid from its source and trace; raises GridError when the
    trace does not fit."""
    queue = iter(g.choice_cells())

    def choose(ell: int, top: int, tag: object) -> Tile:
        try:
            tile = next(queue)
        except StopIteration:
            raise GridError("trace ended before the grid was filled") from None
        return tile

    with _deep_recursion():
        fill = _fill_replay(tuple(g.source[0]), _tagged(g.source[1], None), choose)
    if next(queue, None) is not None:
        raise GridError("trace has unused cells")
    rebuilt = Grid(
        g.letters,
        g.source,
        (_word(fill.right), _word(s for s, _ in fill.bottom)),
        fill.cells,
    )
    return rebuilt


def compose_h(g1: Grid, g2: Grid) -> Grid:
    """Concatenate grids side by side: g1 from (u, v') to (u', v1') and g2
    from (u', v'') to (u1, v1'') give the grid from (u, v'v'') to
    (u1, v1'v1'')."""
    if g1.letters != g2.letters:
        raise GridError("grids come from different alphabets")
    if g1.target[0] != g2.source[0]:
        raise GridError(
            "edge mismatch: right word of g1 differs from left word of g2"
        )
    queues = {1: iter(g1.choice_cells()), 2: iter(g2.choice_cells())}

    def choose(ell: int, top: int, tag: object) -> Tile:
        tile = next(queues[tag], None)
        if tile is None:
            raise GridError("component trace ended before its region was filled")
        return tile

    T = _tagged(g1.source[1], 1) + _tagged(g2.source[1], 2)
    with _deep_recursion():
        fill = _fill_replay(tuple(g1.source[0]), T, choose)
    for tag, queue in queues.items():
        if next(queue, None) is not None:
            raise GridError(f"grid {tag} has cells not used by the composition")
    composed = Grid(
        g1.letters,
        (g1.source[0], g1.source[1] + g2.source[1]),
        (_word(fill.right), _word(s for s, _ in fill.bottom)),
        fill.cells,
    )
    expected = (g2.target[0], g1.target[1] + g2.target[1])
    if composed.target != expected:
        raise GridError("composition produced an unexpected target")
    return composed


def split_h(g: Grid, k: int) -> tuple[Grid, Grid]:
    """Split a grid below the first k letters of its top word, returning
    the two grids whose horizontal composition is `g`."""
    v = g.source[1]
    if not 0 <= k <= len(v):
        raise GridError(f"split position {k} out of range")
    queue = iter(g.choice_cells())
    by_region: dict[object, list[Tile]] = {1: [], 2: []}

    def record(ell: int, top: int, tag: object) -> Tile:
        tile = next(queue, None)
        if tile is None:
            raise GridError("trace ended before the grid was filled")
        by_region[tag].append(tile)
        return tile

    # First pass: walk the original trace, attributing each choice cell to
    # the region of its top segment.
    T = _tagged(v[:k], 1) + _tagged(v[k:], 2)
    with _deep_recursion():
        _fill_replay(tuple(g.source[0]), T, record)
    if next(queue, None) is not None:
        raise GridError("trace has unused cells")

    left_queue = iter(by_region[1])

    def choose_left(ell: int, top: int, tag: object) -> Tile:
        return next(left_queue)

    with _deep_recursion():
        left_fill = _fill_replay(tuple(g.source[0]), _tagged(v[:k], None), choose_left)
    g_left = Grid(
        g.letters,
        (g.source[0], v[:k]),
        (_word(left_fill.right), _word(s for s, _ in left_fill.bottom)),
        left_fill.cells,
    )

    right_queue = iter(by_region[2])

    def choose_right(ell: int, top: int, tag: object) -> Tile:
        return next(right_queue)

    with _deep_recursion():
        right_fill = _fill_replay(
            tuple(g_left.target[0]), _tagged(v[k:], None), choose_right
        )
    g_right = Grid(
        g.letters,
        (g_left.target[0], v[k:]),
        (_word(right_fill.right), _word(s for s, _ in right_fill.bottom)),
        right_fill.cells,
    )
    return g_left, g_right


# ---------------------------------------------------------------------------
# Validation.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridCheck:
    ok: bool
    failure: str | None = None


def check_grid(
    p: Presentation,
    g: Grid,
    b: Budget = DEFAULT_BUDGET,
    check_equivalence: bool = False,
) -> GridCheck:
    """Replay the trace, requiring every tile to be applicable and every
    edge to match; optionally confirm u·v1 ≡ v·u1 with the oracle."""
    if g.letters != p.letters:
        return GridCheck(False, "alphabet mismatch")
    choice_list = g.choice_cells()
    position = {"i": 0}

    def choose(ell: int, top: int, tag: object) -> Tile:
        i = position["i"]
        if i >= len(choice_list):
            raise GridError(f"trace ended at choice cell {i}")
        tile = choice_list[i]
        position["i"] += 1
        if tile not in letter_tiles(p, ell, top):
            raise GridError(f"cell {i}: tile is not applicable at ({ell}, {top})")
        return tile

    try:
        with _deep_recursion():
            fill = _fill_replay(tuple(g.source[0]), _tagged(g.source[1], None), choose)
    except GridError as exc:
        return GridCheck(False, str(exc))
    if position["i"] != len(choice_list):
        return GridCheck(False, "trace has unused cells")
    if fill.cells != g.cells:
        return GridCheck(False, "replayed cells differ from the stored trace")
    target = (_word(fill.right), _word(s for s, _ in fill.bottom))
    if target != g.target:
        return GridCheck(False, f"target mismatch: replay gives {target}")
    if check_equivalence:
        from .congruence import are_equivalent

        u, v = g.source
        u1, v1 = g.target
        outcome = are_equivalent(p, u + v1, v + u1, b)
        if not outcome.is_equivalent:
            return GridCheck(False, f"u·v1 vs v·u1: {outcome.status.value}")
    return GridCheck(True)


def validate_grid(
    p: Presentation,
    g: Grid,
    b: Budget = DEFAULT_BUDGET,
    check_equivalence: bool = False,
) -> bool:
    return check_grid(p, g, b, check_equivalence).ok


# ---------------------------------------------------------------------------
# Rendering and JSON.
# ---------------------------------------------------------------------------

EPS_LABEL = "ε"


def _fmt_word(letters: tuple[str, ...], w: Word) -> str:
    return " ".join(letters[i] for i in w) if w else EPS_LABEL


def render_grid(g: Grid) -> str:
    """Deterministic ASCII drawing: lattice lines, one label per edge
    segment, ε segments labelled explicitly."""
    from fractions import Fraction

    if not g.cells:
        u, v = g.source
        return f"({_fmt_word(g.letters, u)}, {_fmt_word(g.letters, v)})"

    hedges: dict[tuple, str] = {}
    vedges: dict[tuple, str] = {}

    def label(seg) -> str:
        return EPS_LABEL if seg is None else g.letters[seg]

    queue = iter(g.choice_cells())

    def choose(ell: int, top: int, tag: object) -> Tile:
        return next(queue)

    u, v = g.source
    L0 = tuple((s, (Fraction(i), Fraction(i + 1))) for i, s in enumerate(u))
    T0 = tuple((s, (Fraction(j), Fraction(j + 1))) for j, s in enumerate(v))

    def run(L, T):
        """Returns (right edge segments with y ivs, bottom segments with x ivs)."""
        if not L:
            return (), T
        if not T:
            return L, ()
        (ell, y_iv), (top, x_iv) = L[0], T[0]
        if ell is None and top is None:
            tile = Tile(TileKind.EMPTY, None, None, EPS_WORD, EPS_WORD)
        elif top is None:
            tile = Tile(TileKind.PASS_LEFT, ell, None, right=(ell,), bottom=EPS_WORD)
        elif ell is None:
            tile = Tile(TileKind.PASS_TOP, None, top, right=EPS_WORD, bottom=(top,))
        else:
            tile = choose(ell, top, None)
        y0, y1 = y_iv
        x0, x1 = x_iv
        hedges.setdefault((y0, x0, x1), label(top))
        vedges.setdefault((x0, y0, y1), label(ell))
        bot = _segs(tile.bottom)
        xstep = (x1 - x0) / len(bot)
        bot_ivs = tuple(
            (s, (x0 + i * xstep, x0 + (i + 1) * xstep)) for i, s in enumerate(bot)
        )
        for s, (a, c) in bot_ivs:
            hedges.setdefault((y1, a, c), label(s))
        rgt = _segs(tile.right)
        ystep = (y1 - y0) / len(rgt)
        rgt_ivs = tuple(
            (s, (y0 + i * ystep, y0 + (i + 1) * ystep)) for i, s in enumerate(rgt)
        )
        for s, (a, c) in rgt_ivs:
            vedges.setdefault((x1, a, c), label(s))
        up_right, up_bottom = run(rgt_ivs, T[1:])
        low_right, low_bottom = run(L[1:], bot_ivs + up_bottom)
        return up_right + low_right, low_bottom

    with _deep_recursion():
        run(L0, T0)

    xs = sorted({x for (_, a, c) in hedges for x in (a, c)} | {x for (x, _, _) in vedges})
    ys = sorted({y for (y, _, _) in hedges} | {y for (_, a, c) in vedges for y in (a, c)})
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: i for i, y in enumerate(ys)}
    width = max(
        [4]
        + [len(lab) + 2 for lab in hedges.values()]
        + [len(lab) + 1 for lab in vedges.values()]
    )
    margin = max(len(lab) for lab in vedges.values()) + 1
    ncols = len(xs) + (len(xs) - 1) * width + margin
    nrows = 2 * len(ys) - 1
    canvas = [[" "] * ncols for _ in range(nrows)]

    def col(x) -> int:
        return xi[x] * (width + 1)

    def row(y) -> int:
        return yi[y] * 2

    for (y, a, c), lab in sorted(hedges.items()):
        r, c0, c1 = row(y), col(a), col(c)
        for cc in range(c0, c1 + 1):
            canvas[r][cc] = "-"
        canvas[r][c0] = canvas[r][c1] = "+"
        mid = (c0 + c1 + 1 - len(lab)) // 2
        for k, ch in enumerate(lab):
            canvas[r][mid + k] = ch
    for (x, a, c), lab in sorted(vedges.items()):
        cc, r0, r1 = col(x), row(a), row(c)
        for rr in range(r0, r1 + 1):
            if canvas[rr][cc] == " ":
                canvas[rr][cc] = "|"
        canvas[r0][cc] = canvas[r1][cc] = "+"
        mid_row = (r0 + r1) // 2
        if mid_row % 2 == 0:
            mid_row += 1 if mid_row + 1 <= r1 else -1
        for k, ch in enumerate(lab):
            if cc + 1 + k < ncols:
                canvas[mid_row][cc + 1 + k] = ch
    return "\n".join("".join(line).rstrip() for line in canvas)


def grid_to_json(g: Grid) -> dict:
    def tok(seg) -> str | None:
        return None if seg is None else g.letters[seg]

    def word_tokens(w: Word) -> list[str]:
        return [g.letters[i] for i in w]

    cells = []
    for c in g.cells:
        entry: dict = {
            "left": tok(c.left),
            "top": tok(c.top),
            "kind": c.kind.value,
            "right": word_tokens(c.right),
            "bottom": word_tokens(c.bottom),
        }
        if c.rel_index is not None:
            entry["rel_index"] = c.rel_index
            entry["orientation"] = c.orientation
        cells.append(entry)
    return {
        "source": [word_tokens(g.source[0]), word_tokens(g.source[1])],
        "target": [word_tokens(g.target[0]), word_tokens(g.target[1])],
        "cells": cells,
    }


def grid_from_json(p: Presentation, doc: dict) -> Grid:
    def seg(tok) -> int | None:
        return None if tok is None else p.letter(tok)

    def word(tokens: list[str]) -> Word:
        return tuple(p.letter(t) for t in tokens)

    cells = []
    for c in doc["cells"]:
        cells.append(
            Tile(
                TileKind(c["kind"]),
                seg(c["left"]),
                seg(c["top"]),
                word(c["right"]),
                word(c["bottom"]),
                c.get("rel_index"),
                c.get("orientation"),
            )
        )
    return Grid(
        p.letters,
        (word(doc["source"][0]), word(doc["source"][1])),
        (word(doc["target"][0]), word(doc["target"][1])),
        tuple(cells),
    )
