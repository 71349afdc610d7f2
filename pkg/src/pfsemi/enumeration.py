"""Depth-first search for every numerical semigroup with a prescribed PF set.

The root of the search is the output of :func:`pfsemi.forced.forced_integers`.
At each node the least free integer ``v`` is first assumed to be an element
(and the subtree explored), then committed as a gap before moving on to the
next free integer.  Once at most one free integer is left the candidate gap
sets are checked directly.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import _bits
from .errors import TimeBudgetExceeded
from .forced import (
    Fail,
    PFLike,
    PFTarget,
    _Context,
    _forced,
    _simple,
    check_naive_condition,
    context_for,
)
from .result import EnumerationResult, SearchStats
from .semigroup import NumSemigroup, _is_gap_mask, pseudo_frobenius


def _extra_pf_free(ctx: _Context, gaps: int, elements: int) -> bool:
    """True when no gap outside PF can be pseudo-Frobenius for these elements.

    A gap ``x`` is ruled out as soon as ``x + e`` is a gap for some nonzero
    element ``e``.
    """
    covered = 0
    for e in _bits.iter_bits(elements & ~1):
        covered |= gaps >> e
    return not (gaps & ~ctx.pf_mask & ~covered)


class _Explorer:
    def __init__(self, ctx: _Context, deadline: float | None = None,
                 sink: Callable[[NumSemigroup], None] | None = None):
        self.ctx = ctx
        self.deadline = deadline
        self.stats = SearchStats()
        self.found: list[NumSemigroup] = []
        self.sink = sink or self.found.append
        self.universe = _bits.interval(1, ctx.frob)

    def _check_clock(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeBudgetExceeded("time budget exhausted")

    def _emit_if_valid(self, gaps: int, elements: int) -> None:
        self.stats.leaves += 1
        if not _is_gap_mask(gaps):
            return
        if not _extra_pf_free(self.ctx, gaps, elements):
            return
        s = NumSemigroup(gaps)
        # only reachable with caller-supplied roots that skip the starting gaps
        if pseudo_frobenius(s) != self.ctx.pf:
            return
        self.sink(s)

    def ending(self, fg: int, fe: int) -> None:
        free = self.universe & ~(fg | fe)
        if not free:
            self._emit_if_valid(fg, fe)
        elif not free & (free - 1):
            self._emit_if_valid(fg, fe | free)
            self._emit_if_valid(fg | free, fe)
        else:
            raise ValueError("ending condition needs at most one free integer")

    def split(self, fg: int, fe: int):
        """Walk the free integers of one node.

        Returns the element-branch states to explore and the final gap set for
        the ending check, or ``None`` for the latter when the node is dead.
        """
        ctx = self.ctx
        self.stats.nodes += 1
        free = self.universe & ~(fg | fe)
        nfg = fg
        children = []
        while free & (free - 1):
            v = free & -free
            left = _simple(ctx, nfg, fe | v)
            if isinstance(left, Fail):
                self.stats.fail_prunes += 1
                right = _simple(ctx, nfg | v, fe)
                if isinstance(right, Fail):
                    self.stats.fail_prunes += 1
                    return children, None
            else:
                children.append(left)
            nfg |= v
            free ^= v
        return children, nfg

    def explore(self, fg: int, fe: int) -> None:
        self._check_clock()
        ctx = self.ctx
        self.stats.nodes += 1
        free = self.universe & ~(fg | fe)
        nfg = fg
        while free & (free - 1):
            v = free & -free
            left = _simple(ctx, nfg, fe | v)
            if isinstance(left, Fail):
                self.stats.fail_prunes += 1
                right = _simple(ctx, nfg | v, fe)
                if isinstance(right, Fail):
                    # v can be neither: nothing further below this node
                    self.stats.fail_prunes += 1
                    return
            else:
                self.explore(*left)
            nfg |= v
            free ^= v
        self.ending(nfg, fe)


def ending_condition(gaps, elements, pf: PFLike, sink: Callable[[NumSemigroup], None]) -> None:
    """Emit to ``sink`` every completion of a node with at most one free integer."""
    ctx = context_for(pf)
    _Explorer(ctx, sink=sink).ending(_bits.to_mask(gaps), _bits.to_mask(elements))


def explore(gaps, elements, pf: PFLike, sink: Callable[[NumSemigroup], None]) -> SearchStats:
    """Depth-first search below the node ``(gaps, elements)``; results go to ``sink``."""
    ctx = context_for(pf)
    explorer = _Explorer(ctx, sink=sink)
    explorer.explore(_bits.to_mask(gaps), _bits.to_mask(elements))
    return explorer.stats


def _explore_task(pf: tuple[int, ...], fg: int, fe: int, budget: float | None):
    """Worker entry point: explore one subtree, return gap masks and stats."""
    deadline = None if budget is None else time.monotonic() + budget
    explorer = _Explorer(context_for(pf), deadline)
    complete = True
    try:
        explorer.explore(fg, fe)
    except TimeBudgetExceeded:
        complete = False
    return [s.gap_mask for s in explorer.found], explorer.stats, complete


def _shortcut(target: PFTarget) -> EnumerationResult | None:
    pf = target.pf
    if len(pf) == 1 or (len(pf) == 2 and 2 * pf[0] == pf[1]):
        from .irreducible import irreducibles_with_frobenius

        t0 = time.perf_counter()
        f = target.frob
        if len(pf) == 1 and f % 2 == 0:
            found = []
        else:
            found = irreducibles_with_frobenius(f)
        stats = SearchStats(wall_time=time.perf_counter() - t0)
        return EnumerationResult.build(pf, found, stats, method="irreducible-shortcut")
    return None


def semigroups_with_pseudo_frobenius(
    pf: PFLike,
    *,
    workers: int = 1,
    time_budget: float | None = None,
    use_shortcut: bool = True,
) -> EnumerationResult:
    """Every numerical semigroup whose pseudo-Frobenius set is exactly ``pf``.

    ``workers > 1`` explores the subtrees hanging off the root in separate
    processes; the result is identical to the sequential run.  When
    ``time_budget`` (seconds) runs out, :class:`TimeBudgetExceeded` is raised
    with the partial result attached.
    """
    target = PFTarget.coerce(pf)
    if use_shortcut:
        shortcut = _shortcut(target)
        if shortcut is not None:
            return shortcut

    t0 = time.perf_counter()
    stats = SearchStats()
    if not check_naive_condition(target):
        stats.wall_time = time.perf_counter() - t0
        return EnumerationResult.build(target.pf, [], stats)

    ctx = context_for(target)
    root = _forced(ctx)
    if isinstance(root, Fail):
        stats.fail_prunes += 1
        stats.wall_time = time.perf_counter() - t0
        return EnumerationResult.build(target.pf, [], stats)

    deadline = None if time_budget is None else time.monotonic() + time_budget
    explorer = _Explorer(ctx, deadline)
    try:
        if workers <= 1:
            explorer.explore(*root)
        else:
            _parallel(explorer, target.pf, root, workers, deadline)
    except TimeBudgetExceeded as exc:
        explorer.stats.wall_time = time.perf_counter() - t0
        partial = EnumerationResult.build(
            target.pf, explorer.found, explorer.stats, complete=False
        )
        raise TimeBudgetExceeded(str(exc), partial) from None

    explorer.stats.wall_time = time.perf_counter() - t0
    return EnumerationResult.build(target.pf, explorer.found, explorer.stats)


def _parallel(explorer: _Explorer, pf, root, workers: int, deadline: float | None) -> None:
    children, final_gaps = explorer.split(*root)
    budget = None if deadline is None else max(deadline - time.monotonic(), 0.0)
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_explore_task, pf, fg, fe, budget) for fg, fe in children]
        for fut in futures:
            masks, sub_stats, sub_complete = fut.result()
            explorer.found.extend(NumSemigroup(m) for m in masks)
            explorer.stats.merge(sub_stats)
            complete = complete and sub_complete
    if not complete:
        raise TimeBudgetExceeded("time budget exhausted")
    if final_gaps is not None:
        explorer.ending(final_gaps, root[1])
