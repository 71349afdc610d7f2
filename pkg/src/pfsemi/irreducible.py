"""Irreducible numerical semigroups and the descent method built on them.

An irreducible semigroup with Frobenius number ``f`` contains exactly one of
``x`` and ``f - x`` for every ``0 < x < f`` (with ``f/2`` excluded and a gap
when ``f`` is even).  :func:`irreducibles_with_frobenius` decides those pairs
by depth-first search, keeping the element side closed under addition.

:func:`enumerate_via_irreducibles` goes the other way: starting from the
irreducibles that contain the forced elements, it removes minimal generators
one at a time until the pseudo-Frobenius set matches.
"""

from __future__ import annotations

import random
import time
from typing import Iterable

from . import _bits
from .forced import Fail, PFLike, PFTarget, _forced, context_for
from .result import EnumerationResult, SearchStats
from .semigroup import NumSemigroup, minimal_generators, pseudo_frobenius


def _pairs(f: int) -> list[int]:
    return [x for x in range(1, (f + 1) // 2) if 2 * x != f]


def _search(f: int, required: int, rng: random.Random | None = None, first_only: bool = False):
    width = f + 2
    below_f = _bits.interval(1, f - 1)
    gaps = 1 << f
    if f % 2 == 0:
        gaps |= 1 << (f // 2)
    elements = _bits.monoid_closure((required & _bits.interval(1, f)) | (1 << (f + 1)), width)
    if elements & gaps:
        return []
    pairs = _pairs(f)
    found: list[NumSemigroup] = []

    def settle(elements: int, gaps: int):
        # e in S forces f - e out of S
        gaps |= _bits.reverse(elements & below_f, f + 1)
        if elements & gaps:
            return None
        return elements, gaps

    start = settle(elements, gaps)
    if start is None:
        return []

    # explicit stack: (pair index, elements, gaps)
    stack = [(0, *start)]
    while stack:
        i, elements, gaps = stack.pop()
        if i == len(pairs):
            found.append(NumSemigroup(_bits.interval(1, f) & ~elements))
            if first_only:
                break
            continue
        x = pairs[i]
        y = f - x
        options = []
        for member in (y, x):
            if (gaps >> member) & 1:
                continue
            grown = elements if (elements >> member) & 1 else _bits.add_generator(elements, member, width)
            nxt = settle(grown, gaps)
            if nxt is not None:
                options.append((i + 1, *nxt))
        if rng is not None:
            rng.shuffle(options)
        stack.extend(options)
    return found


def irreducibles_with_frobenius(f: int) -> list[NumSemigroup]:
    """All irreducible numerical semigroups with Frobenius number ``f``, sorted."""
    if f < 1:
        raise ValueError("Frobenius number must be positive")
    return sorted(_search(f, 0))


def irreducibles_containing(f: int, required: Iterable[int]) -> list[NumSemigroup]:
    """Irreducibles with Frobenius number ``f`` containing every integer in ``required``."""
    if f < 1:
        raise ValueError("Frobenius number must be positive")
    req = _bits.to_mask(x for x in required if x >= 0)
    if (req >> f) & 1:
        return []
    return sorted(_search(f, req))


def an_irreducible_with_frobenius(f: int, rng: random.Random | None = None) -> NumSemigroup:
    """One irreducible semigroup with Frobenius number ``f``, picked by a randomized search."""
    found = _search(f, 0, rng=rng or random.Random(), first_only=True)
    return found[0]


def enumerate_via_irreducibles(pf: PFLike) -> EnumerationResult:
    """Semigroups with pseudo-Frobenius set ``pf`` by descent from irreducibles.

    A child of a node ``S`` is ``S`` minus one minimal generator ``x < frob``
    that is not a forced element, such that some ``g - x`` (``g`` in PF) is in
    the child, and such that every pseudo-Frobenius number of the child other
    than ``frob`` lies ``<=_child`` some smaller member of PF.  Nodes whose PF
    set already matches are emitted and not expanded further: any proper
    subsemigroup reached from them has the removed generator as an extra
    pseudo-Frobenius number.
    """
    target = PFTarget.coerce(pf)
    t0 = time.perf_counter()
    stats = SearchStats()
    ctx = context_for(target)
    root = _forced(ctx)
    if isinstance(root, Fail):
        stats.fail_prunes += 1
        stats.wall_time = time.perf_counter() - t0
        return EnumerationResult.build(target.pf, [], stats, method="irreducible")

    frob = target.frob
    fe = root[1]
    middle = [g for g in target.pf if 2 * g > frob and g < frob]
    required = fe | _bits.to_mask(middle)
    seeds = irreducibles_containing(frob, _bits.iter_bits(required))

    pf_tuple = target.pf
    smaller = pf_tuple[:-1]
    visited = {s.gap_mask for s in seeds}
    stack = list(seeds)
    found = []
    while stack:
        node = stack.pop()
        stats.nodes += 1
        if pseudo_frobenius(node) == pf_tuple:
            stats.leaves += 1
            found.append(node)
            continue
        for x in minimal_generators(node):
            if x >= frob or (fe >> x) & 1:
                continue
            child_gaps = node.gap_mask | (1 << x)
            if child_gaps in visited:
                continue
            visited.add(child_gaps)
            if not any(g >= x and not (child_gaps >> (g - x)) & 1 for g in pf_tuple):
                stats.fail_prunes += 1
                continue
            child = NumSemigroup(child_gaps)
            if not all(
                any(g >= p and not (child_gaps >> (g - p)) & 1 for g in smaller)
                for p in pseudo_frobenius(child)
                if p != frob
            ):
                stats.fail_prunes += 1
                continue
            stack.append(child)
    stats.wall_time = time.perf_counter() - t0
    return EnumerationResult.build(pf_tuple, found, stats, method="irreducible")
