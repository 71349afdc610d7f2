"""Forced gaps and forced elements for a candidate set of pseudo-Frobenius numbers.

Given ``PF = {g1 < ... < gn}``, an integer is a *forced gap* (resp. *forced
element*) if it is a gap (resp. small element) of every numerical semigroup
whose pseudo-Frobenius set is exactly ``PF``.  The functions here compute
growing sets of both kinds by propagation; a collision between the two sides
proves that no such semigroup exists and is reported as :class:`Fail`.

Sets are handled as bit masks over the window ``0..frob+1``.  The public
functions accept and return :class:`ForcedState` values; the ``_``-prefixed
mask-level helpers are what the search modules call in their inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from . import _bits
from .errors import InvalidPF
from .semigroup import closure


@dataclass(frozen=True)
class PFTarget:
    """A validated candidate pseudo-Frobenius set, strictly increasing."""

    pf: tuple[int, ...]

    def __post_init__(self):
        pf = tuple(self.pf)
        object.__setattr__(self, "pf", pf)
        if not pf:
            raise InvalidPF("the pseudo-Frobenius set must be non-empty")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in pf):
            raise InvalidPF(f"pseudo-Frobenius candidates must be integers: {pf}")
        if pf[0] < 1:
            raise InvalidPF(f"pseudo-Frobenius candidates must be positive: {pf}")
        if any(a >= b for a, b in zip(pf, pf[1:])):
            raise InvalidPF(f"pseudo-Frobenius candidates must be strictly increasing: {pf}")

    @classmethod
    def coerce(cls, value: "PFLike") -> "PFTarget":
        if isinstance(value, cls):
            return value
        return cls(tuple(value))

    @property
    def frob(self) -> int:
        return self.pf[-1]

    @property
    def type(self) -> int:
        return len(self.pf)

    def __iter__(self):
        return iter(self.pf)

    def __len__(self):
        return len(self.pf)


PFLike = Union[PFTarget, Iterable[int]]


@dataclass(frozen=True)
class ForcedState:
    """Disjoint sets of forced gaps and forced elements over ``0..frob+1``."""

    frob: int
    gap_mask: int
    element_mask: int = 0

    @classmethod
    def from_sets(cls, frob: int, gaps: Iterable[int], elements: Iterable[int] = ()) -> "ForcedState":
        return cls(frob, _bits.to_mask(gaps), _bits.to_mask(elements))

    @property
    def gaps(self) -> list[int]:
        return _bits.to_list(self.gap_mask)

    @property
    def elements(self) -> list[int]:
        return _bits.to_list(self.element_mask)

    @property
    def free_mask(self) -> int:
        return _bits.interval(1, self.frob) & ~(self.gap_mask | self.element_mask)

    @property
    def free(self) -> list[int]:
        return _bits.to_list(self.free_mask)

    @property
    def is_complete(self) -> bool:
        """True when gaps and elements together cover ``0..frob+1``."""
        return (self.gap_mask | self.element_mask) == _bits.interval(0, self.frob + 1)

    def to_dict(self) -> dict:
        return {
            "status": "ok",
            "forced_gaps": self.gaps,
            "forced_elements": self.elements,
            "free": self.free,
        }


@dataclass(frozen=True)
class Fail:
    """Proof of inconsistency: ``value`` was derived both as a gap and as an element."""

    value: int
    rule: str

    def __bool__(self):
        return False

    def __str__(self):
        return f"fail ({self.value} is both a gap and an element; detected by {self.rule})"

    def to_dict(self) -> dict:
        return {
            "status": "fail",
            "forced_gaps": [],
            "forced_elements": [],
            "free": [],
            "fail_witness": {"value": self.value, "rule": self.rule},
        }


ForcedOutcome = Union[ForcedState, Fail]


class _Context:
    """Per-PF constants shared by all propagation steps."""

    __slots__ = ("pf", "frob", "width", "pf_mask", "divisors", "all_mask", "low_masks")

    def __init__(self, pf: tuple[int, ...]):
        self.pf = pf
        self.frob = pf[-1]
        self.width = self.frob + 2
        self.pf_mask = _bits.to_mask(pf)
        self.divisors = _bits.divisor_masks(self.frob + 1)
        self.all_mask = _bits.interval(0, self.frob + 1)
        # low_masks[i] = {0..f_i}: the x with f_i - x >= 0
        self.low_masks = tuple(_bits.interval(0, f) for f in pf)


@lru_cache(maxsize=256)
def _context(pf: tuple[int, ...]) -> _Context:
    return _Context(pf)


def context_for(pf: PFLike) -> _Context:
    return _context(PFTarget.coerce(pf).pf)


def _conflict(mask: int, rule: str) -> Fail:
    return Fail(_bits.lowest(mask), rule)


# ---------------------------------------------------------------------------
# Mask-level propagation


def _further_gaps(ctx: _Context, fg: int, fe: int):
    diffs = 0
    for e in _bits.iter_bits(fe):
        diffs |= fg >> e
    new = _bits.divisor_closure(diffs, ctx.divisors)
    if new & fe:
        return _conflict(new & fe, "further-forced-gaps")
    return fg | new


def _further_elements(ctx: _Context, fg: int, fe: int):
    frob = ctx.frob
    # big elements: frob - i for 1 <= i < m, where m is the least non-forced-gap
    m = _bits.lowest(~fg & ~1)
    big = _bits.interval(max(frob - m + 1, 0), frob - 1) & ~ctx.pf_mask

    # in_f[i] has bit x set iff pf[i] - x is a known gap (0 <= x <= pf[i])
    width = ctx.width
    rev = _bits.reverse(fg, width)
    ones = twos = 0
    all_ok = ctx.all_mask
    cands = []
    for f, low in zip(ctx.pf, ctx.low_masks):
        in_f = rev >> (width - 1 - f)
        cand = low & ~in_f
        cands.append(cand)
        twos |= ones & cand
        ones |= cand
        all_ok &= in_f | ~_bits.interval(0, f - 1)

    # a gap x needs some f with f - x in S; with no candidate f left, PF is impossible
    stranded = fg & ~ones
    if stranded:
        return _conflict(stranded, "exclusion")
    excl = 0
    # if only one f is possible, f - x is an element
    for x in _bits.iter_bits(fg & ones & ~twos):
        for f, cand in zip(ctx.pf, cands):
            if (cand >> x) & 1:
                if f != x:
                    excl |= 1 << (f - x)
                break
    # a non-gap candidate x with every f - x <= 0 or a gap cannot itself be a gap
    candidates = _bits.interval(1, frob - 1) & ~(fg | fe | excl)
    excl |= candidates & all_ok

    new = fe | excl | big
    if new & fg:
        return _conflict(new & fg, "further-forced-elements")
    return new


def _close_elements(ctx: _Context, fg: int, fe: int):
    closed = _bits.monoid_closure((fe & ~1) | (1 << (ctx.frob + 1)), ctx.width)
    if closed & fg:
        return _conflict(closed & fg, "closure")
    return closed


def _simple(ctx: _Context, fg: int, fe: int):
    """Propagate to a fixpoint; returns ``(fg, fe)`` or :class:`Fail`."""
    while True:
        gaps = _further_gaps(ctx, fg, fe)
        if isinstance(gaps, Fail):
            return gaps
        changed = gaps != fg
        fg = gaps
        elts = _further_elements(ctx, fg, fe)
        if isinstance(elts, Fail):
            return elts
        elts = _close_elements(ctx, fg, elts)
        if isinstance(elts, Fail):
            return elts
        changed = changed or elts != fe
        fe = elts
        if not changed:
            return fg, fe


def _starting_gaps(ctx: _Context):
    pf = ctx.pf
    n = len(pf)
    seeds = _bits.interval(1, n) | ctx.pf_mask
    for i in range(1, n):
        small = closure(pf[:i], pf[i]).element_mask()
        gi = pf[i]
        # {gi - c : c small element, gi - c > 0}
        seeds |= _bits.reverse(small & _bits.interval(0, gi - 1), gi + 1) & ~1
    fg = _bits.divisor_closure(seeds, ctx.divisors)
    # every gap x outside PF needs some f in PF with f - x a (possible) element
    for x in _bits.iter_bits(fg & ~ctx.pf_mask):
        if not any(f > x and not (fg >> (f - x)) & 1 for f in pf):
            return Fail(x, "starting-forced-gaps")
    return fg


def _non_admissible(ctx: _Context, fg: int, fe: int) -> int:
    universe = _bits.interval(1, ctx.frob)
    admissible = fe & universe
    totest = universe & ~(fg | fe)
    while totest:
        v = totest & -totest
        probe = _simple(ctx, fg, fe | v)
        if isinstance(probe, Fail):
            totest ^= v
        else:
            admissible |= probe[1] & universe
            totest &= ~admissible
    return universe & ~admissible


def _forced(ctx: _Context, saturate: bool = False):
    frob = ctx.frob
    if len(ctx.pf) == 1:
        return ctx.divisors[frob], 1 | (1 << (frob + 1))
    fg = _starting_gaps(ctx)
    if isinstance(fg, Fail):
        return fg
    state = _simple(ctx, fg, 0)
    while not isinstance(state, Fail):
        fg, fe = state
        if (fg | fe) == ctx.all_mask:
            return state
        new_gaps = _non_admissible(ctx, fg, fe) & ~fg
        if not new_gaps:
            return state
        state = _simple(ctx, fg | new_gaps, fe)
        if not saturate:
            break
    return state


# ---------------------------------------------------------------------------
# Public API


def _wrap(ctx: _Context, result) -> ForcedOutcome:
    if isinstance(result, Fail):
        return result
    fg, fe = result
    return ForcedState(ctx.frob, fg, fe)


def _state_masks(state: ForcedState) -> tuple[int, int]:
    return state.gap_mask, state.element_mask


def check_naive_condition(pf: PFLike) -> bool:
    """Necessary condition ``g1 >= gn - g(n-1)`` (vacuous for a single element)."""
    pf = PFTarget.coerce(pf).pf
    if len(pf) < 2:
        return True
    return pf[0] >= pf[-1] - pf[-2]


def starting_forced_gaps(pf: PFLike) -> ForcedOutcome:
    ctx = context_for(pf)
    fg = _starting_gaps(ctx)
    if isinstance(fg, Fail):
        return fg
    return ForcedState(ctx.frob, fg, 0)


def further_forced_gaps(state: ForcedState) -> ForcedOutcome:
    """Add ``divisors(g - e)`` for every known gap ``g`` and element ``e`` with ``g > e``."""
    divisors = _bits.divisor_masks(state.frob + 1)
    fg, fe = _state_masks(state)
    diffs = 0
    for e in _bits.iter_bits(fe):
        diffs |= fg >> e
    new = _bits.divisor_closure(diffs, divisors)
    if new & fe:
        return _conflict(new & fe, "further-forced-gaps")
    return ForcedState(state.frob, fg | new, fe)


def further_forced_elements(state: ForcedState, pf: PFLike) -> ForcedOutcome:
    """Add big elements and elements forced by exclusion (no additive closure)."""
    ctx = context_for(pf)
    result = _further_elements(ctx, state.gap_mask, state.element_mask)
    if isinstance(result, Fail):
        return result
    return ForcedState(ctx.frob, state.gap_mask, result)


def close_elements(state: ForcedState) -> ForcedOutcome:
    """Replace the elements by the small elements of the semigroup they generate."""
    frob = state.frob
    closed = _bits.monoid_closure((state.element_mask & ~1) | (1 << (frob + 1)), frob + 2)
    if closed & state.gap_mask:
        return _conflict(closed & state.gap_mask, "closure")
    return ForcedState(frob, state.gap_mask, closed)


def simple_forced_integers(gaps: Iterable[int], elements: Iterable[int], pf: PFLike) -> ForcedOutcome:
    """Quick propagation from known gaps/elements to a fixpoint."""
    ctx = context_for(pf)
    return _wrap(ctx, _simple(ctx, _bits.to_mask(gaps), _bits.to_mask(elements)))


def non_admissible(state: ForcedState, pf: PFLike) -> list[int]:
    """Integers in ``1..frob`` that cannot be elements given ``state``.

    ``state`` should be a fixpoint of :func:`simple_forced_integers`.
    """
    ctx = context_for(pf)
    return _bits.to_list(_non_admissible(ctx, state.gap_mask, state.element_mask))


def forced_integers(pf: PFLike, saturate: bool = False) -> ForcedOutcome:
    """Forced gaps/elements including one round of non-admissibility probing.

    With ``saturate=True`` probing is repeated until it yields nothing new.
    """
    ctx = context_for(pf)
    return _wrap(ctx, _forced(ctx, saturate))


def forced_integers_quick(pf: PFLike) -> ForcedOutcome:
    ctx = context_for(pf)
    fg = _starting_gaps(ctx)
    if isinstance(fg, Fail):
        return fg
    return _wrap(ctx, _simple(ctx, fg, 0))
