"""Randomized search for a single semigroup with a given PF set.

Each attempt starts from the forced integers and repeatedly fixes a random
free integer, preferring to make it a gap.  An attempt that reaches an
integer which can be neither gap nor element is abandoned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _bits
from .forced import Fail, PFLike, PFTarget, _forced, _simple, check_naive_condition, context_for
from .irreducible import an_irreducible_with_frobenius
from .semigroup import NumSemigroup, _is_gap_mask, pseudo_frobenius


@dataclass(frozen=True)
class RandomConfig:
    max_attempts: int = 100
    seed: int | None = None

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")


@dataclass(frozen=True)
class DefinitelyEmpty:
    """No semigroup has this PF set (proved, not guessed)."""

    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class AttemptsExhausted:
    """Every attempt hit a dead end; nothing can be concluded."""

    attempts: int

    def __bool__(self):
        return False


@dataclass(frozen=True)
class RandomSearch:
    outcome: NumSemigroup | DefinitelyEmpty | AttemptsExhausted
    attempts: int


def random_search(pf: PFLike, cfg: RandomConfig | None = None) -> RandomSearch:
    """Like :func:`random_semigroup`, but also reports how many attempts were used."""
    cfg = cfg or RandomConfig()
    target = PFTarget.coerce(pf)
    rng = random.Random(cfg.seed)
    pf_t = target.pf
    frob = target.frob

    if len(pf_t) == 1 and frob % 2 == 0:
        return RandomSearch(DefinitelyEmpty("a symmetric semigroup has odd Frobenius number"), 0)
    if len(pf_t) == 1 or (len(pf_t) == 2 and 2 * pf_t[0] == pf_t[1]):
        return RandomSearch(an_irreducible_with_frobenius(frob, rng), 0)
    if not check_naive_condition(target):
        return RandomSearch(DefinitelyEmpty("g1 < gn - g(n-1)"), 0)

    ctx = context_for(target)
    root = _forced(ctx)
    if isinstance(root, Fail):
        return RandomSearch(DefinitelyEmpty(str(root)), 0)

    universe = _bits.interval(1, frob)
    for attempt in range(1, cfg.max_attempts + 1):
        fg, fe = root
        while True:
            free = universe & ~(fg | fe)
            if not free:
                if _is_gap_mask(fg):
                    s = NumSemigroup(fg)
                    if pseudo_frobenius(s) == pf_t:
                        return RandomSearch(s, attempt)
                break
            v = 1 << rng.choice(_bits.to_list(free))
            state = _simple(ctx, fg | v, fe)
            if isinstance(state, Fail):
                state = _simple(ctx, fg, fe | v)
                if isinstance(state, Fail):
                    break
            fg, fe = state
    return RandomSearch(AttemptsExhausted(cfg.max_attempts), cfg.max_attempts)


def random_semigroup(pf: PFLike, cfg: RandomConfig | None = None) -> NumSemigroup | DefinitelyEmpty | AttemptsExhausted:
    """One semigroup with pseudo-Frobenius set ``pf``, found by random walks.

    Returns :class:`DefinitelyEmpty` only when emptiness is proved, and
    :class:`AttemptsExhausted` when ``cfg.max_attempts`` walks all failed.
    """
    return random_search(pf, cfg).outcome
