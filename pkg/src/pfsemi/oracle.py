"""Brute-force ground truth: every numerical semigroup with a given Frobenius number.

Integers ``1..f-1`` are decided in increasing order.  An integer that is
already a sum of chosen elements is forced in; otherwise both choices are
tried, and a choice that puts ``f`` into the semigroup is abandoned.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import _bits
from .errors import BoundExceeded
from .forced import PFLike, PFTarget
from .semigroup import NumSemigroup, pseudo_frobenius

log = logging.getLogger(__name__)

DEFAULT_BOUND = 29


@dataclass
class OracleIndex:
    frobenius: int
    groups: dict[tuple[int, ...], list[NumSemigroup]] = field(default_factory=dict)
    total: int = 0

    def spf(self, pf: PFLike) -> list[NumSemigroup]:
        return list(self.groups.get(PFTarget.coerce(pf).pf, []))


def _check_bound(f: int, bound: int) -> None:
    if f < 1:
        raise ValueError("Frobenius number must be positive")
    if f > bound:
        raise BoundExceeded(f"Frobenius number {f} exceeds the oracle bound {bound}")


def _gap_masks(f: int) -> list[int]:
    width = f + 2
    top = _bits.interval(1, f)
    out = []
    stack = [(1, 1 | (1 << (f + 1)))]
    while stack:
        x, members = stack.pop()
        while x < f and (members >> x) & 1:
            x += 1
        if x >= f:
            out.append(top & ~members)
            continue
        stack.append((x + 1, members))
        grown = _bits.add_generator(members, x, width)
        if not (grown >> f) & 1:
            stack.append((x + 1, grown))
    return out


def _cache_path(cache_dir, f: int) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get("PFSEMI_CACHE_DIR")
    if not cache_dir:
        return None
    return Path(cache_dir) / f"oracle-f{f}.json"


def all_semigroups_with_frobenius(f: int, bound: int = DEFAULT_BOUND, cache_dir=None) -> list[NumSemigroup]:
    """Every numerical semigroup with Frobenius number ``f``, sorted by gap list."""
    _check_bound(f, bound)
    path = _cache_path(cache_dir, f)
    if path is not None and path.exists():
        data = json.loads(path.read_text())
        if data.get("frobenius") == f:
            return [NumSemigroup(_bits.to_mask(g)) for g in data["gaps"]]
        log.warning("ignoring cache file %s with mismatched content", path)
    result = sorted(NumSemigroup(m) for m in _gap_masks(f))
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"frobenius": f, "total": len(result), "gaps": [list(s.gaps) for s in result]}
        path.write_text(json.dumps(payload))
    return result


_INDEX_MEMO: dict[int, OracleIndex] = {}


def build_index(f: int, bound: int = DEFAULT_BOUND, cache_dir=None) -> OracleIndex:
    _check_bound(f, bound)
    if f in _INDEX_MEMO:
        return _INDEX_MEMO[f]
    index = OracleIndex(f)
    for s in all_semigroups_with_frobenius(f, bound, cache_dir):
        index.groups.setdefault(pseudo_frobenius(s), []).append(s)
        index.total += 1
    _INDEX_MEMO[f] = index
    return index


def oracle_spf(pf: PFLike, bound: int = DEFAULT_BOUND, cache_dir=None) -> list[NumSemigroup]:
    """All semigroups with pseudo-Frobenius set ``pf``, by exhaustive filtering."""
    target = PFTarget.coerce(pf)
    return build_index(target.frob, bound, cache_dir).spf(target)
