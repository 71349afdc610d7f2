"""Numerical semigroups stored by their gap set.

A numerical semigroup ``S`` is determined by its finitely many gaps, so the
value type keeps a single integer mask of gaps.  Membership of anything above
the Frobenius number is implicit.
"""

from __future__ import annotations

from functools import total_ordering
from math import gcd
from typing import Iterable

from . import _bits
from .errors import EmptyInput, GcdNotOne, NoPositiveElement, NotAGapSet, PFSemiError


@total_ordering
class NumSemigroup:
    """Immutable numerical semigroup.

    Equality and hashing go through the gap set; ordering is lexicographic on
    the sorted gap list, which is what makes enumeration output canonical.
    """

    __slots__ = ("_gaps", "_frobenius", "_key")

    def __init__(self, gap_mask: int):
        # Callers are expected to pass a genuine gap set; use the module
        # constructors for validated input.
        if gap_mask & 1 or gap_mask < 0:
            raise NotAGapSet("0 can never be a gap")
        self._gaps = gap_mask
        self._frobenius = gap_mask.bit_length() - 1
        self._key: tuple[int, ...] | None = None

    # -- basic data -------------------------------------------------------

    @property
    def gap_mask(self) -> int:
        return self._gaps

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 for N itself."""
        return self._frobenius

    @property
    def gaps(self) -> tuple[int, ...]:
        if self._key is None:
            self._key = tuple(_bits.iter_bits(self._gaps))
        return self._key

    @property
    def genus(self) -> int:
        return self._gaps.bit_count()

    @property
    def membership(self) -> tuple[bool, ...]:
        """Membership profile on ``0..frobenius+1``."""
        return tuple(not (self._gaps >> k) & 1 for k in range(self._frobenius + 2))

    def element_mask(self, upto: int | None = None) -> int:
        """Mask of the elements in ``0..upto`` (default ``frobenius + 1``)."""
        if upto is None:
            upto = self._frobenius + 1
        return _bits.interval(0, upto) & ~self._gaps

    @property
    def small_elements(self) -> tuple[int, ...]:
        return tuple(_bits.iter_bits(self.element_mask()))

    def __contains__(self, x: int) -> bool:
        return x >= 0 and not (self._gaps >> x) & 1

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumSemigroup):
            return NotImplemented
        return self._gaps == other._gaps

    def __lt__(self, other):
        if not isinstance(other, NumSemigroup):
            return NotImplemented
        return self.gaps < other.gaps

    def __hash__(self):
        return hash(self._gaps)

    def __repr__(self):
        gens = ", ".join(map(str, minimal_generators(self)))
        return f"<{gens}>"

    def __reduce__(self):
        return (NumSemigroup, (self._gaps,))

    def to_dict(self) -> dict:
        pf = pseudo_frobenius(self)
        return {
            "frobenius": self.frobenius,
            "gaps": list(self.gaps),
            "min_generators": list(minimal_generators(self)),
            "pseudo_frobenius": list(pf),
            "type": len(pf),
            "multiplicity": multiplicity(self),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NumSemigroup":
        return from_gaps(data["gaps"])


NATURALS = NumSemigroup(0)


def _members_with_frobenius(gens: list[int]) -> int:
    """Element mask (through F+1) of the semigroup generated by ``gens``."""
    m = min(gens)
    width = max(2 * max(gens), 64)
    run = "1" * m
    while True:
        members = _bits.monoid_closure(_bits.to_mask(gens), width)
        profile = format(members, f"0{width}b")[::-1]
        start = profile.find(run)
        if start != -1:
            # Everything from `start` on is a member (keep adding m).
            return members & _bits.interval(0, start)
        width *= 2


def from_generators(gens: Iterable[int]) -> NumSemigroup:
    """Smallest numerical semigroup containing ``gens``."""
    given = sorted(set(gens))
    if not given:
        raise EmptyInput("no generators given")
    if given[0] < 0:
        raise PFSemiError(f"generators must be non-negative, got {given[0]}")
    gens = [x for x in given if x]
    if not gens:
        raise GcdNotOne("only the generator 0 was given")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise GcdNotOne(f"generators {gens} have gcd {g}")
    members = _members_with_frobenius(gens)
    top = members.bit_length() - 1
    return NumSemigroup(_bits.interval(1, top) & ~members)


def closure(elts: Iterable[int], frob: int) -> NumSemigroup:
    """Least numerical semigroup containing ``elts`` and every integer above ``frob``."""
    positive = [x for x in elts if x > 0]
    if not positive:
        raise NoPositiveElement("closure needs at least one positive element")
    m = min(positive)
    return from_generators(positive + list(range(frob + 1, frob + m + 1)))


def represents_gaps(gaps: Iterable[int]) -> bool:
    """True iff ``gaps`` is the gap set of some numerical semigroup."""
    mask = _bits.to_mask(gaps)
    return _is_gap_mask(mask)


def _is_gap_mask(mask: int) -> bool:
    if mask & 1:
        return False
    top = mask.bit_length() - 1
    if top < 0:
        return True
    elements = _bits.interval(1, top) & ~mask
    for a in _bits.iter_bits(elements):
        if (elements << a) & mask:
            return False
    return True


def from_gaps(gaps: Iterable[int]) -> NumSemigroup:
    mask = _bits.to_mask(gaps)
    if not _is_gap_mask(mask):
        raise NotAGapSet(f"{sorted(_bits.iter_bits(mask))} is not the gap set of a numerical semigroup")
    return NumSemigroup(mask)


def frobenius_number(s: NumSemigroup) -> int:
    return s.frobenius


def multiplicity(s: NumSemigroup) -> int:
    return _bits.lowest(~s.gap_mask & ~1)


def pseudo_frobenius(s: NumSemigroup) -> tuple[int, ...]:
    """Gaps ``x`` with ``x + s`` in S for every nonzero element ``s``."""
    gaps = s.gap_mask
    if not gaps:
        return ()
    blocked = 0
    # Only elements below F matter; x + s > F is automatically a member.
    for e in _bits.iter_bits(s.element_mask(s.frobenius) & ~1):
        blocked |= gaps >> e
    return tuple(_bits.iter_bits(gaps & ~blocked))


def type_of(s: NumSemigroup) -> int:
    return len(pseudo_frobenius(s))


def minimal_generators(s: NumSemigroup) -> tuple[int, ...]:
    m = multiplicity(s)
    top = max(s.frobenius + m, 1)
    window = _bits.interval(0, top)
    elements = s.element_mask(top) & ~1
    sums = 0
    for a in _bits.iter_bits(elements):
        sums |= elements << a
    return tuple(_bits.iter_bits(elements & ~sums & window))


def is_irreducible(s: NumSemigroup) -> bool:
    f = s.frobenius
    if f < 1:
        return False
    return s.genus == (f + 2) // 2
