"""Result containers shared by the enumeration methods."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .semigroup import NumSemigroup


@dataclass
class SearchStats:
    nodes: int = 0
    fail_prunes: int = 0
    leaves: int = 0
    wall_time: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.fail_prunes += other.fail_prunes
        self.leaves += other.leaves

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EnumerationResult:
    """All semigroups found for ``pf``, sorted canonically by gap list."""

    pf: tuple[int, ...]
    semigroups: tuple[NumSemigroup, ...]
    stats: SearchStats = field(default_factory=SearchStats, compare=False)
    method: str = "tree"
    complete: bool = True

    @classmethod
    def build(cls, pf, found, stats=None, method="tree", complete=True) -> "EnumerationResult":
        unique = sorted(set(found))
        return cls(tuple(pf), tuple(unique), stats or SearchStats(), method, complete)

    def __len__(self):
        return len(self.semigroups)

    def __iter__(self):
        return iter(self.semigroups)

    @property
    def count(self) -> int:
        return len(self.semigroups)

    def to_dict(self, with_stats: bool = True) -> dict:
        out = {
            "pf": list(self.pf),
            "count": self.count,
            "semigroups": [s.to_dict() for s in self.semigroups],
        }
        if with_stats:
            out["stats"] = self.stats.to_dict()
            out["method"] = self.method
            out["complete"] = self.complete
        return out
