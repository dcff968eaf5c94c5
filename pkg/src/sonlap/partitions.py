"""Integer partitions indexing trace monomials.

A partition is stored canonically as a non-increasing tuple of positive
integers; the empty partition indexes the constant function 1.  The zero
padding seen in display contexts (``p_(2,1,0)``) is a rendering concern only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """Canonical integer partition: non-increasing, strictly positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"invalid part {p!r} in {self.parts!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts not non-increasing: {self.parts!r}")
            prev = p

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a canonical partition: sort descending, strip zeros."""
        kept = []
        for p in parts:
            p = int(p)
            if p < 0:
                raise ValueError(f"negative part in {parts!r}")
            if p:
                kept.append(p)
        return cls(tuple(sorted(kept, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def concat(self, other: "Partition") -> "Partition":
        """Union of parts; indexes the product of the two trace monomials."""
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def padded(self) -> tuple[int, ...]:
        """Parts padded with zeros to ``degree`` entries (display convention)."""
        return self.parts + (0,) * (self.degree - len(self.parts))

    def sort_key(self) -> tuple:
        """Degree ascending, then lexicographically descending parts."""
        return (self.degree, tuple(-p for p in self.parts))

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()"):
            return cls()
        return cls.of(*(int(tok) for tok in text.split(",")))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


def _descending(total: int, max_part: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _descending(total - first, first):
            yield (first,) + rest


def partitions_of(degree: int) -> list[Partition]:
    """All partitions of ``degree``, lexicographically descending."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return [Partition(p) for p in _descending(degree, degree)]


def enumerate_upto(k: int) -> list[Partition]:
    """All partitions of degree 0..k, degree ascending, descending-lex inside.

    The list for k is a prefix of the list for k+1, and each degree-j slice
    has exactly count(j) entries.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: list[Partition] = []
    for j in range(k + 1):
        out.extend(partitions_of(j))
    return out


@lru_cache(maxsize=None)
def _count_max(total: int, max_part: int) -> int:
    if total == 0:
        return 1
    if max_part == 0:
        return 0
    if max_part > total:
        max_part = total
    return _count_max(total - max_part, max_part) + _count_max(total, max_part - 1)


def count(k: int) -> int:
    """The partition function P(k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _count_max(k, k)
