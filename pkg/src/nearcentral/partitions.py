"""Integer partitions, marked partitions, and conjugacy class sizes.

A partition here is a weakly decreasing tuple of positive integers. A
marked partition is a pair (shape, mark) where the mark is one of the part
sizes; it labels the conjugacy classes of the subgroup-fixed setting where,
in addition to the cycle type, the length of the cycle through the largest
symbol n is remembered. The mark is a value, not a position: marking either
part of (2,2) means the same thing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Partition",
    "MarkedPartition",
    "enumerate_partitions",
    "enumerate_marked_partitions",
    "multiplicity",
    "num_parts",
    "remove_part",
    "add_part",
    "decrement_part",
    "class_size",
    "marked_class_size",
    "parse_partition",
    "format_partition",
    "parse_marked_partition",
    "format_marked_partition",
]


class Partition:
    """An integer partition stored as a weakly decreasing tuple.

    Parts may be given in any order; the constructor sorts them. Partitions
    are immutable, hashable, and compare equal exactly when their part
    tuples agree.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ordered = tuple(sorted(parts, reverse=True))
        for p in ordered:
            if not isinstance(p, int) or p < 1:
                raise DomainError(f"partition parts must be positive integers, got {p!r}")
        object.__setattr__(self, "_parts", ordered)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Partition is immutable")

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, k: int) -> int:
        return self._parts[k]

    def __contains__(self, i: object) -> bool:
        return i in self._parts

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)


@dataclass(frozen=True)
class MarkedPartition:
    """A partition together with a marked part size."""

    shape: Partition
    mark: int

    def __post_init__(self) -> None:
        if self.mark not in self.shape:
            raise DomainError(f"mark {self.mark} is not a part of {self.shape}")

    @property
    def n(self) -> int:
        return self.shape.n

    def __str__(self) -> str:
        return format_marked_partition(self)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise DomainError(f"cannot partition {n}")
    return [Partition(parts) for parts in _descending_parts(n, n)]


def _descending_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


def enumerate_marked_partitions(n: int) -> list[MarkedPartition]:
    """All marked partitions of n, ordered by (reverse-lex shape, decreasing mark)."""
    out: list[MarkedPartition] = []
    for lam in enumerate_partitions(n):
        for i in sorted(set(lam.parts), reverse=True):
            out.append(MarkedPartition(lam, i))
    return out


def multiplicity(lam: Partition, i: int) -> int:
    """Number of parts of lam equal to i."""
    return lam.parts.count(i)


def num_parts(lam: Partition) -> int:
    """Number of parts, i.e. the number of cycles of a permutation of type lam."""
    return len(lam)


def remove_part(lam: Partition, i: int) -> Partition:
    """lam with one part equal to i deleted."""
    if i not in lam:
        raise DomainError(f"{lam} has no part {i}")
    parts = list(lam.parts)
    parts.remove(i)
    return Partition(parts)


def add_part(lam: Partition, i: int) -> Partition:
    """lam with an extra part i inserted."""
    if i < 1:
        raise DomainError(f"cannot add part {i}")
    return Partition(lam.parts + (i,))


def decrement_part(lam: Partition, i: int) -> Partition:
    """Replace one part i of lam by i - 1, deleting it when i = 1.

    This is the shape obtained by removing the cell holding the largest
    symbol from a tableau whose last symbol sits on a row of length i.
    The result is a partition of n - 1.
    """
    if i not in lam:
        raise DomainError(f"{lam} has no part {i}")
    parts = list(lam.parts)
    parts.remove(i)
    if i > 1:
        parts.append(i - 1)
    return Partition(parts)


def _cycle_type_symmetry(lam: Partition) -> int:
    # The order of the centralizer of a permutation of type lam divided by n:
    # prod_i i^{m_i} * m_i!.
    z = 1
    for i in set(lam.parts):
        m = lam.parts.count(i)
        z *= i**m * math.factorial(m)
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type lam in S_n."""
    return math.factorial(lam.n) // _cycle_type_symmetry(lam)


def marked_class_size(lam: Partition, i: int) -> int:
    """Number of permutations of type lam whose cycle through n has length i.

    Equals (n-1)! * i * m_i(lam) / prod_j j^{m_j} m_j!. Summed over the
    distinct parts i this recovers class_size(lam).
    """
    if i not in lam:
        raise DomainError(f"{lam} has no part {i}")
    m_i = lam.parts.count(i)
    num = math.factorial(lam.n - 1) * i * m_i
    den = _cycle_type_symmetry(lam)
    size, rem = divmod(num, den)
    assert rem == 0
    return size


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts such as "3,1,1"; "" is the empty partition."""
    stripped = text.strip()
    if not stripped:
        return Partition()
    try:
        parts = [int(piece) for piece in stripped.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad partition syntax: {text!r}") from exc
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts)


def parse_marked_partition(text: str) -> MarkedPartition:
    """Parse "shape@mark" syntax such as "3,1,1@1"."""
    if "@" not in text:
        raise DomainError(f"marked partition needs shape@mark, got {text!r}")
    shape_text, _, mark_text = text.partition("@")
    try:
        mark = int(mark_text)
    except ValueError as exc:
        raise DomainError(f"bad mark in {text!r}") from exc
    return MarkedPartition(parse_partition(shape_text), mark)


def format_marked_partition(marked: MarkedPartition) -> str:
    return f"{format_partition(marked.shape)}@{marked.mark}"
