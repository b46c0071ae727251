"""Standard Young tableaux, dimensions, and cell contents.

Shapes are drawn in English notation: row 1 on top, row r has lam[r-1]
cells, and the cell in row j and column k (both 1-indexed) has content
k - j. A marked tableau is a standard tableau whose largest symbol n ends
a row of length i; removing that cell gives a tableau of the decremented
shape, which is why marked enumeration refines the usual branching rule.
"""

from __future__ import annotations

import math
from functools import cache

from .errors import DomainError
from .partitions import Partition, decrement_part

__all__ = [
    "StandardTableau",
    "enumerate_syt",
    "enumerate_syt_marked",
    "dimension",
    "content_vector",
    "marked_content",
    "content_sums",
    "content_polynomial",
    "shape_contents",
]


class StandardTableau:
    """An immutable standard filling of a partition shape."""

    __slots__ = ("_rows", "_where")

    def __init__(self, rows: tuple[tuple[int, ...], ...]):
        lengths = [len(row) for row in rows]
        if any(lengths[k] < lengths[k + 1] for k in range(len(lengths) - 1)):
            raise DomainError("row lengths must be weakly decreasing")
        n = sum(lengths)
        symbols = [s for row in rows for s in row]
        if sorted(symbols) != list(range(1, n + 1)):
            raise DomainError("filling must use the symbols 1..n exactly once")
        for row in rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                raise DomainError("rows must increase left to right")
        for r in range(1, len(rows)):
            if any(rows[r - 1][c] >= rows[r][c] for c in range(len(rows[r]))):
                raise DomainError("columns must increase top to bottom")
        where = {}
        for r, row in enumerate(rows, start=1):
            for c, s in enumerate(row, start=1):
                where[s] = (r, c)
        object.__setattr__(self, "_rows", tuple(tuple(row) for row in rows))
        object.__setattr__(self, "_where", where)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("StandardTableau is immutable")

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self._rows)

    @property
    def n(self) -> int:
        return len(self._where)

    def position(self, symbol: int) -> tuple[int, int]:
        """(row, column) of a symbol, 1-indexed."""
        try:
            return self._where[symbol]
        except KeyError:
            raise DomainError(f"symbol {symbol} not in tableau") from None

    def content(self, symbol: int) -> int:
        r, c = self.position(symbol)
        return c - r

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StandardTableau):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"StandardTableau({self._rows!r})"


def enumerate_syt(lam: Partition) -> list[StandardTableau]:
    """All standard tableaux of shape lam.

    Symbols are placed from n downward at removable corners, trying the
    topmost corner first, so the output order is deterministic.
    """
    filling: dict[tuple[int, int], int] = {}
    results: list[StandardTableau] = []
    lengths = list(lam.parts)

    def place(symbol: int) -> None:
        if symbol == 0:
            rows = []
            for r, length in enumerate(lam.parts, start=1):
                rows.append(tuple(filling[(r, c)] for c in range(1, length + 1)))
            results.append(StandardTableau(tuple(rows)))
            return
        for r in range(len(lengths)):
            length = lengths[r]
            if length == 0:
                break
            if r + 1 < len(lengths) and lengths[r + 1] == length:
                continue  # not a removable corner
            filling[(r + 1, length)] = symbol
            lengths[r] = length - 1
            place(symbol - 1)
            lengths[r] = length
            del filling[(r + 1, length)]

    place(lam.n)
    return results


def enumerate_syt_marked(lam: Partition, i: int) -> list[StandardTableau]:
    """Standard tableaux of shape lam whose largest symbol ends a row of length i."""
    if i not in lam:
        raise DomainError(f"{lam} has no part {i}")
    n = lam.n
    return [tab for tab in enumerate_syt(lam) if tab.position(n)[1] == i]


def _conjugate_lengths(lam: Partition) -> list[int]:
    if len(lam) == 0:
        return []
    cols = [0] * lam[0]
    for part in lam:
        for c in range(part):
            cols[c] += 1
    return cols


@cache
def dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    cols = _conjugate_lengths(lam)
    hooks = 1
    for r, part in enumerate(lam, start=1):
        for c in range(1, part + 1):
            hooks *= part - c + cols[c - 1] - r + 1
    d, rem = divmod(math.factorial(lam.n), hooks)
    assert rem == 0
    return d


def content_vector(tab: StandardTableau) -> tuple[int, ...]:
    """Contents of the cells holding 1, 2, ..., n, in symbol order."""
    return tuple(tab.content(s) for s in range(1, tab.n + 1))


def marked_content(lam: Partition, i: int) -> int:
    """Content of the cell where n sits in any tableau marked at part i.

    The cell is the last one of the lowest row of length i, so its content
    is i minus the number of rows of length at least i.
    """
    if i not in lam:
        raise DomainError(f"{lam} has no part {i}")
    return i - sum(1 for part in lam if part >= i)


def shape_contents(lam: Partition) -> list[int]:
    """Multiset of contents of all cells of lam."""
    return [c - r for r, part in enumerate(lam, start=1) for c in range(1, part + 1)]


def content_sums(lam: Partition) -> tuple[int, int]:
    """Sum of contents and sum of squared contents of the shape."""
    cs = shape_contents(lam)
    return sum(cs), sum(c * c for c in cs)


def content_polynomial(lam: Partition) -> list[int]:
    """Coefficients of prod over cells of (t + content), low degree first.

    Entry k is the coefficient of t^k, which equals the elementary
    symmetric polynomial of degree n - k in the contents of lam.
    """
    coeffs = [1]
    for c in shape_contents(lam):
        nxt = [0] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            nxt[k + 1] += a
            nxt[k] += c * a
        coeffs = nxt
    return coeffs
