"""Irreducible characters of the symmetric group.

chi(lam, mu) is computed by the Murnaghan-Nakayama rule in its beta-number
form: removing a border strip of size t from lam corresponds to lowering
one first-column hook length by t, and the sign is read off the number of
hook lengths jumped over. Values are exact integers and the recursion is
memoized on the pair of partitions.
"""

from __future__ import annotations

from functools import cache

from .errors import DomainError
from .partitions import Partition, enumerate_partitions

__all__ = ["chi", "chi_near_hook", "character_table"]


def _beta_numbers(lam: Partition) -> list[int]:
    # First-column hook lengths: lam_k + (rows below row k), strictly decreasing.
    rows = len(lam)
    return [lam[k] + (rows - 1 - k) for k in range(rows)]


def _partition_from_beta(beta: list[int]) -> Partition:
    rows = len(beta)
    parts = [beta[k] - (rows - 1 - k) for k in range(rows)]
    return Partition(p for p in parts if p > 0)


def _strip_removals(lam: Partition, size: int):
    """Yield (sign, reduced shape) for each border strip of the given size."""
    beta = _beta_numbers(lam)
    present = set(beta)
    for b in beta:
        target = b - size
        if target < 0 or target in present:
            continue
        jumped = sum(1 for other in beta if target < other < b)
        reduced = sorted((present - {b}) | {target}, reverse=True)
        yield (-1) ** jumped, _partition_from_beta(reduced)


@cache
def chi(lam: Partition, mu: Partition) -> int:
    """Character value of the irreducible indexed by lam on the class mu."""
    if lam.n != mu.n:
        raise DomainError(f"sizes differ: |{lam}| = {lam.n}, |{mu}| = {mu.n}")
    if len(mu) == 0:
        return 1
    head, rest = mu[0], Partition(mu.parts[1:])
    return sum(sign * chi(reduced, rest) for sign, reduced in _strip_removals(lam, head))


def chi_near_hook(mu: Partition) -> int:
    """chi of the irreducible mu on the class (n-1, 1), without recursion.

    Nonzero only for the row (n), the column (1^n), and the near hooks
    (n-k-1, 2, 1^(k-1)).
    """
    n = mu.n
    if n < 2:
        raise DomainError(f"class (n-1,1) needs n >= 2, got n = {n}")
    parts = mu.parts
    if parts == (n,):
        return 1
    if parts == (1,) * n:
        return (-1) ** n
    k = len(parts) - 1
    if parts == (n - k - 1, 2) + (1,) * (k - 1):
        return (-1) ** k
    return 0


def character_table(n: int) -> list[list[int]]:
    """Full character table of S_n.

    Rows are indexed by the irreducible lam and columns by the class mu,
    both in the order produced by enumerate_partitions(n).
    """
    parts = enumerate_partitions(n)
    return [[chi(lam, mu) for mu in parts] for lam in parts]
