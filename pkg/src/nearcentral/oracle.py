"""Brute-force verifier working directly in the group algebra of S_n.

Everything here is computed from first principles: permutations as tuples of
images, algebra elements as literal dictionaries of rational coefficients,
idempotents as explicit character sums over the whole group.  Factorial cost
throughout, so the main entry points are guarded; the point is to be an
independent ground truth for the closed-form code, not to be fast.
"""

from __future__ import annotations

import itertools
import math
from array import array
from fractions import Fraction
from functools import cache, reduce
from typing import Iterable, Iterator, Mapping, Sequence

from .characters import chi
from .errors import DomainError, GuardExceeded, check_guard
from .genchar import (
    Asf,
    Const,
    Elementary,
    Power,
    PowerSum,
    Product,
    Sum,
    VarRange,
    Xn,
    genchar,
    genchar_strahov,
    table1_rows,
)
from .partitions import (
    MarkedPartition,
    Partition,
    decrement_part,
    enumerate_marked_partitions,
    enumerate_partitions,
    marked_class_size,
)
from .tableaux import dimension, marked_content

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "ga_multiply",
    "class_sum",
    "jm_element",
    "central_idempotent",
    "z1_idempotent",
    "extract_marked_coefficient",
    "is_near_central",
    "jm_power_coefficients",
    "enumerate_star_factorizations",
    "evaluate_asf_at_jm",
    "VerificationError",
    "run_verify",
]


class Permutation:
    """A permutation of {1, .., n} stored in one-line notation.

    Composition is right to left: (p * q)(x) = p(q(x)).
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation in one-line notation: {images!r}")
        self._images = images

    @classmethod
    def _make(cls, images: tuple[int, ...]) -> "Permutation":
        # internal fast path: caller guarantees images is a valid one-line tuple
        self = object.__new__(cls)
        self._images = images
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._make(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> "Permutation":
        if not (1 <= a <= n and 1 <= b <= n and a != b):
            raise DomainError(f"({a} {b}) is not a transposition inside S_{n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls._make(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not (1 <= x <= n) or x in seen:
                    raise DomainError(f"bad cycle symbol {x} in {cycle!r}")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:]):
                images[a - 1] = b
            if cycle:
                images[cycle[-1] - 1] = cycle[0]
        return cls._make(tuple(images))

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def n(self) -> int:
        return len(self._images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= len(self._images):
            raise DomainError(f"{x} is outside 1..{len(self._images)}")
        return self._images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._images) != len(other._images):
            raise DomainError("cannot compose permutations of different degrees")
        mine = self._images
        return Permutation._make(tuple(mine[x - 1] for x in other._images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for spot, image in enumerate(self._images, 1):
            inv[image - 1] = spot
        return Permutation._make(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each led by its smallest symbol, sorted."""
        out = []
        seen = [False] * (len(self._images) + 1)
        for start in range(1, len(self._images) + 1):
            if seen[start] or self._images[start - 1] == start:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self._images[x - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        lengths = []
        seen = [False] * (len(self._images) + 1)
        for start in range(1, len(self._images) + 1):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self._images[x - 1]
                length += 1
            lengths.append(length)
        return Partition(lengths)

    def cycle_length_through(self, x: int) -> int:
        if not 1 <= x <= len(self._images):
            raise DomainError(f"{x} is outside 1..{len(self._images)}")
        length = 1
        y = self._images[x - 1]
        while y != x:
            y = self._images[y - 1]
            length += 1
        return length

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


class GroupAlgebraElement:
    """A formal rational linear combination of permutations of fixed degree.

    Zero coefficients are never stored, so equality is dictionary equality.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction | int] = ()):
        clean: dict[Permutation, Fraction] = {}
        for perm, coeff in dict(terms).items():
            if perm.n != n:
                raise DomainError(f"{perm!r} does not live in S_{n}")
            c = Fraction(coeff)
            if c:
                clean[perm] = c
        self._n = n
        self._terms = clean

    @classmethod
    def _make(cls, n: int, terms: dict[Permutation, Fraction]) -> "GroupAlgebraElement":
        self = object.__new__(cls)
        self._n = n
        self._terms = terms
        return self

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls._make(n, {})

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls._make(n, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def from_permutation(
        cls, perm: Permutation, coeff: Fraction | int = 1
    ) -> "GroupAlgebraElement":
        return cls(perm.n, {perm: coeff})

    @property
    def n(self) -> int:
        return self._n

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def items(self) -> Iterator[tuple[Permutation, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> Iterator[Permutation]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self._n == other._n
            and self._terms == other._terms
        )

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self._n != other._n:
            raise DomainError("cannot add elements of different group algebras")
        out = dict(self._terms)
        for perm, c in other._terms.items():
            s = out.get(perm, Fraction(0)) + c
            if s:
                out[perm] = s
            else:
                out.pop(perm, None)
        return GroupAlgebraElement._make(self._n, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement._make(
            self._n, {perm: -c for perm, c in self._terms.items()}
        )

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar: Fraction | int) -> "GroupAlgebraElement":
        c = Fraction(scalar)
        if not c:
            return GroupAlgebraElement.zero(self._n)
        return GroupAlgebraElement._make(
            self._n, {perm: c * v for perm, v in self._terms.items()}
        )

    def __repr__(self) -> str:
        return f"<group algebra element over S_{self._n}, {len(self._terms)} terms>"


# composition tables pay off once products touch most of the group; 'H' is
# enough because the table is only ever built for n! <= 720
_TABLE_MAX_N = 6
_DIRECT_LIMIT = 20000
_POOL_MAX_N = 7


@cache
def _perm_pool(n: int) -> tuple[Permutation, ...]:
    return tuple(
        Permutation._make(t) for t in itertools.permutations(range(1, n + 1))
    )


@cache
def _compose_table(n: int):
    pool = _perm_pool(n)
    index = {p._images: k for k, p in enumerate(pool)}
    rows = []
    for p in pool:
        mine = p._images
        rows.append(
            array("H", (index[tuple(mine[x - 1] for x in q._images)] for q in pool))
        )
    return pool, index, rows


def _integerized(g: GroupAlgebraElement) -> tuple[dict[Permutation, int], int]:
    den = math.lcm(*(c.denominator for c in g._terms.values())) if g else 1
    return (
        {p: c.numerator * (den // c.denominator) for p, c in g._terms.items()},
        den,
    )


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Product in the group algebra, expanded term by term."""
    if a.n != b.n:
        raise DomainError("cannot multiply elements of different group algebras")
    n = a.n
    ta, da = _integerized(a)
    tb, db = _integerized(b)
    den = da * db
    if n <= _TABLE_MAX_N and len(ta) * len(tb) > _DIRECT_LIMIT:
        pool, index, rows = _compose_table(n)
        acc = [0] * len(pool)
        cols = [(index[q._images], cb) for q, cb in tb.items()]
        for p, ca in ta.items():
            row = rows[index[p._images]]
            for col, cb in cols:
                acc[row[col]] += ca * cb
        terms = {pool[k]: Fraction(v, den) for k, v in enumerate(acc) if v}
    else:
        raw: dict[tuple[int, ...], int] = {}
        for p, ca in ta.items():
            mine = p._images
            for q, cb in tb.items():
                key = tuple(mine[x - 1] for x in q._images)
                raw[key] = raw.get(key, 0) + ca * cb
        terms = {
            Permutation._make(k): Fraction(v, den) for k, v in raw.items() if v
        }
    return GroupAlgebraElement._make(n, terms)


def _ga_power(g: GroupAlgebraElement, k: int) -> GroupAlgebraElement:
    out = GroupAlgebraElement.one(g.n)
    base = g
    while k:
        if k & 1:
            out = ga_multiply(out, base)
        k >>= 1
        if k:
            base = ga_multiply(base, base)
    return out


def _classified_perms(n: int) -> Iterable[tuple[Permutation, Partition, int]]:
    if n <= _POOL_MAX_N:
        return _classified_pool(n)
    return (
        (p, p.cycle_type(), p.cycle_length_through(n))
        for p in map(Permutation._make, itertools.permutations(range(1, n + 1)))
    )


@cache
def _classified_pool(n: int) -> tuple[tuple[Permutation, Partition, int], ...]:
    if n == 0:
        return ((Permutation._make(()), Partition(()), 0),)
    return tuple(
        (p, p.cycle_type(), p.cycle_length_through(n)) for p in _perm_pool(n)
    )


def class_sum(
    lam: Partition, i: int, n: int | None = None, *, max_n: int | None = None
) -> GroupAlgebraElement:
    """Sum of all permutations with cycle type lam and n on an i-cycle."""
    if n is None:
        n = lam.n
    elif n != lam.n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if i not in lam:
        raise DomainError(f"mark {i} is not a part of {lam}")
    check_guard(n, max_n, "marked class enumeration")
    shape = lam.parts
    terms = {
        perm: Fraction(1)
        for perm, ctype, through in _classified_perms(n)
        if ctype.parts == shape and through == i
    }
    return GroupAlgebraElement._make(n, terms)


def jm_element(k: int, n: int) -> GroupAlgebraElement:
    """The Jucys-Murphy element J_k: the sum of (i k) for i < k."""
    if not 2 <= k <= n:
        raise DomainError(f"Jucys-Murphy index {k} is outside 2..{n}")
    terms = {
        Permutation.transposition(i, k, n): Fraction(1) for i in range(1, k)
    }
    return GroupAlgebraElement._make(n, terms)


def central_idempotent(
    lam: Partition, *, max_n: int | None = None
) -> GroupAlgebraElement:
    """The primitive central idempotent of C[S_n] attached to lam."""
    n = lam.n
    check_guard(n, max_n, "central idempotent expansion")
    d = dimension(lam)
    nf = math.factorial(n)
    terms = {
        perm: Fraction(d * chi(lam, ctype), nf)
        for perm, ctype, _ in _classified_perms(n)
    }
    return GroupAlgebraElement._make(n, {p: c for p, c in terms.items() if c})


def _embed(g: GroupAlgebraElement, n: int) -> GroupAlgebraElement:
    # extend each permutation by fixed points up to degree n
    if g.n > n:
        raise DomainError("cannot embed into a smaller group")
    tail = tuple(range(g.n + 1, n + 1))
    return GroupAlgebraElement._make(
        n, {Permutation._make(p._images + tail): c for p, c in g._terms.items()}
    )


def z1_idempotent(
    lam: Partition, i: int, *, max_n: int | None = None
) -> GroupAlgebraElement:
    """Primitive idempotent of the marked-class algebra for (lam, i).

    The product of the central idempotent for lam with the embedded central
    idempotent for the reduced shape i_-(lam) over S_{n-1}.
    """
    n = lam.n
    if i not in lam:
        raise DomainError(f"mark {i} is not a part of {lam}")
    check_guard(n, max_n, "marked idempotent expansion")
    return _z1_idempotent_cached(lam, i)


@cache
def _z1_idempotent_cached(lam: Partition, i: int) -> GroupAlgebraElement:
    n = lam.n
    top = central_idempotent(lam, max_n=n)
    reduced = central_idempotent(decrement_part(lam, i), max_n=n)
    return ga_multiply(top, _embed(reduced, n))


def extract_marked_coefficient(
    g: GroupAlgebraElement, mu: Partition, j: int
) -> Fraction:
    """The common coefficient of g on the marked class (mu, j).

    Raises if the coefficient is not constant across the class, which is the
    symptom of g lying outside the marked-class algebra.
    """
    n = g.n
    if mu.n != n:
        raise DomainError(f"{mu} is not a partition of {n}")
    if j not in mu:
        raise DomainError(f"mark {j} is not a part of {mu}")
    shape = mu.parts
    value: Fraction | None = None
    for perm, ctype, through in _classified_perms(n):
        if ctype.parts != shape or through != j:
            continue
        c = g.coefficient(perm)
        if value is None:
            value = c
        elif value != c:
            raise DomainError(
                f"coefficient is not constant on the marked class ({mu}, {j})"
            )
    if value is None:
        raise DomainError(f"the marked class ({mu}, {j}) is empty")
    return value


def is_near_central(g: GroupAlgebraElement) -> bool:
    """Whether g commutes with every permutation fixing the last symbol.

    Checked against the adjacent transpositions (k k+1) for k < n-1, which
    generate that subgroup.
    """
    n = g.n
    for k in range(1, n - 1):
        s = Permutation.transposition(k, k + 1, n)
        for perm, c in g._terms.items():
            if g.coefficient(s * perm * s) != c:
                return False
    return True


def jm_power_coefficients(
    n: int, r: int, *, max_n: int | None = None
) -> dict[MarkedPartition, Fraction]:
    """Full marked-class coefficient table of J_n to the power r."""
    if n < 1:
        raise DomainError("n must be positive")
    if r < 0:
        raise DomainError("power must be nonnegative")
    check_guard(n, max_n, "Jucys-Murphy power expansion")
    jm = jm_element(n, n) if n >= 2 else GroupAlgebraElement.zero(1)
    g = GroupAlgebraElement.one(n)
    for _ in range(r):
        g = ga_multiply(g, jm)
    return _marked_decomposition(g)


def _marked_decomposition(
    g: GroupAlgebraElement,
) -> dict[MarkedPartition, Fraction]:
    n = g.n
    out: dict[MarkedPartition, Fraction] = {}
    for perm, ctype, through in _classified_perms(n):
        marked = MarkedPartition(ctype, through)
        c = g.coefficient(perm)
        if marked in out:
            if out[marked] != c:
                raise DomainError(
                    f"coefficient is not constant on the marked class {marked}"
                )
        else:
            out[marked] = c
    return out


def enumerate_star_factorizations(
    pi: Permutation, r: int, *, max_sequences: int = 10_000_000
) -> int:
    """Count length-r sequences of star transpositions multiplying to pi.

    Stars are the transpositions (a n) for a < n and the product is taken in
    sequence order.  Literal depth-first enumeration over all (n-1)^r
    sequences, guarded by max_sequences.
    """
    n = pi.n
    if r < 0:
        raise DomainError("length must be nonnegative")
    if n < 2:
        return 1 if r == 0 else 0
    if (n - 1) ** r > max_sequences:
        raise GuardExceeded(
            f"{(n - 1) ** r} sequences exceed the enumeration budget {max_sequences}"
        )
    stars = [Permutation.transposition(a, n, n) for a in range(1, n)]

    def walk(prefix: Permutation, depth: int) -> int:
        if depth == r:
            return 1 if prefix == pi else 0
        return sum(walk(prefix * s, depth + 1) for s in stars)

    return walk(Permutation.identity(n), 0)


def evaluate_asf_at_jm(f: Asf, n: int, *, max_n: int | None = None) -> GroupAlgebraElement:
    """Substitute Jucys-Murphy elements into an almost-symmetric expression.

    INNER ranges over J_2 .. J_{n-1}, the distinguished variable is J_n, and
    FULL is both together.
    """
    if n < 1:
        raise DomainError("n must be positive")
    check_guard(n, max_n, "Jucys-Murphy substitution")
    inner = [jm_element(k, n) for k in range(2, n)]
    top = jm_element(n, n) if n >= 2 else GroupAlgebraElement.zero(1)
    full = inner + [top] if n >= 2 else []

    def ev(node: Asf) -> GroupAlgebraElement:
        if isinstance(node, Const):
            return GroupAlgebraElement.one(n).scale(node.value)
        if isinstance(node, Xn):
            return top
        if isinstance(node, PowerSum):
            vals = inner if node.variables is VarRange.INNER else full
            total = GroupAlgebraElement.zero(n)
            for jm in vals:
                total = total + _ga_power(jm, node.degree)
            return total
        if isinstance(node, Elementary):
            vals = inner if node.variables is VarRange.INNER else full
            return _elementary_in_jm(vals, node.degree, n)
        if isinstance(node, Sum):
            return reduce(lambda x, y: x + y, map(ev, node.terms))
        if isinstance(node, Product):
            return reduce(ga_multiply, map(ev, node.factors))
        if isinstance(node, Power):
            return _ga_power(ev(node.base), node.exponent)
        raise DomainError(f"unknown expression node {node!r}")

    return ev(f)


def _elementary_in_jm(
    elements: Sequence[GroupAlgebraElement], k: int, n: int
) -> GroupAlgebraElement:
    if k < 0:
        raise DomainError("elementary degree must be nonnegative")
    if k > len(elements):
        return GroupAlgebraElement.zero(n)
    # coefficient rows of prod (1 + t J): Jucys-Murphy elements commute, so
    # the usual one-row recurrence applies verbatim
    row = [GroupAlgebraElement.one(n)] + [GroupAlgebraElement.zero(n)] * k
    for jm in elements:
        for d in range(min(k, len(row) - 1), 0, -1):
            row[d] = row[d] + ga_multiply(row[d - 1], jm)
    return row[k]


class VerificationError(RuntimeError):
    """A structural identity failed inside the verification suite."""

    def __init__(self, check: str, lhs: object, rhs: object):
        super().__init__(f"{check}: {lhs} != {rhs}")
        self.check = check
        self.lhs = str(lhs)
        self.rhs = str(rhs)


def run_verify(max_n: int = 4) -> list[str]:
    """Run the whole invariant suite for each n up to max_n.

    Returns the labels of the checks that ran; raises VerificationError with
    both sides on the first failure.  Cost grows factorially with max_n.
    """
    if max_n < 2:
        raise DomainError("verification needs max_n >= 2")
    done: list[str] = []

    def expect(check: str, lhs: object, rhs: object) -> None:
        if lhs != rhs:
            raise VerificationError(check, lhs, rhs)
        done.append(check)

    for n in range(2, max_n + 1):
        shapes = list(enumerate_partitions(n))
        marked = list(enumerate_marked_partitions(n))
        nf = math.factorial(n)

        centrals = {lam: central_idempotent(lam, max_n=n) for lam in shapes}
        total = GroupAlgebraElement.zero(n)
        for lam in shapes:
            for mu in shapes:
                want = centrals[lam] if lam == mu else GroupAlgebraElement.zero(n)
                expect(
                    f"central idempotents multiply diagonally @ n={n}",
                    ga_multiply(centrals[lam], centrals[mu]),
                    want,
                )
            total = total + centrals[lam]
        expect(
            f"central idempotents resolve the identity @ n={n}",
            total,
            GroupAlgebraElement.one(n),
        )

        gammas = {
            mp: z1_idempotent(mp.shape, mp.mark, max_n=n) for mp in marked
        }
        top_jm = jm_element(n, n) if n >= 2 else None
        total = GroupAlgebraElement.zero(n)
        for mp in marked:
            for mq in marked:
                want = gammas[mp] if mp == mq else GroupAlgebraElement.zero(n)
                expect(
                    f"marked idempotents multiply diagonally @ n={n}",
                    ga_multiply(gammas[mp], gammas[mq]),
                    want,
                )
            expect(
                f"marked idempotents are near-central @ n={n}",
                is_near_central(gammas[mp]),
                True,
            )
            if top_jm is not None:
                expect(
                    f"marked idempotents diagonalize J_n @ n={n}",
                    ga_multiply(top_jm, gammas[mp]),
                    gammas[mp].scale(marked_content(mp.shape, mp.mark)),
                )
            total = total + gammas[mp]
        expect(
            f"marked idempotents resolve the identity @ n={n}",
            total,
            GroupAlgebraElement.one(n),
        )

        for mp in marked:
            for mq in marked:
                expect(
                    f"extracted coefficients match the character sum @ n={n}",
                    Fraction(nf, dimension(mp.shape))
                    * extract_marked_coefficient(gammas[mp], mq.shape, mq.mark),
                    genchar_strahov(mp.shape, mp.mark, mq.shape, mq.mark, max_n=n),
                )

        for mq in marked:
            rebuilt = GroupAlgebraElement.zero(n)
            size = marked_class_size(mq.shape, mq.mark)
            for mp in marked:
                weight = Fraction(
                    size, dimension(decrement_part(mp.shape, mp.mark))
                ) * genchar(mp.shape, mp.mark, mq.shape, mq.mark)
                rebuilt = rebuilt + gammas[mp].scale(weight)
            expect(
                f"idempotent expansion rebuilds the class sum @ n={n}",
                rebuilt,
                class_sum(mq.shape, mq.mark, max_n=n),
            )

        swap_tail = Partition((2,) + (1,) * (n - 2))
        expect(
            f"J_n is the marked single-swap class sum @ n={n}",
            jm_element(n, n),
            class_sum(swap_tail, 2, max_n=n),
        )

        for mp, poly in table1_rows(n):
            expect(
                f"Jucys-Murphy template rebuilds K_{mp} @ n={n}",
                evaluate_asf_at_jm(poly, n, max_n=n),
                class_sum(mp.shape, mp.mark, max_n=n),
            )

        for r in range(0, 5):
            table = jm_power_coefficients(n, r, max_n=n)
            mass = sum(
                c * marked_class_size(mp.shape, mp.mark) for mp, c in table.items()
            )
            expect(
                f"J_n^{r} coefficients carry total mass (n-1)^{r} @ n={n}",
                mass,
                Fraction((n - 1) ** r),
            )

        if n <= 4:
            for mp in marked:
                members = [
                    perm
                    for perm, ctype, through in _classified_perms(n)
                    if ctype == mp.shape and through == mp.mark
                ]
                for r in range(0, 4):
                    counts = {
                        enumerate_star_factorizations(perm, r) for perm in members
                    }
                    expect(
                        f"star counts are constant on marked classes @ n={n}",
                        len(counts),
                        1,
                    )
                    expect(
                        f"star counts match J_n^{r} coefficients @ n={n}",
                        Fraction(counts.pop()),
                        jm_power_coefficients(n, r, max_n=n)[mp],
                    )

    return done
