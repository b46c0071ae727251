from __future__ import annotations

import math
from fractions import Fraction

import pytest

from nearcentral import (
    DomainError,
    GroupAlgebraElement,
    GuardExceeded,
    MarkedPartition,
    Partition,
    Permutation,
    central_idempotent,
    chi,
    class_size,
    class_sum,
    dimension,
    enumerate_marked_partitions,
    enumerate_partitions,
    enumerate_star_factorizations,
    evaluate_asf_at_jm,
    extract_marked_coefficient,
    ga_multiply,
    genchar,
    is_near_central,
    jm_element,
    jm_power_coefficients,
    marked_class_size,
    run_verify,
    table1_poly,
    z1_idempotent,
)


def _perm(*images: int) -> Permutation:
    return Permutation(images)


def _marked(n: int) -> list[tuple[Partition, int]]:
    return [(m.shape, m.mark) for m in enumerate_marked_partitions(n)]


def test_composition_is_right_to_left() -> None:
    t13 = Permutation.transposition(1, 3, 3)
    t23 = Permutation.transposition(2, 3, 3)
    # apply (2,3) first, then (1,3)
    assert (t13 * t23).images == (3, 1, 2)
    assert (t23 * t13).images == (2, 3, 1)
    assert t13 * Permutation.identity(3) == t13


def test_permutation_basics() -> None:
    pi = Permutation.from_cycles(5, [(1, 4, 2), (3, 5)])
    assert pi.cycle_type().parts == (3, 2)
    assert (pi * pi.inverse()) == Permutation.identity(5)
    assert pi(1) == 4 and pi(4) == 2 and pi(3) == 5
    with pytest.raises(DomainError):
        Permutation((1, 1, 3))


def test_group_algebra_drops_zero_terms() -> None:
    a = GroupAlgebraElement(3, {Permutation.identity(3): Fraction(1)})
    b = a - a
    assert not b
    assert len(b) == 0
    assert a == a + b


def test_ga_multiply_single_terms() -> None:
    d13 = GroupAlgebraElement.from_permutation(Permutation.transposition(1, 3, 3))
    d23 = GroupAlgebraElement.from_permutation(Permutation.transposition(2, 3, 3))
    prod = ga_multiply(d13, d23)
    assert prod == GroupAlgebraElement.from_permutation(_perm(3, 1, 2))
    prod2 = ga_multiply(d23, d13)
    assert prod2 == GroupAlgebraElement.from_permutation(_perm(2, 3, 1))
    with pytest.raises(DomainError):
        ga_multiply(d13, GroupAlgebraElement.one(4))


def test_class_sum_small() -> None:
    for n in range(1, 6):
        ident = class_sum(Partition((1,) * n), 1, n)
        assert ident == GroupAlgebraElement.one(n)
    swap = class_sum(Partition((2, 1)), 2, 3)
    assert sorted(p.images for p in swap.support()) == [(1, 3, 2), (3, 2, 1)]
    cycles = class_sum(Partition((3,)), 3, 3)
    assert sorted(p.images for p in cycles.support()) == [(2, 3, 1), (3, 1, 2)]
    for n in range(1, 6):
        for lam, i in _marked(n):
            assert len(class_sum(lam, i, n)) == marked_class_size(lam, i)


def test_jm_elements() -> None:
    assert jm_element(2, 2) == GroupAlgebraElement.from_permutation(_perm(2, 1))
    j3 = jm_element(3, 3)
    assert sorted(p.images for p in j3.support()) == [(1, 3, 2), (3, 2, 1)]
    for n in range(2, 8):
        assert jm_element(n, n) == class_sum(Partition((2,) + (1,) * (n - 2)), 2, n)
    with pytest.raises(DomainError):
        jm_element(1, 3)


def test_central_idempotent_coefficients() -> None:
    for n in (2, 3, 4):
        triv = central_idempotent(Partition((n,)))
        sign = central_idempotent(Partition((1,) * n))
        fact = math.factorial(n)
        for pi in triv.support():
            assert triv.coefficient(pi) == Fraction(1, fact)
        for pi in sign.support():
            parity = (-1) ** (n - len(pi.cycle_type().parts))
            assert sign.coefficient(pi) == Fraction(parity, fact)
    x = central_idempotent(Partition((2, 1)))
    assert ga_multiply(x, x) == x


def test_central_idempotents_orthogonal_and_complete() -> None:
    for n in (2, 3, 4):
        shapes = enumerate_partitions(n)
        idems = [central_idempotent(lam) for lam in shapes]
        total = GroupAlgebraElement.zero(n)
        for a, x in zip(shapes, idems):
            total = total + x
            for b, y in zip(shapes, idems):
                expected = x if a == b else GroupAlgebraElement.zero(n)
                assert ga_multiply(x, y) == expected
        assert total == GroupAlgebraElement.one(n)


# hand expansion: Gamma^{(2,1),2} = (1/6)(2e - 2(12) + (13) + (23) - (123) - (132))
# and Gamma^{(2,1),1} the same with the signs of (12),(13),(23) flipped
def test_z1_idempotents_frozen_s3_expansion() -> None:
    sixth = Fraction(1, 6)
    expected_2 = GroupAlgebraElement(
        3,
        {
            _perm(1, 2, 3): 2 * sixth,
            _perm(2, 1, 3): -2 * sixth,
            _perm(3, 2, 1): sixth,
            _perm(1, 3, 2): sixth,
            _perm(2, 3, 1): -sixth,
            _perm(3, 1, 2): -sixth,
        },
    )
    expected_1 = GroupAlgebraElement(
        3,
        {
            _perm(1, 2, 3): 2 * sixth,
            _perm(2, 1, 3): 2 * sixth,
            _perm(3, 2, 1): -sixth,
            _perm(1, 3, 2): -sixth,
            _perm(2, 3, 1): -sixth,
            _perm(3, 1, 2): -sixth,
        },
    )
    assert z1_idempotent(Partition((2, 1)), 2) == expected_2
    assert z1_idempotent(Partition((2, 1)), 1) == expected_1


def test_z1_idempotent_structure() -> None:
    for n in (2, 3, 4):
        jn = jm_element(n, n)
        total = GroupAlgebraElement.zero(n)
        for lam in enumerate_partitions(n):
            partial = GroupAlgebraElement.zero(n)
            for i in sorted(set(lam.parts)):
                gamma = z1_idempotent(lam, i)
                assert ga_multiply(gamma, gamma) == gamma
                assert is_near_central(gamma)
                from nearcentral import marked_content

                eig = marked_content(lam, i)
                assert ga_multiply(jn, gamma) == gamma.scale(Fraction(eig))
                partial = partial + gamma
            assert partial == central_idempotent(lam)
            total = total + partial
        assert total == GroupAlgebraElement.one(n)
    assert ga_multiply(
        z1_idempotent(Partition((2, 1)), 2), z1_idempotent(Partition((2, 1)), 1)
    ) == GroupAlgebraElement.zero(3)


def test_extract_marked_coefficient() -> None:
    k = class_sum(Partition((2, 1)), 2, 3)
    assert extract_marked_coefficient(k, Partition((2, 1)), 2) == 1
    assert extract_marked_coefficient(k, Partition((2, 1)), 1) == 0
    j3sq = ga_multiply(jm_element(3, 3), jm_element(3, 3))
    assert extract_marked_coefficient(j3sq, Partition((1, 1, 1)), 1) == 2
    assert extract_marked_coefficient(j3sq, Partition((2, 1)), 2) == 0
    assert extract_marked_coefficient(j3sq, Partition((3,)), 3) == 1
    # (1,3) alone is not constant on its marked class {(1,3), (2,3)}
    lone = GroupAlgebraElement.from_permutation(_perm(3, 2, 1))
    with pytest.raises(DomainError):
        extract_marked_coefficient(lone, Partition((2, 1)), 2)


def test_extraction_matches_generalized_characters() -> None:
    for n in (2, 3, 4):
        fact = math.factorial(n)
        for mu, j in _marked(n):
            gamma = z1_idempotent(mu, j)
            scale = Fraction(fact, dimension(mu))
            for lam, i in _marked(n):
                got = scale * extract_marked_coefficient(gamma, lam, i)
                assert got == genchar(mu, j, lam, i)


def test_is_near_central() -> None:
    for lam, i in _marked(4):
        assert is_near_central(class_sum(lam, i, 4))
    # (1,2) alone IS invariant here: it is the whole class C_{(2,1),1} of S_3
    assert is_near_central(GroupAlgebraElement.from_permutation(_perm(2, 1, 3)))
    assert not is_near_central(
        GroupAlgebraElement.from_permutation(_perm(3, 2, 1))
    )
    a = class_sum(Partition((2, 1, 1)), 2, 4)
    b = class_sum(Partition((3, 1)), 3, 4)
    assert is_near_central(ga_multiply(a, b))


def test_jm_power_tables() -> None:
    def as_plain(n: int, r: int) -> dict[tuple[tuple[int, ...], int], Fraction]:
        return {
            (m.shape.parts, m.mark): v
            for m, v in jm_power_coefficients(n, r).items()
        }

    assert as_plain(3, 2) == {
        ((1, 1, 1), 1): Fraction(2),
        ((2, 1), 2): Fraction(0),
        ((2, 1), 1): Fraction(0),
        ((3,), 3): Fraction(1),
    }
    assert as_plain(3, 3) == {
        ((1, 1, 1), 1): Fraction(0),
        ((2, 1), 2): Fraction(3),
        ((2, 1), 1): Fraction(2),
        ((3,), 3): Fraction(0),
    }
    for n in (2, 3, 4):
        table = jm_power_coefficients(n, 0)
        for m, v in table.items():
            expected = 1 if m.shape.parts == (1,) * n else 0
            assert v == expected


def test_jm_power_mass() -> None:
    for n in (2, 3, 4, 5):
        for r in range(5):
            table = jm_power_coefficients(n, r)
            total = sum(
                marked_class_size(m.shape, m.mark) * v for m, v in table.items()
            )
            assert total == (n - 1) ** r


def test_star_factorization_enumeration() -> None:
    assert enumerate_star_factorizations(Permutation.from_cycles(3, [(2, 3)]), 3) == 3
    assert enumerate_star_factorizations(Permutation.from_cycles(3, [(1, 2)]), 3) == 2
    assert enumerate_star_factorizations(Permutation.identity(3), 3) == 0
    assert enumerate_star_factorizations(Permutation.identity(4), 2) == 3
    with pytest.raises(GuardExceeded):
        enumerate_star_factorizations(Permutation.identity(8), 10, max_sequences=1000)


def test_star_enumeration_matches_jm_powers() -> None:
    for n in (2, 3, 4):
        for r in range(4):
            table = jm_power_coefficients(n, r)
            for m, v in table.items():
                sample = next(iter(class_sum(m.shape, m.mark, n).support()))
                assert enumerate_star_factorizations(sample, r) == v


def test_jm_evaluation_of_closed_form_rows_at_n4() -> None:
    cases = [
        (Partition((2, 1, 1)), 2),
        (Partition((4,)), 4),
        (Partition((3, 1)), 3),
    ]
    for lam, i in cases:
        f = table1_poly(lam, i)
        assert evaluate_asf_at_jm(f, 4) == class_sum(lam, i, 4)


def test_run_verify_small() -> None:
    checks = run_verify(3)
    assert checks
    assert all(isinstance(line, str) for line in checks)


def test_guards_reject_oversized_inputs() -> None:
    with pytest.raises(GuardExceeded):
        class_sum(Partition((12,)), 12, 12, max_n=9)
    with pytest.raises(GuardExceeded):
        jm_power_coefficients(12, 2, max_n=9)
