"""Character polynomials: construction, evaluation, dimension polynomials."""

import math
from fractions import Fraction

from repstab.characters import char_value, dimension
from repstab.charpoly import (
    CharacterPolynomial,
    evaluate,
    evaluate_polynomial,
    stable_dimension_poly,
    young_to_charpoly,
)
from repstab.partitions import Partition, enumerate_partitions, enumerate_partitions_up_to

from oracles import hook_length_dimension


def test_empty_family_is_constant_one():
    poly = young_to_charpoly(Partition())
    assert poly.terms == {Partition(): 1}
    assert poly.degree == 0
    assert evaluate(poly, {1: 17, 2: 3}) == 1


def test_standard_family_polynomial():
    poly = young_to_charpoly(Partition((1,)))
    assert poly.terms == {Partition((1,)): 1, Partition(): -1}


def test_wedge_square_polynomial():
    # binom(X1, 2) - binom(X1, 1) - binom(X2, 1) + 1
    poly = young_to_charpoly(Partition((1, 1)))
    assert poly.terms == {
        Partition((1, 1)): 1,
        Partition((1,)): -1,
        Partition((2,)): -1,
        Partition(): 1,
    }
    # values on the three classes of the 6-element group match the padded row
    for rho in enumerate_partitions(3):
        assert evaluate(poly, rho.cycle_counts()) == char_value(
            Partition((1, 1, 1)), rho
        )


def test_standard_family_evaluates_to_n_minus_one():
    poly = young_to_charpoly(Partition((1,)))
    for n in range(3, 11):
        assert evaluate(poly, {1: n}) == n - 1


def test_sign_value_on_transposition():
    poly = young_to_charpoly(Partition((1, 1)))
    assert evaluate(poly, {1: 1, 2: 1}) == -1


def test_polynomials_agree_with_padded_characters():
    """For |lam| <= 6 the polynomial matches the character of every family
    member on every conjugacy class, across four consecutive valid n."""
    for lam in enumerate_partitions_up_to(6):
        poly = young_to_charpoly(lam)
        start = lam.size + (lam.parts[0] if lam.parts else 0)
        for n in range(max(start, 1), max(start, 1) + 4):
            padded = lam.padded(n)
            for rho in enumerate_partitions(n):
                assert evaluate(poly, rho.cycle_counts()) == char_value(padded, rho), (
                    lam,
                    n,
                    rho,
                )


def test_all_ones_coefficient_is_the_dimension():
    for lam in enumerate_partitions_up_to(10):
        poly = young_to_charpoly(lam)
        ones = Partition((1,) * lam.size)
        assert poly.coefficient(ones) == dimension(lam)


def test_coefficients_are_integers():
    for lam in enumerate_partitions_up_to(8):
        for coeff in young_to_charpoly(lam).terms.values():
            assert coeff.denominator == 1


def test_degree_is_partition_size():
    for lam in enumerate_partitions_up_to(8):
        assert young_to_charpoly(lam).degree == lam.size


def test_stable_dimension_poly_small_cases():
    assert stable_dimension_poly(Partition((1,))) == (Fraction(-1), Fraction(1))
    # n(n-3)/2
    assert stable_dimension_poly(Partition((2,))) == (
        Fraction(0),
        Fraction(-3, 2),
        Fraction(1, 2),
    )
    # (n-1)(n-2)/2
    assert stable_dimension_poly(Partition((1, 1))) == (
        Fraction(1),
        Fraction(-3, 2),
        Fraction(1, 2),
    )


def test_dimension_poly_matches_hook_lengths():
    for lam in enumerate_partitions_up_to(5):
        coeffs = stable_dimension_poly(lam)
        start = lam.size + (lam.parts[0] if lam.parts else 0)
        for n in range(max(start, 1), max(start, 1) + 4):
            assert evaluate_polynomial(coeffs, n) == hook_length_dimension(
                lam.padded(n).parts
            )


def test_dimension_poly_degree_and_leading_coefficient():
    for lam in enumerate_partitions_up_to(10):
        coeffs = stable_dimension_poly(lam)
        k = lam.size
        assert len(coeffs) == k + 1
        assert coeffs[k] == Fraction(dimension(lam), math.factorial(k))


def test_zero_coefficients_are_not_stored():
    poly = CharacterPolynomial({Partition((1,)): 0, Partition(): 2})
    assert poly.terms == {Partition(): Fraction(2)}
