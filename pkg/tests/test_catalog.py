import pytest
import numpy as np
from fractions import Fraction
from itertools import product
from src.models.scalar import GaussianRational
from src.types.enums import JordanType, PowerKind, Side
from src.types.errors import DimensionMismatchError, SingularFormError
from src.utils.catalog import (
    EXAMPLE_SHIFT,
    check_hom,
    check_similarity,
    example_map_II,
    example_map_III,
    matrix_basis,
    product_sign_relation,
    scaling_map,
    type_I,
    type_I_automorphism,
    type_II,
    type_III,
    verify_example_II,
    verify_example_III,
)
from src.utils.handlers import lift_automorphism, power_pair
from src.utils.jordan import basis_vector, check_pair, is_automorphism, tensor_shift, triple
from src.utils.linalg import identity


def hatted(jtype, n, unit):
    a, b = unit
    m = np.zeros((n, n), dtype=int)
    m[a, b] += 1
    m[b, a] += -1 if jtype is JordanType.II else 1
    return m


def trace_I(x, y):
    return int(np.trace(x.dot(y.T)))


# ------------------------------------------------------------------
# Type I
# ------------------------------------------------------------------

def test_type_I_trace_and_labels():
    pair = type_I(1, 3)
    assert np.array_equal(pair.gram, identity(3))
    assert pair.plus_labels == ("E11", "E12", "E13")


def test_type_I_row_products():
    n = 3
    pair = type_I(1, n)
    for i, j, k in product(range(n), repeat=3):
        e = [basis_vector(n, t) for t in (i, j, k)]
        expected = (1 if i == j else 0) * e[2] + (1 if k == j else 0) * e[0]
        assert list(triple(pair, Side.MINUS, *e)) == list(expected)


@pytest.mark.parametrize("p,q", [(2, 1), (1, 3), pytest.param(2, 3, marks=pytest.mark.slow)])
def test_type_I_rectangular_is_a_metric_pair(p, q):
    assert check_pair(type_I(p, q)).ok


@pytest.mark.parametrize("p,q", [(0, 2), (2, 0)])
def test_type_I_needs_positive_sizes(p, q):
    with pytest.raises(DimensionMismatchError):
        type_I(p, q)


# ------------------------------------------------------------------
# Types II and III
# ------------------------------------------------------------------

def test_hatted_bases():
    assert matrix_basis(JordanType.II, 3) == [(0, 1), (0, 2), (1, 2)]
    assert matrix_basis(JordanType.III, 2) == [(0, 0), (0, 1), (1, 1)]
    with pytest.raises(ValueError):
        matrix_basis(JordanType.I, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_II_trace_is_half_of_type_I(n):
    pair = type_II(n)
    units = matrix_basis(JordanType.II, n)
    for (x, u), (y, v) in product(enumerate(units), repeat=2):
        assert trace_I(hatted(JordanType.II, n, u), hatted(JordanType.II, n, v)) == 2 * pair.gram[x, y]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_III_trace_is_type_I(n):
    pair = type_III(n)
    units = matrix_basis(JordanType.III, n)
    for (x, u), (y, v) in product(enumerate(units), repeat=2):
        assert trace_I(hatted(JordanType.III, n, u), hatted(JordanType.III, n, v)) == pair.gram[x, y]


def test_type_III_diagonal_pairing():
    pair = type_III(2)
    assert [pair.gram[r, r] for r in range(3)] == [4, 2, 4]


@pytest.mark.parametrize("make", [lambda: type_II(2), lambda: type_II(3), lambda: type_III(1), lambda: type_III(2)])
def test_hatted_pairs_are_metric_pairs(make):
    assert check_pair(make()).ok


def test_hatted_size_limits():
    with pytest.raises(DimensionMismatchError):
        type_II(1)
    with pytest.raises(DimensionMismatchError):
        type_III(0)


@pytest.mark.parametrize("n", [2, 3])
def test_type_II_products_are_negated_matrix_products(n):
    assert product_sign_relation(JordanType.II, n) == -1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_III_products_are_matrix_products(n):
    assert product_sign_relation(JordanType.III, n) == 1


# ------------------------------------------------------------------
# Maps
# ------------------------------------------------------------------

def test_identity_is_an_isometry():
    pair = type_I(1, 2)
    f = scaling_map(1, pair)
    assert check_hom(f, pair, pair).ok
    assert check_similarity(f, pair, pair) == 1


@pytest.mark.parametrize("lam", [2, Fraction(-1, 3)])
def test_scaling_preserves_the_pairing(lam):
    pair = type_I(2, 2)
    f = scaling_map(lam, pair)
    assert f.minus[0, 0] == 1 / Fraction(lam)
    assert f.plus[0, 0] == lam
    assert is_automorphism(f, pair)


@pytest.mark.parametrize("a", [[[1, 0], [0, 1]], [[2, 0], [0, 3]], [[0, 1], [1, 0]]])
def test_type_I_automorphisms(a):
    pair = type_I(1, 2)
    assert is_automorphism(type_I_automorphism(1, a), pair)


def test_type_I_automorphism_on_both_sides():
    pair = type_I(2, 2)
    f = type_I_automorphism(2, [[1, 1], [0, 1]], [[2, 0], [1, 1]])
    assert check_hom(f, pair, pair).ok
    assert check_similarity(f, pair, pair) == 1


def test_singular_automorphism_is_rejected():
    with pytest.raises(SingularFormError):
        type_I_automorphism(1, [[1, 1], [1, 1]])


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
def test_type_I_automorphisms_lift_to_squares(kind):
    pair = type_I(1, 3)
    f = type_I_automorphism(1, [[1, 2, 0], [0, 1, 0], [0, 0, 3]])
    lifted = lift_automorphism(kind, pair, f, 2)
    assert is_automorphism(lifted, power_pair(kind, pair, 2))


def test_example_map_uses_i():
    f = example_map_II(3)
    assert f.plus[0, 0] == GaussianRational(0, 1)
    assert f.plus[0, 1] == 0
    assert example_map_III(2).plus[1, 1] == 1


def test_example_II_is_a_similarity_with_multiplier_minus_one():
    n = 3
    target = tensor_shift(power_pair(PowerKind.ALT, type_I(1, n), 2), EXAMPLE_SHIFT)
    f = example_map_II(n)
    assert check_hom(f, type_II(n), target).ok
    assert check_similarity(f, type_II(n), target) == -1


# ------------------------------------------------------------------
# Worked examples
# ------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_verify_example_II(n):
    report = verify_example_II(n)
    assert report.ok, report.violations
    assert report.details["multiplier"] == -1
    assert report.details["n"] == n


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_verify_example_III(n):
    report = verify_example_III(n)
    assert report.ok, report.violations
    assert report.details["multiplier"] == Fraction(1, 2)


def test_example_without_the_shift_fails():
    n = 2
    target = power_pair(PowerKind.SYM, type_I(1, n), 2)
    assert not check_hom(example_map_III(n), type_III(n), target).ok
