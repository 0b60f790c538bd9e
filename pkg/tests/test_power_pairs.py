import pytest
from fractions import Fraction
from itertools import product
from src.builders.oracle import oracle_power_pair, oracle_tensor_product
from src.models.pair import PairMap, ShiftParam
from src.models.scalar import gaussian_i
from src.models.superspace import SuperSpace
from src.types.enums import Parity, PowerKind
from src.types.errors import (
    DimensionMismatchError,
    IndexRangeError,
    NotAutomorphismError,
    PowerTooLargeError,
)
from src.utils.catalog import scaling_map, type_I, type_I_automorphism, type_II, type_III
from src.utils.handlers import (
    general_tensor_product,
    lift_automorphism,
    power_bracket,
    power_nu,
    power_pair,
    power_sign,
    restricted_tensor_power,
)
from src.utils.jordan import (
    basis_vector,
    check_pair,
    faulkner_from_module,
    is_automorphism,
    nu,
    one_dim_pair,
    pairs_equal,
    tensor_shift,
    transport_pair,
    unit_pair,
)
from src.utils.linalg import exact_array, grids_equal, identity
from src.utils.liesuper import metric_general_linear
from src.utils.superpowers import enum_entries


def gl11_pair():
    return faulkner_from_module(metric_general_linear(1, 1))


def graded_pair():
    """gl(1|1) pair moved to a non-identity pairing by an even change of basis."""
    minus = exact_array([[2, 0], [0, 3]])
    plus = exact_array([[5, 0], [0, -1]])
    return transport_pair(gl11_pair(), PairMap(minus, plus))


PAIRS = {
    "typeI(1,2)": lambda: type_I(1, 2),
    "typeI(1,3)": lambda: type_I(1, 3),
    "typeII(3)": lambda: type_II(3),
    "typeIII(2)": lambda: type_III(2),
    "gl11": gl11_pair,
    "graded": graded_pair,
}

# squares of these have dimension 6
LARGE_PAIRS = {"typeI(1,3)", "typeII(3)"}

SMALL_PAIRS = {
    "dim1": lambda: one_dim_pair(ShiftParam(3)),
    "dim1-odd": lambda: one_dim_pair(ShiftParam(2, Parity.ODD)),
    "typeI(1,2)": lambda: type_I(1, 2),
}


def reference_sign(kind, p, q, n, i, j):
    row, col = i <= p, j <= q
    if kind is PowerKind.ALT:
        if row and col:
            return (-1) ** (i + j)
        if row:
            return (-1) ** (i + n)
        if col:
            return (-1) ** (j + n)
        return 1
    if row and col:
        return 1
    if row:
        return (-1) ** (j + n)
    if col:
        return (-1) ** (i + n)
    return (-1) ** (i + j)


# ------------------------------------------------------------------
# Sign tables
# ------------------------------------------------------------------

@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
def test_sign_tables_exhaustive(kind):
    for n in range(1, 5):
        for p, q, i, j in product(range(n + 1), range(n + 1), range(1, n + 1), range(1, n + 1)):
            assert power_sign(kind, p, q, n, i, j) == reference_sign(kind, p, q, n, i, j)


def test_sign_table_corners():
    n = 3
    for i, j in product(range(1, n + 1), repeat=2):
        assert power_sign(PowerKind.ALT, n, n, n, i, j) == (-1) ** (i + j)
        assert power_sign(PowerKind.SYM, n, n, n, i, j) == 1
        assert power_sign(PowerKind.ALT, 0, 0, n, i, j) == 1


@pytest.mark.parametrize("args", [(0, 0, 2, 0, 1), (0, 0, 2, 3, 1), (3, 0, 2, 1, 1)])
def test_sign_out_of_range(args):
    with pytest.raises(IndexRangeError):
        power_sign(PowerKind.ALT, *args)


def test_sign_needs_alt_or_sym():
    with pytest.raises(ValueError):
        power_sign(PowerKind.TENSOR, 1, 1, 1, 1, 1)


# ------------------------------------------------------------------
# Closed forms
# ------------------------------------------------------------------

def test_alternating_square_of_type_I_cube():
    square = power_pair(PowerKind.ALT, type_I(1, 2), 2)
    assert square.dim_minus == square.dim_plus == 1
    assert square.prod_minus[0, 0, 0, 0] == 6
    assert square.prod_plus[0, 0, 0, 0] == 6
    assert square.gram[0, 0] == 1
    assert square.plus_labels == ("(1,2)",)


def test_shifted_square_cube():
    square = power_pair(PowerKind.ALT, type_I(1, 2), 2)
    shifted = tensor_shift(square, ShiftParam(-4))
    assert shifted.prod_minus[0, 0, 0, 0] == 2


def test_alternating_pairing_on_even_input_is_det_gram():
    square = power_pair(PowerKind.ALT, type_I(1, 3), 2)
    assert grids_equal(square.gram, identity(3))


def test_symmetric_pairing_of_type_I():
    square = power_pair(PowerKind.SYM, type_I(1, 2), 2)
    assert [square.gram[r, r] for r in range(3)] == [2, 1, 2]
    assert sum(1 for v in square.gram.flat if v != 0) == 3


def test_bracket_terms_of_top_wedge():
    assert power_bracket(PowerKind.ALT, type_I(1, 2), (0, 1), (0, 1)) == [(1, 0, 0), (1, 1, 1)]


def test_bracket_needs_equal_lengths():
    with pytest.raises(DimensionMismatchError):
        power_bracket(PowerKind.ALT, type_I(1, 2), (0,), (0, 1))


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM, PowerKind.TENSOR])
def test_degree_must_be_positive(kind):
    with pytest.raises(DimensionMismatchError):
        power_pair(kind, type_I(1, 2), 0)


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
@pytest.mark.parametrize("name", [
    "typeI(1,2)",
    "gl11",
    pytest.param("typeI(1,3)", marks=pytest.mark.slow),
    pytest.param("typeII(3)", marks=pytest.mark.slow),
])
def test_powers_are_metric_pairs(kind, name):
    report = check_pair(power_pair(kind, PAIRS[name](), 2))
    assert report.ok, report.axioms_failed()


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
def test_power_nu_matches_nu_in_the_power(kind):
    pair = type_I(1, 2)
    square = power_pair(kind, pair, 2)
    space = SuperSpace.from_parities(pair.plus_parities)
    basis = enum_entries(kind, space, 2)
    for (r, I), (c, J) in product(enumerate(basis), repeat=2):
        direct = nu(square, basis_vector(len(basis), r), basis_vector(len(basis), c))
        lifted = power_nu(kind, pair, I, J)
        assert grids_equal(lifted.minus, direct.minus), (I, J)
        assert grids_equal(lifted.plus, direct.plus), (I, J)


def test_power_too_large():
    with pytest.raises(PowerTooLargeError):
        power_pair(PowerKind.SYM, type_I(5, 5), 2)
    with pytest.raises(PowerTooLargeError):
        restricted_tensor_power(type_I(3, 3), 3)


# ------------------------------------------------------------------
# Oracle equivalence
# ------------------------------------------------------------------

@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
@pytest.mark.parametrize("name", [
    pytest.param(name, marks=pytest.mark.slow) if name in LARGE_PAIRS else name for name in PAIRS
])
def test_closed_form_matches_oracle(kind, name):
    pair = PAIRS[name]()
    assert pairs_equal(power_pair(kind, pair, 2), oracle_power_pair(kind, pair, 2))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("name", list(SMALL_PAIRS))
def test_restricted_tensor_matches_oracle(n, name):
    pair = SMALL_PAIRS[name]()
    power = restricted_tensor_power(pair, n)
    assert pairs_equal(power, oracle_power_pair(PowerKind.TENSOR, pair, n))
    assert check_pair(power).ok


def test_restricted_tensor_of_one_dim_pair():
    power = restricted_tensor_power(one_dim_pair(ShiftParam(3)), 2)
    # c from each of the two brackets acting on each of the two slots
    assert power.prod_minus[0, 0, 0, 0] == 12
    assert power.gram[0, 0] == 1


def test_general_tensor_matches_oracle():
    pairs = [type_I(1, 2), one_dim_pair(ShiftParam(2, Parity.ODD))]
    product_pair = general_tensor_product(pairs)
    assert pairs_equal(product_pair, oracle_tensor_product(pairs))
    assert check_pair(product_pair).ok


def test_tensor_with_unit_is_identity():
    pair = type_I(1, 2)
    assert pairs_equal(general_tensor_product([pair, unit_pair()]), pair)


@pytest.mark.parametrize("shift", [ShiftParam(-4), ShiftParam(Fraction(1, 2), Parity.ODD)])
def test_tensor_with_one_dim_pair_is_a_shift(shift):
    pair = type_I(1, 2)
    assert pairs_equal(general_tensor_product([pair, one_dim_pair(shift)]), tensor_shift(pair, shift))


def test_general_tensor_is_associative():
    a, b, c = type_I(1, 2), one_dim_pair(ShiftParam(2, Parity.ODD)), one_dim_pair(ShiftParam(-1))
    flat = general_tensor_product([a, b, c])
    nested = general_tensor_product([general_tensor_product([a, b]), c])
    assert pairs_equal(flat, nested)


# ------------------------------------------------------------------
# Automorphism lifting
# ------------------------------------------------------------------

@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM, PowerKind.TENSOR])
def test_identity_lifts_to_identity(kind):
    pair = type_I(1, 2)
    phi = PairMap(identity(2), identity(2))
    lifted = lift_automorphism(kind, pair, phi, 2)
    assert grids_equal(lifted.minus, identity(lifted.minus.shape[0]))
    assert grids_equal(lifted.plus, identity(lifted.plus.shape[0]))


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM, PowerKind.TENSOR])
def test_scaling_lifts_to_scaling(kind):
    pair = type_I(1, 3)
    lifted = lift_automorphism(kind, pair, scaling_map(2, pair), 2)
    expected = scaling_map(4, power_pair(kind, pair, 2))
    assert grids_equal(lifted.minus, expected.minus)
    assert grids_equal(lifted.plus, expected.plus)


@pytest.mark.parametrize("lam,n", [(-1, 2), (gaussian_i(), 4)])
def test_roots_of_unity_lift_trivially(lam, n):
    pair = type_I(1, 2)
    lifted = lift_automorphism(PowerKind.TENSOR, pair, scaling_map(lam, pair), n)
    assert grids_equal(lifted.plus, identity(lifted.plus.shape[0]))
    assert grids_equal(lifted.minus, identity(lifted.minus.shape[0]))


def test_scaling_by_non_root_is_not_trivial():
    pair = type_I(1, 2)
    lifted = lift_automorphism(PowerKind.TENSOR, pair, scaling_map(-1, pair), 3)
    assert grids_equal(lifted.plus, -identity(8))


def test_type_I_automorphism_lifts():
    pair = type_I(1, 3)
    a = exact_array([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    lifted = lift_automorphism(PowerKind.ALT, pair, type_I_automorphism(1, a), 2)
    assert is_automorphism(lifted, power_pair(PowerKind.ALT, pair, 2))


def test_lift_rejects_non_automorphisms():
    pair = type_I(1, 2)
    phi = PairMap(identity(2) * 2, identity(2) * 2)
    with pytest.raises(NotAutomorphismError):
        lift_automorphism(PowerKind.ALT, pair, phi, 2)
