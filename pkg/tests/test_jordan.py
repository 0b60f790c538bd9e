import pytest
import numpy as np
from fractions import Fraction
from src.models.pair import ShiftParam
from src.types.enums import Parity, Side
from src.types.errors import ConsistencyFailure, SideError
from src.utils.catalog import scaling_map, type_I, type_I_automorphism
from src.utils.jordan import (
    basis_vector,
    check_derivation,
    check_hom,
    check_pair,
    check_similarity,
    faulkner_from_module,
    instr_basis,
    is_automorphism,
    module_from_pair,
    nu,
    nu_reversed,
    one_dim_pair,
    pairs_equal,
    parity_ordered,
    tensor_shift,
    transport_pair,
    triple,
    unit_pair,
    vector_parity,
)
from src.utils.linalg import exact_array, zeros
from src.utils.liesuper import check_lie, check_module, metric_general_linear


@pytest.fixture
def gl11_pair():
    return faulkner_from_module(metric_general_linear(1, 1))


def test_type_I_is_a_metric_pair():
    report = check_pair(type_I(2, 3))
    assert report.ok
    assert report.checked > 0


def test_type_I_cube():
    pair = type_I(1, 2)
    e1 = basis_vector(2, 0)
    assert list(triple(pair, Side.MINUS, e1, e1, e1)) == [2, 0]


def test_gl11_pair_is_a_metric_pair(gl11_pair):
    assert gl11_pair.dim_minus == gl11_pair.dim_plus == 2
    assert check_pair(gl11_pair).ok


def test_triple_checks_lengths():
    pair = type_I(1, 2)
    with pytest.raises(SideError):
        triple(pair, Side.PLUS, zeros(2), zeros(3), zeros(2))


def test_vector_parity(gl11_pair):
    pars = gl11_pair.plus_parities
    assert vector_parity(basis_vector(2, 1), pars) is Parity.ODD
    assert vector_parity(zeros(2), pars) is Parity.EVEN
    with pytest.raises(ValueError):
        vector_parity(exact_array([1, 1]), pars)


@pytest.mark.parametrize("make", [lambda: type_I(1, 2), lambda: type_I(2, 2)])
def test_faulkner_round_trip(make):
    pair = make()
    ml = module_from_pair(pair)
    assert check_lie(ml.algebra).ok
    assert check_module(ml.module).ok
    assert pairs_equal(faulkner_from_module(ml), pair)


def test_faulkner_round_trip_with_odd_part(gl11_pair):
    assert pairs_equal(faulkner_from_module(module_from_pair(gl11_pair)), gl11_pair)


def test_degenerate_pairing_is_rejected():
    pair = type_I(1, 2)
    pair.gram = zeros(2, 2)
    with pytest.raises(ConsistencyFailure):
        module_from_pair(pair)
    assert "nondegenerate" in check_pair(pair).axioms_failed()


def test_broken_product_fails_check():
    pair = type_I(1, 2)
    pair.prod_minus[0, 0, 0, 0] = 5
    assert not check_pair(pair).ok


def test_nu_parity_and_reversal(gl11_pair):
    f, v = basis_vector(2, 1), basis_vector(2, 0)
    d = nu(gl11_pair, f, v)
    assert d.parity is Parity.ODD
    r = nu_reversed(gl11_pair, v, f)
    assert np.array_equal(r.minus, -d.minus)
    assert np.array_equal(r.plus, -d.plus)


@pytest.mark.parametrize("make", [lambda: type_I(1, 3), lambda: type_I(2, 2)])
def test_inner_derivations_are_derivations(make):
    pair = make()
    for d in instr_basis(pair):
        assert check_derivation(pair, d).ok


def test_inner_derivations_with_odd_part(gl11_pair):
    basis = instr_basis(gl11_pair)
    assert basis
    assert all(check_derivation(gl11_pair, d).ok for d in basis)


def test_shift_composition_even():
    pair = type_I(1, 2)
    twice = tensor_shift(tensor_shift(pair, ShiftParam(3)), ShiftParam(Fraction(-1, 2)))
    once = tensor_shift(pair, ShiftParam(Fraction(5, 2)))
    assert pairs_equal(twice, once)


def test_zero_shift_is_identity():
    pair = type_I(2, 2)
    assert pairs_equal(tensor_shift(pair, ShiftParam(0)), pair)


@pytest.mark.parametrize("shift", [ShiftParam(-4), ShiftParam(1, Parity.ODD), ShiftParam(Fraction(1, 3), Parity.ODD)])
def test_shifted_pairs_stay_metric(shift):
    shifted = tensor_shift(type_I(1, 2), shift)
    assert check_pair(shifted).ok
    assert all(p is Parity(int(shift.a)) for p in shifted.minus_parities)


def test_one_dim_pairs():
    odd = one_dim_pair(ShiftParam(2, Parity.ODD))
    assert odd.prod_minus[0, 0, 0, 0] == -2
    assert odd.prod_plus[0, 0, 0, 0] == 2
    assert check_pair(odd).ok
    assert pairs_equal(one_dim_pair(ShiftParam(0)), unit_pair())


def test_parity_ordered_reindexes(gl11_pair):
    shifted = tensor_shift(gl11_pair, ShiftParam(1, Parity.ODD))
    assert [int(p) for p in shifted.plus_parities] == [1, 0]
    ordered = parity_ordered(shifted)
    assert [int(p) for p in ordered.plus_parities] == [0, 1]
    assert ordered.plus_labels == tuple(reversed(shifted.plus_labels))
    assert check_pair(ordered).ok


def test_type_I_automorphisms():
    pair = type_I(1, 3)
    phi = type_I_automorphism(1, np.diag([Fraction(1), Fraction(2), Fraction(3)]))
    assert is_automorphism(phi, pair)
    assert pairs_equal(transport_pair(pair, phi), pair)


def test_scaling_map_is_an_automorphism():
    pair = type_I(1, 2)
    phi = scaling_map(3, pair)
    assert check_hom(phi, pair, pair).ok
    assert check_similarity(phi, pair, pair) == 1
