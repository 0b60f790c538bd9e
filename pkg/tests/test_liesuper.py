import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st
from src.models.lie import LieSuperAlgebra, SuperModule
from src.types.enums import PowerKind, TensorMode
from src.types.errors import DimensionMismatchError
from src.utils.linalg import grids_equal, identity, zeros
from src.utils.liesuper import (
    check_dual_pairing,
    check_lie,
    check_metric,
    check_module,
    check_module_automorphism,
    direct_sum_modules,
    dual_module,
    general_linear,
    gl_basis,
    is_faithful,
    metric_general_linear,
    orthogonal_sum,
    power_module,
    power_pairing,
    supertrace_form,
    tensor_modules,
    tensor_pairing,
    transport_automorphism,
)


@pytest.fixture
def gl11() -> SuperModule:
    return general_linear(1, 1)


def test_gl_basis_even_units_first():
    assert gl_basis(1, 1) == [(0, 0), (1, 1), (0, 1), (1, 0)]


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_general_linear_axioms(m, n):
    module = general_linear(m, n)
    assert check_lie(module.algebra).ok
    assert check_module(module).ok
    assert is_faithful(module)
    assert check_metric(module.algebra, supertrace_form(m, n)).ok


def test_supertrace_form_scales():
    form = supertrace_form(1, 1, 3)
    assert form[0, 0] == 3
    assert form[1, 1] == -3


def test_zero_form_is_degenerate(gl11):
    report = check_metric(gl11.algebra, zeros(4, 4))
    assert "nondegenerate" in report.axioms_failed()


def test_broken_bracket_fails_jacobi_or_antisymmetry(gl11):
    bracket = gl11.algebra.bracket.copy()
    bracket[2, 3] = bracket[2, 3] * 2
    broken = LieSuperAlgebra(gl11.algebra.parities, bracket)
    assert not check_lie(broken).ok


def test_dual_module_is_a_module_and_pairs(gl11):
    dual = dual_module(gl11)
    assert check_module(dual).ok
    assert check_dual_pairing(gl11, dual).ok


def test_double_dual_is_the_parity_twist(gl11):
    twice = dual_module(dual_module(gl11))
    for x, p in enumerate(gl11.algebra.parities):
        sign = -1 if int(p) else 1
        assert grids_equal(twice.action[x], gl11.action[x] * sign)


@pytest.mark.parametrize("kind", [PowerKind.ALT, PowerKind.SYM])
@pytest.mark.parametrize("n", [2, 3])
def test_power_module_duality(gl11, kind, n):
    module = power_module(kind, gl11, n)
    dual = power_module(kind, dual_module(gl11), n)
    assert check_module(module).ok
    assert check_dual_pairing(module, dual, power_pairing(kind, gl11, n)).ok


@pytest.mark.parametrize("mode", [TensorMode.RESTRICTED, TensorMode.GENERAL])
@pytest.mark.parametrize("n", [2, 3])
def test_tensor_module_duality(gl11, mode, n):
    dual = dual_module(gl11)
    module = tensor_modules(mode, [gl11] * n)
    dual_power = tensor_modules(mode, [dual] * n)
    gram = tensor_pairing([identity(2)] * n, [dual.parities] * n, [gl11.parities] * n)
    assert check_module(module).ok
    assert check_dual_pairing(module, dual_power, gram).ok


def test_general_tensor_uses_direct_sum_algebra(gl11):
    module = tensor_modules(TensorMode.GENERAL, [gl11, gl11])
    assert module.algebra.dim == 8
    assert check_lie(module.algebra).ok


def test_restricted_tensor_needs_common_algebra(gl11):
    with pytest.raises(DimensionMismatchError):
        tensor_modules(TensorMode.RESTRICTED, [gl11, general_linear(2, 1)])


def test_direct_sums(gl11):
    total = direct_sum_modules([gl11, gl11])
    assert total.dim == 4
    assert check_module(total).ok
    form = orthogonal_sum([supertrace_form(1, 1)] * 2, scale=2)
    assert check_metric(total.algebra, form).ok


def test_powers_of_faithful_modules_need_not_be_faithful():
    # sl-part acts trivially on the top power of an even natural module
    module = general_linear(2, 0)
    top = power_module(PowerKind.ALT, module, 2)
    assert top.dim == 1
    assert not is_faithful(top)


@settings(deadline=None, max_examples=10)
@given(st.integers(1, 5), st.integers(1, 5), st.sampled_from([PowerKind.ALT, PowerKind.SYM]))
def test_automorphism_transport(a, b, kind):
    # conjugation by an even diagonal h induces phi(E_ij) = (h_i / h_j) E_ij
    module = general_linear(1, 1)
    h = identity(2)
    h[0, 0], h[1, 1] = Fraction(a), Fraction(b)
    scale = {(0, 0): 1, (1, 1): 1, (0, 1): Fraction(a, b), (1, 0): Fraction(b, a)}
    phi = zeros(4, 4)
    for x, unit in enumerate(gl_basis(1, 1)):
        phi[x, x] = scale[unit]
    assert check_module_automorphism(phi, h, module).ok
    phi2, hn = transport_automorphism(kind, phi, h, module, 2)
    assert check_module_automorphism(phi2, hn, power_module(kind, module, 2)).ok


def test_metric_general_linear_bundle():
    ml = metric_general_linear(1, 1, 2)
    assert ml.algebra.dim == 4
    assert ml.form[0, 0] == 2
