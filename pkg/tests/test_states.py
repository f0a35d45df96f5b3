"""States: validation, the example gallery, Schmidt tools, random oracles."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snest.errors import (DimensionMismatchError, InvalidStateError,
                          ParameterError)
from snest.matkernel import partial_trace_b
from snest.states import (DensityMatrix, PureState, example1_state,
                          example2_state, example4_state, horodecki_2x4,
                          horodecki_3x3, horodecki_3x3_verbatim, isotropic,
                          maximally_entangled, maximally_mixed,
                          pure_concurrence, random_schmidt_rank_state,
                          schmidt_decompose)


# ----------------------------------------------------------- DensityMatrix

def test_density_matrix_accepts_valid():
    rho = DensityMatrix(2, 2, np.eye(4) / 4)
    assert rho.mat.shape == (4, 4)
    assert rho.mat.dtype == complex


def test_density_matrix_rejects_bad_trace():
    with pytest.raises(InvalidStateError) as err:
        DensityMatrix(2, 2, np.eye(4) * 0.245)
    assert "trace" in str(err.value)


def test_density_matrix_rejects_nonhermitian():
    m = np.eye(4) / 4
    m[0, 1] = 0.1
    with pytest.raises(InvalidStateError) as err:
        DensityMatrix(2, 2, m)
    assert "Hermitian" in str(err.value)


def test_density_matrix_rejects_negative():
    m = np.diag([0.6, 0.5, -0.1, 0.0])
    with pytest.raises(InvalidStateError) as err:
        DensityMatrix(2, 2, m)
    assert "eigenvalue" in str(err.value)


def test_density_matrix_rejects_wrong_shape():
    with pytest.raises(DimensionMismatchError):
        DensityMatrix(2, 3, np.eye(4) / 4)


def test_density_matrix_is_immutable():
    rho = maximally_mixed(2, 2)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1.0


def test_density_matrix_json_round_trip(tmp_path):
    rho = example2_state(0.37)
    path = tmp_path / "state.json"
    rho.save(path)
    again = DensityMatrix.load(path)
    assert (again.dA, again.dB) == (4, 4)
    assert np.array_equal(again.mat, rho.mat)  # 17 significant digits


def test_density_matrix_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dA": 2}')
    with pytest.raises(ParameterError):
        DensityMatrix.load(path)


# --------------------------------------------------------------- PureState

def test_pure_state_norm_check():
    with pytest.raises(InvalidStateError):
        PureState(2, 2, [1.0, 1.0, 0.0, 0.0])
    with pytest.raises(DimensionMismatchError):
        PureState(2, 2, [1.0, 0.0, 0.0])


def test_pure_state_density_matrix():
    psi = maximally_entangled(2)
    rho = psi.density_matrix()
    assert rho.mat[0, 3] == pytest.approx(0.5)
    assert np.trace(rho.mat @ rho.mat).real == pytest.approx(1.0, abs=1e-12)


def test_schmidt_rank_of_product_and_entangled():
    product = PureState(2, 2, [1.0, 0.0, 0.0, 0.0])
    assert product.schmidt_rank() == 1
    assert maximally_entangled(3).schmidt_rank() == 3


# ----------------------------------------------------------------- gallery

def test_maximally_mixed_entries():
    rho = maximally_mixed(2, 3)
    assert np.array_equal(rho.mat, np.eye(6) / 6)


def test_maximally_entangled_coefficients():
    psi = maximally_entangled(3)
    coeffs, _, _ = schmidt_decompose(psi)
    assert np.abs(coeffs - 1 / np.sqrt(3)).max() < 1e-12


def test_horodecki_2x4_structure():
    tau = 0.9
    rho = horodecki_2x4(tau)
    pref = 1 / (1 + 7 * tau)
    assert rho.mat[0, 0] == pytest.approx(tau * pref)
    assert rho.mat[4, 4] == pytest.approx((1 + tau) / 2 * pref)
    assert rho.mat[4, 7] == pytest.approx(np.sqrt(1 - tau * tau) / 2 * pref)
    assert rho.mat[0, 5] == pytest.approx(tau * pref)
    assert rho.mat[7, 7] == pytest.approx((1 + tau) / 2 * pref)
    with pytest.raises(ParameterError):
        horodecki_2x4(0.0)
    with pytest.raises(ParameterError):
        horodecki_2x4(1.0)


@pytest.mark.parametrize("tau", np.linspace(0.04, 0.96, 24))
def test_horodecki_2x4_validates_on_grid(tau):
    horodecki_2x4(tau)  # constructor runs the full validation suite


@pytest.mark.parametrize("q", np.linspace(0.0, 1.0, 21))
def test_example1_validates_on_grid(q):
    example1_state(0.9, q)


def test_example1_endpoints():
    at_zero = example1_state(0.9, 0.0)
    assert np.abs(at_zero.mat - horodecki_2x4(0.9).mat).max() < 1e-15
    at_one = example1_state(0.9, 1.0)
    assert at_one.mat[0, 5] == pytest.approx(0.5)
    assert np.trace(at_one.mat @ at_one.mat).real == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("p", np.linspace(0.0, 1.0, 21))
def test_example2_validates_on_grid(p):
    example2_state(p)


def test_example2_structure():
    rho = example2_state(1.0)
    # 1/2 |phi><phi| + 1/4 (|23>+|32>)(<23|+<32|), phi = (|00>+|11>+|22>)/sqrt(3)
    assert rho.mat[0, 0] == pytest.approx(1 / 6)
    assert rho.mat[0, 5] == pytest.approx(1 / 6)
    assert rho.mat[5, 10] == pytest.approx(1 / 6)
    assert rho.mat[11, 11] == pytest.approx(1 / 4)
    assert rho.mat[11, 14] == pytest.approx(1 / 4)
    pure = example2_state(0.0)
    assert pure.mat[10, 10] == pytest.approx(23 / 25)
    assert pure.mat[0, 10] == pytest.approx(np.sqrt(23) / 25)


def test_example2_rank3_component():
    # The p=0 endpoint is pure with Schmidt rank 3.
    xi = example2_state(0.0)
    eigvals = np.linalg.eigvalsh(xi.mat)
    assert eigvals[-1] == pytest.approx(1.0, abs=1e-12)
    amp = np.linalg.eigh(xi.mat)[1][:, -1]
    psi = PureState(4, 4, amp)
    assert psi.schmidt_rank() == 3


@pytest.mark.parametrize("v", np.linspace(0.0, 1.0, 21))
def test_isotropic_validates_on_grid(v):
    isotropic(3, v)


def test_isotropic_endpoints_and_errors():
    assert np.array_equal(isotropic(2, 0.0).mat, np.eye(4) / 4)
    pure = isotropic(2, 1.0)
    psi = maximally_entangled(2).amplitudes
    assert np.abs(pure.mat - np.outer(psi, psi.conj())).max() < 1e-15
    with pytest.raises(ParameterError):
        isotropic(2, 1.2)
    with pytest.raises(ParameterError):
        isotropic(1, 0.5)


def test_horodecki_3x3_diagonal_complete():
    tau = 0.5
    rho = horodecki_3x3(tau)
    pref = 1 / (1 + 8 * tau)
    diag = np.diag(rho.mat).real
    assert diag[7] == pytest.approx(tau * pref)
    assert diag[6] == pytest.approx((1 + tau) / 2 * pref)
    assert rho.mat[0, 4] == pytest.approx(tau * pref)
    assert rho.mat[6, 8] == pytest.approx(np.sqrt(1 - tau * tau) / 2 * pref)


def test_horodecki_3x3_verbatim_trace_defect():
    tau = 0.5
    m, defect = horodecki_3x3_verbatim(tau)
    assert m[7, 7] == 0.0
    assert defect == pytest.approx(tau / (1 + 8 * tau), abs=1e-12)
    assert np.trace(m).real == pytest.approx(1 - defect, abs=1e-12)


@pytest.mark.parametrize("tau", np.linspace(0.05, 0.95, 19))
def test_example4_validates_on_grid(tau):
    example4_state(tau, 0.995)


def test_example4_mixes_toward_identity():
    rho = example4_state(0.5, 0.0)
    assert np.abs(rho.mat - np.eye(9) / 9).max() < 1e-15


# ------------------------------------------------------- schmidt decompose

def test_schmidt_reassembly():
    rng = np.random.default_rng(3)
    for dA, dB in ((2, 4), (3, 3), (4, 2)):
        amp = rng.normal(size=dA * dB) + 1j * rng.normal(size=dA * dB)
        amp /= np.linalg.norm(amp)
        psi = PureState(dA, dB, amp)
        coeffs, left, right = schmidt_decompose(psi)
        rebuilt = np.einsum('s,is,sk->ik', coeffs, left, right).reshape(-1)
        assert np.abs(rebuilt - amp).max() < 1e-10


def test_schmidt_coefficients_sum_of_squares():
    psi = random_schmidt_rank_state(3, 4, 3, seed=99)
    assert np.sum(psi.schmidt ** 2) == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------- random oracles

def test_random_state_rank_and_floor():
    for r in (1, 2, 3):
        psi = random_schmidt_rank_state(3, 5, r, seed=7 + r)
        assert psi.schmidt_rank() == r
        assert psi.schmidt[r - 1] > 1e-6


def test_random_state_is_seed_deterministic():
    a = random_schmidt_rank_state(3, 3, 2, seed=1234)
    b = random_schmidt_rank_state(3, 3, 2, seed=1234)
    c = random_schmidt_rank_state(3, 3, 2, seed=1235)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert not np.array_equal(a.amplitudes, c.amplitudes)


def test_random_state_rank_bounds():
    with pytest.raises(ParameterError):
        random_schmidt_rank_state(2, 3, 3, seed=0)
    with pytest.raises(ParameterError):
        random_schmidt_rank_state(2, 3, 0, seed=0)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 31 - 1), st.integers(1, 3))
def test_random_state_rank_property(seed, r):
    psi = random_schmidt_rank_state(3, 4, r, seed=seed)
    assert psi.schmidt_rank() == r
    assert psi.schmidt[:r].min() > 1e-6  # requested coefficients well away from 0
    assert np.abs(psi.schmidt[r:]).max(initial=0.0) < 1e-10
    assert np.all(np.diff(psi.schmidt) <= 0)


# -------------------------------------------------------- pure concurrence

def test_concurrence_product_state():
    assert pure_concurrence(PureState(2, 2, [1, 0, 0, 0])) == pytest.approx(0.0)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_concurrence_maximally_entangled(d):
    expected = np.sqrt(2 * (d - 1) / d)
    assert pure_concurrence(maximally_entangled(d)) == pytest.approx(
        expected, abs=1e-12)


def test_concurrence_of_rank3_interpolation_endpoint():
    # xi = (1/5)|00> + (1/5)|11> + (sqrt(23)/5)|22> in 4x4
    amp = np.zeros(16, dtype=complex)
    amp[0] = amp[5] = 0.2
    amp[10] = np.sqrt(23) / 5
    psi = PureState(4, 4, amp)
    expected = np.sqrt(2 * (1 - (23 / 25) ** 2 - 2 * (1 / 25) ** 2))
    assert pure_concurrence(psi) == pytest.approx(expected, abs=1e-12)


def test_concurrence_matches_schmidt_formula():
    # C^2 = 2 (1 - sum lam^4) = 4 sum_{i<j} lam_i^2 lam_j^2
    for seed in range(5):
        psi = random_schmidt_rank_state(3, 4, 3, seed=seed)
        lam = psi.schmidt
        expected = np.sqrt(2 * (1 - np.sum(lam ** 4)))
        assert pure_concurrence(psi) == pytest.approx(expected, abs=1e-10)


def test_concurrence_partial_trace_consistency():
    psi = random_schmidt_rank_state(4, 4, 4, seed=21)
    rho = psi.density_matrix()
    rho_a = partial_trace_b(rho.mat, 4, 4)
    direct = np.sqrt(2 * (1 - np.trace(rho_a @ rho_a).real))
    assert pure_concurrence(psi) == pytest.approx(direct, abs=1e-12)
