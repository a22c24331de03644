import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entroportrait.channels import (
    EscortParams,
    bayes_conditional,
    convex_power_channel,
    escort_entropy_chain,
    escort_map,
    is_x_state,
    partial_transpose,
    power_channel,
    ppt_min_eigenvalue,
    quantum_power_entropy_chain,
    sample_separable_x_state,
    truncation_channel,
    x_state,
    xstate_entanglement_search,
)
from entroportrait.density_core import (
    eigenprobabilities,
    purity,
    random_density,
    random_unitary,
    validate_density,
)
from entroportrait.errors import ZeroColumn, ZeroDenominator, ZeroProbabilityBlock
from entroportrait.stochastic_portrait import Factorization
from oracles import bell_state, entropy

F22 = Factorization(2, 2)


def direct_escort(p, s):
    q = [x**s for x in p]
    return [x / sum(q) for x in q]


def test_escort_examples():
    np.testing.assert_allclose(escort_map([0.5, 0.25, 0.25], EscortParams(2)), [2 / 3, 1 / 6, 1 / 6], atol=1e-15)
    p = [0.1, 0.6, 0.3]
    np.testing.assert_allclose(escort_map(p, EscortParams(1)), p, atol=1e-15)
    assert escort_map([0.5, 0.3, 0.2], EscortParams(50))[0] >= 1 - 1e-10


def test_escort_window():
    p = [0.1, 0.2, 0.3, 0.4]
    np.testing.assert_allclose(escort_map(p, EscortParams(2, (1, 3))), direct_escort([0.2, 0.3], 2), atol=1e-15)
    with pytest.raises(ZeroDenominator):
        escort_map([0.0, 0.0, 1.0], EscortParams(2, (0, 2)))
    with pytest.raises(ValueError):
        EscortParams(0.5)


@given(st.integers(2, 8), st.floats(1, 12), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_escort_matches_direct(n, s, seed):
    p = np.random.default_rng(seed).dirichlet(np.ones(n))
    out = escort_map(p, EscortParams(s))
    np.testing.assert_allclose(out, direct_escort(p, s), rtol=1e-10, atol=1e-300)
    assert abs(out.sum() - 1) <= 1e-12 and out.min() >= 0


def test_bayes():
    np.testing.assert_allclose(bayes_conditional([0.1, 0.2, 0.3, 0.4], F22, 0), [0.25, 0.75])
    a = np.array([0.3, 0.7])
    p = np.kron(a, [0.2, 0.3, 0.5])
    for j in range(3):
        np.testing.assert_allclose(bayes_conditional(p, Factorization(2, 3), j), a, atol=1e-15)
    np.testing.assert_allclose(bayes_conditional(np.full(6, 1 / 6), Factorization(2, 3), 1), [0.5, 0.5])
    with pytest.raises(ZeroColumn):
        bayes_conditional([0.5, 0, 0.5, 0], F22, 1)


def test_power_channel_examples():
    out = power_channel(np.diag([0.5, 0.3, 0.2]), 2)
    np.testing.assert_allclose(out, np.diag([25, 9, 4]) / 38, atol=1e-15)
    psi = random_density(4, 1, seed=3)
    np.testing.assert_allclose(power_channel(psi, 3.5), psi, atol=1e-12)
    np.testing.assert_allclose(power_channel(np.eye(3) / 3, 7), np.eye(3) / 3, atol=1e-15)
    rho = random_density(3, seed=1)
    np.testing.assert_allclose(power_channel(rho, 1), rho, atol=1e-12)
    np.testing.assert_allclose(power_channel(rho, 3), rho @ rho @ rho / np.trace(rho @ rho @ rho), atol=1e-12)


def test_power_channel_covariance_and_purity():
    for seed in range(20):
        rho = random_density(5, 1 + seed % 5, seed)
        u = random_unitary(5, seed + 50)
        for s in (1.5, 2, 4):
            out = power_channel(rho, s)
            validate_density(out)
            np.testing.assert_allclose(power_channel(u @ rho @ u.conj().T, s), u @ out @ u.conj().T, atol=1e-10)
            assert purity(out) >= purity(rho) - 1e-12


def test_truncation():
    np.testing.assert_allclose(truncation_channel(np.diag([0.5, 0.3, 0.2]), 2), np.diag([0.625, 0.375]))
    rho = np.zeros((4, 4), dtype=complex)
    rho[:2, :2] = random_density(2, seed=1)
    np.testing.assert_allclose(truncation_channel(rho, 2), rho[:2, :2], atol=1e-15)
    with pytest.raises(ZeroProbabilityBlock):
        truncation_channel(np.diag([0.0, 0.0, 1.0]), 2)
    for seed in range(20):
        out = truncation_channel(random_density(5, seed=seed), 3)
        validate_density(out)


def test_convex_power_channel():
    rho = np.diag([0.5, 0.3, 0.2])
    np.testing.assert_allclose(convex_power_channel(rho, [1.0]), rho)
    expected = 0.5 * rho + 0.5 * np.diag([25, 9, 4]) / 38
    np.testing.assert_allclose(convex_power_channel(rho, [0.5, 0.5]), expected, atol=1e-15)
    rng = np.random.default_rng(0)
    for seed in range(10):
        validate_density(convex_power_channel(random_density(4, seed=seed), rng.dirichlet(np.ones(5))))


def test_escort_chain_values():
    # frozen from direct evaluation: (2/3, 1/6, 1/6) at s=2, (0.8, 0.1, 0.1) at s=3
    expected = [
        1.5 * np.log(2),
        entropy([2 / 3, 1 / 6, 1 / 6]),
        entropy([0.8, 0.1, 0.1]),
    ]
    chain = escort_entropy_chain([0.5, 0.25, 0.25], 3)
    np.testing.assert_allclose(chain, expected, atol=1e-12)
    np.testing.assert_allclose(chain, [1.0397207708399179, 0.8675632284814613, 0.639031859650177], atol=1e-12)


def test_escort_chain_edge_cases():
    np.testing.assert_allclose(escort_entropy_chain(np.full(4, 0.25), 5), np.log(4), atol=1e-12)
    assert escort_entropy_chain([0, 1, 0], 4) == [0.0] * 4
    with pytest.raises(ValueError):
        escort_entropy_chain([0.5, 0.5], 1)


def test_quantum_chain():
    np.testing.assert_allclose(quantum_power_entropy_chain(np.eye(3) / 3, 4), np.log(3), atol=1e-12)
    np.testing.assert_allclose(quantum_power_entropy_chain(random_density(3, 1, seed=0), 4), 0, atol=1e-9)
    for seed in range(20):
        rho = random_density(5, seed=seed)
        q = quantum_power_entropy_chain(rho, 8)
        c = escort_entropy_chain(eigenprobabilities(rho), 8)
        np.testing.assert_allclose(q, c, atol=1e-12)
        assert np.all(np.diff(q) <= 1e-12)


def test_ppt():
    assert ppt_min_eigenvalue(bell_state(), F22) == pytest.approx(-0.5, abs=1e-10)
    assert ppt_min_eigenvalue(np.eye(6) / 6, Factorization(2, 3)) == pytest.approx(1 / 6, abs=1e-12)
    for seed in range(10):
        prod = np.kron(random_density(2, seed=seed), random_density(3, seed=seed + 1))
        assert ppt_min_eigenvalue(prod, Factorization(2, 3)) >= -1e-10


def test_partial_transpose_involution():
    rho = random_density(6, seed=3)
    f = Factorization(2, 3)
    np.testing.assert_array_equal(partial_transpose(partial_transpose(rho, f), f), rho)


def test_x_states():
    assert is_x_state(sample_separable_x_state(0))
    prod = x_state((0.4, 0.1, 0.3, 0.2))
    rep = xstate_entanglement_search(1, 0, 2.0)
    assert rep.trials == 1
    assert ppt_min_eigenvalue(power_channel(prod, 2), F22) >= -1e-10
    for seed in range(30):
        rho = sample_separable_x_state(seed)
        validate_density(rho)
        assert ppt_min_eigenvalue(rho, F22) >= -1e-10
        assert is_x_state(power_channel(rho, 2), tol=1e-12)


def test_xsearch_closed_form_square():
    # block form: [[a, z], [z*, d]]^2 = [[a^2 + |z|^2, z (a + d)], ...]
    a, b, c, d, z, w = 0.4, 0.1, 0.2, 0.3, 0.05 + 0.1j, 0.02j
    rho = x_state((a, b, c, d), z, w)
    sq = rho @ rho
    assert sq[0, 3] == pytest.approx(z * (a + d))
    assert sq[1, 2] == pytest.approx(w * (b + c))
    out = power_channel(rho, 2)
    np.testing.assert_allclose(out, sq / np.trace(sq), atol=1e-12)


def test_xsearch_deterministic():
    a = xstate_entanglement_search(200, 7, 2.0)
    b = xstate_entanglement_search(200, 7, 2.0)
    assert a.to_dict() == b.to_dict()
    assert a.min_eig_before >= -1e-10
    for i, before, after in a.found[:5]:
        rho = sample_separable_x_state(7 + i)
        assert ppt_min_eigenvalue(rho, F22) == before
        assert ppt_min_eigenvalue(power_channel(rho, 2.0), F22) == after < -1e-8
