import numpy as np
import pytest

from ontology_lab.flow import (
    FlowSystem,
    PacketUnresolvedError,
    build_flow_generator,
    characteristic_oracle,
    circular_distance,
    momentum_operator,
    transport_check,
    wrapped_gaussian,
)
from ontology_lab.linalg import hermitian_eigensystem, is_hermitian


def evolve(system, psi0, t):
    spec = hermitian_eigensystem(build_flow_generator(system))
    coeff = spec.eigenvectors.conj().T @ psi0
    return spec.eigenvectors @ (np.exp(-1j * spec.eigenvalues * t) * coeff)


def test_momentum_operator_basics():
    n = 32
    p = momentum_operator(n)
    assert is_hermitian(p, 1e-12)
    vals = np.sort(np.linalg.eigvalsh(p))
    assert np.max(np.abs(vals - np.arange(-n // 2, n // 2))) < 1e-10
    # generates rigid translation of a smooth packet
    h = 2.0 * np.pi / n
    psi0 = wrapped_gaussian(n, 2.0, 6.0 * h)
    shift = 4.0 * h
    spec = hermitian_eigensystem(p)
    coeff = spec.eigenvectors.conj().T @ psi0
    psi_t = spec.eigenvectors @ (np.exp(-1j * spec.eigenvalues * shift) * coeff)
    assert np.max(np.abs(psi_t - wrapped_gaussian(n, 2.0 + shift, 6.0 * h))) < 1e-10


def test_zero_field_is_static():
    system = FlowSystem(np.zeros(32))
    assert np.max(np.abs(build_flow_generator(system))) == 0.0
    report = transport_check(system, 1.0, 3.0)
    assert report.deviation < 1e-12
    assert report.norm_drift < 1e-12
    assert report.mean_classical == pytest.approx(1.0, abs=1e-12)


def test_constant_field_generator_is_scaled_momentum():
    n, c = 32, 0.7
    h = build_flow_generator(FlowSystem(np.full(n, c)))
    assert np.max(np.abs(h - c * momentum_operator(n))) < 1e-13


def test_sine_field_generator_hermitian():
    n = 64
    q = 2.0 * np.pi * np.arange(n) / n
    h = build_flow_generator(FlowSystem(np.sin(q)))
    assert is_hermitian(h, 1e-12)
    assert np.max(np.abs(np.linalg.eigvalsh(h).imag)) == 0.0


def test_zero_time_is_identity():
    system = FlowSystem(np.full(64, 0.9))
    report = transport_check(system, 1.0, 0.0)
    assert report.deviation < 1e-12


def test_constant_field_transports_exactly():
    system = FlowSystem(np.full(64, 0.7))
    report = transport_check(system, 1.0, 2.0)
    assert circular_distance(report.mean_classical, (1.0 + 1.4) % (2 * np.pi)) < 1e-10
    assert report.deviation < 1e-10
    assert report.norm_drift < 1e-12
    assert report.deviation <= report.bound


def test_unit_field_half_turn():
    system = FlowSystem(np.ones(64))
    report = transport_check(system, 0.5, np.pi)
    assert report.deviation < 1e-10
    assert circular_distance(report.mean_quantum, 0.5 + np.pi) < 1e-10


def test_constant_field_rigid_waveform():
    # whole density profile translates without distortion, not just the mean
    n, c, t = 64, 0.7, 2.0
    h = 2.0 * np.pi / n
    system = FlowSystem(np.full(n, c))
    psi_t = evolve(system, wrapped_gaussian(n, 1.0, 6.0 * h), t)
    target = wrapped_gaussian(n, 1.0 + c * t, 6.0 * h)
    assert np.max(np.abs(np.abs(psi_t) ** 2 - np.abs(target) ** 2)) < 1e-10


def test_varying_field_tracks_characteristic():
    n = 256
    q = 2.0 * np.pi * np.arange(n) / n
    system = FlowSystem(0.5 + 0.3 * np.sin(q))
    report = transport_check(system, 1.0, 2.0)
    assert report.deviation < 1e-3
    assert report.deviation <= report.bound
    assert report.norm_drift < 1e-12
    payload = report.to_json()
    assert set(payload) == {
        "t", "mean_quantum", "mean_classical", "deviation",
        "norm_drift", "sigma", "bound",
    }


def test_oracle_constant_field_closed_form():
    system = FlowSystem(np.full(32, 0.3), dt=1e-3)
    q_t, jac, curv = characteristic_oracle(system, 0.2, 5.0)
    assert abs(q_t - (0.2 + 1.5)) < 1e-10
    assert abs(jac - 1.0) < 1e-8
    assert abs(curv) < 1e-6


def test_oracle_step_convergence():
    n = 128
    q = 2.0 * np.pi * np.arange(n) / n
    samples = 0.5 + 0.3 * np.sin(q)
    coarse = characteristic_oracle(FlowSystem(samples, dt=2e-3), 1.0, 2.0)[0]
    fine = characteristic_oracle(FlowSystem(samples, dt=5e-4), 1.0, 2.0)[0]
    assert abs(coarse - fine) < 1e-10


def test_generator_unbounded_below():
    n = 64
    system = FlowSystem(np.ones(n))
    vals = np.linalg.eigvalsh(build_flow_generator(system))
    # lifting the flow costs positivity of the energy
    assert vals[0] < -n / 4.0


def test_packet_resolution_gate():
    system = FlowSystem(np.full(32, 0.5))
    h = 2.0 * np.pi / 32
    with pytest.raises(PacketUnresolvedError):
        transport_check(system, 1.0, 1.0, sigma=0.5 * h)
    report = transport_check(system, 1.0, 1.0, sigma=2.0 * h)
    assert report.sigma == pytest.approx(2.0 * h)


def test_system_validation():
    with pytest.raises(ValueError):
        FlowSystem(np.zeros(8))
    with pytest.raises(ValueError):
        FlowSystem(np.full(32, np.nan))
    with pytest.raises(ValueError):
        FlowSystem(np.zeros(32), dt=0.0)
