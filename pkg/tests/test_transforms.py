import numpy as np
import pytest

from redspectra.config import Config
from redspectra.errors import DomainError, TailError
from redspectra.transforms import (carleman_as_convolution_residual,
                                   carleman_transform, half_plane_scan,
                                   laplace_transform,
                                   mollify_identity_residual,
                                   shift_identity_residual, tail_bound)

from conftest import make_full, make_half

CFG = Config()


def test_laplace_closed_forms():
    F = make_half(lambda t: np.exp(1j * t))
    for lam in (0.5, 0.3 + 0.7j, 1.0 - 0.2j):
        val = laplace_transform(F, lam, CFG)[0]
        assert abs(val - 1.0 / (lam - 1j)) < 1e-4
    Z = make_half(lambda t: np.zeros_like(t))
    assert abs(laplace_transform(Z, 0.5, CFG)[0]) == 0.0


def test_laplace_domain_and_tail_errors():
    F = make_half(lambda t: np.exp(1j * t))
    with pytest.raises(DomainError):
        laplace_transform(F, 1j * 0.5, CFG)
    with pytest.raises(DomainError):
        laplace_transform(F, -0.5, CFG)
    short = make_half(lambda t: np.ones_like(t), t_end=40.0)
    with pytest.raises(TailError):
        laplace_transform(short, 0.01, CFG)


def test_carleman_two_half_planes():
    G = make_full(lambda t: np.exp(1j * t))
    for a in (0.5, 0.2):
        r = carleman_transform(G, a, CFG)[0]
        l = carleman_transform(G, -a, CFG)[0]
        assert abs(r - 1.0 / (a - 1j)) < 1e-4
        assert abs(l - 1.0 / (-a - 1j)) < 1e-4
    with pytest.raises(DomainError):
        carleman_transform(G, 1j)
    with pytest.raises(DomainError):
        carleman_transform(make_half(lambda t: np.exp(1j * t)), 0.5)


def test_growth_aware_tail_bound_monotone():
    F = make_half(lambda t: np.ones_like(t))
    assert tail_bound(F, 0.4) < tail_bound(F, 0.1)
    G = make_half(lambda t: t * np.exp(1j * t * t), k=1)
    assert tail_bound(G, 0.1) > tail_bound(F, 0.1)


def test_half_plane_scan_shapes_and_scale():
    F = make_half(lambda t: np.exp(1j * t))
    hp = half_plane_scan(F, np.linspace(-5, 5, 101), CFG)
    assert hp.right.shape == (len(hp.a_seq), 101, 1)
    assert hp.left is None and hp.side == "right"
    assert 0.3 < hp.scale < 0.5
    G = make_full(lambda t: np.exp(1j * t))
    hp2 = half_plane_scan(G, np.linspace(-5, 5, 101), CFG)
    assert hp2.left is not None and hp2.side == "both"


def test_tail_inadmissible_abscissae_are_dropped():
    # growth exponent 1 makes the smallest abscissae meaningless
    G = make_half(lambda t: t * np.exp(1j * t * t), k=1)
    hp = half_plane_scan(G, np.linspace(-2, 2, 41), CFG)
    assert len(hp.a_seq) >= 3
    assert min(hp.a_seq) > 0.025 - 1e-12


@pytest.mark.parametrize("fn", [lambda t: np.exp(-t),
                                lambda t: np.exp(1j * t),
                                lambda t: np.exp(1j * t * t)])
def test_shift_and_mollify_identities(fn):
    F = make_half(fn)
    for lam in (0.05 + 0.3j, 0.2 - 0.8j, 0.5):
        assert shift_identity_residual(F, 2.0, lam) < 1e-10
        assert mollify_identity_residual(F, 1.0, lam) < 1e-4


def test_carleman_as_convolution():
    phi = make_full(lambda t: np.exp(1j * t), t_end=120.0)
    for lam in (0.5, -0.5, 0.4 + 0.3j, -0.4 + 0.3j):
        assert carleman_as_convolution_residual(
            phi, lam, [0.0, 5.0, -5.0], CFG) < 1e-6
