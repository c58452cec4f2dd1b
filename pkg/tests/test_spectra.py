import numpy as np
import pytest

from redspectra.classes import FunctionClass
from redspectra.config import Config
from redspectra.kernels import annihilator_kernel, box_kernel
from redspectra.signals import Domain, SampledSignal, modulate
from redspectra.spectra import (FrequencyGrid, RegStatus, ReducedScanner,
                                carleman_spectrum, extension_comparison,
                                laplace_spectrum, reduced_spectrum,
                                weak_laplace_spectrum)
from redspectra.spectra import test_regular as regular_point_test

from conftest import make_full, make_half

CFG = Config()
GRID = FrequencyGrid.from_config(CFG)
SMALL = FrequencyGrid(-2.0, 2.0, 0.25)


def statuses_near(est, omega, radius):
    return [c.status for w, c in zip(est.grid.values(), est.certificates)
            if abs(w - omega) <= radius + 1e-9]


# ---------------------------------------------------------------------------
# regularity tester
# ---------------------------------------------------------------------------

def test_pure_tone_zero_class_certificates():
    F = make_full(lambda t: np.exp(1j * 1.0 * t))
    sc = ReducedScanner(F, SMALL.values(), CFG)
    at_pole = sc.test_regular(1.0, FunctionClass.ZERO)
    away = sc.test_regular(-1.5, FunctionClass.ZERO)
    assert at_pole.status is RegStatus.SINGULAR
    assert away.status is RegStatus.REGULAR
    assert away.kernel_id and away.kernel_ft_abs >= 0.5


def test_regular_certificate_records_class_report():
    F = make_half(lambda t: np.exp(-t), t_end=120.0)
    cert = regular_point_test(F, 0.5, FunctionClass.C0, cfg=CFG)
    assert cert.status is RegStatus.REGULAR
    assert "class_report" in cert.evidence


def test_expgrow_regular_via_registered_annihilators():
    dt = 0.01
    te = np.arange(-5.0, 10.0 + dt / 2, dt)
    F = SampledSignal(Domain.FULL_LINE, -5.0, dt, np.exp(te), 8)
    ann = tuple(annihilator_kernel(a) for a in (2.0, 1.0, 0.5))
    for w in (0.0, 1.0, 2.0):
        cert = regular_point_test(F, w, FunctionClass.C0, family="D",
                                  cfg=CFG, extra_kernels=ann)
        assert cert.status is RegStatus.REGULAR
        assert cert.evidence.get("registered")


def test_lp_signal_has_empty_c0_spectrum():
    F = make_half(lambda t: np.exp(1j * t) / (1.0 + t))
    est = reduced_spectrum(F, FunctionClass.C0, "S", GRID, CFG)
    assert len(est.singular_set()) == 0
    assert len(est.undecided_set()) == 0


def test_zero_signal_trivially_regular():
    F = make_half(lambda t: np.zeros_like(t), t_end=60.0)
    est = reduced_spectrum(F, FunctionClass.C0, "S", SMALL, CFG)
    assert all(c.status is RegStatus.REGULAR for c in est.certificates)


# ---------------------------------------------------------------------------
# transform spectra on closed-form signals
# ---------------------------------------------------------------------------

def test_laplace_spectrum_pole_and_entire():
    pole = laplace_spectrum(make_half(lambda t: np.exp(1j * t)), GRID, CFG)
    assert all(s is RegStatus.SINGULAR for s in statuses_near(pole, 1.0, 0.25))
    outside = [c.status for w, c in zip(GRID.values(), pole.certificates)
               if abs(w - 1.0) > 1.0]
    assert all(s is RegStatus.REGULAR for s in outside)
    ent = laplace_spectrum(make_half(lambda t: np.exp(-t)), GRID, CFG)
    assert all(c.status is RegStatus.REGULAR for c in ent.certificates)


def test_carleman_spectrum_sinc_band():
    F = make_full(lambda t: np.where(t == 0, 1.0,
                                     np.sin(np.where(t == 0, 1, t)) /
                                     np.where(t == 0, 1, t)))
    est = carleman_spectrum(F, GRID, CFG)
    sing = est.singular_set()
    assert sing.min() >= -1.0 - 1e-9 and sing.max() <= 1.0 + 1e-9
    assert len(sing) == 21          # every grid point of [-1, 1]
    far = [c.status for w, c in zip(GRID.values(), est.certificates)
           if abs(w) >= 1.6]
    assert all(s is RegStatus.REGULAR for s in far)


def test_weak_laplace_pole_window():
    est = weak_laplace_spectrum(make_half(lambda t: np.exp(1j * t)), GRID, CFG)
    assert all(s is RegStatus.SINGULAR for s in statuses_near(est, 1.0, 0.2))
    ent = weak_laplace_spectrum(make_half(lambda t: np.exp(-t)), GRID, CFG)
    assert all(c.status is RegStatus.REGULAR for c in ent.certificates)


def test_modulation_shift_relation():
    F = make_full(lambda t: np.exp(1j * 0.5 * t), t_end=120.0)
    base = reduced_spectrum(F, FunctionClass.C0, "S",
                            FrequencyGrid(-3.0, 3.0, 0.25), CFG)
    mod = reduced_spectrum(modulate(F, 1.0), FunctionClass.C0, "S", SMALL, CFG)
    for w, c in zip(SMALL.values(), mod.certificates):
        assert base.status_at(w - 1.0) is c.status


def test_extension_comparison_agrees_up_to_undecided():
    H = make_full(lambda t: np.exp(1j * t), t_end=120.0)
    out = extension_comparison(H, FunctionClass.C0, SMALL, CFG)
    assert out["definite_disagreements"] == []


def test_estimate_serialization_and_clusters():
    F = make_half(lambda t: np.exp(1j * t))
    est = laplace_spectrum(F, GRID, CFG)
    d = est.to_dict()
    assert d["kind"] == "laplace" and len(d["status"]) == GRID.n
    clusters = est.singular_clusters()
    assert len(clusters) == 1
    c, hw = clusters[0]
    assert abs(c - 1.0) < 0.15 and hw <= 0.5
    rows = est.plot_rows()
    assert len(rows) == GRID.n and all(len(r) == 3 for r in rows)


def test_status_at_rejects_off_grid():
    F = make_half(lambda t: np.exp(-t), t_end=60.0)
    est = laplace_spectrum(F, SMALL, CFG)
    with pytest.raises(ValueError):
        est.status_at(3.2)


def test_box_augmented_search_only_adds_regularity():
    # adding L1 kernels to the search can only certify more regular points,
    # and the singular core stays singular
    F = make_full(lambda t: np.exp(1j * t))
    # h close to 2 pi: the box transform nearly vanishes at the pole, so
    # the box cannot certify regularity there but can elsewhere
    sc = ReducedScanner(F, SMALL.values(), CFG,
                        extra_kernels=(box_kernel(6.28),))
    plain = reduced_spectrum(F, FunctionClass.C0, "S", SMALL, CFG)
    for w, c0 in zip(SMALL.values(), plain.certificates):
        aug = sc.test_regular(w, FunctionClass.C0)
        if c0.status is RegStatus.REGULAR:
            assert aug.status is RegStatus.REGULAR
        if abs(w - 1.0) <= 0.1:
            assert aug.status is RegStatus.SINGULAR
