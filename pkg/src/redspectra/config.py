"""Run configuration: tolerances, grids and scan parameters.

A single frozen dataclass holds every knob used by the detectors and
spectrum engines.  Values can be loaded from a flat JSON file; unknown
keys are rejected so typos never silently fall back to defaults.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from .errors import ConfigError


@dataclass(frozen=True)
class Config:
    # corpus / grids
    dt: float = 0.01                 # default sample spacing (seconds)
    t_end: float = 200.0             # default record horizon (seconds)
    grid_min: float = -5.0           # analysis frequency grid (rad/s)
    grid_max: float = 5.0
    grid_step: float = 0.1
    corpus_seed: int = 20406

    # half-plane scans:  lambda = a_k + i*omega, a_k decreasing toward 0
    a_seq: tuple = (0.4, 0.2, 0.1, 0.05, 0.025)
    # regularity-test kernel bandwidth ladder
    delta_seq: tuple = (1.0, 0.5, 0.25)

    # kernel construction
    support_cut: float = 1e-14       # relative sample cut for kernel tails
    freq_grid_divisor: float = 50.0  # bandpass ft grid spacing = delta / this
    eps_div: float = 1e-6            # minimum |f^| allowed in Wiener division
    tol_ft_coeff: float = 1e-8       # Fourier consistency: coeff*(1+mass)

    # quadrature / convolution error model
    tol_conv_coeff: float = 30.0     # tol_conv = coeff * dt^2 * kernel mass
    trunc_budget: float = 1e-3       # unseen kernel-mass budget (class work)
    trunc_budget_strict: float = 1e-8
    conv_out_step: float = 0.2       # decimated output spacing for band work

    # class membership (all relative to the reference scale)
    tol_c0: float = 0.02
    tol_erg: float = 0.04
    tol_bohr: float = 1e-2
    tol_uc: float = 0.02
    tol_zero: float = 1e-6
    tol_zero_abs: float = 1e-8
    tol_decay: float = 1e-3
    decay_factor: float = 0.9        # required tail-sup shrink for a Yes
    min_window: float = 30.0         # shortest usable analysis window
    erg_window_frac: float = 0.5     # sup-window length / usable record
    so_mollify_h: float = 0.02       # h* for the slowly-oscillating split

    # transform spectra
    blowup_thresh: float = 10.0      # Singular: peak >= thresh * scale
    elevated_thresh: float = 5.0     # not Regular above this peak/scale
    grow_ratio: float = 1.5          # blowup must also grow along a_seq
    cauchy_rel: float = 0.07         # relative Cauchy threshold (Laplace)
    jump_reg_ratio: float = 0.4      # jump decayed to <= this of its max
    jump_sing_ratio: float = 0.6     # jump stagnated above this of its max
    tol_match_coeff: float = 1e-3    # tol_match = coeff * median scale
    tol_analytic_coeff: float = 1e-3
    circle_nodes: int = 64
    circle_radius_factor: float = 0.9
    tail_cap: float = 0.5            # admit a_k while tail bound <= cap*sup
    wl_eps_seq: tuple = (0.25, 0.5)  # weak-Laplace window half-widths
    # a detected singularity contaminates the finite-depth boundary scan of
    # its neighbours: Regular verdicts this close to a Singular grid point
    # are demoted to Undecided (matches the band-pass transition blur)
    buffer_radius: float = 0.45

    # identities / ODE
    tol_transform_coeff: float = 1e-4
    tol_ode_coeff: float = 1e-5
    evolution_dt: float = 0.001

    def __post_init__(self):
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if f.name.startswith("tol_") or f.name in ("eps_div", "trunc_budget",
                                                       "trunc_budget_strict"):
                if not (isinstance(v, (int, float)) and v > 0):
                    raise ConfigError(f"{f.name} must be > 0, got {v!r}")
        if self.grid_step <= 0 or self.grid_max <= self.grid_min:
            raise ConfigError("bad frequency grid")
        if any(a <= 0 for a in self.a_seq) or list(self.a_seq) != sorted(self.a_seq, reverse=True):
            raise ConfigError("a_seq must be positive and strictly decreasing")
        if any(d <= 0 for d in self.delta_seq):
            raise ConfigError("delta_seq must be positive")

    def replace(self, **kw) -> "Config":
        return dataclasses.replace(self, **kw)

    def grid_values(self):
        import numpy as np
        n = int(round((self.grid_max - self.grid_min) / self.grid_step)) + 1
        return np.linspace(self.grid_min, self.grid_max, n)

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        for key in ("a_seq", "delta_seq", "wl_eps_seq"):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)

    @classmethod
    def from_json(cls, path) -> "Config":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config file {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a flat JSON object")
        return cls.from_dict(data)


DEFAULT = Config()
