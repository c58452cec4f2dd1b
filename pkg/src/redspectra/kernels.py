"""Test kernels: the non-negative bump with band-limited transform, its
dilates (an approximate identity), band-pass plateau kernels, box and
exponential kernels, and division in the frequency domain.

Fourier convention, shared by every module:

    g^(w) = integral exp(-i w t) g(t) dt.

Kernels are immutable; sample and tail-mass tables are cached per grid.
The central constructions:

* ``bump_kernel`` builds psi = (phi^)^2 for the scaled bump
  phi(x) = a exp(1/(x^2-1)) on [-1, 1], with a chosen so psi^(0) = 1.
  Then psi >= 0, psi^ = 2 pi (phi conv phi) is supported in [-2, 2].
* ``bandpass_kernel(w0, delta)`` has transform equal to 1 on
  [w0-delta, w0+delta] and negligible outside [w0-2delta, w0+2delta].
  The plateau edges are Gaussian: a box smoothed by N(0, sigma) with
  sigma = delta/12 keeps the off-band leakage below 1e-9 while giving the
  time kernel Gaussian decay, so records of a few hundred seconds suffice.
  (An edge built from compactly supported bumps would decay only like
  exp(-c sqrt(t)) and need kernels thousands of seconds long.)
* ``wiener_divide(f, K)`` returns g with g^ f^ = 1 on K and g^ compactly
  supported, the computable form of the L^1 Wiener division lemma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import erf

from .config import Config, DEFAULT
from .errors import DivisionError_, DomainError, GridError

_SQRT2 = np.sqrt(2.0)


def _leggauss(n=3000):
    global _GL
    try:
        return _GL
    except NameError:
        _GL = np.polynomial.legendre.leggauss(n)
        return _GL


def _bump_raw(x):
    """exp(1/(x^2-1)) on (-1, 1), zero outside."""
    x = np.asarray(x, float)
    inside = np.abs(x) < 1.0
    out = np.zeros_like(x)
    xi = x[inside]
    out[inside] = np.exp(1.0 / (xi * xi - 1.0))
    return out


# ---------------------------------------------------------------------------
# the kernel object
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TestKernel:
    """A sampled test kernel together with its transform.

    ``time_fn`` / ``ft_fn`` evaluate the kernel and its transform at
    arbitrary points; ``freq_grid`` and ``ft_samples`` hold the stored
    transform table used by exports and consistency checks.  ``s_lo`` /
    ``s_hi`` bound the retained time support (cut where the samples fall
    below the support-cut threshold); the discarded ``cut_mass`` is
    propagated into convolution error bounds through ``tail_mass``.
    """

    kernel_id: str
    family: str                  # 'D' (compact time support), 'S', 'L1'
    time_fn: object
    ft_fn: object
    s_lo: float
    s_hi: float
    ft_support: tuple
    freq_grid: np.ndarray
    ft_samples: np.ndarray
    mass: float                  # integral of |k|
    ft0: complex                 # k^(0)
    cut_mass: float = 0.0
    growth_exponent: int = 0
    _tail_table: tuple = None    # (x grid, mass of |k| beyond x)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- sampling -------------------------------------------------------
    def time_samples(self, dt: float, quad_step: float | None = None):
        """Samples on the quadrature lattice covering the cut support.

        Returns ``(s0, values)`` with s_j = s0 + j*step; s0 is an integer
        multiple of dt so convolution windows stay on the signal lattice.
        """
        step = dt if quad_step is None else quad_step
        m = round(step / dt)
        if abs(step - m * dt) > 1e-9 * dt or m < 1:
            raise GridError("quadrature step must be a positive multiple of dt")
        key = (round(dt, 12), m)
        if key not in self._cache:
            n_lo = int(np.ceil(-self.s_lo / step - 1e-9))
            n_hi = int(np.ceil(self.s_hi / step - 1e-9))
            s = step * np.arange(-n_lo, n_hi + 1)
            self._cache[key] = (-n_lo * step, np.asarray(self.time_fn(s), complex))
        return self._cache[key]

    def ft(self, omega):
        return self.ft_fn(np.asarray(omega, float))

    def tail_mass(self, x: float) -> float:
        """Mass of |k| at distance >= x from the origin (plus the cut)."""
        xs, ms = self._tail_table
        if x <= xs[0]:
            return float(ms[0])
        if x >= xs[-1]:
            return float(self.cut_mass)
        return float(np.interp(x, xs, ms))

    def scaled(self, c: complex, tag: str = "scaled") -> "TestKernel":
        tf, ff = self.time_fn, self.ft_fn
        xs, ms = self._tail_table
        return TestKernel(
            f"{tag}({self.kernel_id})", self.family,
            lambda t, c=c, tf=tf: c * np.asarray(tf(t), complex),
            lambda w, c=c, ff=ff: c * np.asarray(ff(w), complex),
            self.s_lo, self.s_hi, self.ft_support, self.freq_grid,
            c * self.ft_samples, abs(c) * self.mass, c * self.ft0,
            abs(c) * self.cut_mass,
            _tail_table=(xs, abs(c) * ms))

    def derivative(self) -> "TestKernel":
        """Spectral derivative: transform i*w*k^(w), time samples by inverse
        quadrature over the stored frequency grid (band-limited kernels)."""
        w = self.freq_grid
        dw = w[1] - w[0]
        ftd = 1j * w * self.ft_samples
        wts = np.full(len(w), dw)
        wts[0] = wts[-1] = dw / 2

        def time_fn(t, w=w, ftd=ftd, wts=wts):
            t = np.atleast_1d(np.asarray(t, float))
            return (np.exp(1j * np.outer(t, w)) * (ftd * wts)).sum(axis=1) / (2 * np.pi)

        def ft_fn(om, ff=self.ft_fn):
            om = np.asarray(om, float)
            return 1j * om * np.asarray(ff(om), complex)

        samples = time_fn(np.linspace(self.s_lo, self.s_hi, 2049))
        mass = float(np.trapezoid(np.abs(samples),
                                  dx=(self.s_hi - self.s_lo) / 2048))
        return _with_tail_table(TestKernel(
            f"ddt({self.kernel_id})", self.family, time_fn, ft_fn,
            self.s_lo, self.s_hi, self.ft_support, w, ftd, mass, 0.0,
            self.cut_mass))


def _with_tail_table(k: TestKernel) -> TestKernel:
    """Attach the |k| tail-mass table computed from a fine sample grid."""
    L = max(abs(k.s_lo), abs(k.s_hi))
    n = 4001
    xs = np.linspace(0.0, L, n)
    vals = np.abs(np.asarray(k.time_fn(xs), complex)) + \
        np.abs(np.asarray(k.time_fn(-xs), complex))
    dx = xs[1] - xs[0] if n > 1 else 1.0
    rev = np.concatenate([[0.0], np.cumsum(0.5 * dx * (vals[:-1] + vals[1:])[::-1])])[::-1]
    object.__setattr__(k, "_tail_table", (xs, rev + k.cut_mass))
    return k


# ---------------------------------------------------------------------------
# bump kernel (non-negative, transform supported in [-2, 2])
# ---------------------------------------------------------------------------

def _bump_normalizer():
    """a with psi^(0) = 2 pi a^2 int exp(2/(x^2-1)) dx = 1."""
    xs, ws = _leggauss()
    i2 = float((np.exp(2.0 / (xs * xs - 1.0)) * ws).sum())
    return (2.0 * np.pi * i2) ** -0.5


def _phi_hat_factory(a):
    xs, ws = _leggauss()
    phiw = a * np.exp(1.0 / (xs * xs - 1.0)) * ws

    def phi_hat(t):
        t = np.atleast_1d(np.asarray(t, float))
        out = np.empty(len(t))
        for i in range(0, len(t), 1024):
            tt = t[i:i + 1024]
            out[i:i + 1024] = np.cos(np.outer(tt, xs)) @ phiw
        return out

    return phi_hat


def _psi_hat_factory(a):
    xs, ws = _leggauss(400)

    def psi_hat(w):
        w = np.atleast_1d(np.asarray(w, float))
        out = np.zeros(len(w))
        for i, wi in enumerate(w):
            lo, hi = max(-1.0, wi - 1.0), min(1.0, wi + 1.0)
            if hi <= lo:
                continue
            mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
            s = mid + half * xs
            out[i] = 2 * np.pi * half * (
                a * _bump_raw(wi - s) * a * _bump_raw(s) * ws).sum()
        return out

    return psi_hat


_BUMP_CACHE: dict = {}


def bump_kernel(cfg: Config = DEFAULT) -> TestKernel:
    """The smooth non-negative kernel psi with psi^(0) = 1 and transform
    supported in [-2, 2]: psi = (phi^)^2, phi(x) = a exp(1/(x^2-1)).
    """
    key = ("bump", cfg.support_cut)
    if key in _BUMP_CACHE:
        return _BUMP_CACHE[key]
    a = _bump_normalizer()
    phi_hat = _phi_hat_factory(a)
    psi_hat = _psi_hat_factory(a)

    def time_fn(t):
        v = phi_hat(np.asarray(t, float))
        return (v * v).astype(complex)

    peak = float(time_fn(np.array([0.0]))[0].real)
    # locate the support cut: last point where psi >= cut * peak
    tt = np.arange(0.0, 400.0, 0.25)
    vals = np.abs(time_fn(tt))
    above = np.where(vals >= cfg.support_cut * peak)[0]
    L = float(tt[above[-1]]) + 0.5
    cut_mass = 2.0 * float(np.trapezoid(vals[tt >= L], dx=0.25))
    grid = np.linspace(-2.5, 2.5, 501)
    fts = psi_hat(grid).astype(complex)
    mass = 2.0 * float(np.trapezoid(vals[tt <= L], dx=0.25))

    k = TestKernel("bump", "S", time_fn, lambda w: psi_hat(w).astype(complex),
                   -L, L, (-2.0, 2.0), grid, fts, mass, complex(psi_hat(0.0)[0]),
                   cut_mass)
    _BUMP_CACHE[key] = _with_tail_table(k)
    return _BUMP_CACHE[key]


def approximate_identity(n: int, cfg: Config = DEFAULT) -> TestKernel:
    """psi_n(t) = n psi(n t): unit mass, transform psi^(w/n) supported in
    [-2n, 2n]; an approximate identity for uniformly continuous functions."""
    if n < 1 or n != int(n):
        raise ValueError("n must be a positive integer")
    base = bump_kernel(cfg)
    if n == 1:
        return base
    bt, bf = base.time_fn, base.ft_fn
    xs, ms = base._tail_table
    k = TestKernel(
        f"bump_n{n}", "S",
        lambda t, n=n, bt=bt: n * np.asarray(bt(n * np.asarray(t, float)), complex),
        lambda w, n=n, bf=bf: np.asarray(bf(np.asarray(w, float) / n), complex),
        base.s_lo / n, base.s_hi / n,
        (-2.0 * n, 2.0 * n), base.freq_grid * n, base.ft_samples,
        base.mass, base.ft0, base.cut_mass,
        _tail_table=(xs / n, ms))
    return k


# ---------------------------------------------------------------------------
# band-pass plateau kernels
# ---------------------------------------------------------------------------

_ENVELOPE_CACHE: dict = {}


def _plateau(u, b, sigma):
    """box[-b, b] smoothed by N(0, sigma): 1 on the core, Gaussian edges."""
    return 0.5 * (erf((u + b) / (sigma * _SQRT2)) - erf((u - b) / (sigma * _SQRT2)))


def bandpass_kernel(omega0: float, delta: float, cfg: Config = DEFAULT) -> TestKernel:
    """Kernel whose transform is a smooth plateau: 1 on
    [omega0-delta, omega0+delta], below 1e-9 outside [omega0-2delta, omega0+2delta].

    Time domain (closed form): exp(i omega0 t) sin(b t)/(pi t) * exp(-sigma^2 t^2/2)
    with b = 1.5 delta, sigma = delta/12.
    """
    if delta <= 0:
        raise ValueError("delta must be > 0")
    b = 1.5 * delta
    sigma = delta / 12.0

    def env(t):
        t = np.asarray(t, float)
        core = np.where(t == 0.0, b / np.pi,
                        np.sin(b * np.where(t == 0, 1.0, t)) /
                        (np.pi * np.where(t == 0, 1.0, t)))
        return core * np.exp(-0.5 * (sigma * t) ** 2)

    peak = b / np.pi
    # envelope is bounded by exp(-sigma^2 t^2/2)/(pi t): scan for the cut
    tt = np.arange(1.0, 60.0 / sigma, 0.5)
    bound = np.exp(-0.5 * (sigma * tt) ** 2) / (np.pi * tt)
    above = np.where(bound >= cfg.support_cut * peak)[0]
    L = float(np.ceil(tt[above[-1]] + 1.0)) if len(above) else 1.0

    def time_fn(t, w0=omega0):
        t = np.asarray(t, float)
        return env(t) * np.exp(1j * w0 * t)

    def ft_fn(w, w0=omega0):
        return _plateau(np.asarray(w, float) - w0, b, sigma).astype(complex)

    dw = delta / cfg.freq_grid_divisor
    half = int(np.ceil(2.5 * delta / dw))
    grid = omega0 + dw * np.arange(-half, half + 1)
    cut_tail = np.exp(-0.5 * (sigma * L) ** 2) * 2.0 / (np.pi * L * sigma * L)
    k = TestKernel(f"bandpass(w0={omega0:g},delta={delta:g})", "S",
                   time_fn, ft_fn, -L, L,
                   (omega0 - 2 * delta, omega0 + 2 * delta),
                   grid, ft_fn(grid), _env_abs_mass(env, L),
                   complex(ft_fn(np.array([omega0]))[0]), float(cut_tail))
    return _with_tail_table(k)


def _env_abs_mass(env, L):
    t = np.linspace(-L, L, 8001)
    return float(np.trapezoid(np.abs(env(t)), dx=t[1] - t[0]))


# ---------------------------------------------------------------------------
# compactly supported (time-domain) bumps and the annihilator family
# ---------------------------------------------------------------------------

def d_bump(center: float = 0.0, halfwidth: float = 1.0,
           cfg: Config = DEFAULT) -> TestKernel:
    """Compactly supported smooth bump on [center-hw, center+hw], unit mass.

    This is the D-family workhorse: exact compact support in time, so
    convolutions against rapidly growing signals stay honest.
    """
    xs, ws = _leggauss(400)
    raw_mass = float((_bump_raw(xs) * ws).sum())
    c = 1.0 / (raw_mass * halfwidth)

    def time_fn(t):
        u = (np.asarray(t, float) - center) / halfwidth
        return (c * _bump_raw(u)).astype(complex)

    def ft_fn(w):
        w = np.atleast_1d(np.asarray(w, float))
        ph = np.exp(-1j * np.outer(w, center + halfwidth * xs))
        return (ph * (c * _bump_raw(xs) * halfwidth * ws)).sum(axis=1)

    grid = np.linspace(-8.0, 8.0, 801)
    k = TestKernel(f"dbump(c={center:g},hw={halfwidth:g})", "D",
                   time_fn, ft_fn, center - halfwidth, center + halfwidth,
                   (-np.inf, np.inf), grid, ft_fn(grid), 1.0,
                   complex(ft_fn(np.array([0.0]))[0]), 0.0)
    return _with_tail_table(k)


def annihilator_kernel(a: float, cfg: Config = DEFAULT) -> TestKernel:
    """The two-sided kernel that annihilates exp(t) under convolution:

        f(t) = phi(t) on [0, a],   f(t) = -exp(2t) phi(-t) on [-a, 0),

    with phi a smooth bump supported in (0, a).  Substituting u = -t shows
    integral exp(-s) f(s) ds = 0, hence (exp(.) * f) = 0; its transform
    satisfies Re f^(w) > 0 whenever cos(w s) keeps one sign on (0, a).
    """
    if a <= 0:
        raise ValueError("a must be > 0")
    xs, ws = _leggauss(400)

    def phi(t):
        # bump supported on (0, a)
        u = 2.0 * np.asarray(t, float) / a - 1.0
        return _bump_raw(u)

    def time_fn(t):
        t = np.asarray(t, float)
        pos = phi(t)
        neg = -np.exp(2.0 * t) * phi(-t)
        return (np.where(t >= 0, pos, neg)).astype(complex)

    s_nodes = 0.5 * a * (xs + 1.0)   # (0, a)
    w_nodes = 0.5 * a * ws
    pv = phi(s_nodes)

    def ft_fn(w):
        w = np.atleast_1d(np.asarray(w, float))
        ph_pos = np.exp(-1j * np.outer(w, s_nodes))
        ph_neg = np.exp(1j * np.outer(w, s_nodes))
        return (ph_pos * (pv * w_nodes)).sum(axis=1) - \
            (ph_neg * (np.exp(-2.0 * s_nodes) * pv * w_nodes)).sum(axis=1)

    grid = np.linspace(-8.0, 8.0, 801)
    mass = float((pv * w_nodes).sum() +
                 (np.exp(-2.0 * s_nodes) * pv * w_nodes).sum())
    k = TestKernel(f"annihilator(a={a:g})", "D", time_fn, ft_fn, -a, a,
                   (-np.inf, np.inf), grid, ft_fn(grid), mass,
                   complex(ft_fn(np.array([0.0]))[0]), 0.0)
    return _with_tail_table(k)


# ---------------------------------------------------------------------------
# box and exponential kernels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxKernel:
    """s_h = (1/h) * indicator of (-h, 0); unit mass, transform
    s_h^(w) = (exp(i w h) - 1)/(i w h)."""

    h: float
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("h must be > 0")

    family = "L1"
    mass = 1.0
    ft0 = 1.0 + 0j
    cut_mass = 0.0
    growth_exponent = 0

    @property
    def kernel_id(self):
        return f"box(h={self.h:g})"

    @property
    def s_lo(self):
        return -self.h

    s_hi = 0.0
    ft_support = (-np.inf, np.inf)

    def time_samples(self, dt, quad_step=None):
        step = dt if quad_step is None else quad_step
        key = round(step, 12)
        if key not in self._cache:
            m = round(self.h / step)
            if abs(self.h - m * step) > 1e-9 * step or m < 1:
                raise GridError("box width h must be a lattice multiple")
            self._cache[key] = (-self.h, np.full(m + 1, 1.0 / self.h, complex))
        return self._cache[key]

    def ft(self, omega):
        w = np.atleast_1d(np.asarray(omega, float))
        wh = w * self.h
        out = np.where(wh == 0.0, 1.0 + 0j,
                       (np.exp(1j * np.where(wh == 0, 1.0, wh)) - 1.0) /
                       (1j * np.where(wh == 0, 1.0, wh)))
        return out

    def tail_mass(self, x):
        return max(0.0, (self.h - x) / self.h) if x > 0 else 1.0


@dataclass(frozen=True)
class ExpKernel:
    """f_lambda: exp(-lambda t) on t >= 0 if Re lambda > 0, and the
    reflected-negated kernel -exp(-lambda t) on t < 0 if Re lambda < 0.
    In both cases f_lambda^(w) = 1/(lambda + i w).  Only Re lambda != 0
    gives an integrable kernel."""

    lam: complex
    support_cut: float = 1e-14
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.lam.real == 0:
            raise DomainError("exp kernel needs Re lambda != 0 (f_lambda is "
                              "not integrable on the imaginary axis)")

    family = "L1"
    cut_mass = 0.0
    growth_exponent = 0
    ft_support = (-np.inf, np.inf)

    @property
    def kernel_id(self):
        return f"exp(lam={self.lam:g})"

    @property
    def mass(self):
        return 1.0 / abs(self.lam.real)

    @property
    def ft0(self):
        return 1.0 / self.lam

    @property
    def _L(self):
        return np.log(1.0 / self.support_cut) / abs(self.lam.real)

    @property
    def s_lo(self):
        return 0.0 if self.lam.real > 0 else -self._L

    @property
    def s_hi(self):
        return self._L if self.lam.real > 0 else 0.0

    def side(self):
        return "right" if self.lam.real > 0 else "left"

    def time_samples(self, dt, quad_step=None):
        step = dt if quad_step is None else quad_step
        key = round(step, 12)
        if key not in self._cache:
            n = int(np.ceil(self._L / step))
            if self.lam.real > 0:
                s = step * np.arange(0, n + 1)
                self._cache[key] = (0.0, np.exp(-self.lam * s))
            else:
                s = step * np.arange(-n, 1)
                self._cache[key] = (-n * step, -np.exp(-self.lam * s))
        return self._cache[key]

    def time_fn(self, t):
        t = np.asarray(t, float)
        if self.lam.real > 0:
            return np.where(t >= 0, np.exp(-self.lam * t), 0.0)
        return np.where(t < 0, -np.exp(-self.lam * t), 0.0)

    def ft(self, omega):
        w = np.atleast_1d(np.asarray(omega, float))
        return 1.0 / (self.lam + 1j * w)

    def tail_mass(self, x):
        a = abs(self.lam.real)
        return float(np.exp(-a * max(x, 0.0)) / a)


def reflected(k: ExpKernel) -> ExpKernel:
    """f_lambda-check = f_{-lambda} up to sign: reflect(f_lam)(t) = f_lam(-t).

    Used by the Carleman-transform-as-convolution identity; implemented by
    flipping the half line, i.e. reflect(f_lam) = -f_{-lam}.
    """
    flipped = ExpKernel(-k.lam, k.support_cut)

    class _Neg(ExpKernel):
        def time_samples(self, dt, quad_step=None):
            s0, v = ExpKernel.time_samples(self, dt, quad_step)
            return s0, -v

        def time_fn(self, t):
            return -ExpKernel.time_fn(self, t)

        def ft(self, omega):
            return -ExpKernel.ft(self, omega)

        @property
        def ft0(self):
            return -1.0 / self.lam

    return _Neg(flipped.lam, flipped.support_cut)


# ---------------------------------------------------------------------------
# Wiener division
# ---------------------------------------------------------------------------

def wiener_divide(f, K: tuple, cfg: Config = DEFAULT) -> TestKernel:
    """g with g^ f^ = 1 on the compact interval K and g^ compactly supported.

    g^ is a smooth plateau (1 on K, Gaussian edges, zero past a slight
    enlargement) divided pointwise by f^; f^ must stay above ``eps_div``
    in modulus over the enlarged interval.  The time samples come from
    inverse-transform quadrature over the stored grid.  The postcondition
    sup_K |g^ f^ - 1| <= 1e-8 is asserted on every call.
    """
    lo, hi = float(K[0]), float(K[1])
    if hi <= lo:
        raise ValueError("K must be a nondegenerate interval")
    e = max(0.1, 0.15 * (hi - lo))
    sigma = e / 13.0
    b = 0.5 * (hi - lo) + 0.5 * e
    mid = 0.5 * (hi + lo)

    dw = min(e / 40.0, 0.02)
    half = int(np.ceil((b + 7 * sigma) / dw)) + 1
    grid = mid + dw * np.arange(-half, half + 1)

    fhat = np.asarray(f.ft(grid), complex)
    core = (grid >= lo - e) & (grid <= hi + e)
    if np.abs(fhat[core]).min() < cfg.eps_div:
        raise DivisionError_(
            f"|f^| drops to {np.abs(fhat[core]).min():.3g} on the enlarged "
            f"interval around K={K}; the division hypothesis needs the "
            f"transform nonzero on a compact neighbourhood of K "
            f"(threshold eps_div={cfg.eps_div:g})")

    chi = _plateau(grid - mid, b, sigma)
    ghat = np.where(chi > 1e-15, chi / fhat, 0.0)

    wts = np.full(len(grid), dw)
    wts[0] = wts[-1] = dw / 2
    gw = ghat * wts

    def time_fn(t):
        t = np.atleast_1d(np.asarray(t, float))
        out = np.empty(len(t), complex)
        for i in range(0, len(t), 512):
            tt = t[i:i + 512]
            out[i:i + 512] = (np.exp(1j * np.outer(tt, grid)) * gw).sum(axis=1) / (2 * np.pi)
        return out

    def ft_fn(w, f=f):
        w = np.atleast_1d(np.asarray(w, float))
        chi = _plateau(w - mid, b, sigma)
        fh = np.asarray(f.ft(w), complex)
        safe = (chi > 1e-15) & (np.abs(fh) > 1e-300)
        return np.where(safe, chi / np.where(safe, fh, 1.0), 0.0)

    # empirical support cut on the time side
    period = 2 * np.pi / dw
    tt = np.linspace(0.0, 0.45 * period, 3000)
    vals = np.abs(time_fn(tt)) + np.abs(time_fn(-tt))
    peak = vals.max()
    above = np.where(vals >= max(cfg.support_cut * peak, 1e-300))[0]
    L = float(tt[min(above[-1] + 1, len(tt) - 1)])
    cut = float(vals[tt >= L].sum() * (tt[1] - tt[0])) if (tt >= L).any() else 0.0

    mass = float(np.trapezoid(np.abs(time_fn(np.linspace(-L, L, 4001))),
                              dx=2 * L / 4000))
    g = TestKernel(f"wiener({f.kernel_id},K=[{lo:g},{hi:g}])", "S",
                   time_fn, ft_fn, -L, L,
                   (mid - b - 7 * sigma, mid + b + 7 * sigma),
                   grid, ghat, mass, complex(ft_fn(np.array([0.0]))[0]), cut)
    g = _with_tail_table(g)

    ksel = (grid >= lo) & (grid <= hi)
    err = np.abs(ghat[ksel] * fhat[ksel] - 1.0).max()
    if err > 1e-8:
        raise DivisionError_(f"division postcondition failed: "
                             f"sup_K |g^ f^ - 1| = {err:.3g} > 1e-8")
    return g


class _ScaledKernel:
    """Duck-typed wrapper multiplying any kernel by a complex constant."""

    def __init__(self, base, c, tag="unit"):
        self._base = base
        self._c = complex(c)
        self.kernel_id = f"{tag}({base.kernel_id})"
        self.family = base.family
        self.ft_support = base.ft_support
        self.cut_mass = abs(c) * base.cut_mass
        self.mass = abs(c) * base.mass
        self.ft0 = c * base.ft0
        self.growth_exponent = getattr(base, "growth_exponent", 0)
        self.s_lo, self.s_hi = base.s_lo, base.s_hi

    def time_samples(self, dt, quad_step=None):
        s0, v = self._base.time_samples(dt, quad_step)
        return s0, self._c * v

    def ft(self, omega):
        return self._c * np.asarray(self._base.ft(omega), complex)

    def tail_mass(self, x):
        return abs(self._c) * self._base.tail_mass(x)


def scaled_kernel(kern, c: complex, tag: str = "unit"):
    if hasattr(kern, "scaled"):
        return kern.scaled(c, tag)
    return _ScaledKernel(kern, c, tag)


def box_kernel(h: float) -> BoxKernel:
    return BoxKernel(h)


def exp_kernel(lam: complex) -> ExpKernel:
    return ExpKernel(complex(lam))


def fourier_consistency_error(kernel, dt: float = 0.01,
                              n_check: int = 61) -> float:
    """Independent check that quadrature of the time samples reproduces the
    stored transform: max |FT_quad(samples) - k^| over a probe grid."""
    s0, vals = kernel.time_samples(dt)
    s = s0 + dt * np.arange(len(vals))
    w = np.full(len(vals), dt)
    w[0] = w[-1] = dt / 2
    lo, hi = kernel.ft_support
    if not np.isfinite(lo):
        lo, hi = -4.0, 4.0
    probes = np.linspace(lo - 0.5, hi + 0.5, n_check)
    quad = np.exp(-1j * np.outer(probes, s)) @ (vals * w)
    return float(np.abs(quad - np.asarray(kernel.ft(probes), complex)).max())
