"""Sampled signals on the half line or full line, and their elementary
operations: zero extension, translation, modulation, reflection, finite
differences, convolution against test kernels, sliding-average
mollification and the indefinite integral.

A signal is a finite, uniformly sampled record of a conceptually infinite
object.  Every operation that would need values outside the record either
uses the declared zero extension (half-line signals vanish for t < 0) or
accounts for the omission through an explicit truncation bound; nothing is
periodized or silently zero-filled beyond the stated budget.

All types are immutable and all operations are pure functions, so signals
may be shared freely across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridError, GrowthError, HorizonError, TruncationError

#: relative slack in the on-lattice test for times and lags
_LATTICE_RTOL = 1e-9

# growth validation: outer-tail envelope may not exceed the inner envelope
# by more than this factor (catches undeclared polynomial growth)
_GROWTH_SLACK = 1.1
_GROWTH_TAIL_FRAC = 0.15


class Domain(enum.Enum):
    HALF_LINE = "half_line"   # [0, inf)
    FULL_LINE = "full_line"   # (-inf, inf)


def _as_values(values) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError("values must be a nonempty (n, d) array")
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


def _fit_growth(times: np.ndarray, norms: np.ndarray) -> float:
    mask = norms > 1e-300
    if mask.sum() < 2:
        return 0.0
    x = np.log1p(times[mask] ** 2)
    y = np.log(norms[mask])
    x = x - x.mean()
    denom = (x * x).sum()
    if denom == 0:
        return 0.0
    return max(0.0, float((x * (y - y.mean())).sum() / denom))


def _check_growth(times: np.ndarray, norms: np.ndarray, k: int):
    """Reject a declared exponent the record itself contradicts.

    The declared bound is ||F(t)|| <= C (1+t^2)^k.  A finite record can
    only be checked for an envelope ratio trending upward in its outer
    tails, which is exactly what the transform tail bounds rely on.
    """
    if k < 0 or k != int(k):
        raise GrowthError(f"growth_exponent must be a nonnegative integer, got {k}")
    ratio = norms / (1.0 + times * times) ** k
    peak = ratio.max()
    if peak == 0.0:
        return
    cut = np.quantile(np.abs(times), 1.0 - _GROWTH_TAIL_FRAC)
    outer = np.abs(times) >= cut
    if not outer.any() or outer.all():
        return
    # high quantiles rather than maxima: rough-but-bounded signals must not
    # trip the validator on a single tail fluctuation
    r_out = np.quantile(ratio[outer], 0.95)
    r_in = np.quantile(ratio[~outer], 0.95)
    if r_out > _GROWTH_SLACK * r_in + 1e-12 * peak:
        fit = _fit_growth(times, norms)
        raise GrowthError(
            f"record outgrows (1+t^2)^{k}: outer envelope {r_out:.3g} vs "
            f"inner {r_in:.3g}; least-squares fit suggests k ~ {fit:.2f}")


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled function J -> C^d with grid metadata.

    Parameters
    ----------
    domain : Domain
        Half line [0, inf) or full line.
    t0 : float
        Time of the first sample.  Must be exactly 0 for half-line signals.
    dt : float
        Sample spacing, > 0.
    values : array (n, d) complex
        One row per sample.
    growth_exponent : int
        Declared k with ||F(t)|| <= C (1+t^2)^k, validated against the
        record and used by transform truncation bounds.
    """

    domain: Domain
    t0: float
    dt: float
    values: np.ndarray
    growth_exponent: int = 0
    #: set on signals produced by validated operations (convolution of a
    #: validated signal cannot raise its polynomial growth order), where
    #: budgeted edge noise would otherwise spoof the trend validator
    trusted: bool = False

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError("dt must be > 0")
        object.__setattr__(self, "values", _as_values(self.values))
        if self.domain is Domain.HALF_LINE and abs(self.t0) > _LATTICE_RTOL * self.dt:
            raise DomainError("half-line signals must start at t0 = 0")
        if not self.trusted:
            _check_growth(self.times, self.norms, self.growth_exponent)

    # ---- geometry -----------------------------------------------------
    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @property
    def t_end(self) -> float:
        return self.t0 + (self.n - 1) * self.dt

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.values, axis=1)

    def sup_norm(self) -> float:
        return float(self.norms.max())

    def lattice_steps(self, span: float, what: str = "value") -> int:
        """Convert a time span to an integer number of dt steps or raise."""
        steps = span / self.dt
        k = round(steps)
        if abs(steps - k) > _LATTICE_RTOL * max(1.0, abs(steps)):
            raise GridError(f"{what} {span!r} is not a multiple of dt={self.dt}")
        return int(k)

    def index_of(self, t: float) -> int:
        return self.lattice_steps(t - self.t0, f"time {t}")

    def restrict(self, t_lo: float, t_hi: float) -> "SampledSignal":
        i = max(0, int(np.ceil((t_lo - self.t0) / self.dt - _LATTICE_RTOL)))
        j = min(self.n - 1, int(np.floor((t_hi - self.t0) / self.dt + _LATTICE_RTOL)))
        if j < i:
            raise HorizonError("empty restriction")
        new_t0 = self.t0 + i * self.dt
        dom = self.domain
        if dom is Domain.HALF_LINE and abs(new_t0) > _LATTICE_RTOL * self.dt:
            dom = Domain.FULL_LINE
        return SampledSignal(dom, new_t0 if dom is Domain.FULL_LINE else 0.0,
                             self.dt, self.values[i:j + 1], self.growth_exponent,
                             trusted=True)

    def envelope_constant(self) -> float:
        """C with ||F(t)|| <= C (1+t^2)^k over the record."""
        r = self.norms / (1.0 + self.times ** 2) ** self.growth_exponent
        return float(r.max())


@dataclass(frozen=True)
class ExtendedSignal(SampledSignal):
    """A full-line signal produced by zero extension or convolution.

    ``origin_domain`` remembers where the underlying data lived: when it is
    the half line, values for t below the record are exactly zero (or known
    smoothings of a function vanishing there), so the left end needs no
    data.  ``trunc_bound`` is the worst-case per-sample error inherited
    from quadrature windows that ran past the record within budget.
    """

    origin_domain: Domain = Domain.FULL_LINE
    trunc_bound: float = 0.0

    def __post_init__(self):
        super().__post_init__()
        if self.domain is not Domain.FULL_LINE:
            raise DomainError("extended signals live on the full line")

    def restrict_to_origin(self) -> SampledSignal:
        """Restriction to the original domain J (drops the t < 0 part)."""
        if self.origin_domain is Domain.FULL_LINE:
            return SampledSignal(Domain.FULL_LINE, self.t0, self.dt,
                                 self.values, self.growth_exponent, trusted=True)
        i = max(0, int(np.ceil(-self.t0 / self.dt - _LATTICE_RTOL)))
        if i >= self.n:
            raise HorizonError("nothing left of the record on [0, inf)")
        start = self.t0 + i * self.dt
        if abs(start) <= _LATTICE_RTOL * self.dt:
            return SampledSignal(Domain.HALF_LINE, 0.0, self.dt,
                                 self.values[i:], self.growth_exponent,
                                 trusted=True)
        return SampledSignal(Domain.FULL_LINE, start, self.dt,
                             self.values[i:], self.growth_exponent, trusted=True)


@dataclass(frozen=True)
class Mean:
    value: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "value",
                           np.atleast_1d(np.asarray(self.value, complex)))

    def norm(self) -> float:
        return float(np.linalg.norm(self.value))


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------

def extend_by_zero(F: SampledSignal, t_min: float | None = None) -> ExtendedSignal:
    """Zero extension of F to the full line.

    For a half-line signal the result agrees with F on [0, t_end] and is 0
    on [t_min, 0); a full-line signal is returned as is (its values to the
    left are unknown, not zero, so no padding is permitted).
    """
    if F.domain is Domain.FULL_LINE:
        if t_min is not None and t_min < F.t0 - _LATTICE_RTOL * F.dt:
            raise TruncationError("cannot extend a full-line record leftward: "
                                  "values there are unknown, not zero")
        return ExtendedSignal(Domain.FULL_LINE, F.t0, F.dt, F.values,
                              F.growth_exponent, trusted=True,
                              origin_domain=Domain.FULL_LINE)
    if t_min is None:
        t_min = -F.dt * round(min(50.0, 0.25 * max(F.t_end, F.dt)) / F.dt)
    if t_min > F.t0 + _LATTICE_RTOL * F.dt:
        raise GridError("t_min must not exceed the record start")
    pad = F.lattice_steps(F.t0 - t_min, "t_min offset")
    vals = np.vstack([np.zeros((pad, F.dim), complex), F.values])
    return ExtendedSignal(Domain.FULL_LINE, F.t0 - pad * F.dt, F.dt, vals,
                          F.growth_exponent, trusted=True,
                          origin_domain=Domain.HALF_LINE)


def translate(F: SampledSignal, s: float) -> SampledSignal:
    """F_s(t) = F(t + s), s on the lattice.

    On the half line only s >= 0 makes sense and the record shortens; on
    the full line the same samples are relabelled.
    """
    k = F.lattice_steps(s, "shift")
    if F.domain is Domain.HALF_LINE:
        if k < 0:
            raise DomainError("half-line signals only translate by s >= 0")
        if k >= F.n:
            raise HorizonError("shift exceeds the record")
        return SampledSignal(Domain.HALF_LINE, 0.0, F.dt, F.values[k:],
                             F.growth_exponent, trusted=True)
    return SampledSignal(Domain.FULL_LINE, F.t0 - k * F.dt, F.dt, F.values,
                         F.growth_exponent, trusted=True)


def modulate(F: SampledSignal, omega: float) -> SampledSignal:
    """gamma_omega * F with gamma_omega(t) = exp(i omega t)."""
    vals = F.values * np.exp(1j * omega * F.times)[:, None]
    return SampledSignal(F.domain, F.t0, F.dt, vals, F.growth_exponent,
                         trusted=True)


def reflect(F: SampledSignal) -> SampledSignal:
    """F-check(t) = F(-t); full-line records only."""
    if F.domain is not Domain.FULL_LINE:
        raise DomainError("reflection needs a full-line record")
    return SampledSignal(Domain.FULL_LINE, -F.t_end, F.dt, F.values[::-1],
                         F.growth_exponent, trusted=True)


def difference(F: SampledSignal, s: float) -> SampledSignal:
    """Delta_s F(t) = F(t+s) - F(t) on the common grid."""
    k = F.lattice_steps(s, "lag")
    if k < 0:
        raise DomainError("difference lag must be >= 0")
    if k >= F.n:
        raise HorizonError("lag exceeds the record")
    vals = F.values[k:] - F.values[:F.n - k]
    if F.domain is Domain.HALF_LINE:
        return SampledSignal(Domain.HALF_LINE, 0.0, F.dt, vals,
                             F.growth_exponent, trusted=True)
    return SampledSignal(Domain.FULL_LINE, F.t0, F.dt, vals,
                         F.growth_exponent, trusted=True)


def _cumulative(F: SampledSignal) -> np.ndarray:
    steps = 0.5 * F.dt * (F.values[1:] + F.values[:-1])
    return np.vstack([np.zeros((1, F.dim), complex), np.cumsum(steps, axis=0)])


def indefinite_integral(F: SampledSignal) -> SampledSignal:
    """PF(t) = integral of F from 0 to t, by cumulative trapezoid.

    t = 0 must lie on the record (always true on the half line).
    """
    if F.domain is Domain.FULL_LINE and (F.t0 > _LATTICE_RTOL or F.t_end < -_LATTICE_RTOL):
        raise DomainError("indefinite integral is anchored at 0, which is "
                          "outside the record")
    cum = _cumulative(F)
    i0 = F.index_of(0.0)
    cum = cum - cum[i0]
    k = F.growth_exponent + 1 if F.sup_norm() > 0 else 0
    return SampledSignal(F.domain, F.t0, F.dt, cum, k, trusted=True)


def mollify(F: SampledSignal, h: float) -> SampledSignal:
    """Sliding average M_h F(t) = (1/h) * integral of F over [t, t+h].

    Computed from the cumulative trapezoid; agrees with convolving the
    zero extension against the box kernel s_h and restricting to J.
    """
    k = F.lattice_steps(h, "h")
    if k <= 0:
        raise GridError("h must be a positive lattice multiple")
    if k >= F.n:
        raise HorizonError("h exceeds the record")
    cum = _cumulative(F)
    vals = (cum[k:] - cum[:-k]) / h
    return SampledSignal(F.domain, F.t0, F.dt, vals, F.growth_exponent,
                         trusted=True)


# ---------------------------------------------------------------------------
# convolution
# ---------------------------------------------------------------------------

def _sliding_dot(padded: np.ndarray, kernel_rev: np.ndarray,
                 first: int, row_step: int, col_step: int, count: int) -> np.ndarray:
    """out[k, :] = sum_i padded[first + k*row_step + i*col_step, :] * kernel_rev[i]."""
    n, d = padded.shape
    m = len(kernel_rev)
    if first < 0 or first + (count - 1) * row_step + (m - 1) * col_step >= n:
        raise TruncationError("convolution window leaves the padded record")
    out = np.empty((count, d), complex)
    for c in range(d):
        base = np.ascontiguousarray(padded[:, c])
        view = np.lib.stride_tricks.as_strided(
            base[first:], shape=(count, m),
            strides=(row_step * base.strides[0], col_step * base.strides[0]))
        out[:, c] = view @ kernel_rev
    return out


def _env_weight(env_c: float, k: int, edge: float, width: float) -> float:
    return env_c * (1.0 + (abs(edge) + width) ** 2) ** k


def _tail_crossing(tail_mass, thr: float, width: float) -> float:
    """Smallest x with tail_mass(x) <= thr (tail_mass is non-increasing)."""
    if tail_mass(0.0) <= thr:
        return 0.0
    if tail_mass(width) > thr:
        raise TruncationError(
            "kernel support cut alone exceeds the truncation budget")
    lo, hi = 0.0, width
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if tail_mass(mid) <= thr:
            hi = mid
        else:
            lo = mid
    return hi


def convolve(H: ExtendedSignal, kernel, out_step: float | None = None,
             out_range: tuple | None = None, budget: float = 1e-12,
             quad_step: float | None = None) -> ExtendedSignal:
    """Trapezoid quadrature of (H * k)(t) = integral H(t - s) k(s) ds.

    Output points are restricted to where the quadrature window either
    stays inside the sampled range of H or runs only over regions that are
    known (the zero left tail of a half-line origin) or negligible (kernel
    mass beyond the record, weighted by the declared growth envelope,
    below ``budget`` relative to sup||H||).  The worst admitted omission
    is recorded on the result as ``trunc_bound``; a window that would
    exceed the budget is not emitted at all.

    ``out_step`` decimates the output grid; ``quad_step`` coarsens the
    s-quadrature lattice, which is only safe for kernels whose own decay
    suppresses the aliased high-frequency content of H.
    """
    dt = H.dt
    qstep = dt if quad_step is None else quad_step
    col = H.lattice_steps(qstep, "quadrature step")
    s0, samples = kernel.time_samples(dt, quad_step=qstep)
    m = len(samples)
    if m < 2:
        raise GridError("kernel sampling too coarse for its support")
    i_s0 = H.lattice_steps(s0, "kernel start")
    smin, smax = s0, s0 + (m - 1) * qstep
    w = np.full(m, qstep)
    w[0] = w[-1] = qstep / 2
    kr = (samples * w)[::-1]

    row = col if out_step is None else H.lattice_steps(out_step, "output step")

    width = max(abs(smin), abs(smax))
    env = max(_env_weight(H.envelope_constant(), H.growth_exponent,
                          max(abs(H.t0), abs(H.t_end)), width), 1e-300)
    allowance = budget * max(H.sup_norm(), 1e-300)

    # an output at t omits kernel mass at |s| >= t_end - t (right edge) or
    # |s| >= t - t0 (left edge, full-line data); admit while the omission,
    # weighted by the growth envelope, stays within the allowance
    x_star = _tail_crossing(kernel.tail_mass, allowance / env, width)
    t_hi = H.t_end - x_star
    t_lo = H.t0 if H.origin_domain is Domain.HALF_LINE else H.t0 + x_star
    if out_range is not None:
        t_lo, t_hi = max(t_lo, out_range[0]), min(t_hi, out_range[1])

    i_lo = int(np.ceil((t_lo - H.t0) / dt - _LATTICE_RTOL))
    i_hi = int(np.floor((t_hi - H.t0) / dt + _LATTICE_RTOL))
    count = (i_hi - i_lo) // row + 1 if i_hi >= i_lo else 0
    if count < 1:
        raise TruncationError("no output points satisfy the truncation budget")
    i_hi = i_lo + (count - 1) * row

    i_smax = i_s0 + (m - 1) * col
    pad_l = max(0, i_smax - i_lo)
    pad_r = max(0, i_hi - i_s0 - (H.n - 1))
    padded = np.vstack([np.zeros((pad_l, H.dim), complex), H.values,
                        np.zeros((pad_r, H.dim), complex)])
    first = i_lo - i_smax + pad_l

    out = _sliding_dot(padded, kr, first, row, col, count)

    omit_r = kernel.tail_mass(max(0.0, H.t_end - (H.t0 + i_hi * dt)))
    omit = omit_r if H.origin_domain is Domain.HALF_LINE else \
        omit_r + kernel.tail_mass(max(0.0, i_lo * dt))
    trunc = float(min(omit * env, allowance))
    k_out = max(H.growth_exponent, getattr(kernel, "growth_exponent", 0))
    return ExtendedSignal(Domain.FULL_LINE, H.t0 + i_lo * dt, row * dt, out,
                          k_out, trusted=True, origin_domain=H.origin_domain,
                          trunc_bound=trunc + H.trunc_bound * kernel.mass)
