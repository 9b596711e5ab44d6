"""Floating-point evaluation of ray Jacobi polynomials and Delta_n for sweeps.

Binomials are taken in log space through ``gammaln`` so that large degrees
with large slopes never overflow.  For x >= 1 every term of the finite sum is
nonnegative and the direct sum is accurate to a few ulps per term; for x < 1
the terms alternate and an error estimate is reported instead of a guarantee.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.special import gammaln

from .jacobi import FamilyParams, jacobi

DIRECT_SUM = "direct-sum"
HORNER_ON_EXACT = "horner-on-exact"
MODES = (DIRECT_SUM, HORNER_ON_EXACT)

ZERO_THRESHOLD = 1e-9
UNRELIABLE_REL_ERR = 1e-6

_EPS = np.finfo(float).eps


def _log_binom(z, k):
    return gammaln(z + 1) - gammaln(k + 1) - gammaln(z - k + 1)


def _direct_terms(n: int, alpha: float, beta: float, xs: np.ndarray) -> np.ndarray:
    """Terms of the finite sum, shape (n+1, len(xs))."""
    t = np.arange(n + 1, dtype=float)[:, None]
    u, v = (xs - 1.0) / 2.0, (xs + 1.0) / 2.0
    logc = _log_binom(n + alpha, n - t) + _log_binom(n + beta, t)
    with np.errstate(divide="ignore", invalid="ignore"):
        # 0**0 == 1 at x = +-1
        lu = np.where(t == 0, 0.0, t * np.log(np.abs(u)))
        lv = np.where(t == n, 0.0, (n - t) * np.log(np.abs(v)))
    odd_t = (t % 2 == 1)
    odd_s = ((n - t) % 2 == 1)
    sgn = np.where((u < 0) & odd_t, -1.0, 1.0) * np.where((v < 0) & odd_s, -1.0, 1.0)
    return sgn * np.exp(logc + lu + lv)


def _check_params(alpha, beta):
    if not (alpha > -1 and beta > -1):
        raise ValueError(f"Jacobi parameters must exceed -1, got alpha={alpha}, beta={beta}")


def eval_jacobi_grid(n: int, alpha: float, beta: float, xs) -> tuple[np.ndarray, np.ndarray]:
    """Values of P_n^(alpha,beta) on an array of points, plus per-point sums of |term|."""
    _check_params(alpha, beta)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    xs = np.asarray(xs, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise ValueError("x values must be finite")
    if n == 0:
        return np.ones_like(xs), np.ones_like(xs)
    terms = _direct_terms(n, float(alpha), float(beta), xs)
    return terms.sum(axis=0), np.abs(terms).sum(axis=0)


def eval_jacobi_float_with_magnitude(n: int, alpha: float, beta: float, x: float) -> tuple[float, float]:
    """Value of P_n^(alpha,beta)(x) and the sum of absolute term values."""
    vals, mags = eval_jacobi_grid(n, alpha, beta, np.array([x], dtype=float))
    return float(vals[0]), float(mags[0])


def eval_jacobi_float(n: int, alpha: float, beta: float, x: float) -> float:
    return eval_jacobi_float_with_magnitude(n, alpha, beta, x)[0]


def eval_jacobi_horner(n: int, alpha, beta, xs) -> tuple[np.ndarray, np.ndarray]:
    """Horner on the float-rounded exact coefficients; alpha and beta must be rational."""
    xs = np.asarray(xs, dtype=float)
    rev = np.array(jacobi(n, Fraction(alpha), Fraction(beta)).to_floats()[::-1] or [0.0])
    return np.polyval(rev, xs), np.polyval(np.abs(rev), np.abs(xs))


@dataclass(frozen=True)
class EvalRequest:
    n_values: Sequence[int]
    fam: FamilyParams
    x_grid: Sequence[float]
    mode: str = DIRECT_SUM
    zero_threshold: float = ZERO_THRESHOLD

    def __post_init__(self):
        if len(self.n_values) == 0:
            raise ValueError("n_values must be nonempty")
        if any(int(n) < 1 for n in self.n_values):
            raise ValueError("n values must be positive")
        if not all(math.isfinite(x) for x in self.x_grid):
            raise ValueError("x_grid values must be finite")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


@dataclass(frozen=True)
class SweepRow:
    n: int
    a: Fraction
    b: Fraction
    x: float
    delta_value: float
    sign: int
    est_rel_err: float

    @property
    def unreliable(self) -> bool:
        return self.est_rel_err > UNRELIABLE_REL_ERR


def delta_on_grid(n: int, fam: FamilyParams, xs, mode: str = DIRECT_SUM) -> tuple[np.ndarray, np.ndarray]:
    """Delta_n on an array of points in binary64, plus a magnitude scale for the cancellation."""
    a, b = fam.a, fam.b
    xs = np.asarray(xs, dtype=float)
    if mode == DIRECT_SUM:
        ev = lambda k, al, be: eval_jacobi_grid(k, float(al), float(be), xs)
    else:
        ev = lambda k, al, be: eval_jacobi_horner(k, al, be, xs)
    p1, m1 = ev(n, a * n, b * n)
    p2, m2 = ev(n, a * (n + 1), b * (n + 1))
    p3, m3 = ev(n - 1, a * n, b * n)
    p4, m4 = ev(n + 1, a * (n + 1), b * (n + 1))
    return p1 * p2 - p3 * p4, m1 * m2 + m3 * m4


def delta_float(n: int, fam: FamilyParams, x: float, mode: str = DIRECT_SUM) -> tuple[float, float]:
    value, mag = delta_on_grid(n, fam, [x], mode)
    return float(value[0]), float(mag[0])


def _classify(value: float, magnitude: float, threshold: float) -> int:
    if abs(value) <= threshold * (1.0 + magnitude):
        return 0
    return 1 if value > 0 else -1


def sweep_delta(req: EvalRequest) -> list[SweepRow]:
    """One row per (n, x), in the order the request lists them."""
    xs = np.asarray(req.x_grid, dtype=float)
    rows = []
    for n in req.n_values:
        n = int(n)
        values, mags = delta_on_grid(n, req.fam, xs, req.mode)
        # rounding grows with the term count and with the size of the log-gamma arguments
        errs = (2 * n + 4 + np.log1p(mags)) * _EPS * mags
        for x, value, mag, err in zip(xs.tolist(), values.tolist(), mags.tolist(), errs.tolist()):
            rel = err / abs(value) if value != 0 else math.inf
            rows.append(SweepRow(n, req.fam.a, req.fam.b, x, value,
                                 _classify(value, mag, req.zero_threshold), rel))
    return rows


def parse_grid(spec: str) -> list[float]:
    """``"start:stop:step"``, including ``stop`` when it lies on the grid."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec must be start:stop:step, got {spec!r}")
    start, stop, step = (float(p) for p in parts)
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise ValueError("grid bounds must be finite")
    if step <= 0:
        raise ValueError("grid step must be positive")
    if stop < start:
        raise ValueError("grid stop must not be below start")
    count = int(math.floor((stop - start) / step * (1 + 1e-12))) + 1
    return [start + i * step for i in range(count)]
