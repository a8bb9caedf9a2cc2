"""Evaluation of Phi(sigma, a, z) = sum_{n>=0} z^n (n+a)^{-sigma} for real
sigma, 0 < a <= 1 and 0 < |z| <= 1, including its analytic continuation.

Routes:

  * phi_series            -- the defining Dirichlet series (sigma > 1, or any
                             sigma when |z| < 1), plain truncation with an
                             honest tail bound.
  * hurwitz_integral_pos  -- zeta(sigma,a) on 0 < sigma < 1 from
                             Gamma(s) zeta(s,a) = int_0^inf H(a,x) x^{s-1} dx.
  * hurwitz_integral_neg  -- zeta(sigma,a) on -1 < sigma < 0 from the same
                             integral with the G kernel.
  * phi_integral_pos/neg  -- the z != 1 analogues with the e^{(1-a)x}/(e^x-z)
                             and G_z kernels.
  * special_value         -- closed forms at sigma = 0 and sigma = -1.
  * hurwitz_em            -- Euler-Maclaurin oracle for zeta(sigma,a), any
                             real sigma != 1; independent of the kernels and
                             quadrature, used for cross-validation.
  * evaluate              -- dispatcher over all of the above.

Quadrature layout for the integral routes (split point s, default 1):

  int_0^s   near x = 0 the factor x^{sigma-1} is too singular for a binary64
            node ladder when sigma approaches 0 or -1, so the leading piece
            int_0^delta kernel * x^{sigma-1} dx is summed analytically term by
            term from the kernel's power series (exact integrals of
            c_k x^{k+sigma-1}); the remainder [delta, s] goes to tanh-sinh.
  int_s^inf the exponentially decaying part e^{-ax}/(1 - z e^{-x}) goes to
            exp-sinh; the algebraic parts of the kernels (1/x and the
            constants) are integrated in closed form:
              int_s^inf x^{sigma-2} dx = s^{sigma-1}/(1-sigma)   (sigma < 1)
              int_s^inf x^{sigma-1} dx = -s^sigma/sigma          (sigma < 0)

Accumulation uses math.fsum for the handful of combined pieces and numpy's
pairwise reduction inside the quadrature rules.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import fsum

import numpy as np

from .errors import (ConditioningError, DomainError, PoleError,
                     SeriesDivergenceError, WrongPathError)
from .kernels import (_check_a, _check_z, gz_taylor_coeffs, h_series_coeffs,
                      kernel_G, kernel_Gz, kernel_H)
from .quadrature import exp_sinh, tanh_sinh
from .special import bernoulli_number, bernoulli_poly, gamma_real

__all__ = [
    "Method",
    "EvalResult",
    "QuadConfig",
    "phi_series",
    "special_value",
    "hurwitz_em",
    "hurwitz_integral_pos",
    "hurwitz_integral_neg",
    "phi_integral_pos",
    "phi_integral_neg",
    "evaluate",
]

_EPS = float(np.finfo(float).eps)
_HEAD_DELTA = 0.25          # head-series reach for the H/G kernels
_HEAD_TERMS_GZ = 36         # Taylor terms for the G_z head
_MIN_ONE_MINUS_Z = 1e-3     # conditioning cap on the integral paths
_UNIT_TOL = 1e-12


class Method(str, Enum):
    SERIES = "Series"
    INTEGRAL_POS = "IntegralPos"
    INTEGRAL_NEG = "IntegralNeg"
    INTEGRAL_UNIT = "IntegralUnit"
    SPECIAL_VALUE = "SpecialValue"
    FUNCTIONAL_EQ = "FunctionalEq"
    EULER_MACLAURIN = "EulerMaclaurin"

    def __str__(self) -> str:  # plain tag in CLI output
        return self.value


@dataclass(frozen=True)
class EvalResult:
    """A value with an absolute-error estimate and the route that produced it.

    For real z the Series/SpecialValue routes return an imaginary part that
    is exactly 0.0; the integral routes run in real arithmetic for real z,
    so their imaginary part is 0.0 as well.
    """

    value: complex
    abs_err_estimate: float
    method: Method


@dataclass(frozen=True)
class QuadConfig:
    """Quadrature knobs for the integral routes.

    split_point  where int_0^inf is split (the kernel analysis splits at 1).
    tail_cutoff  hard x-truncation of the upper integral; inf leaves the
                 truncation to the double-exponential decay of the rule.
                 Smaller values trade accuracy for time when a is tiny.
    max_levels   tanh-sinh / exp-sinh refinement cap (nodes ~ 2^levels).
    tol          absolute target for each evaluation.
    """

    split_point: float = 1.0
    tail_cutoff: float = math.inf
    max_levels: int = 11
    tol: float = 1e-10

    def __post_init__(self) -> None:
        if not self.split_point > 0:
            raise DomainError("split_point must be positive")
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_levels < 4:
            raise DomainError("max_levels must be at least 4")


_DEFAULT_CFG = QuadConfig()


def _is_unit(z: complex) -> bool:
    return abs(abs(z) - 1.0) <= _UNIT_TOL


# --------------------------------------------------------------------------
# series route
# --------------------------------------------------------------------------

def phi_series(sigma: float, a: float, z: complex, tol: float = 1e-13,
               max_terms: int = 2_000_000) -> EvalResult:
    """Direct summation of sum_{n>=0} z^n (n+a)^{-sigma}.

    Requires sigma > 1 on the unit circle; converges geometrically for
    |z| < 1 at any real sigma.  The recorded error estimate is the geometric
    next-term bound (|z| < 1) or the integral tail bound (|z| = 1); summation
    is chunked numpy with pairwise reduction.
    """
    sigma = float(sigma)
    a = _check_a(a)
    z = _check_z(z)
    az = abs(z)
    real_z = z.imag == 0.0
    zz: float | complex = z.real if real_z else z

    if _is_unit(z):
        if sigma <= 1.0:
            raise SeriesDivergenceError(
                "the series diverges for |z| = 1 and sigma <= 1; use an integral path")
        # choose N from the integral tail bound (N+a)^{1-sigma}/(sigma-1)
        want = (tol * (sigma - 1.0)) ** (-1.0 / (sigma - 1.0)) if sigma < 60 else 64.0
        n_used = int(min(max_terms, max(64.0, want) + 1.0))
        total_re, total_im = [], []
        for lo in range(0, n_used, 1 << 19):
            hi = min(n_used, lo + (1 << 19))
            n = np.arange(lo, hi, dtype=float)
            terms = np.power(zz, n) * (n + a) ** (-sigma)
            if real_z:
                total_re.append(float(np.sum(terms)))
            else:
                total_re.append(float(np.sum(terms.real)))
                total_im.append(float(np.sum(terms.imag)))
        value = complex(fsum(total_re), fsum(total_im) if total_im else 0.0)
        # tail <= int_{n_used-1+a}^inf x^-sigma dx, a true upper bound
        err = (n_used - 1 + a) ** (1.0 - sigma) / (sigma - 1.0)
        return EvalResult(value, err + 8.0 * _EPS * abs(value), Method.SERIES)

    # geometric regime
    total_re, total_im = [], []
    chunk = 2048
    n0 = 0
    err = math.inf
    while n0 < max_terms:
        n = np.arange(n0, n0 + chunk, dtype=float)
        terms = np.power(zz, n) * (n + a) ** (-sigma)
        if real_z:
            total_re.append(float(np.sum(terms)))
        else:
            total_re.append(float(np.sum(terms.real)))
            total_im.append(float(np.sum(terms.imag)))
        n0 += chunk
        t_last = az ** (n0 - 1) * (n0 - 1 + a) ** (-sigma)
        eff_r = az * math.exp(max(0.0, -sigma) / (n0 + a))
        if eff_r < 1.0:
            err = t_last * eff_r / (1.0 - eff_r)
            if err <= tol:
                break
    if not math.isfinite(err):
        # |z| a hair inside the unit circle with sigma < 0: the terms are
        # still growing at the term cap, so no honest bound exists
        raise SeriesDivergenceError(
            f"series tail not yet decaying after {max_terms} terms "
            f"(|z| = {az}, sigma = {sigma}); use an integral path")
    value = complex(fsum(total_re), fsum(total_im) if total_im else 0.0)
    return EvalResult(value, err + 8.0 * _EPS * abs(value), Method.SERIES)


# --------------------------------------------------------------------------
# closed forms at sigma = 0, -1
# --------------------------------------------------------------------------

def special_value(order: int, a: float, z: complex) -> complex:
    """Exact closed forms: Phi(0,a,z) = 1/(1-z), Phi(-1,a,z) = a/(1-z) +
    z/(1-z)^2, and for z = 1 the zeta values zeta(0,a) = 1/2 - a,
    zeta(-1,a) = -B_2(a)/2."""
    if order not in (0, -1):
        raise DomainError("special_value supports orders 0 and -1 only")
    a = _check_a(a)
    z = _check_z(z)
    if z == 1:
        if order == 0:
            return complex(0.5 - a, 0.0)
        return complex(-0.5 * bernoulli_poly(2, a), 0.0)
    if z.imag == 0.0:
        zr = z.real
        if order == 0:
            return complex(1.0 / (1.0 - zr), 0.0)
        return complex(a / (1.0 - zr) + zr / (1.0 - zr) ** 2, 0.0)
    if order == 0:
        return 1.0 / (1.0 - z)
    return a / (1.0 - z) + z / (1.0 - z) ** 2


# --------------------------------------------------------------------------
# Euler-Maclaurin oracle
# --------------------------------------------------------------------------

def hurwitz_em(sigma: float, a: float, n_terms: int = 24,
               correction_terms: int = 8) -> EvalResult:
    """zeta(sigma, a) by Euler-Maclaurin summation.

    sum_{k<N} (k+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
      + sum_{j<=J} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * (N+a)^{-s-2j+1}

    with N >= 20 and corrections through B_16 by default.  The recorded
    error is the magnitude of the first omitted correction term (a valid
    bound for real sigma).  This route never touches the kernel/quadrature
    machinery, so it serves as the independent cross-check for them.
    Accepts any a > 0 (the shift identity zeta(s,a) - zeta(s,a+1) = a^{-s}
    needs evaluations beyond a = 1).
    """
    sigma = float(sigma)
    a = float(a)
    if not a > 0.0:
        raise DomainError(f"hurwitz_em requires a > 0, got {a}")
    if sigma == 1.0:
        raise PoleError("zeta(s,a) has its pole at sigma = 1")
    if sigma <= -(2 * correction_terms):
        raise DomainError("sigma too negative for the configured corrections")
    N = max(int(n_terms), 20)
    J = int(correction_terms)
    pieces = [(k + a) ** (-sigma) for k in range(N)]
    Na = N + a
    pieces.append(Na ** (1.0 - sigma) / (sigma - 1.0))
    pieces.append(0.5 * Na ** (-sigma))
    rising = sigma
    power = Na ** (-sigma - 1.0)
    for j in range(1, J + 1):
        pieces.append(bernoulli_number(2 * j) / math.factorial(2 * j)
                      * rising * power)
        rising *= (sigma + 2 * j - 1.0) * (sigma + 2 * j)
        power /= Na * Na
    remainder = abs(bernoulli_number(2 * J + 2) / math.factorial(2 * J + 2)
                    * rising * power)
    value = fsum(pieces)
    err = remainder + 8.0 * _EPS * fsum(abs(p) for p in pieces)
    return EvalResult(complex(value, 0.0), err, Method.EULER_MACLAURIN)


# --------------------------------------------------------------------------
# integral routes: zeta(sigma, a)
# --------------------------------------------------------------------------

def _hg_head(sigma: float, a: float, delta: float, first_term: int
             ) -> tuple[float, float]:
    """int_0^delta kernel * x^{sigma-1} dx summed exactly from the Bernoulli
    series; first_term = 1 for H, 2 for G (whose constant term vanishes)."""
    coeffs = h_series_coeffs(a)
    terms = [coeffs[n - 1] * delta ** (n - 1 + sigma) / (n - 1 + sigma)
             for n in range(first_term, coeffs.size + 1)]
    # |B_n(y)|/n! <= 2.01 (2pi)^{-n}: geometric truncation bound
    ratio = delta / (2.0 * math.pi)
    n_next = coeffs.size + 1
    trunc = 2.01 * ratio ** n_next / delta * delta ** sigma / (1.0 - ratio)
    return fsum(terms), trunc


def hurwitz_integral_pos(sigma: float, a: float,
                         cfg: QuadConfig | None = None) -> EvalResult:
    """zeta(sigma,a) for 0 < sigma < 1 via the H-kernel integral."""
    sigma = float(sigma)
    if not 0.0 < sigma < 1.0:
        raise DomainError(f"hurwitz_integral_pos requires sigma in (0,1), got {sigma}")
    a = _check_a(a)
    cfg = cfg or _DEFAULT_CFG
    s = cfg.split_point
    delta = min(_HEAD_DELTA, 0.5 * s)
    qtol = 0.25 * cfg.tol
    head, head_err = _hg_head(sigma, a, delta, first_term=1)
    mid = tanh_sinh(lambda x: kernel_H(a, x) * x ** (sigma - 1.0),
                    delta, s, tol=qtol, max_levels=cfg.max_levels)
    tail = exp_sinh(lambda x: np.exp((sigma - 1.0) * np.log(x) - a * x)
                    / (-np.expm1(-x)),
                    s, tol=qtol, max_levels=cfg.max_levels,
                    x_cap=cfg.tail_cutoff)
    corr = -s ** (sigma - 1.0) / (1.0 - sigma)
    gam = gamma_real(sigma)
    value = fsum([head, mid.value.real, tail.value.real, corr]) / gam
    err = (head_err + mid.err + tail.err) / abs(gam) + 8.0 * _EPS * abs(value)
    return EvalResult(complex(value, 0.0), err, Method.INTEGRAL_POS)


def hurwitz_integral_neg(sigma: float, a: float,
                         cfg: QuadConfig | None = None) -> EvalResult:
    """zeta(sigma,a) for -1 < sigma < 0 via the G-kernel integral.

    The constant part (1/2 - a) of the kernel over [s, inf) contributes the
    closed form (1/2 - a) s^sigma / sigma; the output is exactly real.
    """
    sigma = float(sigma)
    if not -1.0 < sigma < 0.0:
        raise DomainError(f"hurwitz_integral_neg requires sigma in (-1,0), got {sigma}")
    a = _check_a(a)
    cfg = cfg or _DEFAULT_CFG
    s = cfg.split_point
    delta = min(_HEAD_DELTA, 0.5 * s)
    qtol = 0.25 * cfg.tol
    head, head_err = _hg_head(sigma, a, delta, first_term=2)
    mid = tanh_sinh(lambda x: kernel_G(a, x) * x ** (sigma - 1.0),
                    delta, s, tol=qtol, max_levels=cfg.max_levels)
    tail = exp_sinh(lambda x: np.exp((sigma - 1.0) * np.log(x) - a * x)
                    / (-np.expm1(-x)),
                    s, tol=qtol, max_levels=cfg.max_levels,
                    x_cap=cfg.tail_cutoff)
    corr = -s ** (sigma - 1.0) / (1.0 - sigma) + (0.5 - a) * s ** sigma / sigma
    gam = gamma_real(sigma)
    value = fsum([head, mid.value.real, tail.value.real, corr]) / gam
    err = (head_err + mid.err + tail.err) / abs(gam) + 8.0 * _EPS * abs(value)
    return EvalResult(complex(value, 0.0), err, Method.INTEGRAL_NEG)


# --------------------------------------------------------------------------
# integral routes: Phi(sigma, a, z), z != 1
# --------------------------------------------------------------------------

def _check_z_integral(z: complex) -> complex:
    z = _check_z(z)
    if z == 1:
        raise WrongPathError("z = 1 belongs to the hurwitz_integral_* routes")
    if abs(1.0 - z) < _MIN_ONE_MINUS_Z:
        raise ConditioningError(
            f"|1 - z| = {abs(1.0 - z):.2e} < {_MIN_ONE_MINUS_Z}: the kernel "
            "magnitude ~ 1/|1-z| makes the integral paths ill-conditioned")
    return z


def _gz_head(sigma: float, a: float, z: complex, delta: float,
             include_constant: bool) -> tuple[complex, float]:
    """int_0^delta of (G_z + [include_constant]/(1-z)) * x^{sigma-1} dx from
    the Taylor series of G_z about 0."""
    c = gz_taylor_coeffs(a, z, _HEAD_TERMS_GZ)
    terms = [c[k] * delta ** (k + sigma) / (k + sigma)
             for k in range(1, c.size)]
    if include_constant:
        terms.append((1.0 / (1.0 - z)) * delta ** sigma / sigma)
    head = complex(fsum(t.real for t in terms), fsum(t.imag for t in terms))
    trunc = 2.0 * abs(c[-1]) * delta ** (c.size - 1 + sigma)
    return head, trunc


def phi_integral_pos(sigma: float, a: float, z: complex,
                     cfg: QuadConfig | None = None) -> EvalResult:
    """Phi(sigma,a,z) for sigma > 0, z != 1, via
    Gamma(s) Phi = int_0^inf x^{s-1} e^{(1-a)x}/(e^x - z) dx."""
    sigma = float(sigma)
    if not sigma > 0.0:
        raise DomainError(f"phi_integral_pos requires sigma > 0, got {sigma}")
    a = _check_a(a)
    z = _check_z_integral(z)
    cfg = cfg or _DEFAULT_CFG
    real_z = z.imag == 0.0
    zz: float | complex = z.real if real_z else z
    s = cfg.split_point
    # keep the head strictly inside the Taylor radius |log z| of G_z
    rho = abs(np.log(complex(z)))
    delta = min(_HEAD_DELTA, 0.35 * rho, 0.5 * s)
    qtol = 0.25 * cfg.tol
    head, head_err = _gz_head(sigma, a, z, delta, include_constant=True)
    mid = tanh_sinh(lambda x: np.exp((1.0 - a) * x) / (np.exp(x) - zz)
                    * x ** (sigma - 1.0),
                    delta, s, tol=qtol, max_levels=cfg.max_levels)
    tail = exp_sinh(lambda x: np.exp((sigma - 1.0) * np.log(x) - a * x)
                    / (1.0 - zz * np.exp(-x)),
                    s, tol=qtol, max_levels=cfg.max_levels,
                    x_cap=cfg.tail_cutoff)
    gam = gamma_real(sigma)
    re = fsum([head.real, mid.value.real, tail.value.real]) / gam
    im = fsum([head.imag, mid.value.imag, tail.value.imag]) / gam
    value = complex(re, 0.0) if real_z else complex(re, im)
    err = (head_err + mid.err + tail.err) / abs(gam) + 8.0 * _EPS * abs(value)
    method = Method.INTEGRAL_UNIT if _is_unit(z) else Method.INTEGRAL_POS
    return EvalResult(value, err, method)


def phi_integral_neg(sigma: float, a: float, z: complex,
                     cfg: QuadConfig | None = None) -> EvalResult:
    """Phi(sigma,a,z) for -1 < sigma < 0, z != 1, via
    Gamma(s) Phi = int_0^inf G_z(a,x) x^{s-1} dx."""
    sigma = float(sigma)
    if not -1.0 < sigma < 0.0:
        raise DomainError(f"phi_integral_neg requires sigma in (-1,0), got {sigma}")
    a = _check_a(a)
    z = _check_z_integral(z)
    cfg = cfg or _DEFAULT_CFG
    real_z = z.imag == 0.0
    zz: float | complex = z.real if real_z else z
    s = cfg.split_point
    rho = abs(np.log(complex(z)))
    delta = min(_HEAD_DELTA, 0.35 * rho, 0.5 * s)
    qtol = 0.25 * cfg.tol
    head, head_err = _gz_head(sigma, a, z, delta, include_constant=False)
    mid = tanh_sinh(lambda x: kernel_Gz(a, zz, x) * x ** (sigma - 1.0),
                    delta, s, tol=qtol, max_levels=cfg.max_levels)
    tail = exp_sinh(lambda x: np.exp((sigma - 1.0) * np.log(x) - a * x)
                    / (1.0 - zz * np.exp(-x)),
                    s, tol=qtol, max_levels=cfg.max_levels,
                    x_cap=cfg.tail_cutoff)
    corr = (1.0 / (1.0 - z)) * s ** sigma / sigma
    gam = gamma_real(sigma)
    re = fsum([head.real, mid.value.real, tail.value.real, corr.real]) / gam
    im = fsum([head.imag, mid.value.imag, tail.value.imag, corr.imag]) / gam
    value = complex(re, 0.0) if real_z else complex(re, im)
    err = (head_err + mid.err + tail.err) / abs(gam) + 8.0 * _EPS * abs(value)
    method = Method.INTEGRAL_UNIT if _is_unit(z) else Method.INTEGRAL_NEG
    return EvalResult(value, err, method)


# --------------------------------------------------------------------------
# dispatcher
# --------------------------------------------------------------------------

def evaluate(sigma: float, a: float, z: complex,
             cfg: QuadConfig | None = None) -> EvalResult:
    """Evaluate Phi(sigma, a, z), dispatching on (sigma, z).

    sigma in {0,-1} -> closed forms; z = 1 -> the zeta routes; sigma > 1 or
    |z| <= 0.9 -> the series; otherwise the integral representations.  For
    1 < sigma < 1.5 on the unit circle the series tail decays too slowly for
    a sensible term count, so z = 1 uses the Euler-Maclaurin route and z != 1
    the sigma > 0 integral.  sigma = 1 with z = 1 is the zeta pole; sigma
    below -1 is outside the supported range.
    """
    cfg = cfg or _DEFAULT_CFG
    sigma = float(sigma)
    a = _check_a(a)
    z = _check_z(z)
    if sigma == 0.0 or sigma == -1.0:
        return EvalResult(special_value(int(sigma), a, z), 0.0,
                          Method.SPECIAL_VALUE)
    if sigma < -1.0:
        raise DomainError(f"sigma = {sigma} is below the supported range (-1, inf)")
    if z == 1:
        if sigma == 1.0:
            raise PoleError("zeta(s,a) has a simple pole at s = 1")
        if sigma > 1.0:
            if sigma >= 1.5:
                return phi_series(sigma, a, z, tol=cfg.tol)
            return hurwitz_em(sigma, a)
        if sigma > 0.0:
            return hurwitz_integral_pos(sigma, a, cfg)
        return hurwitz_integral_neg(sigma, a, cfg)
    if abs(z) <= 0.9 or sigma >= 1.5:
        return phi_series(sigma, a, z, tol=cfg.tol)
    if sigma > 0.0:
        return phi_integral_pos(sigma, a, z, cfg)
    return phi_integral_neg(sigma, a, z, cfg)
