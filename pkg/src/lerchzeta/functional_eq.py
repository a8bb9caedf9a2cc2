"""Exponential-sum sides of the functional equations, plus numeric checks
of the partial-fraction kernel expansions and the power/Mellin contour
identity they rest on.

For -1 < sigma < 0 and 0 < a < 1:

  zeta(s,a) = (-pi i)(2pi)^{s-1} / (Gamma(s) sin pi s)
              * [ e^{pi i s/2} sum_{n>=1} e^{2pi i n a} n^{s-1}
                - e^{-pi i s/2} sum_{n>=1} e^{-2pi i n a} n^{s-1} ]

  Phi(s,a,z) = z^{-a} Gamma(1-s)
               * sum_{n=-inf}^{inf} (-log z + 2pi i n)^{s-1} e^{2pi i n a}

with every power on the principal branch (all bases have Re >= 0 for
|z| <= 1, so the branch is continuous there).  The bilateral sum is taken
as the symmetric limit.

The raw sums converge like N^sigma, far too slowly on their own, so the
tails are summed by iterated Abel summation: with q on the unit circle and
g smooth,

  sum_{n>N} q^n g(n) = [q^{N+1} g(N+1) + sum_{n>N+1} q^n (g(n)-g(n-1))]/(1-q),

applied `depth` times.  Each application shrinks the tail by roughly
|g'/g| / |1-q| ~ 1/(N |1-q|), so a handful of terms reaches near machine
accuracy for a away from the integers.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb, fsum

import numpy as np

from .errors import DomainError
from .evaluate import EvalResult, Method
from .kernels import _check_a, _check_z, kernel_G, kernel_Gz
from .quadrature import tanh_sinh
from .special import gamma_real, principal_log

__all__ = [
    "FESumConfig",
    "zeta_fe_rhs",
    "phi_fe_rhs",
    "verify_kernel_expansion_z1",
    "verify_kernel_expansion_zne1",
    "verify_mellin_identity",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FESumConfig:
    """Truncation of the (formally infinite) functional-equation sums.

    n_max                one-sided term count (bilateral sums use -n_max..n_max)
    use_tail_correction  append the iterated-Abel tail estimate
    tail_depth           Abel iterations (error ~ (N |1-q|)^{-depth})
    """

    n_max: int = 4096
    use_tail_correction: bool = True
    tail_depth: int = 6

    def __post_init__(self) -> None:
        if self.n_max < 16:
            raise DomainError("n_max must be at least 16")
        if not 1 <= self.tail_depth <= 12:
            raise DomainError("tail_depth must lie in 1..12")


_DEFAULT_FE = FESumConfig()


def _abel_tail(q: complex, g, n_start: int, depth: int) -> tuple[complex, float]:
    """sum_{n > n_start} q^n g(n) for |q| = 1, q != 1, by iterated Abel
    summation.  g maps a float array of indices to complex values.  Returns
    (tail, error_bound)."""
    vals = g(np.arange(n_start + 1, n_start + depth + 2, dtype=float))
    inv = 1.0 / (1.0 - q)
    total = 0.0 + 0.0j
    qpow = q ** (n_start + 1)
    fac = inv
    for j in range(depth):
        dj = 0.0 + 0.0j
        for i in range(j + 1):
            dj += (-1) ** i * comb(j, i) * vals[j - i]
        total += qpow * dj * fac
        qpow *= q
        fac *= inv
    dlast = 0.0 + 0.0j
    for i in range(depth + 1):
        dlast += (-1) ** i * comb(depth, i) * vals[depth - i]
    err = 2.0 * abs(dlast) * abs(inv) ** (depth + 1)
    return total, err


def _check_open_a(a: float) -> float:
    a = _check_a(a)
    if a == 1.0:
        raise DomainError("the functional-equation sums require 0 < a < 1")
    return a


def _check_sigma_neg(sigma: float) -> float:
    sigma = float(sigma)
    if not -1.0 < sigma < 0.0:
        raise DomainError(f"sigma must lie in (-1,0), got {sigma}")
    return sigma


def zeta_fe_rhs(sigma: float, a: float,
                cfg: FESumConfig | None = None) -> EvalResult:
    """Exponential-sum side of the zeta functional equation on (-1,0).

    The two sums are complex conjugates for real sigma, so only one is
    computed; the result is real up to roundoff and returned with its
    residual imaginary part intact (callers may check it).
    """
    sigma = _check_sigma_neg(sigma)
    a = _check_open_a(a)
    cfg = cfg or _DEFAULT_FE
    N = cfg.n_max
    n = np.arange(1, N + 1, dtype=float)
    s_plus = complex(np.sum(np.exp(2j * math.pi * a * n) * n ** (sigma - 1.0)))
    q = cmath.exp(2j * math.pi * a)
    if cfg.use_tail_correction:
        tail, tail_err = _abel_tail(q, lambda m: m ** (sigma - 1.0),
                                    N, cfg.tail_depth)
        s_plus += tail
    else:
        tail_err = 2.0 * N ** (sigma - 1.0) / abs(1.0 - q)
    s_minus = s_plus.conjugate()
    pref = (-math.pi * 1j) * _TWO_PI ** (sigma - 1.0) \
        / (gamma_real(sigma) * math.sin(math.pi * sigma))
    value = pref * (cmath.exp(0.5j * math.pi * sigma) * s_plus
                    - cmath.exp(-0.5j * math.pi * sigma) * s_minus)
    err = 2.0 * abs(pref) * (tail_err + 16.0 * np.finfo(float).eps * abs(s_plus))
    return EvalResult(value, float(err), Method.FUNCTIONAL_EQ)


def phi_fe_rhs(sigma: float, a: float, z: complex,
               cfg: FESumConfig | None = None) -> EvalResult:
    """Bilateral exponential-sum side of the Phi functional equation.

    z^{-a} Gamma(1-s) sum_{|n| <= N} (-log z + 2pi i n)^{s-1} e^{2pi i n a},
    principal branch throughout, symmetric truncation, Abel-corrected tails
    on both sides.
    """
    sigma = _check_sigma_neg(sigma)
    a = _check_open_a(a)
    z = _check_z(z)
    if z == 1:
        raise DomainError("z = 1 makes the n = 0 term singular; use zeta_fe_rhs")
    cfg = cfg or _DEFAULT_FE
    N = cfg.n_max
    log_z = principal_log(z)
    n = np.arange(-N, N + 1, dtype=float)
    bases = -log_z + 2j * math.pi * n
    core = complex(np.sum(bases ** (sigma - 1.0)
                          * np.exp(2j * math.pi * a * n)))
    q_pos = cmath.exp(2j * math.pi * a)
    q_neg = q_pos.conjugate()
    if cfg.use_tail_correction:
        t_pos, e_pos = _abel_tail(
            q_pos, lambda m: (2j * math.pi * m - log_z) ** (sigma - 1.0),
            N, cfg.tail_depth)
        t_neg, e_neg = _abel_tail(
            q_neg, lambda m: (-2j * math.pi * m - log_z) ** (sigma - 1.0),
            N, cfg.tail_depth)
        core += t_pos + t_neg
        tail_err = e_pos + e_neg
    else:
        tail_err = 4.0 * (_TWO_PI * N) ** (sigma - 1.0) / abs(1.0 - q_pos)
    za = cmath.exp(-a * log_z)
    gam = math.gamma(1.0 - sigma)
    value = za * gam * core
    err = abs(za) * gam * (tail_err
                           + 16.0 * np.finfo(float).eps * abs(core))
    return EvalResult(value, float(err), Method.FUNCTIONAL_EQ)


# --------------------------------------------------------------------------
# expansion / contour-identity checks
# --------------------------------------------------------------------------

def verify_kernel_expansion_z1(a: float, x: float, n_max: int
                               ) -> tuple[float, float]:
    """Symmetric truncation of the partial-fraction expansion of G(a,x),

        sum_{n=1}^{N} [ x e^{-2pi i n a} / (2pi i n (x - 2pi i n))
                      - x e^{2pi i n a} / (2pi i n (x + 2pi i n)) ],

    against kernel_G(a,x).  The +-n terms are conjugate, so each pair is
    real; the truncation error oscillates under an O(1/N) envelope.
    Returns (truncated_sum, reference)."""
    a = _check_a(a)
    x = float(x)
    if x <= 0.0:
        raise DomainError("x must be positive")
    n = np.arange(1, int(n_max) + 1, dtype=float)
    first = x * np.exp(-2j * math.pi * n * a) / (2j * math.pi * n * (x - 2j * math.pi * n))
    total = 2.0 * float(np.sum(first.real))
    return total, float(kernel_G(a, x))


def verify_kernel_expansion_zne1(a: float, z: complex, x: float, n_max: int
                                 ) -> tuple[complex, complex]:
    """Symmetric truncation of

        sum_{|n| <= N} x z^{-a} e^{-2pi i n a}
                       / ((2pi i n + log z)(x - 2pi i n - log z))

    against kernel_Gz(a,z,x).  Returns (truncated_sum, reference)."""
    a = _check_a(a)
    z = _check_z(z)
    if z == 1:
        raise DomainError("z = 1 belongs to verify_kernel_expansion_z1")
    x = float(x)
    if x <= 0.0:
        raise DomainError("x must be positive")
    log_z = principal_log(z)
    n = np.arange(-int(n_max), int(n_max) + 1, dtype=float)
    den = (2j * math.pi * n + log_z) * (x - 2j * math.pi * n - log_z)
    za = cmath.exp(-a * log_z)
    terms = x * za * np.exp(-2j * math.pi * n * a) / den
    return complex(np.sum(terms)), complex(kernel_Gz(a, z, x))


def verify_mellin_identity(sigma: float, w: complex
                           ) -> tuple[complex, complex]:
    """Both sides of  int_0^inf x^sigma/(x - w) dx
                        = 2 pi i w^sigma / (1 - e^{2 pi i sigma})
    for -1 < sigma < 0 and w off the nonnegative real axis.

    The left side is quadrature: a geometric head series on (0, |w|/2],
    tanh-sinh on [|w|/2, 2|w|], and a geometric tail series on [2|w|, inf).
    The right side uses the branch arg w in (0, 2pi) -- the branch cut lies
    along the integration ray, so for Im w < 0 this differs from the
    principal value by e^{2 pi i sigma}.
    Returns (lhs, rhs)."""
    sigma = _check_sigma_neg(sigma)
    w = complex(w)
    if w == 0 or (w.imag == 0.0 and w.real >= 0.0):
        raise DomainError("w on the nonnegative real axis puts a "
                          "non-integrable pole on the contour")
    r = abs(w)
    delta, big = 0.5 * r, 2.0 * r
    n_geo = 80
    # head: 1/(x-w) = -sum_k x^k / w^{k+1} for |x| < |w|
    head_terms = []
    wpow = w
    for k in range(n_geo):
        head_terms.append(-delta ** (sigma + k + 1.0) / ((sigma + k + 1.0) * wpow))
        wpow *= w
    head = complex(fsum(t.real for t in head_terms),
                   fsum(t.imag for t in head_terms))
    mid = tanh_sinh(lambda x: x ** sigma / (x - w), delta, big,
                    tol=1e-13, max_levels=12)
    # tail: 1/(x-w) = sum_k w^k / x^{k+1} for |x| > |w|
    tail_terms = []
    wpow = 1.0 + 0.0j
    for k in range(n_geo):
        tail_terms.append(wpow * big ** (sigma - k) / (k - sigma))
        wpow *= w
    tail = complex(fsum(t.real for t in tail_terms),
                   fsum(t.imag for t in tail_terms))
    lhs = head + mid.value + tail
    theta = math.atan2(w.imag, w.real)
    if theta <= 0.0:
        theta += _TWO_PI
    w_pow_cut = cmath.exp(sigma * complex(math.log(r), theta))
    rhs = 2j * math.pi * w_pow_cut / (1.0 - cmath.exp(2j * math.pi * sigma))
    return lhs, rhs
