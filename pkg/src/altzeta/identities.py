"""Closed-form integral, right-endpoint quadrature, defect, and residual checks.

The closed form

    integral of (1+x)**(-s) over [0,1]  =  (1 - 2**(1-s)) / (s - 1),

with the removable singularity at s = 1 (value log 2), is paired with its
n-node right-endpoint Riemann sum; their difference is the quadrature
defect.  Three exact algebraic identities tie these to the partial sums:

    cancellation:  eta_{2n}(s) - zeta_{2n}(s) = -2**(1-s) * zeta_n(s)
    band form:     eta_{2n}(s) = (1 - 2**(1-s)) zeta_{2n}(s) + 2**(1-s) * band_n(s)
    quadrature:    eta_{2n}(s) = (1 - 2**(1-s)) zeta_{2n}(s)
                                 + (2n)**(1-s) * (integral - defect_n(s))

Each residual check evaluates both sides independently and reports the
absolute difference together with a scale: the total magnitude of every
constituent term, the budget that rounding error is judged against.
Only rounding separates the two sides; the identities hold for all s.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, exp, expm1, fabs, log, log1p, sin

from .kernel import MACHINE_EPSILON, SumResult, _Accumulator, _exp_neg_parts, _require_finite
from .partial_sums import band_sum, eta_partial, zeta_partial, _check_request

_LN2 = log(2.0)

#: |s - 1| below which the closed-form integral switches to its series branch.
SINGULARITY_THRESHOLD = 1e-4

#: Series terms are added until the next one drops below this relative size.
_SERIES_CUTOFF = 1e-20


def _expm1_complex(z: complex) -> complex:
    """exp(z) - 1 without cancellation for small z.

    Real part via expm1(x)cos(y) - 2 sin^2(y/2); both pieces are O(|z|), so
    no leading-digit cancellation occurs.  Sine signs are restored
    explicitly to keep conjugation symmetry exact.
    """
    x, y = z.real, z.imag
    ay = fabs(y)
    half = sin(0.5 * ay)
    sn = sin(ay)
    if y < 0.0:
        sn = -sn
    return complex(expm1(x) * cos(ay) - 2.0 * half * half, exp(x) * sn)


def _integral_direct(s: complex) -> complex:
    # (1 - 2**(1-s)) / (s - 1) with the numerator formed cancellation-free.
    u = (s - 1.0) * _LN2
    return -_expm1_complex(-u) / (s - 1.0)


def _integral_series(s: complex) -> complex:
    # log2 * sum_{m>=0} (-u)**m / (m+1)!  with u = (s-1) log2,
    # i.e. log2 * (1 - exp(-u))/u continued through u = 0.
    u = (s - 1.0) * _LN2
    total = complex(1.0, 0.0)
    term = complex(1.0, 0.0)
    m = 0
    while True:
        m += 1
        term = term * (-u) / (m + 1)
        total += term
        if abs(term) < _SERIES_CUTOFF * abs(total):
            return _LN2 * total


def integral_closed_form(s: complex) -> complex:
    """The integral of (1+x)**(-s) over [0,1]; log 2 at the removable s = 1."""
    s = _require_finite(s)
    if abs(s - 1.0) < SINGULARITY_THRESHOLD:
        return _integral_series(s)
    return _integral_direct(s)


def riemann_sum(n: int, s: complex, *, max_terms: int | None = None) -> SumResult:
    """Right-endpoint Riemann sum of (1+x)**(-s): (1/n) sum_{k=1}^n (1+k/n)**(-s).

    Node logarithms use log1p(k/n), ascending k; the division by n happens
    once at the end and is folded into the error bound.
    """
    _check_request(n, n, max_terms)
    s = _require_finite(s)
    sigma, t = s.real, s.imag
    acc = _Accumulator()
    for k in range(1, n + 1):
        acc.add(*_exp_neg_parts(sigma, t, log1p(k / n)))
    raw = acc.result()
    value = raw.value / n
    bound = (raw.err_bound + MACHINE_EPSILON * (fabs(raw.value.real) + fabs(raw.value.imag))) / n
    return SumResult(value, bound, n, raw.abs_sum / n)


def defect(n: int, s: complex, *, max_terms: int | None = None) -> complex:
    """Quadrature defect: closed-form integral minus the n-node Riemann sum."""
    return integral_closed_form(s) - riemann_sum(n, s, max_terms=max_terms).value


@dataclass(frozen=True)
class Residual:
    """Two independently evaluated sides of one identity instance.

    ``abs_diff`` is exactly |lhs - rhs| as computed; ``scale`` is the summed
    magnitude of every constituent term (not a bound on |lhs| or |rhs|).
    """

    lhs: complex
    rhs: complex
    abs_diff: float
    scale: float


def _two_pow_one_minus(s: complex) -> complex:
    # 2**(1-s) = exp(-(s-1) log 2), evaluated through the shared kernel.
    re, im, _ = _exp_neg_parts(s.real - 1.0, s.imag, _LN2)
    return complex(re, im)


def _cancellation_from(eta2n: SumResult, zeta2n: SumResult, half: SumResult, c: complex) -> Residual:
    lhs = eta2n.value - zeta2n.value
    rhs = -(c * half.value)
    scale = eta2n.abs_sum + zeta2n.abs_sum + abs(c) * half.abs_sum
    return Residual(lhs, rhs, abs(lhs - rhs), scale)


def _band_from(eta2n: SumResult, zeta2n: SumResult, band: SumResult, c: complex) -> Residual:
    lhs = eta2n.value
    rhs = (1.0 - c) * zeta2n.value + c * band.value
    scale = eta2n.abs_sum + abs(1.0 - c) * zeta2n.abs_sum + abs(c) * band.abs_sum
    return Residual(lhs, rhs, abs(lhs - rhs), scale)


def _quadrature_from(n: int, s: complex, eta2n: SumResult, zeta2n: SumResult, c: complex) -> Residual:
    integral = integral_closed_form(s)
    dn = defect(n, s)
    # (2n)**(1-s) computed from log(2n) directly, a different path from
    # 2**(1-s) * n**(1-s), so this check is not the band form in disguise.
    re, im, _ = _exp_neg_parts(s.real - 1.0, s.imag, log(2 * n))
    w = complex(re, im)
    lhs = eta2n.value
    rhs = (1.0 - c) * zeta2n.value + w * (integral - dn)
    scale = eta2n.abs_sum + abs(1.0 - c) * zeta2n.abs_sum + abs(w) * (abs(integral) + abs(dn))
    return Residual(lhs, rhs, abs(lhs - rhs), scale)


def residual_cancellation(n: int, s: complex) -> Residual:
    """Check eta_{2n} - zeta_{2n} = -2**(1-s) zeta_n (odd-index cancellation)."""
    s = _require_finite(s)
    return _cancellation_from(
        eta_partial(2 * n, s), zeta_partial(2 * n, s), zeta_partial(n, s), _two_pow_one_minus(s)
    )


def residual_band(n: int, s: complex) -> Residual:
    """Check eta_{2n} = (1 - 2**(1-s)) zeta_{2n} + 2**(1-s) * band_n."""
    s = _require_finite(s)
    return _band_from(
        eta_partial(2 * n, s), zeta_partial(2 * n, s), band_sum(n, s), _two_pow_one_minus(s)
    )


def residual_quadrature(n: int, s: complex) -> Residual:
    """Check eta_{2n} = (1 - 2**(1-s)) zeta_{2n} + (2n)**(1-s) (integral - defect)."""
    s = _require_finite(s)
    return _quadrature_from(
        n, s, eta_partial(2 * n, s), zeta_partial(2 * n, s), _two_pow_one_minus(s)
    )


def residual_suite(n: int, s: complex) -> tuple[Residual, Residual, Residual]:
    """All three residuals sharing one set of partial sums.

    Bit-identical to calling the three residual functions separately; the
    shared evaluation just avoids re-summing when sweeping grids.
    """
    s = _require_finite(s)
    eta2n = eta_partial(2 * n, s)
    zeta2n = zeta_partial(2 * n, s)
    half = zeta_partial(n, s)
    band = band_sum(n, s)
    c = _two_pow_one_minus(s)
    return (
        _cancellation_from(eta2n, zeta2n, half, c),
        _band_from(eta2n, zeta2n, band, c),
        _quadrature_from(n, s, eta2n, zeta2n, c),
    )
