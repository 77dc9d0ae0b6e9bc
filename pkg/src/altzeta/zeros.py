"""Zeros of the alternating zeta function on the line Re(s) = 1.

The factor 1 - 2**(1-s) vanishes at s_k = 1 + 2k*pi*i/log 2 for nonzero
integer k, and there the quadrature identity collapses to

    eta_{2n}(s_k) = -(n**(-it)) * defect_n(s_k),      t = 2k*pi/log 2,

whose right side has unit-modulus rotation times a quantity that dies like
1/(4n).  This module enumerates the points, checks the collapsed identity,
and demonstrates the limits eta(s_k) = 0 and eta(1) = log 2 numerically,
cross-checked by two oracles that share no code with the sums under test:
an Euler-transform accelerator and a Richardson extrapolator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fabs, fsum, log, pi
from typing import Sequence

from .identities import _two_pow_one_minus, defect, integral_closed_form
from .kernel import _exp_neg_parts, _require_finite, pow_neg
from .partial_sums import eta_partial, zeta_partial

_LN2 = log(2.0)

#: Zero indices exposed by default; |t| grows linearly in k and large |t|
#: needs finer exp/log error analysis than desk scale warrants.
DEFAULT_K_LIMIT = 16

#: Transformed-term budget for the series accelerator.
DEFAULT_MAX_ACCEL_TERMS = 10_000

#: Smallest acceptable accelerator target (binary64 floor with headroom).
MIN_TARGET_TOL = 1e-13


class ToleranceNotReached(ArithmeticError):
    """The accelerator could not certify the requested tolerance."""


@dataclass(frozen=True)
class ZeroPoint:
    """Index k (nonzero) and the point s = 1 + (2k*pi/log 2) i."""

    k: int
    s: complex


@dataclass(frozen=True)
class ZeroCheck:
    """One instance of the collapsed identity at a zero point.

    ``identity_diff`` = |eta_value - predicted|; ``magnitude`` = |eta_value|,
    the quantity that must shrink along an n-ladder for the zero demo.
    """

    point: ZeroPoint
    n: int
    eta_value: complex
    predicted: complex
    identity_diff: float
    magnitude: float


def zero_point(k: int, *, k_limit: int = DEFAULT_K_LIMIT) -> ZeroPoint:
    """The k-th zero point 1 + (2k*pi/log 2) i, k a nonzero integer."""
    if k == 0:
        raise ValueError(
            "excluded point: s = 1 is not a zero (the alternating series sums to log 2 there)"
        )
    if abs(k) > k_limit:
        raise ValueError(f"|k| = {abs(k)} exceeds the supported range {k_limit}")
    t = (2.0 * pi * k) / _LN2
    return ZeroPoint(k, complex(1.0, t))


def zero_check(k: int, n: int, *, k_limit: int = DEFAULT_K_LIMIT) -> ZeroCheck:
    """Evaluate both sides of eta_{2n}(s_k) = -(n**(-it)) defect_n(s_k)."""
    point = zero_point(k, k_limit=k_limit)
    if n < 1:
        raise ValueError(f"N must be a positive integer, got {n}")
    s = point.s
    eta_value = eta_partial(2 * n, s).value
    rotation = pow_neg(n, complex(0.0, s.imag))  # n**(-it), unit modulus
    predicted = -(rotation * defect(n, s))
    return ZeroCheck(
        point=point,
        n=n,
        eta_value=eta_value,
        predicted=predicted,
        identity_diff=abs(eta_value - predicted),
        magnitude=abs(eta_value),
    )


def _validated_ladder(n_ladder: Sequence[int]) -> list[int]:
    ladder = [int(n) for n in n_ladder]
    if len(ladder) < 3:
        raise ValueError(f"ladder too short: need at least 3 entries, got {len(ladder)}")
    if ladder[0] < 1:
        raise ValueError(f"ladder entries must be positive, got {ladder[0]}")
    for a, b in zip(ladder, ladder[1:]):
        if b <= a:
            raise ValueError(f"ladder must be strictly increasing, got {a} then {b}")
    return ladder


def eta_limit_demo(k: int, n_ladder: Sequence[int]) -> list[tuple[int, float]]:
    """Convergence magnitudes along an n-ladder.

    For nonzero k: |eta_{2n}(s_k)| per ladder entry, heading to zero.  The
    sentinel k = 0 routes to the companion limit at s = 1 and emits
    |eta_{2n}(1) - log 2| instead (both demos are the same identity
    specialization, so they share one entry point).
    """
    ladder = _validated_ladder(n_ladder)
    if k == 0:
        s = complex(1.0, 0.0)
        return [(n, abs(eta_partial(2 * n, s).value - _LN2)) for n in ladder]
    s = zero_point(k).s
    return [(n, abs(eta_partial(2 * n, s).value)) for n in ladder]


# ---------------------------------------------------------------------------
# Independent oracles.
#
# eta_reference deliberately avoids the exp(-s log n) kernel, the
# compensated accumulator, and every identity above: terms come from
# complex.__pow__, the head is summed exactly with math.fsum, and the tail
# is accelerated by an Euler transform in its numerically stable
# iterated-averaging form.
# ---------------------------------------------------------------------------


def _oracle_term(n: int, s: complex) -> complex:
    return complex(n) ** (-s)


def eta_reference(
    s: complex,
    target_abs_tol: float,
    *,
    max_terms: int = DEFAULT_MAX_ACCEL_TERMS,
) -> complex:
    """Alternating zeta value to within ``target_abs_tol``, Re(s) > 0.

    A short head (long enough that tail phases rotate under a radian per
    step) is summed exactly; the tail is Euler-transformed by repeated
    averaging of its partial sums.  Transformed increments eventually decay
    geometrically with ratio about one half, so the remainder is bounded by
    geometric extrapolation of the observed increments, with a safety
    factor of four; the loop stops once that bound falls below half the
    target.  If the bound cannot be certified within ``max_terms``
    transformed terms, ToleranceNotReached is raised: no silently
    inaccurate value is ever returned.
    """
    s = _require_finite(s)
    if s.real <= 0.0:
        raise ValueError(f"need Re(s) > 0 for the alternating series, got {s!r}")
    if not target_abs_tol >= MIN_TARGET_TOL:
        raise ValueError(
            f"target_abs_tol must be at least {MIN_TARGET_TOL}, got {target_abs_tol}"
        )

    head = max(8, int(fabs(s.imag)) + 1)
    head_terms = [
        _oracle_term(n, s) if n % 2 == 1 else -_oracle_term(n, s) for n in range(1, head + 1)
    ]
    head_value = complex(fsum(z.real for z in head_terms), fsum(z.imag for z in head_terms))
    tail_sign = 1.0 if head % 2 == 0 else -1.0  # sign of term head+1

    row: list[complex] = []  # current antidiagonal of the averaging table
    partial = complex(0.0, 0.0)
    sign = 1.0
    prev_diag: complex | None = None
    increments: list[float] = []
    for j in range(max_terms):
        partial += sign * _oracle_term(head + 1 + j, s)
        sign = -sign
        new_row = [partial]
        for k in range(len(row)):
            new_row.append(0.5 * (new_row[k] + row[k]))
        row = new_row
        diag = row[-1]
        if prev_diag is not None:
            increments.append(abs(diag - prev_diag))
        prev_diag = diag
        if len(increments) >= 4:
            recent = increments[-3:]
            largest = max(recent)
            if largest == 0.0:
                return head_value + tail_sign * diag
            window = increments[-4:]
            ratios = [b / a for a, b in zip(window, window[1:]) if a > 0.0]
            bound = None
            if ratios and max(ratios) <= 0.75:
                rho = max(ratios)
                bound = 4.0 * largest * rho / (1.0 - rho)
            elif largest <= 0.125 * target_abs_tol:
                bound = 4.0 * largest
            if bound is not None and bound <= 0.5 * target_abs_tol:
                return head_value + tail_sign * diag
    raise ToleranceNotReached(
        f"accelerator did not certify {target_abs_tol} within {max_terms} terms at s={s!r}"
    )


def eta_reconstructed(n: int, s: complex) -> complex:
    """eta_{2n}(s) reassembled from the quadrature form of the identity.

    Exercises the closed-form integral, the defect, and the independently
    evaluated (2n)**(1-s) factor instead of direct alternating summation.
    """
    s = _require_finite(s)
    c = _two_pow_one_minus(s)
    re, im, _ = _exp_neg_parts(s.real - 1.0, s.imag, log(2 * n))
    w = complex(re, im)
    z2 = zeta_partial(2 * n, s).value
    return (1.0 - c) * z2 + w * (integral_closed_form(s) - defect(n, s))


def eta_richardson(
    s: complex,
    *,
    start: int = 16,
    levels: int = 8,
    via_identity: bool = False,
) -> complex:
    """Richardson-extrapolated even partial sums of the alternating series.

    The truncation error of eta_{2m}(s) expands in powers m**-(s+j), so a
    doubling ladder m = start * 2**i admits elimination with the exact
    factors 2**-(s+j).  With Re(s) > 0 the denominators stay away from
    zero.  This is the deliberately crude guard oracle: slower convergence
    than eta_reference, but a completely different mechanism.  With
    ``via_identity`` the ladder values come from eta_reconstructed instead
    of direct summation, exercising the quadrature-form assembly.
    """
    s = _require_finite(s)
    if s.real <= 0.0:
        raise ValueError(f"need Re(s) > 0 for the alternating series, got {s!r}")
    if start < 1 or levels < 1:
        raise ValueError("start and levels must be positive")
    if via_identity:
        values = [eta_reconstructed(start * (1 << i), s) for i in range(levels + 1)]
    else:
        values = [eta_partial(2 * start * (1 << i), s).value for i in range(levels + 1)]
    for j in range(levels):
        r = pow_neg(2, s + j)  # 2**-(s+j)
        values = [(values[i + 1] - r * values[i]) / (1.0 - r) for i in range(len(values) - 1)]
    return values[0]
