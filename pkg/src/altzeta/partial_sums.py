"""Finite Dirichlet partial sums: plain, alternating, and the upper band.

The three sums are

    zeta_partial(n, s) = sum_{m=1}^{n} m**(-s)
    eta_partial(n, s)  = sum_{m=1}^{n} (-1)**(m-1) m**(-s)
    band_sum(n, s)     = sum_{m=n+1}^{2n} m**(-s)

all entire in s and all summed in ascending m with compensated
accumulation, so results are bit-deterministic.  Term counts are capped by
a configurable limit (default ten million); exceeding it raises rather
than truncating.
"""

from __future__ import annotations

from math import log

from .kernel import SumResult, _Accumulator, _exp_neg_parts, _require_finite

#: Hard cap on the number of terms in any one sum unless overridden.
DEFAULT_MAX_TERMS = 10_000_000


def _check_request(n: int, need: int, max_terms: int | None) -> None:
    limit = DEFAULT_MAX_TERMS if max_terms is None else max_terms
    if n < 1:
        raise ValueError(f"N must be a positive integer, got {n}")
    if need > limit:
        raise ValueError(
            f"requested sum of {need} terms exceeds the configured limit of {limit}"
        )


def _power_block(sigma: float, t: float, start: int, stop: int, alternating: bool) -> SumResult:
    # Ascending fused loop; sign convention (-1)**(m-1) when alternating.
    acc = _Accumulator()
    sign = 1.0 if start % 2 == 1 else -1.0
    for m in range(start, stop + 1):
        re, im, mag = _exp_neg_parts(sigma, t, log(m))
        if alternating:
            acc.add(sign * re, sign * im, mag)
            sign = -sign
        else:
            acc.add(re, im, mag)
    return acc.result()


def zeta_partial(n: int, s: complex, *, max_terms: int | None = None) -> SumResult:
    """Partial sum of the zeta Dirichlet series, ascending over 1..n."""
    _check_request(n, n, max_terms)
    s = _require_finite(s)
    return _power_block(s.real, s.imag, 1, n, alternating=False)


def eta_partial(n: int, s: complex, *, max_terms: int | None = None) -> SumResult:
    """Partial sum of the alternating zeta Dirichlet series over 1..n."""
    _check_request(n, n, max_terms)
    s = _require_finite(s)
    return _power_block(s.real, s.imag, 1, n, alternating=True)


def band_sum(n: int, s: complex, *, max_terms: int | None = None) -> SumResult:
    """Sum over the band n+1..2n, the upper half of a 2n-term partial sum."""
    _check_request(n, n, max_terms)
    s = _require_finite(s)
    return _power_block(s.real, s.imag, n + 1, 2 * n, alternating=False)
