"""Deterministic complex arithmetic primitives.

Everything downstream sums terms of the form n**(-s) for complex s, so the
two things this module must get right are (a) an exponent kernel whose
conjugation symmetry is exact in floating point, and (b) a fixed-order
compensated accumulator with a defensible bound on its own rounding error.

All arithmetic is IEEE binary64.  Results depend only on the inputs, never
on scheduling: every function here is pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, exp, fabs, isfinite, log, sin
from typing import Iterable

#: binary64 machine epsilon (spacing of doubles just above 1).
MACHINE_EPSILON = 2.0 ** -52


@dataclass(frozen=True)
class SumResult:
    """Value of a finite sum plus bookkeeping from the accumulation.

    ``err_bound`` is a first-order bound on the accumulated rounding error
    of ``value``; ``abs_sum`` is the sum of the magnitudes of the summed
    terms, the natural scale against which identity residuals are judged;
    ``terms`` is the number of terms actually summed.
    """

    value: complex
    err_bound: float
    terms: int
    abs_sum: float = 0.0


def _require_finite(s: complex, what: str = "s") -> complex:
    s = complex(s)
    if not (isfinite(s.real) and isfinite(s.imag)):
        raise ValueError(f"{what} must be finite, got {s!r}")
    return s


def _exp_neg_parts(sigma: float, t: float, ln_x: float) -> tuple[float, float, float]:
    """Real part, imaginary part, and magnitude of exp(-(sigma + it) * ln_x).

    The sine is evaluated on |phase| and the sign restored explicitly, so
    conjugating the exponent negates the imaginary part bit for bit; the
    cosine is even, so the real part is untouched.  That makes conjugation
    symmetry of every downstream sum exact rather than libm-dependent.
    """
    mag = exp(-sigma * ln_x)
    phase = -t * ln_x
    ap = fabs(phase)
    sn = sin(ap)
    if phase < 0.0:
        sn = -sn
    return mag * cos(ap), mag * sn, mag


def pow_neg(n: int, s: complex) -> complex:
    """n**(-s) computed as exp(-s log n) in the working precision.

    n is a positive integer, so the real logarithm is the only branch.
    Deterministic: identical inputs give bit-identical outputs.  Raises
    OverflowError if n**(-Re(s)) exceeds the binary64 range; no non-finite
    value is ever returned.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    s = _require_finite(s)
    re, im, _ = _exp_neg_parts(s.real, s.imag, log(n))
    return complex(re, im)


class _Accumulator:
    """Kahan-compensated accumulator for a stream of complex terms.

    Each component carries its own compensation term.  The error bound uses
    the classic compensated-summation result: the computed sum equals the
    exact sum of terms perturbed relatively by at most 2u + O(n u^2), so

        |error| <= (2 eps + n eps^2) * (sum |re_i| + sum |im_i|)

    which also absorbs the rounding of the magnitude tallies themselves.
    """

    __slots__ = ("s_re", "c_re", "s_im", "c_im", "abs_re", "abs_im", "abs_sum", "n")

    def __init__(self) -> None:
        self.s_re = self.c_re = self.s_im = self.c_im = 0.0
        self.abs_re = self.abs_im = self.abs_sum = 0.0
        self.n = 0

    def add(self, re: float, im: float, mag: float) -> None:
        y = re - self.c_re
        t = self.s_re + y
        self.c_re = (t - self.s_re) - y
        self.s_re = t
        y = im - self.c_im
        t = self.s_im + y
        self.c_im = (t - self.s_im) - y
        self.s_im = t
        self.abs_re += fabs(re)
        self.abs_im += fabs(im)
        self.abs_sum += mag
        self.n += 1

    def result(self) -> SumResult:
        bound = (2.0 * MACHINE_EPSILON + self.n * MACHINE_EPSILON * MACHINE_EPSILON) * (
            self.abs_re + self.abs_im
        )
        return SumResult(complex(self.s_re, self.s_im), bound, self.n, self.abs_sum)


def sum_fixed_order(terms: Iterable[complex]) -> SumResult:
    """Sum ``terms`` in the given order with per-component compensation.

    Order is part of the contract: equal sequences give bit-identical
    results across runs and callers, and permuting the sequence may change
    the result.  The empty sequence sums to zero with a zero error bound.
    Raises ValueError on the first non-finite term, identifying its index.
    """
    acc = _Accumulator()
    for i, z in enumerate(terms):
        z = complex(z)
        if not (isfinite(z.real) and isfinite(z.imag)):
            raise ValueError(f"non-finite term at index {i}: {z!r}")
        acc.add(z.real, z.imag, abs(z))
    return acc.result()
