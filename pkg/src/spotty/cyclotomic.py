"""Exact character sums as integer combinations of m-th roots of unity."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _poly_divmod(num, den):
    """Integer polynomial division by a monic divisor; coefficient lists, low degree first."""
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    lead = len(den) - 1
    for i in range(len(num) - 1, lead - 1, -1):
        c = num[i]
        if c:
            out[i - lead] = c
            for j, d in enumerate(den):
                num[i - lead + j] -= c * d
    rem = num[:lead] if lead else []
    return out, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Phi_m as a tuple of integer coefficients, constant term first.

    Computed as (x^m - 1) divided by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def reduce_mod_cyclotomic(counts, m):
    """Remainder of sum_e counts[e] x^e modulo Phi_m (length deg Phi_m)."""
    phi = cyclotomic_polynomial(m)
    _, rem = _poly_divmod([int(c) for c in counts], phi)
    rem = rem + [0] * (len(phi) - 1 - len(rem))
    return rem


class CyclotomicSum:
    """sum_e counts[e] * zeta_m^e, kept as raw multiplicities.

    Equality compares the reductions modulo Phi_m, so two count vectors that
    differ by a multiple of Phi_m are the same value.
    """

    __slots__ = ("m", "counts")

    def __init__(self, m, counts=None):
        self.m = int(m)
        if counts is None:
            counts = [0] * self.m
        counts = [int(c) for c in counts]
        if len(counts) != self.m:
            raise ValueError(f"need {self.m} counts, got {len(counts)}")
        self.counts = tuple(counts)

    @classmethod
    def from_exponents(cls, m, exponents, weights=None):
        exps = np.asarray(exponents, dtype=np.int64).ravel() % m
        if weights is None:
            counts = np.bincount(exps, minlength=m)
        else:
            counts = np.zeros(m, dtype=np.int64)
            np.add.at(counts, exps, np.asarray(weights, dtype=np.int64).ravel())
        return cls(m, counts.tolist())

    @classmethod
    def integer(cls, m, value):
        return cls(m, [value] + [0] * (m - 1))

    def accumulate(self, exponent, weight=1):
        if not 0 <= exponent < self.m:
            raise ValueError(f"exponent {exponent} outside [0, {self.m})")
        counts = list(self.counts)
        counts[exponent] += weight
        return CyclotomicSum(self.m, counts)

    def __add__(self, other):
        if not isinstance(other, CyclotomicSum) or other.m != self.m:
            return NotImplemented
        return CyclotomicSum(self.m, [a + b for a, b in zip(self.counts, other.counts)])

    def reduced(self):
        return tuple(reduce_mod_cyclotomic(self.counts, self.m))

    def as_integer(self):
        """The integer value, or ``None`` when the sum is not rational."""
        rem = self.reduced()
        if any(rem[1:]):
            return None
        return rem[0] if rem else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_integer() == other
        if not isinstance(other, CyclotomicSum) or other.m != self.m:
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.m, self.reduced()))

    def __repr__(self):
        val = self.as_integer()
        if val is not None:
            return f"CyclotomicSum(m={self.m}, value={val})"
        return f"CyclotomicSum(m={self.m}, counts={self.counts})"


def accumulate(total, exponent, weight=1):
    return total.accumulate(exponent, weight)


def as_integer(total):
    return total.as_integer()
