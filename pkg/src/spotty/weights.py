"""Byte-level weights, m-spotty distances and pair statistics.

Functions take a codeword as a flat sequence of element indices and a
:class:`SpottyParams` giving the byte length ``b`` and spotty parameter ``t``.
Most helpers also accept 2-D arrays (one codeword per row) and then return
one value per row.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError


@dataclass(frozen=True)
class SpottyParams:
    b: int
    t: int = 1

    def __post_init__(self):
        if self.b < 1:
            raise ConfigurationError(f"byte length must be >= 1, got {self.b}")
        if not 1 <= self.t <= self.b:
            raise ConfigurationError(f"need 1 <= t <= b, got t={self.t}, b={self.b}")

    @property
    def max_byte_weight(self):
        """ceil(b / t), the largest m-spotty weight of a single byte."""
        return ceil_div(self.b, self.t)


@dataclass(frozen=True)
class PairCounts:
    f01: int
    f10: int
    f11: int


def ceil_div(a, t):
    return -((-a) // t)


def spotty_case(a, b, t):
    """0, 1 or 2 according to how the residues of a and b mod t overflow.

    ceil((a + b) / t) == a // t + b // t + spotty_case(a, b, t).
    """
    s = np.asarray(a) % t + np.asarray(b) % t
    out = np.where(s == 0, 0, np.where(s <= t, 1, 2))
    return int(out) if out.ndim == 0 else out


def _as_bytes(u, b):
    u = np.asarray(u, dtype=np.int64)
    if u.shape[-1] % b:
        raise DomainError(f"length {u.shape[-1]} is not a multiple of b={b}")
    return u.reshape(u.shape[:-1] + (u.shape[-1] // b, b))


def byte_hamming_weights(u, b):
    """Hamming weight of every byte (the weight distribution vector w_D(u))."""
    return np.count_nonzero(_as_bytes(u, b), axis=-1)


def hamming_weight(u):
    return int(np.count_nonzero(np.asarray(u)))


def m_spotty_hamming_weight(u, params):
    """sum over bytes of ceil(w_H(byte) / t)."""
    w = ceil_div(byte_hamming_weights(u, params.b), params.t).sum(axis=-1)
    return int(w) if np.ndim(w) == 0 else w


def m_spotty_distance(u, v, params, ring=None):
    """sum over bytes of ceil(d_H(u_i, v_i) / t).

    The Hamming distance only needs positionwise inequality, so no ring is
    required; ``ring`` is accepted for symmetry with the Lee version.
    """
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise DomainError("length mismatch")
    diff = _as_bytes(u != v, params.b).sum(axis=-1)
    d = ceil_div(diff, params.t).sum(axis=-1)
    return int(d) if np.ndim(d) == 0 else d


def pair_counts(u_byte, v_byte):
    """(f01, f10, f11) for one byte pair."""
    u = np.asarray(u_byte) != 0
    v = np.asarray(v_byte) != 0
    if u.shape != v.shape:
        raise DomainError("byte length mismatch")
    return PairCounts(
        f01=int(np.count_nonzero(~u & v)),
        f10=int(np.count_nonzero(u & ~v)),
        f11=int(np.count_nonzero(u & v)),
    )


def jkl_from_counts(f01, f10, f11, t):
    """Per-byte J, K, L from pair counts, by the three-case floor formulas."""
    J = f01 // t + spotty_case(f01, f11, t)
    K = f10 // t + spotty_case(f10, f11, t)
    L = f11 // t
    return J, K, L


def jkl(u, v, params):
    """(J, K, L) of a codeword pair, summed over bytes.

    J + L equals the m-spotty weight of ``v`` and K + L that of ``u``.
    """
    u = _as_bytes(np.asarray(u) != 0, params.b)
    v = _as_bytes(np.asarray(v) != 0, params.b)
    if u.shape != v.shape:
        raise DomainError("length mismatch")
    f01 = np.count_nonzero(~u & v, axis=-1)
    f10 = np.count_nonzero(u & ~v, axis=-1)
    f11 = np.count_nonzero(u & v, axis=-1)
    J, K, L = jkl_from_counts(f01, f10, f11, params.t)
    J, K, L = (np.asarray(x).sum(axis=-1) for x in (J, K, L))
    if J.ndim == 0:
        return int(J), int(K), int(L)
    return J, K, L


def byte_lee_weights(ring, u, b):
    return ring.lee_weight(_as_bytes(u, b)).sum(axis=-1)


def m_spotty_lee_weight(ring, u, params):
    """sum over bytes of ceil(w_L(byte) / t); R_k only."""
    w = ceil_div(byte_lee_weights(ring, u, params.b), params.t).sum(axis=-1)
    return int(w) if np.ndim(w) == 0 else w


def m_spotty_lee_distance(ring, u, v, params):
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise DomainError("length mismatch")
    return m_spotty_lee_weight(ring, ring.sub(u, v), params)
