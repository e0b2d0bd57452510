"""Finite commutative Frobenius rings used as code alphabets.

Four families are supported, each with a single-integer element encoding:

* ``IntegersMod(l)``  -- Z_l, index is the residue.
* ``PrimeField(p)``   -- F_p, index is the residue.
* ``ChainRing(p, e)`` -- F_p[u]/(u^e), base-p digits of the index are the
  coefficients of 1, u, ..., u^(e-1).
* ``Rk(k)``           -- F_2[u_1..u_k]/(u_i^2), bit ``mask(A)`` of the index is
  the coefficient of the monomial u_A.  For k = 2 index p is Table-V's r_p.

Every ring carries a generating character given as an exponent map
``a -> e`` with chi(a) = zeta_m^e, where m is :attr:`Ring.char_order`.

All arithmetic methods accept Python ints or integer numpy arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import ConfigurationError, DomainError, ParseError, UnsupportedOperationError

FAMILIES = ("IntegersMod", "PrimeField", "ChainRing", "Rk")

_FAMILY_ALIASES = {
    "integersmod": "IntegersMod",
    "zmod": "IntegersMod",
    "z": "IntegersMod",
    "primefield": "PrimeField",
    "gf": "PrimeField",
    "f": "PrimeField",
    "chainring": "ChainRing",
    "chain": "ChainRing",
    "rk": "Rk",
    "r": "Rk",
}

# tables are built only below this size; larger rings use closed forms
_TABLE_LIMIT = 256


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Family name plus integer parameters, e.g. ``RingSpec("ChainRing", (2, 3))``."""

    family: str
    params: tuple

    def __post_init__(self):
        family = _FAMILY_ALIASES.get(str(self.family).lower(), self.family)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def validate(self):
        fam, ps = self.family, self.params
        if fam == "GaloisRing":
            raise ConfigurationError("Galois rings are not supported")
        if fam not in FAMILIES:
            raise ConfigurationError(f"unknown ring family {fam!r}")
        want = 2 if fam == "ChainRing" else 1
        if len(ps) != want:
            raise ConfigurationError(f"{fam} takes {want} parameter(s), got {len(ps)}")
        if fam == "IntegersMod" and ps[0] < 2:
            raise ConfigurationError("IntegersMod needs l >= 2")
        if fam == "PrimeField" and not _is_prime(ps[0]):
            raise ConfigurationError(f"PrimeField order {ps[0]} is not prime")
        if fam == "ChainRing":
            if not _is_prime(ps[0]):
                raise ConfigurationError(f"ChainRing residue characteristic {ps[0]} is not prime")
            if ps[1] < 1:
                raise ConfigurationError("ChainRing needs nilpotency index e >= 1")
        if fam == "Rk" and not 1 <= ps[0] <= 4:
            raise ConfigurationError("Rk is supported for 1 <= k <= 4")
        return self

    def __str__(self):
        return f"{self.family}({', '.join(map(str, self.params))})"


def make_ring(spec, *params):
    """Build a :class:`Ring`.

    Accepts a :class:`RingSpec` or a family name followed by its parameters::

        make_ring("Rk", 2)
        make_ring(RingSpec("IntegersMod", (4,)))
    """
    if not isinstance(spec, RingSpec):
        spec = RingSpec(spec, params)
    return _make_ring_cached(spec.validate())


_RING_CACHE = {}


def _make_ring_cached(spec):
    ring = _RING_CACHE.get(spec)
    if ring is None:
        ring = _RING_CACHE.setdefault(spec, Ring(spec))
    return ring


class Ring:
    """An immutable finite commutative Frobenius ring with a generating character."""

    def __init__(self, spec):
        self.spec = spec
        self.family = spec.family
        fam, ps = spec.family, spec.params
        if fam in ("IntegersMod", "PrimeField"):
            self.size = ps[0]
            self.char_order = ps[0]
        elif fam == "ChainRing":
            self.p, self.e = ps
            self.size = self.p ** self.e
            self.char_order = self.p
        else:
            self.k = ps[0]
            self.size = 2 ** (2 ** self.k)
            self.char_order = 2
        self._pairs = None
        if fam == "Rk":
            nbits = 2 ** self.k
            self._pairs = [(a, b) for a in range(nbits) for b in range(nbits) if a & b == 0]

    def __repr__(self):
        return f"<Ring {self.spec} size={self.size} m={self.char_order}>"

    def __eq__(self, other):
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __reduce__(self):
        return (make_ring, (self.spec,))

    @property
    def is_rk(self):
        return self.family == "Rk"

    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def check(self, a):
        arr = np.asarray(a)
        if arr.size and (arr.min() < 0 or arr.max() >= self.size):
            raise DomainError(f"element index out of range for {self.spec}: {a!r}")
        return a

    # -- closed-form arithmetic -------------------------------------------

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // self.p ** i) % self.p for i in range(self.e)]

    def _from_digits(self, ds):
        out = 0
        for i, d in enumerate(ds):
            out = out + d * self.p ** i
        return out

    def _add_closed(self, a, b):
        if self.family in ("IntegersMod", "PrimeField"):
            return (a + b) % self.size
        if self.family == "Rk":
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_closed(self, a):
        if self.family in ("IntegersMod", "PrimeField"):
            return (-a) % self.size
        if self.family == "Rk":
            return a
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def _mul_closed(self, a, b):
        if self.family in ("IntegersMod", "PrimeField"):
            return (a * b) % self.size
        if self.family == "Rk":
            out = np.zeros(np.broadcast(np.asarray(a), np.asarray(b)).shape, dtype=np.int64)
            a = np.asarray(a, dtype=np.int64)
            b = np.asarray(b, dtype=np.int64)
            for s, r in self._pairs:
                out ^= (((a >> s) & (b >> r)) & 1) << (s | r)
            return out
        da, db = self._digits(a), self._digits(b)
        dc = []
        for n in range(self.e):
            acc = 0
            for i in range(n + 1):
                acc = acc + da[i] * db[n - i]
            dc.append(acc % self.p)
        return self._from_digits(dc)

    @cached_property
    def add_table(self):
        if self.size > _TABLE_LIMIT:
            return None
        el = self.elements()
        return np.asarray(self._add_closed(el[:, None], el[None, :]), dtype=np.int64)

    @cached_property
    def mul_table(self):
        if self.size > _TABLE_LIMIT:
            return None
        el = self.elements()
        return np.asarray(self._mul_closed(el[:, None], el[None, :]), dtype=np.int64)

    @cached_property
    def neg_table(self):
        return np.asarray(self._neg_closed(self.elements()), dtype=np.int64)

    # -- public arithmetic ---------------------------------------------------

    def add(self, a, b):
        tab = self.add_table
        if tab is not None:
            out = tab[a, b]
        else:
            out = self._add_closed(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def mul(self, a, b):
        tab = self.mul_table
        if tab is not None:
            out = tab[a, b]
        else:
            out = self._mul_closed(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def neg(self, a):
        out = self._neg_closed(np.asarray(a, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def arith(self, kind, a, b=None):
        """Dispatch ``kind`` in {"add", "mul", "neg"} after range checks."""
        self.check(a)
        if kind == "neg":
            return self.neg(a)
        if b is None:
            raise DomainError(f"{kind} needs two operands")
        self.check(b)
        if kind == "add":
            return self.add(a, b)
        if kind == "mul":
            return self.mul(a, b)
        raise DomainError(f"unknown operation {kind!r}")

    # -- characters ------------------------------------------------------------

    def char_exponent(self, a):
        """Exponent e with chi(a) = zeta_m^e for the ring's generating character."""
        a = np.asarray(a, dtype=np.int64)
        if self.family in ("IntegersMod", "PrimeField"):
            out = a % self.size
        elif self.family == "ChainRing":
            out = a // self.p ** (self.e - 1)
        else:
            out = _popcount(a) & 1
        return int(out) if out.ndim == 0 else out

    @cached_property
    def char_table(self):
        return np.asarray(self.char_exponent(self.elements()), dtype=np.int64)

    def inner_product(self, u, v):
        """sum_j u_j v_j in the ring."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape[-1] != v.shape[-1]:
            raise DomainError(f"length mismatch: {u.shape[-1]} vs {v.shape[-1]}")
        self.check(u)
        self.check(v)
        prods = self.mul(u, v)
        acc = np.zeros(np.asarray(prods).shape[:-1], dtype=np.int64)
        for j in range(u.shape[-1]):
            acc = self.add(acc, np.asarray(prods)[..., j])
        return int(acc) if np.ndim(acc) == 0 else acc

    # -- Gray map and Lee weight (R_k only) ---------------------------------------

    def _require_rk(self, what):
        if not self.is_rk:
            raise UnsupportedOperationError(f"{what} is only defined over R_k, not {self.spec}")

    def gray_map(self, a):
        """Binary image of length 2^k: gray(c + d u_k) = gray(d) || gray(c + d)."""
        self._require_rk("gray_map")
        self.check(a)
        return tuple(_gray(int(a), self.k))

    @cached_property
    def lee_table(self):
        self._require_rk("lee_weight")
        if self.k <= 2:
            return np.array([sum(_gray(a, self.k)) for a in range(self.size)], dtype=np.int64)
        return _lee_weights_vectorized(self.k)

    def lee_weight(self, a):
        self._require_rk("lee_weight")
        self.check(a)
        out = self.lee_table[a]
        return int(out) if np.ndim(out) == 0 else out

    # -- literals ------------------------------------------------------------------

    def format_element(self, a):
        self.check(a)
        a = int(a)
        if self.family in ("IntegersMod", "PrimeField"):
            return str(a)
        if a == 0:
            return "0"
        terms = []
        if self.family == "ChainRing":
            for i, d in enumerate(self._digits(a)):
                d = int(d)
                if not d:
                    continue
                mono = "" if i == 0 else ("u" if i == 1 else f"u{i}")
                if not mono:
                    terms.append(str(d))
                else:
                    terms.append(mono if d == 1 else f"{d}{mono}")
            return " + ".join(terms)
        for mask in range(2 ** self.k):
            if (a >> mask) & 1:
                terms.append(_monomial_name(mask, self.k))
        return " + ".join(terms)

    def parse_element(self, text):
        return parse_element(self, text)


def _popcount(a):
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    while np.any(a):
        out += a & 1
        a = a >> 1
    return out


def _gray(a, k):
    if k == 0:
        return [a & 1]
    half = 2 ** (k - 1)
    lo = a & ((1 << half) - 1)
    hi = a >> half
    return _gray(hi, k - 1) + _gray(lo ^ hi, k - 1)


def _lee_weights_vectorized(k):
    a = np.arange(2 ** (2 ** k), dtype=np.int64)

    def rec(x, k):
        if k == 0:
            return x & 1
        half = 2 ** (k - 1)
        lo = x & ((1 << half) - 1)
        hi = x >> half
        return rec(hi, k - 1) + rec(lo ^ hi, k - 1)

    return rec(a, k)


def _monomial_name(mask, k):
    if mask == 0:
        return "1"
    if k == 2:
        return {1: "u", 2: "v", 3: "uv"}[mask]
    return "".join(f"u{i + 1}" for i in range(k) if (mask >> i) & 1)


_RK_MONO = re.compile(r"u(\d+)")


def parse_element(ring, text):
    """Parse an element literal (decimal residue, ``1+u+u2`` or ``1+u1+u1u2``).

    ``r<p>`` is also accepted for R_k and denotes the element with index p.
    """
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ParseError("empty element literal")
    fam = ring.family
    if fam in ("IntegersMod", "PrimeField"):
        if not re.fullmatch(r"\d+", s):
            raise ParseError(f"bad residue literal {text!r} for {ring.spec}")
        val = int(s)
        if val >= ring.size:
            raise ParseError(f"residue {val} out of range for {ring.spec}")
        return val
    if fam == "Rk" and re.fullmatch(r"r\d+", s):
        val = int(s[1:])
        if val >= ring.size:
            raise ParseError(f"index {val} out of range for {ring.spec}")
        return val
    if s == "0":
        return 0
    out = 0
    for term in s.split("+"):
        if not term:
            raise ParseError(f"bad element literal {text!r}")
        if fam == "ChainRing":
            m = re.fullmatch(r"(\d*)(u(\d*))?", term)
            if not m or (not m.group(1) and not m.group(2)):
                raise ParseError(f"bad chain-ring term {term!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            power = 0
            if m.group(2):
                power = int(m.group(3)) if m.group(3) else 1
            if power >= ring.e:
                continue  # u^e = 0
            digits = [0] * ring.e
            digits[power] = coeff % ring.p
            out = ring.add(out, int(ring._from_digits(digits)))
        else:
            mask = _parse_rk_monomial(term, ring.k, text)
            if mask is not None:
                out ^= 1 << mask
    return int(out)


def _parse_rk_monomial(term, k, text):
    if term == "1":
        return 0
    if k == 2 and term in ("u", "v", "uv", "vu"):
        return {"u": 1, "v": 2, "uv": 3, "vu": 3}[term]
    if k == 1 and term == "u":
        return 1
    if _RK_MONO.sub("", term):
        raise ParseError(f"bad R_k monomial {term!r} in {text!r}")
    mask = 0
    for idx in _RK_MONO.findall(term):
        i = int(idx)
        if not 1 <= i <= k:
            raise ParseError(f"variable u{i} out of range for R_{k}")
        if mask >> (i - 1) & 1:
            return None  # u_i^2 = 0
        mask |= 1 << (i - 1)
    return mask


def principal_ideal(ring, a):
    """Sorted distinct elements of aR."""
    return np.unique(np.asarray(ring.mul(a, ring.elements())))


def supports(b):
    """All subsets of range(b), by size."""
    for size in range(b + 1):
        yield from combinations(range(b), size)
