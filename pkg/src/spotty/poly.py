"""Sparse multivariate polynomials with exact integer coefficients.

The variable universe is fixed: ``z``, ``x``, ``y`` and the indexed families
``x1, y1, x2, y2, ...``.  Canonical term order is ascending total degree, ties
broken lexicographically along the variable sequence z, x, y, x1, y1, x2, ...
(a larger exponent on an earlier variable comes first).  Both the text and the
JSON serializations follow this order, so output is stable across runs.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Integral

from .errors import IntegralityError, ParseError

_NAMED = {"z": (0, 0), "x": (0, 1), "y": (0, 2)}
_NAMES = {v: k for k, v in _NAMED.items()}
_VAR_RE = re.compile(r"^(?:([zxy])|([xy])(\d+))$")


def var_key(name):
    """Sort key of a variable name (raises ParseError for names outside the universe)."""
    m = _VAR_RE.match(name)
    if not m:
        raise ParseError(f"unknown variable {name!r}")
    if m.group(1):
        return _NAMED[m.group(1)]
    idx = int(m.group(3))
    if idx < 1:
        raise ParseError(f"variable index must be >= 1: {name!r}")
    return (idx, 0 if m.group(2) == "x" else 1)


def var_name(key):
    if key in _NAMES:
        return _NAMES[key]
    return f"{'x' if key[1] == 0 else 'y'}{key[0]}"


def _mono_from_dict(exps):
    items = []
    for name, e in exps.items():
        e = int(e)
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            items.append((var_key(name) if isinstance(name, str) else tuple(name), e))
    items.sort()
    return tuple(items)


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(m):
    return sum(e for _, e in m)


def _term_key(m):
    return (_mono_degree(m), tuple((k, -e) for k, e in m))


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero ints.

    A monomial is a sorted tuple of ``(variable_key, exponent)`` pairs.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = int(c)
                if c:
                    if isinstance(mono, dict):
                        mono = _mono_from_dict(mono)
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self.terms = clean
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, name, power=1):
        return cls({_mono_from_dict({name: power}): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({_mono_from_dict(exps): coeff})

    @classmethod
    def from_counts(cls, name, counts):
        """sum_e counts[e] name^e, e.g. a weight histogram."""
        return cls({_mono_from_dict({name: e}): int(c) for e, c in enumerate(counts) if c})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Integral):
            return MultiPoly.const(int(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            other = int(other)
            if not other:
                return MultiPoly()
            return MultiPoly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, factor):
        """Multiply by a rational; every resulting coefficient must be an integer."""
        factor = Fraction(factor)
        out = {}
        for m, c in self.terms.items():
            v = c * factor
            if v.denominator != 1:
                raise IntegralityError(f"coefficient {c} * {factor} is not an integer")
            if v:
                out[m] = int(v)
        return MultiPoly._raw(out)

    def exact_div(self, d):
        d = int(d)
        out = {}
        for m, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise IntegralityError(f"coefficient {c} is not divisible by {d}")
            out[m] = q
        return MultiPoly._raw(out)

    # -- queries -------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def variables(self):
        keys = {k for m in self.terms for k, _ in m}
        return [var_name(k) for k in sorted(keys)]

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(_mono_degree(m) for m in self.terms)
        key = var_key(name)
        return max(dict(m).get(key, 0) for m in self.terms)

    def coefficient(self, exps=None, **kw):
        exps = dict(exps or {}, **kw)
        return self.terms.get(_mono_from_dict(exps), 0)

    def items(self):
        """(exponent dict, coefficient) pairs in canonical order."""
        for m in sorted(self.terms, key=_term_key):
            yield {var_name(k): e for k, e in m}, self.terms[m]

    def value_at_ones(self):
        return sum(self.terms.values())

    def coefficients(self, name="z"):
        """Dense coefficient list of a univariate polynomial in ``name``."""
        extra = set(self.variables()) - {name}
        if extra:
            raise ValueError(f"not univariate in {name}: also uses {sorted(extra)}")
        out = [0] * (self.degree(name) + 1 if self.terms else 0)
        for exps, c in self.items():
            out[exps.get(name, 0)] = c
        return out

    # -- substitution ------------------------------------------------------------

    def evaluate(self, assignment=None, **kw):
        """Substitute variables.

        Values may be integers, variable names (renaming) or MultiPoly objects.
        Variables absent from the assignment are left alone.
        """
        assignment = dict(assignment or {}, **kw)
        subs = {}
        for name, val in assignment.items():
            if isinstance(val, str):
                val = MultiPoly.var(val)
            elif isinstance(val, Integral):
                val = int(val)
            elif not isinstance(val, MultiPoly):
                raise TypeError(f"cannot substitute {val!r}")
            subs[var_key(name)] = val
        if not subs:
            return self
        powers = {}

        def power(key, e):
            p = powers.get((key, e))
            if p is None:
                val = subs[key]
                p = val ** e
                powers[(key, e)] = p
            return p

        acc = {}
        for m, c in self.terms.items():
            keep = []
            factor = c
            polys = []
            for k, e in m:
                if k in subs:
                    p = power(k, e)
                    if isinstance(p, int):
                        factor *= p
                    else:
                        polys.append(p)
                else:
                    keep.append((k, e))
            if not factor:
                continue
            term = MultiPoly._raw({tuple(keep): factor})
            for p in polys:
                term = term * p
            for mm, cc in term.terms.items():
                acc[mm] = acc.get(mm, 0) + cc
        return MultiPoly._raw({m: c for m, c in acc.items() if c})

    # -- serialization -------------------------------------------------------------

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = " ".join(n if e == 1 else f"{n}^{e}" for n, e in exps.items())
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    def to_json_obj(self):
        return [{"coeff": str(c), "exps": exps} for exps, c in self.items()]

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj):
        terms = {}
        for t in obj:
            mono = _mono_from_dict(t["exps"])
            terms[mono] = terms.get(mono, 0) + int(t["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text):
        return parse_poly(text)


_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+)|(?P<var>[zxy]\d*)(?:\^(?P<exp>\d+))?)")


def parse_poly(text):
    """Parse the text format back into a MultiPoly.

    Lenient on input: accepts ``x_1^2``, ``z^{3}``, ``*``/``·`` separators, the
    Unicode minus sign and juxtaposed factors such as ``239xy``.
    """
    s = str(text)
    for a, b in (("−", "-"), ("·", " "), ("*", " "), ("_", ""), ("{", ""), ("}", "")):
        s = s.replace(a, b)
    s = s.strip()
    if not s:
        raise ParseError("empty polynomial")
    terms = {}
    pos = 0
    sign = 1
    coeff = None
    mono = {}
    have_term = False

    def flush():
        nonlocal coeff, mono, have_term
        if not have_term:
            return
        c = sign * (1 if coeff is None else coeff)
        key = _mono_from_dict(mono)
        terms[key] = terms.get(key, 0) + c
        coeff, mono, have_term = None, {}, False

    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {s[pos]!r} at {pos} in {text!r}")
        pos = m.end()
        if m.group("sign"):
            tok = 1 if m.group("sign") == "+" else -1
            if have_term:
                flush()
                sign = tok
            else:
                sign *= tok
        elif m.group("num"):
            if have_term and (mono or coeff is not None):
                raise ParseError(f"missing operator before {m.group('num')!r} in {text!r}")
            coeff = int(m.group("num"))
            have_term = True
        else:
            name = m.group("var")
            var_key(name)
            e = int(m.group("exp")) if m.group("exp") else 1
            mono[name] = mono.get(name, 0) + e
            have_term = True
    if not have_term:
        raise ParseError(f"trailing operator in {text!r}")
    flush()
    return MultiPoly(terms)


def poly_arith(kind, a, b=None):
    """Dispatch ``kind`` in {"add", "mul", "scale"}."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation {kind!r}")


def z_poly(counts):
    return MultiPoly.from_counts("z", counts)
