"""Brute-force oracles and lemma checkers.

Every check appends one record per assertion to a :class:`VerificationReport`.
The oracle side of an identity check enumerates the dual code by brute force
and never touches a transform kernel; the transform side never enumerates a
dual.  Character sums are accumulated as :class:`CyclotomicSum` values so
that comparisons with closed forms are exact.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .code import (
    DEFAULT_BUDGET,
    LinearCode,
    _decode,
    alpha_distribution,
    composition,
    composition_distribution,
    dual_brute,
    joint_statistics,
    profile_distribution,
)
from .cyclotomic import CyclotomicSum
from .enumerators import (
    hamming_enumerator,
    joint_enumerator,
    joint_macwilliams,
    krawtchouk,
    lee_enumerator,
    lee_kernel,
    lee_kernel_by_matrices,
    lee_macwilliams,
    macwilliams_hamming,
    split_enumerator,
    split_macwilliams,
    g_kernel,
    h_kernel,
    split_kernel,
    theta_poly,
)
from .errors import BudgetExceededError, SpottyError
from .poly import MultiPoly
from .ring import make_ring, principal_ideal
from .weights import SpottyParams, ceil_div, jkl, m_spotty_hamming_weight, spotty_case

IDENTITY_KINDS = ("hamming", "joint_i", "joint_ii", "joint_iii", "split", "lee")

SWEEP_RINGS = (
    ("IntegersMod", 4),
    ("IntegersMod", 6),
    ("PrimeField", 5),
    ("ChainRing", 2, 2),
    ("ChainRing", 2, 3),
    ("Rk", 1),
    ("Rk", 2),
)


@dataclass
class VerificationReport:
    """Flat list of assertion records; failing records carry a counterexample."""

    suite: str
    records: list = field(default_factory=list)

    def record(self, check, passed, instance=None, expected=None, actual=None):
        rec = {"suite": self.suite, "check": check, "passed": bool(passed)}
        if instance is not None:
            rec["instance"] = instance
        if not passed:
            rec["expected"] = _jsonable(expected)
            rec["actual"] = _jsonable(actual)
        self.records.append(rec)
        return bool(passed)

    def extend(self, other):
        self.records.extend(other.records)
        return self

    @property
    def passed(self):
        return all(r["passed"] for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r["passed"]]

    def __len__(self):
        return len(self.records)

    def summary(self):
        return f"{self.suite}: {len(self.records) - len(self.failures)}/{len(self.records)} passed"

    def to_jsonl(self):
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)

    def write_jsonl(self, stream=None, failures_only=False):
        stream = stream or sys.stdout
        for r in self.failures if failures_only else self.records:
            stream.write(json.dumps(r, sort_keys=True) + "\n")


def _jsonable(v):
    if isinstance(v, MultiPoly):
        return v.to_text()
    if isinstance(v, CyclotomicSum):
        return {"m": v.m, "counts": list(v.counts)}
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def describe(code, t=None, other=None):
    """JSON-ready description of an instance, enough to rebuild it."""
    out = {
        "ring": str(code.ring.spec),
        "b": code.b,
        "n": code.n,
        "C": [[int(x) for x in g] for g in code.generators],
    }
    if other is not None:
        out["D"] = [[int(x) for x in g] for g in other.generators]
    if t is not None:
        out["t"] = t
    return out


# -- character lemmas --------------------------------------------------------------------


def _all_vectors(ring, b, budget):
    total = ring.size ** b
    if total > budget:
        raise BudgetExceededError("byte enumeration", total, budget)
    return _decode(np.arange(total, dtype=np.int64), ring.size, b)


def _support_masks(vectors):
    b = vectors.shape[1]
    return ((vectors != 0).astype(np.int64) << np.arange(b, dtype=np.int64)).sum(axis=1)


def _csum(m, counts):
    return CyclotomicSum(m, counts)


def check_character_lemmas(ring, b, samples=None, seed=0, budget=DEFAULT_BUDGET, report=None):
    """Character-sum lemmas for every byte c of R^b (or ``samples`` random ones).

    Checked per ring: sum_r chi(a r) and sums over nonzero ideals.  Checked
    per byte c of weight j: the sum over vectors with a fixed support inside
    supp(c) is (-1)^p; sums over all vectors supported in a p-subset of
    supp(c) vanish; the S_p, S-bar_p and S_{j1,j2} sums; and the full-byte
    sum against z^ceil(w/t) for every t.
    """
    rep = report if report is not None else VerificationReport("lemmas")
    m, ell = ring.char_order, ring.size
    inst = {"ring": str(ring.spec), "b": b}
    el = ring.elements()
    for a in el.tolist():
        s = CyclotomicSum.from_exponents(m, ring.char_exponent(ring.mul(a, el)))
        want = ell if a == 0 else 0
        rep.record("sum_r chi(ar)", s == want, dict(inst, a=a), want, s)
    ideals = {tuple(principal_ideal(ring, a).tolist()) for a in el.tolist() if a}
    if ell <= 16:
        for i1, i2 in combinations(sorted(ideals), 2):
            ideals.add(tuple(np.unique(ring.add(np.array(i1)[:, None], np.array(i2)[None, :])).tolist()))
    for ideal in sorted(ideals):
        s = CyclotomicSum.from_exponents(m, ring.char_exponent(np.array(ideal)))
        rep.record("ideal character sum vanishes", s == 0, dict(inst, ideal=list(ideal)), 0, s)

    V = _all_vectors(ring, b, budget)
    if ring.size ** (2 * b) > budget and samples is None:
        samples = max(1, budget // V.shape[0])
    vmask = _support_masks(V)
    popc = np.array([bin(x).count("1") for x in range(1 << b)])
    vw = popc[vmask]
    if samples is None:
        bytes_c = V
    else:
        rng = np.random.default_rng(seed)
        bytes_c = V[rng.choice(V.shape[0], size=min(samples, V.shape[0]), replace=False)]
    for c in bytes_c:
        cinst = dict(inst, c=[int(x) for x in c])
        E = ring.char_exponent(ring.inner_product(np.broadcast_to(c, V.shape), V))
        table = np.zeros((1 << b, m), dtype=np.int64)
        np.add.at(table, (vmask, E), 1)
        cm = int(_support_masks(c[None, :])[0])
        j = int(popc[cm])

        def total(pred):
            sel = [s for s in range(1 << b) if pred(s)]
            return _csum(m, table[sel].sum(axis=0).tolist())

        # fixed support I inside supp(c)
        for s in range(1 << b):
            if s & ~cm:
                continue
            want = (-1) ** int(popc[s])
            rep.record("fixed-support sum is (-1)^p", total(lambda x: x == s) == want, dict(cinst, support=s), want,
                       total(lambda x: x == s))
            if s:
                got = total(lambda x: x & ~s == 0)
                rep.record("sum over supp(v) in p-subset of supp(c) vanishes", got == 0, dict(cinst, support=s), 0, got)
        for p in range(b + 1):
            got = total(lambda x: x & ~cm == 0 and popc[x] == p)
            want = (-1) ** p * comb(j, p)
            rep.record("S_p(c) sum", got == want, dict(cinst, p=p), want, got)
            got = total(lambda x: x & cm == 0 and popc[x] == p)
            want = (ell - 1) ** p * comb(b - j, p)
            rep.record("S-bar_p(c) sum", got == want, dict(cinst, p=p), want, got)
        for j1 in range(j + 1):
            for j2 in range(b - j + 1):
                got = total(lambda x: popc[x & cm] == j1 and popc[x & ~cm] == j2)
                want = (-1) ** j1 * (ell - 1) ** j2 * comb(j, j1) * comb(b - j, j2)
                rep.record("S_{j1,j2}(c) sum", got == want, dict(cinst, j1=j1, j2=j2), want, got)
        for t in range(1, b + 1):
            ok = True
            got_poly, want_poly = {}, {}
            for e in range(ceil_div(b, t) + 1):
                got = total(lambda x: ceil_div(int(popc[x]), t) == e)
                want = sum(
                    (-1) ** j1 * (ell - 1) ** j2 * comb(j, j1) * comb(b - j, j2)
                    for j1 in range(j + 1)
                    for j2 in range(b - j + 1)
                    if ceil_div(j1 + j2, t) == e
                )
                got_poly[e] = got.as_integer()
                want_poly[e] = want
                ok &= got == want
            rep.record("full-byte sum vs closed form", ok, dict(cinst, t=t), want_poly, got_poly)
    return rep


def check_ceiling_split(tmax=8, report=None):
    """ceil((a+b)/t) = floor(a/t) + floor(b/t) + case, with the three-branch case."""
    rep = report if report is not None else VerificationReport("lemmas")
    for t in range(1, tmax + 1):
        bad = []
        for a in range(3 * t):
            for b in range(3 * t):
                s = a % t + b % t
                case = 0 if s == 0 else (1 if s <= t else 2)
                if ceil_div(a + b, t) != a // t + b // t + case or spotty_case(a, b, t) != case:
                    bad.append((a, b))
        rep.record("ceiling split into floors", not bad, {"t": t}, [], bad[:5])
    return rep


def check_pair_weight_split(ring=None, bmax=3, budget=DEFAULT_BUDGET, report=None):
    """J + L = w_M(v) and K + L = w_M(u) for every pair of bytes, every t."""
    rep = report if report is not None else VerificationReport("lemmas")
    ring = ring or make_ring("Rk", 1)
    for b in range(1, bmax + 1):
        V = _all_vectors(ring, b, budget)
        U = np.repeat(V, V.shape[0], axis=0)
        W = np.tile(V, (V.shape[0], 1))
        for t in range(1, b + 1):
            params = SpottyParams(b, t)
            J, K, L = jkl(U, W, params)
            wu = m_spotty_hamming_weight(U, params)
            wv = m_spotty_hamming_weight(W, params)
            ok_v = np.array_equal(J + L, wv)
            ok_u = np.array_equal(K + L, wu)
            rep.record("J + L = w_M(v), K + L = w_M(u)", ok_v and ok_u, {"ring": str(ring.spec), "b": b, "t": t},
                       True, [ok_v, ok_u])
    return rep


# -- joint enumerator properties ----------------------------------------------------------


def check_joint_properties(C, D, t=1, budget=DEFAULT_BUDGET, report=None):
    rep = report if report is not None else VerificationReport("joint_properties")
    inst = describe(C, t, D)
    J = joint_enumerator(C, D, t, budget=budget)
    JD = joint_enumerator(D, C, t, budget=budget)
    rep.record("J(1,1,1) = |C||D|", J.value_at_ones() == C.size * D.size, inst, C.size * D.size, J.value_at_ones())
    swapped = J.evaluate({"x": "y", "y": "x"})
    rep.record("J_(D,C)(x,y,z) = J_(C,D)(y,x,z)", JD == swapped, inst, swapped, JD)
    wc = hamming_enumerator(C, t) * D.size
    got = J.evaluate({"x": 1, "y": "z"})
    rep.record("|D| W_C(z) = J(1,z,z)", got == wc, inst, wc, got)
    wd = hamming_enumerator(D, t) * C.size
    got = J.evaluate({"x": "z", "y": 1})
    rep.record("|C| W_D(z) = J(z,1,z)", got == wd, inst, wd, got)
    return rep


# -- Lee kernel -------------------------------------------------------------------------------


def lee_character_sum(ring, u, t, vectors=None):
    """sum over v in R^b of chi(<u, v>) z^ceil(w_L(v)/t), by enumeration."""
    u = np.asarray(u, dtype=np.int64)
    b = u.shape[0]
    V = _all_vectors(ring, b, DEFAULT_BUDGET) if vectors is None else vectors
    sign = 1 - 2 * ring.char_exponent(ring.inner_product(np.broadcast_to(u, V.shape), V))
    w = ceil_div(ring.lee_weight(V).sum(axis=1), t)
    counts = np.zeros(int(w.max()) + 1, dtype=np.int64)
    np.add.at(counts, w, sign)
    return MultiPoly.from_counts("z", counts.tolist())


def check_lee_kernel(ring, b, t=None, samples=None, seed=0, budget=DEFAULT_BUDGET, report=None):
    """Direct character-weighted Lee sums equal lee_kernel(composition(u))."""
    rep = report if report is not None else VerificationReport("lemmas")
    V = _all_vectors(ring, b, budget)
    ts = range(1, b + 1) if t is None else [t]
    if samples is None:
        bytes_u = V
    else:
        rng = np.random.default_rng(seed)
        bytes_u = V[rng.choice(V.shape[0], size=min(samples, V.shape[0]), replace=False)]
    seen = {}
    for u in bytes_u:
        comp = composition(ring, u)
        for tt in ts:
            got = lee_character_sum(ring, u, tt, V)
            want = lee_kernel(comp, ring, tt)
            inst = {"ring": str(ring.spec), "b": b, "t": tt, "u": [int(x) for x in u]}
            rep.record("Lee character sum = g_J", got == want, inst, want, got)
            prev = seen.setdefault((comp, tt), got)
            rep.record("Lee sum depends only on composition", prev == got, inst, prev, got)
    return rep


# -- kernel oracles -----------------------------------------------------------------------------


def _representative_bytes(ring, b, nu, mu, delta, value=1):
    """Bytes c, d of weights nu, mu overlapping in delta positions (nonzero entries = ``value``)."""
    c = np.zeros(b, dtype=np.int64)
    d = np.zeros(b, dtype=np.int64)
    c[:nu] = value
    d[nu - delta:nu - delta + mu] = value
    return c, d


def _pattern_poly(m, weights, U, V, t):
    """sum over rows of chi-weight * x^J y^K z^L, coefficients reduced exactly."""
    params = SpottyParams(U.shape[1], t)
    J, K, L = jkl(U, V, params)
    acc = {}
    for j, k, l, e in zip(np.atleast_1d(J).tolist(), np.atleast_1d(K).tolist(), np.atleast_1d(L).tolist(),
                          weights.tolist()):
        key = (j, k, l)
        acc.setdefault(key, [0] * m)[e % m] += 1
    terms = {}
    for (j, k, l), counts in acc.items():
        val = CyclotomicSum(m, counts).as_integer()
        if val is None:
            raise ArithmeticError(f"irrational kernel coefficient at x^{j} y^{k} z^{l}")
        if val:
            terms[(j, k, l)] = val
    out = MultiPoly()
    for (j, k, l), c in terms.items():
        out = out + MultiPoly.monomial({"x": j, "y": k, "z": l}, c)
    return out


def g_kernel_oracle(ring, b, nu, mu, delta, t=1, value=1):
    """sum over w in R^b of chi(<c, w>) x^J(w,v) y^K(w,v) z^L(w,v) by enumeration."""
    c, v = _representative_bytes(ring, b, nu, mu, delta, value)
    W = _all_vectors(ring, b, DEFAULT_BUDGET)
    E = ring.char_exponent(ring.inner_product(np.broadcast_to(c, W.shape), W))
    return _pattern_poly(ring.char_order, np.asarray(E), W, np.broadcast_to(v, W.shape), t)


def h_kernel_oracle(ring, b, mu, nu, delta, t=1, value=1):
    """sum over (u, v) of chi(<c, u>) chi(<d, v>) x^J(u,v) y^K(u,v) z^L(u,v), wt c = nu, wt d = mu."""
    c, d = _representative_bytes(ring, b, nu, mu, delta, value)
    V = _all_vectors(ring, b, DEFAULT_BUDGET)
    U = np.repeat(V, V.shape[0], axis=0)
    W = np.tile(V, (V.shape[0], 1))
    e1 = np.asarray(ring.char_exponent(ring.inner_product(np.broadcast_to(c, U.shape), U)))
    e2 = np.asarray(ring.char_exponent(ring.inner_product(np.broadcast_to(d, W.shape), W)))
    return _pattern_poly(ring.char_order, e1 + e2, U, W, t)


def check_joint_kernels(ring, b, report=None, values=None):
    """g_kernel and h_kernel against the enumerated character sums, all (nu, mu, delta, t)."""
    rep = report if report is not None else VerificationReport("kernels")
    ell = ring.size
    values = values or [1]
    for t in range(1, b + 1):
        for nu in range(b + 1):
            for mu in range(b + 1):
                for delta in range(max(0, nu + mu - b), min(nu, mu) + 1):
                    for val in values:
                        inst = {"ring": str(ring.spec), "b": b, "t": t, "nu": nu, "mu": mu, "delta": delta, "value": val}
                        want = g_kernel_oracle(ring, b, nu, mu, delta, t, val)
                        got = g_kernel(nu, mu, delta, b, ell, t)
                        rep.record("G kernel = enumerated sum", got == want, inst, want, got)
                        want = h_kernel_oracle(ring, b, mu, nu, delta, t, val)
                        got = h_kernel(mu, nu, delta, b, ell, t)
                        rep.record("H kernel = enumerated sum", got == want, inst, want, got)
    return rep


# -- duality ------------------------------------------------------------------------------------


def check_duality(code, budget=DEFAULT_BUDGET, report=None, dual=None):
    rep = report if report is not None else VerificationReport("duality")
    inst = describe(code)
    dual = dual if dual is not None else dual_brute(code, budget)
    total = code.ring.size ** code.N
    rep.record("|C||C-perp| = l^N", code.size * dual.size == total, inst, total, code.size * dual.size)
    back = dual_brute(dual, budget)
    rep.record("(C-perp)-perp = C", back.same_codewords(code), inst, code.size, back.size)
    return rep


# -- identities ---------------------------------------------------------------------------------


class _Duals:
    """Brute-force duals, computed once per code."""

    def __init__(self, budget):
        self.budget = budget
        self._cache = {}

    def __call__(self, code):
        d = self._cache.get(id(code))
        if d is None:
            d = dual_brute(code, self.budget)
            self._cache[id(code)] = (code, d)
            return d
        return d[1]


def check_identity(kind, C, D=None, t=1, budget=DEFAULT_BUDGET, report=None, duals=None):
    """Transform output versus the direct enumerator of the brute-force dual."""
    rep = report if report is not None else VerificationReport("identities")
    duals = duals or _Duals(budget)
    ring, b = C.ring, C.b
    ell = ring.size
    inst = dict(describe(C, t, D), kind=kind)
    if kind == "hamming":
        got = macwilliams_hamming(alpha_distribution(C), C.size, b, ell, t)
        want = hamming_enumerator(duals(C), t)
    elif kind == "split":
        got = split_macwilliams(profile_distribution(C), C.size, b, ell, t)
        want = split_enumerator(duals(C), t)
    elif kind == "lee":
        got = lee_macwilliams(composition_distribution(C), C.size, ring, t)
        want = lee_enumerator(duals(C), t)
    elif kind in ("joint_i", "joint_ii", "joint_iii"):
        if D is None:
            raise ValueError("joint identities need a second code")
        stats = joint_statistics(C, D, budget=budget)
        which = {"joint_i": "dual_c", "joint_ii": "dual_d", "joint_iii": "dual_both"}[kind]
        got = joint_macwilliams(which, stats, C.size, D.size, b, ell, t)
        left = duals(C) if kind in ("joint_i", "joint_iii") else C
        right = duals(D) if kind in ("joint_ii", "joint_iii") else D
        want = joint_enumerator(left, right, t, budget=budget)
    else:
        raise ValueError(f"unknown identity kind {kind!r}")
    rep.record(f"{kind} transform = enumerator of brute-force dual", got == want, inst, want, got)
    return rep


def check_involution(C, t=1, budget=DEFAULT_BUDGET, report=None, duals=None):
    """Transforming W twice (sizes |C| then l^N/|C|) returns W."""
    rep = report if report is not None else VerificationReport("identities")
    duals = duals or _Duals(budget)
    ell, b = C.ring.size, C.b
    once = macwilliams_hamming(alpha_distribution(C), C.size, b, ell, t)
    d = duals(C)
    twice = macwilliams_hamming(alpha_distribution(d), d.size, b, ell, t)
    w = hamming_enumerator(C, t)
    rep.record("hamming transform twice is the identity", twice == w and once == hamming_enumerator(d, t),
               describe(C, t), w, twice)
    return rep


# -- kernel vanishing ------------------------------------------------------------------------------


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def check_kernel_vanishing(bmax=4, ells=(4, 16), report=None, lee=True):
    """Every kernel evaluated at all-ones is l^b (or l^2b) at the zero byte and 0 elsewhere."""
    rep = report if report is not None else VerificationReport("kernels")
    rk = {4: make_ring("Rk", 1), 16: make_ring("Rk", 2)}
    for ell in ells:
        for b in range(1, bmax + 1):
            for t in range(1, b + 1):
                inst = {"l": ell, "b": b, "t": t}
                for j in range(b + 1):
                    want = ell ** b if j == 0 else 0
                    v = theta_poly(j, b, ell, t).value_at_ones()
                    rep.record("theta_j(1)", v == want, dict(inst, j=j), want, v)
                    v = split_kernel(j, b, ell, t).value_at_ones()
                    rep.record("g_j(1,1)", v == want, dict(inst, j=j), want, v)
                for nu in range(b + 1):
                    for mu in range(b + 1):
                        for delta in range(max(0, nu + mu - b), min(nu, mu) + 1):
                            k = dict(inst, nu=nu, mu=mu, delta=delta)
                            want = ell ** b if nu == 0 else 0
                            v = g_kernel(nu, mu, delta, b, ell, t).value_at_ones()
                            rep.record("G(1,1,1)", v == want, k, want, v)
                            want = ell ** (2 * b) if nu == mu == 0 else 0
                            v = h_kernel(mu, nu, delta, b, ell, t).value_at_ones()
                            rep.record("H(1,1,1)", v == want, k, want, v)
                if lee and ell in rk:
                    ring = rk[ell]
                    bad = []
                    for comp in _compositions(b, ring.size):
                        want = ell ** b if comp[0] == b else 0
                        v = lee_kernel(comp, ring, t).value_at_ones()
                        if v != want:
                            bad.append((comp, want, v))
                    rep.record("g_J(1)", not bad, inst, [], bad[:5])
    return rep


def check_lee_kernel_forms(ring, b, t=1, report=None):
    """Row-factored Lee kernel equals the literal sum over count matrices."""
    rep = report if report is not None else VerificationReport("kernels")
    for comp in _compositions(b, ring.size):
        got = lee_kernel(comp, ring, t)
        want = lee_kernel_by_matrices(comp, ring, t)
        rep.record("g_J factored = matrix sum", got == want, {"ring": str(ring.spec), "J": list(comp), "t": t},
                   want, got)
    return rep


def check_krawtchouk_orthogonality(b, ell, report=None):
    """sum_p K_p(i) K_j(p) = l^b [i = j], a standard sanity identity."""
    rep = report if report is not None else VerificationReport("kernels")
    for i in range(b + 1):
        for j in range(b + 1):
            s = sum(krawtchouk(p, i, b, ell) * krawtchouk(j, p, b, ell) for p in range(b + 1))
            want = ell ** b if i == j else 0
            rep.record("Krawtchouk orthogonality", s == want, {"b": b, "l": ell, "i": i, "j": j}, want, s)
    return rep


# -- random instances ---------------------------------------------------------------------------------


@dataclass
class Instance:
    C: LinearCode
    D: LinearCode
    t: int


def random_instances(count, seed=0, max_space=1 << 20, rings=SWEEP_RINGS):
    """``count`` random code pairs over the sweep rings with l^N <= max_space."""
    rnd = random.Random(seed)
    out = []
    while len(out) < count:
        fam, *params = rnd.choice(rings)
        ring = make_ring(fam, *params)
        b = rnd.randint(1, 3)
        n = rnd.randint(1, 2)
        if ring.size ** (b * n) > max_space:
            continue
        t = rnd.randint(1, b)

        def code():
            gens = [[rnd.randrange(ring.size) for _ in range(b * n)] for _ in range(rnd.randint(1, 2))]
            return LinearCode(ring, b, n, gens)

        out.append(Instance(code(), code(), t))
    return out


def anchor_instances():
    """Small fixed instances checked before the random sweep."""
    z4 = make_ring("IntegersMod", 4)
    z6 = make_ring("IntegersMod", 6)
    r1 = make_ring("Rk", 1)
    return [
        Instance(LinearCode(z4, 2, 1, [[1, 1]]), LinearCode(z4, 2, 1, [[2, 0]]), 1),
        Instance(LinearCode(z4, 1, 1, [[2]]), LinearCode(z4, 1, 1, [[1]]), 1),
        Instance(LinearCode(z6, 2, 1, [[2, 3]]), LinearCode(z6, 2, 1, [[3, 3]]), 2),
        Instance(LinearCode(r1, 2, 2, [[1, 2, 0, 3]]), LinearCode(r1, 2, 2, [[2, 0, 2, 2]]), 2),
    ]


def identity_sweep(count=200, seed=0, budget=DEFAULT_BUDGET, report=None, anchors=True):
    rep = report if report is not None else VerificationReport("identities")
    insts = (anchor_instances() if anchors else []) + random_instances(count, seed)
    for inst in insts:
        duals = _Duals(budget)
        kinds = [k for k in IDENTITY_KINDS if k != "lee" or inst.C.ring.is_rk]
        for kind in kinds:
            try:
                check_identity(kind, inst.C, inst.D, inst.t, budget, rep, duals)
            except SpottyError as exc:
                rep.record(f"{kind} raised", False, describe(inst.C, inst.t, inst.D), "no error", repr(exc))
    return rep


def lemma_suite(seed=0, budget=DEFAULT_BUDGET, report=None):
    rep = report if report is not None else VerificationReport("lemmas")
    for fam, *params in SWEEP_RINGS:
        ring = make_ring(fam, *params)
        bmax = 2 if ring.size > 4 else 3
        for b in range(1, bmax + 1):
            check_character_lemmas(ring, b, seed=seed, budget=budget, report=rep)
    check_ceiling_split(8, rep)
    check_pair_weight_split(make_ring("Rk", 1), 3, budget, rep)
    for k, bmax in ((1, 3), (2, 3)):
        ring = make_ring("Rk", k)
        for b in range(1, bmax + 1):
            check_lee_kernel(ring, b, budget=budget, report=rep)
    for inst in anchor_instances() + random_instances(20, seed + 1, max_space=1 << 12):
        check_joint_properties(inst.C, inst.D, inst.t, budget, rep)
        check_duality(inst.C, budget, rep)
    check_duality(LinearCode(make_ring("IntegersMod", 6), 2, 1, [[2, 3]]), budget, rep)
    check_duality(LinearCode(make_ring("ChainRing", 2, 3), 2, 1, []), budget, rep)
    return rep


def run_suite(suite="all", seed=0, budget=DEFAULT_BUDGET, count=200):
    """``suite`` in {"lemmas", "kernels", "identities", "all"}."""
    rep = VerificationReport(suite)
    if suite in ("lemmas", "all"):
        lemma_suite(seed, budget, rep)
    if suite in ("kernels", "all"):
        check_kernel_vanishing(4, (4, 16), rep)
        for ring in (make_ring("Rk", 1), make_ring("Rk", 2)):
            for b in (1, 2):
                for t in range(1, b + 1):
                    check_lee_kernel_forms(ring, b, t, rep)
        for spec, b, values in (
            (("IntegersMod", 4), 1, [1, 2, 3]),
            (("IntegersMod", 4), 2, [1, 2]),
            (("IntegersMod", 6), 2, [1, 2, 3]),
            (("PrimeField", 5), 2, [1]),
            (("ChainRing", 2, 2), 2, [1, 2]),
            (("Rk", 1), 2, [1, 2]),
        ):
            check_joint_kernels(make_ring(*spec), b, rep, values)
        for b in range(1, 5):
            for ell in (2, 4, 5, 16):
                check_krawtchouk_orthogonality(b, ell, rep)
    if suite in ("identities", "all"):
        identity_sweep(count, seed, budget, rep)
        for inst in anchor_instances():
            check_involution(inst.C, inst.t, budget, rep)
    if suite not in ("lemmas", "kernels", "identities", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    return rep
