"""Weight enumerators, their transform kernels, and the MacWilliams transforms.

Direct enumerators walk the codewords of a code.  The transforms only ever
see distribution statistics of a code C (and D) and return the enumerator of
the dual, built from per-byte kernel polynomials:

=====================  =========================  ==========================
enumerator             per-byte kernel            statistics consumed
=====================  =========================  ==========================
W(z)  m-spotty         ``theta_poly``             alpha distribution
J(x,y,z) joint         ``g_kernel``/``h_kernel``  joint statistics
S(x_i,y_i) split       ``split_kernel``           profile distribution
L(z)  m-spotty Lee     ``lee_kernel``             composition distribution
=====================  =========================  ==========================

Every division by |C| or |D| happens once, at the end, and must be exact.
"""

from __future__ import annotations

import threading
from itertools import product
from math import comb, factorial

import numpy as np

from .code import (
    DEFAULT_BUDGET,
    alpha_distribution,
    combine,
    composition_distribution,
    joint_statistics,
    profile_distribution,
    support_patterns,
    _check_compatible,
)
from .errors import BudgetExceededError, ConfigurationError, UnsupportedOperationError
from .poly import MultiPoly
from .weights import SpottyParams, byte_hamming_weights, byte_lee_weights, ceil_div, spotty_case

__all__ = [
    "KernelCache",
    "KERNELS",
    "combine",
    "hamming_enumerator",
    "joint_enumerator",
    "split_enumerator",
    "lee_enumerator",
    "theta_poly",
    "g_kernel",
    "h_kernel",
    "krawtchouk",
    "split_kernel",
    "lee_kernel",
    "macwilliams_hamming",
    "joint_macwilliams",
    "split_macwilliams",
    "lee_macwilliams",
    "dual_hamming_enumerator",
    "dual_joint_enumerator",
    "dual_split_enumerator",
    "dual_lee_enumerator",
]


class KernelCache:
    """Memo table for kernel polynomials, keyed by ``(kind, *parameters)``.

    Filling is idempotent, so concurrent callers may race on a miss.
    ``put`` lets a test harness plant a value (e.g. a corrupted kernel).
    """

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key, compute):
        try:
            return self._data[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._data.setdefault(key, value)

    def put(self, key, value):
        with self._lock:
            self._data[key] = value

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data


KERNELS = KernelCache()


def _params(b, t):
    return t if isinstance(t, SpottyParams) else SpottyParams(b, t)


# -- direct enumerators ------------------------------------------------------


def hamming_enumerator(code, t=1):
    """W(z) = sum over codewords of z^{w_M(c)}."""
    params = _params(code.b, t)
    w = ceil_div(byte_hamming_weights(code.codewords, code.b), params.t).sum(axis=1)
    return MultiPoly.from_counts("z", np.bincount(w).tolist())


def joint_enumerator(C, D, t=1, budget=DEFAULT_BUDGET):
    """J(x, y, z) = sum over (u, v) in C x D of x^J(u,v) y^K(u,v) z^L(u,v)."""
    _check_compatible(C, D)
    params = _params(C.b, t)
    pc, cc = support_patterns(C)
    pd, cd = support_patterns(D)
    work = pc.shape[0] * pd.shape[0]
    if work > budget:
        raise BudgetExceededError("joint enumerator", work, budget)
    b, n, tt = C.b, C.n, params.t
    vb = pd.reshape(-1, n, b).astype(bool)
    acc = {}
    for row, cnt in zip(pc, cc):
        ub = row.reshape(n, b).astype(bool)[None, :, :]
        f01 = np.count_nonzero(~ub & vb, axis=2)
        f10 = np.count_nonzero(ub & ~vb, axis=2)
        f11 = np.count_nonzero(ub & vb, axis=2)
        J = (f01 // tt + spotty_case(f01, f11, tt)).sum(axis=1)
        K = (f10 // tt + spotty_case(f10, f11, tt)).sum(axis=1)
        L = (f11 // tt).sum(axis=1)
        for j, k, l, c2 in zip(J.tolist(), K.tolist(), L.tolist(), cd.tolist()):
            key = (j, k, l)
            acc[key] = acc.get(key, 0) + int(cnt) * c2
    return MultiPoly({_mono(_xyz(j, k, l)): c for (j, k, l), c in acc.items()})


def _xyz(j, k, l):
    return {"x": j, "y": k, "z": l}


def split_enumerator(code, t=1):
    """S(x_i, y_i) = sum_u prod_i x_i^{ceil(b/t) - w_M(u_i)} y_i^{w_M(u_i)}."""
    params = _params(code.b, t)
    top = params.max_byte_weight
    w = ceil_div(byte_hamming_weights(code.codewords, code.b), params.t)
    uniq, counts = np.unique(w, axis=0, return_counts=True)
    terms = {}
    for row, c in zip(uniq, counts):
        exps = {}
        for i, wi in enumerate(row.tolist(), start=1):
            exps[f"x{i}"] = top - wi
            exps[f"y{i}"] = wi
        terms[_mono(exps)] = int(c)
    return MultiPoly(terms)


def _mono(exps):
    return MultiPoly.monomial(exps).terms.popitem()[0]


def lee_enumerator(code, t=1):
    """L(z) = sum over codewords of z^{w_ML(u)}; R_k only."""
    if not code.ring.is_rk:
        raise UnsupportedOperationError(f"Lee enumerator needs an R_k ring, not {code.ring.spec}")
    params = _params(code.b, t)
    w = ceil_div(byte_lee_weights(code.ring, code.codewords, code.b), params.t).sum(axis=1)
    return MultiPoly.from_counts("z", np.bincount(w).tolist())


# -- kernels -----------------------------------------------------------------------


def theta_poly(j, b, ell, t=1):
    """Per-byte kernel of the m-spotty Hamming transform.

    sum_{j1<=j, j2<=b-j} (-1)^j1 (ell-1)^j2 C(j, j1) C(b-j, j2) z^ceil((j1+j2)/t)
    """
    t = _params(b, t).t
    if not 0 <= j <= b:
        raise ConfigurationError(f"need 0 <= j <= b, got j={j}, b={b}")

    def compute():
        counts = [0] * (ceil_div(b, t) + 1)
        for j1 in range(j + 1):
            for j2 in range(b - j + 1):
                counts[ceil_div(j1 + j2, t)] += (-1) ** j1 * (ell - 1) ** j2 * comb(j, j1) * comb(b - j, j2)
        return MultiPoly.from_counts("z", counts)

    return KERNELS.get(("theta", j, b, ell, t), compute)


def _check_gh_range(nu, mu, delta, b):
    if not (0 <= nu <= b and 0 <= mu <= b):
        raise ConfigurationError(f"weights out of range: nu={nu}, mu={mu}, b={b}")
    if not max(0, nu + mu - b) <= delta <= min(nu, mu):
        raise ConfigurationError(f"overlap delta={delta} infeasible for nu={nu}, mu={mu}, b={b}")


def g_kernel(nu, mu, delta, b, ell, t=1):
    """Per-byte kernel G_{nu,mu}^{(delta)}(x, y, z) of the joint transform.

    ``nu`` is the weight of the byte of C being transformed, ``mu`` the
    weight of the byte of D it is paired with and ``delta`` their overlap.
    The dual-side byte w is split by the four overlap classes of its
    positions: (alpha_1, alpha_2, alpha_3, alpha_4) nonzero entries among
    the delta shared positions, the mu - delta D-only positions, the
    nu - delta C-only positions and the b + delta - nu - mu free positions.
    """
    t = _params(b, t).t
    _check_gh_range(nu, mu, delta, b)

    def compute():
        free = b + delta - nu - mu
        terms = {}
        for a1 in range(delta + 1):
            for a2 in range(mu - delta + 1):
                for a3 in range(nu - delta + 1):
                    for a4 in range(free + 1):
                        p = a1 + a2 + a3 + a4
                        coef = (
                            comb(delta, a1) * comb(mu - delta, a2) * comb(nu - delta, a3) * comb(free, a4)
                            * (-1) ** (a1 + a3) * (ell - 1) ** (p - a1 - a3)
                        )
                        s = a1 + a2
                        xe = (mu - s) // t + spotty_case(mu - s, s, t)
                        ye = (p - s) // t + spotty_case(p - s, s, t)
                        key = (xe, ye, s // t)
                        terms[key] = terms.get(key, 0) + coef
        return MultiPoly({_mono(_xyz(*k)): c for k, c in terms.items()})

    return KERNELS.get(("G", nu, mu, delta, b, ell, t), compute)


def _compositions(total, parts):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# cell a = (a1, a2, a3, a4) in Z_2^4, with a1 / a4 marking the nonzero
# positions of the two character bytes and a2 / a3 those of the two summed bytes
_CELLS = [tuple((m >> s) & 1 for s in (3, 2, 1, 0)) for m in range(16)]


def h_kernel(mu, nu, delta, b, ell, t=1):
    """Per-byte kernel H_{mu,nu}^{(delta)}(x, y, z) for transforming both codes.

    Sums over tuples (alpha_a : a in Z_2^4) with delta cells of type a1=a4=1,
    nu of type a1=1 and mu of type a4=1; p and q count the a2 and a3 cells.
    """
    t = _params(b, t).t
    _check_gh_range(nu, mu, delta, b)

    def compute():
        sizes = {(1, 1): delta, (1, 0): nu - delta, (0, 1): mu - delta, (0, 0): b + delta - nu - mu}
        fixed = 1
        for s in sizes.values():
            fixed *= factorial(s)
        classes = list(sizes.items())
        sub = [(0, 0), (0, 1), (1, 0), (1, 1)]
        terms = {}
        choices = [list(_compositions(s, 4)) for _, s in classes]
        for pick in product(*choices):
            denom = 1
            p = q = psi = phi = 0
            for ((a1, a4), _), parts in zip(classes, pick):
                for (a2, a3), cnt in zip(sub, parts):
                    if not cnt:
                        continue
                    denom *= factorial(cnt)
                    p += a2 * cnt
                    q += a3 * cnt
                    psi += a2 * a3 * cnt
                    phi += (a1 * a2 + a3 * a4) * cnt
            coef = fixed // denom * (-1) ** phi * (ell - 1) ** (p + q - phi)
            xe = (q - psi) // t + spotty_case(q - psi, psi, t)
            ye = (p - psi) // t + spotty_case(p - psi, psi, t)
            key = (xe, ye, psi // t)
            terms[key] = terms.get(key, 0) + coef
        return MultiPoly({_mono(_xyz(*k)): c for k, c in terms.items()})

    return KERNELS.get(("H", mu, nu, delta, b, ell, t), compute)


def krawtchouk(p, j, b, ell):
    """K_p(j) = sum_a (-1)^a (ell-1)^(p-a) C(j, a) C(b-j, p-a)."""
    return sum((-1) ** a * (ell - 1) ** (p - a) * _binom(j, a) * _binom(b - j, p - a) for a in range(p + 1))


def _binom(e, f):
    return comb(e, f) if 0 <= f <= e else 0


def split_kernel(j, b, ell, t=1, xname="x", yname="y"):
    """g_j(x, y) = sum_p K_p(j) x^{ceil(b/t) - ceil(p/t)} y^{ceil(p/t)}."""
    t = _params(b, t).t
    if not 0 <= j <= b:
        raise ConfigurationError(f"need 0 <= j <= b, got j={j}, b={b}")

    def compute():
        top = ceil_div(b, t)
        terms = {}
        for p in range(b + 1):
            key = _mono({xname: top - ceil_div(p, t), yname: ceil_div(p, t)})
            terms[key] = terms.get(key, 0) + krawtchouk(p, j, b, ell)
        return MultiPoly(terms)

    return KERNELS.get(("split", j, b, ell, t, xname, yname), compute)


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _lee_row(ring, p):
    """sum_q chi(r_p r_q) w^{w_L(r_q)} as a dense list in the raw Lee weight w."""
    signs = 1 - 2 * np.asarray(ring.char_exponent(ring.mul(p, ring.elements())))
    out = [0] * (2 ** ring.k + 1)
    for s, w in zip(signs.tolist(), ring.lee_table.tolist()):
        out[w] += s
    return out


def _check_composition(J, ring, b=None):
    if not ring.is_rk:
        raise UnsupportedOperationError(f"Lee kernels need an R_k ring, not {ring.spec}")
    J = tuple(int(x) for x in J)
    if len(J) != ring.size or min(J) < 0:
        raise ConfigurationError(f"composition must be {ring.size} nonnegative counts")
    if b is not None and sum(J) != b:
        raise ConfigurationError(f"composition sums to {sum(J)}, byte length is {b}")
    return J


def lee_kernel(J, ring, t=1):
    """Per-byte kernel g_J(z) of the m-spotty Lee transform.

    The sum over matrices (s_pq) with row sums j_p factors row by row: each
    row contributes (sum_q chi(r_p r_q) w^{w_L(r_q)})^{j_p} by the
    multinomial theorem, in the raw Lee weight w; the ceiling w -> z^ceil(w/t)
    is applied to the full product.
    """
    J = _check_composition(J, ring)
    b = sum(J)
    t = _params(b, t).t

    def compute():
        raw = [1]
        for p, jp in enumerate(J):
            if jp:
                row = _lee_row(ring, p)
                for _ in range(jp):
                    raw = _conv(raw, row)
        counts = [0] * (ceil_div(len(raw) - 1, t) + 1)
        for w, c in enumerate(raw):
            counts[ceil_div(w, t)] += c
        return MultiPoly.from_counts("z", counts)

    return KERNELS.get(("lee", ring.spec, J, t), compute)


def lee_kernel_by_matrices(J, ring, t=1):
    """Literal sum over all count matrices (s_pq); exponential, for cross-checks."""
    J = _check_composition(J, ring)
    b = sum(J)
    t = _params(b, t).t
    ell = ring.size
    rows = [p for p in range(ell) if J[p]]
    lee = ring.lee_table.tolist()
    counts = {}
    for pick in product(*(list(_compositions(J[p], ell)) for p in rows)):
        coef = 1
        char_arg = 0
        weight = 0
        for p, srow in zip(rows, pick):
            denom = 1
            for q, s in enumerate(srow):
                if s:
                    denom *= factorial(s)
                    weight += lee[q] * s
                    for _ in range(s % ring.char_order):
                        char_arg = ring.add(char_arg, ring.mul(p, q))
            coef *= factorial(J[p]) // denom
        coef *= -1 if ring.char_exponent(char_arg) else 1
        e = ceil_div(weight, t)
        counts[e] = counts.get(e, 0) + coef
    return MultiPoly({_mono({"z": e}): c for e, c in counts.items()})


# -- transforms ----------------------------------------------------------------------


def _product(factors):
    out = MultiPoly.const(1)
    for f in factors:
        out = out * f
    return out


def macwilliams_hamming(dist, code_size, b, ell, t=1):
    """W of the dual: (1/|C|) sum_alpha A_alpha prod_j theta_j^{alpha_j}."""
    t = _params(b, t).t
    _check_total(dist, code_size)
    total = MultiPoly()
    for alpha, count in dist.items():
        if len(alpha) != b + 1:
            raise ConfigurationError(f"alpha vector {alpha} does not have b+1 = {b + 1} entries")
        term = _product(theta_poly(j, b, ell, t) ** a for j, a in enumerate(alpha) if a)
        total = total + term * count
    return total.exact_div(code_size)


_JOINT_CASES = {
    "dual_c": "dual_c",
    "i": "dual_c",
    "C_perp_D": "dual_c",
    "dual_d": "dual_d",
    "ii": "dual_d",
    "C_D_perp": "dual_d",
    "dual_both": "dual_both",
    "iii": "dual_both",
    "C_perp_D_perp": "dual_both",
}

_SWAP_XY = {"x": "y", "y": "x"}


def joint_macwilliams(which, stats, size_c, size_d, b, ell, t=1):
    """Joint enumerator with C, D or both replaced by their duals.

    ``which`` is ``"dual_c"`` (C-perp x D), ``"dual_d"`` (C x D-perp) or
    ``"dual_both"``; ``stats`` is the output of ``joint_statistics(C, D)``.
    """
    case = _JOINT_CASES.get(which)
    if case is None:
        raise ConfigurationError(f"unknown joint transform {which!r}")
    t = _params(b, t).t
    _check_total(stats, size_c * size_d)
    total = MultiPoly()
    for (j, k, delta), count in stats.items():
        if case == "dual_c":
            factors = [g_kernel(ji, ki, di, b, ell, t) for ji, ki, di in zip(j, k, delta)]
        elif case == "dual_d":
            factors = [_swapped(g_kernel(ki, ji, di, b, ell, t)) for ji, ki, di in zip(j, k, delta)]
        else:
            factors = [_swapped(h_kernel(ji, ki, di, b, ell, t)) for ji, ki, di in zip(j, k, delta)]
        total = total + _product(factors) * count
    divisor = {"dual_c": size_c, "dual_d": size_d, "dual_both": size_c * size_d}[case]
    return total.exact_div(divisor)


def _swapped(poly):
    return KERNELS.get(("swap", poly), lambda: poly.evaluate(_SWAP_XY))


def split_macwilliams(dist, code_size, b, ell, t=1):
    """S of the dual: (1/|C|) sum A(j_1..j_n) prod_i g_{j_i}(x_i, y_i)."""
    t = _params(b, t).t
    _check_total(dist, code_size)
    total = MultiPoly()
    for prof, count in dist.items():
        factors = [split_kernel(j, b, ell, t, f"x{i}", f"y{i}") for i, j in enumerate(prof, start=1)]
        total = total + _product(factors) * count
    return total.exact_div(code_size)


def lee_macwilliams(dist, code_size, ring, t=1):
    """L of the dual: (1/|C|) sum_J A(J) prod_i g_{J_i}(z); R_k only."""
    if not ring.is_rk:
        raise UnsupportedOperationError(f"Lee transform needs an R_k ring, not {ring.spec}")
    _check_total(dist, code_size)
    total = MultiPoly()
    for comp, count in dist.items():
        total = total + _product(lee_kernel(Ji, ring, t) for Ji in comp) * count
    return total.exact_div(code_size)


def _check_total(dist, expected):
    got = sum(dist.values())
    if got != expected:
        raise ConfigurationError(f"distribution totals {got}, expected {expected}")


# -- convenience wrappers taking codes ----------------------------------------------


def dual_hamming_enumerator(code, t=1):
    return macwilliams_hamming(alpha_distribution(code), code.size, code.b, code.ring.size, t)


def dual_split_enumerator(code, t=1):
    return split_macwilliams(profile_distribution(code), code.size, code.b, code.ring.size, t)


def dual_lee_enumerator(code, t=1):
    return lee_macwilliams(composition_distribution(code), code.size, code.ring, t)


def dual_joint_enumerator(which, C, D, t=1, budget=DEFAULT_BUDGET):
    stats = joint_statistics(C, D, budget=budget)
    return joint_macwilliams(which, stats, C.size, D.size, C.b, C.ring.size, t)
