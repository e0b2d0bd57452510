"""Linear byte codes over a ring: enumeration, brute-force duals and statistics.

Codeword sets are held as 2-D ``int64`` arrays, one codeword per row, sorted
lexicographically and free of duplicates.  The statistics helpers return plain
dicts keyed by tuples:

* alpha distribution     ``{(a_0, ..., a_b): count}``
* profile distribution   ``{(j_1, ..., j_n): count}``
* joint statistics       ``{(j, k, delta): count}`` with profile tuples
* composition distribution ``{((j_0..j_{l-1}), ...per byte): count}``
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceededError, ConfigurationError, DomainError, UnsupportedOperationError
from .weights import byte_hamming_weights

DEFAULT_BUDGET = 1 << 24

_CHUNK = 1 << 18


def _encode(rows, ell):
    """Row -> integer key, lexicographic order preserved (needs ell**N < 2**63)."""
    rows = np.asarray(rows, dtype=np.int64)
    key = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(rows.shape[1]):
        key = key * ell + rows[:, j]
    return key


def _decode(keys, ell, N):
    keys = np.asarray(keys, dtype=np.int64)
    out = np.empty((keys.shape[0], N), dtype=np.int64)
    for j in range(N - 1, -1, -1):
        out[:, j] = keys % ell
        keys = keys // ell
    return out


def _fits_int64(ell, N):
    return N * np.log2(float(ell)) < 62


def unique_rows(rows, ell, return_counts=False):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.shape[1] and _fits_int64(ell, rows.shape[1]):
        keys, counts = np.unique(_encode(rows, ell), return_counts=True)
        out = _decode(keys, ell, rows.shape[1])
    else:
        out, counts = np.unique(rows, axis=0, return_counts=True)
    return (out, counts) if return_counts else out


class LinearCode:
    """An R-submodule of R^N, N = n * b, given by generators.

    The codeword set is enumerated lazily (and once) from the generators.
    """

    def __init__(self, ring, b, n, generators=(), budget=DEFAULT_BUDGET, codewords=None):
        if b < 1 or n < 1:
            raise ConfigurationError(f"need b >= 1 and n >= 1, got b={b}, n={n}")
        self.ring = ring
        self.b = int(b)
        self.n = int(n)
        self.N = self.b * self.n
        self.budget = int(budget)
        gens = []
        for g in generators:
            g = np.asarray(g, dtype=np.int64).ravel()
            if g.shape[0] != self.N:
                raise DomainError(f"generator length {g.shape[0]} != n*b = {self.N}")
            ring.check(g)
            gens.append(g)
        self.generators = gens
        self._codewords = None
        if codewords is not None:
            cw = np.asarray(codewords, dtype=np.int64).reshape(-1, self.N)
            ring.check(cw)
            self._codewords = unique_rows(cw, ring.size)

    def __repr__(self):
        size = "?" if self._codewords is None else str(self.size)
        return f"<LinearCode over {self.ring.spec} b={self.b} n={self.n} |C|={size}>"

    @property
    def codewords(self):
        if self._codewords is None:
            self._codewords = _span_codewords(self.ring, self.N, self.generators, self.budget)
        return self._codewords

    @property
    def size(self):
        return int(self.codewords.shape[0])

    def __len__(self):
        return self.size

    def same_codewords(self, other):
        return (
            self.N == other.N
            and self.codewords.shape == other.codewords.shape
            and bool(np.array_equal(self.codewords, other.codewords))
        )

    def contains(self, v):
        v = np.asarray(v, dtype=np.int64).ravel()
        return bool(np.any(np.all(self.codewords == v, axis=1)))


def _span_codewords(ring, N, generators, budget):
    words = np.zeros((1, N), dtype=np.int64)
    spent = 0
    scalars = ring.elements()
    for g in generators:
        multiples = unique_rows(np.asarray(ring.mul(scalars[:, None], g[None, :])).reshape(-1, N), ring.size)
        spent += words.shape[0] * multiples.shape[0]
        if spent > budget:
            raise BudgetExceededError("span enumeration", spent, budget)
        summed = ring.add(words[:, None, :], multiples[None, :, :])
        words = unique_rows(np.asarray(summed).reshape(-1, N), ring.size)
    return words


def span(ring, b, n, generators, budget=DEFAULT_BUDGET):
    """Code spanned by ``generators``; codewords are enumerated immediately."""
    code = LinearCode(ring, b, n, generators, budget=budget)
    code.codewords
    return code


def _orthogonal_mask(ring, vectors, generators):
    ok = np.ones(vectors.shape[0], dtype=bool)
    add_t, mul_t = ring.add_table, ring.mul_table
    for g in generators:
        acc = np.zeros(vectors.shape[0], dtype=np.int64)
        for j, gj in enumerate(g):
            if gj == 0:
                continue
            if mul_t is not None:
                acc = add_t[acc, mul_t[gj][vectors[:, j]]]
            else:
                acc = np.asarray(ring.add(acc, ring.mul(int(gj), vectors[:, j])))
        ok &= acc == 0
    return ok


def dual_brute(code, budget=None):
    """C-perp by testing every vector of R^N against the generators of C."""
    ring, N = code.ring, code.N
    budget = code.budget if budget is None else budget
    total = ring.size ** N
    if total > budget:
        raise BudgetExceededError("brute-force dual", total, budget)
    gens = [g for g in code.generators if np.any(g)]
    kept = []
    for start in range(0, total, _CHUNK):
        keys = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        vecs = _decode(keys, ring.size, N)
        kept.append(vecs[_orthogonal_mask(ring, vecs, gens)])
    words = np.concatenate(kept) if kept else np.zeros((0, N), dtype=np.int64)
    dual = LinearCode(ring, code.b, code.n, (), budget=code.budget)
    dual._codewords = words
    dual.generators = greedy_generators(ring, words)
    return dual


def greedy_generators(ring, words):
    """A generating set for the submodule with codeword rows ``words``."""
    N = words.shape[1]
    if not _fits_int64(ring.size, N):
        return [w for w in words if np.any(w)]
    keys = _encode(words, ring.size)
    span_words = np.zeros((1, N), dtype=np.int64)
    span_keys = np.zeros(1, dtype=np.int64)
    gens = []
    scalars = ring.elements()
    while True:
        missing = keys[~np.isin(keys, span_keys)]
        if not missing.size:
            return gens
        g = _decode(missing[:1], ring.size, N)[0]
        gens.append(g)
        multiples = np.asarray(ring.mul(scalars[:, None], g[None, :])).reshape(-1, N)
        span_words = unique_rows(np.asarray(ring.add(span_words[:, None, :], multiples[None, :, :])).reshape(-1, N), ring.size)
        span_keys = _encode(span_words, ring.size)


# -- statistics --------------------------------------------------------------


def _histogram(rows):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim == 1:
        rows = rows[:, None]
    if rows.shape[0] == 0:
        return {}
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    return {tuple(int(x) for x in r): int(c) for r, c in zip(uniq, counts)}


def profiles(code):
    """Hamming weight distribution vector of every codeword, shape (|C|, n)."""
    return byte_hamming_weights(code.codewords, code.b)


def alpha_distribution(code):
    prof = profiles(code)
    alpha = np.stack([(prof == j).sum(axis=1) for j in range(code.b + 1)], axis=1)
    return _histogram(alpha)


def alpha_vector(codeword, b):
    prof = byte_hamming_weights(codeword, b)
    return tuple(int((prof == j).sum()) for j in range(b + 1))


def profile_distribution(code):
    return _histogram(profiles(code))


def support_patterns(code):
    """Distinct zero/nonzero patterns of the codewords with multiplicities."""
    nz = (code.codewords != 0).astype(np.int64)
    if nz.shape[0] == 0:
        return nz, np.zeros(0, dtype=np.int64)
    return unique_rows(nz, 2, return_counts=True)


def joint_statistics(C, D, budget=DEFAULT_BUDGET):
    """A_delta(j; k) over all pairs (u, v) in C x D.

    Pairs are grouped by support pattern, which is all the profiles depend
    on; the budget bounds the number of pattern pairs examined.
    """
    _check_compatible(C, D)
    pc, cc = support_patterns(C)
    pd, cd = support_patterns(D)
    work = pc.shape[0] * pd.shape[0]
    if work > budget:
        raise BudgetExceededError("joint statistics", work, budget)
    b = C.b
    jd = byte_hamming_weights(pd, b)
    out = {}
    for row, cnt in zip(pc, cc):
        j = tuple(int(x) for x in byte_hamming_weights(row, b))
        delta = byte_hamming_weights(pd & row[None, :], b)
        keys = np.concatenate([jd, delta], axis=1)
        for key, c2 in zip(keys, cd):
            k = tuple(int(x) for x in key[: C.n])
            dl = tuple(int(x) for x in key[C.n:])
            trip = (j, k, dl)
            out[trip] = out.get(trip, 0) + int(cnt) * int(c2)
    return dict(sorted(out.items()))


def composition(ring, byte):
    """Occurrences of each ring element (canonical order) in one byte."""
    counts = np.bincount(np.asarray(byte, dtype=np.int64).ravel(), minlength=ring.size)
    return tuple(int(c) for c in counts)


def composition_distribution(code):
    ring = code.ring
    if not ring.is_rk:
        raise UnsupportedOperationError(f"compositions are only used over R_k, not {ring.spec}")
    cw = code.codewords.reshape(-1, code.n, code.b)
    onehot = np.stack([(cw == p).sum(axis=2) for p in range(ring.size)], axis=2)
    flat = onehot.reshape(cw.shape[0], -1)
    uniq, counts = np.unique(flat, axis=0, return_counts=True)
    out = {}
    for row, c in zip(uniq, counts):
        key = tuple(tuple(int(x) for x in row[i * ring.size:(i + 1) * ring.size]) for i in range(code.n))
        out[key] = int(c)
    return out


# -- combinations -------------------------------------------------------------


def _check_compatible(C, D, same_n=True):
    if C.ring != D.ring:
        raise ConfigurationError(f"codes are over different rings: {C.ring.spec} vs {D.ring.spec}")
    if C.b != D.b:
        raise ConfigurationError(f"byte lengths differ: {C.b} vs {D.b}")
    if same_n and C.n != D.n:
        raise ConfigurationError(f"byte counts differ: {C.n} vs {D.n}")


def direct_sum(C, D):
    """{(u | v) : u in C, v in D}."""
    _check_compatible(C, D, same_n=False)
    zc = np.zeros(C.N, dtype=np.int64)
    zd = np.zeros(D.N, dtype=np.int64)
    gens = [np.concatenate([g, zd]) for g in C.generators] + [np.concatenate([zc, h]) for h in D.generators]
    words = np.concatenate(
        [np.repeat(C.codewords, D.size, axis=0), np.tile(D.codewords, (C.size, 1))], axis=1
    )
    return LinearCode(C.ring, C.b, C.n + D.n, gens, budget=C.budget, codewords=words)


def _interleave(u, v, half):
    return np.concatenate([u[..., :half], v[..., :half], u[..., half:], v[..., half:]], axis=-1)


def parallel_concat(C, D):
    """{(u' | v' | u'' | v'')} where u = (u' | u''), v = (v' | v'') are split in half."""
    _check_compatible(C, D)
    if C.n % 2:
        raise ConfigurationError(f"parallel concatenation needs an even byte count, got n={C.n}")
    half = C.N // 2
    zc = np.zeros(C.N, dtype=np.int64)
    gens = [_interleave(g, zc, half) for g in C.generators] + [_interleave(zc, h, half) for h in D.generators]
    words = _interleave(np.repeat(C.codewords, D.size, axis=0), np.tile(D.codewords, (C.size, 1)), half)
    return LinearCode(C.ring, C.b, 2 * C.n, gens, budget=C.budget, codewords=words)


def combine(kind, C, D):
    if kind == "direct_sum":
        return direct_sum(C, D)
    if kind == "parallel_concat":
        return parallel_concat(C, D)
    raise ValueError(f"unknown combination {kind!r}")
