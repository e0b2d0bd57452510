"""Acceptance criteria 1-8.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` to get
one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

from spotty.code import (
    alpha_distribution,
    composition,
    composition_distribution,
    dual_brute,
    joint_statistics,
    profile_distribution,
)
from spotty.enumerators import (
    KERNELS,
    g_kernel,
    hamming_enumerator,
    joint_macwilliams,
    lee_kernel,
    lee_macwilliams,
    macwilliams_hamming,
    split_kernel,
    split_macwilliams,
    theta_poly,
)
from spotty.poly import MultiPoly
from spotty.ring import make_ring
from spotty.specfile import load_spec
from spotty.verify import (
    IDENTITY_KINDS,
    VerificationReport,
    check_kernel_vanishing,
    identity_sweep,
    lemma_suite,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
R2 = make_ring("Rk", 2)
P = MultiPoly.parse

THETA = {
    0: "1 + 720z + 3375z^2",
    1: "1 + 224z - 225z^2",
    2: "1 - 16z + 15z^2",
    3: "1 - z^2",
}

SPLIT_G = {
    0: "x^2 + 720xy + 3375y^2",
    1: "x^2 + 224xy - 225y^2",
    2: "x^2 - 16xy + 15y^2",
    3: "x^2 - y^2",
}

# (nu, mu, delta) -> G
JOINT_G = {
    (0, 0, 0): "1 + 720y + 3375y^2",
    (0, 1, 0): "x + 720xy + 3375xy^2",
    (0, 2, 0): "x + 495xy + 225z + 3375yz",
    (1, 0, 0): "1 + 224y - 225y^2",
    (1, 1, 0): "x + 224xy - 225xy^2",
    (1, 1, 1): "x + 224xy - 225xy^2",
    (1, 2, 1): "x + 239xy - 225yz - 15z",
    (2, 0, 0): "1 - 16y + 15y^2",
    (2, 1, 0): "x - 16xy + 15xy^2",
    (2, 1, 1): "x - 16xy + 15xy^2",
    (2, 2, 2): "x + z + 15yz - 17xy",
    (3, 0, 0): "1 - y^2",
    (3, 1, 1): "x - xy^2",
}

# reference Lee kernels for t = 2 and a byte whose composition produces each
LEE_REFERENCE = {
    "a": ("0,0,0", "1 + 78z + 715z^2 + 1716z^3 + 1287z^4 + 286z^5 + 13z^6"),
    "b": ("0,0,uv", "1 + 6z - 29z^2 + 36z^3 - 9z^4 - 10z^5 + 5z^6"),
    "c": ("0,uv,uv", "1 - 2z - 5z^2 + 20z^3 - 25z^4 + 14z^5 - 3z^6"),
    "d": ("0,0,u", "1 + 34z + 55z^2 - 132z^3 - 33z^4 + 66z^5 + 9z^6"),
    "e": ("0,u,uv", "1 - 6z + 15z^2 - 20z^3 + 15z^4 - 6z^5 + z^6"),
    "f": ("0,0,1", "1 + 54z + 275z^2 + 132z^3 - 297z^4 - 154z^5 - 11z^6"),
}

ALPHA_COUNTS = {
    (2, 0, 0, 0): 1, (0, 2, 0, 0): 5, (0, 0, 2, 0): 26, (0, 0, 0, 2): 64,
    (1, 1, 0, 0): 2, (1, 0, 1, 0): 1, (1, 0, 0, 1): 1, (0, 1, 1, 0): 19,
    (0, 1, 0, 1): 31, (0, 0, 1, 1): 106,
}
W_THREE_GEN = "1 + 3z + 51z^2 + 137z^3 + 64z^4"
W_DUAL_THREE_GEN = "1 + 60z + 4014z^2 + 21932z^3 + 39529z^4"

_K0, _K1 = (0, 0, 0), (2, 1, 1)
PAIR_STATS = {
    ((0, 0, 0), _K0, (0, 0, 0)): 1, ((0, 0, 0), _K1, (0, 0, 0)): 1,
    ((1, 1, 0), _K0, (0, 0, 0)): 1, ((1, 1, 0), _K1, (1, 0, 0)): 1,
    ((1, 1, 2), _K0, (0, 0, 0)): 1, ((1, 1, 2), _K1, (1, 0, 1)): 1,
    ((1, 2, 0), _K0, (0, 0, 0)): 2, ((1, 2, 0), _K1, (1, 1, 0)): 2,
    ((1, 2, 1), _K0, (0, 0, 0)): 2, ((1, 2, 1), _K1, (1, 0, 1)): 2,
    ((1, 3, 1), _K0, (0, 0, 0)): 10, ((1, 3, 1), _K1, (1, 1, 1)): 10,
    ((2, 1, 1), _K0, (0, 0, 0)): 2, ((2, 1, 1), _K1, (2, 0, 0)): 2,
    ((2, 2, 1), _K0, (0, 0, 0)): 2, ((2, 2, 1), _K1, (2, 1, 0)): 2,
    ((2, 2, 2), _K0, (0, 0, 0)): 1, ((2, 2, 2), _K1, (2, 0, 1)): 1,
    ((2, 3, 2), _K0, (0, 0, 0)): 10, ((2, 3, 2), _K1, (2, 1, 1)): 10,
}
JOINT_DUAL_C = (
    "171174300x^3y^5 + 79546455x^3y^4 + 9241586x^3y^3 + 84136x^3y^2 + 370x^3y + x^3"
    " + 1206082125x^2y^5z + 589195350x^2y^4z + 88403600x^2y^3z + 3748010x^2y^2z"
    " + 7715x^2yz + 1206082125y^6 + 760369650y^5 + 167950055y^4 + 12989596y^3"
    " + 91851y^2 + 370y + 1"
)
LEE_DUAL_C = (
    "101z^18 + 5326z^17 + 122705z^16 + 1641752z^15 + 13077404z^14 + 63554224z^13"
    " + 196381596z^12 + 398386136z^11 + 538692126z^10 + 487268316z^9 + 294389014z^8"
    " + 117912840z^7 + 30602524z^6 + 4946304z^5 + 475132z^4 + 26888z^3 + 1221z^2 + 38z + 1"
)
# published form, in which every coefficient is twice the true one
SPLIT_DUAL_C_PRINTED = (
    "2x1^2x2^2x3^2 + 392x1^2x2^2x3y3 + 630x1^2x2^2y3^2 + 94x1^2x2y2x3^2 + 46208x1^2x2y2x3y3"
    " + 187170x1^2x2y2y3^2 + 160x1^2y2^2x3^2 + 137720x1^2y2^2x3y3 + 676200x1^2y2^2y3^2"
    " + 254x1y1x2^2x3^2 + 99328x1y1x2^2x3y3 + 256770x1y1x2^2y3^2 + 37376x1y1x2y2x3^2"
    " + 25019392x1y1x2y2x3y3 + 118663680x1y1x2y2y3^2 + 146690x1y1y2^2x3^2"
    " + 107591680x1y1y2^2x3y3 + 503159550x1y1y2^2y3^2 + 84600y1^2x2^2x3y3"
    " + 606600y1^2x2^2y3^2 + 146850y1^2x2y2x3^2 + 107644800y1^2x2y2x3y3"
    " + 503229150y1^2x2y2y3^2 + 717150y1^2y2^2x3^2 + 514350600y1^2y2^2x3y3"
    " + 2412164250y1^2y2^2y3^2"
)


def _code(name, index=0):
    return load_spec(FIXTURES / name).build_all()[index]


def _byte(text):
    return [R2.parse_element(s) for s in text.split(",")]


class Outcome:
    def __init__(self):
        self.problems = []

    def expect(self, ok, what):
        if not ok:
            self.problems.append(what)


def _timed(limit, body):
    out = Outcome()
    t0 = time.perf_counter()
    body(out)
    elapsed = time.perf_counter() - t0
    out.expect(elapsed < limit, f"runtime {elapsed:.2f}s over {limit}s")
    return out, elapsed


def criterion_1(out):
    KERNELS.clear()
    for j, want in THETA.items():
        out.expect(theta_poly(j, 3, 16, 2) == P(want), f"theta_{j}")
    for j, want in SPLIT_G.items():
        out.expect(split_kernel(j, 3, 16, 2) == P(want), f"g_{j}")
    for (nu, mu, delta), want in JOINT_G.items():
        out.expect(g_kernel(nu, mu, delta, 3, 16, 2) == P(want), f"G_{nu},{mu}^{delta}")
    for name, (byte, want) in LEE_REFERENCE.items():
        out.expect(lee_kernel(composition(R2, _byte(byte)), R2, 2) == P(want), f"Lee kernel {name}")
    # g_{J_1}: two zeros and one uv; g_{J_3}: one zero and two uv
    out.expect(lee_kernel(composition(R2, _byte("uv,0,0")), R2, 2) == P(LEE_REFERENCE["b"][1]), "g_J1")
    out.expect(lee_kernel(composition(R2, _byte("uv,uv,0")), R2, 2) == P(LEE_REFERENCE["c"][1]), "g_J3")


def criterion_2(out):
    C = _code("r2_three_gens.spec")
    dist = alpha_distribution(C)
    out.expect(dist == ALPHA_COUNTS, "alpha distribution")
    W = hamming_enumerator(C, 2)
    out.expect(W == P(W_THREE_GEN), f"W = {W}")
    out.expect(W.value_at_ones() == 256, "W(1) = 256")
    Wd = macwilliams_hamming(dist, C.size, 3, 16, 2)
    out.expect(Wd == P(W_DUAL_THREE_GEN), f"W-perp = {Wd}")
    dual = dual_brute(C)
    out.expect(dual.size == 65536, f"|C-perp| = {dual.size}")
    out.expect(hamming_enumerator(dual, 2) == P(W_DUAL_THREE_GEN), "brute-force dual enumerator")


def criterion_3(out):
    C, D = load_spec(FIXTURES / "r2_pair.spec").build_all()
    stats = joint_statistics(C, D)
    out.expect(stats == PAIR_STATS, f"joint statistics ({len(stats)} rows)")
    J = joint_macwilliams("dual_c", stats, C.size, D.size, 3, 16, 2)
    out.expect(J == P(JOINT_DUAL_C), "published joint polynomial (18 terms)")
    out.expect(J.value_at_ones() == 4294967296, f"J(1,1,1) = {J.value_at_ones()}")


def criterion_4(out):
    C = _code("r2_pair_c.spec")
    L = lee_macwilliams(composition_distribution(C), C.size, R2, 2)
    out.expect(L == P(LEE_DUAL_C), "19-term Lee polynomial")
    out.expect(L.value_at_ones() == 2147483648, f"L(1) = {L.value_at_ones()}")


def criterion_5(out):
    C = _code("r2_pair_c.spec")
    S = split_macwilliams(profile_distribution(C), C.size, 3, 16, 2)
    out.expect(S.value_at_ones() == 2 ** 31, "(a) value at ones")
    out.expect(S.coefficient(x1=2, x2=2, x3=2) == 1, "(b) all-x coefficient")
    spec = S.evaluate({f"x{i}": 1 for i in (1, 2, 3)} | {f"y{i}": "z" for i in (1, 2, 3)})
    W = macwilliams_hamming(alpha_distribution(C), C.size, 3, 16, 2)
    out.expect(spec == W, "(c) x_i=1, y_i=z gives the Hamming transform")
    out.expect(S.scale(2) == P(SPLIT_DUAL_C_PRINTED), "(d) published polynomial halved")


def criterion_6(out):
    rep = identity_sweep(200, seed=0)
    kinds = {r["check"].split()[0] for r in rep.records}
    out.expect(set(IDENTITY_KINDS) <= kinds, f"kinds covered: {sorted(kinds)}")
    out.expect(len(rep.records) >= 200 * 5, f"{len(rep.records)} assertions")
    out.expect(rep.passed, f"{len(rep.failures)} failures, first: {rep.failures[:1]}")


def criterion_7(out):
    rep = lemma_suite(seed=0)
    out.expect(len(rep) > 0, "empty lemma report")
    out.expect(rep.passed, f"{len(rep.failures)} failures, first: {rep.failures[:1]}")


def criterion_8(out):
    rep = check_kernel_vanishing(4, (4, 16), VerificationReport("kernels"))
    out.expect(len(rep) > 0, "empty vanishing report")
    out.expect(rep.passed, f"{len(rep.failures)} failures, first: {rep.failures[:1]}")


CRITERIA = [
    (1, "kernel tables", criterion_1, 1.0),
    (2, "Hamming example end to end", criterion_2, 60.0),
    (3, "joint example end to end", criterion_3, 60.0),
    (4, "Lee example end to end", criterion_4, 30.0),
    (5, "split example", criterion_5, 60.0),
    (6, "oracle equivalence sweep", criterion_6, 600.0),
    (7, "lemma suite", criterion_7, 120.0),
    (8, "kernel vanishing", criterion_8, 60.0),
]


def _line(num, title, out, elapsed):
    status = "PASS" if not out.problems else "FAIL"
    detail = "" if not out.problems else " :: " + "; ".join(out.problems)
    return f"{status} criterion {num} ({title}, {elapsed:.2f}s){detail}"


@pytest.mark.parametrize("num,title,body,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, body, limit):
    out, elapsed = _timed(limit, body)
    print(_line(num, title, out, elapsed))
    assert not out.problems, _line(num, title, out, elapsed)


def main():
    failed = 0
    for num, title, body, limit in CRITERIA:
        out, elapsed = _timed(limit, body)
        print(_line(num, title, out, elapsed), flush=True)
        failed += bool(out.problems)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
