"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its measured time and
limit; the lines are repeated in the pytest terminal summary.  Run the file
directly for the lines alone::

    python tests/test_acceptance.py
"""

import itertools
import random
import sys
import time

from quandlebounds import oracle
from quandlebounds.bounds import QuadraticForm, bounds_report, p_prime, p_prime_brute
from quandlebounds.braid import BraidWord, PowerBlockWord, parse_blocks, parse_braid_word
from quandlebounds.cocycle import shadow_invariant, shadow_multiset
from quandlebounds.errors import HypothesisNotMet
from quandlebounds.modp import is_quadratic_residue
from quandlebounds.quandle import action_matrix, coloring_space, delta_order_check
from quandlebounds.toruscover import phi_direct, phi_power_block, phi_simplified

RESULTS = []


def record(number, title, ok, elapsed, limit, detail=""):
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed * 1000:.2f} ms, limit {limit * 1000:g} ms)"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def best_of(fn, repeats=20):
    """Minimum wall time of ``fn`` over a few runs, plus its last result."""
    best, out = float("inf"), None
    for _ in range(repeats):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def test_criterion_1_generator_matrix():
    primes = [3, 5, 7, 11, 13]
    elapsed, mats = best_of(lambda: [action_matrix(BraidWord(2, ((1, 1),)), p) for p in primes])
    ok = all(M.tolist() == [[0, 1], [p - 1, 2]] for M, p in zip(mats, primes))
    record(1, "action matrix of sigma_1 on two strands", ok, elapsed / len(primes), 1e-3)


def test_criterion_2_alternating_three_braid():
    b = parse_braid_word("m=3: (s1 s2^-1)^4")

    def go():
        return action_matrix(b, 3), bounds_report(b, 3, 1, "2n")

    elapsed, (A, r) = best_of(go, 5)
    ok = A.is_identity() and r.k == 3 and r.u_lower == 2 and r.u_upper == 2 and r.u_exact == 2
    record(2, "(s1 s2^-1)^4 at p=3: A_b = I, k = 3, u = 2", ok, elapsed, 10e-3)


def test_criterion_3_power_block_family():
    ok = True
    t = time.perf_counter()
    for m, p in [(3, 3), (3, 5), (4, 3), (5, 3)]:
        w = PowerBlockWord(m, tuple((i, 1) for i in range(1, m)), p)
        r = bounds_report(w, p, 1, "ln")
        ok &= r.k == m and r.u_exact == m - 1
    record(3, "sigma_i^p block family: k = m and u = m - 1", ok, time.perf_counter() - t, 100e-3)


def test_criterion_4_crossing_convention_calibration():
    ok = True
    checked = 0
    t = time.perf_counter()
    for m, p in [(2, 3), (2, 5), (3, 3), (3, 5)]:
        for i in range(1, m):
            b = BraidWord(m, ((i, 1),) * p)
            for C in coloring_space(b, p).colorings():
                C = tuple(int(v) for v in C)
                ok &= shadow_invariant(b, C, 0, p) == -((C[i - 1] - C[i]) ** 2) % p
                checked += 1
    record(4, "shadow of sigma_i^p equals -(x_i - x_{i+1})^2", ok, time.perf_counter() - t, 1.0, f"[{checked} colorings]")


def test_criterion_5_four_block_five_braid():
    t = time.perf_counter()
    b = parse_braid_word("m=5: s1^3 s2^3 s3^3 s4^3")
    space = coloring_space(b, 3)
    ms = shadow_multiset(b, 3)
    r = bounds_report(b, 3, 1, "2n")
    elapsed = time.perf_counter() - t
    lower = {bd.rule: bd.value for bd in r.bounds if bd.quantity == "tau"}
    # the residue rule needs block input, so ask again with the block form
    rb = bounds_report(parse_blocks("m=5: 1:1 2:1 3:1 4:1", 3), 3, 1, "2n")
    lower_b = {bd.rule: bd.value for bd in rb.bounds if bd.quantity == "tau"}
    ok = (
        space.size == 3**5
        and ms.a0() == 297
        and r.k_prime == 6
        and lower.get("shadow-zero-count") == 1
        and lower_b.get("shadow-zero-count") == 1
        and lower_b.get("residue-orthogonality") == 2
    )
    record(5, "s1^3 s2^3 s3^3 s4^3 at p=3: a0 = 297, bounds 1 and 2", ok, elapsed, 5.0)


def _block_family():
    for m in (2, 3, 4):
        for p in (3, 5):
            for cs in itertools.product((-2, -1, 1, 2), repeat=m - 1):
                yield PowerBlockWord(m, tuple((i + 1, c) for i, c in enumerate(cs)), p)
            # a word with repeated and interleaved blocks
            yield PowerBlockWord(m, ((1, 1), (m - 1, -1), (1, 2)), p)


def test_criterion_6_three_way_agreement():
    ok = True
    compared = refused = 0
    t = time.perf_counter()
    for w in _block_family():
        p = w.p
        for n in range(-2, 3):
            closed = phi_power_block(w, n)
            try:
                direct = phi_direct(w, 2 * n, p)
                simplified = phi_simplified(w, 2 * n, p)
            except HypothesisNotMet:
                # even m: A_Delta^(2n) is not the identity unless p | 2n
                ok &= w.degree % 2 == 0 and n != 0
                refused += 1
                continue
            ok &= direct == simplified == closed
            compared += 1
    elapsed = time.perf_counter() - t
    record(6, "direct = simplified = closed form", ok, elapsed, 30.0, f"[{compared} compared, {refused} outside the twist hypothesis]")


def test_criterion_7_lemma_suite():
    rng = random.Random(11)
    checks = {}
    t = time.perf_counter()
    checks["delta order"] = all(
        delta_order_check(m, p) and oracle.verify_delta_lemma(m, p) for m in range(2, 7) for p in (3, 5, 7)
    )
    checks["fold"] = all(
        oracle.verify_fold_lemma(m, p, 3) for p in (3, 5, 7) for m in range(2, 11) if p**m <= 10**5
    )
    checks["twist cocycle closed form"] = all(
        oracle.verify_fp_closed_form(y, p)
        for p in (3, 5, 7)
        for k in (2, 4)
        for y in oracle.identity_twists(k, p)
    )
    words = [
        (oracle.random_word(m, rng.randint(0, 10), rng), p)
        for _ in range(6)
        for p in (3, 5, 7)
        for m in range(2, 6)
    ]
    checks["linear vanishing"] = all(oracle.verify_linear_vanishing(b, p) for b, p in words if p**b.degree <= 10**5)
    checks["base color and R_z invariance"] = all(
        oracle.verify_shadow_lemmas(b, p) for b, p in words if p ** (b.degree + 1) <= 10**5
    )
    checks["p' in {2, 3}"] = all(
        p_prime(QuadraticForm(nu, p)) in (2, 3)
        for m in (4, 5)
        for p in (3, 5, 7)
        for nu in itertools.product(range(1, p), repeat=m - 1)
    ) and all(oracle.verify_p_prime_range(m, p) for m in (4, 5) for p in (3, 5, 7))
    primes = [3, 5, 7, 11, 13, 17, 19, 23]
    checks["shifted squares"] = all(oracle.verify_shifted_square_count(p) for p in primes)
    checks["quandle axioms"] = all(oracle.verify_quandle_axioms(p) for p in (3, 5, 7))
    checks["theta cocycle"] = all(oracle.verify_theta_cocycle(p) for p in (3, 5, 7))
    elapsed = time.perf_counter() - t
    failed = [name for name, ok in checks.items() if not ok]
    record(7, "lemma suite", not failed, elapsed, 120.0, f"[failed: {failed}]" if failed else f"[{len(checks)} groups]")


def test_criterion_8_three_mod_four_end_to_end():
    ok = True
    t = time.perf_counter()
    for p in (7, 11, 19):
        r = bounds_report(parse_blocks("m=3: 1:1 2:1", p), p, 1, "2n")
        brute = p_prime_brute(QuadraticForm(r.nu, p))
        ok &= r.p_prime is None and brute is None
        ok &= r.fired("three-braid-exact") and r.fired("three-mod-four")
        ok &= all(is_quadratic_residue(v, p) for v in r.nu) and p % 4 == 3
        ok &= r.tau_exact == 2 and r.u_exact == 2
    record(8, "tau = u = 2 for p = 7, 11, 19 by both routes", ok, time.perf_counter() - t, 1.0)


def test_criterion_9_markov_invariance():
    rng = random.Random(5)
    ok = True
    t = time.perf_counter()
    for _ in range(50):
        m = rng.randint(2, 4)
        b = oracle.random_word(m, rng.randint(0, 8), rng)
        w = oracle.random_word(m, rng.randint(1, 4), rng)
        base = shadow_multiset(b, 3)
        ok &= shadow_multiset(w * b * w.inverse(), 3) == base
        ok &= shadow_multiset(b.stabilized(rng.choice((1, -1))), 3) == base
    record(9, "shadow multiset under conjugation and stabilization", ok, time.perf_counter() - t, 30.0, "[50 words]")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
