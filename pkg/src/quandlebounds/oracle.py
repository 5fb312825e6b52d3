"""Brute-force verifiers.

These walk every candidate with plain Python integers and share no code path
with the matrix and vectorized routines they check, apart from the scalar
cocycle formulas themselves.  The ``verify`` CLI subcommand runs them.
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, List, Sequence, Tuple

from .bounds import QuadraticForm, p_prime_brute
from .braid import BraidWord, delta_order, full_twist
from .cocycle import f_p, linear_cocycle, shadow_invariant, theta, twist_constant, two_cocycle_invariant
from .errors import BudgetExceeded, PreconditionError
from .modp import check_prime, is_quadratic_residue, shifted_squares
from .multiset import InvariantMultiset
from .quandle import apply_word, fold, qop

BRUTE_CAP = 10**7
LEMMA_CAP = 10**5


def _budget(needed: int, cap: int, what: str = "candidates"):
    if needed > cap:
        raise BudgetExceeded(needed, cap, what)


def brute_colorings(b: BraidWord, p: int, cap: int = BRUTE_CAP) -> List[Tuple[int, ...]]:
    """Every x in (Z/pZ)^m with A_b(x) = x, found by trying them all."""
    _budget(p**b.degree, cap)
    return [x for x in itertools.product(range(p), repeat=b.degree) if apply_word(b, x, p) == x]


def brute_action_matrix(b: BraidWord, p: int) -> List[List[int]]:
    """Matrix of A_b assembled column by column from images of unit vectors."""
    m = b.degree
    cols = [apply_word(b, tuple(int(r == c) for r in range(m)), p) for c in range(m)]
    return [[cols[c][r] for c in range(m)] for r in range(m)]


def theta_exact(s: int, t: int, u: int, p: int) -> int:
    """theta_p with unbounded integers, no modular shortcuts."""
    num = (2 * u - t) ** p + t**p - 2 * u**p
    assert num % p == 0
    return (s - t) * (num // p) % p


def brute_shadow_multiset(b: BraidWord, p: int, cap: int = BRUTE_CAP) -> InvariantMultiset:
    """Psi* over every (coloring, base color) pair, no base-color shortcut."""
    _budget(p ** (b.degree + 1), cap)
    values = [shadow_invariant(b, C, x, p) for C in brute_colorings(b, p) for x in range(p)]
    return InvariantMultiset.from_values(values, p)


def verify_quandle_axioms(p: int) -> bool:
    r = range(p)
    idem = all(qop(x, x, p) == x for x in r)
    inv = all(qop(qop(x, y, p), y, p) == x for x in r for y in r)
    dist = all(
        qop(qop(x, y, p), z, p) == qop(qop(x, z, p), qop(y, z, p), p) for x in r for y in r for z in r
    )
    return idem and inv and dist


def verify_theta_cocycle(p: int) -> bool:
    """Degeneracy and the full 3-cocycle identity for theta_p, exhaustively."""
    r = range(p)
    if any(theta(s, s, t, p) or theta(s, t, t, p) for s in r for t in r):
        return False
    for s, t, u, v in itertools.product(r, repeat=4):
        lhs = theta(s, t, u, p) + theta(qop(s, u, p), qop(t, u, p), v, p) + theta(s, u, v, p)
        rhs = (
            theta(qop(s, t, p), u, v, p)
            + theta(s, t, v, p)
            + theta(qop(s, v, p), qop(t, v, p), qop(u, v, p), p)
        )
        if (lhs - rhs) % p:
            return False
    return True


def verify_two_cocycle(f, p: int) -> bool:
    r = range(p)
    if any(f(s, s) % p for s in r):
        return False
    return all(
        (f(s, u) + f(qop(s, u, p), qop(t, u, p)) - f(s, t) - f(qop(s, t, p), u)) % p == 0
        for s in r
        for t in r
        for u in r
    )


def verify_delta_lemma(m: int, p: int) -> bool:
    """A_Delta^l = I, checked on unit vectors by applying the word letter by letter."""
    p = check_prime(p)
    word = full_twist(m, delta_order(m, p))
    for c in range(m):
        e = tuple(int(r == c) for r in range(m))
        if apply_word(word, e, p) != e:
            return False
    return True


def verify_fold_lemma(m: int, p: int, imax: int) -> bool:
    """A_Delta^i(x) equals the i-fold R_x iterate of x, for all x and i <= imax."""
    _budget(p**m, LEMMA_CAP)
    delta = full_twist(m, 1)
    for x in itertools.product(range(p), repeat=m):
        cur = folded = x
        for _ in range(imax + 1):
            if cur != folded:
                return False
            cur = apply_word(delta, cur, p)
            folded = tuple(fold(v, x, p) for v in folded)
    return True


def verify_fp_closed_form(y: Sequence[int], p: int) -> bool:
    """f_p(s, t) = K (s - t) for all s, t, given an even twist vector with R_y = id."""
    y = [v % p for v in y]
    if not y or len(y) % 2:
        raise PreconditionError("twist vector must have positive even length")
    if any(fold(x, y, p) != x for x in range(p)):
        raise PreconditionError("R_y is not the identity")
    K = twist_constant(y, p)
    return all(f_p(s, t, y, p) == K * (s - t) % p for s in range(p) for t in range(p))


def identity_twists(k: int, p: int) -> List[Tuple[int, ...]]:
    """All y in (Z/pZ)^k with R_y = id."""
    return [y for y in itertools.product(range(p), repeat=k) if all(fold(x, y, p) == x for x in range(p))]


def verify_linear_vanishing(b: BraidWord, p: int) -> bool:
    """Phi_f = 0 for f(s, t) = s - t, over every coloring."""
    _budget(p**b.degree, LEMMA_CAP)
    f = lambda s, t: linear_cocycle(s, t, p)  # noqa: E731
    return all(two_cocycle_invariant(b, C, f, p) == 0 for C in brute_colorings(b, p))


def verify_shadow_lemmas(b: BraidWord, p: int) -> bool:
    """Base-color independence and R_z-invariance of Psi*, exhaustively."""
    _budget(p ** (b.degree + 1), LEMMA_CAP)
    for C in brute_colorings(b, p):
        by_base = [shadow_invariant(b, C, x, p) for x in range(p)]
        if len(set(by_base)) != 1:
            return False
        for z in range(p):
            RC = tuple(qop(c, z, p) for c in C)
            for x in range(p):
                if shadow_invariant(b, RC, x, p) != by_base[x]:
                    return False
    return True


def verify_shifted_square_count(p: int) -> bool:
    """|n U + n'| = (p + 1)/2 for every n != 0 and every n'."""
    return all(len(shifted_squares(n, s, p)) == (p + 1) // 2 for n in range(1, p) for s in range(p))


def verify_quadratic_residues(p: int) -> bool:
    squares = {x * x % p for x in range(1, p)}
    if is_quadratic_residue(0, p) is not None:
        return False
    return all(is_quadratic_residue(a, p) is (a in squares) for a in range(1, p))


def verify_p_prime_range(m: int, p: int) -> bool:
    """For every nu with nonzero entries, p' is 2 or 3 (needs m >= 4)."""
    return all(
        p_prime_brute(QuadraticForm(nu, p)) in (2, 3) for nu in itertools.product(range(1, p), repeat=m - 1)
    )


def random_word(m: int, length: int, rng: random.Random) -> BraidWord:
    return BraidWord(m, tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(length)))


def run_all(p: int, m: int = 3, b: BraidWord | None = None, seed: int = 0) -> Dict[str, bool]:
    """The verifier battery used by ``quandlebounds verify``."""
    p = check_prime(p)
    rng = random.Random(seed)
    results: Dict[str, bool] = {
        "quandle_axioms": verify_quandle_axioms(p),
        "quadratic_residues": verify_quadratic_residues(p),
        "shifted_square_count": verify_shifted_square_count(p),
        "delta_lemma": verify_delta_lemma(m, p),
    }
    if p <= 7:
        results["theta_cocycle"] = verify_theta_cocycle(p)
    if p**m <= LEMMA_CAP:
        results["fold_lemma"] = verify_fold_lemma(m, p, 3)
    twists = identity_twists(2, p) + (identity_twists(4, p) if p <= 7 else [])
    results["fp_closed_form"] = all(verify_fp_closed_form(y, p) for y in twists)
    words = [b] if b is not None else [random_word(m, rng.randint(0, 8), rng) for _ in range(5)]
    for idx, w in enumerate(words):
        tag = "" if b is not None else f"[{idx}]"
        if p**w.degree <= LEMMA_CAP:
            results[f"linear_vanishing{tag}"] = verify_linear_vanishing(w, p)
        if p ** (w.degree + 1) <= LEMMA_CAP:
            results[f"shadow_lemmas{tag}"] = verify_shadow_lemmas(w, p)
    return results
