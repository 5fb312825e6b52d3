"""Phi_p of torus-covering links S_m(b, Delta^n).

Three independent routes:

* :func:`phi_direct` evaluates the full expression: the 2-cocycle invariant
  of the closed braid for the twist cocycle f_p, minus the shadow invariants
  of the m*n shifted colorings swept out by the full twists.
* :func:`phi_simplified` uses the collapsed form -m*n*Psi*(C, 0).
* :func:`phi_power_block` is the closed form for words in sigma_i^p blocks,
  which needs no coloring enumeration at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .bounds import nu_vector, square_sum_distribution
from .braid import BraidWord, PowerBlockWord, full_twist, is_knot
from .cocycle import DEFAULT_CAP, f_p_array, shadow_values, two_cocycle_values
from .errors import BudgetExceeded, ConsistencyError, HypothesisNotMet
from .modp import check_prime
from .multiset import InvariantMultiset, zeros
from .quandle import apply_word, coloring_space, qop, twist_hypothesis_holds


@dataclass(frozen=True)
class TorusCoveringKnot:
    """S_m(b, Delta^exponent); Delta is central so the basis braids always commute."""

    basis: Union[BraidWord, PowerBlockWord]
    exponent: int

    @property
    def word(self) -> BraidWord:
        return self.basis.expand() if isinstance(self.basis, PowerBlockWord) else self.basis

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def is_knot(self) -> bool:
        return is_knot(self.word)


def _as_word(b) -> BraidWord:
    return b.expand() if isinstance(b, PowerBlockWord) else b


def _require_twist(m: int, n: int, p: int):
    if not twist_hypothesis_holds(m, n, p):
        raise HypothesisNotMet(f"A_Delta^{n} is not the identity for m={m}, p={p}")
    # an odd-length twist vector can never fold to the identity (only bites at m = 1)
    if (m * n) % 2:
        raise HypothesisNotMet(f"twist vector of odd length {m * n} for m={m}, n={n}")


def _fold_rows(values: np.ndarray, ys: np.ndarray, p: int) -> np.ndarray:
    """Apply R_{ys[r]} to every entry of row r of ``values``."""
    out = values.copy()
    for j in range(ys.shape[1]):
        out = qop(out, ys[:, j : j + 1], p)
    return out


def phi_direct(b, n: int, p: int, cap: int = DEFAULT_CAP) -> InvariantMultiset:
    """Phi_p(S_m(b, Delta^n)) from the double-sum expression, one value per coloring."""
    p = check_prime(p)
    word = _as_word(b)
    m = word.degree
    _require_twist(m, n, p)
    space = coloring_space(word, p)
    if n == 0:
        return zeros(p, space.size)
    if n < 0:
        return phi_direct(b, -n, p, cap).negated()
    delta = full_twist(m, 1)
    result = InvariantMultiset(p)
    for C in space.chunks(cap):
        N = C.shape[0]
        # strand colors at the start of each of the n full twists
        iterates = [C]
        for _ in range(n - 1):
            iterates.append(apply_word(delta, iterates[-1], p))
        twist = np.concatenate(iterates, axis=1)
        s = np.arange(p)[None, :].repeat(N, axis=0)
        if np.any(_fold_rows(s, twist, p) != s):
            raise ConsistencyError("twist vector does not fold to the identity")
        phi_f = two_cocycle_values(word, C, lambda a, c: f_p_array(a, c, twist, p), p)

        sweep = np.zeros(N, dtype=np.int64)
        shifted = C.copy()
        for _ in range(n):
            for i in range(m):
                sweep = (sweep + shadow_values(word, shifted, shifted[:, i], p)) % p
            shifted = _fold_rows(shifted, C, p)
        result = result + InvariantMultiset.from_values((phi_f - sweep) % p, p)
    return result


def phi_simplified(b, n: int, p: int, cap: int = DEFAULT_CAP) -> InvariantMultiset:
    """{-m n Psi*(b; C, 0) : C in Col_p(b)}."""
    p = check_prime(p)
    word = _as_word(b)
    m = word.degree
    _require_twist(m, n, p)
    space = coloring_space(word, p)
    coeff = (-m * n) % p
    if coeff == 0:
        if space.size > cap:
            raise BudgetExceeded(space.size, cap)
        return zeros(p, space.size)
    result = InvariantMultiset(p)
    for C in space.chunks(cap):
        result = result + InvariantMultiset.from_values(coeff * shadow_values(word, C, 0, p), p)
    return result


def phi_power_block(w: PowerBlockWord, n: int, p: int | None = None) -> InvariantMultiset:
    """Phi_p(S_m(w, Delta^(2n))) in closed form: p copies of 2mn g(y) per y."""
    p = check_prime(w.p if p is None else p)
    if p != w.p:
        raise ValueError("prime differs from the one the block word was built with")
    m = w.degree
    coeff = 2 * m * n
    dist = square_sum_distribution(nu_vector(w), p)
    return InvariantMultiset(p, dist).scaled(coeff).repeated(p)
