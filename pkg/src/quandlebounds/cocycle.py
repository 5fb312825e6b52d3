"""Mochizuki's 3-cocycle and the cocycle invariants of closed braids.

Crossing weights, for a letter acting on strand colors ``a`` (position i) and
``c`` (position i+1) with ``w`` the color of the region left of position i:

    sigma_i       +theta(w, a, c)          2-cocycle: +f(a, c)
    sigma_i^-1    -theta(w, c * a, a)      2-cocycle: -f(c * a, a)

In both cases the middle argument is the under-arc bordering ``w`` and the
last one is the over-arc.  The sign is fixed by requiring
``Psi*(sigma_i^p; C, 0) = -(x_i - x_{i+1})^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Sequence

import numpy as np

from .braid import BraidWord
from .errors import BudgetExceeded, ConsistencyError, PreconditionError
from .modp import check_prime, pow_mod, pow_mod_array
from .multiset import InvariantMultiset
from .quandle import act_letter, coloring_space, fold, qop

DEFAULT_CAP = 10**7
_KAPPA_TABLE_LIMIT = 1024


def theta(s: int, t: int, u: int, p: int) -> int:
    """theta_p(s, t, u) = (s - t)((2u - t)^p + t^p - 2u^p)/p mod p, via arithmetic mod p^2."""
    q = p * p
    s, t, u = s % p, t % p, u % p
    num = (pow_mod(2 * u - t, p, q) + pow_mod(t, p, q) - 2 * pow_mod(u, p, q)) % q
    if num % p:
        raise ConsistencyError(f"Fermat numerator {num} not divisible by {p}")
    return (s - t) * (num // p) % p


@lru_cache(maxsize=8)
def _kappa_table(p: int) -> np.ndarray:
    t, u = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    return _kappa(t, u, p)


def _kappa(t, u, p):
    q = p * p
    num = (pow_mod_array(2 * u - t, p, q) + pow_mod_array(t, p, q) - 2 * pow_mod_array(u, p, q)) % q
    if np.any(num % p):
        raise ConsistencyError("Fermat numerator not divisible by p")
    return num // p


def theta_array(s, t, u, p: int) -> np.ndarray:
    """Vectorized :func:`theta` over broadcastable integer arrays."""
    s, t, u = (np.mod(np.asarray(v, dtype=np.int64), p) for v in (s, t, u))
    if p <= _KAPPA_TABLE_LIMIT:
        kap = _kappa_table(p)[t, u]
    else:
        kap = _kappa(t, u, p)
    return (s - t) * kap % p


# -- 2-cocycles -------------------------------------------------------------


def f_p(s: int, t: int, y: Sequence[int], p: int) -> int:
    """The 2-cocycle sum_j theta(R_{y<j}(s), R_{y<j}(t), y_j)."""
    total = 0
    for yj in y:
        total += theta(s, t, yj, p)
        s, t = qop(s, yj, p), qop(t, yj, p)
    return total % p


def f_p_array(s, t, y: np.ndarray, p: int) -> np.ndarray:
    """:func:`f_p` with one twist vector per row of ``y`` (shape (N, k))."""
    s = np.mod(np.asarray(s, dtype=np.int64), p)
    t = np.mod(np.asarray(t, dtype=np.int64), p)
    total = np.zeros(np.broadcast(s, t).shape, dtype=np.int64)
    for j in range(y.shape[-1]):
        yj = y[..., j]
        total = (total + theta_array(s, t, yj, p)) % p
        s, t = qop(s, yj, p), qop(t, yj, p)
    return total


def twist_constant(y: Sequence[int], p: int) -> int:
    """K = -(2/p)(y_1^p - y_2^p + ... - y_k^p) mod p, computed mod p^2.

    Requires an even, nonempty twist vector whose alternating power sum is
    divisible by p (which holds whenever R_y is the identity).
    """
    if not y or len(y) % 2:
        raise PreconditionError("the twist vector must have positive even length")
    q = p * p
    alt = sum((1 if j % 2 == 0 else -1) * pow_mod(v, p, q) for j, v in enumerate(y)) % q
    if alt % p:
        raise PreconditionError("alternating power sum is not divisible by p; R_y is not the identity")
    return -2 * (alt // p) % p


def linear_cocycle(s, t, p):
    """f(s, t) = s - t."""
    return (s - t) % p


def twist_is_identity(y: Sequence[int], p: int) -> bool:
    return all(fold(x, y, p) == x for x in range(p))


def _require_fixed(start, end):
    if isinstance(start, np.ndarray):
        bad = np.any(start != end, axis=-1)
        if np.any(bad):
            row = int(np.nonzero(bad)[0][0])
            raise PreconditionError(f"coloring {start[row].tolist()} is not fixed by the braid")
    elif tuple(start) != tuple(end):
        raise PreconditionError(f"coloring {tuple(start)} is not fixed by the braid")


def two_cocycle_invariant(b: BraidWord, C: Sequence[int], f: Callable[[int, int], int], p: int) -> int:
    """Phi_f of the closed braid for the coloring with initial colors ``C``."""
    z = [v % p for v in C]
    total = 0
    for i, e in b.letters:
        a, c = z[i - 1], z[i]
        if e > 0:
            total += f(a, c)
        else:
            total -= f(qop(c, a, p), a)
        act_letter(z, i, e, p)
    _require_fixed([v % p for v in C], z)
    return total % p


def two_cocycle_values(b: BraidWord, colorings: np.ndarray, f_vec, p: int) -> np.ndarray:
    """Batch version of :func:`two_cocycle_invariant`; ``f_vec`` maps arrays to arrays."""
    z = np.mod(colorings.astype(np.int64, copy=True), p)
    start = z.copy()
    total = np.zeros(z.shape[0], dtype=np.int64)
    for i, e in b.letters:
        a, c = z[:, i - 1], z[:, i]
        if e > 0:
            total += f_vec(a, c)
        else:
            total -= f_vec(qop(c, a, p), a)
        total %= p
        act_letter(z, i, e, p)
    _require_fixed(start, z)
    return total


# -- shadow invariants ------------------------------------------------------


@dataclass
class ShadowState:
    """Strand colors, base color and running weight while walking a word."""

    colors: List[int]
    base: int
    p: int
    total: int = field(default=0)

    def region(self, i: int) -> int:
        """Color of the region immediately left of strand position ``i`` (1-based)."""
        return fold(self.base, self.colors[: i - 1], self.p)

    def step(self, i: int, e: int) -> None:
        w = self.region(i)
        a, c = self.colors[i - 1], self.colors[i]
        if e > 0:
            self.total += theta(w, a, c, self.p)
        else:
            self.total -= theta(w, qop(c, a, self.p), a, self.p)
        self.total %= self.p
        act_letter(self.colors, i, e, self.p)


def shadow_invariant(b: BraidWord, C: Sequence[int], x: int, p: int) -> int:
    """Psi*_p of the closed braid for coloring ``C`` and base color ``x``."""
    state = ShadowState([v % p for v in C], x % p, p)
    for i, e in b.letters:
        state.step(i, e)
    _require_fixed([v % p for v in C], state.colors)
    return state.total


def shadow_values(b: BraidWord, colorings: np.ndarray, base, p: int) -> np.ndarray:
    """Batch :func:`shadow_invariant`: one value per row of ``colorings``.

    Region colors are kept incrementally: ``regions[:, q]`` is the color left
    of strand position q+1, and a crossing at (i, i+1) only changes the region
    between those strands.
    """
    z = np.mod(colorings.astype(np.int64, copy=True), p)
    start = z.copy()
    n, m = z.shape
    regions = np.empty((n, m + 1), dtype=np.int64)
    regions[:, 0] = np.broadcast_to(np.mod(base, p), (n,))
    for q in range(m):
        regions[:, q + 1] = qop(regions[:, q], z[:, q], p)
    total = np.zeros(n, dtype=np.int64)
    for i, e in b.letters:
        w = regions[:, i - 1]
        a, c = z[:, i - 1], z[:, i]
        if e > 0:
            total += theta_array(w, a, c, p)
        else:
            total -= theta_array(w, qop(c, a, p), a, p)
        total %= p
        act_letter(z, i, e, p)
        regions[:, i] = qop(w, z[:, i - 1], p)
    _require_fixed(start, z)
    return total


def shadow_multiset(b: BraidWord, p: int, cap: int = DEFAULT_CAP) -> InvariantMultiset:
    """Psi*_p of the closed braid over all colorings and base colors.

    Every base color gives the same value, so each coloring is evaluated at
    base color 0 and counted p times.
    """
    p = check_prime(p)
    space = coloring_space(b, p)
    needed = space.size * p
    if needed > cap:
        raise BudgetExceeded(needed, cap, "(coloring, base color) pairs")
    result = InvariantMultiset(p)
    for block in space.chunks():
        result = result + InvariantMultiset.from_values(shadow_values(b, block, 0, p), p, multiplicity=p)
    return result
