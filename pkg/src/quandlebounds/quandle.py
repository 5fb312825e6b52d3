"""The dihedral quandle R_p and the braid action on strand colors.

A braid word acts on the colors ``(x_1, ..., x_m)`` of its initial arcs.  For
sigma_i the strand at position i+1 passes over: it keeps its color and moves
to position i, while the under strand arrives at position i+1 colored
``x_i * x_{i+1}``.  Letters act left to right, so the matrix of a word is the
product of its letter matrices with the first letter rightmost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .braid import BraidWord, delta_order, full_twist
from .errors import BudgetExceeded, ConsistencyError
from .modp import MatrixModP, check_prime, kernel_basis, span


def qop(x, y, p):
    """x * y = 2y - x in R_p.  Works on ints and numpy arrays alike."""
    return (2 * y - x) % p


@dataclass(frozen=True)
class DihedralQuandle:
    p: int

    def __post_init__(self):
        check_prime(self.p)

    @property
    def elements(self):
        return range(self.p)

    def op(self, x: int, y: int) -> int:
        return qop(x, y, self.p)

    # R_p is involutory, so the inverse operation coincides with op
    op_inv = op

    def R(self, y: int):
        """The inner automorphism x -> x * y."""
        return lambda x: qop(x, y, self.p)


def fold(x, ys: Sequence[int], p: int):
    """R_{(y_1,...,y_k)}(x): apply R_{y_1} first, then R_{y_2}, ..."""
    for y in ys:
        x = qop(x, y, p)
    return x


def fold_power(x, ys: Sequence[int], i: int, p: int):
    """The i-th iterate of ``fold(., ys)``."""
    for _ in range(i):
        x = fold(x, ys, p)
    return x


def generator_matrix(i: int, sign: int, m: int, p: int) -> MatrixModP:
    a = np.eye(m, dtype=np.int64)
    r, s = i - 1, i
    a[r, r] = a[s, s] = 0
    if sign > 0:
        a[r, s] = 1
        a[s, r], a[s, s] = -1, 2
    else:
        a[r, r], a[r, s] = 2, -1
        a[s, r] = 1
    return MatrixModP(a, p)


def action_matrix(b: BraidWord, p: int) -> MatrixModP:
    """Matrix of A_b over Z/pZ acting on column vectors of strand colors."""
    m = b.degree
    result = MatrixModP.identity(m, p)
    cache = {}
    for i, e in b.letters:
        g = cache.get((i, e))
        if g is None:
            g = cache[(i, e)] = generator_matrix(i, e, m, p)
        result = g @ result
    return result


def act_letter(z, i: int, sign: int, p: int):
    """Apply one letter in place to a color list or an array whose last axis is strands."""
    if isinstance(z, np.ndarray):
        a, c = z[..., i - 1].copy(), z[..., i].copy()
        if sign > 0:
            z[..., i - 1], z[..., i] = c, qop(a, c, p)
        else:
            z[..., i - 1], z[..., i] = qop(c, a, p), a
    else:
        a, c = z[i - 1], z[i]
        if sign > 0:
            z[i - 1], z[i] = c, qop(a, c, p)
        else:
            z[i - 1], z[i] = qop(c, a, p), a
    return z


def apply_word(b: BraidWord, x, p: int):
    """A_b(x) computed letter by letter; ``x`` may be a tuple or an (N, m) array."""
    if isinstance(x, np.ndarray):
        z = np.mod(x.astype(np.int64, copy=True), p)
        for i, e in b.letters:
            act_letter(z, i, e, p)
        return z
    z = [v % p for v in x]
    for i, e in b.letters:
        act_letter(z, i, e, p)
    return tuple(z)


@dataclass(frozen=True)
class ColoringSpace:
    """Col_p of a closed braid: the fixed space of A_b."""

    p: int
    degree: int
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.p ** self.k

    def colorings(self, cap: int | None = None) -> np.ndarray:
        """All colorings as rows of an (p^k, m) array."""
        if cap is not None and self.size > cap:
            raise BudgetExceeded(self.size, cap)
        return span(self.basis, self.p, self.degree)

    def chunks(self, cap: int | None = None, size: int = 1 << 16):
        """Yield the colorings in blocks of at most ``size`` rows, in :meth:`colorings` order."""
        if cap is not None and self.size > cap:
            raise BudgetExceeded(self.size, cap)
        if self.k == 0:
            yield np.zeros((1, self.degree), dtype=np.int64)
            return
        basis = np.asarray(self.basis, dtype=np.int64)
        weights = self.p ** np.arange(self.k - 1, -1, -1, dtype=np.int64)
        for start in range(0, self.size, size):
            idx = np.arange(start, min(start + size, self.size), dtype=np.int64)
            coeffs = (idx[:, None] // weights[None, :]) % self.p
            yield np.mod(coeffs @ basis, self.p)

    def __contains__(self, x) -> bool:
        if len(x) != self.degree:
            return False
        if self.k == 0:
            return not any(v % self.p for v in x)
        b = MatrixModP(np.asarray(self.basis, dtype=np.int64), self.p)
        ext = MatrixModP(np.vstack([b.entries, np.asarray(x, dtype=np.int64)]), self.p)
        return ext.rank() == b.rank()


def coloring_space(b: BraidWord, p: int) -> ColoringSpace:
    p = check_prime(p)
    a = action_matrix(b, p)
    basis = kernel_basis(a - MatrixModP.identity(b.degree, p))
    return ColoringSpace(p, b.degree, tuple(basis))


def is_coloring(b: BraidWord, x, p: int) -> bool:
    return apply_word(b, tuple(x), p) == tuple(v % p for v in x)


def delta_order_check(m: int, p: int) -> int:
    """Return l (2 for odd m, p for even m) after checking A_Delta^l = I."""
    p = check_prime(p)
    if m < 2:
        raise ValueError("need at least two strands")
    l = delta_order(m, p)
    if not (action_matrix(full_twist(m, 1), p) ** l).is_identity():
        raise ConsistencyError(f"A_Delta^{l} != I for m={m}, p={p}")
    return l


def twist_hypothesis_holds(m: int, n: int, p: int) -> bool:
    """Whether A_Delta^n is the identity on (Z/pZ)^m."""
    if n == 0:
        return True
    return (action_matrix(full_twist(m, 1), p) ** abs(n)).is_identity()
