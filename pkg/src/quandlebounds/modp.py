"""Arithmetic over Z/pZ and Z/p^2Z, and dense linear algebra mod p.

Matrices are small (one row per braid strand), so everything is plain
Gaussian elimination on ``int64`` numpy arrays.  Primes are capped at
``MAX_PRIME`` so that every product of two residues mod p^2 fits in 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

MAX_PRIME = 1 << 15


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p) -> int:
    """Return ``p`` as an int if it is an odd prime below ``MAX_PRIME``."""
    if isinstance(p, bool) or int(p) != p:
        raise ValueError(f"p must be an integer, got {p!r}")
    p = int(p)
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if p >= MAX_PRIME:
        raise ValueError(f"p must be below {MAX_PRIME}, got {p}")
    return p


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """Square-and-multiply ``base**exp % modulus``."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    result = 1
    base %= modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result % modulus


def pow_mod_array(base, exp: int, modulus: int) -> np.ndarray:
    """Elementwise :func:`pow_mod` on an integer array.

    ``modulus`` must be below 2**31 so intermediate products stay in int64.
    """
    if modulus >= 1 << 31:
        raise ValueError("modulus too large for int64 square-and-multiply")
    base = np.mod(np.asarray(base, dtype=np.int64), modulus)
    result = np.ones_like(base)
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result % modulus


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow_mod(a, (p - 1) // 2, p) == 1 else -1


def is_quadratic_residue(a: int, p: int) -> Optional[bool]:
    """True/False for nonzero ``a``; ``None`` when ``a`` is 0 mod p.

    Zero is neither a residue nor a nonresidue here, so callers that only
    care about nonzero squares must test ``is True``.
    """
    s = legendre(a, p)
    if s == 0:
        return None
    return s == 1


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Smallest x in [0, p) with x*x = a mod p, or None."""
    a %= p
    for x in range((p + 1) // 2):
        if x * x % p == a:
            return x
    return None


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def _rref(a: np.ndarray, p: int):
    """Reduced row echelon form of ``a`` over Z/pZ and its pivot columns."""
    a = np.mod(a.astype(np.int64, copy=True), p)
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * inv_mod(int(a[r, c]), p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


@dataclass(frozen=True, eq=False)
class MatrixModP:
    """Dense matrix with entries reduced into [0, p)."""

    entries: np.ndarray
    p: int

    def __post_init__(self):
        arr = np.mod(np.array(self.entries, dtype=np.int64, ndmin=2), self.p)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def identity(cls, n: int, p: int) -> "MatrixModP":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "MatrixModP":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def shape(self):
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, MatrixModP):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.p, self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"MatrixModP({self.entries.tolist()}, p={self.p})"

    def _check(self, other):
        if other.p != self.p:
            raise ValueError("moduli differ")

    def __matmul__(self, other):
        if isinstance(other, MatrixModP):
            self._check(other)
            return MatrixModP(self.entries @ other.entries, self.p)
        vec = np.asarray(other, dtype=np.int64)
        return np.mod(self.entries @ vec, self.p)

    def __add__(self, other):
        self._check(other)
        return MatrixModP(self.entries + other.entries, self.p)

    def __sub__(self, other):
        self._check(other)
        return MatrixModP(self.entries - other.entries, self.p)

    def __neg__(self):
        return MatrixModP(-self.entries, self.p)

    def __pow__(self, k: int):
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices have powers")
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = MatrixModP.identity(n, self.p)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        n, m = self.shape
        return n == m and np.array_equal(self.entries, np.eye(n, dtype=np.int64))

    def tolist(self):
        return self.entries.tolist()

    def rref(self):
        """(reduced matrix, pivot columns)."""
        red, pivots = _rref(self.entries, self.p)
        return MatrixModP(red, self.p), pivots

    def rank(self) -> int:
        return len(_rref(self.entries, self.p)[1])

    def kernel_basis(self) -> List[tuple]:
        return kernel_basis(self)


def kernel_basis(M: MatrixModP) -> List[tuple]:
    """Canonical basis of ``{v : M v = 0}``.

    The basis vectors, stacked as rows, are themselves in reduced row
    echelon form, so the result depends only on the kernel and not on how
    it was found.
    """
    p = M.p
    red, pivots = _rref(M.entries, p)
    cols = red.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return []
    raw = np.zeros((len(free), cols), dtype=np.int64)
    for j, f in enumerate(free):
        raw[j, f] = 1
        for r, pc in enumerate(pivots):
            raw[j, pc] = -red[r, f]
    basis, _ = _rref(raw, p)
    return [tuple(int(v) for v in row) for row in basis]


def span(basis: Sequence[Sequence[int]], p: int, length: int) -> np.ndarray:
    """Every linear combination of ``basis`` as rows of an array.

    Rows are ordered by coefficient tuple (first basis vector slowest), so
    the zero vector comes first.
    """
    k = len(basis)
    if k == 0:
        return np.zeros((1, length), dtype=np.int64)
    b = np.asarray(basis, dtype=np.int64).reshape(k, length)
    coeffs = np.indices((p,) * k, dtype=np.int64).reshape(k, -1).T
    return np.mod(coeffs @ b, p)


def all_vectors(length: int, p: int) -> np.ndarray:
    """All of (Z/pZ)^length, lexicographic, as an array of shape (p^length, length)."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((p,) * length, dtype=np.int64).reshape(length, -1).T.copy()


def shifted_squares(n: int, n_shift: int, p: int) -> set:
    """The set ``{n*x^2 + n_shift mod p : x in Z/pZ}``."""
    return {(n * x * x + n_shift) % p for x in range(p)}


def as_residues(values: Iterable[int], p: int) -> tuple:
    return tuple(int(v) % p for v in values)
