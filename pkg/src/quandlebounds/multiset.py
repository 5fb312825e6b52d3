"""Multisets of residues mod p with arbitrary-precision multiplicities."""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, Mapping

import numpy as np


class InvariantMultiset:
    """Value -> count map over Z/pZ.  Zero counts are never stored."""

    __slots__ = ("p", "_counts")

    def __init__(self, p: int, counts: Mapping[int, int] | None = None):
        self.p = p
        merged: Dict[int, int] = {}
        for value, count in (counts or {}).items():
            count = int(count)
            if count < 0:
                raise ValueError("multiplicities must be non-negative")
            if count:
                v = int(value) % p
                merged[v] = merged.get(v, 0) + count
        self._counts = merged

    @classmethod
    def from_values(cls, values: Iterable[int], p: int, multiplicity: int = 1) -> "InvariantMultiset":
        if isinstance(values, np.ndarray):
            vals, cnts = np.unique(np.mod(values, p), return_counts=True)
            counts = {int(v): int(c) * multiplicity for v, c in zip(vals, cnts)}
        else:
            counts = {v: c * multiplicity for v, c in Counter(int(v) % p for v in values).items()}
        return cls(p, counts)

    @property
    def counts(self) -> Dict[int, int]:
        return dict(sorted(self._counts.items()))

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def count(self, value: int) -> int:
        return self._counts.get(value % self.p, 0)

    def a0(self) -> int:
        return self.count(0)

    def negated(self) -> "InvariantMultiset":
        return InvariantMultiset(self.p, {-v: c for v, c in self._counts.items()})

    def scaled(self, factor: int) -> "InvariantMultiset":
        """Multiply every value by ``factor`` (mod p)."""
        out: Dict[int, int] = {}
        for v, c in self._counts.items():
            w = v * factor % self.p
            out[w] = out.get(w, 0) + c
        return InvariantMultiset(self.p, out)

    def repeated(self, times: int) -> "InvariantMultiset":
        return InvariantMultiset(self.p, {v: c * times for v, c in self._counts.items()})

    def __add__(self, other: "InvariantMultiset") -> "InvariantMultiset":
        if other.p != self.p:
            raise ValueError("moduli differ")
        out = dict(self._counts)
        for v, c in other._counts.items():
            out[v] = out.get(v, 0) + c
        return InvariantMultiset(self.p, out)

    def __eq__(self, other):
        if not isinstance(other, InvariantMultiset):
            return NotImplemented
        return self.p == other.p and self._counts == other._counts

    def __hash__(self):
        return hash((self.p, tuple(sorted(self._counts.items()))))

    def __repr__(self):
        body = ", ".join(f"{v}: {c}" for v, c in self.counts.items())
        return f"InvariantMultiset(p={self.p}, {{{body}}})"

    def to_json(self) -> dict:
        """Counts as decimal strings, keyed by the residue as a string."""
        return {
            "p": self.p,
            "total": str(self.total),
            "a0": str(self.a0()),
            "counts": {str(v): str(c) for v, c in self.counts.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "InvariantMultiset":
        return cls(int(data["p"]), {int(v): int(c) for v, c in data["counts"].items()})


def a0(ms: InvariantMultiset) -> int:
    """Multiplicity of 0."""
    return ms.a0()


def zeros(p: int, size: int) -> InvariantMultiset:
    return InvariantMultiset(p, {0: size})
