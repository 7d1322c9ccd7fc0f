"""Sparse integer chains over oriented simplices.

A simplex is a tuple of vertex names in sorted order; that order is its
canonical orientation.  Chains store only nonzero coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Simplex = Tuple[str, ...]


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has repeats)."""
    items = list(seq)
    if len(set(items)) != len(items):
        return 0
    sign = 1
    # selection-sort parity, fine for the short tuples used here
    for i in range(len(items)):
        j = min(range(i, len(items)), key=items.__getitem__)
        if j != i:
            items[i], items[j] = items[j], items[i]
            sign = -sign
    return sign


def orient(vertices: Sequence[str]) -> Tuple[int, Simplex]:
    """Return (sign, canonical simplex) for an ordered vertex list."""
    s = permutation_sign(vertices)
    return s, tuple(sorted(vertices))


@dataclass(frozen=True)
class Chain:
    dim: int
    coeffs: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {s: int(c) for s, c in self.coeffs.items() if c}
        for s in clean:
            if len(s) != self.dim + 1:
                raise ValueError(f"simplex {s} has wrong size for a {self.dim}-chain")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_terms(cls, dim: int, terms: Iterable[Tuple[int, Sequence[str]]]) -> "Chain":
        """Build a chain from (coefficient, ordered vertex list) terms."""
        acc: Dict[Simplex, int] = {}
        for c, verts in terms:
            s, simplex = orient(verts)
            if s:
                acc[simplex] = acc.get(simplex, 0) + s * c
        return cls(dim, acc)

    def norm(self) -> int:
        return sum(abs(c) for c in self.coeffs.values())

    def support(self) -> list:
        return sorted(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, simplex: Simplex) -> int:
        return self.coeffs.get(tuple(simplex), 0)

    def _combine(self, other: "Chain", sign: int) -> "Chain":
        if other.dim != self.dim and other.coeffs and self.coeffs:
            raise ValueError("dimension mismatch")
        acc = dict(self.coeffs)
        for s, c in other.coeffs.items():
            acc[s] = acc.get(s, 0) + sign * c
        return Chain(self.dim if self.coeffs else other.dim, acc)

    def __add__(self, other: "Chain") -> "Chain":
        return self._combine(other, 1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self._combine(other, -1)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: -c for s, c in self.coeffs.items()})

    def __mul__(self, k: int) -> "Chain":
        return Chain(self.dim, {s: k * c for s, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.dim == other.dim and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def boundary(self) -> "Chain":
        acc: Dict[Simplex, int] = {}
        for s, c in self.coeffs.items():
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face:
                    acc[face] = acc.get(face, 0) + (-1) ** i * c
        return Chain(self.dim - 1, acc)

    def canonical_sign(self) -> "Chain":
        """Flip the sign so that the first nonzero coefficient is positive."""
        if self.coeffs and self.coeffs[min(self.coeffs)] < 0:
            return -self
        return self

    def to_json(self) -> list:
        return [[list(s), c] for s, c in sorted(self.coeffs.items())]

    def __repr__(self):
        if not self.coeffs:
            return f"Chain({self.dim}, 0)"
        terms = " ".join(f"{c:+d}[{','.join(s)}]" for s, c in sorted(self.coeffs.items()))
        return f"Chain({self.dim}, {terms})"
