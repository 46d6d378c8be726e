"""Root systems and Weyl chambers for sums of unitary algebras and o(2N).

Weights and roots are flat tuples in Cartan coordinates; the block structure
(one block per group factor) only enters when building chambers and when
sorting sampled spectra into them. Type ``A`` factors are the u(N) blocks of
distinguishable / fixed-particle scenarios, type ``D`` is o(2N) acting on the
fermionic Fock space, with half-integer weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .ratgeom import HPolytope, RatVec, dot, vec


@dataclass(frozen=True)
class Root:
    vector: tuple
    positive: bool


@dataclass(frozen=True)
class RootSystem:
    """Product of simple factors: ('A', n) for u(n), ('D', n) for o(2n)."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for kind, size in self.factors:
            if kind not in ("A", "D") or size < 1:
                raise ValueError(f"bad factor {(kind, size)!r}")

    @property
    def rank(self) -> int:
        return sum(size for _, size in self.factors)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for _, size in self.factors:
            out.append(acc)
            acc += size
        return tuple(out)

    def blocks(self, weight: Sequence) -> list[tuple]:
        """Split a flat vector into per-factor blocks."""
        out = []
        for off, (_, size) in zip(self.offsets, self.factors):
            out.append(tuple(weight[off : off + size]))
        return out

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        out: list[Root] = []
        r = self.rank
        for off, (kind, size) in zip(self.offsets, self.factors):
            if kind == "A":
                for i in range(size):
                    for j in range(size):
                        if i == j:
                            continue
                        v = [0] * r
                        v[off + i], v[off + j] = 1, -1
                        out.append(Root(tuple(v), positive=i < j))
            else:  # D: roots +-e_i +-e_j, positive iff leading sign is +
                for i in range(size):
                    for j in range(i + 1, size):
                        for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                            v = [0] * r
                            v[off + i], v[off + j] = si, sj
                            out.append(Root(tuple(v), positive=si > 0))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[tuple, ...]:
        return tuple(rt.vector for rt in self.roots if rt.positive)

    @cached_property
    def root_vectors(self) -> frozenset:
        return frozenset(vec(rt.vector) for rt in self.roots)

    @cached_property
    def simple_roots(self) -> tuple[tuple, ...]:
        out: list[tuple] = []
        r = self.rank
        for off, (kind, size) in zip(self.offsets, self.factors):
            for i in range(size - 1):
                v = [0] * r
                v[off + i], v[off + i + 1] = 1, -1
                out.append(tuple(v))
            if kind == "D" and size >= 2:
                v = [0] * r
                v[off + size - 2], v[off + size - 1] = 1, 1
                out.append(tuple(v))
        return tuple(out)


def inner(a: Sequence, b: Sequence) -> Fraction:
    """Euclidean pairing in Cartan coordinates (the Hilbert-Schmidt form)."""
    return dot(vec(a), vec(b))


def chamber(rs: RootSystem, nonneg_tail: bool = True) -> HPolytope:
    """The closed positive Weyl chamber as an H-polytope.

    Type A blocks are ordered decreasingly; with `nonneg_tail` the last entry
    of every A block is also >= 0, matching density-matrix spectra. Type D
    blocks get eta_1 >= ... >= eta_N and eta_{N-1} + eta_N >= 0.
    """
    rows = []
    r = rs.rank
    for off, (kind, size) in zip(rs.offsets, rs.factors):
        for i in range(size - 1):
            v = [0] * r
            v[off + i], v[off + i + 1] = 1, -1
            rows.append((v, 0))
        if kind == "A":
            if nonneg_tail:
                v = [0] * r
                v[off + size - 1] = 1
                rows.append((v, 0))
        elif size >= 2:
            v = [0] * r
            v[off + size - 2], v[off + size - 1] = 1, 1
            rows.append((v, 0))
    return HPolytope.from_constraints(r, rows)


def chamber_from_positive_roots(positive_roots: Sequence[Sequence], dim: int) -> HPolytope:
    """Chamber of a sub-root-system: (x, alpha) >= 0 for its positive roots."""
    return HPolytope.from_constraints(dim, [(vec(a), 0) for a in positive_roots])


def to_chamber(rs: RootSystem, x: Sequence, orientation: int = 1) -> np.ndarray:
    """Sort a sampled diagonal into the closed chamber, block by block.

    A blocks: descending sort. D blocks: magnitudes descending with the sign
    of the last entry set by `orientation` (+1 or -1), the invariant left by
    special-orthogonal conjugation.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    for off, (kind, size) in zip(rs.offsets, rs.factors):
        blk = x[off : off + size]
        if kind == "A":
            out[off : off + size] = np.sort(blk)[::-1]
        else:
            mags = np.sort(np.abs(blk))[::-1]
            mags[-1] *= orientation
            out[off : off + size] = mags
    return out


def exact_to_chamber(rs: RootSystem, x: Sequence, orientation: int = 1) -> RatVec:
    """Exact-arithmetic variant of `to_chamber` for rational inputs."""
    xs = vec(x)
    out: list[Fraction] = []
    for off, (kind, size) in zip(rs.offsets, rs.factors):
        blk = list(xs[off : off + size])
        if kind == "A":
            out.extend(sorted(blk, reverse=True))
        else:
            mags = sorted((abs(v) for v in blk), reverse=True)
            mags[-1] *= orientation
            out.extend(mags)
    return tuple(out)
