"""Physical-system catalog on the weight basis.

A `Scenario` pins down the symmetry algebra, the weight support of the state
space, the non-entangled ground state (highest weight), and the matrix
elements of the lowering operators on the computational basis. Conventions:

* distinguishable particles: one u(N_k) block per particle, weights are
  one-hot per block;
* bosons / fermions on N modes: a single u(N) block, weights are mode
  occupations (summing to L, entries 0/1 for fermions);
* fermionic Fock space: o(2N), weight entry +1/2 on an empty mode and -1/2
  on an occupied one, so the even-sector vacuum carries (1/2, ..., 1/2).

Basis order is lexicographic in the occupation data, and fermionic signs
follow the convention that strictly increasing mode indices carry +1.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, cached_property
from typing import Sequence

from . import ratgeom
from .lie import RootSystem, chamber, inner
from .ratgeom import vec

HALF = Fraction(1, 2)


class UnsupportedScenario(ValueError):
    """Scenario outside the methods' dispatch table."""


class ScenarioParseError(ValueError):
    """Malformed scenario string."""


@dataclass(frozen=True)
class Scenario:
    kind: str  # 'dist' | 'bosons' | 'fermions' | 'fock-even' | 'fock-odd'
    dims: tuple[int, ...]  # dist: (N_1..N_L); bosons/fermions: (L, N); fock: (N,)

    def __post_init__(self):
        if self.kind == "dist":
            if not self.dims or any(n < 1 for n in self.dims):
                raise ValueError("dist requires positive local dimensions")
        elif self.kind in ("bosons", "fermions"):
            L, N = self.dims
            if L < 1 or N < 1:
                raise ValueError("need L >= 1 and N >= 1")
            if self.kind == "fermions" and L > N:
                raise ValueError("fermions require L <= N")
        elif self.kind in ("fock-even", "fock-odd"):
            (N,) = self.dims
            if N < 1:
                raise ValueError("fock requires N >= 1")
        else:
            raise ValueError(f"unknown scenario kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "dist":
            return "dist:" + "x".join(map(str, self.dims))
        if self.kind in ("bosons", "fermions"):
            return f"{self.kind}:{self.dims[0]}@{self.dims[1]}"
        return f"{self.kind}:{self.dims[0]}"

    # -- structure ---------------------------------------------------------

    @cached_property
    def root_system(self) -> RootSystem:
        if self.kind == "dist":
            return RootSystem(tuple(("A", n) for n in self.dims))
        if self.kind in ("bosons", "fermions"):
            return RootSystem((("A", self.dims[1]),))
        return RootSystem((("D", self.dims[0]),))

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @cached_property
    def dim(self) -> int:
        if self.kind == "dist":
            return math.prod(self.dims)
        if self.kind == "bosons":
            L, N = self.dims
            return math.comb(N + L - 1, L)
        if self.kind == "fermions":
            L, N = self.dims
            return math.comb(N, L)
        return 2 ** (self.dims[0] - 1)

    # -- basis -------------------------------------------------------------

    @cached_property
    def basis_keys(self) -> tuple[tuple[int, ...], ...]:
        """Occupation data per basis vector, in canonical (lexicographic) order.

        dist: tuples of per-particle levels (1-based); fermions: strictly
        increasing occupied modes; bosons: occupation vectors; fock: occupied
        mode subsets of the right parity.
        """
        if self.kind == "dist":
            return tuple(itertools.product(*(range(1, n + 1) for n in self.dims)))
        if self.kind == "fermions":
            L, N = self.dims
            return tuple(itertools.combinations(range(1, N + 1), L))
        if self.kind == "bosons":
            L, N = self.dims
            return tuple(
                sorted(
                    tuple(sum(1 for i in combo if i == m) for m in range(1, N + 1))
                    for combo in itertools.combinations_with_replacement(
                        range(1, N + 1), L
                    )
                )
            )
        N = self.dims[0]
        parity = 0 if self.kind == "fock-even" else 1
        return tuple(
            combo
            for size in range(parity, N + 1, 2)
            for combo in itertools.combinations(range(1, N + 1), size)
        )

    def key_weight(self, key: tuple[int, ...]) -> tuple:
        if self.kind == "dist":
            w = []
            for level, n in zip(key, self.dims):
                w.extend(1 if i == level else 0 for i in range(1, n + 1))
            return tuple(w)
        if self.kind == "fermions":
            N = self.dims[1]
            occ = set(key)
            return tuple(1 if m in occ else 0 for m in range(1, N + 1))
        if self.kind == "bosons":
            return tuple(key)
        N = self.dims[0]
        occ = set(key)
        return tuple(-HALF if m in occ else HALF for m in range(1, N + 1))

    @cached_property
    def index_of_weight(self) -> dict:
        return {vec(self.key_weight(k)): i for i, k in enumerate(self.basis_keys)}

    # ------------------------------------------------------------------


def parse_scenario(text: str) -> Scenario:
    """Parse the CLI grammar: dist:2x2x3, bosons:4@2, fermions:3@6, fock-even:5."""
    m = re.fullmatch(r"dist:(\d+(?:x\d+)*)", text)
    if m:
        return Scenario("dist", tuple(int(x) for x in m.group(1).split("x")))
    m = re.fullmatch(r"(bosons|fermions):(\d+)@(\d+)", text)
    if m:
        return Scenario(m.group(1), (int(m.group(2)), int(m.group(3))))
    m = re.fullmatch(r"(fock-even|fock-odd):(\d+)", text)
    if m:
        return Scenario(m.group(1), (int(m.group(2)),))
    raise ScenarioParseError(
        f"cannot parse scenario {text!r}; expected dist:N1xN2x..., "
        "bosons:L@N, fermions:L@N, fock-even:N or fock-odd:N"
    )


def support(s: Scenario) -> tuple[tuple, ...]:
    """All weights of the state space, in canonical basis order."""
    return tuple(s.key_weight(k) for k in s.basis_keys)


def highest_weight(s: Scenario) -> tuple:
    """Weight of the non-entangled ground state."""
    if s.kind == "dist":
        return s.key_weight(tuple(1 for _ in s.dims))
    if s.kind == "fermions":
        L = s.dims[0]
        return s.key_weight(tuple(range(1, L + 1)))
    if s.kind == "bosons":
        L, N = s.dims
        return (L,) + (0,) * (N - 1)
    if s.kind == "fock-even":
        return s.key_weight(())
    N = s.dims[0]
    return s.key_weight((N,))


@dataclass(frozen=True)
class LambdaPartition:
    """Roots split by the sign of their pairing with the highest weight."""

    delta_zero: tuple[tuple, ...]
    delta_minus: tuple[tuple, ...]
    delta_plus: tuple[tuple, ...]


def lambda_partition(s: Scenario) -> LambdaPartition:
    lam = highest_weight(s)
    zero, minus, plus = [], [], []
    for rt in s.root_system.roots:
        pairing = inner(rt.vector, lam)
        (zero if pairing == 0 else minus if pairing < 0 else plus).append(rt.vector)
    return LambdaPartition(tuple(zero), tuple(minus), tuple(plus))


@dataclass(frozen=True)
class LoweringEntry:
    src: int
    tgt: int
    sign: int
    coeff_sq: int  # squared magnitude of the matrix element

    @property
    def coeff(self) -> float:
        return self.sign * math.sqrt(self.coeff_sq)


def _fermion_sign(occupied: Sequence[int], mode: int) -> int:
    """Parity picked up by an annihilation/creation operator at `mode`."""
    return -1 if sum(1 for m in occupied if m < mode) % 2 else 1


@lru_cache(maxsize=None)
def lowering_action(s: Scenario) -> dict[tuple, tuple[LoweringEntry, ...]]:
    """Matrix elements of every negative-root operator on the weight basis.

    Returned as {root vector: entries}, where an entry means
    E_root |src> = sign * sqrt(coeff_sq) |tgt> and tgt carries weight(src) + root.
    """
    keys = s.basis_keys
    index = {k: i for i, k in enumerate(keys)}
    table: dict[tuple, list[LoweringEntry]] = {
        rt.vector: [] for rt in s.root_system.roots if not rt.positive
    }
    r = s.rank

    def root_vec(entries: dict[int, int]) -> tuple:
        v = [0] * r
        for pos, val in entries.items():
            v[pos] = val
        return tuple(v)

    if s.kind == "dist":
        offsets = s.root_system.offsets
        for idx, key in enumerate(keys):
            for blk, (level, n) in enumerate(zip(key, s.dims)):
                for target_level in range(level + 1, n + 1):
                    alpha = root_vec(
                        {
                            offsets[blk] + target_level - 1: 1,
                            offsets[blk] + level - 1: -1,
                        }
                    )
                    tgt_key = key[:blk] + (target_level,) + key[blk + 1 :]
                    table[alpha].append(LoweringEntry(idx, index[tgt_key], 1, 1))
    elif s.kind == "fermions":
        N = s.dims[1]
        for idx, key in enumerate(keys):
            occ = set(key)
            for a in key:
                for b in range(a + 1, N + 1):
                    if b in occ:
                        continue
                    sign = _fermion_sign(key, a)
                    rest = tuple(m for m in key if m != a)
                    sign *= _fermion_sign(rest, b)
                    tgt_key = tuple(sorted(rest + (b,)))
                    alpha = root_vec({b - 1: 1, a - 1: -1})
                    table[alpha].append(LoweringEntry(idx, index[tgt_key], sign, 1))
    elif s.kind == "bosons":
        N = s.dims[1]
        for idx, key in enumerate(keys):
            for a in range(1, N + 1):
                if key[a - 1] == 0:
                    continue
                for b in range(a + 1, N + 1):
                    tgt = list(key)
                    tgt[a - 1] -= 1
                    tgt[b - 1] += 1
                    alpha = root_vec({b - 1: 1, a - 1: -1})
                    table[alpha].append(
                        LoweringEntry(
                            idx, index[tuple(tgt)], 1, key[a - 1] * (key[b - 1] + 1)
                        )
                    )
    else:  # fock: pair creation a_j+ a_i+ (root -e_i-e_j) and a_j a_i+ (root -e_i+e_j)
        N = s.dims[0]
        for idx, key in enumerate(keys):
            occ = set(key)
            for i in range(1, N + 1):
                if i in occ:
                    continue
                sign_i = _fermion_sign(key, i)
                created = tuple(sorted(key + (i,)))
                for j in range(i + 1, N + 1):
                    if j in occ:  # a_j a_i+ : create at i, annihilate at j
                        sign = sign_i * _fermion_sign(created, j)
                        tgt_key = tuple(m for m in created if m != j)
                        alpha = root_vec({i - 1: -1, j - 1: 1})
                    else:  # a_j+ a_i+ : create at i then at j
                        sign = sign_i * _fermion_sign(created, j)
                        tgt_key = tuple(sorted(created + (j,)))
                        alpha = root_vec({i - 1: -1, j - 1: -1})
                    table[alpha].append(LoweringEntry(idx, index[tgt_key], sign, 1))
    return {alpha: tuple(entries) for alpha, entries in table.items()}


@lru_cache(maxsize=None)
def is_minuscule(s: Scenario) -> bool:
    """True iff every support weight is an extreme point of the support hull."""
    supp = [vec(w) for w in support(s)]
    return set(ratgeom.extreme_points(supp).vertices) == set(supp)


def scenario_chamber(s: Scenario):
    """The positive Weyl chamber in the scenario's spectra normalization."""
    return chamber(s.root_system, nonneg_tail=s.kind in ("dist", "bosons", "fermions"))
