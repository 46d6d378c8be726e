"""Excitation layers relative to the ground state, and root-adjacency tests.

Layer j collects the support weights first reachable from the highest weight
by j lowering roots orthogonal-complementary to the stabilizer (breadth-first
closure over delta_minus^lambda, so a weight joins the earliest layer that
can produce it).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lie import RootSystem
from .ratgeom import vec
from .scenarios import Scenario, highest_weight, lambda_partition, support


@dataclass(frozen=True)
class ExcitationLayers:
    """Ordered layers Lambda_0 = {lambda}, Lambda_1, ... partitioning the support."""

    layers: tuple[tuple[tuple, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def union_from(self, j: int) -> tuple[tuple, ...]:
        """All weights in layers j, j+1, ... (e.g. j=2 for the doubly excited part)."""
        out = []
        for layer in self.layers[j:]:
            out.extend(layer)
        return tuple(out)


def _bfs_layers(start, others: Iterable, moves) -> list[list]:
    """Generic shortest-path layering: `moves(key)` yields neighbor keys."""
    remaining = set(others)
    layers = [[start]]
    frontier = [start]
    while remaining:
        nxt = set()
        for key in frontier:
            for nb in moves(key):
                if nb in remaining:
                    nxt.add(nb)
        if not nxt:
            break
        remaining -= nxt
        frontier = sorted(nxt)
        layers.append(frontier)
    if remaining:
        raise RuntimeError(
            "support not exhausted by lowering roots; scenario data inconsistent"
        )
    return layers


def excitation_layer_keys(s: Scenario) -> list[list[tuple[int, ...]]]:
    """The layering on basis keys (cheap representation; see `excitation_layers`)."""
    part = lambda_partition(s)
    if s.kind == "fermions":
        # a delta_minus^lambda root moves one particle out of the ground modes
        L, N = s.dims
        ground = tuple(range(1, L + 1))

        def moves(key):
            occ = set(key)
            for a in key:
                if a > L:
                    continue
                for b in range(L + 1, N + 1):
                    if b not in occ:
                        yield tuple(sorted(occ - {a} | {b}))

        return _bfs_layers(ground, (k for k in s.basis_keys if k != ground), moves)

    lam = vec(highest_weight(s))
    supp = {vec(w): w for w in support(s)}
    roots = [vec(a) for a in part.delta_minus]

    def moves(w):
        for a in roots:
            nb = tuple(x + y for x, y in zip(w, a))
            if nb in supp:
                yield nb

    weight_layers = _bfs_layers(lam, (w for w in supp if w != lam), moves)
    return [[s.basis_keys[s.index_of_weight[w]] for w in layer] for layer in weight_layers]


def excitation_layers(s: Scenario) -> ExcitationLayers:
    """Layer decomposition of the weight support relative to the ground state.

    For fermions the moves are restricted to particle hops out of the ground
    modes, which is exactly the delta_minus^lambda root set; validated against
    the generic weight-space walk in the tests.
    """
    key_layers = excitation_layer_keys(s)
    return ExcitationLayers(
        tuple(tuple(s.key_weight(k) for k in sorted(layer)) for layer in key_layers)
    )


def excitation_layer_sizes(s: Scenario) -> tuple[int, ...]:
    return tuple(len(layer) for layer in excitation_layer_keys(s))


def _difference(a: Sequence, b: Sequence) -> tuple:
    return tuple(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def _root_set(roots) -> frozenset:
    if isinstance(roots, RootSystem):
        return roots.root_vectors
    return frozenset(vec(a) for a in roots)


def is_root_distinct(weights: Iterable[Sequence], roots) -> bool:
    """No pairwise difference of the given weights is a root.

    `roots` may be a RootSystem or an explicit collection of root vectors
    (e.g. the stabilizer sub-root-system delta_zero^lambda).
    """
    ws = [vec(w) for w in weights]
    rset = _root_set(roots)
    return all(
        _difference(ws[i], ws[j]) not in rset
        for i in range(len(ws))
        for j in range(i + 1, len(ws))
    )


def pairwise_root_adjacent(weights: Iterable[Sequence], roots) -> bool:
    """Every pairwise difference of the given weights is a root."""
    ws = [vec(w) for w in weights]
    rset = _root_set(roots)
    return all(
        _difference(ws[i], ws[j]) in rset
        for i in range(len(ws))
        for j in range(i + 1, len(ws))
    )
