"""Floating-point momentum-map sampler.

Draws Haar-like random pure states on the weight basis (optionally masked to
a subspace), assembles the one-body marginals (per-particle density matrices,
the single one-body matrix of indistinguishable particles, or the Majorana
correlation matrix of the Fock scenarios), and sorts their spectra into the
positive Weyl chamber. Random streams use the counter-based Philox generator,
so every experiment is reproducible from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np
import scipy.linalg

from .excitations import excitation_layers
from .lie import to_chamber
from .ratgeom import HPolytope, VPolytope, vec
from .scenarios import Scenario, highest_weight, lowering_action, support


@dataclass(frozen=True)
class MarginalData:
    """One-body data of a pure state.

    dist: `rhos` holds one density matrix per particle. bosons/fermions:
    `rho` is the one-body matrix with trace L. fock: `corr` is the real
    antisymmetric Majorana correlation matrix with `orientation` the sign
    left invariant by special-orthogonal conjugation.
    """

    kind: str
    rhos: Optional[tuple[np.ndarray, ...]] = None
    rho: Optional[np.ndarray] = None
    corr: Optional[np.ndarray] = None
    orientation: int = 1


def state_index(s: Scenario, mask: Optional[Iterable] = None) -> np.ndarray:
    """Indices of the masked basis vectors (all of them when mask is None)."""
    if mask is None:
        return np.arange(s.dim)
    idx = []
    for w in mask:
        if isinstance(w, (int, np.integer)):
            idx.append(int(w))
        else:
            idx.append(s.index_of_weight[vec(w)])
    if not idx:
        raise ValueError("empty mask")
    return np.unique(np.asarray(idx, dtype=int))


def p2_subspace_mask(s: Scenario) -> tuple[tuple, ...]:
    """The ground weight together with the doubly excited layer."""
    layers = excitation_layers(s)
    lam2 = layers.layers[2] if len(layers.layers) > 2 else ()
    return (highest_weight(s),) + tuple(lam2)


def random_states(
    s: Scenario, n: int, seed: int, mask: Optional[Iterable] = None
) -> np.ndarray:
    """(n, dim) array of normalized states, i.i.d. Gaussian on the mask."""
    idx = state_index(s, mask)
    rng = np.random.Generator(np.random.Philox(key=seed))
    raw = rng.standard_normal((n, idx.size)) + 1j * rng.standard_normal((n, idx.size))
    raw /= np.linalg.norm(raw, axis=1, keepdims=True)
    out = np.zeros((n, s.dim), dtype=complex)
    out[:, idx] = raw
    return out


def random_state(s: Scenario, seed: int, mask: Optional[Iterable] = None) -> np.ndarray:
    return random_states(s, 1, seed, mask)[0]


def basis_state(s: Scenario, weight) -> np.ndarray:
    psi = np.zeros(s.dim, dtype=complex)
    psi[s.index_of_weight[vec(weight)]] = 1.0
    return psi


# ---------------------------------------------------------------------------
# marginals


def _weight_matrix(s: Scenario) -> np.ndarray:
    return np.array([[float(x) for x in w] for w in support(s)])


def _dist_rhos(s: Scenario, psis: np.ndarray) -> list[np.ndarray]:
    n = psis.shape[0]
    T = psis.reshape((n,) + s.dims)
    out = []
    for k, nk in enumerate(s.dims):
        Tk = np.moveaxis(T, 1 + k, -1).reshape(n, -1, nk)
        out.append(np.einsum("nxi,nxj->nij", Tk.conj(), Tk))
    return out


def _offdiag_tables(s: Scenario):
    """Per negative root: (a, b, srcs, tgts, coeffs) with a < b mode indices."""
    tables = []
    for alpha, entries in lowering_action(s).items():
        if not entries:
            continue
        neg = [p for p, v in enumerate(alpha) if v < 0]
        pos = [p for p, v in enumerate(alpha) if v > 0]
        srcs = np.array([e.src for e in entries])
        tgts = np.array([e.tgt for e in entries])
        coeffs = np.array([e.coeff for e in entries])
        tables.append((alpha, neg, pos, srcs, tgts, coeffs))
    return tables


def _indistinct_rhos(s: Scenario, psis: np.ndarray) -> np.ndarray:
    n = psis.shape[0]
    N = s.dims[1]
    rho = np.zeros((n, N, N), dtype=complex)
    occ = np.abs(psis) ** 2 @ _weight_matrix(s)
    rho[:, np.arange(N), np.arange(N)] = occ
    for alpha, negp, posp, srcs, tgts, coeffs in _offdiag_tables(s):
        a, b = negp[0], posp[0]  # root e_b - e_a: operator is a_b^dag a_a
        val = np.einsum("ne,ne->n", psis[:, tgts].conj() * coeffs, psis[:, srcs])
        rho[:, a, b] += val  # rho[a, b] = <a_b^dag a_a>
        rho[:, b, a] += val.conj()
    return rho


def _fock_corr(s: Scenario, psis: np.ndarray) -> np.ndarray:
    n = psis.shape[0]
    N = s.dims[0]
    occ = np.abs(psis) ** 2 @ (0.5 - _weight_matrix(s))  # weight = 1/2 - occupation
    M = np.zeros((n, 2 * N, 2 * N))
    for i in range(N):
        M[:, 2 * i, 2 * i + 1] = 1.0 - 2.0 * occ[:, i]
    pair_create = {}
    pair_hop = {}
    for alpha, negp, posp, srcs, tgts, coeffs in _offdiag_tables(s):
        val = np.einsum("ne,ne->n", psis[:, tgts].conj() * coeffs, psis[:, srcs])
        if len(negp) == 2:  # root -e_i - e_j: operator a_j^dag a_i^dag
            pair_create[tuple(negp)] = val
        else:  # root -e_i + e_j: operator a_j a_i^dag
            pair_hop[(negp[0], posp[0])] = val
    zero = np.zeros(n)
    for i in range(N):
        for j in range(i + 1, N):
            T = pair_create.get((i, j), zero)  # <a_j^dag a_i^dag>
            S = pair_hop.get((i, j), zero)  # <a_j a_i^dag>
            A = T.conj()  # <a_i a_j>
            B = S.conj()  # <a_i a_j^dag>
            M[:, 2 * i, 2 * j] = -2.0 * (A.imag + B.imag)
            M[:, 2 * i, 2 * j + 1] = -2.0 * A.real + 2.0 * B.real
            M[:, 2 * i + 1, 2 * j] = -2.0 * A.real - 2.0 * B.real
            M[:, 2 * i + 1, 2 * j + 1] = 2.0 * (A.imag - B.imag)
    return M - np.transpose(M, (0, 2, 1))  # fill the lower triangle


def fock_canonical_values(M: np.ndarray) -> tuple[np.ndarray, int]:
    """Canonical pair values of a real antisymmetric matrix and the
    special-orthogonal orientation sign.

    Uses the real Schur form M = Q T Q^T; the 2x2 blocks of T carry the
    values, and a determinant -1 transform flips the orientation.
    """
    dim = M.shape[0]
    T, Q = scipy.linalg.schur(M, output="real")
    vals = []
    j = 0
    scale = max(1.0, np.max(np.abs(M)))
    while j < dim:
        if j + 1 < dim and abs(T[j + 1, j]) > 1e-12 * scale:
            vals.append(T[j, j + 1])
            j += 2
        else:
            j += 1
    vals = np.array(vals + [0.0] * (dim // 2 - len(vals)))
    detq = 1 if np.linalg.det(Q) > 0 else -1
    sgn = np.prod(np.where(vals >= 0, 1, -1)) * detq
    return np.abs(vals), int(sgn)


def marginal(s: Scenario, psi: np.ndarray) -> MarginalData:
    """One-body marginals of a normalized state on the weight basis."""
    psis = np.asarray(psi, dtype=complex).reshape(1, -1)
    if s.kind == "dist":
        return MarginalData("dist", rhos=tuple(r[0] for r in _dist_rhos(s, psis)))
    if s.kind in ("bosons", "fermions"):
        return MarginalData(s.kind, rho=_indistinct_rhos(s, psis)[0])
    M = _fock_corr(s, psis)[0]
    _, orientation = fock_canonical_values(M)
    return MarginalData(s.kind, corr=M, orientation=orientation)


def spectra(s: Scenario, marg: MarginalData) -> np.ndarray:
    """Chamber-ordered one-body spectra of a marginal."""
    rs = s.root_system
    if s.kind == "dist":
        parts = []
        for rho in marg.rhos:
            parts.append(np.sort(np.linalg.eigvalsh(rho))[::-1])
        return np.concatenate(parts)
    if s.kind in ("bosons", "fermions"):
        return np.sort(np.linalg.eigvalsh(marg.rho))[::-1]
    vals, orientation = fock_canonical_values(marg.corr)
    return to_chamber(rs, vals / 2.0, orientation=orientation)


def mu_torus(s: Scenario, psi: np.ndarray) -> np.ndarray:
    """Diagonal part of the momentum image: the |amplitude|^2 average of weights."""
    psi = np.asarray(psi, dtype=complex)
    return (np.abs(psi) ** 2) @ _weight_matrix(s)


def sample_spectra(
    s: Scenario, n: int, seed: int, mask: Optional[Iterable] = None
) -> np.ndarray:
    """(n, rank) chamber spectra of seeded random states (batched)."""
    psis = random_states(s, n, seed, mask)
    if s.kind == "dist":
        parts = []
        for rho in _dist_rhos(s, psis):
            ev = np.linalg.eigvalsh(rho)
            parts.append(ev[:, ::-1])
        return np.concatenate(parts, axis=1)
    if s.kind in ("bosons", "fermions"):
        ev = np.linalg.eigvalsh(_indistinct_rhos(s, psis))
        return ev[:, ::-1]
    Ms = _fock_corr(s, psis)
    out = np.empty((n, s.rank))
    for i in range(n):
        vals, orientation = fock_canonical_values(Ms[i])
        out[i] = to_chamber(s.root_system, vals / 2.0, orientation=orientation)
    return out


# ---------------------------------------------------------------------------
# containment statistics


@dataclass(frozen=True)
class ContainmentStats:
    scenario: str
    n: int
    seed: int
    tol: float
    inside_fraction: float
    max_violation: float
    nearest_vertex_distance: Optional[dict] = None


def violations(h: HPolytope, points: np.ndarray) -> np.ndarray:
    """Worst constraint violation of each row of `points` against `h`."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    out = np.zeros(len(pts))
    for normal, offset in h.inequalities:
        slack = float(offset) - pts @ np.array([float(x) for x in normal])
        out = np.maximum(out, slack)
    for normal, offset in h.equalities:
        resid = np.abs(pts @ np.array([float(x) for x in normal]) - float(offset))
        out = np.maximum(out, resid)
    return out


def containment_stats(
    s: Scenario,
    h: HPolytope,
    n: int = 10_000,
    tol: float = 1e-8,
    seed: int = 0,
    mask: Optional[Iterable] = None,
    vertices: Optional[VPolytope] = None,
) -> ContainmentStats:
    """Monte Carlo membership rate of sampled spectra in an H-polytope."""
    pts = sample_spectra(s, n, seed, mask)
    viol = violations(h, pts)
    nearest = None
    if vertices is not None:
        nearest = {}
        for v in vertices.vertices:
            d = np.linalg.norm(pts - np.array([float(x) for x in v]), axis=1)
            nearest[tuple(str(x) for x in v)] = float(d.min())
    return ContainmentStats(
        scenario=str(s),
        n=n,
        seed=seed,
        tol=tol,
        inside_fraction=float(np.mean(viol <= tol)),
        max_violation=float(viol.max()),
        nearest_vertex_distance=nearest,
    )
