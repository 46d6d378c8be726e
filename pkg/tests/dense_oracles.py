"""Dense matrix oracles: build each scenario's state space explicitly inside
a full tensor-product (or Fock) space and compute operators / marginals by
brute force. Completely independent of the library's lowering tables.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


# -- distinguishable ---------------------------------------------------------


def dist_embed(dims, psi):
    """Coefficient vector on the lexicographic product basis -> tensor."""
    return np.asarray(psi, dtype=complex).reshape(dims)


def dist_rdm(dims, psi, k):
    """One-particle reduced density matrix of particle k by partial trace."""
    T = dist_embed(dims, psi)
    axes = [i for i in range(len(dims)) if i != k]
    return np.tensordot(T, T.conj(), axes=(axes, axes))


# -- fermions / bosons: embed into (C^N)^{otimes L} --------------------------


def fermion_embedding(L, N):
    """Columns: normalized antisymmetrized product states, one per increasing
    mode tuple (lexicographic order)."""
    keys = list(itertools.combinations(range(N), L))
    dim_tensor = N**L
    cols = np.zeros((dim_tensor, len(keys)), dtype=complex)
    for c, key in enumerate(keys):
        for perm in itertools.permutations(range(L)):
            sign = perm_parity(perm)
            idx = 0
            for site in range(L):
                idx = idx * N + key[perm[site]]
            cols[idx, c] += sign
        cols[:, c] /= np.linalg.norm(cols[:, c])
    return keys, cols


def boson_embedding(L, N):
    """Columns: normalized symmetrized product states, one per occupation
    vector (lexicographic order)."""
    keys = sorted(
        {
            tuple(sum(1 for i in combo if i == m) for m in range(N))
            for combo in itertools.combinations_with_replacement(range(N), L)
        }
    )
    cols = np.zeros((N**L, len(keys)), dtype=complex)
    for c, occ in enumerate(keys):
        modes = [m for m in range(N) for _ in range(occ[m])]
        for perm in set(itertools.permutations(modes)):
            idx = 0
            for m in perm:
                idx = idx * N + m
            cols[idx, c] += 1
        cols[:, c] /= np.linalg.norm(cols[:, c])
    return keys, cols


def perm_parity(perm):
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


def one_body_operator(L, N, X):
    """sum_site 1 x ... x X x ... x 1 on (C^N)^{otimes L}."""
    out = np.zeros((N**L, N**L), dtype=complex)
    for site in range(L):
        op = np.array([[1.0 + 0j]])
        for s in range(L):
            op = np.kron(op, X if s == site else np.eye(N))
        out += op
    return out


def indistinct_rdm(L, N, embed_cols, psi):
    """rho_1[i, j] = <a_j^dag a_i> = <Psi| sum_site E_ji |Psi> on the embedding."""
    full = embed_cols @ np.asarray(psi, dtype=complex)
    rho = np.zeros((N, N), dtype=complex)
    for i in range(N):
        for j in range(N):
            E = np.zeros((N, N))
            E[j, i] = 1.0  # E_ji = |j><i|; <sum_site E_ji> = <a_j^dag a_i>
            rho[i, j] = full.conj() @ one_body_operator(L, N, E) @ full
    return rho


# -- fermionic Fock space ----------------------------------------------------


def fock_annihilators(N):
    """Dense a_i on the 2^N Fock basis ordered by (particle number, modes lex),
    matching the library's basis convention when restricted to a parity sector."""
    keys = [
        combo
        for size in range(N + 1)
        for combo in itertools.combinations(range(1, N + 1), size)
    ]
    index = {k: i for i, k in enumerate(keys)}
    dim = len(keys)
    ops = []
    for mode in range(1, N + 1):
        a = np.zeros((dim, dim), dtype=complex)
        for k, key in enumerate(keys):
            if mode in key:
                sign = -1 if sum(1 for m in key if m < mode) % 2 else 1
                tgt = tuple(m for m in key if m != mode)
                a[index[tgt], k] = sign
        ops.append(a)
    return keys, ops


def fock_majorana_correlation(N, sector_keys, psi):
    """M[k, l] = i <psi| c_k c_l |psi| for k != l, dense construction."""
    keys, ann = fock_annihilators(N)
    index = {k: i for i, k in enumerate(keys)}
    full = np.zeros(len(keys), dtype=complex)
    for amp, key in zip(psi, sector_keys):
        full[index[key]] = amp
    cs = []
    for i, a in enumerate(ann):
        cs.append(a + a.conj().T)
        cs.append(1j * (a - a.conj().T))
    M = np.zeros((2 * N, 2 * N))
    for k in range(2 * N):
        for l in range(2 * N):
            if k != l:
                val = 1j * (full.conj() @ cs[k] @ cs[l] @ full)
                assert abs(val.imag) < 1e-10
                M[k, l] = val.real
    return M


def fock_occupations(N, sector_keys, psi):
    occ = np.zeros(N)
    for amp, key in zip(psi, sector_keys):
        for m in key:
            occ[m - 1] += abs(amp) ** 2
    return occ
