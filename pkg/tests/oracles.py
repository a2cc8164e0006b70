"""Independent oracles.  Nothing here touches the coset enumerator."""

import math

import numpy as np


def reflection_matrices(labels_by_pair):
    """Geometric representation of a rank-4 Coxeter group.

    ``labels_by_pair[(i, j)]`` (0-based, i < j) is the order of s_i s_j.
    s_i(v) = v - 2 B(e_i, v) e_i with B_ij = -cos(pi / m_ij).
    """
    B = np.eye(4)
    for (i, j), m in labels_by_pair.items():
        B[i, j] = B[j, i] = -math.cos(math.pi / m)
    mats = []
    for i in range(4):
        s = np.eye(4)
        s[i, :] -= 2 * B[i, :]
        mats.append(s)
    return mats


def permutation_matrix(perm):
    """Matrix sending e_i to e_perm[i] (0-based)."""
    p = np.zeros((4, 4))
    for i, j in enumerate(perm):
        p[j, i] = 1.0
    return p


def matrix_group_order(gens, limit=100_000):
    """Order of the group generated by ``gens`` by breadth-first closure.

    Returns None if more than ``limit`` elements are found."""
    def key(m):
        return tuple(np.round(m, 6).ravel() + 0.0)

    ident = np.eye(gens[0].shape[0])
    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                x = g @ m
                k = key(x)
                if k not in seen:
                    seen.add(k)
                    nxt.append(x)
                    if len(seen) > limit:
                        return None
        frontier = nxt
    return len(seen)


def tetra_matrices(t, twists=()):
    """Reflections in the faces of ``t`` plus permutation matrices for twists.

    Uses only the labels and the face/vertex incidence: faces i and j meet
    along the edge joining the other two vertices."""
    pairs = {}
    for i in range(4):
        for j in range(i + 1, 4):
            k, l = [v for v in range(4) if v not in (i, j)]
            pairs[(i, j)] = t.label(k + 1, l + 1)
    mats = reflection_matrices(pairs)
    for perm in twists:
        mats.append(permutation_matrix([perm(i + 1) - 1 for i in range(4)]))
    return mats


def brute_relabel(labels, perm):
    """Relabel by a vertex permutation given as a dict on 1..4, via an
    explicit edge dictionary."""
    names = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)]
    edge = {frozenset(e): x for e, x in zip(names, labels)}
    moved = {frozenset(perm[v] for v in e): x for e, x in edge.items()}
    return tuple(moved[frozenset(e)] for e in names)


def signature(matrix, tol=1e-9):
    """(positive, zero, negative) eigenvalue counts of a symmetric matrix."""
    w = np.linalg.eigvalsh(matrix)
    return (int((w > tol).sum()), int((abs(w) <= tol).sum()), int((w < -tol).sum()))
