"""Independent checks used only by the tests."""

import numpy as np

from hopfact.permcore import compose, inverse


def left_mult_matrices(H):
    d = H.dim
    L = np.zeros((d, d, d))
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            L[i, k, j] = float(c)
    return L


def wedderburn_block_dims(H, seed=0, tol=1e-6):
    """Irrep dimensions of a semisimple algebra from its structure constants.

    A generic central element acts by a distinct scalar on each simple block
    M_n, so left multiplication by it has eigenvalues of multiplicity n^2.
    """
    d = H.dim
    L = left_mult_matrices(H)
    # x central iff x e_j = e_j x for all j
    rows = []
    for j in range(d):
        R_j = np.zeros((d, d))  # column i: e_i e_j - e_j e_i
        for i in range(d):
            R_j[:, i] = L[i, :, j] - L[j, :, i]
        rows.append(R_j)
    A = np.vstack(rows)
    _, s, vt = np.linalg.svd(A)
    null = vt[np.sum(s > tol):]
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(len(null)) @ null
    Lz = np.tensordot(z, L, axes=1)
    eig = np.sort_complex(np.linalg.eigvals(Lz))
    clusters = []
    for ev in eig:
        for c in clusters:
            if abs(c[0] - ev) < 1e-5:
                c[1] += 1
                break
        else:
            clusters.append([ev, 1])
    dims = []
    for _, m in clusters:
        n = round(m ** 0.5)
        assert n * n == m, "multiplicity is not a square"
        dims.append(n)
    return sorted(dims), len(null)


def bicrossproduct_by_definition(f):
    """Structure constants of H(G, G1, G2) straight from group elements.

    ``a . c`` is the G2 element ``b`` with ``a c G1 = b G1``; the coproduct
    twist ``b^-1 . a`` is the G1 part of ``b^-1 a`` in G1 G2.
    """
    g1, g2 = f.g1_elements, f.g2_elements
    n1 = len(g1)
    idx = {}
    for j, b in enumerate(g2):
        for i, a in enumerate(g1):
            idx[(b, a)] = j * n1 + i

    def coset_rep(x):
        return next(b for b in g2 if f.G1.contains(compose(inverse(b), x)))

    def g1_part(x):
        return next(a for a in g1 if f.G2.contains(compose(inverse(a), x)))

    mult = {}
    for b in g2:
        for a in g1:
            for c in g2:
                if coset_rep(compose(a, c)) != b:
                    continue
                for a2 in g1:
                    mult[(idx[(b, a)], idx[(c, a2)])] = {idx[(b, compose(a, a2))]: 1}
    comult = {}
    for b in g2:
        for c in g2:
            g = compose(b, c)
            for a in g1:
                tw = g1_part(compose(inverse(b), a))
                comult.setdefault(idx[(g, a)], {})[(idx[(b, a)], idx[(c, tw)])] = 1
    return mult, comult
