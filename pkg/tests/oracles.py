"""Independent reference computations used only by the tests.

Nothing here calls into the code paths it is used to check.
"""

import itertools
from fractions import Fraction

import numpy as np


def all_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


# -- LR coefficients via Jacobi-Trudi + Pieri ------------------------------

def _horizontal_strips(lam, a):
    """All nu with nu/lam a horizontal strip of size a."""
    lam = list(lam) + [0]
    out = []

    def rec(i, remaining, acc):
        if i == len(lam):
            if remaining == 0:
                out.append(tuple(p for p in acc if p))
            return
        cap = lam[i - 1] - lam[i] if i > 0 else remaining
        for add in range(min(cap, remaining), -1, -1):
            rec(i + 1, remaining - add, acc + [lam[i] + add])

    rec(0, a, [])
    return out


def schur_times_h(expansion, a):
    out = {}
    for lam, c in expansion.items():
        for nu in _horizontal_strips(lam, a):
            out[nu] = out.get(nu, 0) + c
    return out


def lr_product_oracle(lam, mu):
    """s_lam * s_mu = sum_perm sign * s_lam * prod h_{mu_i - i + perm(i)}."""
    ell = len(mu)
    total = {}
    for perm in itertools.permutations(range(ell)):
        degs = [mu[i] - i + perm[i] for i in range(ell)]
        if any(d < 0 for d in degs):
            continue
        sign = (-1) ** sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        exp = {tuple(lam): 1}
        for d in degs:
            if d:
                exp = schur_times_h(exp, d)
        for nu, c in exp.items():
            total[nu] = total.get(nu, 0) + sign * c
    return {k: v for k, v in total.items() if v}


# -- Kostka numbers by counting SSYT -----------------------------------------

def kostka(shape, content):
    """Number of semistandard tableaux of ``shape`` with the given content."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    counts = list(content)
    filling = {}

    def rec(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, len(counts) + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                filling[(i, j)] = v
                total += rec(idx + 1)
                counts[v - 1] += 1
        return total

    if sum(shape) != sum(content):
        return 0
    return rec(0)


def transpose(p):
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


# -- symmetric group characters via Young permutation characters -------------

def permutation_character(alpha, cycle_type):
    """Fixed points of a permutation of the given type on row-tabloids of shape alpha."""
    alpha = [a for a in alpha if a]

    def rec(cycles, rows):
        if not cycles:
            return 1 if all(r == 0 for r in rows) else 0
        c, rest = cycles[0], cycles[1:]
        total = 0
        for i in range(len(rows)):
            if rows[i] >= c:
                rows[i] -= c
                total += rec(rest, rows)
                rows[i] += c
        return total

    return rec(list(cycle_type), list(alpha))


def sn_character_oracle(lam, cycle_type):
    """Jacobi-Trudi on permutation characters: det(M^{lam_i - i + j})."""
    ell = len(lam)
    total = 0
    for perm in itertools.permutations(range(ell)):
        alpha = [lam[i] - i + perm[i] for i in range(ell)]
        if any(a < 0 for a in alpha):
            continue
        sign = (-1) ** sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        total += sign * permutation_character(alpha, cycle_type)
    return total


# -- explicit matrix models ----------------------------------------------------

def signed_permutation_matrix(components, perm):
    """B_n reflection model: column i goes to row perm[i] with sign of g_{perm[i]}."""
    n = len(perm)
    M = np.zeros((n, n), dtype=int)
    for i in range(n):
        M[perm[i], i] = -1 if components[perm[i]] == 1 else 1
    return M


def permutation_sign(perm):
    n = len(perm)
    return (-1) ** sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def b2_models():
    """Explicit matrix models of all five irreducibles of B_2 keyed by label.

    Elements are ``(components, perm)`` with Z/2 written additively (0, 1).
    """
    def one_dim(f):
        return lambda comps, perm: np.array([[f(comps, perm)]], dtype=int)

    return {
        ((2,), ()): one_dim(lambda c, p: 1),
        ((1, 1), ()): one_dim(lambda c, p: permutation_sign(p)),
        ((), (2,)): one_dim(lambda c, p: (-1) ** sum(c)),
        ((), (1, 1)): one_dim(lambda c, p: (-1) ** sum(c) * permutation_sign(p)),
        ((1,), (1,)): signed_permutation_matrix,
    }


def wreath_elements(order, n):
    for comps in itertools.product(range(order), repeat=n):
        for perm in itertools.permutations(range(n)):
            yield comps, perm


def wreath_multiply(mul, x, y):
    """Same law as the library, written out independently: (f;p)(g;s) = (f * g o p^-1; ps)."""
    (f, p), (g, s) = x, y
    n = len(p)
    p_inv = [p.index(j) for j in range(n)]
    comps = tuple(mul(f[j], g[p_inv[j]]) for j in range(n))
    return comps, tuple(p[s[i]] for i in range(n))


def is_homomorphism(model, elements, mul):
    mats = {x: model(*x) for x in elements}
    for x in elements:
        for y in elements:
            if not np.array_equal(mats[x] @ mats[y], mats[wreath_multiply(mul, x, y)]):
                return False
    return True


def element_inner_product(chi, psi, elements):
    """<chi, psi> over explicit elements, for real-valued characters."""
    total = sum(Fraction(chi[x]) * psi[x] for x in elements)
    return total / len(elements)


def tensor_power_model(rho, n, twist=False):
    """Model of U^{(x)n} (optionally (x) sign) for S_n(G), rho: element -> matrix of U.

    (f; p) sends v_1 (x) ... (x) v_n to the tensor whose slot p(i) holds rho(f_{p(i)}) v_i.
    """
    def model(comps, perm):
        d = rho(comps[0]).shape[0]
        M = np.zeros((d ** n, d ** n), dtype=rho(comps[0]).dtype)
        mats = [rho(c) for c in comps]
        for src in itertools.product(range(d), repeat=n):
            col = int(np.ravel_multi_index(src, (d,) * n)) if n else 0
            # slot perm[i] receives mats[perm[i]] @ e_{src[i]}
            columns = [None] * n
            for i in range(n):
                columns[perm[i]] = mats[perm[i]][:, src[i]]
            for dst in itertools.product(range(d), repeat=n):
                coef = 1
                for slot in range(n):
                    coef = coef * columns[slot][dst[slot]]
                    if coef == 0:
                        break
                if coef:
                    M[int(np.ravel_multi_index(dst, (d,) * n)), col] += coef
        if twist:
            M = M * permutation_sign(perm)
        return M
    return model


def s3_standard_matrices():
    """2x2 integer matrices of the S3 standard representation, keyed like the built-in s3."""
    perms = list(itertools.permutations(range(3)))
    B = np.array([[1, 0], [-1, 1], [0, -1]])  # basis e0-e1, e1-e2
    out = []
    for p in perms:
        P = np.zeros((3, 3), dtype=int)
        for x in range(3):
            P[p[x], x] = 1
        # solve B X = P B exactly: coordinates in the basis (e0-e1, e1-e2)
        image = P @ B
        X = np.zeros((2, 2), dtype=int)
        for j in range(2):
            a = image[0, j]
            b = -image[2, j]
            X[:, j] = (a, b)
            assert np.array_equal(B @ X[:, j], image[:, j])
        out.append(X)
    return out


def principal_minor_sum(M, k):
    """e_k of the eigenvalues of M, i.e. the trace of M on Lambda^k."""
    n = M.shape[0]
    if k == 0:
        return 1
    total = 0
    for idx in itertools.combinations(range(n), k):
        total += round(np.linalg.det(M[np.ix_(idx, idx)].astype(float)))
    return total
