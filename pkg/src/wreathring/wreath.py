"""The representation ring of the wreath product S_n(G) = G^n x| S_n.

Irreducibles are indexed by multipartitions over Irr(G); conjugacy classes by
multipartitions over the conjugacy classes of G (cycle lengths sorted by the
class of their cycle product).  Characters are exact cyclotomic numbers.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from math import factorial, prod

import numpy as np

from .cyclotomic import Cyclotomic, degree
from .partitions import lr_coproduct, multipartitions, num_standard_tableaux, size
from .symfunc import _basis_product


class InternalInconsistency(RuntimeError):
    """An exact invariant that must hold was violated."""


class RequiresGenuineElement(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


# Class sizes are cross-checked by brute-force element enumeration up to this
# group order.
BRUTE_FORCE_LIMIT = 10**5


@dataclass(frozen=True)
class WreathElement:
    """``components[i]`` is a G-element index; ``perm[i]`` is the image of i."""

    components: tuple
    perm: tuple


class RepRingElement:
    """Integer combination of irreducible labels of S_n(G), all of size n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        out = {}
        for label, c in (coeffs or {}).items():
            if size(label) != n:
                raise SizeMismatch(f"label {label} does not have size {n}")
            if c:
                out[label] = out.get(label, 0) + c
        self.coeffs = {k: v for k, v in out.items() if v}

    @classmethod
    def irreducible(cls, label):
        return cls(size(label), {tuple(label): 1})

    def __add__(self, other):
        if other.n != self.n:
            raise SizeMismatch(f"S_{self.n} vs S_{other.n}")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return RepRingElement(self.n, out)

    def __neg__(self):
        return RepRingElement(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return RepRingElement(self.n, {k: v * c for k, v in self.coeffs.items()})

    def is_genuine(self):
        return all(v > 0 for v in self.coeffs.values())

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, RepRingElement) and self.n == other.n \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*V{label}" for label, c in self.coeffs.items())


def _int_coords(value):
    out = []
    for c in value.coeffs:
        if Fraction(c).denominator != 1:
            raise InternalInconsistency(f"{value} is not an algebraic integer")
        out.append(int(c))
    return out


_INT64_SAFE = 2**62


def _exact_matmul(a, b):
    """Exact integer matrix product; int64 when a bound rules out overflow."""
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    bound = int(np.max(np.abs(a))) * int(np.max(np.abs(b))) * a.shape[1]
    if bound < _INT64_SAFE:
        return (a.astype(np.int64) @ b.astype(np.int64)).astype(object)
    return a @ b


def merge_class_labels(labels):
    """Union of cycle data: concatenate, per G-class, the parts of each label."""
    return tuple(tuple(sorted(itertools.chain(*parts), reverse=True))
                 for parts in zip(*labels))


def filtration_degree(label):
    """n - (first part of the unit-object partition)."""
    n = size(label)
    unit = label[0]
    return n - (unit[0] if unit else 0)


def sn_character(lam, cycle_type):
    """Character of the Specht module S^lam at a permutation of the given cycle type."""
    return _mn(tuple(lam), tuple(sorted(cycle_type, reverse=True)))


@cache
def _mn(lam, mu):
    # Murnaghan-Nakayama on beta-sets: strip a rim hook of length mu[0]
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    present = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in present:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = sorted((present - {b}) | {t}, reverse=True)
        new_lam = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


class WreathProduct:
    """Character-theoretic model of R(S_n(G)) for a validated table of G."""

    def __init__(self, table, n):
        self.table = table
        self.group = table.group
        self.n = n
        self.m = len(table.values)
        self.N = table.N
        self.num_g_classes = len(table.ccl)
        self.order = self.group.order ** n * factorial(n)
        self.irreps = multipartitions(n, self.m)
        self.irrep_index = {lab: i for i, lab in enumerate(self.irreps)}
        self.classes = multipartitions(n, self.num_g_classes)
        self.class_index = {lab: i for i, lab in enumerate(self.classes)}
        self._char_cache = {}
        self._power_cache = {}
        self._mult_cache = {}

    @property
    def rank(self):
        return len(self.irreps)

    def __repr__(self):
        return f"WreathProduct({self.group.name}, n={self.n})"

    # -- elements ----------------------------------------------------------

    def identity_element(self):
        return WreathElement((self.group.identity,) * self.n, tuple(range(self.n)))

    def multiply(self, x, y):
        """(f; p)(g; s) = (f * (g o p^-1); p s)."""
        G = self.group
        inv_p = [0] * self.n
        for i, j in enumerate(x.perm):
            inv_p[j] = i
        comps = tuple(G.mul(x.components[j], y.components[inv_p[j]]) for j in range(self.n))
        perm = tuple(x.perm[y.perm[i]] for i in range(self.n))
        return WreathElement(comps, perm)

    def inverse(self, x):
        G = self.group
        inv_p = [0] * self.n
        for i, j in enumerate(x.perm):
            inv_p[j] = i
        # (f; p)^-1 = (g; p^-1) with g_j = f_{p(j)}^-1
        comps = tuple(G.inverse[x.components[x.perm[j]]] for j in range(self.n))
        return WreathElement(comps, tuple(inv_p))

    def power(self, x, k):
        result = self.identity_element()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    def elements(self):
        for comps in itertools.product(range(self.group.order), repeat=self.n):
            for perm in itertools.permutations(range(self.n)):
                yield WreathElement(comps, perm)

    def classify(self, x):
        G, ccl = self.group, self.table.ccl
        inv_p = [0] * self.n
        for i, j in enumerate(x.perm):
            inv_p[j] = i
        seen = [False] * self.n
        cycles = [[] for _ in range(self.num_g_classes)]
        for start in range(self.n):
            if seen[start]:
                continue
            g, j, length = x.components[start], inv_p[start], 1
            seen[start] = True
            while j != start:
                seen[j] = True
                g = G.mul(g, x.components[j])
                j = inv_p[j]
                length += 1
            cycles[ccl.class_of[g]].append(length)
        return tuple(tuple(sorted(c, reverse=True)) for c in cycles)

    def class_representative(self, label):
        G, reps = self.group, self.table.ccl.representatives
        comps = [G.identity] * self.n
        perm = list(range(self.n))
        pos = 0
        for c, parts in enumerate(label):
            for r in parts:
                for i in range(r):
                    perm[pos + i] = pos + (i + 1) % r
                comps[pos] = reps[c]
                pos += r
        return WreathElement(tuple(comps), tuple(perm))

    def class_power(self, label, i):
        key = (label, i)
        if key not in self._power_cache:
            w = self.power(self.class_representative(label), i)
            self._power_cache[key] = self.classify(w)
        return self._power_cache[key]

    # -- class sizes -------------------------------------------------------

    def centralizer_order(self, label):
        G = self.group
        sizes = self.table.ccl.sizes
        z = 1
        for c, parts in enumerate(label):
            cent = G.order // sizes[c]
            for r in set(parts):
                mult = parts.count(r)
                z *= factorial(mult) * (r * cent) ** mult
        return z

    def class_size(self, label):
        return self.order // self.centralizer_order(label)

    @cached_property
    def class_sizes(self):
        sizes = tuple(self.class_size(lab) for lab in self.classes)
        if sum(sizes) != self.order:
            raise InternalInconsistency("class sizes do not sum to the group order")
        if self.order <= BRUTE_FORCE_LIMIT:
            counted = self.brute_force_class_sizes()
            if counted != sizes:
                raise InternalInconsistency("centralizer formula disagrees with enumeration")
        return sizes

    def brute_force_class_sizes(self):
        counts = [0] * len(self.classes)
        for x in self.elements():
            counts[self.class_index[self.classify(x)]] += 1
        return tuple(counts)

    # -- characters ----------------------------------------------------------

    def _zero(self):
        return Cyclotomic.from_int(self.N, 0)

    def _one(self):
        return Cyclotomic.from_int(self.N, 1)

    def induced_class_function(self, factors):
        """Induce an outer product of class functions from a Young-type subgroup.

        ``factors`` is a list of ``(WreathProduct W_i, values over W_i.classes)``
        with the ``W_i.n`` summing to ``self.n``.  Uses
        Ind(f)(C) = z_C / |H| * sum over H-classes D in C of |D| f(D).
        """
        if sum(W.n for W, _ in factors) != self.n:
            raise SizeMismatch("factor sizes must add up to n")
        factors = [(W, vals) for W, vals in factors if W.n > 0]
        h_order = prod(W.order for W, _ in factors)
        acc = {}
        pools = []
        for W, vals in factors:
            pools.append([(lab, vals[i] * W.class_sizes[i])
                          for i, lab in enumerate(W.classes) if not vals[i].is_zero()])
        for combo in itertools.product(*pools):
            merged = merge_class_labels([lab for lab, _ in combo]) if combo \
                else ((),) * self.num_g_classes
            weight = self._one()
            for _, v in combo:
                weight = weight * v
            acc[merged] = acc[merged] + weight if merged in acc else weight
        out = []
        for lab in self.classes:
            if lab in acc:
                out.append(acc[lab] * Fraction(self.centralizer_order(lab), h_order))
            else:
                out.append(self._zero())
        return tuple(out)

    def base_character(self, u, lam):
        """U^{(x)n} (x) Specht(lam) on S_n(G), U the u-th irreducible of G (n = |lam|)."""
        chi_u = self.table.values[u]
        out = []
        for lab in self.classes:
            value = self._one()
            cycle_type = []
            for c, parts in enumerate(lab):
                for _ in parts:
                    value = value * chi_u[c]
                cycle_type.extend(parts)
            out.append(value * sn_character(lam, cycle_type))
        return tuple(out)

    def character(self, label):
        """Exact character values of V(label), indexed like ``self.classes``."""
        label = tuple(label)
        if label not in self._char_cache:
            if size(label) != self.n:
                raise SizeMismatch(f"{label} is not a label for n={self.n}")
            factors = []
            values = None
            for u, lam in enumerate(label):
                k = sum(lam)
                if k == self.n:
                    values = self.base_character(u, lam)
                elif k:
                    Wk = wreath_product(self.table, k)
                    factors.append((Wk, Wk.base_character(u, lam)))
            if values is None:
                values = self.induced_class_function(factors)
            self._char_cache[label] = values
        return self._char_cache[label]

    def irreducible_character(self, label, class_label):
        return self.character(label)[self.class_index[tuple(class_label)]]

    @cached_property
    def character_table(self):
        return tuple(self.character(lab) for lab in self.irreps)

    def dimension(self, label):
        d = factorial(self.n)
        dims = self.table.dimensions
        for u, lam in enumerate(label):
            k = sum(lam)
            d = d * Fraction(dims[u] ** k * num_standard_tableaux(lam), factorial(k))
        if Fraction(d).denominator != 1:
            raise InternalInconsistency(f"non-integral dimension for {label}")
        return int(d)

    def element_dimension(self, x):
        return sum(c * self.dimension(lab) for lab, c in x.coeffs.items())

    def class_function(self, x):
        """Character of a RepRingElement."""
        if x.n != self.n:
            raise SizeMismatch(f"element lives over S_{x.n}, not S_{self.n}")
        out = [self._zero()] * len(self.classes)
        for lab, c in x.coeffs.items():
            chi = self.character(lab)
            out = [a + b * c for a, b in zip(out, chi)]
        return tuple(out)

    def inner_product(self, f, g):
        sizes = self.class_sizes
        total = self._zero()
        for s, a, b in zip(sizes, f, g):
            total = total + a * b.conjugate() * s
        return total / self.order

    # Decomposition runs on integer coordinates: character values lie in
    # Z[zeta_N], whose power basis is a Z-basis.

    @cached_property
    def _table_coords(self):
        """Array (irreps, classes, d) of power-basis coordinates."""
        return np.array([[_int_coords(v) for v in row] for row in self.character_table],
                        dtype=object)

    @cached_property
    def _dual(self):
        """Matrix (classes*d, irreps*d): coordinates of z^j |C| conj(chi(C))."""
        d = degree(self.N)
        K, r = len(self.classes), self.rank
        out = np.zeros((K * d, r * d), dtype=object)
        for v, row in enumerate(self.character_table):
            for c, (value, s) in enumerate(zip(row, self.class_sizes)):
                w = value.conjugate() * s
                for j in range(d):
                    out[c * d + j, v * d:(v + 1) * d] = _int_coords(Cyclotomic.zeta(self.N, j) * w)
        return out

    def _decompose_coords(self, coords):
        """Rows of class-function coordinates (s, classes*d) -> integer multiplicities (s, r)."""
        d = degree(self.N)
        raw = _exact_matmul(coords, self._dual).reshape(coords.shape[0], self.rank, d)
        if d > 1 and np.any(raw[:, :, 1:] != 0):
            raise InternalInconsistency("irrational multiplicity in a decomposition")
        lead = raw[:, :, 0]
        if np.any(lead % self.order != 0):
            raise InternalInconsistency("non-integral multiplicity in a decomposition")
        return lead // self.order

    def decompose(self, values):
        """Write a virtual character as a RepRingElement; coefficients must be integers."""
        coords = np.array([[c for v in values for c in _int_coords(v)]], dtype=object)
        return self.element([int(c) for c in self._decompose_coords(coords)[0]])

    # -- ring operations -----------------------------------------------------

    def one(self):
        return RepRingElement.irreducible(((self.n,) if self.n else (),) + ((),) * (self.m - 1))

    def vector(self, x):
        v = [0] * self.rank
        for lab, c in x.coeffs.items():
            v[self.irrep_index[lab]] = c
        return v

    def element(self, vec):
        return RepRingElement(self.n, {lab: c for lab, c in zip(self.irreps, vec) if c})

    def tensor_decompose(self, a, b):
        fa, fb = self.class_function(a), self.class_function(b)
        return self.decompose(tuple(x * y for x, y in zip(fa, fb)))

    def multiplication_matrix(self, b):
        """Integer matrix M with row i = decomposition of V(irreps[i]) (x) b."""
        key = tuple(self.vector(b))
        if key not in self._mult_cache:
            d = degree(self.N)
            fb = self.class_function(b)
            F = self._table_coords
            products = np.empty((self.rank, len(self.classes), d), dtype=object)
            for c, value in enumerate(fb):
                # multiplication by fb(C) as a d x d matrix on coordinates
                mult = np.array([_int_coords(Cyclotomic.zeta(self.N, j) * value)
                                 for j in range(d)], dtype=object)
                products[:, c, :] = _exact_matmul(F[:, c, :], mult)
            flat = products.reshape(self.rank, len(self.classes) * d)
            M = self._decompose_coords(flat)
            self._mult_cache[key] = [[int(x) for x in row] for row in M]
        return self._mult_cache[key]

    def multiply_vectors(self, x, y):
        """Product of two elements given as integer vectors over ``self.irreps``."""
        M = self.multiplication_matrix(self.element(y))
        out = [0] * self.rank
        for i, c in enumerate(x):
            if c:
                row = M[i]
                for j in range(self.rank):
                    if row[j]:
                        out[j] += c * row[j]
        return out

    def exterior_power(self, x, k):
        """Lambda^k x via Newton's identity on power-map character values."""
        if not x.is_genuine():
            raise RequiresGenuineElement("exterior powers need a genuine representation")
        if k == 0:
            return self.one()
        if k > self.element_dimension(x):
            return RepRingElement(self.n)
        chi = self.class_function(x)
        power_sums = {}
        for i in range(1, k + 1):
            power_sums[i] = tuple(chi[self.class_index[self.class_power(lab, i)]]
                                  for lab in self.classes)
        e = [tuple(self._one() for _ in self.classes)]
        for j in range(1, k + 1):
            acc = [self._zero()] * len(self.classes)
            for i in range(1, j + 1):
                sign = 1 if i % 2 else -1
                acc = [a + b * p * sign for a, b, p in zip(acc, e[j - i], power_sums[i])]
            e.append(tuple(a / j for a in acc))
        return self.decompose(e[k])

    def restricted_class_function(self, values, k):
        """Restriction of a class function to S_k(G) x S_{n-k}(G), keyed by class pairs."""
        Wk, Wr = wreath_product(self.table, k), wreath_product(self.table, self.n - k)
        out = {}
        for a in Wk.classes:
            for b in Wr.classes:
                out[(a, b)] = values[self.class_index[merge_class_labels([a, b])]]
        return out


@cache
def wreath_product(table, n):
    return WreathProduct(table, n)


def enumerate_irreps(table, n):
    return multipartitions(n, len(table.values))


def class_labels(table, n):
    return multipartitions(n, len(table.ccl))


def induce(a, b):
    """Induction from S_k(G) x S_{n-k}(G); coefficients are products of LR numbers."""
    out = {}
    for la, ca in a.coeffs.items():
        for lb, cb in b.coeffs.items():
            if len(la) != len(lb):
                raise SizeMismatch("labels over different irreducible sets")
            for nu, c in _basis_product(la, lb).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return RepRingElement(a.n + b.n, out)


def restrict(x, k):
    """Restriction to S_k(G) x S_{n-k}(G) as ``{(alpha, beta): multiplicity}``."""
    if not 0 <= k <= x.n:
        raise SizeMismatch(f"cannot restrict S_{x.n} to S_{k} x S_{x.n - k}")
    out = {}
    for nu, c in x.coeffs.items():
        per_component = []
        for part in nu:
            options = []
            for j in range(sum(part) + 1):
                for (alpha, beta), d in lr_coproduct(part, j).items():
                    options.append((alpha, beta, d))
            per_component.append(options)
        for combo in itertools.product(*per_component):
            if sum(sum(alpha) for alpha, _, _ in combo) != k:
                continue
            key = (tuple(a for a, _, _ in combo), tuple(b for _, b, _ in combo))
            out[key] = out.get(key, 0) + c * prod(d for _, _, d in combo)
    return {k_: v for k_, v in out.items() if v}


def trivial_label(n, m):
    return ((n,) if n else (),) + ((),) * (m - 1)

