"""The graded ring of tensor products of symmetric functions, Schur basis.

Basis labels are multipartitions (one partition per irreducible of G); the
product is induction, whose structure constants are products of
Littlewood-Richardson coefficients taken componentwise.
"""

import itertools
from dataclasses import dataclass
from functools import cache

from .partitions import conjugate, lr_product, multipartitions, size


class IndexMismatch(ValueError):
    pass


class GradedRingElement:
    """Finitely supported integer combination of multipartition labels."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        clean = {}
        for label, c in (terms or {}).items():
            if len(label) != m:
                raise IndexMismatch(f"label {label} has {len(label)} components, expected {m}")
            if c:
                clean[label] = clean.get(label, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def one(cls, m):
        return cls(m, {((),) * m: 1})

    @classmethod
    def basis(cls, label):
        return cls(len(label), {tuple(label): 1})

    def _same(self, other):
        if self.m != other.m:
            raise IndexMismatch(f"{self.m} vs {other.m} irreducibles")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GradedRingElement(self.m, out)

    def __neg__(self):
        return GradedRingElement(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedRingElement(self.m, {k: v * other for k, v in self.terms.items()})
        return induction_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GradedRingElement) and self.m == other.m \
            and self.terms == other.terms

    def degrees(self):
        return {size(label) for label in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*s{label}" for label, c in sorted(self.terms.items()))


@cache
def _basis_product(a, b):
    # componentwise LR expansions, then all combinations
    expansions = [lr_product(x, y) for x, y in zip(a, b)]
    out = {}
    for combo in itertools.product(*(e.items() for e in expansions)):
        coeff = 1
        for _, c in combo:
            coeff *= c
        label = tuple(nu for nu, _ in combo)
        out[label] = out.get(label, 0) + coeff
    return out


def induction_product(a, b):
    a._same(b)
    out = {}
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            for nu, c in _basis_product(la, lb).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return GradedRingElement(a.m, out)


# -- elementary / complete homogeneous expansions ----------------------------

@dataclass(frozen=True, order=True)
class ElementaryMonomial:
    """Product of generators ``(irreducible index, degree, flavor)``, sorted."""

    factors: tuple

    @classmethod
    def of(cls, factors):
        factors = tuple(sorted(factors))
        if any(k <= 0 for _, k, _ in factors):
            raise ValueError("generator degrees must be positive")
        return cls(factors)

    @property
    def degree(self):
        return sum(k for _, k, _ in self.factors)


def _determinant_expansion(entries):
    """Expand det of a matrix whose entries are degree indices or None (zero).

    Returns ``{sorted degree tuple: coefficient}``; degree 0 entries are 1.
    """
    size_ = len(entries)
    out = {}
    for perm in itertools.permutations(range(size_)):
        degs = []
        for i, j in enumerate(perm):
            d = entries[i][j]
            if d is None:
                break
            if d:
                degs.append(d)
        else:
            inversions = sum(1 for i in range(size_) for j in range(i + 1, size_)
                             if perm[i] > perm[j])
            key = tuple(sorted(degs, reverse=True))
            out[key] = out.get(key, 0) + (-1) ** inversions
    return {k: v for k, v in out.items() if v}


def _jacobi_trudi(p):
    ell = len(p)
    return [[p[i] - i + j if p[i] - i + j >= 0 else None for j in range(ell)]
            for i in range(ell)]


@cache
def schur_to_elementary(p):
    """s_p as a polynomial in e_1, e_2, ... via det(e_{p'_i - i + j}).

    Returns ``{degree tuple: coefficient}``, e.g. (2,1) -> {(2,1): 1, (3,): -1}.
    """
    return _determinant_expansion(_jacobi_trudi(conjugate(p)))


@cache
def schur_to_homogeneous(p):
    """s_p as a polynomial in h_1, h_2, ... via det(h_{p_i - i + j})."""
    return _determinant_expansion(_jacobi_trudi(p))


def generator_partition(k, flavor):
    """Schur label of e_k (flavor 'e') or h_k (flavor 'h')."""
    if flavor == "e":
        return (1,) * k
    if flavor == "h":
        return (k,)
    raise ValueError(f"flavor must be 'e' or 'h', got {flavor!r}")


@cache
def _monomial_in_schur(degrees, flavor):
    # product of single-component generators, as {partition: coeff}
    out = {(): 1}
    for k in degrees:
        g = generator_partition(k, flavor)
        nxt = {}
        for lam, c in out.items():
            for nu, d in lr_product(lam, g).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        out = nxt
    return out


def monomial_to_schur(monomial, m):
    """Expand an ElementaryMonomial into the Schur basis as a GradedRingElement."""
    result = GradedRingElement.one(m)
    for idx, k, flavor in monomial.factors:
        label = [()] * m
        label[idx] = generator_partition(k, flavor)
        result = result * GradedRingElement.basis(tuple(label))
    return result


def expand_polynomial(poly, m, index, flavor):
    """Re-expand ``{degree tuple: coeff}`` in generators at ``index`` into Schur."""
    total = GradedRingElement(m)
    for degs, c in poly.items():
        mono = ElementaryMonomial.of([(index, k, flavor) for k in degs])
        total = total + monomial_to_schur(mono, m) * c
    return total


def bareiss_determinant(matrix):
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class DegreeVerdict:
    degree: int
    dimension: int
    determinant: int

    @property
    def unimodular(self):
        return self.determinant in (1, -1)


@dataclass
class GradedGenerationReport:
    flavors: tuple
    degrees: list

    @property
    def passed(self):
        return all(d.unimodular for d in self.degrees)


def transition_matrix(flavors, d):
    """Rows: monomials in the chosen generators; columns: Schur basis of degree d.

    Monomials are indexed by multipartitions too (component U, part k means a
    factor of the degree-k generator at U), so both sides use the same order.
    """
    m = len(flavors)
    basis = multipartitions(d, m)
    col = {label: i for i, label in enumerate(basis)}
    rows = []
    for rho in basis:
        expansions = [_monomial_in_schur(part, flavors[u]) for u, part in enumerate(rho)]
        row = [0] * len(basis)
        for combo in itertools.product(*(e.items() for e in expansions)):
            coeff = 1
            for _, c in combo:
                coeff *= c
            row[col[tuple(lam for lam, _ in combo)]] += coeff
        rows.append(row)
    return basis, rows


def graded_generation_check(flavors, d_max):
    """Certify free generation degree by degree through unimodular transitions.

    ``flavors`` gives 'e' or 'h' for each irreducible, in the declared order.
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    flavors = tuple(flavors)
    verdicts = []
    for d in range(1, d_max + 1):
        basis, rows = transition_matrix(flavors, d)
        verdicts.append(DegreeVerdict(d, len(basis), bareiss_determinant(rows)))
    return GradedGenerationReport(flavors, verdicts)


def all_flavor_assignments(m):
    return list(itertools.product("eh", repeat=m))

