"""Partitions, multipartitions and Littlewood-Richardson coefficients.

A partition is a plain tuple of positive integers in weakly decreasing order;
``()`` is the empty partition.  A multipartition is a tuple of partitions, one
per irreducible representation of the ambient group, in the group's declared
irreducible order (the unit object first).
"""

from functools import cache
from math import factorial


class InvalidHook(ValueError):
    pass


class InvalidTwoRow(ValueError):
    pass


def make_partition(parts):
    """Validate ``parts`` and return it as a canonical tuple (zeros dropped)."""
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def conjugate(p):
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def hook(n, k):
    if n < 1 or not 0 <= k <= n - 1:
        raise InvalidHook(f"hook({n}, {k}) needs 0 <= k <= n-1")
    return (n - k,) + (1,) * k


def two_row(n, k):
    if n < 1 or k < 0 or k > n - k:
        raise InvalidTwoRow(f"two_row({n}, {k}) needs 0 <= k <= n/2")
    return (n - k, k) if k else (n,)


@cache
def partitions(n, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@cache
def compositions(n, m):
    """Weak compositions of ``n`` into ``m`` parts, lexicographically descending."""
    if m == 0:
        return ((),) if n == 0 else ()
    if m == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, m - 1):
            out.append((first,) + rest)
    return tuple(out)


@cache
def multipartitions(n, m):
    """All multipartitions of total size ``n`` over ``m`` irreducibles.

    Ordered by the size vector (descending lexicographic, so mass on the unit
    object comes first), then by the component partitions in reverse
    lexicographic order.  For ``n = 0`` this is the single all-empty label.
    """
    out = []
    for sizes in compositions(n, m):
        out.extend(_products([partitions(s) for s in sizes]))
    return tuple(out)


def _products(choices):
    result = [()]
    for options in choices:
        result = [prefix + (opt,) for prefix in result for opt in options]
    return result


def size(label):
    """Total size of a multipartition."""
    return sum(sum(p) for p in label)


def pad(label, n):
    """Add a first row of length ``n - |label|`` to the unit-object partition.

    Returns ``None`` (the zero object) when the result would not be a valid
    partition.
    """
    first = n - size(label)
    unit = label[0]
    if first < 0 or (unit and first < unit[0]):
        return None
    return ((first,) + unit if first else unit,) + tuple(label[1:])


def strip(label):
    """Inverse of :func:`pad`: drop the first row of the unit-object partition."""
    return (label[0][1:],) + tuple(label[1:])


def contains(outer, inner):
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def is_horizontal_strip(outer, inner):
    if not contains(outer, inner) or len(outer) > len(inner) + 1:
        return False
    # interlacing outer[i+1] <= inner[i]
    return all(outer[i + 1] <= inner[i] for i in range(len(outer) - 1))


def is_vertical_strip(outer, inner):
    if not contains(outer, inner):
        return False
    padded = inner + (0,) * (len(outer) - len(inner))
    return all(a - b <= 1 for a, b in zip(outer, padded))


def num_standard_tableaux(p):
    """f^p via the hook length formula."""
    n = sum(p)
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


@cache
def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient c_{lam, mu}^{nu}.

    One-row and one-column ``mu`` go through the Pieri rules; everything else
    counts LR skew tableaux of shape ``nu/lam`` and content ``mu``.
    """
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    if not lam:
        return 1 if mu == nu else 0
    if len(mu) == 1:
        return 1 if is_horizontal_strip(nu, lam) else 0
    if mu[0] == 1:
        return 1 if is_vertical_strip(nu, lam) else 0
    return _count_lr_tableaux(lam, mu, nu)


def _count_lr_tableaux(lam, mu, nu):
    # Cells of nu/lam in reading order: rows top to bottom, right to left.
    lam_p = lam + (0,) * (len(nu) - len(lam))
    cells = [(i, j) for i in range(len(nu))
             for j in range(nu[i] - 1, lam_p[i] - 1, -1)]
    filling = {}
    counts = [0] * (len(mu) + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        hi = min(hi, i + 1)
        above = filling.get((i - 1, j))
        lo = above + 1 if above is not None else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            total += place(idx + 1)
            del filling[(i, j)]
            counts[v] -= 1
        return total

    return place(0)


@cache
def lr_product(lam, mu):
    """Schur expansion of s_lam * s_mu as a dict ``{nu: c}``."""
    n = sum(lam) + sum(mu)
    out = {}
    for nu in partitions(n):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


@cache
def lr_coproduct(nu, k):
    """Pairs ``(alpha, beta)`` with ``|alpha| = k`` and nonzero c_{alpha,beta}^{nu}."""
    out = {}
    rest = sum(nu) - k
    if rest < 0:
        return out
    for alpha in partitions(k):
        if not contains(nu, alpha):
            continue
        for beta in partitions(rest):
            c = lr_coefficient(alpha, beta, nu)
            if c:
                out[(alpha, beta)] = c
    return out
