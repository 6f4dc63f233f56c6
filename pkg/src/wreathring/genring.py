"""Integer lattices in Hermite normal form and subring generation checks."""

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LatticeBasis:
    """Row-style HNF basis of an integer lattice in Z^r."""

    r: int
    rows: tuple

    @property
    def rank(self):
        return len(self.rows)

    def is_identity(self):
        return self.rank == self.r and all(
            row[i] == 1 and all(v == 0 for j, v in enumerate(row) if j != i)
            for i, row in enumerate(self.rows))

    def index(self):
        """Product of pivots for a full-rank lattice, None (infinite) otherwise."""
        if self.rank < self.r:
            return None
        idx = 1
        for row in self.rows:
            idx *= _pivot(row)[1]
        return idx

    def contains(self, vec):
        """Exact membership by back-substitution against the pivots."""
        v = list(vec)
        for row in self.rows:
            col, p = _pivot(row)
            if v[col] % p:
                return False
            q = v[col] // p
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)


def _pivot(row):
    for j, v in enumerate(row):
        if v:
            return j, v
    raise ValueError("zero row has no pivot")


def hnf(rows, r=None):
    """Canonical row-style Hermite normal form of the Z-span of ``rows``.

    Pivot columns strictly increase, pivots are positive and the entries above
    each pivot are reduced into ``[0, pivot)``.
    """
    rows = [list(v) for v in rows]
    if r is None:
        if not rows:
            return LatticeBasis(0, ())
        r = len(rows[0])
    if any(len(v) != r for v in rows):
        raise ValueError("all vectors must have the same length")
    work = [v for v in rows if any(v)]
    basis = []
    for col in range(r):
        active = [v for v in work if v[col]]
        rest = [v for v in work if not v[col]]
        if not active:
            continue
        # Euclid on the column: repeatedly reduce by the smallest |entry|.
        while len(active) > 1:
            active.sort(key=lambda v: abs(v[col]))
            piv = active[0]
            nxt = [piv]
            for v in active[1:]:
                q = v[col] // piv[col]
                w = [a - q * b for a, b in zip(v, piv)]
                if w[col]:
                    nxt.append(w)
                elif any(w):
                    rest.append(w)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        work = rest
    # reduce entries above pivots
    for i in range(len(basis)):
        col, p = _pivot(basis[i])
        for k in range(i):
            q = basis[k][col] // p
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return LatticeBasis(r, tuple(tuple(v) for v in basis))


@dataclass
class GenerationReport:
    group: str
    n: int
    theorem: str
    generator_count: int
    verdict: str
    index: object  # int, or None for an infinite index
    rank: int
    r: int
    rounds: int
    elapsed_ms: float
    eps: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def generates(self):
        return self.verdict == "generates"

    def index_text(self):
        return "inf" if self.index is None else str(self.index)

    def as_record(self):
        rec = {
            "group": self.group,
            "n": self.n,
            "theorem": self.theorem,
            "eps": self.eps,
            "verdict": self.verdict,
            "index": self.index_text() if self.index is None else self.index,
            "rank": self.rank,
            "full_rank": self.r,
            "generators": self.generator_count,
            "rounds": self.rounds,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        rec.update(self.extra)
        return rec


class SpanNotPreserved(AssertionError):
    pass


def subring_closure(multiply, unit, gens, *, group="", n=0, theorem="", eps="",
                    certify=True, max_rounds=None):
    """Z-span of all monomials in ``gens`` (unit included), as an HNF lattice.

    ``multiply(x, g)`` multiplies two integer vectors over the irreducible basis.
    Iterates L <- HNF(L + L*gens) until the basis stops changing.
    """
    start = time.perf_counter()
    r = len(unit)
    gens = [list(g) for g in gens]
    lattice = hnf([unit], r)
    rounds = 0
    while True:
        rounds += 1
        candidates = [list(row) for row in lattice.rows]
        for row in lattice.rows:
            for g in gens:
                candidates.append(multiply(list(row), g))
        new = hnf(candidates, r)
        if certify:
            for v in candidates:
                if not new.contains(v):
                    raise SpanNotPreserved(f"HNF lost the vector {v}")
        if new == lattice:
            break
        lattice = new
        if max_rounds is not None and rounds >= max_rounds:
            break
    verdict = "generates" if lattice.is_identity() else "fails"
    report = GenerationReport(
        group=group, n=n, theorem=theorem, generator_count=len(gens),
        verdict=verdict, index=lattice.index(), rank=lattice.rank, r=r,
        rounds=rounds, elapsed_ms=(time.perf_counter() - start) * 1000, eps=eps)
    return lattice, report
