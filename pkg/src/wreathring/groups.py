"""Finite groups given by Cayley tables, with validated character tables."""

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .cyclotomic import Cyclotomic, parse_cyclotomic


class NotAGroup(ValueError):
    pass


class InvalidCharacterTable(ValueError):
    pass


class InvalidGroupFile(ValueError):
    pass


# Associativity is checked on every triple up to this order, sampled above.
ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 48
ASSOCIATIVITY_SAMPLES = 20000


@dataclass(eq=False)
class FiniteGroup:
    name: str
    cayley: tuple
    identity: int = field(init=False)
    exponent: int = field(init=False)
    inverse: tuple = field(init=False)

    def __post_init__(self):
        self.cayley = tuple(tuple(row) for row in self.cayley)
        self.identity, self.inverse = _check_group_law(self.cayley)
        self.exponent = lcm(*(self.element_order(g) for g in range(self.order)))

    @property
    def order(self):
        return len(self.cayley)

    def mul(self, a, b):
        return self.cayley[a][b]

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.cayley[x][g]
            k += 1
        return k

    def is_abelian(self):
        m = self.order
        return all(self.cayley[a][b] == self.cayley[b][a]
                   for a in range(m) for b in range(a + 1, m))


def _check_group_law(cayley):
    m = len(cayley)
    if m == 0:
        raise NotAGroup("empty Cayley table")
    for row in cayley:
        if len(row) != m or sorted(row) != list(range(m)):
            raise NotAGroup("Cayley table rows must be permutations of 0..m-1")
    for col in range(m):
        if sorted(cayley[r][col] for r in range(m)) != list(range(m)):
            raise NotAGroup("Cayley table columns must be permutations of 0..m-1")
    ids = [e for e in range(m) if all(cayley[e][x] == x == cayley[x][e] for x in range(m))]
    if len(ids) != 1:
        raise NotAGroup("no unique two-sided identity")
    e = ids[0]
    if m <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        triples = itertools.product(range(m), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(m), rng.randrange(m), rng.randrange(m))
                   for _ in range(ASSOCIATIVITY_SAMPLES))
    for a, b, c in triples:
        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
            raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    inverse = tuple(row.index(e) for row in cayley)
    return e, inverse


@dataclass(frozen=True)
class ConjugacyClasses:
    """Classes ordered by smallest element, identity class first."""

    classes: tuple
    class_of: tuple
    inverse_class: tuple

    @property
    def sizes(self):
        return tuple(len(c) for c in self.classes)

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)

    def __len__(self):
        return len(self.classes)


def conjugacy_classes(G):
    m = G.order
    class_of = [None] * m
    classes = []
    order = [G.identity] + [g for g in range(m) if g != G.identity]
    for g in order:
        if class_of[g] is not None:
            continue
        orbit = sorted({G.mul(G.mul(x, g), G.inverse[x]) for x in range(m)})
        for h in orbit:
            class_of[h] = len(classes)
        classes.append(tuple(orbit))
    inverse_class = tuple(class_of[G.inverse[c[0]]] for c in classes)
    return ConjugacyClasses(tuple(classes), tuple(class_of), inverse_class)


@dataclass(eq=False)
class CharacterTable:
    group: FiniteGroup
    irreducible_names: tuple
    class_names: tuple
    values: tuple  # values[i][j] = chi_i(class j), Cyclotomic
    ccl: ConjugacyClasses

    @property
    def N(self):
        return self.group.exponent

    @property
    def dimensions(self):
        return tuple(row[0].to_rational() for row in self.values)

    def __len__(self):
        return len(self.values)

    def is_abelian(self):
        return all(d == 1 for d in self.dimensions)


def _pairing(G, ccl, row_a, row_b):
    total = Cyclotomic.from_int(G.exponent, 0)
    for size, a, b in zip(ccl.sizes, row_a, row_b):
        total = total + (a * b.conjugate()) * size
    return total / G.order


def validate_character_table(G, values, irreducible_names=None, class_names=None,
                             ccl=None):
    """Check a candidate character table exactly and return a CharacterTable.

    ``values`` rows are irreducibles, columns follow :func:`conjugacy_classes`
    order.  The row equal to all ones is moved to the front as the unit object.
    """
    if ccl is None:
        ccl = conjugacy_classes(G)
    k = len(ccl)
    values = [tuple(row) for row in values]
    if len(values) != k or any(len(row) != k for row in values):
        raise InvalidCharacterTable(
            f"table must be {k}x{k} to match the class count {k}")
    if irreducible_names is None:
        irreducible_names = tuple(f"X{i}" for i in range(k))
    if class_names is None:
        class_names = tuple(f"C{j}" for j in range(k))
    if len(irreducible_names) != k or len(set(irreducible_names)) != k:
        raise InvalidCharacterTable("irreducible names must be distinct, one per row")
    for row in values:
        for v in row:
            if v.N != G.exponent:
                raise InvalidCharacterTable(
                    f"value {v} is not in Q(zeta_{G.exponent})")
    units = [i for i, row in enumerate(values) if all(v == 1 for v in row)]
    if not units:
        raise InvalidCharacterTable("no trivial character (all-ones row)")
    u = units[0]
    order = [u] + [i for i in range(k) if i != u]
    values = [values[i] for i in order]
    irreducible_names = tuple(irreducible_names[i] for i in order)
    for i, row in enumerate(values):
        dim = row[0]
        if not dim.is_rational() or Fraction(dim.to_rational()).denominator != 1 \
                or dim.to_rational() <= 0:
            raise InvalidCharacterTable(
                f"dimension of {irreducible_names[i]} is not a positive integer")
    for i in range(k):
        for j in range(i, k):
            p = _pairing(G, ccl, values[i], values[j])
            if p != (1 if i == j else 0):
                raise InvalidCharacterTable(
                    f"row orthogonality fails for ({irreducible_names[i]}, "
                    f"{irreducible_names[j]}): <,> = {p}")
    if sum(row[0].to_rational() ** 2 for row in values) != G.order:
        raise InvalidCharacterTable("sum of squared dimensions is not |G|")
    return CharacterTable(G, tuple(irreducible_names), tuple(class_names),
                          tuple(tuple(row) for row in values), ccl)


def column_orthogonality_holds(table):
    """sum_i chi_i(a) conj(chi_i(b)) = delta_ab |G| / |class a|."""
    G, ccl = table.group, table.ccl
    k = len(ccl)
    for a in range(k):
        for b in range(k):
            s = Cyclotomic.from_int(G.exponent, 0)
            for row in table.values:
                s = s + row[a] * row[b].conjugate()
            expected = Fraction(G.order, ccl.sizes[a]) if a == b else 0
            if s != expected:
                return False
    return True


# -- built-in groups -------------------------------------------------------

def cyclic(m):
    G = FiniteGroup(f"z{m}", [[(a + b) % m for b in range(m)] for a in range(m)])
    ccl = conjugacy_classes(G)
    values = [[Cyclotomic.zeta(G.exponent, j * c[0]) for c in ccl.classes]
              for j in range(m)]
    if m == 2:
        irr, cls = ("1", "chi"), ("+", "-")
    else:
        irr = ("1",) + tuple(f"chi{j}" for j in range(1, m))
        cls = ("e",) + tuple(f"g^{a}" for a in range(1, m))
    return validate_character_table(G, values, irr, cls, ccl)


def trivial():
    G = FiniteGroup("trivial", [[0]])
    ccl = conjugacy_classes(G)
    return validate_character_table(G, [[Cyclotomic.from_int(1, 1)]], ("1",),
                                    ("e",), ccl)


def symmetric3():
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    cayley = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    G = FiniteGroup("s3", cayley)
    ccl = conjugacy_classes(G)

    def fixed_points(i):
        return sum(1 for x in range(3) if perms[i][x] == x)

    names, rows = [], []
    for name, fn in (("1", lambda f: 1),
                     ("sgn", lambda f: {3: 1, 1: -1, 0: 1}[f]),
                     ("V", lambda f: f - 1)):
        names.append(name)
        rows.append([Cyclotomic.from_int(G.exponent, fn(fixed_points(c[0])))
                     for c in ccl.classes])
    cls = tuple({3: "e", 1: "(12)", 0: "(123)"}[fixed_points(c[0])]
                for c in ccl.classes)
    return validate_character_table(G, rows, tuple(names), cls, ccl)


def direct_product(A, B, name=None):
    """Character table of A x B from the tables of A and B."""
    ga, gb = A.group, B.group
    ma, mb = ga.order, gb.order
    cayley = [[ga.mul(a1, a2) * mb + gb.mul(b1, b2)
               for a2 in range(ma) for b2 in range(mb)]
              for a1 in range(ma) for b1 in range(mb)]
    G = FiniteGroup(name or f"{ga.name}x{gb.name}", cayley)
    ccl = conjugacy_classes(G)
    N = G.exponent

    def lift(v):
        # Q(zeta_n) -> Q(zeta_N) via z_n = z_N^(N/n)
        step = N // v.N
        return Cyclotomic.from_powers(N, {k * step: c for k, c in enumerate(v.coeffs) if c})

    rows, names = [], []
    for i, ra in enumerate(A.values):
        for j, rb in enumerate(B.values):
            row = []
            for c in ccl.classes:
                a, b = divmod(c[0], mb)
                row.append(lift(ra[A.ccl.class_of[a]]) * lift(rb[B.ccl.class_of[b]]))
            rows.append(row)
            na, nb = A.irreducible_names[i], B.irreducible_names[j]
            names.append("1" if na == nb == "1" else f"{na}*{nb}")
    cls = []
    for c in ccl.classes:
        a, b = divmod(c[0], mb)
        cls.append(f"({A.class_names[A.ccl.class_of[a]]},{B.class_names[B.ccl.class_of[b]]})")
    return validate_character_table(G, rows, tuple(names), tuple(cls), ccl)


def klein():
    t = direct_product(cyclic(2), cyclic(2), name="klein")
    rename = {"1": "1", "chi*1": "a", "1*chi": "b", "chi*chi": "c"}
    t.irreducible_names = tuple(rename[n] for n in t.irreducible_names)
    return t


_BASE = {
    "trivial": trivial,
    "klein": klein,
    "s3": symmetric3,
    **{f"z{m}": (lambda m=m: cyclic(m)) for m in range(2, 7)},
}


def builtin(name):
    """Built-in group by name: trivial, z2..z6, klein, s3, or products like z2xz3."""
    key = name.strip().lower()
    if key in _BASE:
        return _BASE[key]()
    parts = key.split("x")
    if len(parts) > 1 and all(p in _BASE for p in parts):
        table = _BASE[parts[0]]()
        for p in parts[1:]:
            table = direct_product(table, _BASE[p]())
        table.group.name = key
        return table
    raise KeyError(f"unknown built-in group {name!r}")


BUILTIN_NAMES = tuple(_BASE)


def load_group_file(path):
    """Read a JSON group description and return its validated CharacterTable.

    Required fields: name, order, cayley, exponent, character_table.  Optional:
    irreducibles (row names) and class_names.  Columns of the character table
    follow the class order of :func:`conjugacy_classes`.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidGroupFile(f"cannot read {path}: {exc}") from exc
    return group_from_description(data)


def group_from_description(data):
    missing = [k for k in ("name", "order", "cayley", "exponent", "character_table")
               if k not in data]
    if missing:
        raise InvalidGroupFile(f"missing fields: {', '.join(missing)}")
    try:
        G = FiniteGroup(str(data["name"]), data["cayley"])
    except NotAGroup as exc:
        raise InvalidGroupFile(f"not a group: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InvalidGroupFile(f"bad cayley table: {exc}") from exc
    if G.order != data["order"]:
        raise InvalidGroupFile(f"order {data['order']} does not match table size {G.order}")
    if G.exponent != data["exponent"]:
        raise InvalidGroupFile(
            f"declared exponent {data['exponent']} but the group has exponent {G.exponent}")
    try:
        values = [[parse_cyclotomic(str(v), G.exponent) for v in row]
                  for row in data["character_table"]]
    except ValueError as exc:
        raise InvalidGroupFile(f"bad character value: {exc}") from exc
    names = data.get("irreducibles")
    cls = data.get("class_names")
    try:
        return validate_character_table(
            G, values, tuple(names) if names else None, tuple(cls) if cls else None)
    except InvalidCharacterTable as exc:
        raise InvalidGroupFile(f"invalid character table: {exc}") from exc
