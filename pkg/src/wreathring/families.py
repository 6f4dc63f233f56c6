"""Generating families for R(S_n(G)) and the checks that certify them."""

from .genring import subring_closure
from .partitions import hook, pad, two_row
from .wreath import RepRingElement, induce, trivial_label, wreath_product


class InapplicableTheorem(ValueError):
    pass


THEOREMS = ("marin-hooks", "marin-two-row", "thm4.1", "thm4.2", "thm4.3")

_ALIASES = {
    "hooks": "marin-hooks",
    "marin-hooks": "marin-hooks",
    "two-row": "marin-two-row",
    "marin-two-row": "marin-two-row",
    "4.1": "thm4.1", "thm4.1": "thm4.1",
    "4.2": "thm4.2", "thm4.2": "thm4.2",
    "4.3": "thm4.3", "thm4.3": "thm4.3",
}


def canonical_theorem(name):
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None


def unit_label(table, lam):
    """Label with ``lam`` at the unit object and nothing elsewhere."""
    return (tuple(lam),) + ((),) * (len(table.values) - 1)


def single_label(table, u, lam):
    label = [()] * len(table.values)
    label[u] = tuple(lam)
    return tuple(label)


def unit_object_generators(table, n, flavor):
    """Hooks (n-k, 1^k) or two-row partitions (n-k, k), pulled back to S_n(G)."""
    if flavor == "hook":
        parts = [hook(n, k) for k in range(n)]
    elif flavor == "two-row":
        parts = [two_row(n, k) for k in range(n // 2 + 1)]
    else:
        raise ValueError(f"unit flavor must be 'hook' or 'two-row', got {flavor!r}")
    return [RepRingElement.irreducible(unit_label(table, p)) for p in parts]


def induced_twist(table, u, k, n, eps):
    """Ind_{S_k(G) x S_{n-k}(G)}((U^{(x)k} (x) eps) |x| 1) for the u-th irreducible U."""
    lam = (1,) * k if eps == "sign" else (k,)
    top = RepRingElement.irreducible(single_label(table, u, lam))
    rest = RepRingElement.irreducible(trivial_label(n - k, len(table.values)))
    return induce(top, rest)


def reflection_representation(table, n):
    """The S_n reflection representation V(n-1, 1) with G acting trivially."""
    label = pad(unit_label(table, (1,)), n)
    if label is None:
        return RepRingElement(n)
    return RepRingElement.irreducible(label)


def standard_induced(table, u, n):
    """Ind_{G x S_{n-1}(G)}(chi |x| 1), chi the u-th irreducible of G."""
    return induced_twist(table, u, 1, n, "triv")


def exterior_powers(W, x):
    if x.is_zero():
        return [W.one()]
    dim = W.element_dimension(x)
    return [W.exterior_power(x, k) for k in range(dim + 1)]


def parse_eps_choice(table, eps):
    """``None`` / ``{name or index: 'sign' | 'triv'}`` -> ``{index: eps}``.

    Nontrivial irreducibles default to sign.  The unit object only gets
    induced generators when it is named explicitly.
    """
    names = table.irreducible_names
    out = {u: "sign" for u in range(1, len(names))}
    for key, value in (eps or {}).items():
        u = names.index(key) if isinstance(key, str) else key
        if value not in ("sign", "triv"):
            raise ValueError(f"epsilon must be 'sign' or 'triv', got {value!r}")
        out[u] = value
    return out


def generator_family(table, n, theorem, eps_choice=None, unit_flavor="hook"):
    """The generating set predicted for R(S_n(G)) by the chosen theorem."""
    theorem = canonical_theorem(theorem)
    G = table.group
    W = wreath_product(table, n)
    if theorem in ("marin-hooks", "marin-two-row"):
        if G.order != 1:
            raise InapplicableTheorem(f"{theorem} is about S_n; {G.name} is not trivial")
        return unit_object_generators(table, n, "hook" if theorem == "marin-hooks" else "two-row")
    if theorem == "thm4.1":
        eps = parse_eps_choice(table, eps_choice)
        gens = unit_object_generators(table, n, unit_flavor)
        for u in sorted(eps):
            for k in range(1, n + 1):
                gens.append(induced_twist(table, u, k, n, eps[u]))
        return gens
    if theorem == "thm4.2":
        if not table.is_abelian():
            raise InapplicableTheorem(f"thm4.2 needs an abelian group, {G.name} is not")
        gens = exterior_powers(W, reflection_representation(table, n))
        for u in range(1, len(table.values)):
            gens.extend(exterior_powers(W, standard_induced(table, u, n)))
        return _dedupe(gens)
    if theorem == "thm4.3":
        if G.order != 2:
            raise InapplicableTheorem(f"thm4.3 is about type B (G of order 2), not {G.name}")
        gens = exterior_powers(W, reflection_representation(table, n))
        gens.extend(exterior_powers(W, standard_induced(table, 1, n)))
        return _dedupe(gens)
    raise ValueError(theorem)


def _dedupe(elements):
    out = []
    for x in elements:
        if not x.is_zero() and x not in out:
            out.append(x)
    return out


def check_generation(table, n, gens, theorem="custom", eps=""):
    """Run the subring closure for ``gens`` inside R(S_n(G))."""
    W = wreath_product(table, n)
    vectors = [W.vector(g) for g in gens]
    return subring_closure(W.multiply_vectors, W.vector(W.one()), vectors,
                           group=table.group.name, n=n, theorem=theorem, eps=eps)


def verify_theorem(table, n, theorem, eps_choice=None, unit_flavor="hook"):
    theorem = canonical_theorem(theorem)
    gens = generator_family(table, n, theorem, eps_choice, unit_flavor)
    eps_text = ""
    if theorem == "thm4.1":
        eps = parse_eps_choice(table, eps_choice)
        eps_text = ",".join(f"{table.irreducible_names[u]}:{eps[u]}" for u in sorted(eps))
        eps_text = f"unit={unit_flavor};{eps_text}" if eps_text else f"unit={unit_flavor}"
    return check_generation(table, n, gens, theorem, eps_text)
