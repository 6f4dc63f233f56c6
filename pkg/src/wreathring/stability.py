"""Classical shadows of the filtration relations, and tensor stability in n.

Stable labels are multipartitions whose unit-object component carries no
long first row; :func:`~wreathring.partitions.pad` turns them into honest
labels for S_n(G).
"""

from dataclasses import dataclass, field
from math import prod

from .partitions import lr_coefficient, multipartitions, pad, size, strip
from .wreath import (RepRingElement, filtration_degree, restrict, trivial_label,
                     wreath_product)

# Window length beyond the smallest n considered.
WINDOW = 4


def window(base):
    return list(range(base, base + WINDOW + 1))


def top_half(ns):
    """The upper half of a window, middle value included."""
    return ns[len(ns) // 2:]


def onset(ns, holds):
    """Smallest n from which ``holds`` is true through the end of ``ns``, else None."""
    first = None
    for n, ok in zip(ns, holds):
        if ok and first is None:
            first = n
        elif not ok:
            first = None
    return first


def lr_product_coefficient(lam, mu, nu):
    return prod(lr_coefficient(a, b, c) for a, b, c in zip(lam, mu, nu))


def padded_tensor(table, lam, mu, n):
    """V(lam_n) (x) V(mu_n), or None when either padded label is zero."""
    a, b = pad(lam, n), pad(mu, n)
    if a is None or b is None:
        return None
    W = wreath_product(table, n)
    return W.tensor_decompose(RepRingElement.irreducible(a), RepRingElement.irreducible(b))


def top_degree_holds(table, lam, mu, n):
    """Top filtration degree of V(lam_n) (x) V(mu_n) is the LR product, rest is lower."""
    product = padded_tensor(table, lam, mu, n)
    if product is None:
        return False
    top = size(lam) + size(mu)
    at_top = {}
    for kappa, c in product.coeffs.items():
        deg = filtration_degree(kappa)
        if deg > top:
            return False
        if deg == top:
            at_top[strip(kappa)] = c
    expected = {}
    for nu in multipartitions(top, len(lam)):
        # labels whose padding is the zero object project to zero
        if pad(nu, n) is None:
            continue
        c = lr_product_coefficient(lam, mu, nu)
        if c:
            expected[nu] = c
    return at_top == expected


def restriction_lead_holds(table, mu, k, n):
    """Res_{S_k x S_{n-k}} V(mu_n) = 1 |x| V(mu_{n-k}) + terms of smaller stable size."""
    full = pad(mu, n)
    lead = pad(mu, n - k) if n >= k else None
    if full is None or lead is None:
        return False
    m = len(mu)
    res = restrict(RepRingElement.irreducible(full), k)
    lead_key = (trivial_label(k, m), lead)
    if res.get(lead_key) != 1:
        return False
    return all(filtration_degree(beta) < size(mu)
               for (alpha, beta) in res if (alpha, beta) != lead_key)


def stable_multiplicity(table, lam, mu, nu, n):
    product = padded_tensor(table, lam, mu, n)
    target = pad(nu, n)
    if product is None or target is None:
        return 0
    return product.coeffs.get(target, 0)


@dataclass
class ShadowReport:
    relation: str
    labels: tuple
    ns: list
    holds: list
    onset: object
    values: dict = field(default_factory=dict)

    @property
    def passed(self):
        """Holds throughout the top half of the tested window."""
        return self.onset is not None and self.onset <= top_half(self.ns)[0]

    def as_record(self):
        return {
            "relation": self.relation,
            "labels": [format_stable(x) if isinstance(x, tuple) else x for x in self.labels],
            "n": self.ns,
            "holds": self.holds,
            "onset": self.onset,
            "passed": self.passed,
            **({"multiplicities": self.values} if self.values else {}),
        }


def format_stable(label):
    return "|".join("(" + ",".join(map(str, p)) + ")" for p in label)


def top_degree_report(table, lam, mu):
    ns = window(size(lam) + size(mu))
    holds = [top_degree_holds(table, lam, mu, n) for n in ns]
    return ShadowReport("top-degree", (lam, mu), ns, holds, onset(ns, holds))


def restriction_lead_report(table, mu, k):
    ns = window(size(mu) + k)
    holds = [restriction_lead_holds(table, mu, k, n) for n in ns]
    return ShadowReport("restriction-lead", (mu, k), ns, holds, onset(ns, holds))


def stability_report(table, lam, mu, nu_bound=2):
    """Multiplicities of V(nu_n) in V(lam_n) (x) V(mu_n), |nu| <= nu_bound, across n."""
    ns = window(size(lam) + size(mu))
    m = len(lam)
    nus = [nu for d in range(nu_bound + 1) for nu in multipartitions(d, m)]
    series = {}
    for n in ns:
        product = padded_tensor(table, lam, mu, n)
        for nu in nus:
            target = pad(nu, n)
            c = 0 if product is None or target is None else product.coeffs.get(target, 0)
            series.setdefault(nu, []).append(c)
    holds = []
    for i, n in enumerate(ns):
        holds.append(all(vals[i] == vals[-1] for vals in series.values()))
    # "holds at n" = every multiplicity already equals its value at the window end
    start = onset(ns, holds)
    values = {format_stable(nu): vals for nu, vals in series.items()}
    return ShadowReport("stability", (lam, mu), ns, holds, start, values)


def stable_labels(m, max_size):
    return [lab for d in range(max_size + 1) for lab in multipartitions(d, m)]


def all_shadow_reports(table, max_size=2, max_k=2):
    labels = stable_labels(len(table.values), max_size)
    reports = []
    for i, lam in enumerate(labels):
        for mu in labels[i:]:
            reports.append(top_degree_report(table, lam, mu))
            reports.append(stability_report(table, lam, mu, max_size))
    for mu in labels:
        for k in range(max_k + 1):
            reports.append(restriction_lead_report(table, mu, k))
    return reports
