"""Command-line interface: ``wreathring verify|decompose|graded-check|stability``."""

import argparse
import itertools
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from . import groups
from .families import (InapplicableTheorem, canonical_theorem, check_generation,
                       verify_theorem)
from .partitions import make_partition, size
from .stability import all_shadow_reports, top_degree_report, restriction_lead_report, stability_report
from .symfunc import all_flavor_assignments, graded_generation_check
from .wreath import RepRingElement, filtration_degree, trivial_label, wreath_product

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INAPPLICABLE = 0, 1, 2, 3
WORKERS_ENV = "WREATHRING_WORKERS"


class UsageError(ValueError):
    """Bad input; reported with exit code 2."""


@lru_cache(maxsize=None)
def load_group(name=None, path=None):
    if (name is None) == (path is None):
        raise UsageError("give exactly one of --group or --group-file")
    if path is not None:
        try:
            return groups.load_group_file(path)
        except groups.InvalidGroupFile as exc:
            raise UsageError(str(exc)) from exc
    try:
        return groups.builtin(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc


# -- labels ---------------------------------------------------------------

_PART = re.compile(r"^\(\s*([\d\s,]*)\)$")


def parse_partition(text):
    text = text.strip()
    if text in ("", "-", "()", "∅"):
        return ()
    m = _PART.match(text)
    if not m:
        raise UsageError(f"bad partition {text!r}; write e.g. (3,1) or ()")
    parts = [int(p) for p in m.group(1).replace(" ", "").split(",") if p]
    try:
        return make_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_label(text, table, n=None):
    """Parse a multipartition label.

    Forms: ``1`` (trivial representation, needs n); positional
    ``(2)|(1,1)`` in irreducible order; named ``chi=(1)|1=(1)``.
    A single partition is accepted for groups with one irreducible.
    """
    names = table.irreducible_names
    m = len(names)
    text = text.strip()
    if text in ("1", "triv", "trivial"):
        if n is None:
            return ((),) * m
        return trivial_label(n, m)
    pieces = text.split("|")
    if all("=" in p for p in pieces):
        label = [()] * m
        for p in pieces:
            key, _, value = p.partition("=")
            key = key.strip()
            if key not in names:
                raise UsageError(f"unknown irreducible {key!r}; have {', '.join(names)}")
            label[names.index(key)] = parse_partition(value)
        label = tuple(label)
    else:
        if len(pieces) != m:
            raise UsageError(f"label {text!r} needs {m} components separated by '|'")
        label = tuple(parse_partition(p) for p in pieces)
    if n is not None and size(label) != n:
        raise UsageError(f"label {text!r} has size {size(label)}, expected {n}")
    return label


def format_label(label):
    return "|".join("(" + ",".join(map(str, p)) + ")" for p in label)


def parse_n(args):
    if args.n is not None and args.n_range is not None:
        raise UsageError("give only one of --n and --n-range")
    if args.n is not None:
        return [args.n]
    if args.n_range is None:
        raise UsageError("give --n or --n-range")
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", args.n_range)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise UsageError(f"bad --n-range {args.n_range!r}; write e.g. 2..5")
    return list(range(int(m.group(1)), int(m.group(2)) + 1))


def parse_eps(text, table):
    """``chi:sign,V:triv`` -> list of eps dicts; ``all`` enumerates every choice."""
    nontrivial = table.irreducible_names[1:]
    if text is None:
        return [{name: "sign" for name in nontrivial}]
    if text.strip() == "all":
        return [dict(zip(nontrivial, combo))
                for combo in itertools.product(("sign", "triv"), repeat=len(nontrivial))]
    choice = {name: "sign" for name in nontrivial}
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition(":")
        key, value = key.strip(), value.strip()
        if not sep or value not in ("sign", "triv"):
            raise UsageError(f"bad epsilon entry {item!r}; write name:sign or name:triv")
        if key not in nontrivial:
            raise UsageError(f"{key!r} is not a nontrivial irreducible of {table.group.name}")
        choice[key] = value
    return [choice]


def workers_from(args):
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
    return 1


# -- verify ----------------------------------------------------------------

def _verify_task(task):
    group, path, n, theorem, eps, unit_flavor, gen_list = task
    table = load_group(group, path)
    if theorem == "custom":
        gens = [RepRingElement.irreducible(parse_label(t, table, n)) for t in gen_list]
        _, report = check_generation(table, n, gens, "custom")
    else:
        _, report = verify_theorem(table, n, theorem, eps, unit_flavor)
    return report.as_record()


def _format_report(rec):
    return (f"group={rec['group']} n={rec['n']} theorem={rec['theorem']}"
            + (f" eps={rec['eps']}" if rec["eps"] else "")
            + f" generators={rec['generators']} verdict={rec['verdict']}"
            f" index={rec['index']} rank={rec['rank']}/{rec['full_rank']}"
            f" rounds={rec['rounds']} elapsed_ms={rec['elapsed_ms']}")


def cmd_verify(args, out):
    table = load_group(args.group, args.group_file)
    ns = parse_n(args)
    theorem = "custom" if (args.gens == "custom" or args.theorem == "custom") \
        else args.theorem
    if theorem is None:
        raise UsageError("give --theorem or --gens custom")
    gen_list = ()
    if theorem == "custom":
        if not args.gen_list:
            raise UsageError("--gens custom needs --gen-list")
        gen_list = tuple(t for t in args.gen_list.split(";") if t.strip())
        for n in ns:
            for t in gen_list:
                parse_label(t, table, n)
        eps_choices = [None]
    else:
        try:
            theorem = canonical_theorem(theorem)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        eps_choices = parse_eps(args.eps, table) if theorem == "thm4.1" else [None]
    flavors = ["hook", "two-row"] if args.unit_flavor == "both" else [args.unit_flavor]
    if theorem != "thm4.1":
        flavors = ["hook"]
    tasks = []
    for n in ns:
        for eps in eps_choices:
            for flavor in flavors:
                key = ",".join(f"{k}:{v}" for k, v in sorted(eps.items())) if eps else ""
                tasks.append(((n, key, flavor),
                              (args.group, args.group_file, n, theorem,
                               eps, flavor, gen_list)))
    tasks.sort(key=lambda t: t[0])
    payload = [t for _, t in tasks]
    # surface inapplicable theorems before starting any worker
    if theorem in ("marin-hooks", "marin-two-row") and table.group.order != 1:
        raise InapplicableTheorem(f"{theorem} needs the trivial group")
    if theorem == "thm4.2" and not table.is_abelian():
        raise InapplicableTheorem("thm4.2 needs an abelian group")
    if theorem == "thm4.3" and table.group.order != 2:
        raise InapplicableTheorem("thm4.3 needs G of order 2")

    workers = workers_from(args)
    if workers > 1 and len(payload) > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_verify_task, payload)
    else:
        pool = None
        results = map(_verify_task, payload)
    all_ok = True
    try:
        for rec in results:
            all_ok &= rec["verdict"] == "generates"
            if args.format == "json":
                print(json.dumps(rec), file=out, flush=True)
            else:
                print(_format_report(rec), file=out, flush=True)
    finally:
        if pool is not None:
            pool.shutdown()
    return EXIT_OK if all_ok else EXIT_FAIL


# -- decompose ---------------------------------------------------------------

def cmd_decompose(args, out):
    table = load_group(args.group, args.group_file)
    n = args.n
    if n is None:
        raise UsageError("decompose needs --n")
    a = parse_label(args.a, table, n)
    b = parse_label(args.b, table, n)
    W = wreath_product(table, n)
    product = W.tensor_decompose(RepRingElement.irreducible(a), RepRingElement.irreducible(b))
    rows = [{"label": format_label(lab), "multiplicity": c, "dimension": W.dimension(lab),
             "filtration_degree": filtration_degree(lab)}
            for lab, c in sorted(product.coeffs.items(), key=lambda kv: W.irrep_index[kv[0]])]
    if args.format == "json":
        print(json.dumps({"group": table.group.name, "n": n, "a": format_label(a),
                          "b": format_label(b), "constituents": rows}), file=out)
    else:
        print(f"V{format_label(a)} (x) V{format_label(b)} in R(S_{n}({table.group.name})):",
              file=out)
        for r in rows:
            print(f"  {r['multiplicity']} x V{r['label']}  dim={r['dimension']}"
                  f"  filtration_degree={r['filtration_degree']}", file=out)
    return EXIT_OK


# -- graded-check ------------------------------------------------------------

def cmd_graded_check(args, out):
    table = load_group(args.group, args.group_file)
    m = len(table.values)
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    if args.flavors in (None, "all"):
        assignments = all_flavor_assignments(m) if args.flavors == "all" else [("e",) * m]
    else:
        fl = tuple(f.strip() for f in args.flavors.split(","))
        if len(fl) != m or any(f not in ("e", "h") for f in fl):
            raise UsageError(f"--flavors needs {m} comma-separated entries from e,h")
        assignments = [fl]
    all_ok = True
    for fl in assignments:
        report = graded_generation_check(fl, args.degree)
        all_ok &= report.passed
        for v in report.degrees:
            rec = {"group": table.group.name, "flavors": ",".join(fl), "degree": v.degree,
                   "dimension": v.dimension, "determinant": v.determinant,
                   "verdict": "unimodular" if v.unimodular else "fails"}
            if args.format == "json":
                print(json.dumps(rec), file=out)
            else:
                print(f"flavors={rec['flavors']} degree={v.degree} dim={v.dimension}"
                      f" det={v.determinant} {rec['verdict']}", file=out)
    return EXIT_OK if all_ok else EXIT_FAIL


# -- stability ----------------------------------------------------------------

def cmd_stability(args, out):
    table = load_group(args.group, args.group_file)
    if args.lam is None and args.mu is None:
        reports = all_shadow_reports(table, args.bound, args.bound)
    else:
        if args.lam is None or args.mu is None:
            raise UsageError("give both --lam and --mu, or neither")
        lam = parse_label(args.lam, table)
        mu = parse_label(args.mu, table)
        reports = [top_degree_report(table, lam, mu), stability_report(table, lam, mu, args.bound)]
        reports += [restriction_lead_report(table, mu, k) for k in range(args.bound + 1)]
    all_ok = True
    for r in reports:
        rec = r.as_record()
        all_ok &= r.passed
        if args.format == "json":
            print(json.dumps({"group": table.group.name, **rec}), file=out)
        else:
            line = (f"{rec['relation']} labels={rec['labels']} n={rec['n'][0]}..{rec['n'][-1]}"
                    f" onset={rec['onset']} {'holds' if r.passed else 'FAILS'}")
            if r.values:
                line += " multiplicities=" + " ".join(
                    f"{k}:{','.join(map(str, v))}" for k, v in r.values.items())
            print(line, file=out)
    return EXIT_OK if all_ok else EXIT_FAIL


# -- entry point ----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="wreathring",
        description="Representation rings of wreath products S_n(G): generation checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--group", help="built-in group: trivial, z2..z6, klein, s3, "
                         "or products such as z2xz2")
        src.add_argument("--group-file", help="JSON group description")
        if with_n:
            p.add_argument("--n", type=int)
        p.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="check that a generator family generates R(S_n(G))")
    common(v)
    v.add_argument("--n-range", help="inclusive range such as 2..5")
    v.add_argument("--theorem", help="marin-hooks, marin-two-row, 4.1, 4.2, 4.3 or custom")
    v.add_argument("--gens", choices=("custom",))
    v.add_argument("--gen-list", help="';'-separated irreducible labels, e.g. \"1;(1)|(1)\"")
    v.add_argument("--eps", help="epsilon choice such as chi:sign,V:triv, or 'all'")
    v.add_argument("--unit-flavor", choices=("hook", "two-row", "both"), default="hook")
    v.add_argument("--workers", type=int, help=f"worker processes (env {WORKERS_ENV})")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="decompose a tensor product of irreducibles")
    common(d)
    d.add_argument("a")
    d.add_argument("b")
    d.set_defaults(func=cmd_decompose)

    g = sub.add_parser("graded-check", help="unimodularity of e/h-to-Schur transitions")
    common(g, with_n=False)
    g.add_argument("--degree", type=int, default=4)
    g.add_argument("--flavors", help="comma-separated e/h per irreducible, or 'all'")
    g.set_defaults(func=cmd_graded_check)

    s = sub.add_parser("stability", help="filtration shadows and tensor stability in n")
    common(s, with_n=False)
    s.add_argument("--lam", help="stable label")
    s.add_argument("--mu", help="stable label")
    s.add_argument("--bound", type=int, default=2)
    s.set_defaults(func=cmd_stability)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InapplicableTheorem as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())
