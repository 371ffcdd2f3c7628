"""Command line interface.

Exit codes: 0 success, 1 a cross-check or validation disagreed, 2 bad input.
"""
from __future__ import annotations

import argparse
import random
import sys

from . import charpoly as cp
from . import spectra as sp
from .errors import SkewGainError
from .graph import (
    make_complete_bipartite, make_cycle, make_double_star, make_path, make_star,
    random_gain,
)
from .graphfile import format_graph, parse_graph_file
from .matrix import adjacency_matrix, det
from .scalar import AntiInvolution, Domain, validate_anti_involution

# family -> (constructor, number of integer parameters, edge count from params)
FAMILIES = {
    "path": (make_path, 1, lambda n: n - 1),
    "cycle": (make_cycle, 1, lambda n: n),
    "star": (make_star, 1, lambda n: n),
    "doublestar": (make_double_star, 2, lambda p, q: p + q + 1),
    "kmn": (make_complete_bipartite, 2, lambda m, n: m * n),
}


class InputError(Exception):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_file(text)


def cmd_charpoly(args, out):
    G = _load(args.file)
    route = args.route
    if route == "auto":
        route = cp.auto_route(G)
    p = cp.compute_charpoly(G, route)
    print(p.format(), file=out)
    return 0


def cmd_spectrum(args, out):
    G = _load(args.file)
    s = sp.compute_spectrum(G, args.method)
    for line in s.lines():
        print(line, file=out)
    return 0


def crosscheck(G):
    """Run every applicable route and comparison; returns ``[(label, ok), ...]``."""
    results = []
    dom = G.domain
    routes = cp.applicable_routes(G)
    polys = {name: cp.ROUTES[name](G) for name in routes}
    ref = polys["subgraphs"]
    for name in routes:
        if name != "subgraphs":
            results.append((f"charpoly {name} vs subgraphs", polys[name].is_close(ref)))

    detA = det(adjacency_matrix(G))
    const = ref.coeff(0) * (-1) ** G.n
    results.append(("det(A) vs (-1)^n constant term", dom.is_close(detA, const)))
    if "path" in routes:
        results.append(("det_path vs det(A)", dom.is_close(cp.det_path(G), detA)))
    if "cycle" in routes:
        results.append(("det_cycle vs det(A)", dom.is_close(cp.det_cycle(G), detA)))

    methods = sp.applicable_methods(G)
    numeric = sp.spectrum_numeric(G)
    for name in methods[1:]:
        results.append((f"spectrum {name} vs numeric", sp.METHODS[name](G).is_close(numeric)))

    bound = sp.zero_multiplicity_bound(G)
    if bound and dom.is_exact:
        results.append((f"zero multiplicity >= {bound}", ref.trailing_zeros() >= bound))
    return results


def cmd_crosscheck(args, out):
    G = _load(args.file)
    results = crosscheck(G)
    for label, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {label}", file=out)
    return 0 if all(ok for _, ok in results) else 1


def _gen_gains(choice, count, domain, seed):
    if choice == "ones":
        return [domain.one] * count
    if choice == "random":
        rng = random.Random(seed)
        return [random_gain(rng, domain) for _ in range(count)]
    try:
        gains = [domain.parse(tok) for tok in choice.split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(gains) != count:
        raise InputError(f"family needs {count} gains, got {len(gains)}")
    return gains


def generate(family, params, gains="ones", seed=0, domain=Domain.RATIONAL, f=AntiInvolution.IDENTITY):
    """Graph file text for a named family."""
    try:
        make, nparams, edge_count = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if len(params) != nparams:
        raise InputError(f"{family} takes {nparams} parameter(s), got {len(params)}")
    domain, f = Domain(domain), AntiInvolution(f)
    gain_list = _gen_gains(gains, max(edge_count(*params), 0), domain, seed)
    G = make(*params, gain_list, f, domain)
    label = " ".join(map(str, params))
    comment = f"{family} {label} gains={gains}" + (f" seed={seed}" if gains == "random" else "")
    return format_graph(G, comment)


def cmd_gen(args, out):
    text = generate(args.family, args.params, args.gains, args.seed, args.domain, args.antiinvolution)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_validate(args, out):
    G = _load(args.file)
    print(f"vertices {G.n}, edges {G.m}, domain {G.domain.value}, antiinvolution {G.f.value}", file=out)
    gains = [a for _, _, a in G.edges] or [G.domain.one]
    report = validate_anti_involution(G.f, gains)
    for line in report.lines():
        print(line, file=out)
    print("applicable routes: " + " ".join(cp.applicable_routes(G)), file=out)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="skewgain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="print the characteristic polynomial (descending coefficients)")
    p.add_argument("file")
    p.add_argument("--route", default="auto", choices=["auto", *cp.ROUTES])
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="print 'eigenvalue multiplicity' lines")
    p.add_argument("file")
    p.add_argument("--method", default="auto", choices=["auto", *sp.METHODS])
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("crosscheck", help="compare every applicable route")
    p.add_argument("file")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("gen", help="emit a graph file for a named family")
    p.add_argument("family", choices=list(FAMILIES))
    p.add_argument("--params", nargs="+", type=int, required=True)
    p.add_argument("--gains", default="ones", help="ones, random, or a comma-separated list of literals")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--domain", default="rational", choices=[d.value for d in Domain])
    p.add_argument("--antiinvolution", default="identity", choices=[f.value for f in AntiInvolution])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="parse a graph file and check the anti-involution laws")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, SkewGainError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
