"""Command-line front end.

Subcommands mirror the library layers: cyclotomic coefficient queries,
spectral upper bounds with an explicit or searched weight polynomial, the
pair-bound ratio profile, the exact oracle, the large-support construction
family, slab sizes, and the full bound aggregation report. All values print
as exact decimal integers; JSON output keeps them as strings to survive
parsers that truncate big integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .abelian import (GroupSpec, element_order, format_element, parse_element_set,
                      parse_group, subgroup_generated)
from .cyclotomic import IntPolynomial, cyclotomic, inverse_cyclotomic, support_and_gaps
from .engine import InconsistencyError, best_bounds, best_divisor_polynomial, report_to_json
from .oracle import OracleInfeasible, exact_avoidance, lift_block_witness
from .constructions import build_construction, slab_is_valid, slab_size, verify_construction
from .spectral import residue_dp_profile, spectral_upper_bound


def _parse_weight(text: str, n: int) -> IntPolynomial:
    """Weight literal: comma coefficients '1,-1', or 'phi:M' / 'ninv:M'."""
    text = text.strip()
    if text.startswith("phi:"):
        return cyclotomic(int(text[4:]))
    if text.startswith("ninv:"):
        return inverse_cyclotomic(int(text[5:])).scale(-1)
    try:
        return IntPolynomial.from_coeffs(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad weight literal {text!r}; use 'auto', coefficients "
                         f"like '1,-1', 'phi:M', or 'ninv:M'") from None


def _spectral_generator(G: GroupSpec, J) -> tuple[int, ...]:
    """An element whose cyclic span contains J, largest span first."""
    cands = sorted((j for j in J if j != G.zero()),
                   key=lambda j: (-element_order(G, j), j))
    for a in cands:
        H = subgroup_generated(G, [a])
        if all(H.contains(j) for j in J):
            return a
    if G.is_cyclic():
        return G.element((1,) * G.rank)  # coprime factor orders, so all-ones generates
    raise ValueError("J is not contained in the span of any single element of J")


def _residues(G: GroupSpec, a, J) -> set[int]:
    n = element_order(G, a)
    dlog = {}
    x = G.zero()
    for k in range(n):
        dlog[x] = k
        x = G.add(x, a)
    return {dlog[j] for j in J if j in dlog}


def cmd_cyclotomic(args) -> int:
    h = inverse_cyclotomic(args.n) if args.inverse else cyclotomic(args.n)
    supp, gap = support_and_gaps(h)
    if args.format == "json":
        obj = {
            "n": args.n,
            "inverse": bool(args.inverse),
            "degree": h.degree,
            "coeffs": [[k, str(h[k])] for k in supp],
            "nonzero_count": len(supp),
            "max_gap": gap,
        }
        print(json.dumps(obj, indent=2))
        return 0
    print(h)
    if args.stats:
        print(f"degree: {h.degree}")
        print(f"nonzero count: {len(supp)}")
        print(f"max gap: {gap}")
        print(f"height: {max(abs(c) for c in h.coeffs)}")
    return 0


def cmd_bound_spectral(args) -> int:
    G = parse_group(args.group)
    J = parse_element_set(G, args.J)
    a = _spectral_generator(G, J)
    n = element_order(G, a)
    if args.h == "auto":
        res = _residues(G, a, J)
        cands = []
        h = best_divisor_polynomial(n, res)
        if h is not None:
            cands.append(h)
        hinv = inverse_cyclotomic(n).scale(-1)
        if n > 2 and hinv[0] == 1 and set(hinv.support()) <= res:
            cands.append(hinv)
        if {0, 1} <= res:
            cands.append(IntPolynomial.from_coeffs([1, -1]))
        if not cands:
            raise ValueError(f"no weight candidate fits residues {sorted(res)} mod {n}")
        value, idx = min((spectral_upper_bound(G, a, J, hc, args.N), i)
                         for i, hc in enumerate(cands))
        h = cands[idx]
    else:
        h = _parse_weight(args.h, n)
        value = spectral_upper_bound(G, a, J, h, args.N)
    print(f"h: {h} (degree {h.degree})")
    print(f"subgroup: generator {format_element(a)}, order {n}, index {G.order // n}")
    print(f"bound: {value}")
    return 0


def cmd_limit_c(args) -> int:
    counts = residue_dp_profile(args.n, args.max_N)
    pairs = []
    for N, count in enumerate(counts, start=1):
        pairs.append((N, float(Fraction(count, (args.n - 1) ** N))))
    if args.format == "json":
        print(json.dumps({"n": args.n, "pairs": [[N, r] for N, r in pairs]}))
        return 0
    print("N,ratio")
    for N, r in pairs:
        print(f"{N},{r:.12f}")
    return 0


def cmd_oracle(args) -> int:
    G = parse_group(args.group)
    J = parse_element_set(G, args.J)
    res = exact_avoidance(G, J, args.N, timeout=args.timeout)
    obj = {
        "alpha": str(res.value),
        "exact": bool(res.optimal),
        "subgroup_order": res.subgroup_order,
        "index": res.index,
        "block_alpha": str(res.block_alpha),
    }
    if args.certificate:
        witness = lift_block_witness(G, J, args.N, res)
        obj["certificate"] = (None if witness is None else
                              [[format_element(x) for x in v] for v in witness])
    print(json.dumps(obj, indent=2))
    return 0


def cmd_construct(args) -> int:
    num, _, den = args.eps.partition("/")
    eps = Fraction(int(num), int(den) if den else 1)
    inst = build_construction(args.M, eps)
    report = verify_construction(inst) if args.verify else None
    if args.json:
        obj = inst.to_json_dict()
        if report is not None:
            obj["verified"] = {
                b.name: {"passed": b.passed, "detail": b.detail} for b in report.bullets
            }
            obj["degenerate_epsilon"] = report.degenerate_epsilon
        print(json.dumps(obj, indent=2))
        return 0
    print(f"primes: {', '.join(str(p) for p in inst.primes)}")
    print(f"r: {inst.r}")
    print(f"Q: {inst.Q}")
    print(f"s: {inst.s}")
    print(f"n: {inst.n}")
    print(f"degree: {inst.degree}")
    print(f"support size: {inst.support_size}")
    if report is not None:
        for b in report.bullets:
            print(f"bullet {b.name}: {'PASS' if b.passed else 'FAIL'}")
        if not report.passed:
            return 1
    return 0


def cmd_slab(args) -> int:
    print(slab_size(args.n, args.N))
    if args.check:
        ok = slab_is_valid(args.n, args.N)
        print(f"valid: {ok}")
        if not ok:
            return 1
    return 0


def cmd_bounds(args) -> int:
    G = parse_group(args.group)
    J = parse_element_set(G, args.J)
    report = best_bounds(G, J, args.N, oracle_timeout=args.oracle_timeout)
    if args.format == "json":
        print(json.dumps(report_to_json(report), indent=2))
        return 0
    jtext = ";".join(format_element(j) for j in report.J)
    print(f"query: group {G}, J {{{jtext}}}, N {report.N}")
    for e in report.upper:
        params = "".join(f" {k}={v}" for k, v in e.params)
        print(f"upper {e.method} {e.value}{params}")
    for e in report.lower:
        params = "".join(f" {k}={v}" for k, v in e.params)
        print(f"lower {e.method} {e.value}{params}")
    print(f"best upper: {report.best_upper}")
    print(f"best lower: {report.best_lower}")
    if report.exact is not None:
        print(f"exact: {report.exact}")
    for note in report.notes:
        print(f"note: {note}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intersective",
        description="Difference-avoidance bounds for powers of finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclotomic", help="cyclotomic polynomial coefficients and stats")
    p.add_argument("n", type=int)
    p.add_argument("--inverse", action="store_true", help="emit (t^n-1)/Phi_n instead")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("bound", help="single-method bounds")
    bsub = p.add_subparsers(dest="method", required=True)
    ps = bsub.add_parser("spectral", help="counting bound for one weight polynomial")
    ps.add_argument("--group", required=True, help="group literal, e.g. '105' or '2x4'")
    ps.add_argument("--J", required=True, help="semicolon-separated elements, e.g. '0;1;6'")
    ps.add_argument("--h", default="auto",
                    help="'auto', coefficients '1,-1', 'phi:M', or 'ninv:M'")
    ps.add_argument("--N", type=int, required=True)
    ps.set_defaults(func=cmd_bound_spectral)

    p = sub.add_parser("limit-c", help="pair-bound ratio profile count/(n-1)^N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-N", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_limit_c)

    p = sub.add_parser("oracle", help="exact extremal size via independent-set search")
    p.add_argument("--group", required=True)
    p.add_argument("--J", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--timeout", type=float, default=None, help="budget in seconds")
    p.add_argument("--certificate", action="store_true", help="emit an extremal set")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("construct", help="prime-window construction instances")
    p.add_argument("--M", type=int, required=True, help="number of primes in the window")
    p.add_argument("--eps", required=True, help="sparseness parameter as a fraction a/b")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("slab", help="fixed-sum slab lower-bound sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify avoidance by enumeration")
    p.set_defaults(func=cmd_slab)

    p = sub.add_parser("bounds", help="aggregate every applicable bound method")
    p.add_argument("--group", required=True)
    p.add_argument("--J", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--oracle-timeout", type=float, default=10.0)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OracleInfeasible, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
