"""JSON command-line front end.

Every subcommand prints one JSON object on stdout. Polynomials are coefficient
lists in ascending degree order; elements are plain ints except over binary
extension fields (hex strings like "0x6") and the rationals ("p/q" strings).
Exit codes: 0 ok, 2 bad input or a MinseqError, 3 a violated invariant.
"""

import argparse
import json
import sys
from typing import NamedTuple, Optional

from .cf import RationalFn, cf_expand_prefix, cf_expand_rational, lc_from_cf
from .decomp import count_solutions, decompose, enumerate_solutions, minimal_system_of
from .domains import BinaryExtField, RationalField, parse_domain
from .errors import InvariantViolation, MinseqError
from .genfn import Seq, SolutionPair, bracket_numerator
from .nonvanish import nonvanishing_solution
from .oracle import brute_annihilators, brute_lc, brute_lc_at
from .poly import Poly
from .solver import classify_profile, minimal_solution, solver_init, solver_step


class RunConfig(NamedTuple):
    command: str
    field: str
    terms: Optional[str]
    file: Optional[str]
    num: Optional[str]
    den: Optional[str]
    max_i: int
    degree: Optional[int]
    at: Optional[str]
    f1: Optional[str]
    which: Optional[str]
    massey: bool
    normalized: bool
    with_numerator: bool
    pretty: bool


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minseq",
        description="minimal solutions of finite sequences over exact domains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_field=True):
        if need_field:
            p.add_argument("--field", required=True,
                           help="gf2 | gfp:<p> | gf2m:<m>:<hex modulus> | int | rat")
        p.add_argument("--terms", help="sequence terms s0 s-1 ... as one quoted string")
        p.add_argument("--file", help="file containing whitespace-separated terms")
        p.add_argument("--pretty", action="store_true",
                       help="indent the JSON and add readable polynomial strings")
        return p

    p = add_common(sub.add_parser("solve", help="run the solver and report the final state"))
    p.add_argument("--massey", action="store_true", help="classical initialisation")
    p.add_argument("--normalized", action="store_true", help="monic updates (fields only)")
    p.add_argument("--no-numerator", dest="with_numerator", action="store_false",
                   help="skip the numerator column")

    add_common(sub.add_parser("profile", help="linear complexity profile and class"))

    p = add_common(sub.add_parser("cf", help="continued fraction expansion"))
    p.add_argument("--num", help="numerator coefficients of a rational function")
    p.add_argument("--den", help="denominator coefficients of a rational function")
    p.add_argument("--max-i", type=int, default=64, help="quotient cap in rational mode")

    p = add_common(sub.add_parser("decompose", help="coordinates of a solution in the minimal system"))
    p.add_argument("--f1", required=True, help="annihilator coefficients, ascending")

    p = add_common(sub.add_parser("count", help="number of solutions of one degree"))
    p.add_argument("--degree", type=int, required=True)

    p = add_common(sub.add_parser("enumerate", help="all solutions of one degree"))
    p.add_argument("--degree", type=int, required=True)

    p = add_common(sub.add_parser("nonvanish", help="annihilator not vanishing at a point"))
    p.add_argument("--at", required=True, help="evaluation point")

    add_common(sub.add_parser("verify", help="replay the run and check every invariant"))

    p = add_common(sub.add_parser("oracle", help="brute-force ground truth (small inputs)"))
    p.add_argument("which", choices=["profile", "count", "nonvanish"])
    p.add_argument("--degree", type=int, help="degree for 'count'")
    p.add_argument("--at", help="evaluation point for 'nonvanish'")

    return parser


def config_from_args(ns):
    return RunConfig(
        command=ns.command,
        field=ns.field,
        terms=getattr(ns, "terms", None),
        file=getattr(ns, "file", None),
        num=getattr(ns, "num", None),
        den=getattr(ns, "den", None),
        max_i=getattr(ns, "max_i", 64),
        degree=getattr(ns, "degree", None),
        at=getattr(ns, "at", None),
        f1=getattr(ns, "f1", None),
        which=getattr(ns, "which", None),
        massey=getattr(ns, "massey", False),
        normalized=getattr(ns, "normalized", False),
        with_numerator=getattr(ns, "with_numerator", True),
        pretty=getattr(ns, "pretty", False),
    )


def elem_out(dom, a):
    if isinstance(dom, BinaryExtField):
        return dom.format(a)
    if isinstance(dom, RationalField):
        return str(a)
    return int(a)


def poly_out(dom, p):
    if p is None:
        return None
    return [elem_out(dom, c) for c in p.coeffs]


def pair_out(dom, f):
    return {"f1": poly_out(dom, f.f1), "f2": poly_out(dom, f.f2)}


def load_seq(cfg, dom):
    if (cfg.terms is None) == (cfg.file is None):
        raise MinseqError("provide exactly one of --terms or --file")
    if cfg.terms is not None:
        tokens = cfg.terms.split()
    else:
        with open(cfg.file) as fh:
            tokens = fh.read().split()
    return Seq.parse(dom, tokens)


def parse_poly_arg(dom, text):
    return Poly.parse(dom, text.split())


def add_pretty(out, dom, **polys):
    out["pretty"] = {
        key: (None if p is None else str(p)) for key, p in polys.items()
    }


def cmd_solve(cfg, dom):
    s = load_seq(cfg, dom)
    st = solver_init(dom, normalized=cfg.normalized,
                     with_numerator=cfg.with_numerator, massey=cfg.massey)
    for t in s.terms:
        st = solver_step(st, t)
    cls = classify_profile(st.profile)
    out = {
        "n": st.k,
        "lc": st.lc,
        "e": st.e,
        "nabla": elem_out(dom, st.nabla),
        "mu1": poly_out(dom, st.mu1),
        "mu2": poly_out(dom, st.mu2),
        "mup1": poly_out(dom, st.mup1),
        "mup2": poly_out(dom, st.mup2),
        "profile": list(st.profile),
        "mul_count": st.mul_count,
        "class": cls.tag,
        "n_prime": cls.n_prime,
    }
    if cfg.pretty:
        add_pretty(out, dom, mu1=st.mu1, mu2=st.mu2, mup1=st.mup1, mup2=st.mup2)
    return out


def cmd_profile(cfg, dom):
    s = load_seq(cfg, dom)
    st = minimal_solution(s, with_numerator=False)
    cls = classify_profile(st.profile)
    return {
        "n": st.k,
        "profile": list(st.profile),
        "lc": st.lc,
        "class": cls.tag,
        "n_prime": cls.n_prime,
    }


def cmd_cf(cfg, dom):
    rational = cfg.num is not None or cfg.den is not None
    if rational:
        if cfg.num is None or cfg.den is None:
            raise MinseqError("rational mode needs both --num and --den")
        if cfg.terms is not None or cfg.file is not None:
            raise MinseqError("give either --num/--den or a term sequence, not both")
        S = RationalFn(parse_poly_arg(dom, cfg.num), parse_poly_arg(dom, cfg.den))
        exp = cf_expand_rational(S, max_i=cfg.max_i)
    else:
        s = load_seq(cfg, dom)
        exp = cf_expand_prefix(s)
    if exp.mode == "prefix":
        limit = exp.prefix_len
    elif exp.terminated:
        limit = exp.partition[-1] + 1 if exp.partition else 1
    else:
        limit = 2 * exp.convergents[-1].f1.degree
    lc_table = [lc_from_cf(exp, n) for n in range(1, limit + 1)]
    return {
        "mode": exp.mode,
        "quotients": [poly_out(dom, a) for a in exp.quotients],
        "convergents": [pair_out(dom, q) for q in exp.convergents],
        "partition": list(exp.partition),
        "terminated": exp.terminated,
        "precision_exhausted": exp.precision_exhausted,
        "lc_table": lc_table,
    }


def cmd_decompose(cfg, dom):
    s = load_seq(cfg, dom)
    f1 = parse_poly_arg(dom, cfg.f1)
    f2 = bracket_numerator(f1, s)
    sys_ = minimal_system_of(s)
    dec = decompose(SolutionPair(f1, f2), s, sys_)
    n = len(s)
    lc = sys_.lam.f1.degree
    nabla = Poly(dom, [sys_.nabla])
    recon = nabla * f1 == dec.mP * sys_.lam.f1 - dec.m * sys_.lamP.f1
    if f1.degree <= n:
        recon = recon and nabla * f2 == dec.mP * sys_.lam.f2 - dec.m * sys_.lamP.f2
    bounds = dec.mP.degree == f1.degree - lc and dec.m.degree <= f1.degree + lc - n - 1
    out = {
        "m": poly_out(dom, dec.m),
        "mp": poly_out(dom, dec.mP),
        "reconstruction_ok": bool(recon),
        "bounds_ok": bool(bounds),
    }
    if cfg.pretty:
        add_pretty(out, dom, m=dec.m, mp=dec.mP)
    return out


def cmd_count(cfg, dom):
    s = load_seq(cfg, dom)
    return {"n": len(s), "degree": cfg.degree, "count": count_solutions(s, cfg.degree)}


def cmd_enumerate(cfg, dom):
    s = load_seq(cfg, dom)
    sols = enumerate_solutions(s, cfg.degree)
    return {
        "n": len(s),
        "degree": cfg.degree,
        "count": len(sols),
        "solutions": [pair_out(dom, f) for f in sols],
    }


def cmd_nonvanish(cfg, dom):
    s = load_seq(cfg, dom)
    a = dom.parse(cfg.at)
    res = nonvanishing_solution(s, a)
    out = {
        "xi1": poly_out(dom, res.xi.f1),
        "xi2": poly_out(dom, res.xi.f2),
        "lc_at": res.lc_at,
        "M": res.M,
        "used_extension": res.used_extension,
    }
    if cfg.pretty:
        add_pretty(out, dom, xi1=res.xi.f1, xi2=res.xi.f2)
    return out


def cmd_verify(cfg, dom):
    s = load_seq(cfg, dom)
    checks = {
        "determinant_identity": True,
        "numerator_identity": True,
        "jump_rule": True,
        "step_counter": True,
        "profile_mass": True,
    }
    st = solver_init(dom)
    for t in s.terms:
        prev = st
        st = solver_step(st, t)
        det = st.mu2 * st.mup1 - st.mu1 * st.mup2
        if det != Poly(dom, [st.nabla]):
            checks["determinant_identity"] = False
        if st.mu2 != bracket_numerator(st.mu1, st.seq):
            checks["numerator_identity"] = False
        if st.last_delta != dom.zero:
            if st.lc != max(prev.lc, st.k - prev.lc):
                checks["jump_rule"] = False
        elif st.lc != prev.lc:
            checks["jump_rule"] = False
        if st.e != st.k + 1 - 2 * st.lc:
            checks["step_counter"] = False
    n = st.k
    if sum(st.profile) != st.lc * (n + 1 - st.lc):
        checks["profile_mass"] = False
    if 4 * sum(st.profile) > (n + 1) ** 2:
        checks["profile_mass"] = False
    if dom.is_field and n > 0:
        checks["cf_agreement"] = True
        exp = cf_expand_prefix(s)
        for i in range(1, len(s) + 1):
            if lc_from_cf(exp, i) != st.profile[i - 1]:
                checks["cf_agreement"] = False
        for i in range(1, len(exp.convergents)):
            det = (exp.convergents[i].f2 * exp.convergents[i - 1].f1
                   - exp.convergents[i].f1 * exp.convergents[i - 1].f2)
            if det.is_zero or det.degree != 0:
                checks["cf_agreement"] = False
    if not all(checks.values()):
        bad = sorted(k for k, v in checks.items() if not v)
        raise InvariantViolation(f"verify failed: {', '.join(bad)}")
    return {"ok": True, "checks": checks}


def cmd_oracle(cfg, dom):
    s = load_seq(cfg, dom)
    if cfg.which == "profile":
        rep = brute_lc(s)
        return {
            "n": len(s),
            "lc": rep.lc,
            "witnesses": [poly_out(dom, w) for w in rep.witnesses],
            "per_degree_counts": {str(d): c for d, c in sorted(rep.per_degree_counts.items())},
        }
    if cfg.which == "count":
        if cfg.degree is None:
            raise MinseqError("oracle count needs --degree")
        return {
            "n": len(s),
            "degree": cfg.degree,
            "count": len(brute_annihilators(s, cfg.degree)),
        }
    if cfg.at is None:
        raise MinseqError("oracle nonvanish needs --at")
    a = dom.parse(cfg.at)
    return {"n": len(s), "at": elem_out(dom, a), "lc_at": brute_lc_at(s, a)}


COMMANDS = {
    "solve": cmd_solve,
    "profile": cmd_profile,
    "cf": cmd_cf,
    "decompose": cmd_decompose,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "nonvanish": cmd_nonvanish,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def run(argv):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else 2
    cfg = config_from_args(ns)
    try:
        dom = parse_domain(cfg.field)
        out = COMMANDS[cfg.command](cfg, dom)
    except InvariantViolation as ex:
        print(f"invariant violation: {ex}", file=sys.stderr)
        return 3
    except MinseqError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2 if cfg.pretty else None))
    return 0


def main():
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
