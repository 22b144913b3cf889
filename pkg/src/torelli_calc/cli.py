"""Command-line front end.

Exit status: 0 success, 1 a certificate or selftest came back false,
2 bad usage or input, 3 the computation itself failed.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import certify, formats
from .casson import casson_manifold, casson_surgery, parse_manifold, render_manifold
from .dfloer import d_manifold, d_surgery
from .errors import TorelliCalcError
from .knots import alexander, parse_knot, render_knot, seifert_genus, v_invariant
from .surgery import homology_order, integerize, reduce
from .torelli import (assemble, generator_defect_bound, is_torelli,
                      norm_lower_bound_from_d, parse_word, render_letter, word_bound,
                      word_norm)

_NEGATIVE = re.compile(r"^-\d+$|^-\d+/\d+$")


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, Fraction):
        return formats.fraction_text(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        print(text)


def _parse_surgery_coeff(text):
    """'+1', '-1', '1/n', '-1/n' -> signed integer n."""
    m = re.fullmatch(r"\s*([+-]?)\s*1(?:\s*/\s*(\d+))?\s*", text)
    if not m or m.group(2) == "0":
        raise UsageError("coefficient must be +-1 or +-1/n, got %r" % text)
    n = int(m.group(2) or 1)
    return -n if m.group(1) == "-" else n


def _read(path):
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror)) from None


# -- subcommands -----------------------------------------------------------------

def cmd_alex(args):
    k = parse_knot(args.knot)
    delta = alexander(k)
    _emit(args, {"knot": render_knot(k), "alexander": str(delta), "genus": seifert_genus(k)},
          str(delta))
    return 0


def cmd_casson(args):
    k = parse_knot(args.knot)
    try:
        n = int(args.n)
    except ValueError:
        raise UsageError("n must be an integer, got %r" % args.n) from None
    lam = casson_surgery(k, n)
    _emit(args, {"lambda": lam}, str(lam))
    return 0


def cmd_casson_expr(args):
    e = parse_manifold(_read(args.file))
    lam = casson_manifold(e)
    _emit(args, {"lambda": lam}, str(lam))
    return 0


def cmd_dinv(args):
    k = parse_knot(args.knot)
    n = _parse_surgery_coeff(args.coeff)
    sign = 1 if n > 0 else -1
    d = d_surgery(k, sign, abs(n))
    v0 = v_invariant(k if sign == 1 else k.mirrored(), 0)
    _emit(args, {"d": int(d), "v0": v0}, "d = %d\nV0 = %d" % (d, v0))
    return 0


def _word(args):
    w = parse_word(args.word, args.genus)
    if not args.allow_nontorelli and not all(is_torelli(g) for g, _ in w.letters):
        raise UsageError("word contains a non-separating twist; pass --allow-nontorelli")
    return w


def cmd_bounds(args):
    w = _word(args)
    letters = []
    for g, n in w.letters:
        b = generator_defect_bound(g)
        entry = {"letter": render_letter(g, n), "m": g.m, "bound": b.bound}
        if b.refined is not None:
            entry["refined"] = list(b.refined)
        letters.append(entry)
    gens = []
    for g, _ in w.letters:
        if g not in gens:
            gens.append(g)
    payload = {"genus": w.genus, "norm": word_norm(w), "letters": letters,
               "word_bound": word_bound(w, gens)}
    lines = ["genus %d, norm %d" % (w.genus, payload["norm"])]
    lines += ["  %s: m=%d, |defect| <= %d" % (e["letter"], e["m"], e["bound"]) for e in letters]
    lines.append("word bound: %d" % payload["word_bound"])
    if args.d is not None:
        payload["norm_lower_bound"] = norm_lower_bound_from_d(args.d, w.genus)
        lines.append("any word giving d = %d has norm >= %d" % (args.d, payload["norm_lower_bound"]))
    _emit(args, payload, "\n".join(lines))
    return 0


def _parse_etas(items):
    etas = {}
    for item in items or ():
        m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*=\s*([+-]?\d+)\s*", item)
        if not m:
            raise UsageError("--eta expects i,j=value, got %r" % item)
        etas[(int(m.group(1)), int(m.group(2)))] = int(m.group(3))
    return etas


def cmd_assemble(args):
    w = _word(args)
    p = assemble(w, etas=_parse_etas(args.eta), allow_nontorelli=args.allow_nontorelli,
                 split=args.split)
    print(formats.dumps(p, indent=None if args.json else 2))
    return 0


def cmd_homology(args):
    p = formats.loads(_read(args.file))
    h = homology_order(p)
    _emit(args, {"homology_order": h}, str(h))
    return 0


def cmd_reduce(args):
    p = formats.loads(_read(args.file))
    log = []
    e = reduce(p, log)
    payload = {"manifold": render_manifold(e), "lambda": casson_manifold(e),
               "d": int(d_manifold(e)), "steps": log}
    text = "\n".join(log + [render_manifold(e),
                            "lambda = %d, d = %d" % (payload["lambda"], payload["d"])])
    _emit(args, payload, text)
    return 0


def cmd_integerize(args):
    p = formats.loads(_read(args.file))
    print(formats.dumps(integerize(p), indent=None if args.json else 2))
    return 0


def _certificate(args, cert):
    if args.json:
        print(cert.to_json(indent=None))
    else:
        print(cert.summary())
    return 0 if cert.verdict else 1


def cmd_certify(args):
    which = args.which
    if which == "cayley":
        return _certificate(args, certify.cayley_diameter(args.genus, args.target))
    if which == "casson-unbounded":
        return _certificate(args, certify.casson_unbounded(args.N))
    if which == "no-morita":
        return _certificate(args, certify.no_morita(args.d))
    if which == "not-finite-type":
        max_n = args.max_n if args.max_n is not None else certify.DEFAULT_MAX_N
        return _certificate(args, certify.not_finite_type(args.n, max_n=max_n))
    raise UsageError("unknown certificate %r" % which)


def cmd_selftest(args):
    from .selftest import run_selftest
    seed = args.seed
    if seed is None:
        env = os.environ.get("TORELLI_CALC_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError("TORELLI_CALC_SEED must be an integer") from None
    report = run_selftest(seed, args.cases)
    lines = ["seed %d" % seed]
    lines += ["  [%s] %s (%d cases)" % ("ok" if r["ok"] else "FAIL", r["name"], r["cases"])
              for r in report["checks"]]
    _emit(args, report, "\n".join(lines))
    return 0 if report["ok"] else 1


# -- parser ----------------------------------------------------------------------

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit key-sorted JSON")
    p = argparse.ArgumentParser(prog="torelli-calc", parents=[common],
                                description="Exact invariants of homology spheres built by "
                                            "Torelli surgery.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, *extra):
        sp = sub.add_parser(name, parents=[common, *extra], help=help)
        sp.set_defaults(func=func)
        sp._negative_number_matcher = _NEGATIVE
        return sp

    sp = add("alex", cmd_alex, "normalized Alexander polynomial of a catalog knot")
    sp.add_argument("knot")
    sp = add("casson", cmd_casson, "Casson invariant of 1/n surgery on a knot")
    sp.add_argument("knot")
    sp.add_argument("n")
    sp = add("casson-expr", cmd_casson_expr, "Casson invariant of a manifold expression file")
    sp.add_argument("file")
    sp = add("dinv", cmd_dinv, "d-invariant of +-1/n surgery on a knot")
    sp.add_argument("knot")
    sp.add_argument("coeff")

    word_opts = argparse.ArgumentParser(add_help=False)
    word_opts.add_argument("word")
    word_opts.add_argument("--genus", type=int, default=None)
    word_opts.add_argument("--allow-nontorelli", action="store_true")
    sp = add("bounds", cmd_bounds, "d-invariant bounds for a Torelli word", word_opts)
    sp.add_argument("--d", type=int, default=None, help="also bound the norm for this d")
    sp = add("assemble", cmd_assemble, "surgery presentation of a Torelli word", word_opts)
    sp.add_argument("--eta", action="append", help="i,j=v linking of bounding pair letters")
    sp.add_argument("--split", action="store_true", help="declare the letters geometrically split")
    for name, func, h in (("homology", cmd_homology, "|H_1| of a presentation file"),
                          ("reduce", cmd_reduce, "reduce a presentation file to a manifold"),
                          ("integerize", cmd_integerize, "replace rational coefficients by earrings")):
        sp = add(name, func, h)
        sp.add_argument("file")

    sp = add("certify", cmd_certify, "emit a certificate")
    csub = sp.add_subparsers(dest="which", required=True)
    c = csub.add_parser("cayley", parents=[common])
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--target", type=int, required=True)
    c = csub.add_parser("casson-unbounded", parents=[common])
    c.add_argument("N", type=int)
    c = csub.add_parser("no-morita", parents=[common])
    c._negative_number_matcher = _NEGATIVE
    c.add_argument("d", type=int)
    c = csub.add_parser("not-finite-type", parents=[common])
    c.add_argument("n", type=int)
    c.add_argument("--max-n", type=int, default=None)

    sp = add("selftest", cmd_selftest, "randomized property checks (seed from TORELLI_CALC_SEED)")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--cases", type=int, default=100)
    return p


def run(argv=None):
    parser = _parser()
    parser._negative_number_matcher = _NEGATIVE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except TorelliCalcError as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 3
    except RecursionError:
        print("error: computation too deep", file=sys.stderr)
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
