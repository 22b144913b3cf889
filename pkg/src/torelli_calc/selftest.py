"""Randomized property checks shipped with the command-line tool."""

from .certify import morita_consistency, split_parts
from .errors import PatternMismatch
from .random_instances import (random_jlink, random_presentation, random_split_sep_word,
                               random_torelli_word, rng)
from .surgery import (annulus_pair_eliminate, blow_down, homology_order, integerize,
                      reduce)
from .torelli import TorelliWord, assemble


def _check(name, cases, fn):
    failures = 0
    first = None
    for i in range(cases):
        try:
            ok = fn(i)
        except PatternMismatch as e:
            ok, first = False, first or str(e)
        if not ok:
            failures += 1
            first = first or "case %d" % i
    out = {"name": name, "cases": cases, "failures": failures, "ok": failures == 0}
    if first:
        out["first_failure"] = first
    return out


def run_selftest(seed=0, cases=100):
    r = rng(seed)

    def words(_):
        w, etas = random_torelli_word(r)
        return homology_order(assemble(w, etas=etas)) == 1

    def rewrites(_):
        p = random_presentation(r)
        h = homology_order(p)
        return homology_order(integerize(p)) == h and homology_order(blow_down(p, "U")) == h

    def jlinks(_):
        p, _params = random_jlink(r)
        h = homology_order(p)
        q = p
        for pr in p.annulus_pairs:
            q = annulus_pair_eliminate(q, pr)
            if homology_order(q) != h:
                return False
        return reduce(p).is_sphere()

    def morita(_):
        wa, wb = random_split_sep_word(r), random_split_sep_word(r)
        g = max(wa.genus, wb.genus)
        parts = split_parts(TorelliWord(g, wa.letters + wb.letters),
                            TorelliWord(g, wa.letters), TorelliWord(g, wb.letters))
        return morita_consistency(parts).verdict

    checks = [_check("assembled Torelli words have |H_1| = 1", cases, words),
              _check("|H_1| invariant under integerize and blow-down", cases, rewrites),
              _check("J-links reduce to S^3", cases, jlinks),
              _check("d and chi(HF_red) defects agree on split words", cases, morita)]
    return {"seed": seed, "checks": checks, "ok": all(c["ok"] for c in checks)}
