"""JSON encoding of surgery presentations.

Layout::

    {"base": "S3",
     "components": [{"id": "K", "curve": {"type": "knot", "knot": "T(2,3)"},
                     "coeff": "-1/2", "surface_framing": 0,
                     "linking": {"M": 1}}, ...],
     "annulus_pairs": [["a", "b"]],
     "split": false}

Coefficients are exact strings; linking numbers are JSON integers and
are listed on both rows.  Keys are written in sorted order.
"""

import json
from fractions import Fraction

from .casson import parse_manifold, render_manifold
from .errors import ParseError
from .knots import parse_knot, render_knot
from .surgery import (BingPairStrand, BorromeanComponent, CableStrand, Component,
                      KnotCurve, MeridianOf, SurgeryPresentation, UnlinkComponent,
                      WhiteheadSatellite, as_fraction)


def fraction_text(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def curve_to_json(c):
    if isinstance(c, KnotCurve):
        return {"type": "knot", "knot": render_knot(c.knot)}
    if isinstance(c, MeridianOf):
        return {"type": "meridian", "of": c.component}
    if isinstance(c, CableStrand):
        return {"type": "cable", "knot": render_knot(c.knot), "ell": c.ell, "strand": c.strand}
    if isinstance(c, BingPairStrand):
        return {"type": "bing", "of": curve_to_json(c.of), "strand": c.strand}
    if isinstance(c, UnlinkComponent):
        return {"type": "unlink"}
    if isinstance(c, BorromeanComponent):
        return {"type": "borromean", "index": c.index}
    if isinstance(c, WhiteheadSatellite):
        return {"type": "whitehead", "of": curve_to_json(c.of)}
    raise TypeError("unknown curve tag %r" % (c,))


def curve_from_json(d):
    try:
        t = d["type"]
        if t == "knot":
            return KnotCurve(parse_knot(d["knot"]))
        if t == "meridian":
            return MeridianOf(str(d["of"]))
        if t == "cable":
            return CableStrand(parse_knot(d["knot"]), int(d["ell"]), int(d["strand"]))
        if t == "bing":
            return BingPairStrand(curve_from_json(d["of"]), int(d["strand"]))
        if t == "unlink":
            return UnlinkComponent()
        if t == "borromean":
            return BorromeanComponent(int(d["index"]))
        if t == "whitehead":
            return WhiteheadSatellite(curve_from_json(d["of"]))
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError("bad curve description %r: %s" % (d, e)) from None
    raise ParseError("unknown curve type %r" % (t,))


def presentation_to_json(p):
    comps = []
    for c in p.components:
        entry = {"id": c.id, "curve": curve_to_json(c.curve), "coeff": fraction_text(c.coeff),
                 "linking": {k: int(v) for k, v in sorted(p.row(c.id).items())}}
        if c.surface_framing is not None:
            entry["surface_framing"] = int(c.surface_framing)
        comps.append(entry)
    return {"base": render_manifold(p.base), "components": comps,
            "annulus_pairs": [list(pr) for pr in p.annulus_pairs], "split": bool(p.split)}


def presentation_from_json(d):
    if not isinstance(d, dict) or "components" not in d:
        raise ParseError("a presentation needs a 'components' list")
    comps, lk = [], {}
    for entry in d["components"]:
        try:
            cid = str(entry["id"])
            coeff = entry["coeff"]
            if isinstance(coeff, float):
                raise ParseError("coefficient of %s must be exact, not a float" % cid)
            coeff = as_fraction(coeff if isinstance(coeff, int) else str(coeff))
            sf = entry.get("surface_framing")
            comps.append(Component(cid, curve_from_json(entry["curve"]), coeff,
                                   None if sf is None else int(sf)))
            for other, v in entry.get("linking", {}).items():
                if isinstance(v, float) or int(v) != v:
                    raise ParseError("linking number %s-%s must be an integer" % (cid, other))
                k = tuple(sorted((cid, str(other))))
                if k in lk and lk[k] != int(v):
                    raise ParseError("asymmetric linking between %s and %s" % k)
                lk[k] = int(v)
        except (KeyError, TypeError) as e:
            raise ParseError("bad component entry %r: %s" % (entry, e)) from None
    base = parse_manifold(d.get("base", "S3"))
    try:
        return SurgeryPresentation(tuple(comps), lk, base=base,
                                   annulus_pairs=tuple(tuple(x) for x in d.get("annulus_pairs", ())),
                                   split=bool(d.get("split", False)))
    except ValueError as e:
        raise ParseError(str(e)) from None


def dumps(p, indent=2):
    return json.dumps(presentation_to_json(p), sort_keys=True, indent=indent)


def loads(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("not valid JSON: %s" % e) from None
    return presentation_from_json(d)


def load(path):
    with open(path) as f:
        return loads(f.read())
