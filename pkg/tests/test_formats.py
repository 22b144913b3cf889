import json
import random
from fractions import Fraction

import pytest

from torelli_calc import formats
from torelli_calc.casson import ManifoldExpr
from torelli_calc.errors import ParseError
from torelli_calc.knots import torus
from torelli_calc.random_instances import random_jlink, random_presentation
from torelli_calc.surgery import Component, KnotCurve, build_brunnian, presentation


def test_round_trip_random():
    r = random.Random(0)
    for _ in range(200):
        p = random_presentation(r)
        assert formats.loads(formats.dumps(p)) == p
        j, _ = random_jlink(r)
        assert formats.loads(formats.dumps(j)) == j


def test_round_trip_structured():
    for n in (3, 4, 7):
        p = build_brunnian(n)
        assert formats.loads(formats.dumps(p)) == p
    p = presentation([Component("K", KnotCurve(torus(2, 3)), Fraction(-1, 2), 0)],
                     base=ManifoldExpr.surgery(torus(2, 5), 1).reverse(), split=True)
    assert formats.loads(formats.dumps(p)) == p


def test_canonical_layout():
    p = presentation([Component("K", KnotCurve(torus(2, 3)), Fraction(-7, 3), 2),
                      Component("M", KnotCurve(torus(2, 5)), 4)], {("K", "M"): -2})
    text = formats.dumps(p)
    d = json.loads(text)
    assert list(d) == sorted(d)
    assert d["components"][0]["coeff"] == "-7/3"
    assert d["components"][0]["linking"] == {"M": -2}
    assert d["components"][1]["linking"] == {"K": -2}
    assert "surface_framing" not in d["components"][1]
    assert formats.dumps(p) == text


def test_rejects_bad_input():
    base = {"base": "S3", "components": [
        {"id": "a", "curve": {"type": "knot", "knot": "U"}, "coeff": "1", "linking": {"b": 1}},
        {"id": "b", "curve": {"type": "knot", "knot": "U"}, "coeff": "2", "linking": {"a": 2}}]}
    with pytest.raises(ParseError):
        formats.presentation_from_json(base)
    with pytest.raises(ParseError):
        formats.loads("{not json")
    with pytest.raises(ParseError):
        formats.loads(json.dumps({"components": [
            {"id": "a", "curve": {"type": "knot", "knot": "U"}, "coeff": 0.5}]}))
    with pytest.raises(ParseError):
        formats.loads(json.dumps({"components": [
            {"id": "a", "curve": {"type": "spiral"}, "coeff": "1"}]}))
    with pytest.raises(ParseError):
        formats.loads(json.dumps({"nothing": []}))
