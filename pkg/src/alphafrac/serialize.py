"""Canonical JSON encoding of all wire types.

Rationals are strings in lowest terms with positive denominator ("5/2",
"-3"); polynomials are arrays of coefficient strings in ascending degree.
``canonical_dumps`` is byte-stable (sorted keys, fixed indentation) so
golden files can be compared verbatim.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .expansion import AlphaSequence, AlphaTriple, Expansion
from .jacobi import CurvePoint, JacobiTriple
from .polyring import Polynomial, as_fraction
from .symmetry import OrbitResult


def frac_to_str(x: Fraction) -> str:
    return str(x)


def frac_from_json(data) -> Fraction:
    if not isinstance(data, (str, int)):
        raise ValueError("rational must be a string or integer, got %r"
                         % (data,))
    return as_fraction(data)


def poly_to_json(p: Polynomial):
    return [frac_to_str(c) for c in p.coeffs]


def poly_from_json(data) -> Polynomial:
    if not isinstance(data, list):
        raise ValueError("polynomial must be an array of coefficients")
    return Polynomial([frac_from_json(c) for c in data])


def expansion_to_json(e: Expansion) -> dict:
    return {
        "b0": frac_to_str(e.b0),
        "block": [frac_to_str(b) for b in e.block],
        "alpha": [frac_to_str(a) for a in e.alpha.alphas],
    }


def expansion_from_json(data) -> Expansion:
    alpha = AlphaSequence([frac_from_json(a) for a in data["alpha"]])
    return Expansion(
        frac_from_json(data["b0"]),
        [frac_from_json(b) for b in data["block"]],
        alpha)


def triple_to_json(t: AlphaTriple) -> dict:
    return {
        "A": poly_to_json(t.A),
        "B": poly_to_json(t.B),
        "C": poly_to_json(t.C),
    }


def triple_from_json(data) -> AlphaTriple:
    return AlphaTriple(
        poly_from_json(data["A"]),
        poly_from_json(data["B"]),
        poly_from_json(data["C"]))


def jacobi_to_json(j: JacobiTriple) -> dict:
    return {
        "U": poly_to_json(j.U),
        "V": poly_to_json(j.V),
        "W": poly_to_json(j.W),
        "R": poly_to_json(j.R),
    }


def jacobi_from_json(data) -> JacobiTriple:
    return JacobiTriple(
        poly_from_json(data["U"]),
        poly_from_json(data["V"]),
        poly_from_json(data["W"]),
        poly_from_json(data["R"]))


def divisor_to_json(points, R: Polynomial) -> dict:
    return {
        "points": [
            {"lambda": frac_to_str(p.lam), "mu": frac_to_str(p.mu)}
            for p in points
        ],
        "R": poly_to_json(R),
    }


def divisor_from_json(data):
    points = tuple(
        CurvePoint(frac_from_json(p["lambda"]), frac_from_json(p["mu"]))
        for p in data["points"])
    return points, poly_from_json(data["R"])


def orbit_to_json(result: OrbitResult) -> dict:
    return {
        "expansions": [expansion_to_json(e) for e in result.expansions],
        "complete": result.complete,
        "skipped_edges": [
            {
                "expansion": expansion_to_json(edge.source),
                "generator": edge.generator,
                "detail": edge.detail,
            }
            for edge in result.skipped_edges
        ],
    }


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
