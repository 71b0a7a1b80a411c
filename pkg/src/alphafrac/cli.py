"""Command-line front-end: every core operation over JSON on files or stdio.

Exit codes: 0 success, 1 domain error (machine-readable record on stderr),
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import datasets
from .errors import AlphaFractionError
from .expansion import (
    AlphaSequence,
    expand,
    expansion_to_triple,
    numeric_residual,
    pure_expand,
    verify_expansion,
)
from .jacobi import (
    alpha_triple_from_jacobi,
    divisor_from_jacobi,
    jacobi_from_alpha_triple,
    jacobi_from_divisor,
    pure_beta_candidates,
)
from .serialize import (
    canonical_dumps,
    divisor_from_json,
    divisor_to_json,
    expansion_from_json,
    expansion_to_json,
    frac_from_json,
    frac_to_str,
    jacobi_from_json,
    jacobi_to_json,
    orbit_to_json,
    poly_from_json,
    poly_to_json,
    triple_from_json,
    triple_to_json,
)
from .symmetry import apply_word, orbit


def _alpha_from_json(data) -> AlphaSequence:
    return AlphaSequence([frac_from_json(a) for a in data])


def _cmd_expand(payload, args):
    triple = triple_from_json(payload)
    alpha = _alpha_from_json(payload["alpha"])
    return [expansion_to_json(e) for e in expand(triple, alpha)]


def _cmd_pure_expand(payload, args):
    triple = triple_from_json(payload)
    alpha = _alpha_from_json(payload["alpha"])
    return expansion_to_json(pure_expand(triple, alpha))


def _cmd_triple(payload, args):
    e = expansion_from_json(payload)
    triple, half_trace = expansion_to_triple(e)
    out = triple_to_json(triple)
    out["T"] = poly_to_json(half_trace)
    out["alpha"] = [frac_to_str(a) for a in e.alpha.alphas]
    return out


def _cmd_admissible(payload, args):
    from .expansion import admissible_decompose
    alpha = _alpha_from_json(payload["alpha"])
    s = admissible_decompose(poly_from_json(payload["R"]), alpha)
    return {"S": poly_to_json(s)}


def _cmd_act(payload, args):
    e = expansion_from_json(payload)
    word = json.loads(args.word)
    return expansion_to_json(apply_word(e, word))


def _cmd_orbit(payload, args):
    e = expansion_from_json(payload)
    return orbit_to_json(orbit(e, pure=args.pure))


def _cmd_jacobi_to_triple(payload, args):
    j = jacobi_from_json(payload)
    beta = frac_from_json(payload["beta"])
    return triple_to_json(alpha_triple_from_jacobi(j, beta))


def _cmd_triple_to_jacobi(payload, args):
    j, beta = jacobi_from_alpha_triple(triple_from_json(payload))
    out = jacobi_to_json(j)
    out["beta"] = frac_to_str(beta)
    return out


def _cmd_divisor_to_jacobi(payload, args):
    points, r = divisor_from_json(payload)
    return jacobi_to_json(jacobi_from_divisor(points, r))


def _cmd_jacobi_to_divisor(payload, args):
    j = jacobi_from_json(payload)
    return divisor_to_json(divisor_from_jacobi(j), j.R)


def _cmd_pure_beta(payload, args):
    j = jacobi_from_json(payload)
    betas = pure_beta_candidates(j, frac_from_json(payload["alpha_n"]))
    return {"betas": [frac_to_str(b) for b in betas]}


def _cmd_verify(payload, args):
    e = expansion_from_json(payload["expansion"])
    triple = triple_from_json(payload["triple"])
    return verify_expansion(e, triple)


def _cmd_residual(payload, args):
    triple = triple_from_json(payload)
    branch = +1 if args.branch == "+" else -1
    res = numeric_residual(triple, frac_from_json(args.lam), branch)
    return {"residual": res}


def _cmd_example(payload, args):
    return datasets.example(args.name)


_HANDLERS = {
    "expand": _cmd_expand,
    "pure-expand": _cmd_pure_expand,
    "triple": _cmd_triple,
    "admissible": _cmd_admissible,
    "act": _cmd_act,
    "orbit": _cmd_orbit,
    "jacobi-to-triple": _cmd_jacobi_to_triple,
    "triple-to-jacobi": _cmd_triple_to_jacobi,
    "divisor-to-jacobi": _cmd_divisor_to_jacobi,
    "jacobi-to-divisor": _cmd_jacobi_to_divisor,
    "pure-beta": _cmd_pure_beta,
    "verify": _cmd_verify,
    "residual": _cmd_residual,
    "example": _cmd_example,
}

_NO_INPUT = {"example"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphafrac",
        description="Periodic alpha-fraction expansions on odd-degree "
                    "hyperelliptic curves, in exact rational arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **extra):
        p = sub.add_parser(name, help=help_text)
        if name not in _NO_INPUT:
            p.add_argument("--input", "-i", default="-",
                           help="JSON input path, or - for stdin")
        p.add_argument("--output", "-o", default="-",
                       help="JSON output path, or - for stdout")
        return p

    add("expand", "both periodic expansions of an alpha-triple")
    add("pure-expand", "the pure-periodic expansion of an alpha-triple")
    add("triple", "the quadratic triple (A, B, C) and half-trace of an "
                  "expansion")
    add("admissible", "decompose R = S^2 + prod(x - alpha_i)")
    p = add("act", "apply a group word to an expansion")
    p.add_argument("--word", required=True,
                   help='JSON word, e.g. \'["sigma:1","epspi"]\'')
    p = add("orbit", "symmetry-group orbit of an expansion")
    p.add_argument("--pure", action="store_true",
                   help="restrict to the pure-case subgroup S_{N-1}")
    add("jacobi-to-triple", "alpha-triple of a Jacobi triple and shift beta")
    add("triple-to-jacobi", "Jacobi triple and shift beta of an alpha-triple")
    add("divisor-to-jacobi", "Jacobi triple of an affine divisor")
    add("jacobi-to-divisor", "divisor points of a Jacobi triple")
    add("pure-beta", "shifts beta giving C(alpha_N) = 0")
    add("verify", "recompute and compare an expansion's triple")
    p = add("residual", "floating-point residual of the quadratic relation")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="rational evaluation point, e.g. 5/2")
    p.add_argument("--branch", choices=["+", "-"], default="+",
                   help="square-root branch")
    p = add("example", "emit a canned example dataset")
    p.add_argument("--name", required=True,
                   help="one of: %s" % ", ".join(datasets.EXAMPLE_NAMES))
    return parser


def _read_payload(args):
    if args.command in _NO_INPUT:
        return None
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _write_result(args, result):
    text = canonical_dumps(result)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _read_payload(args)
        result = _HANDLERS[args.command](payload, args)
    except AlphaFractionError as exc:
        sys.stderr.write(canonical_dumps(
            {"error": exc.code, "detail": str(exc)}))
        return 1
    except (json.JSONDecodeError, KeyError, TypeError, ValueError,
            OSError) as exc:
        sys.stderr.write(canonical_dumps(
            {"error": "MalformedInput", "detail": str(exc)}))
        return 2
    _write_result(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
