"""Birational Z_2 x S_N action on periodic alpha-fraction expansions.

Generators: sigma_k (1 <= k <= N-1) swaps alpha_k and alpha_{k+1} and
transfers delta = (alpha_{k+1} - alpha_k)/b_k between neighbouring
coefficients; epspi reverses the shift order and flips to the conjugate
expansion.  Both are involutions.  The generic orbit has 2 * N! elements;
in the pure case the group breaks down to S_{N-1} (sigma_1 .. sigma_{N-2}).
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotPure, ZeroPivot
from .expansion import Expansion


def apply_sigma(e: Expansion, k: int) -> Expansion:
    """Apply sigma_k (1-based, 1 <= k <= N-1); requires b_k != 0.

    The update lives in the coordinates (b_0, ..., b_{N-1}, u = b_N - b_0):
    for k <= N-2 it touches b_{k-1} and b_{k+1}, for k = N-1 it touches
    b_{N-2} and u.  The displayed b_N is u + b_0 afterwards.
    """
    n = e.n
    if not 1 <= k <= n - 1:
        raise ValueError("sigma index must satisfy 1 <= k <= N-1")
    pivot = e.block[k - 1]
    if pivot == 0:
        raise ZeroPivot("sigma_%d undefined: b_%d = 0" % (k, k))
    delta = (e.alpha.alphas[k] - e.alpha.alphas[k - 1]) / pivot
    c = [e.b0] + list(e.block[:-1])
    u = e.bn_star
    c[k - 1] += delta
    if k <= n - 2:
        c[k + 1] -= delta
    else:
        u -= delta
    return Expansion(c[0], tuple(c[1:]) + (u + c[0],), e.alpha.swapped(k))


def apply_eps_pi(e: Expansion) -> Expansion:
    """Apply the involution epspi: conjugate expansion over the reversed shifts.

    b~_j = -b_{N-j} for 1 <= j <= N-1, b~_0 = b_0 - b_N, b~_N = -b_N.
    """
    n = e.n
    b_last = e.block[-1]
    block = tuple(-e.block[n - 1 - j] for j in range(1, n)) + (-b_last,)
    return Expansion(e.b0 - b_last, block, e.alpha.reversed())


def parse_word(letters, n: int):
    """Validate a group word given as ["sigma:1", "epspi", ...] tokens."""
    parsed = []
    for tok in letters:
        if tok == "epspi":
            parsed.append(("epspi", 0))
        elif isinstance(tok, str) and tok.startswith("sigma:"):
            k = int(tok.split(":", 1)[1])
            if not 1 <= k <= n - 1:
                raise ValueError("sigma index %d out of range for N = %d"
                                 % (k, n))
            parsed.append(("sigma", k))
        else:
            raise ValueError("unknown group-word letter %r" % (tok,))
    return parsed


def apply_word(e: Expansion, letters) -> Expansion:
    """Left-to-right composition of the generators named by the word."""
    for i, (kind, k) in enumerate(parse_word(letters, e.n)):
        try:
            e = apply_sigma(e, k) if kind == "sigma" else apply_eps_pi(e)
        except ZeroPivot as exc:
            raise ZeroPivot("step %d: %s" % (i, exc)) from None
    return e


class SkippedEdge(NamedTuple):
    source: Expansion
    generator: str
    detail: str


class OrbitResult(NamedTuple):
    expansions: tuple
    complete: bool
    skipped_edges: tuple


def orbit(e: Expansion, pure: bool = False) -> OrbitResult:
    """Breadth-first closure of e under the group generators.

    In pure mode (requires e pure) only sigma_1 .. sigma_{N-2} act.
    Zero-pivot edges are recorded and skipped, not fatal.  Expansions come
    back in canonical order: lexicographic on (alpha order, b_0, block).
    """
    if pure and not e.is_pure:
        raise NotPure("pure orbit requested for a non-pure expansion")
    n = e.n
    max_k = n - 2 if pure else n - 1
    generators = ["sigma:%d" % k for k in range(1, max_k + 1)]
    if not pure:
        generators.append("epspi")
    seen = {e.key(): e}
    frontier = [e]
    skipped = []
    while frontier:
        nxt = []
        for cur in frontier:
            for gen in generators:
                try:
                    if gen == "epspi":
                        img = apply_eps_pi(cur)
                    else:
                        img = apply_sigma(cur, int(gen.split(":")[1]))
                except ZeroPivot as exc:
                    skipped.append(SkippedEdge(cur, gen, str(exc)))
                    continue
                if img.key() not in seen:
                    seen[img.key()] = img
                    nxt.append(img)
        frontier = nxt
    ordered = tuple(sorted(seen.values(), key=lambda x: x.key()))
    return OrbitResult(ordered, not skipped, tuple(skipped))
