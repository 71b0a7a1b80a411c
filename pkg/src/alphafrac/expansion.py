"""Core engine for periodic alpha-fraction expansions.

An N-periodic alpha-fraction (N = 2g+1 odd) is determined by a head b_0,
a periodic block b_1..b_N and the shift sequence alpha_1..alpha_N.  Its
value phi satisfies A*phi^2 + 2*B*phi + C = 0 for a triple (A, B, C) with
A monic of degree g, C anti-monic of degree g+1 and deg B <= g.  The
expansion is recovered from the triple by factorizing the 2x2 transfer
matrix [[T-B, -C], [A, T+B]] into elementary factors, one per period step.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    DegenerateExpansion,
    FactorizationDegenerate,
    NonGenericPure,
    NotAdmissible,
    NotMonic,
    NotPure,
    PoleAtLambda,
    ResidueNotUnipotent,
    TraceMismatch,
)
from .polyring import Polynomial, PolyMatrix2, as_fraction, poly_sqrt


class AlphaSequence:
    """An odd-length sequence of pairwise distinct rational shifts."""

    __slots__ = ("alphas",)

    def __init__(self, alphas):
        a = tuple(as_fraction(x) for x in alphas)
        if not a or len(a) % 2 == 0:
            raise ValueError("period must be odd: N = 2g + 1, N >= 1")
        if len(set(a)) != len(a):
            raise ValueError("shift parameters must be pairwise distinct")
        self.alphas = a

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def genus(self) -> int:
        return (len(self.alphas) - 1) // 2

    def vanishing_poly(self) -> Polynomial:
        """The monic degree-N polynomial prod_i (x - alpha_i)."""
        return Polynomial.from_roots(self.alphas)

    def swapped(self, k: int) -> "AlphaSequence":
        """Swap alpha_k and alpha_{k+1} (1-based k)."""
        if not 1 <= k <= self.n - 1:
            raise ValueError("swap index out of range")
        a = list(self.alphas)
        a[k - 1], a[k] = a[k], a[k - 1]
        return AlphaSequence(a)

    def reversed(self) -> "AlphaSequence":
        return AlphaSequence(self.alphas[::-1])

    def __eq__(self, other):
        if not isinstance(other, AlphaSequence):
            return NotImplemented
        return self.alphas == other.alphas

    def __hash__(self):
        return hash(self.alphas)

    def __repr__(self):
        return "AlphaSequence(%s)" % (list(map(str, self.alphas)),)


class Expansion:
    """Head b_0 plus periodic block b_1..b_N against a shift sequence."""

    __slots__ = ("b0", "block", "alpha")

    def __init__(self, b0, block, alpha: AlphaSequence):
        self.b0 = as_fraction(b0)
        self.block = tuple(as_fraction(b) for b in block)
        self.alpha = alpha
        if len(self.block) != alpha.n:
            raise ValueError("block length must equal the period N")

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def bn_star(self) -> Fraction:
        return self.block[-1] - self.b0

    @property
    def is_pure(self) -> bool:
        return self.block[-1] == self.b0

    def key(self):
        """Exact dedup/sort key: alpha order first, then the b-data."""
        return (self.alpha.alphas, self.b0, self.block)

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "[%s; %s]_(%s)" % (
            self.b0,
            ", ".join(map(str, self.block)),
            ", ".join(map(str, self.alpha.alphas)),
        )


class AlphaTriple:
    """Polynomials (A, B, C) with A monic deg g, C anti-monic deg g+1, deg B <= g."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A: Polynomial, B: Polynomial, C: Polynomial):
        if C.is_zero() or C.lead != -1:
            raise ValueError("C must be anti-monic")
        g = C.degree - 1
        if g < 0:
            raise ValueError("C must have degree g + 1 >= 1")
        if A.degree != g or A.lead != 1:
            raise ValueError("A must be monic of degree g")
        if B.degree > g:
            raise ValueError("deg B must be at most g")
        self.A, self.B, self.C = A, B, C

    @property
    def genus(self) -> int:
        return self.A.degree if self.A.coeffs else 0

    @property
    def discriminant(self) -> Polynomial:
        return self.B * self.B - self.A * self.C

    def __eq__(self, other):
        if not isinstance(other, AlphaTriple):
            return NotImplemented
        return (self.A, self.B, self.C) == (other.A, other.B, other.C)

    def __hash__(self):
        return hash((self.A, self.B, self.C))

    def __repr__(self):
        return "AlphaTriple(A=%s, B=%s, C=%s)" % (self.A, self.B, self.C)


class TransferMatrix(NamedTuple):
    """The matrix [[T-B, -C], [A, T+B]] together with its half-trace T."""

    m: PolyMatrix2
    T: Polynomial


class ConvergentPair(NamedTuple):
    index: int
    P: Polynomial
    Q: Polynomial


def convergents(e: Expansion):
    """Convergent numerators/denominators P_k, Q_k for k = -1 .. N.

    The step-N coefficient is b_N* = b_N - b_0; partial numerators are
    a_k = x - alpha_k.
    """
    alphas = e.alpha.alphas
    n = e.n
    pairs = [
        ConvergentPair(-1, Polynomial([1]), Polynomial()),
        ConvergentPair(0, Polynomial([e.b0]), Polynomial([1])),
    ]
    for k in range(1, n + 1):
        b = e.block[k - 1] if k < n else e.bn_star
        a = Polynomial.linear(alphas[k - 1])
        P = b * pairs[-1].P + a * pairs[-2].P
        Q = b * pairs[-1].Q + a * pairs[-2].Q
        pairs.append(ConvergentPair(k, P, Q))
    return pairs


def expansion_to_triple(e: Expansion):
    """Triple (A, B, C) and half-trace T of the expansion's quadratic.

    A = Q_{N-1}, B = (Q_N - P_{N-1})/2, C = -P_N, T = (P_{N-1} + Q_N)/2.
    """
    pairs = convergents(e)
    p_prev, q_prev = pairs[-2].P, pairs[-2].Q
    p_last, q_last = pairs[-1].P, pairs[-1].Q
    A = q_prev
    B = (q_last - p_prev) / 2
    C = -p_last
    T = (p_prev + q_last) / 2
    try:
        triple = AlphaTriple(A, B, C)
    except ValueError as exc:
        raise DegenerateExpansion(str(exc)) from None
    return triple, T


def admissible_decompose(R: Polynomial, alpha: AlphaSequence) -> Polynomial:
    """The canonical S with R = S^2 + prod(x - alpha_i), deg S <= g.

    S has positive leading coefficient (or is 0).  Raises NotMonic if R
    is not monic of degree N, NotAdmissible if no such S exists.
    """
    n, g = alpha.n, alpha.genus
    if R.degree != n or R.lead != 1:
        raise NotMonic("R must be monic of degree N = %d" % n)
    s = poly_sqrt(R - alpha.vanishing_poly())
    if s is None or s.degree > g:
        raise NotAdmissible(
            "R - prod(x - alpha_i) is not the square of a polynomial "
            "of degree <= %d" % g)
    return s


def build_transfer_matrix(t: AlphaTriple, T: Polynomial,
                          alpha: AlphaSequence) -> TransferMatrix:
    """Assemble [[T-B, -C], [A, T+B]]; requires T^2 + prod(x-alpha_i) = B^2 - AC."""
    if T * T + alpha.vanishing_poly() != t.discriminant:
        raise TraceMismatch(
            "T^2 + prod(x - alpha_i) does not equal B^2 - AC")
    m = PolyMatrix2(T - t.B, -t.C, t.A, T + t.B)
    return TransferMatrix(m, T)


def factorize_transfer_matrix(tm: TransferMatrix,
                              alpha: AlphaSequence) -> Expansion:
    """Peel the transfer matrix into elementary factors, recovering b_0..b_N.

    At step k the current matrix [[X, Y], [Z, W]] is evaluated at
    alpha_{k+1}; the factor coefficient is X/Z there, or Y/W when Z
    vanishes.  Each peel divides out (x - alpha_{k+1}) exactly; the final
    residue must be the unipotent [[1, b_N - b_0], [0, 1]].
    """
    if tm.m.det() != -alpha.vanishing_poly():
        raise ValueError("det M must equal -prod(x - alpha_i)")
    X, Y, Z, W = tm.m.a, tm.m.b, tm.m.c, tm.m.d
    bs = []
    for k, al in enumerate(alpha.alphas):
        x, y, z, w = X(al), Y(al), Z(al), W(al)
        if z != 0:
            b = x / z
        elif w != 0 and x == 0:
            b = y / w
        else:
            raise FactorizationDegenerate(
                "null vector has vanishing first component at step %d "
                "(lambda = %s)" % (k, al))
        bs.append(b)
        x_new, rx = (X - b * Z).synthetic_div(al)
        y_new, ry = (Y - b * W).synthetic_div(al)
        if rx != 0 or ry != 0:
            raise FactorizationDegenerate(
                "nonzero remainder dividing out (x - %s) at step %d"
                % (al, k))
        X, Y, Z, W = Z, W, x_new, y_new
    if X != 1 or W != 1 or not Z.is_zero() or Y.degree > 0:
        raise ResidueNotUnipotent(
            "residue after peeling is not [[1, u], [0, 1]]")
    u = Y.coeff(0)
    block = tuple(bs[1:]) + (u + bs[0],)
    return Expansion(bs[0], block, alpha)


def expand(t: AlphaTriple, alpha: AlphaSequence):
    """Both N-periodic expansions of the triple, for T = +S then T = -S."""
    s = admissible_decompose(t.discriminant, alpha)
    return tuple(
        factorize_transfer_matrix(build_transfer_matrix(t, T, alpha), alpha)
        for T in (s, -s))


def pure_expand(t: AlphaTriple, alpha: AlphaSequence) -> Expansion:
    """The pure-periodic expansion (b_N = b_0) of a triple with C(alpha_N) = 0.

    The half-trace is pinned by T(alpha_N) = -B(alpha_N); requires the
    generic condition B(alpha_N) != 0.
    """
    a_last = alpha.alphas[-1]
    if t.C(a_last) != 0:
        raise NotPure("C(alpha_N) = %s != 0" % t.C(a_last))
    b_val = t.B(a_last)
    if b_val == 0:
        raise NonGenericPure("B(alpha_N) = 0: trace sign is not determined")
    s = admissible_decompose(t.discriminant, alpha)
    T = s if s(a_last) == -b_val else -s
    assert T(a_last) == -b_val
    e = factorize_transfer_matrix(build_transfer_matrix(t, T, alpha), alpha)
    assert e.is_pure
    return e


def verify_expansion(e: Expansion, t: AlphaTriple) -> dict:
    """Recompute the triple from e and compare exactly; returns a report.

    Also checks the determinant identity
    P_N Q_{N-1} - P_{N-1} Q_N = prod(x - alpha_i).
    """
    pairs = convergents(e)
    p_prev, q_prev = pairs[-2].P, pairs[-2].Q
    p_last, q_last = pairs[-1].P, pairs[-1].Q
    recomputed = {
        "A": q_prev,
        "B": (q_last - p_prev) / 2,
        "C": -p_last,
    }
    expected = {"A": t.A, "B": t.B, "C": t.C}
    checks = []
    for name in ("A", "B", "C"):
        ok = recomputed[name] == expected[name]
        checks.append({
            "name": name,
            "pass": ok,
            "detail": "expected %s, recomputed %s"
                      % (expected[name], recomputed[name]),
        })
    det = p_last * q_prev - p_prev * q_last
    frak = e.alpha.vanishing_poly()
    checks.append({
        "name": "determinant_identity",
        "pass": det == frak,
        "detail": "P_N Q_{N-1} - P_{N-1} Q_N = %s, prod(x - alpha_i) = %s"
                  % (det, frak),
    })
    return {"pass": all(c["pass"] for c in checks), "checks": checks}


def numeric_residual(t: AlphaTriple, lambda0, branch: int = +1) -> float:
    """|A phi^2 + 2 B phi + C| at lambda0 for phi = (-B +- sqrt(R))/A in floats.

    branch is +1 or -1 and selects the square-root sign; complex arithmetic
    is used when R(lambda0) < 0.  Sanity net only; exact checks are
    authoritative.
    """
    lam = as_fraction(lambda0)
    a = t.A(lam)
    if a == 0:
        raise PoleAtLambda("A(%s) = 0" % lam)
    if branch not in (+1, -1):
        raise ValueError("branch must be +1 or -1")
    b = t.B(lam)
    c = t.C(lam)
    r = b * b - a * c
    root = cmath.sqrt(complex(r))
    phi = (-float(b) + branch * root) / float(a)
    return abs(float(a) * phi * phi + 2 * float(b) * phi + float(c))
