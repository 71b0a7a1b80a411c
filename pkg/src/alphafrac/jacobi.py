"""Jacobi triples, divisor interpolation and the correspondence with alpha-triples.

A Jacobi triple (U, V, W) with U monic of degree g, W monic of degree g+1
and deg V <= g-1 satisfies V^2 + U W = R and is the Mumford-style
coordinate of a non-special degree-g divisor on the curve mu^2 = R(lambda).
Shifting by beta gives the bijection with alpha-triples:
A = U, B = V + beta*U, C = -W + 2*beta*V + beta^2*U.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    IrrationalBeta,
    IrrationalSupport,
    PointOffCurve,
    RepeatedAbscissa,
    RootOfR,
    SpecialDivisor,
)
from .expansion import AlphaTriple
from .polyring import Polynomial, as_fraction, rational_sqrt


class CurvePoint(NamedTuple):
    """An affine point (lambda, mu) with mu^2 = R(lambda)."""

    lam: Fraction
    mu: Fraction


class JacobiTriple:
    """Mumford-style data (U, V, W) on the curve mu^2 = R(lambda)."""

    __slots__ = ("U", "V", "W", "R")

    def __init__(self, U: Polynomial, V: Polynomial, W: Polynomial,
                 R: Polynomial):
        if U.is_zero() or U.lead != 1:
            raise ValueError("U must be monic")
        g = U.degree
        if W.degree != g + 1 or W.lead != 1:
            raise ValueError("W must be monic of degree g + 1")
        if V.degree > g - 1:
            raise ValueError("deg V must be at most g - 1")
        if V * V + U * W != R:
            raise ValueError("V^2 + U W must equal R")
        self.U, self.V, self.W, self.R = U, V, W, R

    @property
    def genus(self) -> int:
        return self.U.degree

    def __eq__(self, other):
        if not isinstance(other, JacobiTriple):
            return NotImplemented
        return (self.U, self.V, self.W, self.R) == \
               (other.U, other.V, other.W, other.R)

    def __hash__(self):
        return hash((self.U, self.V, self.W, self.R))

    def __repr__(self):
        return "JacobiTriple(U=%s, V=%s, W=%s, R=%s)" % (
            self.U, self.V, self.W, self.R)


def _lagrange(points) -> Polynomial:
    """Interpolating polynomial through (lam_i, mu_i), degree <= len-1."""
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial([yi])
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            term = term * Polynomial.linear(xj) / (xi - xj)
        total = total + term
    return total


def jacobi_from_divisor(points, R: Polynomial) -> JacobiTriple:
    """Jacobi triple of a divisor given as g affine curve points.

    U = prod(x - lam_i), V interpolates V(lam_i) = mu_i, W = (R - V^2)/U.
    Conjugate point pairs and repeated abscissae are rejected; every point
    must satisfy mu^2 = R(lambda).
    """
    pts = [CurvePoint(as_fraction(p[0]), as_fraction(p[1])) for p in points]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i].lam == pts[j].lam:
                if pts[i].mu == -pts[j].mu:
                    raise SpecialDivisor(
                        "points %d and %d are conjugate under the "
                        "hyperelliptic involution" % (i, j))
                raise RepeatedAbscissa(
                    "points %d and %d share lambda = %s"
                    % (i, j, pts[i].lam))
    for i, p in enumerate(pts):
        if p.mu * p.mu != R(p.lam):
            raise PointOffCurve(
                "point %d: mu^2 = %s but R(%s) = %s"
                % (i, p.mu * p.mu, p.lam, R(p.lam)))
    U = Polynomial.from_roots(p.lam for p in pts)
    V = _lagrange([(p.lam, p.mu) for p in pts])
    W, rem = divmod(R - V * V, U)
    assert rem.is_zero()
    return JacobiTriple(U, V, W, R)


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root(p: Polynomial):
    """Some rational root of p, or None (rational root theorem)."""
    if p.coeff(0) == 0:
        return Fraction(0)
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(
            denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0:
                    return cand
    return None


def divisor_from_jacobi(j: JacobiTriple):
    """The divisor points (lam_i, V(lam_i)) at the rational roots of U.

    Requires U to split into distinct rational linear factors; otherwise
    the Jacobi triple itself is the faithful representation.
    """
    u = j.U
    roots = []
    while u.degree >= 1:
        r = _rational_root(u)
        if r is None:
            raise IrrationalSupport(
                "U does not split over Q (remaining factor %s)" % u)
        if r in roots:
            raise RepeatedAbscissa("U has the repeated root %s" % r)
        roots.append(r)
        u, rem = u.synthetic_div(r)
        assert rem == 0
    points = []
    for r in sorted(roots):
        mu = j.V(r)
        if mu * mu != j.R(r):
            raise PointOffCurve(
                "V(%s)^2 = %s but R(%s) = %s" % (r, mu * mu, r, j.R(r)))
        points.append(CurvePoint(r, mu))
    return tuple(points)


def alpha_triple_from_jacobi(j: JacobiTriple, beta) -> AlphaTriple:
    """A = U, B = V + beta U, C = -W + 2 beta V + beta^2 U."""
    beta = as_fraction(beta)
    A = j.U
    B = j.V + beta * j.U
    C = -j.W + 2 * beta * j.V + beta * beta * j.U
    return AlphaTriple(A, B, C)


def jacobi_from_alpha_triple(t: AlphaTriple):
    """Inverse map: beta is the degree-g coefficient of B; returns (triple, beta)."""
    g = t.genus
    beta = t.B.coeff(g)
    U = t.A
    V = t.B - beta * t.A
    W = -t.C + 2 * beta * t.B - beta * beta * t.A
    return JacobiTriple(U, V, W, t.discriminant), beta


def pure_beta_candidates(j: JacobiTriple, alpha_n):
    """Rational shifts beta making C vanish at alpha_N (the pure condition).

    Solves U(a) beta^2 + 2 V(a) beta - W(a) = 0 at a = alpha_N.  Requires
    R(alpha_N) != 0; when U(alpha_N) = 0 the quadratic degenerates to the
    single root W(a) / (2 V(a)).  Roots are returned plus-branch first.
    """
    a = as_fraction(alpha_n)
    r = j.R(a)
    if r == 0:
        raise RootOfR("alpha_N = %s is a root of R" % a)
    u, v, w = j.U(a), j.V(a), j.W(a)
    if u == 0:
        # v = 0 too would force r = v^2 + u*w = 0, excluded above.
        return [w / (2 * v)]
    s = rational_sqrt(r)
    if s is None:
        raise IrrationalBeta(
            "R(alpha_N) = %s is not a rational square" % r)
    return [-(v + s) / u, -(v - s) / u]
