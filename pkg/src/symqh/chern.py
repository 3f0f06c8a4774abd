"""Chern-class calculus on the Jacobian and on the loci G^r_d.

Expressions are polynomials in theta and formal Chern roots x_1..x_k of the
dual tautological bundle.  Monomials on G^r_d are pushed to the Jacobian with
the Harris-Tu determinant in c(F - E) = exp(theta) and integrated with
theta^g [Jac] = g!.  This gives an independent route to the degree 1 and
degree 2 invariants that does not go through the closed binomial sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Mapping

from .combinat import binom, inv_factorial
from .ring import Ambient


class ChernExpr:
    """Polynomial in theta and ``nroots`` Chern roots with rational coefficients.

    Keys are ``(theta_exponent, (i_1, ..., i_k))``.  Powers of theta above g
    vanish on the Jacobian and are dropped.
    """

    __slots__ = ("ambient", "nroots", "_terms")

    def __init__(self, ambient: Ambient, nroots: int,
                 terms: Mapping[tuple[int, tuple[int, ...]], object] | None = None):
        clean: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        for (t, roots), c in (terms or {}).items():
            roots = tuple(roots)
            if len(roots) != nroots:
                raise ValueError(f"expected {nroots} root exponents, got {roots}")
            if t > ambient.g:
                continue
            c = clean.get((t, roots), Fraction(0)) + Fraction(c)
            if c:
                clean[(t, roots)] = c
            else:
                clean.pop((t, roots), None)
        self.ambient = ambient
        self.nroots = nroots
        self._terms = clean

    @classmethod
    def constant(cls, amb: Ambient, nroots: int, c=1) -> ChernExpr:
        return cls(amb, nroots, {(0, (0,) * nroots): c})

    def items(self):
        return self._terms.items()

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ChernExpr):
            return NotImplemented
        return (self.ambient, self.nroots, self._terms) == (other.ambient, other.nroots, other._terms)

    def __add__(self, other: ChernExpr) -> ChernExpr:
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return ChernExpr(self.ambient, self.nroots, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChernExpr(self.ambient, self.nroots, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, ChernExpr):
            return NotImplemented
        if other.nroots != self.nroots:
            raise ValueError("root count mismatch")
        out: dict = {}
        for (t1, r1), c1 in self._terms.items():
            for (t2, r2), c2 in other._terms.items():
                key = (t1 + t2, tuple(i + j for i, j in zip(r1, r2)))
                out[key] = out.get(key, 0) + c1 * c2
        return ChernExpr(self.ambient, self.nroots, out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {t + sum(r) for t, r in self._terms}

    def __repr__(self):
        return f"ChernExpr({self.nroots} roots, {self._terms})"


def chern_f_minus_e(alpha: int, amb: Ambient) -> ChernExpr:
    """c_alpha(F - E) = theta^alpha / alpha!, since c(F - E) = exp(theta)."""
    if alpha < 0:
        return ChernExpr(amb, 0)
    return ChernExpr(amb, 0, {(alpha, ()): inv_factorial(alpha)})


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _segre(k: int, nroots: int, amb: Ambient) -> ChernExpr:
    if k < 0:
        return ChernExpr(amb, nroots)
    return ChernExpr(amb, nroots, {(0, c): 1 for c in _compositions(k, nroots)})


def segre_complete(k: int, nroots: int, amb: Ambient | None = None) -> ChernExpr:
    """Complete homogeneous symmetric polynomial h_k(x_1..x_nroots)."""
    # the ambient only matters for theta truncation, which h_k never hits
    return _segre(k, nroots, amb or Ambient(0, 1))


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def ht_monomial_eval(theta_pow: int, root_pows: tuple[int, ...], n_minus_m: int | None,
                     amb: Ambient) -> Fraction:
    """theta^t x_1^i_1 ... x_k^i_k [M_k] via the Harris-Tu determinant.

    Row j, column l of the k x k matrix holds c_{n-m+k+(l-j)+i_j}(F - E).
    ``n_minus_m=None`` means the G^{k-1}_d default g - d - 1.
    """
    k = len(root_pows)
    if k < 1:
        raise ValueError("need at least one Chern root")
    if theta_pow < 0:
        return Fraction(0)
    off = amb.g - amb.d - 1 if n_minus_m is None else n_minus_m
    # every term of the determinant has the same theta degree
    det_degree = sum(off + k + i for i in root_pows)
    if theta_pow + det_degree != amb.g:
        return Fraction(0)
    det = Fraction(0)
    for perm in permutations(range(k)):
        prod = Fraction(1)
        for j in range(k):
            prod *= inv_factorial(off + k + (perm[j] - j) + root_pows[j])
            if not prod:
                break
        if prod:
            det += _perm_sign(perm) * prod
    return det * factorial(amb.g)


def evaluate(expr: ChernExpr, extra_theta: int = 0, n_minus_m: int | None = None) -> Fraction:
    """Integrate ``theta^extra_theta * expr`` over [G^{k-1}_d]."""
    return sum((c * ht_monomial_eval(t + extra_theta, roots, n_minus_m, expr.ambient)
                for (t, roots), c in expr.items()), Fraction(0))


def gamma(p: int, u: int, v: int, w: int, amb: Ambient) -> Fraction:
    """Coefficient of theta^m in c_{g-d+1+p} c_{g-d+u+v+w-2-p}."""
    base = amb.g - amb.d
    return inv_factorial(base + 1 + p) * inv_factorial(base + u + v + w - 2 - p)


def _m(u: int, v: int, w: int, amb: Ambient) -> int:
    return 2 * amb.g - 2 * amb.d - 1 + u + v + w


def gw1_oracle(u: int, v: int, w: int, amb: Ambient) -> Fraction:
    """<et^u, et^v, th^(g-m) et^w>_1 from the untelescoped Segre triple sum."""
    tp = amb.g - _m(u, v, w, amb)
    if tp < 0:
        return Fraction(0)
    integrand = segre_complete(u - 1, 2, amb) * segre_complete(v - 1, 2, amb) * segre_complete(w - 1, 2, amb)
    return evaluate(ChernExpr(amb, 2, integrand.terms), extra_theta=tp)


def virtual_class_m11(amb: Ambient) -> ChernExpr:
    """Push-forward of the virtual class of the double-cover stratum to G^1_d.

    Degree g-1-d part of (1/8) exp(theta) / (1 - (x_1 + x_2)/2).
    """
    top = amb.g - 1 - amb.d
    if top < 0:
        raise ValueError(f"stratum has no excess for d={amb.d} > g-1={amb.g - 1}")
    terms: dict = {}
    for n in range(top + 1):
        for p in range(n + 1):
            c = Fraction(binom(n, p), 8 * 2 ** n) * inv_factorial(top - n)
            terms[(top - n, (p, n - p))] = c
    return ChernExpr(amb, 2, terms)


def gw2_oracle(u: int, v: int, w: int, amb: Ambient) -> Fraction:
    """<et^u, et^v, th^(d+1-m) et^w>_2 on the double-cover stratum."""
    if amb.d > amb.g - 1:
        raise ValueError("degree 2 oracle needs d <= g-1")
    insertion = amb.d + 1 - _m(u, v, w, amb)
    if insertion < 0 or insertion > amb.g:
        return Fraction(0)
    # each insertion pushes forward to 2 s_{k-1}(U), the orbifold factor
    integrand = (segre_complete(u - 1, 2, amb) * segre_complete(v - 1, 2, amb)
                 * segre_complete(w - 1, 2, amb)) * 8
    integrand = ChernExpr(amb, 2, integrand.terms) * virtual_class_m11(amb)
    return evaluate(integrand, extra_theta=insertion)
