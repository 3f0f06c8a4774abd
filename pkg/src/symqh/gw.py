"""Closed-form three-point Gromov-Witten invariants and the regime classifier.

All invariants take the shape <et^u, et^v, th^a et^w>_e where the theta power
``a`` on the third slot is fixed by the dimension constraint

    u + v + w + a = d + e(d - g + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import binom
from .ring import Ambient


class _Unknown:
    """Marker for an invariant or coefficient that is not determined."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "unknown"

    __str__ = __repr__

    def __bool__(self):
        raise TypeError("unknown has no truth value")


UNKNOWN = _Unknown()


def m_index(u: int, v: int, w: int, amb: Ambient) -> int:
    return 2 * amb.g - 2 * amb.d - 1 + u + v + w


def insertion_theta_pow(u: int, v: int, w: int, e: int, amb: Ambient) -> int:
    """Theta power on the third slot satisfying the degree-e dimension constraint."""
    return amb.d + e * amb.q_shift - u - v - w


@lru_cache(maxsize=None)
def gw1(u: int, v: int, w: int, amb: Ambient) -> Fraction:
    """<et^u, et^v, th^(g-m) et^w>_1."""
    g, d = amb.g, amb.d
    m = m_index(u, v, w, amb)
    if m < 0 or g - m < 0:
        return Fraction(0)
    s = sum(binom(m, g - d + i + v) - binom(m, g - d + i) for i in range(u))
    return Fraction(factorial(g) * s, factorial(m))


@lru_cache(maxsize=None)
def gw2(u: int, v: int, w: int, amb: Ambient) -> Fraction:
    """<et^u, et^v, th^(d+1-m) et^w>_2; zero for d > g-1 (empty outer sum)."""
    g, d = amb.g, amb.d
    m = m_index(u, v, w, amb)
    insertion = d + 1 - m
    if insertion < 0 or insertion > g:
        return Fraction(0)
    total = Fraction(0)
    for n in range(g - d):
        if m + n < 0:
            continue
        acc = 0
        for p in range(n + 1):
            acc += binom(n, p) * sum(binom(m + n, g - d + i + v + p) - binom(m + n, g - d + i + p)
                                     for i in range(u))
        total += Fraction(factorial(g) * acc, 2 ** n * factorial(g - 1 - d - n) * factorial(m + n))
    return total


def hyperbola_bound(amb: Ambient) -> Fraction | None:
    """(d-3)/(g-1-d) for d < g-1; None (no bound) otherwise."""
    if amb.d >= amb.g - 1:
        return None
    return Fraction(amb.d - 3, amb.g - 1 - amb.d)


def order_status(e: int, amb: Ambient) -> str:
    """'known', 'zero' or 'unknown' for the q^e coefficients of the product."""
    if e <= 0:
        return "known"
    g, d = amb.g, amb.d
    if d > g - 1:
        return "known" if e == 1 else "zero"
    if d == g - 1:
        return "known"
    if e > hyperbola_bound(amb):
        return "zero"
    return "known" if e <= 2 else "unknown"


def gw_e(u: int, v: int, w: int, e: int, amb: Ambient):
    """<et^u, et^v, th^a et^w>_e with ``a = insertion_theta_pow``; may be UNKNOWN."""
    if e < 1:
        raise ValueError(f"curve degree must be positive, got {e}")
    status = order_status(e, amb)
    if status == "zero":
        return Fraction(0)
    if status == "unknown":
        return UNKNOWN
    if e == 1 or amb.d == amb.g - 1:
        return gw1(u, v, w, amb)
    return gw2(u, v, w, amb)


@dataclass(frozen=True)
class GWQuery:
    ambient: Ambient
    u: int
    v: int
    w: int
    e: int
    third_theta_pow: int

    @classmethod
    def balanced(cls, amb: Ambient, u: int, v: int, w: int, e: int) -> GWQuery:
        return cls(amb, u, v, w, e, insertion_theta_pow(u, v, w, e, amb))

    @property
    def dimension_ok(self) -> bool:
        return self.third_theta_pow == insertion_theta_pow(self.u, self.v, self.w, self.e, self.ambient)

    def evaluate(self):
        """The invariant; zero off the dimension constraint, UNKNOWN in the open window."""
        if self.e < 1:
            raise ValueError(f"curve degree must be positive, got {self.e}")
        if order_status(self.e, self.ambient) == "unknown":
            return UNKNOWN
        if self.third_theta_pow < 0 or not self.dimension_ok:
            return Fraction(0)
        return gw_e(self.u, self.v, self.w, self.e, self.ambient)

    def label(self) -> str:
        third = "*".join(p for p in (f"th^{self.third_theta_pow}" if self.third_theta_pow else "",
                                     f"et^{self.w}" if self.w else "") if p) or "1"
        return f"<et^{self.u}, et^{self.v}, {third}>_{self.e}"


@dataclass(frozen=True)
class RegimeReport:
    ambient: Ambient
    deg_q: int
    hyperbola_bound: Fraction | None
    rho1: int
    rho2: int
    regime: str
    known_orders: str

    def as_dict(self) -> dict:
        hb = self.hyperbola_bound
        return {
            "g": self.ambient.g,
            "d": self.ambient.d,
            "deg_q": self.deg_q,
            "rho_1": self.rho1,
            "rho_2": self.rho2,
            "hyperbola_bound": "inf" if hb is None else str(hb),
            "regime": self.regime,
            "known_orders": self.known_orders,
        }


def regime(amb: Ambient) -> RegimeReport:
    g, d = amb.g, amb.d
    hb = hyperbola_bound(amb)
    if d > g - 1:
        label, orders = "q-linear only", "q^1 known; q^2 and above zero"
    elif d == g - 1:
        label, orders = "d = g-1 series", "all orders known (geometric series q/(1-q))"
    elif hb < 1:
        label, orders = "all classical", "q^1 and above zero"
    elif hb < 2:
        label, orders = "q-linear only", "q^1 known; q^2 and above zero"
    elif hb < 3:
        label, orders = "q and q^2 complete", "q^1, q^2 known; q^3 and above zero"
    else:
        top = hb.numerator // hb.denominator
        label = "unknown tail"
        orders = f"q^1, q^2 known; q^3..q^{top} unknown; q^{top + 1} and above zero"
    return RegimeReport(amb, amb.deg_q, hb, amb.rho(1), amb.rho(2), label, orders)
