"""Little quantum product on the eta-theta subring over a truncated Novikov ring.

Everything is reduced to the structure constants eta^u * eta^v.  Products with
theta are classical: theta is a sum of products sigma_i = xi_i xi_{i+g} of odd
classes, and quantum multiplication by a degree-one class is cup product, so
by associativity

    (th^a et^u) * (th^b et^v) = th^(a+b) . (et^u * et^v).

Coefficients of q^e are kept as reduced classes up to a truncation order N.
Orders the closed formulas do not determine are carried in ``unknown`` and
never filled with numbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .combinat import binom, inv_factorial
from .gw import UNKNOWN, order_status
from .ring import Ambient, CohClass, reduce, render


class QSeries:
    """Power series in q with rational coefficients, truncated after q^N."""

    __slots__ = ("N", "coeffs", "unknown_tail")

    def __init__(self, N: int, coeffs: Iterable = (), unknown_tail: bool = False):
        if N < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [Fraction(c) for c in coeffs][: N + 1]
        cs += [Fraction(0)] * (N + 1 - len(cs))
        self.N = N
        self.coeffs = tuple(cs)
        self.unknown_tail = unknown_tail

    @classmethod
    def q(cls, N: int) -> QSeries:
        return cls(N, [0, 1])

    @classmethod
    def geometric(cls, N: int) -> QSeries:
        """q/(1-q) = q + q^2 + ... + q^N."""
        return cls(N, [0] + [1] * N)

    def __getitem__(self, e: int) -> Fraction:
        return self.coeffs[e] if 0 <= e <= self.N else Fraction(0)

    def __add__(self, other: QSeries) -> QSeries:
        N = min(self.N, other.N)
        return QSeries(N, [self[e] + other[e] for e in range(N + 1)],
                       self.unknown_tail or other.unknown_tail)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries(self.N, [c * other for c in self.coeffs], self.unknown_tail)
        if not isinstance(other, QSeries):
            return NotImplemented
        N = min(self.N, other.N)
        out = [sum((self[i] * other[e - i] for i in range(e + 1)), Fraction(0)) for e in range(N + 1)]
        return QSeries(N, out, self.unknown_tail or other.unknown_tail)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.N, self.coeffs, self.unknown_tail) == (other.N, other.coeffs, other.unknown_tail)

    def __repr__(self):
        return f"QSeries(N={self.N}, {list(map(str, self.coeffs))}{', unknown tail' if self.unknown_tail else ''})"


class QClass:
    """Classes c_0 + c_1 q + ... + c_N q^N, each c_e reduced.

    ``unknown`` holds the orders whose coefficient is not determined; the
    stored class at such an order is zero and must not be read as a value.
    """

    __slots__ = ("ambient", "N", "orders", "unknown")

    def __init__(self, ambient: Ambient, N: int, orders: Sequence[CohClass] = (),
                 unknown: Iterable[int] = ()):
        if N < 0:
            raise ValueError("truncation order must be non-negative")
        unk = frozenset(e for e in unknown if 0 <= e <= N)
        cls = []
        for e in range(N + 1):
            c = orders[e] if e < len(orders) else CohClass.zero(ambient)
            if c.ambient != ambient:
                raise ValueError("ambient mismatch")
            cls.append(CohClass.zero(ambient) if e in unk else reduce(c))
        self.ambient = ambient
        self.N = N
        self.orders = tuple(cls)
        self.unknown = unk

    @classmethod
    def constant(cls, x: CohClass, N: int) -> QClass:
        return cls(x.ambient, N, [x])

    @classmethod
    def one(cls, amb: Ambient, N: int) -> QClass:
        return cls(amb, N, [CohClass.one(amb)])

    @classmethod
    def from_series(cls, s: QSeries, x: CohClass) -> QClass:
        """The series s with every coefficient multiplied by x."""
        unk = range(1, s.N + 1) if s.unknown_tail else ()
        return cls(x.ambient, s.N, [x * c for c in s.coeffs], unk)

    @property
    def unknown_tail(self) -> bool:
        return bool(self.unknown)

    def coeff(self, e: int):
        if e in self.unknown:
            return UNKNOWN
        if e > self.N:
            raise IndexError(f"order {e} beyond truncation {self.N}")
        return self.orders[e]

    def truncate(self, N: int) -> QClass:
        return QClass(self.ambient, min(N, self.N), self.orders, self.unknown)

    def _check(self, other: QClass) -> None:
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch")

    def __add__(self, other):
        if isinstance(other, CohClass):
            other = QClass.constant(other, self.N)
        if not isinstance(other, QClass):
            return NotImplemented
        self._check(other)
        N = min(self.N, other.N)
        return QClass(self.ambient, N, [self.orders[e] + other.orders[e] for e in range(N + 1)],
                      self.unknown | other.unknown)

    __radd__ = __add__

    def __neg__(self):
        return QClass(self.ambient, self.N, [-c for c in self.orders], self.unknown)

    def __sub__(self, other):
        if isinstance(other, CohClass):
            other = QClass.constant(other, self.N)
        return self + (-other)

    def __mul__(self, other):
        """Scalars, q-series and classical classes; use :func:`qprod` for quantum products."""
        if isinstance(other, (int, Fraction)):
            return QClass(self.ambient, self.N, [c * other for c in self.orders], self.unknown)
        if isinstance(other, CohClass):
            # classical multiplication, only valid for theta-only factors
            if any(m.b for m, _ in other.items()):
                raise ValueError("only theta factors multiply classically; use qprod")
            return QClass(self.ambient, self.N, [c * other for c in self.orders], self.unknown)
        if isinstance(other, QSeries):
            N = min(self.N, other.N)
            out = []
            for e in range(N + 1):
                acc = CohClass.zero(self.ambient)
                for i in range(e + 1):
                    if other[e - i]:
                        acc = acc + self.orders[i] * other[e - i]
                out.append(acc)
            unk = _product_unknown(N, self.unknown, [bool(c) for c in self.orders],
                                   set(range(1, N + 1)) if other.unknown_tail else set(),
                                   [bool(c) for c in other.coeffs])
            return QClass(self.ambient, N, out, unk)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QClass):
            return NotImplemented
        return (self.ambient, self.N, self.orders, self.unknown) == \
            (other.ambient, other.N, other.orders, other.unknown)

    def agrees_with(self, other: QClass, upto: int | None = None) -> bool:
        """Order-by-order equality on the orders known in both, up to ``upto``."""
        top = min(self.N, other.N) if upto is None else min(self.N, other.N, upto)
        return all(self.orders[e] == other.orders[e] for e in range(top + 1)
                   if e not in self.unknown and e not in other.unknown)

    def render(self) -> str:
        return render_qclass(self)

    def __repr__(self):
        return f"QClass(g={self.ambient.g}, d={self.ambient.d}, N={self.N}, {self.render()})"

    __str__ = render


def render_qclass(x: QClass) -> str:
    chunks: list[str] = []
    for e in range(x.N + 1):
        qs = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if e in x.unknown:
            chunks.append(f"{qs}*(unknown)")
            continue
        c = x.orders[e]
        if not c:
            continue
        body = render(c)
        if e == 0:
            chunks.append(body)
            continue
        items = list(c.items())
        if len(items) == 1:
            (m, coeff), = items
            sign = "-" if coeff < 0 else ""
            factors = [] if abs(coeff) == 1 else [str(abs(coeff))]
            factors.append(qs)
            mono = render(CohClass.monomial(x.ambient, m.a, m.b))
            if mono != "1":
                factors.append(mono)
            chunks.append(sign + "*".join(factors))
        else:
            chunks.append(f"{qs}*({body})")
    if not chunks:
        return "0"
    text = chunks[0]
    for ch in chunks[1:]:
        text += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
    return text


def _product_unknown(N, unk_x, nonzero_x, unk_y, nonzero_y) -> set[int]:
    out = set()
    for i in range(N + 1):
        for j in range(N + 1 - i):
            x_live = i in unk_x or (i < len(nonzero_x) and nonzero_x[i])
            y_live = j in unk_y or (j < len(nonzero_y) and nonzero_y[j])
            if (i in unk_x and y_live) or (j in unk_y and x_live):
                out.add(i + j)
    return out


def _th_et(amb: Ambient, a: int, b: int, coeff) -> CohClass:
    if a < 0 or b < 0 or not coeff:
        return CohClass.zero(amb)
    return CohClass.monomial(amb, a, b, coeff)


def q1_coefficient(u: int, v: int, amb: Ambient) -> CohClass:
    """Coefficient of q in et^u * et^v from the degree 1 invariants (unreduced)."""
    g, d = amb.g, amb.d
    out = CohClass.zero(amb)
    for i in range(u):
        out += _th_et(amb, g - d + i + v, u - 1 - i, inv_factorial(g - d + i + v))
        out -= _th_et(amb, g - d + i, u + v - 1 - i, inv_factorial(g - d + i))
    return out


def q2_coefficient(u: int, v: int, amb: Ambient) -> CohClass:
    """Coefficient of q^2 in et^u * et^v for d < g-1 (unreduced).

    This is the class dual to the degree 2 invariants; its theta exponent is
    2g-2d-1-n+i+v+p (eta exponent u+n-i-p-1), which is what the pairing with
    th^(d+1-m) et^w forces.
    """
    g, d = amb.g, amb.d
    out = CohClass.zero(amb)
    for n in range(g - d):
        for p in range(n + 1):
            w = Fraction(binom(n, p), 2 ** n) * inv_factorial(g - 1 - d - n)
            for i in range(u):
                a1 = 2 * g - 2 * d - 1 - n + i + v + p
                out += _th_et(amb, a1, u + n - i - p - 1, w * inv_factorial(g - d + i + v + p))
                a2 = 2 * g - 2 * d - 1 - n + i + p
                out -= _th_et(amb, a2, u + v + n - i - p - 1, w * inv_factorial(g - d + i + p))
    return out


def series_coefficient(u: int, v: int, amb: Ambient) -> CohClass:
    """The class multiplying q/(1-q) in et^u * et^v when d = g-1."""
    out = CohClass.zero(amb)
    for i in range(1, u + 1):
        out += _th_et(amb, i + v, u - i, inv_factorial(i + v))
        out -= _th_et(amb, i, u + v - i, inv_factorial(i))
    return out


@lru_cache(maxsize=None)
def qprod_eta(u: int, v: int, amb: Ambient, N: int) -> QClass:
    """et^u * et^v up to q^N."""
    if u < 0 or v < 0:
        raise ValueError("exponents must be non-negative")
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    if u > amb.d or v > amb.d:
        return QClass(amb, N)
    g, d = amb.g, amb.d
    classical = CohClass.eta(amb, u + v)
    if d == g - 1:
        return QClass.constant(classical, N) + QClass.from_series(QSeries.geometric(N), series_coefficient(u, v, amb))
    orders = [classical]
    unknown = []
    for e in range(1, N + 1):
        status = order_status(e, amb)
        if status == "unknown":
            unknown.append(e)
            orders.append(CohClass.zero(amb))
        elif status == "zero":
            orders.append(CohClass.zero(amb))
        elif e == 1:
            orders.append(q1_coefficient(u, v, amb))
        else:
            orders.append(q2_coefficient(u, v, amb))
    return QClass(amb, N, orders, unknown)


def _as_qclass(x, N: int | None) -> QClass:
    if isinstance(x, QClass):
        return x if N is None else x.truncate(N)
    if N is None:
        raise ValueError("truncation order required for classical inputs")
    return QClass.constant(x, N)


def qprod(x, y, N: int | None = None) -> QClass:
    """Quantum product of classes or truncated quantum classes."""
    if isinstance(x, CohClass) and isinstance(y, CohClass):
        x._check(y)
        if N is None:
            raise ValueError("truncation order required")
        return _qprod_classical(x, y, N)
    if N is None:
        N = min(z.N for z in (x, y) if isinstance(z, QClass))
    X, Y = _as_qclass(x, N), _as_qclass(y, N)
    X._check(Y)
    top = min(X.N, Y.N)
    amb = X.ambient
    orders = [CohClass.zero(amb) for _ in range(top + 1)]
    unknown = _product_unknown(top, X.unknown, [bool(c) for c in X.orders],
                               Y.unknown, [bool(c) for c in Y.orders])
    for i in range(top + 1):
        if not X.orders[i]:
            continue
        for j in range(top + 1 - i):
            if not Y.orders[j]:
                continue
            part = _qprod_classical(X.orders[i], Y.orders[j], top - i - j)
            for e in range(top - i - j + 1):
                orders[i + j + e] = orders[i + j + e] + part.orders[e]
            unknown |= {i + j + e for e in part.unknown}
    return QClass(amb, top, orders, unknown)


def _qprod_classical(x: CohClass, y: CohClass, N: int) -> QClass:
    amb = x.ambient
    orders = [CohClass.zero(amb) for _ in range(N + 1)]
    unknown: set[int] = set()
    for (a, u), cx in x.items():
        for (b, v), cy in y.items():
            base = qprod_eta(u, v, amb, N)
            th = CohClass.theta(amb, a + b) * (cx * cy)
            for e in range(N + 1):
                if base.orders[e]:
                    orders[e] = orders[e] + base.orders[e] * th
            unknown |= base.unknown
    return QClass(amb, N, orders, unknown)


def qpow(x, n: int, N: int | None = None) -> QClass:
    """Quantum power, folded from the left starting at the unit."""
    if n < 0:
        raise ValueError("power must be non-negative")
    X = _as_qclass(x, N)
    out = QClass.one(X.ambient, X.N)
    for _ in range(n):
        out = qprod(out, X)
    return out
