"""The subring of H*(Sym^d C; Q) generated by eta and theta.

A class is a rational combination of monomials ``th^a * et^b`` (stored as the
pair ``(a, b)``, cohomological degree ``2(a+b)``).  Monomials with ``a > g`` or
``a + b > d`` are zero and are dropped on construction.  Everything else about
the ring is read off from the intersection numbers

    th^a * et^(d-a) [Sym^d C] = g!/(g-a)!   (0 if a > g)

by quotienting the free span of monomials by the kernel of the pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .combinat import falling_factorial_ratio


@dataclass(frozen=True)
class Ambient:
    """Genus ``g`` curve, ``d``-th symmetric product."""

    g: int
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be non-negative, got {self.g}")
        if self.d < 1:
            raise ValueError(f"d must be at least 1, got {self.d}")

    @property
    def deg_q(self) -> int:
        """Real degree of the Novikov variable, 2 c_1 . line = 2(d-g+1)."""
        return 2 * (self.d - self.g + 1)

    @property
    def q_shift(self) -> int:
        """deg_q / 2: each power of q lowers the eta-theta degree by this much."""
        return self.d - self.g + 1

    def rho(self, r: int) -> int:
        """Brill-Noether number g - (r+1)(g-d+r)."""
        return self.g - (r + 1) * (self.g - self.d + r)


class Monomial(NamedTuple):
    a: int  # theta exponent
    b: int  # eta exponent

    @property
    def degree(self) -> int:
        return self.a + self.b


def _is_zero_monomial(m: Monomial, amb: Ambient) -> bool:
    return m.a > amb.g or m.a + m.b > amb.d


class CohClass:
    """Immutable rational combination of theta/eta monomials.

    ``x * y`` is the (unreduced) cup product, ``x * c`` scales by a rational.
    Equality is structural; use :func:`reduce` or :meth:`is_zero` to compare
    cohomology classes.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: Ambient, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for key, coeff in (terms or {}).items():
            m = Monomial(*key)
            if m.a < 0 or m.b < 0:
                raise ValueError(f"negative exponent in monomial {tuple(m)}")
            if _is_zero_monomial(m, ambient):
                continue
            c = clean.get(m, Fraction(0)) + Fraction(coeff)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.ambient = ambient
        self._terms = clean

    # construction helpers
    @classmethod
    def zero(cls, amb: Ambient) -> CohClass:
        return cls(amb)

    @classmethod
    def one(cls, amb: Ambient) -> CohClass:
        return cls(amb, {(0, 0): 1})

    @classmethod
    def monomial(cls, amb: Ambient, a: int, b: int, coeff=1) -> CohClass:
        return cls(amb, {(a, b): coeff})

    @classmethod
    def eta(cls, amb: Ambient, power: int = 1) -> CohClass:
        return cls(amb, {(0, power): 1})

    @classmethod
    def theta(cls, amb: Ambient, power: int = 1) -> CohClass:
        return cls(amb, {(power, 0): 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[Monomial, Fraction]]:
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    @property
    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def part(self, k: int) -> CohClass:
        return CohClass(self.ambient, {m: c for m, c in self._terms.items() if m.degree == k})

    def is_zero(self) -> bool:
        """True when the class vanishes in cohomology (not just structurally)."""
        return not reduce(self)

    # arithmetic
    def _check(self, other: CohClass) -> None:
        if other.ambient != self.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return CohClass(self.ambient, out)

    def __neg__(self):
        return CohClass(self.ambient, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return cup(self, other)
        if isinstance(other, (int, Fraction)):
            return CohClass(self.ambient, {m: c * other for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def __repr__(self):
        return f"CohClass(g={self.ambient.g}, d={self.ambient.d}, {render(self)})"

    def __str__(self):
        return render(self)


def cup(x: CohClass, y: CohClass) -> CohClass:
    x._check(y)
    out: dict[tuple[int, int], Fraction] = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return CohClass(x.ambient, out)


def eval_top(m: tuple[int, int], amb: Ambient) -> int:
    """Intersection number of a top-degree monomial with [Sym^d C]."""
    a, b = m
    if a + b != amb.d:
        raise ValueError(f"monomial th^{a}*et^{b} is not of top degree {amb.d}")
    return falling_factorial_ratio(amb.g, a)


def integrate(x: CohClass) -> Fraction:
    """Evaluate the top-degree part of ``x`` on the fundamental class."""
    amb = x.ambient
    return sum((c * eval_top(m, amb) for m, c in x.items() if m.degree == amb.d), Fraction(0))


def pair(x: CohClass, y: CohClass) -> Fraction:
    x._check(y)
    kx, ky = x.homogeneous_degree, y.homogeneous_degree
    if x and y and (kx is None or ky is None or kx + ky != x.ambient.d):
        raise ValueError(f"classes of degrees {sorted(x.degrees())} and {sorted(y.degrees())} "
                         f"are not complementary in dimension {x.ambient.d}")
    return integrate(cup(x, y))


def monomials(amb: Ambient, k: int) -> list[Monomial]:
    """Nonzero monomials of degree k, theta exponent ascending."""
    if k < 0 or k > amb.d:
        return []
    return [Monomial(a, k - a) for a in range(min(amb.g, k) + 1)]


class _DegreeData(NamedTuple):
    basis: tuple[Monomial, ...]
    coords: dict[Monomial, dict[Monomial, Fraction]]


@lru_cache(maxsize=None)
def _degree_data(amb: Ambient, k: int) -> _DegreeData:
    # Greedy selection in ascending theta exponent: a monomial joins the basis
    # when its pairing row is independent of the rows already chosen.
    duals = monomials(amb, amb.d - k)
    echelon: list[tuple[int, list[Fraction], dict[Monomial, Fraction]]] = []
    basis: list[Monomial] = []
    coords: dict[Monomial, dict[Monomial, Fraction]] = {}
    for m in monomials(amb, k):
        row = [Fraction(eval_top((m.a + n.a, m.b + n.b), amb)) for n in duals]
        combo: dict[Monomial, Fraction] = {}
        for piv, erow, ecombo in echelon:
            f = row[piv]
            if f:
                row = [r - f * e for r, e in zip(row, erow)]
                for bm, c in ecombo.items():
                    combo[bm] = combo.get(bm, 0) - f * c
        piv = next((i for i, r in enumerate(row) if r), None)
        if piv is None:
            # row = sum of basis rows with coefficients -combo
            coords[m] = {bm: -c for bm, c in combo.items() if c}
            continue
        # residual = row_m + combo . rows_basis; normalize to a unit pivot
        scale = row[piv]
        combo[m] = Fraction(1)
        echelon.append((piv, [r / scale for r in row], {bm: c / scale for bm, c in combo.items()}))
        basis.append(m)
        coords[m] = {m: Fraction(1)}
    return _DegreeData(tuple(basis), coords)


def canonical_basis(amb: Ambient, k: int) -> tuple[Monomial, ...]:
    return _degree_data(amb, k).basis


def dim_invariant_subring(amb: Ambient, k: int) -> int:
    if k < 0 or k > amb.d:
        raise ValueError(f"degree {k} outside 0..{amb.d}")
    return len(_degree_data(amb, k).basis)


def reduce(x: CohClass) -> CohClass:
    """Canonical representative of ``x`` in the greedy monomial basis."""
    out: dict[Monomial, Fraction] = {}
    for m, c in x.items():
        for bm, bc in _degree_data(x.ambient, m.degree).coords[m].items():
            out[bm] = out.get(bm, 0) + c * bc
    return CohClass(x.ambient, out)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(m: Monomial) -> str:
    parts = []
    for name, e in (("th", m.a), ("et", m.b)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_terms(terms: Mapping[Monomial, Fraction]) -> str:
    """Canonical text: degree ascending, theta exponent descending within a degree."""
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=lambda m: (m.degree, -m.a)):
        c = terms[m]
        mono = _fmt_monomial(m)
        mag = abs(c)
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def render(x: CohClass) -> str:
    return render_terms(x._terms)
