"""Ideals, Buchberger's algorithm, quotient-ring normal forms, and
arithmetic in the localization A_(h).

The reduced Groebner basis (minimal, monic, tail-reduced, sorted by
decreasing leading term) is canonical for a fixed ideal and order, so
quotient-ring equality is decided by comparing normal forms.

Localized elements are kept lazy: a pair (numerator in A, power of h)
is never cancelled, and equality is decided by cross-multiplication in
A.  This is sound whenever h is not a zero divisor, which holds for the
irreducible varieties this package targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .polyring import (
    Exponents,
    MonomialOrder,
    Polynomial,
    PolyRing,
    grevlex,
    leading_term,
    render,
)


@dataclass(frozen=True)
class Ideal:
    """An ideal of a polynomial ring, given by nonzero generators."""

    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("an Ideal needs at least one generator")
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                raise ValueError("zero generator")


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: Polynomial, key: Callable[[Exponents], tuple]) -> Polynomial:
    lead = max(p.terms, key=key)
    c = p.terms[lead]
    return p if c == 1 else p * (1 / c)


def _reduce(p: Polynomial, basis: Sequence[Polynomial],
            leads: Sequence[tuple[Exponents, Fraction]],
            key: Callable[[Exponents], tuple]) -> Polynomial:
    """Remainder of multivariate division of p by the basis."""
    ring = p.ring
    work = dict(p.terms)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for g, (ge, gc) in zip(basis, leads):
            if _divides(ge, e):
                # subtract (c/gc) * x^(e-ge) * g from the working tail
                shift = _exp_sub(e, ge)
                factor = c / gc
                for me, mc in g.terms.items():
                    if me == ge:
                        continue
                    te = tuple(x + y for x, y in zip(me, shift))
                    s = work.get(te, 0) - factor * mc
                    if s:
                        work[te] = s
                    else:
                        work.pop(te, None)
                break
        else:
            remainder[e] = c
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: the leading terms are lifted to their lcm and cancelled."""
    key = order.key(f.ring)
    fe, fc = leading_term(f, order)
    ge, gc = leading_term(g, order)
    lcm = _exp_lcm(fe, ge)
    mf = f.ring.monomial(_exp_sub(lcm, fe), 1 / fc)
    mg = f.ring.monomial(_exp_sub(lcm, ge), 1 / gc)
    return mf * f - mg * g


class GroebnerBasis:
    """A reduced Groebner basis together with its order.

    Use :func:`buchberger` to compute one.  An empty basis (for the zero
    ideal, as used by affine-space varieties) is permitted and makes
    :meth:`reduce` the identity.
    """

    def __init__(self, ring: PolyRing, order: MonomialOrder,
                 basis: Sequence[Polynomial],
                 generators: Sequence[Polynomial] = ()):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)
        self.generators = tuple(generators)
        self._key = order.key(ring)
        self._leads = tuple((max(g.terms, key=self._key),
                             g.terms[max(g.terms, key=self._key)])
                            for g in self.basis)

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not self.basis or p.is_zero():
            return p
        return _reduce(p, self.basis, self._leads, self._key)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero()

    def spolys_reduce_to_zero(self) -> bool:
        """Self-check: every pairwise S-polynomial reduces to zero."""
        for f, g in itertools.combinations(self.basis, 2):
            if not self.reduce(s_polynomial(f, g, self.order)).is_zero():
                return False
        return True

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(render(g, self.order) for g in self.basis)}])"


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Compute the reduced Groebner basis of an ideal.

    Deterministic for a fixed input and order: generators are sorted by
    leading term first, and critical pairs are processed smallest lcm
    first.  Pairs with coprime leading terms are skipped (Buchberger's
    first criterion).
    """
    ring = ideal.ring
    order = order or grevlex(ring)
    key = order.key(ring)

    basis = [_monic(g, key) for g in ideal.generators]
    basis.sort(key=lambda g: key(max(g.terms, key=key)))
    leads = [max(g.terms, key=key) for g in basis]

    def pair_key(pair: tuple[int, int]) -> tuple:
        i, j = pair
        return key(_exp_lcm(leads[i], leads[j])) + (i, j)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        li, lj = leads[i], leads[j]
        if _exp_lcm(li, lj) == tuple(a + b for a, b in zip(li, lj)):
            continue  # coprime leading terms: S-poly reduces to zero
        s = s_polynomial(basis[i], basis[j], order)
        lead_info = [(e, basis[k].terms[e]) for k, e in enumerate(leads)]
        r = _reduce(s, basis, lead_info, key)
        if not r.is_zero():
            r = _monic(r, key)
            basis.append(r)
            leads.append(max(r.terms, key=key))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    return GroebnerBasis(ring, order, _reduce_basis(basis, key), ideal.generators)


def _reduce_basis(basis: list[Polynomial], key) -> list[Polynomial]:
    """Minimalize and tail-reduce, producing the canonical reduced basis."""
    leads = [max(g.terms, key=key) for g in basis]
    keep = []
    for i, e in enumerate(leads):
        if any(j != i and _divides(leads[j], e) and
               (leads[j] != e or j < i) for j in range(len(basis))):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced: list[Polynomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if others:
            infos = [(max(o.terms, key=key), o.terms[max(o.terms, key=key)]) for o in others]
            g = _reduce(g, others, infos, key)
        if not g.is_zero():
            reduced.append(_monic(g, key))
    reduced.sort(key=lambda g: key(max(g.terms, key=key)), reverse=True)
    return reduced


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of p modulo the basis; zero iff p lies in the ideal."""
    return gb.reduce(p)


def is_member(p: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    return buchberger(ideal, order).contains(p)


def is_unit_ideal(ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    return buchberger(ideal, order).is_unit()


class QuotientRing:
    """The quotient A = QQ[x]/I presented by a reduced Groebner basis."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.ring = gb.ring

    def element(self, p: Polynomial) -> "QuotientElement":
        return QuotientElement(self, self.gb.reduce(p))

    def zero(self) -> "QuotientElement":
        return QuotientElement(self, self.ring.zero())

    def one(self) -> "QuotientElement":
        return self.element(self.ring.one())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.ring == other.ring and self.gb.basis == other.gb.basis

    def __hash__(self) -> int:
        return hash((self.ring.variables, self.gb.basis))


class QuotientElement:
    """A normal-form representative in A; equality is representative equality."""

    __slots__ = ("qring", "rep")

    def __init__(self, qring: QuotientRing, rep: Polynomial):
        self.qring = qring
        self.rep = rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _coerce(self, other) -> "QuotientElement":
        if isinstance(other, QuotientElement):
            if other.qring != self.qring:
                raise ValueError("elements of different quotient rings")
            return other
        if isinstance(other, Polynomial):
            return self.qring.element(other)
        return self.qring.element(self.qring.ring.const(other))

    def __add__(self, other) -> "QuotientElement":
        other = self._coerce(other)
        # a sum of normal forms is a normal form: no new monomials appear
        return QuotientElement(self.qring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(self.qring, -self.rep)

    def __sub__(self, other) -> "QuotientElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "QuotientElement":
        if isinstance(other, (int, Fraction)):
            return QuotientElement(self.qring, self.rep * other)
        other = self._coerce(other)
        return self.qring.element(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuotientElement":
        out = self.qring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QuotientElement, Polynomial, int, Fraction)):
            return NotImplemented
        return self.rep == self._coerce(other).rep

    def __hash__(self) -> int:
        return hash(self.rep)

    def __str__(self) -> str:
        return render(self.rep, self.qring.gb.order)

    def __repr__(self) -> str:
        return f"QuotientElement({self})"


class Localization:
    """The localization A_(h): fractions with denominators powers of h."""

    def __init__(self, qring: QuotientRing, h: QuotientElement, name: str | None = None):
        if h.qring != qring:
            raise ValueError("h belongs to a different quotient ring")
        if h.is_zero():
            raise ValueError("cannot localize at zero")
        self.qring = qring
        self.h = h
        self.name = name or str(h)
        self._hpow: dict[int, QuotientElement] = {0: qring.one(), 1: h}

    def hpow(self, k: int) -> QuotientElement:
        cached = self._hpow.get(k)
        if cached is None:
            cached = self.hpow(k - 1) * self.h
            self._hpow[k] = cached
        return cached

    def element(self, numerator, hpower: int = 0) -> "LocalizedElement":
        if hpower < 0:
            raise ValueError("hpower must be non-negative")
        if isinstance(numerator, LocalizedElement):
            if numerator.loc is not self and numerator.loc != self:
                raise ValueError("element of a different localization")
            return LocalizedElement(self, numerator.num, numerator.hpower + hpower)
        if isinstance(numerator, QuotientElement):
            num = numerator
        elif isinstance(numerator, Polynomial):
            num = self.qring.element(numerator)
        else:
            num = self.qring.element(self.qring.ring.const(numerator))
        return LocalizedElement(self, num, hpower)

    def zero(self) -> "LocalizedElement":
        return self.element(0)

    def one(self) -> "LocalizedElement":
        return self.element(1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Localization):
            return NotImplemented
        return self.qring == other.qring and self.h == other.h

    def __hash__(self) -> int:
        return hash((self.qring, self.h))


class LocalizedElement:
    """A lazy fraction a / h^p with a in A.

    Equality is cross-multiplication in A: (a, p) == (b, q) iff
    h^q * a == h^p * b.  No cancellation is ever attempted.
    """

    __slots__ = ("loc", "num", "hpower")

    def __init__(self, loc: Localization, num: QuotientElement, hpower: int):
        self.loc = loc
        self.num = num
        self.hpower = hpower if not num.is_zero() else 0

    def is_zero(self) -> bool:
        # valid because h is not a zero divisor in A
        return self.num.is_zero()

    def _check(self, other: "LocalizedElement") -> None:
        if self.loc != other.loc:
            raise ValueError("localized elements with different denominators h")

    def __add__(self, other) -> "LocalizedElement":
        other = self._coerce(other)
        self._check(other)
        p, q = self.hpower, other.hpower
        m = max(p, q)
        num = self.num * self.loc.hpow(m - p) + other.num * self.loc.hpow(m - q)
        return LocalizedElement(self.loc, num, m)

    __radd__ = __add__

    def __neg__(self) -> "LocalizedElement":
        return LocalizedElement(self.loc, -self.num, self.hpower)

    def __sub__(self, other) -> "LocalizedElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "LocalizedElement":
        if isinstance(other, (int, Fraction)):
            return LocalizedElement(self.loc, self.num * other, self.hpower)
        other = self._coerce(other)
        self._check(other)
        return LocalizedElement(self.loc, self.num * other.num, self.hpower + other.hpower)

    __rmul__ = __mul__

    def _coerce(self, other) -> "LocalizedElement":
        if isinstance(other, LocalizedElement):
            return other
        return self.loc.element(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial, QuotientElement)):
            other = self.loc.element(other)
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        self._check(other)
        lhs = self.num * other.loc.hpow(other.hpower)
        rhs = other.num * self.loc.hpow(self.hpower)
        return lhs == rhs

    def __hash__(self) -> int:
        raise TypeError("LocalizedElement is unhashable (equality is up to h-powers)")

    def __str__(self) -> str:
        if self.hpower == 0:
            return str(self.num)
        suffix = f"^{self.hpower}" if self.hpower > 1 else ""
        return f"({self.num})/{self.loc.name}{suffix}"

    def __repr__(self) -> str:
        return f"LocalizedElement({self})"


def loc_arith(a: LocalizedElement, b: LocalizedElement, op: str) -> LocalizedElement:
    """Localized arithmetic by operator name: '+' or '*'."""
    if op == "+":
        return a + b
    if op == "*":
        return a * b
    raise ValueError(f"unsupported operator {op!r}")


@dataclass(frozen=True)
class TauDerivation:
    """The derivation d/dx_i + sum_j f_ij d/dx_j of A_(h).

    ``var`` is the distinguished chart parameter; ``corrections`` maps
    the dependent variable names to their localized coefficients f_ij.
    """

    loc: Localization
    var: str
    corrections: Mapping[str, LocalizedElement]

    def apply_poly(self, p: Polynomial) -> LocalizedElement:
        out = self.loc.element(p.partial(self.var))
        for name, coeff in self.corrections.items():
            dp = p.partial(name)
            if not dp.is_zero():
                out = out + coeff * self.loc.element(dp)
        return out

    def __call__(self, a: "LocalizedElement | QuotientElement | Polynomial") -> LocalizedElement:
        return loc_partial(self.loc.element(a) if not isinstance(a, LocalizedElement) else a, self)


def loc_partial(a: LocalizedElement, tau: TauDerivation) -> LocalizedElement:
    """Apply a tau derivation to a localized element by the quotient rule.

    For a = n / h^p:  tau(a) = tau(n)/h^p - p * n * tau(h) / h^(p+1).
    """
    loc = a.loc
    d_num = tau.apply_poly(a.num.rep)
    out = LocalizedElement(loc, d_num.num, d_num.hpower + a.hpower)
    if a.hpower:
        d_h = tau.apply_poly(loc.h.rep)
        correction = LocalizedElement(
            loc, a.num * d_h.num * Fraction(-a.hpower), a.hpower + 1 + d_h.hpower
        )
        out = out + correction
    return out
