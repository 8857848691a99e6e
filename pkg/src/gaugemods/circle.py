"""The rank-two circle modules over the Lie algebra of Laurent vector fields.

The module N(alpha) has basis v_k, u_k (k in ZZ) and carries the action

    e_n . v_k = (k + alpha*n) v_{n+k} + u_{n+k}
    e_n . u_k = (k + alpha*n) u_{n+k} + v_{n+k+1}

of the fields e_n = t^(n+1) d/dt.  The same module arises as a gauge
module on the circle t*s = 1: the defining 2x2 matrix of functions is
stated in the scaling frame t*d/dt, and rewriting that connection in
the d/dt chart frame (B -> s*(B - rho(E_11))) makes the general gauge
action reproduce the formulas above exactly; ``gauge_crosscheck``
verifies this on a grid.

All scalars are exact rationals.  Index support is confined to a
configurable window so that runaway words fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import gauge as gauge_mod
from .glrep import GlModule, identity, mat_scale
from .groebner import LocalizedElement
from .variety import Chart, Variety, circle_variety

Key = tuple[str, int]  # ("v" | "u", index)

DEFAULT_WINDOW = 16


class IndexWindowError(RuntimeError):
    """Raised when an index leaves the configured support window."""


class CircleElement:
    """A finitely supported rational combination of the v_k and u_k."""

    __slots__ = ("alpha", "terms", "window")

    def __init__(self, alpha: Fraction, terms: Mapping[Key, Fraction],
                 window: int = DEFAULT_WINDOW):
        self.alpha = Fraction(alpha)
        self.window = window
        self.terms: dict[Key, Fraction] = {}
        for (sym, k), c in terms.items():
            if sym not in ("v", "u"):
                raise ValueError(f"unknown symbol {sym!r}")
            if abs(k) > window:
                raise IndexWindowError(
                    f"index {k} outside the support window [-{window}, {window}]"
                )
            if c:
                self.terms[(sym, k)] = Fraction(c)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CircleElement") -> "CircleElement":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return CircleElement(self.alpha, out, self.window)

    def __sub__(self, other: "CircleElement") -> "CircleElement":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "CircleElement":
        return CircleElement(self.alpha,
                             {k: c * v for k, v in self.terms.items()}, self.window)

    def _check(self, other: "CircleElement") -> None:
        if self.alpha != other.alpha:
            raise ValueError("elements from modules with different alpha")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircleElement):
            return NotImplemented
        return self.alpha == other.alpha and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def fmt(key: Key) -> str:
            sym, k = key
            c = self.terms[key]
            base = f"{sym}[{k}]"
            return base if c == 1 else f"({c})*{base}"
        ordering = sorted(self.terms, key=lambda key: (key[1], key[0] == "u"))
        return " + ".join(fmt(k) for k in ordering)

    def __repr__(self) -> str:
        return f"CircleElement({self})"


def basis_v(alpha: Fraction | int, k: int, window: int = DEFAULT_WINDOW) -> CircleElement:
    return CircleElement(Fraction(alpha), {("v", k): Fraction(1)}, window)


def basis_u(alpha: Fraction | int, k: int, window: int = DEFAULT_WINDOW) -> CircleElement:
    return CircleElement(Fraction(alpha), {("u", k): Fraction(1)}, window)


def act_e(n: int, x: CircleElement) -> CircleElement:
    """Apply the vector field e_n = t^(n+1) d/dt."""
    alpha = x.alpha
    out: dict[Key, Fraction] = {}

    def add(key: Key, c: Fraction) -> None:
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (sym, k), c in x.terms.items():
        lam = (k + alpha * n) * c
        if sym == "v":
            if lam:
                add(("v", n + k), lam)
            add(("u", n + k), c)
        else:
            if lam:
                add(("u", n + k), lam)
            add(("v", n + k + 1), c)
    return CircleElement(alpha, out, x.window)


class OperatorWord:
    """A formal sum of words in the e_n generators, plus scalars.

    A word is a tuple of generator indices in reading order; the
    rightmost factor is applied first.  The empty word is the scalar 1.
    """

    __slots__ = ("words",)

    def __init__(self, words: Mapping[tuple[int, ...], Fraction]):
        self.words: dict[tuple[int, ...], Fraction] = {
            w: Fraction(c) for w, c in words.items() if c
        }

    @classmethod
    def e(cls, n: int) -> "OperatorWord":
        return cls({(n,): Fraction(1)})

    @classmethod
    def scalar(cls, c: Fraction | int) -> "OperatorWord":
        return cls({(): Fraction(c)})

    def __add__(self, other: "OperatorWord") -> "OperatorWord":
        out = dict(self.words)
        for w, c in other.words.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return OperatorWord(out)

    def __sub__(self, other: "OperatorWord") -> "OperatorWord":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "OperatorWord":
        return OperatorWord({w: c * v for w, v in self.words.items()})

    def __mul__(self, other: "OperatorWord") -> "OperatorWord":
        out: dict[tuple[int, ...], Fraction] = {}
        for wa, ca in self.words.items():
            for wb, cb in other.words.items():
                w = wa + wb
                s = out.get(w, 0) + ca * cb
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return OperatorWord(out)

    def __repr__(self) -> str:
        return f"OperatorWord({self.words})"


def apply_word(w: OperatorWord, x: CircleElement) -> CircleElement:
    """Apply a word sum, rightmost generator first; scalars multiply."""
    total = CircleElement(x.alpha, {}, x.window)
    for word, coeff in w.words.items():
        y = x
        for n in reversed(word):
            y = act_e(n, y)
        total = total + y.scale(coeff)
    return total


# -- distinguished operators ---------------------------------------------------

def sl2_casimir() -> OperatorWord:
    """C = e_0^2 + e_0 - e_{-1} e_1; acts on N(alpha) by alpha*(alpha-1)."""
    e0, e1, em1 = OperatorWord.e(0), OperatorWord.e(1), OperatorWord.e(-1)
    return e0 * e0 + e0 - em1 * e1


def annihilator_s() -> OperatorWord:
    """s = e_{-1} e_0 - 1; annihilates v_0 at alpha = 0."""
    return OperatorWord.e(-1) * OperatorWord.e(0) - OperatorWord.scalar(1)


def annihilator_q(alpha: Fraction | int) -> OperatorWord:
    """q = e_{-1} e_0^2 - (e_0 + 1 - alpha); annihilates v_0 for every alpha."""
    e0, em1 = OperatorWord.e(0), OperatorWord.e(-1)
    return em1 * e0 * e0 - e0 - OperatorWord.scalar(1 - Fraction(alpha))


def operator_p(alpha: Fraction | int) -> OperatorWord:
    """p = e_1 - e_0^2 (e_0 + 1 - alpha).

    Under the implemented action p.v_0 evaluates to 2*(alpha-1)*v_1,
    which is nonzero away from alpha = 1; the value is computed and
    reported rather than asserted to vanish.
    """
    e0, e1 = OperatorWord.e(0), OperatorWord.e(1)
    return e1 - e0 * e0 * (e0 + OperatorWord.scalar(1 - Fraction(alpha)))


def p_value_on_v0(alpha: Fraction | int, window: int = DEFAULT_WINDOW) -> CircleElement:
    """The computed value of p on v_0 (expected: 2*(alpha-1)*v_1)."""
    return apply_word(operator_p(alpha), basis_v(alpha, 0, window))


# -- checks ---------------------------------------------------------------------

def witt_bracket_check(n: int, m: int, x: CircleElement) -> bool:
    """[e_n, e_m] x == (m - n) e_{n+m} x, exactly."""
    lhs = act_e(n, act_e(m, x)) - act_e(m, act_e(n, x))
    rhs = act_e(n + m, x).scale(m - n)
    return lhs == rhs


def casimir_scalar_check(alpha: Fraction | int,
                         ks: Iterable[int] = range(-3, 4),
                         extra: Iterable[CircleElement] = ()) -> gauge_mod.CheckResult:
    """C x == alpha*(alpha-1) x on basis vectors and optional extra samples."""
    alpha = Fraction(alpha)
    gamma = alpha * (alpha - 1)
    C = sl2_casimir()
    samples = [basis_v(alpha, k) for k in ks] + [basis_u(alpha, k) for k in ks]
    samples.extend(extra)
    for x in samples:
        got = apply_word(C, x)
        if got != x.scale(gamma):
            return gauge_mod.CheckResult(
                "casimir_scalar", False,
                f"alpha={alpha}: C({x}) = {got} != {x.scale(gamma)}")
    return gauge_mod.CheckResult("casimir_scalar", True)


@dataclass(frozen=True)
class BasisReport:
    """Extremal-term data for the v_0 orbit family at alpha = 0.

    Orders the basis as ... < u_{-1} < v_0 < u_0 < v_1 < ...; the e_0
    powers are tracked by their highest terms, the e_{-1} powers by
    their lowest terms, and independence is decided by exact rank.
    ``labels_match`` records whether the extremal terms walk upward
    through v_0, u_0, v_1, u_1, ... and downward through u_{-1},
    u_{-2}, ... as expected.
    """

    depth: int
    leading: tuple[str, ...]     # highest terms of v_0, e_0 v_0, ..., e_0^D v_0
    lowest: tuple[str, ...]      # lowest terms of e_{-1} v_0, ..., e_{-1}^D v_0
    labels_match: bool
    independent: bool


def _position(key: Key) -> int:
    sym, k = key
    return 2 * k + (1 if sym == "u" else 0)


def _label(key: Key) -> str:
    return f"{key[0]}[{key[1]}]"


def basis_leading_terms(depth: int, window: int = DEFAULT_WINDOW) -> BasisReport:
    """Extremal terms and exact independence for the alpha = 0 family."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    alpha = Fraction(0)
    vectors: list[CircleElement] = [basis_v(alpha, 0, window)]
    x = vectors[0]
    for _ in range(depth):
        x = act_e(0, x)
        vectors.append(x)
    leading = tuple(_label(max(v.terms, key=_position)) for v in vectors)

    down: list[CircleElement] = []
    x = basis_v(alpha, 0, window)
    for _ in range(depth):
        x = act_e(-1, x)
        down.append(x)
    lowest = tuple(_label(min(v.terms, key=_position)) for v in down)

    expected_leading = tuple(
        _label(("v" if n % 2 == 0 else "u", n // 2)) for n in range(depth + 1))
    expected_lowest = tuple(_label(("u", -n)) for n in range(1, depth + 1))
    labels_match = leading == expected_leading and lowest == expected_lowest

    family = vectors + down
    coords = sorted({key for v in family for key in v.terms})
    col = {key: i for i, key in enumerate(coords)}
    matrix = [[Fraction(0)] * len(coords) for _ in family]
    for r, v in enumerate(family):
        for key, c in v.terms.items():
            matrix[r][col[key]] = c
    independent = _rank(matrix) == len(family)
    return BasisReport(depth, leading, lowest, labels_match, independent)


def _rank(matrix: list[list[Fraction]]) -> int:
    m = [row[:] for row in matrix]
    rank = 0
    for c in range(len(m[0]) if m else 0):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


# -- gauge-module realization ----------------------------------------------------

@dataclass
class CircleGauge:
    """The gauge realization of N(alpha) on the chart with parameter t."""

    variety: Variety
    chart: Chart
    module: GlModule
    space: gauge_mod.GaugeModule
    alpha: Fraction


def _laurent(loc, ring, k: int) -> LocalizedElement:
    """t^k as a localized element: s^{-k} for negative k (t*s = 1)."""
    if k >= 0:
        return loc.element(ring.var("t") ** k)
    return loc.element(ring.var("s") ** (-k))


def circle_gauge(alpha: Fraction | int) -> CircleGauge:
    """Build the circle, its t-parameter chart, U_alpha, and the gauge field.

    The defining matrix [[0, t], [1, 0]] is stated in the scaling frame
    t*d/dt; the d/dt chart frame carries the conjugated connection
    s*(B - rho(E_11)), which is what the general action consumes.
    """
    alpha = Fraction(alpha)
    v = circle_variety()
    chart = next(c for c in v.charts if c.parameters == ("t",))
    loc = chart.localization
    ring = v.ring
    module = GlModule(1, {(1, 1): mat_scale(identity(2), alpha)},
                      name=f"U_{alpha}", basis_labels=("v", "u"))
    s = loc.element(ring.var("s"))
    t = loc.element(ring.var("t"))
    zero = loc.zero()
    scaling_frame = ((zero, t), (loc.one(), zero))
    chart_frame = tuple(
        tuple(s * (scaling_frame[r][c] - loc.element(alpha if r == c else 0))
              for c in range(2))
        for r in range(2)
    )
    field = gauge_mod.GaugeField(chart, (chart_frame,))
    space = gauge_mod.GaugeModule(chart, module, field)
    return CircleGauge(v, chart, module, space, alpha)


def to_gauge_element(cg: CircleGauge, x: CircleElement) -> gauge_mod.GaugeElement:
    """Map sum c * w_k  to  sum c * t^k (x) w in the gauge realization."""
    loc = cg.chart.localization
    ring = cg.variety.ring
    terms: dict[int, LocalizedElement] = {}
    for (sym, k), c in x.terms.items():
        idx = 0 if sym == "v" else 1
        contrib = _laurent(loc, ring, k) * c
        terms[idx] = terms[idx] + contrib if idx in terms else contrib
    return cg.space.element(terms)


def gauge_crosscheck(n: int, k: int, symbol: str, alpha: Fraction | int,
                     cg: CircleGauge | None = None) -> bool:
    """The explicit action equals the gauge action of t^(n+1) d/dt on t^k (x) w."""
    alpha = Fraction(alpha)
    if cg is None:
        cg = circle_gauge(alpha)
    elif cg.alpha != alpha:
        raise ValueError(f"gauge realization was built for alpha={cg.alpha}, not {alpha}")
    start = basis_v(alpha, k) if symbol == "v" else basis_u(alpha, k)
    expected = to_gauge_element(cg, act_e(n, start))
    eta = [_laurent(cg.chart.localization, cg.variety.ring, n + 1)]
    got = cg.space.act(eta, to_gauge_element(cg, start))
    return got == expected
