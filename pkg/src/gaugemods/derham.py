"""The de Rham complex of a chart with scalar gauge fields.

Degree-k elements are sums of localized coefficients against basis
wedges indexed by increasing subsets of the chart parameters.  The
differential

    d(g (x) v) = sum_p (tau_p(g) + B_p g) (x) e_p ^ v

raises degree by one; with symmetric-partial gauge fields the maps
square to zero and commute with the vector-field action (but not with
multiplication by functions, and an explicit witness to that is
provided).  The top-degree image obstruction is certified by exact
linear algebra up to a stated polynomial degree bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .gauge import CheckResult
from .groebner import LocalizedElement
from .polyring import Polynomial, PolyRing
from .variety import Chart

Subset = tuple[int, ...]


class FormElement:
    """A degree-k element: finitely many wedge terms with localized coefficients."""

    __slots__ = ("chart", "degree", "terms")

    def __init__(self, chart: Chart, degree: int,
                 terms: Mapping[Subset, LocalizedElement]):
        n = len(chart.parameters)
        if not 0 <= degree <= n:
            raise ValueError(f"degree {degree} out of range for {n} parameters")
        self.chart = chart
        self.degree = degree
        self.terms: dict[Subset, LocalizedElement] = {}
        for subset, coeff in terms.items():
            if len(subset) != degree or list(subset) != sorted(set(subset)):
                raise ValueError(f"wedge index {subset} is not an increasing {degree}-subset")
            if any(not 0 <= i < n for i in subset):
                raise ValueError(f"wedge index {subset} out of range")
            if not coeff.is_zero():
                self.terms[subset] = coeff

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormElement") -> "FormElement":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return FormElement(self.chart, self.degree, out)

    def __sub__(self, other: "FormElement") -> "FormElement":
        return self + other.scale(Fraction(-1))

    def scale(self, c: "LocalizedElement | Fraction | int") -> "FormElement":
        return FormElement(self.chart, self.degree,
                           {s: v * c for s, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormElement):
            return NotImplemented
        if self.degree != other.degree:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = self.chart.localization.zero()
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def render(self) -> str:
        if not self.terms:
            return "0"
        def label(s: Subset) -> str:
            return "1" if not s else "e(" + ",".join(str(i + 1) for i in s) + ")"
        return " + ".join(f"({self.terms[s]})*{label(s)}" for s in sorted(self.terms))

    def __repr__(self) -> str:
        return f"FormElement(deg {self.degree}: {self.render()})"


def wedge_prepend(p: int, subset: Subset) -> tuple[int, Subset] | None:
    """e_p ^ e_subset: None if p repeats, else (sign, merged increasing subset)."""
    if p in subset:
        return None
    smaller = sum(1 for x in subset if x < p)
    merged = tuple(sorted(subset + (p,)))
    return (-1) ** smaller, merged


def exterior_action(p: int, i: int, subset: Subset) -> tuple[int, Subset] | None:
    """E_pi on a basis wedge: replace one factor e_i by e_p, normalized.

    Returns (sign, subset) or None when the result vanishes.  Computed
    combinatorially, independent of the matrix realization used by the
    gauge machinery.
    """
    if i not in subset:
        return None
    if p == i:
        return 1, subset
    if p in subset:
        return None
    pos = subset.index(i)
    rest = subset[:pos] + subset[pos + 1:]
    smaller = sum(1 for x in rest if x < p)
    sign = (-1) ** (pos - smaller)
    return sign, tuple(sorted(rest + (p,)))


def act_form(B: Sequence[LocalizedElement], eta: Sequence[LocalizedElement],
             x: FormElement) -> FormElement:
    """The vector-field action on A_(h) (x) Lambda^k V with scalar gauge fields."""
    chart = x.chart
    frame = chart.frame
    params = chart.parameters
    out: dict[Subset, LocalizedElement] = {}

    def accumulate(s: Subset, v: LocalizedElement) -> None:
        out[s] = out[s] + v if s in out else v

    tau_eta = [[frame.derive(p, fi) for p in params] for fi in eta]
    for subset, g in x.terms.items():
        for i, fi in enumerate(eta):
            if not fi.is_zero():
                dg = frame.derive(params[i], g)
                total = fi * dg + B[i] * fi * g
                if not total.is_zero():
                    accumulate(subset, total)
            for p in range(len(params)):
                df = tau_eta[i][p]
                if df.is_zero():
                    continue
                hit = exterior_action(p, i, subset)
                if hit is None:
                    continue
                sign, target = hit
                accumulate(target, g * df * sign)
    return FormElement(chart, x.degree, out)


def d(B: Sequence[LocalizedElement], x: FormElement) -> FormElement:
    """The degree-raising differential d(g (x) v) = sum (tau_p g + B_p g) (x) e_p ^ v."""
    chart = x.chart
    n = len(chart.parameters)
    if x.degree >= n:
        raise ValueError(f"no differential out of top degree {n}")
    frame = chart.frame
    out: dict[Subset, LocalizedElement] = {}
    for subset, g in x.terms.items():
        for p in range(n):
            coeff = frame.derive(chart.parameters[p], g) + B[p] * g
            if coeff.is_zero():
                continue
            hit = wedge_prepend(p, subset)
            if hit is None:
                continue
            sign, merged = hit
            add = coeff * sign
            out[merged] = out[merged] + add if merged in out else add
    return FormElement(chart, x.degree + 1, out)


def check_complex(B: Sequence[LocalizedElement], x: FormElement) -> CheckResult:
    """d(d(x)) == 0, exactly."""
    ddx = d(B, d(B, x))
    ok = ddx.is_zero()
    return CheckResult("complex", ok, "" if ok else f"d(d(x)) = {ddx.render()}")


def check_morphism(B: Sequence[LocalizedElement], eta: Sequence[LocalizedElement],
                   x: FormElement) -> CheckResult:
    """d(eta.x) == eta.d(x), exactly."""
    lhs = d(B, act_form(B, eta, x))
    rhs = act_form(B, eta, d(B, x))
    ok = lhs == rhs
    witness = "" if ok else f"d(eta.x)={lhs.render()} eta.d(x)={rhs.render()}"
    return CheckResult("morphism", ok, witness)


def witness_not_a_morphism(chart: Chart, B: Sequence[LocalizedElement]) -> tuple:
    """A concrete (f, x) with d(f.x) != f.d(x): multiplication does not commute with d."""
    if not chart.parameters:
        raise ValueError("need at least one chart parameter")
    loc = chart.localization
    f = loc.element(chart.variety.ring.var(chart.parameters[0]))
    x = FormElement(chart, 0, {(): loc.one()})
    lhs = d(B, x.scale(f))
    rhs = d(B, x).scale(f)
    if lhs == rhs:
        raise AssertionError("expected the A-action to fail commuting with d")
    return f, x, lhs, rhs


@dataclass(frozen=True)
class ObstructionResult:
    """Verdict of the degree-bounded top-form membership certificate.

    ``status`` is FEASIBLE (with an explicit witness, re-verified by
    substitution) or INFEASIBLE_UP_TO_D; the verdict never claims more
    than the stated total-degree bound.
    """

    status: str
    N: int
    max_degree: int
    scale: Fraction
    solution: tuple[Polynomial, ...] | None

    @property
    def feasible(self) -> bool:
        return self.status == "FEASIBLE"


def gaussian_obstruction(N: int, D: int, scale: Fraction | int = Fraction(-2)) -> ObstructionResult:
    """Decide whether sum_i (df_i/dx_i + scale * x_i * f_i) = 1 has a
    polynomial solution with deg f_i <= D, by exact linear elimination.

    scale = -2 is the Gaussian-weight top-form obstruction; scale = 0 is
    the control problem solved by divergence (f_1 = x_1).
    """
    if N < 1 or D < 0:
        raise ValueError("need N >= 1 and D >= 0")
    scale = Fraction(scale)
    ring = PolyRing(tuple(f"x{i + 1}" for i in range(N)), max(D + 2, 4))

    monomials = [e for deg in range(D + 1)
                 for e in _exponents_of_degree(N, deg)]
    unknowns = [(i, e) for i in range(N) for e in monomials]
    col = {u: c for c, u in enumerate(unknowns)}

    rows: dict[tuple[int, ...], list[Fraction]] = {}

    def row_of(e: tuple[int, ...]) -> list[Fraction]:
        if e not in rows:
            rows[e] = [Fraction(0)] * len(unknowns)
        return rows[e]

    for i in range(N):
        for e in monomials:
            c = col[(i, e)]
            # d/dx_i of x^e
            if e[i] > 0:
                de = e[:i] + (e[i] - 1,) + e[i + 1:]
                row_of(de)[c] += e[i]
            # scale * x_i * x^e
            if scale:
                se = e[:i] + (e[i] + 1,) + e[i + 1:]
                row_of(se)[c] += scale

    target = {(0,) * N: Fraction(1)}
    eqs = sorted(rows)
    matrix = [rows[e] for e in eqs]
    rhs = [target.get(e, Fraction(0)) for e in eqs]
    solution = _solve_exact(matrix, rhs)
    if solution is None:
        return ObstructionResult("INFEASIBLE_UP_TO_D", N, D, scale, None)

    polys = []
    for i in range(N):
        terms = {e: solution[col[(i, e)]] for e in monomials if solution[col[(i, e)]]}
        polys.append(Polynomial(ring, terms))
    total = ring.zero()
    for i, f in enumerate(polys):
        total = total + f.partial(ring.variables[i]) + scale * ring.var(ring.variables[i]) * f
    if total != ring.one():
        raise AssertionError("solver returned a candidate that fails substitution")
    return ObstructionResult("FEASIBLE", N, D, scale, tuple(polys))


def _exponents_of_degree(n: int, deg: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(deg,)]
    out = []
    for first in range(deg + 1):
        for rest in _exponents_of_degree(n - 1, deg - first):
            out.append((first,) + rest)
    return out


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gaussian elimination over QQ; None if the system is inconsistent."""
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    nrows = len(m)
    ncols = len(matrix[0]) if matrix else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row, c in pivots:
        solution[c] = m[row][ncols]
    return solution
