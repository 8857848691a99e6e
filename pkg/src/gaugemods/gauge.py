"""Gauge fields and the gauge-module action of vector fields.

A configured gauge module is the space A_(h) (x) U for a chart N(h) and
a gl_N module U, together with gauge fields B_1..B_N (matrices over
A_(h), scalars in the rank-one case).  A chart derivation with
coefficients (f_1..f_N) acts on g (x) u by

    sum_i [ f_i tau_i(g) (x) u  +  f_i g (x) B_i u
            + sum_p g tau_p(f_i) (x) rho(E_pi) u ].

The three gauge-field axioms (linearity over A_(h); commutation with
the gl_N action; flatness of the connection tau_i + B_i) are verified
entrywise and reported with witnesses.  A closed 1-form twists the
action by an additive scalar term without disturbing either the Lie
property or the compatibility with multiplication by functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .glrep import GlModule
from .groebner import LocalizedElement
from .variety import Chart

LocMatrix = tuple[tuple[LocalizedElement, ...], ...]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact check, with a rendered witness on failure."""

    name: str
    ok: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok


class GaugeField:
    """Gauge fields for one chart: a matrix of localized functions per parameter."""

    def __init__(self, chart: Chart, matrices: Sequence[Sequence[Sequence[LocalizedElement]]]):
        self.chart = chart
        if len(matrices) != len(chart.parameters):
            raise ValueError("one matrix per chart parameter is required")
        self.matrices: tuple[LocMatrix, ...] = tuple(
            tuple(tuple(row) for row in m) for m in matrices
        )
        dims = {len(m) for m in self.matrices}
        if len(dims) != 1:
            raise ValueError("gauge matrices of unequal size")
        self.dim = dims.pop()
        for m in self.matrices:
            if any(len(row) != self.dim for row in m):
                raise ValueError("gauge matrices must be square")

    @classmethod
    def zero(cls, chart: Chart, dim: int) -> "GaugeField":
        z = chart.localization.zero()
        m = tuple(tuple(z for _ in range(dim)) for _ in range(dim))
        return cls(chart, tuple(m for _ in chart.parameters))

    @classmethod
    def scalar(cls, chart: Chart, values: Sequence[LocalizedElement], dim: int) -> "GaugeField":
        """Scalar gauge fields: B_i = values[i] times the identity."""
        z = chart.localization.zero()
        mats = []
        for v in values:
            mats.append(tuple(tuple(v if i == j else z for j in range(dim))
                              for i in range(dim)))
        return cls(chart, tuple(mats))

    def is_scalar(self) -> tuple[LocalizedElement, ...] | None:
        """The diagonal values if every B_i is a scalar matrix, else None."""
        out = []
        for m in self.matrices:
            v = m[0][0]
            for i, row in enumerate(m):
                for j, entry in enumerate(row):
                    if i == j:
                        if not (entry == v):
                            return None
                    elif not entry.is_zero():
                        return None
            out.append(v)
        return tuple(out)

    def apply(self, i: int, column: int) -> list[tuple[int, LocalizedElement]]:
        """Nonzero entries of B_i applied to the basis vector ``column``."""
        return [(r, self.matrices[i][r][column])
                for r in range(self.dim)
                if not self.matrices[i][r][column].is_zero()]

    def validate(self, module: GlModule) -> list[CheckResult]:
        """Check the three gauge-field axioms against a module."""
        if module.dim != self.dim:
            raise ValueError(f"module dim {module.dim} != gauge dim {self.dim}")
        chart = self.chart
        loc = chart.localization
        results = [CheckResult("axiom1_linearity", True,
                               "matrices over A_(h) are A_(h)-linear by construction")]

        # axiom 2: [B_i, rho(E_pq)] = 0 entrywise
        ok2, witness2 = True, ""
        for i, B in enumerate(self.matrices):
            for (p, q), rho in module.rho.items():
                for r in range(self.dim):
                    for c in range(self.dim):
                        lhs = loc.zero()
                        for k in range(self.dim):
                            if rho[k][c]:
                                lhs = lhs + B[r][k] * rho[k][c]
                            if rho[r][k]:
                                lhs = lhs - rho[r][k] * B[k][c]
                        if not lhs.is_zero():
                            ok2, witness2 = False, (
                                f"[B_{i + 1}, rho(E_{p}{q})] entry ({r + 1},{c + 1}) = {lhs}"
                            )
                            break
                    if not ok2:
                        break
                if not ok2:
                    break
            if not ok2:
                break
        results.append(CheckResult("axiom2_glN_commutation", ok2, witness2))

        # axiom 3: tau_i(B_j) - tau_j(B_i) + [B_i, B_j] = 0
        ok3, witness3 = True, ""
        params = chart.parameters
        frame = chart.frame
        for i in range(len(params)):
            for j in range(i + 1, len(params)):
                Bi, Bj = self.matrices[i], self.matrices[j]
                for r in range(self.dim):
                    for c in range(self.dim):
                        entry = frame.derive(params[i], Bj[r][c]) \
                            - frame.derive(params[j], Bi[r][c])
                        for k in range(self.dim):
                            entry = entry + Bi[r][k] * Bj[k][c] - Bj[r][k] * Bi[k][c]
                        if not entry.is_zero():
                            ok3, witness3 = False, (
                                f"flatness fails for (i,j)=({i + 1},{j + 1})"
                                f" at entry ({r + 1},{c + 1}): {entry}"
                            )
                            break
                    if not ok3:
                        break
                if not ok3:
                    break
            if not ok3:
                break
        results.append(CheckResult("axiom3_flatness", ok3, witness3))
        return results


class GaugeElement:
    """A finitely supported sum of coefficients against the U basis."""

    __slots__ = ("loc", "terms")

    def __init__(self, loc, terms: Mapping[int, LocalizedElement]):
        self.loc = loc
        self.terms: dict[int, LocalizedElement] = {
            k: v for k, v in terms.items() if not v.is_zero()
        }

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GaugeElement") -> "GaugeElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return GaugeElement(self.loc, out)

    def __sub__(self, other: "GaugeElement") -> "GaugeElement":
        return self + other.scale(Fraction(-1))

    def scale(self, c: "LocalizedElement | Fraction | int") -> "GaugeElement":
        return GaugeElement(self.loc, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaugeElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = self.loc.zero()
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def render(self, labels: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[k]})*{labels[k]}" for k in sorted(self.terms))

    def __repr__(self) -> str:
        return f"GaugeElement({ {k: str(v) for k, v in self.terms.items()} })"


class OneForm:
    """A 1-form in chart coordinates; closedness is verified at construction."""

    def __init__(self, chart: Chart, coeffs: Sequence[LocalizedElement]):
        if len(coeffs) != len(chart.parameters):
            raise ValueError("one coefficient per chart parameter is required")
        self.chart = chart
        self.coeffs = tuple(coeffs)
        frame = chart.frame
        params = chart.parameters
        for i in range(len(params)):
            for j in range(i + 1, len(params)):
                diff = frame.derive(params[j], self.coeffs[i]) \
                    - frame.derive(params[i], self.coeffs[j])
                if not diff.is_zero():
                    raise ValueError(
                        f"1-form is not closed: d violation between "
                        f"{params[i]} and {params[j]}: {diff}"
                    )

    def negate(self) -> "OneForm":
        return OneForm(self.chart, tuple(-c for c in self.coeffs))


class GaugeModule:
    """A_(h) (x) U with the vector-field action for fixed gauge fields."""

    def __init__(self, chart: Chart, module: GlModule, field: GaugeField,
                 oneform: OneForm | None = None):
        if field.chart is not chart and field.chart != chart:
            raise ValueError("gauge field belongs to a different chart")
        if field.dim != module.dim:
            raise ValueError("gauge field size does not match the module dimension")
        self.chart = chart
        self.module = module
        self.field = field
        self.oneform = oneform
        self.loc = chart.localization

    # -- element constructors ------------------------------------------------

    def element(self, terms: Mapping[int, LocalizedElement]) -> GaugeElement:
        return GaugeElement(self.loc, terms)

    def basis_element(self, coeff: LocalizedElement, index: int) -> GaugeElement:
        return GaugeElement(self.loc, {index: coeff})

    def zero(self) -> GaugeElement:
        return GaugeElement(self.loc, {})

    # -- actions ---------------------------------------------------------------

    def eta_apply(self, eta: Sequence[LocalizedElement], f: LocalizedElement) -> LocalizedElement:
        """The derivation eta = sum f_i tau_i applied to a function."""
        frame = self.chart.frame
        out = self.loc.zero()
        for fi, param in zip(eta, self.chart.parameters):
            if not fi.is_zero():
                out = out + fi * frame.derive(param, f)
        return out

    def act(self, eta: Sequence[LocalizedElement], x: GaugeElement) -> GaugeElement:
        """Act by the chart derivation with coefficients eta."""
        if len(eta) != len(self.chart.parameters):
            raise ValueError("one coefficient per chart parameter is required")
        frame = self.chart.frame
        params = self.chart.parameters
        rho = self.module.rho
        out: dict[int, LocalizedElement] = {}

        def accumulate(idx: int, val: LocalizedElement) -> None:
            out[idx] = out[idx] + val if idx in out else val

        tau_eta = [[frame.derive(p, fi) for p in params] for fi in eta]
        for u, g in x.terms.items():
            for i, fi in enumerate(eta):
                if not fi.is_zero():
                    dg = frame.derive(params[i], g)
                    if not dg.is_zero():
                        accumulate(u, fi * dg)
                    fg = fi * g
                    for r, b in self.field.apply(i, u):
                        accumulate(r, fg * b)
                for p in range(len(params)):
                    df = tau_eta[i][p]
                    if df.is_zero():
                        continue
                    mat = rho[(p + 1, i + 1)]
                    gdf = g * df
                    for r in range(self.module.dim):
                        if mat[r][u]:
                            accumulate(r, gdf * mat[r][u])
        result = GaugeElement(self.loc, out)
        if self.oneform is not None:
            p_term = self.loc.zero()
            for fi, pi in zip(eta, self.oneform.coeffs):
                if not fi.is_zero():
                    p_term = p_term + fi * pi
            if not p_term.is_zero():
                result = result + x.scale(p_term)
        return result

    def a_mul(self, f: LocalizedElement, x: GaugeElement) -> GaugeElement:
        """The multiplication action of A_(h), coefficientwise."""
        return x.scale(f)

    def bracket_coeffs(self, eta: Sequence[LocalizedElement],
                       mu: Sequence[LocalizedElement]) -> list[LocalizedElement]:
        """Chart coefficients of [eta, mu]: eta(mu_i) - mu(eta_i)."""
        return [self.eta_apply(eta, mi) - self.eta_apply(mu, ei)
                for ei, mi in zip(eta, mu)]

    def twist(self, omega: OneForm) -> "GaugeModule":
        """Twist the action by a closed 1-form; composable and invertible."""
        if omega.chart is not self.chart and omega.chart != self.chart:
            raise ValueError("1-form belongs to a different chart")
        if self.oneform is None:
            combined = omega
        else:
            combined = OneForm(self.chart, tuple(
                a + b for a, b in zip(self.oneform.coeffs, omega.coeffs)))
        return GaugeModule(self.chart, self.module, self.field, combined)


def validate_gauge(gm: GaugeModule) -> list[CheckResult]:
    """Axiom report for the module's gauge field."""
    return gm.field.validate(gm.module)


def check_av_compat(gm: GaugeModule, eta: Sequence[LocalizedElement],
                    f: LocalizedElement, x: GaugeElement) -> CheckResult:
    """eta.(f.x) == eta(f).x + f.(eta.x), exactly."""
    lhs = gm.act(eta, gm.a_mul(f, x))
    rhs = gm.a_mul(gm.eta_apply(eta, f), x) + gm.a_mul(f, gm.act(eta, x))
    ok = lhs == rhs
    witness = "" if ok else (
        f"lhs={lhs.render(gm.module.basis_labels)} "
        f"rhs={rhs.render(gm.module.basis_labels)}"
    )
    return CheckResult("av_compat", ok, witness)


def check_lie_action(gm: GaugeModule, eta: Sequence[LocalizedElement],
                     mu: Sequence[LocalizedElement], x: GaugeElement) -> CheckResult:
    """act([eta,mu], x) == act(eta, act(mu,x)) - act(mu, act(eta,x)), exactly."""
    lhs = gm.act(gm.bracket_coeffs(eta, mu), x)
    rhs = gm.act(eta, gm.act(mu, x)) - gm.act(mu, gm.act(eta, x))
    ok = lhs == rhs
    witness = "" if ok else (
        f"lhs={lhs.render(gm.module.basis_labels)} "
        f"rhs={rhs.render(gm.module.basis_labels)}"
    )
    return CheckResult("lie_action", ok, witness)
