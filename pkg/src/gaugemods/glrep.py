"""Finite-dimensional gl_N representations and central-element machinery.

A module is a family of dim x dim rational matrices rho(E_ij) satisfying
the elementary-matrix commutation relations, validated at construction.
On top of that sit the cyclic Casimir elements Omega_k, the fully
symmetrized central sums, their central combinations P_k, central
characters, and the test for the finitely many modules whose gauge
modules can degenerate over the vector-field Lie algebra.

Formal elements of the enveloping algebra are plain word sums; no PBW
normalization is performed, and symbolic identities are certified by
exact evaluation on families of modules.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

DEFAULT_TERM_BUDGET = 200_000


class BudgetExceededError(RuntimeError):
    """Raised when a combinatorial expansion would exceed the term budget."""


class GlModuleError(ValueError):
    """Raised when candidate matrices violate the gl_N relations."""


class NonScalarActionError(ValueError):
    """Raised when a central element fails to act by a scalar."""

    def __init__(self, k: int, matrix: Matrix):
        super().__init__(f"Omega_{k} does not act as a scalar matrix")
        self.k = k
        self.matrix = matrix


# -- exact matrix helpers ----------------------------------------------------

def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))

def zero_matrix(n: int) -> Matrix:
    zero = Fraction(0)
    return tuple((zero,) * n for _ in range(n))

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_scale(a: Matrix, c: Fraction | int) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i, row in enumerate(a):
        oi = out[i]
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(m):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return tuple(tuple(r) for r in out)

def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))

def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)

def scalar_of(a: Matrix) -> Fraction | None:
    """The scalar c with a == c*I, or None if a is not scalar."""
    c = a[0][0]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x != (c if i == j else 0):
                return None
    return c

def as_matrix(rows: Sequence[Sequence[int | str | Fraction]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


# -- modules -----------------------------------------------------------------

class GlModule:
    """A gl_N module given by matrices rho(E_ij), indices 1-based.

    The commutation relations
        [rho(E_ij), rho(E_kl)] = d_jk rho(E_il) - d_li rho(E_kj)
    are verified at construction; a violation raises ``GlModuleError``
    naming the failing index quadruple.
    """

    def __init__(self, N: int, rho: Mapping[tuple[int, int], Matrix],
                 name: str = "", basis_labels: Sequence[str] | None = None):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.rho = {k: tuple(tuple(Fraction(x) for x in row) for row in m)
                    for k, m in rho.items()}
        dims = {len(m) for m in self.rho.values()}
        if len(dims) != 1:
            raise GlModuleError("matrices of unequal size")
        self.dim = dims.pop()
        for m in self.rho.values():
            if any(len(row) != self.dim for row in m):
                raise GlModuleError("non-square matrix")
        expected = {(i, j) for i in range(1, N + 1) for j in range(1, N + 1)}
        if set(self.rho) != expected:
            raise GlModuleError("need exactly the matrices rho(E_ij), 1 <= i,j <= N")
        self.name = name or f"gl{N}-module(dim {self.dim})"
        self.basis_labels = tuple(basis_labels) if basis_labels else tuple(
            f"b{i}" for i in range(self.dim))
        self._validate()

    def _validate(self) -> None:
        rng = range(1, self.N + 1)
        for i, j, k, l in itertools.product(rng, repeat=4):
            lhs = mat_commutator(self.rho[(i, j)], self.rho[(k, l)])
            rhs = zero_matrix(self.dim)
            if j == k:
                rhs = mat_add(rhs, self.rho[(i, l)])
            if l == i:
                rhs = mat_sub(rhs, self.rho[(k, j)])
            if lhs != rhs:
                raise GlModuleError(
                    f"commutator relation fails for (i,j,k,l)=({i},{j},{k},{l})"
                )

    def __repr__(self) -> str:
        return f"GlModule({self.name}, N={self.N}, dim={self.dim})"


def exterior_power(N: int, k: int) -> GlModule:
    """The k-th exterior power of the natural N-dimensional module.

    Basis: increasing k-subsets of {1..N} in lexicographic order.  The
    identity of gl_N acts by the scalar k; k = 0 is the trivial module.
    """
    if not 0 <= k <= N:
        raise ValueError(f"k must satisfy 0 <= k <= N, got k={k}, N={N}")
    basis = list(itertools.combinations(range(1, N + 1), k))
    index = {s: c for c, s in enumerate(basis)}
    dim = len(basis)
    rho: dict[tuple[int, int], Matrix] = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            m = [[Fraction(0)] * dim for _ in range(dim)]
            for col, subset in enumerate(basis):
                for pos, elem in enumerate(subset):
                    if elem != j:
                        continue
                    # e_j at this slot becomes e_i; kill repeats, sort with sign
                    rest = subset[:pos] + subset[pos + 1:]
                    if i in rest:
                        continue
                    merged = tuple(sorted(rest + (i,)))
                    smaller = sum(1 for x in rest if x < i)
                    sign = (-1) ** (pos - smaller)
                    m[index[merged]][col] += sign
            rho[(i, j)] = tuple(tuple(r) for r in m)
    labels = ["1"] if k == 0 else ["e(" + ",".join(map(str, s)) + ")" for s in basis]
    return GlModule(N, rho, name=f"Lambda^{k} QQ^{N}", basis_labels=labels)


def trivial_module(N: int) -> GlModule:
    return exterior_power(N, 0)


def custom_module(N: int, matrices: Mapping[tuple[int, int], Sequence[Sequence]],
                  name: str = "custom") -> GlModule:
    """Build a module from user matrices; relations are fully validated."""
    rho = {k: as_matrix(m) for k, m in matrices.items()}
    return GlModule(N, rho, name=name)


def symmetric_square(N: int) -> GlModule:
    """Sym^2 of the natural module, acting by derivations on e_a e_b."""
    basis = list(itertools.combinations_with_replacement(range(1, N + 1), 2))
    index = {s: c for c, s in enumerate(basis)}
    dim = len(basis)
    rho: dict[tuple[int, int], Matrix] = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            m = [[Fraction(0)] * dim for _ in range(dim)]
            for col, (a, b) in enumerate(basis):
                for slot, other in ((a, b), (b, a)):
                    if slot == j:
                        target = tuple(sorted((i, other)))
                        m[index[target]][col] += 1
            rho[(i, j)] = tuple(tuple(r) for r in m)
    return GlModule(N, rho, name=f"Sym^2 QQ^{N}",
                    basis_labels=[f"e{a}e{b}" for a, b in basis])


# -- enveloping-algebra word sums ---------------------------------------------

Word = tuple[tuple[int, int], ...]


class UEAElement:
    """A finite rational combination of words in the symbols E_ij."""

    __slots__ = ("words",)

    def __init__(self, words: Mapping[Word, Fraction]):
        self.words: dict[Word, Fraction] = {w: c for w, c in words.items() if c != 0}

    @classmethod
    def generator(cls, i: int, j: int) -> "UEAElement":
        return cls({((i, j),): Fraction(1)})

    @classmethod
    def scalar(cls, c: Fraction | int) -> "UEAElement":
        return cls({(): Fraction(c)})

    def __add__(self, other: "UEAElement") -> "UEAElement":
        out = dict(self.words)
        for w, c in other.words.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return UEAElement(out)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "UEAElement":
        return UEAElement({w: c * v for w, v in self.words.items()})

    def __mul__(self, other: "UEAElement") -> "UEAElement":
        out: dict[Word, Fraction] = {}
        for wa, ca in self.words.items():
            for wb, cb in other.words.items():
                w = wa + wb
                s = out.get(w, 0) + ca * cb
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return UEAElement(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.words == other.words

    def __len__(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        return f"UEAElement({len(self.words)} words)"


def evaluate(el: UEAElement, m: GlModule) -> Matrix:
    """Evaluate a word sum on a module: products of rho matrices."""
    total = zero_matrix(m.dim)
    for word, coeff in el.words.items():
        acc = identity(m.dim)
        for (i, j) in word:
            if not (1 <= i <= m.N and 1 <= j <= m.N):
                raise ValueError(f"symbol E_{i}{j} out of range for N={m.N}")
            acc = mat_mul(acc, m.rho[(i, j)])
        total = mat_add(total, mat_scale(acc, coeff))
    return total


def casimir(k: int, N: int) -> UEAElement:
    """Omega_k: the cyclic sum over index tuples of E_{i1 i2}...E_{ik i1}."""
    if k < 1:
        raise ValueError("k must be at least 1")
    words: dict[Word, Fraction] = {}
    for idx in itertools.product(range(1, N + 1), repeat=k):
        word = tuple((idx[a], idx[(a + 1) % k]) for a in range(k))
        words[word] = words.get(word, Fraction(0)) + 1
    return UEAElement(words)


def hat_omega(k: int, N: int, budget: int = DEFAULT_TERM_BUDGET) -> UEAElement:
    """The fully symmetrized central sum over index tuples and permutations."""
    if k < 2:
        raise ValueError("k must be at least 2")
    count = (N ** k) * math.factorial(k)
    if count > budget:
        raise BudgetExceededError(
            f"N^k*k! = {count} exceeds the term budget {budget}"
        )
    words: dict[Word, Fraction] = {}
    perms = list(itertools.permutations(range(k)))
    for idx in itertools.product(range(1, N + 1), repeat=k):
        for sigma in perms:
            word = tuple((idx[sigma[a]], idx[a]) for a in range(k))
            words[word] = words.get(word, Fraction(0)) + 1
    return UEAElement(words)


def p_poly_matrix(k: int, m: GlModule, budget: int = DEFAULT_TERM_BUDGET) -> Matrix:
    """Evaluate the central combination P_k on a module.

    P_k = (symmetrized sum) - ((N+k-1)!/N!) * Omega_1, which vanishes
    exactly on the exterior powers of the natural module.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    hat = evaluate(hat_omega(k, m.N, budget), m)
    coeff = Fraction(math.factorial(m.N + k - 1), math.factorial(m.N))
    return mat_sub(hat, mat_scale(evaluate(casimir(1, m.N), m), coeff))


def central_character(m: GlModule) -> list[Fraction]:
    """Scalars of Omega_1..Omega_N; raises if any acts non-scalarly."""
    out = []
    for k in range(1, m.N + 1):
        mat = evaluate(casimir(k, m.N), m)
        c = scalar_of(mat)
        if c is None:
            raise NonScalarActionError(k, mat)
        out.append(c)
    return out


@dataclass(frozen=True)
class ExceptionalReport:
    """Outcome of the exceptional-module test for one module.

    ``verdict`` is "possibly exceptional" when the trace Casimir scalar
    lies in {0..N} and every P_k vanishes; simplicity of the module is
    assumed, not decided, so the verdict is never stronger than
    "possibly".
    """

    module: str
    N: int
    omega1: Fraction
    omega1_in_range: bool
    p_scalars: dict[int, Fraction | None]
    verdict: str


def exceptional_check(m: GlModule, budget: int = DEFAULT_TERM_BUDGET) -> ExceptionalReport:
    chi = central_character(m)  # propagates NonScalarActionError
    omega1 = chi[0]
    in_range = omega1.denominator == 1 and 0 <= omega1 <= m.N
    p_scalars: dict[int, Fraction | None] = {}
    all_zero = True
    for k in range(2, m.N + 1):
        pk = scalar_of(p_poly_matrix(k, m, budget))
        p_scalars[k] = pk
        if pk != 0:
            all_zero = False
    verdict = "possibly exceptional" if (in_range and all_zero) else "not exceptional"
    return ExceptionalReport(m.name, m.N, omega1, in_range, p_scalars, verdict)


def stabilizer_sum(N: int, k: int, budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Brute-force sum of |Stab(i)| over index tuples under the S_k action.

    Asserted equal to (N+k-1)!/(N-1)! -- the closed form the orbit count
    gives; a mismatch raises, since it would falsify the combinatorics
    the central combinations rely on.
    """
    count = (N ** k) * math.factorial(k)
    if count > budget:
        raise BudgetExceededError(f"N^k*k! = {count} exceeds the term budget {budget}")
    total = 0
    perms = list(itertools.permutations(range(k)))
    for idx in itertools.product(range(1, N + 1), repeat=k):
        total += sum(1 for sigma in perms
                     if all(idx[sigma[a]] == idx[a] for a in range(k)))
    expected = math.factorial(N + k - 1) // math.factorial(N - 1)
    if total != expected:
        raise AssertionError(
            f"stabilizer sum {total} != (N+k-1)!/(N-1)! = {expected} for N={N}, k={k}"
        )
    return total
