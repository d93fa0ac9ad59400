"""Fixed-space computation for monodromy-invariant degree-4 classes.

An instance is a symmetric invertible rational n x n intersection matrix A
together with a nonzero coordinate vector s for a distinguished degree-2
class. A symmetric matrix C and scalar c0 represent an invariant class;
invariance under the relevant deformations reduces to the linear system

    (c0*I - 2*C*A) mu = 0   for every mu with (s^T A) mu = 0.

The solution space is always 2-dimensional, spanned by (A^{-1}, 2) and
(s s^T, 0); this module solves the system exactly as one rational linear
system in n(n+1)/2 + 1 unknowns and checks that span equality, rather than
assuming it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .exact_linalg import Lattice, Mat, fraction_vector


class FixInstance:
    """Problem data: symmetric invertible A and a nonzero vector s."""

    __slots__ = ("n", "A", "s")

    def __init__(self, A, s):
        A = A if isinstance(A, Mat) else Mat(A)
        if not A.is_symmetric():
            raise ValueError("intersection matrix must be symmetric")
        if A.det() == 0:
            raise ValueError("intersection matrix must be invertible")
        s = fraction_vector(s)
        if len(s) != A.shape[0]:
            raise ValueError("vector length must match the matrix size")
        if not any(s):
            raise ValueError("distinguished vector must be nonzero")
        self.n = A.shape[0]
        self.A = A
        self.s = s

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "s": [_fstr(x) for x in self.s]}

    @classmethod
    def from_json(cls, obj) -> "FixInstance":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(Mat.from_json(obj["A"]), [Fraction(x) for x in obj["s"]])


def _fstr(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def polarization_kernel(inst: FixInstance) -> list[tuple[int, ...]]:
    """Integer basis of {mu : (s^T A) mu = 0}; always n - 1 vectors.

    The covector s^T A is cleared to integers, fed to the HNF transform as
    a one-column matrix, and the transform rows below the rank line are the
    saturated kernel.
    """
    w = [sum(self_s * inst.A[(k, r)] for k, self_s in enumerate(inst.s)) for r in range(inst.n)]
    d = lcm(*(x.denominator for x in w)) if w else 1
    wi = [(x * d).numerator for x in w]
    if not any(wi):
        raise ValueError("degenerate covector: s^T A = 0 despite invertible A")
    col = [[x] for x in wi]
    _, U, rank = kernels.hnf_transform(col)
    return [tuple(U[t]) for t in range(rank, inst.n)]


class FixSolution:
    """Basis of the fixed space: pairs (C, c0) with C symmetric rational."""

    __slots__ = ("n", "pairs", "dimension", "extra_solutions")

    def __init__(self, n: int, pairs):
        self.n = n
        self.pairs = list(pairs)
        self.dimension = len(self.pairs)
        self.extra_solutions = self.dimension > 2

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "extra_solutions": self.extra_solutions,
            "pairs": [
                {"C": C.to_json(), "c0": _fstr(c0)} for C, c0 in self.pairs
            ],
        }


def _pair_to_vector(C: Mat, c0, pairs) -> list[Fraction]:
    v = [C[(i, j)] for (i, j) in pairs]
    v.append(c0 if isinstance(c0, Fraction) else Fraction(c0))
    return v


def _vector_to_pair(vec, n: int, pairs) -> tuple[Mat, Fraction]:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), x in zip(pairs, vec):
        rows[i][j] = Fraction(x)
        rows[j][i] = Fraction(x)
    return Mat(rows), Fraction(vec[-1])


def solve_fixed_space(inst: FixInstance) -> FixSolution:
    """Solve (c0*I - 2*C*A) mu = 0 over all mu in the polarization kernel.

    One homogeneous rational system: unknowns are the upper triangle of C
    plus c0, equations are n per kernel vector. Fraction-free echelon
    reduction keeps intermediate entries bounded by minors of the system
    (a unimodular-transform approach blows up here); the nullspace then
    falls out of rational back-substitution, one vector per free column,
    normalized to primitive integer vectors.
    """
    n = inst.n
    pairs = _sym_pairs(n)
    nvars = len(pairs) + 1
    var_index = {p: k for k, p in enumerate(pairs)}
    kern = polarization_kernel(inst)

    rows: list[list[int]] = []
    for mu in kern:
        amu = [
            sum(inst.A[(k, l)] * mu[l] for l in range(n) if mu[l])
            for k in range(n)
        ]
        for r in range(n):
            coeffs = [Fraction(0)] * nvars
            coeffs[-1] = Fraction(mu[r])
            for k in range(n):
                if amu[k]:
                    idx = var_index[(min(r, k), max(r, k))]
                    coeffs[idx] -= 2 * amu[k]
            d = lcm(*(c.denominator for c in coeffs))
            ints = [(c * d).numerator for c in coeffs]
            g = 0
            for x in ints:
                g = gcd(g, x)
            if g > 1:
                ints = [x // g for x in ints]
            if any(ints):
                rows.append(ints)

    if not rows:
        raise ValueError("empty constraint system")
    ech, piv = kernels.row_echelon_bareiss(rows)
    pivset = set(piv)
    sols = []
    for f in (c for c in range(nvars) if c not in pivset):
        x = [Fraction(0)] * nvars
        x[f] = Fraction(1)
        for t in range(len(piv) - 1, -1, -1):
            p = piv[t]
            row = ech[t]
            acc = Fraction(0)
            for c in range(p + 1, nvars):
                if row[c] and x[c]:
                    acc += row[c] * x[c]
            x[p] = -acc / row[p]
        d = lcm(*(v.denominator for v in x))
        xi = [(v * d).numerator for v in x]
        g = 0
        for v in xi:
            g = gcd(g, v)
        if g > 1:
            xi = [v // g for v in xi]
        sols.append(xi)
    return FixSolution(n, [_vector_to_pair(v, n, pairs) for v in sols])


def expected_generators(inst: FixInstance) -> list[tuple[Mat, Fraction]]:
    """The structural generators (A^{-1}, 2) and (s s^T, 0)."""
    binv = inst.A.inverse()
    s = inst.s
    outer = Mat([[a * b for b in s] for a in s])
    return [(binv, Fraction(2)), (outer, Fraction(0))]


def verify_generators(sol: FixSolution, inst: FixInstance) -> bool:
    """Exact Q-span equality of the solved space with the structural one."""
    pairs = _sym_pairs(inst.n)
    got = Lattice.from_generators(
        [_pair_to_vector(C, c0, pairs) for C, c0 in sol.pairs],
        ambient_dim=len(pairs) + 1,
    )
    want = Lattice.from_generators(
        [_pair_to_vector(C, c0, pairs) for C, c0 in expected_generators(inst)],
        ambient_dim=len(pairs) + 1,
    )
    return got.spans_same_qspace(want)


def check_solution(sol: FixSolution, inst: FixInstance) -> bool:
    """Every basis pair satisfies the full constraint system (independent

    of how the solver produced it): (c0*I - 2*C*A)*mu = 0 for each kernel mu.
    """
    kern = polarization_kernel(inst)
    for C, c0 in sol.pairs:
        twoca = 2 * (C * inst.A)
        for mu in kern:
            for r in range(inst.n):
                acc = c0 * mu[r]
                for l in range(inst.n):
                    if mu[l]:
                        acc -= twoca[(r, l)] * mu[l]
                if acc != 0:
                    return False
    return True


def random_instance(rng, n: int) -> FixInstance:
    """A = M + M^T + 2n*I for random small M; retried on the rare det 0."""
    while True:
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        rows = [
            [m[i][j] + m[j][i] + (2 * n if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        A = Mat(rows)
        if A.det() != 0:
            break
    while True:
        s = [rng.randint(-3, 3) for _ in range(n)]
        if any(s):
            return FixInstance(A, [Fraction(x) for x in s])
