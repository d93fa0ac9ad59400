"""Exact rational matrices and integer lattices.

``Mat`` is an immutable matrix of reduced ``fractions.Fraction`` entries.
``Lattice`` is a finitely generated free submodule of Q^n given by a basis,
stored in a canonical form so that structural equality decides equality of
the underlying sets of vectors. ``FiniteAbelianGroup`` records invariant
factors of finite quotients.

Canonical lattice form: a pair ``(den, H)`` with ``den`` the smallest
positive integer such that ``den * M`` is an integer lattice and ``H`` the
row-style Hermite normal form of a basis of ``den * M``. Both are uniquely
determined by the module ``M``: any integer ``e`` with ``e * M`` integral is
a multiple of ``den``, and HNF is a canonical form for integer row spans.

All operations are pure; nothing here mutates its inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from . import kernels


class NonIntegerMatrixError(ValueError):
    """An operation that requires integer entries got a proper fraction."""


class AmbientMismatchError(ValueError):
    """Two lattices live in different ambient spaces or carry different forms."""


class NotASublatticeError(ValueError):
    """The claimed sublattice relation does not hold."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def fraction_vector(v) -> tuple[Fraction, ...]:
    """Normalize an iterable of ints/Fractions/strings to a Fraction tuple."""
    return tuple(_as_fraction(x) for x in v)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Mat:
    """Immutable exact rational matrix.

    Entries are reduced Fractions. Supports +, -, unary -, scalar and matrix
    multiplication, transpose, exact determinant and inverse, and JSON
    round-tripping as an array of arrays of "p/q" strings.
    """

    __slots__ = ("_rows", "_shape", "_hash")

    def __init__(self, rows):
        data = tuple(fraction_vector(r) for r in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        ncols = len(data[0])
        if ncols == 0:
            raise ValueError("matrix needs at least one column")
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        self._rows = data
        self._shape = (len(data), ncols)
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls([[0] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def rows_tuple(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self._shape != other._shape:
            raise ValueError("shape mismatch")
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self._shape != other._shape:
            raise ValueError("shape mismatch")
        return Mat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __neg__(self):
        return Mat([[-a for a in r] for r in self._rows])

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in product")
            bt = list(zip(*other._rows))
            return Mat(
                [[_dot(r, c) for c in bt] for r in self._rows]
            )
        if isinstance(other, (int, Fraction)):
            return Mat([[a * other for a in r] for r in self._rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Mat([[other * a for a in r] for r in self._rows])
        return NotImplemented

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self._rows)))

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        R = self._rows
        return all(
            R[i][j] == R[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def int_rows(self) -> list[list[int]]:
        """Entries as plain ints; raises if any entry is a proper fraction."""
        if not self.is_integer():
            raise NonIntegerMatrixError("matrix has non-integer entries")
        return [[x.numerator for x in r] for r in self._rows]

    def denominator_lcm(self) -> int:
        return lcm(*(x.denominator for r in self._rows for x in r))

    def scaled_int_rows(self) -> tuple[int, list[list[int]]]:
        """Smallest d > 0 with d*self integral, and the integer entries of d*self."""
        d = self.denominator_lcm()
        return d, [[(x * d).numerator for x in r] for r in self._rows]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        d, m = self.scaled_int_rows()
        return Fraction(kernels.det_bareiss(m), d**self.rows)

    def inverse(self) -> "Mat":
        """Exact inverse by Gauss-Jordan elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if aug[i][col]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            if pv != 1:
                aug[col] = [x / pv for x in aug[col]]
            prow = aug[col]
            for i in range(n):
                if i != col and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], prow)]
        return Mat([r[n:] for r in aug])

    def to_json(self) -> list[list[str]]:
        return [[_frac_str(x) for x in r] for r in self._rows]

    @classmethod
    def from_json(cls, obj) -> "Mat":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj)


def _dot(a, b) -> Fraction:
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def hnf(m: Mat) -> Mat:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    H = kernels.hnf(m.int_rows())
    if not H:
        raise ValueError("zero matrix has no nonzero HNF rows")
    return Mat(H)


class FiniteAbelianGroup:
    """A finite abelian group by invariant factors d1 | d2 | ... | dk, dk >= 2.

    ``generators`` optionally carries one lift per factor (rational ambient
    vectors whose classes generate the cyclic summands). Equality and hashing
    look at the invariant factors only.
    """

    __slots__ = ("invariant_factors", "generators")

    def __init__(self, invariant_factors, generators=None):
        factors = tuple(int(d) for d in invariant_factors)
        for d in factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        if generators is not None:
            generators = tuple(fraction_vector(g) for g in generators)
            if len(generators) != len(factors):
                raise ValueError("need one generator per invariant factor")
        self.invariant_factors = factors
        self.generators = generators

    @classmethod
    def from_diagonal(cls, diag, generators=None) -> "FiniteAbelianGroup":
        """Torsion part of a SNF diagonal: keep the entries >= 2.

        ``generators``, when given, must align with ``diag``; the lifts for
        dropped entries (units and zeros) are discarded.
        """
        keep = [i for i, d in enumerate(diag) if d > 1]
        gens = None
        if generators is not None:
            gens = [generators[i] for i in keep]
        return cls([diag[i] for i in keep], gens)

    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __eq__(self, other):
        if not isinstance(other, FiniteAbelianGroup):
            return NotImplemented
        return self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        if not self.invariant_factors:
            return "FiniteAbelianGroup(trivial)"
        parts = " x ".join(f"Z/{d}" for d in self.invariant_factors)
        return f"FiniteAbelianGroup({parts})"

    def to_json(self) -> dict:
        out = {"invariant_factors": list(self.invariant_factors)}
        out["generators"] = (
            None
            if self.generators is None
            else [[_frac_str(x) for x in g] for g in self.generators]
        )
        return out

    @classmethod
    def from_json(cls, obj) -> "FiniteAbelianGroup":
        return cls(obj["invariant_factors"], obj.get("generators"))


def snf(m: Mat) -> FiniteAbelianGroup:
    """Invariant factors (torsion part) of the cokernel of an integer matrix.

    The matrix is read as a relations matrix: its rows are relations on
    Z^cols, and the result is the torsion of Z^cols / rowspan(m).
    """
    diag = kernels.snf_diagonal(m.int_rows())
    return FiniteAbelianGroup.from_diagonal(diag)


class Lattice:
    """A finitely generated free submodule of Q^n in canonical form.

    Stored as ``den`` (smallest positive integer making den*M integral) and
    ``int_basis`` (HNF rows of den*M), so equal modules compare equal. An
    optional ``form`` (symmetric Mat of size ambient_dim) rides along; all
    binary operations demand that both operands carry the same form.
    """

    __slots__ = ("ambient_dim", "den", "int_basis", "form", "_pivots")

    def __init__(self, ambient_dim: int, den: int, int_basis, form=None, _canonical=False):
        if not _canonical:
            raise TypeError("use Lattice.from_rows / from_generators / standard")
        self.ambient_dim = ambient_dim
        self.den = den
        self.int_basis = int_basis
        self.form = form
        self._pivots = kernels.pivot_columns(int_basis) if int_basis else []

    @staticmethod
    def _canonicalize(ambient_dim, int_rows, den, form):
        H = kernels.hnf(int_rows) if int_rows else []
        if H:
            g = den
            for row in H:
                for x in row:
                    if x:
                        g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                den //= g
                H = [[x // g for x in row] for row in H]
        else:
            den = 1
        return Lattice(
            ambient_dim,
            den,
            tuple(tuple(r) for r in H),
            form,
            _canonical=True,
        )

    @classmethod
    def from_generators(cls, rows, ambient_dim=None, form=None) -> "Lattice":
        """Lattice spanned by possibly dependent rational generators."""
        vecs = [fraction_vector(r) for r in rows]
        if ambient_dim is None:
            if not vecs:
                raise ValueError("ambient_dim required for an empty generating set")
            ambient_dim = len(vecs[0])
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("generator length differs from ambient_dim")
        if form is not None:
            _check_form(form, ambient_dim)
        if not vecs:
            return cls._canonicalize(ambient_dim, [], 1, form)
        d = lcm(*(x.denominator for v in vecs for x in v))
        int_rows = [[(x * d).numerator for x in v] for v in vecs]
        return cls._canonicalize(ambient_dim, int_rows, d, form)

    @classmethod
    def from_rows(cls, rows, ambient_dim=None, form=None) -> "Lattice":
        """Lattice with the given basis; rejects dependent rows."""
        rows = list(rows)
        lat = cls.from_generators(rows, ambient_dim=ambient_dim, form=form)
        if lat.rank != len(rows):
            raise ValueError("basis rows are linearly dependent")
        return lat

    @classmethod
    def standard(cls, n: int, form=None) -> "Lattice":
        """Z^n."""
        if form is not None:
            _check_form(form, n)
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(n, 1, eye, form, _canonical=True)

    @property
    def rank(self) -> int:
        return len(self.int_basis)

    def basis(self) -> Mat:
        """Canonical basis as rational rows."""
        if not self.int_basis:
            raise ValueError("rank-0 lattice has no basis matrix")
        d = self.den
        return Mat([[Fraction(x, d) for x in row] for row in self.int_basis])

    def basis_rows(self) -> list[tuple[Fraction, ...]]:
        d = self.den
        return [tuple(Fraction(x, d) for x in row) for row in self.int_basis]

    def with_form(self, form) -> "Lattice":
        if form is not None:
            _check_form(form, self.ambient_dim)
        return Lattice(self.ambient_dim, self.den, self.int_basis, form, _canonical=True)

    def scaled(self, c) -> "Lattice":
        """The lattice c*M."""
        c = _as_fraction(c)
        if c == 0:
            raise ValueError("scaling a lattice by zero")
        return Lattice.from_generators(
            [[c * x for x in row] for row in self.basis_rows()],
            ambient_dim=self.ambient_dim,
            form=self.form,
        )

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.den == other.den
            and self.int_basis == other.int_basis
            and self.form == other.form
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.den, self.int_basis))

    def __repr__(self):
        return f"Lattice(rank {self.rank} in Q^{self.ambient_dim}, den {self.den})"

    def _scaled_vector(self, v):
        """den * v as an integer list, or None when that is not integral."""
        v = fraction_vector(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from ambient_dim")
        out = []
        for x in v:
            s = x * self.den
            if s.denominator != 1:
                return None
            out.append(s.numerator)
        return out

    def contains(self, v) -> bool:
        w = self._scaled_vector(v)
        if w is None:
            return False
        if not self.int_basis:
            return not any(w)
        return (
            kernels.solve_left_int_row(self.int_basis, self._pivots, w) is not None
        )

    def coords(self, v):
        """Integer coordinates of v in the canonical basis, or None."""
        w = self._scaled_vector(v)
        if w is None:
            return None
        if not self.int_basis:
            return () if not any(w) else None
        x = kernels.solve_left_int_row(self.int_basis, self._pivots, w)
        return None if x is None else tuple(x)

    def rational_coords(self, v):
        """Coordinates of v in the canonical basis over Q, or None.

        Triangular back-substitution against the HNF basis; returns None when
        v lies outside the Q-span.
        """
        v = fraction_vector(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from ambient_dim")
        res = [x * self.den for x in v]
        coeffs = []
        for t, p in enumerate(self._pivots):
            c = res[p] / self.int_basis[t][p]
            coeffs.append(c)
            if c:
                row = self.int_basis[t]
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        res[j] -= c * row[j]
        if any(res):
            return None
        return tuple(coeffs)

    def spans_same_qspace(self, other: "Lattice") -> bool:
        _check_ambient(self, other)
        return self.rank == other.rank and all(
            other.rational_coords(row) is not None for row in self.basis_rows()
        )

    def gram(self) -> Mat:
        """Gram matrix basis * form * basis^T of the canonical basis."""
        if self.form is None:
            raise ValueError("lattice carries no ambient form")
        B = self.basis()
        return B * self.form * B.transpose()

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [[_frac_str(x) for x in row] for row in self.basis_rows()],
            "form": None if self.form is None else self.form.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "Lattice":
        form = None if obj.get("form") is None else Mat.from_json(obj["form"])
        return cls.from_generators(
            obj["basis"], ambient_dim=obj["ambient_dim"], form=form
        )


def _check_form(form, n):
    if not isinstance(form, Mat):
        raise TypeError("ambient form must be a Mat")
    if form.shape != (n, n):
        raise ValueError("form size differs from ambient_dim")
    if not form.is_symmetric():
        raise ValueError("ambient form must be symmetric")


def _check_ambient(a: Lattice, b: Lattice):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
    if a.form != b.form:
        raise AmbientMismatchError("ambient forms differ")


def lattice_join(a: Lattice, b: Lattice) -> Lattice:
    """Smallest lattice containing both operands."""
    _check_ambient(a, b)
    return Lattice.from_generators(
        a.basis_rows() + b.basis_rows(), ambient_dim=a.ambient_dim, form=a.form
    )


def lattice_meet(a: Lattice, b: Lattice) -> Lattice:
    """Intersection of two lattices as sets of vectors.

    Over a common denominator D the operands are integer row spans A and B;
    a vector lies in both iff it is u*A = -w*B for an integer left-kernel
    element (u | w) of the stacked matrix [[A],[B]]. hnf_transform returns a
    basis of that kernel, whose images u*A generate the intersection.
    """
    _check_ambient(a, b)
    if not a.int_basis or not b.int_basis:
        return Lattice.from_generators([], ambient_dim=a.ambient_dim, form=a.form)
    D = lcm(a.den, b.den)
    fa = D // a.den
    fb = D // b.den
    A = [[x * fa for x in row] for row in a.int_basis]
    B = [[x * fb for x in row] for row in b.int_basis]
    stacked = A + B
    _, U, rank = kernels.hnf_transform(stacked)
    ra = len(A)
    gens = []
    for krow in U[rank:]:
        vec = [0] * a.ambient_dim
        for i in range(ra):
            c = krow[i]
            if c:
                Ai = A[i]
                for j in range(a.ambient_dim):
                    if Ai[j]:
                        vec[j] += c * Ai[j]
        gens.append([Fraction(x, D) for x in vec])
    return Lattice.from_generators(gens, ambient_dim=a.ambient_dim, form=a.form)


def _coord_matrix(sub: Lattice, sup: Lattice, *, integral: bool):
    """Coordinates of sub's basis in sup's basis, rows stacked.

    With integral=True demands integer coordinates (sub subseteq sup) and
    raises NotASublatticeError otherwise; with integral=False works over Q
    and raises when sub is not in the Q-span of sup.
    """
    _check_ambient(sub, sup)
    out = []
    for row in sub.basis_rows():
        if integral:
            c = sup.coords(row)
            if c is None:
                raise NotASublatticeError("vector outside the claimed superlattice")
        else:
            c = sup.rational_coords(row)
            if c is None:
                raise NotASublatticeError("vector outside the Q-span of the superlattice")
        out.append(list(c))
    return out


def sublattice_index(sub: Lattice, sup: Lattice) -> int:
    """Index [sup : sub] for a finite-index sublattice."""
    if sub.rank != sup.rank:
        raise NotASublatticeError("rank mismatch: the index would be infinite")
    if sub.rank == 0:
        return 1
    C = _coord_matrix(sub, sup, integral=True)
    d = kernels.det_bareiss(C)
    if d == 0:
        raise NotASublatticeError("degenerate coordinate matrix")
    return -d if d < 0 else d


def quotient_invariants(sub: Lattice, sup: Lattice) -> FiniteAbelianGroup:
    """Invariant factors of sup/sub with generator lifts (ambient vectors)."""
    if sub.rank != sup.rank:
        raise NotASublatticeError("rank mismatch: quotient is not finite")
    if sub.rank == 0:
        return FiniteAbelianGroup([])
    C = _coord_matrix(sub, sup, integral=True)
    diag, _, vinv = kernels.smith_normal_form(C, want_vinv=True)
    sup_rows = sup.basis_rows()
    lifts = []
    for i in range(len(diag)):
        coeffs = vinv[i]
        vec = [Fraction(0)] * sup.ambient_dim
        for j, c in enumerate(coeffs):
            if c:
                rj = sup_rows[j]
                for k in range(sup.ambient_dim):
                    if rj[k]:
                        vec[k] += c * rj[k]
        lifts.append(tuple(vec))
    return FiniteAbelianGroup.from_diagonal(diag, lifts)


def divisibility(v, lat: Lattice) -> int:
    """Largest n >= 1 with v/n still in the lattice."""
    c = lat.coords(v)
    if c is None:
        raise ValueError("vector is not in the lattice")
    if not any(c):
        raise ValueError("divisibility of the zero vector is undefined")
    return gcd(*c)


def coset_feasible(lat: Lattice, functional, target):
    """Decide whether some v in lat has functional(v) = target.

    ``functional`` is a rational covector on the ambient coordinates. The
    image functional(lat) is a cyclic subgroup g*Z of Q; the equation is
    solvable iff g divides target (any target works when the image is all
    zero only if target is zero). Returns (feasible, witness) with witness
    an ambient vector or None.
    """
    f = fraction_vector(functional)
    if len(f) != lat.ambient_dim:
        raise ValueError("functional length differs from ambient_dim")
    target = _as_fraction(target)
    vals = [_dot(f, row) for row in lat.basis_rows()]
    nz = [(i, x) for i, x in enumerate(vals) if x]
    if not nz:
        if target == 0:
            zero = tuple(Fraction(0) for _ in range(lat.ambient_dim))
            return True, zero
        return False, None
    # image subgroup generator: gcd over Q of the basis values
    L = lcm(*(x.denominator for _, x in nz))
    ints = [(i, (x * L).numerator) for i, x in nz]
    g = 0
    for _, n in ints:
        g = gcd(g, n)
    gen = Fraction(g, L)
    ratio = target / gen
    if ratio.denominator != 1:
        return False, None
    # Bezout combination of the integer values hits g
    coeff = {}
    acc = 0
    for i, n in ints:
        if acc == 0:
            coeff = {i: 1 if n > 0 else -1}
            acc = abs(n)
        else:
            a, b = _bezout(acc, n)
            coeff = {k: a * v for k, v in coeff.items()}
            coeff[i] = coeff.get(i, 0) + b
            acc = gcd(acc, n)
        if acc == 1:
            break
    m = ratio.numerator
    rows = lat.basis_rows()
    wit = [Fraction(0)] * lat.ambient_dim
    for i, c in coeff.items():
        mc = m * c
        if mc:
            for k in range(lat.ambient_dim):
                if rows[i][k]:
                    wit[k] += mc * rows[i][k]
    return True, tuple(wit)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(x, y) with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_s, -old_t
    return old_s, old_t


def saturation_int(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the saturation of an integer row span inside Z^n.

    With U*M*V = D in Smith form, the saturation pulls back from the span of
    the first rank coordinate vectors, i.e. the first rank rows of V^-1.
    """
    diag, _, vinv = kernels.smith_normal_form(rows, want_vinv=True)
    r = sum(1 for d in diag if d)
    return [list(vinv[i]) for i in range(r)]


def saturate_in(sub: Lattice, sup: Lattice) -> Lattice:
    """Saturation of sub inside sup: (sub tensor Q) intersected with sup."""
    C = _coord_matrix(sub, sup, integral=False)
    if not C:
        return Lattice.from_generators([], ambient_dim=sup.ambient_dim, form=sup.form)
    d = lcm(*(x.denominator for row in C for x in row))
    CI = [[(x * d).numerator for x in row] for row in C]
    sat = saturation_int(CI)
    sup_rows = sup.basis_rows()
    gens = []
    for coeffs in sat:
        vec = [Fraction(0)] * sup.ambient_dim
        for j, c in enumerate(coeffs):
            if c:
                rj = sup_rows[j]
                for k in range(sup.ambient_dim):
                    if rj[k]:
                        vec[k] += c * rj[k]
        gens.append(vec)
    return Lattice.from_generators(gens, ambient_dim=sup.ambient_dim, form=sup.form)


def signature_symmetric(m: Mat) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    Characteristic polynomial via the Faddeev-LeVerrier recursion over exact
    rationals; a real-rooted polynomial has exactly as many positive roots
    as sign variations in its coefficients (Descartes). Intended for the
    small (rank <= 23) forms; cost grows like n^4.
    """
    if not m.is_symmetric():
        raise ValueError("signature of a non-symmetric matrix")
    n = m.rows
    # det(xI - A) = sum c_k x^k, c_n = 1
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    Mk = Mat.zeros(n, n)
    eye = Mat.identity(n)
    for k in range(1, n + 1):
        Mk = m * Mk + c[n - k + 1] * eye
        AM = m * Mk
        tr = sum(AM[i, i] for i in range(n))
        c[n - k] = Fraction(-tr, k)
    n_zero = 0
    while n_zero <= n and c[n_zero] == 0:
        n_zero += 1
    coeffs = c[n_zero:]
    n_pos = _sign_variations(coeffs)
    # p(-x) variations count the negative roots; cross-check the total
    neg_coeffs = [x if (i % 2 == 0) else -x for i, x in enumerate(coeffs)]
    n_neg = _sign_variations(neg_coeffs)
    if n_pos + n_neg + n_zero != n:
        raise ArithmeticError("eigenvalue counts do not add up")
    return n_pos, n_neg, n_zero


def _sign_variations(coeffs) -> int:
    signs = [1 if x > 0 else -1 for x in coeffs if x]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
