"""Exact coefficient arithmetic and exact linear algebra.

Coefficients live in one of three domains:

  * the generic ring Z[q, q^-1][Q_1..Q_r] (Laurent in q, polynomial in the
    cyclotomic parameters), represented by :class:`GenericScalar`;
  * the rationals, represented by ``fractions.Fraction``;
  * a prime field F_p, represented by int64 residues.

All linear algebra runs over a field.  Matrices are plain numpy arrays:
``dtype=object`` holding Fractions (or GenericScalars, for membership-free
manipulations) and ``dtype=int64`` for prime fields, where row operations
vectorize.  Pivoting is always "first nonzero entry in column order" so that
ranks, kernels and particular solutions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class VariantMismatch(TypeError):
    pass


class NotAUnit(ArithmeticError):
    pass


class Inconsistent(ArithmeticError):
    """A linear system guaranteed solvable by theory failed to solve."""


class RepeatedParameter(ArithmeticError):
    """Vandermonde data requested for non-distinct parameters."""


class ZeroQ(ValueError):
    """Specialization assigns q = 0."""


class SingularBasis(ArithmeticError):
    """A family expected to be linearly independent is not."""


# ---------------------------------------------------------------------------
# generic ring


class GenericScalar:
    """Element of Z[q, q^-1][Q_1..Q_r].

    ``terms`` maps monomials (q exponent, tuple of Q exponents) to nonzero
    integer coefficients.  Q exponents are always >= 0; the q exponent may be
    negative.  Instances are immutable and interoperate with plain ints.
    """

    __slots__ = ("nq", "terms")

    def __init__(self, nq, terms):
        self.nq = nq  # number of Q parameters
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- constructors

    @classmethod
    def const(cls, c, nq):
        return cls(nq, {(0, (0,) * nq): int(c)} if c else {})

    @classmethod
    def q(cls, nq, exp=1):
        return cls(nq, {(exp, (0,) * nq): 1})

    @classmethod
    def Q(cls, j, nq):
        if not 1 <= j <= nq:
            raise VariantMismatch(f"Q_{j} out of range for {nq} parameters")
        e = [0] * nq
        e[j - 1] = 1
        return cls(nq, {(0, tuple(e)): 1})

    # -- helpers

    def _coerce(self, other):
        if isinstance(other, GenericScalar):
            if other.nq != self.nq:
                raise VariantMismatch("mixed parameter counts")
            return other
        if isinstance(other, (int, np.integer)):
            return GenericScalar.const(int(other), self.nq)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.nq, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, 0) + c
        return GenericScalar(self.nq, t)

    __radd__ = __add__

    def __neg__(self):
        return GenericScalar(self.nq, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = {}
        for (qa, ea), ca in self.terms.items():
            for (qb, eb), cb in o.terms.items():
                m = (qa + qb, tuple(x + y for x, y in zip(ea, eb)))
                t[m] = t.get(m, 0) + ca * cb
        return GenericScalar(self.nq, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = GenericScalar.const(1, self.nq)
        for _ in range(k):
            out = out * self
        return out

    def inv(self):
        # units of the generic ring are +- q^k monomials
        if len(self.terms) != 1:
            raise NotAUnit(repr(self))
        (qa, ea), c = next(iter(self.terms.items()))
        if any(ea) or c not in (1, -1):
            raise NotAUnit(repr(self))
        return GenericScalar(self.nq, {(-qa, ea): c})

    def specialize(self, params):
        """Evaluate in the field of ``params`` (a ParameterAssignment)."""
        if params.nq != self.nq:
            raise VariantMismatch("parameter count mismatch")
        dom = params.domain
        qinv = dom.inv(params.q)
        out = dom.zero
        for (qa, ea), c in self.terms.items():
            val = dom.el(c)
            base = params.q if qa >= 0 else qinv
            for _ in range(abs(qa)):
                val = dom.reduce_scalar(val * base)
            for Qv, e in zip(params.Q, ea):
                for _ in range(e):
                    val = dom.reduce_scalar(val * Qv)
            out = out + val
        return dom.reduce_scalar(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (qa, ea), c in sorted(self.terms.items()):
            s = str(c)
            if qa:
                s += f"*q^{qa}"
            for j, e in enumerate(ea):
                if e:
                    s += f"*Q{j + 1}^{e}"
            bits.append(s)
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# field domains


class Rationals:
    """Exact rational field, object arrays of Fraction."""

    is_field = True
    dtype = object
    name = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    def el(self, x):
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise NotAUnit("division by zero")
        return Fraction(1) / x

    def reduce(self, arr):
        return arr

    def reduce_scalar(self, x):
        return x

    def zeros(self, shape):
        a = np.empty(shape, dtype=object)
        a[...] = Fraction(0)
        return a

    def eye(self, k):
        a = self.zeros((k, k))
        for i in range(k):
            a[i, i] = Fraction(1)
        return a

    def array(self, data):
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = Fraction(v)
        return a

    def equal(self, a, b):
        return bool(np.all(a == b))

    def scalar_str(self, x):
        return str(x)

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """F_p with int64 numpy arrays; entries are kept in [0, p)."""

    is_field = True
    dtype = np.int64

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if p > 1 << 20:
            # dot products of length ~10^6 must not overflow int64
            raise ValueError("prime too large for the int64 fast path")
        self.p = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def el(self, x):
        return int(x) % self.p

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise NotAUnit("division by zero")
        return pow(x, -1, self.p)

    def reduce(self, arr):
        return np.mod(arr, self.p)

    def reduce_scalar(self, x):
        return int(x) % self.p

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def eye(self, k):
        return np.eye(k, dtype=np.int64)

    def array(self, data):
        return np.mod(np.array(data, dtype=np.int64), self.p)

    def equal(self, a, b):
        return bool(np.all(np.mod(a - b, self.p) == 0))

    def scalar_str(self, x):
        return str(int(x) % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class GenericRing:
    """The ring Z[q, q^-1][Q_1..Q_r] as an array domain.

    Not a field: only ring operations (and inversion of the units +-q^k) are
    available, which is all the Hecke-algebra construction itself needs.
    """

    is_field = False
    dtype = object

    def __init__(self, nq):
        self.nq = nq
        self.name = f"generic:{nq}"
        self.zero = GenericScalar.const(0, nq)
        self.one = GenericScalar.const(1, nq)

    def el(self, x):
        if isinstance(x, GenericScalar):
            if x.nq != self.nq:
                raise VariantMismatch("mixed parameter counts")
            return x
        return GenericScalar.const(int(x), self.nq)

    def q(self, exp=1):
        return GenericScalar.q(self.nq, exp)

    def Q(self, j):
        return GenericScalar.Q(j, self.nq)

    def inv(self, x):
        return self.el(x).inv()

    def reduce(self, arr):
        return arr

    def reduce_scalar(self, x):
        return x

    def zeros(self, shape):
        a = np.empty(shape, dtype=object)
        a[...] = self.zero
        return a

    def eye(self, k):
        a = self.zeros((k, k))
        for i in range(k):
            a[i, i] = self.one
        return a

    def array(self, data):
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = self.el(v)
        return a

    def equal(self, a, b):
        return bool(np.all(a == b))

    def scalar_str(self, x):
        return repr(x)

    def __eq__(self, other):
        return isinstance(other, GenericRing) and other.nq == self.nq

    def __hash__(self):
        return hash(("GenericRing", self.nq))

    def __repr__(self):
        return f"GenericRing({self.nq})"


@dataclass(frozen=True)
class ParameterAssignment:
    """Values for q and Q_1..Q_r in a target field."""

    domain: object
    q: object
    Q: tuple

    def __post_init__(self):
        if self.q == self.domain.zero:
            raise ZeroQ("q must be nonzero")
        object.__setattr__(self, "Q", tuple(self.Q))

    @property
    def nq(self):
        return len(self.Q)


# ---------------------------------------------------------------------------
# linear algebra over a field
#
# Convention used throughout the package: vectors are rows, modules are right
# modules, and "solve" means finding x with x @ A = b unless noted.


def matmul(dom, A, B):
    return dom.reduce(A @ B)


def rref(dom, A):
    """Reduced row echelon form.

    Returns (R, pivot columns).  Pivot choice is the first row with a nonzero
    entry in the leftmost unfinished column, so the result is deterministic.
    """
    R = dom.reduce(A.copy())
    nrows, ncols = R.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        sel = None
        for i in range(row, nrows):
            if R[i, col] != dom.zero:
                sel = i
                break
        if sel is None:
            continue
        if sel != row:
            R[[row, sel]] = R[[sel, row]]
        R[row] = dom.reduce(R[row] * dom.inv(R[row, col]))
        for i in range(nrows):
            if i != row and R[i, col] != dom.zero:
                R[i] = dom.reduce(R[i] - R[i, col] * R[row])
        pivots.append(col)
        row += 1
    return R, pivots


def rank(dom, A):
    if A.size == 0:
        return 0
    return len(rref(dom, A)[1])


def right_nullspace(dom, A):
    """Rows of the result span {v : A @ v = 0}."""
    ncols = A.shape[1]
    R, pivots = rref(dom, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = dom.zeros((len(free), ncols))
    for bi, fc in enumerate(free):
        basis[bi, fc] = dom.one
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = dom.reduce_scalar(dom.zero - R[ri, fc])
    return basis


def solve_columns(dom, A, B):
    """Solve A @ X = B (B may be a matrix of stacked column vectors).

    Returns one particular solution; raises Inconsistent when none exists.
    """
    single = B.ndim == 1
    if single:
        B = B.reshape(-1, 1)
    aug = np.concatenate([A, B], axis=1)
    R, pivots = rref(dom, aug)
    n = A.shape[1]
    if any(p >= n for p in pivots):
        raise Inconsistent("right-hand side not in the column space")
    X = dom.zeros((n, B.shape[1]))
    for ri, pc in enumerate(pivots):
        X[pc] = R[ri, n:]
    return X[:, 0] if single else X


def solve_and_rank(dom, A, rhs=None):
    """Rank, right kernel basis, and (optionally) a solution of A @ x = rhs."""
    R, pivots = rref(dom, A)
    kernel = right_nullspace(dom, A)
    sol = None
    if rhs is not None:
        sol = solve_columns(dom, A, rhs)
    return len(pivots), kernel, sol


class RowSpaceSolver:
    """Coordinate extraction against a fixed linearly independent row family.

    Given V (d x N, independent rows), answers ``coords(W)`` with
    coords(W) @ V == W for row-stacks W inside the row space, by inverting the
    d pivot columns of V.
    """

    def __init__(self, dom, V):
        self.dom = dom
        self.V = V
        d = V.shape[0]
        _, pivots = rref(dom, V)
        if len(pivots) != d:
            raise SingularBasis("rows are linearly dependent")
        self.cols = pivots
        self.Pinv = solve_columns(dom, V[:, pivots], dom.eye(d))

    def coords(self, W, check=True):
        single = W.ndim == 1
        if single:
            W = W.reshape(1, -1)
        C = matmul(self.dom, W[:, self.cols], self.Pinv)
        if check and not self.dom.equal(matmul(self.dom, C, self.V), W):
            raise Inconsistent("vector outside the row space")
        return C[0] if single else C


def vandermonde_data(dom, Qp):
    """Interpolation data for distinct field values Qp = (Qp_1..Qp_g).

    Returns (Delta, F) with Delta = prod_{i>j}(Qp_i - Qp_j) and F a list of g
    coefficient rows: F[i][j] is the X^j coefficient of the polynomial F_i,
    normalized so that F_i(Qp_j) = Delta * delta_ij.
    """
    g = len(Qp)
    delta = dom.one
    for i in range(g):
        for j in range(i):
            delta = dom.reduce_scalar(delta * (Qp[i] - Qp[j]))
    if delta == dom.zero:
        raise RepeatedParameter("parameters are not pairwise distinct")
    A = dom.zeros((g, g))
    for i in range(g):
        for j in range(g):
            A[i, j] = dom.reduce_scalar(Qp[j] ** i)
    Ainv = solve_columns(dom, A, dom.eye(g))
    H = dom.reduce(Ainv * delta)
    return delta, [H[i] for i in range(g)]


def poly_eval(dom, coeffs, x):
    out = dom.zero
    for c in reversed(list(coeffs)):
        out = dom.reduce_scalar(out * x + c)
    return out
