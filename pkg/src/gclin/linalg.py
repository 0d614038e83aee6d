"""Exact dense linear algebra over Q and Q(i).

Matrices are small and dense (ambient dimensions stay in the low tens), so
plain row-major lists of exact scalars are used throughout.  No floating
point, no pivot tolerances: a pivot is any entry != 0.

Subspaces are stored by a reduced row-echelon basis, which makes equality
of subspaces a syntactic comparison of bases.
"""

from __future__ import annotations

from .fields import QI, QQ


def _aslist(v):
    return list(v)


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y):
    return [a - b for a, b in zip(x, y)]


def vec_scale(c, x):
    return [c * a for a in x]


def vec_dot(x, y):
    if len(x) != len(y):
        raise ValueError("dot product needs equal lengths")
    s = None
    for a, b in zip(x, y):
        s = a * b if s is None else s + a * b
    return 0 if s is None else s


def vec_is_zero(x):
    return all(not bool(a) for a in x)


class Matrix:
    """Dense matrix over a fixed field tag (QQ or QI)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [[field.coerce(x) for x in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                cols = 0
            self.cols = cols

    @staticmethod
    def zero(field, rows, cols) -> "Matrix":
        return Matrix(field, [[field.zero] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field, n) -> "Matrix":
        m = Matrix.zero(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @staticmethod
    def from_blocks(field, blocks) -> "Matrix":
        """Assemble from a 2D grid of matrices with compatible shapes."""
        data = []
        for brow in blocks:
            if not brow:
                continue
            height = brow[0].rows
            for r in range(height):
                data.append([x for blk in brow for x in blk.data[r]])
        total_cols = sum(b.cols for b in blocks[0]) if blocks and blocks[0] else 0
        return Matrix(field, data, cols=total_cols)

    def block(self, r0, r1, c0, c1) -> "Matrix":
        return Matrix(
            self.field,
            [row[c0:c1] for row in self.data[r0:r1]],
            cols=c1 - c0,
        )

    def copy(self) -> "Matrix":
        return Matrix(self.field, [row[:] for row in self.data], cols=self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)],
            cols=self.rows,
        )

    def conjugate(self) -> "Matrix":
        conj = self.field.conj
        return Matrix(self.field, [[conj(x) for x in row] for row in self.data], cols=self.cols)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return Matrix(
            self.field,
            [vec_add(a, b) for a, b in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(self.field, [[-x for x in row] for row in self.data], cols=self.cols)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix(self.field, [[c * x for x in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        zero = self.field.zero
        ot = other.transpose().data
        out = []
        for row in self.data:
            out.append([vec_dot(row, col) if self.cols else zero for col in ot])
        return Matrix(self.field, out, cols=other.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    def apply(self, v):
        """Matrix times column vector, returned as a plain list."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [vec_dot(row, v) if self.cols else self.field.zero for row in self.data]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.data)

    def is_skew(self) -> bool:
        return self.rows == self.cols and (self.transpose() == -self)

    def rref(self):
        """Reduced row-echelon form; returns (rref matrix, pivot column list)."""
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c]
            m[r] = [x / inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(self.field, m, cols=self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "Subspace":
        """Right kernel {x : self @ x = 0} as a subspace of F^cols."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for c in free:
            v = [self.field.zero] * self.cols
            v[c] = self.field.one
            for r, pc in enumerate(pivots):
                v[pc] = -red.data[r][c]
            basis.append(v)
        return Subspace.from_spanning(self.field, self.cols, basis)

    def solve(self, b):
        """One solution x of self @ x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        aug = Matrix.from_blocks(
            self.field, [[self, Matrix(self.field, [[v] for v in b], cols=1)]]
        )
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [self.field.zero] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red.data[r][self.cols]
        return x

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = Matrix.from_blocks(self.field, [[self, Matrix.identity(self.field, n)]])
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return red.block(0, n, n, 2 * n)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def to_gaussian(self) -> "Matrix":
        """Lift a rational matrix to Q(i) (identity on Q(i) matrices)."""
        if self.field is QI:
            return self
        return Matrix(QI, self.data, cols=self.cols)

    def real_part(self) -> "Matrix":
        if self.field is QQ:
            return self
        return Matrix(QQ, [[x.re for x in row] for row in self.data], cols=self.cols)

    def imag_part(self) -> "Matrix":
        if self.field is QQ:
            return Matrix.zero(QQ, self.rows, self.cols)
        return Matrix(QQ, [[x.im for x in row] for row in self.data], cols=self.cols)

    def is_real(self) -> bool:
        return self.field is QQ or self.imag_part().is_zero()

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.field.name}, {self.rows}x{self.cols}: {body})"


class Subspace:
    """Linear subspace of F^ambient_dim with a canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def from_spanning(field, ambient_dim, vectors) -> "Subspace":
        m = Matrix(field, [_aslist(v) for v in vectors], cols=ambient_dim)
        if m.cols != ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        red, pivots = m.rref()
        rows = red.data[: len(pivots)]
        return Subspace(field, ambient_dim, Matrix(field, rows, cols=ambient_dim), pivots)

    @staticmethod
    def zero(field, ambient_dim) -> "Subspace":
        return Subspace(field, ambient_dim, Matrix(field, [], cols=ambient_dim), [])

    @staticmethod
    def full(field, ambient_dim) -> "Subspace":
        return Subspace(
            field, ambient_dim, Matrix.identity(field, ambient_dim), list(range(ambient_dim))
        )

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_rows(self):
        return [row[:] for row in self.basis.data]

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def reduce(self, v):
        """Remainder of v after subtracting its projection onto the basis."""
        v = [self.field.coerce(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        for row, p in zip(self.basis.data, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.data)

    def coordinates(self, v):
        """Coefficients of v in the RREF basis; v must lie in the subspace."""
        v = [self.field.coerce(x) for x in v]
        coords = [v[p] for p in self.pivots]
        if not vec_is_zero(self.reduce(v)):
            raise ValueError("vector not in subspace")
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_spanning(
            self.field, self.ambient_dim, self.basis.data + other.basis.data
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # (lam, mu) with lam^T A = mu^T B <=> A^T lam - B^T mu = 0
        at = self.basis.transpose()
        bt = other.basis.transpose()
        stacked = Matrix.from_blocks(self.field, [[at, -bt]])
        vectors = []
        for combo in stacked.kernel().basis.data:
            lam = combo[: self.dim]
            v = [self.field.zero] * self.ambient_dim
            for c, row in zip(lam, self.basis.data):
                if c:
                    v = vec_add(v, vec_scale(c, row))
            vectors.append(v)
        return Subspace.from_spanning(self.field, self.ambient_dim, vectors)

    def annihilator(self) -> "Subspace":
        """Functionals vanishing on this subspace (in dual coordinates)."""
        return self.basis.kernel()

    def conjugate(self) -> "Subspace":
        return Subspace.from_spanning(
            self.field, self.ambient_dim, self.basis.conjugate().data
        )

    def is_real(self) -> bool:
        return self == self.conjugate()

    def complement(self) -> "Subspace":
        """Deterministic complement spanned by non-pivot coordinate vectors."""
        free = [c for c in range(self.ambient_dim) if c not in self.pivots]
        vectors = []
        for c in free:
            v = [self.field.zero] * self.ambient_dim
            v[c] = self.field.one
            vectors.append(v)
        return Subspace.from_spanning(self.field, self.ambient_dim, vectors)

    def image(self, m: Matrix) -> "Subspace":
        """Image of this subspace under the linear map given by m."""
        if m.cols != self.ambient_dim:
            raise ValueError("map domain mismatch")
        return Subspace.from_spanning(
            m.field, m.rows, [m.apply(row) for row in self.basis.data]
        )

    def to_gaussian(self) -> "Subspace":
        if self.field is QI:
            return self
        return Subspace(QI, self.ambient_dim, self.basis.to_gaussian(), list(self.pivots))

    def real_form(self) -> "Subspace":
        """Real subspace R with R_C = self; requires conjugation stability."""
        if self.field is QQ:
            return self
        if not self.is_real():
            raise ValueError("subspace is not conjugation stable")
        spanning = []
        for row in self.basis.data:
            spanning.append([x.re for x in row])
            spanning.append([x.im for x in row])
        real = Subspace.from_spanning(QQ, self.ambient_dim, spanning)
        if real.dim != self.dim:
            raise ValueError("real form has wrong dimension")
        return real

    def __repr__(self):
        return f"Subspace({self.field.name}, dim {self.dim} of {self.ambient_dim})"

    def _check_compatible(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field is not other.field:
            raise ValueError("ambient mismatch between subspaces")
