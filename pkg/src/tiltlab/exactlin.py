"""Exact dense linear algebra over prime fields and the rationals, plus
Smith normal form over the integers.

Everything upstream (morphism spaces, Ext/Tor, module classification)
reduces to the three kernels in this module: ``kernel_basis``, ``solve``
and ``snf``.  Scalars are exact throughout: prime fields use canonical
integer representatives in ``[0, p)``, the rationals use
:class:`fractions.Fraction`.  Matrices with zero rows or zero columns are
legal everywhere and behave as the unique maps to or from the zero space.
"""

from __future__ import annotations

from fractions import Fraction


class PrimeField:
    """The field with ``p`` elements, scalars stored as ints in ``[0, p)``."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 2 or p >= 2**31:
            raise ValueError(f"characteristic must be a prime < 2^31, got {p}")
        if any(p % d == 0 for d in range(2, min(p, int(p**0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p

    zero = 0
    one = 1

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            return int(x.numerator) * self.inv(int(x.denominator) % self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Rationals:
    """The field of rational numbers, scalars are ``Fraction`` values."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class Matrix:
    """Immutable-by-convention dense matrix over a :class:`PrimeField` or
    :data:`QQ`.  Rows are lists of field scalars."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols: int | None = None):
        self.field = field
        self.rows = [[field.coerce(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols disagrees with row length")
        else:
            if ncols is None:
                raise ValueError("ncols required for a matrix with no rows")
            self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, cols, nrows: int) -> "Matrix":
        m = cls.zeros(field, nrows, len(cols))
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                m.rows[i][j] = field.coerce(x)
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def copy(self) -> "Matrix":
        return Matrix(self.field, [row[:] for row in self.rows], self.ncols)

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, tuple(map(tuple, self.rows))))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._compat(other, same_shape=True)
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compat(other, same_shape=True)
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in row] for row in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in row] for row in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        field = self.field
        if isinstance(field, PrimeField):
            p = field.p
            bt = list(zip(*other.rows)) if other.rows else []
            if not bt:
                return Matrix.zeros(field, self.nrows, other.ncols)
            out = [
                [sum(a * b for a, b in zip(row, col)) % p for col in bt]
                for row in self.rows
            ]
            return Matrix(field, out, other.ncols)
        bt = list(zip(*other.rows)) if other.rows else []
        if not bt:
            return Matrix.zeros(field, self.nrows, other.ncols)
        out = [[sum((a * b for a, b in zip(row, col)), field.zero) for col in bt] for row in self.rows]
        return Matrix(field, out, other.ncols)

    def apply(self, vec: list) -> list:
        """Matrix-vector product ``A @ v`` (column-vector convention)."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        field = self.field
        vec = [field.coerce(x) for x in vec]
        if isinstance(field, PrimeField):
            p = field.p
            return [sum(a * b for a, b in zip(row, vec)) % p for row in self.rows]
        return [sum((a * b for a, b in zip(row, vec)), field.zero) for row in self.rows]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.rows for x in row)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(
            self.field,
            [ra + rb for ra, rb in zip(self.rows, other.rows)],
            self.ncols + other.ncols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, [r[:] for r in self.rows] + [r[:] for r in other.rows], self.ncols)

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form; returns the reduced matrix and pivot
        column indices."""
        field = self.field
        rows = [row[:] for row in self.rows]
        pivots: list[int] = []
        r = 0
        zero = field.zero
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, len(rows)):
                if rows[i][c] != zero:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = field.inv(rows[r][c])
            mul, sub = field.mul, field.sub
            rows[r] = [mul(inv, x) for x in rows[r]]
            prow = rows[r]
            for i in range(len(rows)):
                if i != r and rows[i][c] != zero:
                    f = rows[i][c]
                    rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return Matrix(field, rows, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Matrix":
        """Basis of ``{x : Ax = 0}`` as the columns of the returned matrix.

        ``rank(result) + rank(A) = ncols(A)`` and ``A @ result = 0``.
        """
        field = self.field
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        cols = []
        for fc in free:
            v = [field.zero] * self.ncols
            v[fc] = field.one
            for r, pc in enumerate(pivots):
                v[pc] = field.neg(R.rows[r][fc])
            cols.append(v)
        return Matrix.from_columns(field, cols, self.ncols)

    def solve(self, b: list) -> list | None:
        """One solution of ``Ax = b`` (free variables set to zero), or
        ``None`` when ``b`` is not in the image.  ``None`` signals
        inconsistency, not a fault."""
        sol = self.solve_matrix(Matrix.from_columns(self.field, [b], self.nrows))
        return None if sol is None else sol.column(0)

    def solve_matrix(self, B: "Matrix") -> "Matrix | None":
        """Solve ``AX = B`` column by column; ``None`` if any column fails."""
        self._compat(B)
        if B.nrows != self.nrows:
            raise ValueError("right-hand side has wrong height")
        field = self.field
        aug = self.hstack(B)
        R, pivots = aug.rref()
        # consistency: no pivot may fall in the appended block
        for pc in pivots:
            if pc >= self.ncols:
                return None
        X = Matrix.zeros(field, self.ncols, B.ncols)
        for r, pc in enumerate(pivots):
            for j in range(B.ncols):
                X.rows[pc][j] = R.rows[r][self.ncols + j]
        return X

    def inverse(self) -> "Matrix | None":
        if self.nrows != self.ncols:
            return None
        X = self.solve_matrix(Matrix.identity(self.field, self.nrows))
        if X is None or not (self @ X == Matrix.identity(self.field, self.nrows)):
            return None
        return X

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def column_space_basis(self) -> "Matrix":
        """Columns of ``A`` restricted to a basis of the column space
        (pivot columns, in order)."""
        _, pivots = self.rref()
        return Matrix.from_columns(self.field, [self.column(j) for j in pivots], self.nrows)

    def _compat(self, other: "Matrix", same_shape: bool = False):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if same_shape and self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def extend_to_basis(field, cols: list[list], dim: int) -> list[list]:
    """Complete linearly independent columns to a basis of ``field^dim`` by
    greedily appending standard unit vectors.  Returns only the appended
    vectors, in ascending coordinate order."""
    base = Matrix.from_columns(field, cols, dim)
    added: list[list] = []
    for i in range(dim):
        if base.rank() == dim:
            break
        e = [field.zero] * dim
        e[i] = field.one
        cand = base.hstack(Matrix.from_columns(field, [e], dim))
        if cand.rank() > base.rank():
            base = cand
            added.append(e)
    return added


class IntMatrix:
    """Rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols: int | None = None):
        self.rows = [[int(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
        else:
            if ncols is None:
                raise ValueError("ncols required for a matrix with no rows")
            self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.rows], self.ncols)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.rows == other.rows

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        bt = list(zip(*other.rows)) if other.rows else []
        if not bt:
            return IntMatrix.zeros(self.nrows, other.ncols)
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows],
            other.ncols,
        )

    def diagonal(self) -> list[int]:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols})"


def snf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns unimodular ``U``, diagonal ``D`` and
    unimodular ``V`` with ``U @ A @ V == D``, ``d_1 | d_2 | ...`` and all
    ``d_i >= 0``.

    Pivots are chosen as the smallest nonzero absolute value in the
    remaining block, which keeps coefficient growth tame at desk scale.
    """
    m, n = A.nrows, A.ncols
    D = [row[:] for row in A.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # locate smallest nonzero |entry| in the trailing block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i][j]
                if x != 0 and (pivot is None or abs(x) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear column and row by division with remainder; restart whenever a
        # remainder introduces a smaller entry
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # divisibility: the pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if D[t][t] < 0:
            negate_row(t)
        t += 1

    return IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n)
