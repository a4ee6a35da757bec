"""Exact linear algebra over the rationals or a prime field.

Matrices are immutable and store their entries row-major.  Every routine
returns canonical data (reduced row echelon forms, echelon bases) so that
results can be compared for equality and serialized deterministically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Field",
    "QQ",
    "GF",
    "FpElement",
    "field_from_spec",
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "kernel_basis",
    "image_basis",
    "quotient_basis",
    "solve",
    "inverse",
]


class FpElement:
    """Element of the prime field Z/p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int) -> None:
        self.v = v % p
        self.p = p

    def _coerce(self, other: object) -> int | None:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.v, self.p)

    def __mul__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return FpElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other: object) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o, self.p) / self

    def __neg__(self) -> FpElement:
        return FpElement(-self.v, self.p)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self) -> int:
        return hash((self.v, self.p))

    def __bool__(self) -> bool:
        return self.v != 0

    def __repr__(self) -> str:
        return f"{self.v} (mod {self.p})"

    def __str__(self) -> str:
        return str(self.v)


class Field:
    """A coefficient field: the rationals or Z/p."""

    def __init__(self, characteristic: int = 0) -> None:
        self.characteristic = characteristic
        self.zero = self(0)
        self.one = self(1)

    def __call__(self, value: object):
        if self.characteristic == 0:
            if isinstance(value, FpElement):
                raise ValueError("cannot coerce a prime-field element to Q")
            if isinstance(value, str):
                return Fraction(value)
            return Fraction(value)
        if isinstance(value, FpElement):
            return FpElement(value.v, self.characteristic)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return FpElement(
                value.numerator * pow(value.denominator, -1, self.characteristic),
                self.characteristic,
            )
        return FpElement(int(value), self.characteristic)

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def to_json(self) -> object:
        return "Q" if self.characteristic == 0 else {"Fp": self.characteristic}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    def __repr__(self) -> str:
        return f"Field({self.name})"


QQ = Field(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def GF(p: int) -> Field:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field(p)


def field_from_spec(spec: object) -> Field:
    """Parse the scenario-file notation ``"Q"`` or ``{"Fp": p}``."""
    if spec in (None, "Q", "QQ"):
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        return GF(int(spec["Fp"]))
    raise ValueError(f"unrecognised field specification {spec!r}")


def scalar_to_json(value: object) -> str:
    return str(value)


class Matrix:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("rows", "cols", "entries", "field", "_hash")

    def __init__(
        self, rows: int, cols: int, entries: Sequence, field: Field = QQ
    ) -> None:
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self.field = field
        self._hash = None

    # construction

    @classmethod
    def from_rows(cls, data: Iterable[Iterable], field: Field = QQ, cols: int | None = None) -> Matrix:
        rows = [[field(v) for v in row] for row in data]
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty row list")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [v for row in rows for v in row], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, field: Field = QQ) -> Matrix:
        cols = len(columns)
        entries = [field.zero] * (rows * cols)
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError("column length does not match row count")
            for i, v in enumerate(column):
                entries[i * cols + j] = v
        return cls(rows, cols, entries, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> Matrix:
        return cls(rows, cols, [field.zero] * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        entries = [field.zero] * (n * n)
        for i in range(n):
            entries[i * n + i] = field.one
        return cls(n, n, entries, field)

    @classmethod
    def block_diag(cls, blocks: Sequence[Matrix], field: Field = QQ) -> Matrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b.entries[i * b.cols + j]
            r0 += b.rows
            c0 += b.cols
        return cls(rows, cols, [v for row in out for v in row], field)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.cols] if self.rows else ()

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        c = self.cols
        e = self.entries
        return Matrix(
            len(row_idx),
            len(col_idx),
            [e[i * c + j] for i in row_idx for j in col_idx],
            self.field,
        )

    # arithmetic

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.field.zero
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        bcols = [b[j::p] if m else () for j in range(p)]
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            nz = [(k, v) for k, v in enumerate(arow) if v]
            for j in range(p):
                s = zero
                bc = bcols[j]
                for k, v in nz:
                    w = bc[k]
                    if w:
                        s = s + v * w
                out.append(s)
        return Matrix(n, p, out, self.field)

    def apply(self, vector: Sequence) -> tuple:
        """Multiply by a column vector given as a sequence."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        zero = self.field.zero
        nz = [(k, v) for k, v in enumerate(vector) if v]
        out = []
        c = self.cols
        e = self.entries
        for i in range(self.rows):
            s = zero
            base = i * c
            for k, v in nz:
                w = e[base + k]
                if w:
                    s = s + w * v
            out.append(s)
        return tuple(out)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix(self.rows, self.cols, [x + y for x, y in zip(self.entries, other.entries)], self.field)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return Matrix(self.rows, self.cols, [x - y for x, y in zip(self.entries, other.entries)], self.field)

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-x for x in self.entries], self.field)

    def scale(self, c) -> Matrix:
        return Matrix(self.rows, self.cols, [c * x for x in self.entries], self.field)

    @property
    def T(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
            self.field,
        )

    def hstack(self, *others: Matrix) -> Matrix:
        mats = (self, *others)
        if any(m.rows != self.rows for m in mats):
            raise ValueError("row mismatch in hstack")
        entries = []
        for i in range(self.rows):
            for m in mats:
                entries.extend(m.row(i))
        return Matrix(self.rows, sum(m.cols for m in mats), entries, self.field)

    def vstack(self, *others: Matrix) -> Matrix:
        mats = (self, *others)
        if any(m.cols != self.cols for m in mats):
            raise ValueError("column mismatch in vstack")
        entries = []
        for m in mats:
            entries.extend(m.entries)
        return Matrix(sum(m.rows for m in mats), self.cols, entries, self.field)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self.field)

    def trace(self):
        s = self.field.zero
        for i in range(min(self.rows, self.cols)):
            s = s + self[i, i]
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(str(v) for v in self.entries)))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.to_json()!r})"

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in self.row(i)] for i in range(self.rows)]


def _rref_lists(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Gauss-Jordan elimination in place; returns nonzero rows and pivots."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        if prow[c] != 1:
            inv = 1 / prow[c]
            prow = [v * inv for v in prow]
            rows[r] = prow
        nz = [(k, prow[k]) for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k, v in nz:
                        row[k] = row[k] - f * v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[int, Matrix, list[int]]:
    """Reduced row echelon form.

    Returns ``(rank, reduced, pivots)`` where ``reduced`` holds only the
    nonzero rows, so it has shape ``rank x cols``.
    """
    rows = m.to_rows()
    reduced, pivots = _rref_lists(rows, m.cols)
    return (
        len(pivots),
        Matrix(len(reduced), m.cols, [v for row in reduced for v in row], m.field),
        pivots,
    )


def rank(m: Matrix) -> int:
    return rref(m)[0]


class Subspace:
    """A subspace of ``field^ambient_dim`` stored by its canonical echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "field")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: list[int], field: Field = QQ) -> None:
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        self.field = field

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, field: Field = QQ) -> Subspace:
        rows = [[field(v) if not isinstance(v, (Fraction, FpElement)) else v for v in vec] for vec in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        reduced, pivots = _rref_lists(rows, ambient_dim)
        return cls(
            ambient_dim,
            Matrix(len(reduced), ambient_dim, [v for row in reduced for v in row], field),
            pivots,
            field,
        )

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> Subspace:
        return cls(ambient_dim, Matrix(0, ambient_dim, [], field), [], field)

    @classmethod
    def full(cls, ambient_dim: int, field: Field = QQ) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim, field), list(range(ambient_dim)), field)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def coordinates(self, vector: Sequence) -> tuple | None:
        """Coordinates of ``vector`` in the echelon basis, or None if outside."""
        coords = tuple(vector[p] for p in self.pivots)
        zero = self.field.zero
        recon = [zero] * self.ambient_dim
        for c, i in zip(coords, range(self.dim)):
            if c:
                for k, v in enumerate(self.basis.row(i)):
                    if v:
                        recon[k] = recon[k] + c * v
        if all(a == b for a, b in zip(recon, vector)):
            return coords
        return None

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim, self.field)

    def intersection(self, other: Subspace) -> Subspace:
        # solve a*B1 = b*B2 via the kernel of the stacked matrix
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        stacked = self.basis.vstack(-other.basis)
        ker = kernel_basis(stacked.T)
        vecs = []
        for coeffs in ker.vectors():
            a = coeffs[: self.dim]
            vecs.append(self.basis.T.apply(a))
        return Subspace.span(vecs, self.ambient_dim, self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of ``m`` (vectors v with m v = 0) in echelon form."""
    _, reduced, pivots = rref(m)
    n = m.cols
    field = m.field
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    vecs = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        vecs.append(v)
    return Subspace.span(vecs, n, field)


def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.columns(), m.rows, m.field)


def quotient_basis(ambient_dim: int, sub: Subspace) -> tuple[Matrix, Matrix]:
    """Canonical complement coordinates for ``field^ambient_dim / sub``.

    Returns ``(projection, section)`` with projection of shape ``q x n``,
    section of shape ``n x q`` and ``projection @ section = identity``.  The
    section sends the i-th quotient coordinate to the i-th non-pivot unit
    vector, and the projection kills ``sub``.
    """
    field = sub.field
    pivot_set = set(sub.pivots)
    free = [j for j in range(ambient_dim) if j not in pivot_set]
    q = len(free)
    proj = [[field.zero] * ambient_dim for _ in range(q)]
    for r, j in enumerate(free):
        proj[r][j] = field.one
        for i, p in enumerate(sub.pivots):
            b = sub.basis[i, j]
            if b:
                proj[r][p] = proj[r][p] - b
    sect = [[field.zero] * q for _ in range(ambient_dim)]
    for r, j in enumerate(free):
        sect[j][r] = field.one
    return (
        Matrix(q, ambient_dim, [v for row in proj for v in row], field),
        Matrix(ambient_dim, q, [v for row in sect for v in row], field),
    )


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve ``a x = b``; the particular solution with free variables zero.

    ``b`` may have several columns.  Returns None when inconsistent.
    """
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve")
    aug = a.hstack(b)
    _, reduced, pivots = rref(aug)
    n = a.cols
    field = a.field
    if any(p >= n for p in pivots):
        return None
    x = [[field.zero] * b.cols for _ in range(n)]
    for i, p in enumerate(pivots):
        for j in range(b.cols):
            x[p][j] = reduced[i, n + j]
    return Matrix(n, b.cols, [v for row in x for v in row], field)


def solve_vector(a: Matrix, b: Sequence) -> tuple | None:
    sol = solve(a, Matrix(len(b), 1, list(b), a.field))
    return None if sol is None else sol.col(0)


def inverse(m: Matrix) -> Matrix | None:
    if m.rows != m.cols:
        return None
    sol = solve(m, Matrix.identity(m.rows, m.field))
    if sol is None or rank(m) != m.rows:
        return None
    return sol
