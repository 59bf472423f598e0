"""Matrices and vectors over an idempotent semifield.

Objects are immutable; entries are raw scalars (int, Fraction, float)
with the semifield's zero carried as a float infinity.  The arithmetic
is the semifield's: `+` is the idempotent addition applied entrywise
and `@` is the semiring product.  Column vectors and row vectors are
distinct types so that expressions read like the algebra they compute,
e.g. ``h.conj() @ T @ g`` is a scalar.

All operands of a binary operation must share one semifield instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    AllZeroVector,
    IndexOutOfRange,
    NotSquare,
    ShapeMismatch,
    UndefinedPower,
)
from .semifield import MAXPLUS, Scalar, Semifield


def _as_tuple_rows(rows: Iterable[Iterable[Scalar]]) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True, eq=False)
class Matrix:
    rows: tuple[tuple[Scalar, ...], ...]
    sf: Semifield = MAXPLUS

    def __post_init__(self):
        object.__setattr__(self, "rows", _as_tuple_rows(self.rows))
        if not self.rows or not self.rows[0]:
            raise ShapeMismatch("a matrix needs at least one row and column")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ShapeMismatch("ragged rows")

    # -- construction --------------------------------------------------

    @staticmethod
    def zeros(n_rows: int, n_cols: int, sf: Semifield = MAXPLUS) -> "Matrix":
        return Matrix(tuple((sf.zero,) * n_cols for _ in range(n_rows)), sf)

    @staticmethod
    def identity(n: int, sf: Semifield = MAXPLUS) -> "Matrix":
        return Matrix(
            tuple(
                tuple(sf.one if i == j else sf.zero for j in range(n))
                for i in range(n)
            ),
            sf,
        )

    @staticmethod
    def diagonal(values: Sequence[Scalar], sf: Semifield = MAXPLUS) -> "Matrix":
        n = len(values)
        return Matrix(
            tuple(
                tuple(values[i] if i == j else sf.zero for j in range(n))
                for i in range(n)
            ),
            sf,
        )

    # -- shape ----------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def _require_square(self) -> int:
        if not self.is_square:
            raise NotSquare(f"{self.n_rows}x{self.n_cols} matrix")
        return self.n_rows

    def row(self, i: int) -> "RowVector":
        return RowVector(self.rows[i], self.sf)

    def column(self, j: int) -> "Vector":
        return Vector(tuple(r[j] for r in self.rows), self.sf)

    def is_column_regular(self) -> bool:
        """Every column holds at least one nonzero entry."""
        sf = self.sf
        return all(
            any(not sf.is_zero(self.rows[i][j]) for i in range(self.n_rows))
            for j in range(self.n_cols)
        )

    def is_row_regular(self) -> bool:
        sf = self.sf
        return all(any(not sf.is_zero(v) for v in r) for r in self.rows)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeMismatch(
                f"add {self.n_rows}x{self.n_cols} with {other.n_rows}x{other.n_cols}"
            )
        sf = self.sf
        return Matrix(
            tuple(
                tuple(sf.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
            sf,
        )

    def __matmul__(self, other: Union["Matrix", "Vector"]) -> Union["Matrix", "Vector"]:
        sf = self.sf
        if isinstance(other, Vector):
            if self.n_cols != other.dim:
                raise ShapeMismatch(
                    f"{self.n_rows}x{self.n_cols} times vector of dim {other.dim}"
                )
            return Vector(
                tuple(
                    sf.sum(sf.mul(a, x) for a, x in zip(r, other.entries))
                    for r in self.rows
                ),
                sf,
            )
        if isinstance(other, Matrix):
            if self.n_cols != other.n_rows:
                raise ShapeMismatch(
                    f"{self.n_rows}x{self.n_cols} times {other.n_rows}x{other.n_cols}"
                )
            cols = tuple(zip(*other.rows)) if other.rows else ()
            return Matrix(
                tuple(
                    tuple(sf.sum(sf.mul(a, b) for a, b in zip(r, c)) for c in cols)
                    for r in self.rows
                ),
                sf,
            )
        return NotImplemented

    def scale(self, c: Scalar) -> "Matrix":
        sf = self.sf
        return Matrix(tuple(tuple(sf.mul(c, v) for v in r) for r in self.rows), sf)

    def __rmul__(self, c: Scalar) -> "Matrix":
        return self.scale(c)

    def conj(self) -> "Matrix":
        """Conjugate transpose: transpose with entrywise inversion."""
        sf = self.sf
        return Matrix(
            tuple(
                tuple(
                    sf.zero if sf.is_zero(self.rows[i][j]) else sf.inv(self.rows[i][j])
                    for i in range(self.n_rows)
                )
                for j in range(self.n_cols)
            ),
            sf,
        )

    # -- square-matrix functions -----------------------------------------

    def trace(self) -> Scalar:
        n = self._require_square()
        return self.sf.sum(self.rows[i][i] for i in range(n))

    def power(self, m: int) -> "Matrix":
        n = self._require_square()
        if not isinstance(m, int) or m < 0:
            raise UndefinedPower(f"matrix power {m!r}")
        result = Matrix.identity(n, self.sf)
        base = self
        while m:
            if m & 1:
                result = result @ base
            m >>= 1
            if m:
                base = base @ base
        return result

    def powers(self, top: int) -> list["Matrix"]:
        """[I, A, A^2, ..., A^top] by iterated products."""
        n = self._require_square()
        out = [Matrix.identity(n, self.sf)]
        for _ in range(top):
            out.append(out[-1] @ self)
        return out

    def trace_sum(self) -> Scalar:
        """tr A (+) tr A^2 (+) ... (+) tr A^n.

        At most one exactly when the weighted digraph of the matrix has
        no cycle of positive total weight.
        """
        n = self._require_square()
        return self.sf.sum(p.trace() for p in self.powers(n)[1:])

    def spectral_radius(self) -> Scalar:
        """Largest eigenvalue: (+) over k of tr(A^k)^(1/k).

        Equals the maximum cycle mean of the weighted digraph; zero when
        the matrix has no cycle at all.
        """
        n = self._require_square()
        sf = self.sf
        acc = sf.zero
        for k, p in enumerate(self.powers(n)[1:], start=1):
            t = p.trace()
            if not sf.is_zero(t):
                acc = sf.add(acc, sf.power(t, Fraction(1, k)))
        return acc

    def star(self) -> "Matrix":
        """Kleene star truncated at the matrix order:
        I (+) A (+) A^2 (+) ... (+) A^(n-1).

        Fast path squares (I (+) A) up to exponent >= n-1, which equals
        the truncated sum whenever no cycle weight exceeds one (the only
        regime the solvers use).  A final stabilization check detects
        the positive-cycle case, where higher powers would leak into the
        squared result, and falls back to the literal truncated sum.
        """
        n = self._require_square()
        eye = Matrix.identity(n, self.sf)
        if n == 1:
            return eye
        m = eye + self
        exp = 1
        while exp < n - 1:
            m = m @ m
            exp *= 2
        if m @ m == m:
            return m
        acc = eye
        for _ in range(n - 1):
            acc = eye + (self @ acc)
        return acc

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            return False
        sf = self.sf
        return all(
            sf.eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def leq(self, other: "Matrix") -> bool:
        """Entrywise canonical order."""
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeMismatch("order on unequal shapes")
        sf = self.sf
        return all(
            sf.leq(a, b)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"


@dataclass(frozen=True, eq=False)
class Vector:
    entries: tuple[Scalar, ...]
    sf: Semifield = MAXPLUS

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ShapeMismatch("a vector needs at least one entry")

    @staticmethod
    def zeros(n: int, sf: Semifield = MAXPLUS) -> "Vector":
        return Vector((sf.zero,) * n, sf)

    @staticmethod
    def ones(n: int, sf: Semifield = MAXPLUS) -> "Vector":
        return Vector((sf.one,) * n, sf)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_regular(self) -> bool:
        """No zero entries."""
        return all(not self.sf.is_zero(v) for v in self.entries)

    def is_zero(self) -> bool:
        return all(self.sf.is_zero(v) for v in self.entries)

    def conj(self) -> "RowVector":
        """Conjugate transpose: the row with entrywise inverses, zero
        entries staying zero.  Undefined on the all-zero vector."""
        if self.is_zero():
            raise AllZeroVector("conjugate of the all-zero vector")
        sf = self.sf
        return RowVector(
            tuple(sf.zero if sf.is_zero(v) else sf.inv(v) for v in self.entries), sf
        )

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        if self.dim != other.dim:
            raise ShapeMismatch(f"add dims {self.dim} and {other.dim}")
        sf = self.sf
        return Vector(
            tuple(sf.add(a, b) for a, b in zip(self.entries, other.entries)), sf
        )

    def scale(self, c: Scalar) -> "Vector":
        sf = self.sf
        return Vector(tuple(sf.mul(c, v) for v in self.entries), sf)

    def __rmul__(self, c: Scalar) -> "Vector":
        return self.scale(c)

    def meet(self, other: "Vector") -> "Vector":
        """Entrywise greatest lower bound."""
        if self.dim != other.dim:
            raise ShapeMismatch(f"meet dims {self.dim} and {other.dim}")
        sf = self.sf
        return Vector(
            tuple(sf.meet(a, b) for a, b in zip(self.entries, other.entries)), sf
        )

    def leq(self, other: "Vector") -> bool:
        if self.dim != other.dim:
            raise ShapeMismatch("order on unequal dims")
        sf = self.sf
        return all(sf.leq(a, b) for a, b in zip(self.entries, other.entries))

    def leq_tol(self, other: "Vector") -> bool:
        sf = self.sf
        return all(sf.leq_tol(a, b) for a, b in zip(self.entries, other.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        sf = self.sf
        return all(sf.eq(a, b) for a, b in zip(self.entries, other.entries))

    def __repr__(self) -> str:
        return f"Vector({list(self.entries)!r})"


@dataclass(frozen=True, eq=False)
class RowVector:
    entries: tuple[Scalar, ...]
    sf: Semifield = MAXPLUS

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ShapeMismatch("a row vector needs at least one entry")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_regular(self) -> bool:
        return all(not self.sf.is_zero(v) for v in self.entries)

    def conj(self) -> Vector:
        if all(self.sf.is_zero(v) for v in self.entries):
            raise AllZeroVector("conjugate of the all-zero row")
        sf = self.sf
        return Vector(
            tuple(sf.zero if sf.is_zero(v) else sf.inv(v) for v in self.entries), sf
        )

    def __add__(self, other: "RowVector") -> "RowVector":
        if not isinstance(other, RowVector):
            return NotImplemented
        if self.dim != other.dim:
            raise ShapeMismatch(f"add dims {self.dim} and {other.dim}")
        sf = self.sf
        return RowVector(
            tuple(sf.add(a, b) for a, b in zip(self.entries, other.entries)), sf
        )

    def scale(self, c: Scalar) -> "RowVector":
        sf = self.sf
        return RowVector(tuple(sf.mul(c, v) for v in self.entries), sf)

    def __rmul__(self, c: Scalar) -> "RowVector":
        return self.scale(c)

    def __matmul__(self, other: Union[Matrix, Vector]) -> Union["RowVector", Scalar]:
        sf = self.sf
        if isinstance(other, Vector):
            if self.dim != other.dim:
                raise ShapeMismatch(f"row dim {self.dim} times vector dim {other.dim}")
            return sf.sum(sf.mul(a, b) for a, b in zip(self.entries, other.entries))
        if isinstance(other, Matrix):
            if self.dim != other.n_rows:
                raise ShapeMismatch(
                    f"row dim {self.dim} times {other.n_rows}x{other.n_cols}"
                )
            cols = tuple(zip(*other.rows))
            return RowVector(
                tuple(sf.sum(sf.mul(a, b) for a, b in zip(self.entries, c)) for c in cols),
                sf,
            )
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowVector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        sf = self.sf
        return all(sf.eq(a, b) for a, b in zip(self.entries, other.entries))

    def __repr__(self) -> str:
        return f"RowVector({list(self.entries)!r})"


def outer(col: Vector, row: RowVector) -> Matrix:
    """Rank-one product col (x) row."""
    sf = col.sf
    return Matrix(
        tuple(tuple(sf.mul(a, b) for b in row.entries) for a in col.entries), sf
    )


# -- interleaved product families ------------------------------------------
#
# For square A, B of order n these are the coefficient families of the
# expansions in a scale parameter c:
#
#   chain k (k = 0..n):    (+) over i1+...+ik <= n-k of
#                          A B^i1 A B^i2 ... A B^ik      (chain of k A's)
#   closure k (k = 0..n-1): (+) over i0+...+ik <= n-k-1 of
#                          B^i0 (A B^i1 ... A B^ik)      (leading B block)
#
# so that Tr(cA (+) B) collects tr of chains and (cA (+) B)* collects
# closures by the power of c.  chain 0 = I, closure 0 = B*.


def _check_pair(a: Matrix, b: Matrix) -> int:
    n = a._require_square()
    if b._require_square() != n:
        raise ShapeMismatch("families need equal square orders")
    return n


def _chain_table(a: Matrix, b: Matrix) -> list[list[Matrix]]:
    """table[k][m] = (+) over i1+...+ik <= m of A B^i1 ... A B^ik,
    for k = 0..n with budgets m = 0..n-k."""
    n = _check_pair(a, b)
    bpow = b.powers(max(n - 1, 0))
    prod = [a @ bp for bp in bpow]
    eye = Matrix.identity(n, a.sf)
    table: list[list[Matrix]] = [[eye for _ in range(n + 1)]]
    for k in range(1, n + 1):
        level = []
        for m in range(n - k + 1):
            acc = Matrix.zeros(n, n, a.sf)
            for j in range(m + 1):
                acc = acc + (table[k - 1][m - j] @ prod[j])
            level.append(acc)
        table.append(level)
    return table


def chain_sums(a: Matrix, b: Matrix) -> list[Matrix]:
    """Full-budget chains: entry k holds the k-chain family member with
    budget n-k.  Entry 0 is I; entry n is A^n; with b the zero matrix
    entry k is A^k."""
    n = _check_pair(a, b)
    table = _chain_table(a, b)
    return [table[k][n - k] for k in range(n + 1)]


def closure_sums(a: Matrix, b: Matrix) -> list[Matrix]:
    """Closure family: entry k (k = 0..n-1) is the budget n-k-1 sum of
    B^i0 (k-chain).  Entry 0 is B*."""
    n = _check_pair(a, b)
    table = _chain_table(a, b)
    bpow = b.powers(max(n - 1, 0))
    out = []
    for k in range(n):
        acc = Matrix.zeros(n, n, a.sf)
        for i0 in range(n - k):
            acc = acc + (bpow[i0] @ table[k][n - k - 1 - i0])
        out.append(acc)
    return out


def chain_sum(a: Matrix, b: Matrix, k: int) -> Matrix:
    n = _check_pair(a, b)
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"chain index {k} outside 0..{n}")
    return chain_sums(a, b)[k]


def closure_sum(a: Matrix, b: Matrix, k: int) -> Matrix:
    n = _check_pair(a, b)
    if not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"closure index {k} outside 0..{n - 1}")
    return closure_sums(a, b)[k]
